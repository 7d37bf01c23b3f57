//! Side-by-side comparison of brute force, the class engine and the closed
//! forms for one modulus.

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::closedform::closed_form;
use crate::domcount::{
    brute_force_poly, gamma_from_poly, ClassEngine, DominationKind, DEFAULT_BRUTE_LIMIT,
};
use crate::error::{Error, Result};
use crate::numtheory::{classify_family, factorize, Family, FamilyTag};
use crate::polyring::{decimal, Polynomial};
use crate::zdgraph::ClassGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Classes,
    Closed,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Brute, Method::Classes, Method::Closed];

    pub fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Classes => "classes",
            Method::Closed => "closed",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Outcome {
    Computed { coeffs: Polynomial },
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodEntry {
    pub method: Method,
    pub outcome: Outcome,
    pub millis: f64,
}

impl MethodEntry {
    pub fn polynomial(&self) -> Option<&Polynomial> {
        match &self.outcome {
            Outcome::Computed { coeffs } => Some(coeffs),
            Outcome::Skipped { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub degree: usize,
    pub method: Method,
    #[serde(with = "decimal")]
    pub coefficient: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status")]
pub enum Agreement {
    /// All three methods ran and agree.
    AllAgree,
    /// At every degree where the computed polynomials differ, one entry per
    /// computed method.
    Mismatch { mismatches: Vec<Disagreement> },
    /// Fewer than three methods ran; those that did agree.
    Partial { methods: Vec<Method> },
}

impl Agreement {
    pub fn is_mismatch(&self) -> bool {
        matches!(self, Agreement::Mismatch { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: u64,
    pub family: FamilyTag,
    pub kind: DominationKind,
    pub methods: Vec<MethodEntry>,
    pub agreement: Agreement,
    pub gamma: Option<usize>,
    pub gamma_total: Option<usize>,
}

impl VerificationReport {
    pub fn entry(&self, method: Method) -> &MethodEntry {
        self.methods
            .iter()
            .find(|e| e.method == method)
            .expect("every method has an entry")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub brute_limit: usize,
    pub engine: ClassEngine,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            brute_limit: DEFAULT_BRUTE_LIMIT,
            engine: ClassEngine::default(),
        }
    }
}

fn timed(
    method: Method,
    run: impl FnOnce() -> std::result::Result<Polynomial, String>,
) -> MethodEntry {
    let start = Instant::now();
    let outcome = match run() {
        Ok(coeffs) => Outcome::Computed { coeffs },
        Err(reason) => Outcome::Skipped { reason },
    };
    MethodEntry {
        method,
        outcome,
        millis: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn skip_reason(e: Error) -> String {
    match e {
        Error::Capacity { what, size, limit } => {
            let unit = if what == "class count" {
                "classes"
            } else {
                "vertices"
            };
            format!("{size} {unit} > limit {limit}")
        }
        other => other.to_string(),
    }
}

/// Coefficientwise comparison of the computed polynomials.
pub fn compare(entries: &[MethodEntry]) -> Agreement {
    let computed: Vec<(Method, &Polynomial)> = entries
        .iter()
        .filter_map(|e| e.polynomial().map(|p| (e.method, p)))
        .collect();
    let top = computed
        .iter()
        .map(|(_, p)| p.coeffs().len())
        .max()
        .unwrap_or(0);
    let mut mismatches = Vec::new();
    for degree in 0..top {
        let values: Vec<BigInt> = computed.iter().map(|(_, p)| p.coeff(degree)).collect();
        if values.windows(2).any(|w| w[0] != w[1]) {
            mismatches.extend(
                computed
                    .iter()
                    .zip(values)
                    .map(|((method, _), coefficient)| Disagreement {
                        degree,
                        method: *method,
                        coefficient,
                    }),
            );
        }
    }
    if !mismatches.is_empty() {
        Agreement::Mismatch { mismatches }
    } else if computed.len() == Method::ALL.len() {
        Agreement::AllAgree
    } else {
        Agreement::Partial {
            methods: computed.iter().map(|(m, _)| *m).collect(),
        }
    }
}

/// Runs the class engine always, brute force when the graph is small enough,
/// and the closed form when the family has one.
pub fn run_verification(
    n: u64,
    kind: DominationKind,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let family = classify_family(&factorize(n)?);
    let cg = ClassGraph::build(n)?;

    let brute = timed(Method::Brute, || {
        let order = cg.vertex_count() as usize;
        let limit = opts.brute_limit.min(63);
        if order > limit {
            return Err(format!("{order} vertices > limit {limit}"));
        }
        let vg = cg.expand(limit).map_err(skip_reason)?;
        brute_force_poly(&vg, kind, limit).map_err(skip_reason)
    });
    let classes = timed(Method::Classes, || {
        opts.engine.poly(&cg, kind).map_err(skip_reason)
    });
    let closed = timed(Method::Closed, || {
        if family.family == Family::Other {
            return Err("no closed form for this family".into());
        }
        closed_form(n, family, kind)
            .map(|r| r.polynomial)
            .map_err(|e| e.to_string())
    });

    let gamma_of = |k: DominationKind| -> Option<usize> {
        let own = if k == kind {
            classes.polynomial().cloned()
        } else {
            None
        };
        own.or_else(|| opts.engine.poly(&cg, k).ok())
            .as_ref()
            .and_then(gamma_from_poly)
    };
    let gamma = gamma_of(DominationKind::Ordinary);
    let gamma_total = gamma_of(DominationKind::Total);

    let methods = vec![brute, classes, closed];
    let agreement = compare(&methods);
    Ok(VerificationReport {
        n,
        family,
        kind,
        methods,
        agreement,
        gamma,
        gamma_total,
    })
}

fn fmt_gamma(g: Option<usize>) -> String {
    g.map_or_else(|| "undef".to_string(), |g| g.to_string())
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "n = {}  family = {}  kind = {}",
            self.n, self.family, self.kind
        )?;
        for entry in &self.methods {
            let body = match &entry.outcome {
                Outcome::Computed { coeffs } => coeffs.to_string(),
                Outcome::Skipped { reason } => format!("skipped: {reason}"),
            };
            writeln!(
                f,
                "  {:<8} {:>10.3} ms  {}",
                entry.method.name(),
                entry.millis,
                body
            )?;
        }
        match &self.agreement {
            Agreement::AllAgree => writeln!(f, "agreement: all agree")?,
            Agreement::Partial { methods } => {
                let names: Vec<&str> = methods.iter().map(|m| m.name()).collect();
                writeln!(f, "agreement: partial ({} agree)", names.join(", "))?;
            }
            Agreement::Mismatch { mismatches } => {
                writeln!(f, "agreement: MISMATCH")?;
                let mut degrees: Vec<usize> = mismatches.iter().map(|d| d.degree).collect();
                degrees.dedup();
                for degree in degrees {
                    let cells: Vec<String> = mismatches
                        .iter()
                        .filter(|d| d.degree == degree)
                        .map(|d| format!("{}={}", d.method, d.coefficient))
                        .collect();
                    writeln!(f, "  degree {degree}: {}", cells.join(" "))?;
                }
            }
        }
        write!(
            f,
            "gamma = {}  gamma_t = {}",
            fmt_gamma(self.gamma),
            fmt_gamma(self.gamma_total)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use DominationKind::{Ordinary, Total};

    fn verify(n: u64, kind: DominationKind) -> VerificationReport {
        run_verification(n, kind, &VerifyOptions::default()).unwrap()
    }

    #[test]
    fn all_agree_for_pq() {
        let report = verify(15, Ordinary);
        assert_eq!(report.agreement, Agreement::AllAgree);
        for m in Method::ALL {
            assert_eq!(
                report.entry(m).polynomial().unwrap(),
                &Polynomial::from_i64s(&[0, 0, 9, 16, 15, 6, 1])
            );
        }
        assert_eq!((report.gamma, report.gamma_total), (Some(2), Some(2)));
    }

    #[test]
    fn p_alpha_total_mismatch_at_degree_two() {
        let report = verify(27, Total);
        let Agreement::Mismatch { mismatches } = &report.agreement else {
            panic!("expected a mismatch, got {:?}", report.agreement)
        };
        let at_two: Vec<(Method, BigInt)> = mismatches
            .iter()
            .filter(|d| d.degree == 2)
            .map(|d| (d.method, d.coefficient.clone()))
            .collect();
        assert_eq!(
            at_two,
            vec![
                (Method::Brute, BigInt::from(13)),
                (Method::Classes, BigInt::from(13)),
                (Method::Closed, BigInt::from(12)),
            ]
        );
        assert!(mismatches.iter().all(|d| d.degree == 2));
    }

    #[test]
    fn pqr_partial_without_brute_force() {
        let report = verify(105, Ordinary);
        assert_eq!(
            report.entry(Method::Brute).outcome,
            Outcome::Skipped {
                reason: "56 vertices > limit 26".into()
            }
        );
        assert!(report.entry(Method::Classes).polynomial().is_some());
        assert!(report.entry(Method::Closed).polynomial().is_some());
        assert!(matches!(
            report.agreement,
            Agreement::Partial { .. } | Agreement::Mismatch { .. }
        ));
        let total = verify(105, Total);
        assert_eq!(
            total.agreement,
            Agreement::Partial {
                methods: vec![Method::Classes, Method::Closed]
            }
        );
    }

    #[test]
    fn empty_graph_is_partial() {
        let report = verify(7, Ordinary);
        assert_eq!(
            report.agreement,
            Agreement::Partial {
                methods: vec![Method::Brute, Method::Classes]
            }
        );
        assert_eq!(
            report.entry(Method::Classes).polynomial(),
            Some(&Polynomial::one())
        );
        assert_eq!((report.gamma, report.gamma_total), (None, None));
    }

    #[test]
    fn skipped_methods_do_not_vote() {
        let entry = |method, outcome| MethodEntry {
            method,
            outcome,
            millis: 0.0,
        };
        let a = Polynomial::from_i64s(&[0, 1]);
        let agreement = compare(&[
            entry(Method::Brute, Outcome::Computed { coeffs: a.clone() }),
            entry(Method::Classes, Outcome::Skipped { reason: "x".into() }),
            entry(Method::Closed, Outcome::Computed { coeffs: a }),
        ]);
        assert_eq!(
            agreement,
            Agreement::Partial {
                methods: vec![Method::Brute, Method::Closed]
            }
        );
    }

    #[test]
    fn report_json_round_trip() {
        let report = verify(27, Total);
        let json = serde_json::to_string(&report).unwrap();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
        assert!(json.contains(r#""agreement":{"status":"Mismatch","mismatches":[{"degree":2,"method":"brute","coefficient":"13"}"#));
    }

    #[test]
    fn text_rendering_lists_the_mismatch() {
        let text = verify(27, Total).to_string();
        assert!(
            text.contains("degree 2: brute=13 classes=13 closed=12"),
            "{text}"
        );
        assert!(text.contains("gamma = 1  gamma_t = 2"));
    }

    #[test]
    fn never_fails_on_small_moduli() {
        for n in 2..=300u64 {
            for kind in DominationKind::BOTH {
                let report = verify(n, kind);
                assert!(
                    report.entry(Method::Classes).polynomial().is_some(),
                    "n = {n}"
                );
            }
        }
    }
}
