//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs without the libtest harness so the lines always print.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use zdpoly::cli::{ClassesRecord, EXIT_MISMATCH};
use zdpoly::closedform::{closed_d, closed_dt, complete_graph_polys, join_domination};
use zdpoly::domcount::{brute_force_poly, class_engine_poly, gamma_from_poly, DominationKind};
use zdpoly::numtheory::{classify_family, factorize, Family};
use zdpoly::verify::{run_verification, Agreement, Method, VerificationReport, VerifyOptions};
use zdpoly::zdgraph::{ClassGraph, VertexGraph};
use zdpoly::Polynomial;

use DominationKind::{Ordinary, Total};

type Check = Result<String, String>;

/// Name, time budget, check.
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn zdpoly(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_zdpoly"))
        .args(args)
        .env_remove("ZDPOLY_BRUTE_LIMIT")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn engine(n: u64, kind: DominationKind) -> Polynomial {
    class_engine_poly(&ClassGraph::build(n).unwrap(), kind).unwrap()
}

fn brute(n: u64, kind: DominationKind) -> Polynomial {
    let cg = ClassGraph::build(n).unwrap();
    let vg = cg.expand(64).unwrap();
    brute_force_poly(&vg, kind, 63).unwrap()
}

fn composite(n: u64) -> bool {
    !factorize(n).unwrap().is_prime()
}

fn c1_structure_of_75() -> Check {
    let (code, out) = zdpoly(&["graph", "75", "--format", "classes"]);
    ensure(code == 0, || format!("exit code {code}"))?;
    let record: ClassesRecord = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    ensure((record.vertex_count, record.edge_count) == (34, 86), || {
        format!("|V| = {}, |E| = {}", record.vertex_count, record.edge_count)
    })?;
    Ok("|V| = 34, |E| = 86".into())
}

fn c2_simple_families() -> Check {
    let mut checked = 0;
    for n in 4..=200u64 {
        let tag = classify_family(&factorize(n).unwrap());
        let simple = matches!(
            tag.family,
            Family::PSquare { .. } | Family::TwoP { .. } | Family::PQ { .. }
        ) || matches!(tag.family, Family::PAlpha { alpha: 2, .. });
        if !simple || !tag.hypothesis_met {
            continue;
        }
        let d = closed_d(n, tag).map_err(|e| e.to_string())?.polynomial;
        let dt = closed_dt(n, tag).map_err(|e| e.to_string())?.polynomial;
        ensure(d == engine(n, Ordinary), || format!("D differs at n = {n}"))?;
        ensure(dt == engine(n, Total), || format!("Dt differs at n = {n}"))?;
        checked += 1;
    }
    Ok(format!("{checked} moduli, D and Dt"))
}

fn c3_oracle_sweep() -> Check {
    let mut checked = 0;
    for n in (4..=100u64).filter(|&n| composite(n)) {
        let cg = ClassGraph::build(n).unwrap();
        if cg.vertex_count() > 22 {
            continue;
        }
        for kind in DominationKind::BOTH {
            ensure(engine(n, kind) == brute(n, kind), || {
                format!("n = {n}, {kind}")
            })?;
        }
        checked += 1;
    }
    Ok(format!("{checked} moduli, both kinds"))
}

fn c4_fixtures() -> Check {
    let p = Polynomial::from_i64s;
    let cases = [
        (9, Ordinary, p(&[0, 2, 1])),
        (9, Total, p(&[0, 0, 1])),
        (6, Ordinary, p(&[0, 1, 3, 1])),
        (6, Total, p(&[0, 0, 2, 1])),
        (15, Ordinary, p(&[0, 0, 9, 16, 15, 6, 1])),
    ];
    for (n, kind, expected) in cases {
        for (method, got) in [("classes", engine(n, kind)), ("brute", brute(n, kind))] {
            ensure(got == expected, || {
                format!("{kind}(Z_{n}) by {method} = {got}")
            })?;
        }
    }
    Ok("Z_9, Z_6, Z_15".into())
}

fn describe(report: &VerificationReport) -> String {
    match &report.agreement {
        Agreement::AllAgree => "all agree".into(),
        Agreement::Partial { methods } => {
            let names: Vec<&str> = methods.iter().map(|m| m.name()).collect();
            format!("partial ({})", names.join(", "))
        }
        Agreement::Mismatch { mismatches } => {
            let mut degrees: Vec<usize> = mismatches.iter().map(|d| d.degree).collect();
            degrees.dedup();
            format!("mismatch at degrees {degrees:?}")
        }
    }
}

/// A report counts as adjudicated when the compared methods either agree or
/// the mismatch lists every differing coefficient.
fn adjudicated(report: &VerificationReport, compared: &[Method]) -> Result<(), String> {
    let polys: Vec<&Polynomial> = compared
        .iter()
        .map(|&m| report.entry(m).polynomial().ok_or(format!("{m} skipped")))
        .collect::<Result<_, _>>()?;
    let differs = polys.windows(2).any(|w| w[0] != w[1]);
    match &report.agreement {
        Agreement::Mismatch { mismatches } => {
            let top = polys.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
            for degree in 0..top {
                let values: Vec<BigInt> = polys.iter().map(|p| p.coeff(degree)).collect();
                let listed = mismatches.iter().any(|d| d.degree == degree);
                ensure(listed == values.windows(2).any(|w| w[0] != w[1]), || {
                    format!("degree {degree} misreported for n = {}", report.n)
                })?;
            }
            Ok(())
        }
        _ => ensure(!differs, || {
            format!("unreported disagreement for n = {}", report.n)
        }),
    }
}

fn c5_p_square_q() -> Check {
    let opts = VerifyOptions::default();
    let mut lines = Vec::new();
    for kind in DominationKind::BOTH {
        let r45 = run_verification(45, kind, &opts).map_err(|e| e.to_string())?;
        ensure(r45.entry(Method::Brute).polynomial().is_some(), || {
            "45: brute skipped".into()
        })?;
        adjudicated(&r45, &Method::ALL)?;
        let r75 = run_verification(75, kind, &opts).map_err(|e| e.to_string())?;
        adjudicated(&r75, &[Method::Classes, Method::Closed])?;
        lines.push(format!(
            "{kind}: 45 {}, 75 {}",
            describe(&r45),
            describe(&r75)
        ));
    }
    Ok(lines.join("; "))
}

fn c6_p_alpha_total() -> Check {
    let (code, out) = zdpoly(&["verify", "27", "--total", "--json"]);
    ensure(code == 0, || format!("exit code {code} without --strict"))?;
    let report: VerificationReport = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let Agreement::Mismatch { mismatches } = &report.agreement else {
        return Err(format!("agreement {:?}", report.agreement));
    };
    let at = |m: Method| {
        mismatches
            .iter()
            .find(|d| d.degree == 2 && d.method == m)
            .map(|d| d.coefficient.clone())
    };
    let got = (at(Method::Brute), at(Method::Classes), at(Method::Closed));
    let want = (Some(13.into()), Some(13.into()), Some(12.into()));
    ensure(got == want, || format!("degree 2 entries {got:?}"))?;
    let (strict, _) = zdpoly(&["verify", "27", "--total", "--strict"]);
    ensure(strict == i32::from(EXIT_MISMATCH), || {
        format!("--strict exit code {strict}")
    })?;
    Ok("brute = classes = 13, closed = 12; exit 0 / 2".into())
}

fn c7_properties() -> Check {
    let mut checked = 0;
    for n in (4..=300u64).filter(|&n| composite(n)) {
        let order = ClassGraph::build(n).unwrap().vertex_count() as usize;
        let d = engine(n, Ordinary);
        let dt = engine(n, Total);
        ensure(d.evaluate_at(1) % 2u32 == BigInt::from(1), || {
            format!("D(1) even at n = {n}")
        })?;
        ensure(
            d.degree() == Some(order) && d.coeff(order) == BigInt::from(1),
            || format!("top coefficient at n = {n}"),
        )?;
        // each i-set dominating has |V| - i supersets of size i + 1, each of
        // which is reached from at most i + 1 subsets
        for poly in [&d, &dt] {
            for i in 0..order {
                let lhs = poly.coeff(i + 1) * BigInt::from(i + 1);
                let rhs = poly.coeff(i) * BigInt::from(order - i);
                ensure(lhs >= rhs, || {
                    format!("upward closure fails at n = {n}, degree {i}")
                })?;
            }
        }
        ensure((0..=order).all(|i| dt.coeff(i) <= d.coeff(i)), || {
            format!("Dt > D at n = {n}")
        })?;
        checked += 1;
    }
    Ok(format!("{checked} composite moduli"))
}

fn c8_gammas() -> Check {
    let cases = [
        (15, Some(2), Some(2)),
        (35, Some(2), Some(2)),
        (27, Some(1), Some(2)),
        (81, Some(1), Some(2)),
        (125, Some(1), Some(2)),
        (4, Some(1), None),
    ];
    for (n, g, gt) in cases {
        let got = (
            gamma_from_poly(&engine(n, Ordinary)),
            gamma_from_poly(&engine(n, Total)),
        );
        ensure(got == (g, gt), || format!("n = {n}: {got:?}"))?;
    }
    let (_, out) = zdpoly(&["gamma", "4"]);
    ensure(out == "gamma = 1\ngamma_t = undef\n", || {
        format!("gamma 4 printed {out:?}")
    })?;
    Ok("15, 35, 27, 81, 125, 4".into())
}

/// `K_a` when `clique`, else the edgeless graph on `a` vertices.
fn base(a: usize, clique: bool) -> (Vec<(usize, usize)>, Polynomial) {
    let edges = if clique {
        (0..a)
            .flat_map(|u| (u + 1..a).map(move |v| (u, v)))
            .collect()
    } else {
        Vec::new()
    };
    let d = if clique {
        complete_graph_polys(a as u64).0
    } else {
        Polynomial::x_pow(a)
    };
    (edges, d)
}

fn c9_joins() -> Check {
    let mut checked = 0;
    let shapes: Vec<(usize, bool)> = (1..=4).flat_map(|a| [(a, true), (a, false)]).collect();
    for &(a, ca) in &shapes {
        for &(b, cb) in &shapes {
            let (ea, da) = base(a, ca);
            let (eb, db) = base(b, cb);
            let mut edges = ea;
            edges.extend(eb.iter().map(|&(u, v)| (u + a, v + a)));
            edges.extend((0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))));
            let g = VertexGraph::from_edges(a + b, &edges).map_err(|e| e.to_string())?;
            let expected = brute_force_poly(&g, Ordinary, 63).unwrap();
            let got = join_domination(&da, &db, a as u64, b as u64);
            ensure(got == expected, || {
                format!("join of ({a},{ca}) and ({b},{cb})")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} joins"))
}

/// Records a definite status for the families without a brute-force check.
fn large_family_reports() -> Check {
    let opts = VerifyOptions::default();
    let mut lines = Vec::new();
    for n in [105u64, 165, 231, 243] {
        for kind in DominationKind::BOTH {
            let report = run_verification(n, kind, &opts).map_err(|e| e.to_string())?;
            adjudicated(&report, &[Method::Classes, Method::Closed])?;
            lines.push(format!("{n} {kind}: {}", describe(&report)));
        }
    }
    Ok(lines.join("; "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "1 structure of Z_75",
            Duration::from_secs(1),
            c1_structure_of_75,
        ),
        (
            "2 closed forms, simple families",
            Duration::from_secs(5),
            c2_simple_families,
        ),
        (
            "3 engine equals brute force",
            Duration::from_secs(120),
            c3_oracle_sweep,
        ),
        ("4 fixture polynomials", Duration::from_secs(5), c4_fixtures),
        (
            "5 p^2q adjudication",
            Duration::from_secs(30),
            c5_p_square_q,
        ),
        (
            "6 p^alpha total discrepancy",
            Duration::from_secs(5),
            c6_p_alpha_total,
        ),
        (
            "7 properties over [4, 300]",
            Duration::from_secs(30),
            c7_properties,
        ),
        ("8 gamma spot checks", Duration::from_secs(5), c8_gammas),
        ("9 join identity", Duration::from_secs(5), c9_joins),
        (
            "  pqr / p^alpha verify reports",
            Duration::from_secs(30),
            large_family_reports,
        ),
    ];
    let mut failed = 0;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let outcome = match result {
            Ok(detail) if elapsed <= budget => format!("PASS  {detail}"),
            Ok(detail) => format!("FAIL  over budget {budget:?}: {detail}"),
            Err(why) => format!("FAIL  {why}"),
        };
        if outcome.starts_with("FAIL") {
            failed += 1;
        }
        println!(
            "criterion {name:<34} {:>9.3} s  {outcome}",
            elapsed.as_secs_f64()
        );
    }
    if failed == 0 {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} failed");
        ExitCode::FAILURE
    }
}
