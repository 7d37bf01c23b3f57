//! Closed forms for `D(Γ(Z_n), x)` and `D_t(Γ(Z_n), x)` by family of `n`.
//!
//! Each family is evaluated exactly as stated, including formulas that do not
//! agree with exhaustive counting; [`crate::verify`] is where disagreements
//! are detected. The `p^2q`, `pqr` and `p^alpha` results are stated
//! coefficient by coefficient as sums of binomial products over constrained
//! index ranges; those sums are evaluated here as coefficients of products of
//! truncated binomial rows, which is the same sum.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::domcount::DominationKind;
use crate::error::{Error, Result};
use crate::numtheory::{totient, Family, FamilyTag};
use crate::polyring::{binomial, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormResult {
    pub polynomial: Polynomial,
    pub family: FamilyTag,
    pub kind: DominationKind,
    pub hypothesis_met: bool,
}

fn phi(n: u64) -> u64 {
    totient(n).expect("n >= 1")
}

fn binom_poly(m: u64) -> Polynomial {
    Polynomial::binomial_expand(m as usize)
}

/// `(1+x)^m - 1`
fn nonempty(m: u64) -> Polynomial {
    &binom_poly(m) - &Polynomial::one()
}

/// `(D(K_m), D_t(K_m)) = ((1+x)^m - 1, (1+x)^m - m x - 1)`.
pub fn complete_graph_polys(m: u64) -> (Polynomial, Polynomial) {
    let d = nonempty(m);
    let dt = &d - &Polynomial::monomial(m, 1);
    (d, dt)
}

/// `(D(K_{1,m}), D_t(K_{1,m})) = (x(1+x)^m + x^m, x((1+x)^m - 1))` for a star
/// with `m` leaves.
pub fn star_polys(m: u64) -> (Polynomial, Polynomial) {
    let d = &binom_poly(m).shift(1) + &Polynomial::x_pow(m as usize);
    let dt = nonempty(m).shift(1);
    (d, dt)
}

/// Domination polynomial of the join of graphs of orders `n1` and `n2` with
/// domination polynomials `d1` and `d2`.
pub fn join_domination(d1: &Polynomial, d2: &Polynomial, n1: u64, n2: u64) -> Polynomial {
    &(&(&nonempty(n1) * &nonempty(n2)) + d1) + d2
}

/// Coefficient of `x^t` is `sum over a_1 + ... + a_r = t, a_j >= min_j` of
/// `prod C(size_j, a_j)`.
fn constrained_series(parts: &[(u64, u64)]) -> Polynomial {
    parts
        .iter()
        .map(|&(size, min)| binom_poly(size).drop_below(min as usize))
        .product()
}

/// Coefficient at a possibly negative index.
fn coeff_at(p: &Polynomial, i: i64) -> BigInt {
    if i < 0 {
        BigInt::zero()
    } else {
        p.coeff(i as usize)
    }
}

/// Assemble `sum_{i = from}^{order} d(i) x^i`.
fn from_coefficients(from: usize, order: usize, d: impl Fn(i64) -> BigInt) -> Polynomial {
    let mut coeffs = vec![BigInt::zero(); order + 1];
    for (i, c) in coeffs.iter_mut().enumerate().skip(from) {
        *c = d(i as i64);
    }
    Polynomial::new(coeffs)
}

fn check_modulus(n: u64, family: &Family) -> Result<()> {
    let expected = match *family {
        Family::TwoP { p } => 2 * p,
        Family::PSquare { p } => p * p,
        Family::PQ { p, q } => p * q,
        Family::PSquareQ { p, q } => p * p * q,
        Family::PQR { p, q, r } => p * q * r,
        Family::PAlpha { p, alpha } => p.pow(alpha),
        Family::Other => return Err(Error::UnsupportedFamily(n)),
    };
    if expected != n {
        return Err(Error::Domain(format!(
            "family {family} does not describe n = {n}"
        )));
    }
    Ok(())
}

pub fn closed_d(n: u64, tag: FamilyTag) -> Result<ClosedFormResult> {
    closed_form(n, tag, DominationKind::Ordinary)
}

pub fn closed_dt(n: u64, tag: FamilyTag) -> Result<ClosedFormResult> {
    closed_form(n, tag, DominationKind::Total)
}

pub fn closed_form(n: u64, tag: FamilyTag, kind: DominationKind) -> Result<ClosedFormResult> {
    check_modulus(n, &tag.family)?;
    let order = (n - 1 - phi(n)) as usize;
    let total = kind == DominationKind::Total;
    let polynomial = match tag.family {
        Family::PSquare { p } | Family::PAlpha { p, alpha: 2 } => {
            let (d, dt) = complete_graph_polys(p - 1);
            if total {
                dt
            } else {
                d
            }
        }
        Family::TwoP { p } => {
            if total {
                nonempty(p - 1).shift(1)
            } else {
                &Polynomial::x_pow(p as usize - 1) + &binom_poly(p - 1).shift(1)
            }
        }
        Family::PQ { p, q } => {
            let product = &nonempty(phi(p)) * &nonempty(phi(q));
            if total {
                product
            } else {
                &(&product + &Polynomial::x_pow(phi(p) as usize))
                    + &Polynomial::x_pow(phi(q) as usize)
            }
        }
        Family::PSquareQ { p, q } => p_square_q(p, q, order, total),
        Family::PQR { p, q, r } => pqr(p, q, r, order, total),
        Family::PAlpha { p, alpha } => {
            if total {
                p_alpha_total(p, order)
            } else {
                p_alpha(p, alpha, order)
            }
        }
        Family::Other => unreachable!("rejected by check_modulus"),
    };
    Ok(ClosedFormResult {
        polynomial,
        family: tag,
        kind,
        hypothesis_met: tag.hypothesis_met,
    })
}

/// Four classes: `V_pq` (clique of size φ(p)), `V_{p^2}` (φ(q)), `V_p`
/// (φ(pq)) and `V_q` (φ(p^2)).
fn p_square_q(p: u64, q: u64, order: usize, total: bool) -> Polynomial {
    let (fp, fq, fp2, fpq) = (phi(p), phi(q), phi(p * p), phi(p * q));
    let both = constrained_series(&[(fp, 1), (fq, 1), (fp2 + fpq, 0)]);
    if total {
        return from_coefficients(2, order, |i| coeff_at(&both, i));
    }
    let clique_only = constrained_series(&[(fp, 1), (fpq, 0)]);
    let square_only = constrained_series(&[(fq, 1), (fp2, 0)]);
    let corner = (fp2 + fpq) as i64;
    from_coefficients(2, order, |i| {
        let a = coeff_at(&both, i)
            + coeff_at(&clique_only, i - fp2 as i64)
            + coeff_at(&square_only, i - fpq as i64);
        if i == corner {
            a + 1
        } else {
            a
        }
    })
}

/// Six independent classes: `V_qr, V_pr, V_pq` of sizes φ(p), φ(q), φ(r)
/// pairwise joined, and `V_p, V_q, V_r` of sizes φ(qr), φ(pr), φ(pq), each
/// joined to the one two-prime class it multiplies to zero with.
fn pqr(p: u64, q: u64, r: u64, order: usize, total: bool) -> Polynomial {
    let (fp, fq, fr) = (phi(p), phi(q), phi(r));
    let (fpq, fpr, fqr) = (phi(p * q), phi(p * r), phi(q * r));
    let all_three = constrained_series(&[(fp, 1), (fq, 1), (fr, 1), (fpr + fpq + fqr, 0)]);
    if total {
        return from_coefficients(3, order, |i| coeff_at(&all_three, i));
    }
    // one two-prime class empty: its partner single-prime class is full
    let singles = [
        (fpq, constrained_series(&[(fp, 1), (fq, 1), (fpr + fqr, 0)])),
        (fpr, constrained_series(&[(fp, 1), (fr, 1), (fpq + fqr, 0)])),
        (fqr, constrained_series(&[(fq, 1), (fr, 1), (fpq + fpr, 0)])),
    ];
    // two empty
    let doubles = [
        (fpq + fpr, constrained_series(&[(fp, 1), (fqr, 0)])),
        (fpq + fqr, constrained_series(&[(fq, 1), (fpr, 0)])),
        (fpr + fqr, constrained_series(&[(fr, 1), (fpq, 0)])),
    ];
    let corner = (fpq + fpr + fqr) as i64;
    from_coefficients(3, order, |i| {
        let a = coeff_at(&all_three, i);
        let b: BigInt = singles
            .iter()
            .map(|(full, s)| coeff_at(s, i - *full as i64))
            .sum();
        let c: BigInt = doubles
            .iter()
            .map(|(full, s)| coeff_at(s, i - *full as i64))
            .sum();
        let d = a + b + c;
        if i == corner {
            d + 1
        } else {
            d
        }
    })
}

/// Classes `V_{p^j}`, `1 <= j < alpha`, of size φ(p^(alpha-j)). The sum over
/// `r` picks the largest occupied class `V_{p^(alpha-r)}` among the top ones;
/// the classes above it are empty and the small classes `V_{p^k}`, `k < r`,
/// which only they could dominate, are full.
fn p_alpha(p: u64, alpha: u32, order: usize) -> Polynomial {
    let f = |e: u32| phi(p.pow(e));
    let half = alpha / 2;
    let r_max = if alpha % 2 == 1 { half } else { half - 1 };
    let branches: Vec<(i64, Polynomial)> = (1..=r_max)
        .map(|r| {
            let below: u64 = (1..r).map(|k| f(k) + f(alpha - k)).sum();
            let free = order as u64 - f(r) - below;
            let shift: u64 = (1..r).map(|k| f(alpha - k)).sum();
            (shift as i64, constrained_series(&[(f(r), 1), (free, 0)]))
        })
        .collect();
    let a = |i: i64| -> BigInt {
        branches
            .iter()
            .map(|(shift, s)| coeff_at(s, i - shift))
            .sum()
    };
    if alpha % 2 == 1 {
        let corner: u64 = (1..=half).map(|k| f(alpha - k)).sum();
        from_coefficients(
            1,
            order,
            |i| {
                if i == corner as i64 {
                    a(i) + 1
                } else {
                    a(i)
                }
            },
        )
    } else {
        let threshold: u64 = (1..half).map(|k| f(alpha - k)).sum();
        let middle = f(half);
        from_coefficients(1, order, |i| {
            if i <= threshold as i64 {
                a(i)
            } else {
                // a >= 1 with i = a + threshold
                a(i) + binomial(middle, i - threshold as i64)
            }
        })
    }
}

/// `sum_{a+b=i, a,b>=1} C(φ(p), a) C(|V| - φ(p), b)`.
fn p_alpha_total(p: u64, order: usize) -> Polynomial {
    let fp = phi(p);
    let series = constrained_series(&[(fp, 1), (order as u64 - fp, 1)]);
    from_coefficients(0, order, |i| coeff_at(&series, i))
}
