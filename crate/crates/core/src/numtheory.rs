//! Integer arithmetic for the ring modulus: factorization, divisors, the
//! Euler totient, and classification of `n` into the structural families
//! that admit closed-form domination polynomials.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
}

/// Prime-power decomposition of `n`, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<PrimePower>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[PrimePower] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|f| f.prime)
    }

    pub fn is_prime(&self) -> bool {
        matches!(self.factors.as_slice(), [f] if f.exponent == 1)
    }

    /// Product of `prime^exponent` over all factors.
    pub fn reconstruct(&self) -> u64 {
        self.factors
            .iter()
            .map(|f| f.prime.pow(f.exponent))
            .product()
    }

    /// All divisors of `n` in increasing order, including 1 and `n`.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for f in &self.factors {
            let len = divs.len();
            let mut pk = 1u64;
            for _ in 0..f.exponent {
                pk *= f.prime;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }

    /// Totient of `n` from the known prime powers.
    pub fn totient(&self) -> u64 {
        self.factors
            .iter()
            .map(|f| (f.prime - 1) * f.prime.pow(f.exponent - 1))
            .product()
    }
}

/// Trial division up to `sqrt(n)`.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n < 2 {
        return Err(Error::Domain(format!("factorize requires n >= 2, got {n}")));
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut push = |prime: u64, rest: &mut u64| {
        let mut exponent = 0;
        while (*rest).is_multiple_of(prime) {
            *rest /= prime;
            exponent += 1;
        }
        if exponent > 0 {
            factors.push(PrimePower { prime, exponent });
        }
    };
    push(2, &mut rest);
    let mut d = 3u64;
    while d.saturating_mul(d) <= rest {
        push(d, &mut rest);
        d += 2;
    }
    if rest > 1 {
        factors.push(PrimePower {
            prime: rest,
            exponent: 1,
        });
    }
    Ok(Factorization { n, factors })
}

/// Divisors `d` of `n` with `1 < d < n`, increasing.
pub fn proper_divisors(n: u64) -> Result<Vec<u64>> {
    let divs = factorize(n)?.divisors();
    Ok(divs[1..divs.len() - 1].to_vec())
}

pub fn totient(n: u64) -> Result<u64> {
    match n {
        0 => Err(Error::Domain("totient requires n >= 1".into())),
        1 => Ok(1),
        _ => Ok(factorize(n)?.totient()),
    }
}

pub fn gcd(a: u64, b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Error::Domain("gcd(0, 0) is undefined".into()));
    }
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    Ok(a)
}

/// Structural family of `n`. Named primes follow the roles used by the
/// closed forms: `p` is the squared prime in `PSquareQ`, and `p > q > r`
/// for `PQ` and `PQR`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "variant")]
pub enum Family {
    TwoP { p: u64 },
    PSquare { p: u64 },
    PQ { p: u64, q: u64 },
    PSquareQ { p: u64, q: u64 },
    PQR { p: u64, q: u64, r: u64 },
    PAlpha { p: u64, alpha: u32 },
    Other,
}

impl Family {
    /// Short name of the family, e.g. `p^2q`.
    pub fn name(&self) -> &'static str {
        match self {
            Family::TwoP { .. } => "2p",
            Family::PSquare { .. } => "p^2",
            Family::PQ { .. } => "pq",
            Family::PSquareQ { .. } => "p^2q",
            Family::PQR { .. } => "pqr",
            Family::PAlpha { .. } => "p^alpha",
            Family::Other => "other",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::TwoP { p } => write!(f, "2p(p={p})"),
            Family::PSquare { p } => write!(f, "p^2(p={p})"),
            Family::PQ { p, q } => write!(f, "pq(p={p},q={q})"),
            Family::PSquareQ { p, q } => write!(f, "p^2q(p={p},q={q})"),
            Family::PQR { p, q, r } => write!(f, "pqr(p={p},q={q},r={r})"),
            Family::PAlpha { p, alpha } => write!(f, "p^alpha(p={p},alpha={alpha})"),
            Family::Other => f.write_str("other"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyTag {
    #[serde(flatten)]
    pub family: Family,
    /// True iff the ordering and oddness hypotheses of the closed form hold
    /// (`p > q > r > 2`, `p > 2` for prime powers with `alpha > 2`).
    pub hypothesis_met: bool,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        if !self.hypothesis_met {
            f.write_str(" [outside hypotheses]")?;
        }
        Ok(())
    }
}

pub fn classify_family(f: &Factorization) -> FamilyTag {
    let tag = |family, hypothesis_met| FamilyTag {
        family,
        hypothesis_met,
    };
    let pp = |i: usize| (f.factors[i].prime, f.factors[i].exponent);
    match f.factors.len() {
        1 => match pp(0) {
            (_, 1) => tag(Family::Other, false),
            (p, 2) => tag(Family::PSquare { p }, true),
            (p, alpha) => tag(Family::PAlpha { p, alpha }, p > 2),
        },
        2 => match (pp(0), pp(1)) {
            ((2, 1), (p, 1)) => tag(Family::TwoP { p }, true),
            ((q, 1), (p, 1)) => tag(Family::PQ { p, q }, true),
            ((p, 2), (q, 1)) | ((q, 1), (p, 2)) => tag(Family::PSquareQ { p, q }, p > q && q > 2),
            _ => tag(Family::Other, false),
        },
        3 => match (pp(0), pp(1), pp(2)) {
            ((r, 1), (q, 1), (p, 1)) => tag(Family::PQR { p, q, r }, r > 2),
            _ => tag(Family::Other, false),
        },
        _ => tag(Family::Other, false),
    }
}
