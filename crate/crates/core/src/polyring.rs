//! Dense univariate polynomials with arbitrary-precision signed integer
//! coefficients, stored in ascending degree order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Canonical form: no trailing zero coefficient; the zero polynomial has no
/// coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c * x^degree`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        Self::new(coeffs)
    }

    pub fn x_pow(degree: usize) -> Self {
        Self::monomial(1, degree)
    }

    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `(1 + x)^m`.
    pub fn binomial_expand(m: usize) -> Self {
        let mut row = Vec::with_capacity(m + 1);
        let mut c = BigInt::one();
        row.push(c.clone());
        for i in 0..m {
            c = c * (m - i) / (i + 1);
            row.push(c.clone());
        }
        Self { coeffs: row }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Keep only the terms of degree `>= k`.
    pub fn drop_below(&self, k: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        for c in coeffs.iter_mut().take(k) {
            *c = BigInt::zero();
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Horner evaluation.
    pub fn evaluate_at(&self, x: impl Into<BigInt>) -> BigInt {
        let x = x.into();
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    /// Least `i >= 1` with a nonzero coefficient.
    pub fn min_positive_degree(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
    }
}

/// `C(m, k)`, zero when `k` is out of `0..=m`.
pub fn binomial(m: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > m {
        return BigInt::zero();
    }
    let k = (k as u64).min(m - k as u64);
    (0..k).fold(BigInt::one(), |acc, i| acc * (m - i) / (i + 1))
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::one(), |acc, p| acc * p)
    }
}

/// Renders ascending by degree, e.g. `2*x + x^2`; zero renders as `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, sign) {
                (true, "-") => f.write_str("-")?,
                (true, _) => {}
                (false, s) => write!(f, " {s} ")?,
            }
            first = false;
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Serialized as the list of coefficients, ascending, each a decimal string.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

/// `serde(with = ...)` adapter writing a `BigInt` as a decimal string.
pub mod decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigInt, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(&[0, 1]) + &p(&[0, -1]), Polynomial::zero());
        assert_eq!(&p(&[1, 1]) + &p(&[1, 1]), p(&[2, 2]));
        assert_eq!(&p(&[0, 2, 1]) + &p(&[0, 0, 1]), p(&[0, 2, 2]));
        assert_eq!(&p(&[0, 1]) - &p(&[0, 1]), Polynomial::zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[1, 1]) * &Polynomial::zero(), Polynomial::zero());
        assert_eq!(&p(&[0, 2, 1]) * &p(&[0, 2, 1]), p(&[0, 0, 4, 4, 1]));
        assert_eq!(
            &p(&[0, 4, 6, 4, 1]) * &p(&[0, 2, 1]),
            p(&[0, 0, 8, 16, 14, 6, 1])
        );
    }

    #[test]
    fn binomial_expand_examples() {
        assert_eq!(Polynomial::binomial_expand(0), p(&[1]));
        assert_eq!(Polynomial::binomial_expand(2), p(&[1, 2, 1]));
        assert_eq!(Polynomial::binomial_expand(6), p(&[1, 6, 15, 20, 15, 6, 1]));
        for m in 0..=64usize {
            assert_eq!(
                Polynomial::binomial_expand(m).evaluate_at(1),
                BigInt::one() << m
            );
        }
        // Pascal recurrence
        for m in 1..40usize {
            let prev = Polynomial::binomial_expand(m - 1);
            assert_eq!(Polynomial::binomial_expand(m), &prev * &p(&[1, 1]));
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        for m in 0..30u64 {
            let row = Polynomial::binomial_expand(m as usize);
            for k in 0..=m {
                assert_eq!(binomial(m, k as i64), row.coeff(k as usize));
            }
        }
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(p(&[0, 2, 1]).evaluate_at(1), BigInt::from(3));
        assert_eq!(Polynomial::zero().evaluate_at(5), BigInt::zero());
        assert_eq!(p(&[0, 0, 9, 16, 15, 6, 1]).evaluate_at(1), BigInt::from(47));
        assert_eq!(p(&[1, -3, 2]).evaluate_at(2), BigInt::from(3));
    }

    #[test]
    fn min_positive_degree_examples() {
        assert_eq!(p(&[0, 2, 1]).min_positive_degree(), Some(1));
        assert_eq!(Polynomial::zero().min_positive_degree(), None);
        assert_eq!(Polynomial::one().min_positive_degree(), None);
        assert_eq!(p(&[0, 0, 9, 16, 15, 6, 1]).min_positive_degree(), Some(2));
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[0, 2, 1]).to_string(), "2*x + x^2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::one().to_string(), "1");
        assert_eq!(p(&[0, 1, 3, 1]).to_string(), "x + 3*x^2 + x^3");
        assert_eq!(p(&[-1, 0, -1, 2]).to_string(), "-1 - x^2 + 2*x^3");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
    }

    #[test]
    fn canonical_form_after_cancellation() {
        let a = p(&[1, 2, 3]);
        let b = p(&[0, 0, 3]);
        let d = &a - &b;
        assert_eq!(d.coeffs().len(), 2);
        assert_eq!(p(&[0, 0, 0]).coeffs().len(), 0);
        assert_eq!(p(&[0, 1]).shift(2), p(&[0, 0, 0, 1]));
        assert_eq!(Polynomial::zero().shift(3), Polynomial::zero());
    }

    #[test]
    fn json_uses_decimal_strings() {
        let big = Polynomial::binomial_expand(100);
        let json = serde_json::to_string(&big).unwrap();
        assert!(json.contains("\"100891344545564193334812497256\""));
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, big);
        assert_eq!(serde_json::to_string(&Polynomial::zero()).unwrap(), "[]");
        assert_eq!(
            serde_json::to_string(&p(&[0, 2, 1])).unwrap(),
            r#"["0","2","1"]"#
        );
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-50i64..50, 0..7).prop_map(|c| p(&c))
    }

    fn canonical(x: &Polynomial) -> bool {
        x.coeffs().last().is_none_or(|c| !c.is_zero())
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, Polynomial::zero());
            for r in [&a + &b, &a * &b, &a - &c, -&c] {
                prop_assert!(canonical(&r));
            }
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in small_poly(), b in small_poly(), x in -5i64..5) {
            prop_assert_eq!((&a * &b).evaluate_at(x), a.evaluate_at(x) * b.evaluate_at(x));
            prop_assert_eq!((&a + &b).evaluate_at(x), a.evaluate_at(x) + b.evaluate_at(x));
        }
    }
}
