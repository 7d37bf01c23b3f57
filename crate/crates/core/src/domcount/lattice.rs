//! Counting on the divisor lattice of `n`.
//!
//! Class `V_d` is adjacent to `V_e` iff `(n/d) | e`, so `V_d` has an occupied
//! neighbour class (or is an occupied clique) exactly when `n/d` divides a
//! member of the occupied set `O`, i.e. lies in the down-set `L` generated by
//! `O`. For a fixed `L` the admissible `O` are the subsets of `L` containing
//! its maximal elements, and the weight factors class by class. Ordinary
//! counts are therefore a sum over down-sets; total counts need `L` to be the
//! whole lattice and reduce to one product.
//!
//! Only graphs built from a modulus have this structure; synthetic class
//! graphs are rejected.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{DominationKind, EngineSummary};
use crate::error::{Error, Result};
use crate::numtheory::factorize;
use crate::polyring::Polynomial;
use crate::zdgraph::ClassGraph;

/// Default cap on visited nodes of the down-set search.
pub const DEFAULT_DOWNSET_LIMIT: usize = 1 << 22;

/// Per-class generating polynomials.
#[derive(Debug, Clone, Copy)]
enum Factor {
    /// `x^m`
    XPow(u64),
    /// `(1+x)^m`
    Subsets(u64),
    /// `(1+x)^m - 1`
    Nonempty(u64),
    /// `(1+x)^m - 1 - m x`
    AtLeastTwo(u64),
}

/// The weights the lattice sum is evaluated in: full polynomials, or just the
/// lowest degree and the value at 1.
trait Weight: Sized {
    fn one() -> Self;
    fn times(&mut self, f: Factor);
    fn add(&mut self, other: &Self);
    fn scale(&mut self, c: u64);

    fn product(factors: &[Factor]) -> Self {
        let mut w = Self::one();
        for &f in factors {
            w.times(f);
        }
        w
    }
}

impl Weight for Polynomial {
    fn one() -> Self {
        Polynomial::one()
    }
    fn times(&mut self, f: Factor) {
        let binom = |m: u64| Polynomial::binomial_expand(m as usize);
        *self = match f {
            Factor::XPow(m) => self.shift(m as usize),
            Factor::Subsets(m) => &*self * &binom(m),
            Factor::Nonempty(m) => &*self * &(&binom(m) - &Polynomial::one()),
            Factor::AtLeastTwo(m) => {
                let q = &(&binom(m) - &Polynomial::one()) - &Polynomial::monomial(m, 1);
                &*self * &q
            }
        };
    }
    fn add(&mut self, other: &Self) {
        *self = &*self + other;
    }
    fn scale(&mut self, c: u64) {
        *self = Polynomial::scale(self, &BigInt::from(c));
    }
}

/// Lowest degree with a nonzero coefficient, and the value at 1. Every
/// weight has nonnegative coefficients, so both are exact under `+` and `*`.
/// Factors are applied with shifts, since the values have `|V|` bits.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Tally {
    low: Option<usize>,
    value: BigInt,
}

impl Weight for Tally {
    fn one() -> Self {
        Tally {
            low: Some(0),
            value: BigInt::one(),
        }
    }
    fn times(&mut self, f: Factor) {
        let Some(low) = self.low else { return };
        let (extra, value) = match f {
            Factor::XPow(m) => (m as usize, None),
            Factor::Subsets(m) => (0, Some(&self.value << m as usize)),
            Factor::Nonempty(0) | Factor::AtLeastTwo(0 | 1) => {
                self.low = None;
                self.value = BigInt::zero();
                return;
            }
            Factor::Nonempty(m) => (1, Some((&self.value << m as usize) - &self.value)),
            Factor::AtLeastTwo(m) => (2, Some((&self.value << m as usize) - &self.value * (m + 1))),
        };
        self.low = Some(low + extra);
        if let Some(v) = value {
            self.value = v;
        }
    }
    fn add(&mut self, other: &Self) {
        self.low = match (self.low, other.low) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.value += &other.value;
    }
    fn scale(&mut self, c: u64) {
        if c == 0 {
            *self = Tally {
                low: None,
                value: BigInt::zero(),
            };
        } else {
            self.value *= c;
        }
    }
}

/// The divisor poset of the proper divisors `d > 1` of `n`, indexed like the
/// classes of the graph.
struct Lattice {
    sizes: Vec<u64>,
    /// Index of `n/d`.
    complement: Vec<usize>,
    /// Indices of `d/p` for primes `p`, when still a class.
    lower_covers: Vec<Vec<usize>>,
    /// Indices of `d*p`, when still a class.
    upper_covers: Vec<Vec<usize>>,
}

impl Lattice {
    fn new(cg: &ClassGraph) -> Result<Self> {
        let n = cg.n();
        if n == 0 {
            return Err(Error::Domain(
                "lattice counting needs a graph built from a modulus".into(),
            ));
        }
        let primes: Vec<u64> = factorize(n)?.primes().collect();
        let index: HashMap<u64, usize> = cg
            .classes()
            .iter()
            .enumerate()
            .map(|(i, c)| (c.divisor, i))
            .collect();
        let k = cg.len();
        let mut lower_covers = vec![Vec::new(); k];
        let mut upper_covers = vec![Vec::new(); k];
        for (i, class) in cg.classes().iter().enumerate() {
            for &p in &primes {
                if class.divisor % p == 0 {
                    if let Some(&j) = index.get(&(class.divisor / p)) {
                        lower_covers[i].push(j);
                        upper_covers[j].push(i);
                    }
                }
            }
        }
        Ok(Lattice {
            sizes: cg.classes().iter().map(|c| c.size).collect(),
            complement: cg
                .classes()
                .iter()
                .map(|c| index[&(n / c.divisor)])
                .collect(),
            lower_covers,
            upper_covers,
        })
    }

    fn len(&self) -> usize {
        self.sizes.len()
    }

    fn is_maximal(&self, i: usize) -> bool {
        self.upper_covers[i].is_empty()
    }

    fn total<W: Weight>(&self) -> W {
        let total: u64 = self.sizes.iter().sum();
        let tops: Vec<usize> = (0..self.len()).filter(|&i| self.is_maximal(i)).collect();
        let top_sizes: u64 = tops.iter().map(|&i| self.sizes[i]).sum();
        let rest = total - top_sizes;
        if let [top] = tops[..] {
            // one maximal class means n is a prime power; that class is a
            // clique and may rely on itself when nothing below is occupied
            let m = self.sizes[top];
            let mut w = W::product(&[Factor::AtLeastTwo(m)]);
            w.add(&W::product(&[Factor::Nonempty(m), Factor::Nonempty(rest)]));
            return w;
        }
        let mut w = W::product(&[Factor::Subsets(rest)]);
        for &i in &tops {
            w.times(Factor::Nonempty(self.sizes[i]));
        }
        w
    }

    fn ordinary<W: Weight>(&self, limit: usize) -> Result<W> {
        let mut search = DownSets {
            lattice: self,
            member: vec![false; self.len()],
            visited: 0,
            limit,
            leaves: HashMap::new(),
        };
        search.descend(0)?;
        let mut sum: Option<W> = None;
        for (sig, count) in search.leaves {
            let mut w = W::product(&[Factor::XPow(sig.fixed), Factor::Subsets(sig.free)]);
            for m in sig.nonempty {
                w.times(Factor::Nonempty(m));
            }
            w.scale(count);
            match &mut sum {
                Some(s) => s.add(&w),
                None => sum = Some(w),
            }
        }
        Ok(sum.expect("the full lattice is always admissible"))
    }
}

/// A leaf's weight `x^fixed (1+x)^free prod ((1+x)^m - 1)`, with the sizes
/// `m` sorted so equal weights collide.
#[derive(Debug, PartialEq, Eq, Hash)]
struct Signature {
    fixed: u64,
    free: u64,
    nonempty: Vec<u64>,
}

struct DownSets<'a> {
    lattice: &'a Lattice,
    member: Vec<bool>,
    visited: usize,
    limit: usize,
    leaves: HashMap<Signature, u64>,
}

impl DownSets<'_> {
    /// Classes are in ascending divisor order, a linear extension, so a class
    /// may join once its lower covers have.
    fn descend(&mut self, i: usize) -> Result<()> {
        self.visited += 1;
        if self.visited > self.limit {
            return Err(Error::Capacity {
                what: "down-set search",
                size: self.visited,
                limit: self.limit,
            });
        }
        let lat = self.lattice;
        if i == lat.len() {
            *self.leaves.entry(self.signature()).or_insert(0) += 1;
            return Ok(());
        }
        if lat.lower_covers[i].iter().all(|&j| self.member[j]) {
            self.member[i] = true;
            self.descend(i + 1)?;
            self.member[i] = false;
        }
        // an absent class needs n/d present
        let c = lat.complement[i];
        if c > i || self.member[c] {
            self.descend(i + 1)?;
        }
        Ok(())
    }

    fn signature(&self) -> Signature {
        let lat = self.lattice;
        let mut sig = Signature {
            fixed: 0,
            free: 0,
            nonempty: Vec::new(),
        };
        for i in (0..lat.len()).filter(|&i| self.member[i]) {
            let m = lat.sizes[i];
            let dominated = self.member[lat.complement[i]];
            let top = lat.upper_covers[i].iter().all(|&j| !self.member[j]);
            match (dominated, top) {
                (false, _) => sig.fixed += m,
                (true, true) => sig.nonempty.push(m),
                (true, false) => sig.free += m,
            }
        }
        sig.nonempty.sort_unstable();
        sig
    }
}

/// Domination polynomial of a graph built from a modulus, by summing over
/// down-sets of its divisor lattice.
pub fn lattice_poly(cg: &ClassGraph, kind: DominationKind) -> Result<Polynomial> {
    lattice_eval(cg, kind, DEFAULT_DOWNSET_LIMIT)
}

/// `gamma` and the value at 1 from the lattice sum, without building
/// polynomials. Handles moduli with hundreds of divisors.
pub fn lattice_summary(
    cg: &ClassGraph,
    kind: DominationKind,
    limit: usize,
) -> Result<EngineSummary> {
    let t: Tally = lattice_eval(cg, kind, limit)?;
    Ok(EngineSummary {
        gamma: t.low.filter(|&d| d > 0),
        value_at_one: t.value,
    })
}

fn lattice_eval<W: Weight>(cg: &ClassGraph, kind: DominationKind, limit: usize) -> Result<W> {
    let lattice = Lattice::new(cg)?;
    if lattice.len() == 0 {
        return Ok(W::one());
    }
    match kind {
        DominationKind::Ordinary => lattice.ordinary(limit),
        DominationKind::Total => Ok(lattice.total()),
    }
}
