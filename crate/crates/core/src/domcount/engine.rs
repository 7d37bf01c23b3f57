//! Exact counting on the class quotient.
//!
//! Every vertex of a class has the same neighbors outside the class, so a
//! selection is valid or not depending only on which band each class falls
//! in. Rather than visiting the `4^k` band assignments one at a time, the
//! engine walks the `2^k` sets `O` of occupied classes. For a fixed `O` the
//! admissible bands of each class are independent of each other, and their
//! generating polynomials sum to one of
//!
//! * `1` (class not in `O`),
//! * `x^m` (only `Full` is admissible),
//! * `P_m = (1+x)^m - 1` (any nonzero selection),
//! * `Q_m = (1+x)^m - 1 - m x` (at least two selected).
//!
//! Products are accumulated in the basis `x^s (1+x)^t`, in which `P_m` and
//! `Q_m` have two and three terms, and are converted to ascending powers of
//! `x` once at the end.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::DominationKind;
use crate::error::{Error, Result};
use crate::polyring::Polynomial;
use crate::zdgraph::ClassGraph;

/// Occupancy sets are `u64` masks.
pub const MAX_CLASSES: usize = 64;
/// Default cap on the number of classes; the work is `2^k`.
pub const DEFAULT_CLASS_LIMIT: usize = 22;
/// The `(1+x)`-basis table is `O(|V|)` wide per distinct shift.
pub const DEFAULT_ENGINE_VERTEX_LIMIT: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassEngine {
    pub max_classes: usize,
    pub max_vertices: usize,
}

impl Default for ClassEngine {
    fn default() -> Self {
        Self {
            max_classes: DEFAULT_CLASS_LIMIT,
            max_vertices: DEFAULT_ENGINE_VERTEX_LIMIT,
        }
    }
}

/// `gamma` and the total number of (total) dominating sets, obtained
/// without materializing the polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineSummary {
    pub gamma: Option<usize>,
    pub value_at_one: BigInt,
}

pub fn class_engine_poly(cg: &ClassGraph, kind: DominationKind) -> Result<Polynomial> {
    ClassEngine::default().poly(cg, kind)
}

/// Occupancy sets with the same shift and the same multisets of `P` and
/// `Q` sizes contribute identical terms; they are counted together.
struct Grouped {
    /// distinct class sizes
    sizes: Vec<u64>,
    /// key: shift (8 bytes LE), then per distinct size the `P` count, then
    /// the `Q` count
    groups: HashMap<Vec<u8>, u64>,
}

struct Term<'a> {
    shift: usize,
    p_sizes: Vec<u64>,
    q_sizes: Vec<u64>,
    count: &'a u64,
}

impl Grouped {
    fn terms(&self) -> impl Iterator<Item = Term<'_>> + '_ {
        let d = self.sizes.len();
        self.groups.iter().map(move |(key, count)| {
            let shift = u64::from_le_bytes(key[..8].try_into().expect("8-byte prefix")) as usize;
            let expand = |counts: &[u8]| -> Vec<u64> {
                counts
                    .iter()
                    .zip(&self.sizes)
                    .flat_map(|(&c, &m)| std::iter::repeat_n(m, c as usize))
                    .collect()
            };
            Term {
                shift,
                p_sizes: expand(&key[8..8 + d]),
                q_sizes: expand(&key[8 + d..]),
                count,
            }
        })
    }
}

impl ClassEngine {
    fn check(&self, cg: &ClassGraph) -> Result<()> {
        let limit = self.max_classes.min(MAX_CLASSES);
        if cg.len() > limit {
            return Err(Error::Capacity {
                what: "class count",
                size: cg.len(),
                limit,
            });
        }
        Ok(())
    }

    fn group(&self, cg: &ClassGraph, kind: DominationKind) -> Grouped {
        let k = cg.len();
        let classes = cg.classes();
        let mut sizes: Vec<u64> = classes.iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        sizes.dedup();
        let d = sizes.len();
        let size_index: Vec<usize> = classes
            .iter()
            .map(|c| sizes.binary_search(&c.size).expect("size listed"))
            .collect();
        let neighbors: Vec<u64> = (0..k)
            .map(|i| {
                (0..k)
                    .filter(|&j| cg.adjacent(i, j))
                    .fold(0u64, |m, j| m | (1 << j))
            })
            .collect();
        let clique: Vec<bool> = classes.iter().map(|c| c.is_clique).collect();
        let size: Vec<u64> = classes.iter().map(|c| c.size).collect();

        let visit = |occupied: u64, key: &mut Vec<u8>| -> bool {
            key.clear();
            key.resize(8 + 2 * d, 0);
            let mut shift = 0u64;
            for e in 0..k {
                let inside = occupied >> e & 1 == 1;
                let external = neighbors[e] & occupied != 0;
                match kind {
                    DominationKind::Ordinary => {
                        let dominated = external || (clique[e] && inside);
                        match (inside, dominated) {
                            (false, false) => return false,
                            (false, true) => {}
                            (true, true) => key[8 + size_index[e]] += 1,
                            (true, false) => shift += size[e],
                        }
                    }
                    DominationKind::Total => match (inside, external) {
                        (false, false) => return false,
                        (false, true) => {}
                        (true, true) => key[8 + size_index[e]] += 1,
                        (true, false) if clique[e] && size[e] >= 2 => {
                            key[8 + d + size_index[e]] += 1
                        }
                        (true, false) => return false,
                    },
                }
            }
            key[..8].copy_from_slice(&shift.to_le_bytes());
            true
        };

        let total: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        let chunk = 1u64 << 12;
        let groups = (0..=total / chunk)
            .into_par_iter()
            .fold(HashMap::new, |mut acc: HashMap<Vec<u8>, u64>, block| {
                let mut key = Vec::with_capacity(8 + 2 * d);
                let start = block * chunk;
                let end = start.saturating_add(chunk - 1).min(total);
                for occupied in start..=end {
                    if visit(occupied, &mut key) {
                        match acc.get_mut(key.as_slice()) {
                            Some(c) => *c += 1,
                            None => {
                                acc.insert(key.clone(), 1);
                            }
                        }
                    }
                }
                acc
            })
            .reduce(HashMap::new, |mut a, b| {
                for (key, c) in b {
                    *a.entry(key).or_insert(0) += c;
                }
                a
            });
        Grouped { sizes, groups }
    }

    /// Domination (`Ordinary`) or total domination polynomial of the graph
    /// the class quotient describes.
    pub fn poly(&self, cg: &ClassGraph, kind: DominationKind) -> Result<Polynomial> {
        self.check(cg)?;
        let order = cg.vertex_count() as usize;
        if order > self.max_vertices {
            return Err(Error::Capacity {
                what: "vertex count",
                size: order,
                limit: self.max_vertices,
            });
        }
        let grouped = self.group(cg, kind);
        match accumulate::<i128>(&grouped) {
            Some(table) => Ok(to_power_basis(table, order)),
            None => Ok(to_power_basis(
                accumulate::<BigInt>(&grouped).expect("big integers do not overflow"),
                order,
            )),
        }
    }

    /// `gamma` and the polynomial evaluated at 1, for when only those are
    /// needed. Scales to graphs far beyond the polynomial vertex limit.
    pub fn summary(&self, cg: &ClassGraph, kind: DominationKind) -> Result<EngineSummary> {
        self.check(cg)?;
        let grouped = self.group(cg, kind);
        let mut gamma: Option<usize> = None;
        let mut value = BigInt::zero();
        for term in grouped.terms() {
            let min_degree = term.shift + term.p_sizes.len() + 2 * term.q_sizes.len();
            if min_degree >= 1 {
                gamma = Some(gamma.map_or(min_degree, |g| g.min(min_degree)));
            }
            let pow2 = |m: u64| BigInt::one() << m as usize;
            let product = term
                .p_sizes
                .iter()
                .map(|&m| pow2(m) - 1)
                .chain(term.q_sizes.iter().map(|&m| pow2(m) - 1 - m))
                .fold(BigInt::from(*term.count), |acc, f| acc * f);
            value += product;
        }
        Ok(EngineSummary {
            gamma,
            value_at_one: value,
        })
    }
}

trait Coeff: Clone + Zero {
    fn from_i64(v: i64) -> Self;
    fn add_mul(&self, a: &Self, b: &Self) -> Option<Self>;
    fn checked_sub(&self, b: &Self) -> Option<Self>;
    fn into_big(self) -> BigInt;
}

impl Coeff for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn add_mul(&self, a: &Self, b: &Self) -> Option<Self> {
        a.checked_mul(*b)?.checked_add(*self)
    }
    fn checked_sub(&self, b: &Self) -> Option<Self> {
        i128::checked_sub(*self, *b)
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn add_mul(&self, a: &Self, b: &Self) -> Option<Self> {
        Some(self + a * b)
    }
    fn checked_sub(&self, b: &Self) -> Option<Self> {
        Some(self - b)
    }
    fn into_big(self) -> BigInt {
        self
    }
}

/// Coefficients of `x^shift (1+x)^t`, keyed by shift, each row indexed by `t`.
type BasisTable<C> = BTreeMap<usize, Vec<C>>;

fn accumulate<C: Coeff>(grouped: &Grouped) -> Option<BasisTable<C>> {
    let mut table: BasisTable<C> = BTreeMap::new();
    for term in grouped.terms() {
        // local[j][t]: coefficient of x^j (1+x)^t in the product of P and Q factors
        let width: u64 = term.p_sizes.iter().chain(&term.q_sizes).sum();
        let width = width as usize + 1;
        let mut local: Vec<Vec<C>> = vec![vec![C::zero(); width]; term.q_sizes.len() + 1];
        local[0][0] = C::from_i64(1);
        let mut used = 0usize;
        let factors = term
            .p_sizes
            .iter()
            .map(|&m| (m as usize, false))
            .chain(term.q_sizes.iter().map(|&m| (m as usize, true)));
        let mut q_seen = 0usize;
        for (m, is_q) in factors {
            let rows = q_seen + 1;
            let mut next: Vec<Vec<C>> = vec![vec![C::zero(); width]; local.len()];
            for j in 0..rows {
                for t in 0..=used {
                    let c = &local[j][t];
                    if c.is_zero() {
                        continue;
                    }
                    // y^m
                    next[j][t + m] = next[j][t + m].add_mul(c, &C::from_i64(1))?;
                    // -1
                    next[j][t] = next[j][t].checked_sub(c)?;
                    if is_q {
                        // -m x
                        next[j + 1][t] = next[j + 1][t].add_mul(c, &C::from_i64(-(m as i64)))?;
                    }
                }
            }
            local = next;
            used += m;
            if is_q {
                q_seen += 1;
            }
        }
        let count = C::from_i64(i64::try_from(*term.count).ok()?);
        for (j, row) in local.into_iter().enumerate() {
            let dest = table.entry(term.shift + j).or_default();
            if dest.len() < row.len() {
                dest.resize(row.len(), C::zero());
            }
            for (t, c) in row.into_iter().enumerate() {
                if !c.is_zero() {
                    dest[t] = dest[t].add_mul(&c, &count)?;
                }
            }
        }
    }
    Some(table)
}

/// `sum_{s,t} c[s][t] x^s (1+x)^t` in ascending powers of `x`, by Horner's
/// rule in `(1+x)`.
fn to_power_basis<C: Coeff>(table: BasisTable<C>, order: usize) -> Polynomial {
    let top = table.values().map(Vec::len).max().unwrap_or(0);
    let mut result = vec![BigInt::zero(); order + top + 2];
    let rows: Vec<(usize, Vec<BigInt>)> = table
        .into_iter()
        .map(|(s, row)| (s, row.into_iter().map(Coeff::into_big).collect()))
        .collect();
    let mut degree = 0usize;
    for t in (0..top).rev() {
        // result *= (1 + x)
        for i in (1..=degree + 1).rev() {
            let prev = result[i - 1].clone();
            result[i] += prev;
        }
        degree += 1;
        for (s, row) in &rows {
            if let Some(c) = row.get(t) {
                if !c.is_zero() {
                    result[*s] += c;
                    degree = degree.max(*s);
                }
            }
        }
    }
    Polynomial::new(result)
}
