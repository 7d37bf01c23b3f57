//! The zero-divisor graph of `Z_n`, in compressed form (one node per proper
//! divisor class `V_d = {x : gcd(x, n) = d}`) and as an explicit vertex graph.
//!
//! Two vertices of classes `V_d` and `V_e` are adjacent iff `n | d*e`, so a
//! class is either a clique or an independent set, and each pair of classes
//! is joined either completely or not at all.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{factorize, gcd};

pub const DEFAULT_EXPANSION_LIMIT: usize = 50_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    pub divisor: u64,
    pub size: u64,
    /// `n | divisor^2`. For singleton classes the flag carries no meaning
    /// beyond the divisibility test.
    pub is_clique: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGraph {
    n: u64,
    classes: Vec<DivisorClass>,
    adjacency: Vec<Vec<bool>>,
    synthetic: bool,
}

impl ClassGraph {
    /// Quotient of `Γ(Z_n)` by divisor classes. Empty for `n` prime or `n < 4`.
    pub fn build(n: u64) -> Result<Self> {
        let f = factorize(n)?;
        let totient_of = |m: u64| -> u64 {
            if m == 1 {
                1
            } else {
                factorize(m).map(|g| g.totient()).unwrap_or(1)
            }
        };
        let divisors = f.divisors();
        let proper = &divisors[1..divisors.len() - 1];
        let classes: Vec<DivisorClass> = proper
            .iter()
            .map(|&d| DivisorClass {
                divisor: d,
                size: totient_of(n / d),
                is_clique: (d as u128 * d as u128).is_multiple_of(n as u128),
            })
            .collect();
        let adjacency = proper
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                proper
                    .iter()
                    .enumerate()
                    .map(|(j, &e)| i != j && (d as u128 * e as u128).is_multiple_of(n as u128))
                    .collect()
            })
            .collect();
        Ok(Self {
            n,
            classes,
            adjacency,
            synthetic: false,
        })
    }

    /// A class graph that does not come from a ring, for building blow-ups of
    /// arbitrary small graphs (cliques, stars, joins). Expansion labels its
    /// vertices `1..=|V|` class by class.
    pub fn from_parts(classes: Vec<DivisorClass>, adjacency: Vec<Vec<bool>>) -> Result<Self> {
        let k = classes.len();
        if adjacency.len() != k || adjacency.iter().any(|row| row.len() != k) {
            return Err(Error::Domain("adjacency matrix must be k x k".into()));
        }
        for (i, row) in adjacency.iter().enumerate() {
            if row[i] {
                return Err(Error::Domain(format!("class {i} is adjacent to itself")));
            }
            for (j, &a) in row.iter().enumerate() {
                if a != adjacency[j][i] {
                    return Err(Error::Domain(format!(
                        "adjacency not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        if let Some(c) = classes.iter().find(|c| c.size == 0) {
            return Err(Error::Domain(format!("class {} is empty", c.divisor)));
        }
        Ok(Self {
            n: 0,
            classes,
            adjacency,
            synthetic: true,
        })
    }

    /// The ring modulus; 0 for a synthetic class graph.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn classes(&self) -> &[DivisorClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    /// Adjacent class pairs `(i, j)` with `i < j`, lexicographic.
    pub fn adjacent_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.len();
        (0..k).flat_map(move |i| {
            ((i + 1)..k)
                .filter(move |&j| self.adjacency[i][j])
                .map(move |j| (i, j))
        })
    }

    pub fn vertex_count(&self) -> u64 {
        self.classes.iter().map(|c| c.size).sum()
    }

    /// Edges between adjacent classes plus the edges inside clique classes.
    pub fn edge_count(&self) -> u64 {
        let across: u64 = self
            .adjacent_pairs()
            .map(|(i, j)| self.classes[i].size * self.classes[j].size)
            .sum();
        let inside: u64 = self
            .classes
            .iter()
            .filter(|c| c.is_clique)
            .map(|c| c.size * (c.size - 1) / 2)
            .sum();
        across + inside
    }

    pub fn with_clique_flag(&self, class: usize, is_clique: bool) -> Self {
        let mut g = self.clone();
        g.classes[class].is_clique = is_clique;
        g
    }

    /// Explicit vertex graph, refused when it would exceed `limit` vertices.
    pub fn expand(&self, limit: usize) -> Result<VertexGraph> {
        let total = self.vertex_count() as usize;
        if total > limit {
            return Err(Error::Capacity {
                what: "vertex count",
                size: total,
                limit,
            });
        }
        // (label, class) in ascending label order
        let members: Vec<(u64, usize)> = if self.synthetic {
            let mut next = 0u64;
            self.classes
                .iter()
                .enumerate()
                .flat_map(|(i, c)| {
                    let start = next;
                    next += c.size;
                    (start + 1..=start + c.size).map(move |x| (x, i))
                })
                .collect()
        } else {
            let by_divisor: std::collections::HashMap<u64, usize> = self
                .classes
                .iter()
                .enumerate()
                .map(|(i, c)| (c.divisor, i))
                .collect();
            (1..self.n)
                .filter_map(|x| {
                    let g = gcd(x, self.n).expect("x >= 1");
                    by_divisor.get(&g).map(|&i| (x, i))
                })
                .collect()
        };
        let mut per_class: Vec<Vec<u32>> = vec![Vec::new(); self.len()];
        for (v, &(_, c)) in members.iter().enumerate() {
            per_class[c].push(v as u32);
        }
        let neighbors = members
            .iter()
            .enumerate()
            .map(|(v, &(_, c))| {
                let mut nb: Vec<u32> = (0..self.len())
                    .filter(|&j| self.adjacency[c][j] || (j == c && self.classes[c].is_clique))
                    .flat_map(|j| per_class[j].iter().copied())
                    .filter(|&u| u as usize != v)
                    .collect();
                nb.sort_unstable();
                nb
            })
            .collect();
        Ok(VertexGraph {
            n: self.n,
            labels: members.iter().map(|&(x, _)| x).collect(),
            class_of: members.iter().map(|&(_, c)| c).collect(),
            neighbors,
        })
    }
}

/// Explicit simple graph with integer vertex labels in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexGraph {
    n: u64,
    labels: Vec<u64>,
    class_of: Vec<usize>,
    neighbors: Vec<Vec<u32>>,
}

impl VertexGraph {
    /// Arbitrary graph on vertices labelled `1..=order`; edges are 0-based
    /// index pairs. Each vertex is its own class.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut neighbors = vec![Vec::new(); order];
        for &(a, b) in edges {
            if a >= order || b >= order || a == b {
                return Err(Error::Domain(format!("invalid edge ({a}, {b})")));
            }
            neighbors[a].push(b as u32);
            neighbors[b].push(a as u32);
        }
        for nb in &mut neighbors {
            nb.sort_unstable();
            nb.dedup();
        }
        Ok(Self {
            n: 0,
            labels: (1..=order as u64).collect(),
            class_of: (0..order).collect(),
            neighbors,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    /// Open neighborhood of `v` as sorted vertex indices.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.neighbors[u].binary_search(&(v as u32)).is_ok()
    }

    pub fn edge_count(&self) -> u64 {
        self.neighbors.iter().map(|nb| nb.len() as u64).sum::<u64>() / 2
    }

    /// Index pairs `(u, v)` with `u < v`, lexicographic; since labels are
    /// ascending this is also label order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors.iter().enumerate().flat_map(|(u, nb)| {
            nb.iter()
                .map(|&v| v as usize)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Open and closed neighborhoods as bitmasks over vertex indices; only
    /// defined for graphs of at most 64 vertices.
    pub fn neighborhood_masks(&self) -> Option<(Vec<u64>, Vec<u64>)> {
        if self.order() > 64 {
            return None;
        }
        let open: Vec<u64> = self
            .neighbors
            .iter()
            .map(|nb| nb.iter().fold(0u64, |m, &u| m | (1 << u)))
            .collect();
        let closed = open.iter().enumerate().map(|(v, m)| m | (1 << v)).collect();
        Some((open, closed))
    }

    /// Undirected DOT document, one vertex or edge per line.
    pub fn to_dot(&self) -> String {
        let mut out = format!("graph zdiv_{} {{\n", self.n);
        for label in &self.labels {
            let _ = writeln!(out, "\"{label}\";");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "\"{}\" -- \"{}\";", self.labels[u], self.labels[v]);
        }
        out.push_str("}\n");
        out
    }
}
