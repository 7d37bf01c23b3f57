//! Counting dominating and total dominating sets by size.
//!
//! [`brute_force_poly`] enumerates every vertex subset of an explicit graph.
//! [`class_engine_poly`] works on the divisor-class quotient, summing binomial
//! generating polynomials over valid per-class selection patterns; it accepts
//! any class graph. [`lattice_poly`] and [`lattice_summary`] exploit the
//! divisor lattice of `n` and scale to moduli with hundreds of divisors.

mod brute;
mod engine;
mod lattice;
mod patterns;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::polyring::Polynomial;

pub use brute::{brute_force_poly, DEFAULT_BRUTE_LIMIT};
pub use engine::{class_engine_poly, ClassEngine, EngineSummary, DEFAULT_CLASS_LIMIT, MAX_CLASSES};
pub use lattice::{lattice_poly, lattice_summary, DEFAULT_DOWNSET_LIMIT};
pub use patterns::{band_enumeration_poly, pattern_valid, Band, PatternAssignment};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DominationKind {
    /// `N[S] = V`.
    #[serde(rename = "D")]
    Ordinary,
    /// `N(S) = V`: every vertex, selected or not, needs a selected neighbor.
    #[serde(rename = "Dt")]
    Total,
}

impl DominationKind {
    pub const BOTH: [DominationKind; 2] = [DominationKind::Ordinary, DominationKind::Total];

    pub fn symbol(self) -> &'static str {
        match self {
            DominationKind::Ordinary => "D",
            DominationKind::Total => "Dt",
        }
    }
}

impl fmt::Display for DominationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Domination number (or total domination number) read off a polynomial;
/// `None` when no dominating set of positive size exists.
pub fn gamma_from_poly(p: &Polynomial) -> Option<usize> {
    p.min_positive_degree()
}
