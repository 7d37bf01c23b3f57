//! Per-class selection bands and the class-level validity test.

use super::DominationKind;
use crate::error::{Error, Result};
use crate::polyring::{binomial, Polynomial};
use crate::zdgraph::ClassGraph;

/// How many vertices of a class of size `m` are selected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Band {
    /// none
    Zero,
    /// exactly one, with at least one left out (`m >= 2`)
    One,
    /// between 2 and `m - 1`
    Mid,
    /// all `m`
    Full,
}

impl Band {
    /// Bands with nonempty, pairwise disjoint ranges for a class of size `m`.
    /// For `m = 1` the single selection is `Full`.
    pub fn for_size(m: u64) -> &'static [Band] {
        match m {
            0 => &[],
            1 => &[Band::Zero, Band::Full],
            2 => &[Band::Zero, Band::One, Band::Full],
            _ => &[Band::Zero, Band::One, Band::Mid, Band::Full],
        }
    }

    pub fn range(self, m: u64) -> std::ops::RangeInclusive<u64> {
        match self {
            Band::Zero => 0..=0,
            Band::One => 1..=1,
            Band::Mid => 2..=m.saturating_sub(1),
            Band::Full => m..=m,
        }
    }

    /// The band guarantees at least one selected vertex.
    pub fn occupied(self) -> bool {
        self != Band::Zero
    }

    /// `sum_{a in band} C(m, a) x^a`.
    pub fn generating_poly(self, m: u64) -> Polynomial {
        let range = self.range(m);
        let mut coeffs = vec![Default::default(); *range.end() as usize + 1];
        for a in range {
            coeffs[a as usize] = binomial(m, a as i64);
        }
        Polynomial::new(coeffs)
    }
}

/// One band per class, in class order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PatternAssignment(pub Vec<Band>);

impl PatternAssignment {
    pub fn bands(&self) -> &[Band] {
        &self.0
    }

    pub fn fits(&self, cg: &ClassGraph) -> bool {
        self.0.len() == cg.len()
            && self
                .0
                .iter()
                .zip(cg.classes())
                .all(|(b, c)| Band::for_size(c.size).contains(b))
    }
}

/// Class-level form of `N[S] = V` (ordinary) or `N(S) = V` (total).
pub fn pattern_valid(pa: &PatternAssignment, cg: &ClassGraph, kind: DominationKind) -> bool {
    let bands = pa.bands();
    let k = cg.len();
    let has_occupied_neighbor = |i: usize| (0..k).any(|j| cg.adjacent(i, j) && bands[j].occupied());
    let clique = |i: usize| cg.classes()[i].is_clique;

    // unselected vertices of class i need a selected neighbor
    let unselected_covered = (0..k).all(|i| {
        bands[i] == Band::Full || has_occupied_neighbor(i) || (clique(i) && bands[i].occupied())
    });
    match kind {
        DominationKind::Ordinary => unselected_covered,
        DominationKind::Total => {
            unselected_covered
                && (0..k).all(|i| {
                    let at_least_two = match bands[i] {
                        Band::Mid => true,
                        Band::Full => cg.classes()[i].size >= 2,
                        _ => false,
                    };
                    !bands[i].occupied() || has_occupied_neighbor(i) || (clique(i) && at_least_two)
                })
        }
    }
}

/// Sum over every band assignment accepted by [`pattern_valid`] of the
/// product of its band polynomials. Visits all `<= 4^k` assignments, so it
/// is only usable for small class graphs; [`super::class_engine_poly`]
/// computes the same sum grouped by occupied classes.
pub fn band_enumeration_poly(
    cg: &ClassGraph,
    kind: DominationKind,
    max_classes: usize,
) -> Result<Polynomial> {
    if cg.len() > max_classes {
        return Err(Error::Capacity {
            what: "class count",
            size: cg.len(),
            limit: max_classes,
        });
    }
    let choices: Vec<&[Band]> = cg
        .classes()
        .iter()
        .map(|c| Band::for_size(c.size))
        .collect();
    let mut index = vec![0usize; cg.len()];
    let mut total = Polynomial::zero();
    loop {
        let pa = PatternAssignment(index.iter().zip(&choices).map(|(&i, c)| c[i]).collect());
        if pattern_valid(&pa, cg, kind) {
            total = total
                + pa.bands()
                    .iter()
                    .zip(cg.classes())
                    .map(|(b, c)| b.generating_poly(c.size))
                    .product::<Polynomial>();
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == index.len() {
                return Ok(total);
            }
            index[pos] += 1;
            if index[pos] < choices[pos].len() {
                break;
            }
            index[pos] = 0;
            pos += 1;
        }
    }
}
