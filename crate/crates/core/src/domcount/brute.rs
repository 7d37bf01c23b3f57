use num_bigint::BigInt;
use rayon::prelude::*;

use super::DominationKind;
use crate::error::{Error, Result};
use crate::polyring::Polynomial;
use crate::zdgraph::VertexGraph;

pub const DEFAULT_BRUTE_LIMIT: usize = 26;

/// Bitmasks cap the enumeration regardless of the configured limit.
const MASK_BITS: usize = 63;

/// Exhaustive count over all `2^|V|` subsets.
///
/// A subset mask `S` is split as `hi << LO | lo`; neighborhood unions of
/// every `lo` and every `hi` part are tabulated once, so each subset costs
/// one OR and one compare. Subsets are visited in increasing mask order
/// within each `hi` block, and per-block counts are summed afterwards.
pub fn brute_force_poly(
    vg: &VertexGraph,
    kind: DominationKind,
    limit: usize,
) -> Result<Polynomial> {
    let order = vg.order();
    let limit = limit.min(MASK_BITS);
    if order > limit {
        return Err(Error::Capacity {
            what: "vertex count",
            size: order,
            limit,
        });
    }
    let (open, closed) = vg.neighborhood_masks().expect("order checked above");
    let reach = match kind {
        DominationKind::Ordinary => closed,
        DominationKind::Total => open,
    };
    let full: u64 = if order == 0 {
        0
    } else {
        u64::MAX >> (64 - order)
    };

    let lo_bits = order / 2;
    let hi_bits = order - lo_bits;
    let unions = |bits: usize, offset: usize| -> Vec<u64> {
        let mut table = vec![0u64; 1 << bits];
        for s in 1..table.len() {
            let low = s.trailing_zeros() as usize;
            table[s] = table[s & (s - 1)] | reach[offset + low];
        }
        table
    };
    let lo_cover = unions(lo_bits, 0);
    let hi_cover = unions(hi_bits, lo_bits);

    let counts = (0..hi_cover.len())
        .into_par_iter()
        .fold(
            || vec![0u64; order + 1],
            |mut acc, hi| {
                let base = hi_cover[hi];
                let hi_pop = hi.count_ones() as usize;
                for (lo, &cover) in lo_cover.iter().enumerate() {
                    if base | cover == full {
                        acc[hi_pop + lo.count_ones() as usize] += 1;
                    }
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; order + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(Polynomial::new(
        counts.into_iter().map(BigInt::from).collect(),
    ))
}
