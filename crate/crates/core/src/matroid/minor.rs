//! Minor containment for binary matroids by exhaustive contract/delete
//! search with rank and circuit-multiset pruning.

use serde::{Deserialize, Serialize};

use super::iso::iso_from_circuits;
use super::{
    circuit_masks_of_words, combinations, contract_columns, mask_indices,
    BinaryMatroid,
};
use crate::gf2::word_rank;
use crate::{Error, Result};

/// Certificate that `N` is a minor of `M`: contract `contracted`, then
/// delete `deleted`, and the result is isomorphic to `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub contracted: Vec<String>,
    pub deleted: Vec<String>,
}

/// Replays a witness on `m`.
pub fn apply_minor(m: &BinaryMatroid, w: &MinorWitness) -> Result<BinaryMatroid> {
    m.contract(&w.contracted)?.delete(&w.deleted)
}

/// Decides whether `n` is a minor of `m`. Candidate contraction sets are
/// tried by increasing size, each in lexicographic order of the index
/// sequence, so the returned witness is the first in that fixed order.
///
/// Pruning: contraction/deletion never increases rank or corank, so a
/// partial choice survives only while both stay at or above the target's;
/// a full candidate must then match the target's rank and circuit-size
/// multiset before the isomorphism search runs.
pub fn has_minor(
    m: &BinaryMatroid,
    n: &BinaryMatroid,
    bound: usize,
) -> Result<Option<MinorWitness>> {
    let nm = m.len();
    let nn = n.len();
    if m.len() > bound {
        return Err(Error::BoundExceeded {
            what: "ground set",
            size: nm,
            limit: bound,
        });
    }
    if nn > nm || n.rank() > m.rank() || n.corank() > m.corank() {
        return Ok(None);
    }
    let k = nm - nn;
    let rn = n.rank();
    let ncorank = n.corank();
    let target_circuits = n.circuit_masks(bound)?;
    let mut target_sizes: Vec<u32> =
        target_circuits.iter().map(|c| c.count_ones()).collect();
    target_sizes.sort_unstable();

    let cols = m.column_words();
    for t in 0..=k {
        let s = k - t;
        for tmask in combinations(nm, t) {
            let r1 = m.rank() - m.rank_mask(tmask);
            let corank1 = (nm - t) - r1;
            if r1 < rn || corank1 < ncorank {
                continue;
            }
            let (kept, quotient) = contract_columns(cols, tmask);
            for spick in combinations(kept.len(), s) {
                let cand: Vec<u64> = (0..kept.len())
                    .filter(|i| spick >> i & 1 == 0)
                    .map(|i| quotient[i])
                    .collect();
                if word_rank(cand.iter().copied()) != rn {
                    continue;
                }
                let cand_circuits = circuit_masks_of_words(&cand, rn);
                let mut sizes: Vec<u32> =
                    cand_circuits.iter().map(|c| c.count_ones()).collect();
                sizes.sort_unstable();
                if sizes != target_sizes {
                    continue;
                }
                let cand_labels: Vec<String> = (0..kept.len())
                    .filter(|i| spick >> i & 1 == 0)
                    .map(|i| m.elements()[kept[i]].clone())
                    .collect();
                if iso_from_circuits(
                    nn,
                    &cand_circuits,
                    &target_circuits,
                    &cand_labels,
                    n.elements(),
                )
                .is_some()
                {
                    let deleted = mask_indices(spick)
                        .into_iter()
                        .map(|i| m.elements()[kept[i]].clone())
                        .collect();
                    return Ok(Some(MinorWitness {
                        contracted: m.labels_of(tmask),
                        deleted,
                    }));
                }
            }
        }
    }
    Ok(None)
}
