//! Matroid isomorphism by circuit-system backtracking.

use std::collections::{BTreeMap, HashSet};

use super::{BinaryMatroid, CircuitMatroid};
use crate::Result;

/// Isomorphism test for binary matroids. Returns one label bijection when the
/// matroids are isomorphic, `None` otherwise; the map found first in the
/// fixed search order is returned, and equal matroids on equal labels get the
/// identity map.
pub fn is_isomorphic(
    a: &BinaryMatroid,
    b: &BinaryMatroid,
    bound: usize,
) -> Result<Option<Vec<(String, String)>>> {
    if a.len() != b.len() || a.rank() != b.rank() {
        return Ok(None);
    }
    let ca = a.circuit_masks(bound)?;
    let cb = b.circuit_masks(bound)?;
    if size_multiset(&ca) != size_multiset(&cb) {
        return Ok(None);
    }
    if size_multiset(&a.cocircuit_masks(bound)?)
        != size_multiset(&b.cocircuit_masks(bound)?)
    {
        return Ok(None);
    }
    Ok(iso_from_circuits(a.len(), &ca, &cb, a.elements(), b.elements())
        .map(|perm| label_pairs(perm, a.elements(), b.elements())))
}

/// Isomorphism test for circuit-presented matroids.
pub fn is_isomorphic_circuits(
    a: &CircuitMatroid,
    b: &CircuitMatroid,
) -> Option<Vec<(String, String)>> {
    if a.len() != b.len() {
        return None;
    }
    iso_from_circuits(
        a.len(),
        a.circuit_masks(),
        b.circuit_masks(),
        a.elements(),
        b.elements(),
    )
    .map(|perm| label_pairs(perm, a.elements(), b.elements()))
}

fn label_pairs(
    perm: Vec<usize>,
    la: &[String],
    lb: &[String],
) -> Vec<(String, String)> {
    perm.into_iter()
        .enumerate()
        .map(|(i, j)| (la[i].clone(), lb[j].clone()))
        .collect()
}

fn size_multiset(masks: &[u64]) -> Vec<u32> {
    let mut v: Vec<u32> = masks.iter().map(|m| m.count_ones()).collect();
    v.sort_unstable();
    v
}

/// Per-element invariant: how many circuits of each size contain it.
fn profile(n: usize, circuits: &[u64]) -> Vec<Vec<(u32, usize)>> {
    (0..n)
        .map(|e| {
            let mut by_size: BTreeMap<u32, usize> = BTreeMap::new();
            for &c in circuits.iter().filter(|&&c| c >> e & 1 == 1) {
                *by_size.entry(c.count_ones()).or_insert(0) += 1;
            }
            by_size.into_iter().collect()
        })
        .collect()
}

/// Backtracking search for an index bijection carrying the first circuit
/// family onto the second. Elements are assigned most-constrained first; a
/// circuit is checked as soon as all of its elements are mapped.
pub(crate) fn iso_from_circuits(
    n: usize,
    ca: &[u64],
    cb: &[u64],
    la: &[String],
    lb: &[String],
) -> Option<Vec<usize>> {
    if ca.len() != cb.len() {
        return None;
    }
    let set_b: HashSet<u64> = cb.iter().copied().collect();
    if la == lb && ca.iter().all(|c| set_b.contains(c)) {
        return Some((0..n).collect());
    }
    let pa = profile(n, ca);
    let pb = profile(n, cb);
    // Candidate targets per element, by matching profiles.
    let cands: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| pb[j] == pa[i]).collect())
        .collect();
    if cands.iter().any(|c| c.is_empty()) {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (cands[i].len(), i));

    struct Search<'s> {
        ca: &'s [u64],
        set_b: &'s HashSet<u64>,
        cands: &'s [Vec<usize>],
        order: &'s [usize],
        map: Vec<usize>,
        assigned: u64,
        used_b: u64,
    }

    impl Search<'_> {
        fn run(&mut self, depth: usize) -> bool {
            if depth == self.order.len() {
                return true;
            }
            let i = self.order[depth];
            for k in 0..self.cands[i].len() {
                let j = self.cands[i][k];
                if self.used_b >> j & 1 == 1 {
                    continue;
                }
                self.map[i] = j;
                self.assigned |= 1 << i;
                self.used_b |= 1 << j;
                if self.consistent(i) && self.run(depth + 1) {
                    return true;
                }
                self.assigned &= !(1 << i);
                self.used_b &= !(1 << j);
            }
            false
        }

        /// Every circuit through `i` that is now fully assigned must land on
        /// a circuit of the target family.
        fn consistent(&self, i: usize) -> bool {
            for &c in self.ca.iter().filter(|&&c| c >> i & 1 == 1) {
                if c & self.assigned == c {
                    let image: u64 = super::mask_indices(c)
                        .into_iter()
                        .map(|e| 1u64 << self.map[e])
                        .sum();
                    if !self.set_b.contains(&image) {
                        return false;
                    }
                }
            }
            true
        }
    }

    let mut s = Search {
        ca,
        set_b: &set_b,
        cands: &cands,
        order: &order,
        map: vec![0; n],
        assigned: 0,
        used_b: 0,
    };
    if s.run(0) {
        Some(s.map)
    } else {
        None
    }
}
