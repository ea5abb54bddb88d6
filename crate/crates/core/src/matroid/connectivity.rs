//! Matroid connectivity via exhaustive partition sweep.

use serde::{Deserialize, Serialize};

use super::{mask_indices, BinaryMatroid};
use crate::{Error, Result};

/// Tutte connectivity of a matroid: the least `k` for which a `k`-separation
/// exists, or `Infinite` when no partition separates at any order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Connectivity {
    Finite(usize),
    Infinite,
}

impl Connectivity {
    /// True when the matroid is `k`-connected (no separation of order < k).
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Connectivity::Finite(c) => c >= k,
            Connectivity::Infinite => true,
        }
    }
}

impl std::fmt::Display for Connectivity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Connectivity::Finite(k) => write!(f, "{k}"),
            Connectivity::Infinite => write!(f, "infinite"),
        }
    }
}

/// One `k`-separation: a partition `(x, y)` of the ground set with
/// `min(|x|, |y|) >= k` and `r(x) + r(y) - r(M) <= k - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    pub order: usize,
    pub x: Vec<String>,
    pub y: Vec<String>,
}

/// Least order over all separating partitions. Each unordered partition is
/// visited once by pinning the first element to the `x` side.
pub fn connectivity(m: &BinaryMatroid, bound: usize) -> Result<Connectivity> {
    let n = m.len();
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "ground set",
            size: n,
            limit: bound,
        });
    }
    if n < 2 {
        return Ok(Connectivity::Infinite);
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let r = m.rank();
    let mut best: Option<usize> = None;
    for half in 0..(1u64 << (n - 1)) {
        let x = half << 1 | 1;
        let y = full & !x;
        if y == 0 {
            continue;
        }
        let small = (x.count_ones() as usize).min(y.count_ones() as usize);
        let lambda = m.rank_mask(x) + m.rank_mask(y) - r;
        // The partition is a k-separation exactly for k in [lambda+1, small].
        if lambda + 1 <= small && best.map_or(true, |b| lambda + 1 < b) {
            best = Some(lambda + 1);
        }
    }
    Ok(match best {
        Some(k) => Connectivity::Finite(k),
        None => Connectivity::Infinite,
    })
}

/// All exact `k`-separations, with `x` the side holding the first element,
/// sorted by (|x|, x as an index sequence).
pub fn k_separations(
    m: &BinaryMatroid,
    k: usize,
    bound: usize,
) -> Result<Vec<Separation>> {
    let n = m.len();
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "ground set",
            size: n,
            limit: bound,
        });
    }
    if k == 0 {
        return Err(Error::InvalidParameter(
            "separation order must be at least 1".into(),
        ));
    }
    if n < 2 {
        return Ok(Vec::new());
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let r = m.rank();
    let mut found: Vec<(u64, u64)> = Vec::new();
    for half in 0..(1u64 << (n - 1)) {
        let x = half << 1 | 1;
        let y = full & !x;
        if y == 0 {
            continue;
        }
        let small = (x.count_ones() as usize).min(y.count_ones() as usize);
        if small < k {
            continue;
        }
        let lambda = m.rank_mask(x) + m.rank_mask(y) - r;
        if lambda <= k - 1 {
            found.push((x, y));
        }
    }
    found.sort_by(|&(ax, _), &(bx, _)| super::mask_cmp(ax, bx));
    Ok(found
        .into_iter()
        .map(|(x, y)| Separation {
            order: k,
            x: mask_indices(x)
                .into_iter()
                .map(|i| m.elements()[i].clone())
                .collect(),
            y: mask_indices(y)
                .into_iter()
                .map(|i| m.elements()[i].clone())
                .collect(),
        })
        .collect())
}
