//! Circle enumeration and Tutte connectivity.

use std::collections::BTreeSet;

use super::{Ends, Multigraph};
use crate::matroid::Connectivity;
use crate::{Error, Result};

/// All circles (edge sets of cycles) of `g`: one per loop, plus every closed
/// link cycle, including 2-circles from parallel links. Half and loose edges
/// lie on no cycle. Each circle lists edge labels in the graph's edge order;
/// the family is sorted by size and then by that index sequence, matching
/// the circuit order of the cycle matroid.
pub fn circles(g: &Multigraph, bound: usize) -> Result<Vec<Vec<String>>> {
    if g.edges().len() > bound {
        return Err(Error::BoundExceeded {
            what: "edge count",
            size: g.edges().len(),
            limit: bound,
        });
    }
    let n = g.vertices().len();
    let vid = |v: &str| -> usize {
        g.vertices().iter().position(|x| x == v).expect("known vertex")
    };
    // adjacency[v] = (edge index, other endpoint) over links only
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (i, e) in g.edges().iter().enumerate() {
        match &e.ends {
            Ends::Loop(_) => {
                found.insert(vec![i]);
            }
            Ends::Link(u, v) => {
                let (u, v) = (vid(u), vid(v));
                adjacency[u].push((i, v));
                adjacency[v].push((i, u));
            }
            _ => {}
        }
    }

    // Cycles through their minimum vertex `start`, walking only vertices
    // >= start; each cycle is found in both directions and deduplicated by
    // its sorted edge set.
    struct Walk<'g> {
        adjacency: &'g [Vec<(usize, usize)>],
        start: usize,
        on_path: Vec<bool>,
        used_edges: Vec<bool>,
        path: Vec<usize>,
        found: BTreeSet<Vec<usize>>,
    }

    impl Walk<'_> {
        fn step(&mut self, at: usize) {
            for k in 0..self.adjacency[at].len() {
                let (edge, next) = self.adjacency[at][k];
                if self.used_edges[edge] || next < self.start {
                    continue;
                }
                if next == self.start {
                    // Closing edge; links have distinct ends, so the path
                    // already holds at least one edge here.
                    let mut circle = self.path.clone();
                    circle.push(edge);
                    circle.sort_unstable();
                    self.found.insert(circle);
                    continue;
                }
                if self.on_path[next] {
                    continue;
                }
                self.on_path[next] = true;
                self.used_edges[edge] = true;
                self.path.push(edge);
                self.step(next);
                self.path.pop();
                self.used_edges[edge] = false;
                self.on_path[next] = false;
            }
        }
    }

    for start in 0..n {
        let mut walk = Walk {
            adjacency: &adjacency,
            start,
            on_path: vec![false; n],
            used_edges: vec![false; g.edges().len()],
            path: Vec::new(),
            found: BTreeSet::new(),
        };
        walk.step(start);
        found.extend(walk.found);
    }

    let mut out: Vec<Vec<usize>> = found.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out
        .into_iter()
        .map(|c| {
            c.into_iter()
                .map(|i| g.edges()[i].label.clone())
                .collect()
        })
        .collect())
}

/// Tutte connectivity of a connected graph: the least `k` for which the
/// edge set splits into parts `A`, `B` with `min(|A|, |B|) >= k` and
/// exactly `k` vertices shared between the edge-induced subgraphs; infinite
/// when no such split exists. Exhaustive over bipartitions.
pub fn tutte_connectivity(g: &Multigraph, bound: usize) -> Result<Connectivity> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = g.edges().len();
    if m > bound {
        return Err(Error::BoundExceeded {
            what: "edge count",
            size: m,
            limit: bound,
        });
    }
    if g.vertices().len() > 64 {
        return Err(Error::BoundExceeded {
            what: "vertex count",
            size: g.vertices().len(),
            limit: 64,
        });
    }
    if m < 2 {
        return Ok(Connectivity::Infinite);
    }
    let vid = |v: &str| -> usize {
        g.vertices().iter().position(|x| x == v).expect("known vertex")
    };
    let masks: Vec<u64> = g
        .edges()
        .iter()
        .map(|e| {
            e.endpoints()
                .iter()
                .fold(0u64, |acc, v| acc | 1 << vid(v))
        })
        .collect();
    let mut best: Option<usize> = None;
    // Pin edge 0 to side A so each unordered split is seen once.
    for half in 0..(1u64 << (m - 1)) {
        let a = half << 1 | 1;
        let sz_a = a.count_ones() as usize;
        let sz_b = m - sz_a;
        if sz_b == 0 {
            continue;
        }
        let (mut va, mut vb) = (0u64, 0u64);
        for (i, &w) in masks.iter().enumerate() {
            if a >> i & 1 == 1 {
                va |= w;
            } else {
                vb |= w;
            }
        }
        let k = (va & vb).count_ones() as usize;
        if k >= 1 && sz_a.min(sz_b) >= k && best.map_or(true, |b| k < b) {
            best = Some(k);
        }
    }
    Ok(match best {
        Some(k) => Connectivity::Finite(k),
        None => Connectivity::Infinite,
    })
}
