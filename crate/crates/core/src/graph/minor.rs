//! Graph minor containment via minor-model (branch-set) search.

use std::collections::BTreeMap;

use super::{EdgeKind, Ends, Multigraph};
use crate::{Error, Result};

/// Simple adjacency over vertex indices: loops, half and loose edges are
/// dropped, parallel links collapsed.
struct Simple {
    n: usize,
    adj: Vec<u64>,
}

impl Simple {
    fn of(g: &Multigraph) -> Result<Simple> {
        if g.vertices().len() > 64 {
            return Err(Error::BoundExceeded {
                what: "vertex count",
                size: g.vertices().len(),
                limit: 64,
            });
        }
        let idx: BTreeMap<&str, usize> = g
            .vertices()
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut adj = vec![0u64; g.vertices().len()];
        for e in g.edges() {
            if let Ends::Link(a, b) = &e.ends {
                let (a, b) = (idx[a.as_str()], idx[b.as_str()]);
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
        Ok(Simple {
            n: g.vertices().len(),
            adj,
        })
    }

    fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    fn min_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    fn remove_vertex(&mut self, v: usize) {
        self.adj[v] = 0;
        for a in self.adj.iter_mut() {
            *a &= !(1 << v);
        }
    }

    /// Minor-safe reductions for targets of minimum degree >= 3: drop
    /// vertices of degree <= 1, splice out degree-2 vertices.
    fn reduce(&mut self) {
        loop {
            let mut changed = false;
            for v in 0..self.n {
                let deg = self.adj[v].count_ones();
                if self.adj[v] != 0 && deg <= 1 {
                    self.remove_vertex(v);
                    changed = true;
                } else if deg == 2 {
                    let a = self.adj[v].trailing_zeros() as usize;
                    let b = (63 - self.adj[v].leading_zeros()) as usize;
                    self.remove_vertex(v);
                    self.adj[a] |= 1 << b;
                    self.adj[b] |= 1 << a;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
    }

    fn live_mask(&self) -> u64 {
        (0..self.n)
            .filter(|&v| self.adj[v] != 0)
            .fold(0, |m, v| m | 1 << v)
    }
}

/// Decides whether `h` is a minor of `g` by searching for a minor model:
/// disjoint connected branch sets in `g`, one per vertex of `h`, with an
/// edge of `g` between every pair that is adjacent in `h`. `h` must be
/// simple and connected; `g` may be any multigraph (only its links matter).
pub fn has_graph_minor(
    g: &Multigraph,
    h: &Multigraph,
    bound: usize,
) -> Result<bool> {
    if g.edges().len() > bound {
        return Err(Error::BoundExceeded {
            what: "edge count",
            size: g.edges().len(),
            limit: bound,
        });
    }
    if !h.is_connected() || h.vertices().is_empty() {
        return Err(Error::InvalidParameter(
            "minor target must be connected and nonempty".into(),
        ));
    }
    for e in h.edges() {
        if e.kind() != EdgeKind::Link {
            return Err(Error::InvalidParameter(
                "minor target must be simple (links only)".into(),
            ));
        }
        if let Ends::Link(a, b) = &e.ends {
            if h.links_between(a, b) > 1 {
                return Err(Error::InvalidParameter(
                    "minor target must be simple (no parallel links)".into(),
                ));
            }
        }
    }

    let hs = Simple::of(h)?;
    let mut gs = Simple::of(g)?;
    if hs.min_degree() >= 3 {
        gs.reduce();
    }
    let live = gs.live_mask();
    if (live.count_ones() as usize) < hs.n
        || gs.edge_count() < hs.edge_count()
    {
        // A single-vertex target is still a minor of any graph with a vertex.
        return Ok(hs.n == 1 && !g.vertices().is_empty());
    }

    // Place target vertices in descending degree order.
    let mut order: Vec<usize> = (0..hs.n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(hs.adj[v].count_ones()));

    struct Search<'s> {
        gs: &'s Simple,
        hs: &'s Simple,
        order: &'s [usize],
        branch: Vec<u64>,
        free: u64,
    }

    impl Search<'_> {
        fn place(&mut self, depth: usize) -> bool {
            if depth == self.order.len() {
                return true;
            }
            // Each branch set must be connected; enumerate candidates as
            // connected subsets of free vertices, each identified by its
            // minimum vertex.
            let spare =
                self.free.count_ones() as usize - (self.order.len() - depth);
            let mut roots = self.free;
            while roots != 0 {
                let r = roots.trailing_zeros() as usize;
                roots &= roots - 1;
                let allowed = self.free & !((1u64 << r) - 1);
                if self.grow(depth, 1 << r, allowed & !(1 << r), spare) {
                    return true;
                }
            }
            false
        }

        /// Tries `set` as the branch set at `depth`, then every connected
        /// extension of it within `ext` (largest-first recursion is not
        /// needed; each subset is visited once because extensions only add
        /// vertices allowed at the moment they are considered).
        fn grow(&mut self, depth: usize, set: u64, ext: u64, spare: usize) -> bool {
            if self.accept(depth, set) {
                self.branch.push(set);
                self.free &= !set;
                if self.place(depth + 1) {
                    return true;
                }
                self.free |= set;
                self.branch.pop();
            }
            if spare == 0 {
                return false;
            }
            // Frontier vertices that keep the set connected.
            let mut frontier = 0u64;
            let mut s = set;
            while s != 0 {
                let v = s.trailing_zeros() as usize;
                s &= s - 1;
                frontier |= self.gs.adj[v];
            }
            frontier &= ext;
            let mut remaining = frontier;
            while remaining != 0 {
                let v = remaining.trailing_zeros() as usize;
                remaining &= remaining - 1;
                if self.grow(
                    depth,
                    set | 1 << v,
                    ext & !(1 << v) & !(frontier & ((1u64 << v) - 1)),
                    spare - 1,
                ) {
                    return true;
                }
            }
            false
        }

        /// The candidate set must touch every earlier branch set that the
        /// target requires adjacent.
        fn accept(&self, depth: usize, set: u64) -> bool {
            let hv = self.order[depth];
            let mut reach = 0u64;
            let mut s = set;
            while s != 0 {
                let v = s.trailing_zeros() as usize;
                s &= s - 1;
                reach |= self.gs.adj[v];
            }
            for (d, &b) in self.branch.iter().enumerate() {
                let hu = self.order[d];
                if self.hs.adj[hv] >> hu & 1 == 1 && reach & b == 0 {
                    return false;
                }
            }
            true
        }
    }

    let mut search = Search {
        gs: &gs,
        hs: &hs,
        order: &order,
        branch: Vec::new(),
        free: live,
    };
    Ok(search.place(0))
}
