//! Multigraph isomorphism by vertex backtracking with degree-profile
//! pruning.

use std::collections::BTreeMap;

use super::{EdgeKind, Ends, Multigraph};

/// Per-vertex invariant preserved by isomorphism: link degree, loop count,
/// half-edge count, then the sorted multiset of link multiplicities to the
/// distinct neighbours.
fn profiles(g: &Multigraph) -> Vec<(usize, usize, usize, Vec<usize>)> {
    g.vertices()
        .iter()
        .map(|v| {
            let mut links = 0usize;
            let mut loops = 0usize;
            let mut halves = 0usize;
            let mut per_neighbor: BTreeMap<&str, usize> = BTreeMap::new();
            for e in g.edges() {
                match &e.ends {
                    Ends::Link(a, b) => {
                        let other = if a == v {
                            Some(b)
                        } else if b == v {
                            Some(a)
                        } else {
                            None
                        };
                        if let Some(o) = other {
                            links += 1;
                            *per_neighbor.entry(o).or_insert(0) += 1;
                        }
                    }
                    Ends::Loop(a) if a == v => loops += 1,
                    Ends::Half(a) if a == v => halves += 1,
                    _ => {}
                }
            }
            let mut mult: Vec<usize> = per_neighbor.into_values().collect();
            mult.sort_unstable();
            (links, loops, halves, mult)
        })
        .collect()
}

fn kind_counts(g: &Multigraph) -> [usize; 4] {
    let mut counts = [0usize; 4];
    for e in g.edges() {
        let i = match e.kind() {
            EdgeKind::Link => 0,
            EdgeKind::Loop => 1,
            EdgeKind::Half => 2,
            EdgeKind::Loose => 3,
        };
        counts[i] += 1;
    }
    counts
}

/// Vertex bijection under which the edge multisets coincide (kinds and
/// multiplicities per vertex pair), or `None`. Loose edges have no
/// endpoints, so only their counts must agree.
pub fn graph_iso(
    g: &Multigraph,
    h: &Multigraph,
) -> Option<Vec<(String, String)>> {
    if g.vertices().len() != h.vertices().len()
        || kind_counts(g) != kind_counts(h)
    {
        return None;
    }
    let n = g.vertices().len();
    let pg = profiles(g);
    let ph = profiles(h);
    {
        let mut a = pg.clone();
        let mut b = ph.clone();
        a.sort();
        b.sort();
        if a != b {
            return None;
        }
    }
    let cands: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| ph[j] == pg[i]).collect())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (cands[i].len(), i));

    // Link multiplicity tables for the pairwise consistency check.
    let idx = |g: &Multigraph, v: &str| -> usize {
        g.vertices().iter().position(|x| x == v).expect("known vertex")
    };
    let mut mg = vec![vec![0usize; n]; n];
    for e in g.edges() {
        if let Ends::Link(a, b) = &e.ends {
            let (a, b) = (idx(g, a), idx(g, b));
            mg[a][b] += 1;
            mg[b][a] += 1;
        }
    }
    let mut mh = vec![vec![0usize; n]; n];
    for e in h.edges() {
        if let Ends::Link(a, b) = &e.ends {
            let (a, b) = (idx(h, a), idx(h, b));
            mh[a][b] += 1;
            mh[b][a] += 1;
        }
    }

    fn assign(
        depth: usize,
        order: &[usize],
        cands: &[Vec<usize>],
        mg: &[Vec<usize>],
        mh: &[Vec<usize>],
        map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let i = order[depth];
        for &j in &cands[i] {
            if used[j] {
                continue;
            }
            let ok = order[..depth].iter().all(|&k| {
                let jk = map[k].expect("assigned earlier");
                mg[i][k] == mh[j][jk]
            });
            if !ok {
                continue;
            }
            map[i] = Some(j);
            used[j] = true;
            if assign(depth + 1, order, cands, mg, mh, map, used) {
                return true;
            }
            map[i] = None;
            used[j] = false;
        }
        false
    }

    let mut map: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    if !assign(0, &order, &cands, &mg, &mh, &mut map, &mut used) {
        return None;
    }
    Some(
        (0..n)
            .map(|i| {
                (
                    g.vertices()[i].clone(),
                    h.vertices()[map[i].expect("complete")].clone(),
                )
            })
            .collect(),
    )
}
