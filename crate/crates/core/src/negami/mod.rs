//! Generation of 3-connected graphs by Negami's two splitter operations,
//! plus the exhaustive desk-scale check that the two catalog families are
//! exactly the generated graphs passing the circle-contraction test.
//!
//! Negami's splitting theorem: every 3-connected simple graph with a minor
//! isomorphic to a 3-connected simple non-wheel `H` can be built from `H`
//! by repeatedly adding an edge between non-adjacent vertices (O1) or
//! splitting a vertex of degree at least four (O2). [`negami_closure`]
//! enumerates that closure breadth-first up to an edge budget and keeps the
//! derivation of every member, so a claim shaped like "the 3-connected
//! graphs with an `H` minor and property P are exactly this family" can be
//! checked mechanically on everything small enough to reach.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::catalog::{self, FamilyTag};
use crate::graph::{circles, graph_iso, has_graph_minor, EdgeKind, Ends, Multigraph};
use crate::recognize::family_membership;
use crate::{Error, Result};

/// One generation step applied to a closure member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExtensionStep {
    /// New edge between the two (previously non-adjacent) vertices.
    O1 { u: String, v: String },
    /// Split of `vertex`: it keeps the neighbours in `kept` plus an edge to
    /// a new vertex, which takes over the neighbours in `moved`.
    O2 {
        vertex: String,
        kept: Vec<String>,
        moved: Vec<String>,
    },
}

fn require_simple(g: &Multigraph) -> Result<()> {
    for e in g.edges() {
        if e.kind() != EdgeKind::Link {
            return Err(Error::InvalidParameter(format!(
                "graph must be simple; `{}` is not a link",
                e.label
            )));
        }
        if let Ends::Link(a, b) = &e.ends {
            if g.links_between(a, b) > 1 {
                return Err(Error::InvalidParameter(format!(
                    "graph must be simple; `{a}` and `{b}` are joined twice"
                )));
            }
        }
    }
    Ok(())
}

fn fresh_edge_label(g: &Multigraph) -> String {
    (0..)
        .map(|i| format!("x{i}"))
        .find(|l| g.edge(l).is_err())
        .expect("some label is unused")
}

fn fresh_vertex(g: &Multigraph, base: &str) -> String {
    let mut v = format!("{base}'");
    while g.has_vertex(&v) {
        v.push('\'');
    }
    v
}

/// All O1 results: one graph per unordered non-adjacent vertex pair.
pub fn o1_extensions(g: &Multigraph) -> Result<Vec<(Multigraph, ExtensionStep)>> {
    require_simple(g)?;
    let vs = g.vertices().to_vec();
    let mut out = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if g.links_between(&vs[i], &vs[j]) > 0 {
                continue;
            }
            let mut h = g.clone();
            h.add_link(&fresh_edge_label(g), &vs[i], &vs[j])?;
            out.push((
                h,
                ExtensionStep::O1 {
                    u: vs[i].clone(),
                    v: vs[j].clone(),
                },
            ));
        }
    }
    Ok(out)
}

/// All O2 results: every vertex of degree at least four split into two
/// adjacent vertices partitioning its former neighbours, both new degrees
/// greater than two. The two sides of a partition give isomorphic graphs,
/// so each unordered partition is emitted once (the split vertex keeps the
/// side containing its smallest neighbour).
pub fn o2_splits(g: &Multigraph) -> Result<Vec<(Multigraph, ExtensionStep)>> {
    require_simple(g)?;
    let mut out = Vec::new();
    for v in g.vertices().to_vec() {
        let nbrs = g.neighbors(&v);
        let d = nbrs.len();
        if d < 4 {
            continue;
        }
        for mask in 0u64..1 << (d - 1) {
            let mut kept = vec![nbrs[0].clone()];
            let mut moved = Vec::new();
            for (k, w) in nbrs.iter().enumerate().skip(1) {
                if mask >> (k - 1) & 1 == 1 {
                    moved.push(w.clone());
                } else {
                    kept.push(w.clone());
                }
            }
            // Degrees after the split count the new joining edge.
            if kept.len() < 2 || moved.len() < 2 {
                continue;
            }
            let v2 = fresh_vertex(g, &v);
            let mut h = g.clone();
            for w in &moved {
                let label = h
                    .edges()
                    .iter()
                    .find(|e| matches!(&e.ends, Ends::Link(a, b)
                        if (a == &v && b == w) || (a == w && b == &v)))
                    .expect("moved neighbour is adjacent")
                    .label
                    .clone();
                h = h.delete_edge(&label)?;
                h.add_link(&label, &v2, w)?;
            }
            h.add_link(&fresh_edge_label(&h), &v, &v2)?;
            out.push((
                h,
                ExtensionStep::O2 {
                    vertex: v.clone(),
                    kept,
                    moved,
                },
            ));
        }
    }
    Ok(out)
}

/// Hub-and-rim recognizer; wheels are the excluded seeds.
pub fn is_wheel(g: &Multigraph) -> bool {
    let n = g.vertices().len();
    n >= 4
        && g.edges().len() == 2 * (n - 1)
        && graph_iso(g, &catalog::wheel(n - 1)).is_some()
}

/// Vertex 3-connectivity by brute force: at least four vertices and no
/// disconnecting set of size at most two.
pub fn three_connected(g: &Multigraph) -> bool {
    let vs = g.vertices().to_vec();
    if vs.len() < 4 || !g.is_connected() {
        return false;
    }
    for i in 0..vs.len() {
        let h = g.delete_vertex(&vs[i]).expect("vertex exists");
        if !h.is_connected() {
            return false;
        }
        for j in i + 1..vs.len() {
            let hh = h.delete_vertex(&vs[j]).expect("vertex exists");
            if !hh.is_connected() {
                return false;
            }
        }
    }
    true
}

/// True iff no circle contraction of `g` has a `K5` or `K3,3` minor.
pub fn condition_iii(g: &Multigraph, bound: usize) -> Result<bool> {
    let k5 = catalog::complete_graph(5);
    let k33 = catalog::complete_bipartite(3, 3);
    for x in circles(g, bound)? {
        let c = g.contract_circle(&x)?;
        if has_graph_minor(&c, &k5, bound)? || has_graph_minor(&c, &k33, bound)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A generated graph together with its derivation: `parent` indexes into
/// the same closure list, `step` is the operation that produced it. The
/// seed has neither.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClosureMember {
    pub graph: Multigraph,
    pub parent: Option<usize>,
    pub step: Option<ExtensionStep>,
}

fn iso_signature(g: &Multigraph) -> (usize, usize, Vec<usize>) {
    let mut degs: Vec<usize> = g.vertices().iter().map(|v| g.degree(v)).collect();
    degs.sort_unstable();
    (g.vertices().len(), g.edges().len(), degs)
}

/// Breadth-first closure of `seed` under O1 and O2 up to `max_edges` edges,
/// one representative per isomorphism class. The seed must be simple,
/// 3-connected and not a wheel. Every emitted graph is checked to be
/// 3-connected with a `seed` minor; both hold by Negami's theorem, so a
/// failure would mean a generator bug.
pub fn negami_closure(
    seed: &Multigraph,
    max_edges: usize,
    bound: usize,
) -> Result<Vec<ClosureMember>> {
    require_simple(seed)?;
    if is_wheel(seed) {
        return Err(Error::WheelSeed);
    }
    if !three_connected(seed) {
        return Err(Error::SeedNotThreeConnected);
    }
    if seed.edges().len() > max_edges {
        return Err(Error::BoundExceeded {
            what: "seed edge count",
            size: seed.edges().len(),
            limit: max_edges,
        });
    }

    let mut members = vec![ClosureMember {
        graph: seed.clone(),
        parent: None,
        step: None,
    }];
    let mut classes: BTreeMap<(usize, usize, Vec<usize>), Vec<usize>> = BTreeMap::new();
    classes.insert(iso_signature(seed), vec![0]);

    let mut at = 0;
    while at < members.len() {
        let g = members[at].graph.clone();
        if g.edges().len() < max_edges {
            let mut children = o1_extensions(&g)?;
            children.extend(o2_splits(&g)?);
            for (h, step) in children {
                let bucket = classes.entry(iso_signature(&h)).or_default();
                if bucket
                    .iter()
                    .any(|&k| graph_iso(&members[k].graph, &h).is_some())
                {
                    continue;
                }
                assert!(three_connected(&h), "O1/O2 broke 3-connectivity");
                assert!(
                    has_graph_minor(&h, seed, bound)?,
                    "closure member lost the seed minor"
                );
                bucket.push(members.len());
                members.push(ClosureMember {
                    graph: h,
                    parent: Some(at),
                    step: Some(step),
                });
            }
        }
        at += 1;
    }
    Ok(members)
}

/// Outcome of [`verify_family_theorems`]: which family instances were
/// checked, how many closure members were classified, and every graph that
/// contradicted a characterization. Expected empty.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyVerification {
    pub family_checked: Vec<String>,
    pub closure_checked: usize,
    pub counterexamples: Vec<String>,
}

/// Human-readable derivation chain of a closure member, oldest step first.
pub fn derivation(members: &[ClosureMember], mut at: usize) -> String {
    let mut steps = Vec::new();
    while let (Some(p), Some(s)) = (members[at].parent, members[at].step.as_ref()) {
        steps.push(match s {
            ExtensionStep::O1 { u, v } => format!("O1 {u}+{v}"),
            ExtensionStep::O2 { vertex, moved, .. } => {
                format!("O2 {vertex} off {}", moved.join(","))
            }
        });
        at = p;
    }
    steps.reverse();
    if steps.is_empty() {
        "seed".to_owned()
    } else {
        steps.join("; ")
    }
}

/// Checks both directions of the two family characterizations on every
/// instance small enough to reach.
///
/// Family side: each `K3,n`-family graph (5 <= n <= n_max, 0 to 3 extra
/// edges) and each of `K4,4 - e`, `K4,4` must be 3-connected, contain the
/// respective seed minor, pass [`condition_iii`] and contain no `K5` minor.
/// Closure side: a member of the `K3,5` or `K4,4 - e` closure within
/// `edge_budget` passes [`condition_iii`] iff it is isomorphic to a family
/// member, and every family graph within budget actually shows up in its
/// closure.
pub fn verify_family_theorems(n_max: usize, edge_budget: usize) -> Result<FamilyVerification> {
    if n_max > 7 {
        return Err(Error::BoundExceeded {
            what: "bipartite family size",
            size: n_max,
            limit: 7,
        });
    }
    let g17 = catalog::g17();
    let g19 = catalog::g19();
    let k5 = catalog::complete_graph(5);

    let mut l_side = Vec::new();
    for n in 5..=n_max {
        for extra in 0..=3 {
            l_side.push((format!("k3.{n}+{extra}"), catalog::k3n_plus(n, extra)?));
        }
    }
    let m_side = vec![
        ("k4.4-e".to_owned(), catalog::g19()),
        ("k4.4".to_owned(), catalog::complete_bipartite(4, 4)),
    ];

    let mut family_checked = Vec::new();
    let mut counterexamples = Vec::new();
    let sides = [(&l_side, &g17, true), (&m_side, &g19, false)];
    for (side, seed, k5_free) in sides {
        for (name, g) in side {
            let bound = g.edges().len();
            if !three_connected(g) {
                counterexamples.push(format!("{name}: not 3-connected"));
            }
            if !has_graph_minor(g, seed, bound)? {
                counterexamples.push(format!("{name}: missing the seed minor"));
            }
            if !condition_iii(g, bound)? {
                counterexamples.push(format!(
                    "{name}: some circle contraction has a K5 or K3,3 minor"
                ));
            }
            // The degree-3 side caps branch-set adjacency, so the K3,n
            // family is K5-minor-free. Not so across the aisle: K4,4 and
            // K4,4 - e both contain K5 minors.
            if k5_free && has_graph_minor(g, &k5, bound)? {
                counterexamples.push(format!("{name}: has a K5 minor"));
            }
            family_checked.push(name.clone());
        }
    }

    let mut closure_checked = 0;
    let runs = [
        ("k3.5 closure", &g17, &l_side, true),
        ("k4.4-e closure", &g19, &m_side, false),
    ];
    for (run, seed, side, k3n_side) in runs {
        let members = negami_closure(seed, edge_budget, edge_budget)?;
        closure_checked += members.len();
        for (i, m) in members.iter().enumerate() {
            let tag = family_membership(&m.graph);
            let in_family = match tag {
                Some(FamilyTag::K3n { .. }) => k3n_side,
                Some(_) => !k3n_side,
                None => false,
            };
            if in_family != condition_iii(&m.graph, edge_budget)? {
                counterexamples.push(format!(
                    "{run} [{}]: family membership {:?} disagrees with the \
                     circle-contraction test",
                    derivation(&members, i),
                    tag
                ));
            }
        }
        for (name, g) in side {
            if g.edges().len() <= edge_budget
                && !members
                    .iter()
                    .any(|m| graph_iso(&m.graph, g).is_some())
            {
                counterexamples.push(format!("{name}: absent from the {run}"));
            }
        }
    }

    Ok(FamilyVerification {
        family_checked,
        closure_checked,
        counterexamples,
    })
}
