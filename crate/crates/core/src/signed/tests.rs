use proptest::prelude::*;

use super::*;
use crate::graph::circles;

fn signed(text: &str) -> SignedGraph {
    SignedGraph::parse(text).unwrap()
}

fn labels_of(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn sorted_circuits(s: &SignedGraph) -> Vec<Vec<String>> {
    s.circuits(24).unwrap()
}

#[test]
fn parse_signs_and_defaults() {
    let s = signed("a: link u v -\nb: link v w\nc: half w\nd: loose\ne: loop u \u{2212}");
    assert_eq!(s.sign("a").unwrap(), Sign::Minus);
    assert_eq!(s.sign("b").unwrap(), Sign::Plus);
    assert_eq!(s.sign("c").unwrap(), Sign::Minus);
    assert_eq!(s.sign("d").unwrap(), Sign::Plus);
    assert_eq!(s.sign("e").unwrap(), Sign::Minus);
    let again = SignedGraph::parse(&s.to_text()).unwrap();
    assert_eq!(again, s);
    assert!(!s.to_text().contains('\u{2212}'));
}

#[test]
fn forced_signs_are_enforced() {
    assert!(matches!(
        SignedGraph::parse("c: half w +"),
        Err(Error::Parse { line: 1, .. })
    ));
    assert!(matches!(
        SignedGraph::parse("d: loose -"),
        Err(Error::Parse { .. })
    ));
    let mut s = signed("c: half w\nl: link u w");
    assert!(matches!(
        s.set_sign("c", Sign::Plus),
        Err(Error::SignConflict(_))
    ));
    s.set_sign("l", Sign::Minus).unwrap();
    assert_eq!(s.edge_set_sign(&labels_of(&["c", "l"])).unwrap(), Sign::Plus);
    assert!(s.sign("nope").is_err());
}

#[test]
fn balance_is_about_cycle_signs() {
    let plus = signed("a: link u v\nb: link v w\nc: link w u");
    assert!(plus.is_balanced(24).unwrap());
    let one = signed("a: link u v -\nb: link v w\nc: link w u");
    assert!(!one.is_balanced(24).unwrap());
    // Two negative edges on the triangle cancel.
    let two = signed("a: link u v -\nb: link v w -\nc: link w u");
    assert!(two.is_balanced(24).unwrap());
    // A half edge is itself a negative cycle.
    let h = signed("a: link u v\nh: half u");
    assert!(!h.is_balanced(24).unwrap());
    assert_eq!(h.negative_cycles(24).unwrap(), vec![labels_of(&["h"])]);
    // Loose edges never unbalance anything.
    assert!(signed("d: loose").is_balanced(24).unwrap());
}

#[test]
fn balanced_all_positive_matroid_is_the_cycle_matroid() {
    let text = "\
12: link v1 v2\n13: link v1 v3\n14: link v1 v4\n23: link v2 v3\n24: link v2 v4\n34: link v3 v4";
    let s = signed(text);
    let g = Multigraph::parse(text).unwrap();
    assert_eq!(
        sorted_circuits(&s),
        g.cycle_matroid().unwrap().circuits(24).unwrap()
    );
}

#[test]
fn tight_handcuffs_share_one_vertex() {
    // Two negative loops on one vertex form a 2-circuit.
    let s = signed("z1: loop v -\nz2: loop v -");
    assert_eq!(sorted_circuits(&s), vec![labels_of(&["z1", "z2"])]);
    // So do a negative loop and a half edge.
    let s = signed("z: loop v -\nh: half v");
    assert_eq!(sorted_circuits(&s), vec![labels_of(&["z", "h"])]);
    // Figure-eight: two unbalanced triangles glued at one vertex.
    let s = signed(
        "a1: link c p1 -\na2: link p1 p2\na3: link p2 c\n\
         b1: link c q1 -\nb2: link q1 q2\nb3: link q2 c",
    );
    assert_eq!(
        sorted_circuits(&s),
        vec![labels_of(&["a1", "a2", "a3", "b1", "b2", "b3"])]
    );
}

#[test]
fn loose_handcuffs_need_a_path() {
    // Dumbbell: negative loops at the two ends of a 2-edge path.
    let s = signed("z1: loop u -\nz2: loop w -\np1: link u v\np2: link v w");
    assert_eq!(
        sorted_circuits(&s),
        vec![labels_of(&["z1", "z2", "p1", "p2"])]
    );
    // A second parallel route gives a second circuit.
    let s = signed("z1: loop u -\nz2: loop w -\np1: link u w\np2: link u w");
    assert_eq!(
        sorted_circuits(&s),
        vec![
            labels_of(&["p1", "p2"]),
            labels_of(&["z1", "z2", "p1"]),
            labels_of(&["z1", "z2", "p2"]),
        ]
    );
    // Two half edges joined by a link.
    let s = signed("h1: half u\nh2: half w\nl: link u w");
    assert_eq!(sorted_circuits(&s), vec![labels_of(&["h1", "h2", "l"])]);
    // Without any connecting path the pair stays independent.
    let s = signed("z1: loop u -\nz2: loop w -");
    assert!(sorted_circuits(&s).is_empty());
}

#[test]
fn loose_edges_are_coloops() {
    let s = signed("a: link u v\nb: link v w\nc: link w u\nd: loose");
    let m = s.matroid(24).unwrap();
    assert!(m.circuits().iter().all(|c| !c.contains(&"d".to_string())));
    assert_eq!(m.rank(), 3);
    assert_eq!(m.delete(&labels_of(&["d"])).unwrap().rank(), 2);
}

#[test]
fn unbalanced_k4_circuits() {
    // All-negative K4: triangles are negative, 4-circles positive. Any two
    // triangles share two vertices, so no handcuffs form and the circuits
    // are exactly the three positive 4-circles.
    let s = signed(
        "12: link v1 v2 -\n13: link v1 v3 -\n14: link v1 v4 -\n\
         23: link v2 v3 -\n24: link v2 v4 -\n34: link v3 v4 -",
    );
    let neg = s.negative_cycles(24).unwrap();
    assert_eq!(neg.len(), 4);
    assert!(neg.iter().all(|c| c.len() == 3));
    let m = s.matroid(24).unwrap();
    assert_eq!(m.rank(), 4);
    let sizes: Vec<usize> =
        m.circuits().iter().map(|c| c.len()).collect();
    assert_eq!(sizes, vec![4, 4, 4]);
}

// Independent rank function: each component contributes its vertex count,
// minus one when it is balanced; loose edges are spanning on their own.
fn rank_oracle(s: &SignedGraph, subset: &[String]) -> usize {
    let g = s.graph();
    let mut kept: Vec<&crate::graph::Edge> = Vec::new();
    let mut loose = 0usize;
    for l in subset {
        let e = g.edges().iter().find(|e| &e.label == l).unwrap();
        if e.kind() == EdgeKind::Loose {
            loose += 1;
        } else {
            kept.push(e);
        }
    }
    // Union-find over touched vertices.
    let verts: Vec<String> = {
        let mut vs: Vec<String> = kept
            .iter()
            .flat_map(|e| e.endpoints().into_iter().map(str::to_owned))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    };
    let mut parent: Vec<usize> = (0..verts.len()).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    let vid = |v: &str, verts: &[String]| {
        verts.iter().position(|x| x == v).unwrap()
    };
    for e in &kept {
        let ends = e.endpoints();
        if ends.len() == 2 {
            let (a, b) = (vid(ends[0], &verts), vid(ends[1], &verts));
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    let mut rank = loose;
    let roots: Vec<usize> = (0..verts.len())
        .filter(|&i| find(&mut parent, i) == i)
        .collect();
    for root in roots {
        let comp_verts: Vec<usize> = (0..verts.len())
            .filter(|&i| find(&mut parent, i) == root)
            .collect();
        let comp_edges: Vec<String> = kept
            .iter()
            .filter(|e| {
                comp_verts
                    .iter()
                    .any(|&i| e.touches(&verts[i]))
            })
            .map(|e| e.label.clone())
            .collect();
        let has_half = comp_edges.iter().any(|l| {
            g.edge(l).unwrap().kind() == EdgeKind::Half
        });
        let sub = {
            let mut m = Multigraph::new();
            for &i in &comp_verts {
                m.add_vertex(&verts[i]).unwrap();
            }
            for l in &comp_edges {
                match &g.edge(l).unwrap().ends {
                    Ends::Link(u, v) => m.add_link(l, u, v).unwrap(),
                    Ends::Loop(v) => m.add_loop(l, v).unwrap(),
                    Ends::Half(v) => m.add_half(l, v).unwrap(),
                    Ends::Loose => unreachable!(),
                }
            }
            m
        };
        let balanced = !has_half
            && circles(&sub, 24)
                .unwrap()
                .iter()
                .all(|c| s.edge_set_sign(c).unwrap() == Sign::Plus);
        rank += comp_verts.len() - usize::from(balanced);
    }
    rank
}

fn brute_circuits(s: &SignedGraph) -> Vec<Vec<String>> {
    let labels = s.graph().edge_labels();
    let n = labels.len();
    let mut dependent: Vec<u64> = Vec::new();
    for mask in 1u64..(1 << n) {
        let subset: Vec<String> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| labels[i].clone())
            .collect();
        if rank_oracle(s, &subset) < subset.len() {
            dependent.push(mask);
        }
    }
    minimal_sets(dependent)
        .into_iter()
        .map(|m| {
            (0..n)
                .filter(|i| m >> i & 1 == 1)
                .map(|i| labels[i].clone())
                .collect()
        })
        .collect()
}

fn arbitrary_signed() -> impl Strategy<Value = SignedGraph> {
    prop::collection::vec((0u8..5, 0usize..4, 0usize..4, any::<bool>()), 1..8)
        .prop_map(|specs| {
            let mut g = Multigraph::new();
            let mut signs = Vec::new();
            for (k, (kind, u, v, neg)) in specs.into_iter().enumerate() {
                let label = format!("e{k}");
                let (u, v) = (format!("v{u}"), format!("v{v}"));
                match kind {
                    0 | 1 => {
                        if u == v {
                            g.add_loop(&label, &u).unwrap();
                        } else {
                            g.add_link(&label, &u, &v).unwrap();
                        }
                        signs.push((label, if neg { Sign::Minus } else { Sign::Plus }));
                    }
                    2 => {
                        g.add_loop(&label, &u).unwrap();
                        signs.push((label, if neg { Sign::Minus } else { Sign::Plus }));
                    }
                    3 => g.add_half(&label, &u).unwrap(),
                    _ => g.add_loose(&label).unwrap(),
                }
            }
            SignedGraph::with_signs(g, &signs).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn prop_circuits_match_rank_oracle(s in arbitrary_signed()) {
        prop_assert_eq!(sorted_circuits(&s), brute_circuits(&s));
    }

    #[test]
    fn prop_matroid_satisfies_circuit_axioms(s in arbitrary_signed()) {
        prop_assert!(s.matroid(24).is_ok());
    }

    #[test]
    fn prop_signed_text_round_trips(s in arbitrary_signed()) {
        prop_assert_eq!(&SignedGraph::parse(&s.to_text()).unwrap(), &s);
    }
}
