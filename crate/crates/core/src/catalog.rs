//! Named graphs, matroids and signed graphs used across the test suites and
//! the command line. Everything here is deterministic: same name, same
//! labels, same matrix, byte for byte.

use serde::{Deserialize, Serialize};

use crate::gf2::Gf2Matrix;
use crate::matroid::BinaryMatroid;
use crate::signed::{Sign, SignedGraph};
use crate::{Multigraph, Result};

/// Complete graph on `v1..vn`; edge between `vi` and `vj` is `vi-vj` (i < j).
pub fn complete_graph(n: usize) -> Multigraph {
    let mut g = Multigraph::new();
    for i in 1..=n {
        for j in i + 1..=n {
            g.add_link(&format!("v{i}-v{j}"), &format!("v{i}"), &format!("v{j}"))
                .expect("fresh labels");
        }
    }
    g
}

/// Complete bipartite graph on `a1..am` and `b1..bn`.
pub fn complete_bipartite(m: usize, n: usize) -> Multigraph {
    let mut g = Multigraph::new();
    for i in 1..=m {
        for j in 1..=n {
            g.add_link(&format!("a{i}-b{j}"), &format!("a{i}"), &format!("b{j}"))
                .expect("fresh labels");
        }
    }
    g
}

/// Wheel with `n` rim vertices `r1..rn` around a hub `h`.
pub fn wheel(n: usize) -> Multigraph {
    let mut g = Multigraph::new();
    for i in 1..=n {
        let j = i % n + 1;
        g.add_link(&format!("r{i}-r{j}"), &format!("r{i}"), &format!("r{j}"))
            .expect("fresh labels");
    }
    for i in 1..=n {
        g.add_link(&format!("h-r{i}"), "h", &format!("r{i}"))
            .expect("fresh labels");
    }
    g
}

/// The Petersen graph: outer 5-cycle `u*`, inner pentagram `w*`, spokes.
pub fn petersen() -> Multigraph {
    let mut g = Multigraph::new();
    for i in 0..5 {
        g.add_link(&format!("o{i}"), &format!("u{i}"), &format!("u{}", (i + 1) % 5))
            .expect("fresh labels");
    }
    for i in 0..5 {
        g.add_link(&format!("i{i}"), &format!("w{i}"), &format!("w{}", (i + 2) % 5))
            .expect("fresh labels");
    }
    for i in 0..5 {
        g.add_link(&format!("s{i}"), &format!("u{i}"), &format!("w{i}"))
            .expect("fresh labels");
    }
    g
}

/// `K4,4` with the edge `a1-b1` removed.
pub fn k44_minus_e() -> Multigraph {
    complete_bipartite(4, 4)
        .delete_edge("a1-b1")
        .expect("edge exists")
}

/// `K3,n` with `extra` (0 to 3) edges added between the three `a*` vertices:
/// one edge, a path, or a triangle.
pub fn k3n_plus(n: usize, extra: usize) -> Result<Multigraph> {
    if extra > 3 {
        return Err(crate::Error::InvalidParameter(format!(
            "extra edges must be 0..=3, got {extra}"
        )));
    }
    let mut g = complete_bipartite(3, n);
    let added = [("a1-a2", "a1", "a2"), ("a2-a3", "a2", "a3"), ("a1-a3", "a1", "a3")];
    for (label, u, v) in added.iter().take(extra) {
        g.add_link(label, u, v)?;
    }
    Ok(g)
}

/// The graph called `G17` in the excluded-minor list: `K3,5`.
pub fn g17() -> Multigraph {
    complete_bipartite(3, 5)
}

/// The graph called `G19`: `K4,4` minus an edge.
pub fn g19() -> Multigraph {
    k44_minus_e()
}

fn standard_matroid(prefix: &str, right: &[&str]) -> BinaryMatroid {
    let r = right.len();
    let n = r + right[0].len();
    let mut rows = Vec::with_capacity(r);
    for (i, tail) in right.iter().enumerate() {
        let mut row = vec![0u8; n];
        row[i] = 1;
        for (j, c) in tail.bytes().enumerate() {
            row[r + j] = c - b'0';
        }
        rows.push(row);
    }
    let labels = (1..=n).map(|i| format!("{prefix}{i}")).collect();
    BinaryMatroid::new(labels, Gf2Matrix::from_rows(&rows).expect("rectangular"))
        .expect("valid matrix")
}

/// The 15-element regular excluded minor `R15`, elements `e1..e15`.
pub fn r15() -> BinaryMatroid {
    standard_matroid(
        "e",
        &[
            "10100001",
            "00011010",
            "11001100",
            "11000110",
            "01111000",
            "01111100",
            "01111101",
        ],
    )
}

/// The 16-element regular excluded minor `R16`, elements `e1..e16`.
pub fn r16() -> BinaryMatroid {
    standard_matroid(
        "e",
        &[
            "01101000",
            "00001110",
            "01101110",
            "00011100",
            "11011100",
            "10110000",
            "11000001",
            "10100001",
        ],
    )
}

/// The Fano plane `F7`, elements `e1..e7`.
pub fn fano() -> BinaryMatroid {
    standard_matroid("e", &["0111", "1011", "1101"])
}

/// Named binary matroids exercised by the structural test suites.
pub fn binary_suite() -> Vec<(String, BinaryMatroid)> {
    let cycle = |g: &Multigraph| g.cycle_matroid().expect("links only");
    let bond = |g: &Multigraph| g.bond_matroid().expect("links only");
    vec![
        ("M(K4)".into(), cycle(&complete_graph(4))),
        ("M(W4)".into(), cycle(&wheel(4))),
        ("M(W5)".into(), cycle(&wheel(5))),
        ("M(K33)".into(), cycle(&complete_bipartite(3, 3))),
        ("M*(K33)".into(), bond(&complete_bipartite(3, 3))),
        ("M(K5)".into(), cycle(&complete_graph(5))),
        ("M*(K5)".into(), bond(&complete_graph(5))),
        ("F7".into(), fano()),
        ("F7*".into(), fano().dual()),
        ("M(K35)".into(), cycle(&g17())),
        ("M*(K35)".into(), bond(&g17())),
        ("M(K44-e)".into(), cycle(&g19())),
        ("M*(K44-e)".into(), bond(&g19())),
        ("R15".into(), r15()),
        ("R16".into(), r16()),
    ]
}

/// Named signed graphs covering all three circuit shapes; every instance
/// passes the circuit axioms.
pub fn signed_suite() -> Vec<(String, SignedGraph)> {
    let parse = |text: &str| SignedGraph::parse(text).expect("valid instance");
    let all_negative = |g: &Multigraph| {
        let signs: Vec<(String, Sign)> = g
            .edge_labels()
            .into_iter()
            .map(|l| (l, Sign::Minus))
            .collect();
        SignedGraph::with_signs(g.clone(), &signs).expect("links only")
    };
    vec![
        ("plus-K4".into(), SignedGraph::new(complete_graph(4))),
        ("minus-K4".into(), all_negative(&complete_graph(4))),
        ("minus-K5".into(), all_negative(&complete_graph(5))),
        ("minus-K33".into(), all_negative(&complete_bipartite(3, 3))),
        ("minus-W4".into(), all_negative(&wheel(4))),
        (
            "figure-eight".into(),
            parse(
                "a1: link c p1 -\na2: link p1 p2\na3: link p2 c\n\
                 b1: link c q1 -\nb2: link q1 q2\nb3: link q2 c",
            ),
        ),
        (
            "dumbbell".into(),
            parse("z1: loop u -\nz2: loop w -\np1: link u v\np2: link v w"),
        ),
        (
            "half-barbell".into(),
            parse("h1: half u\nh2: half w\nl1: link u v\nl2: link v w"),
        ),
        (
            "theta-negative".into(),
            parse("p1: link u w -\np2: link u w\np3: link u w -\nq: loop u -"),
        ),
        (
            "hybrid".into(),
            parse(
                "l1: link u v -\nl2: link v w\nl3: link w u\n\
                 z: loop v\nh: half w\nd: loose",
            ),
        ),
        (
            "double-half".into(),
            parse("h1: half v\nh2: half v\nl: link v w\nm: link v w -"),
        ),
        (
            "long-dumbbell".into(),
            parse(
                "z1: loop a -\nz2: loop d -\n\
                 p1: link a b\np2: link b c\np3: link c d\nq1: link b c -",
            ),
        ),
    ]
}

/// Shape tags for the graphs whose cographic matroids have graphic cocircuits
/// and one of the two excluded minors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyTag {
    /// `K3,n` plus `extra` edges (0 to 3) on the three-vertex side.
    K3n { n: usize, extra: usize },
    K44MinusEdge,
    K44,
}

impl FamilyTag {
    /// The canonical catalog member carrying this tag.
    pub fn graph(&self) -> Multigraph {
        match *self {
            FamilyTag::K3n { n, extra } => {
                k3n_plus(n, extra).expect("extra in range")
            }
            FamilyTag::K44MinusEdge => k44_minus_e(),
            FamilyTag::K44 => complete_bipartite(4, 4),
        }
    }
}

impl std::fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            FamilyTag::K3n { n, extra: 0 } => write!(f, "K3,{n}"),
            FamilyTag::K3n { n, extra } => write!(f, "K3,{n}+{extra}"),
            FamilyTag::K44MinusEdge => write!(f, "K4,4-e"),
            FamilyTag::K44 => write!(f, "K4,4"),
        }
    }
}
