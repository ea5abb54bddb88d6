//! Multigraphs with the four edge kinds: links, loops, half edges and loose
//! edges. Operations follow the conventions that make the graph and matroid
//! sides of the crate agree; in particular single-edge contraction of a loop
//! or half edge removes the vertex (turning remaining links there into half
//! edges), while circle contraction identifies the circle's vertices and is
//! the graph counterpart of contracting the circuit in the cycle matroid.

mod circles;
mod iso;
mod minor;

pub use circles::{circles, tutte_connectivity};
pub use iso::graph_iso;
pub use minor::has_graph_minor;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::gf2::Gf2Matrix;
use crate::matroid::BinaryMatroid;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeKind {
    Link,
    Loop,
    Half,
    Loose,
}

impl std::fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            EdgeKind::Link => "link",
            EdgeKind::Loop => "loop",
            EdgeKind::Half => "half",
            EdgeKind::Loose => "loose",
        };
        f.write_str(s)
    }
}

/// Endpoints of an edge; a link has two distinct end-vertices, a loop one
/// (used twice), a half edge one, a loose edge none.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ends {
    Link(String, String),
    Loop(String),
    Half(String),
    Loose,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub label: String,
    pub ends: Ends,
}

impl Edge {
    pub fn kind(&self) -> EdgeKind {
        match self.ends {
            Ends::Link(_, _) => EdgeKind::Link,
            Ends::Loop(_) => EdgeKind::Loop,
            Ends::Half(_) => EdgeKind::Half,
            Ends::Loose => EdgeKind::Loose,
        }
    }

    /// End-vertices, with multiplicity (a loop lists its vertex twice).
    pub fn endpoints(&self) -> Vec<&str> {
        match &self.ends {
            Ends::Link(u, v) => vec![u, v],
            Ends::Loop(v) => vec![v, v],
            Ends::Half(v) => vec![v],
            Ends::Loose => vec![],
        }
    }

    pub fn touches(&self, v: &str) -> bool {
        match &self.ends {
            Ends::Link(a, b) => a == v || b == v,
            Ends::Loop(a) | Ends::Half(a) => a == v,
            Ends::Loose => false,
        }
    }
}

/// A labelled multigraph. Vertices keep insertion order; edge labels are
/// unique and survive every operation, so matroid elements and graph edges
/// can be matched by name across the crate.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Multigraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl Multigraph {
    pub fn new() -> Self {
        Multigraph::default()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_labels(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.label.clone()).collect()
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.vertices.iter().any(|x| x == v)
    }

    pub fn edge(&self, label: &str) -> Result<&Edge> {
        self.edges
            .iter()
            .find(|e| e.label == label)
            .ok_or_else(|| Error::UnknownEdge(label.to_owned()))
    }

    pub fn add_vertex(&mut self, v: &str) -> Result<()> {
        if self.has_vertex(v) {
            return Err(Error::DuplicateLabel(v.to_owned()));
        }
        self.vertices.push(v.to_owned());
        Ok(())
    }

    fn ensure_vertex(&mut self, v: &str) {
        if !self.has_vertex(v) {
            self.vertices.push(v.to_owned());
        }
    }

    fn check_new_edge_label(&self, label: &str) -> Result<()> {
        if self.edges.iter().any(|e| e.label == label) {
            return Err(Error::DuplicateLabel(label.to_owned()));
        }
        Ok(())
    }

    /// Adds a link; endpoints are created as vertices when missing.
    pub fn add_link(&mut self, label: &str, u: &str, v: &str) -> Result<()> {
        self.check_new_edge_label(label)?;
        if u == v {
            return Err(Error::InvalidParameter(format!(
                "link `{label}` needs two distinct end-vertices; use a loop"
            )));
        }
        self.ensure_vertex(u);
        self.ensure_vertex(v);
        self.edges.push(Edge {
            label: label.to_owned(),
            ends: Ends::Link(u.to_owned(), v.to_owned()),
        });
        Ok(())
    }

    pub fn add_loop(&mut self, label: &str, v: &str) -> Result<()> {
        self.check_new_edge_label(label)?;
        self.ensure_vertex(v);
        self.edges.push(Edge {
            label: label.to_owned(),
            ends: Ends::Loop(v.to_owned()),
        });
        Ok(())
    }

    pub fn add_half(&mut self, label: &str, v: &str) -> Result<()> {
        self.check_new_edge_label(label)?;
        self.ensure_vertex(v);
        self.edges.push(Edge {
            label: label.to_owned(),
            ends: Ends::Half(v.to_owned()),
        });
        Ok(())
    }

    pub fn add_loose(&mut self, label: &str) -> Result<()> {
        self.check_new_edge_label(label)?;
        self.edges.push(Edge {
            label: label.to_owned(),
            ends: Ends::Loose,
        });
        Ok(())
    }

    /// Degree of a vertex: links and half edges count once, loops twice.
    pub fn degree(&self, v: &str) -> usize {
        self.edges
            .iter()
            .map(|e| e.endpoints().iter().filter(|&&x| x == v).count())
            .sum()
    }

    /// Distinct link neighbours of `v`, sorted.
    pub fn neighbors(&self, v: &str) -> Vec<String> {
        let mut out: BTreeSet<String> = BTreeSet::new();
        for e in &self.edges {
            if let Ends::Link(a, b) = &e.ends {
                if a == v {
                    out.insert(b.clone());
                } else if b == v {
                    out.insert(a.clone());
                }
            }
        }
        out.into_iter().collect()
    }

    /// Number of parallel links between two distinct vertices.
    pub fn links_between(&self, u: &str, v: &str) -> usize {
        self.edges
            .iter()
            .filter(|e| match &e.ends {
                Ends::Link(a, b) => {
                    (a == u && b == v) || (a == v && b == u)
                }
                _ => false,
            })
            .count()
    }

    pub fn delete_edge(&self, label: &str) -> Result<Multigraph> {
        self.edge(label)?;
        let mut out = self.clone();
        out.edges.retain(|e| e.label != label);
        Ok(out)
    }

    pub fn delete_edges(&self, labels: &[String]) -> Result<Multigraph> {
        let mut out = self.clone();
        for l in labels {
            out = out.delete_edge(l)?;
        }
        Ok(out)
    }

    /// Removes a vertex together with every incident edge.
    pub fn delete_vertex(&self, v: &str) -> Result<Multigraph> {
        if !self.has_vertex(v) {
            return Err(Error::UnknownVertex(v.to_owned()));
        }
        let mut out = self.clone();
        out.edges.retain(|e| !e.touches(v));
        out.vertices.retain(|x| x != v);
        Ok(out)
    }

    fn rename_vertices(&mut self, from: &BTreeSet<String>, to: &str) {
        let map = |x: &str| -> String {
            if from.contains(x) {
                to.to_owned()
            } else {
                x.to_owned()
            }
        };
        for e in &mut self.edges {
            e.ends = match &e.ends {
                Ends::Link(a, b) => {
                    let (a, b) = (map(a), map(b));
                    if a == b {
                        Ends::Loop(a)
                    } else {
                        Ends::Link(a, b)
                    }
                }
                Ends::Loop(a) => Ends::Loop(map(a)),
                Ends::Half(a) => Ends::Half(map(a)),
                Ends::Loose => Ends::Loose,
            };
        }
        self.vertices.retain(|x| !from.contains(x) || x == to);
    }

    /// Single-edge contraction.
    ///
    /// * link: the end-vertices are identified (the merged vertex takes the
    ///   lexicographically smaller name); parallel links become loops;
    /// * loop or half edge at `v`: the vertex `v` disappears along with every
    ///   loop and half edge at it, and links at `v` become half edges at
    ///   their other end;
    /// * loose edge: same as deletion.
    pub fn contract_edge(&self, label: &str) -> Result<Multigraph> {
        let edge = self.edge(label)?.clone();
        match edge.ends {
            Ends::Loose => self.delete_edge(label),
            Ends::Link(u, v) => {
                let mut out = self.delete_edge(label)?;
                let keep = if u <= v { &u } else { &v };
                let from: BTreeSet<String> =
                    [u.clone(), v.clone()].into_iter().collect();
                out.rename_vertices(&from, keep);
                Ok(out)
            }
            Ends::Loop(v) | Ends::Half(v) => {
                let mut out = self.delete_edge(label)?;
                out.edges = out
                    .edges
                    .into_iter()
                    .filter_map(|e| match e.ends {
                        Ends::Loop(a) | Ends::Half(a) if a == v => None,
                        Ends::Link(a, b) if a == v => Some(Edge {
                            label: e.label,
                            ends: Ends::Half(b),
                        }),
                        Ends::Link(a, b) if b == v => Some(Edge {
                            label: e.label,
                            ends: Ends::Half(a),
                        }),
                        ends => Some(Edge {
                            label: e.label,
                            ends,
                        }),
                    })
                    .collect();
                out.vertices.retain(|x| x != &v);
                Ok(out)
            }
        }
    }

    /// Checks whether the labelled edge set is a circle: a single loop, or a
    /// set of links forming one closed cycle (every touched vertex has
    /// exactly two end-slots in the set, connectedly).
    pub fn is_circle(&self, x: &[String]) -> Result<bool> {
        let mut seen = BTreeSet::new();
        let mut edges = Vec::new();
        for l in x {
            if !seen.insert(l.clone()) {
                return Ok(false);
            }
            edges.push(self.edge(l)?);
        }
        if edges.is_empty() {
            return Ok(false);
        }
        if edges.len() == 1 {
            return Ok(matches!(edges[0].ends, Ends::Loop(_)));
        }
        let mut incidence: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
        for (i, e) in edges.iter().enumerate() {
            match &e.ends {
                Ends::Link(a, b) => {
                    incidence.entry(a).or_default().push(i);
                    incidence.entry(b).or_default().push(i);
                }
                _ => return Ok(false),
            }
        }
        if incidence.values().any(|slots| slots.len() != 2) {
            return Ok(false);
        }
        // Walk the 2-regular incidence structure; one closed tour must use
        // every edge.
        let mut used = vec![false; edges.len()];
        let mut cur = 0usize;
        let mut count = 0usize;
        let mut at: &str = match &edges[0].ends {
            Ends::Link(a, _) => a,
            _ => unreachable!(),
        };
        loop {
            used[cur] = true;
            count += 1;
            let next_at = match &edges[cur].ends {
                Ends::Link(a, b) => {
                    if a == at {
                        b.as_str()
                    } else {
                        a.as_str()
                    }
                }
                _ => unreachable!(),
            };
            let slots = &incidence[next_at];
            let next = slots.iter().copied().find(|&i| !used[i]);
            match next {
                Some(i) => {
                    cur = i;
                    at = next_at;
                }
                None => break,
            }
        }
        Ok(count == edges.len())
    }

    /// Contracts a whole circle at once: its vertices are identified into
    /// one (named by the smallest participating vertex) and its edges
    /// disappear. Chords become loops, as do links joining two circle
    /// vertices. This matches circuit contraction in the cycle matroid and
    /// agrees with contracting the circle's links one at a time and deleting
    /// the loop the last edge becomes.
    pub fn contract_circle(&self, x: &[String]) -> Result<Multigraph> {
        if !self.is_circle(x)? {
            return Err(Error::NotACircle);
        }
        let mut touched: BTreeSet<String> = BTreeSet::new();
        for l in x {
            for v in self.edge(l)?.endpoints() {
                touched.insert(v.to_owned());
            }
        }
        let mut out = self.delete_edges(x)?;
        let keep = touched.iter().min().cloned().expect("circle is nonempty");
        out.rename_vertices(&touched, &keep);
        Ok(out)
    }

    /// Vertex-edge incidence matroid over GF(2). Loops give zero columns;
    /// half and loose edges have no incidence vector and are rejected.
    pub fn cycle_matroid(&self) -> Result<BinaryMatroid> {
        for e in &self.edges {
            if matches!(e.kind(), EdgeKind::Half | EdgeKind::Loose) {
                return Err(Error::ForbiddenEdgeKind {
                    label: e.label.clone(),
                    kind: e.kind().to_string(),
                });
            }
        }
        let pos: BTreeMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut rep = Gf2Matrix::zeros(self.vertices.len(), self.edges.len());
        for (c, e) in self.edges.iter().enumerate() {
            if let Ends::Link(u, v) = &e.ends {
                rep.set(pos[u.as_str()], c, true);
                rep.set(pos[v.as_str()], c, true);
            }
        }
        BinaryMatroid::new(self.edge_labels(), rep)
    }

    /// The dual of the cycle matroid.
    pub fn bond_matroid(&self) -> Result<BinaryMatroid> {
        Ok(self.cycle_matroid()?.dual())
    }

    /// Connected means: at most one component of vertices under links, and
    /// no loose edges (which belong to no vertex at all).
    pub fn is_connected(&self) -> bool {
        if self.edges.iter().any(|e| e.kind() == EdgeKind::Loose) {
            return false;
        }
        if self.vertices.len() <= 1 {
            return true;
        }
        let mut reached: BTreeSet<&str> =
            [self.vertices[0].as_str()].into_iter().collect();
        let mut frontier = vec![self.vertices[0].as_str()];
        while let Some(v) = frontier.pop() {
            for e in &self.edges {
                if let Ends::Link(a, b) = &e.ends {
                    let other = if a == v {
                        Some(b.as_str())
                    } else if b == v {
                        Some(a.as_str())
                    } else {
                        None
                    };
                    if let Some(o) = other {
                        if reached.insert(o) {
                            frontier.push(o);
                        }
                    }
                }
            }
        }
        reached.len() == self.vertices.len()
    }

    /// Proper 2-coloring over links, when one exists. Loops make a graph
    /// non-bipartite; half and loose edges are ignored. The first side holds
    /// the first vertex of each component.
    pub fn bipartition(&self) -> Option<(Vec<String>, Vec<String>)> {
        if self
            .edges
            .iter()
            .any(|e| matches!(e.ends, Ends::Loop(_)))
        {
            return None;
        }
        let mut color: BTreeMap<&str, bool> = BTreeMap::new();
        for start in &self.vertices {
            if color.contains_key(start.as_str()) {
                continue;
            }
            color.insert(start, false);
            let mut frontier = vec![start.as_str()];
            while let Some(v) = frontier.pop() {
                let cv = color[v];
                for e in &self.edges {
                    if let Ends::Link(a, b) = &e.ends {
                        let other = if a == v {
                            Some(b.as_str())
                        } else if b == v {
                            Some(a.as_str())
                        } else {
                            None
                        };
                        if let Some(o) = other {
                            match color.get(o) {
                                Some(&co) if co == cv => return None,
                                Some(_) => {}
                                None => {
                                    color.insert(o, !cv);
                                    frontier.push(o);
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut v1 = Vec::new();
        let mut v2 = Vec::new();
        for v in &self.vertices {
            if color[v.as_str()] {
                v2.push(v.clone());
            } else {
                v1.push(v.clone());
            }
        }
        v1.sort();
        v2.sort();
        Some((v1, v2))
    }

    /// Reads the line-oriented edge list format: per line an optional
    /// `label:` prefix, then `link u v`, `loop v`, `half v` or `loose`.
    /// Unlabelled edges are named `e1`, `e2`, ... by position. Lines
    /// starting with `#` are comments.
    pub fn parse(text: &str) -> Result<Multigraph> {
        let mut g = Multigraph::new();
        let mut auto = 0usize;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Parse {
                line: lineno + 1,
                msg,
            };
            let mut tokens: Vec<&str> = line.split_whitespace().collect();
            let label = if tokens[0].ends_with(':') {
                let l = tokens[0].trim_end_matches(':').to_owned();
                if l.is_empty() {
                    return Err(err("empty edge label".into()));
                }
                tokens.remove(0);
                l
            } else {
                auto += 1;
                format!("e{auto}")
            };
            let added = match tokens.as_slice() {
                ["link", u, v] => g.add_link(&label, u, v),
                ["loop", v] => g.add_loop(&label, v),
                ["half", v] => g.add_half(&label, v),
                ["loose"] => g.add_loose(&label),
                _ => {
                    return Err(err(format!(
                        "expected `link u v`, `loop v`, `half v` or `loose`, got `{line}`"
                    )))
                }
            };
            added.map_err(|e| err(e.to_string()))?;
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            let line = match &e.ends {
                Ends::Link(u, v) => format!("{}: link {} {}", e.label, u, v),
                Ends::Loop(v) => format!("{}: loop {}", e.label, v),
                Ends::Half(v) => format!("{}: half {}", e.label, v),
                Ends::Loose => format!("{}: loose", e.label),
            };
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}
