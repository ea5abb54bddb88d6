//! Signed graphs and their matroids. A signed graph is a multigraph with a
//! sign on every edge; half edges are forced negative and loose edges forced
//! positive. The matroid circuits come in three shapes: positive circles,
//! pairs of negative cycles meeting in exactly one vertex, and pairs of
//! vertex-disjoint negative cycles joined by a path. A half edge counts as a
//! negative cycle on its end-vertex; loose edges lie on no cycle at all and
//! end up as coloops.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::graph::{circles, Ends, Multigraph};
use crate::matroid::{mask_cmp, minimal_sets, CircuitMatroid};
use crate::{EdgeKind, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Sign an edge of the given kind is allowed to carry, if constrained.
fn forced_sign(kind: EdgeKind) -> Option<Sign> {
    match kind {
        EdgeKind::Half => Some(Sign::Minus),
        EdgeKind::Loose => Some(Sign::Plus),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedGraph {
    graph: Multigraph,
    signs: BTreeMap<String, Sign>,
}

impl SignedGraph {
    /// Wraps a multigraph with the default signature: links and loops
    /// positive, half edges negative, loose edges positive.
    pub fn new(graph: Multigraph) -> SignedGraph {
        let signs = graph
            .edges()
            .iter()
            .map(|e| {
                let s = forced_sign(e.kind()).unwrap_or(Sign::Plus);
                (e.label.clone(), s)
            })
            .collect();
        SignedGraph { graph, signs }
    }

    pub fn with_signs(
        graph: Multigraph,
        signs: &[(String, Sign)],
    ) -> Result<SignedGraph> {
        let mut out = SignedGraph::new(graph);
        for (label, sign) in signs {
            out.set_sign(label, *sign)?;
        }
        Ok(out)
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn sign(&self, label: &str) -> Result<Sign> {
        self.signs
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(label.to_owned()))
    }

    pub fn set_sign(&mut self, label: &str, sign: Sign) -> Result<()> {
        let kind = self.graph.edge(label)?.kind();
        if let Some(forced) = forced_sign(kind) {
            if sign != forced {
                return Err(Error::SignConflict(format!(
                    "a {kind} edge is always {forced}, cannot sign `{label}` {sign}"
                )));
            }
        }
        self.signs.insert(label.to_owned(), sign);
        Ok(())
    }

    /// Product of the signs over a set of edges.
    pub fn edge_set_sign(&self, labels: &[String]) -> Result<Sign> {
        let mut s = Sign::Plus;
        for l in labels {
            if self.sign(l)? == Sign::Minus {
                s = s.flip();
            }
        }
        Ok(s)
    }

    fn sign_of_mask(&self, mask: u64) -> Sign {
        let mut s = Sign::Plus;
        for (i, e) in self.graph.edges().iter().enumerate() {
            if mask >> i & 1 == 1 && self.signs[&e.label] == Sign::Minus {
                s = s.flip();
            }
        }
        s
    }

    fn mask_of(&self, labels: &[String]) -> Result<u64> {
        let mut mask = 0u64;
        for l in labels {
            let i = self
                .graph
                .edges()
                .iter()
                .position(|e| &e.label == l)
                .ok_or_else(|| Error::UnknownEdge(l.clone()))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }

    fn labels_of(&self, mask: u64) -> Vec<String> {
        (0..self.graph.edges().len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| self.graph.edges()[i].label.clone())
            .collect()
    }

    /// Vertices touched by the edges of `mask`, as indices into the vertex
    /// list.
    fn vertex_set(&self, mask: u64) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for (i, e) in self.graph.edges().iter().enumerate() {
            if mask >> i & 1 == 1 {
                for v in e.endpoints() {
                    let vi = self
                        .graph
                        .vertices()
                        .iter()
                        .position(|x| x == v)
                        .expect("edge endpoints are vertices");
                    out.insert(vi);
                }
            }
        }
        out
    }

    /// The negative cycles: negative circles plus one singleton per half
    /// edge, in canonical (size, then index sequence) order.
    pub fn negative_cycles(&self, bound: usize) -> Result<Vec<Vec<String>>> {
        Ok(self
            .negative_cycle_masks(bound)?
            .into_iter()
            .map(|m| self.labels_of(m))
            .collect())
    }

    fn negative_cycle_masks(&self, bound: usize) -> Result<Vec<u64>> {
        let mut masks: Vec<u64> = Vec::new();
        for c in circles(&self.graph, bound)? {
            let m = self.mask_of(&c)?;
            if self.sign_of_mask(m) == Sign::Minus {
                masks.push(m);
            }
        }
        for (i, e) in self.graph.edges().iter().enumerate() {
            if e.kind() == EdgeKind::Half {
                masks.push(1 << i);
            }
        }
        masks.sort_by(|&a, &b| mask_cmp(a, b));
        Ok(masks)
    }

    pub fn positive_circles(&self, bound: usize) -> Result<Vec<Vec<String>>> {
        let mut out = Vec::new();
        for c in circles(&self.graph, bound)? {
            if self.edge_set_sign(&c)? == Sign::Plus {
                out.push(c);
            }
        }
        Ok(out)
    }

    pub fn is_balanced(&self, bound: usize) -> Result<bool> {
        Ok(self.negative_cycle_masks(bound)?.is_empty())
    }

    /// All circuits of the signed-graphic matroid, minimal and in canonical
    /// order: positive circles, unions of two negative cycles sharing exactly
    /// one vertex, and unions of two vertex-disjoint negative cycles with a
    /// connecting path.
    pub fn circuits(&self, bound: usize) -> Result<Vec<Vec<String>>> {
        Ok(self
            .circuit_masks(bound)?
            .into_iter()
            .map(|m| self.labels_of(m))
            .collect())
    }

    fn circuit_masks(&self, bound: usize) -> Result<Vec<u64>> {
        let mut candidates: Vec<u64> = Vec::new();
        for c in circles(&self.graph, bound)? {
            let m = self.mask_of(&c)?;
            if self.sign_of_mask(m) == Sign::Plus {
                candidates.push(m);
            }
        }
        let neg = self.negative_cycle_masks(bound)?;
        let verts: Vec<BTreeSet<usize>> =
            neg.iter().map(|&m| self.vertex_set(m)).collect();
        for i in 0..neg.len() {
            for j in i + 1..neg.len() {
                if neg[i] & neg[j] != 0 {
                    continue;
                }
                let common = verts[i].intersection(&verts[j]).count();
                match common {
                    1 => candidates.push(neg[i] | neg[j]),
                    0 => {
                        for path in
                            self.connecting_paths(&verts[i], &verts[j])
                        {
                            candidates.push(neg[i] | neg[j] | path);
                        }
                    }
                    _ => {}
                }
            }
        }
        Ok(minimal_sets(candidates))
    }

    /// Edge masks of the paths from `va` to `vb` whose inner vertices avoid
    /// both sets. Paths consist of links only.
    fn connecting_paths(
        &self,
        va: &BTreeSet<usize>,
        vb: &BTreeSet<usize>,
    ) -> Vec<u64> {
        let vs = self.graph.vertices();
        let links: Vec<(usize, usize, usize)> = self
            .graph
            .edges()
            .iter()
            .enumerate()
            .filter_map(|(i, e)| match &e.ends {
                Ends::Link(u, v) => {
                    let ui = vs.iter().position(|x| x == u).unwrap();
                    let vi = vs.iter().position(|x| x == v).unwrap();
                    Some((i, ui, vi))
                }
                _ => None,
            })
            .collect();
        let mut out = Vec::new();
        let mut stack: Vec<(usize, u64, u64)> = va
            .iter()
            .map(|&s| (s, 0u64, 1u64 << s))
            .collect();
        while let Some((cur, mask, visited)) = stack.pop() {
            for &(e, u, v) in &links {
                if mask >> e & 1 == 1 {
                    continue;
                }
                let next = if u == cur {
                    v
                } else if v == cur {
                    u
                } else {
                    continue;
                };
                if vb.contains(&next) {
                    out.push(mask | 1 << e);
                } else if !va.contains(&next) && visited >> next & 1 == 0 {
                    stack.push((next, mask | 1 << e, visited | 1 << next));
                }
            }
        }
        out
    }

    /// The signed-graphic matroid, with the circuit axioms checked.
    pub fn matroid(&self, bound: usize) -> Result<CircuitMatroid> {
        let labels = self.graph.edge_labels();
        let m = CircuitMatroid::from_masks(labels, self.circuit_masks(bound)?);
        m.verify_axioms()?;
        Ok(m)
    }

    /// Same line format as unsigned multigraphs with an optional trailing
    /// sign token (`+`, `-`, or the minus sign); unsigned lines take the
    /// default for their kind.
    pub fn parse(text: &str) -> Result<SignedGraph> {
        let mut stripped = String::new();
        let mut line_signs: Vec<(usize, Option<Sign>)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                stripped.push_str(raw);
                stripped.push('\n');
                continue;
            }
            let mut tokens: Vec<&str> = line.split_whitespace().collect();
            let sign = match tokens.last().copied() {
                Some("+") => Some(Sign::Plus),
                Some("-") | Some("\u{2212}") => Some(Sign::Minus),
                _ => None,
            };
            if sign.is_some() {
                tokens.pop();
            }
            line_signs.push((lineno + 1, sign));
            stripped.push_str(&tokens.join(" "));
            stripped.push('\n');
        }
        let graph = Multigraph::parse(&stripped)?;
        let mut out = SignedGraph::new(graph);
        for (k, (lineno, sign)) in line_signs.into_iter().enumerate() {
            if let Some(s) = sign {
                let label = out.graph.edges()[k].label.clone();
                out.set_sign(&label, s).map_err(|e| Error::Parse {
                    line: lineno,
                    msg: e.to_string(),
                })?;
            }
        }
        Ok(out)
    }

    /// Text form with an explicit ASCII sign on every edge line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (line, e) in self
            .graph
            .to_text()
            .lines()
            .zip(self.graph.edges().iter())
        {
            out.push_str(line);
            out.push(' ');
            out.push_str(&self.signs[&e.label].to_string());
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests;
