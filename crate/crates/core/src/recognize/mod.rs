//! Decision procedures: graphicness of binary matroids, cocircuit audits,
//! decomposition into 3-connected pieces along 1- and 2-separations, graph
//! realization of graphic matroids, matching against the bad families, and
//! the end-to-end recognition routine for cographic matroids with graphic
//! cocircuits.

use serde::{Deserialize, Serialize};

use crate::catalog::{self, FamilyTag};
use crate::graph::Multigraph;
use crate::matroid::{
    has_minor, k_separations, mask_indices, minimal_sets, BinaryMatroid,
    MinorWitness,
};
use crate::{Error, Result};

/// Why a matroid is not graphic: one of the four excluded minors together
/// with the contraction/deletion sets exhibiting it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub minor: String,
    pub witness: MinorWitness,
}

fn graphicness_targets() -> Vec<(String, BinaryMatroid)> {
    vec![
        ("F7".into(), catalog::fano()),
        ("F7*".into(), catalog::fano().dual()),
        (
            "M*(K33)".into(),
            catalog::complete_bipartite(3, 3)
                .bond_matroid()
                .expect("links only"),
        ),
        (
            "M*(K5)".into(),
            catalog::complete_graph(5).bond_matroid().expect("links only"),
        ),
    ]
}

/// Finds an excluded minor for graphicness, or `None` when `m` is graphic.
/// A binary matroid is graphic exactly when it has no minor isomorphic to
/// `F7`, `F7*`, `M*(K5)` or `M*(K33)`.
pub fn graphic_obstruction(
    m: &BinaryMatroid,
    bound: usize,
) -> Result<Option<Obstruction>> {
    for (name, target) in graphicness_targets() {
        if let Some(witness) = has_minor(m, &target, bound)? {
            return Ok(Some(Obstruction {
                minor: name,
                witness,
            }));
        }
    }
    Ok(None)
}

/// A verified realization of every connected component. [`realize_graph`]
/// checks its own output, so success here settles graphicness positively
/// without a minor search, which would otherwise exhaust all four target
/// shapes exactly on the graphic inputs.
fn realization_certificate(m: &BinaryMatroid, bound: usize) -> bool {
    let comps = match component_masks(m, bound) {
        Ok(c) => c,
        Err(_) => return false,
    };
    if comps.len() <= 1 {
        return realize_graph(m, bound).is_ok();
    }
    comps.iter().all(|&mask| {
        let drop: Vec<String> = m
            .elements()
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 0)
            .map(|(_, l)| l.clone())
            .collect();
        m.delete(&drop).and_then(|c| realize_graph(&c, bound)).is_ok()
    })
}

pub fn is_graphic(m: &BinaryMatroid, bound: usize) -> Result<bool> {
    if realization_certificate(m, bound) {
        return Ok(true);
    }
    Ok(graphic_obstruction(m, bound)?.is_none())
}

/// A cocircuit whose deletion is not graphic, with the obstruction found in
/// the deletion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocircuitFailure {
    pub cocircuit: Vec<String>,
    pub obstruction: Obstruction,
}

/// Deletes every cocircuit in canonical order and reports the first one
/// whose deletion fails to be graphic, or `None` when all pass.
pub fn cocircuit_audit(
    m: &BinaryMatroid,
    bound: usize,
) -> Result<Option<CocircuitFailure>> {
    for cocircuit in m.cocircuits(bound)? {
        let rest = m.delete(&cocircuit)?;
        if realization_certificate(&rest, bound) {
            continue;
        }
        if let Some(obstruction) = graphic_obstruction(&rest, bound)? {
            return Ok(Some(CocircuitFailure {
                cocircuit,
                obstruction,
            }));
        }
    }
    Ok(None)
}

/// One line of the full audit: a cocircuit and the obstruction its deletion
/// has, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub cocircuit: Vec<String>,
    pub obstruction: Option<Obstruction>,
}

/// Like [`cocircuit_audit`] but exhaustive: one entry per cocircuit in
/// canonical order, each with the graphicness verdict of its deletion.
pub fn cocircuit_ledger(
    m: &BinaryMatroid,
    bound: usize,
) -> Result<Vec<LedgerEntry>> {
    let mut out = Vec::new();
    for cocircuit in m.cocircuits(bound)? {
        let rest = m.delete(&cocircuit)?;
        let obstruction = if realization_certificate(&rest, bound) {
            None
        } else {
            graphic_obstruction(&rest, bound)?
        };
        out.push(LedgerEntry {
            obstruction,
            cocircuit,
        });
    }
    Ok(out)
}

/// Ground-set masks of the connected components: elements sharing a circuit
/// are merged, everything else (coloops) stays alone. Ordered by smallest
/// element.
fn component_masks(m: &BinaryMatroid, bound: usize) -> Result<Vec<u64>> {
    let n = m.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for c in m.circuit_masks(bound)? {
        let first = c.trailing_zeros() as usize;
        for i in mask_indices(c) {
            let (a, b) = (find(&mut parent, first), find(&mut parent, i));
            parent[a] = b;
        }
    }
    let mut out: Vec<u64> = Vec::new();
    let mut root_of: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        match root_of[r] {
            Some(slot) => out[slot] |= 1 << i,
            None => {
                root_of[r] = Some(out.len());
                out.push(1 << i);
            }
        }
    }
    Ok(out)
}

/// The connected components as matroids, ordered by smallest element.
pub fn components(
    m: &BinaryMatroid,
    bound: usize,
) -> Result<Vec<BinaryMatroid>> {
    let full = if m.len() == 64 {
        u64::MAX
    } else {
        (1u64 << m.len()) - 1
    };
    Ok(component_masks(m, bound)?
        .into_iter()
        .map(|mask| m.delete_mask(full & !mask))
        .collect())
}

/// One side of an exact 2-separation, with the basepoint appended. The
/// circuits are those of `m` inside the side plus the minimal crossing parts
/// closed off through the basepoint.
fn two_sum_part(
    m: &BinaryMatroid,
    side: &[String],
    crossing_parts: &[u64],
    basepoint: &str,
    bound: usize,
) -> Result<BinaryMatroid> {
    let side_mask = m.mask_of(side)?;
    let mut pos = vec![usize::MAX; m.len()];
    for (i, l) in side.iter().enumerate() {
        pos[m.position(l)?] = i;
    }
    let repack = |mask: u64| -> u64 {
        mask_indices(mask).into_iter().map(|i| 1u64 << pos[i]).sum()
    };
    let basepoint_bit = 1u64 << side.len();
    let mut family: Vec<u64> = Vec::new();
    for c in m.circuit_masks(bound)? {
        if c & !side_mask == 0 {
            family.push(repack(c));
        }
    }
    for &part in crossing_parts {
        family.push(repack(part) | basepoint_bit);
    }
    let mut labels = side.to_vec();
    labels.push(basepoint.to_owned());
    crate::matroid::binary_from_circuits(labels, &family)
}

/// Splits a connected matroid at its first 2-separation, labelling the new
/// shared element `basepoint`.
fn split_once(
    m: &BinaryMatroid,
    basepoint: &str,
    bound: usize,
) -> Result<Option<(BinaryMatroid, BinaryMatroid)>> {
    let seps = k_separations(m, 2, bound)?;
    let Some(sep) = seps.first() else {
        return Ok(None);
    };
    let x_mask = m.mask_of(&sep.x)?;
    let circuits = m.circuit_masks(bound)?;
    let mut x_parts: Vec<u64> = Vec::new();
    let mut y_parts: Vec<u64> = Vec::new();
    for &c in &circuits {
        let cx = c & x_mask;
        let cy = c & !x_mask;
        if cx != 0 && cy != 0 {
            x_parts.push(cx);
            y_parts.push(cy);
        }
    }
    let x_parts = minimal_sets(x_parts);
    let y_parts = minimal_sets(y_parts);
    let left = two_sum_part(m, &sep.x, &x_parts, basepoint, bound)?;
    let right = two_sum_part(m, &sep.y, &y_parts, basepoint, bound)?;
    Ok(Some((left, right)))
}

/// Decomposes into 3-connected pieces along 1- and 2-separations. Pieces
/// keep the original labels; each 2-sum introduces a fresh shared element
/// `~sum0`, `~sum1`, ... appearing in both parts.
pub fn decompose(
    m: &BinaryMatroid,
    bound: usize,
) -> Result<Vec<BinaryMatroid>> {
    let mut queue: std::collections::VecDeque<BinaryMatroid> =
        components(m, bound)?.into();
    let mut out = Vec::new();
    let mut counter = 0usize;
    while let Some(piece) = queue.pop_front() {
        match split_once(&piece, &format!("~sum{counter}"), bound)? {
            Some((left, right)) => {
                counter += 1;
                queue.push_back(left);
                queue.push_back(right);
            }
            None => out.push(piece),
        }
    }
    Ok(out)
}

/// Builds a graph whose cycle matroid equals `m` (same labels). Loops of
/// `m` become loop edges; the rest of the matroid must be connected. Fails
/// with [`Error::NotGraphic`] when no realization exists.
///
/// The search looks for `rank + 1` cocircuits covering every non-loop
/// element exactly twice; those are the vertex stars, and the cover being
/// exact forces the incidence rows to span the cocircuit space.
pub fn realize_graph(m: &BinaryMatroid, bound: usize) -> Result<Multigraph> {
    let loops = m.loop_elements();
    let core = m.delete(&loops)?;
    if core.len() > 1 && component_masks(&core, bound)?.len() > 1 {
        return Err(Error::Precondition(
            "graph realization needs a connected matroid".into(),
        ));
    }
    let n = core.len();
    let need = core.rank() + 1;
    let cocircuits =
        if n == 0 { Vec::new() } else { core.cocircuit_masks(bound)? };
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    struct Search<'a> {
        cocircuits: &'a [u64],
        need: usize,
        full: u64,
        chosen: Vec<usize>,
        once: u64,
        twice: u64,
    }
    impl Search<'_> {
        fn apply(&mut self, d: u64, i: usize) -> u64 {
            let was_once = self.once;
            self.twice |= d & was_once;
            self.once = (self.once | d) & !self.twice;
            self.chosen.push(i);
            was_once
        }

        fn undo(&mut self, d: u64, was_once: u64) {
            self.chosen.pop();
            self.twice &= !(d & was_once);
            self.once = was_once;
        }

        /// The chosen stars describe a graph; an exact cover realizes the
        /// matroid only when that graph is connected.
        fn cover_is_connected(&self) -> bool {
            fn find(parent: &mut [usize], mut i: usize) -> usize {
                while parent[i] != i {
                    parent[i] = parent[parent[i]];
                    i = parent[i];
                }
                i
            }
            let k = self.chosen.len();
            let mut parent: Vec<usize> = (0..k).collect();
            for pos in mask_indices(self.full) {
                let ends: Vec<usize> = (0..k)
                    .filter(|&v| {
                        self.cocircuits[self.chosen[v]] >> pos & 1 == 1
                    })
                    .collect();
                if let [a, b] = ends[..] {
                    let (ra, rb) =
                        (find(&mut parent, a), find(&mut parent, b));
                    parent[ra] = rb;
                }
            }
            let root = find(&mut parent, 0);
            (1..k).all(|i| find(&mut parent, i) == root)
        }

        /// Branches on the first element not yet covered twice. An uncovered
        /// element gets both of its stars at once as an unordered pair, so
        /// every exact cover is visited exactly once.
        fn run(&mut self) -> Option<Vec<usize>> {
            if self.twice == self.full {
                if self.chosen.len() == self.need && self.cover_is_connected()
                {
                    return Some(self.chosen.clone());
                }
                return None;
            }
            if self.chosen.len() >= self.need {
                return None;
            }
            let e = (!self.twice & self.full).trailing_zeros() as usize;
            if self.once >> e & 1 == 1 {
                for i in 0..self.cocircuits.len() {
                    let d = self.cocircuits[i];
                    if d >> e & 1 == 0 || d & self.twice != 0 {
                        continue;
                    }
                    let saved = self.apply(d, i);
                    if let Some(hit) = self.run() {
                        return Some(hit);
                    }
                    self.undo(d, saved);
                }
            } else {
                if self.chosen.len() + 2 > self.need {
                    return None;
                }
                for i in 0..self.cocircuits.len() {
                    let di = self.cocircuits[i];
                    if di >> e & 1 == 0 || di & self.twice != 0 {
                        continue;
                    }
                    let saved_i = self.apply(di, i);
                    for j in i..self.cocircuits.len() {
                        let dj = self.cocircuits[j];
                        if dj >> e & 1 == 0 || dj & self.twice != 0 {
                            continue;
                        }
                        let saved_j = self.apply(dj, j);
                        if let Some(hit) = self.run() {
                            return Some(hit);
                        }
                        self.undo(dj, saved_j);
                    }
                    self.undo(di, saved_i);
                }
            }
            None
        }
    }

    let stars = if n == 0 {
        Vec::new()
    } else {
        let mut search = Search {
            cocircuits: &cocircuits,
            need,
            full,
            chosen: Vec::new(),
            once: 0,
            twice: 0,
        };
        search.run().ok_or(Error::NotGraphic)?
    };

    let mut g = Multigraph::new();
    for v in 1..=need {
        g.add_vertex(&format!("u{v}"))?;
    }
    let loop_set: std::collections::BTreeSet<&String> = loops.iter().collect();
    for label in m.elements() {
        if loop_set.contains(label) {
            g.add_loop(label, "u1")?;
            continue;
        }
        let pos = core.position(label)?;
        let ends: Vec<usize> = stars
            .iter()
            .enumerate()
            .filter(|&(_, &ci)| cocircuits[ci] >> pos & 1 == 1)
            .map(|(v, _)| v + 1)
            .collect();
        if ends.len() != 2 {
            return Err(Error::NotGraphic);
        }
        g.add_link(label, &format!("u{}", ends[0]), &format!("u{}", ends[1]))?;
    }
    let check = g.cycle_matroid()?;
    if check != *m {
        return Err(Error::NotGraphic);
    }
    Ok(g)
}

/// Matches a graph against the two bad families: `K3,n` with up to three
/// extra edges on the three-vertex side (n at least 5), and `K4,4` possibly
/// minus one edge.
pub fn family_membership(g: &Multigraph) -> Option<FamilyTag> {
    use crate::graph::graph_iso;
    if g.edges().iter().any(|e| e.kind() != crate::EdgeKind::Link) {
        return None;
    }
    if !g.is_connected() {
        return None;
    }
    if g.vertices().len() == 8 {
        if graph_iso(g, &catalog::complete_bipartite(4, 4)).is_some() {
            return Some(FamilyTag::K44);
        }
        if graph_iso(g, &catalog::k44_minus_e()).is_some() {
            return Some(FamilyTag::K44MinusEdge);
        }
    }
    // K3,n family: n vertices of degree 3, all adjacent to the same three
    // vertices, which carry 0..=3 edges among themselves.
    let b: Vec<&String> =
        g.vertices().iter().filter(|v| g.degree(v) == 3).collect();
    let a: Vec<&String> =
        g.vertices().iter().filter(|v| g.degree(v) != 3).collect();
    let n = b.len();
    if n < 5 || a.len() != 3 {
        return None;
    }
    for v in &b {
        let nb = g.neighbors(v);
        if nb.len() != 3 || !a.iter().all(|x| nb.contains(x)) {
            return None;
        }
    }
    let mut extra = 0usize;
    for i in 0..3 {
        for j in i + 1..3 {
            match g.links_between(a[i], a[j]) {
                0 => {}
                1 => extra += 1,
                _ => return None,
            }
        }
    }
    if g.edges().len() != 3 * n + extra {
        return None;
    }
    Some(FamilyTag::K3n { n, extra })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decision {
    SignedGraphic,
    NotSignedGraphic,
}

impl std::fmt::Display for Decision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Decision::SignedGraphic => "signed-graphic",
            Decision::NotSignedGraphic => "not signed-graphic",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceReport {
    /// Ground set of the piece, including any `~sum*` basepoints.
    pub elements: Vec<String>,
    /// Graph realizing the dual of the piece, in text form.
    pub graph: String,
    pub family: Option<FamilyTag>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognitionReport {
    pub elements: usize,
    pub rank: usize,
    pub decision: Decision,
    pub pieces: Vec<PieceReport>,
}

#[derive(Clone, Copy, Debug)]
pub struct RecognizeOptions {
    pub bound: usize,
    /// Verify that the input is cographic with graphic cocircuits before
    /// deciding. Off by default; the audit multiplies the running time.
    pub check_preconditions: bool,
}

impl Default for RecognizeOptions {
    fn default() -> Self {
        RecognizeOptions {
            bound: crate::DEFAULT_ELEMENT_BOUND,
            check_preconditions: false,
        }
    }
}

/// Decides whether a cographic matroid with graphic cocircuits is
/// signed-graphic: decompose into 3-connected pieces, realize each dual as a
/// graph, and look for a member of the bad families.
pub fn recognize_cographic(
    m: &BinaryMatroid,
    opts: &RecognizeOptions,
) -> Result<RecognitionReport> {
    if opts.check_preconditions {
        let dual = m.dual();
        if !realization_certificate(&dual, opts.bound) {
            if let Some(obs) = graphic_obstruction(&dual, opts.bound)? {
                return Err(Error::Precondition(format!(
                    "input is not cographic: dual has an {} minor",
                    obs.minor
                )));
            }
        }
        if let Some(fail) = cocircuit_audit(m, opts.bound)? {
            return Err(Error::Precondition(format!(
                "cocircuit {:?} deletes to a non-graphic matroid ({} minor)",
                fail.cocircuit, fail.obstruction.minor
            )));
        }
    }
    let mut pieces = Vec::new();
    let mut decision = Decision::SignedGraphic;
    for piece in decompose(m, opts.bound)? {
        let h = realize_graph(&piece.dual(), opts.bound).map_err(|e| {
            match e {
                Error::NotGraphic => Error::Precondition(
                    "input is not cographic: a 3-connected piece has a non-graphic dual"
                        .into(),
                ),
                other => other,
            }
        })?;
        let family = family_membership(&h);
        if family.is_some() {
            decision = Decision::NotSignedGraphic;
        }
        pieces.push(PieceReport {
            elements: piece.elements().to_vec(),
            graph: h.to_text(),
            family,
        });
    }
    Ok(RecognitionReport {
        elements: m.len(),
        rank: m.rank(),
        decision,
        pieces,
    })
}
