//! Binary and circuit-presented matroids.
//!
//! A [`BinaryMatroid`] is a labelled GF(2) representation; the stored matrix
//! is kept in reduced row echelon form with zero rows dropped, which makes it
//! a canonical representative of its row space. Two binary matroids on the
//! same labels are equal as matroids exactly when these stored matrices are
//! equal. A [`CircuitMatroid`] carries an explicit circuit family instead and
//! is used for matroids that arrive without a representation, such as the
//! ones induced by signed graphs.
//!
//! Ground sets are capped at 64 elements so that element sets fit in a word;
//! the exhaustive searches take a much smaller explicit bound argument.

mod connectivity;
mod iso;
mod minor;

pub use connectivity::{connectivity, k_separations, Connectivity, Separation};
pub use iso::{is_isomorphic, is_isomorphic_circuits};
pub use minor::{apply_minor, has_minor, MinorWitness};

use std::collections::BTreeMap;

use crate::gf2::{word_rank, Gf2Matrix};
use crate::{Error, Result};

/// Greatest supported ground-set size; element sets are packed into `u64`.
pub const MAX_ELEMENTS: usize = 64;

/// Compares element masks by size, then by the ascending index sequence.
pub(crate) fn mask_cmp(a: u64, b: u64) -> std::cmp::Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| {
        let d = a ^ b;
        if d == 0 {
            std::cmp::Ordering::Equal
        } else if a & (d & d.wrapping_neg()) != 0 {
            // The first index where they differ belongs to `a`.
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    })
}

/// Iterates set-bit indices of a mask, ascending.
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

pub(crate) fn mask_indices(mask: u64) -> Vec<usize> {
    BitIter(mask).collect()
}

/// Keeps only the minimal sets of a family, deduplicated.
pub(crate) fn minimal_sets(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_by(|&a, &b| mask_cmp(a, b));
    masks.dedup();
    let mut out: Vec<u64> = Vec::new();
    'next: for m in masks {
        for &kept in &out {
            if m & kept == kept {
                continue 'next;
            }
        }
        out.push(m);
    }
    out
}

/// A matroid given by a GF(2) representation, one column per element.
/// Equality is matroid equality on identically labelled ground sets, thanks
/// to the canonical stored form.
#[derive(Clone)]
pub struct BinaryMatroid {
    labels: Vec<String>,
    rep: Gf2Matrix,
    cols: Vec<u64>,
}

impl PartialEq for BinaryMatroid {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.rep == other.rep
    }
}

impl Eq for BinaryMatroid {}

impl std::fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BinaryMatroid{:?}", self.labels)
    }
}

impl BinaryMatroid {
    /// Builds a matroid from column labels and a representation matrix.
    /// The matrix is normalized to reduced row echelon form internally.
    pub fn new(labels: Vec<String>, matrix: Gf2Matrix) -> Result<Self> {
        if labels.len() != matrix.cols() {
            return Err(Error::InvalidParameter(format!(
                "{} labels for a matrix with {} columns",
                labels.len(),
                matrix.cols()
            )));
        }
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::BoundExceeded {
                what: "ground set",
                size: labels.len(),
                limit: MAX_ELEMENTS,
            });
        }
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let rep = matrix.rref().0.drop_zero_rows();
        let cols = (0..rep.cols()).map(|c| rep.column_word(c)).collect();
        Ok(BinaryMatroid { labels, rep, cols })
    }

    /// Reads the matrix text format; a `#labels` line is required here since
    /// matroid elements must be named.
    pub fn from_text(text: &str) -> Result<Self> {
        let (matrix, labels) = Gf2Matrix::parse(text)?;
        let labels = labels.unwrap_or_else(|| {
            (1..=matrix.cols()).map(|i| format!("e{i}")).collect()
        });
        BinaryMatroid::new(labels, matrix)
    }

    pub fn to_text(&self) -> String {
        self.rep.to_text(Some(&self.labels))
    }

    pub fn elements(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// The stored (normalized) representation.
    pub fn rep(&self) -> &Gf2Matrix {
        &self.rep
    }

    pub(crate) fn column_words(&self) -> &[u64] {
        &self.cols
    }

    pub fn position(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    /// Packs a label set into an element mask.
    pub fn mask_of(&self, labels: &[String]) -> Result<u64> {
        let mut mask = 0u64;
        for l in labels {
            mask |= 1 << self.position(l)?;
        }
        Ok(mask)
    }

    pub fn labels_of(&self, mask: u64) -> Vec<String> {
        mask_indices(mask)
            .into_iter()
            .map(|i| self.labels[i].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rep.rows()
    }

    pub fn corank(&self) -> usize {
        self.len() - self.rank()
    }

    pub(crate) fn rank_mask(&self, mask: u64) -> usize {
        word_rank(BitIter(mask).map(|i| self.cols[i]))
    }

    /// Rank of the subset named by `labels`.
    pub fn rank_subset(&self, labels: &[String]) -> Result<usize> {
        Ok(self.rank_mask(self.mask_of(labels)?))
    }

    pub fn is_independent(&self, labels: &[String]) -> Result<bool> {
        let mask = self.mask_of(labels)?;
        Ok(self.rank_mask(mask) == mask.count_ones() as usize)
    }

    /// All circuits as element masks, sorted by size then index sequence.
    /// Subsets are enumerated by increasing size with supersets of known
    /// circuits pruned; circuit size never exceeds rank + 1.
    pub fn circuit_masks(&self, bound: usize) -> Result<Vec<u64>> {
        let n = self.len();
        if n > bound {
            return Err(Error::BoundExceeded {
                what: "ground set",
                size: n,
                limit: bound,
            });
        }
        Ok(circuit_masks_of_words(&self.cols, self.rank()))
    }

    /// All circuits as sorted label vectors.
    pub fn circuits(&self, bound: usize) -> Result<Vec<Vec<String>>> {
        Ok(self
            .circuit_masks(bound)?
            .into_iter()
            .map(|m| self.labels_of(m))
            .collect())
    }

    /// All cocircuits, computed as circuits of the dual.
    pub fn cocircuits(&self, bound: usize) -> Result<Vec<Vec<String>>> {
        self.dual().circuits(bound)
    }

    pub(crate) fn cocircuit_masks(&self, bound: usize) -> Result<Vec<u64>> {
        self.dual().circuit_masks(bound)
    }

    /// The dual matroid on the same labels: bring the representation to
    /// `[I | D]` by a column permutation, emit `[D^T | I]`, and permute back.
    pub fn dual(&self) -> BinaryMatroid {
        let r = self.rank();
        let n = self.len();
        let (_, pivots) = self.rep.rref();
        let nonpivots: Vec<usize> =
            (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut out = Gf2Matrix::zeros(n - r, n);
        for (j, &q) in nonpivots.iter().enumerate() {
            out.set(j, q, true);
            for (i, &p) in pivots.iter().enumerate() {
                if self.rep.get(i, q) {
                    out.set(j, p, true);
                }
            }
        }
        BinaryMatroid::new(self.labels.clone(), out)
            .expect("dual of a valid matroid is valid")
    }

    /// Deletion: remove the named columns.
    pub fn delete(&self, labels: &[String]) -> Result<BinaryMatroid> {
        let mask = self.mask_of(labels)?;
        Ok(self.delete_mask(mask))
    }

    pub(crate) fn delete_mask(&self, mask: u64) -> BinaryMatroid {
        let keep: Vec<usize> = (0..self.len())
            .filter(|i| mask >> i & 1 == 0)
            .collect();
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let rep = self.rep.select_columns(&keep);
        BinaryMatroid::new(labels, rep)
            .expect("deletion of a valid matroid is valid")
    }

    /// Contraction: project the remaining columns modulo the span of the
    /// removed ones.
    pub fn contract(&self, labels: &[String]) -> Result<BinaryMatroid> {
        let mask = self.mask_of(labels)?;
        Ok(self.contract_mask(mask))
    }

    pub(crate) fn contract_mask(&self, mask: u64) -> BinaryMatroid {
        let (kept, quotient) = contract_columns(&self.cols, mask);
        let labels: Vec<String> =
            kept.iter().map(|&i| self.labels[i].clone()).collect();
        let rows = self.rep.rows();
        let mut out = Gf2Matrix::zeros(rows, kept.len());
        for (j, &w) in quotient.iter().enumerate() {
            for r in 0..rows {
                if w >> r & 1 == 1 {
                    out.set(r, j, true);
                }
            }
        }
        BinaryMatroid::new(labels, out)
            .expect("contraction of a valid matroid is valid")
    }

    /// Elements whose column is zero.
    pub fn loop_elements(&self) -> Vec<String> {
        (0..self.len())
            .filter(|&i| self.cols[i] == 0)
            .map(|i| self.labels[i].clone())
            .collect()
    }

    pub fn is_loop(&self, label: &str) -> Result<bool> {
        Ok(self.cols[self.position(label)?] == 0)
    }

    pub fn is_coloop(&self, label: &str) -> Result<bool> {
        let i = self.position(label)?;
        let rest = word_rank(
            (0..self.len()).filter(|&j| j != i).map(|j| self.cols[j]),
        );
        Ok(rest < self.rank())
    }

    /// Direct (1-) sum: block-diagonal representation on disjoint labels.
    pub fn direct_sum(&self, other: &BinaryMatroid) -> Result<BinaryMatroid> {
        for l in other.elements() {
            if self.labels.contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let (r1, r2) = (self.rank(), other.rank());
        let (n1, n2) = (self.len(), other.len());
        let mut rep = Gf2Matrix::zeros(r1 + r2, n1 + n2);
        for r in 0..r1 {
            for c in 0..n1 {
                if self.rep.get(r, c) {
                    rep.set(r, c, true);
                }
            }
        }
        for r in 0..r2 {
            for c in 0..n2 {
                if other.rep.get(r, c) {
                    rep.set(r1 + r, n1 + c, true);
                }
            }
        }
        let labels = self
            .labels
            .iter()
            .chain(other.labels.iter())
            .cloned()
            .collect();
        BinaryMatroid::new(labels, rep)
    }

    /// 2-sum along basepoints `p` of `self` and `q` of `other`. The circuits
    /// of the result are those of either side avoiding its basepoint plus the
    /// joins `(C1 - p) u (C2 - q)`; the basepoints are absent from the result.
    pub fn two_sum(
        &self,
        other: &BinaryMatroid,
        p: &str,
        q: &str,
        bound: usize,
    ) -> Result<BinaryMatroid> {
        for l in other.elements() {
            if self.labels.contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        for (m, e) in [(self, p), (other, q)] {
            if m.is_loop(e)? || m.is_coloop(e)? {
                return Err(Error::BadBasepoint(e.to_owned()));
            }
        }
        let pi = self.position(p)?;
        let qi = other.position(q)?;
        let ca = self.circuit_masks(bound)?;
        let cb = other.circuit_masks(bound)?;

        // Joint ground set: self minus p, then other minus q.
        let mut labels: Vec<String> = Vec::new();
        let mut map_a = BTreeMap::new();
        let mut map_b = BTreeMap::new();
        for (i, l) in self.labels.iter().enumerate() {
            if i != pi {
                map_a.insert(i, labels.len());
                labels.push(l.clone());
            }
        }
        for (i, l) in other.labels.iter().enumerate() {
            if i != qi {
                map_b.insert(i, labels.len());
                labels.push(l.clone());
            }
        }
        let remap = |mask: u64, map: &BTreeMap<usize, usize>| -> u64 {
            mask_indices(mask).iter().map(|i| 1u64 << map[i]).sum()
        };
        let mut family: Vec<u64> = Vec::new();
        for &c in &ca {
            if c >> pi & 1 == 0 {
                family.push(remap(c, &map_a));
            }
        }
        for &c in &cb {
            if c >> qi & 1 == 0 {
                family.push(remap(c, &map_b));
            }
        }
        for &c1 in ca.iter().filter(|&&c| c >> pi & 1 == 1) {
            for &c2 in cb.iter().filter(|&&c| c >> qi & 1 == 1) {
                family.push(
                    remap(c1 & !(1 << pi), &map_a)
                        | remap(c2 & !(1 << qi), &map_b),
                );
            }
        }
        let family = minimal_sets(family);
        binary_from_circuits(labels, &family)
    }
}

/// Circuits of the matroid represented by raw column words, as masks sorted
/// by size then index sequence. Subsets are enumerated by increasing size
/// with supersets of already-found circuits pruned; no circuit can be larger
/// than `rank + 1`.
pub(crate) fn circuit_masks_of_words(cols: &[u64], rank: usize) -> Vec<u64> {
    let n = cols.len();
    let mut found: Vec<u64> = Vec::new();
    for size in 1..=n.min(rank + 1) {
        // Only strictly smaller circuits can be proper subsets.
        let smaller_end = found.len();
        for mask in combinations(n, size) {
            if found[..smaller_end].iter().any(|&c| mask & c == c) {
                continue;
            }
            if word_rank(BitIter(mask).map(|i| cols[i])) < size {
                found.push(mask);
            }
        }
    }
    found.sort_by(|&a, &b| mask_cmp(a, b));
    found
}

/// Quotient of column words by the span of the columns in `t_mask`.
/// Returns the kept column indices and the projected words.
pub(crate) fn contract_columns(
    cols: &[u64],
    t_mask: u64,
) -> (Vec<usize>, Vec<u64>) {
    let mut pivots: Vec<u64> = Vec::new();
    for i in mask_indices(t_mask) {
        let mut v = cols[i];
        for &pv in &pivots {
            if v & (pv & pv.wrapping_neg()) != 0 {
                v ^= pv;
            }
        }
        if v != 0 {
            pivots.push(v);
            // Keep pivot list reduced so each has a private low bit.
            pivots.sort_by_key(|p| p.trailing_zeros());
        }
    }
    let mut kept = Vec::new();
    let mut quotient = Vec::new();
    for (i, &c) in cols.iter().enumerate() {
        if t_mask >> i & 1 == 1 {
            continue;
        }
        let mut v = c;
        for &pv in &pivots {
            if v & (pv & pv.wrapping_neg()) != 0 {
                v ^= pv;
            }
        }
        kept.push(i);
        quotient.push(v);
    }
    (kept, quotient)
}

/// Lexicographic enumeration (by ascending index sequence) of all
/// `size`-element subsets of `0..n`, as masks.
pub(crate) fn combinations(n: usize, size: usize) -> Combinations {
    Combinations::new(n, size)
}

pub(crate) struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, size: usize) -> Self {
        Combinations {
            n,
            idx: (0..size).collect(),
            done: size > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let mask = self.idx.iter().map(|&i| 1u64 << i).sum();
        let k = self.idx.len();
        if k == 0 {
            self.done = true;
            return Some(mask);
        }
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] + 1 <= self.n - (k - i) {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(mask)
    }
}

/// A matroid presented by its circuit family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitMatroid {
    labels: Vec<String>,
    circuits: Vec<u64>,
}

impl CircuitMatroid {
    /// Builds the matroid; the family is normalized (sorted, deduplicated)
    /// but not checked against the axioms. Call [`CircuitMatroid::verify_axioms`]
    /// for that.
    pub fn new(labels: Vec<String>, circuits: &[Vec<String>]) -> Result<Self> {
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::BoundExceeded {
                what: "ground set",
                size: labels.len(),
                limit: MAX_ELEMENTS,
            });
        }
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut masks = Vec::new();
        for c in circuits {
            let mut mask = 0u64;
            for l in c {
                let i = labels
                    .iter()
                    .position(|x| x == l)
                    .ok_or_else(|| Error::UnknownLabel(l.clone()))?;
                mask |= 1 << i;
            }
            masks.push(mask);
        }
        masks.sort_by(|&a, &b| mask_cmp(a, b));
        masks.dedup();
        Ok(CircuitMatroid {
            labels,
            circuits: masks,
        })
    }

    pub(crate) fn from_masks(labels: Vec<String>, mut masks: Vec<u64>) -> Self {
        masks.sort_by(|&a, &b| mask_cmp(a, b));
        masks.dedup();
        CircuitMatroid {
            labels,
            circuits: masks,
        }
    }

    pub fn elements(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn circuit_masks(&self) -> &[u64] {
        &self.circuits
    }

    pub fn circuits(&self) -> Vec<Vec<String>> {
        self.circuits
            .iter()
            .map(|&m| {
                mask_indices(m)
                    .into_iter()
                    .map(|i| self.labels[i].clone())
                    .collect()
            })
            .collect()
    }

    pub fn mask_of(&self, labels: &[String]) -> Result<u64> {
        let mut mask = 0u64;
        for l in labels {
            let i = self
                .labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::UnknownLabel(l.clone()))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }

    /// A set is independent when it contains no circuit.
    pub fn is_independent(&self, labels: &[String]) -> Result<bool> {
        let mask = self.mask_of(labels)?;
        Ok(self.independent_mask(mask))
    }

    fn independent_mask(&self, mask: u64) -> bool {
        !self.circuits.iter().any(|&c| mask & c == c)
    }

    /// Rank by the greedy extension; valid for genuine matroids.
    pub fn rank(&self) -> usize {
        let mut cur = 0u64;
        for i in 0..self.labels.len() {
            let cand = cur | 1 << i;
            if self.independent_mask(cand) {
                cur = cand;
            }
        }
        cur.count_ones() as usize
    }

    /// Deletion: circuits avoiding the removed set.
    pub fn delete(&self, labels: &[String]) -> Result<CircuitMatroid> {
        let t = self.mask_of(labels)?;
        let kept: Vec<usize> = (0..self.labels.len())
            .filter(|i| t >> i & 1 == 0)
            .collect();
        let new_labels: Vec<String> =
            kept.iter().map(|&i| self.labels[i].clone()).collect();
        let masks = self
            .circuits
            .iter()
            .filter(|&&c| c & t == 0)
            .map(|&c| repack(c, &kept))
            .collect();
        Ok(CircuitMatroid::from_masks(new_labels, masks))
    }

    /// Contraction: minimal nonempty members of `{C - T}`.
    pub fn contract(&self, labels: &[String]) -> Result<CircuitMatroid> {
        let t = self.mask_of(labels)?;
        let kept: Vec<usize> = (0..self.labels.len())
            .filter(|i| t >> i & 1 == 0)
            .collect();
        let new_labels: Vec<String> =
            kept.iter().map(|&i| self.labels[i].clone()).collect();
        let stripped: Vec<u64> = self
            .circuits
            .iter()
            .map(|&c| c & !t)
            .filter(|&c| c != 0)
            .collect();
        let masks = minimal_sets(stripped)
            .into_iter()
            .map(|c| repack(c, &kept))
            .collect();
        Ok(CircuitMatroid::from_masks(new_labels, masks))
    }

    /// Checks the circuit axioms for the stored family.
    pub fn verify_axioms(&self) -> Result<()> {
        verify_axiom_masks(&self.circuits).map_err(|msg| {
            Error::AxiomViolation(format!(
                "{msg} (labels {:?})",
                self.labels
            ))
        })
    }
}

fn repack(mask: u64, kept: &[usize]) -> u64 {
    kept.iter()
        .enumerate()
        .filter(|&(_, &old)| mask >> old & 1 == 1)
        .map(|(new, _)| 1u64 << new)
        .sum()
}

/// Checks (I1) no empty circuit, (I2) no proper containments, and (I3) the
/// elimination axiom on a family of element masks.
pub(crate) fn verify_axiom_masks(
    circuits: &[u64],
) -> std::result::Result<(), String> {
    for (i, &c) in circuits.iter().enumerate() {
        if c == 0 {
            return Err("(I1) empty set listed as a circuit".into());
        }
        for &d in &circuits[i + 1..] {
            if c & d == c || c & d == d {
                return Err(format!(
                    "(I2) containment between circuits {:?} and {:?}",
                    mask_indices(c),
                    mask_indices(d)
                ));
            }
        }
    }
    for (i, &c1) in circuits.iter().enumerate() {
        for &c2 in &circuits[i + 1..] {
            let common = c1 & c2;
            if common == 0 {
                continue;
            }
            let union = c1 | c2;
            for e in mask_indices(common) {
                let allowed = union & !(1 << e);
                if !circuits.iter().any(|&c3| c3 & allowed == c3) {
                    return Err(format!(
                        "(I3) no circuit inside the union of {:?} and {:?} avoiding element {e}",
                        mask_indices(c1),
                        mask_indices(c2)
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Public wrapper: checks the circuit axioms for a family of label sets.
pub fn verify_axioms(family: &[Vec<String>]) -> Result<()> {
    let mut labels: Vec<String> = family.iter().flatten().cloned().collect();
    labels.sort();
    labels.dedup();
    let m = CircuitMatroid::new(labels, family)?;
    m.verify_axioms()
}

/// Rebuilds a binary representation from a circuit family: pick a greedy
/// basis, read each fundamental circuit as a column, then confirm that the
/// rebuilt matroid has exactly the given circuits. Fails loudly when the
/// family is not the circuit family of a binary matroid.
pub fn binary_from_circuits(
    labels: Vec<String>,
    circuits: &[u64],
) -> Result<BinaryMatroid> {
    let n = labels.len();
    let independent =
        |mask: u64| !circuits.iter().any(|&c| mask & c == c);
    let mut basis = 0u64;
    for i in 0..n {
        if independent(basis | 1 << i) {
            basis |= 1 << i;
        }
    }
    let basis_idx = mask_indices(basis);
    let r = basis_idx.len();
    let mut rep = Gf2Matrix::zeros(r, n);
    for (row, &b) in basis_idx.iter().enumerate() {
        rep.set(row, b, true);
    }
    for e in 0..n {
        if basis >> e & 1 == 1 {
            continue;
        }
        let inside = basis | 1 << e;
        let fundamental: Vec<u64> = circuits
            .iter()
            .copied()
            .filter(|&c| c & inside == c && c >> e & 1 == 1)
            .collect();
        if fundamental.len() != 1 {
            return Err(Error::AxiomViolation(format!(
                "element `{}` has {} fundamental circuits in the chosen basis",
                labels[e],
                fundamental.len()
            )));
        }
        let c = fundamental[0];
        for (row, &b) in basis_idx.iter().enumerate() {
            if c >> b & 1 == 1 {
                rep.set(row, e, true);
            }
        }
    }
    let m = BinaryMatroid::new(labels, rep)?;
    let rebuilt = m.circuit_masks(MAX_ELEMENTS.min(n.max(1)))?;
    let mut expected = circuits.to_vec();
    expected.sort_by(|&a, &b| mask_cmp(a, b));
    expected.dedup();
    if rebuilt != expected {
        return Err(Error::AxiomViolation(
            "circuit family is not binary-representable".into(),
        ));
    }
    Ok(m)
}

#[cfg(test)]
mod tests;
