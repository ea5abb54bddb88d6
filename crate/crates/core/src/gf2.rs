//! Dense GF(2) matrices with bit-packed rows.
//!
//! Rows are stored as `u64` words so elimination works a word at a time.
//! The text format is `<rows> <cols>` on the first line followed by one
//! `0`/`1` string per row; an optional `#labels a b c ...` line may precede
//! the dimensions to name columns left to right.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

const WORD_BITS: usize = 64;

/// A rows-by-cols matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    /// All-zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(WORD_BITS).max(1);
        Gf2Matrix {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    /// The n-by-n identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Gf2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from dense 0/1 rows. Every row must have equal length.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        for r in rows {
            if r.len() != cols {
                return Err(Error::InvalidParameter(
                    "rows of unequal length".into(),
                ));
            }
        }
        let mut m = Gf2Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                if v > 1 {
                    return Err(Error::InvalidParameter(format!(
                        "entry {v} is not a bit"
                    )));
                }
                m.set(i, j, v == 1);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        let w = self.data[r * self.words_per_row + c / WORD_BITS];
        (w >> (c % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let idx = r * self.words_per_row + c / WORD_BITS;
        let bit = 1u64 << (c % WORD_BITS);
        if v {
            self.data[idx] |= bit;
        } else {
            self.data[idx] &= !bit;
        }
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let w = self.words_per_row;
        let (a, b) = (src * w, dst * w);
        for k in 0..w {
            self.data[b + k] ^= self.data[a + k];
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words_per_row;
        for k in 0..w {
            self.data.swap(a * w + k, b * w + k);
        }
    }

    /// Row rank by Gaussian elimination on a copy.
    pub fn rank(&self) -> usize {
        self.clone().eliminate().1.len()
    }

    /// Reduced row echelon form and the list of pivot columns.
    ///
    /// Zero rows are kept, so the shape is unchanged and the row space is
    /// preserved.
    pub fn rref(&self) -> (Gf2Matrix, Vec<usize>) {
        self.clone().eliminate()
    }

    fn eliminate(mut self) -> (Gf2Matrix, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..self.cols {
            let Some(pivot_row) =
                (next_row..self.rows).find(|&r| self.get(r, col))
            else {
                continue;
            };
            self.swap_rows(pivot_row, next_row);
            for r in 0..self.rows {
                if r != next_row && self.get(r, col) {
                    self.xor_row_into(next_row, r);
                }
            }
            pivots.push(col);
            next_row += 1;
            if next_row == self.rows {
                break;
            }
        }
        (self, pivots)
    }

    /// Copy with zero rows removed; the row space is unchanged.
    pub fn drop_zero_rows(&self) -> Gf2Matrix {
        let keep: Vec<usize> = (0..self.rows)
            .filter(|&r| {
                let w = self.words_per_row;
                self.data[r * w..(r + 1) * w].iter().any(|&x| x != 0)
            })
            .collect();
        let mut out = Gf2Matrix::zeros(keep.len(), self.cols);
        for (i, &r) in keep.iter().enumerate() {
            let w = self.words_per_row;
            out.data[i * w..(i + 1) * w]
                .copy_from_slice(&self.data[r * w..(r + 1) * w]);
        }
        out
    }

    /// Brings the matrix to `[I | D]` by row operations plus a column
    /// permutation, which is returned alongside.
    ///
    /// `perm[i]` is the input column placed at output position `i`, so the
    /// output column `i` equals the reduced input column `perm[i]`. Requires
    /// full row rank.
    pub fn standard_form(&self) -> Result<(Gf2Matrix, Vec<usize>)> {
        let (reduced, pivots) = self.rref();
        if pivots.len() < self.rows {
            return Err(Error::RankDeficient {
                rank: pivots.len(),
                rows: self.rows,
            });
        }
        let mut perm = pivots.clone();
        perm.extend((0..self.cols).filter(|c| !pivots.contains(c)));
        let mut out = Gf2Matrix::zeros(self.rows, self.cols);
        for (i, &c) in perm.iter().enumerate() {
            for r in 0..self.rows {
                out.set(r, i, reduced.get(r, c));
            }
        }
        Ok((out, perm))
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut out = Gf2Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    out.set(c, r, true);
                }
            }
        }
        out
    }

    /// Column `c` packed into a word, bit `r` set when entry `(r, c)` is one.
    /// Only valid while `rows <= 64`.
    pub fn column_word(&self, c: usize) -> u64 {
        debug_assert!(self.rows <= 64);
        let mut w = 0u64;
        for r in 0..self.rows {
            if self.get(r, c) {
                w |= 1 << r;
            }
        }
        w
    }

    /// New matrix keeping the given columns in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Gf2Matrix {
        let mut out = Gf2Matrix::zeros(self.rows, cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for r in 0..self.rows {
                if self.get(r, c) {
                    out.set(r, j, true);
                }
            }
        }
        out
    }

    /// Parses the text format. Returns the matrix and the optional column
    /// labels from a leading `#labels` line.
    pub fn parse(text: &str) -> Result<(Gf2Matrix, Option<Vec<String>>)> {
        let mut labels = None;
        let mut lines = text.lines().enumerate().filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && (!t.starts_with('#') || t.starts_with("#labels"))
        });
        let (mut line_no, mut header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "empty matrix text".into(),
        })?;
        if let Some(rest) = header.trim().strip_prefix("#labels") {
            labels = Some(
                rest.split_whitespace().map(str::to_owned).collect::<Vec<_>>(),
            );
            (line_no, header) = lines.next().ok_or(Error::Parse {
                line: line_no + 1,
                msg: "missing dimension line".into(),
            })?;
        }
        let dims: Vec<&str> = header.split_whitespace().collect();
        let parse_dim = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no + 1,
                msg: format!("bad dimension `{s}`"),
            })
        };
        if dims.len() != 2 {
            return Err(Error::Parse {
                line: line_no + 1,
                msg: "expected `<rows> <cols>`".into(),
            });
        }
        let (rows, cols) = (parse_dim(dims[0])?, parse_dim(dims[1])?);
        if let Some(ref l) = labels {
            if l.len() != cols {
                return Err(Error::Parse {
                    line: 1,
                    msg: format!(
                        "{} labels for {} columns",
                        l.len(),
                        cols
                    ),
                });
            }
        }
        let mut m = Gf2Matrix::zeros(rows, cols);
        for r in 0..rows {
            let (ln, row) = lines.next().ok_or(Error::Parse {
                line: line_no + 1,
                msg: format!("expected {rows} rows"),
            })?;
            let row = row.trim();
            if row.chars().count() != cols {
                return Err(Error::Parse {
                    line: ln + 1,
                    msg: format!("row has {} entries, expected {cols}", row.chars().count()),
                });
            }
            for (c, ch) in row.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.set(r, c, true),
                    _ => {
                        return Err(Error::Parse {
                            line: ln + 1,
                            msg: format!("bad entry `{ch}`"),
                        })
                    }
                }
            }
        }
        if let Some((ln, l)) = lines.next() {
            return Err(Error::Parse {
                line: ln + 1,
                msg: format!("trailing content `{}`", l.trim()),
            });
        }
        Ok((m, labels))
    }

    /// Renders the text format, with a `#labels` line when labels are given.
    pub fn to_text(&self, labels: Option<&[String]>) -> String {
        let mut out = String::new();
        if let Some(l) = labels {
            out.push_str("#labels ");
            out.push_str(&l.join(" "));
            out.push('\n');
        }
        out.push_str(&format!("{} {}\n", self.rows, self.cols));
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.push(if self.get(r, c) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Matrix({}x{})\n{}", self.rows, self.cols, self.to_text(None))
    }
}

/// Rank of a family of column words by elimination over packed bits.
/// Used on hot paths where columns already live as `u64`s.
pub(crate) fn word_rank(columns: impl Iterator<Item = u64>) -> usize {
    let mut basis: [u64; 64] = [0; 64];
    let mut rank = 0;
    for mut v in columns {
        while v != 0 {
            let bit = v.trailing_zeros() as usize;
            if basis[bit] == 0 {
                basis[bit] = v;
                rank += 1;
                break;
            }
            v ^= basis[bit];
        }
    }
    rank
}
