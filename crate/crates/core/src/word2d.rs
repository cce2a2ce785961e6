//! Rectangular two-dimensional words and their algebra.
//!
//! A [`Word2D`] of size `(m, n)` is stored row-major. The empty word has
//! size `(0, 0)`; sizes `(m, 0)` and `(0, n)` with a positive other side are
//! not representable. Positions in documentation and error messages are
//! 1-based, matching the usual matrix convention.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A single grid symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Symbol(pub char);

impl Symbol {
    pub fn as_char(self) -> char {
        self.0
    }
}

impl From<char> for Symbol {
    fn from(c: char) -> Self {
        Symbol(c)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The `i`-th symbol of the consecutive alphabet `a, b, c, ...` (0-based).
pub fn nth_symbol(i: usize) -> Symbol {
    assert!(i < 26, "alphabets are limited to 26 consecutive letters");
    Symbol((b'a' + i as u8) as char)
}

/// Consecutive alphabet `{a, b, ...}` of size `q`.
pub fn alphabet(q: usize) -> Vec<Symbol> {
    (0..q).map(nth_symbol).collect()
}

/// Two-dimensional word.
///
/// Equality, ordering and hashing compare `(rows, cols, cells)` so that
/// words of different shapes never collide.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word2D {
    rows: usize,
    cols: usize,
    cells: Vec<Symbol>,
}

/// Axis along which a concatenation or factorisation acts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    /// Column concatenation, side by side.
    Cols,
    /// Row concatenation, stacked.
    Rows,
}

/// Center position along a single dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Locus {
    /// The center lies on this (1-based) index.
    Cell(usize),
    /// The center lies between these two (1-based) indices.
    Between(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CenterLocus {
    pub row: Locus,
    pub col: Locus,
}

impl Word2D {
    /// The empty word λ.
    pub fn empty() -> Self {
        Word2D {
            rows: 0,
            cols: 0,
            cells: Vec::new(),
        }
    }

    pub fn new(rows: usize, cols: usize, cells: Vec<Symbol>) -> Result<Self> {
        if (rows == 0) != (cols == 0) {
            return Err(Error::NotRectangular(format!(
                "size ({rows},{cols}) is not a valid word size"
            )));
        }
        if cells.len() != rows * cols {
            return Err(Error::NotRectangular(format!(
                "expected {} cells for size ({rows},{cols}), got {}",
                rows * cols,
                cells.len()
            )));
        }
        Ok(Word2D { rows, cols, cells })
    }

    /// Builds a word from its rows, each given as a string of symbols.
    pub fn from_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        if rows.is_empty() {
            return Ok(Word2D::empty());
        }
        let cols = rows[0].as_ref().chars().count();
        let mut cells = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let before = cells.len();
            cells.extend(row.as_ref().chars().map(Symbol));
            if cells.len() - before != cols {
                return Err(Error::NotRectangular(format!(
                    "row {} has {} symbols, expected {}",
                    i + 1,
                    cells.len() - before,
                    cols
                )));
            }
        }
        Word2D::new(rows.len(), cols, cells)
    }

    /// A single-row word.
    pub fn row(s: &str) -> Self {
        Word2D::from_rows(&[s]).expect("a single row is always rectangular")
    }

    /// A single-column word.
    pub fn column(symbols: &[Symbol]) -> Self {
        Word2D::new(
            symbols.len(),
            usize::from(!symbols.is_empty()),
            symbols.to_vec(),
        )
        .expect("a single column is always rectangular")
    }

    pub fn singleton(s: Symbol) -> Self {
        Word2D {
            rows: 1,
            cols: 1,
            cells: vec![s],
        }
    }

    /// Fills an `(m, n)` word from a function of 0-based coordinates.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Symbol) -> Self {
        if rows == 0 || cols == 0 {
            return Word2D::empty();
        }
        let mut cells = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                cells.push(f(i, j));
            }
        }
        Word2D { rows, cols, cells }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0
    }

    pub fn cells(&self) -> &[Symbol] {
        &self.cells
    }

    /// Cell at 0-based `(i, j)`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Symbol {
        self.cells[i * self.cols + j]
    }

    /// Row `i` (0-based) as a slice.
    pub fn row_slice(&self, i: usize) -> &[Symbol] {
        &self.cells[i * self.cols..(i + 1) * self.cols]
    }

    /// Column `j` (0-based), copied out.
    pub fn column_vec(&self, j: usize) -> Vec<Symbol> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row_strings(&self) -> Vec<String> {
        (0..self.rows)
            .map(|i| self.row_slice(i).iter().map(|s| s.0).collect())
            .collect()
    }

    /// `u ⊚ v`: places `other` to the right of `self`.
    pub fn col_concat(&self, other: &Word2D) -> Result<Word2D> {
        if self.is_empty() {
            return Ok(other.clone());
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        if self.rows != other.rows {
            return Err(Error::RowMismatch {
                left_rows: self.rows,
                right_rows: other.rows,
            });
        }
        let cols = self.cols + other.cols;
        let mut cells = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            cells.extend_from_slice(self.row_slice(i));
            cells.extend_from_slice(other.row_slice(i));
        }
        Ok(Word2D {
            rows: self.rows,
            cols,
            cells,
        })
    }

    /// `u ⊖ v`: stacks `other` below `self`.
    pub fn row_concat(&self, other: &Word2D) -> Result<Word2D> {
        if self.is_empty() {
            return Ok(other.clone());
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        if self.cols != other.cols {
            return Err(Error::ColumnMismatch {
                left_cols: self.cols,
                right_cols: other.cols,
            });
        }
        let mut cells = self.cells.clone();
        cells.extend_from_slice(&other.cells);
        Ok(Word2D {
            rows: self.rows + other.rows,
            cols: self.cols,
            cells,
        })
    }

    pub fn concat(&self, other: &Word2D, axis: Axis) -> Result<Word2D> {
        match axis {
            Axis::Cols => self.col_concat(other),
            Axis::Rows => self.row_concat(other),
        }
    }

    /// `k`-fold column concatenation; `k = 0` gives λ.
    pub fn col_power(&self, k: usize) -> Word2D {
        if k == 0 || self.is_empty() {
            return Word2D::empty();
        }
        let cols = self.cols * k;
        let mut cells = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            for _ in 0..k {
                cells.extend_from_slice(self.row_slice(i));
            }
        }
        Word2D {
            rows: self.rows,
            cols,
            cells,
        }
    }

    /// `k`-fold row concatenation; `k = 0` gives λ.
    pub fn row_power(&self, k: usize) -> Word2D {
        if k == 0 || self.is_empty() {
            return Word2D::empty();
        }
        Word2D {
            rows: self.rows * k,
            cols: self.cols,
            cells: self.cells.repeat(k),
        }
    }

    pub fn power(&self, k: usize, axis: Axis) -> Word2D {
        match axis {
            Axis::Cols => self.col_power(k),
            Axis::Rows => self.row_power(k),
        }
    }

    /// 180° rotation: `result[i][j] = w[m-i+1][n-j+1]`.
    pub fn reverse(&self) -> Word2D {
        let mut cells = self.cells.clone();
        cells.reverse();
        Word2D {
            rows: self.rows,
            cols: self.cols,
            cells,
        }
    }

    pub fn transpose(&self) -> Word2D {
        Word2D::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Reverses every row in place of its position (mirror about the vertical axis).
    pub fn mirror_rows(&self) -> Word2D {
        Word2D::from_fn(self.rows, self.cols, |i, j| self.get(i, self.cols - 1 - j))
    }

    /// Reverses the order of rows (mirror about the horizontal axis).
    pub fn mirror_cols(&self) -> Word2D {
        Word2D::from_fn(self.rows, self.cols, |i, j| self.get(self.rows - 1 - i, j))
    }

    /// Contiguous block with inclusive 1-based bounds `i1..=i2`, `j1..=j2`.
    pub fn subarray(&self, i1: usize, i2: usize, j1: usize, j2: usize) -> Result<Word2D> {
        if i1 < 1 || i1 > i2 || i2 > self.rows || j1 < 1 || j1 > j2 || j2 > self.cols {
            return Err(Error::OutOfRange {
                i1,
                i2,
                j1,
                j2,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.block(i1 - 1, j1 - 1, i2 - i1 + 1, j2 - j1 + 1))
    }

    /// Unchecked 0-based block of size `(h, w)` at `(top, left)`.
    pub(crate) fn block(&self, top: usize, left: usize, h: usize, w: usize) -> Word2D {
        Word2D::from_fn(h, w, |i, j| self.get(top + i, left + j))
    }

    /// Top-left corner block of size `(h, w)`; `None` when it does not fit.
    pub fn prefix_block(&self, h: usize, w: usize) -> Option<Word2D> {
        (h <= self.rows && w <= self.cols).then(|| self.block(0, 0, h, w))
    }

    /// Bottom-right corner block of size `(h, w)`.
    pub fn suffix_block(&self, h: usize, w: usize) -> Option<Word2D> {
        (h <= self.rows && w <= self.cols).then(|| self.block(self.rows - h, self.cols - w, h, w))
    }

    /// Whether `self` is the top-left corner block of `u`.
    pub fn is_prefix_of(&self, u: &Word2D) -> bool {
        u.prefix_block(self.rows, self.cols).as_ref() == Some(self)
    }

    /// Whether `self` is the bottom-right corner block of `u`.
    pub fn is_suffix_of(&self, u: &Word2D) -> bool {
        u.suffix_block(self.rows, self.cols).as_ref() == Some(self)
    }

    /// All non-empty borders, including the word itself.
    ///
    /// Each size contributes at most one border, so the result has one entry
    /// per matching size.
    pub fn borders(&self) -> Result<BTreeSet<Word2D>> {
        if self.is_empty() {
            return Err(Error::EmptyWord("borders"));
        }
        let mut out = BTreeSet::new();
        for h in 1..=self.rows {
            for w in 1..=self.cols {
                let top = self.rows - h;
                let left = self.cols - w;
                let matches =
                    (0..h).all(|i| (0..w).all(|j| self.get(i, j) == self.get(top + i, left + j)));
                if matches {
                    out.insert(self.block(0, 0, h, w));
                }
            }
        }
        Ok(out)
    }

    pub fn center(&self) -> Result<CenterLocus> {
        if self.is_empty() {
            return Err(Error::EmptyWord("center"));
        }
        fn locus(len: usize) -> Locus {
            if len % 2 == 1 {
                Locus::Cell(len.div_ceil(2))
            } else {
                Locus::Between(len / 2, len / 2 + 1)
            }
        }
        Ok(CenterLocus {
            row: locus(self.rows),
            col: locus(self.cols),
        })
    }

    /// Distinct symbols occurring in the word.
    pub fn alph(&self) -> BTreeSet<Symbol> {
        self.cells.iter().copied().collect()
    }

    /// Rows as an owned list of sequences; the word read over its alphabet of rows.
    pub fn rows_vec(&self) -> Vec<Vec<Symbol>> {
        (0..self.rows).map(|i| self.row_slice(i).to_vec()).collect()
    }

    /// Columns as an owned list of sequences; the word read over its alphabet of columns.
    pub fn cols_vec(&self) -> Vec<Vec<Symbol>> {
        (0..self.cols).map(|j| self.column_vec(j)).collect()
    }

    /// Grid text format: one line per row, newline-terminated. λ renders as "".
    pub fn to_grid(&self) -> String {
        let mut s = String::with_capacity(self.rows * (self.cols + 1));
        for i in 0..self.rows {
            s.extend(self.row_slice(i).iter().map(|c| c.0));
            s.push('\n');
        }
        s
    }

    /// Parses the grid text format.
    ///
    /// One row per line, one character per symbol, all lines of equal
    /// length. A trailing newline is optional and a blank input is λ.
    /// Whitespace symbols are rejected.
    pub fn parse_grid(text: &str) -> Result<Word2D> {
        let body = text.strip_suffix('\n').unwrap_or(text);
        let body = body.strip_suffix('\r').unwrap_or(body);
        if body.is_empty() {
            return Ok(Word2D::empty());
        }
        let mut rows: Vec<&str> = Vec::new();
        for (idx, raw) in body.split('\n').enumerate() {
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            let lineno = idx + 1;
            if line.is_empty() {
                return Err(Error::Parse {
                    line: lineno,
                    message: "empty row".into(),
                });
            }
            if let Some(c) = line.chars().find(|c| c.is_whitespace()) {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("whitespace symbol {c:?} is not allowed"),
                });
            }
            if let Some(first) = rows.first() {
                let want = first.chars().count();
                let got = line.chars().count();
                if got != want {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("row has {got} symbols, expected {want}"),
                    });
                }
            }
            rows.push(line);
        }
        Word2D::from_rows(&rows)
    }
}

impl FromStr for Word2D {
    type Err = Error;

    /// Accepts the grid text format, or a single line with rows joined by `/`
    /// (`"ab/ba"`).
    fn from_str(s: &str) -> Result<Self> {
        if s.contains('/') && !s.contains('\n') {
            Word2D::from_rows(&s.split('/').collect::<Vec<_>>())
        } else {
            Word2D::parse_grid(s)
        }
    }
}

impl fmt::Display for Word2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "λ");
        }
        write!(f, "{}", self.row_strings().join("⊖"))
    }
}

impl Serialize for Word2D {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.row_strings().serialize(serializer)
    }
}

/// Shorthand used throughout the tests: rows joined by `/`.
pub fn w(s: &str) -> Word2D {
    if s.is_empty() {
        return Word2D::empty();
    }
    s.parse().expect("valid word literal")
}
