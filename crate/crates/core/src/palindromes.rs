//! Palindrome predicates, the HV structure decomposition, the forbidden
//! pattern characterisation, and enumeration of distinct palindromic factors.

use std::collections::{BTreeSet, HashSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word2d::{Axis, Symbol, Word2D};

/// Which palindromic factors to collect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorKind {
    /// Factors equal to their 180° rotation.
    Pal2d,
    /// Factors whose rows and columns are all 1D palindromes.
    Hv,
    /// Palindromic factors of size `(1, j)`, `j >= 1`.
    Horizontal,
    /// Palindromic factors of size `(i, 1)`, `i >= 2`.
    Vertical,
    /// Factors of size `(1, 1)`.
    Trivial,
}

impl FactorKind {
    pub const ALL: [FactorKind; 5] = [
        FactorKind::Pal2d,
        FactorKind::Hv,
        FactorKind::Horizontal,
        FactorKind::Vertical,
        FactorKind::Trivial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FactorKind::Pal2d => "pal2d",
            FactorKind::Hv => "hv",
            FactorKind::Horizontal => "horizontal",
            FactorKind::Vertical => "vertical",
            FactorKind::Trivial => "trivial",
        }
    }

    /// Whether the block of `w` at 0-based `(top, left)` with size `(h, wd)`
    /// belongs to this kind.
    fn accepts(self, w: &Word2D, top: usize, left: usize, h: usize, wd: usize) -> bool {
        match self {
            FactorKind::Pal2d => block_is_pal2d(w, top, left, h, wd),
            FactorKind::Hv => block_is_hv(w, top, left, h, wd),
            FactorKind::Horizontal => h == 1 && block_is_pal2d(w, top, left, h, wd),
            FactorKind::Vertical => h >= 2 && wd == 1 && block_is_pal2d(w, top, left, h, wd),
            FactorKind::Trivial => h == 1 && wd == 1,
        }
    }
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FactorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FactorKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown factor kind `{s}`")))
    }
}

pub fn is_palindrome_1d<T: PartialEq>(s: &[T]) -> bool {
    s.iter().eq(s.iter().rev())
}

pub fn is_palindrome_2d(w: &Word2D) -> bool {
    is_palindrome_1d(w.cells())
}

/// Every row and every column is a 1D palindrome.
pub fn is_hv_palindrome(w: &Word2D) -> bool {
    block_is_hv(w, 0, 0, w.rows(), w.cols())
}

fn block_is_pal2d(w: &Word2D, top: usize, left: usize, h: usize, wd: usize) -> bool {
    let area = h * wd;
    (0..area / 2).all(|k| {
        let (i, j) = (k / wd, k % wd);
        w.get(top + i, left + j) == w.get(top + h - 1 - i, left + wd - 1 - j)
    })
}

fn block_is_hv(w: &Word2D, top: usize, left: usize, h: usize, wd: usize) -> bool {
    let rows_ok = (0..h).all(|i| {
        (0..wd / 2).all(|j| w.get(top + i, left + j) == w.get(top + i, left + wd - 1 - j))
    });
    rows_ok
        && (0..wd).all(|j| {
            (0..h / 2).all(|i| w.get(top + i, left + j) == w.get(top + h - 1 - i, left + j))
        })
}

/// Row `i` equals row `m-i+1` and column `j` equals column `n-j+1` for the
/// first half of each. Equivalent to [`is_hv_palindrome`].
pub fn check_row_col_symmetry(w: &Word2D) -> bool {
    let (m, n) = w.shape();
    (0..m / 2).all(|i| w.row_slice(i) == w.row_slice(m - 1 - i))
        && (0..n / 2).all(|j| w.column_vec(j) == w.column_vec(n - 1 - j))
}

/// Quadrant/cross decomposition of an HV-palindrome.
///
/// `u` is the `(⌊m/2⌋, ⌊n/2⌋)` top-left quadrant. `p1` is the top half of the
/// middle column (present iff `n` is odd), `p2` the left half of the middle
/// row (present iff `m` is odd), and `x` the center cell (present iff both are
/// odd). Pieces whose size has a zero side are stored as λ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HvDecomposition {
    pub shape: (usize, usize),
    pub u: Word2D,
    pub p1: Option<Word2D>,
    pub p2: Option<Word2D>,
    pub x: Option<Symbol>,
}

impl HvDecomposition {
    pub fn parity(&self) -> (usize, usize) {
        (self.shape.0 % 2, self.shape.1 % 2)
    }

    /// Row-wise reversal of `u`; the top-right quadrant.
    pub fn v(&self) -> Word2D {
        self.u.mirror_rows()
    }
}

fn sized(h: usize, w: usize) -> (usize, usize) {
    if h == 0 || w == 0 {
        (0, 0)
    } else {
        (h, w)
    }
}

pub fn hv_decompose(w: &Word2D) -> Result<HvDecomposition> {
    if w.is_empty() {
        return Err(Error::EmptyWord("hv_decompose"));
    }
    if !is_hv_palindrome(w) {
        return Err(Error::NotHvPalindrome);
    }
    let (m, n) = w.shape();
    let (hm, hn) = (m / 2, n / 2);
    let u = w.block(0, 0, hm, hn);
    let p1 = (n % 2 == 1).then(|| w.block(0, hn, hm, 1));
    let p2 = (m % 2 == 1).then(|| w.block(hm, 0, 1, hn));
    let x = (m % 2 == 1 && n % 2 == 1).then(|| w.get(hm, hn));
    Ok(HvDecomposition {
        shape: (m, n),
        u,
        p1,
        p2,
        x,
    })
}

pub fn hv_recompose(d: &HvDecomposition) -> Result<Word2D> {
    let (m, n) = d.shape;
    if m == 0 || n == 0 {
        return Err(Error::ShapeMismatch(format!(
            "invalid target shape ({m},{n})"
        )));
    }
    let (hm, hn) = (m / 2, n / 2);
    let check = |name: &str, piece: &Word2D, want: (usize, usize)| -> Result<()> {
        let want = sized(want.0, want.1);
        if piece.shape() != want {
            return Err(Error::ShapeMismatch(format!(
                "{name} has size {:?}, expected {want:?}",
                piece.shape()
            )));
        }
        Ok(())
    };
    check("u", &d.u, (hm, hn))?;
    let presence = |name: &str, present: bool, want: bool| -> Result<()> {
        if present != want {
            return Err(Error::ShapeMismatch(format!(
                "{name} must be {} for shape ({m},{n})",
                if want { "present" } else { "absent" }
            )));
        }
        Ok(())
    };
    presence("p1", d.p1.is_some(), n % 2 == 1)?;
    presence("p2", d.p2.is_some(), m % 2 == 1)?;
    presence("x", d.x.is_some(), m % 2 == 1 && n % 2 == 1)?;
    if let Some(p1) = &d.p1 {
        check("p1", p1, (hm, 1))?;
    }
    if let Some(p2) = &d.p2 {
        check("p2", p2, (1, hn))?;
    }

    let v = d.v();
    let mut top = d.u.clone();
    if let Some(p1) = &d.p1 {
        top = top.col_concat(p1)?;
    }
    top = top.col_concat(&v)?;

    let mut out = top.clone();
    if let Some(p2) = &d.p2 {
        let mut middle = p2.clone();
        if let Some(x) = d.x {
            middle = middle.col_concat(&Word2D::singleton(x))?;
        }
        middle = middle.col_concat(&p2.reverse())?;
        out = out.row_concat(&middle)?;
    }
    // Bottom half: v^R, (p1ᵀ)^R, u^R, i.e. the top half read bottom-up.
    out = out.row_concat(&top.mirror_cols())?;
    debug_assert!(is_hv_palindrome(&out));
    Ok(out)
}

/// Removes the first and last `k` rows and the first and last `r` columns.
pub fn shrink(w: &Word2D, k: usize, r: usize) -> Result<Word2D> {
    if !is_palindrome_2d(w) || w.is_empty() {
        return Err(Error::NotPalindrome);
    }
    let (m, n) = w.shape();
    if 2 * k >= m || 2 * r >= n {
        return Err(Error::Degenerate {
            k,
            r,
            rows: m,
            cols: n,
        });
    }
    Ok(w.block(k, r, m - 2 * k, n - 2 * r))
}

/// `(x ⊚ y)^{i⊚} ⊚ x` for [`Axis::Cols`], `(x ⊖ y)^{i⊖} ⊖ x` for [`Axis::Rows`].
pub fn compose_xyx(x: &Word2D, y: &Word2D, i: usize, axis: Axis) -> Result<Word2D> {
    if x.is_empty() || !is_hv_palindrome(x) {
        return Err(Error::Precondition(
            "x must be a non-empty HV-palindrome".into(),
        ));
    }
    if !y.is_empty() && !is_hv_palindrome(y) {
        return Err(Error::Precondition(
            "y must be λ or an HV-palindrome".into(),
        ));
    }
    if i == 0 {
        return Err(Error::Precondition(
            "repetition count must be at least 1".into(),
        ));
    }
    let unit = x.concat(y, axis)?;
    unit.power(i, axis).concat(x, axis)
}

/// Splits an HV-palindrome into its first line `x` and the middle block `y`
/// so that `compose_xyx(x, y, 1, axis) == w`.
pub fn hv_factorize(w: &Word2D, axis: Axis) -> Result<(Word2D, Word2D)> {
    if !is_hv_palindrome(w) || w.is_empty() {
        return Err(Error::NotHvPalindrome);
    }
    let (m, n) = w.shape();
    match axis {
        Axis::Rows => {
            if m < 2 {
                return Err(Error::Precondition(
                    "need at least 2 rows to factorize by rows".into(),
                ));
            }
            let x = w.block(0, 0, 1, n);
            let y = if m > 2 {
                w.block(1, 0, m - 2, n)
            } else {
                Word2D::empty()
            };
            Ok((x, y))
        }
        Axis::Cols => {
            if n < 2 {
                return Err(Error::Precondition(
                    "need at least 2 columns to factorize by columns".into(),
                ));
            }
            let x = w.block(0, 0, m, 1);
            let y = if n > 2 {
                w.block(0, 1, m, n - 2)
            } else {
                Word2D::empty()
            };
            Ok((x, y))
        }
    }
}

/// Occurrence of the corner-antisymmetric forbidden shape
///
/// ```text
/// x  u    y
/// v  p    v^R
/// y  u^R  x
/// ```
///
/// with `x != y` and `p` a 2D palindrome. Coordinates are 1-based, inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PatternOccurrence {
    pub i1: usize,
    pub i2: usize,
    pub j1: usize,
    pub j2: usize,
    pub x: Symbol,
    pub y: Symbol,
}

/// Direct piece-by-piece matcher for the forbidden shape on a whole word.
pub fn matches_forbidden_shape(f: &Word2D) -> bool {
    let (r, s) = f.shape();
    if r < 2 || s < 2 {
        return false;
    }
    let x = f.get(0, 0);
    let y = f.get(0, s - 1);
    if x == y || f.get(r - 1, 0) != y || f.get(r - 1, s - 1) != x {
        return false;
    }
    let u: Vec<Symbol> = (1..s - 1).map(|j| f.get(0, j)).collect();
    let last: Vec<Symbol> = (1..s - 1).map(|j| f.get(r - 1, j)).collect();
    if !u.iter().eq(last.iter().rev()) {
        return false;
    }
    let v: Vec<Symbol> = (1..r - 1).map(|i| f.get(i, 0)).collect();
    let right: Vec<Symbol> = (1..r - 1).map(|i| f.get(i, s - 1)).collect();
    if !v.iter().eq(right.iter().rev()) {
        return false;
    }
    let p = if r > 2 && s > 2 {
        f.block(1, 1, r - 2, s - 2)
    } else {
        Word2D::empty()
    };
    is_palindrome_2d(&p)
}

/// Lexicographically first (by `i1, j1, i2, j2`) forbidden-pattern occurrence.
///
/// Scans 2D-palindromic factors of size at least `2×2` and reports the first
/// whose top corners differ.
pub fn find_forbidden_pattern(w: &Word2D) -> Option<PatternOccurrence> {
    let (m, n) = w.shape();
    for top in 0..m {
        for left in 0..n {
            for bottom in top + 1..m {
                for right in left + 1..n {
                    let (h, wd) = (bottom - top + 1, right - left + 1);
                    let x = w.get(top, left);
                    let y = w.get(top, right);
                    if x != y && block_is_pal2d(w, top, left, h, wd) {
                        return Some(PatternOccurrence {
                            i1: top + 1,
                            i2: bottom + 1,
                            j1: left + 1,
                            j2: right + 1,
                            x,
                            y,
                        });
                    }
                }
            }
        }
    }
    None
}

/// Some factor of size `(r, s)` with `r, s >= 2` is a 2D palindrome but not
/// an HV-palindrome.
pub fn is_non_hv_palindromic_factor_present(w: &Word2D) -> bool {
    let (m, n) = w.shape();
    for top in 0..m {
        for left in 0..n {
            for h in 2..=m - top {
                for wd in 2..=n - left {
                    if block_is_pal2d(w, top, left, h, wd) && !block_is_hv(w, top, left, h, wd) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Distinct palindromic factors of one kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorSet {
    pub kind: FactorKind,
    pub members: BTreeSet<Word2D>,
}

impl FactorSet {
    pub fn count(&self) -> usize {
        self.members.len()
    }

    /// Line-oriented report: one stanza per factor (`size=RxC` header plus
    /// grid, blank-line separated), then `kind=<kind> count=<N>`.
    pub fn to_report(&self) -> String {
        let mut out = String::new();
        for f in &self.members {
            let _ = writeln!(out, "size={}x{}", f.rows(), f.cols());
            out.push_str(&f.to_grid());
            out.push('\n');
        }
        let _ = writeln!(out, "kind={} count={}", self.kind, self.count());
        out
    }
}

/// All distinct non-empty factors of `w` of the given kind.
pub fn enumerate_palindromic_factors(w: &Word2D, kind: FactorKind) -> Result<FactorSet> {
    if w.is_empty() {
        return Err(Error::EmptyWord("enumerate_palindromic_factors"));
    }
    let (m, n) = w.shape();
    let mut seen: HashSet<Word2D> = HashSet::new();
    for top in 0..m {
        for left in 0..n {
            for h in 1..=m - top {
                for wd in 1..=n - left {
                    if kind.accepts(w, top, left, h, wd) {
                        seen.insert(w.block(top, left, h, wd));
                    }
                }
            }
        }
    }
    Ok(FactorSet {
        kind,
        members: seen.into_iter().collect(),
    })
}

pub fn count_palindromic_factors(w: &Word2D, kind: FactorKind) -> Result<usize> {
    enumerate_palindromic_factors(w, kind).map(|s| s.count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word2d::w;

    fn ex1() -> Word2D {
        w("abca/bcca/accb/acba")
    }

    fn syms(s: &str) -> Vec<Symbol> {
        s.chars().map(Symbol).collect()
    }

    #[test]
    fn palindrome_1d() {
        assert!(is_palindrome_1d(&syms("abba")));
        assert!(!is_palindrome_1d(&syms("ab")));
        assert!(!is_palindrome_1d(&syms("ababba")));
        assert!(is_palindrome_1d::<Symbol>(&[]));
        assert!(is_palindrome_1d(&syms("a")));
    }

    #[test]
    fn palindrome_2d() {
        assert!(is_palindrome_2d(&ex1()));
        assert!(is_palindrome_2d(&w("ab/ba")));
        assert!(!is_palindrome_2d(&w("aa/ab")));
    }

    #[test]
    fn hv_predicate() {
        assert!(is_hv_palindrome(&w("aba/bcb/aba")));
        assert!(!is_hv_palindrome(&w("ab/ba")));
        assert!(is_hv_palindrome(&w("abcba")));
        assert!(!is_hv_palindrome(&ex1()));
    }

    #[test]
    fn row_col_symmetry() {
        assert!(check_row_col_symmetry(&w("aba/bcb/aba")));
        assert!(!check_row_col_symmetry(&ex1()));
        assert!(check_row_col_symmetry(&w("aaaaa")));
    }

    #[test]
    fn decompose_examples() {
        let d = hv_decompose(&w("aba/bcb/aba")).unwrap();
        assert_eq!(d.u, w("a"));
        assert_eq!(d.p1, Some(w("b")));
        assert_eq!(d.p2, Some(w("b")));
        assert_eq!(d.x, Some(Symbol('c')));
        assert_eq!(d.parity(), (1, 1));

        let d = hv_decompose(&w("abba/bbbb/abba")).unwrap();
        assert_eq!(d.u, w("ab"));
        assert_eq!(d.p2, Some(w("bb")));
        assert_eq!(d.p1, None);
        assert_eq!(d.x, None);
        assert_eq!(d.parity(), (1, 0));
        assert_eq!(d.v(), w("ba"));

        assert_eq!(hv_decompose(&w("ab/ba")), Err(Error::NotHvPalindrome));
    }

    #[test]
    fn recompose_examples() {
        let d = HvDecomposition {
            shape: (3, 3),
            u: w("a"),
            p1: Some(w("b")),
            p2: Some(w("b")),
            x: Some(Symbol('c')),
        };
        assert_eq!(hv_recompose(&d).unwrap(), w("aba/bcb/aba"));

        let bad = HvDecomposition {
            shape: (3, 4),
            u: w("ab"),
            p1: None,
            p2: Some(w("bbb")),
            x: None,
        };
        assert!(matches!(hv_recompose(&bad), Err(Error::ShapeMismatch(_))));

        let missing_x = HvDecomposition {
            x: None,
            ..d.clone()
        };
        assert!(matches!(
            hv_recompose(&missing_x),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn thin_words_round_trip() {
        for s in ["a", "aba", "abba", "a/b/a", "aa/aa"] {
            let x = w(s);
            let d = hv_decompose(&x).unwrap();
            assert_eq!(hv_recompose(&d).unwrap(), x, "{s}");
        }
    }

    #[test]
    fn shrink_examples() {
        assert_eq!(shrink(&w("aba/bcb/aba"), 1, 1).unwrap(), w("c"));
        assert_eq!(shrink(&ex1(), 1, 1).unwrap(), w("cc/cc"));
        assert_eq!(shrink(&ex1(), 0, 0).unwrap(), ex1());
        assert!(matches!(
            shrink(&ex1(), 2, 0),
            Err(Error::Degenerate { .. })
        ));
        assert_eq!(shrink(&w("ab/cd"), 0, 0), Err(Error::NotPalindrome));
    }

    #[test]
    fn compose_examples() {
        assert_eq!(
            compose_xyx(&w("a/b/a"), &w("b/c/b"), 1, Axis::Cols).unwrap(),
            w("aba/bcb/aba")
        );
        assert_eq!(
            compose_xyx(&w("a"), &Word2D::empty(), 3, Axis::Cols).unwrap(),
            w("aaaa")
        );
        assert!(matches!(
            compose_xyx(&w("ab"), &Word2D::empty(), 1, Axis::Cols),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            compose_xyx(&w("a"), &w("a/a"), 1, Axis::Cols),
            Err(Error::RowMismatch { .. })
        ));
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(
            hv_factorize(&w("aba/bcb/aba"), Axis::Rows).unwrap(),
            (w("aba"), w("bcb"))
        );
        assert_eq!(
            hv_factorize(&w("aa/aa"), Axis::Rows).unwrap(),
            (w("aa"), Word2D::empty())
        );
        assert!(matches!(
            hv_factorize(&w("aba"), Axis::Rows),
            Err(Error::Precondition(_))
        ));
        let (x, y) = hv_factorize(&w("aba/bcb/aba"), Axis::Cols).unwrap();
        assert_eq!(
            compose_xyx(&x, &y, 1, Axis::Cols).unwrap(),
            w("aba/bcb/aba")
        );
    }

    #[test]
    fn forbidden_pattern_examples() {
        let occ = find_forbidden_pattern(&w("ab/ba")).unwrap();
        assert_eq!((occ.i1, occ.i2, occ.j1, occ.j2), (1, 2, 1, 2));
        assert_eq!((occ.x, occ.y), (Symbol('a'), Symbol('b')));
        assert_eq!(find_forbidden_pattern(&w("aba/bcb/aba")), None);

        // Frozen from a brute-force scan of every sub-array in (i1, j1, i2, j2) order.
        let occ = find_forbidden_pattern(&ex1()).unwrap();
        assert_eq!((occ.i1, occ.i2, occ.j1, occ.j2), (1, 4, 2, 3));
        let block = ex1().subarray(1, 4, 2, 3).unwrap();
        assert!(matches_forbidden_shape(&block));
    }

    #[test]
    fn non_hv_factor_examples() {
        assert!(is_non_hv_palindromic_factor_present(&w("ab/ba")));
        assert!(!is_non_hv_palindromic_factor_present(&w("aba/bcb/aba")));
    }

    #[test]
    fn shape_matcher_pieces() {
        assert!(matches_forbidden_shape(&w("ab/ba")));
        assert!(matches_forbidden_shape(&w("acb/ded/bca")));
        // inner block not a palindrome
        assert!(!matches_forbidden_shape(&w("acb/dee/bca")));
        assert!(!matches_forbidden_shape(&w("aa/aa")));
        assert!(!matches_forbidden_shape(&w("ab")));
    }

    #[test]
    fn enumerate_examples() {
        for n in 1..=6 {
            let x = w("a/a").col_power(n);
            assert_eq!(
                count_palindromic_factors(&x, FactorKind::Hv).unwrap(),
                2 * n
            );
        }
        for n in 1..=6 {
            let a = "a".repeat(n);
            let b = "b".repeat(n);
            let x = w(&format!("{a}/{b}/{a}"));
            assert_eq!(
                count_palindromic_factors(&x, FactorKind::Hv).unwrap(),
                3 * n
            );
        }
    }

    #[test]
    fn example_word_counts_match_frozen_oracle() {
        // Frozen by scanning every (i1, i2, j1, j2), testing w = w^R, deduping by content.
        let x = ex1();
        assert_eq!(
            count_palindromic_factors(&x, FactorKind::Pal2d).unwrap(),
            12
        );
        assert_eq!(count_palindromic_factors(&x, FactorKind::Hv).unwrap(), 9);
        assert_eq!(
            count_palindromic_factors(&x, FactorKind::Horizontal).unwrap(),
            4
        );
        assert_eq!(
            count_palindromic_factors(&x, FactorKind::Vertical).unwrap(),
            4
        );
        assert_eq!(
            count_palindromic_factors(&x, FactorKind::Trivial).unwrap(),
            3
        );
    }

    #[test]
    fn factor_report_format() {
        let set = enumerate_palindromic_factors(&w("ab"), FactorKind::Hv).unwrap();
        assert_eq!(
            set.to_report(),
            "size=1x1\na\n\nsize=1x1\nb\n\nkind=hv count=2\n"
        );
        assert!(enumerate_palindromic_factors(&Word2D::empty(), FactorKind::Hv).is_err());
    }
}
