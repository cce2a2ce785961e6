//! Conjugacy classes under cyclic row and column rotations, and the
//! palindromic members of a class.

use std::collections::{BTreeMap, BTreeSet};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::palindromes::{is_hv_palindrome, is_palindrome_2d};
use crate::word2d::Word2D;

/// Moves the last `k` columns to the front. `k` is taken modulo the column
/// count, so `0` and `n` both give the word back.
pub fn rotate_cols(w: &Word2D, k: usize) -> Result<Word2D> {
    if w.is_empty() {
        return Err(Error::EmptyWord("rotate_cols"));
    }
    let n = w.cols();
    let k = k % n;
    Ok(Word2D::from_fn(w.rows(), n, |i, j| {
        w.get(i, (j + n - k) % n)
    }))
}

/// Moves the last `k` rows to the top, `k` taken modulo the row count.
pub fn rotate_rows(w: &Word2D, k: usize) -> Result<Word2D> {
    if w.is_empty() {
        return Err(Error::EmptyWord("rotate_rows"));
    }
    let m = w.rows();
    let k = k % m;
    Ok(Word2D::from_fn(m, w.cols(), |i, j| {
        w.get((i + m - k) % m, j)
    }))
}

/// `rotate_cols(rotate_rows(w, row_k), col_k)`.
pub fn rotate(w: &Word2D, col_k: usize, row_k: usize) -> Result<Word2D> {
    rotate_cols(&rotate_rows(w, row_k)?, col_k)
}

pub fn conjugacy_class(w: &Word2D) -> Result<BTreeSet<Word2D>> {
    let mut out = BTreeSet::new();
    for i in 0..w.cols().max(1) {
        for j in 0..w.rows().max(1) {
            out.insert(rotate(w, i, j)?);
        }
    }
    Ok(out)
}

/// Upper bound on palindromic (and HV-palindromic) conjugates by parity:
/// 4 when both sides are even, 1 when both are odd, 2 otherwise.
pub fn pal_conjugate_bound(m: usize, n: usize) -> usize {
    match (m % 2, n % 2) {
        (0, 0) => 4,
        (1, 1) => 1,
        _ => 2,
    }
}

/// A conjugacy class and its palindromic members.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugacyReport {
    pub base: Word2D,
    pub class_members: BTreeSet<Word2D>,
    pub pal_members: BTreeSet<Word2D>,
    pub hv_members: BTreeSet<Word2D>,
    /// Smallest `(col_rotation, row_rotation)` producing each palindromic member.
    #[serde(serialize_with = "serialize_witnesses")]
    pub witness_rotations: BTreeMap<Word2D, (usize, usize)>,
}

fn serialize_witnesses<S: Serializer>(
    map: &BTreeMap<Word2D, (usize, usize)>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        word: &'a Word2D,
        col_rotation: usize,
        row_rotation: usize,
    }
    let mut seq = s.serialize_seq(Some(map.len()))?;
    for (word, &(col_rotation, row_rotation)) in map {
        seq.serialize_element(&Entry {
            word,
            col_rotation,
            row_rotation,
        })?;
    }
    seq.end()
}

impl ConjugacyReport {
    pub fn bound(&self) -> usize {
        pal_conjugate_bound(self.base.rows(), self.base.cols())
    }
}

pub fn pal_conjugates(w: &Word2D) -> Result<ConjugacyReport> {
    if w.is_empty() {
        return Err(Error::EmptyWord("pal_conjugates"));
    }
    let mut class_members = BTreeSet::new();
    let mut witness_rotations = BTreeMap::new();
    for i in 0..w.cols() {
        for j in 0..w.rows() {
            let c = rotate(w, i, j)?;
            if is_palindrome_2d(&c) {
                witness_rotations.entry(c.clone()).or_insert((i, j));
            }
            class_members.insert(c);
        }
    }
    let pal_members: BTreeSet<Word2D> = witness_rotations.keys().cloned().collect();
    let hv_members = pal_members
        .iter()
        .filter(|c| is_hv_palindrome(c))
        .cloned()
        .collect();
    Ok(ConjugacyReport {
        base: w.clone(),
        class_members,
        pal_members,
        hv_members,
        witness_rotations,
    })
}

/// Reverses a word read over its alphabet of columns: column order is
/// reversed and each column letter is itself reversed, as the 2D reverse
/// does.
pub fn is_palindrome_over_columns(w: &Word2D) -> bool {
    let cols = w.cols_vec();
    cols.iter()
        .zip(cols.iter().rev())
        .all(|(a, b)| a.iter().eq(b.iter().rev()))
}

/// Same reading over the alphabet of rows.
pub fn is_palindrome_over_rows(w: &Word2D) -> bool {
    let rows = w.rows_vec();
    rows.iter()
        .zip(rows.iter().rev())
        .all(|(a, b)| a.iter().eq(b.iter().rev()))
}

/// Which tightness condition applies to an HV-palindrome of a given parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TightnessCase {
    /// Both sides even: four conjugates exactly when the `(m/2, n/2)` prefix
    /// is not a 2D palindrome.
    EvenEven,
    /// `m` even, `n` odd: two conjugates exactly when the `(m/2, n)` prefix
    /// is not an HV-palindrome.
    EvenOdd,
    /// `m` odd, `n` even: two conjugates exactly when the `(m, n/2)` prefix
    /// is not an HV-palindrome.
    OddEven,
    /// Both odd: the word is its only palindromic conjugate.
    OddOdd,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TightnessReport {
    pub case: TightnessCase,
    /// Whether the case's prefix condition is met (the prefix is *not* a
    /// palindrome of the relevant kind). Always `false` for [`TightnessCase::OddOdd`].
    pub condition_met: bool,
    /// Count the condition predicts for the bound to be reached.
    pub bound: usize,
    pub pal_members: usize,
    pub hv_members: usize,
    /// `condition_met` agrees with `pal_members == bound`.
    pub consistent: bool,
}

/// Evaluates the prefix conditions under which an HV-palindrome's class
/// reaches the parity bound, and compares them with the observed count.
pub fn check_tightness_conditions(v: &Word2D) -> Result<TightnessReport> {
    if v.is_empty() || !is_hv_palindrome(v) {
        return Err(Error::NotHvPalindrome);
    }
    let (m, n) = v.shape();
    let report = pal_conjugates(v)?;
    let pal = report.pal_members.len();
    let (case, condition_met) = match (m % 2, n % 2) {
        (0, 0) => {
            let p = v.prefix_block(m / 2, n / 2).expect("fits");
            (TightnessCase::EvenEven, !is_palindrome_2d(&p))
        }
        (0, 1) => {
            let p = v.prefix_block(m / 2, n).expect("fits");
            (TightnessCase::EvenOdd, !is_hv_palindrome(&p))
        }
        (1, 0) => {
            let p = v.prefix_block(m, n / 2).expect("fits");
            (TightnessCase::OddEven, !is_hv_palindrome(&p))
        }
        _ => (TightnessCase::OddOdd, false),
    };
    let bound = pal_conjugate_bound(m, n);
    let consistent = match case {
        TightnessCase::OddOdd => pal == 1,
        _ => condition_met == (pal == bound),
    };
    Ok(TightnessReport {
        case,
        condition_met,
        bound,
        pal_members: pal,
        hv_members: report.hv_members.len(),
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word2d::w;

    #[test]
    fn rotation_examples() {
        let x = w("abc/cbb/bbc/cba");
        assert_eq!(rotate_rows(&x, 1).unwrap(), w("cba/abc/cbb/bbc"));
        assert_eq!(rotate_cols(&x, 3).unwrap(), x);
        assert_eq!(rotate_cols(&x, 0).unwrap(), x);
        assert_eq!(
            rotate_cols(&rotate_cols(&x, 1).unwrap(), 2).unwrap(),
            rotate_cols(&x, 3).unwrap()
        );
        assert_eq!(rotate_cols(&w("abc"), 1).unwrap(), w("cab"));
        assert_eq!(
            rotate_cols(&Word2D::empty(), 1),
            Err(Error::EmptyWord("rotate_cols"))
        );
        assert!(rotate_rows(&Word2D::empty(), 1).is_err());
    }

    #[test]
    fn class_examples() {
        let x = w("abc/cbb/bbc/cba");
        let class = conjugacy_class(&x).unwrap();
        assert_eq!(class.len(), 12);
        for listed in [
            "abc/cbb/bbc/cba",
            "cbb/bbc/cba/abc",
            "bbc/cba/abc/cbb",
            "cba/abc/cbb/bbc",
            "bca/bbc/bcb/bac",
            "bbc/bcb/bac/bca",
            "bcb/bac/bca/bbc",
            "bac/bca/bbc/bcb",
            "cab/bcb/cbb/acb",
            "bcb/cbb/acb/cab",
            "cbb/acb/cab/bcb",
            "acb/cab/bcb/cbb",
        ] {
            assert!(class.contains(&w(listed)), "{listed}");
        }
        assert_eq!(conjugacy_class(&w("aa/aa")).unwrap().len(), 1);
        assert_eq!(conjugacy_class(&w("ab/cd")).unwrap().len(), 4);
        assert_eq!(conjugacy_class(&w("abc/def")).unwrap().len(), 6);
    }

    #[test]
    fn pal_conjugate_examples() {
        let r = pal_conjugates(&w("abc/cbb/bbc/cba")).unwrap();
        assert_eq!(r.pal_members.len(), 2);
        assert!(r.pal_members.contains(&w("abc/cbb/bbc/cba")));
        assert!(r.pal_members.contains(&w("bbc/cba/abc/cbb")));
        assert!(r.hv_members.is_empty());
        assert_eq!(r.witness_rotations[&w("abc/cbb/bbc/cba")], (0, 0));
        assert_eq!(r.witness_rotations[&w("bbc/cba/abc/cbb")], (0, 2));

        let r = pal_conjugates(&w("abba/aaaa/aaaa/abba")).unwrap();
        assert_eq!(r.pal_members.len(), 4);
        assert_eq!(r.hv_members.len(), 4);
        for listed in [
            "abba/aaaa/aaaa/abba",
            "baab/aaaa/aaaa/baab",
            "aaaa/abba/abba/aaaa",
            "aaaa/baab/baab/aaaa",
        ] {
            assert!(r.hv_members.contains(&w(listed)));
        }

        assert!(pal_conjugates(&w("aa/ab")).unwrap().pal_members.is_empty());
        assert!(pal_conjugates(&Word2D::empty()).is_err());
    }

    #[test]
    fn row_and_column_readings() {
        for s in ["abca/bcca/accb/acba", "ab/ba", "aba/bcb/aba"] {
            assert!(is_palindrome_over_columns(&w(s)) && is_palindrome_over_rows(&w(s)));
        }
        assert!(!is_palindrome_over_columns(&w("aa/ab")));
    }

    #[test]
    fn tightness_examples() {
        let r = check_tightness_conditions(&w("abba/aaaa/aaaa/abba")).unwrap();
        assert_eq!(r.case, TightnessCase::EvenEven);
        assert!(r.condition_met);
        assert_eq!(r.pal_members, 4);
        assert!(r.consistent);

        let r = check_tightness_conditions(&w("aa/aa")).unwrap();
        assert!(!r.condition_met);
        assert_eq!(r.pal_members, 1);
        assert!(r.consistent);

        assert_eq!(
            check_tightness_conditions(&w("ab/ba")),
            Err(Error::NotHvPalindrome)
        );
    }

    #[test]
    fn tightness_counterexample() {
        // Prefix aa/bb is not a 2D palindrome, yet a half-column rotation
        // fixes the word, so only two palindromic conjugates exist.
        let r = check_tightness_conditions(&w("aaaa/bbbb/bbbb/aaaa")).unwrap();
        assert!(r.condition_met);
        assert_eq!(r.pal_members, 2);
        assert!(!r.consistent);
    }
}
