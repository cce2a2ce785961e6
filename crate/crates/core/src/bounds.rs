//! Closed-form counts and bounds on palindromic complexity, generators for
//! every palindrome of a given size, and the extremal constructions.
//!
//! Infinite doubly periodic words are represented by finite tilings of their
//! period block. A construction's factor count is trusted once it is
//! unchanged when the number of tiled periods doubles (see [`stabilization`]).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::palindromes::{count_palindromic_factors, FactorKind};
use crate::word2d::{nth_symbol, Symbol, Word2D};

/// Default cap on the number of words a generator or search may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// Carrier class for counting and generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PalKind {
    Pal2d,
    Hv,
}

impl PalKind {
    pub fn name(self) -> &'static str {
        match self {
            PalKind::Pal2d => "pal2d",
            PalKind::Hv => "hv",
        }
    }

    /// Number of freely chosen cells for a palindrome of size `(m, n)`.
    pub fn free_cells(self, m: usize, n: usize) -> usize {
        match self {
            PalKind::Pal2d => (m * n).div_ceil(2),
            PalKind::Hv => m.div_ceil(2) * n.div_ceil(2),
        }
    }
}

impl From<PalKind> for FactorKind {
    fn from(k: PalKind) -> Self {
        match k {
            PalKind::Pal2d => FactorKind::Pal2d,
            PalKind::Hv => FactorKind::Hv,
        }
    }
}

impl fmt::Display for PalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PalKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pal2d" => Ok(PalKind::Pal2d),
            "hv" => Ok(PalKind::Hv),
            _ => Err(Error::Domain(format!("unknown palindrome kind `{s}`"))),
        }
    }
}

/// Number of distinct palindromes of size `(m, n)` over `q` symbols:
/// `q^⌈mn/2⌉` for 2D palindromes and `q^(⌈m/2⌉⌈n/2⌉)` for HV-palindromes.
pub fn count_palindromes_formula(q: usize, m: usize, n: usize, kind: PalKind) -> Result<BigUint> {
    if q == 0 || m == 0 || n == 0 {
        return Err(Error::Domain(format!(
            "count needs q, m, n >= 1 (got q={q}, m={m}, n={n})"
        )));
    }
    let exp = kind.free_cells(m, n);
    Ok(BigUint::from(q).pow(exp as u32))
}

/// `q^exp` as u64 when it fits.
pub(crate) fn checked_space(q: usize, exp: usize) -> Option<u64> {
    (q as u64).checked_pow(u32::try_from(exp).ok()?)
}

pub(crate) fn check_budget(q: usize, exp: usize, budget: u64) -> Result<u64> {
    match checked_space(q, exp) {
        Some(size) if size <= budget => Ok(size),
        _ => Err(Error::BudgetExceeded {
            required: format!("{q}^{exp} = {}", BigUint::from(q).pow(exp as u32)),
            budget,
        }),
    }
}

/// Streams every palindrome of the given kind and size exactly once.
///
/// Free cells are filled by a base-`q` counter (last free cell least
/// significant) and the rest is completed by symmetry. For 2D palindromes the
/// free region is the first `⌈mn/2⌉` cells in row-major order; for
/// HV-palindromes it is the `(⌈m/2⌉, ⌈n/2⌉)` top-left block.
pub fn generate_all_palindromes(
    alphabet: &[Symbol],
    m: usize,
    n: usize,
    kind: PalKind,
    budget: u64,
) -> Result<PalindromeStream> {
    if alphabet.is_empty() || m == 0 || n == 0 {
        return Err(Error::Domain(
            "generation needs a non-empty alphabet and m, n >= 1".into(),
        ));
    }
    let free = kind.free_cells(m, n);
    let total = check_budget(alphabet.len(), free, budget)?;
    let source: Vec<usize> = match kind {
        PalKind::Pal2d => (0..m * n).map(|k| k.min(m * n - 1 - k)).collect(),
        PalKind::Hv => {
            let hn = n.div_ceil(2);
            (0..m * n)
                .map(|k| {
                    let (i, j) = (k / n, k % n);
                    i.min(m - 1 - i) * hn + j.min(n - 1 - j)
                })
                .collect()
        }
    };
    Ok(PalindromeStream {
        alphabet: alphabet.to_vec(),
        m,
        n,
        source,
        digits: vec![0; free],
        remaining: total,
    })
}

/// Iterator returned by [`generate_all_palindromes`].
#[derive(Debug, Clone)]
pub struct PalindromeStream {
    alphabet: Vec<Symbol>,
    m: usize,
    n: usize,
    /// For every cell, the index of the free cell it copies.
    source: Vec<usize>,
    digits: Vec<usize>,
    remaining: u64,
}

impl PalindromeStream {
    pub fn len_hint(&self) -> u64 {
        self.remaining
    }
}

impl Iterator for PalindromeStream {
    type Item = Word2D;

    fn next(&mut self) -> Option<Word2D> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let cells = self
            .source
            .iter()
            .map(|&s| self.alphabet[self.digits[s]])
            .collect();
        let word = Word2D::new(self.m, self.n, cells).expect("sized by construction");
        let q = self.alphabet.len();
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < q {
                break;
            }
            *d = 0;
        }
        Some(word)
    }
}

fn require_at_least_two(m: usize, n: usize) -> Result<()> {
    if m < 2 || n < 2 {
        return Err(Error::Domain(format!(
            "bound needs m, n >= 2 (got ({m},{n}))"
        )));
    }
    Ok(())
}

/// Upper bound on distinct HV-palindromic factors in any word of size `(m, n)`.
///
/// `(m/2)((m/2+1)n - m + 2)` for even `m`, `(n-2)((m+1)/2)² + 2m` for odd `m`.
/// Both reduce to `2n` when `m = 2` and to `2m` when `n = 2`.
pub fn max_hv_bound(m: usize, n: usize) -> Result<u64> {
    require_at_least_two(m, n)?;
    let (m, n) = (m as u64, n as u64);
    Ok(if m % 2 == 0 {
        let h = m / 2;
        h * ((h + 1) * n + 2 - m)
    } else {
        let h = m.div_ceil(2);
        (n - 2) * h * h + 2 * m
    })
}

/// Upper bound on distinct palindromic factors inside a 2D palindrome of
/// size `(m, n)`, by parity of `m` and `n`.
pub fn max_pal_in_palindrome_bound(m: usize, n: usize) -> Result<u64> {
    require_at_least_two(m, n)?;
    let (m, n) = (m as u64, n as u64);
    let tri = m * (m + 1) / 2;
    let step = if m % 2 == 0 {
        tri + (m / 2) * (m / 2 + 1)
    } else {
        tri + m.div_ceil(2).pow(2)
    };
    Ok(if n % 2 == 0 {
        2 * m + (n - 2) / 2 * step
    } else {
        3 * m + (n - 3) / 2 * step + m / 2 - 1
    })
}

/// Upper bound on distinct HV-palindromic (equivalently palindromic) factors
/// inside an HV-palindrome of size `(m, n)`, by parity.
pub fn max_hv_in_hv_bound(m: usize, n: usize) -> Result<u64> {
    require_at_least_two(m, n)?;
    let (m, n) = (m as u64, n as u64);
    Ok(match (m % 2, n % 2) {
        (0, 0) => 2 * m + (n - 2) * m / 2 * (m / 2 + 1),
        (0, _) => 3 * m + (n - 3) * m / 2 * (m / 2 + 1),
        (_, 0) => 2 * m + (n - 2) * m.div_ceil(2).pow(2),
        _ => 3 * m + (n - 3) * m.div_ceil(2).pow(2),
    })
}

/// Exact maximum number of HV-palindromes in a three-row HV-palindrome of
/// width `n`: `3n`, reached by `aⁿ ⊖ bⁿ ⊖ aⁿ`.
pub fn max_hv_in_3row_hv(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("width must be at least 1".into()));
    }
    Ok(3 * n as u64)
}

/// Maximum number of palindromes in a two-row word of width `n`:
/// `2n + ⌊n/2⌋ - 1` in general and `2n` when the word is itself a palindrome.
///
/// For `n = 1` the general formula undercounts (`a ⊖ a` has two
/// palindromes); the exhaustive value 2 is returned instead.
pub fn max_pal_in_2row(n: usize, palindromic: bool) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("width must be at least 1".into()));
    }
    let n = n as u64;
    Ok(if palindromic || n == 1 {
        2 * n
    } else {
        2 * n + n / 2 - 1
    })
}

/// Maximum number of palindromes in a three-row 2D palindrome of width
/// `n >= 2`: `3n + ⌊n/2⌋ - 1`.
pub fn max_pal_in_3row_palindrome(n: usize) -> Result<u64> {
    if n < 2 {
        return Err(Error::Domain("width must be at least 2".into()));
    }
    let n = n as u64;
    Ok(3 * n + n / 2 - 1)
}

/// A count that may be unbounded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundValue {
    Finite(BigUint),
    Infinite,
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Finite(v) => write!(f, "{v}"),
            BoundValue::Infinite => f.write_str("infinity"),
        }
    }
}

impl From<u64> for BoundValue {
    fn from(v: u64) -> Self {
        BoundValue::Finite(BigUint::from(v))
    }
}

/// Least number of HV-palindromes in an infinite word over `q` symbols.
///
/// Without the non-trivial requirement: unbounded for `q = 1`, 14 for `q = 2`,
/// `q` otherwise. With at least one non-trivial HV-palindrome required:
/// 5 for `q = 3` and `q + 1` for `q > 3`; smaller alphabets are rejected.
pub fn min_hv_infinite(q: usize, nontrivial_required: bool) -> Result<BoundValue> {
    match (q, nontrivial_required) {
        (0, _) => Err(Error::Domain("alphabet size must be at least 1".into())),
        (1 | 2, true) => Err(Error::Domain(format!(
            "the non-trivial minimum is only established for q >= 3 (got q={q})"
        ))),
        (1, false) => Ok(BoundValue::Infinite),
        (2, false) => Ok(14.into()),
        (_, false) => Ok((q as u64).into()),
        (3, true) => Ok(5.into()),
        (_, true) => Ok((q as u64 + 1).into()),
    }
}

/// Formula families addressable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundFamily {
    CountPal2d,
    CountHv,
    MaxHvInWord,
    MaxPalInPal,
    MaxHvInHv,
    MaxPalIn2row,
    MaxPalIn3rowPal,
    MinHvInfinite,
    MinHvInfiniteNontrivial,
}

impl BoundFamily {
    pub const ALL: [BoundFamily; 9] = [
        BoundFamily::CountPal2d,
        BoundFamily::CountHv,
        BoundFamily::MaxHvInWord,
        BoundFamily::MaxPalInPal,
        BoundFamily::MaxHvInHv,
        BoundFamily::MaxPalIn2row,
        BoundFamily::MaxPalIn3rowPal,
        BoundFamily::MinHvInfinite,
        BoundFamily::MinHvInfiniteNontrivial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundFamily::CountPal2d => "count-pal2d",
            BoundFamily::CountHv => "count-hv",
            BoundFamily::MaxHvInWord => "max-hv-in-word",
            BoundFamily::MaxPalInPal => "max-pal-in-pal",
            BoundFamily::MaxHvInHv => "max-hv-in-hv",
            BoundFamily::MaxPalIn2row => "max-pal-in-2row",
            BoundFamily::MaxPalIn3rowPal => "max-pal-in-3row-pal",
            BoundFamily::MinHvInfinite => "min-hv-infinite",
            BoundFamily::MinHvInfiniteNontrivial => "min-hv-infinite-nontrivial",
        }
    }
}

impl fmt::Display for BoundFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('_', "-");
        BoundFamily::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| Error::Domain(format!("unknown bound family `{s}`")))
    }
}

/// Parameters a family may read. Unused ones are ignored.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BoundParams {
    pub q: Option<usize>,
    pub m: Option<usize>,
    pub n: Option<usize>,
    /// Only read by `max-pal-in-2row`: the word is itself a palindrome.
    pub palindromic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundFormula {
    pub family: BoundFamily,
    pub params: BoundParams,
    pub value: BoundValue,
}

pub fn evaluate(family: BoundFamily, params: BoundParams) -> Result<BoundFormula> {
    let need = |v: Option<usize>, name: &str| {
        v.ok_or_else(|| Error::Domain(format!("family `{family}` needs --{name}")))
    };
    let value: BoundValue = match family {
        BoundFamily::CountPal2d | BoundFamily::CountHv => {
            let kind = if family == BoundFamily::CountPal2d {
                PalKind::Pal2d
            } else {
                PalKind::Hv
            };
            BoundValue::Finite(count_palindromes_formula(
                need(params.q, "q")?,
                need(params.m, "m")?,
                need(params.n, "n")?,
                kind,
            )?)
        }
        BoundFamily::MaxHvInWord => {
            max_hv_bound(need(params.m, "m")?, need(params.n, "n")?)?.into()
        }
        BoundFamily::MaxPalInPal => {
            max_pal_in_palindrome_bound(need(params.m, "m")?, need(params.n, "n")?)?.into()
        }
        BoundFamily::MaxHvInHv => {
            max_hv_in_hv_bound(need(params.m, "m")?, need(params.n, "n")?)?.into()
        }
        BoundFamily::MaxPalIn2row => {
            max_pal_in_2row(need(params.n, "n")?, params.palindromic)?.into()
        }
        BoundFamily::MaxPalIn3rowPal => max_pal_in_3row_palindrome(need(params.n, "n")?)?.into(),
        BoundFamily::MinHvInfinite => min_hv_infinite(need(params.q, "q")?, false)?,
        BoundFamily::MinHvInfiniteNontrivial => min_hv_infinite(need(params.q, "q")?, true)?,
    };
    Ok(BoundFormula {
        family,
        params,
        value,
    })
}

fn require_periods(rows: usize, cols: usize) -> Result<()> {
    if rows == 0 || cols == 0 {
        return Err(Error::Domain("periods must be at least 1".into()));
    }
    Ok(())
}

fn require_alphabet(q: usize, min: usize) -> Result<()> {
    if q < min || q > 26 {
        return Err(Error::Domain(format!(
            "alphabet size must be in {min}..=26 (got {q})"
        )));
    }
    Ok(())
}

/// Binary word with exactly 14 HV-palindromes once tiled at least twice.
///
/// The period is the 6×6 block whose first row is `ababba` and whose every
/// next row is the previous one shifted left by one.
pub fn construct_binary_min_word(periods_rows: usize, periods_cols: usize) -> Result<Word2D> {
    require_periods(periods_rows, periods_cols)?;
    let base: Vec<Symbol> = "ababba".chars().map(Symbol).collect();
    let block = Word2D::from_fn(6, 6, |i, j| base[(i + j) % 6]);
    Ok(block.row_power(periods_rows).col_power(periods_cols))
}

/// `q×q` cyclic block (row `i` starts at `a_i`) tiled; only the `q` trivial
/// HV-palindromes occur.
pub fn construct_q_min_word(q: usize, periods_rows: usize, periods_cols: usize) -> Result<Word2D> {
    require_alphabet(q, 3)?;
    require_periods(periods_rows, periods_cols)?;
    let block = Word2D::from_fn(q, q, |i, j| nth_symbol((i + j) % q));
    Ok(block.row_power(periods_rows).col_power(periods_cols))
}

/// Ternary word whose only non-trivial HV-palindromes are `aa` and `a⊖b⊖a`.
///
/// First row `a·(abc)^c`; below it `periods_rows` copies of
/// `bca ⊖ abc ⊖ cab`, each row continued periodically to the same width.
pub fn construct_q3_nontrivial_word(periods_rows: usize, periods_cols: usize) -> Result<Word2D> {
    require_periods(periods_rows, periods_cols)?;
    const BODY: [&str; 3] = ["bca", "abc", "cab"];
    let width = 1 + 3 * periods_cols;
    let height = 1 + 3 * periods_rows;
    Ok(Word2D::from_fn(height, width, |i, j| {
        if i == 0 {
            if j == 0 {
                Symbol('a')
            } else {
                Symbol(b"abc"[(j - 1) % 3] as char)
            }
        } else {
            Symbol(BODY[(i - 1) % 3].as_bytes()[j % 3] as char)
        }
    }))
}

/// Word over `q >= 4` symbols whose only non-trivial HV-palindrome is
/// `a_1 ⊖ a_1`.
///
/// The `q×(q-1)` period has first row `a_1 … a_{q-1}`; row `r >= 2` starts
/// with `a_{r-1}` and continues `a_{r+1}, a_{r+2}, …` cyclically.
pub fn construct_q_nontrivial_word(
    q: usize,
    periods_rows: usize,
    periods_cols: usize,
) -> Result<Word2D> {
    require_alphabet(q, 4)?;
    require_periods(periods_rows, periods_cols)?;
    // 0-based: row 0 is a_0..a_{q-2}; row r >= 1 is a_{r-1}, a_{r+1}, ..., a_{r+q-2}.
    let block = Word2D::from_fn(q, q - 1, |r, j| {
        let idx = match (r, j) {
            (0, j) => j,
            (r, 0) => r - 1,
            (r, j) => (r + j) % q,
        };
        nth_symbol(idx)
    });
    Ok(block.row_power(periods_rows).col_power(periods_cols))
}

/// Named construction families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructFamily {
    BinaryMin,
    QMin,
    Q3Nontrivial,
    QNontrivial,
}

impl ConstructFamily {
    pub fn name(self) -> &'static str {
        match self {
            ConstructFamily::BinaryMin => "binary-min",
            ConstructFamily::QMin => "q-min",
            ConstructFamily::Q3Nontrivial => "q3-nontrivial",
            ConstructFamily::QNontrivial => "q-nontrivial",
        }
    }

    pub fn build(self, q: usize, periods_rows: usize, periods_cols: usize) -> Result<Word2D> {
        match self {
            ConstructFamily::BinaryMin => construct_binary_min_word(periods_rows, periods_cols),
            ConstructFamily::QMin => construct_q_min_word(q, periods_rows, periods_cols),
            ConstructFamily::Q3Nontrivial => {
                construct_q3_nontrivial_word(periods_rows, periods_cols)
            }
            ConstructFamily::QNontrivial => {
                construct_q_nontrivial_word(q, periods_rows, periods_cols)
            }
        }
    }

    /// HV-palindrome count the infinite word is claimed to have.
    pub fn expected_hv_count(self, q: usize) -> Result<u64> {
        let v = match self {
            ConstructFamily::BinaryMin => min_hv_infinite(2, false)?,
            ConstructFamily::QMin => min_hv_infinite(q, false)?,
            ConstructFamily::Q3Nontrivial => min_hv_infinite(3, true)?,
            ConstructFamily::QNontrivial => min_hv_infinite(q, true)?,
        };
        match v {
            BoundValue::Finite(v) => Ok(v.try_into().expect("small")),
            BoundValue::Infinite => Err(Error::Domain("unbounded".into())),
        }
    }
}

impl fmt::Display for ConstructFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            ConstructFamily::BinaryMin,
            ConstructFamily::QMin,
            ConstructFamily::Q3Nontrivial,
            ConstructFamily::QNontrivial,
        ]
        .into_iter()
        .find(|f| f.name() == s)
        .ok_or_else(|| Error::Domain(format!("unknown construction family `{s}`")))
    }
}

/// HV-factor counts of a construction at `periods` and `2 * periods`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Stabilization {
    pub periods: (usize, usize),
    pub count: usize,
    pub doubled_count: usize,
}

impl Stabilization {
    pub fn is_stable(&self) -> bool {
        self.count == self.doubled_count
    }
}

pub fn stabilization(
    family: ConstructFamily,
    q: usize,
    periods_rows: usize,
    periods_cols: usize,
) -> Result<Stabilization> {
    let count = count_palindromic_factors(
        &family.build(q, periods_rows, periods_cols)?,
        FactorKind::Hv,
    )?;
    let doubled_count = count_palindromic_factors(
        &family.build(q, 2 * periods_rows, 2 * periods_cols)?,
        FactorKind::Hv,
    )?;
    Ok(Stabilization {
        periods: (periods_rows, periods_cols),
        count,
        doubled_count,
    })
}
