//! Exhaustive search for extremal palindromic complexity.
//!
//! Words of shape `(m, n)` over `q` symbols are visited in row-major base-`q`
//! counting order (the last cell is the least significant digit), so a word
//! is identified by its counter value. The counter range is split into
//! contiguous chunks, one per worker; each worker reduces its chunk to a local
//! optimum and the results are merged.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bounds::{
    check_budget, generate_all_palindromes, max_hv_bound, PalKind, DEFAULT_BUDGET,
};
use crate::error::{Error, Result};
use crate::palindromes::FactorKind;
use crate::word2d::{alphabet, nth_symbol, Word2D};

/// Known binary maxima: `(m, n, maximum HV-palindromic factors, closed-form bound)`.
pub const TABLE1: [(usize, usize, usize, u64); 8] = [
    (3, 2, 6, 6),
    (3, 3, 10, 10),
    (3, 4, 13, 14),
    (3, 5, 17, 18),
    (3, 6, 20, 22),
    (4, 2, 8, 8),
    (4, 3, 13, 14),
    (4, 4, 19, 20),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Max,
    Min,
}

impl Objective {
    fn better(self, a: usize, b: usize) -> bool {
        match self {
            Objective::Max => a > b,
            Objective::Min => a < b,
        }
    }
}

impl std::str::FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "max" => Ok(Objective::Max),
            "min" => Ok(Objective::Min),
            _ => Err(Error::Domain(format!("unknown objective `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of words to visit.
    pub budget: u64,
    /// Number of witnesses to keep.
    pub witnesses: usize,
    /// Worker threads; 0 and 1 both run on the calling thread.
    pub threads: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: DEFAULT_BUDGET,
            witnesses: 4,
            threads: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub shape: (usize, usize),
    pub q: usize,
    pub kind: FactorKind,
    pub objective: Objective,
    /// Carrier restriction, when the scan ranged over palindromes only.
    pub restrict: Option<PalKind>,
    pub optimum: usize,
    pub witnesses: Vec<Word2D>,
    pub words_scanned: u64,
    /// Wall-clock time; left out of serialized output so reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Counts distinct palindromic factors of small words given as symbol
/// indices, reusing its buffers across calls.
///
/// Factors are keyed by packing `(rows, cols, cells)` into a `u128`; words
/// too large for that fall back to hashing the factor contents.
#[derive(Debug, Clone)]
pub struct FactorCounter {
    m: usize,
    n: usize,
    kind: FactorKind,
    bits: u32,
    packed: bool,
    keys: Vec<u128>,
    fallback: HashSet<Vec<u8>>,
    /// `row_pal[(i * n + j1) * n + j2]`: row `i` is a palindrome on `j1..=j2`.
    row_pal: Vec<bool>,
    /// `col_pal[(j * m + i1) * m + i2]`: column `j` is a palindrome on `i1..=i2`.
    col_pal: Vec<bool>,
}

impl FactorCounter {
    pub fn new(m: usize, n: usize, q: usize, kind: FactorKind) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::EmptyWord("FactorCounter"));
        }
        if !matches!(kind, FactorKind::Pal2d | FactorKind::Hv) {
            return Err(Error::Domain(format!(
                "search supports kinds pal2d and hv, not {kind}"
            )));
        }
        let bits = usize::BITS - q.saturating_sub(1).leading_zeros();
        let bits = bits.max(1);
        // Factor shape in the top 8 bits, cells below.
        let packed = m <= 15 && n <= 15 && (m * n) as u32 * bits <= 120;
        Ok(FactorCounter {
            m,
            n,
            kind,
            bits,
            packed,
            keys: Vec::with_capacity(m * m * n * n),
            fallback: HashSet::new(),
            row_pal: vec![false; m * n * n],
            col_pal: vec![false; n * m * m],
        })
    }

    fn fill_line_tables(&mut self, cells: &[u8]) {
        let (m, n) = (self.m, self.n);
        for i in 0..m {
            let row = &cells[i * n..(i + 1) * n];
            for len in 1..=n {
                for j1 in 0..=n - len {
                    let j2 = j1 + len - 1;
                    let pal = row[j1] == row[j2]
                        && (len <= 2 || self.row_pal[(i * n + j1 + 1) * n + j2 - 1]);
                    self.row_pal[(i * n + j1) * n + j2] = pal;
                }
            }
        }
        for j in 0..n {
            for len in 1..=m {
                for i1 in 0..=m - len {
                    let i2 = i1 + len - 1;
                    let pal = cells[i1 * n + j] == cells[i2 * n + j]
                        && (len <= 2 || self.col_pal[(j * m + i1 + 1) * m + i2 - 1]);
                    self.col_pal[(j * m + i1) * m + i2] = pal;
                }
            }
        }
    }

    fn record(&mut self, cells: &[u8], top: usize, left: usize, h: usize, wd: usize) {
        let n = self.n;
        if self.packed {
            let mut key: u128 = 0;
            for i in top..top + h {
                for &c in &cells[i * n + left..i * n + left + wd] {
                    key = (key << self.bits) | c as u128;
                }
            }
            self.keys
                .push(key | ((h as u128) << 124) | ((wd as u128) << 120));
        } else {
            let mut content = Vec::with_capacity(2 + h * wd);
            content.push(h as u8);
            content.push(wd as u8);
            for i in top..top + h {
                content.extend_from_slice(&cells[i * n + left..i * n + left + wd]);
            }
            self.fallback.insert(content);
        }
    }

    fn block_is_pal2d(&self, cells: &[u8], top: usize, left: usize, h: usize, wd: usize) -> bool {
        let n = self.n;
        let area = h * wd;
        (0..area / 2).all(|k| {
            let (i, j) = (k / wd, k % wd);
            cells[(top + i) * n + left + j] == cells[(top + h - 1 - i) * n + left + wd - 1 - j]
        })
    }

    /// Number of distinct factors of the configured kind in `cells`
    /// (row-major symbol indices of an `(m, n)` word).
    pub fn count(&mut self, cells: &[u8]) -> usize {
        debug_assert_eq!(cells.len(), self.m * self.n);
        let (m, n) = (self.m, self.n);
        self.keys.clear();
        self.fallback.clear();
        match self.kind {
            FactorKind::Hv => {
                self.fill_line_tables(cells);
                for top in 0..m {
                    for left in 0..n {
                        for right in left..n {
                            let wd = right - left + 1;
                            for bottom in top..m {
                                if !self.row_pal[(bottom * n + left) * n + right] {
                                    break;
                                }
                                let cols_ok = (left..=right)
                                    .all(|j| self.col_pal[(j * m + top) * m + bottom]);
                                if cols_ok {
                                    self.record(cells, top, left, bottom - top + 1, wd);
                                }
                            }
                        }
                    }
                }
            }
            _ => {
                for top in 0..m {
                    for left in 0..n {
                        for h in 1..=m - top {
                            for wd in 1..=n - left {
                                if self.block_is_pal2d(cells, top, left, h, wd) {
                                    self.record(cells, top, left, h, wd);
                                }
                            }
                        }
                    }
                }
            }
        }
        if self.packed {
            self.keys.sort_unstable();
            self.keys.dedup();
            self.keys.len()
        } else {
            self.fallback.len()
        }
    }
}

fn word_to_indices(w: &Word2D, q: usize) -> Vec<u8> {
    w.cells()
        .iter()
        .map(|s| {
            let idx = (s.0 as u32).wrapping_sub('a' as u32) as usize;
            assert!(idx < q, "symbol {s} outside the first {q} letters");
            idx as u8
        })
        .collect()
}

fn indices_to_word(m: usize, n: usize, cells: &[u8]) -> Word2D {
    Word2D::new(
        m,
        n,
        cells.iter().map(|&c| nth_symbol(c as usize)).collect(),
    )
    .expect("sized")
}

fn counter_to_cells(mut counter: u64, q: usize, len: usize) -> Vec<u8> {
    let mut cells = vec![0u8; len];
    for c in cells.iter_mut().rev() {
        *c = (counter % q as u64) as u8;
        counter /= q as u64;
    }
    cells
}

fn increment(cells: &mut [u8], q: usize) {
    for c in cells.iter_mut().rev() {
        *c += 1;
        if (*c as usize) < q {
            return;
        }
        *c = 0;
    }
}

/// Local reduction: optimum and the smallest counters reaching it.
#[derive(Debug, Clone, Default)]
struct Partial {
    optimum: Option<usize>,
    witnesses: Vec<u64>,
}

impl Partial {
    fn offer(&mut self, value: usize, counter: u64, objective: Objective, keep: usize) {
        match self.optimum {
            Some(best) if objective.better(value, best) => {
                self.optimum = Some(value);
                self.witnesses.clear();
                if keep > 0 {
                    self.witnesses.push(counter);
                }
            }
            Some(best) if best == value => {
                if self.witnesses.len() < keep {
                    self.witnesses.push(counter);
                }
            }
            Some(_) => {}
            None => {
                self.optimum = Some(value);
                if keep > 0 {
                    self.witnesses.push(counter);
                }
            }
        }
    }

    fn merge(mut self, other: Partial, objective: Objective, keep: usize) -> Partial {
        match (self.optimum, other.optimum) {
            (None, _) => other,
            (_, None) => self,
            (Some(a), Some(b)) if objective.better(b, a) => other,
            (Some(a), Some(b)) if a == b => {
                self.witnesses.extend(other.witnesses);
                self.witnesses.sort_unstable();
                self.witnesses.truncate(keep);
                self
            }
            _ => self,
        }
    }
}

#[derive(Clone, Copy)]
struct Job {
    m: usize,
    n: usize,
    q: usize,
    kind: FactorKind,
    objective: Objective,
    keep: usize,
}

fn scan_range(job: Job, start: u64, end: u64) -> Result<Partial> {
    let Job {
        m,
        n,
        q,
        kind,
        objective,
        keep,
    } = job;
    let mut counter = FactorCounter::new(m, n, q, kind)?;
    let mut cells = counter_to_cells(start, q, m * n);
    let mut partial = Partial::default();
    for c in start..end {
        let value = counter.count(&cells);
        partial.offer(value, c, objective, keep);
        increment(&mut cells, q);
    }
    Ok(partial)
}

fn validate(q: usize, m: usize, n: usize, kind: FactorKind) -> Result<()> {
    if !(1..=26).contains(&q) {
        return Err(Error::Domain(format!(
            "alphabet size must be in 1..=26 (got {q})"
        )));
    }
    if m == 0 || n == 0 {
        return Err(Error::Domain(format!("shape ({m},{n}) must be non-empty")));
    }
    if !matches!(kind, FactorKind::Pal2d | FactorKind::Hv) {
        return Err(Error::Domain(format!(
            "search supports kinds pal2d and hv, not {kind}"
        )));
    }
    Ok(())
}

/// Scans every word of shape `(m, n)` over `q` symbols and returns the
/// extremal number of distinct factors of `kind`, with the witnesses of
/// smallest counter value.
pub fn exhaustive_extremum(
    q: usize,
    m: usize,
    n: usize,
    kind: FactorKind,
    objective: Objective,
    config: &SearchConfig,
) -> Result<SearchResult> {
    validate(q, m, n, kind)?;
    let total = check_budget(q, m * n, config.budget)?;
    let started = Instant::now();
    let threads = (config.threads.max(1) as u64).min(total) as usize;
    let keep = config.witnesses;
    let job = Job {
        m,
        n,
        q,
        kind,
        objective,
        keep,
    };

    let partial = if threads <= 1 {
        scan_range(job, 0, total)?
    } else {
        let chunk = total.div_ceil(threads as u64);
        let parts: Vec<Result<Partial>> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..threads as u64)
                .map(|t| {
                    let start = t * chunk;
                    let end = ((t + 1) * chunk).min(total);
                    s.spawn(move || scan_range(job, start, end))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search worker panicked"))
                .collect()
        });
        let mut acc = Partial::default();
        for p in parts {
            acc = acc.merge(p?, objective, keep);
        }
        acc
    };

    let mut counters = partial.witnesses;
    counters.sort_unstable();
    counters.truncate(keep);
    Ok(SearchResult {
        shape: (m, n),
        q,
        kind,
        objective,
        restrict: None,
        optimum: partial.optimum.unwrap_or(0),
        witnesses: counters
            .into_iter()
            .map(|c| indices_to_word(m, n, &counter_to_cells(c, q, m * n)))
            .collect(),
        words_scanned: total,
        elapsed: started.elapsed(),
    })
}

/// Like [`exhaustive_extremum`] but ranges only over palindromic carriers of
/// kind `restrict`, in generator order.
pub fn exhaustive_extremum_restricted(
    q: usize,
    m: usize,
    n: usize,
    kind: FactorKind,
    objective: Objective,
    restrict: PalKind,
    config: &SearchConfig,
) -> Result<SearchResult> {
    validate(q, m, n, kind)?;
    let started = Instant::now();
    let stream = generate_all_palindromes(&alphabet(q), m, n, restrict, config.budget)?;
    let total = stream.len_hint();
    let mut counter = FactorCounter::new(m, n, q, kind)?;
    let mut optimum: Option<usize> = None;
    let mut witnesses = Vec::new();
    for word in stream {
        let value = counter.count(&word_to_indices(&word, q));
        match optimum {
            Some(best) if !objective.better(value, best) => {
                if value == best && witnesses.len() < config.witnesses {
                    witnesses.push(word);
                }
            }
            _ => {
                optimum = Some(value);
                witnesses.clear();
                if config.witnesses > 0 {
                    witnesses.push(word);
                }
            }
        }
    }
    Ok(SearchResult {
        shape: (m, n),
        q,
        kind,
        objective,
        restrict: Some(restrict),
        optimum: optimum.unwrap_or(0),
        witnesses,
        words_scanned: total,
        elapsed: started.elapsed(),
    })
}

/// Counts distinct factors of a word over the first `q` letters with the
/// search's counter.
pub fn fast_count(w: &Word2D, q: usize, kind: FactorKind) -> Result<usize> {
    let (m, n) = w.shape();
    let mut counter = FactorCounter::new(m, n, q, kind)?;
    Ok(counter.count(&word_to_indices(w, q)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub m: usize,
    pub n: usize,
    pub achieved: usize,
    pub bound: u64,
    /// Known maximum for this shape, when it is one of the tabulated rows.
    pub expected: Option<usize>,
    pub gap: u64,
    pub ok: bool,
    pub witness: Option<Word2D>,
    /// Wall-clock time; left out of serialized output so reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub rows: Vec<TableRow>,
    pub all_ok: bool,
}

/// Binary maximum-HV search for each shape, compared with the closed-form
/// bound and, for the published shapes, the published maximum.
pub fn verify_table(shapes: &[(usize, usize)], config: &SearchConfig) -> Result<TableReport> {
    let mut rows = Vec::with_capacity(shapes.len());
    for &(m, n) in shapes {
        let bound = max_hv_bound(m, n)?;
        let result = exhaustive_extremum(2, m, n, FactorKind::Hv, Objective::Max, config)?;
        let expected = TABLE1
            .iter()
            .find(|&&(tm, tn, _, _)| (tm, tn) == (m, n))
            .map(|&(_, _, max, _)| max);
        let achieved = result.optimum;
        let ok = achieved as u64 <= bound && expected.is_none_or(|e| e == achieved);
        rows.push(TableRow {
            m,
            n,
            achieved,
            bound,
            expected,
            gap: bound.saturating_sub(achieved as u64),
            ok,
            witness: result.witnesses.first().cloned(),
            elapsed: result.elapsed,
        });
    }
    let all_ok = rows.iter().all(|r| r.ok);
    Ok(TableReport { rows, all_ok })
}

pub fn table1_shapes() -> Vec<(usize, usize)> {
    TABLE1.iter().map(|&(m, n, _, _)| (m, n)).collect()
}
