#![allow(dead_code)]

use gridpal::word2d::nth_symbol;
use gridpal::Word2D;
use rand::Rng;

/// Every `q`-ary word of shape `(m, n)`, row-major odometer order.
pub fn all_words(q: usize, m: usize, n: usize) -> impl Iterator<Item = Word2D> {
    let cells = m * n;
    let total = (q as u64).pow(cells as u32);
    (0..total).map(move |mut c| {
        let mut digits = vec![0usize; cells];
        for d in digits.iter_mut().rev() {
            *d = (c % q as u64) as usize;
            c /= q as u64;
        }
        Word2D::from_fn(m, n, |i, j| nth_symbol(digits[i * n + j]))
    })
}

/// All binary words with both sides at most `max`.
pub fn binary_words_up_to(max: usize) -> impl Iterator<Item = Word2D> {
    (1..=max).flat_map(move |m| (1..=max).flat_map(move |n| all_words(2, m, n)))
}

pub fn random_word<R: Rng>(rng: &mut R, q: usize, max: usize) -> Word2D {
    let m = rng.gen_range(1..=max);
    let n = rng.gen_range(1..=max);
    Word2D::from_fn(m, n, |_, _| nth_symbol(rng.gen_range(0..q)))
}
