#![allow(dead_code)]

pub mod goeritz;
pub mod tamper;

use std::ops::RangeInclusive;

use braidnorm::BraidWord;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn w(l: &[i32]) -> BraidWord {
    BraidWord::new(l.to_vec()).unwrap()
}

/// Random (not necessarily reduced) word, independent of the library's own
/// sampler.
pub fn raw_word(rng: &mut ChaCha8Rng, len: usize, strands: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) { g } else { -g }
        })
        .collect();
    BraidWord::new(letters).unwrap()
}

/// `raw_word` with length drawn from `0..=max_len` and strand count from
/// `strands`.
pub fn any_word(rng: &mut ChaCha8Rng, max_len: usize, strands: RangeInclusive<usize>) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let n = rng.gen_range(strands);
    raw_word(rng, len, n)
}

/// `zero_sum_word` with strand count drawn from `strands`.
pub fn any_zero_sum_word(rng: &mut ChaCha8Rng, max_len: usize, strands: RangeInclusive<usize>) -> BraidWord {
    let n = rng.gen_range(strands);
    zero_sum_word(rng, max_len, n)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random word of exponent sum zero and length at most `max_len` (rounded
/// down to even).
pub fn zero_sum_word(rng: &mut ChaCha8Rng, max_len: usize, strands: usize) -> BraidWord {
    use rand::seq::SliceRandom;
    let half = rng.gen_range(0..=max_len / 2);
    let mut letters: Vec<i32> = (0..2 * half)
        .map(|i| {
            let g = rng.gen_range(1..strands as i32);
            if i < half { g } else { -g }
        })
        .collect();
    letters.shuffle(rng);
    BraidWord::new(letters).unwrap()
}

/// `(x, y, z)` with `x` commuting with `y^z = z y z⁻¹`: `y^z` is either
/// supported away from `x` or a power of `x`.
pub fn commuting_triple(rng: &mut ChaCha8Rng) -> (BraidWord, BraidWord, BraidWord) {
    let a = rng.gen_range(2..=4);
    let len = rng.gen_range(1..=5);
    let x = raw_word(rng, len, a);
    let yz = if rng.gen_bool(0.7) {
        let len = rng.gen_range(1..=5);
        raw_word(rng, len, 3).shift(a)
    } else {
        let p = x.pow(rng.gen_range(0..=2));
        if rng.gen_bool(0.5) { p.inverse() } else { p }
    };
    let len = rng.gen_range(0..=6);
    let z = raw_word(rng, len, 7);
    let y = yz.conjugate(&z.inverse());
    (x, y, z)
}
