//! Braid words over the Artin generators of the infinite braid group.
//!
//! A word is a finite sequence of nonzero integers: `+i` stands for the
//! generator `σ_i`, `-i` for its inverse. No strand count is stored; a word
//! lives in every `B_n` with `n >= width()`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default upper bound on generator indices accepted by the checked
/// constructors.
pub const DEFAULT_MAX_STRAND: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct BraidWord {
    letters: Vec<i32>,
}

/// Closed interval of strand indices touched by a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Support {
    pub lo: usize,
    pub hi: usize,
}

impl Support {
    /// Number of generators spanned; at least 1.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_disjoint(&self, other: &Support) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }
}

impl BraidWord {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Builds a word from raw letters, checking each against
    /// [`DEFAULT_MAX_STRAND`]. The letters are kept as given.
    pub fn new(letters: Vec<i32>) -> Result<Self> {
        Self::with_max_strand(letters, DEFAULT_MAX_STRAND)
    }

    pub fn with_max_strand(letters: Vec<i32>, max_strand: u32) -> Result<Self> {
        for &l in &letters {
            if l == 0 {
                return Err(Error::ZeroLetter);
            }
            if l.unsigned_abs() >= max_strand {
                return Err(Error::StrandIndexTooLarge {
                    index: u64::from(l.unsigned_abs()),
                    max: max_strand,
                });
            }
        }
        Ok(Self { letters })
    }

    /// Internal constructor for letters already known to be valid.
    pub(crate) fn from_raw(letters: Vec<i32>) -> Self {
        debug_assert!(letters.iter().all(|&l| l != 0));
        Self { letters }
    }

    /// `σ_i^exp` as a word (`exp` may be negative).
    pub fn generator_power(i: u32, exp: i64) -> Self {
        assert!(i >= 1, "generator index must be positive");
        let l = if exp >= 0 { i as i32 } else { -(i as i32) };
        Self::from_raw(vec![l; exp.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<i32> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Minimal strand count `n` such that the word lies in `B_n`.
    pub fn width(&self) -> usize {
        self.letters
            .iter()
            .map(|l| l.unsigned_abs() as usize + 1)
            .max()
            .unwrap_or(1)
    }

    /// Iterated cancellation of adjacent inverse pairs.
    pub fn free_reduce(&self) -> Self {
        Self::from_raw(free_reduce_letters(&self.letters))
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|p| p[0] != -p[1])
    }

    pub fn inverse(&self) -> Self {
        Self::from_raw(self.letters.iter().rev().map(|l| -l).collect())
    }

    /// Negates every letter: the braid whose closure is the mirror image.
    pub fn mirror(&self) -> Self {
        Self::from_raw(self.letters.iter().map(|l| -l).collect())
    }

    /// Concatenation without reduction.
    pub fn concat(&self, other: &BraidWord) -> Self {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Self::from_raw(letters)
    }

    /// Free reduction of the concatenation.
    pub fn product(&self, other: &BraidWord) -> Self {
        self.concat(other).free_reduce()
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut letters = Vec::with_capacity(self.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        Self::from_raw(letters).free_reduce()
    }

    /// `self^g = g · self · g^{-1}`, freely reduced.
    pub fn conjugate(&self, g: &BraidWord) -> Self {
        conjugate(self, g)
    }

    /// Translates every generator index by `k`.
    pub fn shift(&self, k: usize) -> Self {
        shift(self, k)
    }

    /// Translates every generator index down by `k`; fails if some letter
    /// would drop below 1.
    pub fn unshift(&self, k: usize) -> Result<Self> {
        let k = k as i32;
        let mut out = Vec::with_capacity(self.len());
        for &l in &self.letters {
            let a = l.abs() - k;
            if a < 1 {
                return Err(Error::InvalidSize(format!(
                    "cannot translate letter {l} down by {k}"
                )));
            }
            out.push(a * l.signum());
        }
        Ok(Self::from_raw(out))
    }

    pub fn exponent_sum(&self) -> i64 {
        exponent_sum(self)
    }

    pub fn support(&self) -> Option<Support> {
        support(self)
    }

    pub fn permutation(&self, n: usize) -> Result<Permutation> {
        underlying_permutation(self, n)
    }

    /// Cyclic rotation by `k` letters to the left.
    pub fn rotate(&self, k: usize) -> Self {
        if self.is_empty() {
            return self.clone();
        }
        let mut letters = self.letters.clone();
        letters.rotate_left(k % self.len());
        Self::from_raw(letters)
    }

    pub fn reversed(&self) -> Self {
        Self::from_raw(self.letters.iter().rev().copied().collect())
    }
}

pub(crate) fn free_reduce_letters(letters: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn free_reduce(w: &BraidWord) -> BraidWord {
    w.free_reduce()
}

pub fn conjugate(w: &BraidWord, g: &BraidWord) -> BraidWord {
    let mut letters = Vec::with_capacity(w.len() + 2 * g.len());
    letters.extend_from_slice(g.letters());
    letters.extend_from_slice(w.letters());
    letters.extend(g.letters().iter().rev().map(|l| -l));
    BraidWord::from_raw(free_reduce_letters(&letters))
}

/// `[f, g] = f g f^{-1} g^{-1}`, freely reduced.
pub fn commutator(f: &BraidWord, g: &BraidWord) -> BraidWord {
    let mut letters = Vec::with_capacity(2 * (f.len() + g.len()));
    letters.extend_from_slice(f.letters());
    letters.extend_from_slice(g.letters());
    letters.extend(f.letters().iter().rev().map(|l| -l));
    letters.extend(g.letters().iter().rev().map(|l| -l));
    BraidWord::from_raw(free_reduce_letters(&letters))
}

pub fn shift(w: &BraidWord, k: usize) -> BraidWord {
    let k = i32::try_from(k).expect("shift amount fits in i32");
    BraidWord::from_raw(
        w.letters()
            .iter()
            .map(|&l| (l.abs() + k) * l.signum())
            .collect(),
    )
}

pub fn exponent_sum(w: &BraidWord) -> i64 {
    w.letters().iter().map(|l| i64::from(l.signum())).sum()
}

pub fn support(w: &BraidWord) -> Option<Support> {
    let lo = w.letters().iter().map(|l| l.unsigned_abs() as usize).min()?;
    let hi = w.letters().iter().map(|l| l.unsigned_abs() as usize).max()? + 1;
    Some(Support { lo, hi })
}

/// Image of `w` under `B_n -> S_n`, `σ_i ↦ (i i+1)`, composed so that the
/// map is a homomorphism: `perm(uv) = perm(u) ∘ perm(v)`.
pub fn underlying_permutation(w: &BraidWord, n: usize) -> Result<Permutation> {
    if n < w.width() {
        return Err(Error::StrandCountTooSmall {
            needed: w.width(),
            given: n,
        });
    }
    // images[p] = perm(p); composing on the right by a transposition swaps
    // the images of i and i+1.
    let mut images: Vec<usize> = (0..n).collect();
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        images.swap(i, i + 1);
    }
    Ok(Permutation::from_zero_based(images))
}

impl Mul for &BraidWord {
    type Output = BraidWord;

    fn mul(self, rhs: &BraidWord) -> BraidWord {
        self.product(rhs)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses whitespace-separated signed integers. The result is freely
/// reduced; empty input is the identity.
pub fn parse_braid_word(text: &str) -> Result<BraidWord> {
    let mut letters = Vec::new();
    for (idx, tok) in text.split_whitespace().enumerate() {
        let position = idx + 1;
        let value: i64 = tok.parse().map_err(|_| Error::Parse {
            position,
            token: tok.to_string(),
            reason: "not an integer",
        })?;
        if value == 0 {
            return Err(Error::Parse {
                position,
                token: tok.to_string(),
                reason: "0 is not an Artin generator",
            });
        }
        if value.unsigned_abs() >= u64::from(DEFAULT_MAX_STRAND) {
            return Err(Error::Parse {
                position,
                token: tok.to_string(),
                reason: "generator index too large",
            });
        }
        letters.push(value as i32);
    }
    Ok(BraidWord::from_raw(free_reduce_letters(&letters)))
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_braid_word(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(l: &[i32]) -> BraidWord {
        BraidWord::new(l.to_vec()).unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        assert_eq!(w(&[1, -1]).free_reduce(), w(&[]));
        assert_eq!(w(&[]).free_reduce(), w(&[]));
        assert_eq!(w(&[1, 2, -2, -1, 3]).free_reduce(), w(&[3]));
    }

    #[test]
    fn zero_letter_rejected() {
        assert_eq!(BraidWord::new(vec![1, 0]), Err(Error::ZeroLetter));
        assert!(matches!(
            BraidWord::with_max_strand(vec![9], 8),
            Err(Error::StrandIndexTooLarge { .. })
        ));
    }

    #[test]
    fn width_of_empty_word_is_one() {
        assert_eq!(w(&[]).width(), 1);
        assert_eq!(w(&[-3, 1]).width(), 4);
    }

    #[test]
    fn conjugation_convention() {
        assert_eq!(conjugate(&w(&[1]), &w(&[])), w(&[1]));
        assert_eq!(conjugate(&w(&[1]), &w(&[1])), w(&[1]));
        assert_eq!(conjugate(&w(&[1]), &w(&[1, 2])), w(&[1, 2, 1, -2, -1]));
    }

    #[test]
    fn commutator_examples() {
        assert_eq!(commutator(&w(&[1]), &w(&[1])), w(&[]));
        let c = commutator(&w(&[1]), &w(&[2]));
        assert!(!c.is_empty());
        assert_eq!(c.exponent_sum(), 0);
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift(&w(&[1]), 0), w(&[1]));
        assert_eq!(shift(&w(&[1, -2]), 3), w(&[4, -5]));
        assert_eq!(shift(&w(&[]), 5), w(&[]));
        assert_eq!(w(&[4, -5]).unshift(3).unwrap(), w(&[1, -2]));
        assert!(w(&[2]).unshift(2).is_err());
    }

    #[test]
    fn permutation_examples() {
        let p = underlying_permutation(&w(&[1]), 2).unwrap();
        assert_eq!(p.images(), &[2, 1]);
        assert!(underlying_permutation(&w(&[1, 1]), 2).unwrap().is_identity());
        let p = underlying_permutation(&w(&[1, 2]), 3).unwrap();
        assert_eq!(p.images(), &[2, 3, 1]);
        assert!(matches!(
            underlying_permutation(&w(&[3]), 3),
            Err(Error::StrandCountTooSmall { .. })
        ));
    }

    #[test]
    fn exponent_sum_examples() {
        assert_eq!(exponent_sum(&w(&[1, 1, 1])), 3);
        assert_eq!(exponent_sum(&w(&[1, -2])), 0);
    }

    #[test]
    fn support_examples() {
        assert_eq!(support(&w(&[3, 3])), Some(Support { lo: 3, hi: 4 }));
        assert_eq!(support(&w(&[])), None);
        assert_eq!(support(&w(&[1, -4])), Some(Support { lo: 1, hi: 5 }));
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_braid_word("1 1 1").unwrap(), w(&[1, 1, 1]));
        assert_eq!(parse_braid_word("").unwrap(), w(&[]));
        assert_eq!(parse_braid_word("  \n ").unwrap(), w(&[]));
        assert_eq!(parse_braid_word("2 1 -1 3").unwrap(), w(&[2, 3]));
        match parse_braid_word("1 x") {
            Err(Error::Parse { position, token, .. }) => {
                assert_eq!(position, 2);
                assert_eq!(token, "x");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_braid_word("1 0"),
            Err(Error::Parse { position: 2, .. })
        ));
    }

    #[test]
    fn display_round_trips() {
        let x = w(&[1, -2, 3]);
        assert_eq!(x.to_string(), "1 -2 3");
        assert_eq!(x.to_string().parse::<BraidWord>().unwrap(), x);
    }
}
