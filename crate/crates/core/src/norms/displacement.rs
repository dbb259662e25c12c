use crate::error::{Error, Result};
use crate::handle::WordProblem;
use crate::word::BraidWord;

/// A braid `Δ` of exponent sum zero whose conjugation action carries every
/// braid on strands `1..=n` to the same braid on strands `m+1..=m+n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisplacementBraid {
    pub word: BraidWord,
    pub block_size: usize,
    pub offset: usize,
}

/// Positive permutation braid carrying the block of strands `1..=m` to the
/// right across the `n` strands `m+1..=m+n`, built one strand at a time from
/// the rightmost. Its permutation sends `i` to `m + i` for `i <= n`.
pub fn block_transposition(n: usize, m: usize) -> BraidWord {
    let mut letters = Vec::with_capacity(n * m);
    for a in (1..=m).rev() {
        letters.extend((a..a + n).map(|i| i as i32));
    }
    BraidWord::from_raw(letters)
}

/// `Δ = T · T'⁻¹`, with `T` the block transposition and `T'` its translate
/// past strand `m + n`. `T'` commutes with everything on strands `1..=m+n`,
/// so conjugation by `Δ` acts there as conjugation by `T`.
pub fn build_displacement_braid(n: usize, m: usize) -> Result<DisplacementBraid> {
    if n < 1 || m < n {
        return Err(Error::InvalidSize(format!(
            "displacement braid needs n >= 1 and m >= n, got n={n} m={m}"
        )));
    }
    let t = block_transposition(n, m);
    let t_far = t.shift(m + n);
    let d = DisplacementBraid {
        word: t.concat(&t_far.inverse()),
        block_size: n,
        offset: m,
    };
    d.check(&WordProblem::default())?;
    Ok(d)
}

impl DisplacementBraid {
    /// Exact checks of exponent sum and permutation, and of the displacement
    /// property on the generators of `B_n`.
    pub fn check(&self, wp: &WordProblem) -> Result<()> {
        let (n, m) = (self.block_size, self.offset);
        let fail = |what: &str| Err(Error::InvalidSize(format!("displacement braid: {what}")));
        if self.word.exponent_sum() != 0 {
            return fail("nonzero exponent sum");
        }
        let perm = self.word.permutation(self.word.width())?;
        if (1..=n).any(|i| perm.apply(i) != m + i) {
            return fail("permutation does not displace the block");
        }
        for i in 1..n as i32 {
            let x = BraidWord::from_raw(vec![i]);
            if !wp.equals(&x.conjugate(&self.word), &x.shift(m))? {
                return fail("conjugation does not displace a generator");
            }
        }
        Ok(())
    }

    pub fn displace(&self, x: &BraidWord) -> BraidWord {
        x.conjugate(&self.word)
    }
}
