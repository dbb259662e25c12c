//! Upper-bound certificates for `‖·‖` and `ν_n`, and the lower bounds that
//! come from abelianization and the signature quasimorphism.

use crate::error::{Error, Result};
use crate::norms::certificate::{ConjugatedFactor, ConjugatedLetterCertificate, NuFactor, NuWitness};
use crate::signature::sigma;
use crate::word::BraidWord;

/// A braid `g` with `g x g⁻¹ = shift(x, k)` for every `x` supported on
/// strands `1..=block`.
///
/// Each step `σ_{t+1} ⋯ σ_{t+block}` carries a block sitting on strands
/// `t+1..=t+block` one strand to the right under conjugation.
pub fn translation_conjugator(block: usize, k: usize) -> BraidWord {
    let mut letters = Vec::with_capacity(k * block);
    for t in (0..k).rev() {
        letters.extend((t + 1..=t + block).map(|i| i as i32));
    }
    BraidWord::from_raw(letters)
}

/// Witness for `ν_n(w)`. The reduced word is cut greedily into maximal runs
/// whose support spans at most `n` strands; each run is one conjugate of an
/// element of `B_n`. In particular a word spanning at most `n` strands gets a
/// single factor.
pub fn nu_upper(w: &BraidWord, n: usize) -> Result<NuWitness> {
    if n < 2 {
        return Err(Error::InvalidSize(format!("ν_n needs n >= 2, got {n}")));
    }
    let w = w.free_reduce();
    let mut factors = Vec::new();
    let letters = w.letters();
    let mut start = 0;
    while start < letters.len() {
        let mut lo = letters[start].unsigned_abs() as usize;
        let mut hi = lo;
        let mut end = start + 1;
        while end < letters.len() {
            let g = letters[end].unsigned_abs() as usize;
            let (nlo, nhi) = (lo.min(g), hi.max(g));
            // generators lo..=hi touch strands lo..=hi+1
            if nhi - nlo + 2 > n {
                break;
            }
            lo = nlo;
            hi = nhi;
            end += 1;
        }
        let run = BraidWord::from_raw(letters[start..end].to_vec());
        factors.push(NuFactor {
            piece: run.unshift(lo - 1)?,
            conjugator: translation_conjugator(hi - lo + 2, lo - 1),
        });
        start = end;
    }
    Ok(NuWitness {
        element: w,
        n,
        factors,
    })
}

/// `ν_n` lower bound: 1 for a nontrivial element, 0 otherwise.
pub fn nu_lower(w: &BraidWord) -> Result<usize> {
    Ok(usize::from(!crate::handle::is_trivial(w)?))
}

/// Letter-by-letter certificate for the biinvariant word norm:
/// `σ_i^ε = (σ1^ε)^{δ_i}` with `δ_i` the translation by `i - 1`.
pub fn biinvariant_upper(w: &BraidWord) -> ConjugatedLetterCertificate {
    let w = w.free_reduce();
    let factors = w
        .letters()
        .iter()
        .map(|&l| {
            ConjugatedFactor::new(l.signum(), translation_conjugator(2, l.unsigned_abs() as usize - 1))
        })
        .collect();
    ConjugatedLetterCertificate {
        target: w,
        base: ConjugatedLetterCertificate::sigma1(),
        factors,
    }
}

/// `max(|e(w)|, ⌈|σ(w)| / 2⌉)`.
///
/// Each conjugate of `σ1^{±1}` changes the exponent sum by exactly one.
/// It also changes `σ` by at most 2: it has `ν_2 = 1` and `σ(σ1^{±1}) = 0`,
/// and the defect of `σ` against an element of `ν_2 = 1` is at most 2.
pub fn biinvariant_lower(w: &BraidWord) -> u64 {
    let e = w.exponent_sum().unsigned_abs();
    let s = sigma(w).unsigned_abs();
    e.max(s.div_ceil(2))
}
