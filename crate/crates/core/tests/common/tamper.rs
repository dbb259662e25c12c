//! Single-factor tamperings. Each one changes the represented product, so a
//! sound validator has to reject it.

use braidnorm::handle::{equals, is_trivial};
use braidnorm::norms::{CommutatorCertificate, ConjugatedLetterCertificate, NuWitness};
use braidnorm::word::commutator;
use braidnorm::BraidWord;

/// Flips the exponent of factor `i`. Changes the product since the base is
/// nontrivial and braid groups are torsion-free.
pub fn flip_exponent(c: &ConjugatedLetterCertificate, i: usize) -> ConjugatedLetterCertificate {
    let mut t = c.clone();
    t.factors[i].exponent = -t.factors[i].exponent;
    t
}

/// Appends `σ1` to piece `i`, shifting the exponent sum of the product.
pub fn extend_piece(c: &NuWitness, i: usize) -> NuWitness {
    let mut t = c.clone();
    t.factors[i].piece = t.factors[i].piece.concat(&BraidWord::new(vec![1]).unwrap());
    t
}

/// A generator not commuting with `g`, if `g` is nontrivial.
fn non_commuting_generator(g: &BraidWord) -> Option<BraidWord> {
    (1..=g.width() as i32)
        .map(|i| BraidWord::new(vec![i]).unwrap())
        .find(|t| !is_trivial(&commutator(t, g)).unwrap())
}

/// Replaces `[f, g]` in factor `i` by a different element: `[f t, g]` with `t`
/// not commuting with `g`, or `[f, g t]` when `g = 1`, or `[σ1, σ2]` when both
/// entries are trivial. Witnesses are left untouched.
pub fn perturb_entry(c: &CommutatorCertificate, i: usize) -> CommutatorCertificate {
    let mut t = c.clone();
    let fac = &mut t.factors[i];
    if let Some(s) = non_commuting_generator(&fac.g) {
        fac.f = fac.f.concat(&s);
    } else if let Some(s) = non_commuting_generator(&fac.f) {
        fac.g = fac.g.concat(&s);
    } else {
        fac.f = BraidWord::new(vec![1]).unwrap();
        fac.g = BraidWord::new(vec![2]).unwrap();
    }
    assert!(!equals(&t.factors[i].value(), &c.factors[i].value()).unwrap());
    t
}

/// Swaps `f` and `g` (and their witnesses) in factor `i`, turning it into
/// its inverse. `None` when the factor is trivial, where swapping is not a
/// tampering.
pub fn swap_entries(c: &CommutatorCertificate, i: usize) -> Option<CommutatorCertificate> {
    if is_trivial(&c.factors[i].value()).unwrap() {
        return None;
    }
    let mut t = c.clone();
    let fac = &mut t.factors[i];
    std::mem::swap(&mut fac.f, &mut fac.g);
    std::mem::swap(&mut fac.f_witness, &mut fac.g_witness);
    Some(t)
}
