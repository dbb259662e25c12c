//! Certificate transformers relating the word norm, `ν_n`, and the
//! `(ν_n, p, q)`-commutator length.
//!
//! Conventions: `x^y = y x y⁻¹` and `[x, y] = x y x⁻¹ y⁻¹`.

use crate::error::{Error, Result};
use crate::handle::WordProblem;
use crate::norms::certificate::{
    CommutatorCertificate, CommutatorFactor, ConjugatedFactor, ConjugatedLetterCertificate,
    NormBounds, NuFactor, NuWitness,
};
use crate::norms::bounds::biinvariant_upper;
use crate::norms::displacement::build_displacement_braid;
use crate::signature::sigma;
use crate::word::{commutator, BraidWord};

/// `[x, y] = z^{xy} · (z⁻¹)^x · z · (z⁻¹)^y`, valid whenever `x` commutes
/// with `y^z`. Returned as `(exponent, conjugator)` pairs on the base `z`.
pub fn lemma_conj_factorization(
    x: &BraidWord,
    y: &BraidWord,
    z: &BraidWord,
) -> Result<Vec<ConjugatedFactor>> {
    let wp = WordProblem::default();
    if !wp.is_trivial(&commutator(x, &y.conjugate(z)))? {
        return Err(Error::HypothesisViolated);
    }
    let factors = four_conjugates(x, y);
    let cert = ConjugatedLetterCertificate {
        target: commutator(x, y),
        base: z.clone(),
        factors: factors.clone(),
    };
    cert.validate_with(&wp)?;
    Ok(factors)
}

fn four_conjugates(x: &BraidWord, y: &BraidWord) -> Vec<ConjugatedFactor> {
    vec![
        ConjugatedFactor::new(1, x.product(y)),
        ConjugatedFactor::new(-1, x.clone()),
        ConjugatedFactor::new(1, BraidWord::identity()),
        ConjugatedFactor::new(-1, y.clone()),
    ]
}

/// A conjugate `(σ1^ε)^c` kept in factored form.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Letter {
    exponent: i32,
    conjugator: BraidWord,
}

impl Letter {
    fn word(&self) -> BraidWord {
        BraidWord::generator_power(1, i64::from(self.exponent)).conjugate(&self.conjugator)
    }

    fn conjugated_by(&self, u: &BraidWord) -> Letter {
        Letter {
            exponent: self.exponent,
            conjugator: u.product(&self.conjugator),
        }
    }
}

fn letters_of(c: &ConjugatedLetterCertificate) -> Vec<Letter> {
    c.factors
        .iter()
        .map(|f| Letter {
            exponent: f.exponent,
            conjugator: f.conjugator.clone(),
        })
        .collect()
}

fn conj_pairs(pairs: Vec<(Letter, Letter)>, u: &BraidWord) -> Vec<(Letter, Letter)> {
    pairs
        .into_iter()
        .map(|(a, b)| (a.conjugated_by(u), b.conjugated_by(u)))
        .collect()
}

/// `[a, v_1 ⋯ v_b] = [a, v_1] · [a, v_2 ⋯ v_b]^{v_1}`.
fn expand_right(a: &Letter, vs: &[Letter]) -> Vec<(Letter, Letter)> {
    let Some((v1, rest)) = vs.split_first() else {
        return Vec::new();
    };
    let mut out = vec![(a.clone(), v1.clone())];
    out.extend(conj_pairs(expand_right(a, rest), &v1.word()));
    out
}

/// `[u_1 ⋯ u_a, G] = [u_2 ⋯ u_a, G]^{u_1} · [u_1, G]`, peeling from the left.
fn expand_left(us: &[Letter], vs: &[Letter]) -> Vec<(Letter, Letter)> {
    let Some((u1, rest)) = us.split_first() else {
        return Vec::new();
    };
    let mut out = conj_pairs(expand_left(rest, vs), &u1.word());
    out.extend(expand_right(u1, vs));
    out
}

fn single_witness(l: &Letter, n: usize) -> NuWitness {
    NuWitness {
        element: l.word(),
        n,
        factors: vec![NuFactor {
            piece: BraidWord::generator_power(1, i64::from(l.exponent)),
            conjugator: l.conjugator.clone(),
        }],
    }
}

/// Rewrites a commutator certificate into one whose factors all have the
/// form `[k^a, l^b]` with `k, l ∈ {σ1^{±1}}`, using
/// `[ar, b] = [r, b]^a [a, b]` and `[a, bs] = [a, b] [a, s]^b`.
///
/// `expansions[i]` writes `f_i` and `g_i` as products of conjugates of
/// `σ1^{±1}`. A factor whose entries expand to `a` and `b` letters becomes
/// `a · b` factors, each entry carrying a one-factor `ν_n` witness.
pub fn welldef_rewrite(
    cert: &CommutatorCertificate,
    expansions: &[(ConjugatedLetterCertificate, ConjugatedLetterCertificate)],
    bounds: NormBounds,
) -> Result<CommutatorCertificate> {
    let wp = WordProblem::default();
    cert.validate_with(&wp)?;
    if expansions.len() != cert.factors.len() {
        return Err(Error::InvalidCertificate(format!(
            "{} expansions for {} factors",
            expansions.len(),
            cert.factors.len()
        )));
    }
    let mut pairs = Vec::new();
    for (i, (factor, (ef, eg))) in cert.factors.iter().zip(expansions).enumerate() {
        for (e, entry, name) in [(ef, &factor.f, "f"), (eg, &factor.g, "g")] {
            if !e.is_word_norm() {
                return Err(Error::InvalidCertificate(format!(
                    "factor {i}: {name} expansion is not in conjugates of σ1"
                )));
            }
            e.validate_with(&wp)?;
            if !wp.equals(&e.target, entry)? {
                return Err(Error::InvalidCertificate(format!(
                    "factor {i}: {name} expansion is for another element"
                )));
            }
        }
        pairs.extend(expand_left(&letters_of(ef), &letters_of(eg)));
    }
    let out = CommutatorCertificate {
        target: cert.target.clone(),
        bounds: Some(bounds),
        factors: pairs
            .into_iter()
            .map(|(a, b)| CommutatorFactor {
                f: a.word(),
                g: b.word(),
                f_witness: Some(single_witness(&a, bounds.n)),
                g_witness: Some(single_witness(&b, bounds.n)),
            })
            .collect(),
    };
    out.validate_with(&wp)?;
    Ok(out)
}

/// Result of [`extrc_decompose`]: `target = product(commutators) · σ1^residual`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtrCDecomposition {
    pub commutators: CommutatorCertificate,
    pub residual_exponent: i64,
}

/// From `target = Π (σ1^{ε_i})^{α_i}`, writes
/// `target = Π [σ1^{s_{i-1}} α_i σ1^{-s_{i-1}}, σ1^{ε_i}] · σ1^{s_k}` with
/// `s_i = ε_1 + ⋯ + ε_i`: one commutator per input factor, since
/// `(σ1^ε)^α = [α, σ1^ε] σ1^ε`.
pub fn extrc_decompose(cert: &ConjugatedLetterCertificate) -> Result<ExtrCDecomposition> {
    if !cert.is_word_norm() {
        return Err(Error::InvalidCertificate("expected conjugates of σ1".into()));
    }
    let wp = WordProblem::default();
    cert.validate_with(&wp)?;
    let mut s: i64 = 0;
    let mut factors = Vec::with_capacity(cert.len());
    for f in &cert.factors {
        let shift = BraidWord::generator_power(1, s);
        factors.push(CommutatorFactor::plain(
            f.conjugator.conjugate(&shift),
            BraidWord::generator_power(1, i64::from(f.exponent)),
        ));
        s += i64::from(f.exponent);
    }
    let commutators = CommutatorCertificate {
        target: cert.target.product(&BraidWord::generator_power(1, -s)),
        bounds: None,
        factors,
    };
    commutators.validate_with(&wp)?;
    Ok(ExtrCDecomposition {
        commutators,
        residual_exponent: s,
    })
}

fn require_commutator_subgroup(w: &BraidWord) -> Result<()> {
    match w.exponent_sum() {
        0 => Ok(()),
        e => Err(Error::NotInCommutatorSubgroup(e)),
    }
}

/// Constrained certificate for `cl_{ν_n,p,q}(w)`: word-norm certificate,
/// then [`extrc_decompose`], then [`welldef_rewrite`]. Every entry carries a
/// `ν_n <= 1 <= min(p, q)` witness.
///
/// The `i`-th commutator `[σ1^s α_i σ1^{-s}, σ1^{ε_i}]` is expanded letter by
/// letter: `σ1^s α_i σ1^{-s}` is the product of the conjugates of the letters
/// of `α_i` by `σ1^s`. A letter `σ_j^{±1}` of `w` therefore contributes
/// `|α_i| = 2(j-1)` factors.
pub fn cl_upper(w: &BraidWord, n: usize, p: u32, q: u32) -> Result<CommutatorCertificate> {
    let bounds = NormBounds::new(n, p, q)?;
    require_commutator_subgroup(w)?;
    let letters = biinvariant_upper(w);
    let dec = extrc_decompose(&letters)?;
    debug_assert_eq!(dec.residual_exponent, 0);

    let mut s: i64 = 0;
    let mut expansions = Vec::with_capacity(letters.len());
    for (lf, cf) in letters.factors.iter().zip(&dec.commutators.factors) {
        let shift = BraidWord::generator_power(1, s);
        let f_exp = biinvariant_upper(&lf.conjugator);
        let f_exp = ConjugatedLetterCertificate {
            target: cf.f.clone(),
            base: f_exp.base,
            factors: f_exp
                .factors
                .into_iter()
                .map(|x| ConjugatedFactor::new(x.exponent, shift.product(&x.conjugator)))
                .collect(),
        };
        let g_exp = ConjugatedLetterCertificate {
            target: cf.g.clone(),
            base: ConjugatedLetterCertificate::sigma1(),
            factors: vec![ConjugatedFactor::new(lf.exponent, BraidWord::identity())],
        };
        expansions.push((f_exp, g_exp));
        s += i64::from(lf.exponent);
    }
    welldef_rewrite(&dec.commutators, &expansions, bounds)
}

/// Constant `K(n, p, q)` with `|σ(h)| <= K · cl_{ν_n,p,q}(h)`.
///
/// With `μ = min(p, q)`:
/// - the defect `|σ(ab) - σ(a) - σ(b)|` is at most `n` when `ν_n(b) = 1`,
///   hence at most `(2ν_n(b) - 1) n` by peeling one conjugate at a time;
/// - `[f, g] = g^f · g⁻¹ = f · (f⁻¹)^g`, and `σ` is conjugation invariant and
///   odd, so `|σ([f, g])| <= (2μ - 1) n`, while `ν_n([f, g]) <= 2μ`;
/// - appending a commutator to a product costs at most `(4μ - 1) n`.
///
/// Summing over `k` commutators: `|σ(h)| <= k (2μ-1) n + (k-1)(4μ-1) n < k n (6μ - 2)`.
pub fn cl_constant(n: usize, p: u32, q: u32) -> u64 {
    let mu = u64::from(p.min(q));
    n as u64 * (6 * mu - 2)
}

/// Lower bound for `cl_{ν_n,p,q}(w)` together with the constant used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClLowerBound {
    pub bound: u64,
    pub constant: u64,
    pub sigma: i64,
}

/// `⌈|σ(w)| / K(n, p, q)⌉`, see [`cl_constant`].
pub fn cl_lower(w: &BraidWord, n: usize, p: u32, q: u32) -> Result<ClLowerBound> {
    NormBounds::new(n, p, q)?;
    require_commutator_subgroup(w)?;
    let s = sigma(w);
    let k = cl_constant(n, p, q);
    Ok(ClLowerBound {
        bound: s.unsigned_abs().div_ceil(k),
        constant: k,
        sigma: s,
    })
}

/// Turns a commutator certificate whose entries all have `ν_n = 1`
/// witnesses into a product of `4 ×` (factor count) conjugates of `Δ^{±1}`,
/// for a single displacement braid `Δ`.
///
/// For a factor `[f, g]` with `g = γ k γ⁻¹`, `k ∈ B_n`, put
/// `x = γ⁻¹ f γ`. Then `[f, g] = [x, k]^γ`; choosing the offset `m` of `Δ`
/// at least the width of every such `x` makes `x` commute with `k^Δ`, and
/// [`lemma_conj_factorization`] applies.
pub fn extrb_transform(cert: &CommutatorCertificate) -> Result<ConjugatedLetterCertificate> {
    let wp = WordProblem::default();
    cert.validate_with(&wp)?;
    let bounds = cert
        .bounds
        .ok_or_else(|| Error::MissingWitness("certificate is unconstrained".into()))?;
    let n = bounds.n;

    let mut prepared = Vec::with_capacity(cert.len());
    for (i, f) in cert.factors.iter().enumerate() {
        for (wit, name) in [(&f.f_witness, "f"), (&f.g_witness, "g")] {
            match wit {
                Some(w) if w.len() <= 1 => {}
                Some(_) => {
                    return Err(Error::MissingWitness(format!(
                        "factor {i}: {name} witness has more than one factor"
                    )))
                }
                None => return Err(Error::MissingWitness(format!("factor {i}: {name}"))),
            }
        }
        let gw = f.g_witness.as_ref().unwrap();
        let (k, gamma) = match gw.factors.first() {
            Some(nf) => (nf.piece.clone(), nf.conjugator.clone()),
            None => (BraidWord::identity(), BraidWord::identity()),
        };
        let x = f.f.conjugate(&gamma.inverse());
        prepared.push((x, k, gamma));
    }

    let m = prepared
        .iter()
        .map(|(x, _, _)| x.width())
        .max()
        .unwrap_or(1)
        .max(n);
    let delta = build_displacement_braid(n, m)?;

    let mut factors = Vec::with_capacity(4 * cert.len());
    for (x, k, gamma) in &prepared {
        for c in four_conjugates(x, k) {
            factors.push(ConjugatedFactor::new(c.exponent, gamma.product(&c.conjugator)));
        }
    }
    let out = ConjugatedLetterCertificate {
        target: cert.target.clone(),
        base: delta.word,
        factors,
    };
    out.validate_with(&wp)?;
    Ok(out)
}
