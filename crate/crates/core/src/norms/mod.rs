//! Conjugation-invariant norms on `B_∞`: the biinvariant word norm
//! `‖·‖ = q_{{σ1^{±1}}}`, `ν_n = q_{B_n}`, and `cl_{ν_n,p,q}`.
//!
//! Exact values are not computed. Each norm gets a certified upper bound (a
//! certificate validated by the word-problem solver) and a lower bound from
//! abelianization or the signature quasimorphism.

pub mod bounds;
pub mod certificate;
pub mod displacement;
pub mod rewrite;

pub use bounds::{biinvariant_lower, biinvariant_upper, nu_lower, nu_upper, translation_conjugator};
pub use certificate::{
    Certificate, CommutatorCertificate, CommutatorFactor, ConjugatedFactor,
    ConjugatedLetterCertificate, NormBounds, NuFactor, NuWitness,
};
pub use displacement::{build_displacement_braid, DisplacementBraid};
pub use rewrite::{
    cl_constant, cl_lower, cl_upper, extrb_transform, extrc_decompose, lemma_conj_factorization,
    welldef_rewrite, ClLowerBound, ExtrCDecomposition,
};
