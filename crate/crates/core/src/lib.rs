//! Braid-group computations for conjugation-invariant norms on `B_∞`.
//!
//! - [`word`] and [`perm`]: braid words, free-group operations, permutations.
//! - [`handle`]: exact word problem by handle reduction.
//! - [`closure`] and [`signature`]: Seifert matrices of closed braids and
//!   the exact link signature.
//! - [`norms`]: certified upper bounds and quasimorphism lower bounds for the
//!   biinvariant word norm, `ν_n`, and the `(ν_n, p, q)`-commutator length.
//! - [`quasi`]: defect experiments, stable growth, witness search.
//! - [`cli`]: the command-line driver.

pub mod cli;
pub mod closure;
pub mod error;
pub mod handle;
pub mod norms;
pub mod perm;
pub mod quasi;
pub mod signature;
pub mod word;

pub use error::{Error, Result};
pub use word::BraidWord;
