//! Exact signature of symmetric integer matrices and the braid signature
//! `σ: B_∞ → Z`.
//!
//! The signature is computed by congruence diagonalization in fraction-free
//! form: after `k` pivots the active block holds `M_k · S_k`, where `S_k` is
//! the Schur complement and `M_k` the product of the pivots so far, so every
//! division is exact. The `k`-th diagonal entry of the `LDLᵀ` form has the
//! sign of `pivot_k · pivot_{k-1}`. When every remaining diagonal entry is
//! zero but the block is not, adding row/column `t` to row/column `s` gives
//! the diagonal entry `2 a_st ≠ 0`; this is the hyperbolic-plane case.
//!
//! Arithmetic runs in `i64`, then `i128`, and finally `BigInt`, restarting
//! at the next width on overflow.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::closure::seifert_matrix;
use crate::error::{Error, Result};
use crate::word::BraidWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignatureValue {
    pub sigma: i64,
    pub nullity: usize,
}

trait Exact: Clone {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn signum(&self) -> i32;
    fn abs_cmp_lt(&self, other: &Self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    /// `(a*b - c*d) / e`, exact.
    fn bareiss(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self>;
}

impl Exact for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn signum(&self) -> i32 {
        i64::signum(*self) as i32
    }
    fn abs_cmp_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn bareiss(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        let x = a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)?;
        debug_assert_eq!(x % e, 0);
        Some(x / e)
    }
}

impl Exact for i128 {
    fn from_i64(v: i64) -> Self {
        i128::from(v)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn signum(&self) -> i32 {
        i128::signum(*self) as i32
    }
    fn abs_cmp_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn bareiss(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        let x = a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)?;
        debug_assert_eq!(x % e, 0);
        Some(x / e)
    }
}

impl Exact for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn signum(&self) -> i32 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
    fn abs_cmp_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn bareiss(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        let x = a * b - c * d;
        debug_assert!(Zero::is_zero(&(&x % e)));
        Some(x / e)
    }
}

fn swap_sym<T>(a: &mut [Vec<T>], s: usize, t: usize) {
    if s == t {
        return;
    }
    a.swap(s, t);
    for row in a.iter_mut() {
        row.swap(s, t);
    }
}

fn diagonalize<T: Exact>(mut a: Vec<Vec<T>>) -> Option<SignatureValue> {
    let n = a.len();
    let mut prev = T::from_i64(1);
    let (mut pos, mut neg) = (0i64, 0i64);
    let mut nullity = 0;

    for k in 0..n {
        let mut pivot: Option<usize> = None;
        for t in k..n {
            if !a[t][t].is_zero() && pivot.is_none_or(|p| a[t][t].abs_cmp_lt(&a[p][p])) {
                pivot = Some(t);
            }
        }
        if pivot.is_none() {
            let pair = (k..n)
                .flat_map(|s| (s + 1..n).map(move |t| (s, t)))
                .find(|&(s, t)| !a[s][t].is_zero());
            let Some((s, t)) = pair else {
                nullity = n - k;
                break;
            };
            // row/column s += row/column t on the active block
            for j in k..n {
                let v = a[s][j].add(&a[t][j])?;
                a[s][j] = v;
            }
            for i in k..n {
                let v = a[i][s].add(&a[i][t])?;
                a[i][s] = v;
            }
            debug_assert!(!a[s][s].is_zero());
            pivot = Some(s);
        }
        let t = pivot.unwrap();
        swap_sym(&mut a, k, t);

        let p = a[k][k].clone();
        if p.signum() * prev.signum() > 0 {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            for j in i..n {
                let v = T::bareiss(&p, &a[i][j], &a[i][k], &a[k][j], &prev)?;
                a[i][j] = v.clone();
                a[j][i] = v;
            }
        }
        prev = p;
    }
    Some(SignatureValue {
        sigma: pos - neg,
        nullity,
    })
}

/// Signature and nullity of a symmetric integer matrix, computed exactly.
pub fn matrix_signature(s: &[Vec<i64>]) -> Result<SignatureValue> {
    let n = s.len();
    if s.iter().any(|row| row.len() != n) {
        return Err(Error::NotSquare);
    }
    for i in 0..n {
        for j in 0..i {
            if s[i][j] != s[j][i] {
                return Err(Error::NotSymmetric);
            }
        }
    }
    if let Some(v) = diagonalize(s.to_vec()) {
        return Ok(v);
    }
    let wide: Vec<Vec<i128>> = s
        .iter()
        .map(|r| r.iter().map(|&v| i128::from(v)).collect())
        .collect();
    if let Some(v) = diagonalize(wide) {
        return Ok(v);
    }
    let big: Vec<Vec<BigInt>> = s
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    Ok(diagonalize(big).expect("big-integer diagonalization cannot overflow"))
}

/// Same as [`matrix_signature`] but forces arbitrary-precision arithmetic.
pub fn matrix_signature_bigint(s: &[Vec<i64>]) -> Result<SignatureValue> {
    matrix_signature(s)?;
    let big: Vec<Vec<BigInt>> = s
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    Ok(diagonalize(big).expect("big-integer diagonalization cannot overflow"))
}

/// Cancels letters that are inverse across the cyclic boundary.
pub fn cyclically_reduce(w: &BraidWord) -> BraidWord {
    let l = w.free_reduce().into_letters();
    let mut a = 0;
    let mut b = l.len();
    while b - a >= 2 && l[a] == -l[b - 1] {
        a += 1;
        b -= 1;
    }
    BraidWord::from_raw(l[a..b].to_vec())
}

/// Signature and nullity of `V + Vᵀ` for the closure of `w` in `B_n`.
pub fn link_signature_value(w: &BraidWord, n: Option<usize>) -> Result<SignatureValue> {
    let n = n.unwrap_or_else(|| w.width());
    if n < w.width() {
        return Err(Error::StrandCountTooSmall {
            needed: w.width(),
            given: n,
        });
    }
    // conjugation does not change the closure
    let r = cyclically_reduce(w);
    let v = seifert_matrix(&r, n)?;
    matrix_signature(&v.symmetrized())
}

/// The braid signature `σ(w)`: signature of the closure of `w` in `B_n`,
/// `n` defaulting to `width(w)`. Independent of the choice of `n`.
pub fn link_signature(w: &BraidWord, n: Option<usize>) -> Result<i64> {
    Ok(link_signature_value(w, n)?.sigma)
}

/// `σ(w)` for words known to be valid, with no strand override.
pub fn sigma(w: &BraidWord) -> i64 {
    link_signature(w, None).expect("width is always a valid strand count")
}
