//! Word problem in `B_∞` by Dehornoy handle reduction.
//!
//! A `σ_i`-handle is a subword `σ_i^e v σ_i^{-e}` where `v` contains no
//! `σ_i^{±1}` and no `σ_{i-1}^{±1}`. Reducing it deletes the two ends and
//! replaces each `σ_{i+1}^d` in `v` by `σ_{i+1}^{-e} σ_i^d σ_{i+1}^e`. We always
//! reduce the handle that ends leftmost; its interior holds no handle, so the
//! reduction is permitted and the process terminates. A word is trivial iff
//! it reduces to the empty word.

use crate::error::{Error, Result};
use crate::word::{free_reduce_letters, BraidWord};

/// Default cap on the number of handle reductions.
pub const DEFAULT_STEP_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Copy)]
pub struct WordProblem {
    pub max_steps: u64,
}

impl Default for WordProblem {
    fn default() -> Self {
        Self {
            max_steps: DEFAULT_STEP_BUDGET,
        }
    }
}

impl WordProblem {
    pub fn with_budget(max_steps: u64) -> Self {
        Self { max_steps }
    }

    /// Returns a handle-free word equal to `w` in `B_∞`.
    pub fn reduce(&self, w: &BraidWord) -> Result<BraidWord> {
        reduce_handles(w.letters(), self.max_steps).map(BraidWord::from_raw)
    }

    pub fn is_trivial(&self, w: &BraidWord) -> Result<bool> {
        if w.is_empty() {
            return Ok(true);
        }
        if w.exponent_sum() != 0 {
            return Ok(false);
        }
        if !w.permutation(w.width())?.is_identity() {
            return Ok(false);
        }
        Ok(self.reduce(w)?.is_empty())
    }

    pub fn equals(&self, u: &BraidWord, v: &BraidWord) -> Result<bool> {
        self.is_trivial(&u.concat(&v.inverse()))
    }
}

/// `true` iff `w` is the identity, with the default budget.
pub fn is_trivial(w: &BraidWord) -> Result<bool> {
    WordProblem::default().is_trivial(w)
}

/// `true` iff `u = v` in `B_∞`, with the default budget.
pub fn equals(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    WordProblem::default().equals(u, v)
}

const NONE: usize = usize::MAX;

fn reduce_handles(input: &[i32], max_steps: u64) -> Result<Vec<i32>> {
    let mut word = free_reduce_letters(input);
    let top = word.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0);
    // last[g]: position of the latest letter ±g left of the cursor
    let mut last = vec![NONE; top + 2];
    // prev_same[k]: value of last[|word[k]|] before position k was scanned
    let mut prev_same: Vec<usize> = Vec::with_capacity(word.len());
    let mut steps: u64 = 0;
    let mut j = 0;
    let mut replacement: Vec<i32> = Vec::new();

    while j < word.len() {
        let x = word[j];
        let i = x.unsigned_abs() as usize;
        let p = last[i];
        let is_handle = p != NONE && word[p] == -x && (i == 1 || last[i - 1] == NONE || last[i - 1] < p);
        if !is_handle {
            prev_same.push(p);
            last[i] = j;
            j += 1;
            continue;
        }

        steps += 1;
        if steps > max_steps {
            return Err(Error::BudgetExhausted { steps: max_steps });
        }

        // rewind the scan state to position p
        for k in (p..j).rev() {
            last[word[k].unsigned_abs() as usize] = prev_same[k];
        }
        prev_same.truncate(p);

        let e = word[p].signum();
        let gi = i as i32;
        replacement.clear();
        for &y in &word[p + 1..j] {
            if y.abs() == gi + 1 {
                let d = y.signum();
                replacement.push(-e * (gi + 1));
                replacement.push(d * gi);
                replacement.push(e * (gi + 1));
            } else {
                replacement.push(y);
            }
        }
        let reduced = free_reduce_letters(&replacement);
        word.splice(p..=j, reduced);
        j = p;
    }
    Ok(word)
}
