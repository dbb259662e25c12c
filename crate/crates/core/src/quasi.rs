//! Experiments on the signature as a `ν_n`-quasimorphism: defect sampling,
//! growth of `σ(h^k)`, and search for elements of `[B_∞, B_∞]` on which the
//! homogenized signature is nonzero.
//!
//! Randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64(seed)`; letters are drawn with `gen_range`, so reports are
//! reproducible bit for bit for a fixed seed.

use std::collections::HashSet;

use num_rational::Ratio;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::signature::sigma;
use crate::word::BraidWord;

pub type Rational = Ratio<i64>;

/// Draws `length` letters uniformly from `±1..=±(strands-1)` and freely
/// reduces the result.
pub fn random_braid(length: usize, strands: usize, seed: u64) -> Result<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_braid_with(&mut rng, length, strands)
}

pub fn random_braid_with(rng: &mut ChaCha8Rng, length: usize, strands: usize) -> Result<BraidWord> {
    if strands < 2 {
        return Err(Error::InvalidSize(format!("need at least 2 strands, got {strands}")));
    }
    let top = strands as i32 - 1;
    let letters: Vec<i32> = (0..length)
        .map(|_| {
            let g = rng.gen_range(1..=top);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    Ok(BraidWord::from_raw(letters).free_reduce())
}

/// `|σ(αβ) - σ(α) - σ(β)|`.
pub fn defect(alpha: &BraidWord, beta: &BraidWord) -> u64 {
    (sigma(&alpha.concat(beta)) - sigma(alpha) - sigma(beta)).unsigned_abs()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectSample {
    pub index: usize,
    pub alpha: BraidWord,
    pub beta: BraidWord,
    pub sigma_product: i64,
    pub sigma_alpha: i64,
    pub sigma_beta: i64,
    pub defect: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectReport {
    pub n: usize,
    pub m: usize,
    pub samples: usize,
    pub len: usize,
    pub seed: u64,
    pub max_defect: u64,
    pub bound: u64,
    /// Samples with `defect > bound`, in sample order.
    pub violations: Vec<DefectSample>,
    pub records: Vec<DefectSample>,
}

impl DefectReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// CSV with header `sample,alpha,beta,sigma_ab,sigma_a,sigma_b,defect`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("sample,alpha,beta,sigma_ab,sigma_a,sigma_b,defect\n");
        for r in &self.records {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                r.index, r.alpha, r.beta, r.sigma_product, r.sigma_alpha, r.sigma_beta, r.defect
            ));
        }
        out
    }
}

/// Samples pairs `(α, β)` with `β = b^γ`, `b ∈ B_n`, `α, γ ∈ B_m`, so that
/// `ν_n(β) <= 1`, and checks `|σ(αβ) - σ(α) - σ(β)| <= n`.
///
/// Per sample the generator yields, in order: `b`, `γ`, `α`, each of
/// `len` letters.
pub fn defect_experiment(n: usize, m: usize, samples: usize, len: usize, seed: u64) -> Result<DefectReport> {
    if n < 2 || m <= n {
        return Err(Error::InvalidSize(format!("need 2 <= n < m, got n={n} m={m}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = n as u64;
    let mut records = Vec::with_capacity(samples);
    for index in 0..samples {
        let b = random_braid_with(&mut rng, len, n)?;
        let gamma = random_braid_with(&mut rng, len, m)?;
        let alpha = random_braid_with(&mut rng, len, m)?;
        let beta = b.conjugate(&gamma);
        let sigma_alpha = sigma(&alpha);
        let sigma_beta = sigma(&beta);
        let sigma_product = sigma(&alpha.concat(&beta));
        records.push(DefectSample {
            index,
            defect: (sigma_product - sigma_alpha - sigma_beta).unsigned_abs(),
            alpha,
            beta,
            sigma_product,
            sigma_alpha,
            sigma_beta,
        });
    }
    let max_defect = records.iter().map(|r| r.defect).max().unwrap_or(0);
    let violations = records.iter().filter(|r| r.defect > bound).cloned().collect();
    Ok(DefectReport {
        n,
        m,
        samples,
        len,
        seed,
        max_defect,
        bound,
        violations,
        records,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthReport {
    pub h: BraidWord,
    pub k_max: usize,
    /// `(k, σ(h^k))` for `k = 1..=k_max`.
    pub values: Vec<(usize, i64)>,
    /// `σ(h^{k_max}) / k_max`.
    pub tail_rate: Rational,
    /// Least-squares slope over `k = ⌈k_max/2⌉..=k_max`.
    pub slope_rate: Rational,
}

impl GrowthReport {
    /// The reported rate: the tail quotient.
    pub fn rate_estimate(&self) -> Rational {
        self.tail_rate
    }

    /// Both estimators agree within one unit of slope.
    pub fn estimators_agree(&self) -> bool {
        (self.tail_rate - self.slope_rate).abs() <= Rational::from_integer(1)
    }

    /// CSV with header `k,sigma,ratio`; `ratio` is `σ(h^k)/k` as `p/q`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,sigma,ratio\n");
        for &(k, s) in &self.values {
            out.push_str(&format!("{},{},{}\n", k, s, format_rational(Rational::new(s, k as i64))));
        }
        out
    }
}

/// Exact rendering: `p` for integers, `p/q` otherwise.
pub fn format_rational(r: Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn least_squares_slope(points: &[(usize, i64)]) -> Rational {
    let n = points.len() as i64;
    if n < 2 {
        return points
            .first()
            .map_or(Rational::from_integer(0), |&(k, s)| Rational::new(s, k as i64));
    }
    let sk: i64 = points.iter().map(|&(k, _)| k as i64).sum();
    let ss: i64 = points.iter().map(|&(_, s)| s).sum();
    let skk: i64 = points.iter().map(|&(k, _)| (k * k) as i64).sum();
    let sks: i64 = points.iter().map(|&(k, s)| k as i64 * s).sum();
    Rational::new(n * sks - sk * ss, n * skk - sk * sk)
}

fn growth_from_values(h: &BraidWord, values: Vec<(usize, i64)>) -> GrowthReport {
    let k_max = values.len();
    let tail_rate = Rational::new(values[k_max - 1].1, k_max as i64);
    let half = &values[(k_max - 1) / 2..];
    GrowthReport {
        h: h.clone(),
        k_max,
        tail_rate,
        slope_rate: least_squares_slope(half),
        values,
    }
}

/// Exact `σ(h^k)` for `k = 1..=k_max` and the two rate estimates.
pub fn stable_growth(h: &BraidWord, k_max: usize) -> Result<GrowthReport> {
    if k_max < 1 {
        return Err(Error::InvalidSize("k_max must be >= 1".into()));
    }
    let values = (1..=k_max).map(|k| (k, sigma(&h.pow(k)))).collect();
    Ok(growth_from_values(h, values))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessResult {
    pub h: BraidWord,
    pub rate: Rational,
    pub growth: Option<GrowthReport>,
    /// Number of symmetry classes whose signature growth was evaluated.
    pub candidates: usize,
}

/// Canonical representative of `w` under cyclic rotation, reversal, mirror,
/// and the flip `σ_i ↦ σ_{strands-i}`; `|σ|` of every power is constant on
/// such classes. Rotation and flip are conjugations, reversal reverses the
/// orientation of the closure, and mirroring negates `σ`.
fn canonical(letters: &[i32], strands: i32) -> Vec<i32> {
    let n = letters.len();
    let mut best: Option<Vec<i32>> = None;
    let mut variants: Vec<Vec<i32>> = Vec::with_capacity(8);
    for mirror in [1, -1] {
        for flip in [false, true] {
            let base: Vec<i32> = letters
                .iter()
                .map(|&l| {
                    let g = if flip { strands - l.abs() } else { l.abs() };
                    mirror * l.signum() * g
                })
                .collect();
            let rev: Vec<i32> = base.iter().rev().copied().collect();
            variants.push(base);
            variants.push(rev);
        }
    }
    for v in &variants {
        for r in 0..n {
            let cand: Vec<i32> = v[r..].iter().chain(&v[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

fn cyclically_reduced(letters: &[i32]) -> bool {
    letters.len() < 2 || letters[0] != -letters[letters.len() - 1]
}

/// Enumerates freely and cyclically reduced words of exponent sum zero and
/// length at most `max_len` on `strands` strands, one per symmetry class, and
/// returns the one maximizing `|σ(h^{k_max}) / k_max|` among those whose two
/// rate estimators agree. Ties keep the first class in enumeration order
/// (shorter words first, then lexicographic on the canonical form).
pub fn witness_search(max_len: usize, strands: usize, k_max: usize) -> Result<WitnessResult> {
    if strands < 2 {
        return Err(Error::InvalidSize(format!("need at least 2 strands, got {strands}")));
    }
    if k_max < 1 {
        return Err(Error::InvalidSize("k_max must be >= 1".into()));
    }
    let top = strands as i32 - 1;
    let alphabet: Vec<i32> = (1..=top).flat_map(|g| [g, -g]).collect();
    let mut best = WitnessResult {
        h: BraidWord::identity(),
        rate: Rational::from_integer(0),
        growth: None,
        candidates: 0,
    };
    let mut best_abs = Rational::from_integer(0);

    for len in (2..=max_len).step_by(2) {
        let mut seen: HashSet<Vec<i32>> = HashSet::new();
        let mut classes: Vec<Vec<i32>> = Vec::new();
        let mut word = Vec::with_capacity(len);
        enumerate(&alphabet, len, &mut word, &mut |w| {
            if w.iter().map(|l| l.signum()).sum::<i32>() != 0 || !cyclically_reduced(w) {
                return;
            }
            // shifted copies of narrower words are redundant
            if !w.iter().any(|l| l.abs() == 1) {
                return;
            }
            let c = canonical(w, strands as i32);
            if seen.insert(c.clone()) {
                classes.push(c);
            }
        });
        classes.sort();
        for c in classes {
            best.candidates += 1;
            let h = BraidWord::from_raw(c);
            let tail = Rational::new(sigma(&h.pow(k_max)), k_max as i64);
            if tail.abs() <= best_abs {
                continue;
            }
            let growth = stable_growth(&h, k_max)?;
            if !growth.estimators_agree() {
                continue;
            }
            best_abs = tail.abs();
            best.h = h;
            best.rate = tail;
            best.growth = Some(growth);
        }
    }
    Ok(best)
}

fn enumerate(alphabet: &[i32], len: usize, word: &mut Vec<i32>, visit: &mut impl FnMut(&[i32])) {
    if word.len() == len {
        visit(word);
        return;
    }
    for &l in alphabet {
        if word.last() == Some(&-l) {
            continue;
        }
        word.push(l);
        enumerate(alphabet, len, word, visit);
        word.pop();
    }
}
