//! Independent signature oracle: Gordon–Litherland formula on the
//! checkerboard surface of the closed-braid diagram, evaluated with floating
//! point eigenvalues. Shares nothing with the Seifert-matrix route.
//!
//! Regions of the closed braid are the gaps `0..=n` between strand columns;
//! gap `g` (for `0 < g < n`) is cut into one region per `σ_g` crossing. Odd
//! gaps are shaded. A `σ_i^s` crossing with `i` odd joins two regions of gap
//! `i` (type I, Goeritz index `-s`); with `i` even it joins regions of gaps
//! `i-1` and `i+1` (type II, index `+s`). Then `σ = sign(G) - Σ_{II} η`.

use nalgebra::DMatrix;

pub fn signature(letters: &[i32]) -> i64 {
    let top = letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0);
    let mut used = vec![false; top + 2];
    for l in letters {
        used[l.unsigned_abs() as usize] = true;
    }
    let mut total = 0;
    let mut lo = 1;
    while lo <= top {
        if !used[lo] {
            lo += 1;
            continue;
        }
        let mut hi = lo;
        while hi < top && used[hi + 1] {
            hi += 1;
        }
        // block uses generators lo..=hi, i.e. strands lo..=hi+1
        let block: Vec<i32> = letters
            .iter()
            .filter(|l| {
                let g = l.unsigned_abs() as usize;
                g >= lo && g <= hi
            })
            .map(|&l| (l.abs() - lo as i32 + 1) * l.signum())
            .collect();
        total += block_signature(&block, hi - lo + 2);
        lo = hi + 1;
    }
    total
}

fn block_signature(x: &[i32], n: usize) -> i64 {
    // crossing positions per generator
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (t, l) in x.iter().enumerate() {
        at[l.unsigned_abs() as usize].push(t);
    }
    // region ids for shaded gaps
    let mut base = vec![usize::MAX; n + 1];
    let mut count = 0;
    for g in (1..=n).step_by(2) {
        base[g] = count;
        count += if g == n || at[g].is_empty() { 1 } else { at[g].len() };
    }
    // region of gap g at height t (t = position of a crossing not on gap g)
    let region_at = |g: usize, t: usize| -> usize {
        if g == n || at[g].is_empty() {
            return base[g];
        }
        let c = at[g].len();
        let before = at[g].iter().filter(|&&p| p < t).count();
        base[g] + (before + c - 1) % c
    };

    let mut goeritz = vec![vec![0.0f64; count]; count];
    let mut mu = 0i64;
    for (t, l) in x.iter().enumerate() {
        let i = l.unsigned_abs() as usize;
        let s = i64::from(l.signum());
        let (a, b, eta) = if i % 2 == 1 {
            let c = at[i].len();
            let q = at[i].iter().position(|&p| p == t).unwrap();
            (base[i] + (q + c - 1) % c, base[i] + q, -s)
        } else {
            mu += s;
            (region_at(i - 1, t), region_at(i + 1, t), s)
        };
        if a != b {
            goeritz[a][b] -= eta as f64;
            goeritz[b][a] -= eta as f64;
            goeritz[a][a] += eta as f64;
            goeritz[b][b] += eta as f64;
        }
    }
    if count <= 1 {
        return -mu;
    }
    let m = DMatrix::from_fn(count - 1, count - 1, |i, j| goeritz[i + 1][j + 1]);
    let eig = m.symmetric_eigen();
    let pos = eig.eigenvalues.iter().filter(|&&v| v > 1e-7).count() as i64;
    let neg = eig.eigenvalues.iter().filter(|&&v| v < -1e-7).count() as i64;
    pos - neg - mu
}
