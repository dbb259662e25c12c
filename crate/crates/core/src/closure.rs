//! The closed-braid diagram: link components, split blocks, and the
//! Seifert matrix obtained from Seifert's algorithm.
//!
//! In the closure of a braid on `n` strands, Seifert's algorithm yields one
//! disk per strand and one half-twisted band per letter. First homology of
//! the surface of a connected block is generated by loops running through
//! two consecutive bands that join the same pair of adjacent disks.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{BraidWord, Support};

fn check_strands(w: &BraidWord, n: usize) -> Result<()> {
    if n < w.width() {
        return Err(Error::StrandCountTooSmall {
            needed: w.width(),
            given: n,
        });
    }
    Ok(())
}

/// Number of link components of the closure of `w` in `B_n`.
pub fn closure_components(w: &BraidWord, n: usize) -> Result<usize> {
    Ok(w.permutation(n)?.cycle_count())
}

/// Maximal runs of consecutive strands joined by letters. Two neighbouring
/// strands `i`, `i+1` are in the same block iff some letter `±i` occurs.
pub fn split_blocks(w: &BraidWord, n: usize) -> Result<Vec<Support>> {
    check_strands(w, n)?;
    let mut used = vec![false; n.max(1)];
    for &l in w.letters() {
        used[l.unsigned_abs() as usize] = true;
    }
    let mut blocks = Vec::new();
    let mut lo = 1;
    for gap in 1..n {
        if !used[gap] {
            blocks.push(Support { lo, hi: gap });
            lo = gap + 1;
        }
    }
    blocks.push(Support { lo, hi: n.max(1) });
    Ok(blocks)
}

/// One homology generator: the loop through bands `first` and `second`
/// (positions in the word) joining disks `column` and `column + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorLoop {
    pub column: usize,
    pub first: usize,
    pub second: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
    basis: Vec<GeneratorLoop>,
}

impl SeifertMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn basis(&self) -> &[GeneratorLoop] {
        &self.basis
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// `V + Vᵀ`.
    pub fn symmetrized(&self) -> Vec<Vec<i64>> {
        let r = self.dim();
        (0..r)
            .map(|i| (0..r).map(|j| self.entries[i][j] + self.entries[j][i]).collect())
            .collect()
    }

    /// `V - Vᵀ`.
    pub fn antisymmetrized(&self) -> Vec<Vec<i64>> {
        let r = self.dim();
        (0..r)
            .map(|i| (0..r).map(|j| self.entries[i][j] - self.entries[j][i]).collect())
            .collect()
    }

    fn direct_sum(blocks: Vec<SeifertMatrix>) -> SeifertMatrix {
        let r: usize = blocks.iter().map(SeifertMatrix::dim).sum();
        let mut entries = vec![vec![0; r]; r];
        let mut basis = Vec::with_capacity(r);
        let mut off = 0;
        for b in blocks {
            for (i, row) in b.entries.iter().enumerate() {
                entries[off + i][off..off + row.len()].copy_from_slice(row);
            }
            off += b.dim();
            basis.extend(b.basis);
        }
        SeifertMatrix { entries, basis }
    }
}

impl fmt::Display for SeifertMatrix {
    /// Plain-text integer matrix: one row per line, entries separated by a
    /// single space.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Seifert matrix of the closure of `w` in `B_n`, as a direct sum over the
/// split blocks. Letterless strands contribute nothing.
///
/// Sign convention: the closure of `σ1^3` (positive trefoil) has signature
/// `-2` and that of `σ1^2` (positive Hopf link) has signature `-1`.
pub fn seifert_matrix(w: &BraidWord, n: usize) -> Result<SeifertMatrix> {
    check_strands(w, n)?;
    let mut per_block = Vec::new();
    for block in split_blocks(w, n)? {
        let positions: Vec<usize> = w
            .letters()
            .iter()
            .enumerate()
            .filter(|(_, l)| {
                let g = l.unsigned_abs() as usize;
                g >= block.lo && g < block.hi
            })
            .map(|(k, _)| k)
            .collect();
        if positions.is_empty() {
            continue;
        }
        per_block.push(connected_seifert_matrix(w.letters(), &positions));
    }
    Ok(SeifertMatrix::direct_sum(per_block))
}

/// Seifert matrix for the letters of one connected block; `positions` are
/// indices into `word`, in order.
fn connected_seifert_matrix(word: &[i32], positions: &[usize]) -> SeifertMatrix {
    let x: Vec<i32> = positions.iter().map(|&p| word[p]).collect();
    let c = x.len();
    // next[k]: next band on the same column after band k
    let mut next = vec![None; c];
    let mut seen: Vec<Option<usize>> = Vec::new();
    for k in (0..c).rev() {
        let col = x[k].unsigned_abs() as usize;
        if seen.len() <= col {
            seen.resize(col + 1, None);
        }
        next[k] = seen[col];
        seen[col] = Some(k);
    }

    let gens: Vec<usize> = (0..c).filter(|&k| next[k].is_some()).collect();
    let r = gens.len();
    let mut v = vec![vec![0i64; r]; r];
    for (a, &i) in gens.iter().enumerate() {
        let hi = next[i].unwrap();
        let ci = x[i].abs();
        v[a][a] = -i64::from((x[i] + x[hi]).signum());
        for (b, &j) in gens.iter().enumerate().skip(a + 1) {
            let hj = next[j].unwrap();
            let cj = x[j].abs();
            if hi < j || hj < hi {
                // disjoint or nested loops
                continue;
            }
            if hi == j {
                // loops share band j on the same column
                if x[j] > 0 {
                    v[b][a] = 1;
                } else {
                    v[a][b] = -1;
                }
            } else if (ci - cj).abs() == 1 {
                // interleaved on adjacent columns: i < j < hi < hj
                if ci > cj {
                    v[b][a] = -1;
                } else {
                    v[a][b] = 1;
                }
            }
        }
    }

    SeifertMatrix {
        entries: v,
        basis: gens
            .iter()
            .map(|&k| GeneratorLoop {
                column: x[k].unsigned_abs() as usize,
                first: positions[k],
                second: positions[next[k].unwrap()],
            })
            .collect(),
    }
}
