use std::fmt;

/// A permutation of strand positions `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    // zero-based images
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!(is_bijection(&images));
        Self { images }
    }

    /// Builds a permutation from one-based images; `None` if not a bijection
    /// of `1..=n`.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let zero: Vec<usize> = images
            .iter()
            .map(|&i| i.checked_sub(1))
            .collect::<Option<_>>()?;
        is_bijection(&zero).then_some(Self { images: zero })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// One-based image of one-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// One-based images of `1..=n`.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `(self ∘ other)(i) = self(other(i))`. Degrees are padded with fixed
    /// points to the larger of the two.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let n = self.degree().max(other.degree());
        let get = |p: &Permutation, i: usize| p.images.get(i).copied().unwrap_or(i);
        Permutation {
            images: (0..n).map(|i| get(self, get(other, i))).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles (one-based), fixed points included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}

fn is_bijection(images: &[usize]) -> bool {
    let mut seen = vec![false; images.len()];
    for &i in images {
        if i >= images.len() || seen[i] {
            return false;
        }
        seen[i] = true;
    }
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
            any = true;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let a = Permutation::from_images(&[2, 3, 1]).unwrap();
        let b = Permutation::from_images(&[2, 1, 3]).unwrap();
        assert_eq!(a.compose(&b).images(), vec![3, 2, 1]);
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.to_string(), "(1 2 3)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(&[1, 1]).is_none());
        assert!(Permutation::from_images(&[0, 1]).is_none());
        assert!(Permutation::from_images(&[3, 1]).is_none());
    }

    #[test]
    fn cycles_cover_all_points() {
        let p = Permutation::from_images(&[1, 3, 2, 4]).unwrap();
        assert_eq!(p.cycles(), vec![vec![1], vec![2, 3], vec![4]]);
        assert_eq!(p.cycle_count(), 3);
    }
}
