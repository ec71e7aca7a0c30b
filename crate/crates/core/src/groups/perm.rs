use std::fmt;

use super::GroupError;

/// A permutation of `{1, ..., n}`.
///
/// Products are read left to right: `a.then(&b)` applies `a` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    /// `images[i - 1]` is the image of `i`.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(GroupError::NotAPermutation(images));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    /// The transposition `(a b)`; the identity when `a == b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }

    /// The cycle `1 → 2 → ... → n → 1`.
    pub fn rotation(n: usize) -> Self {
        Self {
            images: (1..=n).map(|i| i % n + 1).collect(),
        }
    }

    /// Reverses the order of `p, p+1, ..., q` and fixes everything else.
    pub fn reversal(n: usize, p: usize, q: usize) -> Self {
        let mut p_ = Self::identity(n);
        p_.images[p - 1..q].reverse();
        p_
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n(), other.n());
        Permutation {
            images: self.images.iter().map(|&x| other.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Nontrivial cycles, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n() + 1];
        let mut out = Vec::new();
        for start in 1..=self.n() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Product of the permutations, left to right.
    pub fn product<'a>(n: usize, factors: impl IntoIterator<Item = &'a Permutation>) -> Permutation {
        factors.into_iter().fold(Self::identity(n), |acc, p| acc.then(p))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            let items: Vec<String> = cycle.iter().map(usize::to_string).collect();
            write!(f, "({})", items.join(" "))?;
        }
        Ok(())
    }
}
