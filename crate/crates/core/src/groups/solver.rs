//! Word problems in the cactus group `J_n` and the round twin group `Υ_n`.
//!
//! A word trivial in `J_n` can be brought to the empty word by applying the
//! defining relations one at a time without ever making it longer. The
//! solver therefore explores, breadth first, every word of the current length
//! reachable by the length-preserving relations (commuting disjoint
//! intervals, moving a nested interval across the interval containing it),
//! and cancels s_{p,q} s_{p,q} as soon as such a pair appears. The word is
//! trivial iff this reaches the empty word.

use std::collections::{HashSet, VecDeque};

use super::words::reduce;
use super::{CactusWord, GroupError, Interval, TwinLetter, TwinWord};

/// Default ceiling on the number of words examined by one query.
pub const DEFAULT_MAX_NODES: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CactusSolver {
    pub max_nodes: usize,
}

impl Default for CactusSolver {
    fn default() -> Self {
        Self {
            max_nodes: DEFAULT_MAX_NODES,
        }
    }
}

/// The single length-preserving relation applicable to the adjacent letters
/// `(x, y)`, if any.
fn rewrite(x: Interval, y: Interval) -> Option<(Interval, Interval)> {
    if x.is_disjoint(y) {
        Some((y, x))
    } else if x.strictly_contains(y) {
        Some((x.reflect(y), x))
    } else if y.strictly_contains(x) {
        Some((y, y.reflect(x)))
    } else {
        None
    }
}

fn cancellable_near(word: &[Interval], i: usize) -> bool {
    let lo = i.saturating_sub(1);
    let hi = (i + 2).min(word.len() - 1);
    (lo..hi).any(|j| word[j] == word[j + 1])
}

impl CactusSolver {
    pub fn new(max_nodes: usize) -> Self {
        Self { max_nodes }
    }

    pub fn is_trivial(&self, word: &CactusWord) -> Result<bool, GroupError> {
        let mut current = reduce(word.letters().iter().copied());
        if current.is_empty() {
            return Ok(true);
        }
        if !word.is_pure() {
            return Ok(false);
        }
        let mut explored = 0usize;
        'restart: loop {
            if current.is_empty() {
                return Ok(true);
            }
            let mut seen: HashSet<Vec<Interval>> = HashSet::new();
            let mut queue = VecDeque::new();
            seen.insert(current.clone());
            queue.push_back(current.clone());
            while let Some(w) = queue.pop_front() {
                explored += 1;
                if explored > self.max_nodes {
                    return Err(GroupError::BudgetExceeded {
                        explored: explored - 1,
                        budget: self.max_nodes,
                    });
                }
                for i in 0..w.len() - 1 {
                    let Some((a, b)) = rewrite(w[i], w[i + 1]) else { continue };
                    let mut next = w.clone();
                    next[i] = a;
                    next[i + 1] = b;
                    if cancellable_near(&next, i) {
                        current = reduce(next);
                        continue 'restart;
                    }
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
            return Ok(false);
        }
    }

    /// `u = v` in `J_n`, decided as triviality of `u v⁻¹`.
    pub fn equal(&self, u: &CactusWord, v: &CactusWord) -> Result<bool, GroupError> {
        self.is_trivial(&u.concat(&v.inverse())?)
    }

    /// Triviality in `Υ_n`. For `n ≥ 4` the map κ into `J_n` is injective
    /// and the cactus solver decides. For `n ≤ 3` the group is the free
    /// product of ⟨σ_1 | σ_1²⟩ and ⟨ζ⟩ after eliminating σ_2 = ζ⁻¹σ_1ζ, and
    /// free reduction gives the normal form.
    pub fn twin_is_trivial(&self, word: &TwinWord) -> Result<bool, GroupError> {
        if word.n() >= 4 {
            return self.is_trivial(&word.kappa()?);
        }
        if !word.is_pure() {
            return Ok(false);
        }
        let eliminated = word.letters().iter().flat_map(|l| match l {
            TwinLetter::Sigma(2) => vec![TwinLetter::ZetaInv, TwinLetter::Sigma(1), TwinLetter::Zeta],
            other => vec![*other],
        });
        Ok(reduce(eliminated).is_empty())
    }

    pub fn twin_equal(&self, u: &TwinWord, v: &TwinWord) -> Result<bool, GroupError> {
        self.twin_is_trivial(&u.concat(&v.inverse())?)
    }
}

pub fn cactus_is_trivial(word: &CactusWord) -> Result<bool, GroupError> {
    CactusSolver::default().is_trivial(word)
}

pub fn cactus_equal(u: &CactusWord, v: &CactusWord) -> Result<bool, GroupError> {
    CactusSolver::default().equal(u, v)
}

pub fn twin_is_trivial(word: &TwinWord) -> Result<bool, GroupError> {
    CactusSolver::default().twin_is_trivial(word)
}
