//! Round twin groups, annular twin groups and cactus groups: words,
//! permutations, the maps between them and a solver for the word problem.

mod mu;
mod perm;
mod presentation;
mod solver;
mod words;

use thiserror::Error;

pub use mu::{mu, mu_prime, MuLetter, MuWord};
pub use perm::Permutation;
pub use presentation::{verify_presentation, Presentation, PresentationReport, RelatorCheck};
pub use solver::{cactus_equal, cactus_is_trivial, twin_is_trivial, CactusSolver, DEFAULT_MAX_NODES};
pub use words::{AnnularLetter, AnnularWord, CactusWord, Interval, TwinLetter, TwinWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("{0:?} is not a permutation")]
    NotAPermutation(Vec<usize>),
    #[error("rank {n} is too small here (need at least {min})")]
    RankTooSmall { n: usize, min: usize },
    #[error("letter {letter} is not a generator on {n} strands")]
    IndexOutOfRange { letter: String, n: usize },
    #[error("cannot parse letter {0:?}")]
    InvalidLetter(String),
    #[error("r({p},{q}) is not an interval of [1, {n}]")]
    BadInterval { p: usize, q: usize, n: usize },
    #[error("words have ranks {0} and {1}")]
    RankMismatch(usize, usize),
    #[error("{0} is outside the domain of mu")]
    NotAdmissible(String),
    #[error("search gave up after {explored} words (budget {budget})")]
    BudgetExceeded { explored: usize, budget: usize },
}
