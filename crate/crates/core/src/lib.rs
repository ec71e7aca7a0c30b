//! Exact computations around round twin groups.
//!
//! - [`complex`]: the dual cubical complexes of the configuration spaces `Q_n`
//!   (points on a circle, one of them at infinity) and `M_n` (points on a
//!   line), no three points coinciding.
//! - [`homology`]: signed boundary matrices and integral homology through the
//!   Smith normal form.
//! - [`collapse`]: elementary free-face collapses.
//! - [`groups`]: words in the round twin, annular twin and cactus groups, the
//!   maps between them and word-problem solvers.
//! - [`catalog`]: known Betti numbers and the Euler characteristic identity
//!   linking `Q_n` with `M_{n-1}` and `M_{n-2}`.

pub mod catalog;
pub mod collapse;
pub mod complex;
pub mod groups;
pub mod homology;

pub use catalog::{betti_agree, catalog_json, euler_consistency, expected_betti, known_facts, EulerCheck, KnownFact};
pub use collapse::{collapse, free_pairs, Collapse, FreePair, Strategy};
pub use complex::{
    cell_count_oracle, cofaces, enumerate_cells, format_cell, parse_cell, vertex_link, Block, Cell, ComplexError,
    CubicalComplex, SpaceKind, SpaceSpec, VertexLink,
};
pub use groups::{
    cactus_equal, cactus_is_trivial, mu, mu_prime, twin_is_trivial, verify_presentation, AnnularWord, CactusSolver,
    CactusWord, GroupError, Interval, MuWord, Permutation, Presentation, TwinWord,
};
pub use homology::{
    boundary_matrix, homology, smith_normal_form, HomologyError, HomologyGroup, HomologyReport, IntegerMatrix, SmithForm,
};
