//! Known Betti numbers of the configuration spaces, and the Euler
//! characteristic identity χ(Q_n) = χ(M_{n-1}) - (n-1)·χ(M_{n-2}).
//!
//! The identity comes from gluing: `Q_n` is homotopy equivalent to `M_{n-1}`
//! with `n - 1` cylinders over `M_{n-2}` attached, one for each way the point
//! at infinity can pass between two neighbours. Each cylinder contributes
//! `-χ(M_{n-2})`.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::complex::{enumerate_cells, SpaceSpec};

const CATALOG_JSON: &str = include_str!("../resources/catalog.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownFact {
    pub space: SpaceSpec,
    pub betti: Vec<usize>,
    pub provenance: String,
}

/// The bundled table, in file order.
pub fn known_facts() -> &'static [KnownFact] {
    static FACTS: OnceLock<Vec<KnownFact>> = OnceLock::new();
    FACTS.get_or_init(|| serde_json::from_str(CATALOG_JSON).expect("bundled catalog is valid JSON"))
}

/// The bundled catalog text.
pub fn catalog_json() -> &'static str {
    CATALOG_JSON
}

/// `None` when the space has no entry.
pub fn expected_betti(space: SpaceSpec) -> Option<&'static [usize]> {
    known_facts()
        .iter()
        .find(|f| f.space == space)
        .map(|f| f.betti.as_slice())
}

/// Betti vectors agree when they differ only by trailing zeros.
pub fn betti_agree(a: &[usize], b: &[usize]) -> bool {
    (0..a.len().max(b.len())).all(|k| a.get(k).unwrap_or(&0) == b.get(k).unwrap_or(&0))
}

/// Both sides of the Euler identity for one `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerCheck {
    pub n: usize,
    pub round: i64,
    pub line_prev: i64,
    pub line_prev2: i64,
}

impl EulerCheck {
    pub fn rhs(&self) -> i64 {
        self.line_prev - (self.n as i64 - 1) * self.line_prev2
    }

    pub fn holds(&self) -> bool {
        self.round == self.rhs()
    }
}

/// Alternating count of enumerated cells.
fn euler_from_cells(space: SpaceSpec) -> i64 {
    (0..=space.max_dim())
        .map(|k| {
            let c = enumerate_cells(space, k).len() as i64;
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .sum()
}

/// Evaluates the identity for `n ≥ 3`.
pub fn euler_consistency(n: usize) -> EulerCheck {
    assert!(n >= 3, "the identity needs n >= 3");
    let round = SpaceSpec::round(n).expect("n >= 3");
    EulerCheck {
        n,
        round: euler_from_cells(round),
        line_prev: euler_from_cells(SpaceSpec::line(n - 1).expect("n >= 3")),
        line_prev2: euler_from_cells(SpaceSpec::line(n - 2).expect("n >= 3")),
    }
}
