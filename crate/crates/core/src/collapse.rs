//! Elementary collapses: a cell with exactly one coface incidence is removed
//! together with that coface. Each step preserves the homotopy type.

use serde::{Deserialize, Serialize};

use crate::complex::{Cell, ComplexJson, CubicalComplex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreePair {
    pub free_cell: Cell,
    pub coface: Cell,
    /// Global ids in the complex the pair was found in.
    pub free_id: usize,
    pub coface_id: usize,
}

/// Order in which free pairs are collapsed.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Always collapse a pair whose coface has the highest available
    /// dimension; ties go to the smallest coface id, then free-cell id.
    #[default]
    GreedyDescending,
}

/// All free pairs, sorted by coface dimension, coface id, free-cell id.
///
/// A cell is free when it occurs exactly once among the face slots of the
/// complex. The edge of the circle `Q_2` meets its vertex twice, so that
/// vertex is not free.
pub fn free_pairs(complex: &CubicalComplex) -> Vec<FreePair> {
    let mut out = Vec::new();
    for k in 0..complex.dim().unwrap_or(0) {
        for (i, cell) in complex.cells(k).iter().enumerate() {
            if let [j] = complex.coface_slots(k, i) {
                out.push(FreePair {
                    free_cell: cell.clone(),
                    coface: complex.cells(k + 1)[*j].clone(),
                    free_id: complex.global_id(k, i),
                    coface_id: complex.global_id(k + 1, *j),
                });
            }
        }
    }
    out.sort_by_key(|p| (p.coface.dim(), p.coface_id, p.free_id));
    out
}

/// Result of collapsing: the reduced complex and the executed pairs as
/// `(free id, coface id)` in the input complex's numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collapse {
    pub complex: CubicalComplex,
    pub log: Vec<(usize, usize)>,
}

pub fn collapse(complex: &CubicalComplex, strategy: Strategy) -> Collapse {
    let Strategy::GreedyDescending = strategy;
    let counts = complex.counts();
    let mut alive: Vec<Vec<bool>> = counts.iter().map(|&c| vec![true; c]).collect();
    // number of live face slots pointing at each cell
    let mut incidences: Vec<Vec<usize>> = counts
        .iter()
        .enumerate()
        .map(|(k, &c)| (0..c).map(|i| complex.coface_slots(k, i).len()).collect())
        .collect();
    let mut log = Vec::new();
    while let Some((k, free, coface)) = next_pair(complex, &alive, &incidences) {
        alive[k][free] = false;
        alive[k + 1][coface] = false;
        for &(j, _) in complex.face_slots(k + 1, coface) {
            incidences[k][j] -= 1;
        }
        if k > 0 {
            for &(j, _) in complex.face_slots(k, free) {
                incidences[k - 1][j] -= 1;
            }
        }
        log.push((complex.global_id(k, free), complex.global_id(k + 1, coface)));
    }
    let remaining = alive.iter().enumerate().flat_map(|(k, level)| {
        level
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(move |(i, _)| complex.cells(k)[i].clone())
    });
    let reduced =
        CubicalComplex::from_cells(complex.space(), remaining).expect("collapsing keeps the complex closed under faces");
    Collapse { complex: reduced, log }
}

/// Highest-dimensional free pair with the smallest coface index, then free
/// index. Returns `(free dimension, free index, coface index)`.
fn next_pair(complex: &CubicalComplex, alive: &[Vec<bool>], incidences: &[Vec<usize>]) -> Option<(usize, usize, usize)> {
    for k in (0..alive.len().saturating_sub(1)).rev() {
        let mut best: Option<(usize, usize)> = None;
        for (i, &count) in incidences[k].iter().enumerate() {
            if !alive[k][i] || count != 1 {
                continue;
            }
            let coface = complex
                .coface_slots(k, i)
                .iter()
                .copied()
                .find(|&j| alive[k + 1][j])
                .expect("a live incidence has a live coface");
            if best.is_none_or(|(c, _)| coface < c) {
                best = Some((coface, i));
            }
        }
        if let Some((coface, free)) = best {
            return Some((k, free, coface));
        }
    }
    None
}

impl Collapse {
    pub fn to_json(&self) -> CollapseJson {
        CollapseJson {
            complex: self.complex.to_json(),
            log: self
                .log
                .iter()
                .map(|&(free_cell, coface)| CollapseStep { free_cell, coface })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseStep {
    pub free_cell: usize,
    pub coface: usize,
}

/// The reduced complex in the usual complex schema, plus the collapse log.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseJson {
    #[serde(flatten)]
    pub complex: ComplexJson,
    pub log: Vec<CollapseStep>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SpaceSpec;
    use crate::homology::homology;

    fn q(n: usize) -> CubicalComplex {
        CubicalComplex::build(SpaceSpec::round(n).unwrap())
    }

    #[test]
    fn free_pair_counts() {
        let pairs = free_pairs(&q(4));
        assert_eq!(pairs.len(), 12);
        assert!(pairs.iter().all(|p| p.free_cell.dim() == 1));
        assert!(free_pairs(&q(5)).is_empty());
        let pairs = free_pairs(&q(6));
        assert_eq!(pairs.len(), 180);
        assert!(pairs.iter().all(|p| p.free_cell.dim() == 2 && p.coface.dim() == 3));
        assert!(free_pairs(&q(2)).is_empty());
    }

    #[test]
    fn free_pairs_are_sorted() {
        let pairs = free_pairs(&q(6));
        assert!(pairs.windows(2).all(|w| (w[0].coface_id, w[0].free_id) < (w[1].coface_id, w[1].free_id)));
    }

    #[test]
    fn four_points_collapse_to_a_graph() {
        let input = q(4);
        let result = collapse(&input, Strategy::GreedyDescending);
        assert_eq!(result.complex.euler_characteristic(), -3);
        assert_eq!(result.complex.dim(), Some(1));
        let ranks: Vec<usize> = homology(&result.complex).unwrap().iter().map(|g| g.rank).collect();
        assert_eq!(ranks, [1, 4]);
        assert_eq!(input.len() - result.complex.len(), 2 * result.log.len());
    }

    #[test]
    fn surface_does_not_collapse() {
        let result = collapse(&q(5), Strategy::default());
        assert!(result.log.is_empty());
        assert_eq!(result.complex, q(5));
    }

    #[test]
    fn six_points_lose_three_cells() {
        let input = q(6);
        let result = collapse(&input, Strategy::GreedyDescending);
        assert!(result.complex.cells(3).len() < 30);
        assert_eq!(homology(&result.complex).unwrap(), homology(&input).unwrap()[..result.complex.dim().unwrap() + 1]);
        // the first step removes a 3-cell together with a free square
        let (free, coface) = result.log[0];
        assert_eq!(input.locate(free).unwrap().0, 2);
        assert_eq!(input.locate(coface).unwrap().0, 3);
    }

    #[test]
    fn deterministic_output() {
        let a = serde_json::to_string(&collapse(&q(6), Strategy::GreedyDescending).to_json()).unwrap();
        let b = serde_json::to_string(&collapse(&q(6), Strategy::GreedyDescending).to_json()).unwrap();
        assert_eq!(a, b);
        assert!(a.contains(r#""log":[{"free_cell":"#));
    }

    #[test]
    fn homology_invariance_small() {
        for n in 2..=6 {
            for space in [SpaceSpec::round(n).unwrap(), SpaceSpec::line(n).unwrap()] {
                let c = CubicalComplex::build(space);
                let before = homology(&c).unwrap();
                let after = collapse(&c, Strategy::GreedyDescending);
                let after = homology(&after.complex).unwrap();
                // trailing zero groups disappear with the top cells
                for (k, g) in before.iter().enumerate() {
                    match after.get(k) {
                        Some(h) => assert_eq!(g, h, "{space}"),
                        None => assert!(g.rank == 0 && g.is_free(), "{space}"),
                    }
                }
            }
        }
    }
}
