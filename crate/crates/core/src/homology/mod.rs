//! Integral homology of cubical complexes.

mod matrix;
mod smith;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{CubicalComplex, SpaceKind};

pub use matrix::IntegerMatrix;
pub use smith::{smith_normal_form, SmithForm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("boundary of the boundary is nonzero in degree {degree}")]
    BoundaryNotNilpotent { degree: usize },
    #[error("cannot multiply a {}x{} matrix by a {}x{} matrix", left.0, left.1, right.0, right.1)]
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("torsion coefficient {0} does not fit in 64 bits")]
    TorsionOverflow(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub degree: usize,
    /// Rank of the free part.
    pub rank: usize,
    /// Torsion coefficients, each greater than one and dividing the next.
    pub torsion: Vec<u64>,
}

impl HomologyGroup {
    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

/// Matrix of `∂_k : C_k → C_{k-1}`, rows and columns in canonical cell order.
///
/// Degree zero and degrees above the top dimension give matrices with no
/// rows or no columns respectively.
pub fn boundary_matrix(complex: &CubicalComplex, k: usize) -> IntegerMatrix {
    let cols = complex.cells(k).len();
    if k == 0 {
        return IntegerMatrix::zeros(0, cols);
    }
    let rows = complex.cells(k - 1).len();
    let entries = (0..cols).flat_map(|c| complex.face_slots(k, c).iter().map(move |&(r, s)| (r, c, s)));
    IntegerMatrix::from_entries(rows, cols, entries)
}

/// Verifies `∂_k ∘ ∂_{k+1} = 0` for every degree.
pub fn check_boundaries(complex: &CubicalComplex) -> Result<(), HomologyError> {
    let top = complex.dim().unwrap_or(0);
    for k in 1..top {
        let product = boundary_matrix(complex, k).mul(&boundary_matrix(complex, k + 1))?;
        if !product.is_zero() {
            return Err(HomologyError::BoundaryNotNilpotent { degree: k });
        }
    }
    Ok(())
}

/// `H_0 ..= H_top` of the complex; empty for the empty complex.
pub fn homology(complex: &CubicalComplex) -> Result<Vec<HomologyGroup>, HomologyError> {
    let Some(top) = complex.dim() else {
        return Ok(Vec::new());
    };
    check_boundaries(complex)?;
    // forms[k] is the Smith form of ∂_k; ∂_0 and ∂_{top+1} are zero
    let forms: Vec<SmithForm> = std::thread::scope(|scope| {
        let handles: Vec<_> = (1..=top)
            .map(|k| scope.spawn(move || smith_normal_form(&boundary_matrix(complex, k))))
            .collect();
        let empty = SmithForm { diagonal: Vec::new() };
        std::iter::once(empty.clone())
            .chain(handles.into_iter().map(|h| h.join().expect("Smith form worker panicked")))
            .chain(std::iter::once(empty))
            .collect()
    });
    (0..=top)
        .map(|k| {
            let cycles = complex.cells(k).len() - forms[k].rank();
            let torsion = forms[k + 1]
                .torsion()
                .map(|d| u64::try_from(d).map_err(|_| HomologyError::TorsionOverflow(d.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(HomologyGroup {
                degree: k,
                rank: cycles - forms[k + 1].rank(),
                torsion,
            })
        })
        .collect()
}

/// Homology summary in the shape written by the command-line tool.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub space: SpaceKind,
    pub n: usize,
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<u64>>,
    pub euler: i64,
}

impl HomologyReport {
    pub fn compute(complex: &CubicalComplex) -> Result<Self, HomologyError> {
        let groups = homology(complex)?;
        Ok(Self {
            space: complex.space().kind(),
            n: complex.space().n(),
            betti: groups.iter().map(|g| g.rank).collect(),
            torsion: groups.iter().map(|g| g.torsion.clone()).collect(),
            euler: complex.euler_characteristic(),
        })
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }

    /// Alternating sum of the Betti numbers.
    pub fn betti_euler(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SpaceSpec;
    use num_bigint::BigInt;

    fn betti(space: SpaceSpec) -> Vec<usize> {
        homology(&CubicalComplex::build(space))
            .unwrap()
            .iter()
            .map(|g| {
                assert!(g.is_free());
                g.rank
            })
            .collect()
    }

    #[test]
    fn circle_boundary_vanishes() {
        let c = CubicalComplex::build(SpaceSpec::round(2).unwrap());
        let d = boundary_matrix(&c, 1);
        assert_eq!((d.rows(), d.cols()), (1, 1));
        assert!(d.is_zero());
        assert_eq!(betti(SpaceSpec::round(2).unwrap()), [1, 1]);
    }

    #[test]
    fn boundary_shapes() {
        let c = CubicalComplex::build(SpaceSpec::round(6).unwrap());
        let d3 = boundary_matrix(&c, 3);
        assert_eq!((d3.rows(), d3.cols()), (270, 30));
        let d4 = boundary_matrix(&c, 4);
        assert_eq!((d4.rows(), d4.cols()), (30, 0));

        let c4 = CubicalComplex::build(SpaceSpec::round(4).unwrap());
        let d2 = boundary_matrix(&c4, 2);
        for col in 0..d2.cols() {
            assert_eq!(d2.column(col).len(), 4);
            assert!(d2.column(col).iter().all(|(_, v)| v == &BigInt::from(1) || v == &BigInt::from(-1)));
        }
    }

    #[test]
    fn squares_vanish() {
        for n in 2..=6 {
            for space in [SpaceSpec::round(n).unwrap(), SpaceSpec::line(n).unwrap()] {
                check_boundaries(&CubicalComplex::build(space)).unwrap();
            }
        }
    }

    #[test]
    fn small_spaces() {
        assert_eq!(betti(SpaceSpec::round(1).unwrap()), [1]);
        assert_eq!(betti(SpaceSpec::round(3).unwrap()), [1, 2]);
        assert_eq!(betti(SpaceSpec::round(4).unwrap()), [1, 4, 0]);
        assert_eq!(betti(SpaceSpec::line(2).unwrap()), [1, 0]);
        assert_eq!(betti(SpaceSpec::line(3).unwrap()), [1, 1]);
        assert_eq!(betti(SpaceSpec::line(4).unwrap()), [1, 7, 0]);
    }

    #[test]
    fn genus_four_surface() {
        assert_eq!(betti(SpaceSpec::round(5).unwrap()), [1, 8, 1]);
    }

    #[test]
    fn report_euler_matches_cells() {
        for space in [SpaceSpec::round(5).unwrap(), SpaceSpec::line(5).unwrap()] {
            let report = HomologyReport::compute(&CubicalComplex::build(space)).unwrap();
            assert_eq!(report.betti_euler(), report.euler);
            assert!(report.is_torsion_free());
        }
    }

    #[test]
    fn projective_plane_has_torsion() {
        // minimal cell structure of RP^2: one cell per degree, ∂_2 = 2
        let d2 = IntegerMatrix::from_rows(&[vec![2]]);
        let form = smith_normal_form(&d2);
        assert_eq!(form.torsion().cloned().collect::<Vec<_>>(), [BigInt::from(2)]);
    }

    #[test]
    fn empty_complex_has_no_groups() {
        let space = SpaceSpec::round(3).unwrap();
        let c = CubicalComplex::from_cells(space, []).unwrap();
        assert!(homology(&c).unwrap().is_empty());
    }
}
