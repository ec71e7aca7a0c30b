use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{enumerate_cells, Cell, ComplexError, Label, SpaceKind, SpaceSpec};

/// A finite set of cells closed under taking faces, with signed incidences.
///
/// Cells of each dimension are kept in canonical order. A cell is addressed
/// either by `(dim, index)` or by a global id, which counts all cells of lower
/// dimension first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicalComplex {
    space: SpaceSpec,
    cells: Vec<Vec<Cell>>,
    index: HashMap<Cell, usize>,
    /// `faces[k][i]`: one `(index in dimension k-1, sign)` per face slot.
    faces: Vec<Vec<Vec<(usize, i32)>>>,
    /// `cofaces[k][i]`: one index in dimension `k+1` per incidence slot.
    cofaces: Vec<Vec<Vec<usize>>>,
}

impl CubicalComplex {
    /// The full dual complex of `space`.
    pub fn build(space: SpaceSpec) -> Self {
        let cells: Vec<Vec<Cell>> = (0..=space.max_dim())
            .map(|k| enumerate_cells(space, k))
            .collect();
        Self::assemble(space, cells).expect("enumerated cells are closed under faces")
    }

    /// A subcomplex given by its cells; fails if a face is missing.
    pub fn from_cells(space: SpaceSpec, cells: impl IntoIterator<Item = Cell>) -> Result<Self, ComplexError> {
        let mut by_dim: Vec<Vec<Cell>> = Vec::new();
        for cell in cells {
            if cell.space() != space {
                return Err(ComplexError::SpaceMismatch {
                    cell: cell.to_string(),
                    space,
                });
            }
            let k = cell.dim();
            if by_dim.len() <= k {
                by_dim.resize(k + 1, Vec::new());
            }
            by_dim[k].push(cell);
        }
        for level in &mut by_dim {
            level.sort();
            level.dedup();
        }
        while by_dim.last().is_some_and(Vec::is_empty) {
            by_dim.pop();
        }
        Self::assemble(space, by_dim)
    }

    fn assemble(space: SpaceSpec, mut cells: Vec<Vec<Cell>>) -> Result<Self, ComplexError> {
        while cells.last().is_some_and(Vec::is_empty) {
            cells.pop();
        }
        let index: HashMap<Cell, usize> = cells
            .iter()
            .flat_map(|level| level.iter().enumerate().map(|(i, c)| (c.clone(), i)))
            .collect();
        let mut faces = Vec::with_capacity(cells.len());
        let mut cofaces: Vec<Vec<Vec<usize>>> = cells.iter().map(|l| vec![Vec::new(); l.len()]).collect();
        for (k, level) in cells.iter().enumerate() {
            let mut level_faces = Vec::with_capacity(level.len());
            for (i, cell) in level.iter().enumerate() {
                let mut slots = Vec::with_capacity(2 * k);
                for face in cell.faces() {
                    let Some(&j) = index.get(&face.cell) else {
                        return Err(ComplexError::MissingFace {
                            cell: cell.to_string(),
                            face: face.cell.to_string(),
                        });
                    };
                    slots.push((j, face.sign()));
                    cofaces[k - 1][j].push(i);
                }
                level_faces.push(slots);
            }
            faces.push(level_faces);
        }
        Ok(Self {
            space,
            cells,
            index,
            faces,
            cofaces,
        })
    }

    pub fn space(&self) -> SpaceSpec {
        self.space
    }

    /// Top dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.cells.len().checked_sub(1)
    }

    pub fn cells(&self, k: usize) -> &[Cell] {
        self.cells.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        self.index.contains_key(cell)
    }

    /// Index of `cell` within its dimension.
    pub fn index_of(&self, cell: &Cell) -> Option<usize> {
        self.index.get(cell).copied()
    }

    pub fn global_id(&self, k: usize, i: usize) -> usize {
        self.cells[..k].iter().map(Vec::len).sum::<usize>() + i
    }

    pub fn id_of(&self, cell: &Cell) -> Option<usize> {
        Some(self.global_id(cell.dim(), self.index_of(cell)?))
    }

    /// `(dim, index)` of a global id.
    pub fn locate(&self, mut id: usize) -> Option<(usize, usize)> {
        for (k, level) in self.cells.iter().enumerate() {
            if id < level.len() {
                return Some((k, id));
            }
            id -= level.len();
        }
        None
    }

    /// Face slots `(index in dimension k-1, sign)` of cell `i` of dimension `k`.
    pub fn face_slots(&self, k: usize, i: usize) -> &[(usize, i32)] {
        &self.faces[k][i]
    }

    /// Cofaces (indices in dimension `k+1`) of cell `i` of dimension `k`,
    /// repeated once per incidence.
    pub fn coface_slots(&self, k: usize, i: usize) -> &[usize] {
        &self.cofaces[k][i]
    }

    /// Distinct cofaces of `cell` in this complex, in dimensions
    /// `cell.dim()+1 ..= up_to`.
    pub fn cofaces(&self, cell: &Cell, up_to: usize) -> Vec<Cell> {
        let Some(start) = self.index_of(cell) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        let mut frontier = vec![start];
        for k in cell.dim()..up_to.min(self.cells.len().saturating_sub(1)) {
            let mut next: Vec<usize> = frontier
                .iter()
                .flat_map(|&i| self.cofaces[k][i].iter().copied())
                .collect();
            next.sort_unstable();
            next.dedup();
            out.extend(next.iter().map(|&j| self.cells[k + 1][j].clone()));
            frontier = next;
        }
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(k, level)| if k % 2 == 0 { level.len() as i64 } else { -(level.len() as i64) })
            .sum()
    }

    pub fn to_json(&self) -> ComplexJson {
        let mut cells = Vec::with_capacity(self.len());
        let mut boundary = Vec::new();
        for (k, level) in self.cells.iter().enumerate() {
            for (i, cell) in level.iter().enumerate() {
                let id = self.global_id(k, i);
                cells.push(CellJson {
                    id,
                    dim: k,
                    blocks: cell.blocks().iter().map(|b| b.labels().collect()).collect(),
                });
                if k > 0 {
                    let faces = self.faces[k][i]
                        .iter()
                        .map(|&(j, sign)| FaceJson {
                            cell: self.global_id(k - 1, j),
                            sign,
                        })
                        .collect();
                    boundary.push(BoundaryJson { cell: id, faces });
                }
            }
        }
        ComplexJson {
            space: self.space.kind(),
            n: self.space.n(),
            cells,
            boundary,
        }
    }
}

/// Labels of one block: one entry for a singleton, two for a pair.
pub type BlockJson = Vec<Label>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    pub id: usize,
    pub dim: usize,
    pub blocks: Vec<BlockJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceJson {
    pub cell: usize,
    pub sign: i32,
}

/// Face slots of one cell; a face met twice (the circle `Q_2`) is listed
/// twice, with its two signs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryJson {
    pub cell: usize,
    pub faces: Vec<FaceJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub space: SpaceKind,
    pub n: usize,
    pub cells: Vec<CellJson>,
    pub boundary: Vec<BoundaryJson>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::parse_cell;

    fn q(n: usize) -> CubicalComplex {
        CubicalComplex::build(SpaceSpec::round(n).unwrap())
    }

    #[test]
    fn known_cell_counts() {
        assert_eq!(q(2).counts(), [1, 1]);
        assert_eq!(q(3).counts(), [2, 3]);
        assert_eq!(q(4).counts(), [6, 12, 3]);
        assert_eq!(q(5).counts(), [24, 60, 30]);
        assert_eq!(q(6).counts(), [120, 360, 270, 30]);
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(q(6).euler_characteristic(), 0);
        assert_eq!(q(5).euler_characteristic(), -6);
        assert_eq!(q(2).euler_characteristic(), 0);
    }

    #[test]
    fn incidence_at_six_points() {
        let c = q(6);
        for i in 0..c.cells(0).len() {
            let v = &c.cells(0)[i];
            let top = c.cofaces(v, 3).into_iter().filter(|x| x.dim() == 3).count();
            assert_eq!(top, 2, "{v}");
        }
        for i in 0..c.cells(1).len() {
            assert_eq!(c.coface_slots(1, i).len(), 3);
        }
        let mut histogram = [0usize; 3];
        for i in 0..c.cells(2).len() {
            histogram[c.coface_slots(2, i).len()] += 1;
        }
        assert_eq!(histogram, [90, 180, 0]);
        let example = parse_cell("(12)3(45)6", SpaceKind::Round).unwrap();
        assert!(c.coface_slots(2, c.index_of(&example).unwrap()).is_empty());
    }

    #[test]
    fn complex_cofaces_agree_with_cell_cofaces() {
        let c = q(5);
        for k in 0..=2 {
            for cell in c.cells(k) {
                assert_eq!(c.cofaces(cell, 2), crate::complex::cofaces(cell, 2));
            }
        }
    }

    #[test]
    fn subcomplex_requires_faces() {
        let space = SpaceSpec::round(3).unwrap();
        let edge = parse_cell("(12)3", SpaceKind::Round).unwrap();
        let err = CubicalComplex::from_cells(space, [edge.clone()]).unwrap_err();
        assert!(matches!(err, ComplexError::MissingFace { .. }));
        let full = q(3);
        let sub = CubicalComplex::from_cells(space, full.cells(0).iter().cloned().chain([edge])).unwrap();
        assert_eq!(sub.counts(), [2, 1]);
        let other = parse_cell("123", SpaceKind::Line).unwrap();
        assert!(matches!(
            CubicalComplex::from_cells(space, [other]),
            Err(ComplexError::SpaceMismatch { .. })
        ));
    }

    #[test]
    fn global_ids() {
        let c = q(4);
        assert_eq!(c.global_id(1, 0), 6);
        assert_eq!(c.locate(6), Some((1, 0)));
        assert_eq!(c.locate(20), Some((2, 2)));
        assert_eq!(c.locate(21), None);
        let cell = parse_cell("(12)(34)", SpaceKind::Round).unwrap();
        assert_eq!(c.id_of(&cell), Some(18));
    }

    #[test]
    fn json_export_is_deterministic() {
        let a = serde_json::to_string(&q(4).to_json()).unwrap();
        let b = serde_json::to_string(&q(4).to_json()).unwrap();
        assert_eq!(a, b);
        let json: ComplexJson = serde_json::from_str(&a).unwrap();
        assert_eq!(json.cells.len(), 21);
        assert_eq!(json.boundary.len(), 15);
        assert!(a.starts_with(r#"{"space":"round","n":4,"cells":[{"id":0,"dim":0,"blocks":[[1],[2],[3],[4]]}"#));
    }

    #[test]
    fn circle_json_lists_both_endpoints() {
        let json = q(2).to_json();
        assert_eq!(
            json.boundary,
            [BoundaryJson {
                cell: 1,
                faces: vec![FaceJson { cell: 0, sign: -1 }, FaceJson { cell: 0, sign: 1 }]
            }]
        );
    }
}
