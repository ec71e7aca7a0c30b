//! Dual cubical decomposition of the configuration spaces `Q_n` (round) and
//! `M_n` (line).
//!
//! A cell is the combinatorial type of a configuration: the points read from
//! left to right along the real line, with coinciding points grouped into
//! pair blocks. In a round space point `n` sits at infinity, so the last block
//! of every round cell contains `n`; that block is called the infinity block.
//! A cell with `k` pair blocks has dimension `k`. Splitting a pair into two
//! adjacent singletons gives a codimension-one face, and every cell is a cube
//! whose axes are its pair blocks.

mod cubical;
mod link;
mod notation;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cubical::{BlockJson, BoundaryJson, CellJson, ComplexJson, CubicalComplex, FaceJson};
pub use link::{vertex_link, Merge, VertexLink};
pub use notation::{format_cell, parse_cell};

/// A point label, always in `1..=n`.
pub type Label = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("a configuration space needs at least one point")]
    EmptySpace,
    #[error("label {label} is outside 1..={n}")]
    LabelOutOfRange { label: Label, n: usize },
    #[error("label {0} appears more than once")]
    RepeatedLabel(Label),
    #[error("label {0} is missing")]
    MissingLabel(Label),
    #[error("the last block of a round cell must contain {0}")]
    MissingInfinity(Label),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("{0} is not a vertex")]
    NotAVertex(String),
    #[error("cell {cell} has face {face} outside the complex")]
    MissingFace { cell: String, face: String },
    #[error("cell {cell} does not belong to {space}")]
    SpaceMismatch { cell: String, space: SpaceSpec },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceKind {
    /// `M_n`: points on the real line.
    Line,
    /// `Q_n`: points on the circle with point `n` fixed at infinity.
    Round,
}

impl SpaceKind {
    pub fn name(self) -> &'static str {
        match self {
            SpaceKind::Line => "line",
            SpaceKind::Round => "round",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SpaceSpec {
    kind: SpaceKind,
    n: usize,
}

impl SpaceSpec {
    pub fn new(kind: SpaceKind, n: usize) -> Result<Self, ComplexError> {
        if n == 0 {
            return Err(ComplexError::EmptySpace);
        }
        Ok(Self { kind, n })
    }

    pub fn round(n: usize) -> Result<Self, ComplexError> {
        Self::new(SpaceKind::Round, n)
    }

    pub fn line(n: usize) -> Result<Self, ComplexError> {
        Self::new(SpaceKind::Line, n)
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_round(&self) -> bool {
        self.kind == SpaceKind::Round
    }

    /// Largest possible cell dimension.
    pub fn max_dim(&self) -> usize {
        self.n / 2
    }
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SpaceKind::Line => write!(f, "M{}", self.n),
            SpaceKind::Round => write!(f, "Q{}", self.n),
        }
    }
}

/// A singleton or a pair of coinciding points.
///
/// The derived order compares `(min label, max label)`, a singleton `a`
/// counting as `(a, a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block {
    lo: Label,
    hi: Option<Label>,
}

impl Block {
    pub fn single(label: Label) -> Self {
        Self { lo: label, hi: None }
    }

    pub fn pair(a: Label, b: Label) -> Result<Self, ComplexError> {
        if a == b {
            return Err(ComplexError::RepeatedLabel(a));
        }
        Ok(Self {
            lo: a.min(b),
            hi: Some(a.max(b)),
        })
    }

    pub fn is_pair(&self) -> bool {
        self.hi.is_some()
    }

    pub fn min(&self) -> Label {
        self.lo
    }

    pub fn max(&self) -> Label {
        self.hi.unwrap_or(self.lo)
    }

    pub fn contains(&self, label: Label) -> bool {
        self.lo == label || self.hi == Some(label)
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> {
        std::iter::once(self.lo).chain(self.hi)
    }

    /// For a pair, the label other than `label`.
    fn partner(&self, label: Label) -> Option<Label> {
        let hi = self.hi?;
        if self.lo == label {
            Some(hi)
        } else if hi == label {
            Some(self.lo)
        } else {
            None
        }
    }
}

/// Which end of a cube axis a face lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    /// Finite pair split in increasing order, or the infinity partner placed
    /// leftmost.
    Lower,
    /// Finite pair split with the larger label first, or the infinity partner
    /// placed rightmost.
    Upper,
}

/// A codimension-one face of a cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub cell: Cell,
    /// Index of the split pair among the cell's pair blocks, left to right.
    pub pair_index: usize,
    pub direction: Direction,
}

impl Face {
    /// Incidence sign `(-1)^pair_index`, negated on the lower face.
    pub fn sign(&self) -> i32 {
        let parity = if self.pair_index.is_multiple_of(2) { 1 } else { -1 };
        match self.direction {
            Direction::Upper => parity,
            Direction::Lower => -parity,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    blocks: Vec<Block>,
    space: SpaceSpec,
}

impl Cell {
    /// Validates that `blocks` partition `1..=n` and, for round spaces, that the
    /// last block holds `n`.
    pub fn new(space: SpaceSpec, blocks: Vec<Block>) -> Result<Self, ComplexError> {
        let n = space.n();
        let mut seen = vec![false; n + 1];
        for label in blocks.iter().flat_map(Block::labels) {
            if label == 0 || label > n {
                return Err(ComplexError::LabelOutOfRange { label, n });
            }
            if seen[label] {
                return Err(ComplexError::RepeatedLabel(label));
            }
            seen[label] = true;
        }
        if let Some(missing) = (1..=n).find(|&l| !seen[l]) {
            return Err(ComplexError::MissingLabel(missing));
        }
        if space.is_round() && !blocks.last().is_some_and(|b| b.contains(n)) {
            return Err(ComplexError::MissingInfinity(n));
        }
        Ok(Self { blocks, space })
    }

    pub fn space(&self) -> SpaceSpec {
        self.space
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().filter(|b| b.is_pair()).count()
    }

    pub fn is_vertex(&self) -> bool {
        self.dim() == 0
    }

    /// Codimension-one faces, two per pair block, ordered by pair and then
    /// lower before upper.
    pub fn faces(&self) -> Vec<Face> {
        let infinity = self.infinity_position();
        let mut out = Vec::with_capacity(2 * self.dim());
        let mut pair_index = 0;
        for (pos, block) in self.blocks.iter().enumerate() {
            let Some(hi) = block.hi else { continue };
            let lo = block.lo;
            if Some(pos) == infinity {
                // `hi == n`; the partner moves to one end of the real line.
                let line = &self.blocks[..pos];
                let mut left = Vec::with_capacity(self.blocks.len() + 1);
                left.push(Block::single(lo));
                left.extend_from_slice(line);
                left.push(Block::single(hi));
                let mut right = line.to_vec();
                right.push(Block::single(lo));
                right.push(Block::single(hi));
                out.push(self.face(left, pair_index, Direction::Lower));
                out.push(self.face(right, pair_index, Direction::Upper));
            } else {
                let split = |first: Label, second: Label| {
                    let mut blocks = Vec::with_capacity(self.blocks.len() + 1);
                    blocks.extend_from_slice(&self.blocks[..pos]);
                    blocks.push(Block::single(first));
                    blocks.push(Block::single(second));
                    blocks.extend_from_slice(&self.blocks[pos + 1..]);
                    blocks
                };
                out.push(self.face(split(lo, hi), pair_index, Direction::Lower));
                out.push(self.face(split(hi, lo), pair_index, Direction::Upper));
            }
            pair_index += 1;
        }
        out
    }

    fn face(&self, blocks: Vec<Block>, pair_index: usize, direction: Direction) -> Face {
        Face {
            cell: Cell {
                blocks,
                space: self.space,
            },
            pair_index,
            direction,
        }
    }

    /// Position of the infinity block (always the last one) in a round cell.
    fn infinity_position(&self) -> Option<usize> {
        self.space.is_round().then(|| self.blocks.len() - 1)
    }

    /// Pairs of adjacent singletons that may be joined into a pair block.
    ///
    /// In a round cell the circle wraps through infinity, so a singleton `n`
    /// may merge with either end of the real line.
    pub fn merges(&self) -> Vec<Merge> {
        let len = self.blocks.len();
        let mut out = Vec::new();
        for pos in 0..len.saturating_sub(1) {
            if let (Some(left), Some(right)) = (self.singleton(pos), self.singleton(pos + 1)) {
                out.push(Merge { left, right });
            }
        }
        if self.space.is_round() && len >= 2 {
            if let (Some(left), Some(right)) = (self.singleton(len - 1), self.singleton(0)) {
                out.push(Merge { left, right });
            }
        }
        out
    }

    fn singleton(&self, pos: usize) -> Option<Label> {
        let block = self.blocks[pos];
        (!block.is_pair()).then_some(block.lo)
    }

    /// Applies a set of merges at once. Returns `None` unless every merge is
    /// available and no singleton is used twice.
    pub fn merge(&self, merges: &[Merge]) -> Option<Cell> {
        let len = self.blocks.len();
        let position = |label: Label| self.blocks.iter().position(|b| b.contains(label));
        let mut used = vec![false; len];
        // joined[pos]: label merged into the singleton at pos
        let mut joined: Vec<Option<Label>> = vec![None; len];
        for merge in merges {
            let (lp, rp) = (position(merge.left)?, position(merge.right)?);
            self.singleton(lp)?;
            self.singleton(rp)?;
            let wraps = self.space.is_round() && lp == len - 1 && rp == 0;
            if !(rp == lp + 1 || wraps) || used[lp] || used[rp] {
                return None;
            }
            used[lp] = true;
            used[rp] = true;
            joined[lp] = Some(merge.right);
        }
        let mut blocks = Vec::with_capacity(len);
        for (pos, block) in self.blocks.iter().enumerate() {
            match joined[pos] {
                Some(partner) => blocks.push(Block::pair(block.lo, partner).ok()?),
                None if used[pos] => {}
                None => blocks.push(*block),
            }
        }
        Cell::new(self.space, blocks).ok()
    }

    /// Cells of dimension `dim + 1` having this cell as a face.
    pub fn cofacets(&self) -> Vec<Cell> {
        let mut out: Vec<Cell> = self
            .merges()
            .into_iter()
            .filter_map(|m| self.merge(&[m]))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// The partner of `n` in the infinity block, if that block is a pair.
    pub fn infinity_partner(&self) -> Option<Label> {
        let pos = self.infinity_position()?;
        self.blocks[pos].partner(self.space.n())
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_cell(self))
    }
}

/// All cells of dimension `dim`, in canonical order.
pub fn enumerate_cells(space: SpaceSpec, dim: usize) -> Vec<Cell> {
    let n = space.n();
    let mut out = Vec::new();
    match space.kind() {
        SpaceKind::Line => {
            let labels: Vec<Label> = (1..=n).collect();
            arrange(&labels, dim, &mut Vec::new(), &mut |blocks| {
                out.push(Cell {
                    blocks: blocks.to_vec(),
                    space,
                })
            });
        }
        SpaceKind::Round => {
            let finite: Vec<Label> = (1..n).collect();
            arrange(&finite, dim, &mut Vec::new(), &mut |blocks| {
                let mut blocks = blocks.to_vec();
                blocks.push(Block::single(n));
                out.push(Cell { blocks, space });
            });
            if dim >= 1 {
                for &partner in &finite {
                    let rest: Vec<Label> = finite.iter().copied().filter(|&l| l != partner).collect();
                    arrange(&rest, dim - 1, &mut Vec::new(), &mut |blocks| {
                        let mut blocks = blocks.to_vec();
                        blocks.push(Block {
                            lo: partner,
                            hi: Some(n),
                        });
                        out.push(Cell { blocks, space });
                    });
                }
            }
        }
    }
    out.sort();
    out
}

/// Every ordered sequence of blocks using all of `remaining` with exactly
/// `pairs` pair blocks.
fn arrange(remaining: &[Label], pairs: usize, prefix: &mut Vec<Block>, emit: &mut impl FnMut(&[Block])) {
    if remaining.is_empty() {
        if pairs == 0 {
            emit(prefix);
        }
        return;
    }
    if 2 * pairs > remaining.len() {
        return;
    }
    for (i, &x) in remaining.iter().enumerate() {
        let rest: Vec<Label> = remaining.iter().copied().filter(|&l| l != x).collect();
        prefix.push(Block::single(x));
        arrange(&rest, pairs, prefix, emit);
        prefix.pop();
        if pairs == 0 {
            continue;
        }
        for &y in &remaining[i + 1..] {
            let rest: Vec<Label> = remaining.iter().copied().filter(|&l| l != x && l != y).collect();
            prefix.push(Block { lo: x, hi: Some(y) });
            arrange(&rest, pairs - 1, prefix, emit);
            prefix.pop();
        }
    }
}

/// Cells of dimensions `cell.dim() + 1 ..= up_to` whose iterated boundary
/// contains `cell`, sorted and without repetition.
pub fn cofaces(cell: &Cell, up_to: usize) -> Vec<Cell> {
    let mut out = Vec::new();
    let mut frontier = vec![cell.clone()];
    for _ in cell.dim() + 1..=up_to {
        let mut next: Vec<Cell> = frontier.iter().flat_map(Cell::cofacets).collect();
        next.sort();
        next.dedup();
        if next.is_empty() {
            break;
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Number of block sequences on `m` labels with exactly `k` pairs:
/// `m! (m-k)! / (2^k k! (m-2k)!)`, or zero when `2k > m`.
///
/// Panics if the result overflows `u128` (around `m = 30`).
pub fn cell_count_oracle(m: usize, k: usize) -> u128 {
    if 2 * k > m {
        return 0;
    }
    let factorial = |x: usize| (1..=x as u128).try_fold(1u128, |acc, v| acc.checked_mul(v));
    let overflow = "cell count overflows u128";
    // choose the 2k paired labels, match them, then order the m-k blocks
    let choose = binomial(m, 2 * k);
    let matchings = (1..=k as u128).try_fold(1u128, |acc, i| acc.checked_mul(2 * i - 1));
    let orders = factorial(m - k);
    choose
        .checked_mul(matchings.expect(overflow))
        .and_then(|v| v.checked_mul(orders.expect(overflow)))
        .expect(overflow)
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// Predicted number of `k`-cells of the given space.
pub fn predicted_cell_count(space: SpaceSpec, k: usize) -> u128 {
    let n = space.n();
    match space.kind() {
        SpaceKind::Line => cell_count_oracle(n, k),
        SpaceKind::Round => {
            let at_infinity = if k >= 1 && n >= 2 {
                (n as u128 - 1) * cell_count_oracle(n - 2, k - 1)
            } else {
                0
            };
            at_infinity + cell_count_oracle(n - 1, k)
        }
    }
}
