use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::HomologyError;

/// Sparse matrix of arbitrary-precision integers, stored by columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    /// Nonzero entries of each column, sorted by row.
    columns: Vec<Vec<(usize, BigInt)>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Builds a matrix from `(row, col, value)` triples; repeated positions add up.
    pub fn from_entries<V: Into<BigInt>>(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, V)>,
    ) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry ({r}, {c}) outside {rows}x{cols}");
            m.add_to(r, c, v.into());
        }
        m
    }

    pub fn from_rows<V: Into<BigInt> + Clone>(rows: &[Vec<V>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_entries(
            rows.len(),
            cols,
            rows.iter()
                .enumerate()
                .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, v)| (r, c, v.clone()))),
        )
    }

    fn add_to(&mut self, r: usize, c: usize, v: BigInt) {
        let column = &mut self.columns[c];
        match column.binary_search_by_key(&r, |(row, _)| *row) {
            Ok(pos) => {
                column[pos].1 += v;
                if column[pos].1.is_zero() {
                    column.remove(pos);
                }
            }
            Err(pos) if !v.is_zero() => column.insert(pos, (r, v)),
            Err(_) => {}
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        let column = &self.columns[c];
        match column.binary_search_by_key(&r, |(row, _)| *row) {
            Ok(pos) => column[pos].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Nonzero entries of column `c`, sorted by row.
    pub fn column(&self, c: usize) -> &[(usize, BigInt)] {
        &self.columns[c]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_entries(self.cols, self.rows, self.entries().map(|(r, c, v)| (c, r, v.clone())))
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix, HomologyError> {
        if self.cols != other.rows {
            return Err(HomologyError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for (c, column) in other.columns.iter().enumerate() {
            let mut acc: std::collections::BTreeMap<usize, BigInt> = Default::default();
            for (k, b) in column {
                for (r, a) in &self.columns[*k] {
                    *acc.entry(*r).or_default() += a * b;
                }
            }
            out.columns[c] = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        Ok(out)
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut dense = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (r, c, v) in self.entries() {
            dense[r][c] = v.clone();
        }
        dense
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}
