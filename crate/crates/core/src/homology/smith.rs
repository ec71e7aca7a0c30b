use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntegerMatrix;

/// Invariant factors `d_1 | d_2 | ... | d_r` of an integer matrix, all positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> impl Iterator<Item = &BigInt> {
        self.diagonal.iter().filter(|d| !d.is_one())
    }
}

/// Working copy with both row and column access.
struct Reducer {
    rows: Vec<BTreeMap<usize, BigInt>>,
    cols: Vec<BTreeSet<usize>>,
}

impl Reducer {
    fn new(m: &IntegerMatrix) -> Self {
        let mut rows = vec![BTreeMap::new(); m.rows()];
        let mut cols = vec![BTreeSet::new(); m.cols()];
        for (r, c, v) in m.entries() {
            rows[r].insert(c, v.clone());
            cols[c].insert(r);
        }
        Self { rows, cols }
    }

    /// Smallest nonzero entry in absolute value; ties go to the lowest
    /// Markowitz cost, then to the lowest position.
    fn pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(&BigInt, usize, usize, usize)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            let row_cost = row.len().saturating_sub(1);
            for (&c, v) in row {
                let cost = row_cost * self.cols[c].len().saturating_sub(1);
                let better = match best {
                    None => true,
                    Some((b, bc, _, _)) => match v.magnitude().cmp(b.magnitude()) {
                        std::cmp::Ordering::Less => true,
                        std::cmp::Ordering::Equal => cost < bc,
                        std::cmp::Ordering::Greater => false,
                    },
                };
                if better {
                    best = Some((v, cost, r, c));
                    if v.magnitude().is_one() && cost == 0 {
                        return Some((r, c));
                    }
                }
            }
        }
        best.map(|(_, _, r, c)| (r, c))
    }

    fn set(&mut self, r: usize, c: usize, v: BigInt) {
        if v.is_zero() {
            self.rows[r].remove(&c);
            self.cols[c].remove(&r);
        } else {
            self.rows[r].insert(c, v);
            self.cols[c].insert(r);
        }
    }

    /// `row[target] -= q * row[source]`
    fn row_axpy(&mut self, target: usize, source: usize, q: &BigInt) {
        let source_row: Vec<(usize, BigInt)> = self.rows[source].iter().map(|(&c, v)| (c, v.clone())).collect();
        for (c, v) in source_row {
            let current = self.rows[target].get(&c).cloned().unwrap_or_default();
            self.set(target, c, current - q * v);
        }
    }

    /// `col[target] -= q * col[source]`
    fn col_axpy(&mut self, target: usize, source: usize, q: &BigInt) {
        let source_rows: Vec<usize> = self.cols[source].iter().copied().collect();
        for r in source_rows {
            let v = self.rows[r][&source].clone();
            let current = self.rows[r].get(&target).cloned().unwrap_or_default();
            self.set(r, target, current - q * v);
        }
    }

    /// Clears the pivot's row and column as far as division allows. Returns
    /// true once the pivot is alone in both.
    fn eliminate(&mut self, r: usize, c: usize) -> bool {
        let p = self.rows[r][&c].clone();
        let others: Vec<usize> = self.cols[c].iter().copied().filter(|&i| i != r).collect();
        for i in others {
            let q = &self.rows[i][&c] / &p;
            if !q.is_zero() {
                self.row_axpy(i, r, &q);
            }
        }
        let others: Vec<usize> = self.rows[r].keys().copied().filter(|&j| j != c).collect();
        for j in others {
            let q = &self.rows[r][&j] / &p;
            if !q.is_zero() {
                self.col_axpy(j, c, &q);
            }
        }
        self.rows[r].len() == 1 && self.cols[c].len() == 1
    }
}

/// Smith normal form over the integers.
///
/// Pivots are chosen with minimal absolute value. An entry that the pivot does
/// not divide leaves a smaller remainder behind, which becomes the next pivot.
/// The resulting diagonal is then normalized to a divisibility chain.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let mut work = Reducer::new(m);
    let mut diagonal = Vec::new();
    while let Some((r, c)) = work.pivot() {
        if work.eliminate(r, c) {
            let p = work.rows[r].remove(&c).expect("pivot entry");
            work.cols[c].clear();
            diagonal.push(p.abs());
        }
    }
    SmithForm {
        diagonal: divisibility_chain(diagonal),
    }
}

/// Replaces pairs `(a, b)` by `(gcd, lcm)` until each entry divides the next.
fn divisibility_chain(mut d: Vec<BigInt>) -> Vec<BigInt> {
    d.sort();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            if (&d[j] % &d[i]).is_zero() {
                continue;
            }
            let g = d[i].gcd(&d[j]);
            let l = &d[i] / &g * &d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    d
}
