use std::collections::BTreeSet;

use super::{Cell, ComplexError, Label};

/// Joining two adjacent singletons; `left` immediately precedes `right` in
/// the (circular, for round spaces) order of the configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Merge {
    pub left: Label,
    pub right: Label,
}

/// Link of a vertex: one link vertex per available merge, one simplex per
/// set of merges realizable together as a single cube.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLink {
    pub vertices: Vec<Merge>,
    /// Nonempty simplices as sorted lists of indices into `vertices`.
    pub simplices: BTreeSet<Vec<usize>>,
}

pub fn vertex_link(vertex: &Cell) -> Result<VertexLink, ComplexError> {
    if !vertex.is_vertex() {
        return Err(ComplexError::NotAVertex(vertex.to_string()));
    }
    let vertices = vertex.merges();
    let mut simplices = BTreeSet::new();
    let mut current = Vec::new();
    grow(vertex, &vertices, 0, &mut current, &mut simplices);
    Ok(VertexLink { vertices, simplices })
}

/// Depth-first over merge sets; realizable sets are closed under subsets, so
/// an unrealizable set is never extended.
fn grow(vertex: &Cell, merges: &[Merge], from: usize, current: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
    for i in from..merges.len() {
        current.push(i);
        let chosen: Vec<Merge> = current.iter().map(|&j| merges[j]).collect();
        if vertex.merge(&chosen).is_some() {
            out.insert(current.clone());
            grow(vertex, merges, i + 1, current, out);
        }
        current.pop();
    }
}

impl VertexLink {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.simplices.iter().map(|s| s.len() - 1).max()
    }

    /// True iff every set of pairwise-adjacent link vertices spans a simplex.
    pub fn is_flag(&self) -> bool {
        let n = self.vertices.len();
        let mut adjacent = vec![vec![false; n]; n];
        for s in self.simplices.iter().filter(|s| s.len() == 2) {
            adjacent[s[0]][s[1]] = true;
            adjacent[s[1]][s[0]] = true;
        }
        let mut clique = Vec::new();
        self.cliques_are_simplices(&adjacent, 0, &mut clique)
    }

    fn cliques_are_simplices(&self, adjacent: &[Vec<bool>], from: usize, clique: &mut Vec<usize>) -> bool {
        for v in from..adjacent.len() {
            if !clique.iter().all(|&u| adjacent[u][v]) {
                continue;
            }
            clique.push(v);
            let ok = self.simplices.contains(clique) && self.cliques_are_simplices(adjacent, v + 1, clique);
            clique.pop();
            if !ok {
                return false;
            }
        }
        true
    }
}
