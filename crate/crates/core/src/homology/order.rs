use std::collections::HashMap;

use super::chain::{ChainComplex, Column};
use crate::error::{Error, Result};
use crate::hom::{CellMap, HomComplex};
use crate::scalar::Coefficient;

/// The order complex of the face poset of a Hom complex: its simplices are
/// the chains `x_0 < x_1 < … < x_k` of cells, stored as increasing lists of
/// cell indices.
#[derive(Clone, Debug)]
pub struct OrderComplex {
    simplices: Vec<Vec<Vec<u32>>>,
    index: Vec<HashMap<Vec<u32>, usize>>,
}

fn chain_limit(cap: usize) -> Error {
    Error::ResourceLimit {
        what: "order complex chains",
        limit: cap as u64,
    }
}

/// Strict faces of every cell, as sorted index lists.
fn strict_faces(k: &HomComplex) -> Vec<Vec<u32>> {
    let mut faces: Vec<Vec<u32>> = Vec::with_capacity(k.len());
    for i in 0..k.len() {
        let mut acc = Vec::new();
        for f in k.facet_indices(i) {
            acc.push(f as u32);
            acc.extend_from_slice(&faces[f]);
        }
        acc.sort_unstable();
        acc.dedup();
        faces.push(acc);
    }
    faces
}

impl OrderComplex {
    /// Fails with a resource error once more than `cap` chains exist.
    pub fn build(k: &HomComplex, cap: usize) -> Result<Self> {
        if k.len() > cap {
            return Err(chain_limit(cap));
        }
        Self::from_strict_faces(&strict_faces(k), cap)
    }

    /// The order complex of a poset on `0..faces.len()`, where `faces[i]`
    /// lists every element strictly below `i`, each smaller than `i`.
    pub(crate) fn from_strict_faces(faces: &[Vec<u32>], cap: usize) -> Result<Self> {
        if faces.len() > cap {
            return Err(chain_limit(cap));
        }
        let mut simplices: Vec<Vec<Vec<u32>>> = Vec::new();
        let mut level: Vec<Vec<u32>> = (0..faces.len() as u32).map(|i| vec![i]).collect();
        let mut total = level.len();
        while !level.is_empty() {
            let mut next = Vec::new();
            for chain in &level {
                for &y in &faces[chain[0] as usize] {
                    total += 1;
                    if total > cap {
                        return Err(chain_limit(cap));
                    }
                    let mut c = Vec::with_capacity(chain.len() + 1);
                    c.push(y);
                    c.extend_from_slice(chain);
                    next.push(c);
                }
            }
            simplices.push(level);
            level = next;
        }
        let index = simplices
            .iter()
            .map(|lv| lv.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        Ok(Self { simplices, index })
    }

    /// Number of degrees (top dimension + 1).
    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplices(&self, d: usize) -> &[Vec<u32>] {
        self.simplices.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn total(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    pub fn index_of(&self, simplex: &[u32]) -> Option<usize> {
        self.index.get(simplex.len().checked_sub(1)?)?.get(simplex).copied()
    }

    /// Simplicial chains with `∂[x_0…x_k] = Σ_i (-1)^i [x_0…x̂_i…x_k]`.
    pub fn chain_complex<R: Coefficient>(&self) -> ChainComplex<R> {
        let sizes = self.simplices.iter().map(Vec::len).collect();
        let columns = self
            .simplices
            .iter()
            .enumerate()
            .map(|(d, lv)| {
                lv.iter()
                    .map(|s| {
                        if d == 0 {
                            return Vec::new();
                        }
                        (0..s.len())
                            .map(|i| {
                                let mut f = s.clone();
                                f.remove(i);
                                let row = self.index[d - 1][&f] as u32;
                                (row, R::from(if i % 2 == 0 { 1 } else { -1 }))
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        ChainComplex::from_columns(sizes, columns).expect("shapes are consistent")
    }

    /// The simplicial chain map of an order-preserving cell map: a chain goes
    /// to the chain of its images, or to zero when two images coincide.
    pub fn chain_map<R: Coefficient>(&self, f: &CellMap, target: &OrderComplex) -> Result<Vec<Vec<Column<R>>>> {
        self.simplices
            .iter()
            .map(|lv| {
                lv.iter()
                    .map(|s| {
                        let img: Vec<u32> = s.iter().map(|&x| f.images[x as usize] as u32).collect();
                        if img.windows(2).any(|w| w[0] == w[1]) {
                            return Ok(Vec::new());
                        }
                        let j = target.index_of(&img).ok_or(Error::NotOrderPreserving)?;
                        Ok(vec![(j as u32, R::one())])
                    })
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, GraphKind};
    use crate::hom::enumerate_cells;
    use crate::scalar::Word;

    #[test]
    fn hexagon_subdivides_to_twelve_gon() {
        let k = enumerate_cells(&build_named(GraphKind::Complete(2)).unwrap(), &build_named(GraphKind::Complete(3)).unwrap())
            .unwrap();
        let o = OrderComplex::build(&k, 1000).unwrap();
        assert_eq!(o.simplices(0).len(), 12);
        assert_eq!(o.simplices(1).len(), 12);
        assert_eq!(o.len(), 2);
        assert!(o.chain_complex::<Word>().check_square_zero().unwrap());
    }

    #[test]
    fn square_cell_gives_eight_triangles() {
        // 2-cells here are triangles and squares
        let k2 = build_named(GraphKind::Complete(2)).unwrap();
        let k4 = build_named(GraphKind::Complete(4)).unwrap();
        let k = enumerate_cells(&k2, &k4).unwrap();
        assert_eq!(k.dimension(), Some(2));
        let o = OrderComplex::build(&k, 1_000_000).unwrap();
        let c = o.chain_complex::<Word>();
        assert!(c.check_square_zero().unwrap());
        // a square's subdivision has 8 top simplices, a triangle's has 6
        let squares = k.cells_of_dim(2).iter().filter(|c| c.sets().iter().all(|s| s.len() <= 2)).count();
        let triangles = k.cells_of_dim(2).len() - squares;
        assert_eq!(o.simplices(2).len(), 8 * squares + 6 * triangles);
    }

    #[test]
    fn chain_cap_is_a_hard_error() {
        let k = enumerate_cells(&build_named(GraphKind::Complete(2)).unwrap(), &build_named(GraphKind::Complete(5)).unwrap())
            .unwrap();
        assert!(matches!(OrderComplex::build(&k, 50), Err(Error::ResourceLimit { .. })));
    }
}

