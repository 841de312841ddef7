//! The Hom complex `Hom(T, G)`: the poset of multi-homomorphisms ordered by
//! coordinatewise inclusion, viewed as a regular cell complex whose cells are
//! products of simplices.

mod cells;
mod classes;
mod homs;
mod maps;
mod maximal;
mod z2;

use std::collections::HashMap;
use std::io::{self, Write};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphHom, Vertex};

pub use cells::{enumerate_cells, enumerate_cells_with};
pub use classes::{component_partition, x_homotopy_classes, x_homotopy_classes_with, HomClasses};
pub use homs::{enumerate_homs, enumerate_homs_with};
pub use maximal::maximal_cells;
pub use maps::{pullback, pullback_cell, pushforward, pushforward_cell, CellMap};
pub use z2::{acts_freely, is_equivariant, z2_structure, Involution, Z2Report};

/// A cell of `Hom(T, G)`: a nonempty vertex set of `G` for every vertex of `T`
/// such that `η(u) × η(v) ⊆ E(G)` for every edge `(u, v)` of `T`.
///
/// Sets are kept sorted, so equal cells compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiHom {
    sets: Vec<Vec<Vertex>>,
}

impl MultiHom {
    /// Validating constructor; sets are sorted and deduplicated.
    pub fn new(t: &Graph, g: &Graph, mut sets: Vec<Vec<Vertex>>) -> Result<Self> {
        for s in &mut sets {
            s.sort_unstable();
            s.dedup();
        }
        let cell = Self { sets };
        cell.check(t, g)?;
        Ok(cell)
    }

    pub(crate) fn from_sorted(sets: Vec<Vec<Vertex>>) -> Self {
        debug_assert!(sets.iter().all(|s| s.windows(2).all(|w| w[0] < w[1])));
        Self { sets }
    }

    /// The singleton cell of a graph homomorphism.
    pub fn from_hom(f: &GraphHom) -> Self {
        Self {
            sets: f.as_slice().iter().map(|&x| vec![x]).collect(),
        }
    }

    /// The vertex map of a dimension-0 cell.
    pub fn to_map(&self) -> Option<Vec<Vertex>> {
        self.sets
            .iter()
            .map(|s| if s.len() == 1 { Some(s[0]) } else { None })
            .collect()
    }

    /// The homomorphism of a dimension-0 cell.
    pub fn to_hom(&self, t: &Graph, g: &Graph) -> Option<GraphHom> {
        GraphHom::new(t, g, self.to_map()?).ok()
    }

    pub fn check(&self, t: &Graph, g: &Graph) -> Result<()> {
        if self.sets.len() != t.vertex_count() {
            return Err(Error::MismatchedDomains(format!(
                "cell has {} coordinates but the source has {} vertices",
                self.sets.len(),
                t.vertex_count()
            )));
        }
        for (v, s) in self.sets.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::InvalidParameter(format!("η({v}) is empty")));
            }
            if s.iter().any(|&x| x as usize >= g.vertex_count()) {
                return Err(Error::InvalidParameter(format!("η({v}) has a non-vertex")));
            }
        }
        for (u, v) in t.edges() {
            for &a in &self.sets[u as usize] {
                for &b in &self.sets[v as usize] {
                    if !g.has_edge(a, b) {
                        return Err(Error::NotHomomorphism(format!(
                            "edge ({u}, {v}) of the source meets non-edge ({a}, {b})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, t: &Graph, g: &Graph) -> bool {
        self.check(t, g).is_ok()
    }

    /// `Σ_v (|η(v)| - 1)`.
    pub fn dimension(&self) -> usize {
        self.sets.iter().map(|s| s.len() - 1).sum()
    }

    pub fn sets(&self) -> &[Vec<Vertex>] {
        &self.sets
    }

    pub fn set(&self, v: Vertex) -> &[Vertex] {
        &self.sets[v as usize]
    }

    /// `self ≤ other` in the face order.
    pub fn is_face_of(&self, other: &MultiHom) -> bool {
        self.sets.len() == other.sets.len()
            && self
                .sets
                .iter()
                .zip(&other.sets)
                .all(|(a, b)| a.iter().all(|x| b.binary_search(x).is_ok()))
    }

    /// Coordinatewise intersection; `None` when a coordinate becomes empty.
    /// Two faces of a common cell meet in their greatest common face.
    pub fn meet(&self, other: &MultiHom) -> Option<MultiHom> {
        if self.sets.len() != other.sets.len() {
            return None;
        }
        let sets: Vec<Vec<Vertex>> = self
            .sets
            .iter()
            .zip(&other.sets)
            .map(|(a, b)| a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect())
            .collect();
        sets.iter().all(|s| !s.is_empty()).then_some(MultiHom { sets })
    }

    /// The cell with the `t`-th smallest element of `η(v)` deleted.
    pub fn delete(&self, v: usize, t: usize) -> MultiHom {
        let mut sets = self.sets.clone();
        sets[v].remove(t);
        MultiHom { sets }
    }

    /// Codimension-one faces, in coordinate then element order.
    pub fn facets(&self) -> impl Iterator<Item = MultiHom> + '_ {
        self.sets.iter().enumerate().flat_map(move |(v, s)| {
            let n = if s.len() >= 2 { s.len() } else { 0 };
            (0..n).map(move |t| self.delete(v, t))
        })
    }

    /// Every vertex of the target that occurs in some coordinate.
    pub fn support(&self) -> Vec<Vertex> {
        let mut all: Vec<Vertex> = self.sets.iter().flatten().copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }
}

/// All cells of `Hom(T, G)`, sorted by dimension and then lexicographically.
#[derive(Clone, Debug)]
pub struct HomComplex {
    source: Graph,
    target: Graph,
    cells: Vec<MultiHom>,
    dim_starts: Vec<usize>,
    index: HashMap<MultiHom, usize>,
}

impl HomComplex {
    /// Builds the complex from an arbitrary list of cells, sorting it into the
    /// canonical order. The list must be closed under faces.
    pub fn from_cells(source: Graph, target: Graph, mut cells: Vec<MultiHom>) -> Self {
        cells.sort_unstable_by(|a, b| {
            a.dimension()
                .cmp(&b.dimension())
                .then_with(|| a.sets.cmp(&b.sets))
        });
        cells.dedup();
        let top = cells.last().map_or(0, MultiHom::dimension);
        let mut dim_starts = vec![0; top + 2];
        let mut i = 0;
        for d in 0..=top {
            dim_starts[d] = i;
            while i < cells.len() && cells[i].dimension() == d {
                i += 1;
            }
        }
        dim_starts[top + 1] = cells.len();
        if cells.is_empty() {
            dim_starts = vec![0];
        }
        let index = cells.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        Self {
            source,
            target,
            cells,
            dim_starts,
            index,
        }
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn cells(&self) -> &[MultiHom] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> &MultiHom {
        &self.cells[i]
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Top cell dimension; `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.cells.last().map(MultiHom::dimension)
    }

    /// Index range of the cells of dimension `d`.
    pub fn dim_range(&self, d: usize) -> std::ops::Range<usize> {
        if d + 1 >= self.dim_starts.len() {
            return self.cells.len()..self.cells.len();
        }
        self.dim_starts[d]..self.dim_starts[d + 1]
    }

    pub fn cells_of_dim(&self, d: usize) -> &[MultiHom] {
        &self.cells[self.dim_range(d)]
    }

    /// Number of cells in each dimension `0..=dim`.
    pub fn counts(&self) -> Vec<usize> {
        match self.dimension() {
            None => Vec::new(),
            Some(top) => (0..=top).map(|d| self.dim_range(d).len()).collect(),
        }
    }

    pub fn index_of(&self, cell: &MultiHom) -> Option<usize> {
        self.index.get(cell).copied()
    }

    pub fn contains(&self, cell: &MultiHom) -> bool {
        self.index.contains_key(cell)
    }

    /// The graph homomorphisms `T → G` (the dimension-0 cells).
    pub fn homs(&self) -> Vec<GraphHom> {
        self.cells_of_dim(0)
            .iter()
            .map(|c| c.to_hom(&self.source, &self.target).expect("0-cells are homs"))
            .collect()
    }

    /// Indices of the facets of cell `i`.
    pub fn facet_indices(&self, i: usize) -> Vec<usize> {
        self.cells[i]
            .facets()
            .map(|f| self.index_of(&f).expect("complex is closed under faces"))
            .collect()
    }

    /// Writes one cell per line as a JSON array of sorted arrays.
    pub fn write_cells<W: Write>(&self, mut w: W) -> io::Result<()> {
        for c in &self.cells {
            serde_json::to_writer(&mut w, &c.sets)?;
            w.write_all(b"\n")?;
        }
        Ok(())
    }

    /// Reads the JSON-lines cell dump written by [`HomComplex::write_cells`],
    /// validating every cell.
    pub fn read_cells(source: Graph, target: Graph, text: &str) -> Result<Self> {
        let mut cells = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let sets: Vec<Vec<Vertex>> = serde_json::from_str(line)?;
            cells.push(MultiHom::new(&source, &target, sets)?);
        }
        Ok(Self::from_cells(source, target, cells))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, GraphKind};

    #[test]
    fn multihom_validation() {
        let k2 = build_named(GraphKind::Complete(2)).unwrap();
        let k3 = build_named(GraphKind::Complete(3)).unwrap();
        let c = MultiHom::new(&k2, &k3, vec![vec![0], vec![2, 1]]).unwrap();
        assert_eq!(c.dimension(), 1);
        assert_eq!(c.set(1), &[1, 2]);
        assert!(MultiHom::new(&k2, &k3, vec![vec![0, 1], vec![1]]).is_err());
        assert!(MultiHom::new(&k2, &k3, vec![vec![], vec![1]]).is_err());
        assert_eq!(c.facets().count(), 2);
        assert!(c.facets().all(|f| f.is_face_of(&c)));
    }

    #[test]
    fn hom_and_singleton_cell_interconvert() {
        let c5 = build_named(GraphKind::Cycle(5)).unwrap();
        let rot = GraphHom::new(&c5, &c5, vec![1, 2, 3, 4, 0]).unwrap();
        let cell = MultiHom::from_hom(&rot);
        assert_eq!(cell.dimension(), 0);
        assert_eq!(cell.to_hom(&c5, &c5).unwrap(), rot);
    }

    #[test]
    fn cell_dump_round_trips() {
        let k2 = build_named(GraphKind::Complete(2)).unwrap();
        let k3 = build_named(GraphKind::Complete(3)).unwrap();
        let k = enumerate_cells(&k2, &k3).unwrap();
        let mut buf = Vec::new();
        k.write_cells(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next().unwrap(), "[[0],[1]]");
        let back = HomComplex::read_cells(k2, k3, &text).unwrap();
        assert_eq!(back.cells(), k.cells());
    }
}
