use super::{HomComplex, MultiHom};
use crate::error::{Error, Result};
use crate::graph::GraphHom;

/// A map between the cell sets of two Hom complexes, as target indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellMap {
    pub images: Vec<usize>,
}

impl CellMap {
    /// Resolves explicit image cells against `target`.
    pub fn resolve(target: &HomComplex, images: impl IntoIterator<Item = MultiHom>) -> Result<Self> {
        let images = images
            .into_iter()
            .map(|c| {
                target.index_of(&c).ok_or_else(|| {
                    Error::MismatchedDomains(format!("image {:?} is not a cell of the target", c.sets()))
                })
            })
            .collect::<Result<_>>()?;
        Ok(Self { images })
    }

    pub fn identity(k: &HomComplex) -> Self {
        Self {
            images: (0..k.len()).collect(),
        }
    }

    /// True if faces go to faces; checking facets suffices.
    pub fn is_order_preserving(&self, source: &HomComplex, target: &HomComplex) -> bool {
        (0..source.len()).all(|i| {
            let top = target.cell(self.images[i]);
            source
                .facet_indices(i)
                .into_iter()
                .all(|f| target.cell(self.images[f]).is_face_of(top))
        })
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &CellMap) -> CellMap {
        CellMap {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }
}

/// `x ↦ f(η(x))`.
pub fn pushforward_cell(f: &GraphHom, cell: &MultiHom) -> MultiHom {
    let sets = cell
        .sets()
        .iter()
        .map(|s| {
            let mut img: Vec<_> = s.iter().map(|&x| f.apply(x)).collect();
            img.sort_unstable();
            img.dedup();
            img
        })
        .collect();
    MultiHom::from_sorted(sets)
}

/// `η ↦ η ∘ u`.
pub fn pullback_cell(u: &GraphHom, cell: &MultiHom) -> MultiHom {
    MultiHom::from_sorted(
        u.as_slice()
            .iter()
            .map(|&x| cell.set(x).to_vec())
            .collect(),
    )
}

/// `f_* : Hom(T, G1) → Hom(T, G2)` for `f : G1 → G2`.
pub fn pushforward(f: &GraphHom, source: &HomComplex, target: &HomComplex) -> Result<CellMap> {
    f.check(source.target(), target.target())?;
    if source.source() != target.source() {
        return Err(Error::MismatchedDomains("complexes have different sources".into()));
    }
    CellMap::resolve(target, source.cells().iter().map(|c| pushforward_cell(f, c)))
}

/// `u^* : Hom(T2, G) → Hom(T1, G)` for `u : T1 → T2`.
pub fn pullback(u: &GraphHom, source: &HomComplex, target: &HomComplex) -> Result<CellMap> {
    u.check(target.source(), source.source())?;
    if source.target() != target.target() {
        return Err(Error::MismatchedDomains("complexes have different targets".into()));
    }
    CellMap::resolve(target, source.cells().iter().map(|c| pullback_cell(u, c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, Graph, GraphKind};
    use crate::hom::enumerate_cells;

    fn named(kind: GraphKind) -> Graph {
        build_named(kind).unwrap()
    }

    #[test]
    fn identity_pushforward_is_identity() {
        let k2 = named(GraphKind::Complete(2));
        let p = named(GraphKind::Petersen);
        let b = enumerate_cells(&k2, &p).unwrap();
        let id = pushforward(&GraphHom::identity(&p), &b, &b).unwrap();
        assert_eq!(id, CellMap::identity(&b));
    }

    #[test]
    fn rotations_preserve_dimension() {
        let k2 = named(GraphKind::Complete(2));
        let c7 = named(GraphKind::Cycle(7));
        let rot = GraphHom::new(&c7, &c7, (0..7).map(|i| (i + 1) % 7).collect()).unwrap();
        let b = enumerate_cells(&k2, &c7).unwrap();
        let m = pushforward(&rot, &b, &b).unwrap();
        for (i, &j) in m.images.iter().enumerate() {
            assert_eq!(b.cell(i).dimension(), b.cell(j).dimension());
        }
        assert!(m.is_order_preserving(&b, &b));
    }

    #[test]
    fn swap_pullback_swaps_coordinates() {
        let k2 = named(GraphKind::Complete(2));
        let g = named(GraphKind::WalkerG1);
        let b = enumerate_cells(&k2, &g).unwrap();
        let swap = GraphHom::new(&k2, &k2, vec![1, 0]).unwrap();
        let m = pullback(&swap, &b, &b).unwrap();
        for (i, &j) in m.images.iter().enumerate() {
            assert_eq!(b.cell(i).set(0), b.cell(j).set(1));
            assert_eq!(b.cell(i).set(1), b.cell(j).set(0));
        }
    }

    #[test]
    fn collapsing_map_lowers_dimension() {
        let k2 = named(GraphKind::Complete(2));
        let c4 = named(GraphKind::Cycle(4));
        let f = GraphHom::new(&c4, &k2, vec![0, 1, 0, 1]).unwrap();
        let b4 = enumerate_cells(&k2, &c4).unwrap();
        let b2 = enumerate_cells(&k2, &k2).unwrap();
        let m = pushforward(&f, &b4, &b2).unwrap();
        assert!(m.is_order_preserving(&b4, &b2));
        assert!(b4.dimension().unwrap() > 0 && b2.dimension() == Some(0));
        assert!(m.images.iter().all(|&j| j < 2));
    }
}
