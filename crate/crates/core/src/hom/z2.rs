use super::maps::pullback_cell;
use super::{CellMap, HomComplex, MultiHom};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphHom};

/// A graph involution `α` with `α ∘ α = id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    map: GraphHom,
    flipping: bool,
}

impl Involution {
    pub fn new(t: &Graph, map: GraphHom) -> Result<Self> {
        map.check(t, t)?;
        if t.vertices().any(|v| map.apply(map.apply(v)) != v) {
            return Err(Error::NotInvolution);
        }
        let flipping = t.vertices().any(|x| t.has_edge(x, map.apply(x)));
        Ok(Self { map, flipping })
    }

    pub fn from_vec(t: &Graph, map: Vec<crate::graph::Vertex>) -> Result<Self> {
        Self::new(t, GraphHom::new(t, t, map).map_err(|_| Error::NotInvolution)?)
    }

    /// Some `x` is adjacent to `α(x)`.
    pub fn is_flipping(&self) -> bool {
        self.flipping
    }

    pub fn map(&self) -> &GraphHom {
        &self.map
    }
}

/// The ℤ₂-action `η ↦ η ∘ α` on `Hom(T, G)`.
#[derive(Clone, Debug)]
pub struct Z2Report {
    pub flipping: bool,
    /// No cell is fixed.
    pub free: bool,
    pub fixed_cells: usize,
    pub order_preserving: bool,
    pub dimension_preserving: bool,
    pub action: CellMap,
}

pub fn z2_structure(alpha: &Involution, k: &HomComplex) -> Result<Z2Report> {
    let action = CellMap::resolve(k, k.cells().iter().map(|c| pullback_cell(alpha.map(), c)))?;
    let fixed_cells = action.images.iter().enumerate().filter(|&(i, &j)| i == j).count();
    let dimension_preserving = action
        .images
        .iter()
        .enumerate()
        .all(|(i, &j)| k.cell(i).dimension() == k.cell(j).dimension());
    Ok(Z2Report {
        flipping: alpha.is_flipping(),
        free: fixed_cells == 0,
        fixed_cells,
        order_preserving: action.is_order_preserving(k, k),
        dimension_preserving,
        action,
    })
}

/// Freeness read off the maximal cells of `Hom(T, G)`: a fixed point lies in
/// an invariant cell, and any invariant cell sits in `μ ∧ (μ ∘ α)` for a
/// maximal `μ` above it, which is itself invariant when nonempty.
pub fn acts_freely(alpha: &Involution, maximal: &[MultiHom]) -> bool {
    maximal.iter().all(|m| m.meet(&pullback_cell(alpha.map(), m)).is_none())
}

/// `map ∘ act_source == act_target ∘ map`.
pub fn is_equivariant(map: &CellMap, act_source: &CellMap, act_target: &CellMap) -> bool {
    act_source.then(map) == map.then(act_target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, GraphKind};
    use crate::hom::{enumerate_cells, pushforward};

    fn named(kind: GraphKind) -> Graph {
        build_named(kind).unwrap()
    }

    #[test]
    fn swap_acts_freely_on_the_hexagon() {
        let k2 = named(GraphKind::Complete(2));
        let alpha = Involution::from_vec(&k2, vec![1, 0]).unwrap();
        let b = enumerate_cells(&k2, &named(GraphKind::Complete(3))).unwrap();
        let r = z2_structure(&alpha, &b).unwrap();
        assert!(r.flipping && r.free && r.order_preserving && r.dimension_preserving);
        assert_eq!(b.len(), 12);
    }

    #[test]
    fn freeness_from_maximal_cells() {
        let k2 = named(GraphKind::Complete(2));
        let swap = Involution::from_vec(&k2, vec![1, 0]).unwrap();
        let looped = Graph::from_edges(3, [(0, 1), (1, 2), (2, 2)]).unwrap();
        let c5 = named(GraphKind::Cycle(5));
        let refl = Involution::from_vec(&c5, vec![0, 4, 3, 2, 1]).unwrap();
        let cases = [
            (&k2, &swap, named(GraphKind::Complete(3))),
            (&k2, &swap, named(GraphKind::Cycle(6))),
            (&k2, &swap, looped),
            (&c5, &refl, c5.clone()),
            (&c5, &refl, named(GraphKind::Complete(3))),
        ];
        for (t, alpha, g) in cases {
            let k = enumerate_cells(t, &g).unwrap();
            let top = crate::hom::maximal_cells(t, &g, &crate::budget::Budget::default()).unwrap();
            assert_eq!(acts_freely(alpha, &top), z2_structure(alpha, &k).unwrap().free, "{g:?}");
        }
    }

    #[test]
    fn loop_gives_a_fixed_cell() {
        let k2 = named(GraphKind::Complete(2));
        let alpha = Involution::from_vec(&k2, vec![1, 0]).unwrap();
        let g = Graph::from_edges(2, [(0, 1), (1, 1)]).unwrap();
        let r = z2_structure(&alpha, &enumerate_cells(&k2, &g).unwrap()).unwrap();
        assert!(!r.free);
        assert!(r.fixed_cells >= 1);
    }

    #[test]
    fn identity_fixes_everything() {
        let c5 = named(GraphKind::Cycle(5));
        let id = Involution::from_vec(&c5, (0..5).collect()).unwrap();
        assert!(!id.is_flipping());
        let k = enumerate_cells(&named(GraphKind::Complete(2)), &c5).unwrap();
        let k2 = named(GraphKind::Complete(2));
        let id2 = Involution::from_vec(&k2, vec![0, 1]).unwrap();
        let r = z2_structure(&id2, &k).unwrap();
        assert_eq!(r.fixed_cells, k.len());
    }

    #[test]
    fn reflection_of_c5_flips() {
        let c5 = named(GraphKind::Cycle(5));
        let refl = Involution::from_vec(&c5, vec![0, 4, 3, 2, 1]).unwrap();
        assert!(refl.is_flipping());
        assert!(matches!(
            Involution::from_vec(&c5, vec![1, 2, 3, 4, 0]),
            Err(Error::NotInvolution)
        ));
    }

    #[test]
    fn pushforward_is_equivariant() {
        let k2 = named(GraphKind::Complete(2));
        let alpha = Involution::from_vec(&k2, vec![1, 0]).unwrap();
        let c7 = named(GraphKind::Cycle(7));
        let k3 = named(GraphKind::Complete(3));
        let f = GraphHom::new(&c7, &k3, vec![0, 1, 0, 1, 0, 1, 2]).unwrap();
        let b7 = enumerate_cells(&k2, &c7).unwrap();
        let b3 = enumerate_cells(&k2, &k3).unwrap();
        let m = pushforward(&f, &b7, &b3).unwrap();
        let a7 = z2_structure(&alpha, &b7).unwrap().action;
        let a3 = z2_structure(&alpha, &b3).unwrap().action;
        assert!(is_equivariant(&m, &a7, &a3));
    }
}
