use petgraph::unionfind::UnionFind;

use super::homs::raw_homs;
use super::HomComplex;
use crate::budget::DEFAULT_CAP;
use crate::error::Result;
use crate::graph::{Graph, GraphHom, Vertex};

/// Homomorphisms `G → H` partitioned into ×-homotopy classes.
#[derive(Clone, Debug)]
pub struct HomClasses {
    pub homs: Vec<GraphHom>,
    /// Each class lists indices into `homs`, ascending; classes are ordered by
    /// their smallest member.
    pub classes: Vec<Vec<usize>>,
}

fn partition(n: usize, uf: &UnionFind<usize>) -> Vec<Vec<usize>> {
    let mut by_root: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        let r = uf.find(i);
        match by_root[r] {
            Some(c) => classes[c].push(i),
            None => {
                by_root[r] = Some(classes.len());
                classes.push(vec![i]);
            }
        }
    }
    classes
}

/// ×-homotopy classes via single-vertex moves: `f` and `g` are joined when
/// they differ only at `v` and `η(v) = {f(v), g(v)}` (singletons elsewhere) is
/// a multi-homomorphism.
pub fn x_homotopy_classes(g: &Graph, h: &Graph) -> Result<HomClasses> {
    x_homotopy_classes_with(g, h, DEFAULT_CAP)
}

pub fn x_homotopy_classes_with(g: &Graph, h: &Graph, cap: usize) -> Result<HomClasses> {
    let maps = raw_homs(g, h, cap)?;
    let mut uf = UnionFind::new(maps.len());
    for (i, f) in maps.iter().enumerate() {
        for v in g.vertices() {
            let old = f[v as usize];
            for x in (old + 1)..h.vertex_count() as Vertex {
                let ok = g.neighbors(v).iter().all(|&u| {
                    if u == v {
                        h.has_edge(x, x) && h.has_edge(x, old)
                    } else {
                        h.has_edge(x, f[u as usize])
                    }
                });
                if !ok {
                    continue;
                }
                let mut moved = f.clone();
                moved[v as usize] = x;
                let j = maps.binary_search(&moved).expect("a valid move yields a hom");
                uf.union(i, j);
            }
        }
    }
    let classes = partition(maps.len(), &uf);
    let homs = maps
        .into_iter()
        .map(|m| GraphHom::new(g, h, m).expect("enumerated homs are valid"))
        .collect();
    Ok(HomClasses { homs, classes })
}

/// Connected components of the face poset of `k`, restricted to its
/// dimension-0 cells (indices into `k.cells_of_dim(0)`).
pub fn component_partition(k: &HomComplex) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(k.len());
    for i in 0..k.len() {
        for f in k.facet_indices(i) {
            uf.union(i, f);
        }
    }
    let n0 = k.dim_range(0).len();
    let mut by_root: std::collections::HashMap<usize, usize> = Default::default();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n0 {
        let r = uf.find(i);
        let c = *by_root.entry(r).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[c].push(i);
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, disjoint_union, GraphKind};
    use crate::hom::enumerate_cells;

    fn named(kind: GraphKind) -> Graph {
        build_named(kind).unwrap()
    }

    #[test]
    fn hexagon_is_one_class() {
        let c = x_homotopy_classes(&named(GraphKind::Complete(2)), &named(GraphKind::Complete(3))).unwrap();
        assert_eq!(c.homs.len(), 6);
        assert_eq!(c.classes.len(), 1);
    }

    #[test]
    fn two_edges_give_four_classes() {
        let k2 = named(GraphKind::Complete(2));
        // two ordered pairs per edge, each an isolated point of the complex
        let c = x_homotopy_classes(&k2, &disjoint_union(&k2, &k2)).unwrap();
        assert_eq!(c.homs.len(), 4);
        assert_eq!(c.classes.len(), 4);
    }

    #[test]
    fn points_of_a_cycle_are_one_class() {
        let c = x_homotopy_classes(&named(GraphKind::Complete(1)), &named(GraphKind::Cycle(5))).unwrap();
        assert_eq!((c.homs.len(), c.classes.len()), (5, 1));
    }

    #[test]
    fn moves_agree_with_poset_components() {
        let pairs = [
            (named(GraphKind::Complete(2)), named(GraphKind::Cycle(6))),
            (named(GraphKind::Cycle(5)), named(GraphKind::Cycle(5))),
            (named(GraphKind::Path(2)), named(GraphKind::WalkerG1)),
            (named(GraphKind::Interval(0, 1)), Graph::from_edges(3, [(0, 0), (0, 1), (1, 2), (2, 2)]).unwrap()),
        ];
        for (t, g) in &pairs {
            let moves = x_homotopy_classes(t, g).unwrap();
            let k = enumerate_cells(t, g).unwrap();
            assert_eq!(moves.classes, component_partition(&k));
        }
    }
}
