use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{walk_of_length, Graph, GraphHom, Vertex};
use crate::hom::{enumerate_cells_with, pushforward, HomComplex, MultiHom};
use crate::budget::Budget;

/// `G_e`: the edge `⟨v, w⟩` replaced by a path `v ~ p0 ~ p1 ~ w` through two
/// new vertices, with the retraction `r_e : G_e → G`.
#[derive(Clone, Debug)]
pub struct SubdivisionStep {
    pub before: Graph,
    pub edge: (Vertex, Vertex),
    pub after: Graph,
    /// `p0 ↦ w`, `p1 ↦ v`, identity elsewhere.
    pub retraction: GraphHom,
    /// `(p0, p1)`; `p0` is adjacent to `v` and `p1` to `w`. They are the
    /// labels `|V(G)|` and `|V(G)| + 1`.
    pub new_vertices: (Vertex, Vertex),
}

pub fn subdivide_edge(g: &Graph, v: Vertex, w: Vertex) -> Result<SubdivisionStep> {
    let n = g.vertex_count();
    if v as usize >= n || w as usize >= n || !g.has_edge(v, w) {
        return Err(Error::MissingEdge(v, w));
    }
    if v == w {
        return Err(Error::LoopEdge(v));
    }
    let (p0, p1) = (n as Vertex, n as Vertex + 1);
    let edges = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| (a, b) != (v.min(w), v.max(w)))
        .chain([(p0, p1), (v, p0), (p1, w)]);
    let after = Graph::from_edges(n + 2, edges)?;
    let mut map: Vec<Vertex> = g.vertices().collect();
    map.extend([w, v]);
    let retraction = GraphHom::new(&after, g, map)?;
    Ok(SubdivisionStep {
        before: g.clone(),
        edge: (v, w),
        after,
        retraction,
        new_vertices: (p0, p1),
    })
}

/// `None` when no walk of length 3 joins `v` to `w` in `G ∖ e` (the
/// hypothesis holds); otherwise such a walk.
pub fn subdivision_hypothesis(g: &Graph, v: Vertex, w: Vertex) -> Result<Option<Vec<Vertex>>> {
    if !g.has_edge(v, w) {
        return Err(Error::MissingEdge(v, w));
    }
    Ok(walk_of_length(&g.remove_edge(v, w), v, w, 3))
}

/// Fibres of `(r_e)_* : B(G_e) → B(G)`.
#[derive(Clone, Debug, Serialize)]
pub struct FiberReport {
    /// Cells of `B(G)` whose fibre is a single cell.
    pub singletons: usize,
    /// Cells of `B(G)` with any other fibre size, apart from the two below.
    pub irregular: Vec<Vec<Vec<Vertex>>>,
    /// Fibre over `({v}, {w})`, in cell order.
    pub fiber_i: Vec<Vec<Vec<Vertex>>>,
    /// Fibre over `({w}, {v})`.
    pub fiber_j: Vec<Vec<Vec<Vertex>>>,
    pub i_is_zigzag: bool,
    pub j_is_zigzag: bool,
    /// `I` is `({v},{p0}) < ({v,p1},{p0}) > ({p1},{p0}) < ({p1},{p0,w}) > ({p1},{w})`
    /// and `J` is the same with the coordinates swapped.
    pub matches_expected: bool,
    pub disjoint: bool,
}

impl FiberReport {
    pub fn passes(&self) -> bool {
        self.irregular.is_empty() && self.i_is_zigzag && self.j_is_zigzag && self.matches_expected && self.disjoint
    }
}

/// Five cells, three vertices and two edges, whose face relation is a path
/// alternating between the two kinds.
fn is_zigzag(cells: &[MultiHom]) -> bool {
    if cells.len() != 5 {
        return false;
    }
    let (lo, hi): (Vec<_>, Vec<_>) = cells.iter().partition(|c| c.dimension() == 0);
    if lo.len() != 3 || hi.len() != 2 || hi.iter().any(|c| c.dimension() != 1) {
        return false;
    }
    let degree = |x: &MultiHom| hi.iter().filter(|h| x.is_face_of(h)).count();
    let mut degrees: Vec<usize> = lo.iter().map(|x| degree(x)).collect();
    degrees.sort_unstable();
    let shared = lo.iter().filter(|x| degree(x) == 2).count();
    degrees == [1, 1, 2] && shared == 1 && hi.iter().all(|h| lo.iter().filter(|x| x.is_face_of(h)).count() == 2)
}

fn sets(cells: &[MultiHom]) -> Vec<Vec<Vec<Vertex>>> {
    cells.iter().map(|c| c.sets().to_vec()).collect()
}

pub fn fiber_certificate(step: &SubdivisionStep) -> Result<FiberReport> {
    fiber_certificate_with(step, &Budget::default())
}

pub fn fiber_certificate_with(step: &SubdivisionStep, budget: &Budget) -> Result<FiberReport> {
    let (v, w) = step.edge;
    if subdivision_hypothesis(&step.before, v, w)?.is_some() {
        return Err(Error::HypothesisViolated(format!("a walk of length 3 joins {v} and {w} outside the edge")));
    }
    let k2 = Graph::from_edges(2, [(0, 1)])?;
    let small = enumerate_cells_with(&k2, &step.before, budget)?;
    let big = enumerate_cells_with(&k2, &step.after, budget)?;
    let push = pushforward(&step.retraction, &big, &small)?;
    let mut fibers: Vec<Vec<MultiHom>> = vec![Vec::new(); small.len()];
    for (i, &j) in push.images.iter().enumerate() {
        fibers[j].push(big.cell(i).clone());
    }
    let at = |a: &[Vertex], b: &[Vertex]| {
        MultiHom::new(&k2, &step.before, vec![a.to_vec(), b.to_vec()]).map(|c| small.index_of(&c))
    };
    let iv = at(&[v], &[w])?.expect("edge cell");
    let jv = at(&[w], &[v])?.expect("edge cell");
    let mut singletons = 0;
    let mut irregular = Vec::new();
    for (j, f) in fibers.iter().enumerate() {
        if j == iv || j == jv {
            continue;
        }
        if f.len() == 1 {
            singletons += 1;
        } else {
            irregular.push(small.cell(j).sets().to_vec());
        }
    }
    let (p0, p1) = step.new_vertices;
    let expected_i = expected_fiber(&k2, &step.after, &big, v, w, p0, p1, false)?;
    let expected_j = expected_fiber(&k2, &step.after, &big, v, w, p0, p1, true)?;
    let (fi, fj) = (&fibers[iv], &fibers[jv]);
    Ok(FiberReport {
        singletons,
        irregular,
        fiber_i: sets(fi),
        fiber_j: sets(fj),
        i_is_zigzag: is_zigzag(fi),
        j_is_zigzag: is_zigzag(fj),
        matches_expected: *fi == expected_i && *fj == expected_j,
        disjoint: fi.iter().all(|c| !fj.contains(c)),
    })
}

#[allow(clippy::too_many_arguments)]
fn expected_fiber(
    k2: &Graph,
    ge: &Graph,
    big: &HomComplex,
    v: Vertex,
    w: Vertex,
    p0: Vertex,
    p1: Vertex,
    swap: bool,
) -> Result<Vec<MultiHom>> {
    let list: [(&[Vertex], &[Vertex]); 5] = [
        (&[v], &[p0]),
        (&[v, p1], &[p0]),
        (&[p1], &[p0]),
        (&[p1], &[p0, w]),
        (&[p1], &[w]),
    ];
    let mut cells = list
        .iter()
        .map(|&(a, b)| {
            let (a, b) = if swap { (b, a) } else { (a, b) };
            MultiHom::new(k2, ge, vec![a.to_vec(), b.to_vec()])
        })
        .collect::<Result<Vec<_>>>()?;
    cells.sort_by_key(|c| big.index_of(c));
    Ok(cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, girth, GraphKind, Length};

    fn named(kind: GraphKind) -> Graph {
        build_named(kind).unwrap()
    }

    #[test]
    fn c5_subdivides_to_c7() {
        let c5 = named(GraphKind::Cycle(5));
        let s = subdivide_edge(&c5, 0, 1).unwrap();
        assert_eq!(s.after.vertex_count(), 7);
        assert_eq!(s.after.edge_count(), 7);
        assert_eq!(girth(&s.after), Length::Finite(7));
        assert!(s.after.vertices().all(|x| s.after.degree(x) == 2));
        assert_eq!(s.retraction.as_slice(), &[0, 1, 2, 3, 4, 1, 0]);
        assert_eq!(s.new_vertices, (5, 6));
        assert!(s.after.has_edge(0, 5) && s.after.has_edge(6, 1) && !s.after.has_edge(0, 1));
    }

    #[test]
    fn edge_becomes_l3() {
        let s = subdivide_edge(&named(GraphKind::Complete(2)), 0, 1).unwrap();
        assert_eq!(s.after.edges(), vec![(0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn walker_g1_subdivides_to_g2() {
        let s = subdivide_edge(&named(GraphKind::WalkerG1), 0, 6).unwrap();
        assert_eq!(s.after, named(GraphKind::WalkerG2));
    }

    #[test]
    fn errors() {
        let c5 = named(GraphKind::Cycle(5));
        assert!(matches!(subdivide_edge(&c5, 0, 2), Err(Error::MissingEdge(0, 2))));
        let looped = Graph::from_edges(2, [(0, 0), (0, 1)]).unwrap();
        assert!(matches!(subdivide_edge(&looped, 0, 0), Err(Error::LoopEdge(0))));
    }

    #[test]
    fn hypothesis_on_cycles() {
        let c5 = named(GraphKind::Cycle(5));
        for (v, w) in c5.edges() {
            assert_eq!(subdivision_hypothesis(&c5, v, w).unwrap(), None);
        }
        let c4 = named(GraphKind::Cycle(4));
        for (v, w) in c4.edges() {
            let walk = subdivision_hypothesis(&c4, v, w).unwrap().unwrap();
            assert_eq!(walk.len(), 4);
            assert_eq!((walk[0], walk[3]), (v, w));
        }
    }

    #[test]
    fn c5_fibers() {
        let s = subdivide_edge(&named(GraphKind::Cycle(5)), 0, 1).unwrap();
        let r = fiber_certificate(&s).unwrap();
        assert!(r.passes(), "{r:?}");
        assert_eq!(r.fiber_i.len(), 5);
        assert_eq!(r.singletons, 20 - 2);
    }

    #[test]
    fn c4_is_refused() {
        let s = subdivide_edge(&named(GraphKind::Cycle(4)), 0, 1).unwrap();
        assert!(matches!(fiber_certificate(&s), Err(Error::HypothesisViolated(_))));
    }
}
