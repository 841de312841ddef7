use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{is_bipartite, Graph, GraphHom, Vertex};
use crate::hom::{maximal_cells, MultiHom};

/// `H = X ∪ Y × {1, …, m-1} ∪ G` with the ends glued along `f` and `g`.
///
/// Labels: `X` keeps `0..|X|`; level `i` of `y` is `|X| + (i-1)|Y| + y`;
/// `G` vertex `v` is `|X| + (m-1)|Y| + v`. Hence `A` (X and the levels) is a
/// prefix of the labels, `B` (the levels and G) a suffix, and `A ∩ B` the
/// levels.
#[derive(Clone, Debug)]
pub struct Cylinder {
    pub h: Graph,
    pub m: usize,
    /// Label of each `X` vertex in `H`.
    pub x_embedding: Vec<Vertex>,
    /// Label of each `G` vertex in `H`.
    pub g_embedding: Vec<Vertex>,
    pub a: Graph,
    pub b: Graph,
    pub overlap: Graph,
    /// First `H` label of `B` (and of the overlap).
    pub b_offset: usize,
}

impl Cylinder {
    pub fn x_size(&self) -> usize {
        self.x_embedding.len()
    }

    pub fn g_inclusion(&self, g: &Graph) -> Result<GraphHom> {
        GraphHom::new(g, &self.h, self.g_embedding.clone())
    }
}

pub fn glue_cylinder(x: &Graph, y: &Graph, g: &Graph, f: &GraphHom, gy: &GraphHom, m: usize) -> Result<Cylinder> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("cylinder length {m} < 2")));
    }
    if y.has_loops() {
        return Err(Error::LoopedInput);
    }
    f.check(y, x).map_err(|e| Error::MismatchedDomains(format!("f: {e}")))?;
    gy.check(y, g).map_err(|e| Error::MismatchedDomains(format!("g: {e}")))?;
    let (nx, ny, ng) = (x.vertex_count(), y.vertex_count(), g.vertex_count());
    let level = |yv: Vertex, i: usize| (nx + (i - 1) * ny) as Vertex + yv;
    let g_base = (nx + (m - 1) * ny) as Vertex;
    let mut edges: Vec<(Vertex, Vertex)> = x.edges();
    edges.extend(g.edges().into_iter().map(|(a, b)| (a + g_base, b + g_base)));
    for (a, b) in y.edges() {
        for (p, q) in [(a, b), (b, a)] {
            for i in 1..m {
                edges.push((level(p, i), level(q, i)));
                if i + 1 < m {
                    edges.push((level(p, i), level(q, i + 1)));
                }
            }
            edges.push((f.apply(p), level(q, 1)));
            edges.push((level(p, m - 1), gy.apply(q) + g_base));
        }
    }
    let total = nx + (m - 1) * ny + ng;
    let h = Graph::from_edges(total, edges)?;
    let b_offset = nx;
    let a_keep: Vec<Vertex> = (0..g_base).collect();
    let b_keep: Vec<Vertex> = (b_offset as Vertex..total as Vertex).collect();
    let o_keep: Vec<Vertex> = (b_offset as Vertex..g_base).collect();
    Ok(Cylinder {
        a: h.induced(&a_keep).0,
        b: h.induced(&b_keep).0,
        overlap: h.induced(&o_keep).0,
        h,
        m,
        x_embedding: (0..nx as Vertex).collect(),
        g_embedding: (g_base..total as Vertex).collect(),
        b_offset,
    })
}

/// Check that `Hom(T, H)` is covered by the subcomplexes `Hom(T, A)` and
/// `Hom(T, B)`, meeting in `Hom(T, A ∩ B)`.
///
/// Subcomplexes are compared through their maximal cells, which determine
/// every cell: a cell lies in a subcomplex iff some maximal cell above it
/// does. Counts are of maximal cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct CoveringReport {
    pub maximal_h: usize,
    pub maximal_a: usize,
    pub maximal_b: usize,
    pub maximal_overlap: usize,
    /// `Hom(T, H) = Hom(T, A) ∪ Hom(T, B)`.
    pub union: bool,
    /// `Hom(T, A) ∩ Hom(T, B) = Hom(T, A ∩ B)`.
    pub intersection: bool,
    /// For non-bipartite `T`: `Hom(T, A)` is empty. `None` otherwise.
    pub a_empty: Option<bool>,
}

impl CoveringReport {
    pub fn passes(&self) -> bool {
        self.union && self.intersection && self.a_empty != Some(false)
    }
}

fn shifted(cells: Vec<MultiHom>, by: Vertex) -> Vec<MultiHom> {
    cells
        .into_iter()
        .map(|c| MultiHom::from_sorted(c.sets().iter().map(|s| s.iter().map(|x| x + by).collect()).collect()))
        .collect()
}

/// Members of `cells` that are not faces of another member, sorted.
fn maximal_among(mut cells: Vec<MultiHom>) -> Vec<MultiHom> {
    cells.sort_unstable();
    cells.dedup();
    let keep: Vec<bool> = cells
        .iter()
        .map(|c| !cells.iter().any(|d| d != c && c.is_face_of(d)))
        .collect();
    cells.into_iter().zip(keep).filter_map(|(c, k)| k.then_some(c)).collect()
}

pub fn covering_split(t: &Graph, cyl: &Cylinder, budget: &Budget) -> Result<CoveringReport> {
    let off = cyl.b_offset as Vertex;
    let mh = maximal_cells(t, &cyl.h, budget)?;
    let ma = maximal_cells(t, &cyl.a, budget)?;
    let mb = shifted(maximal_cells(t, &cyl.b, budget)?, off);
    let mo = shifted(maximal_cells(t, &cyl.overlap, budget)?, off);
    let na = cyl.a.vertex_count() as Vertex;
    let in_a = |c: &MultiHom| c.sets().iter().flatten().all(|&x| x < na);
    let in_b = |c: &MultiHom| c.sets().iter().flatten().all(|&x| x >= off);
    // the parts are induced, so a cell of H inside a part is a cell of it
    let parts_in_h = ma.iter().chain(&mb).all(|c| c.is_valid(t, &cyl.h));
    let union = parts_in_h && mh.iter().all(|c| in_a(c) || in_b(c));
    let meets: Vec<MultiHom> = ma.iter().flat_map(|a| mb.iter().filter_map(|b| a.meet(b))).collect();
    let mut mo_sorted = mo.clone();
    mo_sorted.sort_unstable();
    let intersection = maximal_among(meets) == mo_sorted;
    Ok(CoveringReport {
        maximal_h: mh.len(),
        maximal_a: ma.len(),
        maximal_b: mb.len(),
        maximal_overlap: mo.len(),
        union,
        intersection,
        a_empty: (!is_bipartite(t)).then_some(ma.is_empty()),
    })
}
