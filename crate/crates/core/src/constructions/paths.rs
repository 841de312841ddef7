use super::subdivision::subdivide_edge;
use crate::error::{Error, Result};
use crate::graph::{build_named, Graph, GraphHom, GraphKind, Vertex};

/// `Y` with its two maps; see [`replace_edges_with_paths`].
#[derive(Clone, Debug)]
pub struct PathReplacement {
    pub y: Graph,
    /// `Y → X`, the composite of the per-edge retractions.
    pub f: GraphHom,
    /// `Y → C_L`, winding each new path once around the cycle.
    pub wrap: GraphHom,
    /// The target of `wrap` (a single looped vertex when `L = 1`).
    pub cycle: Graph,
    /// For each edge `(u, w)` of `X`, the vertices of its path from `u` to `w`.
    pub paths: Vec<Vec<Vertex>>,
}

/// Replaces every edge of `x` by a path of odd length `len`, by subdividing
/// the middle edge of each path `(len - 1) / 2` times.
pub fn replace_edges_with_paths(x: &Graph, len: usize) -> Result<PathReplacement> {
    if len % 2 == 0 {
        return Err(Error::EvenLength(len));
    }
    if x.has_loops() {
        return Err(Error::LoopedInput);
    }
    let cycle = if len == 1 {
        Graph::from_edges(1, [(0, 0)])?
    } else {
        build_named(GraphKind::Cycle(len))?
    };
    let mut y = x.clone();
    let mut f = GraphHom::identity(x);
    let mut paths = Vec::with_capacity(x.edge_count());
    for (u, w) in x.edges() {
        let mut path = vec![u, w];
        while path.len() < len + 1 {
            let mid = (path.len() - 2) / 2;
            let step = subdivide_edge(&y, path[mid], path[mid + 1])?;
            f = step.retraction.then(&f)?;
            let (p0, p1) = step.new_vertices;
            path.splice(mid + 1..mid + 1, [p0, p1]);
            y = step.after;
        }
        paths.push(path);
    }
    let mut wind = vec![0 as Vertex; y.vertex_count()];
    for path in &paths {
        for (i, &p) in path.iter().enumerate() {
            wind[p as usize] = (i % len) as Vertex;
        }
    }
    let wrap = GraphHom::new(&y, &cycle, wind)?;
    Ok(PathReplacement {
        y,
        f,
        wrap,
        cycle,
        paths,
    })
}
