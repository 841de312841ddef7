use super::{Graph, Vertex};

/// A witness `w != v` with `N(v) ⊆ N(w)`, lowest label first.
///
/// Neighbourhoods include `v` itself when `v` carries a loop.
pub fn is_dismantlable(g: &Graph, v: Vertex) -> Option<Vertex> {
    let nv = g.neighbor_set(v);
    g.vertices()
        .find(|&w| w != v && nv.is_subset(g.neighbor_set(w)))
}

/// One fold: `removed` was dismantlable with witness `witness`. Both labels
/// refer to the original graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FoldStep {
    pub removed: Vertex,
    pub witness: Vertex,
}

#[derive(Clone, Debug)]
pub struct FoldResult {
    /// The stable core, relabelled `0..k`.
    pub core: Graph,
    /// Original label of each core vertex.
    pub core_vertices: Vec<Vertex>,
    pub steps: Vec<FoldStep>,
}

/// Removes dismantlable vertices, lowest label first, until none is left.
pub fn fold_reduce(g: &Graph) -> FoldResult {
    let mut current = g.clone();
    let mut labels: Vec<Vertex> = g.vertices().collect();
    let mut steps = Vec::new();
    loop {
        let found = current
            .vertices()
            .find_map(|v| is_dismantlable(&current, v).map(|w| (v, w)));
        let Some((v, w)) = found else { break };
        steps.push(FoldStep {
            removed: labels[v as usize],
            witness: labels[w as usize],
        });
        let (smaller, kept) = current.remove_vertex(v);
        labels = kept.iter().map(|&i| labels[i as usize]).collect();
        current = smaller;
    }
    FoldResult {
        core: current,
        core_vertices: labels,
        steps,
    }
}
