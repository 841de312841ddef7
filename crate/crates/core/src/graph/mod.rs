//! Finite undirected graphs with loops, homomorphisms between them, and the
//! invariants used to state hypotheses about them.

mod chromatic;
mod fold;
mod invariants;
mod json;
mod named;
mod ops;
mod sat;

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub use chromatic::{chromatic_number, Chromatic, ChromaticSolver};
pub use fold::{fold_reduce, is_dismantlable, FoldResult, FoldStep};
pub use invariants::{
    bfs_distances, connected_components, diameter, girth, is_bipartite, is_connected, odd_girth, shortest_odd_cycle,
    two_coloring, walk_of_length, Length,
};
pub use json::GraphJson;
pub use named::{build_named, GraphKind};
pub use ops::{disjoint_union, product};

/// Vertex label. Vertices of a graph on `n` vertices are `0..n`.
pub type Vertex = u32;

/// A finite graph whose edge relation is symmetric. Loops are allowed,
/// multiple edges are not.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    rows: Vec<FixedBitSet>,
}

impl Graph {
    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Builds a graph from unordered pairs; duplicates are merged and `(v, v)`
    /// is a loop.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            g.rows[u as usize].insert(v as usize);
            g.rows[v as usize].insert(u as usize);
        }
        for (v, row) in g.rows.iter().enumerate() {
            g.adj[v] = row.ones().map(|w| w as Vertex).collect();
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        0..self.adj.len() as Vertex
    }

    /// Sorted neighbourhood `N(v)`; contains `v` itself when `v` is looped.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    /// `N(v)` as a bit set over the vertex labels.
    pub fn neighbor_set(&self, v: Vertex) -> &FixedBitSet {
        &self.rows[v as usize]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.rows[u as usize].contains(v as usize)
    }

    pub fn has_loop(&self, v: Vertex) -> bool {
        self.has_edge(v, v)
    }

    pub fn has_loops(&self) -> bool {
        self.vertices().any(|v| self.has_loop(v))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    /// Unordered edges `(u, v)` with `u <= v`, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for &v in self.neighbors(u) {
                if u <= v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.vertices()
            .map(|u| self.neighbors(u).iter().filter(|&&v| u <= v).count())
            .sum()
    }

    /// Induced subgraph on `keep` (in the given order). Returns the subgraph and
    /// the map from new labels to old labels.
    pub fn induced(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut new_label = vec![u32::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            new_label[v as usize] = i as Vertex;
        }
        let mut edges = Vec::new();
        for (i, &v) in keep.iter().enumerate() {
            for &w in self.neighbors(v) {
                let j = new_label[w as usize];
                if j != u32::MAX && i as Vertex <= j {
                    edges.push((i as Vertex, j));
                }
            }
        }
        let g = Graph::from_edges(keep.len(), edges).expect("labels are in range");
        (g, keep.to_vec())
    }

    /// `G \ v`: the induced subgraph on every vertex but `v`.
    pub fn remove_vertex(&self, v: Vertex) -> (Graph, Vec<Vertex>) {
        let keep: Vec<Vertex> = self.vertices().filter(|&w| w != v).collect();
        self.induced(&keep)
    }

    /// The graph with the edge `{u, v}` deleted.
    pub fn remove_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let edges = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| !((a, b) == (u, v) || (a, b) == (v, u)));
        Graph::from_edges(self.vertex_count(), edges).expect("same labels")
    }

    /// Adds edges; returns a new graph.
    pub fn with_edges<I>(&self, extra: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Graph::from_edges(self.vertex_count(), self.edges().into_iter().chain(extra))
    }

    /// True if every edge of `self`, relabelled by `embedding`, is an edge of
    /// `host` and the relabelling is injective.
    pub fn is_subgraph_of(&self, host: &Graph, embedding: &[Vertex]) -> bool {
        if embedding.len() != self.vertex_count() {
            return false;
        }
        let mut seen = FixedBitSet::with_capacity(host.vertex_count());
        for &x in embedding {
            if x as usize >= host.vertex_count() || seen.put(x as usize) {
                return false;
            }
        }
        self.edges()
            .into_iter()
            .all(|(u, v)| host.has_edge(embedding[u as usize], embedding[v as usize]))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges())
            .finish()
    }
}

/// A vertex map between two graphs that sends edges to edges.
///
/// The graphs themselves are not stored; the map is checked against them at
/// construction and by [`GraphHom::check`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphHom {
    map: Vec<Vertex>,
    codomain_size: usize,
}

impl GraphHom {
    pub fn new(domain: &Graph, codomain: &Graph, map: Vec<Vertex>) -> Result<Self> {
        let hom = Self {
            map,
            codomain_size: codomain.vertex_count(),
        };
        hom.check(domain, codomain)?;
        Ok(hom)
    }

    pub fn identity(g: &Graph) -> Self {
        Self {
            map: g.vertices().collect(),
            codomain_size: g.vertex_count(),
        }
    }

    /// Verifies that this map is a homomorphism `domain -> codomain`.
    pub fn check(&self, domain: &Graph, codomain: &Graph) -> Result<()> {
        if self.map.len() != domain.vertex_count() {
            return Err(Error::MismatchedDomains(format!(
                "map has {} entries but the domain has {} vertices",
                self.map.len(),
                domain.vertex_count()
            )));
        }
        if self.codomain_size != codomain.vertex_count() {
            return Err(Error::MismatchedDomains(format!(
                "map targets {} vertices but the codomain has {}",
                self.codomain_size,
                codomain.vertex_count()
            )));
        }
        if let Some(&x) = self.map.iter().find(|&&x| x as usize >= codomain.vertex_count()) {
            return Err(Error::NotHomomorphism(format!("image {x} is not a vertex")));
        }
        for (u, v) in domain.edges() {
            let (a, b) = (self.map[u as usize], self.map[v as usize]);
            if !codomain.has_edge(a, b) {
                return Err(Error::NotHomomorphism(format!(
                    "edge ({u}, {v}) goes to non-edge ({a}, {b})"
                )));
            }
        }
        Ok(())
    }

    #[inline]
    pub fn apply(&self, v: Vertex) -> Vertex {
        self.map[v as usize]
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.map
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.map
    }

    pub fn domain_size(&self) -> usize {
        self.map.len()
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain_size
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GraphHom) -> Result<GraphHom> {
        if other.domain_size() != self.codomain_size {
            return Err(Error::MismatchedDomains(
                "composition of maps with incompatible ends".into(),
            ));
        }
        Ok(GraphHom {
            map: self.map.iter().map(|&v| other.apply(v)).collect(),
            codomain_size: other.codomain_size,
        })
    }
}
