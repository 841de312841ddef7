use super::{Graph, Vertex};

/// Categorical product: `(g, h) ~ (g', h')` iff `g ~ g'` and `h ~ h'`.
/// Vertex `(g, h)` gets label `g * |V(H)| + h`.
pub fn product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.vertex_count() as Vertex;
    let mut edges = Vec::new();
    for (a, b) in g.edges() {
        for (c, d) in h.edges() {
            edges.push((a * nh + c, b * nh + d));
            edges.push((a * nh + d, b * nh + c));
        }
    }
    Graph::from_edges(g.vertex_count() * h.vertex_count(), edges).expect("labels in range")
}

/// Side-by-side union; the second graph's labels are shifted by `|V(G1)|`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let shift = g1.vertex_count() as Vertex;
    let edges = g1
        .edges()
        .into_iter()
        .chain(g2.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
    Graph::from_edges(g1.vertex_count() + g2.vertex_count(), edges).expect("labels in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, GraphHom, GraphKind};

    fn k(n: usize) -> Graph {
        build_named(GraphKind::Complete(n)).unwrap()
    }

    #[test]
    fn k2_squared_is_two_edges() {
        let p = product(&k(2), &k(2));
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.edges(), vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn looped_point_is_a_unit() {
        let i0 = build_named(GraphKind::Interval(0, 0)).unwrap();
        let p = build_named(GraphKind::Petersen).unwrap();
        assert_eq!(product(&p, &i0), p);
    }

    #[test]
    fn triangle_times_edge_is_hexagon() {
        let p = product(&k(3), &k(2));
        assert_eq!(p.vertex_count(), 6);
        assert!(p.vertices().all(|v| p.degree(v) == 2));
        assert!(crate::graph::is_connected(&p));
    }

    #[test]
    fn projections_are_homomorphisms() {
        let g = build_named(GraphKind::Cycle(5)).unwrap();
        let h = build_named(GraphKind::WalkerG1).unwrap();
        let p = product(&g, &h);
        let nh = h.vertex_count() as Vertex;
        GraphHom::new(&p, &g, p.vertices().map(|v| v / nh).collect()).unwrap();
        GraphHom::new(&p, &h, p.vertices().map(|v| v % nh).collect()).unwrap();
    }

    #[test]
    fn disjoint_union_counts() {
        let u = disjoint_union(&k(2), &k(3));
        assert_eq!((u.vertex_count(), u.edge_count()), (5, 4));
        let two = disjoint_union(&k(1), &k(1));
        assert_eq!((two.vertex_count(), two.edge_count()), (2, 0));
    }
}
