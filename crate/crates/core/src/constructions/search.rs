use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{build_named, girth, Chromatic, ChromaticSolver, Graph, GraphKind, Length, Vertex};

/// Where a high-girth, high-chromatic graph came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    OddCycle,
    Library(String),
    Random { vertices: usize, attempt: usize },
}

#[derive(Clone, Debug)]
pub struct HighGirthGraph {
    pub graph: Graph,
    pub chromatic: Chromatic,
    pub girth: Length,
    pub provenance: Provenance,
}

/// Seeded generator used for every randomised construction.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random recursive tree on `n` vertices with randomly permuted labels,
/// redrawn until its maximum degree is at most `max_degree`.
pub fn random_tree<R: Rng>(n: usize, max_degree: usize, rng: &mut R) -> Graph {
    assert!(n >= 1 && max_degree >= 2);
    loop {
        let mut deg = vec![0usize; n];
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        let mut ok = true;
        for v in 1..n {
            let u = rng.gen_range(0..v);
            deg[u] += 1;
            deg[v] += 1;
            if deg[u] > max_degree {
                ok = false;
                break;
            }
            edges.push((u as Vertex, v as Vertex));
        }
        if ok {
            // shuffle labels so the root is not always vertex 0
            let mut perm: Vec<Vertex> = (0..n as Vertex).collect();
            perm.shuffle(rng);
            let edges = edges.into_iter().map(|(a, b)| (perm[a as usize], perm[b as usize]));
            return Graph::from_edges(n, edges).expect("labels in range");
        }
    }
}

/// Erdős–Rényi `G(n, p)` without loops.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as Vertex {
        for v in u + 1..n as Vertex {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("labels in range")
}

/// A random connected graph of girth at least `min_girth`: a random tree
/// plus up to `extra` random edges, each kept only if no cycle shorter than
/// `min_girth` appears.
pub fn random_connected_girth<R: Rng>(n: usize, extra: usize, min_girth: usize, rng: &mut R) -> Graph {
    let mut g = random_tree(n, n.max(2), rng);
    let mut tries = 0;
    let mut added = 0;
    while added < extra && tries < 50 * (extra + 1) {
        tries += 1;
        let u = rng.gen_range(0..n) as Vertex;
        let v = rng.gen_range(0..n) as Vertex;
        if u == v || g.has_edge(u, v) {
            continue;
        }
        // the new edge closes cycles of length dist(u, v) + 1
        let d = crate::graph::bfs_distances(&g, u)[v as usize].expect("connected");
        if d + 1 >= min_girth {
            g = g.with_edges([(u, v)]).expect("labels in range");
            added += 1;
        }
    }
    g
}

/// An edge on a cycle of length `< bound`, if any.
fn short_cycle_edge(g: &Graph, bound: usize) -> Option<(Vertex, Vertex)> {
    let n = g.vertex_count();
    for s in g.vertices() {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![Vertex::MAX; n];
        dist[s as usize] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u as usize] + 1 >= bound {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w as usize] == usize::MAX {
                    dist[w as usize] = dist[u as usize] + 1;
                    parent[w as usize] = u;
                    queue.push_back(w);
                } else if parent[u as usize] != w && dist[u as usize] + dist[w as usize] + 1 < bound {
                    return Some((u, w));
                }
            }
        }
    }
    None
}

/// Deletes edges until no cycle shorter than `min_girth` remains.
pub fn remove_short_cycles(g: &Graph, min_girth: usize) -> Graph {
    let mut g = g.clone();
    while let Some((u, v)) = short_cycle_edge(&g, min_girth) {
        g = g.remove_edge(u, v);
    }
    g
}

/// Curated graphs, smallest first.
const LIBRARY: &[(&str, GraphKind)] = &[
    ("petersen", GraphKind::Petersen),
    ("grotzsch", GraphKind::Grotzsch),
    ("brinkmann", GraphKind::Brinkmann),
    ("mycielski-5", GraphKind::Mycielski(5)),
];

/// Random restarts tried before giving up.
pub const SEARCH_ATTEMPTS: usize = 200;

/// A graph `X` with `χ(X) > n` and girth at least `m`, verified exactly.
pub fn find_high_girth_high_chromatic(n: usize, m: usize, seed: u64, budget: &Budget) -> Result<HighGirthGraph> {
    if n < 1 || m < 3 {
        return Err(Error::InvalidParameter(format!("need n ≥ 1 and m ≥ 3, got n = {n}, m = {m}")));
    }
    let solver = ChromaticSolver::new(budget.solver_nodes);
    let accept = |g: Graph, provenance: Provenance| accept_candidate(g, n, m, &solver, provenance);
    if n == 1 {
        let k2 = build_named(GraphKind::Complete(2))?;
        return accept(k2, Provenance::Library("complete-2".into()))?.ok_or_else(|| Error::NotFound("K_2 rejected".into()));
    }
    if n == 2 {
        let len = if m % 2 == 1 { m } else { m + 1 };
        return accept(build_named(GraphKind::Cycle(len))?, Provenance::OddCycle)?.ok_or_else(|| Error::NotFound(format!("odd cycle of length {len} rejected")));
    }
    for (name, kind) in LIBRARY {
        if let Some(found) = accept(build_named(*kind)?, Provenance::Library((*name).into()))? {
            return Ok(found);
        }
    }
    random_search(n, m, seed, budget)
}

fn accept_candidate(g: Graph, n: usize, m: usize, solver: &ChromaticSolver, provenance: Provenance) -> Result<Option<HighGirthGraph>> {
    let gi = girth(&g);
    if gi < Length::Finite(m) {
        return Ok(None);
    }
    let (chromatic, _) = solver.solve(&g)?;
    Ok(chromatic.exceeds(n).then_some(HighGirthGraph {
        graph: g,
        chromatic,
        girth: gi,
        provenance,
    }))
}

/// Sparse random graphs with short cycles deleted, each verified exactly.
pub fn random_search(n: usize, m: usize, seed: u64, budget: &Budget) -> Result<HighGirthGraph> {
    let solver = ChromaticSolver::new(budget.solver_nodes);
    let mut rng = rng(seed);
    for attempt in 0..SEARCH_ATTEMPTS {
        let vertices = 20 + 10 * (attempt / 20);
        let c = (n as f64) * 1.6 + 1.0;
        let p = (c / vertices as f64).min(1.0);
        let g = remove_short_cycles(&random_graph(vertices, p, &mut rng), m);
        match accept_candidate(g, n, m, &solver, Provenance::Random { vertices, attempt }) {
            Ok(Some(found)) => return Ok(found),
            Ok(None) => {}
            // one hard colouring instance should not end the search
            Err(Error::ResourceLimit { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Err(Error::NotFound(format!(
        "no graph with χ > {n} and girth ≥ {m} in {SEARCH_ATTEMPTS} random attempts (seed {seed})"
    )))
}
