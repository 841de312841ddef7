use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{connected_components, sat, is_bipartite, Graph, Vertex};
use crate::error::Result;

/// Chromatic number; infinite exactly for graphs with a loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Chromatic {
    Finite(usize),
    Infinite,
}

impl Chromatic {
    pub fn finite(self) -> Option<usize> {
        match self {
            Chromatic::Finite(k) => Some(k),
            Chromatic::Infinite => None,
        }
    }

    /// `self > n`.
    pub fn exceeds(self, n: usize) -> bool {
        match self {
            Chromatic::Finite(k) => k > n,
            Chromatic::Infinite => true,
        }
    }
}

impl fmt::Display for Chromatic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chromatic::Finite(k) => write!(f, "{k}"),
            Chromatic::Infinite => f.write_str("infinity"),
        }
    }
}

// JSON: a number, or the string "infinity".
impl Serialize for Chromatic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Chromatic::Finite(k) => s.serialize_u64(*k as u64),
            Chromatic::Infinite => s.serialize_str("infinity"),
        }
    }
}

impl<'de> Deserialize<'de> for Chromatic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(u64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(k) => Ok(Chromatic::Finite(k as usize)),
            Repr::Str(s) if s == "infinity" => Ok(Chromatic::Infinite),
            Repr::Str(s) => Err(serde::de::Error::custom(format!(
                "expected a number or \"infinity\", got {s:?}"
            ))),
        }
    }
}

/// Exact colouring, one connected component at a time.
///
/// The lower bound is the larger of a greedy clique and 3 for non-bipartite
/// graphs. A seeded tabu search looks for colourings from that bound upward;
/// every smaller colour count is then refuted by a proof-checked SAT call,
/// so the returned value is exact. `node_budget` caps the proof steps of each
/// SAT call.
#[derive(Clone, Debug)]
pub struct ChromaticSolver {
    pub node_budget: u64,
}

impl Default for ChromaticSolver {
    fn default() -> Self {
        Self {
            node_budget: 10_000_000,
        }
    }
}

/// First-fit colouring in label order; uses at most `Δ + 1` colours.
fn greedy_coloring(g: &Graph) -> Vec<usize> {
    let mut col = vec![usize::MAX; g.vertex_count()];
    for v in g.vertices() {
        let taken: Vec<usize> = g.neighbors(v).iter().map(|&w| col[w as usize]).collect();
        col[v as usize] = (0..).find(|c| !taken.contains(c)).unwrap();
    }
    col
}

fn greedy_clique(g: &Graph) -> Vec<Vertex> {
    let mut best: Vec<Vertex> = g.vertices().take(1).collect();
    for s in g.vertices() {
        let mut clique = vec![s];
        let mut cand: Vec<Vertex> = g.neighbors(s).iter().copied().filter(|&w| w != s).collect();
        while !cand.is_empty() {
            let &pick = cand
                .iter()
                .max_by_key(|&&w| (cand.iter().filter(|&&x| g.has_edge(w, x)).count(), std::cmp::Reverse(w)))
                .unwrap();
            clique.push(pick);
            cand.retain(|&x| x != pick && g.has_edge(pick, x));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

impl ChromaticSolver {
    pub fn new(node_budget: u64) -> Self {
        Self { node_budget }
    }

    /// Exact chromatic number together with an optimal colouring (empty for
    /// looped graphs).
    pub fn solve(&self, g: &Graph) -> Result<(Chromatic, Vec<usize>)> {
        if g.has_loops() {
            return Ok((Chromatic::Infinite, Vec::new()));
        }
        let n = g.vertex_count();
        let mut coloring = vec![0; n];
        let mut chi = 0;
        for comp in connected_components(g) {
            let (sub, labels) = g.induced(&comp);
            let (k, col) = self.solve_connected(&sub)?;
            chi = chi.max(k);
            for (i, c) in col.into_iter().enumerate() {
                coloring[labels[i] as usize] = c;
            }
        }
        Ok((Chromatic::Finite(chi), coloring))
    }

    fn solve_connected(&self, g: &Graph) -> Result<(usize, Vec<usize>)> {
        let n = g.vertex_count();
        if g.edge_count() == 0 {
            return Ok((1, vec![0; n]));
        }
        let clique = greedy_clique(g);
        let mut lower = clique.len().max(2);
        if lower < 3 && !is_bipartite(g) {
            lower = 3;
        }
        let iters = 2000 * n as u64 + 10_000;
        let max_deg = g.vertices().map(|v| g.degree(v)).max().unwrap_or(0);
        let (mut best, mut coloring) = (lower..=max_deg)
            .find_map(|k| tabu_coloring(g, k, iters).map(|c| (k, c)))
            .unwrap_or_else(|| (max_deg + 1, greedy_coloring(g)));
        while best > lower {
            match sat::k_coloring(g, best - 1, &clique, self.node_budget)? {
                Some(c) => {
                    best -= 1;
                    coloring = c;
                }
                None => break,
            }
        }
        Ok((best, coloring))
    }
}

/// Tabu search for a proper `k`-colouring (the usual conflict-minimising
/// walk with a randomised tabu tenure). Deterministic: the generator is
/// seeded with a constant.
fn tabu_coloring(g: &Graph, k: usize, max_iters: u64) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut col: Vec<usize> = (0..n).map(|_| rng.gen_range(0..k)).collect();
    // gamma[v * k + c]: neighbours of v coloured c
    let mut gamma = vec![0u32; n * k];
    for v in g.vertices() {
        for &w in g.neighbors(v) {
            gamma[v as usize * k + col[w as usize]] += 1;
        }
    }
    let mut conflicts: usize = g.edges().iter().filter(|&&(u, v)| col[u as usize] == col[v as usize]).count();
    let mut best = conflicts;
    let mut tabu = vec![0u64; n * k];
    for iter in 0..max_iters {
        if conflicts == 0 {
            return Some(col);
        }
        let mut choice: Option<(i64, usize, usize)> = None;
        let mut ties = 0u32;
        for v in 0..n {
            let cv = col[v];
            if gamma[v * k + cv] == 0 {
                continue;
            }
            for c in 0..k {
                if c == cv {
                    continue;
                }
                let delta = gamma[v * k + c] as i64 - gamma[v * k + cv] as i64;
                let allowed = tabu[v * k + c] <= iter || (conflicts as i64 + delta) < best as i64;
                if !allowed {
                    continue;
                }
                match choice {
                    Some((d, _, _)) if delta > d => {}
                    Some((d, _, _)) if delta == d => {
                        // reservoir sampling among equal moves
                        ties += 1;
                        if rng.gen_range(0..ties) == 0 {
                            choice = Some((delta, v, c));
                        }
                    }
                    _ => {
                        ties = 1;
                        choice = Some((delta, v, c));
                    }
                }
            }
        }
        let Some((delta, v, c)) = choice else { continue };
        let old = col[v];
        col[v] = c;
        for &w in g.neighbors(v as Vertex) {
            let w = w as usize;
            gamma[w * k + old] -= 1;
            gamma[w * k + c] += 1;
        }
        conflicts = (conflicts as i64 + delta) as usize;
        best = best.min(conflicts);
        tabu[v * k + old] = iter + rng.gen_range(0..10) + (conflicts as u64 * 6) / 10 + 1;
    }
    (conflicts == 0).then_some(col)
}

/// Exact chromatic number with the default node budget.
pub fn chromatic_number(g: &Graph) -> Result<Chromatic> {
    ChromaticSolver::default().solve(g).map(|(c, _)| c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::{build_named, GraphHom, GraphKind};

    fn chi(kind: GraphKind) -> Chromatic {
        chromatic_number(&build_named(kind).unwrap()).unwrap()
    }

    #[test]
    fn complete_graphs() {
        for n in 1..7 {
            assert_eq!(chi(GraphKind::Complete(n)), Chromatic::Finite(n));
        }
        assert_eq!(chi(GraphKind::Complete(0)), Chromatic::Finite(0));
    }

    #[test]
    fn named_graphs() {
        assert_eq!(chi(GraphKind::Cycle(7)), Chromatic::Finite(3));
        assert_eq!(chi(GraphKind::Cycle(8)), Chromatic::Finite(2));
        assert_eq!(chi(GraphKind::Petersen), Chromatic::Finite(3));
        assert_eq!(chi(GraphKind::WalkerG1), Chromatic::Finite(4));
        assert_eq!(chi(GraphKind::WalkerG2), Chromatic::Finite(3));
        assert_eq!(chi(GraphKind::Grotzsch), Chromatic::Finite(4));
        assert_eq!(chi(GraphKind::Brinkmann), Chromatic::Finite(4));
        assert_eq!(chi(GraphKind::Mycielski(5)), Chromatic::Finite(5));
    }

    #[test]
    fn loops_are_uncolourable() {
        let g = Graph::from_edges(3, [(0, 1), (2, 2)]).unwrap();
        assert_eq!(chromatic_number(&g).unwrap(), Chromatic::Infinite);
    }

    #[test]
    fn colouring_is_a_homomorphism_to_complete_graph() {
        let g = build_named(GraphKind::Brinkmann).unwrap();
        let (k, col) = ChromaticSolver::default().solve(&g).unwrap();
        let kn = build_named(GraphKind::Complete(k.finite().unwrap())).unwrap();
        GraphHom::new(&g, &kn, col.into_iter().map(|c| c as Vertex).collect()).unwrap();
    }

    #[test]
    fn budget_is_enforced() {
        let g = build_named(GraphKind::Brinkmann).unwrap();
        assert!(matches!(
            ChromaticSolver::new(3).solve(&g),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn infinity_round_trips_through_json() {
        let s = serde_json::to_string(&[Chromatic::Finite(3), Chromatic::Infinite]).unwrap();
        assert_eq!(s, r#"[3,"infinity"]"#);
        let back: Vec<Chromatic> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, vec![Chromatic::Finite(3), Chromatic::Infinite]);
    }
}
