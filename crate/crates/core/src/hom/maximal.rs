//! Maximal cells of `Hom(T, G)` without enumerating the rest of the complex.
//!
//! A cell is a set of pairs `(v, x)` (read: `x ∈ η(v)`) that are pairwise
//! compatible and cover every `v`. Compatibility is a graph on the pairs, so
//! the maximal cells are exactly its maximal cliques that cover every source
//! vertex; Bron–Kerbosch with pivoting lists them.

use fixedbitset::FixedBitSet;

use super::homs::raw_homs;
use super::MultiHom;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

struct Pairs {
    /// `(v, x)` for every pair, grouped by `v`.
    pairs: Vec<(Vertex, Vertex)>,
    /// Pair indices of source vertex `v`: `block[v]..block[v + 1]`.
    block: Vec<usize>,
    adj: Vec<FixedBitSet>,
}

fn compatibility(t: &Graph, g: &Graph, homs: &[Vec<Vertex>]) -> Pairs {
    let nt = t.vertex_count();
    let mut domains = vec![FixedBitSet::with_capacity(g.vertex_count()); nt];
    for h in homs {
        for (v, &x) in h.iter().enumerate() {
            domains[v].insert(x as usize);
        }
    }
    let mut pairs = Vec::new();
    let mut block = vec![0];
    for (v, d) in domains.iter().enumerate() {
        pairs.extend(d.ones().map(|x| (v as Vertex, x as Vertex)));
        block.push(pairs.len());
    }
    let np = pairs.len();
    let mut index = vec![vec![usize::MAX; g.vertex_count()]; nt];
    for (p, &(v, x)) in pairs.iter().enumerate() {
        index[v as usize][x as usize] = p;
    }
    let adj = pairs
        .iter()
        .enumerate()
        .map(|(p, &(v, x))| {
            let mut row = FixedBitSet::with_capacity(np);
            row.insert_range(..);
            // the same coordinate only constrains itself through a loop
            for w in t.neighbors(v).iter().copied() {
                let w = w as usize;
                row.set_range(block[w]..block[w + 1], false);
                for y in g.neighbor_set(x).ones() {
                    let q = index[w][y];
                    if q != usize::MAX {
                        row.insert(q);
                    }
                }
            }
            row.set(p, false);
            row
        })
        .collect();
    Pairs { pairs, block, adj }
}

struct Search<'a> {
    p: &'a Pairs,
    nt: usize,
    clique: Vec<usize>,
    per_vertex: Vec<usize>,
    out: Vec<MultiHom>,
    nodes: usize,
    cap: usize,
}

impl Search<'_> {
    fn covered(&self, cand: &FixedBitSet) -> bool {
        (0..self.nt).all(|v| {
            self.per_vertex[v] > 0 || (self.p.block[v]..self.p.block[v + 1]).any(|q| cand.contains(q))
        })
    }

    fn run(&mut self, cand: FixedBitSet, excl: FixedBitSet) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::ResourceLimit {
                what: "maximal cell search nodes",
                limit: self.cap as u64,
            });
        }
        if !self.covered(&cand) {
            return Ok(());
        }
        if cand.is_clear() {
            if excl.is_clear() {
                if self.out.len() >= self.cap {
                    return Err(Error::ResourceLimit {
                        what: "maximal cells",
                        limit: self.cap as u64,
                    });
                }
                let mut sets = vec![Vec::new(); self.nt];
                for &q in &self.clique {
                    let (v, x) = self.p.pairs[q];
                    sets[v as usize].push(x);
                }
                for s in &mut sets {
                    s.sort_unstable();
                }
                self.out.push(MultiHom::from_sorted(sets));
            }
            return Ok(());
        }
        // Tomita pivot: the vertex of cand ∪ excl with most neighbours in cand
        let pivot = cand
            .ones()
            .chain(excl.ones())
            .max_by_key(|&u| self.p.adj[u].intersection(&cand).count())
            .expect("cand is nonempty");
        let mut branch = cand.clone();
        branch.difference_with(&self.p.adj[pivot]);
        let (mut cand, mut excl) = (cand, excl);
        for q in branch.ones() {
            let mut c2 = cand.clone();
            c2.intersect_with(&self.p.adj[q]);
            let mut x2 = excl.clone();
            x2.intersect_with(&self.p.adj[q]);
            let v = self.p.pairs[q].0 as usize;
            self.clique.push(q);
            self.per_vertex[v] += 1;
            self.run(c2, x2)?;
            self.per_vertex[v] -= 1;
            self.clique.pop();
            cand.set(q, false);
            excl.insert(q);
        }
        Ok(())
    }
}

/// The maximal cells of `Hom(t, g)`, sorted. `budget.cell_cap` bounds both
/// the output and the search.
pub fn maximal_cells(t: &Graph, g: &Graph, budget: &Budget) -> Result<Vec<MultiHom>> {
    let homs = raw_homs(t, g, budget.hom_cap)?;
    if homs.is_empty() {
        return Ok(Vec::new());
    }
    let nt = t.vertex_count();
    if nt == 0 {
        return Ok(vec![MultiHom::from_sorted(Vec::new())]);
    }
    let pairs = compatibility(t, g, &homs);
    let np = pairs.pairs.len();
    let mut cand = FixedBitSet::with_capacity(np);
    cand.insert_range(..);
    let mut search = Search {
        p: &pairs,
        nt,
        clique: Vec::new(),
        per_vertex: vec![0; nt],
        out: Vec::new(),
        nodes: 0,
        cap: budget.cell_cap,
    };
    search.run(cand, FixedBitSet::with_capacity(np))?;
    let mut out = search.out;
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, GraphKind};
    use crate::hom::enumerate_cells;

    fn named(kind: GraphKind) -> Graph {
        build_named(kind).unwrap()
    }

    fn brute(t: &Graph, g: &Graph) -> Vec<MultiHom> {
        let k = enumerate_cells(t, g).unwrap();
        let mut out: Vec<MultiHom> = k
            .cells()
            .iter()
            .filter(|c| !k.cells().iter().any(|d| d != *c && c.is_face_of(d)))
            .cloned()
            .collect();
        out.sort_unstable();
        out
    }

    #[test]
    fn matches_brute_force() {
        let pairs = [
            (GraphKind::Complete(2), GraphKind::Complete(4)),
            (GraphKind::Complete(2), GraphKind::Cycle(5)),
            (GraphKind::Cycle(5), GraphKind::Cycle(5)),
            (GraphKind::Path(2), GraphKind::Petersen),
            (GraphKind::Complete(3), GraphKind::Complete(4)),
            (GraphKind::Star(3), GraphKind::Cycle(6)),
            (GraphKind::Complete(2), GraphKind::WalkerG1),
            (GraphKind::Complete(1), GraphKind::Cycle(4)),
        ];
        for (t, g) in pairs {
            let (t, g) = (named(t), named(g));
            assert_eq!(maximal_cells(&t, &g, &Budget::default()).unwrap(), brute(&t, &g), "{t:?} → {g:?}");
        }
    }

    #[test]
    fn looped_targets() {
        let t = Graph::from_edges(2, [(0, 1), (1, 1)]).unwrap();
        let g = Graph::from_edges(3, [(0, 1), (1, 1), (1, 2), (2, 2), (0, 2)]).unwrap();
        assert_eq!(maximal_cells(&t, &g, &Budget::default()).unwrap(), brute(&t, &g));
        let g = named(GraphKind::Interval(0, 3));
        assert_eq!(maximal_cells(&named(GraphKind::Cycle(5)), &g, &Budget::default()).unwrap(), brute(&named(GraphKind::Cycle(5)), &g));
    }

    #[test]
    fn empty_when_no_homs() {
        let m = maximal_cells(&named(GraphKind::Complete(3)), &named(GraphKind::Complete(2)), &Budget::default());
        assert!(m.unwrap().is_empty());
    }
}
