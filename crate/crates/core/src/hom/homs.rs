use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::budget::DEFAULT_CAP;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphHom, Vertex};

/// BFS order over every component of `t`, lowest unvisited vertex first.
pub(crate) fn bfs_order(t: &Graph) -> Vec<Vertex> {
    let mut seen = vec![false; t.vertex_count()];
    let mut order = Vec::with_capacity(t.vertex_count());
    for s in t.vertices() {
        if seen[s as usize] {
            continue;
        }
        seen[s as usize] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in t.neighbors(u) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

struct Backtrack<'a> {
    t: &'a Graph,
    g: &'a Graph,
    order: Vec<Vertex>,
    map: Vec<Option<Vertex>>,
    out: Vec<Vec<Vertex>>,
    cap: usize,
}

impl Backtrack<'_> {
    /// Images still allowed for `v` given the vertices assigned so far.
    fn candidates(&self, v: Vertex) -> FixedBitSet {
        let n = self.g.vertex_count();
        let mut cand = FixedBitSet::with_capacity(n);
        cand.insert_range(..);
        for &u in self.t.neighbors(v) {
            if u == v {
                continue;
            }
            if let Some(x) = self.map[u as usize] {
                cand.intersect_with(self.g.neighbor_set(x));
            }
        }
        if self.t.has_loop(v) {
            cand.retain_looped(self.g);
        }
        cand
    }

    fn run(&mut self, depth: usize) -> Result<()> {
        if depth == self.order.len() {
            if self.out.len() >= self.cap {
                return Err(Error::ResourceLimit {
                    what: "graph homomorphisms",
                    limit: self.cap as u64,
                });
            }
            self.out.push(self.map.iter().map(|x| x.unwrap()).collect());
            return Ok(());
        }
        let v = self.order[depth];
        let cand = self.candidates(v);
        for x in cand.ones() {
            self.map[v as usize] = Some(x as Vertex);
            // forward check: every unassigned neighbour keeps a candidate
            let dead = self.t.neighbors(v).iter().any(|&w| {
                w != v && self.map[w as usize].is_none() && self.candidates(w).is_clear()
            });
            if !dead {
                self.run(depth + 1)?;
            }
        }
        self.map[v as usize] = None;
        Ok(())
    }
}

trait RetainLooped {
    fn retain_looped(&mut self, g: &Graph);
}

impl RetainLooped for FixedBitSet {
    fn retain_looped(&mut self, g: &Graph) {
        let keep: Vec<usize> = self.ones().filter(|&x| g.has_loop(x as Vertex)).collect();
        self.clear();
        keep.into_iter().for_each(|x| self.insert(x));
    }
}

/// All homomorphisms `t → g`, in lexicographic order of their vertex maps.
pub fn enumerate_homs(t: &Graph, g: &Graph) -> Result<Vec<GraphHom>> {
    enumerate_homs_with(t, g, DEFAULT_CAP)
}

pub fn enumerate_homs_with(t: &Graph, g: &Graph, cap: usize) -> Result<Vec<GraphHom>> {
    let maps = raw_homs(t, g, cap)?;
    Ok(maps
        .into_iter()
        .map(|m| GraphHom::new(t, g, m).expect("backtracking yields homomorphisms"))
        .collect())
}

pub(crate) fn raw_homs(t: &Graph, g: &Graph, cap: usize) -> Result<Vec<Vec<Vertex>>> {
    if t.vertex_count() > 0 && g.vertex_count() == 0 {
        return Ok(Vec::new());
    }
    let mut bt = Backtrack {
        t,
        g,
        order: bfs_order(t),
        map: vec![None; t.vertex_count()],
        out: Vec::new(),
        cap,
    };
    bt.run(0)?;
    let mut out = bt.out;
    out.sort_unstable();
    Ok(out)
}
