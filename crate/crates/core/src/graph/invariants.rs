use std::collections::VecDeque;
use std::fmt;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// A cycle length that may be infinite (no cycle of the requested kind).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Length {
    Finite(usize),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<usize> {
        match self {
            Length::Finite(n) => Some(n),
            Length::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Length::Infinite)
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => f.write_str("infinity"),
        }
    }
}

/// Shortest-path distances from `s`; `None` for unreachable vertices.
pub fn bfs_distances(g: &Graph, s: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[s as usize] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize].unwrap();
        for &w in g.neighbors(u) {
            if dist[w as usize].is_none() {
                dist[w as usize] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Vertex sets of the connected components, each sorted, ordered by least
/// vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s as usize] {
            continue;
        }
        let mut comp: Vec<Vertex> = bfs_distances(g, s)
            .iter()
            .enumerate()
            .filter_map(|(v, d)| d.map(|_| v as Vertex))
            .collect();
        comp.sort_unstable();
        for &v in &comp {
            seen[v as usize] = true;
        }
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    g.is_empty() || bfs_distances(g, 0).iter().all(Option::is_some)
}

/// A proper 2-colouring, if one exists. Looped graphs have none.
pub fn two_coloring(g: &Graph) -> Option<Vec<u8>> {
    let mut color: Vec<Option<u8>> = vec![None; g.vertex_count()];
    for s in g.vertices() {
        if color[s as usize].is_some() {
            continue;
        }
        color[s as usize] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u as usize].unwrap();
            for &w in g.neighbors(u) {
                match color[w as usize] {
                    None => {
                        color[w as usize] = Some(1 - cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(Option::unwrap).collect())
}

pub fn is_bipartite(g: &Graph) -> bool {
    two_coloring(g).is_some()
}

/// Length of a shortest cycle. A loop counts as a cycle of length 1.
pub fn girth(g: &Graph) -> Length {
    if g.has_loops() {
        return Length::Finite(1);
    }
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![u32::MAX; n];
    for s in g.vertices() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s as usize] = 0;
        parent[s as usize] = u32::MAX;
        let mut queue = VecDeque::from([s]);
        'bfs: while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            if 2 * du + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w as usize] == usize::MAX {
                    dist[w as usize] = du + 1;
                    parent[w as usize] = u;
                    queue.push_back(w);
                } else if parent[u as usize] != w {
                    best = best.min(du + dist[w as usize] + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
    }
    if best == usize::MAX {
        Length::Infinite
    } else {
        Length::Finite(best)
    }
}

/// A closed walk of odd length through `s` found by BFS from `s`; minimal among
/// such walks built from two BFS branches.
fn odd_walk_from(g: &Graph, s: Vertex) -> Option<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![u32::MAX; n];
    dist[s as usize] = 0;
    let mut queue = VecDeque::from([s]);
    let mut best: Option<(usize, Vertex, Vertex)> = None;
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize];
        if let Some((len, _, _)) = best {
            if 2 * du + 1 >= len {
                break;
            }
        }
        for &w in g.neighbors(u) {
            if dist[w as usize] == usize::MAX {
                dist[w as usize] = du + 1;
                parent[w as usize] = u;
                queue.push_back(w);
            } else if dist[w as usize] == du {
                let len = 2 * du + 1;
                if best.map_or(true, |(l, _, _)| len < l) {
                    best = Some((len, u, w));
                }
            }
        }
    }
    let (_, u, w) = best?;
    let path_to = |mut x: Vertex| {
        let mut p = vec![x];
        while x != s {
            x = parent[x as usize];
            p.push(x);
        }
        p.reverse();
        p
    };
    let mut walk = path_to(u);
    let mut back = path_to(w);
    back.reverse();
    back.pop();
    walk.extend(back);
    Some(walk)
}

/// A shortest odd cycle as a vertex sequence `c_0, …, c_{2k}` with
/// `c_i ~ c_{i+1}` and `c_{2k} ~ c_0`. A loop at `v` gives `[v]`.
pub fn shortest_odd_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    if let Some(v) = g.vertices().find(|&v| g.has_loop(v)) {
        return Some(vec![v]);
    }
    g.vertices()
        .filter_map(|s| odd_walk_from(g, s))
        .min_by_key(|w| w.len())
}

/// Length of a shortest odd cycle; infinite iff the graph is bipartite.
pub fn odd_girth(g: &Graph) -> Length {
    match shortest_odd_cycle(g) {
        Some(c) => Length::Finite(c.len()),
        None => Length::Infinite,
    }
}

/// Maximum distance between two vertices of a connected nonempty graph.
pub fn diameter(g: &Graph) -> Result<usize> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let mut diam = 0;
    for s in g.vertices() {
        for d in bfs_distances(g, s) {
            diam = diam.max(d.ok_or(Error::Disconnected)?);
        }
    }
    Ok(diam)
}

/// A walk `from = x_0 ~ x_1 ~ … ~ x_len = to`, if one exists.
pub fn walk_of_length(g: &Graph, from: Vertex, to: Vertex, len: usize) -> Option<Vec<Vertex>> {
    let n = g.vertex_count();
    // reach[i][x]: x is reachable from `from` by a walk of length i
    let mut reach = vec![vec![false; n]; len + 1];
    reach[0][from as usize] = true;
    for i in 0..len {
        for x in 0..n {
            if reach[i][x] {
                for &y in g.neighbors(x as Vertex) {
                    reach[i + 1][y as usize] = true;
                }
            }
        }
    }
    if !reach[len][to as usize] {
        return None;
    }
    let mut walk = vec![to];
    let mut cur = to;
    for i in (0..len).rev() {
        cur = *g
            .neighbors(cur)
            .iter()
            .find(|&&y| reach[i][y as usize])
            .expect("a predecessor exists");
        walk.push(cur);
    }
    walk.reverse();
    Some(walk)
}
