use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// Standard graph families and curated individual graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    /// `K_n`, no loops.
    Complete(usize),
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// `L_n`: vertices `0..=n`, edges `|a - b| = 1`.
    Path(usize),
    /// `I_[a,b]`: vertices `a..=b` (relabelled from 0), edges `|x - y| <= 1`,
    /// so every vertex is looped.
    Interval(i64, i64),
    /// `K_{1,k}` with centre 0.
    Star(usize),
    /// Iterated Mycielskian: `M_2 = K_2`, `M_3 = C_5`, `M_4 = Grötzsch`, …
    Mycielski(usize),
    Petersen,
    /// Walker's 7-vertex graph (the Moser spindle).
    WalkerG1,
    /// `WalkerG1` with its bottom edge `⟨0, 6⟩` replaced by a path of length 3.
    WalkerG2,
    /// 11 vertices, girth 4, chromatic number 4.
    Grotzsch,
    /// 21 vertices, 4-regular, girth 5, chromatic number 4.
    Brinkmann,
}

impl GraphKind {
    /// Parses a builder tag such as `cycle` with integer parameters.
    pub fn parse(tag: &str, params: &[i64]) -> Result<Self> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "`{tag}` takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let count = |x: i64| -> Result<usize> {
            usize::try_from(x)
                .map_err(|_| Error::InvalidParameter(format!("`{tag}` needs a count >= 0, got {x}")))
        };
        let kind = match tag.to_ascii_lowercase().as_str() {
            "complete" | "k" => {
                want(1)?;
                GraphKind::Complete(count(params[0])?)
            }
            "cycle" | "c" => {
                want(1)?;
                GraphKind::Cycle(count(params[0])?)
            }
            "path" | "l" => {
                want(1)?;
                GraphKind::Path(count(params[0])?)
            }
            "interval" | "i" => match params.len() {
                1 => GraphKind::Interval(0, params[0]),
                _ => {
                    want(2)?;
                    GraphKind::Interval(params[0], params[1])
                }
            },
            "star" => {
                want(1)?;
                GraphKind::Star(count(params[0])?)
            }
            "mycielski" => {
                want(1)?;
                GraphKind::Mycielski(count(params[0])?)
            }
            "petersen" => GraphKind::Petersen,
            "walker-g1" | "walker1" => GraphKind::WalkerG1,
            "walker-g2" | "walker2" => GraphKind::WalkerG2,
            "grotzsch" => GraphKind::Grotzsch,
            "brinkmann" => GraphKind::Brinkmann,
            _ => return Err(Error::UnknownKind(tag.to_string())),
        };
        Ok(kind)
    }
}

const WALKER_G1: [(Vertex, Vertex); 11] = [
    (0, 1),
    (0, 2),
    (1, 2),
    (1, 3),
    (2, 3),
    (0, 6),
    (3, 4),
    (3, 5),
    (4, 5),
    (4, 6),
    (5, 6),
];

const BRINKMANN: [(Vertex, &[Vertex]); 18] = [
    (0, &[2, 5, 7, 13]),
    (1, &[3, 6, 7, 8]),
    (2, &[4, 8, 9]),
    (3, &[5, 9, 10]),
    (4, &[6, 10, 11]),
    (5, &[11, 12]),
    (6, &[12, 13]),
    (7, &[15, 20]),
    (8, &[14, 16]),
    (9, &[15, 17]),
    (10, &[16, 18]),
    (11, &[17, 19]),
    (12, &[18, 20]),
    (13, &[14, 19]),
    (14, &[17, 18]),
    (15, &[18, 19]),
    (16, &[19, 20]),
    (17, &[20]),
];

fn mycielskian(g: &Graph) -> Graph {
    let n = g.vertex_count() as Vertex;
    let mut edges = g.edges();
    for (u, v) in g.edges() {
        edges.push((u, n + v));
        edges.push((v, n + u));
    }
    for i in 0..n {
        edges.push((n + i, 2 * n));
    }
    Graph::from_edges(2 * n as usize + 1, edges).expect("labels in range")
}

pub fn build_named(kind: GraphKind) -> Result<Graph> {
    let invalid = |msg: &str| Err(Error::InvalidParameter(msg.to_string()));
    match kind {
        GraphKind::Complete(n) => {
            let edges = (0..n as Vertex).flat_map(|u| (u + 1..n as Vertex).map(move |v| (u, v)));
            Graph::from_edges(n, edges)
        }
        GraphKind::Cycle(n) => {
            if n < 3 {
                return invalid("cycle length must be at least 3");
            }
            Graph::from_edges(n, (0..n as Vertex).map(|i| (i, (i + 1) % n as Vertex)))
        }
        GraphKind::Path(n) => Graph::from_edges(n + 1, (0..n as Vertex).map(|i| (i, i + 1))),
        GraphKind::Interval(a, b) => {
            if a > b {
                return invalid("interval needs a <= b");
            }
            let len = usize::try_from(b - a).map_err(|_| Error::InvalidParameter("interval too long".into()))?;
            let loops = (0..=len as Vertex).map(|i| (i, i));
            let steps = (0..len as Vertex).map(|i| (i, i + 1));
            Graph::from_edges(len + 1, loops.chain(steps))
        }
        GraphKind::Star(k) => Graph::from_edges(k + 1, (1..=k as Vertex).map(|i| (0, i))),
        GraphKind::Mycielski(k) => {
            if k < 2 {
                return invalid("Mycielski graphs start at M_2 = K_2");
            }
            let mut g = build_named(GraphKind::Complete(2))?;
            for _ in 2..k {
                g = mycielskian(&g);
            }
            Ok(g)
        }
        GraphKind::Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            Graph::from_edges(10, outer.chain(spokes).chain(inner))
        }
        GraphKind::WalkerG1 => Graph::from_edges(7, WALKER_G1),
        GraphKind::WalkerG2 => {
            let kept = WALKER_G1.into_iter().filter(|&e| e != (0, 6));
            Graph::from_edges(9, kept.chain([(0, 7), (7, 8), (8, 6)]))
        }
        GraphKind::Grotzsch => build_named(GraphKind::Mycielski(4)),
        GraphKind::Brinkmann => {
            let edges = BRINKMANN
                .iter()
                .flat_map(|&(u, vs)| vs.iter().map(move |&v| (u, v)));
            Graph::from_edges(21, edges)
        }
    }
}
