use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::cylinder::{covering_split, glue_cylinder, CoveringReport, Cylinder};
use super::paths::replace_edges_with_paths;
use super::search::{find_high_girth_high_chromatic, Provenance};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{
    diameter, is_bipartite, is_connected, odd_girth, shortest_odd_cycle, Chromatic, ChromaticSolver, Graph, GraphHom,
    GraphJson, Length, Vertex,
};
use crate::hom::{acts_freely, maximal_cells, pullback_cell, pushforward_cell, Involution, MultiHom};
use crate::homology::{homology, meet_complex, HomologyProfile};

/// Wording carried by every certificate.
pub const CLAIM: &str = "equal homology of Hom(T, G) and Hom(T, H) for every T in the family: \
consistent with homotopy equivalence (not a proof)";

/// A test graph `T` with an optional involution given as a vertex map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub graph: Graph,
    pub involution: Option<Vec<Vertex>>,
}

impl FamilyMember {
    pub fn new(graph: Graph, involution: Option<Vec<Vertex>>) -> Result<Self> {
        if let Some(map) = &involution {
            Involution::from_vec(&graph, map.clone())?;
        }
        Ok(Self { graph, involution })
    }

    pub fn plain(graph: Graph) -> Self {
        Self {
            graph,
            involution: None,
        }
    }

    pub fn from_json(raw: &GraphJson) -> Result<Self> {
        Self::new(raw.to_graph()?, raw.involution.clone())
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            involution: self.involution.clone(),
            ..GraphJson::from(&self.graph)
        }
    }
}

/// The smallest `m` meeting every length constraint of the construction:
/// the maximum over `T` of `diam + 3`, `2 diam + 5` and, for non-bipartite
/// `T`, `oddgirth + 1`.
pub fn uniformly_small_m(family: &[Graph]) -> Result<usize> {
    if family.is_empty() {
        return Err(Error::InvalidParameter("the family is empty".into()));
    }
    let mut m = 3;
    for t in family {
        if !is_connected(t) {
            return Err(Error::Disconnected);
        }
        let d = diameter(t)?;
        m = m.max(d + 3).max(2 * d + 5);
        if let Length::Finite(og) = odd_girth(t) {
            m = m.max(og + 1);
        }
    }
    Ok(m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Unverified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfilePair {
    #[serde(rename = "G")]
    pub g: Option<HomologyProfile>,
    #[serde(rename = "H")]
    pub h: Option<HomologyProfile>,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringEntry {
    pub status: Status,
    pub report: Option<CoveringReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct Z2Member {
    pub flipping: bool,
    pub free_G: Option<bool>,
    pub free_H: Option<bool>,
    pub equivariant: Option<bool>,
}

/// Aggregates over the members with a flipping involution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct Z2Summary {
    pub free_G: bool,
    pub free_H: bool,
    pub equivariant: bool,
    pub members: BTreeMap<String, Z2Member>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub chi_x_exceeds_n: bool,
    pub chi_h_at_least_chi_x: bool,
    pub x_is_subgraph: bool,
    pub g_is_subgraph: bool,
    pub profiles_equal: bool,
    pub covering: bool,
    pub z2: bool,
}

impl Checks {
    fn all(&self) -> bool {
        self.chi_x_exceeds_n
            && self.chi_h_at_least_chi_x
            && self.x_is_subgraph
            && self.g_is_subgraph
            && self.profiles_equal
            && self.covering
            && self.z2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Consistent,
    Partial,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct Embedding {
    pub X: Option<Vec<Vertex>>,
    pub G: Vec<Vertex>,
}

/// Everything recomputed from the graphs; shared by construction and
/// verification.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Claims {
    chi_x: Option<Chromatic>,
    chi_h: Chromatic,
    profiles: BTreeMap<String, ProfilePair>,
    covering: BTreeMap<String, CoveringEntry>,
    z2: Option<Z2Summary>,
    checks: Checks,
    verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineCertificate {
    pub claim: String,
    pub family: Vec<GraphJson>,
    pub m: usize,
    pub n: usize,
    /// The odd girth of `G` is `2k + 1`; absent when `G` has a loop.
    pub k: Option<usize>,
    pub seed: u64,
    #[serde(rename = "G")]
    pub graph_g: GraphJson,
    #[serde(rename = "X")]
    pub graph_x: Option<GraphJson>,
    #[serde(rename = "Y")]
    pub graph_y: Option<GraphJson>,
    #[serde(rename = "H")]
    pub graph_h: GraphJson,
    /// `Y → X`.
    pub f: Option<Vec<Vertex>>,
    /// `Y → G`.
    pub g: Option<Vec<Vertex>>,
    pub embedding: Embedding,
    pub x_source: Option<Provenance>,
    pub budgets: Budget,
    #[serde(rename = "chiX")]
    pub chi_x: Option<Chromatic>,
    #[serde(rename = "chiH")]
    pub chi_h: Chromatic,
    pub profiles: BTreeMap<String, ProfilePair>,
    pub covering: BTreeMap<String, CoveringEntry>,
    pub z2: Option<Z2Summary>,
    pub checks: Checks,
    pub verdict: Verdict,
}

impl PipelineCertificate {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serialisable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("certificate: {e}")))
    }

    pub fn cylinder(&self) -> Result<Option<(Graph, Cylinder)>> {
        let (Some(x), Some(y), Some(f), Some(g)) = (&self.graph_x, &self.graph_y, &self.f, &self.g) else {
            return Ok(None);
        };
        let (x, y, gg) = (x.to_graph()?, y.to_graph()?, self.graph_g.to_graph()?);
        let f = GraphHom::new(&y, &x, f.clone())?;
        let g = GraphHom::new(&y, &gg, g.clone())?;
        Ok(Some((x.clone(), glue_cylinder(&x, &y, &gg, &f, &g, self.m)?)))
    }
}

fn key(i: usize) -> String {
    format!("T_{i}")
}

/// Enumeration that reports budget exhaustion as `None`.
fn within_budget<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::ResourceLimit { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

enum Layout<'a> {
    /// `G` has a loop and `H = G`.
    Looped,
    Built { x: &'a Graph, cyl: &'a Cylinder },
}

fn assess(family: &[FamilyMember], g: &Graph, n: usize, layout: &Layout, budget: &Budget) -> Result<Claims> {
    let solver = ChromaticSolver::new(budget.solver_nodes);
    let h = match layout {
        Layout::Looped => g,
        Layout::Built { cyl, .. } => &cyl.h,
    };
    let chi_h = solver.solve(h)?.0;
    let chi_x = match layout {
        Layout::Looped => None,
        Layout::Built { x, .. } => Some(solver.solve(x)?.0),
    };
    let (x_is_subgraph, g_is_subgraph, inclusion) = match layout {
        Layout::Looped => (true, true, GraphHom::identity(g)),
        Layout::Built { x, cyl } => (
            x.is_subgraph_of(&cyl.h, &cyl.x_embedding),
            g.is_subgraph_of(&cyl.h, &cyl.g_embedding),
            cyl.g_inclusion(g)?,
        ),
    };

    let mut profiles = BTreeMap::new();
    let mut covering = BTreeMap::new();
    let mut members = BTreeMap::new();
    for (i, t) in family.iter().enumerate() {
        // both complexes are handled through their maximal cells only
        let mg = within_budget(maximal_cells(&t.graph, g, budget))?;
        let mh: Option<Vec<MultiHom>> = match layout {
            Layout::Looped => mg.clone(),
            Layout::Built { cyl, .. } => within_budget(maximal_cells(&t.graph, &cyl.h, budget))?,
        };
        let profile = |m: &Option<Vec<MultiHom>>| -> Result<Option<HomologyProfile>> {
            let Some(m) = m else { return Ok(None) };
            let model = within_budget(meet_complex(m, budget.chain_cap))?;
            Ok(model.map(|k| homology(&k.chain_complex())))
        };
        let (pg, ph) = (profile(&mg)?, profile(&mh)?);
        let status = if pg.is_some() && ph.is_some() {
            Status::Verified
        } else {
            Status::Unverified
        };
        profiles.insert(key(i), ProfilePair { g: pg, h: ph, status });

        if let Layout::Built { cyl, .. } = layout {
            let report = within_budget(covering_split(&t.graph, cyl, budget))?;
            let status = if report.is_some() {
                Status::Verified
            } else {
                Status::Unverified
            };
            covering.insert(key(i), CoveringEntry { status, report });
        }

        if let (Some(map), Layout::Built { .. }) = (&t.involution, layout) {
            let alpha = Involution::from_vec(&t.graph, map.clone())?;
            let mut entry = Z2Member {
                flipping: alpha.is_flipping(),
                free_G: None,
                free_H: None,
                equivariant: None,
            };
            if let (Some(mg), Some(mh)) = (&mg, &mh) {
                entry.free_G = Some(acts_freely(&alpha, mg));
                entry.free_H = Some(acts_freely(&alpha, mh));
                // ι_*(η ∘ α) = (ι_* η) ∘ α on every maximal cell, the image being a cell of H
                entry.equivariant = Some(mg.iter().all(|c| {
                    let image = pushforward_cell(&inclusion, c);
                    image.is_valid(&t.graph, h)
                        && pushforward_cell(&inclusion, &pullback_cell(alpha.map(), c)) == pullback_cell(alpha.map(), &image)
                }));
            }
            members.insert(key(i), entry);
        }
    }

    let flipping: Vec<&Z2Member> = members.values().filter(|z| z.flipping).collect();
    let z2 = (!members.is_empty()).then(|| Z2Summary {
        free_G: flipping.iter().all(|z| z.free_G != Some(false)),
        free_H: flipping.iter().all(|z| z.free_H != Some(false)),
        equivariant: flipping.iter().all(|z| z.equivariant != Some(false)),
        members: members.clone(),
    });
    let chi_x_or_h = chi_x.unwrap_or(chi_h);
    let checks = Checks {
        chi_x_exceeds_n: chi_x_or_h.exceeds(n),
        chi_h_at_least_chi_x: chi_h >= chi_x_or_h,
        x_is_subgraph,
        g_is_subgraph,
        profiles_equal: profiles.values().all(|p| p.status == Status::Unverified || p.g == p.h),
        covering: covering.values().all(|c| c.report.as_ref().map_or(true, CoveringReport::passes)),
        z2: z2.as_ref().map_or(true, |z| z.free_G && z.free_H && z.equivariant),
    };
    let unverified = profiles.values().any(|p| p.status == Status::Unverified)
        || covering.values().any(|c| c.status == Status::Unverified)
        || members.values().any(|z| z.flipping && z.equivariant.is_none());
    let verdict = if !checks.all() {
        Verdict::Failed
    } else if unverified {
        Verdict::Partial
    } else {
        Verdict::Consistent
    };
    Ok(Claims {
        chi_x,
        chi_h,
        profiles,
        covering,
        z2,
        checks,
        verdict,
    })
}

/// Builds `H ⊇ G` with `χ(H) > n` and checks, for every `T` in the family,
/// that `Hom(T, G)` and `Hom(T, H)` have the same homology.
pub fn chromatic_pipeline(family: &[FamilyMember], g: &Graph, n: usize, seed: u64, budget: &Budget) -> Result<PipelineCertificate> {
    let graphs: Vec<Graph> = family.iter().map(|t| t.graph.clone()).collect();
    let m = uniformly_small_m(&graphs)?;
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let family_json = family.iter().map(FamilyMember::to_json).collect();
    if g.has_loops() {
        let claims = assess(family, g, n, &Layout::Looped, budget)?;
        return Ok(PipelineCertificate {
            claim: CLAIM.into(),
            family: family_json,
            m,
            n,
            k: None,
            seed,
            graph_g: GraphJson::from(g),
            graph_x: None,
            graph_y: None,
            graph_h: GraphJson::from(g),
            f: None,
            g: None,
            embedding: Embedding {
                X: None,
                G: g.vertices().collect(),
            },
            x_source: None,
            budgets: *budget,
            chi_x: claims.chi_x,
            chi_h: claims.chi_h,
            profiles: claims.profiles,
            covering: claims.covering,
            z2: claims.z2,
            checks: claims.checks,
            verdict: claims.verdict,
        });
    }
    if is_bipartite(g) {
        return Err(Error::BipartiteInput);
    }
    let x = find_high_girth_high_chromatic(n, m, seed, budget)?;
    let cycle = shortest_odd_cycle(g).expect("non-bipartite");
    let k = (cycle.len() - 1) / 2;
    let rep = replace_edges_with_paths(&x.graph, cycle.len())?;
    let embed = GraphHom::new(&rep.cycle, g, cycle)?;
    let gmap = rep.wrap.then(&embed)?;
    let cyl = glue_cylinder(&x.graph, &rep.y, g, &rep.f, &gmap, m)?;
    let claims = assess(family, g, n, &Layout::Built { x: &x.graph, cyl: &cyl }, budget)?;
    Ok(PipelineCertificate {
        claim: CLAIM.into(),
        family: family_json,
        m,
        n,
        k: Some(k),
        seed,
        graph_g: GraphJson::from(g),
        graph_x: Some(GraphJson::from(&x.graph)),
        graph_y: Some(GraphJson::from(&rep.y)),
        graph_h: GraphJson::from(&cyl.h),
        f: Some(rep.f.into_vec()),
        g: Some(gmap.into_vec()),
        embedding: Embedding {
            X: Some(cyl.x_embedding.clone()),
            G: cyl.g_embedding.clone(),
        },
        x_source: Some(x.provenance),
        budgets: *budget,
        chi_x: claims.chi_x,
        chi_h: claims.chi_h,
        profiles: claims.profiles,
        covering: claims.covering,
        z2: claims.z2,
        checks: claims.checks,
        verdict: claims.verdict,
    })
}

/// Outcome of re-checking a certificate; `mismatches` names each field whose
/// recorded value differs from the recomputed one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub mismatches: Vec<String>,
}

impl VerifyReport {
    pub fn passes(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Recomputes every claim of `cert` from the graphs embedded in it.
///
/// Malformed content (unparsable graphs, invalid involutions) is an error;
/// wrong content is reported field by field.
pub fn verify_certificate(cert: &PipelineCertificate) -> Result<VerifyReport> {
    let mut bad: Vec<String> = Vec::new();
    let family = cert
        .family
        .iter()
        .map(FamilyMember::from_json)
        .collect::<Result<Vec<_>>>()?;
    let g = cert.graph_g.to_graph()?;
    let h = cert.graph_h.to_graph()?;
    if cert.claim != CLAIM {
        bad.push("claim".into());
    }
    let graphs: Vec<Graph> = family.iter().map(|t| t.graph.clone()).collect();
    match uniformly_small_m(&graphs) {
        Ok(m) if m == cert.m => {}
        _ => bad.push("m".into()),
    }

    let claims = if g.has_loops() {
        let expected_shape = cert.k.is_none()
            && cert.graph_x.is_none()
            && cert.graph_y.is_none()
            && cert.f.is_none()
            && cert.g.is_none()
            && cert.embedding.X.is_none();
        if !expected_shape {
            bad.push("k".into());
        }
        if h != g {
            bad.push("H".into());
        }
        if cert.embedding.G != g.vertices().collect::<Vec<_>>() {
            bad.push("embedding".into());
        }
        Some(assess(&family, &g, cert.n, &Layout::Looped, &cert.budgets)?)
    } else {
        match odd_girth(&g) {
            Length::Finite(og) if cert.k == Some((og - 1) / 2) => {}
            _ => bad.push("k".into()),
        }
        match structure(cert, &g, &h, &mut bad)? {
            Some((x, cyl)) => Some(assess(&family, &g, cert.n, &Layout::Built { x: &x, cyl: &cyl }, &cert.budgets)?),
            None => None,
        }
    };

    if let Some(c) = claims {
        let checks: [(&str, bool); 7] = [
            ("chiX", c.chi_x == cert.chi_x),
            ("chiH", c.chi_h == cert.chi_h),
            ("profiles", c.profiles == cert.profiles),
            ("covering", c.covering == cert.covering),
            ("z2", c.z2 == cert.z2),
            ("checks", c.checks == cert.checks),
            ("verdict", c.verdict == cert.verdict),
        ];
        bad.extend(checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| (*name).to_string()));
    }
    Ok(VerifyReport { mismatches: bad })
}

/// Rebuilds `Y` and `H` from `X`, `G`, `f`, `g`, `m` and compares them with
/// the recorded graphs. Returns the rebuilt pieces when they agree.
fn structure(cert: &PipelineCertificate, g: &Graph, h: &Graph, bad: &mut Vec<String>) -> Result<Option<(Graph, Cylinder)>> {
    let (Some(xj), Some(yj), Some(f), Some(gm)) = (&cert.graph_x, &cert.graph_y, &cert.f, &cert.g) else {
        bad.push("X".into());
        return Ok(None);
    };
    let x = xj.to_graph()?;
    let y = yj.to_graph()?;
    let Some(k) = cert.k else { return Ok(None) };
    let rep = match replace_edges_with_paths(&x, 2 * k + 1) {
        Ok(r) => r,
        Err(_) => {
            bad.push("X".into());
            return Ok(None);
        }
    };
    if rep.y != y {
        bad.push("Y".into());
        return Ok(None);
    }
    if rep.f.as_slice() != f.as_slice() {
        bad.push("f".into());
        return Ok(None);
    }
    let Ok(gy) = GraphHom::new(&y, g, gm.clone()) else {
        bad.push("g".into());
        return Ok(None);
    };
    let cyl = match glue_cylinder(&x, &y, g, &rep.f, &gy, cert.m) {
        Ok(c) => c,
        Err(_) => {
            bad.push("H".into());
            return Ok(None);
        }
    };
    if &cyl.h != h {
        bad.push("H".into());
        return Ok(None);
    }
    if cert.embedding.X.as_deref() != Some(&cyl.x_embedding[..]) || cert.embedding.G != cyl.g_embedding {
        bad.push("embedding".into());
    }
    Ok(Some((x, cyl)))
}
