//! `k`-colourability through a CDCL solver whose refutations are checked
//! while the solver runs.

use varisat::checker::{CheckedProofStep, CheckerData, ProofProcessor};
use varisat::{ExtendFormula, Lit, Solver};

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// Aborts the solver after `limit` proof steps.
struct StepBudget {
    steps: u64,
    limit: u64,
}

impl ProofProcessor for StepBudget {
    fn process_step(&mut self, _: &CheckedProofStep, _: CheckerData) -> anyhow::Result<()> {
        self.steps += 1;
        if self.steps > self.limit {
            anyhow::bail!("step budget exhausted");
        }
        Ok(())
    }
}

/// A proper `k`-colouring, or `None` when there is none. `clique` is given
/// distinct colours up front, which loses no colourings up to symmetry.
pub(crate) fn k_coloring(g: &Graph, k: usize, clique: &[Vertex], budget: u64) -> Result<Option<Vec<usize>>> {
    if clique.len() > k {
        return Ok(None);
    }
    let n = g.vertex_count();
    let mut budget_state = StepBudget { steps: 0, limit: budget };
    let mut solver = Solver::new();
    solver.add_proof_processor(&mut budget_state);
    let lit = |v: usize, c: usize| Lit::from_index(v * k + c, true);
    for v in 0..n {
        solver.add_clause(&(0..k).map(|c| lit(v, c)).collect::<Vec<_>>());
    }
    for (u, w) in g.edges() {
        for c in 0..k {
            solver.add_clause(&[!lit(u as usize, c), !lit(w as usize, c)]);
        }
    }
    for (c, &v) in clique.iter().enumerate() {
        solver.add_clause(&[lit(v as usize, c)]);
    }
    let sat = solver.solve().map_err(|_| Error::ResourceLimit {
        what: "colouring proof steps",
        limit: budget,
    })?;
    if !sat {
        return Ok(None);
    }
    let model = solver.model().expect("satisfiable");
    let mut col = vec![usize::MAX; n];
    for l in model.into_iter().filter(|l| l.is_positive()) {
        let (v, c) = (l.index() / k, l.index() % k);
        if col[v] == usize::MAX {
            col[v] = c;
        }
    }
    Ok(Some(col))
}
