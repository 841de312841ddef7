use fixedbitset::FixedBitSet;

use super::homs::raw_homs;
use super::{HomComplex, MultiHom};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Enumerates every multi-homomorphism `t → g` with the default budget.
pub fn enumerate_cells(t: &Graph, g: &Graph) -> Result<HomComplex> {
    enumerate_cells_with(t, g, &Budget::default())
}

/// Enumerates every multi-homomorphism `t → g`.
///
/// Cells are grown from the homomorphisms by adding one target vertex to one
/// coordinate at a time. Each cell has a unique parent (delete the largest
/// element of the last coordinate of size ≥ 2), and a child is only accepted
/// when it is the parent's extension in that canonical sense, so every cell
/// is produced exactly once and no visited set is needed.
pub fn enumerate_cells_with(t: &Graph, g: &Graph, budget: &Budget) -> Result<HomComplex> {
    let roots = raw_homs(t, g, budget.hom_cap)?;
    let mut cells: Vec<MultiHom> = Vec::new();
    let mut stack: Vec<MultiHom> = roots
        .into_iter()
        .rev()
        .map(|m| MultiHom::from_sorted(m.into_iter().map(|x| vec![x]).collect()))
        .collect();
    let n = g.vertex_count();
    let mut cand = FixedBitSet::with_capacity(n);
    while let Some(cell) = stack.pop() {
        if cells.len() >= budget.cell_cap {
            return Err(Error::ResourceLimit {
                what: "Hom complex cells",
                limit: budget.cell_cap as u64,
            });
        }
        let first = cell
            .sets()
            .iter()
            .rposition(|s| s.len() >= 2)
            .unwrap_or(0);
        for v in first..t.vertex_count() {
            let current = cell.set(v as Vertex);
            let floor = *current.last().unwrap();
            cand.clear();
            cand.insert_range(floor as usize + 1..);
            for &u in t.neighbors(v as Vertex) {
                for &y in cell.set(u) {
                    cand.intersect_with(g.neighbor_set(y));
                }
            }
            let looped = t.has_loop(v as Vertex);
            for x in cand.ones() {
                // for a looped source vertex the new element also meets itself
                if looped && !g.has_loop(x as Vertex) {
                    continue;
                }
                let mut sets = cell.sets().to_vec();
                sets[v].push(x as Vertex);
                stack.push(MultiHom::from_sorted(sets));
            }
        }
        cells.push(cell);
    }
    Ok(HomComplex::from_cells(t.clone(), g.clone(), cells))
}
