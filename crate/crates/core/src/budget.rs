/// Hard resource caps. Exceeding one is an error, never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Budget {
    /// Maximum number of graph homomorphisms enumerated.
    pub hom_cap: usize,
    /// Maximum number of cells of a Hom complex.
    pub cell_cap: usize,
    /// Maximum number of simplices of an order complex.
    pub chain_cap: usize,
    /// Maximum search nodes for the exact chromatic solver.
    pub solver_nodes: u64,
}

pub const DEFAULT_CAP: usize = 10_000_000;

impl Default for Budget {
    fn default() -> Self {
        Self {
            hom_cap: DEFAULT_CAP,
            cell_cap: DEFAULT_CAP,
            chain_cap: DEFAULT_CAP,
            solver_nodes: DEFAULT_CAP as u64,
        }
    }
}

impl Budget {
    /// Same cap for every enumeration.
    pub fn uniform(cap: usize) -> Self {
        Self {
            hom_cap: cap,
            cell_cap: cap,
            chain_cap: cap,
            solver_nodes: cap as u64,
        }
    }
}
