//! Exact integer homology.
//!
//! Chain complexes are first shrunk by eliminating unit-coefficient pairs and
//! the remainder goes through Smith normal form. Arithmetic starts in checked
//! machine words and is redone with arbitrary precision on overflow, so every
//! reported number is exact. Homology is unreduced; the empty complex has
//! the empty profile.

mod chain;
mod induced;
mod nerve;
mod order;
mod reduce;
mod snf;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hom::{maximal_cells, HomComplex};
use crate::scalar::{Big, Coefficient, Word};

pub use chain::{cellular_chain_complex, ChainComplex, Column, SparseMatrix};
pub use induced::{induced_map_homology, induced_map_homology_with, mapping_cone, InducedMap};
pub use nerve::meet_complex;
pub use order::OrderComplex;
pub use reduce::{reduce, Reduction};
pub use snf::{smith_normal_form, DenseMatrix, Smith, Transforms};

/// Betti numbers and torsion coefficients per degree, trailing zero degrees
/// trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub betti: Vec<usize>,
    /// Invariant factors greater than one, ascending, per degree.
    pub torsion: Vec<Vec<u64>>,
}

impl HomologyProfile {
    pub fn new(mut betti: Vec<usize>, mut torsion: Vec<Vec<u64>>) -> Self {
        let len = betti.len().max(torsion.len());
        betti.resize(len, 0);
        torsion.resize(len, Vec::new());
        while betti.last() == Some(&0) && torsion.last().is_some_and(Vec::is_empty) {
            betti.pop();
            torsion.pop();
        }
        for t in &mut torsion {
            t.sort_unstable();
        }
        Self { betti, torsion }
    }

    /// Homology of a point.
    pub fn point() -> Self {
        Self::new(vec![1], vec![])
    }

    /// All groups vanish.
    pub fn is_zero(&self) -> bool {
        self.betti.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// Betti numbers of a product of spaces with torsion-free homology.
    pub fn kunneth(&self, other: &HomologyProfile) -> HomologyProfile {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut betti = vec![0; self.betti.len() + other.betti.len() - 1];
        for (i, a) in self.betti.iter().enumerate() {
            for (j, b) in other.betti.iter().enumerate() {
                betti[i + j] += a * b;
            }
        }
        Self::new(betti, vec![])
    }

    /// `b0 b1 …`, with torsion as `Z/k` suffixes.
    pub fn summary(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.betti
            .iter()
            .zip(&self.torsion)
            .map(|(b, t)| {
                let mut s = b.to_string();
                for k in t {
                    s.push_str(&format!("+Z/{k}"));
                }
                s
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Homology over `R`; fails only on machine-word overflow.
pub fn homology_exact<R: Coefficient>(c: &ChainComplex<R>) -> Result<HomologyProfile> {
    let r = reduce(c)?;
    let mut ranks = Vec::with_capacity(r.len() + 1);
    let mut torsion: Vec<Vec<u64>> = Vec::with_capacity(r.len());
    for d in 0..r.len() {
        let s = smith_normal_form(induced::to_dense(&r.boundary(d)), false)?;
        ranks.push(s.rank());
        if d >= 1 {
            let t = s
                .torsion()
                .map(|x| x.to_u64().ok_or(Error::Overflow))
                .collect::<Result<Vec<u64>>>()?;
            torsion.push(t);
        }
    }
    ranks.push(0);
    torsion.push(Vec::new());
    let betti = (0..r.len()).map(|d| r.rank(d) - ranks[d] - ranks[d + 1]).collect();
    torsion.truncate(r.len());
    Ok(HomologyProfile::new(betti, torsion))
}

/// Exact homology: machine words first, arbitrary precision on overflow.
pub fn homology(c: &ChainComplex<Word>) -> HomologyProfile {
    match homology_exact(c) {
        Ok(p) => p,
        Err(Error::Overflow) => {
            homology_exact::<Big>(&c.convert()).expect("arbitrary precision does not overflow")
        }
        Err(e) => unreachable!("homology cannot fail with {e}"),
    }
}

/// Cellular homology of a Hom complex.
pub fn hom_homology(k: &HomComplex) -> HomologyProfile {
    homology(&cellular_chain_complex(k))
}

/// Simplicial homology of the order complex of `k`.
pub fn order_complex_homology(k: &HomComplex) -> Result<HomologyProfile> {
    order_complex_homology_with(k, &Budget::default())
}

pub fn order_complex_homology_with(k: &HomComplex, budget: &Budget) -> Result<HomologyProfile> {
    let o = OrderComplex::build(k, budget.chain_cap)?;
    Ok(homology(&o.chain_complex()))
}

/// Homology of `Hom(t, g)` from its maximal cells alone, without
/// enumerating the complex. `cell_cap` bounds the maximal cells and
/// `chain_cap` the model built from them.
pub fn hom_homology_from_maximal(t: &Graph, g: &Graph, budget: &Budget) -> Result<HomologyProfile> {
    let cells = maximal_cells(t, g, budget)?;
    Ok(homology(&meet_complex(&cells, budget.chain_cap)?.chain_complex()))
}
