//! Exact algebraic reduction of a free chain complex.
//!
//! A pair `(a, b)` with `∂a = εb + r`, `ε = ±1`, is removed by replacing
//! `∂c` with `∂c - λ_c ε ∂a` for every other `c` whose boundary meets `b`
//! (with coefficient `λ_c`) and dropping `a` from the boundaries of its
//! cofaces. The result is chain homotopy equivalent to the input; when a log
//! is kept the two comparison maps can be applied to chains.

use std::collections::HashMap;

use super::chain::{ChainComplex, Column};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// One eliminated pair, in global cell ids.
#[derive(Clone, Debug)]
struct Step<R> {
    a: u32,
    b: u32,
    eps: R,
    /// `∂a` at the moment of elimination.
    boundary: Column<R>,
    /// `(c, λ_c)` for the live `c ≠ a` with `b` in `∂c`.
    cofaces: Vec<(u32, R)>,
}

struct Reducer<R> {
    dim: Vec<u32>,
    bd: Vec<Column<R>>,
    /// Superset of the true coboundary; checked against `bd` on use.
    cob: Vec<Vec<u32>>,
    alive: Vec<bool>,
    log: Option<Vec<Step<R>>>,
    queue: Vec<u32>,
}

fn coefficient<R: Coefficient>(col: &Column<R>, row: u32) -> Option<&R> {
    col.binary_search_by_key(&row, |e| e.0).ok().map(|i| &col[i].1)
}

/// `x - f·y` for sorted sparse columns; rows of `y` new to `x` go to `fresh`.
fn axpy<R: Coefficient>(x: &Column<R>, f: &R, y: &Column<R>, fresh: &mut Vec<u32>) -> Result<Column<R>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i].clone());
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, R::zero().sub_mul(f, &y[j].1)?));
            fresh.push(y[j].0);
            j += 1;
        } else {
            let v = x[i].1.sub_mul(f, &y[j].1)?;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Ok(out)
}

impl<R: Coefficient> Reducer<R> {
    fn new(c: &ChainComplex<R>, keep_log: bool) -> (Self, Vec<usize>) {
        let mut offsets = vec![0];
        for d in 0..c.len() {
            offsets.push(offsets[d] + c.rank(d));
        }
        let total = offsets[c.len()];
        let mut dim = Vec::with_capacity(total);
        let mut bd = Vec::with_capacity(total);
        let mut cob = vec![Vec::new(); total];
        for d in 0..c.len() {
            let m = c.boundary_ref(d).expect("stored degree");
            for (j, col) in m.columns().iter().enumerate() {
                let id = (offsets[d] + j) as u32;
                let shifted: Column<R> = if d == 0 {
                    Vec::new()
                } else {
                    col.iter().map(|(r, x)| (r + offsets[d - 1] as u32, x.clone())).collect()
                };
                for (r, _) in &shifted {
                    cob[*r as usize].push(id);
                }
                dim.push(d as u32);
                bd.push(shifted);
            }
        }
        let reducer = Self {
            dim,
            bd,
            cob,
            alive: vec![true; total],
            log: keep_log.then(Vec::new),
            queue: Vec::new(),
        };
        (reducer, offsets)
    }

    /// Live coboundary of `b`, pruning stale entries as a side effect.
    fn live_cob(&mut self, b: u32) -> Vec<(u32, R)> {
        let mut list = std::mem::take(&mut self.cob[b as usize]);
        list.sort_unstable();
        list.dedup();
        let mut out = Vec::with_capacity(list.len());
        list.retain(|&c| {
            if !self.alive[c as usize] {
                return false;
            }
            match coefficient(&self.bd[c as usize], b) {
                Some(x) => {
                    out.push((c, x.clone()));
                    true
                }
                None => false,
            }
        });
        self.cob[b as usize] = list;
        out
    }

    fn eliminate(&mut self, a: u32, b: u32) -> Result<()> {
        let eps = coefficient(&self.bd[a as usize], b).expect("b is a face of a").clone();
        debug_assert!(eps.is_unit());
        let boundary = std::mem::take(&mut self.bd[a as usize]);
        let cofaces: Vec<(u32, R)> = self.live_cob(b).into_iter().filter(|&(c, _)| c != a).collect();
        let mut fresh = Vec::new();
        for (c, lam) in &cofaces {
            let f = lam.checked_mul(&eps).ok_or(Error::Overflow)?;
            fresh.clear();
            let updated = axpy(&self.bd[*c as usize], &f, &boundary, &mut fresh)?;
            self.bd[*c as usize] = updated;
            for &r in &fresh {
                self.cob[r as usize].push(*c);
            }
        }
        for (y, _) in self.live_cob(a) {
            let col = &mut self.bd[y as usize];
            let i = col.binary_search_by_key(&a, |e| e.0).expect("a is a face of y");
            col.remove(i);
        }
        self.alive[a as usize] = false;
        self.alive[b as usize] = false;
        self.bd[b as usize].clear();
        self.cob[a as usize].clear();
        self.cob[b as usize].clear();
        // faces of a lost a coface and may now be free
        self.queue.extend(boundary.iter().map(|e| e.0));
        if let Some(log) = &mut self.log {
            log.push(Step {
                a,
                b,
                eps,
                boundary,
                cofaces,
            });
        }
        Ok(())
    }

    /// Removes free faces (cells with a single coface, met with a unit).
    fn collapse(&mut self) -> Result<()> {
        while let Some(b) = self.queue.pop() {
            if !self.alive[b as usize] {
                continue;
            }
            let cob = self.live_cob(b);
            if let [(a, x)] = cob.as_slice() {
                if x.is_unit() {
                    self.eliminate(*a, b)?;
                }
            }
        }
        Ok(())
    }

    fn run(&mut self) -> Result<()> {
        let n = self.bd.len() as u32;
        self.queue.extend((0..n).rev());
        self.collapse()?;
        loop {
            let mut progress = false;
            for a in 0..n {
                if !self.alive[a as usize] || self.dim[a as usize] == 0 {
                    continue;
                }
                // the unit face with the fewest cofaces limits fill-in
                let pick = self.bd[a as usize]
                    .iter()
                    .filter(|(_, x)| x.is_unit())
                    .map(|(b, _)| *b)
                    .min_by_key(|&b| self.cob[b as usize].len());
                if let Some(b) = pick {
                    self.eliminate(a, b)?;
                    self.collapse()?;
                    progress = true;
                }
            }
            if !progress {
                return Ok(());
            }
        }
    }
}

/// A reduced complex together with the bookkeeping needed to move chains
/// between it and the original.
#[derive(Clone, Debug)]
pub struct Reduction<R> {
    pub complex: ChainComplex<R>,
    offsets: Vec<usize>,
    /// Original index (within its degree) of each surviving cell, per degree.
    survivors: Vec<Vec<usize>>,
    /// Global id to index among survivors of its degree.
    local: HashMap<u32, usize>,
    steps: Vec<Step<R>>,
}

/// Reduces `c` as far as unit pivots allow.
pub fn reduce<R: Coefficient>(c: &ChainComplex<R>) -> Result<ChainComplex<R>> {
    Ok(reduce_logged(c, false)?.complex)
}

pub(crate) fn reduce_logged<R: Coefficient>(c: &ChainComplex<R>, keep_log: bool) -> Result<Reduction<R>> {
    let (mut r, offsets) = Reducer::new(c, keep_log);
    r.run()?;
    let degrees = c.len();
    let mut survivors: Vec<Vec<usize>> = vec![Vec::new(); degrees];
    let mut local = HashMap::new();
    for d in 0..degrees {
        for g in offsets[d]..offsets[d + 1] {
            if r.alive[g] {
                local.insert(g as u32, survivors[d].len());
                survivors[d].push(g - offsets[d]);
            }
        }
    }
    let sizes: Vec<usize> = survivors.iter().map(Vec::len).collect();
    let columns: Vec<Vec<Column<R>>> = (0..degrees)
        .map(|d| {
            survivors[d]
                .iter()
                .map(|&j| {
                    r.bd[offsets[d] + j]
                        .iter()
                        .map(|(row, x)| (local[row] as u32, x.clone()))
                        .collect()
                })
                .collect()
        })
        .collect();
    let complex = ChainComplex::from_columns(sizes, columns)?;
    Ok(Reduction {
        complex,
        offsets,
        survivors,
        local,
        steps: r.log.unwrap_or_default(),
    })
}

impl<R: Coefficient> Reduction<R> {
    /// Maps a chain of the original complex (sparse, indices within degree
    /// `d`) to coordinates on the surviving cells of degree `d`.
    pub fn project(&self, d: usize, chain: &[(usize, R)]) -> Result<Vec<R>> {
        let base = self.offsets[d];
        let mut x: HashMap<u32, R> = chain.iter().map(|(i, v)| ((base + i) as u32, v.clone())).collect();
        for s in &self.steps {
            let da = self.degree_of(s.a);
            if da == d {
                x.remove(&s.a);
            } else if da == d + 1 {
                if let Some(xb) = x.get(&s.b).cloned() {
                    let f = xb.checked_mul(&s.eps).ok_or(Error::Overflow)?;
                    for (row, y) in &s.boundary {
                        let e = x.entry(*row).or_insert_with(R::zero);
                        *e = e.sub_mul(&f, y)?;
                    }
                    x.retain(|_, v| !v.is_zero());
                }
            }
        }
        let mut out = vec![R::zero(); self.complex.rank(d)];
        for (g, v) in x {
            let i = self.local.get(&g).expect("eliminated cells have been projected away");
            out[*i] = v;
        }
        Ok(out)
    }

    /// Maps coordinates on the surviving cells of degree `d` to a chain of
    /// the original complex (sparse, indices within degree `d`).
    pub fn lift(&self, d: usize, coords: &[R]) -> Result<Vec<(usize, R)>> {
        let base = self.offsets[d];
        let mut x: HashMap<u32, R> = self.survivors[d]
            .iter()
            .zip(coords)
            .filter(|(_, v)| !v.is_zero())
            .map(|(&j, v)| ((base + j) as u32, v.clone()))
            .collect();
        for s in self.steps.iter().rev() {
            if self.degree_of(s.a) != d {
                continue;
            }
            let mut t = R::zero();
            for (c, lam) in &s.cofaces {
                if let Some(xc) = x.get(c) {
                    t = t.sub_mul(&-xc.clone(), lam)?;
                }
            }
            if !t.is_zero() {
                x.insert(s.a, -(t * s.eps.clone()));
            }
        }
        let mut out: Vec<(usize, R)> = x.into_iter().map(|(g, v)| (g as usize - base, v)).collect();
        out.sort_by_key(|e| e.0);
        Ok(out)
    }

    /// Rank of degree `d` in the original complex.
    pub fn original_rank(&self, d: usize) -> usize {
        self.offsets[d + 1] - self.offsets[d]
    }

    fn degree_of(&self, g: u32) -> usize {
        self.offsets.partition_point(|&o| o <= g as usize) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, GraphKind};
    use crate::hom::enumerate_cells;
    use crate::homology::chain::cellular_chain_complex;
    use crate::scalar::Word;

    fn complex(t: GraphKind, g: GraphKind) -> ChainComplex<Word> {
        let k = enumerate_cells(&build_named(t).unwrap(), &build_named(g).unwrap()).unwrap();
        cellular_chain_complex(&k)
    }

    fn apply(c: &ChainComplex<Word>, d: usize, x: &[(usize, Word)]) -> Vec<(usize, Word)> {
        let m = c.boundary(d);
        let mut acc: Vec<(u32, Word)> = Vec::new();
        for (j, v) in x {
            for (r, y) in m.column(*j) {
                acc.push((*r, v * y));
            }
        }
        let col = crate::homology::chain::SparseMatrix::from_columns(m.rows(), vec![acc]).unwrap();
        col.column(0).iter().map(|(r, v)| (*r as usize, *v)).collect()
    }

    #[test]
    fn sphere_reduces_to_two_cells() {
        let c = complex(GraphKind::Complete(2), GraphKind::Complete(4));
        let r = reduce(&c).unwrap();
        assert_eq!(r.sizes(), &[1, 0, 1]);
        assert!(r.check_square_zero().unwrap());
    }

    #[test]
    fn reduction_preserves_euler_characteristic() {
        for (t, g) in [
            (GraphKind::Complete(2), GraphKind::Cycle(5)),
            (GraphKind::Path(2), GraphKind::Petersen),
            (GraphKind::Star(3), GraphKind::Complete(4)),
        ] {
            let c = complex(t, g);
            let r = reduce(&c).unwrap();
            assert_eq!(r.euler_characteristic(), c.euler_characteristic());
            assert!(r.check_square_zero().unwrap());
        }
    }

    #[test]
    fn lifted_cycles_are_cycles_and_project_back() {
        let c = complex(GraphKind::Complete(2), GraphKind::Cycle(5));
        let red = reduce_logged(&c, true).unwrap();
        assert_eq!(red.complex.sizes(), &[1, 1]);
        let z = red.lift(1, &[1]).unwrap();
        assert!(!z.is_empty());
        assert!(apply(&c, 1, &z).is_empty());
        assert_eq!(red.project(1, &z).unwrap(), vec![1]);
        // a boundary projects to zero
        let top = c.rank(1);
        let x = red.lift(0, &[1]).unwrap();
        assert_eq!(red.project(0, &x).unwrap(), vec![1]);
        let e = apply(&c, 1, &[(top - 1, 1)]);
        assert_eq!(red.project(0, &e).unwrap(), vec![0]);
    }
}
