use super::chain::{ChainComplex, Column, SparseMatrix};
use super::order::OrderComplex;
use super::reduce::{reduce_logged, Reduction};
use super::snf::{smith_normal_form, DenseMatrix};
use super::{homology, HomologyProfile};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::hom::{CellMap, HomComplex};
use crate::scalar::{Big, Coefficient, Word};

pub(crate) fn to_dense<R: Coefficient>(m: &SparseMatrix<R>) -> DenseMatrix<R> {
    let mut out = DenseMatrix::zero(m.rows(), m.cols());
    for (j, col) in m.columns().iter().enumerate() {
        for (i, x) in col {
            out[(*i as usize, j)] = x.clone();
        }
    }
    out
}

/// Homology of a small complex with explicit free generators.
struct Basis {
    degrees: Vec<DegreeBasis>,
}

struct DegreeBasis {
    v_inv: DenseMatrix<Big>,
    u_m: DenseMatrix<Big>,
    rank_a: usize,
    rank_m: usize,
    /// Cycles whose classes form a basis of the free part.
    free: Vec<Vec<Big>>,
}

impl Basis {
    fn new(c: &ChainComplex<Big>) -> Result<Self> {
        let mut degrees = Vec::with_capacity(c.len());
        for d in 0..c.len() {
            let a = smith_normal_form(to_dense(&c.boundary(d)), true)?;
            let ta = a.transforms.expect("requested");
            let rank_a = a.invariants.len();
            let n = c.rank(d);
            let m = ta.v_inv.mul(&to_dense(&c.boundary(d + 1)))?.row_slice(rank_a..n);
            let sm = smith_normal_form(m, true)?;
            let tm = sm.transforms.expect("requested");
            let rank_m = sm.invariants.len();
            let kernel = DenseMatrix::from_rows(ta.v.to_rows().into_iter().map(|r| r[rank_a..].to_vec()).collect());
            let free = (rank_m..n - rank_a)
                .map(|j| {
                    let coeffs = tm.u_inv.column(j);
                    if n == 0 {
                        Ok(Vec::new())
                    } else {
                        kernel.mul_vec(&coeffs)
                    }
                })
                .collect::<Result<_>>()?;
            degrees.push(DegreeBasis {
                v_inv: ta.v_inv,
                u_m: tm.u,
                rank_a,
                rank_m,
                free,
            });
        }
        Ok(Self { degrees })
    }

    fn betti(&self, d: usize) -> usize {
        self.degrees.get(d).map_or(0, |b| b.free.len())
    }

    /// Free coordinates of the class of cycle `z`.
    fn coordinates(&self, d: usize, z: &[Big]) -> Result<Vec<Big>> {
        let Some(b) = self.degrees.get(d) else {
            return Ok(Vec::new());
        };
        let w = b.v_inv.mul_vec(z)?;
        debug_assert!(w[..b.rank_a].iter().all(|x| x == &Big::from(0)), "not a cycle");
        let h = b.u_m.mul_vec(&w[b.rank_a..])?;
        Ok(h[b.rank_m..].to_vec())
    }
}

/// `Cone_d = C2_d ⊕ C1_{d-1}` with `∂(b, a) = (∂b + φa, -∂a)`; it is acyclic
/// exactly when `φ` is a quasi-isomorphism.
pub fn mapping_cone<R: Coefficient>(c1: &ChainComplex<R>, c2: &ChainComplex<R>, phi: &[Vec<Column<R>>]) -> Result<ChainComplex<R>> {
    let len = c2.len().max(c1.len() + 1);
    let sizes: Vec<usize> = (0..len).map(|d| c2.rank(d) + if d == 0 { 0 } else { c1.rank(d - 1) }).collect();
    let mut columns = Vec::with_capacity(len);
    for d in 0..len {
        let mut cols: Vec<Column<R>> = Vec::with_capacity(sizes[d]);
        let d2 = c2.boundary(d);
        for j in 0..c2.rank(d) {
            cols.push(d2.column(j).clone());
        }
        if d >= 1 {
            let d1 = c1.boundary(d - 1);
            let shift = c2.rank(d - 1) as u32;
            for i in 0..c1.rank(d - 1) {
                let mut col: Column<R> = phi[d - 1][i].clone();
                col.extend(d1.column(i).iter().map(|(r, x)| (r + shift, -x.clone())));
                cols.push(col);
            }
        }
        columns.push(cols);
    }
    ChainComplex::from_columns(sizes, columns)
}

/// The map induced on homology by an order-preserving cell map.
#[derive(Clone, Debug)]
pub struct InducedMap {
    pub source: HomologyProfile,
    pub target: HomologyProfile,
    /// Per degree, the `betti_target × betti_source` matrix on free parts.
    pub matrices: Vec<Vec<Vec<Big>>>,
    /// True when the map is an isomorphism in every degree (torsion included).
    pub isomorphism: bool,
}

impl InducedMap {
    pub fn is_identity(&self) -> bool {
        self.matrices.iter().all(|m| {
            m.len() == m.first().map_or(0, Vec::len)
                && m.iter().enumerate().all(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .all(|(j, x)| *x == Big::from(i32::from(i == j)))
                })
        })
    }
}

/// Computes `F_*` through the order complexes of `k1` and `k2`.
pub fn induced_map_homology(f: &CellMap, k1: &HomComplex, k2: &HomComplex) -> Result<InducedMap> {
    induced_map_homology_with(f, k1, k2, &Budget::default())
}

pub fn induced_map_homology_with(f: &CellMap, k1: &HomComplex, k2: &HomComplex, budget: &Budget) -> Result<InducedMap> {
    if f.images.len() != k1.len() || f.images.iter().any(|&j| j >= k2.len()) {
        return Err(Error::MismatchedDomains("cell map does not match the complexes".into()));
    }
    if !f.is_order_preserving(k1, k2) {
        return Err(Error::NotOrderPreserving);
    }
    let o1 = OrderComplex::build(k1, budget.chain_cap)?;
    let o2 = OrderComplex::build(k2, budget.chain_cap)?;
    let c1w: ChainComplex<Word> = o1.chain_complex();
    let c2w: ChainComplex<Word> = o2.chain_complex();
    let phi_w = o1.chain_map::<Word>(f, &o2)?;
    let isomorphism = homology(&mapping_cone(&c1w, &c2w, &phi_w)?).is_zero();

    let c1: ChainComplex<Big> = c1w.convert();
    let c2: ChainComplex<Big> = c2w.convert();
    let phi = o1.chain_map::<Big>(f, &o2)?;
    let r1 = reduce_logged(&c1, true)?;
    let r2 = reduce_logged(&c2, true)?;
    let b1 = Basis::new(&r1.complex)?;
    let b2 = Basis::new(&r2.complex)?;
    let degrees = c1.len().max(c2.len());
    let mut matrices = Vec::with_capacity(degrees);
    for d in 0..degrees {
        let mut m = vec![vec![Big::from(0); b1.betti(d)]; b2.betti(d)];
        for (j, gen) in b1.degrees.get(d).map_or(&[][..], |b| &b.free).iter().enumerate() {
            let image = push_class(&r1, &r2, &phi, d, gen)?;
            for (i, x) in b2.coordinates(d, &image)?.into_iter().enumerate() {
                m[i][j] = x;
            }
        }
        matrices.push(m);
    }
    Ok(InducedMap {
        source: homology(&c1w),
        target: homology(&c2w),
        matrices,
        isomorphism,
    })
}

/// Lift a reduced cycle, push it through `φ`, and project it again.
fn push_class(r1: &Reduction<Big>, r2: &Reduction<Big>, phi: &[Vec<Column<Big>>], d: usize, gen: &[Big]) -> Result<Vec<Big>> {
    let z = r1.lift(d, gen)?;
    let mut acc: Column<Big> = Vec::new();
    for (i, x) in z {
        for (r, y) in &phi[d][i] {
            acc.push((*r, &x * y));
        }
    }
    if d >= r2.complex.len() {
        return Ok(Vec::new());
    }
    let rows = r2.original_rank(d);
    let col = SparseMatrix::from_columns(rows, vec![acc])?.into_columns().pop().unwrap_or_default();
    let chain: Vec<(usize, Big)> = col.into_iter().map(|(r, x)| (r as usize, x)).collect();
    r2.project(d, &chain)
}
