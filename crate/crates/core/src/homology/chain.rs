use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hom::HomComplex;
use crate::scalar::Coefficient;

/// Sparse column: `(row, coefficient)` pairs sorted by row, no zeros.
pub type Column<R> = Vec<(u32, R)>;

/// Column-major sparse integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<R> {
    rows: usize,
    cols: Vec<Column<R>>,
}

impl<R: Coefficient> SparseMatrix<R> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols: vec![Vec::new(); cols],
        }
    }

    /// Columns may be unsorted and contain zeros or repeated rows; they are
    /// normalised here.
    pub fn from_columns(rows: usize, cols: Vec<Column<R>>) -> Result<Self> {
        let mut out = Vec::with_capacity(cols.len());
        for mut col in cols {
            col.sort_by_key(|&(r, _)| r);
            let mut merged: Column<R> = Vec::with_capacity(col.len());
            for (r, x) in col {
                if r as usize >= rows {
                    return Err(Error::InvalidParameter(format!("row {r} out of range {rows}")));
                }
                match merged.last_mut() {
                    Some((lr, lx)) if *lr == r => *lx = lx.checked_add(&x).ok_or(Error::Overflow)?,
                    _ => merged.push((r, x)),
                }
            }
            merged.retain(|(_, x)| !x.is_zero());
            out.push(merged);
        }
        Ok(Self { rows, cols: out })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &Column<R> {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Column<R>] {
        &self.cols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// `self · other`.
    pub fn mul(&self, other: &SparseMatrix<R>) -> Result<SparseMatrix<R>> {
        if self.cols() != other.rows {
            return Err(Error::InvalidParameter("dimension mismatch in product".into()));
        }
        let mut cols = Vec::with_capacity(other.cols());
        for col in &other.cols {
            let mut acc: Column<R> = Vec::new();
            for (k, y) in col {
                for (i, x) in &self.cols[*k as usize] {
                    acc.push((*i, x.checked_mul(y).ok_or(Error::Overflow)?));
                }
            }
            cols.push(acc);
        }
        SparseMatrix::from_columns(self.rows, cols)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// `rows cols nnz` header, then one `row col value` line per entry
    /// (0-based, column-major).
    pub fn to_triplets(&self) -> String {
        let mut s = format!("{} {} {}\n", self.rows, self.cols(), self.nnz());
        for (j, col) in self.cols.iter().enumerate() {
            for (i, x) in col {
                writeln!(s, "{i} {j} {x}").unwrap();
            }
        }
        s
    }

    pub fn convert<S: Coefficient>(&self) -> SparseMatrix<S> {
        SparseMatrix {
            rows: self.rows,
            cols: self
                .cols
                .iter()
                .map(|c| c.iter().map(|(i, x)| (*i, to_coeff::<R, S>(x))).collect())
                .collect(),
        }
    }

    pub(crate) fn into_columns(self) -> Vec<Column<R>> {
        self.cols
    }
}

pub(crate) fn to_coeff<R: Coefficient, S: Coefficient>(x: &R) -> S {
    // every value that reaches here fits in i64 or is carried through decimal
    match x.to_i32() {
        Some(v) => S::from(v),
        None => {
            let text = x.to_string();
            S::from_str_radix(&text, 10).unwrap_or_else(|_| panic!("cannot convert {text}"))
        }
    }
}

/// Free chain complex `… → C_d → C_{d-1} → … → C_0`. Column `j` of `∂_d` is
/// the boundary of basis element `j` of `C_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex<R> {
    sizes: Vec<usize>,
    boundaries: Vec<SparseMatrix<R>>,
}

impl<R: Coefficient> ChainComplex<R> {
    /// `boundaries[d]` must be `sizes[d-1] × sizes[d]` (with `boundaries[0]`
    /// of shape `0 × sizes[0]`).
    pub fn new(sizes: Vec<usize>, boundaries: Vec<SparseMatrix<R>>) -> Result<Self> {
        if sizes.len() != boundaries.len() {
            return Err(Error::InvalidParameter("one boundary matrix per degree".into()));
        }
        for (d, m) in boundaries.iter().enumerate() {
            let rows = if d == 0 { 0 } else { sizes[d - 1] };
            if m.rows() != rows || m.cols() != sizes[d] {
                return Err(Error::InvalidParameter(format!("∂_{d} has the wrong shape")));
            }
        }
        Ok(Self { sizes, boundaries })
    }

    /// Builds from ranks and raw columns (`columns[d][j]` = boundary of cell
    /// `j` in degree `d`).
    pub fn from_columns(sizes: Vec<usize>, columns: Vec<Vec<Column<R>>>) -> Result<Self> {
        let boundaries = columns
            .into_iter()
            .enumerate()
            .map(|(d, cols)| SparseMatrix::from_columns(if d == 0 { 0 } else { sizes[d - 1] }, cols))
            .collect::<Result<_>>()?;
        Self::new(sizes, boundaries)
    }

    pub fn empty() -> Self {
        Self {
            sizes: Vec::new(),
            boundaries: Vec::new(),
        }
    }

    /// Number of degrees stored (top degree + 1).
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.iter().all(|&s| s == 0)
    }

    pub fn rank(&self, d: usize) -> usize {
        self.sizes.get(d).copied().unwrap_or(0)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// `∂_d`; a zero matrix of the right shape outside the stored range.
    pub fn boundary(&self, d: usize) -> SparseMatrix<R> {
        match self.boundaries.get(d) {
            Some(m) => m.clone(),
            None => SparseMatrix::zero(if d == 0 { 0 } else { self.rank(d - 1) }, self.rank(d)),
        }
    }

    pub(crate) fn boundary_ref(&self, d: usize) -> Option<&SparseMatrix<R>> {
        self.boundaries.get(d)
    }

    /// `∂_{d-1} ∘ ∂_d = 0` in every degree.
    pub fn check_square_zero(&self) -> Result<bool> {
        for d in 2..self.len() {
            if !self.boundaries[d - 1].mul(&self.boundaries[d])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.sizes
            .iter()
            .enumerate()
            .map(|(d, &s)| if d % 2 == 0 { s as i64 } else { -(s as i64) })
            .sum()
    }

    pub fn convert<S: Coefficient>(&self) -> ChainComplex<S> {
        ChainComplex {
            sizes: self.sizes.clone(),
            boundaries: self.boundaries.iter().map(SparseMatrix::convert).collect(),
        }
    }
}

/// Cellular chains of a Hom complex with the product-of-simplices signs.
///
/// For a cell `η` with source vertices `v_1 < … < v_p`,
/// `∂η = Σ_i (-1)^{s_i} Σ_t (-1)^t η[delete t-th element of η(v_i)]`, taken
/// over coordinates with `|η(v_i)| ≥ 2`, where `s_i = Σ_{j<i} (|η(v_j)| - 1)`.
pub fn cellular_chain_complex<R: Coefficient>(k: &HomComplex) -> ChainComplex<R> {
    let Some(top) = k.dimension() else {
        return ChainComplex::empty();
    };
    let sizes: Vec<usize> = (0..=top).map(|d| k.dim_range(d).len()).collect();
    let mut columns: Vec<Vec<Column<R>>> = Vec::with_capacity(top + 1);
    for d in 0..=top {
        let range = k.dim_range(d);
        let mut cols = Vec::with_capacity(range.len());
        let lower = if d == 0 { 0..0 } else { k.dim_range(d - 1) };
        for i in range {
            let cell = k.cell(i);
            let mut col = Vec::new();
            let mut shift = 0usize;
            for (v, s) in cell.sets().iter().enumerate() {
                if s.len() >= 2 {
                    for t in 0..s.len() {
                        let face = cell.delete(v, t);
                        let row = k.index_of(&face).expect("closed under faces") - lower.start;
                        let sign = if (shift + t) % 2 == 0 { 1 } else { -1 };
                        col.push((row as u32, R::from(sign)));
                    }
                }
                shift += s.len() - 1;
            }
            col.sort_by_key(|&(r, _)| r);
            cols.push(col);
        }
        columns.push(cols);
    }
    ChainComplex::from_columns(sizes, columns).expect("shapes are consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, GraphKind};
    use crate::hom::enumerate_cells;
    use crate::scalar::Word;

    #[test]
    fn hexagon_incidence() {
        let k2 = build_named(GraphKind::Complete(2)).unwrap();
        let k3 = build_named(GraphKind::Complete(3)).unwrap();
        let k = enumerate_cells(&k2, &k3).unwrap();
        let c: ChainComplex<Word> = cellular_chain_complex(&k);
        assert_eq!(c.sizes(), &[6, 6]);
        let d1 = c.boundary(1);
        for j in 0..6 {
            let col = d1.column(j);
            assert_eq!(col.len(), 2);
            let s: i64 = col.iter().map(|(_, x)| *x).sum();
            assert_eq!(s, 0);
        }
        // every vertex of the hexagon meets two edges
        let mut deg = [0; 6];
        for col in d1.columns() {
            for (r, _) in col {
                deg[*r as usize] += 1;
            }
        }
        assert_eq!(deg, [2; 6]);
    }

    #[test]
    fn edge_boundary_orientation() {
        let k1 = build_named(GraphKind::Complete(1)).unwrap();
        let k2 = build_named(GraphKind::Complete(2)).unwrap();
        // Hom(K_1, K_2) is the 1-simplex {0, 1}
        let k = enumerate_cells(&k1, &k2).unwrap();
        let c: ChainComplex<Word> = cellular_chain_complex(&k);
        assert_eq!(c.boundary(1).column(0), &vec![(0, -1), (1, 1)]);
    }

    #[test]
    fn zero_dimensional_complex_has_no_boundaries() {
        let k2 = build_named(GraphKind::Complete(2)).unwrap();
        let k = enumerate_cells(&k2, &k2).unwrap();
        let c: ChainComplex<Word> = cellular_chain_complex(&k);
        assert_eq!(c.len(), 1);
        assert!(c.boundary(0).is_zero());
        assert!(c.boundary(1).is_zero());
    }

    #[test]
    fn square_zero_on_products_of_simplices() {
        let k2 = build_named(GraphKind::Complete(2)).unwrap();
        let k5 = build_named(GraphKind::Complete(5)).unwrap();
        let k = enumerate_cells(&k2, &k5).unwrap();
        let c: ChainComplex<Word> = cellular_chain_complex(&k);
        assert!(c.check_square_zero().unwrap());
    }

    #[test]
    fn triplets() {
        let m = SparseMatrix::<Word>::from_columns(2, vec![vec![(1, 1), (0, -1), (1, 0)]]).unwrap();
        assert_eq!(m.to_triplets(), "2 1 2\n0 0 -1\n1 0 1\n");
    }
}
