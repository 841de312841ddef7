use std::ops::{Index, IndexMut};

use crate::error::Result;
use crate::scalar::Coefficient;

/// Row-major dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Coefficient> DenseMatrix<R> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn mul(&self, other: &DenseMatrix<R>) -> Result<DenseMatrix<R>> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = &self[(i, k)];
                if x.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let y = &other[(k, j)];
                    if !y.is_zero() {
                        let neg = -x.clone();
                        out[(i, j)] = out[(i, j)].sub_mul(&neg, y)?;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[R]) -> Result<Vec<R>> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|i| {
                let mut acc = R::zero();
                for (x, y) in self.row(i).iter().zip(v) {
                    if !x.is_zero() && !y.is_zero() {
                        acc = acc.sub_mul(&-x.clone(), y)?;
                    }
                }
                Ok(acc)
            })
            .collect()
    }

    /// Rows `range` of `self` as a new matrix.
    pub fn row_slice(&self, range: std::ops::Range<usize>) -> Self {
        Self {
            rows: range.len(),
            cols: self.cols,
            data: self.data[range.start * self.cols..range.end * self.cols].to_vec(),
        }
    }

    fn swap_rows(&mut self, i: usize, k: usize) {
        if i != k {
            for j in 0..self.cols {
                self.data.swap(i * self.cols + j, k * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        if j != k {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + j, i * self.cols + k);
            }
        }
    }

    /// `row_i += c · row_k`.
    fn add_row(&mut self, i: usize, k: usize, c: &R) -> Result<()> {
        let neg = -c.clone();
        for j in 0..self.cols {
            let y = self[(k, j)].clone();
            if !y.is_zero() {
                self[(i, j)] = self[(i, j)].sub_mul(&neg, &y)?;
            }
        }
        Ok(())
    }

    /// `col_j += c · col_k`.
    fn add_col(&mut self, j: usize, k: usize, c: &R) -> Result<()> {
        let neg = -c.clone();
        for i in 0..self.rows {
            let y = self[(i, k)].clone();
            if !y.is_zero() {
                self[(i, j)] = self[(i, j)].sub_mul(&neg, &y)?;
            }
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = &mut self[(i, j)];
            *x = -x.clone();
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let x = &mut self[(i, j)];
            *x = -x.clone();
        }
    }
}

impl<R> Index<(usize, usize)> for DenseMatrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        &self.data[i * self.cols + j]
    }
}

impl<R> IndexMut<(usize, usize)> for DenseMatrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        &mut self.data[i * self.cols + j]
    }
}

/// `U A V = D` with `D` diagonal, `d_1 | d_2 | …`, all positive.
#[derive(Clone, Debug)]
pub struct Smith<R> {
    /// The nonzero invariant factors; their count is the rank.
    pub invariants: Vec<R>,
    pub transforms: Option<Transforms<R>>,
}

#[derive(Clone, Debug)]
pub struct Transforms<R> {
    pub u: DenseMatrix<R>,
    pub u_inv: DenseMatrix<R>,
    pub v: DenseMatrix<R>,
    pub v_inv: DenseMatrix<R>,
}

impl<R: Coefficient> Smith<R> {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> impl Iterator<Item = &R> {
        self.invariants.iter().filter(|x| !x.is_one())
    }
}

struct Work<R> {
    a: DenseMatrix<R>,
    t: Option<Transforms<R>>,
}

impl<R: Coefficient> Work<R> {
    fn swap_rows(&mut self, i: usize, k: usize) {
        self.a.swap_rows(i, k);
        if let Some(t) = &mut self.t {
            t.u.swap_rows(i, k);
            t.u_inv.swap_cols(i, k);
        }
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        self.a.swap_cols(j, k);
        if let Some(t) = &mut self.t {
            t.v.swap_cols(j, k);
            t.v_inv.swap_rows(j, k);
        }
    }

    fn add_row(&mut self, i: usize, k: usize, c: &R) -> Result<()> {
        self.a.add_row(i, k, c)?;
        if let Some(t) = &mut self.t {
            t.u.add_row(i, k, c)?;
            t.u_inv.add_col(k, i, &-c.clone())?;
        }
        Ok(())
    }

    fn add_col(&mut self, j: usize, k: usize, c: &R) -> Result<()> {
        self.a.add_col(j, k, c)?;
        if let Some(t) = &mut self.t {
            t.v.add_col(j, k, c)?;
            t.v_inv.add_row(k, j, &-c.clone())?;
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(t) = &mut self.t {
            t.u.negate_row(i);
            t.u_inv.negate_col(i);
        }
    }
}

/// Smith normal form by elimination with a minimal-absolute-value pivot.
pub fn smith_normal_form<R: Coefficient>(a: DenseMatrix<R>, with_transforms: bool) -> Result<Smith<R>> {
    let (m, n) = (a.rows(), a.cols());
    let t = with_transforms.then(|| Transforms {
        u: DenseMatrix::identity(m),
        u_inv: DenseMatrix::identity(m),
        v: DenseMatrix::identity(n),
        v_inv: DenseMatrix::identity(n),
    });
    let mut w = Work { a, t };
    let mut invariants = Vec::new();
    for p in 0..m.min(n) {
        let mut best: Option<(usize, usize)> = None;
        for i in p..m {
            for j in p..n {
                let x = &w.a[(i, j)];
                if !x.is_zero() && best.map_or(true, |(bi, bj)| x.abs() < w.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        w.swap_rows(p, bi);
        w.swap_cols(p, bj);
        loop {
            let mut dirty = false;
            for i in p + 1..m {
                if !w.a[(i, p)].is_zero() {
                    let q = w.a[(i, p)].div_floor(&w.a[(p, p)]);
                    w.add_row(i, p, &-q)?;
                    dirty |= !w.a[(i, p)].is_zero();
                }
            }
            for j in p + 1..n {
                if !w.a[(p, j)].is_zero() {
                    let q = w.a[(p, j)].div_floor(&w.a[(p, p)]);
                    w.add_col(j, p, &-q)?;
                    dirty |= !w.a[(p, j)].is_zero();
                }
            }
            if dirty {
                // a remainder is smaller than the pivot; bring the smallest in
                let mut best: Option<(usize, usize)> = None;
                let cand = (p + 1..m).map(|i| (i, p)).chain((p + 1..n).map(|j| (p, j)));
                for (i, j) in cand {
                    let x = &w.a[(i, j)];
                    if !x.is_zero() && best.map_or(true, |(bi, bj)| x.abs() < w.a[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
                let (bi, bj) = best.expect("dirty pivot row or column");
                w.swap_rows(p, bi);
                w.swap_cols(p, bj);
                continue;
            }
            let pivot = w.a[(p, p)].clone();
            let bad = (p + 1..m).find(|&i| (p + 1..n).any(|j| !w.a[(i, j)].is_multiple_of(&pivot)));
            match bad {
                Some(i) => w.add_row(p, i, &R::one())?,
                None => break,
            }
        }
        if w.a[(p, p)].is_negative() {
            w.negate_row(p);
        }
        invariants.push(w.a[(p, p)].clone());
    }
    Ok(Smith {
        invariants,
        transforms: w.t,
    })
}
