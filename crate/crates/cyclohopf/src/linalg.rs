//! Dense exact linear algebra over Q(zeta_N).
//!
//! Everything is deterministic: row reduction always picks the first nonzero
//! pivot, so the reduced row echelon form is a canonical representative and
//! subspaces compare by simple equality of their stored bases.

use std::fmt;
use std::sync::Arc;

use crate::field::{ContextOps, Cyclotomic, CyclotomicContext};
use crate::{Error, Result};

/// Row-major dense matrix over Q(zeta_N).
#[derive(Clone, PartialEq)]
pub struct Matrix {
    ctx: Arc<CyclotomicContext>,
    rows: usize,
    cols: usize,
    data: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn zero(ctx: &Arc<CyclotomicContext>, rows: usize, cols: usize) -> Matrix {
        Matrix {
            ctx: ctx.clone(),
            rows,
            cols,
            data: vec![ctx.zero(); rows * cols],
        }
    }

    pub fn identity(ctx: &Arc<CyclotomicContext>, n: usize) -> Matrix {
        let mut m = Matrix::zero(ctx, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = ctx.one();
        }
        m
    }

    pub fn from_rows(ctx: &Arc<CyclotomicContext>, rows: Vec<Vec<Cyclotomic>>) -> Matrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend(r);
        }
        Matrix {
            ctx: ctx.clone(),
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn context(&self) -> &Arc<CyclotomicContext> {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Cyclotomic {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Cyclotomic>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Cyclotomic> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(&self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "matrix product {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zero(&self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        let t = a * b;
                        *out.at_mut(i, j) += &t;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        assert_eq!(v.len(), self.cols, "vector length");
        let mut out = vec![self.ctx.zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if !a.is_zero() && !v[j].is_zero() {
                    let t = a * &v[j];
                    out[i] += &t;
                }
            }
        }
        out
    }

    /// Kronecker product: (A (x) B)[(i,k), (j,l)] = A[i,j] B[k,l] with row
    /// index i * B.rows + k and column index j * B.cols + l.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zero(
            &self.ctx,
            self.rows * other.rows,
            self.cols * other.cols,
        );
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.at(k, l);
                        if !b.is_zero() {
                            *out.at_mut(i * other.rows + k, j * other.cols + l) = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        assert_eq!(v.len(), self.rows, "vector length");
        let mut out = vec![self.ctx.zero(); self.cols];
        for i in 0..self.rows {
            if v[i].is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let a = self.at(i, j);
                if !a.is_zero() {
                    let t = &v[i] * a;
                    out[j] += &t;
                }
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    /// Deterministic: scans columns left to right and picks the first
    /// nonzero entry as pivot.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    let a = m.at(p, j).clone();
                    let b = m.at(r, j).clone();
                    *m.at_mut(p, j) = b;
                    *m.at_mut(r, j) = a;
                }
            }
            let inv = m.at(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let t = m.at(r, j) * &inv;
                *m.at_mut(r, j) = t;
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in c..m.cols {
                        let t = &f * m.at(r, j);
                        *m.at_mut(i, j) -= &t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{ v : M v = 0 }` as a subspace of
    /// k^cols.
    pub fn kernel(&self) -> Subspace {
        let (red, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![self.ctx.zero(); self.cols];
            v[free] = self.ctx.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -red.at(row, free);
            }
            basis.push(v);
        }
        Subspace::from_spanning(&self.ctx, self.cols, basis)
    }

    /// One solution of `M x = b`, if any.
    pub fn solve(&self, b: &[Cyclotomic]) -> Option<Vec<Cyclotomic>> {
        assert_eq!(b.len(), self.rows, "rhs length");
        let mut aug = Matrix::zero(&self.ctx, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, self.cols) = b[i].clone();
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![self.ctx.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = red.at(row, self.cols).clone();
        }
        Some(x)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let entries: Vec<String> = self.row(i).iter().map(|c| c.to_string()).collect();
            writeln!(f, "  [{}]", entries.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A linear subspace of k^ambient, stored as a canonical (RREF, no zero
/// rows) basis, one basis vector per matrix row.
#[derive(Clone, PartialEq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_spanning(
        ctx: &Arc<CyclotomicContext>,
        ambient: usize,
        spanning: Vec<Vec<Cyclotomic>>,
    ) -> Subspace {
        for v in &spanning {
            assert_eq!(v.len(), ambient, "spanning vector length");
        }
        let m = Matrix::from_rows(ctx, spanning);
        let m = if m.rows() == 0 {
            Matrix::zero(ctx, 0, ambient)
        } else {
            m
        };
        let (red, pivots) = m.rref();
        let rank = pivots.len();
        let mut rows = Vec::with_capacity(rank);
        for i in 0..rank {
            rows.push(red.row(i).to_vec());
        }
        let basis = if rows.is_empty() {
            Matrix::zero(ctx, 0, ambient)
        } else {
            Matrix::from_rows(ctx, rows)
        };
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn zero(ctx: &Arc<CyclotomicContext>, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zero(ctx, 0, ambient),
            pivots: vec![],
        }
    }

    pub fn full(ctx: &Arc<CyclotomicContext>, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(ctx, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn context(&self) -> &Arc<CyclotomicContext> {
        self.basis.context()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating all pivot coordinates against the
    /// basis; the zero vector exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        assert_eq!(v.len(), self.ambient, "vector length");
        let mut w = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            if !w[pc].is_zero() {
                let f = w[pc].clone();
                for j in pc..self.ambient {
                    let b = self.basis.at(row, j);
                    if !b.is_zero() {
                        let t = &f * b;
                        w[j] -= &t;
                    }
                }
            }
        }
        w
    }

    pub fn contains_vector(&self, v: &[Cyclotomic]) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        (0..other.dim()).all(|i| self.contains_vector(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let mut rows = self.basis.row_vecs();
        rows.extend(other.basis.row_vecs());
        Subspace::from_spanning(self.context(), self.ambient, rows)
    }

    /// Intersection, via the kernel of the concatenated-coefficients system:
    /// a vector u A = v B lies in both row spaces.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let ctx = self.context().clone();
        let a = self.dim();
        let b = other.dim();
        if a == 0 || b == 0 {
            return Subspace::zero(&ctx, self.ambient);
        }
        // Columns: coefficients on self's basis then on other's basis.
        let mut sys = Matrix::zero(&ctx, self.ambient, a + b);
        for i in 0..a {
            for j in 0..self.ambient {
                *sys.at_mut(j, i) = self.basis.at(i, j).clone();
            }
        }
        for i in 0..b {
            for j in 0..self.ambient {
                *sys.at_mut(j, a + i) = -other.basis.at(i, j);
            }
        }
        let ker = sys.kernel();
        let mut rows = Vec::new();
        for t in 0..ker.dim() {
            let coefs = ker.basis().row(t);
            let mut v = vec![ctx.zero(); self.ambient];
            for i in 0..a {
                if !coefs[i].is_zero() {
                    for j in 0..self.ambient {
                        let t = &coefs[i] * self.basis.at(i, j);
                        v[j] += &t;
                    }
                }
            }
            rows.push(v);
        }
        Subspace::from_spanning(&ctx, self.ambient, rows)
    }

    /// The annihilator `{ f in the dual : f(v) = 0 for all v }`, in dual
    /// coordinates; annihilators are involutive under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.context(), self.ambient);
        }
        self.basis.kernel()
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} of k^{}) {:?}",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}

/// Projection and section matrices for the quotient k^d / v.
///
/// `projection` is (d - dim v) x d with kernel exactly `v`; `section` is
/// d x (d - dim v) picking the non-pivot coordinates, and
/// `projection * section` is the identity. Both are deterministic functions
/// of the canonical basis of `v`.
pub fn quotient_data(v: &Subspace) -> (Matrix, Matrix) {
    let ctx = v.context().clone();
    let d = v.ambient();
    let r = v.dim();
    let q = d - r;
    let free: Vec<usize> = (0..d).filter(|j| !v.pivots().contains(j)).collect();
    let mut projection = Matrix::zero(&ctx, q, d);
    let mut section = Matrix::zero(&ctx, d, q);
    for (t, &j) in free.iter().enumerate() {
        *projection.at_mut(t, j) = ctx.one();
        *section.at_mut(j, t) = ctx.one();
    }
    for (row, &pc) in v.pivots().iter().enumerate() {
        for (t, &j) in free.iter().enumerate() {
            let c = v.basis().at(row, j);
            if !c.is_zero() {
                *projection.at_mut(t, pc) = -c;
            }
        }
    }
    (projection, section)
}
