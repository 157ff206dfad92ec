//! Exact dense linear algebra and sparse order-3 tensors.
//!
//! Matrices are dense (ambient dimensions stay small), structure-constant
//! tensors are sparse. Subspaces are kept in reduced row-echelon form so that
//! subspace equality is plain row-matrix equality.

use crate::field::{FieldSpec, Scalar};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("pairing is degenerate")]
    DegeneratePairing,
}

/// Dense matrix over an exact field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c));
        Matrix {
            rows: r,
            cols: c,
            field,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut m = Matrix::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        Matrix::from_fn(self.field, self.rows, rhs.cols, |i, j| {
            let mut acc = self.field.zero();
            for k in 0..self.cols {
                acc = acc.add(&self.get(i, k).mul(rhs.get(k, j)));
            }
            acc
        })
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.get(i, j).add(rhs.get(i, j))
        })
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.get(i, j).sub(rhs.get(i, j))
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j).mul(c))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Apply to a column vector given as a slice.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix apply shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    acc = acc.add(&self.get(i, j).mul(&v[j]));
                }
                acc
            })
            .collect()
    }

    /// Reduced row-echelon form; idempotent, fixed left-to-right pivot order.
    pub fn rref(&self) -> Matrix {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let Some(r) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, r);
            let inv = m.get(pivot_row, col).inv().expect("nonzero pivot");
            for j in 0..m.cols {
                let v = m.get(pivot_row, j).mul(&inv);
                m.set(pivot_row, j, v);
            }
            for r2 in 0..m.rows {
                if r2 != pivot_row && !m.get(r2, col).is_zero() {
                    let f = m.get(r2, col).clone();
                    for j in 0..m.cols {
                        let v = m.get(r2, j).sub(&f.mul(m.get(pivot_row, j)));
                        m.set(r2, j, v);
                    }
                }
            }
            pivot_row += 1;
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let r = self.rref();
        (0..r.rows)
            .filter(|&i| (0..r.cols).any(|j| !r.get(i, j).is_zero()))
            .count()
    }

    /// Basis of the right nullspace, one row per kernel vector, in rref.
    pub fn kernel(&self) -> Matrix {
        let r = self.rref();
        let mut pivots = Vec::new();
        let mut pc = 0;
        for i in 0..r.rows {
            if let Some(j) = (pc..r.cols).find(|&j| !r.get(i, j).is_zero()) {
                pivots.push((i, j));
                pc = j + 1;
            }
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, j)| j).collect();
        let free_cols: Vec<usize> = (0..self.cols).filter(|j| !pivot_cols.contains(j)).collect();
        let mut rows = Vec::new();
        for &fc in &free_cols {
            let mut v = vec![self.field.zero(); self.cols];
            v[fc] = self.field.one();
            for &(pi, pj) in &pivots {
                v[pj] = r.get(pi, fc).neg();
            }
            rows.push(v);
        }
        Matrix::from_rows(self.field, rows).rref()
    }

    /// Solve `self * x = b` for column vector b. Returns a particular
    /// solution together with a kernel basis.
    pub fn solve(&self, b: &[Scalar]) -> Result<(Vec<Scalar>, Matrix), LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "solve: {} rows vs rhs of length {}",
                self.rows,
                b.len()
            )));
        }
        // Augment and eliminate.
        let mut aug = Matrix::from_fn(self.field, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        aug = aug.rref();
        let mut x = vec![self.field.zero(); self.cols];
        for i in 0..aug.rows {
            let Some(j) = (0..=self.cols).find(|&j| !aug.get(i, j).is_zero()) else {
                continue;
            };
            if j == self.cols {
                return Err(LinalgError::Inconsistent);
            }
            x[j] = aug.get(i, self.cols).clone();
        }
        Ok((x, self.kernel()))
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let aug = Matrix::from_fn(self.field, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                self.field.one()
            } else {
                self.field.zero()
            }
        })
        .rref();
        for i in 0..n {
            if !aug.get(i, i).is_one() {
                return None;
            }
        }
        Some(Matrix::from_fn(self.field, n, n, |i, j| aug.get(i, j + n).clone()))
    }

    /// Kronecker product under the global row-major flattening.
    pub fn kronecker(&self, rhs: &Matrix) -> Matrix {
        Matrix::from_fn(
            self.field,
            self.rows * rhs.rows,
            self.cols * rhs.cols,
            |i, j| {
                let (i1, i2) = (i / rhs.rows, i % rhs.rows);
                let (j1, j2) = (j / rhs.cols, j % rhs.cols);
                self.get(i1, j1).mul(rhs.get(i2, j2))
            },
        )
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// The global tensor flattening: `(i, j) <-> i * d2 + j`, row-major.
pub fn flatten(i: usize, j: usize, d2: usize) -> usize {
    i * d2 + j
}

pub fn unflatten(idx: usize, d2: usize) -> (usize, usize) {
    (idx / d2, idx % d2)
}

/// Sparse order-3 coefficient tensor; keys are normalized (no duplicates,
/// no explicit zeros).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    pub dims: (usize, usize, usize),
    pub field: FieldSpec,
    entries: BTreeMap<(usize, usize, usize), Scalar>,
}

impl Tensor3 {
    pub fn new(field: FieldSpec, dims: (usize, usize, usize)) -> Self {
        Tensor3 {
            dims,
            field,
            entries: BTreeMap::new(),
        }
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.entries
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        assert!(i < self.dims.0 && j < self.dims.1 && k < self.dims.2, "tensor index out of range");
        if v.is_zero() {
            self.entries.remove(&(i, j, k));
        } else {
            self.entries.insert((i, j, k), v);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, v: &Scalar) {
        let cur = self.get(i, j, k);
        self.set(i, j, k, cur.add(v));
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Scalar)> {
        self.entries.iter()
    }

    /// The slice `t[i, j, .]` as a dense vector of length `dims.2`.
    pub fn slice12(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dims.2];
        for k in 0..self.dims.2 {
            v[k] = self.get(i, j, k);
        }
        v
    }
}

/// A linear subspace of `k^ambient`, stored as an rref basis matrix with the
/// zero rows dropped; canonical, so equality of subspaces is `==`.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    pub ambient: usize,
    pub basis: Matrix,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace dim {} of k^{}: {:?}", self.dim(), self.ambient, self.basis)
    }
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(field, 0, ambient),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
        }
    }

    pub fn from_vectors(field: FieldSpec, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "span vector of wrong length");
        }
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let m = Matrix::from_rows(field, vectors.to_vec());
        Subspace::from_matrix_rows(ambient, &m)
    }

    /// Rows of `m` span the subspace; rref and drop zero rows.
    pub fn from_matrix_rows(ambient: usize, m: &Matrix) -> Self {
        let r = m.rref();
        let rows: Vec<Vec<Scalar>> = (0..r.rows)
            .map(|i| r.row(i))
            .filter(|row| row.iter().any(|x| !x.is_zero()))
            .collect();
        if rows.is_empty() {
            return Subspace::zero(m.field, ambient);
        }
        Subspace {
            ambient,
            basis: Matrix::from_rows(m.field, rows),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        // v in rowspan iff stacking does not raise the rank.
        let mut rows: Vec<Vec<Scalar>> = (0..self.basis.rows).map(|i| self.basis.row(i)).collect();
        rows.push(v.to_vec());
        Matrix::from_rows(self.field(), rows).rank() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.basis.rows).all(|i| self.contains(&other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch("subspace sum".into()));
        }
        let mut rows: Vec<Vec<Scalar>> = (0..self.basis.rows).map(|i| self.basis.row(i)).collect();
        rows.extend((0..other.basis.rows).map(|i| other.basis.row(i)));
        Ok(Subspace::from_matrix_rows(
            self.ambient,
            &Matrix::from_rows(self.field(), rows),
        ))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch("subspace intersection".into()));
        }
        // x = u^T a = v^T b; solve [U^T | -V^T] (a;b)^T = 0.
        let du = self.dim();
        let dv = other.dim();
        let field = self.field();
        let m = Matrix::from_fn(field, self.ambient, du + dv, |i, j| {
            if j < du {
                self.basis.get(j, i).clone()
            } else {
                other.basis.get(j - du, i).neg()
            }
        });
        let ker = m.kernel();
        let vectors: Vec<Vec<Scalar>> = (0..ker.rows)
            .map(|r| {
                let coeffs = ker.row(r);
                let mut v = vec![field.zero(); self.ambient];
                for (ui, c) in coeffs.iter().take(du).enumerate() {
                    for a in 0..self.ambient {
                        v[a] = v[a].add(&c.mul(self.basis.get(ui, a)));
                    }
                }
                v
            })
            .collect();
        Ok(Subspace::from_vectors(field, self.ambient, &vectors))
    }

    /// Orthogonal complement under a nondegenerate bilinear pairing matrix P:
    /// `{x : u P x = 0 for all basis rows u}`.
    pub fn perp(&self, pairing: &Matrix) -> Result<Subspace, LinalgError> {
        if pairing.rows != self.ambient || pairing.cols != self.ambient {
            return Err(LinalgError::DimensionMismatch("perp pairing shape".into()));
        }
        if pairing.rank() != self.ambient {
            return Err(LinalgError::DegeneratePairing);
        }
        let up = self.basis.mul(pairing);
        let ker = up.kernel();
        Ok(Subspace::from_matrix_rows(self.ambient, &ker))
    }

    /// Coset representatives for `ambient-space / self` restricted to `within`
    /// (which must contain `self`): vectors of `within` whose classes form a
    /// basis of the quotient.
    pub fn quotient_basis(&self, within: &Subspace) -> Result<Vec<Vec<Scalar>>, LinalgError> {
        if self.ambient != within.ambient {
            return Err(LinalgError::DimensionMismatch("quotient_basis".into()));
        }
        assert!(within.contains_subspace(self), "quotient_basis: ideal not inside ambient space");
        let mut reps = Vec::new();
        let mut span = self.clone();
        for i in 0..within.basis.rows {
            let v = within.basis.row(i);
            if !span.contains(&v) {
                reps.push(v.clone());
                span = span
                    .sum(&Subspace::from_vectors(self.field(), self.ambient, &[v]))
                    .unwrap();
            }
        }
        Ok(reps)
    }
}

/// Scalar-vector helpers used throughout the structure-constant modules.
pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn vec_scale(a: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x.mul(c)).collect()
}

pub fn vec_is_zero(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}

pub fn zero_vec(field: FieldSpec, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn basis_vec(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

/// Tensor product of two coordinate vectors under the row-major flattening.
pub fn vec_tensor(a: &[Scalar], b: &[Scalar], field: FieldSpec) -> Vec<Scalar> {
    let mut out = zero_vec(field, a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[flatten(i, j, b.len())] = x.mul(y);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn mat(field: FieldSpec, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_identity_case() {
        let m = mat(q(), &[&[1]]);
        assert_eq!(m.rref(), m);
    }

    #[test]
    fn rref_single_pivot_normalization() {
        let m = mat(q(), &[&[0, 2], &[0, 1]]);
        assert_eq!(m.rref(), mat(q(), &[&[0, 1], &[0, 0]]));
    }

    #[test]
    fn rref_mod_5() {
        let f5 = FieldSpec::Prime(5);
        let m = mat(f5, &[&[1, 2], &[2, 4]]);
        assert_eq!(m.rref(), mat(f5, &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn solve_identity() {
        let m = Matrix::identity(q(), 2);
        let b = vec![q().from_i64(3), q().from_i64(4)];
        let (x, ker) = m.solve(&b).unwrap();
        assert_eq!(x, b);
        assert_eq!(ker.rows, 0);
    }

    #[test]
    fn solve_underdetermined() {
        let m = mat(q(), &[&[1, 1]]);
        let (x, ker) = m.solve(&[q().zero()]).unwrap();
        assert!(vec_is_zero(&x));
        assert_eq!(ker.rows, 1);
        // kernel spanned by (1, -1)
        assert!(Subspace::from_matrix_rows(2, &ker)
            .contains(&[q().one(), q().one().neg()]));
    }

    #[test]
    fn solve_inconsistent() {
        let m = mat(q(), &[&[1, 0], &[1, 0]]);
        let b = vec![q().from_i64(1), q().from_i64(2)];
        assert_eq!(m.solve(&b).unwrap_err(), LinalgError::Inconsistent);
    }

    #[test]
    fn subspace_sum_intersect() {
        let u = Subspace::from_vectors(q(), 2, &[basis_vec(q(), 2, 0)]);
        let v = Subspace::from_vectors(q(), 2, &[basis_vec(q(), 2, 1)]);
        assert_eq!(u.sum(&v).unwrap(), Subspace::full(q(), 2));
        assert_eq!(u.intersect(&v).unwrap(), Subspace::zero(q(), 2));
    }

    #[test]
    fn perp_under_dot() {
        let u = Subspace::from_vectors(q(), 3, &[basis_vec(q(), 3, 0)]);
        let p = Matrix::identity(q(), 3);
        let w = u.perp(&p).unwrap();
        assert_eq!(w.dim(), 2);
        assert!(w.contains(&basis_vec(q(), 3, 1)));
        assert!(w.contains(&basis_vec(q(), 3, 2)));
        assert_eq!(w.perp(&p).unwrap(), u);
    }

    #[test]
    fn quotient_basis_one_rep() {
        let one = q().one();
        let u = Subspace::from_vectors(q(), 2, &[vec![one.clone(), one.neg()]]);
        let reps = u.quotient_basis(&Subspace::full(q(), 2)).unwrap();
        assert_eq!(reps.len(), 1);
    }

    #[test]
    fn kronecker_identities() {
        let i2 = Matrix::identity(q(), 2);
        let i3 = Matrix::identity(q(), 3);
        assert_eq!(i2.kronecker(&i3), Matrix::identity(q(), 6));
        let a = mat(q(), &[&[2]]);
        let b = mat(q(), &[&[3]]);
        assert_eq!(a.kronecker(&b), mat(q(), &[&[6]]));
    }

    #[test]
    fn flatten_roundtrip() {
        assert_eq!(flatten(1, 2, 3), 5);
        assert_eq!(unflatten(5, 3), (1, 2));
    }
}
