//! Structure-constant carriers: algebras, coalgebras, bialgebras, Hopf
//! algebras, together with axiom validators, duals, tensor products and the
//! convolution algebra Hom(C, A).
//!
//! Conventions: `e_i * e_j = sum_k mult[i,j,k] e_k` and
//! `Delta e_i = sum_{j,k} comult[i,j,k] e_j (x) e_k`; tensor legs are
//! flattened row-major, `(i, j) -> i * d2 + j`. Linear maps are matrices of
//! shape (target dim) x (source dim).

use crate::field::{FieldSpec, Scalar};
use crate::linalg::{
    basis_vec, flatten, vec_add, vec_is_zero, vec_scale, vec_tensor, zero_vec, Matrix, Tensor3,
};
use std::fmt;

/// A violated axiom, reported with the first offending basis indices (in
/// lexicographic order) and both sides of the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub law: String,
    pub indices: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lhs: Vec<String> = self.lhs.iter().map(|x| x.to_string()).collect();
        let rhs: Vec<String> = self.rhs.iter().map(|x| x.to_string()).collect();
        write!(
            f,
            "axiom `{}` fails at basis indices {:?}: lhs = [{}], rhs = [{}]",
            self.law,
            self.indices,
            lhs.join(", "),
            rhs.join(", ")
        )
    }
}

impl std::error::Error for Counterexample {}

pub type Check = Result<(), Counterexample>;

fn expect_eq(law: &str, indices: &[usize], lhs: Vec<Scalar>, rhs: Vec<Scalar>) -> Check {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Counterexample {
            law: law.to_string(),
            indices: indices.to_vec(),
            lhs,
            rhs,
        })
    }
}

/// Associative unital algebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub field: FieldSpec,
    pub dim: usize,
    pub mult: Tensor3,
    pub unit: Vec<Scalar>,
}

impl Algebra {
    pub fn new(field: FieldSpec, dim: usize, mult: Tensor3, unit: Vec<Scalar>) -> Self {
        assert_eq!(mult.dims, (dim, dim, dim));
        assert_eq!(unit.len(), dim);
        Algebra { field, dim, mult, unit }
    }

    pub fn validated(self) -> Result<Self, Counterexample> {
        self.validate()?;
        Ok(self)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.mult.slice12(i, j)
    }

    pub fn mul_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vec(self.field, self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = x.mul(y);
                for ((_, _, k), v) in self.mult.iter().filter(|((a_, b_, _), _)| *a_ == i && *b_ == j) {
                    out[*k] = out[*k].add(&c.mul(v));
                }
            }
        }
        out
    }

    /// Product on the tensor square, `(a (x) b)(c (x) d) = ac (x) bd`, on
    /// row-major flattened vectors of length dim^2.
    pub fn mul_flat2(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim;
        let mut out = zero_vec(self.field, d * d);
        for ix in 0..d * d {
            if x[ix].is_zero() {
                continue;
            }
            let (a, b) = crate::linalg::unflatten(ix, d);
            for iy in 0..d * d {
                if y[iy].is_zero() {
                    continue;
                }
                let (c, e) = crate::linalg::unflatten(iy, d);
                let coef = x[ix].mul(&y[iy]);
                let ac = self.mul_basis(a, c);
                let be = self.mul_basis(b, e);
                for (k, u) in ac.iter().enumerate() {
                    if u.is_zero() {
                        continue;
                    }
                    for (l, w) in be.iter().enumerate() {
                        if w.is_zero() {
                            continue;
                        }
                        let idx = flatten(k, l, d);
                        out[idx] = out[idx].add(&coef.mul(u).mul(w));
                    }
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Check {
        // associativity on basis triples
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.mul_basis(i, j);
                for k in 0..self.dim {
                    let lhs = self.mul_vec(&ij, &basis_vec(self.field, self.dim, k));
                    let jk = self.mul_basis(j, k);
                    let rhs = self.mul_vec(&basis_vec(self.field, self.dim, i), &jk);
                    expect_eq("associativity", &[i, j, k], lhs, rhs)?;
                }
            }
        }
        // two-sided unit
        for i in 0..self.dim {
            let e = basis_vec(self.field, self.dim, i);
            expect_eq("left unit", &[i], self.mul_vec(&self.unit, &e), e.clone())?;
            expect_eq("right unit", &[i], self.mul_vec(&e, &self.unit), e)?;
        }
        Ok(())
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    pub fn opposite(&self) -> Algebra {
        let mut mult = Tensor3::new(self.field, (self.dim, self.dim, self.dim));
        for ((i, j, k), v) in self.mult.iter() {
            mult.set(*j, *i, *k, v.clone());
        }
        Algebra::new(self.field, self.dim, mult, self.unit.clone())
    }

    /// Commutator `[a, b] = ab - ba`.
    pub fn commutator(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        crate::linalg::vec_sub(&self.mul_vec(a, b), &self.mul_vec(b, a))
    }
}

/// Coassociative counital coalgebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    pub field: FieldSpec,
    pub dim: usize,
    pub comult: Tensor3,
    pub counit: Vec<Scalar>,
}

impl Coalgebra {
    pub fn new(field: FieldSpec, dim: usize, comult: Tensor3, counit: Vec<Scalar>) -> Self {
        assert_eq!(comult.dims, (dim, dim, dim));
        assert_eq!(counit.len(), dim);
        Coalgebra { field, dim, comult, counit }
    }

    pub fn validated(self) -> Result<Self, Counterexample> {
        self.validate()?;
        Ok(self)
    }

    /// `Delta e_i` as a flattened vector of length dim^2.
    pub fn comult_basis(&self, i: usize) -> Vec<Scalar> {
        let d = self.dim;
        let mut out = zero_vec(self.field, d * d);
        for ((i_, j, k), v) in self.comult.iter() {
            if *i_ == i {
                out[flatten(*j, *k, d)] = v.clone();
            }
        }
        out
    }

    pub fn comult_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim;
        let mut out = zero_vec(self.field, d * d);
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for ((i_, j, k), c) in self.comult.iter() {
                if *i_ == i {
                    let idx = flatten(*j, *k, d);
                    out[idx] = out[idx].add(&x.mul(c));
                }
            }
        }
        out
    }

    pub fn counit_vec(&self, v: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (i, x) in v.iter().enumerate() {
            acc = acc.add(&x.mul(&self.counit[i]));
        }
        acc
    }

    pub fn validate(&self) -> Check {
        let d = self.dim;
        // coassociativity: (Delta (x) 1) Delta = (1 (x) Delta) Delta in k^{d^3}
        for i in 0..d {
            let di = self.comult_basis(i);
            let mut lhs = zero_vec(self.field, d * d * d);
            let mut rhs = zero_vec(self.field, d * d * d);
            for idx in 0..d * d {
                if di[idx].is_zero() {
                    continue;
                }
                let (j, k) = crate::linalg::unflatten(idx, d);
                let dj = self.comult_basis(j);
                for jdx in 0..d * d {
                    if dj[jdx].is_zero() {
                        continue;
                    }
                    let (a, b) = crate::linalg::unflatten(jdx, d);
                    let t = flatten(flatten(a, b, d), k, d);
                    lhs[t] = lhs[t].add(&di[idx].mul(&dj[jdx]));
                }
                let dk = self.comult_basis(k);
                for kdx in 0..d * d {
                    if dk[kdx].is_zero() {
                        continue;
                    }
                    let (a, b) = crate::linalg::unflatten(kdx, d);
                    let t = flatten(flatten(j, a, d), b, d);
                    rhs[t] = rhs[t].add(&di[idx].mul(&dk[kdx]));
                }
            }
            expect_eq("coassociativity", &[i], lhs, rhs)?;
        }
        // counit laws
        for i in 0..d {
            let di = self.comult_basis(i);
            let mut left = zero_vec(self.field, d);
            let mut right = zero_vec(self.field, d);
            for idx in 0..d * d {
                if di[idx].is_zero() {
                    continue;
                }
                let (j, k) = crate::linalg::unflatten(idx, d);
                left[k] = left[k].add(&di[idx].mul(&self.counit[j]));
                right[j] = right[j].add(&di[idx].mul(&self.counit[k]));
            }
            let e = basis_vec(self.field, d, i);
            expect_eq("left counit", &[i], left, e.clone())?;
            expect_eq("right counit", &[i], right, e)?;
        }
        Ok(())
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| (0..self.dim).all(|k| self.comult.get(i, j, k) == self.comult.get(i, k, j)))
        })
    }

    /// Coopposite: swap the last two comultiplication indices.
    pub fn coopposite(&self) -> Coalgebra {
        let mut comult = Tensor3::new(self.field, (self.dim, self.dim, self.dim));
        for ((i, j, k), v) in self.comult.iter() {
            comult.set(*i, *k, *j, v.clone());
        }
        Coalgebra::new(self.field, self.dim, comult, self.counit.clone())
    }
}

/// Bialgebra: algebra + coalgebra on the same carrier with Delta, epsilon
/// algebra maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    pub algebra: Algebra,
    pub coalgebra: Coalgebra,
}

impl Bialgebra {
    pub fn new(algebra: Algebra, coalgebra: Coalgebra) -> Self {
        assert_eq!(algebra.dim, coalgebra.dim);
        assert_eq!(algebra.field, coalgebra.field);
        Bialgebra { algebra, coalgebra }
    }

    pub fn validated(self) -> Result<Self, Counterexample> {
        self.validate()?;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field
    }

    pub fn validate(&self) -> Check {
        self.algebra.validate()?;
        self.coalgebra.validate()?;
        let d = self.dim();
        // Delta is an algebra map
        for i in 0..d {
            for j in 0..d {
                let prod = self.algebra.mul_basis(i, j);
                let lhs = self.coalgebra.comult_vec(&prod);
                let rhs = self
                    .algebra
                    .mul_flat2(&self.coalgebra.comult_basis(i), &self.coalgebra.comult_basis(j));
                expect_eq("comultiplication multiplicative", &[i, j], lhs, rhs)?;
            }
        }
        let unit_flat = vec_tensor(&self.algebra.unit, &self.algebra.unit, self.field());
        expect_eq(
            "comultiplication unital",
            &[],
            self.coalgebra.comult_vec(&self.algebra.unit),
            unit_flat,
        )?;
        // epsilon is an algebra map
        for i in 0..d {
            for j in 0..d {
                let prod = self.algebra.mul_basis(i, j);
                let lhs = vec![self.coalgebra.counit_vec(&prod)];
                let rhs = vec![self.coalgebra.counit[i].mul(&self.coalgebra.counit[j])];
                expect_eq("counit multiplicative", &[i, j], lhs, rhs)?;
            }
        }
        expect_eq(
            "counit unital",
            &[],
            vec![self.coalgebra.counit_vec(&self.algebra.unit)],
            vec![self.field().one()],
        )?;
        Ok(())
    }
}

/// Hopf algebra: bialgebra with an antipode satisfying
/// `m(S (x) 1)Delta = eta eps = m(1 (x) S)Delta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    pub bialgebra: Bialgebra,
    pub antipode: Matrix,
}

impl HopfAlgebra {
    pub fn new(bialgebra: Bialgebra, antipode: Matrix) -> Self {
        assert_eq!(antipode.rows, bialgebra.dim());
        assert_eq!(antipode.cols, bialgebra.dim());
        HopfAlgebra { bialgebra, antipode }
    }

    pub fn validated(self) -> Result<Self, Counterexample> {
        self.validate()?;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.bialgebra.field()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.bialgebra.algebra
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.bialgebra.coalgebra
    }

    pub fn antipode_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.antipode.apply(v)
    }

    pub fn validate(&self) -> Check {
        self.bialgebra.validate()?;
        let d = self.dim();
        for i in 0..d {
            let di = self.coalgebra().comult_basis(i);
            let mut left = zero_vec(self.field(), d);
            let mut right = zero_vec(self.field(), d);
            for idx in 0..d * d {
                if di[idx].is_zero() {
                    continue;
                }
                let (j, k) = crate::linalg::unflatten(idx, d);
                let sj = self.antipode.col(j);
                let term = self.algebra().mul_vec(&sj, &basis_vec(self.field(), d, k));
                left = vec_add(&left, &vec_scale(&term, &di[idx]));
                let sk = self.antipode.col(k);
                let term = self.algebra().mul_vec(&basis_vec(self.field(), d, j), &sk);
                right = vec_add(&right, &vec_scale(&term, &di[idx]));
            }
            let target = vec_scale(&self.algebra().unit, &self.coalgebra().counit[i]);
            expect_eq("left antipode", &[i], left, target.clone())?;
            expect_eq("right antipode", &[i], right, target)?;
        }
        Ok(())
    }
}

/// Dual bialgebra: multiplication is the transpose of comultiplication and
/// vice versa (finite dimension throughout).
pub fn dual_bialgebra(b: &Bialgebra) -> Result<Bialgebra, Counterexample> {
    let d = b.dim();
    let field = b.field();
    let mut mult = Tensor3::new(field, (d, d, d));
    for ((k, i, j), v) in b.coalgebra.comult.iter() {
        // e_i^* e_j^* = sum_k <Delta e_k, e_i (x) e_j> e_k^*
        mult.set(*i, *j, *k, v.clone());
    }
    let mut comult = Tensor3::new(field, (d, d, d));
    for ((j, k, i), v) in b.algebra.mult.iter() {
        // Delta e_i^* = sum_{j,k} <e_j e_k, e_i> e_j^* (x) e_k^*
        comult.set(*i, *j, *k, v.clone());
    }
    let unit = b.coalgebra.counit.clone();
    let counit = b.algebra.unit.clone();
    Bialgebra::new(
        Algebra::new(field, d, mult, unit),
        Coalgebra::new(field, d, comult, counit),
    )
    .validated()
}

pub fn dual_hopf(h: &HopfAlgebra) -> Result<HopfAlgebra, Counterexample> {
    let b = dual_bialgebra(&h.bialgebra)?;
    HopfAlgebra::new(b, h.antipode.transpose()).validated()
}

/// Componentwise bialgebra structure on the tensor product, flattened
/// row-major.
pub fn tensor_bialgebra(b1: &Bialgebra, b2: &Bialgebra) -> Bialgebra {
    assert_eq!(b1.field(), b2.field());
    let field = b1.field();
    let (d1, d2) = (b1.dim(), b2.dim());
    let d = d1 * d2;
    let mut mult = Tensor3::new(field, (d, d, d));
    for ((i1, j1, k1), v1) in b1.algebra.mult.iter() {
        for ((i2, j2, k2), v2) in b2.algebra.mult.iter() {
            mult.set(
                flatten(*i1, *i2, d2),
                flatten(*j1, *j2, d2),
                flatten(*k1, *k2, d2),
                v1.mul(v2),
            );
        }
    }
    let unit = vec_tensor(&b1.algebra.unit, &b2.algebra.unit, field);
    let mut comult = Tensor3::new(field, (d, d, d));
    for ((i1, j1, k1), v1) in b1.coalgebra.comult.iter() {
        for ((i2, j2, k2), v2) in b2.coalgebra.comult.iter() {
            comult.set(
                flatten(*i1, *i2, d2),
                flatten(*j1, *j2, d2),
                flatten(*k1, *k2, d2),
                v1.mul(v2),
            );
        }
    }
    let counit = vec_tensor(&b1.coalgebra.counit, &b2.coalgebra.counit, field);
    Bialgebra::new(
        Algebra::new(field, d, mult, unit),
        Coalgebra::new(field, d, comult, counit),
    )
}

pub fn tensor_hopf(h1: &HopfAlgebra, h2: &HopfAlgebra) -> HopfAlgebra {
    let b = tensor_bialgebra(&h1.bialgebra, &h2.bialgebra);
    HopfAlgebra::new(b, h1.antipode.kronecker(&h2.antipode))
}

/// Convolution `(f * g)(c) = f(c_1) g(c_2)` of linear maps C -> A given as
/// (dim A) x (dim C) matrices.
pub fn convolve(c: &Coalgebra, a: &Algebra, f: &Matrix, g: &Matrix) -> Matrix {
    assert_eq!(f.cols, c.dim);
    assert_eq!(g.cols, c.dim);
    assert_eq!(f.rows, a.dim);
    assert_eq!(g.rows, a.dim);
    let mut out = Matrix::zero(a.field, a.dim, c.dim);
    for i in 0..c.dim {
        let di = c.comult_basis(i);
        let mut acc = zero_vec(a.field, a.dim);
        for idx in 0..c.dim * c.dim {
            if di[idx].is_zero() {
                continue;
            }
            let (j, k) = crate::linalg::unflatten(idx, c.dim);
            let term = a.mul_vec(&f.col(j), &g.col(k));
            acc = vec_add(&acc, &vec_scale(&term, &di[idx]));
        }
        for (r, v) in acc.into_iter().enumerate() {
            out.set(r, i, v);
        }
    }
    out
}

/// The convolution unit eta eps as a matrix.
pub fn convolution_unit(c: &Coalgebra, a: &Algebra) -> Matrix {
    Matrix::from_fn(a.field, a.dim, c.dim, |r, i| a.unit[r].mul(&c.counit[i]))
}

/// Two-sided convolution inverse, or None. Solves the linear system
/// `f * g = eta eps` (left convolution by f is linear in g) and then checks
/// the right identity.
pub fn convolution_inverse(c: &Coalgebra, a: &Algebra, f: &Matrix) -> Option<Matrix> {
    let n = a.dim * c.dim;
    let field = a.field;
    // matrix of L_f acting on g, with g flattened column-major by c-index:
    // coordinates x[r * dimC + i] = g(e_i)_r... use row-major (r, i) -> r*dimC+i.
    let mut op = Matrix::zero(field, n, n);
    for i in 0..c.dim {
        let di = c.comult_basis(i);
        for idx in 0..c.dim * c.dim {
            if di[idx].is_zero() {
                continue;
            }
            let (j, k) = crate::linalg::unflatten(idx, c.dim);
            // contribution of f(e_j) * g(e_k): for g basis entry (s, k)
            // (g(e_k) = e_s), result vector f(e_j) * e_s scaled by di[idx].
            for s in 0..a.dim {
                let prod = a.mul_vec(&f.col(j), &basis_vec(field, a.dim, s));
                for r in 0..a.dim {
                    if prod[r].is_zero() {
                        continue;
                    }
                    let row = r * c.dim + i;
                    let colv = s * c.dim + k;
                    let cur = op.get(row, colv).clone();
                    op.set(row, colv, cur.add(&di[idx].mul(&prod[r])));
                }
            }
        }
    }
    let e = convolution_unit(c, a);
    let mut rhs = zero_vec(field, n);
    for r in 0..a.dim {
        for i in 0..c.dim {
            rhs[r * c.dim + i] = e.get(r, i).clone();
        }
    }
    let (x, _) = op.solve(&rhs).ok()?;
    let g = Matrix::from_fn(field, a.dim, c.dim, |r, i| x[r * c.dim + i].clone());
    // verify the two-sided identity
    if convolve(c, a, f, &g) == e && convolve(c, a, &g, f) == e {
        Some(g)
    } else {
        None
    }
}

/// Attempt to solve for an antipode on a bialgebra: the convolution inverse
/// of the identity in Hom(H, H).
pub fn solve_antipode(b: &Bialgebra) -> Option<Matrix> {
    convolution_inverse(&b.coalgebra, &b.algebra, &Matrix::identity(b.field(), b.dim()))
}

/// Bilinear pairing psi: X (x) Y -> A stored as a table of A-coordinate
/// vectors indexed by basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearPairing {
    pub field: FieldSpec,
    pub dim_x: usize,
    pub dim_y: usize,
    pub dim_a: usize,
    table: Vec<Vec<Vec<Scalar>>>,
}

impl BilinearPairing {
    pub fn zero(field: FieldSpec, dim_x: usize, dim_y: usize, dim_a: usize) -> Self {
        BilinearPairing {
            field,
            dim_x,
            dim_y,
            dim_a,
            table: vec![vec![zero_vec(field, dim_a); dim_y]; dim_x],
        }
    }

    pub fn from_fn(
        field: FieldSpec,
        dim_x: usize,
        dim_y: usize,
        dim_a: usize,
        f: impl Fn(usize, usize) -> Vec<Scalar>,
    ) -> Self {
        let mut p = Self::zero(field, dim_x, dim_y, dim_a);
        for i in 0..dim_x {
            for j in 0..dim_y {
                let v = f(i, j);
                assert_eq!(v.len(), dim_a);
                p.table[i][j] = v;
            }
        }
        p
    }

    pub fn get(&self, i: usize, j: usize) -> &Vec<Scalar> {
        &self.table[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Vec<Scalar>) {
        assert_eq!(v.len(), self.dim_a);
        self.table[i][j] = v;
    }

    /// Bilinear extension to coordinate vectors.
    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vec(self.field, self.dim_a);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                if vec_is_zero(&self.table[i][j]) {
                    continue;
                }
                out = vec_add(&out, &vec_scale(&self.table[i][j], &xi.mul(yj)));
            }
        }
        out
    }

    /// Flattened table in lexicographic (i, j, a) order; used for canonical
    /// ordering of enumeration output.
    pub fn flat(&self) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(self.dim_x * self.dim_y * self.dim_a);
        for row in &self.table {
            for v in row {
                out.extend(v.iter().cloned());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn group_algebra_c2_passes_all_validators() {
        let h = catalog::group_algebra(&catalog::cyclic_group(2), FieldSpec::Rationals).unwrap();
        assert!(h.validate().is_ok());
        assert!(h.algebra().is_commutative());
        assert!(h.coalgebra().is_cocommutative());
    }

    #[test]
    fn sweedler_h4_is_hopf_and_broken_antipode_is_caught() {
        let h = catalog::sweedler_h4(FieldSpec::Rationals).unwrap();
        assert!(h.validate().is_ok());
        // alter S(x) = x: basis {1, g, x, gx}, x at index 2
        let mut s = h.antipode.clone();
        s.set(2, 2, h.field().one());
        s.set(3, 2, h.field().zero());
        let broken = HopfAlgebra::new(h.bialgebra.clone(), s);
        let err = broken.validate().unwrap_err();
        assert_eq!(err.indices, vec![2]);
        // m(S (x) 1)Delta(x) = x + gx on the altered antipode
        let f = h.field();
        let mut expected = zero_vec(f, 4);
        expected[2] = f.one();
        expected[3] = f.one();
        assert_eq!(err.lhs, expected);
    }

    #[test]
    fn dual_swaps_commutativity() {
        let h = catalog::group_algebra(&catalog::symmetric_group_s3(), FieldSpec::Rationals).unwrap();
        assert!(!h.algebra().is_commutative());
        assert!(h.coalgebra().is_cocommutative());
        let d = dual_hopf(&h).unwrap();
        assert!(d.algebra().is_commutative());
        assert!(!d.coalgebra().is_cocommutative());
    }

    #[test]
    fn double_dual_is_identity_on_tables() {
        for h in [
            catalog::group_algebra(&catalog::cyclic_group(3), FieldSpec::Prime(5)).unwrap(),
            catalog::sweedler_h4(FieldSpec::Prime(5)).unwrap(),
        ] {
            let dd = dual_hopf(&dual_hopf(&h).unwrap()).unwrap();
            assert_eq!(dd, h);
        }
    }

    #[test]
    fn dual_kc3_has_three_orthogonal_idempotents() {
        // functions on C3 under pointwise product
        let h = catalog::group_algebra(&catalog::cyclic_group(3), FieldSpec::Prime(7)).unwrap();
        let d = dual_hopf(&h).unwrap();
        let f = d.field();
        for i in 0..3 {
            for j in 0..3 {
                let prod = d.algebra().mul_basis(i, j);
                let expected = if i == j {
                    basis_vec(f, 3, i)
                } else {
                    zero_vec(f, 3)
                };
                assert_eq!(prod, expected);
            }
        }
        // idempotents sum to 1
        assert_eq!(
            d.algebra().unit,
            vec![f.one(), f.one(), f.one()]
        );
    }

    #[test]
    fn tensor_kc2_kc3_is_kc6() {
        let q = FieldSpec::Rationals;
        let c2 = catalog::group_algebra(&catalog::cyclic_group(2), q).unwrap();
        let c3 = catalog::group_algebra(&catalog::cyclic_group(3), q).unwrap();
        let t = tensor_hopf(&c2, &c3);
        assert!(t.validate().is_ok());
        // (g^i (x) h^j) are 6 group-likes forming a cyclic group of order 6:
        // the element g (x) h has order 6.
        let d = t.dim();
        let gen = basis_vec(q, d, flatten(1, 1, 3));
        let mut pow = t.algebra().unit.clone();
        let mut seen = Vec::new();
        for _ in 0..6 {
            pow = t.algebra().mul_vec(&pow, &gen);
            seen.push(pow.clone());
        }
        assert_eq!(pow, t.algebra().unit);
        seen.dedup();
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn tensor_with_k_is_identity_like() {
        let q = FieldSpec::Rationals;
        let h = catalog::sweedler_h4(q).unwrap();
        let k = catalog::ground_field_bialgebra(q);
        let t = tensor_bialgebra(&h.bialgebra, &k);
        assert_eq!(t.algebra.mult, h.bialgebra.algebra.mult);
        assert_eq!(t.coalgebra.comult, h.bialgebra.coalgebra.comult);
    }

    #[test]
    fn convolution_unit_law_and_antipode() {
        let q = FieldSpec::Rationals;
        let h = catalog::group_algebra(&catalog::cyclic_group(3), q).unwrap();
        let c = h.coalgebra();
        let a = h.algebra();
        let f = Matrix::from_fn(q, 3, 3, |i, j| q.from_i64((i * 3 + j) as i64 % 5));
        let e = convolution_unit(c, a);
        assert_eq!(convolve(c, a, &f, &e), f);
        assert_eq!(convolve(c, a, &e, &f), f);

        // id * id = eta eps on kC2 (antipode is the identity there)
        let h2 = catalog::group_algebra(&catalog::cyclic_group(2), q).unwrap();
        let id = Matrix::identity(q, 2);
        assert_eq!(
            convolve(h2.coalgebra(), h2.algebra(), &id, &id),
            convolution_unit(h2.coalgebra(), h2.algebra())
        );
    }

    #[test]
    fn convolution_on_dual_basis_of_kc2() {
        // on the dual basis, (e_g * e_g)(g) = 1 and (e_g * e_g)(1) = 0
        let q = FieldSpec::Rationals;
        let h = catalog::group_algebra(&catalog::cyclic_group(2), q).unwrap();
        let e_g = Matrix::from_fn(q, 1, 2, |_, j| if j == 1 { q.one() } else { q.zero() });
        let k_alg = Algebra::new(
            q,
            1,
            {
                let mut t = Tensor3::new(q, (1, 1, 1));
                t.set(0, 0, 0, q.one());
                t
            },
            vec![q.one()],
        );
        let conv = convolve(h.coalgebra(), &k_alg, &e_g, &e_g);
        assert!(conv.get(0, 0).is_zero());
        assert!(conv.get(0, 1).is_one());
    }

    #[test]
    fn convolution_inverse_of_identity_is_antipode() {
        let q = FieldSpec::Rationals;
        let h = catalog::sweedler_h4(q).unwrap();
        let s = solve_antipode(&h.bialgebra).unwrap();
        assert_eq!(s, h.antipode);
    }

    #[test]
    fn non_invertible_map_detected() {
        // psi: kC2 -> k with psi(1)=1, psi(g)=0 has no convolution inverse
        let q = FieldSpec::Rationals;
        let h = catalog::group_algebra(&catalog::cyclic_group(2), q).unwrap();
        let k_alg = catalog::ground_field_bialgebra(q).algebra;
        let psi = Matrix::from_fn(q, 1, 2, |_, j| if j == 0 { q.one() } else { q.zero() });
        assert!(convolution_inverse(h.coalgebra(), &k_alg, &psi).is_none());
    }

    #[test]
    fn antipode_anticommutes_with_commutators() {
        // S[x,y] = [S(y), S(x)] on all basis pairs of catalog Hopf algebras
        for h in [
            catalog::group_algebra(&catalog::symmetric_group_s3(), FieldSpec::Prime(5)).unwrap(),
            catalog::sweedler_h4(FieldSpec::Rationals).unwrap(),
        ] {
            let d = h.dim();
            for i in 0..d {
                for j in 0..d {
                    let x = basis_vec(h.field(), d, i);
                    let y = basis_vec(h.field(), d, j);
                    let lhs = h.antipode_vec(&h.algebra().commutator(&x, &y));
                    let rhs = h
                        .algebra()
                        .commutator(&h.antipode_vec(&y), &h.antipode_vec(&x));
                    assert_eq!(lhs, rhs, "at ({i},{j})");
                }
            }
        }
    }
}
