//! Commutator ideals, abelianization, cocommutative parts, and their
//! universal-property verifiers.
//!
//! The abelianization H_ab = H/I is the largest commutative quotient; the
//! cocommutative part H_c is the largest cocommutative subcoalgebra, computed
//! here by duality as the annihilator of the commutator ideal of the dual
//! algebra.

use crate::algebra::{Algebra, Bialgebra, Coalgebra, Counterexample, HopfAlgebra};
use crate::enumerate::{is_algebra_map, is_coalgebra_map};
use crate::field::Scalar;
use crate::linalg::{basis_vec, vec_add, vec_scale, vec_tensor, zero_vec, Matrix, Subspace, Tensor3};

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("map does not vanish on the ideal, so it does not factor")]
    DoesNotFactor,
    #[error("image is not contained in the cocommutative part")]
    ImageNotContained,
    #[error("internal consistency failure: {0}")]
    Internal(Counterexample),
    #[error("target is not commutative")]
    TargetNotCommutative,
    #[error("source is not cocommutative")]
    SourceNotCocommutative,
}

impl From<Counterexample> for StructureError {
    fn from(c: Counterexample) -> Self {
        StructureError::Internal(c)
    }
}

/// Smallest two-sided ideal containing the given vectors: span closure under
/// left and right multiplication by all basis elements, re-echelonized each
/// round until the dimension is stable.
pub fn ideal_closure(a: &Algebra, generators: &[Vec<Scalar>]) -> Subspace {
    let mut span = Subspace::from_vectors(a.field, a.dim, generators);
    loop {
        let before = span.dim();
        let mut rows: Vec<Vec<Scalar>> = (0..span.basis.rows).map(|i| span.basis.row(i)).collect();
        for r in 0..before {
            let v = span.basis.row(r);
            for k in 0..a.dim {
                let e = basis_vec(a.field, a.dim, k);
                rows.push(a.mul_vec(&e, &v));
                rows.push(a.mul_vec(&v, &e));
            }
        }
        span = Subspace::from_vectors(a.field, a.dim, &rows);
        if span.dim() == before {
            return span;
        }
    }
}

/// The ideal generated by all commutators [e_i, e_j].
pub fn commutator_ideal(a: &Algebra) -> Subspace {
    let mut gens = Vec::new();
    for i in 0..a.dim {
        for j in i + 1..a.dim {
            let c = a.commutator(&basis_vec(a.field, a.dim, i), &basis_vec(a.field, a.dim, j));
            gens.push(c);
        }
    }
    ideal_closure(a, &gens)
}

/// For a Hopf algebra the commutator ideal is also generated by the elements
/// `S(x_1)S(y_1)x_2y_2 - eps(xy) 1` over basis pairs.
pub fn hopf_ideal_alt_generators(h: &HopfAlgebra) -> Subspace {
    let d = h.dim();
    let field = h.field();
    let alg = h.algebra();
    let coa = h.coalgebra();
    let mut gens = Vec::new();
    for i in 0..d {
        let di = coa.comult_basis(i);
        for j in 0..d {
            let dj = coa.comult_basis(j);
            let mut acc = zero_vec(field, d);
            for ii in 0..d * d {
                if di[ii].is_zero() {
                    continue;
                }
                let (x1, x2) = crate::linalg::unflatten(ii, d);
                for jj in 0..d * d {
                    if dj[jj].is_zero() {
                        continue;
                    }
                    let (y1, y2) = crate::linalg::unflatten(jj, d);
                    let term = alg.mul_vec(
                        &alg.mul_vec(
                            &h.antipode.col(x1),
                            &h.antipode.col(y1),
                        ),
                        &alg.mul_basis(x2, y2),
                    );
                    acc = vec_add(&acc, &vec_scale(&term, &di[ii].mul(&dj[jj])));
                }
            }
            let eps_xy = coa.counit_vec(&alg.mul_basis(i, j));
            let sub = vec_scale(&alg.unit, &eps_xy);
            gens.push(crate::linalg::vec_sub(&acc, &sub));
        }
    }
    ideal_closure(alg, &gens)
}

/// A quotient H/I with projection and a chosen linear section.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    pub ideal: Subspace,
    /// (quotient dim) x (original dim)
    pub projection: Matrix,
    /// (original dim) x (quotient dim); columns are coset representatives
    pub section: Matrix,
    pub quotient: Bialgebra,
    pub quotient_antipode: Option<Matrix>,
}

impl QuotientPresentation {
    pub fn quotient_hopf(&self) -> Option<HopfAlgebra> {
        self.quotient_antipode
            .clone()
            .map(|s| HopfAlgebra::new(self.quotient.clone(), s))
    }
}

fn projection_for(ideal: &Subspace, reps: &[Vec<Scalar>], dim: usize) -> (Matrix, Matrix) {
    let field = ideal.field();
    let q = reps.len();
    let r = ideal.dim();
    // columns: reps then ideal basis
    let m = Matrix::from_fn(field, dim, q + r, |i, j| {
        if j < q {
            reps[j][i].clone()
        } else {
            ideal.basis.get(j - q, i).clone()
        }
    });
    let mut projection = Matrix::zero(field, q, dim);
    for i in 0..dim {
        let (z, _) = m.solve(&basis_vec(field, dim, i)).expect("reps + ideal span the space");
        for row in 0..q {
            projection.set(row, i, z[row].clone());
        }
    }
    let section = Matrix::from_fn(field, dim, q, |i, j| reps[j][i].clone());
    (projection, section)
}

/// Verify the comultiplication identity
/// `Delta [x,y] = [x_1,y_1] (x) x_2 y_2 + y_1 x_1 (x) [x_2,y_2]`
/// on all basis pairs; this is what makes the commutator ideal a biideal.
pub fn verify_commutator_comult_identity(b: &Bialgebra) -> crate::algebra::Check {
    let d = b.dim();
    let field = b.field();
    for i in 0..d {
        for j in 0..d {
            let x = basis_vec(field, d, i);
            let y = basis_vec(field, d, j);
            let lhs = b.coalgebra.comult_vec(&b.algebra.commutator(&x, &y));
            let di = b.coalgebra.comult_basis(i);
            let dj = b.coalgebra.comult_basis(j);
            let mut rhs = zero_vec(field, d * d);
            for ii in 0..d * d {
                if di[ii].is_zero() {
                    continue;
                }
                let (x1, x2) = crate::linalg::unflatten(ii, d);
                for jj in 0..d * d {
                    if dj[jj].is_zero() {
                        continue;
                    }
                    let (y1, y2) = crate::linalg::unflatten(jj, d);
                    let c = di[ii].mul(&dj[jj]);
                    let t1 = vec_tensor(
                        &b.algebra.commutator(
                            &basis_vec(field, d, x1),
                            &basis_vec(field, d, y1),
                        ),
                        &b.algebra.mul_basis(x2, y2),
                        field,
                    );
                    let t2 = vec_tensor(
                        &b.algebra.mul_basis(y1, x1),
                        &b.algebra.commutator(
                            &basis_vec(field, d, x2),
                            &basis_vec(field, d, y2),
                        ),
                        field,
                    );
                    rhs = vec_add(&rhs, &vec_scale(&vec_add(&t1, &t2), &c));
                }
            }
            if lhs != rhs {
                return Err(Counterexample {
                    law: "commutator comultiplication identity".into(),
                    indices: vec![i, j],
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(())
}

/// Abelianization H_ab = H/I. The quotient is validated as a commutative
/// bialgebra (Hopf algebra when an antipode is given), the projection as a
/// bialgebra map, and the biideal properties of I are checked explicitly.
pub fn abelianization(
    b: &Bialgebra,
    antipode: Option<&Matrix>,
) -> Result<QuotientPresentation, StructureError> {
    let d = b.dim();
    let field = b.field();
    let ideal = commutator_ideal(&b.algebra);

    verify_commutator_comult_identity(b)?;
    // eps(I) = 0
    for r in 0..ideal.basis.rows {
        if !b.coalgebra.counit_vec(&ideal.basis.row(r)).is_zero() {
            return Err(StructureError::Internal(Counterexample {
                law: "counit vanishes on commutator ideal".into(),
                indices: vec![r],
                lhs: vec![b.coalgebra.counit_vec(&ideal.basis.row(r))],
                rhs: vec![field.zero()],
            }));
        }
    }
    let reps = ideal
        .quotient_basis(&Subspace::full(field, d))
        .expect("quotient of the full space");
    let q = reps.len();
    let (projection, section) = projection_for(&ideal, &reps, d);

    // Delta(I) inside I (x) H + H (x) I, which is the kernel of the
    // projection applied to both legs
    let pp = projection.kronecker(&projection);
    for r in 0..ideal.basis.rows {
        let dv = b.coalgebra.comult_vec(&ideal.basis.row(r));
        if !crate::linalg::vec_is_zero(&pp.apply(&dv)) {
            return Err(StructureError::Internal(Counterexample {
                law: "comultiplication maps ideal into mixed tensor ideal".into(),
                indices: vec![r],
                lhs: dv,
                rhs: zero_vec(field, d * d),
            }));
        }
    }
    // antipode descends
    if let Some(s) = antipode {
        for r in 0..ideal.basis.rows {
            let sv = s.apply(&ideal.basis.row(r));
            if !ideal.contains(&sv) {
                return Err(StructureError::Internal(Counterexample {
                    law: "antipode preserves commutator ideal".into(),
                    indices: vec![r],
                    lhs: sv,
                    rhs: zero_vec(field, d),
                }));
            }
        }
    }

    let mut mult = Tensor3::new(field, (q, q, q));
    for i in 0..q {
        for j in 0..q {
            let prod = projection.apply(&b.algebra.mul_vec(&section.col(i), &section.col(j)));
            for (k, v) in prod.into_iter().enumerate() {
                mult.set(i, j, k, v);
            }
        }
    }
    let unit = projection.apply(&b.algebra.unit);
    let mut comult = Tensor3::new(field, (q, q, q));
    for i in 0..q {
        let dv = pp.apply(&b.coalgebra.comult_vec(&section.col(i)));
        for idx in 0..q * q {
            if !dv[idx].is_zero() {
                let (j, k) = crate::linalg::unflatten(idx, q);
                comult.set(i, j, k, dv[idx].clone());
            }
        }
    }
    let counit: Vec<Scalar> = (0..q).map(|i| b.coalgebra.counit_vec(&section.col(i))).collect();
    let quotient = Bialgebra::new(
        Algebra::new(field, q, mult, unit),
        Coalgebra::new(field, q, comult, counit),
    )
    .validated()?;
    if !quotient.algebra.is_commutative() {
        return Err(StructureError::Internal(Counterexample {
            law: "abelianization is commutative".into(),
            indices: vec![],
            lhs: vec![],
            rhs: vec![],
        }));
    }
    if !is_algebra_map(&b.algebra, &quotient.algebra, &projection)
        || !is_coalgebra_map(&b.coalgebra, &quotient.coalgebra, &projection)
    {
        return Err(StructureError::Internal(Counterexample {
            law: "projection is a bialgebra map".into(),
            indices: vec![],
            lhs: vec![],
            rhs: vec![],
        }));
    }
    let quotient_antipode = match antipode {
        Some(s) => {
            let sq = projection.mul(s).mul(&section);
            HopfAlgebra::new(quotient.clone(), sq.clone()).validate()?;
            Some(sq)
        }
        None => None,
    };
    Ok(QuotientPresentation {
        ideal,
        projection,
        section,
        quotient,
        quotient_antipode,
    })
}

pub fn abelianization_hopf(h: &HopfAlgebra) -> Result<QuotientPresentation, StructureError> {
    abelianization(&h.bialgebra, Some(&h.antipode))
}

/// Factor an algebra map f: H -> K with commutative K through the
/// abelianization: the unique f_bar with `f_bar . projection = f`.
pub fn factor_through_ab(
    f: &Matrix,
    qp: &QuotientPresentation,
    target: &Algebra,
) -> Result<Matrix, StructureError> {
    if !target.is_commutative() {
        return Err(StructureError::TargetNotCommutative);
    }
    for r in 0..qp.ideal.basis.rows {
        if !crate::linalg::vec_is_zero(&f.apply(&qp.ideal.basis.row(r))) {
            return Err(StructureError::DoesNotFactor);
        }
    }
    let fbar = f.mul(&qp.section);
    // f_bar . pi = f since f kills the ideal; assert anyway
    if fbar.mul(&qp.projection) != *f {
        return Err(StructureError::DoesNotFactor);
    }
    Ok(fbar)
}

/// A subcoalgebra with its inclusion, plus bialgebra/Hopf structure when the
/// ambient carrier has one and the subspace is closed for it.
#[derive(Clone, Debug)]
pub struct SubcoalgebraPresentation {
    /// (ambient dim) x (sub dim); columns are the sub basis vectors
    pub inclusion: Matrix,
    pub sub: Coalgebra,
    pub sub_bialgebra: Option<Bialgebra>,
    pub sub_antipode: Option<Matrix>,
}

impl SubcoalgebraPresentation {
    pub fn dim(&self) -> usize {
        self.sub.dim
    }

    pub fn span(&self, ambient: usize) -> Subspace {
        let rows: Vec<Vec<Scalar>> = (0..self.sub.dim).map(|j| self.inclusion.col(j)).collect();
        Subspace::from_vectors(self.sub.field, ambient, &rows)
    }
}

/// Express each of `vectors` (length n^2, flattened) in the basis of
/// span (x) span; None if not contained.
fn express_in_tensor_square(span: &Matrix, v: &[Scalar]) -> Option<Vec<Scalar>> {
    // span: s x n rows; kron(span, span): s^2 x n^2
    let kk = span.kronecker(span);
    let (x, _) = kk.transpose().solve(v).ok()?;
    Some(x)
}

/// Largest cocommutative subcoalgebra H_c, computed as the annihilator of
/// the commutator ideal of the dual algebra.
pub fn cocommutative_part(
    c: &Coalgebra,
    bialgebra: Option<&Bialgebra>,
    antipode: Option<&Matrix>,
) -> Result<SubcoalgebraPresentation, StructureError> {
    let d = c.dim;
    let field = c.field;
    // dual algebra: mult[i,j,k] = comult[k,i,j], unit = counit
    let mut dual_mult = Tensor3::new(field, (d, d, d));
    for ((k, i, j), v) in c.comult.iter() {
        dual_mult.set(*i, *j, *k, v.clone());
    }
    let dual_alg = Algebra::new(field, d, dual_mult, c.counit.clone());
    let ideal = commutator_ideal(&dual_alg);
    // annihilator: vectors killed by every functional in the ideal
    let sub_span = Subspace::from_matrix_rows(d, &ideal.basis.kernel());
    let s = sub_span.dim();
    let inclusion = Matrix::from_fn(field, d, s, |i, j| sub_span.basis.get(j, i).clone());

    // restrict the comultiplication
    let mut comult = Tensor3::new(field, (s, s, s));
    for i in 0..s {
        let dv = c.comult_vec(&inclusion.col(i));
        let x = express_in_tensor_square(&sub_span.basis, &dv).ok_or_else(|| {
            StructureError::Internal(Counterexample {
                law: "cocommutative part is a subcoalgebra".into(),
                indices: vec![i],
                lhs: dv.clone(),
                rhs: zero_vec(field, d * d),
            })
        })?;
        for idx in 0..s * s {
            if !x[idx].is_zero() {
                let (j, k) = crate::linalg::unflatten(idx, s);
                comult.set(i, j, k, x[idx].clone());
            }
        }
    }
    let counit: Vec<Scalar> = (0..s).map(|i| c.counit_vec(&inclusion.col(i))).collect();
    let sub = Coalgebra::new(field, s, comult, counit).validated()?;
    if !sub.is_cocommutative() {
        return Err(StructureError::Internal(Counterexample {
            law: "cocommutative part is cocommutative".into(),
            indices: vec![],
            lhs: vec![],
            rhs: vec![],
        }));
    }

    // bialgebra / Hopf structure restricts when present
    let sub_bialgebra = match bialgebra {
        Some(b) => {
            let mut mult = Tensor3::new(field, (s, s, s));
            for i in 0..s {
                for j in 0..s {
                    let prod = b.algebra.mul_vec(&inclusion.col(i), &inclusion.col(j));
                    let (x, _) = sub_span
                        .basis
                        .transpose()
                        .solve(&prod)
                        .map_err(|_| {
                            StructureError::Internal(Counterexample {
                                law: "cocommutative part closed under multiplication".into(),
                                indices: vec![i, j],
                                lhs: prod.clone(),
                                rhs: zero_vec(field, d),
                            })
                        })?;
                    for (k, v) in x.into_iter().enumerate() {
                        mult.set(i, j, k, v);
                    }
                }
            }
            let (unit, _) = sub_span.basis.transpose().solve(&b.algebra.unit).map_err(|_| {
                StructureError::Internal(Counterexample {
                    law: "cocommutative part contains the unit".into(),
                    indices: vec![],
                    lhs: b.algebra.unit.clone(),
                    rhs: zero_vec(field, d),
                })
            })?;
            Some(
                Bialgebra::new(Algebra::new(field, s, mult, unit), sub.clone())
                    .validated()?,
            )
        }
        None => None,
    };
    let sub_antipode = match (antipode, &sub_bialgebra) {
        (Some(sm), Some(sb)) => {
            let mut out = Matrix::zero(field, s, s);
            for i in 0..s {
                let sv = sm.apply(&inclusion.col(i));
                let (x, _) = sub_span.basis.transpose().solve(&sv).map_err(|_| {
                    StructureError::Internal(Counterexample {
                        law: "antipode preserves cocommutative part".into(),
                        indices: vec![i],
                        lhs: sv.clone(),
                        rhs: zero_vec(field, d),
                    })
                })?;
                for (k, v) in x.into_iter().enumerate() {
                    out.set(k, i, v);
                }
            }
            HopfAlgebra::new(sb.clone(), out.clone()).validate()?;
            Some(out)
        }
        _ => None,
    };
    Ok(SubcoalgebraPresentation {
        inclusion,
        sub,
        sub_bialgebra,
        sub_antipode,
    })
}

pub fn cocommutative_part_hopf(h: &HopfAlgebra) -> Result<SubcoalgebraPresentation, StructureError> {
    cocommutative_part(h.coalgebra(), Some(&h.bialgebra), Some(&h.antipode))
}

/// Corestrict a coalgebra map f: K -> H with cocommutative K onto H_c:
/// the unique f_bar with `inclusion . f_bar = f`.
pub fn corestrict_to_cc(
    f: &Matrix,
    source: &Coalgebra,
    sub: &SubcoalgebraPresentation,
    ambient_dim: usize,
) -> Result<Matrix, StructureError> {
    if !source.is_cocommutative() {
        return Err(StructureError::SourceNotCocommutative);
    }
    let span = sub.span(ambient_dim);
    let field = source.field;
    let mut out = Matrix::zero(field, sub.dim(), source.dim);
    for i in 0..source.dim {
        let v = f.col(i);
        if !span.contains(&v) {
            return Err(StructureError::ImageNotContained);
        }
        let (x, _) = span
            .basis
            .transpose()
            .solve(&v)
            .map_err(|_| StructureError::ImageNotContained)?;
        for (k, val) in x.into_iter().enumerate() {
            out.set(k, i, val);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::field::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn commutative_algebra_has_zero_commutator_ideal() {
        let h = catalog::group_algebra(&catalog::cyclic_group(6), q()).unwrap();
        assert_eq!(commutator_ideal(h.algebra()).dim(), 0);
    }

    #[test]
    fn ks3_commutator_ideal_dim_4() {
        let h = catalog::group_algebra(&catalog::symmetric_group_s3(), q()).unwrap();
        assert_eq!(commutator_ideal(h.algebra()).dim(), 4);
    }

    #[test]
    fn h4_commutator_ideal_is_span_x_gx() {
        let h = catalog::sweedler_h4(q()).unwrap();
        let i = commutator_ideal(h.algebra());
        assert_eq!(i.dim(), 2);
        assert!(i.contains(&basis_vec(q(), 4, 2)));
        assert!(i.contains(&basis_vec(q(), 4, 3)));
    }

    #[test]
    fn alt_generators_agree_with_commutator_ideal() {
        for h in [
            catalog::group_algebra(&catalog::cyclic_group(2), q()).unwrap(),
            catalog::sweedler_h4(q()).unwrap(),
            catalog::group_algebra(&catalog::symmetric_group_s3(), q()).unwrap(),
        ] {
            assert_eq!(hopf_ideal_alt_generators(&h), commutator_ideal(h.algebra()));
        }
    }

    #[test]
    fn abelianization_of_ks3_is_kc2() {
        let h = catalog::group_algebra(&catalog::symmetric_group_s3(), q()).unwrap();
        let ab = abelianization_hopf(&h).unwrap();
        assert_eq!(ab.quotient.dim(), 2);
        assert!(ab.quotient.algebra.is_commutative());
        assert!(ab.quotient_hopf().unwrap().validate().is_ok());
    }

    #[test]
    fn abelianization_of_commutative_is_identity() {
        let h = catalog::group_algebra(&catalog::cyclic_group(3), q()).unwrap();
        let ab = abelianization_hopf(&h).unwrap();
        assert_eq!(ab.quotient.dim(), 3);
        assert_eq!(ab.projection, Matrix::identity(q(), 3));
    }

    #[test]
    fn abelianization_of_h4() {
        let h = catalog::sweedler_h4(q()).unwrap();
        let ab = abelianization_hopf(&h).unwrap();
        assert_eq!(ab.quotient.dim(), 2);
    }

    #[test]
    fn sign_character_factors_through_ab() {
        let h = catalog::group_algebra(&catalog::symmetric_group_s3(), q()).unwrap();
        let ab = abelianization_hopf(&h).unwrap();
        let perms = {
            // recompute signs in basis order used by the catalog
            let mut out = vec![vec![]];
            for _ in 0..3 {
                let mut next = Vec::new();
                for p in out {
                    for v in 0..3usize {
                        if !p.contains(&v) {
                            let mut qq: Vec<usize> = p.clone();
                            qq.push(v);
                            next.push(qq);
                        }
                    }
                }
                out = next;
            }
            out.sort();
            out
        };
        let sign = Matrix::from_fn(q(), 1, 6, |_, j| {
            let mut inv = 0;
            for a in 0..3 {
                for b in a + 1..3 {
                    if perms[j][a] > perms[j][b] {
                        inv += 1;
                    }
                }
            }
            if inv % 2 == 0 {
                q().one()
            } else {
                q().one().neg()
            }
        });
        let k = catalog::ground_field_bialgebra(q()).algebra;
        let fbar = factor_through_ab(&sign, &ab, &k).unwrap();
        assert_eq!(fbar.mul(&ab.projection), sign);

        // a map separating conjugate transpositions does not factor
        let bad = Matrix::from_fn(q(), 1, 6, |_, j| q().from_i64(j as i64));
        assert_eq!(
            factor_through_ab(&bad, &ab, &k).unwrap_err(),
            StructureError::DoesNotFactor
        );
    }

    #[test]
    fn identity_on_commutative_factors_as_identity() {
        let h = catalog::group_algebra(&catalog::cyclic_group(2), q()).unwrap();
        let ab = abelianization_hopf(&h).unwrap();
        let id = Matrix::identity(q(), 2);
        let fbar = factor_through_ab(&id, &ab, &h.bialgebra.algebra).unwrap();
        assert_eq!(fbar.mul(&ab.projection), id);
    }

    #[test]
    fn cocommutative_part_of_cocommutative_is_everything() {
        let h = catalog::group_algebra(&catalog::symmetric_group_s3(), q()).unwrap();
        let cc = cocommutative_part_hopf(&h).unwrap();
        assert_eq!(cc.dim(), 6);
    }

    #[test]
    fn cocommutative_part_of_h4_is_span_1_g() {
        let h = catalog::sweedler_h4(q()).unwrap();
        let cc = cocommutative_part_hopf(&h).unwrap();
        assert_eq!(cc.dim(), 2);
        let span = cc.span(4);
        assert!(span.contains(&basis_vec(q(), 4, 0)));
        assert!(span.contains(&basis_vec(q(), 4, 1)));
        assert!(cc.sub_bialgebra.is_some());
        assert!(cc.sub_antipode.is_some());
    }

    #[test]
    fn cocommutative_part_of_dual_ks3_dim_2() {
        let h = catalog::group_algebra(&catalog::symmetric_group_s3(), FieldSpec::Prime(5)).unwrap();
        let d = crate::algebra::dual_hopf(&h).unwrap();
        let cc = cocommutative_part_hopf(&d).unwrap();
        assert_eq!(cc.dim(), 2);
    }

    #[test]
    fn cocommutative_part_is_idempotent() {
        for h in [
            catalog::sweedler_h4(q()).unwrap(),
            catalog::group_algebra(&catalog::symmetric_group_s3(), q()).unwrap(),
        ] {
            let cc = cocommutative_part_hopf(&h).unwrap();
            let again = cocommutative_part(&cc.sub, cc.sub_bialgebra.as_ref(), cc.sub_antipode.as_ref())
                .unwrap();
            assert_eq!(again.dim(), cc.dim());
            assert_eq!(again.inclusion, Matrix::identity(q(), cc.dim()));
        }
    }

    #[test]
    fn duality_bridge_h4() {
        // dual(abelianization(dual H)) has the same structure tables as H_c
        let h = catalog::sweedler_h4(q()).unwrap();
        let dual = crate::algebra::dual_hopf(&h).unwrap();
        let ab = abelianization_hopf(&dual).unwrap();
        let bridged = crate::algebra::dual_hopf(&ab.quotient_hopf().unwrap()).unwrap();
        let cc = cocommutative_part_hopf(&h).unwrap();
        let cc_hopf = HopfAlgebra::new(cc.sub_bialgebra.clone().unwrap(), cc.sub_antipode.clone().unwrap());
        // same dimension and isomorphic structure: both are kC2-like; compare
        // via structure-table equality after matching group-likes
        assert_eq!(bridged.dim(), cc_hopf.dim());
        assert!(bridged.validate().is_ok());
        assert!(cc_hopf.validate().is_ok());
    }

    #[test]
    fn corestriction_examples() {
        let h = catalog::sweedler_h4(q()).unwrap();
        let cc = cocommutative_part_hopf(&h).unwrap();
        // inclusion of span{1, g} corestricts to an iso onto (H4)_c
        let f = Matrix::from_fn(q(), 4, 2, |i, j| {
            if (j == 0 && i == 0) || (j == 1 && i == 1) {
                q().one()
            } else {
                q().zero()
            }
        });
        let kc2 = catalog::group_algebra(&catalog::cyclic_group(2), q()).unwrap();
        let fbar = corestrict_to_cc(&f, kc2.coalgebra(), &cc, 4).unwrap();
        assert_eq!(fbar.rank(), 2);

        // x is not in H_c: a map hitting x must be rejected
        let bad = Matrix::from_fn(q(), 4, 2, |i, j| {
            if (j == 0 && i == 0) || (j == 1 && i == 2) {
                q().one()
            } else {
                q().zero()
            }
        });
        assert_eq!(
            corestrict_to_cc(&bad, kc2.coalgebra(), &cc, 4).unwrap_err(),
            StructureError::ImageNotContained
        );
    }

    #[test]
    fn naive_subcoalgebra_sweep_confirms_h4_cc_over_f5() {
        // oracle: enumerate every subspace of F_5^4 via rref forms, keep the
        // cocommutative subcoalgebras, and sum them
        let f5 = FieldSpec::Prime(5);
        let h = catalog::sweedler_h4(f5).unwrap();
        let c = h.coalgebra();
        let mut best = Subspace::zero(f5, 4);
        for sub in all_subspaces(f5, 4) {
            let is_subco = (0..sub.basis.rows).all(|r| {
                let dv = c.comult_vec(&sub.basis.row(r));
                super::express_in_tensor_square(&sub.basis, &dv).is_some()
            });
            let is_cocomm = (0..sub.basis.rows).all(|r| {
                let dv = c.comult_vec(&sub.basis.row(r));
                (0..4usize).all(|a| (0..4usize).all(|b| dv[a * 4 + b] == dv[b * 4 + a]))
            });
            if is_subco && is_cocomm {
                best = best.sum(&sub).unwrap();
            }
        }
        let cc = cocommutative_part_hopf(&h).unwrap();
        assert_eq!(best, cc.span(4));
    }

    /// All subspaces of F_p^n by enumerating reduced row-echelon forms.
    fn all_subspaces(field: FieldSpec, n: usize) -> Vec<Subspace> {
        let FieldSpec::Prime(p) = field else { panic!() };
        let mut out = vec![Subspace::zero(field, n)];
        // choose pivot columns as a bitmask, then fill free entries
        for mask in 1u32..(1 << n) {
            let pivots: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            let k = pivots.len();
            // free positions: row r, column c where c > pivots[r] and c not a pivot
            let mut free: Vec<(usize, usize)> = Vec::new();
            for r in 0..k {
                for c in 0..n {
                    if c > pivots[r] && !pivots.contains(&c) {
                        free.push((r, c));
                    }
                }
            }
            let total = (p as u64).pow(free.len() as u32);
            for code in 0..total {
                let mut m = Matrix::zero(field, k, n);
                for (r, &pc) in pivots.iter().enumerate() {
                    m.set(r, pc, field.one());
                }
                let mut c = code;
                for &(r, col) in &free {
                    m.set(r, col, field.from_i64((c % p as u64) as i64));
                    c /= p as u64;
                }
                out.push(Subspace::from_matrix_rows(n, &m));
            }
        }
        out
    }
}
