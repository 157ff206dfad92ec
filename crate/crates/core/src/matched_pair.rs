//! Abelian matched pairs of cocommutative Hopf algebras, the bismash
//! product, skew bimeasurings, and their convolution group.
//!
//! The two actions are written `n(t)` (landing in T) and `n^t` (landing in
//! N), following the usage in the skew-bimeasuring equations. The bismash
//! carrier is T (x) N with the identification of the product nt with the
//! tensor n (x) t handled by an explicit linear map.

use crate::algebra::{
    convolution_inverse, Algebra, Bialgebra, BilinearPairing, Check, Coalgebra, Counterexample,
    HopfAlgebra,
};
use crate::catalog::{CatalogError, GroupTable};
use crate::enumerate::{self, EnumError};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{
    basis_vec, flatten, unflatten, vec_add, vec_scale, vec_tensor, zero_vec, Matrix, Tensor3,
};
use crate::measuring::MeasuringWitness;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum MatchedPairError {
    #[error("carriers must be cocommutative Hopf algebras over one field")]
    BadCarriers,
    #[error("action tables have the wrong shape")]
    ShapeMismatch,
    #[error("matched pair axiom failed: {0}")]
    AxiomFailed(Counterexample),
    #[error("not an exact factorization")]
    NotExactFactorization,
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
}

/// Nonzero comultiplication terms of a basis vector, as (left, right, coeff).
fn comult_pairs(c: &Coalgebra, i: usize) -> Vec<(usize, usize, Scalar)> {
    let d = c.dim;
    let dv = c.comult_basis(i);
    let mut out = Vec::new();
    for idx in 0..d * d {
        if !dv[idx].is_zero() {
            let (a, b) = unflatten(idx, d);
            out.push((a, b, dv[idx].clone()));
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct MatchedPair {
    pub n: HopfAlgebra,
    pub t: HopfAlgebra,
    /// (n, t) -> n(t), an element of T
    pub act_on_t: BilinearPairing,
    /// (n, t) -> n^t, an element of N
    pub act_on_n: BilinearPairing,
}

impl MatchedPair {
    pub fn field(&self) -> FieldSpec {
        self.n.field()
    }

    pub fn act_t(&self, nv: &[Scalar], tv: &[Scalar]) -> Vec<Scalar> {
        self.act_on_t.apply(nv, tv)
    }

    pub fn act_n(&self, nv: &[Scalar], tv: &[Scalar]) -> Vec<Scalar> {
        self.act_on_n.apply(nv, tv)
    }
}

/// The trivial pair: n(t) = eps(n) t and n^t = eps(t) n.
pub fn trivial_pair(n: &HopfAlgebra, t: &HopfAlgebra) -> MatchedPair {
    let field = n.field();
    let act_on_t = BilinearPairing::from_fn(field, n.dim(), t.dim(), t.dim(), |i, j| {
        vec_scale(&basis_vec(field, t.dim(), j), &n.coalgebra().counit[i])
    });
    let act_on_n = BilinearPairing::from_fn(field, n.dim(), t.dim(), n.dim(), |i, j| {
        vec_scale(&basis_vec(field, n.dim(), i), &t.coalgebra().counit[j])
    });
    MatchedPair {
        n: n.clone(),
        t: t.clone(),
        act_on_t,
        act_on_n,
    }
}

pub fn validate_matched_pair(mp: &MatchedPair) -> Result<(), MatchedPairError> {
    let n = &mp.n;
    let t = &mp.t;
    if n.field() != t.field()
        || !n.coalgebra().is_cocommutative()
        || !t.coalgebra().is_cocommutative()
    {
        return Err(MatchedPairError::BadCarriers);
    }
    n.validate().map_err(MatchedPairError::AxiomFailed)?;
    t.validate().map_err(MatchedPairError::AxiomFailed)?;
    let dn = n.dim();
    let dt = t.dim();
    if mp.act_on_t.dim_x != dn
        || mp.act_on_t.dim_y != dt
        || mp.act_on_t.dim_a != dt
        || mp.act_on_n.dim_x != dn
        || mp.act_on_n.dim_y != dt
        || mp.act_on_n.dim_a != dn
    {
        return Err(MatchedPairError::ShapeMismatch);
    }
    let field = mp.field();
    let fail = |law: &str, indices: Vec<usize>, lhs: Vec<Scalar>, rhs: Vec<Scalar>| {
        Err(MatchedPairError::AxiomFailed(Counterexample {
            law: law.into(),
            indices,
            lhs,
            rhs,
        }))
    };

    // (i) T is an N-module coalgebra with n(1) = eps(n) 1
    for k in 0..dt {
        let e = basis_vec(field, dt, k);
        let lhs = mp.act_t(&n.algebra().unit, &e);
        if lhs != e {
            return fail("1(t) = t", vec![k], lhs, e);
        }
    }
    for i in 0..dn {
        for j in 0..dn {
            for k in 0..dt {
                let lhs = mp.act_t(&n.algebra().mul_basis(i, j), &basis_vec(field, dt, k));
                let rhs = mp.act_t(
                    &basis_vec(field, dn, i),
                    &mp.act_t(&basis_vec(field, dn, j), &basis_vec(field, dt, k)),
                );
                if lhs != rhs {
                    return fail("(nm)(t) = n(m(t))", vec![i, j, k], lhs, rhs);
                }
            }
        }
    }
    for i in 0..dn {
        for k in 0..dt {
            let img = mp.act_t(&basis_vec(field, dn, i), &basis_vec(field, dt, k));
            let lhs = t.coalgebra().comult_vec(&img);
            let mut rhs = zero_vec(field, dt * dt);
            for (n1, n2, cn) in comult_pairs(n.coalgebra(), i) {
                for (t1, t2, ct) in comult_pairs(t.coalgebra(), k) {
                    let a = mp.act_t(&basis_vec(field, dn, n1), &basis_vec(field, dt, t1));
                    let b = mp.act_t(&basis_vec(field, dn, n2), &basis_vec(field, dt, t2));
                    rhs = vec_add(&rhs, &vec_scale(&vec_tensor(&a, &b, field), &cn.mul(&ct)));
                }
            }
            if lhs != rhs {
                return fail("Delta(n(t)) = n_1(t_1) (x) n_2(t_2)", vec![i, k], lhs, rhs);
            }
            let le = t.coalgebra().counit_vec(&img);
            let re = n.coalgebra().counit[i].mul(&t.coalgebra().counit[k]);
            if le != re {
                return fail("eps(n(t)) = eps(n) eps(t)", vec![i, k], vec![le], vec![re]);
            }
        }
        let lhs = mp.act_t(&basis_vec(field, dn, i), &t.algebra().unit);
        let rhs = vec_scale(&t.algebra().unit, &n.coalgebra().counit[i]);
        if lhs != rhs {
            return fail("n(1) = eps(n) 1", vec![i], lhs, rhs);
        }
    }

    // (ii) N is a right T-module coalgebra with 1^t = eps(t) 1
    for i in 0..dn {
        let e = basis_vec(field, dn, i);
        let lhs = mp.act_n(&e, &t.algebra().unit);
        if lhs != e {
            return fail("n^1 = n", vec![i], lhs, e);
        }
    }
    for i in 0..dn {
        for k in 0..dt {
            for l in 0..dt {
                let lhs = mp.act_n(&basis_vec(field, dn, i), &t.algebra().mul_basis(k, l));
                let rhs = mp.act_n(
                    &mp.act_n(&basis_vec(field, dn, i), &basis_vec(field, dt, k)),
                    &basis_vec(field, dt, l),
                );
                if lhs != rhs {
                    return fail("n^(ts) = (n^t)^s", vec![i, k, l], lhs, rhs);
                }
            }
        }
    }
    for i in 0..dn {
        for k in 0..dt {
            let img = mp.act_n(&basis_vec(field, dn, i), &basis_vec(field, dt, k));
            let lhs = n.coalgebra().comult_vec(&img);
            let mut rhs = zero_vec(field, dn * dn);
            for (n1, n2, cn) in comult_pairs(n.coalgebra(), i) {
                for (t1, t2, ct) in comult_pairs(t.coalgebra(), k) {
                    let a = mp.act_n(&basis_vec(field, dn, n1), &basis_vec(field, dt, t1));
                    let b = mp.act_n(&basis_vec(field, dn, n2), &basis_vec(field, dt, t2));
                    rhs = vec_add(&rhs, &vec_scale(&vec_tensor(&a, &b, field), &cn.mul(&ct)));
                }
            }
            if lhs != rhs {
                return fail("Delta(n^t) = n_1^(t_1) (x) n_2^(t_2)", vec![i, k], lhs, rhs);
            }
            let le = n.coalgebra().counit_vec(&img);
            let re = n.coalgebra().counit[i].mul(&t.coalgebra().counit[k]);
            if le != re {
                return fail("eps(n^t) = eps(n) eps(t)", vec![i, k], vec![le], vec![re]);
            }
        }
    }
    for k in 0..dt {
        let lhs = mp.act_n(&n.algebra().unit, &basis_vec(field, dt, k));
        let rhs = vec_scale(&n.algebra().unit, &t.coalgebra().counit[k]);
        if lhs != rhs {
            return fail("1^t = eps(t) 1", vec![k], lhs, rhs);
        }
    }

    // (iii) n(ts) = n_1(t_1) . (n_2^(t_2))(s)
    for i in 0..dn {
        for k in 0..dt {
            for l in 0..dt {
                let lhs = mp.act_t(&basis_vec(field, dn, i), &t.algebra().mul_basis(k, l));
                let mut rhs = zero_vec(field, dt);
                for (n1, n2, cn) in comult_pairs(n.coalgebra(), i) {
                    for (t1, t2, ct) in comult_pairs(t.coalgebra(), k) {
                        let a = mp.act_t(&basis_vec(field, dn, n1), &basis_vec(field, dt, t1));
                        let twisted = mp.act_n(&basis_vec(field, dn, n2), &basis_vec(field, dt, t2));
                        let b = mp.act_t(&twisted, &basis_vec(field, dt, l));
                        rhs = vec_add(&rhs, &vec_scale(&t.algebra().mul_vec(&a, &b), &cn.mul(&ct)));
                    }
                }
                if lhs != rhs {
                    return fail("n(ts) = n_1(t_1) (n_2^(t_2))(s)", vec![i, k, l], lhs, rhs);
                }
            }
        }
    }

    // (iv) (nm)^t = n^(m_1(t_1)) . m_2^(t_2)
    for i in 0..dn {
        for j in 0..dn {
            for k in 0..dt {
                let lhs = mp.act_n(&n.algebra().mul_basis(i, j), &basis_vec(field, dt, k));
                let mut rhs = zero_vec(field, dn);
                for (m1, m2, cm) in comult_pairs(n.coalgebra(), j) {
                    for (t1, t2, ct) in comult_pairs(t.coalgebra(), k) {
                        let tw = mp.act_t(&basis_vec(field, dn, m1), &basis_vec(field, dt, t1));
                        let a = mp.act_n(&basis_vec(field, dn, i), &tw);
                        let b = mp.act_n(&basis_vec(field, dn, m2), &basis_vec(field, dt, t2));
                        rhs = vec_add(&rhs, &vec_scale(&n.algebra().mul_vec(&a, &b), &cm.mul(&ct)));
                    }
                }
                if lhs != rhs {
                    return fail("(nm)^t = n^(m_1(t_1)) m_2^(t_2)", vec![i, j, k], lhs, rhs);
                }
            }
        }
    }

    // (v) n_1^(t_1) (x) n_2(t_2) = n_2^(t_2) (x) n_1(t_1)
    for i in 0..dn {
        for k in 0..dt {
            let mut lhs = zero_vec(field, dn * dt);
            let mut rhs = zero_vec(field, dn * dt);
            for (n1, n2, cn) in comult_pairs(n.coalgebra(), i) {
                for (t1, t2, ct) in comult_pairs(t.coalgebra(), k) {
                    let a1 = mp.act_n(&basis_vec(field, dn, n1), &basis_vec(field, dt, t1));
                    let b1 = mp.act_t(&basis_vec(field, dn, n2), &basis_vec(field, dt, t2));
                    lhs = vec_add(&lhs, &vec_scale(&vec_tensor(&a1, &b1, field), &cn.mul(&ct)));
                    let a2 = mp.act_n(&basis_vec(field, dn, n2), &basis_vec(field, dt, t2));
                    let b2 = mp.act_t(&basis_vec(field, dn, n1), &basis_vec(field, dt, t1));
                    rhs = vec_add(&rhs, &vec_scale(&vec_tensor(&a2, &b2, field), &cn.mul(&ct)));
                }
            }
            if lhs != rhs {
                return fail(
                    "n_1^(t_1) (x) n_2(t_2) = n_2^(t_2) (x) n_1(t_1)",
                    vec![i, k],
                    lhs,
                    rhs,
                );
            }
        }
    }
    Ok(())
}

/// Read a matched pair off an exact group factorization G = F K: each
/// product k f rewrites uniquely as k(f) k^f with k(f) in F and k^f in K.
/// T is the group algebra of F and N that of K.
pub fn from_group_factorization(
    g: &GroupTable,
    f_subset: &[usize],
    k_subset: &[usize],
    field: FieldSpec,
) -> Result<MatchedPair, MatchedPairError> {
    let order = g.order;
    if f_subset.len() * k_subset.len() != order {
        return Err(MatchedPairError::NotExactFactorization);
    }
    let subgroup = |elems: &[usize]| -> Result<GroupTable, MatchedPairError> {
        let pos = |x: usize| elems.iter().position(|&e| e == x);
        let mut table = vec![vec![0usize; elems.len()]; elems.len()];
        for (a, &x) in elems.iter().enumerate() {
            for (b, &y) in elems.iter().enumerate() {
                let z = g.mult[x][y];
                let Some(c) = pos(z) else {
                    return Err(MatchedPairError::NotExactFactorization);
                };
                table[a][b] = c;
            }
        }
        GroupTable::new(table).map_err(MatchedPairError::Catalog)
    };
    let f_table = subgroup(f_subset)?;
    let k_table = subgroup(k_subset)?;
    // unique factorization: the products f k must exhaust G
    let mut seen = vec![false; order];
    let mut factor: Vec<Option<(usize, usize)>> = vec![None; order];
    for (a, &f) in f_subset.iter().enumerate() {
        for (b, &k) in k_subset.iter().enumerate() {
            let x = g.mult[f][k];
            if seen[x] {
                return Err(MatchedPairError::NotExactFactorization);
            }
            seen[x] = true;
            factor[x] = Some((a, b));
        }
    }
    let t = crate::catalog::group_algebra(&f_table, field)?;
    let n = crate::catalog::group_algebra(&k_table, field)?;
    let mut act_on_t = BilinearPairing::zero(field, k_subset.len(), f_subset.len(), f_subset.len());
    let mut act_on_n = BilinearPairing::zero(field, k_subset.len(), f_subset.len(), k_subset.len());
    for (b, &k) in k_subset.iter().enumerate() {
        for (a, &f) in f_subset.iter().enumerate() {
            let (fa, kb) = factor[g.mult[k][f]].expect("products cover G");
            act_on_t.set(b, a, basis_vec(field, f_subset.len(), fa));
            act_on_n.set(b, a, basis_vec(field, k_subset.len(), kb));
        }
    }
    let mp = MatchedPair {
        n,
        t,
        act_on_t,
        act_on_n,
    };
    validate_matched_pair(&mp)?;
    Ok(mp)
}

/// The bismash product T (bowtie) N with its embeddings and the linear
/// identification of N (x) T with the bismash carrier.
#[derive(Clone, Debug)]
pub struct Bismash {
    pub hopf: HopfAlgebra,
    /// t -> t (bowtie) 1
    pub embed_t: Matrix,
    /// n -> 1 (bowtie) n
    pub embed_n: Matrix,
    /// n (x) t -> the product nt inside the bismash
    pub identify: Matrix,
}

impl Bismash {
    /// Inverse of the identification, for reading bismash elements in the
    /// n (x) t coordinates.
    pub fn identify_inverse(&self) -> Matrix {
        self.identify.inverse().expect("identification is invertible")
    }
}

pub fn bismash(mp: &MatchedPair) -> Result<Bismash, MatchedPairError> {
    validate_matched_pair(mp)?;
    let field = mp.field();
    let dn = mp.n.dim();
    let dt = mp.t.dim();
    let dim = dt * dn;
    // (t >< n)(s >< m) = t . n_1(s_1) >< n_2^(s_2) . m
    let mut mult = Tensor3::new(field, (dim, dim, dim));
    for ti in 0..dt {
        for ni in 0..dn {
            for si in 0..dt {
                for mi in 0..dn {
                    let mut out = zero_vec(field, dim);
                    for (n1, n2, cn) in comult_pairs(mp.n.coalgebra(), ni) {
                        for (s1, s2, cs) in comult_pairs(mp.t.coalgebra(), si) {
                            let left = mp.t.algebra().mul_vec(
                                &basis_vec(field, dt, ti),
                                &mp.act_t(&basis_vec(field, dn, n1), &basis_vec(field, dt, s1)),
                            );
                            let right = mp.n.algebra().mul_vec(
                                &mp.act_n(&basis_vec(field, dn, n2), &basis_vec(field, dt, s2)),
                                &basis_vec(field, dn, mi),
                            );
                            out = vec_add(
                                &out,
                                &vec_scale(&vec_tensor(&left, &right, field), &cn.mul(&cs)),
                            );
                        }
                    }
                    for (idx, v) in out.into_iter().enumerate() {
                        if !v.is_zero() {
                            mult.add_to(flatten(ti, ni, dn), flatten(si, mi, dn), idx, &v);
                        }
                    }
                }
            }
        }
    }
    let unit = vec_tensor(&mp.t.algebra().unit, &mp.n.algebra().unit, field);
    let algebra = Algebra::new(field, dim, mult, unit);
    // tensor coalgebra on T (x) N
    let mut comult = Tensor3::new(field, (dim, dim, dim));
    for ti in 0..dt {
        for ni in 0..dn {
            for (t1, t2, ct) in comult_pairs(mp.t.coalgebra(), ti) {
                for (n1, n2, cn) in comult_pairs(mp.n.coalgebra(), ni) {
                    comult.add_to(
                        flatten(ti, ni, dn),
                        flatten(t1, n1, dn),
                        flatten(t2, n2, dn),
                        &ct.mul(&cn),
                    );
                }
            }
        }
    }
    let counit: Vec<Scalar> = (0..dim)
        .map(|idx| {
            let (ti, ni) = unflatten(idx, dn);
            mp.t.coalgebra().counit[ti].mul(&mp.n.coalgebra().counit[ni])
        })
        .collect();
    let coalgebra = Coalgebra::new(field, dim, comult, counit);
    let bialgebra = Bialgebra::new(algebra, coalgebra);
    bialgebra.validate().map_err(MatchedPairError::AxiomFailed)?;
    let antipode = crate::algebra::solve_antipode(&bialgebra).ok_or_else(|| {
        MatchedPairError::AxiomFailed(Counterexample {
            law: "bismash identity map is convolution invertible".into(),
            indices: vec![],
            lhs: vec![],
            rhs: vec![],
        })
    })?;
    let hopf = HopfAlgebra::new(bialgebra, antipode);
    hopf.validate().map_err(MatchedPairError::AxiomFailed)?;

    let embed_t = Matrix::from_fn(field, dim, dt, |row, col| {
        let (ti, ni) = unflatten(row, dn);
        if ti == col {
            mp.n.algebra().unit[ni].clone()
        } else {
            field.zero()
        }
    });
    let embed_n = Matrix::from_fn(field, dim, dn, |row, col| {
        let (ti, ni) = unflatten(row, dn);
        if ni == col {
            mp.t.algebra().unit[ti].clone()
        } else {
            field.zero()
        }
    });
    // nt inside the bismash: the product of the two embeddings
    let mut identify = Matrix::zero(field, dim, dn * dt);
    for ni in 0..dn {
        for ti in 0..dt {
            let prod = hopf
                .algebra()
                .mul_vec(&embed_n.col(ni), &embed_t.col(ti));
            for (row, v) in prod.into_iter().enumerate() {
                identify.set(row, flatten(ni, ti, dt), v);
            }
        }
    }
    let out = Bismash {
        hopf,
        embed_t,
        embed_n,
        identify,
    };
    check_distributive_laws(mp, &out)?;
    Ok(out)
}

/// The distributive law `nt = n_1(t_1) n_2^(t_2)` and its inverse
/// `tn = t_1[n_1] t_2^(n_2)` inside the bismash product.
fn check_distributive_laws(mp: &MatchedPair, h: &Bismash) -> Result<(), MatchedPairError> {
    let field = mp.field();
    let dn = mp.n.dim();
    let dt = mp.t.dim();
    let alg = h.hopf.algebra();
    for ni in 0..dn {
        for ti in 0..dt {
            let lhs = alg.mul_vec(&h.embed_n.col(ni), &h.embed_t.col(ti));
            let mut rhs = zero_vec(field, alg.dim);
            for (n1, n2, cn) in comult_pairs(mp.n.coalgebra(), ni) {
                for (t1, t2, ct) in comult_pairs(mp.t.coalgebra(), ti) {
                    let left = h
                        .embed_t
                        .apply(&mp.act_t(&basis_vec(field, dn, n1), &basis_vec(field, dt, t1)));
                    let right = h
                        .embed_n
                        .apply(&mp.act_n(&basis_vec(field, dn, n2), &basis_vec(field, dt, t2)));
                    rhs = vec_add(&rhs, &vec_scale(&alg.mul_vec(&left, &right), &cn.mul(&ct)));
                }
            }
            if lhs != rhs {
                return Err(MatchedPairError::AxiomFailed(Counterexample {
                    law: "nt = n_1(t_1) n_2^(t_2)".into(),
                    indices: vec![ni, ti],
                    lhs,
                    rhs,
                }));
            }
        }
    }
    let (br_t, br_n) = derived_actions(mp);
    for ti in 0..dt {
        for ni in 0..dn {
            let lhs = alg.mul_vec(&h.embed_t.col(ti), &h.embed_n.col(ni));
            let mut rhs = zero_vec(field, alg.dim);
            for (t1, t2, ct) in comult_pairs(mp.t.coalgebra(), ti) {
                for (n1, n2, cn) in comult_pairs(mp.n.coalgebra(), ni) {
                    let left = h.embed_n.apply(&br_t.apply(
                        &basis_vec(field, dt, t1),
                        &basis_vec(field, dn, n1),
                    ));
                    let right = h.embed_t.apply(&br_n.apply(
                        &basis_vec(field, dt, t2),
                        &basis_vec(field, dn, n2),
                    ));
                    rhs = vec_add(&rhs, &vec_scale(&alg.mul_vec(&left, &right), &ct.mul(&cn)));
                }
            }
            if lhs != rhs {
                return Err(MatchedPairError::AxiomFailed(Counterexample {
                    law: "tn = t_1[n_1] t_2^(n_2)".into(),
                    indices: vec![ti, ni],
                    lhs,
                    rhs,
                }));
            }
        }
    }
    Ok(())
}

/// The bracket actions of the final Corollary: `t[n] = S(S(n)^(S(t)))` in N
/// and `t^n = S(S(n)(S(t)))` in T. Returned as pairings on T (x) N with the
/// two displayed identities verified.
pub fn derived_actions(mp: &MatchedPair) -> (BilinearPairing, BilinearPairing) {
    let field = mp.field();
    let dn = mp.n.dim();
    let dt = mp.t.dim();
    let bracket = BilinearPairing::from_fn(field, dt, dn, dn, |ti, ni| {
        let sn = mp.n.antipode.col(ni);
        let st = mp.t.antipode.col(ti);
        mp.n.antipode_vec(&mp.act_n(&sn, &st))
    });
    let superscript = BilinearPairing::from_fn(field, dt, dn, dt, |ti, ni| {
        let sn = mp.n.antipode.col(ni);
        let st = mp.t.antipode.col(ti);
        mp.t.antipode_vec(&mp.act_t(&sn, &st))
    });
    (bracket, superscript)
}

/// The two Corollary identities: `t_1[n_1](t_2^(n_2)) = eps(n) t` and
/// `(t_1[n_1])^(t_2^(n_2)) = n eps(t)` on all basis pairs.
pub fn check_derived_action_identities(mp: &MatchedPair) -> Check {
    let field = mp.field();
    let dn = mp.n.dim();
    let dt = mp.t.dim();
    let (bracket, superscript) = derived_actions(mp);
    for ti in 0..dt {
        for ni in 0..dn {
            let mut acted = zero_vec(field, dt);
            let mut twisted = zero_vec(field, dn);
            for (t1, t2, ct) in comult_pairs(mp.t.coalgebra(), ti) {
                for (n1, n2, cn) in comult_pairs(mp.n.coalgebra(), ni) {
                    let left = bracket.apply(&basis_vec(field, dt, t1), &basis_vec(field, dn, n1));
                    let right =
                        superscript.apply(&basis_vec(field, dt, t2), &basis_vec(field, dn, n2));
                    let c = ct.mul(&cn);
                    acted = vec_add(&acted, &vec_scale(&mp.act_t(&left, &right), &c));
                    twisted = vec_add(&twisted, &vec_scale(&mp.act_n(&left, &right), &c));
                }
            }
            let expect_t = vec_scale(
                &basis_vec(field, dt, ti),
                &mp.n.coalgebra().counit[ni],
            );
            if acted != expect_t {
                return Err(Counterexample {
                    law: "t_1[n_1](t_2^(n_2)) = eps(n) t".into(),
                    indices: vec![ti, ni],
                    lhs: acted,
                    rhs: expect_t,
                });
            }
            let expect_n = vec_scale(
                &basis_vec(field, dn, ni),
                &mp.t.coalgebra().counit[ti],
            );
            if twisted != expect_n {
                return Err(Counterexample {
                    law: "(t_1[n_1])^(t_2^(n_2)) = n eps(t)".into(),
                    indices: vec![ti, ni],
                    lhs: twisted,
                    rhs: expect_n,
                });
            }
        }
    }
    Ok(())
}

/// Check the four skew-bimeasuring equations in tensor form, then, on pass,
/// re-check the product-form equations through the bismash identification.
pub fn check_skew_bimeasuring(
    mp: &MatchedPair,
    psi: &BilinearPairing,
    a: &Algebra,
) -> Result<MeasuringWitness, MatchedPairError> {
    let dn = mp.n.dim();
    let dt = mp.t.dim();
    if psi.dim_x != dn || psi.dim_y != dt || psi.dim_a != a.dim {
        return Err(MatchedPairError::ShapeMismatch);
    }
    let verdict = skew_tensor_verdict(mp, psi, a);
    if verdict.is_ok() {
        assert!(
            skew_product_form_holds(mp, psi, a),
            "tensor-form pass must imply product-form pass"
        );
    }
    Ok(MeasuringWitness {
        psi: psi.clone(),
        verdict,
    })
}

fn skew_tensor_verdict(mp: &MatchedPair, psi: &BilinearPairing, a: &Algebra) -> Check {
    let field = mp.field();
    let dn = mp.n.dim();
    let dt = mp.t.dim();
    // psi(nm, t) = psi(n, m_1(t_1)) psi(m_2, t_2)
    for i in 0..dn {
        for j in 0..dn {
            for k in 0..dt {
                let lhs = psi.apply(&mp.n.algebra().mul_basis(i, j), &basis_vec(field, dt, k));
                let mut rhs = zero_vec(field, a.dim);
                for (m1, m2, cm) in comult_pairs(mp.n.coalgebra(), j) {
                    for (t1, t2, ct) in comult_pairs(mp.t.coalgebra(), k) {
                        let acted = mp.act_t(&basis_vec(field, dn, m1), &basis_vec(field, dt, t1));
                        let x = psi.apply(&basis_vec(field, dn, i), &acted);
                        let y = psi.apply(&basis_vec(field, dn, m2), &basis_vec(field, dt, t2));
                        rhs = vec_add(&rhs, &vec_scale(&a.mul_vec(&x, &y), &cm.mul(&ct)));
                    }
                }
                if lhs != rhs {
                    return Err(Counterexample {
                        law: "psi(nm, t) = psi(n, m_1(t_1)) psi(m_2, t_2)".into(),
                        indices: vec![i, j, k],
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    // psi(1, t) = eps(t)
    for k in 0..dt {
        let lhs = psi.apply(&mp.n.algebra().unit, &basis_vec(field, dt, k));
        let rhs = vec_scale(&a.unit, &mp.t.coalgebra().counit[k]);
        if lhs != rhs {
            return Err(Counterexample {
                law: "psi(1, t) = eps(t)".into(),
                indices: vec![k],
                lhs,
                rhs,
            });
        }
    }
    // psi(n, ts) = psi(n_1^(t_1), s) psi(n_2, t)
    for i in 0..dn {
        for k in 0..dt {
            for l in 0..dt {
                let lhs = psi.apply(&basis_vec(field, dn, i), &mp.t.algebra().mul_basis(k, l));
                let mut rhs = zero_vec(field, a.dim);
                for (n1, n2, cn) in comult_pairs(mp.n.coalgebra(), i) {
                    for (t1, t2, ct) in comult_pairs(mp.t.coalgebra(), k) {
                        let twisted = mp.act_n(&basis_vec(field, dn, n1), &basis_vec(field, dt, t1));
                        let x = psi.apply(&twisted, &basis_vec(field, dt, l));
                        let y = psi.apply(&basis_vec(field, dn, n2), &basis_vec(field, dt, t2));
                        rhs = vec_add(&rhs, &vec_scale(&a.mul_vec(&x, &y), &cn.mul(&ct)));
                    }
                }
                if lhs != rhs {
                    return Err(Counterexample {
                        law: "psi(n, ts) = psi(n_1^(t_1), s) psi(n_2, t)".into(),
                        indices: vec![i, k, l],
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    // psi(n, 1) = eps(n)
    for i in 0..dn {
        let lhs = psi.apply(&basis_vec(field, dn, i), &mp.t.algebra().unit);
        let rhs = vec_scale(&a.unit, &mp.n.coalgebra().counit[i]);
        if lhs != rhs {
            return Err(Counterexample {
                law: "psi(n, 1) = eps(n)".into(),
                indices: vec![i],
                lhs,
                rhs,
            });
        }
    }
    Ok(())
}

/// The product-form equations, evaluated on the bismash carrier through the
/// identification of nt with n (x) t.
fn skew_product_form_holds(mp: &MatchedPair, psi: &BilinearPairing, a: &Algebra) -> bool {
    let field = mp.field();
    let dn = mp.n.dim();
    let dt = mp.t.dim();
    let h = match bismash(mp) {
        Ok(h) => h,
        Err(_) => return false,
    };
    // psi as a functional on the bismash carrier: psi_h = psi . identify^{-1}
    let inv = h.identify_inverse();
    let psi_h = |v: &[Scalar]| -> Vec<Scalar> {
        let nt = inv.apply(v);
        let mut out = zero_vec(field, a.dim);
        for idx in 0..dn * dt {
            if nt[idx].is_zero() {
                continue;
            }
            let (ni, ti) = unflatten(idx, dt);
            out = vec_add(&out, &vec_scale(psi.get(ni, ti), &nt[idx]));
        }
        out
    };
    let alg = h.hopf.algebra();
    // psi(ntm) = psi(nt_1) psi(t_2 m)
    for ni in 0..dn {
        for ti in 0..dt {
            for mi in 0..dn {
                let ntm = alg.mul_vec(
                    &alg.mul_vec(&h.embed_n.col(ni), &h.embed_t.col(ti)),
                    &h.embed_n.col(mi),
                );
                let lhs = psi_h(&ntm);
                let mut rhs = zero_vec(field, a.dim);
                for (t1, t2, ct) in comult_pairs(mp.t.coalgebra(), ti) {
                    let x = psi_h(&alg.mul_vec(&h.embed_n.col(ni), &h.embed_t.col(t1)));
                    let y = psi_h(&alg.mul_vec(&h.embed_t.col(t2), &h.embed_n.col(mi)));
                    rhs = vec_add(&rhs, &vec_scale(&a.mul_vec(&x, &y), &ct));
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    // psi(tns) = psi(tn_1) psi(n_2 s)
    for ti in 0..dt {
        for ni in 0..dn {
            for si in 0..dt {
                let tns = alg.mul_vec(
                    &alg.mul_vec(&h.embed_t.col(ti), &h.embed_n.col(ni)),
                    &h.embed_t.col(si),
                );
                let lhs = psi_h(&tns);
                let mut rhs = zero_vec(field, a.dim);
                for (n1, n2, cn) in comult_pairs(mp.n.coalgebra(), ni) {
                    let x = psi_h(&alg.mul_vec(&h.embed_t.col(ti), &h.embed_n.col(n1)));
                    let y = psi_h(&alg.mul_vec(&h.embed_n.col(n2), &h.embed_t.col(si)));
                    rhs = vec_add(&rhs, &vec_scale(&a.mul_vec(&x, &y), &cn));
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    // psi(t) = eps(t) and psi(n) = eps(n)
    for ti in 0..dt {
        if psi_h(&h.embed_t.col(ti)) != vec_scale(&a.unit, &mp.t.coalgebra().counit[ti]) {
            return false;
        }
    }
    for ni in 0..dn {
        if psi_h(&h.embed_n.col(ni)) != vec_scale(&a.unit, &mp.n.coalgebra().counit[ni]) {
            return false;
        }
    }
    true
}

/// Convolution of pairings: `(psi * psi')(n (x) t) = psi(n_1 (x) t_1)
/// psi'(n_2 (x) t_2)`.
pub fn skew_convolve(
    mp: &MatchedPair,
    psi: &BilinearPairing,
    psi2: &BilinearPairing,
    a: &Algebra,
) -> BilinearPairing {
    let field = mp.field();
    let dn = mp.n.dim();
    let dt = mp.t.dim();
    BilinearPairing::from_fn(field, dn, dt, a.dim, |ni, ti| {
        let mut out = zero_vec(field, a.dim);
        for (n1, n2, cn) in comult_pairs(mp.n.coalgebra(), ni) {
            for (t1, t2, ct) in comult_pairs(mp.t.coalgebra(), ti) {
                let x = psi.get(n1, t1);
                let y = psi2.get(n2, t2);
                out = vec_add(&out, &vec_scale(&a.mul_vec(x, y), &cn.mul(&ct)));
            }
        }
        out
    })
}

/// The convolution unit eps (x) eps.
pub fn skew_unit(mp: &MatchedPair, a: &Algebra) -> BilinearPairing {
    let field = mp.field();
    BilinearPairing::from_fn(field, mp.n.dim(), mp.t.dim(), a.dim, |ni, ti| {
        vec_scale(
            &a.unit,
            &mp.n.coalgebra().counit[ni].mul(&mp.t.coalgebra().counit[ti]),
        )
    })
}

/// Convolution inverse of a skew bimeasuring, computed on the tensor
/// coalgebra N (x) T.
pub fn skew_inverse(
    mp: &MatchedPair,
    psi: &BilinearPairing,
    a: &Algebra,
) -> Option<BilinearPairing> {
    let field = mp.field();
    let dn = mp.n.dim();
    let dt = mp.t.dim();
    let nt = crate::algebra::tensor_bialgebra(&mp.n.bialgebra, &mp.t.bialgebra);
    let f = Matrix::from_fn(field, a.dim, dn * dt, |r, col| {
        let (ni, ti) = unflatten(col, dt);
        psi.get(ni, ti)[r].clone()
    });
    let inv = convolution_inverse(&nt.coalgebra, a, &f)?;
    Some(BilinearPairing::from_fn(field, dn, dt, a.dim, |ni, ti| {
        inv.col(flatten(ni, ti, dt))
    }))
}

/// All skew bimeasurings over a prime field, lexicographic on tables, with
/// the entries pinned by the unit equations fixed up front. Over the
/// rationals a bounded coefficient grid over {-1, 0, 1} is scanned instead;
/// that covers root-of-unity valued pairings on group-like bases but is not
/// exhaustive for arbitrary rational targets.
pub fn enumerate_skew_bimeasurings(
    mp: &MatchedPair,
    a: &Algebra,
    budget: u64,
) -> Result<Vec<BilinearPairing>, MatchedPairError> {
    let field = mp.field();
    let dn = mp.n.dim();
    let dt = mp.t.dim();
    let da = a.dim;
    let unit_n = (0..dn).find(|&i| mp.n.algebra().unit == basis_vec(field, dn, i));
    let unit_t = (0..dt).find(|&j| mp.t.algebra().unit == basis_vec(field, dt, j));
    let mut pinned: Vec<Option<Vec<Scalar>>> = vec![None; dn * dt];
    if let Some(u) = unit_n {
        for j in 0..dt {
            pinned[u * dt + j] = Some(vec_scale(&a.unit, &mp.t.coalgebra().counit[j]));
        }
    }
    if let Some(u) = unit_t {
        for i in 0..dn {
            pinned[i * dt + u] = Some(vec_scale(&a.unit, &mp.n.coalgebra().counit[i]));
        }
    }
    let free: Vec<usize> = (0..dn * dt).filter(|&idx| pinned[idx].is_none()).collect();
    let slots = free.len() * da;
    let candidates: Vec<Vec<Scalar>> = match field {
        FieldSpec::Prime(_) => {
            let needed = enumerate::VectorIter::count(field, slots).unwrap_or(u128::MAX);
            if needed > budget as u128 {
                return Err(EnumError::BudgetExceeded { needed, budget }.into());
            }
            enumerate::VectorIter::new(field, slots).unwrap().collect()
        }
        FieldSpec::Rationals => {
            let grid = [field.one().neg(), field.zero(), field.one()];
            let needed = (3u128).checked_pow(slots as u32).unwrap_or(u128::MAX);
            if needed > budget as u128 {
                return Err(EnumError::BudgetExceeded { needed, budget }.into());
            }
            let mut out: Vec<Vec<Scalar>> = vec![vec![]];
            for _ in 0..slots {
                let mut next = Vec::with_capacity(out.len() * 3);
                for prefix in &out {
                    for g in &grid {
                        let mut v = prefix.clone();
                        v.push(g.clone());
                        next.push(v);
                    }
                }
                out = next;
            }
            out
        }
    };
    let mut found = Vec::new();
    for assignment in candidates {
        let mut psi = BilinearPairing::zero(field, dn, dt, da);
        for (slot, &idx) in free.iter().enumerate() {
            psi.set(idx / dt, idx % dt, assignment[slot * da..(slot + 1) * da].to_vec());
        }
        for idx in 0..dn * dt {
            if let Some(v) = &pinned[idx] {
                psi.set(idx / dt, idx % dt, v.clone());
            }
        }
        if skew_tensor_verdict(mp, &psi, a).is_ok() {
            found.push(psi);
        }
    }
    found.sort_by(|x, y| x.flat().cmp(&y.flat()));
    found.dedup();
    Ok(found)
}

/// The matched pair behind the factorization S3 = C3 . C2, with the C2
/// factor acting on C3 by conjugation.
pub fn s3_matched_pair(field: FieldSpec) -> Result<MatchedPair, MatchedPairError> {
    let s3 = crate::catalog::symmetric_group_s3();
    // permutations in lexicographic order: the rotation subgroup sits at
    // {identity, (012), (021)} and a transposition generates the complement
    let c3: Vec<usize> = (0..6)
        .filter(|&i| {
            // even permutations form the rotation subgroup
            perm_is_even(i)
        })
        .collect();
    let c2 = vec![0usize, first_odd()];
    from_group_factorization(&s3, &c3, &c2, field)
}

fn perm_is_even(index: usize) -> bool {
    let perms = all_s3_perms();
    let p = &perms[index];
    let mut inv = 0;
    for a in 0..3 {
        for b in a + 1..3 {
            if p[a] > p[b] {
                inv += 1;
            }
        }
    }
    inv % 2 == 0
}

fn first_odd() -> usize {
    (0..6).find(|&i| !perm_is_even(i)).expect("odd permutations exist")
}

fn all_s3_perms() -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..3 {
        let mut next = Vec::new();
        for p in out {
            for v in 0..3usize {
                if !p.contains(&v) {
                    let mut q: Vec<usize> = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out.sort();
    out
}
