//! Hopf modules, coinvariants, the fundamental isomorphism, and the
//! correspondence between normalized convolution-invertible maps, comodule
//! automorphisms, and twisted module actions.
//!
//! Coinvariants are computed as the equalizer of the coaction against the
//! trivial coaction; the image of the projector mu(S (x) 1)delta is computed
//! independently and the two subspaces are asserted equal. The fundamental
//! isomorphism theta and its inverse mu(1 (x) kappa) are verified exactly on
//! every input, as is the Hopf-module morphism property of theta.

use crate::algebra::{
    convolution_inverse, Algebra, BilinearPairing, Check, Counterexample, HopfAlgebra,
};
use crate::enumerate::{self, EnumError};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{
    basis_vec, flatten, unflatten, vec_add, vec_scale, vec_tensor, zero_vec, Matrix, Subspace,
};
use crate::matched_pair::{bismash, Bismash, MatchedPair, MatchedPairError};

#[derive(Debug, Clone, thiserror::Error)]
pub enum HopfModuleError {
    #[error("not a Hopf module: {0}")]
    NotAHopfModule(Counterexample),
    #[error("map is not normalized: psi(1) != 1")]
    NotNormalized,
    #[error("map is not convolution invertible")]
    NotConvolutionInvertible,
    #[error("map is not a comodule automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("modules live over different Hopf algebras")]
    DifferentHopfAlgebras,
    #[error(transparent)]
    MatchedPair(#[from] MatchedPairError),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
}

/// A module and comodule over a Hopf algebra with the compatibility
/// delta(hm) = h_1 m_{-1} (x) h_2 m_0.
#[derive(Clone, Debug)]
pub struct HopfModule {
    pub h: HopfAlgebra,
    pub dim: usize,
    /// action H (x) M -> M
    pub action: BilinearPairing,
    /// coaction M -> H (x) M; column j is delta(e_j), rows flattened (h, m)
    pub coaction: Matrix,
}

impl HopfModule {
    pub fn field(&self) -> FieldSpec {
        self.h.field()
    }

    pub fn act(&self, hv: &[Scalar], mv: &[Scalar]) -> Vec<Scalar> {
        self.action.apply(hv, mv)
    }
}

/// H acting and coacting on itself by multiplication and comultiplication.
pub fn regular_module(h: &HopfAlgebra) -> HopfModule {
    let field = h.field();
    let d = h.dim();
    let action = BilinearPairing::from_fn(field, d, d, d, |i, j| h.algebra().mul_basis(i, j));
    let coaction = Matrix::from_fn(field, d * d, d, |row, col| h.coalgebra().comult_basis(col)[row].clone());
    HopfModule {
        h: h.clone(),
        dim: d,
        action,
        coaction,
    }
}

/// H (x) V with action on the left leg only and coaction Delta (x) 1.
pub fn trivial_module(h: &HopfAlgebra, v_dim: usize) -> HopfModule {
    let field = h.field();
    let d = h.dim();
    let dim = d * v_dim;
    let action = BilinearPairing::from_fn(field, d, dim, dim, |i, x| {
        let (j, v) = unflatten(x, v_dim);
        let prod = h.algebra().mul_basis(i, j);
        let mut out = zero_vec(field, dim);
        for (r, c) in prod.into_iter().enumerate() {
            out[flatten(r, v, v_dim)] = c;
        }
        out
    });
    let coaction = Matrix::from_fn(field, d * dim, dim, |row, col| {
        let (a, x) = unflatten(row, dim);
        let (b, v) = unflatten(x, v_dim);
        let (j, w) = unflatten(col, v_dim);
        if v == w {
            h.coalgebra().comult_basis(j)[flatten(a, b, d)].clone()
        } else {
            field.zero()
        }
    });
    HopfModule {
        h: h.clone(),
        dim,
        action,
        coaction,
    }
}

pub fn validate_hopf_module(hm: &HopfModule) -> Check {
    let field = hm.field();
    let d = hm.h.dim();
    let m = hm.dim;
    assert_eq!(hm.action.dim_x, d);
    assert_eq!(hm.action.dim_y, m);
    assert_eq!(hm.action.dim_a, m);
    assert_eq!(hm.coaction.rows, d * m);
    assert_eq!(hm.coaction.cols, m);
    hm.h.validate()?;
    // module laws
    for j in 0..m {
        let e = basis_vec(field, m, j);
        let lhs = hm.act(&hm.h.algebra().unit, &e);
        if lhs != e {
            return Err(Counterexample {
                law: "1 m = m".into(),
                indices: vec![j],
                lhs,
                rhs: e,
            });
        }
    }
    for i in 0..d {
        for j in 0..d {
            for k in 0..m {
                let lhs = hm.act(&hm.h.algebra().mul_basis(i, j), &basis_vec(field, m, k));
                let rhs = hm.act(
                    &basis_vec(field, d, i),
                    &hm.act(&basis_vec(field, d, j), &basis_vec(field, m, k)),
                );
                if lhs != rhs {
                    return Err(Counterexample {
                        law: "(hh')m = h(h'm)".into(),
                        indices: vec![i, j, k],
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    // comodule laws
    for j in 0..m {
        let delta = hm.coaction.col(j);
        // counit: (eps (x) 1) delta = id
        let mut contracted = zero_vec(field, m);
        for idx in 0..d * m {
            let (a, b) = unflatten(idx, m);
            contracted[b] = contracted[b].add(&hm.h.coalgebra().counit[a].mul(&delta[idx]));
        }
        let e = basis_vec(field, m, j);
        if contracted != e {
            return Err(Counterexample {
                law: "(eps (x) 1) delta = id".into(),
                indices: vec![j],
                lhs: contracted,
                rhs: e,
            });
        }
        // coassociativity: (Delta (x) 1) delta = (1 (x) delta) delta
        let mut lhs = zero_vec(field, d * d * m);
        let mut rhs = zero_vec(field, d * d * m);
        for idx in 0..d * m {
            if delta[idx].is_zero() {
                continue;
            }
            let (a, b) = unflatten(idx, m);
            let da = hm.h.coalgebra().comult_basis(a);
            for t in 0..d * d {
                if !da[t].is_zero() {
                    let (a1, a2) = unflatten(t, d);
                    let pos = flatten(flatten(a1, a2, d), b, m);
                    lhs[pos] = lhs[pos].add(&da[t].mul(&delta[idx]));
                }
            }
            let db = hm.coaction.col(b);
            for t in 0..d * m {
                if !db[t].is_zero() {
                    let (b1, b0) = unflatten(t, m);
                    let pos = flatten(flatten(a, b1, d), b0, m);
                    rhs[pos] = rhs[pos].add(&db[t].mul(&delta[idx]));
                }
            }
        }
        if lhs != rhs {
            return Err(Counterexample {
                law: "(Delta (x) 1) delta = (1 (x) delta) delta".into(),
                indices: vec![j],
                lhs,
                rhs,
            });
        }
    }
    // compatibility: delta(hm) = h_1 m_{-1} (x) h_2 m_0
    for i in 0..d {
        for j in 0..m {
            let lhs = hm
                .coaction
                .apply(&hm.act(&basis_vec(field, d, i), &basis_vec(field, m, j)));
            let mut rhs = zero_vec(field, d * m);
            let dh = hm.h.coalgebra().comult_basis(i);
            let dm = hm.coaction.col(j);
            for t in 0..d * d {
                if dh[t].is_zero() {
                    continue;
                }
                let (h1, h2) = unflatten(t, d);
                for idx in 0..d * m {
                    if dm[idx].is_zero() {
                        continue;
                    }
                    let (a, b) = unflatten(idx, m);
                    let left = hm.h.algebra().mul_basis(h1, a);
                    let right = hm.act(&basis_vec(field, d, h2), &basis_vec(field, m, b));
                    let c = dh[t].mul(&dm[idx]);
                    rhs = vec_add(&rhs, &vec_scale(&vec_tensor(&left, &right, field), &c));
                }
            }
            if lhs != rhs {
                return Err(Counterexample {
                    law: "delta(hm) = h_1 m_{-1} (x) h_2 m_0".into(),
                    indices: vec![i, j],
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(())
}

/// The coinvariants with the projector rho = mu(S (x) 1)delta and its image
/// factorization rho = kappa rho_bar.
#[derive(Clone, Debug)]
pub struct CoinvariantData {
    pub coinvariants: Subspace,
    /// the projector M -> M
    pub rho: Matrix,
    /// corestriction M -> A onto the chosen coinvariant basis
    pub rho_bar: Matrix,
    /// inclusion A -> M, columns are the coinvariant basis
    pub kappa: Matrix,
}

impl CoinvariantData {
    pub fn dim(&self) -> usize {
        self.coinvariants.dim()
    }
}

pub fn coinvariants(hm: &HopfModule) -> Result<CoinvariantData, HopfModuleError> {
    validate_hopf_module(hm).map_err(HopfModuleError::NotAHopfModule)?;
    let field = hm.field();
    let d = hm.h.dim();
    let m = hm.dim;
    // equalizer of delta and 1 (x) id
    let eq = Matrix::from_fn(field, d * m, m, |row, col| {
        let (a, b) = unflatten(row, m);
        let trivial = if b == col {
            hm.h.algebra().unit[a].clone()
        } else {
            field.zero()
        };
        hm.coaction.get(row, col).sub(&trivial)
    });
    let kern = eq.kernel();
    let equalizer = Subspace::from_matrix_rows(m, &kern);
    // projector rho(m) = S(m_{-1}) m_0
    let mut rho = Matrix::zero(field, m, m);
    for j in 0..m {
        let delta = hm.coaction.col(j);
        let mut out = zero_vec(field, m);
        for idx in 0..d * m {
            if delta[idx].is_zero() {
                continue;
            }
            let (a, b) = unflatten(idx, m);
            let acted = hm.act(&hm.h.antipode.col(a), &basis_vec(field, m, b));
            out = vec_add(&out, &vec_scale(&acted, &delta[idx]));
        }
        for (r, c) in out.into_iter().enumerate() {
            rho.set(r, j, c);
        }
    }
    let image = Subspace::from_vectors(field, m, &(0..m).map(|j| rho.col(j)).collect::<Vec<_>>());
    assert_eq!(
        equalizer, image,
        "coinvariant equalizer must equal the image of the projector"
    );
    let q = equalizer.dim();
    let kappa = Matrix::from_fn(field, m, q, |r, c| equalizer.basis.get(c, r).clone());
    let mut rho_bar = Matrix::zero(field, q, m);
    for j in 0..m {
        let (sol, _) = kappa.solve(&rho.col(j)).expect("image of rho lies in the coinvariants");
        for (r, c) in sol.into_iter().enumerate() {
            rho_bar.set(r, j, c);
        }
    }
    assert_eq!(kappa.mul(&rho_bar), rho, "rho = kappa rho_bar");
    Ok(CoinvariantData {
        coinvariants: equalizer,
        rho,
        rho_bar,
        kappa,
    })
}

/// The fundamental isomorphism theta = (1 (x) rho_bar) delta from M to
/// H (x) A with inverse mu(1 (x) kappa).
#[derive(Clone, Debug)]
pub struct FundamentalIso {
    pub data: CoinvariantData,
    /// M -> H (x) A, rows flattened (h, a)
    pub theta: Matrix,
    /// H (x) A -> M
    pub theta_inv: Matrix,
}

pub fn fundamental_iso(hm: &HopfModule) -> Result<FundamentalIso, HopfModuleError> {
    let data = coinvariants(hm)?;
    let field = hm.field();
    let d = hm.h.dim();
    let m = hm.dim;
    let q = data.dim();
    if d * q != m {
        return Err(HopfModuleError::NotAHopfModule(Counterexample {
            law: "dim M = dim H * dim coinvariants".into(),
            indices: vec![d, q, m],
            lhs: vec![field.from_i64((d * q) as i64)],
            rhs: vec![field.from_i64(m as i64)],
        }));
    }
    let mut theta = Matrix::zero(field, d * q, m);
    for j in 0..m {
        let delta = hm.coaction.col(j);
        for idx in 0..d * m {
            if delta[idx].is_zero() {
                continue;
            }
            let (a, b) = unflatten(idx, m);
            for r in 0..q {
                let c = data.rho_bar.get(r, b).mul(&delta[idx]);
                let pos = flatten(a, r, q);
                let cur = theta.get(pos, j).add(&c);
                theta.set(pos, j, cur);
            }
        }
    }
    let mut theta_inv = Matrix::zero(field, m, d * q);
    for col in 0..d * q {
        let (i, r) = unflatten(col, q);
        let out = hm.act(&basis_vec(field, d, i), &data.kappa.col(r));
        for (row, c) in out.into_iter().enumerate() {
            theta_inv.set(row, col, c);
        }
    }
    let check = |cond: bool, law: &str| {
        if cond {
            Ok(())
        } else {
            Err(HopfModuleError::NotAHopfModule(Counterexample {
                law: law.into(),
                indices: vec![],
                lhs: vec![],
                rhs: vec![],
            }))
        }
    };
    check(
        theta.mul(&theta_inv) == Matrix::identity(field, d * q),
        "theta theta_inv = id",
    )?;
    check(
        theta_inv.mul(&theta) == Matrix::identity(field, m),
        "theta_inv theta = id",
    )?;
    // theta is a Hopf-module morphism into the trivial module H (x) A
    let target = trivial_module(&hm.h, q);
    for i in 0..d {
        for j in 0..m {
            let lhs = theta.apply(&hm.act(&basis_vec(field, d, i), &basis_vec(field, m, j)));
            let rhs = target.act(&basis_vec(field, d, i), &theta.col(j));
            check(lhs == rhs, "theta(hm) = h theta(m)")?;
        }
    }
    for j in 0..m {
        let lhs = target.coaction.apply(&theta.col(j));
        // (1 (x) theta) delta_M
        let delta = hm.coaction.col(j);
        let mut rhs = zero_vec(field, d * d * q);
        for idx in 0..d * m {
            if delta[idx].is_zero() {
                continue;
            }
            let (a, b) = unflatten(idx, m);
            let tb = theta.col(b);
            for t in 0..d * q {
                if !tb[t].is_zero() {
                    let pos = flatten(a, t, d * q);
                    rhs[pos] = rhs[pos].add(&tb[t].mul(&delta[idx]));
                }
            }
        }
        check(lhs == rhs, "theta is colinear")?;
    }
    // theta kappa(a) = 1 (x) a
    for r in 0..q {
        let lhs = theta.apply(&data.kappa.col(r));
        let rhs = vec_tensor(&hm.h.algebra().unit, &basis_vec(field, q, r), field);
        check(lhs == rhs, "theta kappa(a) = 1 (x) a")?;
    }
    Ok(FundamentalIso {
        data,
        theta,
        theta_inv,
    })
}

/// Cotensor product of two Hopf modules over a cocommutative H: the
/// equalizer of delta_M (x) 1 against the N-coaction pulled to the front,
/// carrying the diagonal action.
#[derive(Clone, Debug)]
pub struct CotensorData {
    pub module: HopfModule,
    /// inclusion of the equalizer carrier into M (x) N
    pub inclusion: Matrix,
}

pub fn cotensor(hm1: &HopfModule, hm2: &HopfModule) -> Result<CotensorData, HopfModuleError> {
    if hm1.h.bialgebra != hm2.h.bialgebra {
        return Err(HopfModuleError::DifferentHopfAlgebras);
    }
    validate_hopf_module(hm1).map_err(HopfModuleError::NotAHopfModule)?;
    validate_hopf_module(hm2).map_err(HopfModuleError::NotAHopfModule)?;
    let field = hm1.field();
    let d = hm1.h.dim();
    let (m, n) = (hm1.dim, hm2.dim);
    // columns index M (x) N, rows index H (x) M (x) N
    let mut eq = Matrix::zero(field, d * m * n, m * n);
    for col in 0..m * n {
        let (p, q) = unflatten(col, n);
        let dm = hm1.coaction.col(p);
        for idx in 0..d * m {
            if dm[idx].is_zero() {
                continue;
            }
            let (a, b) = unflatten(idx, m);
            let row = flatten(a, flatten(b, q, n), m * n);
            let cur = eq.get(row, col).add(&dm[idx]);
            eq.set(row, col, cur);
        }
        let dn = hm2.coaction.col(q);
        for idx in 0..d * n {
            if dn[idx].is_zero() {
                continue;
            }
            let (a, c) = unflatten(idx, n);
            let row = flatten(a, flatten(p, c, n), m * n);
            let cur = eq.get(row, col).sub(&dn[idx]);
            eq.set(row, col, cur);
        }
    }
    let carrier = Subspace::from_matrix_rows(m * n, &eq.kernel());
    let qdim = carrier.dim();
    let inclusion = Matrix::from_fn(field, m * n, qdim, |r, c| carrier.basis.get(c, r).clone());
    let project = |v: &[Scalar]| -> Vec<Scalar> {
        let (sol, _) = inclusion
            .solve(v)
            .expect("diagonal action and coaction preserve the cotensor equalizer");
        sol
    };
    // diagonal action h (m (x) n) = h_1 m (x) h_2 n, restricted
    let mut action = BilinearPairing::zero(field, d, qdim, qdim);
    for i in 0..d {
        let dh = hm1.h.coalgebra().comult_basis(i);
        for x in 0..qdim {
            let w = inclusion.col(x);
            let mut out = zero_vec(field, m * n);
            for col in 0..m * n {
                if w[col].is_zero() {
                    continue;
                }
                let (p, q) = unflatten(col, n);
                for t in 0..d * d {
                    if dh[t].is_zero() {
                        continue;
                    }
                    let (h1, h2) = unflatten(t, d);
                    let left = hm1.act(&basis_vec(field, d, h1), &basis_vec(field, m, p));
                    let right = hm2.act(&basis_vec(field, d, h2), &basis_vec(field, n, q));
                    let c = dh[t].mul(&w[col]);
                    out = vec_add(&out, &vec_scale(&vec_tensor(&left, &right, field), &c));
                }
            }
            action.set(i, x, project(&out));
        }
    }
    // coaction: delta_M (x) 1 restricted, slices projected back
    let mut coaction = Matrix::zero(field, d * qdim, qdim);
    for x in 0..qdim {
        let w = inclusion.col(x);
        let mut big = zero_vec(field, d * m * n);
        for col in 0..m * n {
            if w[col].is_zero() {
                continue;
            }
            let (p, q) = unflatten(col, n);
            let dm = hm1.coaction.col(p);
            for idx in 0..d * m {
                if dm[idx].is_zero() {
                    continue;
                }
                let (a, b) = unflatten(idx, m);
                let pos = flatten(a, flatten(b, q, n), m * n);
                big[pos] = big[pos].add(&dm[idx].mul(&w[col]));
            }
        }
        for a in 0..d {
            let slice = big[a * m * n..(a + 1) * m * n].to_vec();
            let proj = project(&slice);
            for (r, c) in proj.into_iter().enumerate() {
                coaction.set(flatten(a, r, qdim), x, c);
            }
        }
    }
    let module = HopfModule {
        h: hm1.h.clone(),
        dim: qdim,
        action,
        coaction,
    };
    validate_hopf_module(&module).map_err(HopfModuleError::NotAHopfModule)?;
    Ok(CotensorData { module, inclusion })
}

/// Membership in Reg_+(H, A): psi(1) = 1 and convolution invertible.
/// Returns the convolution inverse.
pub fn reg_plus_inverse(
    h: &HopfAlgebra,
    a: &Algebra,
    psi: &Matrix,
) -> Result<Matrix, HopfModuleError> {
    assert_eq!(psi.rows, a.dim);
    assert_eq!(psi.cols, h.dim());
    if psi.apply(&h.algebra().unit) != a.unit {
        return Err(HopfModuleError::NotNormalized);
    }
    convolution_inverse(h.coalgebra(), a, psi).ok_or(HopfModuleError::NotConvolutionInvertible)
}

/// alpha(psi)(h (x) a) = h_1 (x) psi(h_2) a, an A-linear comodule
/// automorphism of H (x) A.
pub fn alpha(h: &HopfAlgebra, a: &Algebra, psi: &Matrix) -> Result<Matrix, HopfModuleError> {
    reg_plus_inverse(h, a, psi)?;
    Ok(alpha_raw(h, a, psi))
}

fn alpha_raw(h: &HopfAlgebra, a: &Algebra, psi: &Matrix) -> Matrix {
    let field = h.field();
    let d = h.dim();
    let da = a.dim;
    let mut phi = Matrix::zero(field, d * da, d * da);
    for col in 0..d * da {
        let (i, r) = unflatten(col, da);
        let dh = h.coalgebra().comult_basis(i);
        let mut out = zero_vec(field, d * da);
        for t in 0..d * d {
            if dh[t].is_zero() {
                continue;
            }
            let (h1, h2) = unflatten(t, d);
            let val = a.mul_vec(&psi.col(h2), &basis_vec(field, da, r));
            for (s, c) in val.into_iter().enumerate() {
                out[flatten(h1, s, da)] = out[flatten(h1, s, da)].add(&c.mul(&dh[t]));
            }
        }
        for (row, c) in out.into_iter().enumerate() {
            phi.set(row, col, c);
        }
    }
    phi
}

/// alpha^{-1}(phi) = (eps (x) 1) phi (1 (x) iota_A).
pub fn alpha_inv(h: &HopfAlgebra, a: &Algebra, phi: &Matrix) -> Matrix {
    let field = h.field();
    let d = h.dim();
    let da = a.dim;
    Matrix::from_fn(field, da, d, |r, i| {
        let img = phi.apply(&vec_tensor(&basis_vec(field, d, i), &a.unit, field));
        let mut acc = field.zero();
        for idx in 0..d * da {
            let (b, s) = unflatten(idx, da);
            if s == r {
                acc = acc.add(&h.coalgebra().counit[b].mul(&img[idx]));
            }
        }
        acc
    })
}

/// Right multiplication by 1 (x) e_s on the A-leg of H (x) A.
fn a_leg_mult(h: &HopfAlgebra, a: &Algebra, s: usize) -> Matrix {
    let field = h.field();
    let d = h.dim();
    let da = a.dim;
    Matrix::from_fn(field, d * da, d * da, |row, col| {
        let (i, r) = unflatten(col, da);
        let (j, t) = unflatten(row, da);
        if i == j {
            a.mul_basis(r, s)[t].clone()
        } else {
            field.zero()
        }
    })
}

/// Check phi commutes with the A-leg multiplication.
pub fn is_a_linear(h: &HopfAlgebra, a: &Algebra, phi: &Matrix) -> bool {
    (0..a.dim).all(|s| {
        let r = a_leg_mult(h, a, s);
        phi.mul(&r) == r.mul(&phi)
    })
}

/// Check phi is an H-comodule map for the coaction Delta (x) 1.
pub fn is_comodule_map(h: &HopfAlgebra, a: &Algebra, phi: &Matrix) -> bool {
    let field = h.field();
    let d = h.dim();
    let da = a.dim;
    let coact = |v: &[Scalar]| -> Vec<Scalar> {
        let mut out = zero_vec(field, d * d * da);
        for idx in 0..d * da {
            if v[idx].is_zero() {
                continue;
            }
            let (i, r) = unflatten(idx, da);
            let dh = h.coalgebra().comult_basis(i);
            for t in 0..d * d {
                if !dh[t].is_zero() {
                    let (i1, i2) = unflatten(t, d);
                    let pos = flatten(i1, flatten(i2, r, da), d * da);
                    out[pos] = out[pos].add(&dh[t].mul(&v[idx]));
                }
            }
        }
        out
    };
    (0..d * da).all(|col| {
        let lhs = coact(&phi.col(col));
        // (1 (x) phi) applied to coact(e_col)
        let base = coact(&basis_vec(field, d * da, col));
        let mut rhs = zero_vec(field, d * d * da);
        for idx in 0..d * d * da {
            if base[idx].is_zero() {
                continue;
            }
            let (a1, rest) = unflatten(idx, d * da);
            let img = phi.col(rest);
            for (t, c) in img.iter().enumerate() {
                if !c.is_zero() {
                    let pos = flatten(a1, t, d * da);
                    rhs[pos] = rhs[pos].add(&c.mul(&base[idx]));
                }
            }
        }
        lhs == rhs
    })
}

/// Full automorphism-group membership check for phi on H (x) A.
pub fn check_automorphism(
    h: &HopfAlgebra,
    a: &Algebra,
    phi: &Matrix,
) -> Result<(), HopfModuleError> {
    if phi.inverse().is_none() {
        return Err(HopfModuleError::NotAnAutomorphism("not invertible".into()));
    }
    if !is_a_linear(h, a, phi) {
        return Err(HopfModuleError::NotAnAutomorphism("not A-linear".into()));
    }
    if !is_comodule_map(h, a, phi) {
        return Err(HopfModuleError::NotAnAutomorphism(
            "not an H-comodule map".into(),
        ));
    }
    Ok(())
}

/// beta(phi) = phi mu (1 (x) phi^{-1}): the twisted action of H on H (x) A.
pub fn beta(h: &HopfAlgebra, a: &Algebra, phi: &Matrix) -> Result<BilinearPairing, HopfModuleError> {
    check_automorphism(h, a, phi)?;
    let field = h.field();
    let d = h.dim();
    let da = a.dim;
    let phi_inv = phi.inverse().expect("checked invertible");
    let untwisted = trivial_module(h, da);
    Ok(BilinearPairing::from_fn(field, d, d * da, d * da, |i, x| {
        phi.apply(&untwisted.act(&basis_vec(field, d, i), &phi_inv.col(x)))
    }))
}

/// beta^{-1}(mubar) = mubar (1 (x) iota_H (x) 1).
pub fn beta_inv(h: &HopfAlgebra, a: &Algebra, mubar: &BilinearPairing) -> Matrix {
    let field = h.field();
    let d = h.dim();
    let da = a.dim;
    Matrix::from_fn(field, d * da, d * da, |row, col| {
        let (i, r) = unflatten(col, da);
        let arg = vec_tensor(&h.algebra().unit, &basis_vec(field, da, r), field);
        mubar.apply(&basis_vec(field, d, i), &arg)[row].clone()
    })
}

/// Package a twisted action as a Hopf module on H (x) A with coaction
/// Delta (x) 1.
pub fn twisted_module(h: &HopfAlgebra, a: &Algebra, mubar: &BilinearPairing) -> HopfModule {
    let da = a.dim;
    let base = trivial_module(h, da);
    HopfModule {
        h: h.clone(),
        dim: h.dim() * da,
        action: mubar.clone(),
        coaction: base.coaction,
    }
}

/// All elements of Reg_+(H, A) over a prime field, budget limited. Requires
/// the unit of H to be a basis vector so that normalization pins a column.
pub fn enumerate_reg_plus(
    h: &HopfAlgebra,
    a: &Algebra,
    budget: u64,
) -> Result<Vec<Matrix>, HopfModuleError> {
    let field = h.field();
    if field == FieldSpec::Rationals {
        return Err(EnumError::RationalsNeedSolver.into());
    }
    let d = h.dim();
    let da = a.dim;
    let unit_idx = (0..d)
        .find(|&i| h.algebra().unit == basis_vec(field, d, i))
        .expect("unit must be a basis vector for enumeration");
    let free: Vec<usize> = (0..d).filter(|&i| i != unit_idx).collect();
    let slots = free.len() * da;
    let needed = enumerate::VectorIter::count(field, slots).unwrap_or(u128::MAX);
    if needed > budget as u128 {
        return Err(EnumError::BudgetExceeded { needed, budget }.into());
    }
    let mut found = Vec::new();
    for assignment in enumerate::VectorIter::new(field, slots).unwrap() {
        let mut psi = Matrix::zero(field, da, d);
        for (r, c) in a.unit.iter().enumerate() {
            psi.set(r, unit_idx, c.clone());
        }
        for (slot, &i) in free.iter().enumerate() {
            for r in 0..da {
                psi.set(r, i, assignment[slot * da + r].clone());
            }
        }
        if convolution_inverse(h.coalgebra(), a, &psi).is_some() {
            found.push(psi);
        }
    }
    Ok(found)
}

/// Convolution product of two maps H -> A.
pub fn reg_convolve(h: &HopfAlgebra, a: &Algebra, f: &Matrix, g: &Matrix) -> Matrix {
    crate::algebra::convolve(h.coalgebra(), a, f, g)
}

/// What the bimeasuring-to-action transport produced, together with the
/// empirical findings about the published formula and linearity claims.
#[derive(Clone, Debug)]
pub struct CorollaryTransport {
    pub bismash: Bismash,
    /// the bimeasuring extended to a functional on the bismash carrier
    pub psi_h: Matrix,
    /// the comodule automorphism alpha(psi_h) of H (x) A
    pub phi: Matrix,
    /// the twisted action beta(phi)
    pub mubar: BilinearPairing,
    /// phi restricted to the embedded T (x) A is the identity
    pub fixes_t_leg: bool,
    /// phi restricted to the embedded N (x) A is the identity
    pub fixes_n_leg: bool,
    /// whether the published closed formula for the twisted action, read
    /// with sequential comultiplication indices, reproduces beta(alpha(psi))
    pub printed_formula_matches: bool,
    /// whether composing the two intermediate steps of the published
    /// derivation reproduces beta(alpha(psi))
    pub stepwise_formula_matches: bool,
    /// whether the steps with the dropped action twists restored reproduce
    /// beta(alpha(psi))
    pub corrected_formula_matches: bool,
}

/// Transport a skew bimeasuring of a matched pair to a twisted Hopf-module
/// action over the bismash product, and evaluate the published closed
/// formula for the action as a cross check. The authoritative construction
/// is the beta(alpha(psi)) composite; the published formula has inconsistent
/// comultiplication indices as printed, so its plausible readings are
/// evaluated and reported rather than asserted.
pub fn bimeasuring_to_action(
    mp: &MatchedPair,
    psi: &BilinearPairing,
    a: &Algebra,
) -> Result<CorollaryTransport, HopfModuleError> {
    let field = mp.field();
    if !a.is_commutative() {
        return Err(HopfModuleError::NotAnAutomorphism(
            "target algebra must be commutative".into(),
        ));
    }
    let checked = crate::matched_pair::check_skew_bimeasuring(mp, psi, a)?;
    if let Err(ce) = checked.verdict {
        return Err(HopfModuleError::NotAHopfModule(ce));
    }
    let h = bismash(mp)?;
    let dn = mp.n.dim();
    let dt = mp.t.dim();
    let da = a.dim;
    // extend psi to the bismash by psi_h(nt) = psi(n (x) t) on products,
    // which is psi composed with the inverse of the identification
    let inv = h.identify_inverse();
    let psi_h = Matrix::from_fn(field, da, dt * dn, |r, col| {
        let nt = inv.apply(&basis_vec(field, dt * dn, col));
        psi_h_apply(psi, dn, dt, &nt, a)[r].clone()
    });
    let phi = alpha(&h.hopf, a, &psi_h)?;
    let mubar = beta(&h.hopf, a, &phi)?;
    // the twisted structure is a Hopf module with coinvariants of dim A
    let tm = twisted_module(&h.hopf, a, &mubar);
    validate_hopf_module(&tm).map_err(HopfModuleError::NotAHopfModule)?;
    let coin = coinvariants(&tm)?;
    if coin.dim() != da {
        return Err(HopfModuleError::NotAHopfModule(Counterexample {
            law: "twisted coinvariants have dimension dim A".into(),
            indices: vec![coin.dim(), da],
            lhs: vec![],
            rhs: vec![],
        }));
    }
    // phi fixes the embedded tensor factors pointwise
    let embed_leg = |emb: &Matrix| -> bool {
        (0..emb.cols).all(|j| {
            (0..da).all(|r| {
                let x = tensor_with_a(field, &emb.col(j), r, da);
                phi.apply(&x) == x
            })
        })
    };
    let fixes_t_leg = embed_leg(&h.embed_t);
    let fixes_n_leg = embed_leg(&h.embed_n);
    let printed_formula_matches =
        formula_agrees(mp, psi, a, &h, &mubar, FormulaReading::PrintedFinal);
    let stepwise_formula_matches =
        formula_agrees(mp, psi, a, &h, &mubar, FormulaReading::PrintedStepwise);
    let corrected_formula_matches =
        formula_agrees(mp, psi, a, &h, &mubar, FormulaReading::Corrected);
    Ok(CorollaryTransport {
        bismash: h,
        psi_h,
        phi,
        mubar,
        fixes_t_leg,
        fixes_n_leg,
        printed_formula_matches,
        stepwise_formula_matches,
        corrected_formula_matches,
    })
}

fn tensor_with_a(field: FieldSpec, hv: &[Scalar], r: usize, da: usize) -> Vec<Scalar> {
    let mut out = zero_vec(field, hv.len() * da);
    for (i, c) in hv.iter().enumerate() {
        out[flatten(i, r, da)] = c.clone();
    }
    out
}

/// Which rendition of the published action formula to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum FormulaReading {
    /// the final display with sequential comultiplication indices
    PrintedFinal,
    /// the two intermediate derivation lines, composed
    PrintedStepwise,
    /// the steps with the dropped action twists restored
    Corrected,
}

/// Compare a rendition of the published closed formula against the
/// beta(alpha(psi)) composite on all basis tensors. The formulas are stated
/// on N (x) T (x) A with the module element m (x) s read as the product ms
/// in the bismash algebra.
fn formula_agrees(
    mp: &MatchedPair,
    psi: &BilinearPairing,
    a: &Algebra,
    h: &Bismash,
    mubar: &BilinearPairing,
    reading: FormulaReading,
) -> bool {
    let field = mp.field();
    let dn = mp.n.dim();
    let dt = mp.t.dim();
    let da = a.dim;
    let coords = dn * dt * da;
    // change of basis from (m, s, a) coordinates to the bismash carrier
    let c = Matrix::from_fn(field, dt * dn * da, coords, |row, col| {
        let (ms, r) = unflatten(col, da);
        let hv = h.identify.col(ms);
        let (hrow, rr) = unflatten(row, da);
        if rr == r {
            hv[hrow].clone()
        } else {
            field.zero()
        }
    });
    let c_inv = c.inverse().expect("identification is invertible");
    let t_step = |ti: usize| step_matrix_t(mp, psi, a, h, ti, reading);
    let n_step = |ni: usize| step_matrix_n(mp, psi, a, ni, reading);
    for ni in 0..dn {
        for ti in 0..dt {
            let acting = product_nt(h, &basis_vec(field, dt, ti), &basis_vec(field, dn, ni));
            let reference = Matrix::from_fn(field, coords, coords, |row, col| {
                // conjugate mubar by the identification
                let x = c.col(col);
                let out = mubar.apply(&acting, &x);
                c_inv.apply(&out)[row].clone()
            });
            let candidate = match reading {
                FormulaReading::PrintedFinal => printed_final_matrix(mp, psi, a, h, ni, ti),
                _ => n_step(ni).mul(&t_step(ti)),
            };
            if reference != candidate {
                return false;
            }
        }
    }
    true
}

/// The action of a T basis vector on (m, s, a) coordinates.
///
/// Printed: t_1[m_1] (x) t_2 s (x) psi(t_3 m_2) a.
/// Corrected: t_1[m_1] (x) t_2^(m_2) s (x) psi(t_3 m_3) a.
fn step_matrix_t(
    mp: &MatchedPair,
    psi: &BilinearPairing,
    a: &Algebra,
    h: &Bismash,
    ti: usize,
    reading: FormulaReading,
) -> Matrix {
    let field = mp.field();
    let dn = mp.n.dim();
    let dt = mp.t.dim();
    let da = a.dim;
    let coords = dn * dt * da;
    let (bracket, superscript) = crate::matched_pair::derived_actions(mp);
    let inv = h.identify_inverse();
    // psi(t m): the product of embedded t and m in H, evaluated under psi
    let psi_tm = |t: usize, m: usize| -> Vec<Scalar> {
        let tm = h
            .hopf
            .algebra()
            .mul_vec(&h.embed_t.col(t), &h.embed_n.col(m));
        psi_h_apply(psi, dn, dt, &inv.apply(&tm), a)
    };
    let mut out = Matrix::zero(field, coords, coords);
    for col in 0..coords {
        let (ms, r) = unflatten(col, da);
        let (mi, si) = unflatten(ms, dt);
        let mut acc = zero_vec(field, coords);
        if reading == FormulaReading::Corrected {
            for (t1, trest, ct1) in sweedler2(&mp.t, ti) {
                for (t2, t3, ct2) in trest {
                    for (m1, mrest, cm1) in sweedler2(&mp.n, mi) {
                        for (m2, m3, cm2) in mrest {
                            let n_leg =
                                bracket.apply(&basis_vec(field, dt, t1), &basis_vec(field, dn, m1));
                            let t_leg = mp.t.algebra().mul_vec(
                                &superscript
                                    .apply(&basis_vec(field, dt, t2), &basis_vec(field, dn, m2)),
                                &basis_vec(field, dt, si),
                            );
                            let aval = a.mul_vec(&psi_tm(t3, m3), &basis_vec(field, da, r));
                            let scale = ct1.mul(&ct2).mul(&cm1).mul(&cm2);
                            accumulate(mp, &mut acc, &n_leg, &t_leg, &aval, &scale);
                        }
                    }
                }
            }
        } else {
            for (t1, trest, ct1) in sweedler2(&mp.t, ti) {
                for (t2, t3, ct2) in trest {
                    for (m1, m2, cm) in sweedler1(&mp.n, mi) {
                        let n_leg =
                            bracket.apply(&basis_vec(field, dt, t1), &basis_vec(field, dn, m1));
                        let t_leg = mp.t.algebra().mul_basis(t2, si);
                        let aval = a.mul_vec(&psi_tm(t3, m2), &basis_vec(field, da, r));
                        let scale = ct1.mul(&ct2).mul(&cm);
                        accumulate(mp, &mut acc, &n_leg, &t_leg, &aval, &scale);
                    }
                }
            }
        }
        for (row, v) in acc.into_iter().enumerate() {
            out.set(row, col, v);
        }
    }
    out
}

/// The action of an N basis vector on (m, s, a) coordinates.
///
/// Printed: n_1 m (x) n_2(s_1) (x) psi(n_3 s_2) a.
/// Corrected: n_1 m_1 (x) s_1 (x) psi(n_2, m_2(s_2)) a.
fn step_matrix_n(
    mp: &MatchedPair,
    psi: &BilinearPairing,
    a: &Algebra,
    ni: usize,
    reading: FormulaReading,
) -> Matrix {
    let field = mp.field();
    let dn = mp.n.dim();
    let dt = mp.t.dim();
    let da = a.dim;
    let coords = dn * dt * da;
    let mut out = Matrix::zero(field, coords, coords);
    for col in 0..coords {
        let (ms, r) = unflatten(col, da);
        let (mi, si) = unflatten(ms, dt);
        let mut acc = zero_vec(field, coords);
        match reading {
            FormulaReading::Corrected => {
                for (n1, n2, cn) in sweedler1(&mp.n, ni) {
                    for (m1, m2, cm) in sweedler1(&mp.n, mi) {
                        for (s1, s2, cs) in sweedler1(&mp.t, si) {
                            let n_leg = mp.n.algebra().mul_basis(n1, m1);
                            let t_leg = basis_vec(field, dt, s1);
                            let acted =
                                mp.act_t(&basis_vec(field, dn, m2), &basis_vec(field, dt, s2));
                            let coeff = psi.apply(&basis_vec(field, dn, n2), &acted);
                            let aval = a.mul_vec(&coeff, &basis_vec(field, da, r));
                            let scale = cn.mul(&cm).mul(&cs);
                            accumulate(mp, &mut acc, &n_leg, &t_leg, &aval, &scale);
                        }
                    }
                }
            }
            _ => {
                for (n1, nrest, cn1) in sweedler2(&mp.n, ni) {
                    for (n2, n3, cn2) in nrest {
                        for (s1, s2, cs) in sweedler1(&mp.t, si) {
                            let n_leg = mp.n.algebra().mul_basis(n1, mi);
                            let t_leg =
                                mp.act_t(&basis_vec(field, dn, n2), &basis_vec(field, dt, s1));
                            let coeff = psi
                                .apply(&basis_vec(field, dn, n3), &basis_vec(field, dt, s2));
                            let aval = a.mul_vec(&coeff, &basis_vec(field, da, r));
                            let scale = cn1.mul(&cn2).mul(&cs);
                            accumulate(mp, &mut acc, &n_leg, &t_leg, &aval, &scale);
                        }
                    }
                }
            }
        }
        for (row, v) in acc.into_iter().enumerate() {
            out.set(row, col, v);
        }
    }
    out
}

/// The final printed display with sequential comultiplication indices:
/// n_1 t_1[m_1] (x) n_2(t_2 s_1) (x) psi(n_3 t_3 s_2) psi(t_4 m_2) a.
fn printed_final_matrix(
    mp: &MatchedPair,
    psi: &BilinearPairing,
    a: &Algebra,
    h: &Bismash,
    ni: usize,
    ti: usize,
) -> Matrix {
    let field = mp.field();
    let dn = mp.n.dim();
    let dt = mp.t.dim();
    let da = a.dim;
    let coords = dn * dt * da;
    let inv = h.identify_inverse();
    let (bracket, _) = crate::matched_pair::derived_actions(mp);
    let mut out = Matrix::zero(field, coords, coords);
    for col in 0..coords {
        let (ms, r) = unflatten(col, da);
        let (mi, si) = unflatten(ms, dt);
        let mut acc = zero_vec(field, coords);
        for (n1, nrest, cn1) in sweedler2(&mp.n, ni) {
            for (n2, n3, cn2) in nrest {
                for (t1, trest, ct1) in sweedler2(&mp.t, ti) {
                    for (t2, tr2, ct2) in trest {
                        for (t3, t4, ct3) in sweedler1(&mp.t, tr2) {
                            for (m1, m2, cm) in sweedler1(&mp.n, mi) {
                                for (s1, s2, cs) in sweedler1(&mp.t, si) {
                                    let n_leg = mp.n.algebra().mul_vec(
                                        &basis_vec(field, dn, n1),
                                        &bracket.apply(
                                            &basis_vec(field, dt, t1),
                                            &basis_vec(field, dn, m1),
                                        ),
                                    );
                                    let t_leg = mp.act_t(
                                        &basis_vec(field, dn, n2),
                                        &mp.t.algebra().mul_basis(t2, s1),
                                    );
                                    let p1 = h.hopf.algebra().mul_vec(
                                        &product_nt(
                                            h,
                                            &basis_vec(field, dt, t3),
                                            &basis_vec(field, dn, n3),
                                        ),
                                        &h.embed_t.col(s2),
                                    );
                                    let p2 = h
                                        .hopf
                                        .algebra()
                                        .mul_vec(&h.embed_t.col(t4), &h.embed_n.col(m2));
                                    let c1 = psi_h_apply(psi, dn, dt, &inv.apply(&p1), a);
                                    let c2 = psi_h_apply(psi, dn, dt, &inv.apply(&p2), a);
                                    let aval =
                                        a.mul_vec(&a.mul_vec(&c1, &c2), &basis_vec(field, da, r));
                                    let scale = cn1
                                        .mul(&cn2)
                                        .mul(&ct1)
                                        .mul(&ct2)
                                        .mul(&ct3)
                                        .mul(&cm)
                                        .mul(&cs);
                                    accumulate(mp, &mut acc, &n_leg, &t_leg, &aval, &scale);
                                }
                            }
                        }
                    }
                }
            }
        }
        for (row, v) in acc.into_iter().enumerate() {
            out.set(row, col, v);
        }
    }
    out
}

/// Add n_leg (x) t_leg (x) aval, scaled, into an (m, s, a) coordinate
/// accumulator.
fn accumulate(
    mp: &MatchedPair,
    acc: &mut [Scalar],
    n_leg: &[Scalar],
    t_leg: &[Scalar],
    aval: &[Scalar],
    scale: &Scalar,
) {
    let dt = mp.t.dim();
    let da = aval.len();
    for (i, ci) in n_leg.iter().enumerate() {
        if ci.is_zero() {
            continue;
        }
        for (j, cj) in t_leg.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            for (rr, ca) in aval.iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                let pos = flatten(flatten(i, j, dt), rr, da);
                acc[pos] = acc[pos].add(&ci.mul(cj).mul(ca).mul(scale));
            }
        }
    }
}

/// The product nt in the bismash algebra.
fn product_nt(h: &Bismash, tv: &[Scalar], nv: &[Scalar]) -> Vec<Scalar> {
    h.hopf
        .algebra()
        .mul_vec(&h.embed_n.apply(nv), &h.embed_t.apply(tv))
}

/// Evaluate psi on an element written in n (x) t coordinates.
fn psi_h_apply(
    psi: &BilinearPairing,
    dn: usize,
    dt: usize,
    nt: &[Scalar],
    a: &Algebra,
) -> Vec<Scalar> {
    let mut out = zero_vec(a.field, a.dim);
    for idx in 0..dn * dt {
        if nt[idx].is_zero() {
            continue;
        }
        let (ni, ti) = unflatten(idx, dt);
        out = vec_add(&out, &vec_scale(psi.get(ni, ti), &nt[idx]));
    }
    out
}

/// Two-fold comultiplication terms (x_1, x_2) of a basis vector.
fn sweedler1(hopf: &HopfAlgebra, i: usize) -> Vec<(usize, usize, Scalar)> {
    let d = hopf.dim();
    let dv = hopf.coalgebra().comult_basis(i);
    let mut out = Vec::new();
    for idx in 0..d * d {
        if !dv[idx].is_zero() {
            let (x, y) = unflatten(idx, d);
            out.push((x, y, dv[idx].clone()));
        }
    }
    out
}

/// Three-fold comultiplication terms grouped as (x_1, [(x_2, x_3)]).
fn sweedler2(hopf: &HopfAlgebra, i: usize) -> Vec<(usize, Vec<(usize, usize, Scalar)>, Scalar)> {
    sweedler1(hopf, i)
        .into_iter()
        .map(|(x1, rest, c)| (x1, sweedler1(hopf, rest), c))
        .collect()
}
