//! Measurings and bimeasurings: verification, the convolution-algebra
//! correspondence, factorization through the abelianization, polynomial
//! examples on a degree window, and exhaustive enumeration over prime fields.
//!
//! A measuring is a pairing psi: C (x) B -> A with
//! `psi(c, bb') = psi(c_1, b) psi(c_2, b')` and `psi(c, 1) = eps(c)`.
//! A bimeasuring between bialgebras N and T additionally measures in the
//! other slot. Throughout, `f(u, v)` abbreviates `f(u (x) v)`.

use crate::algebra::{
    Algebra, Bialgebra, BilinearPairing, Check, Coalgebra, Counterexample,
};
use crate::enumerate::{self, EnumError};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{
    basis_vec, flatten, unflatten, vec_add, vec_is_zero, vec_scale, zero_vec, Matrix, Tensor3,
};
use crate::structure_ops::QuotientPresentation;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum MeasuringError {
    #[error("pairing shape does not match the carriers: {0}")]
    ShapeMismatch(String),
    #[error("coalgebra slot is not cocommutative")]
    NotCocommutative,
    #[error("pairing does not vanish on the commutator ideal")]
    DoesNotVanishOnIdeal,
    #[error("degree window needs characteristic 0 or p > N")]
    WindowCharacteristic,
    #[error(transparent)]
    Enumeration(#[from] EnumError),
}

/// A pairing together with the verdict of a measuring or bimeasuring check.
#[derive(Clone, Debug)]
pub struct MeasuringWitness {
    pub psi: BilinearPairing,
    pub verdict: Check,
}

impl MeasuringWitness {
    pub fn passed(&self) -> bool {
        self.verdict.is_ok()
    }
}

fn check_shape(
    psi: &BilinearPairing,
    dim_x: usize,
    dim_y: usize,
) -> Result<(), MeasuringError> {
    if psi.dim_x != dim_x || psi.dim_y != dim_y {
        return Err(MeasuringError::ShapeMismatch(format!(
            "pairing is {}x{}, carriers are {}x{}",
            psi.dim_x, psi.dim_y, dim_x, dim_y
        )));
    }
    Ok(())
}

/// The first-slot comultiplication law: for all basis triples,
/// `psi(c, e_j e_k) = psi(c_1, e_j) psi(c_2, e_k)`.
fn comult_slot_law(
    psi: &BilinearPairing,
    c: &Coalgebra,
    b_mul: &dyn Fn(usize, usize) -> Option<Vec<Scalar>>,
    a: &Algebra,
    law: &str,
) -> Check {
    let dc = c.dim;
    for i in 0..dc {
        let di = c.comult_basis(i);
        for j in 0..psi.dim_y {
            for k in 0..psi.dim_y {
                let Some(prod) = b_mul(j, k) else { continue };
                let lhs = psi.apply(&basis_vec(c.field, dc, i), &prod);
                let mut rhs = zero_vec(a.field, a.dim);
                for idx in 0..dc * dc {
                    if di[idx].is_zero() {
                        continue;
                    }
                    let (c1, c2) = unflatten(idx, dc);
                    let term = a.mul_vec(psi.get(c1, j), psi.get(c2, k));
                    rhs = vec_add(&rhs, &vec_scale(&term, &di[idx]));
                }
                if lhs != rhs {
                    return Err(Counterexample {
                        law: law.into(),
                        indices: vec![i, j, k],
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    Ok(())
}

/// The first-slot unit law: `psi(c, 1) = eps(c) 1_A`.
fn unit_slot_law(
    psi: &BilinearPairing,
    c: &Coalgebra,
    b_unit: &[Scalar],
    a: &Algebra,
    law: &str,
) -> Check {
    for i in 0..c.dim {
        let lhs = psi.apply(&basis_vec(c.field, c.dim, i), b_unit);
        let rhs = vec_scale(&a.unit, &c.counit[i]);
        if lhs != rhs {
            return Err(Counterexample {
                law: law.into(),
                indices: vec![i],
                lhs,
                rhs,
            });
        }
    }
    Ok(())
}

fn swapped(psi: &BilinearPairing) -> BilinearPairing {
    BilinearPairing::from_fn(psi.field, psi.dim_y, psi.dim_x, psi.dim_a, |i, j| {
        psi.get(j, i).clone()
    })
}

/// Check that psi: C (x) B -> A is a measuring.
pub fn check_measuring(
    psi: &BilinearPairing,
    c: &Coalgebra,
    b: &Algebra,
    a: &Algebra,
) -> Result<MeasuringWitness, MeasuringError> {
    check_shape(psi, c.dim, b.dim)?;
    let mul = |j: usize, k: usize| Some(b.mul_basis(j, k));
    let verdict = comult_slot_law(psi, c, &mul, a, "psi(c, bb') = psi(c_1, b) psi(c_2, b')")
        .and_then(|_| unit_slot_law(psi, c, &b.unit, a, "psi(c, 1) = eps(c) 1"));
    Ok(MeasuringWitness {
        psi: psi.clone(),
        verdict,
    })
}

/// Check that psi: N (x) T -> A is a bimeasuring: N measures T and T
/// measures N, four equations in all.
pub fn check_bimeasuring(
    psi: &BilinearPairing,
    n: &Bialgebra,
    t: &Bialgebra,
    a: &Algebra,
) -> Result<MeasuringWitness, MeasuringError> {
    check_shape(psi, n.dim(), t.dim())?;
    let flip = swapped(psi);
    let mul_t = |j: usize, k: usize| Some(t.algebra.mul_basis(j, k));
    let mul_n = |j: usize, k: usize| Some(n.algebra.mul_basis(j, k));
    let verdict = comult_slot_law(
        psi,
        &n.coalgebra,
        &mul_t,
        a,
        "psi(n, ts) = psi(n_1, t) psi(n_2, s)",
    )
    .and_then(|_| unit_slot_law(psi, &n.coalgebra, &t.algebra.unit, a, "psi(n, 1) = eps(n) 1"))
    .and_then(|_| {
        comult_slot_law(
            &flip,
            &t.coalgebra,
            &mul_n,
            a,
            "psi(nm, t) = psi(n, t_1) psi(m, t_2)",
        )
    })
    .and_then(|_| unit_slot_law(&flip, &t.coalgebra, &n.algebra.unit, a, "psi(1, t) = eps(t) 1"));
    Ok(MeasuringWitness {
        psi: psi.clone(),
        verdict,
    })
}

/// The convolution algebra Hom(C, A): elements are A-valued linear maps on
/// C, flattened as matrices in row-major order (row r of A, column i of C at
/// index `r * dim C + i`), with product `(f * g)(c) = f(c_1) g(c_2)` and unit
/// `eta eps`.
pub fn convolution_algebra(c: &Coalgebra, a: &Algebra) -> Algebra {
    let dc = c.dim;
    let da = a.dim;
    let dim = da * dc;
    let mut mult = Tensor3::new(c.field, (dim, dim, dim));
    for ((m, i, k), cv) in c.comult.iter() {
        for r in 0..da {
            for s in 0..da {
                let prod = a.mul_basis(r, s);
                for (t, av) in prod.iter().enumerate() {
                    if av.is_zero() {
                        continue;
                    }
                    mult.add_to(r * dc + i, s * dc + k, t * dc + m, &cv.mul(av));
                }
            }
        }
    }
    let mut unit = zero_vec(c.field, dim);
    for r in 0..da {
        for i in 0..dc {
            unit[r * dc + i] = a.unit[r].mul(&c.counit[i]);
        }
    }
    Algebra::new(c.field, dim, mult, unit)
}

/// The map rho: B -> Hom(C, A) with `rho(b)(c) = psi(c, b)`, as a matrix
/// into the flattened convolution algebra.
pub fn psi_to_rho(psi: &BilinearPairing) -> Matrix {
    let dc = psi.dim_x;
    let da = psi.dim_a;
    Matrix::from_fn(psi.field, da * dc, psi.dim_y, |row, b| {
        let (r, i) = (row / dc, row % dc);
        psi.get(i, b)[r].clone()
    })
}

/// Inverse of [`psi_to_rho`].
pub fn rho_to_psi(rho: &Matrix, dim_c: usize, dim_a: usize) -> BilinearPairing {
    assert_eq!(rho.rows, dim_a * dim_c);
    BilinearPairing::from_fn(rho.field, dim_c, rho.cols, dim_a, |i, b| {
        (0..dim_a).map(|r| rho.get(r * dim_c + i, b).clone()).collect()
    })
}

/// For cocommutative C, the map chi = (1 (x) psi)(Delta (x) 1) from
/// C (x) B to C (x) A, as a matrix.
pub fn psi_to_chi(psi: &BilinearPairing, c: &Coalgebra) -> Result<Matrix, MeasuringError> {
    if !c.is_cocommutative() {
        return Err(MeasuringError::NotCocommutative);
    }
    check_shape_x(psi, c.dim)?;
    let dc = c.dim;
    let da = psi.dim_a;
    let db = psi.dim_y;
    let mut chi = Matrix::zero(c.field, dc * da, dc * db);
    for i in 0..dc {
        let di = c.comult_basis(i);
        for j in 0..db {
            let col = flatten(i, j, db);
            for idx in 0..dc * dc {
                if di[idx].is_zero() {
                    continue;
                }
                let (c1, c2) = unflatten(idx, dc);
                let img = psi.get(c2, j);
                for (r, v) in img.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    let row = flatten(c1, r, da);
                    let cur = chi.get(row, col).add(&di[idx].mul(v));
                    chi.set(row, col, cur);
                }
            }
        }
    }
    Ok(chi)
}

fn check_shape_x(psi: &BilinearPairing, dim_x: usize) -> Result<(), MeasuringError> {
    if psi.dim_x != dim_x {
        return Err(MeasuringError::ShapeMismatch(format!(
            "pairing first slot is {}, coalgebra is {}",
            psi.dim_x, dim_x
        )));
    }
    Ok(())
}

/// Inverse of [`psi_to_chi`]: psi = (eps (x) 1) chi.
pub fn chi_to_psi(chi: &Matrix, c: &Coalgebra, dim_b: usize, dim_a: usize) -> BilinearPairing {
    let dc = c.dim;
    assert_eq!(chi.rows, dc * dim_a);
    assert_eq!(chi.cols, dc * dim_b);
    BilinearPairing::from_fn(c.field, dc, dim_b, dim_a, |i, j| {
        let col = chi.col(flatten(i, j, dim_b));
        let mut out = zero_vec(c.field, dim_a);
        for idx in 0..dc * dim_a {
            if col[idx].is_zero() {
                continue;
            }
            let (c1, r) = unflatten(idx, dim_a);
            out[r] = out[r].add(&c.counit[c1].mul(&col[idx]));
        }
        out
    })
}

/// Verify that chi is a map of C-rings: left C-colinear, unital over C, and
/// multiplicative along the cotensor product. These hold together exactly
/// when the underlying pairing is a measuring.
pub fn chi_is_c_algebra_map(
    chi: &Matrix,
    c: &Coalgebra,
    b: &Algebra,
    a: &Algebra,
) -> Check {
    let dc = c.dim;
    let db = b.dim;
    let da = a.dim;
    // colinearity: (Delta (x) 1_A) chi = (1_C (x) chi)(Delta (x) 1_B)
    for i in 0..dc {
        let di = c.comult_basis(i);
        for j in 0..db {
            let img = chi.col(flatten(i, j, db));
            let mut lhs = zero_vec(c.field, dc * dc * da);
            for idx in 0..dc * da {
                if img[idx].is_zero() {
                    continue;
                }
                let (c1, r) = unflatten(idx, da);
                let d1 = c.comult_basis(c1);
                for idx2 in 0..dc * dc {
                    if d1[idx2].is_zero() {
                        continue;
                    }
                    let (x, y) = unflatten(idx2, dc);
                    let pos = (x * dc + y) * da + r;
                    lhs[pos] = lhs[pos].add(&img[idx].mul(&d1[idx2]));
                }
            }
            let mut rhs = zero_vec(c.field, dc * dc * da);
            for idx in 0..dc * dc {
                if di[idx].is_zero() {
                    continue;
                }
                let (c1, c2) = unflatten(idx, dc);
                let inner = chi.col(flatten(c2, j, db));
                for idx2 in 0..dc * da {
                    if inner[idx2].is_zero() {
                        continue;
                    }
                    let (y, r) = unflatten(idx2, da);
                    let pos = (c1 * dc + y) * da + r;
                    rhs[pos] = rhs[pos].add(&di[idx].mul(&inner[idx2]));
                }
            }
            if lhs != rhs {
                return Err(Counterexample {
                    law: "chi is left C-colinear".into(),
                    indices: vec![i, j],
                    lhs,
                    rhs,
                });
            }
        }
    }
    // unit over C: chi(c (x) 1_B) = c (x) 1_A
    for i in 0..dc {
        let mut arg = zero_vec(c.field, dc * db);
        for (j, v) in b.unit.iter().enumerate() {
            arg[flatten(i, j, db)] = v.clone();
        }
        let lhs = chi.apply(&arg);
        let mut rhs = zero_vec(c.field, dc * da);
        for (r, v) in a.unit.iter().enumerate() {
            rhs[flatten(i, r, da)] = v.clone();
        }
        if lhs != rhs {
            return Err(Counterexample {
                law: "chi(c (x) 1) = c (x) 1".into(),
                indices: vec![i],
                lhs,
                rhs,
            });
        }
    }
    // multiplicativity along the cotensor product: on c (x) b (x) b',
    // multiply-then-map equals map-on-both-legs-then-multiply,
    // chi(c (x) bb') = c_1 (x) psi(c_2, b) psi(c_3, b')
    let psi = chi_to_psi(chi, c, db, da);
    for i in 0..dc {
        let di = c.comult_basis(i);
        for j in 0..db {
            for k in 0..db {
                let prod = b.mul_basis(j, k);
                let mut arg = zero_vec(c.field, dc * db);
                for (m, v) in prod.iter().enumerate() {
                    arg[flatten(i, m, db)] = v.clone();
                }
                let lhs = chi.apply(&arg);
                let mut rhs = zero_vec(c.field, dc * da);
                for idx in 0..dc * dc {
                    if di[idx].is_zero() {
                        continue;
                    }
                    let (c1, c23) = unflatten(idx, dc);
                    let d2 = c.comult_basis(c23);
                    for idx2 in 0..dc * dc {
                        if d2[idx2].is_zero() {
                            continue;
                        }
                        let (c2, c3) = unflatten(idx2, dc);
                        let term = a.mul_vec(psi.get(c2, j), psi.get(c3, k));
                        let coeff = di[idx].mul(&d2[idx2]);
                        for (r, v) in term.iter().enumerate() {
                            if v.is_zero() {
                                continue;
                            }
                            let pos = flatten(c1, r, da);
                            rhs[pos] = rhs[pos].add(&coeff.mul(v));
                        }
                    }
                }
                if lhs != rhs {
                    return Err(Counterexample {
                        law: "chi multiplicative along the cotensor product".into(),
                        indices: vec![i, j, k],
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    Ok(())
}

/// The subalgebra of A generated by the unit and all pairing values is
/// commutative.
pub fn image_commutativity(psi: &BilinearPairing, a: &Algebra) -> Check {
    let mut gens = vec![a.unit.clone()];
    for i in 0..psi.dim_x {
        for j in 0..psi.dim_y {
            gens.push(psi.get(i, j).clone());
        }
    }
    let sub = enumerate::subalgebra_closure(a, &gens);
    for r in 0..sub.basis.rows {
        for s in r + 1..sub.basis.rows {
            let x = sub.basis.row(r);
            let y = sub.basis.row(s);
            let lhs = a.mul_vec(&x, &y);
            let rhs = a.mul_vec(&y, &x);
            if lhs != rhs {
                return Err(Counterexample {
                    law: "pairing image generates a commutative subalgebra".into(),
                    indices: vec![r, s],
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(())
}

/// Factor a bimeasuring psi: N (x) T -> A through the abelianization of T:
/// the unique psi_bar on N (x) T_ab with `psi_bar(1 (x) pi) = psi`.
pub fn factor_bimeasuring_through_ab(
    psi: &BilinearPairing,
    t_ab: &QuotientPresentation,
) -> Result<BilinearPairing, MeasuringError> {
    for i in 0..psi.dim_x {
        for r in 0..t_ab.ideal.basis.rows {
            let v = t_ab.ideal.basis.row(r);
            let mut acc = zero_vec(psi.field, psi.dim_a);
            for (j, coeff) in v.iter().enumerate() {
                if !coeff.is_zero() {
                    acc = vec_add(&acc, &vec_scale(psi.get(i, j), coeff));
                }
            }
            if !vec_is_zero(&acc) {
                return Err(MeasuringError::DoesNotVanishOnIdeal);
            }
        }
    }
    let q = t_ab.projection.rows;
    Ok(BilinearPairing::from_fn(
        psi.field,
        psi.dim_x,
        q,
        psi.dim_a,
        |i, jbar| {
            let rep = t_ab.section.col(jbar);
            let mut acc = zero_vec(psi.field, psi.dim_a);
            for (j, coeff) in rep.iter().enumerate() {
                if !coeff.is_zero() {
                    acc = vec_add(&acc, &vec_scale(psi.get(i, j), coeff));
                }
            }
            acc
        },
    ))
}

/// Two-sided variant: factor through both abelianizations.
pub fn factor_bimeasuring_two_sided(
    psi: &BilinearPairing,
    n_ab: &QuotientPresentation,
    t_ab: &QuotientPresentation,
) -> Result<BilinearPairing, MeasuringError> {
    let half = factor_bimeasuring_through_ab(psi, t_ab)?;
    let flipped = swapped(&half);
    let both = factor_bimeasuring_through_ab(&flipped, n_ab)?;
    Ok(swapped(&both))
}

/// A degree-truncated window on the polynomial bialgebra: monomials x^0..x^N
/// with multiplication defined only when degrees fit, the full binomial
/// comultiplication, and the alternating-sign antipode.
#[derive(Clone, Debug)]
pub struct PolynomialWindow {
    pub field: FieldSpec,
    pub bound: usize,
    pub coalgebra: Coalgebra,
    pub antipode: Matrix,
}

impl PolynomialWindow {
    pub fn new(field: FieldSpec, bound: usize) -> Result<Self, MeasuringError> {
        if let FieldSpec::Prime(p) = field {
            if (p as usize) <= bound {
                return Err(MeasuringError::WindowCharacteristic);
            }
        }
        let dim = bound + 1;
        let mut comult = Tensor3::new(field, (dim, dim, dim));
        for n in 0..dim {
            for k in 0..=n {
                comult.set(n, k, n - k, crate::catalog::binomial(field, n as u64, k as u64));
            }
        }
        let counit: Vec<Scalar> = (0..dim)
            .map(|i| if i == 0 { field.one() } else { field.zero() })
            .collect();
        let coalgebra = Coalgebra::new(field, dim, comult, counit)
            .validated()
            .expect("binomial comultiplication is coassociative");
        let antipode = Matrix::from_fn(field, dim, dim, |i, j| {
            if i != j {
                field.zero()
            } else if i % 2 == 0 {
                field.one()
            } else {
                field.one().neg()
            }
        });
        Ok(PolynomialWindow {
            field,
            bound,
            coalgebra,
            antipode,
        })
    }

    pub fn dim(&self) -> usize {
        self.bound + 1
    }

    /// x^i x^j, defined only when i + j stays inside the window.
    pub fn mul_basis(&self, i: usize, j: usize) -> Option<Vec<Scalar>> {
        if i + j > self.bound {
            return None;
        }
        Some(basis_vec(self.field, self.dim(), i + j))
    }

    pub fn unit(&self) -> Vec<Scalar> {
        basis_vec(self.field, self.dim(), 0)
    }
}

/// The pairing `psi(x^i, x^j) = delta_{i,j} i! alpha^i` into A, with the
/// convention alpha^0 = 1 even when alpha = 0.
pub fn polynomial_bimeasuring(
    alpha: &[Scalar],
    window: &PolynomialWindow,
    a: &Algebra,
) -> BilinearPairing {
    let dim = window.dim();
    let mut powers = vec![a.unit.clone()];
    for _ in 1..dim {
        let prev = powers.last().unwrap().clone();
        powers.push(a.mul_vec(&prev, alpha));
    }
    BilinearPairing::from_fn(window.field, dim, dim, a.dim, |i, j| {
        if i != j {
            return zero_vec(window.field, a.dim);
        }
        let mut fact = window.field.one();
        for m in 2..=i as u64 {
            fact = fact.mul(&window.field.from_i64(m as i64));
        }
        vec_scale(&powers[i], &fact)
    })
}

/// Measuring check for psi: C (x) W -> A where W is a window: product
/// conditions are asserted only where the window multiplication is defined.
pub fn check_measuring_window(
    psi: &BilinearPairing,
    c: &Coalgebra,
    w: &PolynomialWindow,
    a: &Algebra,
) -> Result<MeasuringWitness, MeasuringError> {
    check_shape(psi, c.dim, w.dim())?;
    let mul = |j: usize, k: usize| w.mul_basis(j, k);
    let verdict = comult_slot_law(psi, c, &mul, a, "psi(c, bb') = psi(c_1, b) psi(c_2, b')")
        .and_then(|_| unit_slot_law(psi, c, &w.unit(), a, "psi(c, 1) = eps(c) 1"));
    Ok(MeasuringWitness {
        psi: psi.clone(),
        verdict,
    })
}

/// Bimeasuring check for psi: W (x) W -> A with both slots window-typed.
pub fn check_bimeasuring_window(
    psi: &BilinearPairing,
    w: &PolynomialWindow,
    a: &Algebra,
) -> Result<MeasuringWitness, MeasuringError> {
    check_shape(psi, w.dim(), w.dim())?;
    let flip = swapped(psi);
    let mul = |j: usize, k: usize| w.mul_basis(j, k);
    let verdict = comult_slot_law(
        psi,
        &w.coalgebra,
        &mul,
        a,
        "psi(n, ts) = psi(n_1, t) psi(n_2, s)",
    )
    .and_then(|_| unit_slot_law(psi, &w.coalgebra, &w.unit(), a, "psi(n, 1) = eps(n) 1"))
    .and_then(|_| {
        comult_slot_law(
            &flip,
            &w.coalgebra,
            &mul,
            a,
            "psi(nm, t) = psi(n, t_1) psi(m, t_2)",
        )
    })
    .and_then(|_| unit_slot_law(&flip, &w.coalgebra, &w.unit(), a, "psi(1, t) = eps(t) 1"));
    Ok(MeasuringWitness {
        psi: psi.clone(),
        verdict,
    })
}

fn pairing_from_flat(
    field: FieldSpec,
    dim_x: usize,
    dim_y: usize,
    dim_a: usize,
    flat: &[Scalar],
) -> BilinearPairing {
    BilinearPairing::from_fn(field, dim_x, dim_y, dim_a, |i, j| {
        flat[(i * dim_y + j) * dim_a..(i * dim_y + j) * dim_a + dim_a].to_vec()
    })
}

/// Exhaustively list the bimeasurings N (x) T -> A over F_p, lexicographic
/// on tables. Entries forced by the unit equations are pinned before the
/// scan when the units are standard basis vectors. Over the rationals only
/// the ground-field target is supported, by reduction to bialgebra maps into
/// the dual.
pub fn enumerate_bimeasurings(
    n: &Bialgebra,
    t: &Bialgebra,
    a: &Algebra,
    budget: u64,
) -> Result<Vec<BilinearPairing>, MeasuringError> {
    let field = n.field();
    if a.dim == 1 {
        // psi(n, t) = <f(n), t> 1_A for a bialgebra map f: N -> dual(T)
        let dual_t = crate::algebra::dual_bialgebra(t).expect("finite duals always exist");
        let maps = enumerate::enumerate_bialgebra_maps(n, &dual_t, budget)?;
        let mut out: Vec<BilinearPairing> = maps
            .into_iter()
            .map(|f| {
                BilinearPairing::from_fn(field, n.dim(), t.dim(), 1, |i, j| {
                    vec![f.get(j, i).mul(&a.unit[0])]
                })
            })
            .collect();
        out.sort_by(|x, y| x.flat().cmp(&y.flat()));
        out.dedup();
        return Ok(out);
    }
    if field == FieldSpec::Rationals {
        return Err(EnumError::RationalsNeedSolver.into());
    }

    let dn = n.dim();
    let dt = t.dim();
    let da = a.dim;
    // pin entries forced by psi(1, t) = eps(t) 1 and psi(n, 1) = eps(n) 1
    let unit_n = (0..dn).find(|&i| n.algebra.unit == basis_vec(field, dn, i));
    let unit_t = (0..dt).find(|&j| t.algebra.unit == basis_vec(field, dt, j));
    let mut pinned: Vec<Option<Vec<Scalar>>> = vec![None; dn * dt];
    if let Some(u) = unit_n {
        for j in 0..dt {
            pinned[u * dt + j] = Some(vec_scale(&a.unit, &t.coalgebra.counit[j]));
        }
    }
    if let Some(u) = unit_t {
        for i in 0..dn {
            pinned[i * dt + u] = Some(vec_scale(&a.unit, &n.coalgebra.counit[i]));
        }
    }
    let free: Vec<usize> = (0..dn * dt).filter(|&idx| pinned[idx].is_none()).collect();
    let needed = enumerate::VectorIter::count(field, free.len() * da).unwrap_or(u128::MAX);
    if needed > budget as u128 {
        return Err(EnumError::BudgetExceeded {
            needed,
            budget,
        }
        .into());
    }
    let mut out = Vec::new();
    for assignment in enumerate::VectorIter::new(field, free.len() * da).unwrap() {
        let mut psi = BilinearPairing::zero(field, dn, dt, da);
        for (slot, &idx) in free.iter().enumerate() {
            psi.set(idx / dt, idx % dt, assignment[slot * da..(slot + 1) * da].to_vec());
        }
        for idx in 0..dn * dt {
            if let Some(v) = &pinned[idx] {
                psi.set(idx / dt, idx % dt, v.clone());
            }
        }
        if check_bimeasuring(&psi, n, t, a)?.passed() {
            out.push(psi);
        }
    }
    out.sort_by(|x, y| x.flat().cmp(&y.flat()));
    Ok(out)
}

/// Raw table scan with no delegation, used as an independent oracle for the
/// reduction in [`enumerate_bimeasurings`]. F_p only.
pub fn enumerate_bimeasurings_raw(
    n: &Bialgebra,
    t: &Bialgebra,
    a: &Algebra,
    budget: u64,
) -> Result<Vec<BilinearPairing>, MeasuringError> {
    let field = n.field();
    if field == FieldSpec::Rationals {
        return Err(EnumError::RationalsNeedSolver.into());
    }
    let total = n.dim() * t.dim() * a.dim;
    let needed = enumerate::VectorIter::count(field, total).unwrap_or(u128::MAX);
    if needed > budget as u128 {
        return Err(EnumError::BudgetExceeded { needed, budget }.into());
    }
    let mut out = Vec::new();
    for flat in enumerate::VectorIter::new(field, total).unwrap() {
        let psi = pairing_from_flat(field, n.dim(), t.dim(), a.dim, &flat);
        if check_bimeasuring(&psi, n, t, a)?.passed() {
            out.push(psi);
        }
    }
    out.sort_by(|x, y| x.flat().cmp(&y.flat()));
    Ok(out)
}
