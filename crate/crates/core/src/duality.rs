//! Finite duals as universal measuring and bimeasuring objects over the
//! ground field, factorization through a universal candidate with a
//! uniqueness certificate, the self-adjunction transpose, and the tensor
//! comparison map between duals of tensor factors and the dual of the
//! tensor product.

use crate::algebra::{
    dual_bialgebra, Algebra, Bialgebra, BilinearPairing, Coalgebra, Counterexample,
};
use crate::enumerate::{self, EnumError};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{basis_vec, flatten, unflatten, zero_vec, Matrix};
use crate::measuring::{self, MeasuringError};

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum DualityError {
    #[error("no coalgebra map factors the measuring through the candidate")]
    NoFactorization,
    #[error("factorization is not unique: {count} coalgebra maps found")]
    NotUnique { count: usize },
    #[error("uniqueness is undecided over the rationals with a {kernel_dim}-dimensional ambiguity")]
    UniquenessUndecided { kernel_dim: usize },
    #[error("input is not a bialgebra map")]
    NotABialgebraMap,
    #[error(transparent)]
    Measuring(#[from] MeasuringError),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
}

/// A candidate (M, theta) for the universal measuring object of B at A:
/// a coalgebra M with a pairing theta: M (x) B -> A, carrying a bialgebra
/// structure when it claims to be a universal bimeasuring object.
#[derive(Clone, Debug)]
pub struct UniversalCandidate {
    pub carrier: Coalgebra,
    pub carrier_bialgebra: Option<Bialgebra>,
    pub theta: BilinearPairing,
}

/// The finite dual of B with the evaluation pairing `theta(f, b) = f(b)`,
/// which is the universal measuring object at A = k; for a bialgebra it is
/// the universal bimeasuring bialgebra.
pub fn finite_dual_universal(b: &Bialgebra) -> UniversalCandidate {
    let field = b.field();
    let d = b.dim();
    let dual = dual_bialgebra(b).expect("finite duals always exist");
    let theta = BilinearPairing::from_fn(field, d, d, 1, |i, j| {
        vec![if i == j { field.one() } else { field.zero() }]
    });
    let witness = measuring::check_bimeasuring(
        &theta,
        &dual,
        b,
        &crate::catalog::ground_field_bialgebra(field).algebra,
    )
    .expect("evaluation pairing has matching shape");
    assert!(witness.passed(), "evaluation pairing must bimeasure");
    UniversalCandidate {
        carrier: dual.coalgebra.clone(),
        carrier_bialgebra: Some(dual),
        theta,
    }
}

/// Outcome of factoring a measuring through a candidate.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub fbar: Matrix,
    /// Certified: the factoring coalgebra map is the only one.
    pub unique: bool,
}

fn is_coalgebra_map_into(c: &Coalgebra, m: &Coalgebra, f: &Matrix) -> bool {
    enumerate::is_coalgebra_map(c, m, f)
}

fn theta_compose(theta: &BilinearPairing, fbar: &Matrix) -> BilinearPairing {
    BilinearPairing::from_fn(theta.field, fbar.cols, theta.dim_y, theta.dim_a, |i, j| {
        theta.apply(&fbar.col(i), &basis_vec(theta.field, theta.dim_y, j))
    })
}

/// Find the unique coalgebra map fbar: C -> M with
/// `theta(fbar (x) 1) = psi`, for a ground-field-valued measuring psi.
///
/// The solver pins the affine subspace cut out by the linear conditions
/// (theta-compatibility and the counit law), verifies the quadratic
/// comultiplication condition on it, and over a prime field exhausts any
/// positive-dimensional ambiguity within the budget to certify uniqueness.
pub fn factor_measuring(
    psi: &BilinearPairing,
    cand: &UniversalCandidate,
    c: &Coalgebra,
    budget: u64,
) -> Result<Factorization, DualityError> {
    let field = c.field;
    let dm = cand.carrier.dim;
    let dc = c.dim;
    let db = cand.theta.dim_y;
    // unknowns: fbar[m][i] flattened at m * dc + i
    let unknowns = dm * dc;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    // theta(fbar(e_i), e_j) = psi(e_i, e_j)
    for i in 0..dc {
        for j in 0..db {
            let mut row = zero_vec(field, unknowns);
            for m in 0..dm {
                row[m * dc + i] = cand.theta.get(m, j)[0].clone();
            }
            rows.push(row);
            rhs.push(psi.get(i, j)[0].clone());
        }
    }
    // eps_M(fbar(e_i)) = eps_C(e_i)
    for i in 0..dc {
        let mut row = zero_vec(field, unknowns);
        for m in 0..dm {
            row[m * dc + i] = cand.carrier.counit[m].clone();
        }
        rows.push(row);
        rhs.push(c.counit[i].clone());
    }
    let system = Matrix::from_rows(field, rows);
    let (particular, kernel) = system
        .solve(&rhs)
        .map_err(|_| DualityError::NoFactorization)?;
    let to_matrix = |flat: &[Scalar]| {
        Matrix::from_fn(field, dm, dc, |m, i| flat[m * dc + i].clone())
    };
    if kernel.rows == 0 {
        let fbar = to_matrix(&particular);
        if !is_coalgebra_map_into(c, &cand.carrier, &fbar) {
            return Err(DualityError::NoFactorization);
        }
        return Ok(Factorization { fbar, unique: true });
    }
    // positive-dimensional affine solution set: exhaust over F_p
    let FieldSpec::Prime(_) = field else {
        let fbar = to_matrix(&particular);
        if is_coalgebra_map_into(c, &cand.carrier, &fbar) {
            return Err(DualityError::UniquenessUndecided {
                kernel_dim: kernel.rows,
            });
        }
        return Err(DualityError::UniquenessUndecided {
            kernel_dim: kernel.rows,
        });
    };
    let needed = enumerate::VectorIter::count(field, kernel.rows).unwrap_or(u128::MAX);
    if needed > budget as u128 {
        return Err(EnumError::BudgetExceeded {
            needed,
            budget,
        }
        .into());
    }
    let mut found: Vec<Matrix> = Vec::new();
    for coeffs in enumerate::VectorIter::new(field, kernel.rows).unwrap() {
        let mut flat = particular.clone();
        for (r, cf) in coeffs.iter().enumerate() {
            for (slot, x) in kernel.row(r).iter().enumerate() {
                flat[slot] = flat[slot].add(&cf.mul(x));
            }
        }
        let fbar = to_matrix(&flat);
        if is_coalgebra_map_into(c, &cand.carrier, &fbar) {
            found.push(fbar);
        }
    }
    match found.len() {
        0 => Err(DualityError::NoFactorization),
        1 => Ok(Factorization {
            fbar: found.pop().unwrap(),
            unique: true,
        }),
        n => Err(DualityError::NotUnique { count: n }),
    }
}

/// The self-adjunction transpose: a bialgebra map f: T -> dual(N) goes to
/// the bialgebra map N -> dual(T) defined by `<psi(f)(n), t> = <f(t), n>`.
/// Under the evaluation identification of a space with its double dual this
/// is the plain matrix transpose.
pub fn adjunction_transpose(
    f: &Matrix,
    t: &Bialgebra,
    n: &Bialgebra,
) -> Result<Matrix, DualityError> {
    let dual_n = dual_bialgebra(n).expect("finite duals always exist");
    if !enumerate::is_bialgebra_map(t, &dual_n, f) {
        return Err(DualityError::NotABialgebraMap);
    }
    let g = f.transpose();
    let dual_t = dual_bialgebra(t).expect("finite duals always exist");
    debug_assert!(enumerate::is_bialgebra_map(n, &dual_t, &g));
    Ok(g)
}

/// The defining identity of the transpose: `theta_T(fbar (x) 1) =
/// theta_N(1 (x) f)` as pairings N (x) T -> k.
pub fn transpose_defining_identity(f: &Matrix, fbar: &Matrix) -> bool {
    // theta is evaluation on both sides, so both pairings send (n, t) to
    // <f(t), n> resp. <fbar(n), t>
    for j in 0..f.cols {
        for i in 0..fbar.cols {
            if f.get(i, j) != fbar.get(j, i) {
                return false;
            }
        }
    }
    true
}

/// The comparison map alpha: dual(T) (x) dual(S) -> dual(T (x) S) sending
/// f (x) g to the functional `t (x) s -> f(t) g(s)`. With dual bases and
/// row-major flattening this is the identity permutation of coordinates; it
/// is returned with its defining properties verified.
pub struct TensorComparison {
    pub alpha: Matrix,
    /// iota1bar * iota2bar, the convolution retraction back onto the tensor
    /// product of duals.
    pub retraction: Matrix,
}

/// Convolution-style composite into a tensor target:
/// `x -> f(x_1) (x) g(x_2)` for linear maps f, g out of the coalgebra c.
fn convolve_into_tensor(c: &Coalgebra, f: &Matrix, g: &Matrix) -> Matrix {
    let field = c.field;
    let rows = f.rows * g.rows;
    let mut out = Matrix::zero(field, rows, c.dim);
    for ((i, j, k), v) in c.comult.iter() {
        for r in 0..f.rows {
            let a = f.get(r, *j);
            if a.is_zero() {
                continue;
            }
            for s in 0..g.rows {
                let b = g.get(s, *k);
                if b.is_zero() {
                    continue;
                }
                let row = flatten(r, s, g.rows);
                let cur = out.get(row, *i).add(&v.mul(&a.mul(b)));
                out.set(row, *i, cur);
            }
        }
    }
    out
}

pub fn tensor_comparison_alpha(
    t: &Bialgebra,
    s: &Bialgebra,
) -> Result<TensorComparison, Counterexample> {
    let field = t.field();
    let dt = t.dim();
    let ds = s.dim();
    let dual_t = dual_bialgebra(t)?;
    let dual_s = dual_bialgebra(s)?;
    let ts = crate::algebra::tensor_bialgebra(t, s);
    let dual_ts = dual_bialgebra(&ts)?;
    let tensor_of_duals = crate::algebra::tensor_bialgebra(&dual_t, &dual_s);

    let alpha = Matrix::identity(field, dt * ds);
    // alpha is a coalgebra map between genuinely different structures; the
    // identity matrix works exactly because flattening is consistent
    if !enumerate::is_coalgebra_map(&tensor_of_duals.coalgebra, &dual_ts.coalgebra, &alpha) {
        return Err(Counterexample {
            law: "alpha is a coalgebra map".into(),
            indices: vec![],
            lhs: vec![],
            rhs: vec![],
        });
    }
    // the defining pairing identity: theta_{T (x) S}(alpha(f (x) g), t (x) s)
    // = theta_T(f, t) theta_S(g, s); with evaluation thetas this says alpha
    // matches dual basis vectors, which the coordinate check above plus the
    // identity matrix make literal

    // induced maps at A = k are duals of the unit and counit insertions
    let iota1 = Matrix::from_fn(field, dt * ds, dt, |row, col| {
        let (i, j) = unflatten(row, ds);
        if i == col {
            s.algebra.unit[j].clone()
        } else {
            field.zero()
        }
    });
    let iota2 = Matrix::from_fn(field, dt * ds, ds, |row, col| {
        let (i, j) = unflatten(row, ds);
        if j == col {
            t.algebra.unit[i].clone()
        } else {
            field.zero()
        }
    });
    let pi1 = Matrix::from_fn(field, dt, dt * ds, |row, col| {
        let (i, j) = unflatten(col, ds);
        if i == row {
            s.coalgebra.counit[j].clone()
        } else {
            field.zero()
        }
    });
    let iota1bar = iota1.transpose();
    let iota2bar = iota2.transpose();
    let pi1bar = pi1.transpose();

    // commuting square: alpha composed with inserting the unit of dual(S)
    // equals pi1bar, and iota1bar after alpha drops the dual(S) leg
    let mut unit_insert = Matrix::zero(field, dt * ds, dt);
    for col in 0..dt {
        for j in 0..ds {
            unit_insert.set(flatten(col, j, ds), col, dual_s.algebra.unit[j].clone());
        }
    }
    let left = alpha.mul(&unit_insert);
    if left != pi1bar {
        return Err(Counterexample {
            law: "alpha (1 (x) unit) = dual of (1 (x) counit)".into(),
            indices: vec![],
            lhs: left.col(0),
            rhs: pi1bar.col(0),
        });
    }
    let mut counit_drop = Matrix::zero(field, dt, dt * ds);
    for row in 0..dt {
        for j in 0..ds {
            counit_drop.set(row, flatten(row, j, ds), dual_s.coalgebra.counit[j].clone());
        }
    }
    let right = counit_drop.clone();
    if iota1bar.mul(&alpha) != right {
        return Err(Counterexample {
            law: "dual of (1 (x) unit) after alpha = 1 (x) counit".into(),
            indices: vec![],
            lhs: iota1bar.mul(&alpha).col(0),
            rhs: right.col(0),
        });
    }

    // retraction: (iota1bar * iota2bar) alpha = identity
    let retraction = convolve_into_tensor(&dual_ts.coalgebra, &iota1bar, &iota2bar);
    let composite = retraction.mul(&alpha);
    if composite != Matrix::identity(field, dt * ds) {
        return Err(Counterexample {
            law: "(iota1bar * iota2bar) alpha = id".into(),
            indices: vec![],
            lhs: composite.col(0),
            rhs: basis_vec(field, dt * ds, 0),
        });
    }
    // injectivity plus matching dimensions make alpha bijective
    assert_eq!(alpha.rank(), dt * ds);
    Ok(TensorComparison { alpha, retraction })
}

/// All measurings C (x) B -> A over a prime field, via the correspondence
/// with unital algebra maps from B into the convolution algebra Hom(C, A).
pub fn enumerate_measurings(
    c: &Coalgebra,
    b: &Algebra,
    a: &Algebra,
    budget: u64,
) -> Result<Vec<BilinearPairing>, DualityError> {
    let conv = measuring::convolution_algebra(c, a);
    let maps = enumerate::enumerate_algebra_maps(b, None, &conv, None, budget)?;
    let mut out: Vec<BilinearPairing> = maps
        .iter()
        .map(|rho| measuring::rho_to_psi(rho, c.dim, a.dim))
        .collect();
    out.sort_by(|x, y| x.flat().cmp(&y.flat()));
    Ok(out)
}

/// Result of exercising a universal-property candidate against one test
/// coalgebra.
#[derive(Clone, Debug)]
pub struct UniversalityOutcome {
    pub test_index: usize,
    pub measurings: usize,
    pub failures: Vec<DualityError>,
}

/// Exercise a candidate (M, theta) for B at A = k: every enumerated
/// measuring from each test coalgebra must factor uniquely through it.
pub fn universality_check(
    cand: &UniversalCandidate,
    b: &Algebra,
    tests: &[Coalgebra],
    budget: u64,
) -> Result<Vec<UniversalityOutcome>, DualityError> {
    let field = b.field;
    let ground = crate::catalog::ground_field_bialgebra(field).algebra;
    let mut out = Vec::new();
    for (test_index, c) in tests.iter().enumerate() {
        let psis = enumerate_measurings(c, b, &ground, budget)?;
        let mut failures = Vec::new();
        for psi in &psis {
            match factor_measuring(psi, cand, c, budget) {
                Ok(fact) => {
                    if theta_compose(&cand.theta, &fact.fbar) != *psi {
                        failures.push(DualityError::NoFactorization);
                    }
                }
                Err(e) => failures.push(e),
            }
        }
        out.push(UniversalityOutcome {
            test_index,
            measurings: psis.len(),
            failures,
        });
    }
    Ok(out)
}

/// Nondegeneracy of the evaluation pairing: `f -> theta(f (x) 1)` is
/// injective on all linear maps from C into the dual of B.
pub fn evaluation_factoring_injective(dim_c: usize, dim_b: usize, field: FieldSpec) -> bool {
    // theta(f(c), b) = f(c)(b): the induced operator on matrix space is a
    // coordinate permutation, so its kernel is zero; verify by rank
    let unknowns = dim_b * dim_c;
    let op = Matrix::from_fn(field, dim_c * dim_b, unknowns, |row, col| {
        let (i, j) = unflatten(row, dim_b);
        let (m, i2) = unflatten(col, dim_c);
        if i2 == i && m == j {
            field.one()
        } else {
            field.zero()
        }
    });
    op.rank() == unknowns
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::enumerate::DEFAULT_BUDGET;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn evaluation_pairing_on_kc2() {
        let kc2 = catalog::group_algebra(&catalog::cyclic_group(2), q()).unwrap();
        let cand = finite_dual_universal(&kc2.bialgebra);
        // theta(e_g, g) = 1, theta(e_g, 1) = 0
        assert_eq!(cand.theta.get(1, 1), &vec![q().one()]);
        assert_eq!(cand.theta.get(1, 0), &vec![q().zero()]);
        assert_eq!(cand.carrier.dim, 2);
    }

    #[test]
    fn evaluation_pairing_on_h4_bimeasures() {
        for field in [q(), FieldSpec::Prime(5)] {
            let h4 = catalog::sweedler_h4(field).unwrap();
            let cand = finite_dual_universal(&h4.bialgebra);
            assert_eq!(cand.carrier.dim, 4);
            assert!(cand.carrier_bialgebra.is_some());
        }
    }

    #[test]
    fn sign_measuring_factors_to_sign_character() {
        let kc2 = catalog::group_algebra(&catalog::cyclic_group(2), q()).unwrap();
        let cand = finite_dual_universal(&kc2.bialgebra);
        let mut psi = BilinearPairing::zero(q(), 2, 2, 1);
        psi.set(0, 0, vec![q().one()]);
        psi.set(0, 1, vec![q().one()]);
        psi.set(1, 0, vec![q().one()]);
        psi.set(1, 1, vec![q().one().neg()]);
        let fact = factor_measuring(&psi, &cand, kc2.coalgebra(), DEFAULT_BUDGET).unwrap();
        assert!(fact.unique);
        // fbar(g) = e_1 - e_g
        assert_eq!(fact.fbar.col(1), vec![q().one(), q().one().neg()]);
        assert_eq!(theta_compose(&cand.theta, &fact.fbar), psi);
    }

    #[test]
    fn trivial_measuring_factors_to_counit_column() {
        let kc2 = catalog::group_algebra(&catalog::cyclic_group(2), q()).unwrap();
        let cand = finite_dual_universal(&kc2.bialgebra);
        let psi = BilinearPairing::from_fn(q(), 2, 2, 1, |_, j| {
            vec![kc2.coalgebra().counit[j].clone()]
        });
        let fact = factor_measuring(&psi, &cand, kc2.coalgebra(), DEFAULT_BUDGET).unwrap();
        assert!(fact.unique);
        // every c maps to eps(c) times the counit functional e_1 + e_g
        assert_eq!(fact.fbar.col(0), vec![q().one(), q().one()]);
        assert_eq!(fact.fbar.col(1), vec![q().one(), q().one()]);
    }

    #[test]
    fn trivial_candidate_cannot_absorb_sign_measuring() {
        let f3 = FieldSpec::Prime(3);
        let kc2 = catalog::group_algebra(&catalog::cyclic_group(2), f3).unwrap();
        let k = catalog::ground_field_bialgebra(f3);
        let cand = UniversalCandidate {
            carrier: k.coalgebra.clone(),
            carrier_bialgebra: Some(k.clone()),
            theta: BilinearPairing::from_fn(f3, 1, 2, 1, |_, j| {
                vec![kc2.coalgebra().counit[j].clone()]
            }),
        };
        let mut psi = BilinearPairing::zero(f3, 2, 2, 1);
        psi.set(0, 0, vec![f3.one()]);
        psi.set(0, 1, vec![f3.one()]);
        psi.set(1, 0, vec![f3.one()]);
        psi.set(1, 1, vec![f3.from_i64(2)]);
        assert!(matches!(
            factor_measuring(&psi, &cand, kc2.coalgebra(), DEFAULT_BUDGET),
            Err(DualityError::NoFactorization)
        ));
    }

    #[test]
    fn universality_of_dual_kc2_over_f5() {
        let f5 = FieldSpec::Prime(5);
        let kc2 = catalog::group_algebra(&catalog::cyclic_group(2), f5).unwrap();
        let cand = finite_dual_universal(&kc2.bialgebra);
        let tests = vec![
            catalog::ground_field_bialgebra(f5).coalgebra,
            kc2.coalgebra().clone(),
            catalog::group_algebra(&catalog::cyclic_group(3), f5)
                .unwrap()
                .coalgebra()
                .clone(),
        ];
        let report = universality_check(&cand, kc2.algebra(), &tests, DEFAULT_BUDGET).unwrap();
        for outcome in &report {
            assert!(outcome.measurings > 0);
            assert!(outcome.failures.is_empty(), "test {} failed", outcome.test_index);
        }
    }

    #[test]
    fn ground_field_candidate_is_universal_for_ground_field() {
        let f5 = FieldSpec::Prime(5);
        let k = catalog::ground_field_bialgebra(f5);
        let cand = UniversalCandidate {
            carrier: k.coalgebra.clone(),
            carrier_bialgebra: Some(k.clone()),
            theta: BilinearPairing::from_fn(f5, 1, 1, 1, |_, _| vec![f5.one()]),
        };
        let tests = vec![
            k.coalgebra.clone(),
            catalog::group_algebra(&catalog::cyclic_group(2), f5)
                .unwrap()
                .coalgebra()
                .clone(),
        ];
        let report = universality_check(&cand, &k.algebra, &tests, DEFAULT_BUDGET).unwrap();
        for outcome in &report {
            assert!(outcome.failures.is_empty());
        }
    }

    #[test]
    fn broken_candidate_fails_universality() {
        let f3 = FieldSpec::Prime(3);
        let kc2 = catalog::group_algebra(&catalog::cyclic_group(2), f3).unwrap();
        let k = catalog::ground_field_bialgebra(f3);
        let cand = UniversalCandidate {
            carrier: k.coalgebra.clone(),
            carrier_bialgebra: Some(k.clone()),
            theta: BilinearPairing::from_fn(f3, 1, 2, 1, |_, j| {
                vec![kc2.coalgebra().counit[j].clone()]
            }),
        };
        let tests = vec![kc2.coalgebra().clone()];
        let report = universality_check(&cand, kc2.algebra(), &tests, DEFAULT_BUDGET).unwrap();
        assert!(!report[0].failures.is_empty());
    }

    #[test]
    fn adjunction_transpose_bijects_hom_sets() {
        for field in [FieldSpec::Prime(5), FieldSpec::Prime(7)] {
            let carriers = [
                catalog::group_algebra(&catalog::cyclic_group(2), field)
                    .unwrap()
                    .bialgebra,
                catalog::group_algebra(&catalog::cyclic_group(3), field)
                    .unwrap()
                    .bialgebra,
                catalog::sweedler_h4(field).unwrap().bialgebra,
            ];
            for t in &carriers {
                for n in &carriers {
                    let dual_n = dual_bialgebra(n).unwrap();
                    let dual_t = dual_bialgebra(t).unwrap();
                    let forward =
                        enumerate::enumerate_bialgebra_maps(t, &dual_n, DEFAULT_BUDGET).unwrap();
                    let backward =
                        enumerate::enumerate_bialgebra_maps(n, &dual_t, DEFAULT_BUDGET).unwrap();
                    assert_eq!(forward.len(), backward.len());
                    let key = |m: &Matrix| -> Vec<Scalar> {
                        (0..m.cols).flat_map(|c| m.col(c)).collect()
                    };
                    let mut transposed: Vec<Vec<Scalar>> = forward
                        .iter()
                        .map(|f| key(&adjunction_transpose(f, t, n).unwrap()))
                        .collect();
                    transposed.sort();
                    let mut expected: Vec<Vec<Scalar>> = backward.iter().map(key).collect();
                    expected.sort();
                    assert_eq!(transposed, expected);
                    for f in &forward {
                        let fbar = adjunction_transpose(f, t, n).unwrap();
                        assert!(transpose_defining_identity(f, &fbar));
                        // the transpose is an involution
                        assert_eq!(adjunction_transpose(&fbar, n, t).unwrap(), *f);
                    }
                }
            }
        }
    }

    #[test]
    fn kc2_kc3_hom_sets_are_singletons_over_f7() {
        let f7 = FieldSpec::Prime(7);
        let kc2 = catalog::group_algebra(&catalog::cyclic_group(2), f7).unwrap();
        let kc3 = catalog::group_algebra(&catalog::cyclic_group(3), f7).unwrap();
        let dual_kc3 = dual_bialgebra(&kc3.bialgebra).unwrap();
        let dual_kc2 = dual_bialgebra(&kc2.bialgebra).unwrap();
        let forward =
            enumerate::enumerate_bialgebra_maps(&kc2.bialgebra, &dual_kc3, DEFAULT_BUDGET).unwrap();
        let backward =
            enumerate::enumerate_bialgebra_maps(&kc3.bialgebra, &dual_kc2, DEFAULT_BUDGET).unwrap();
        assert_eq!(forward.len(), 1);
        assert_eq!(backward.len(), 1);
    }

    #[test]
    fn transpose_naturality_on_sampled_precompositions() {
        let f5 = FieldSpec::Prime(5);
        let kc2 = catalog::group_algebra(&catalog::cyclic_group(2), f5).unwrap();
        let kc6 = catalog::group_algebra(&catalog::cyclic_group(6), f5).unwrap();
        let dual_kc2 = dual_bialgebra(&kc2.bialgebra).unwrap();
        // alpha: kC6 -> kC2 (projection onto the C2 quotient), f: kC2 -> dual(kC2)
        let alphas =
            enumerate::enumerate_bialgebra_maps(&kc6.bialgebra, &kc2.bialgebra, DEFAULT_BUDGET)
                .unwrap();
        let fs = enumerate::enumerate_bialgebra_maps(&kc2.bialgebra, &dual_kc2, DEFAULT_BUDGET)
            .unwrap();
        assert!(!alphas.is_empty());
        assert!(!fs.is_empty());
        for alpha in &alphas {
            for f in &fs {
                let f_alpha = f.mul(alpha);
                let lhs = adjunction_transpose(&f_alpha, &kc6.bialgebra, &kc2.bialgebra).unwrap();
                let rhs = alpha
                    .transpose()
                    .mul(&adjunction_transpose(f, &kc2.bialgebra, &kc2.bialgebra).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn tensor_comparison_on_kc2_pairs() {
        let kc2 = catalog::group_algebra(&catalog::cyclic_group(2), q()).unwrap();
        let kc3 = catalog::group_algebra(&catalog::cyclic_group(3), q()).unwrap();
        let cmp = tensor_comparison_alpha(&kc2.bialgebra, &kc2.bialgebra).unwrap();
        assert_eq!(cmp.alpha, Matrix::identity(q(), 4));
        let cmp23 = tensor_comparison_alpha(&kc2.bialgebra, &kc3.bialgebra).unwrap();
        assert_eq!(
            cmp23.retraction.mul(&cmp23.alpha),
            Matrix::identity(q(), 6)
        );
        let h4 = catalog::sweedler_h4(FieldSpec::Prime(5)).unwrap();
        let kc2_5 = catalog::group_algebra(&catalog::cyclic_group(2), FieldSpec::Prime(5)).unwrap();
        assert!(tensor_comparison_alpha(&h4.bialgebra, &kc2_5.bialgebra).is_ok());
    }

    #[test]
    fn evaluation_factoring_has_zero_kernel_for_catalog_sizes() {
        for field in [q(), FieldSpec::Prime(5)] {
            for (dc, db) in [(1, 2), (2, 2), (3, 4), (4, 6)] {
                assert!(evaluation_factoring_injective(dc, db, field));
            }
        }
    }

    #[test]
    fn enumerate_measurings_matches_direct_check() {
        let f3 = FieldSpec::Prime(3);
        let kc2 = catalog::group_algebra(&catalog::cyclic_group(2), f3).unwrap();
        let ground = catalog::ground_field_bialgebra(f3).algebra;
        let via_rho =
            enumerate_measurings(kc2.coalgebra(), kc2.algebra(), &ground, DEFAULT_BUDGET).unwrap();
        // oracle: scan all 3^4 tables directly
        let mut direct = Vec::new();
        for flat in enumerate::VectorIter::new(f3, 4).unwrap() {
            let psi = BilinearPairing::from_fn(f3, 2, 2, 1, |i, j| vec![flat[i * 2 + j].clone()]);
            if measuring::check_measuring(&psi, kc2.coalgebra(), kc2.algebra(), &ground)
                .unwrap()
                .passed()
            {
                direct.push(psi);
            }
        }
        direct.sort_by(|x, y| x.flat().cmp(&y.flat()));
        assert_eq!(via_rho, direct);
    }
}
