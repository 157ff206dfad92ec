//! Deterministic constructors for the example carriers used in tests,
//! acceptance runs and the CLI.

use crate::algebra::{Algebra, Bialgebra, Coalgebra, Counterexample, HopfAlgebra};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{zero_vec, Matrix, Tensor3};

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("characteristic {0} not supported for this carrier")]
    BadCharacteristic(u64),
    #[error("carrier failed validation: {0}")]
    Validation(Counterexample),
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
}

impl From<Counterexample> for CatalogError {
    fn from(c: Counterexample) -> Self {
        CatalogError::Validation(c)
    }
}

/// Finite group multiplication table; element 0 is not assumed to be the
/// identity, the identity index is stored explicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub order: usize,
    pub mult: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
}

impl GroupTable {
    pub fn new(mult: Vec<Vec<usize>>) -> Result<Self, CatalogError> {
        let n = mult.len();
        if mult.iter().any(|r| r.len() != n) {
            return Err(CatalogError::InvalidGroup("table is not square".into()));
        }
        if mult.iter().flatten().any(|&x| x >= n) {
            return Err(CatalogError::InvalidGroup("entry out of range".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mult[e][x] == x && mult[x][e] == x))
            .ok_or_else(|| CatalogError::InvalidGroup("no identity".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for x in 0..n {
            inverse[x] = (0..n)
                .find(|&y| mult[x][y] == identity && mult[y][x] == identity)
                .ok_or_else(|| CatalogError::InvalidGroup(format!("element {x} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        return Err(CatalogError::InvalidGroup(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(GroupTable {
            order: n,
            mult,
            identity,
            inverse,
        })
    }
}

pub fn cyclic_group(n: usize) -> GroupTable {
    let mult = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    GroupTable::new(mult).expect("cyclic group table")
}

fn perm_group(perms: Vec<Vec<usize>>) -> GroupTable {
    let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed under composition");
    let mult = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| {
                    // (a b)(x) = a(b(x))
                    let comp: Vec<usize> = (0..a.len()).map(|x| a[b[x]]).collect();
                    index(&comp)
                })
                .collect()
        })
        .collect();
    GroupTable::new(mult).expect("permutation group table")
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in out {
            for v in 0..n {
                if !p.contains(&v) {
                    let mut q = p.clone();
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

fn perm_sign(p: &[usize]) -> i32 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// S3 as permutations of {0,1,2} in lexicographic order.
pub fn symmetric_group_s3() -> GroupTable {
    perm_group(all_perms(3))
}

/// A5 as the even permutations of {0,..,4} in lexicographic order.
pub fn alternating_group_a5() -> GroupTable {
    perm_group(all_perms(5).into_iter().filter(|p| perm_sign(p) == 1).collect())
}

/// Group algebra kG: Delta g = g (x) g, eps(g) = 1, S(g) = g^{-1}.
pub fn group_algebra(g: &GroupTable, field: FieldSpec) -> Result<HopfAlgebra, CatalogError> {
    let n = g.order;
    let mut mult = Tensor3::new(field, (n, n, n));
    for i in 0..n {
        for j in 0..n {
            mult.set(i, j, g.mult[i][j], field.one());
        }
    }
    let mut unit = zero_vec(field, n);
    unit[g.identity] = field.one();
    let mut comult = Tensor3::new(field, (n, n, n));
    for i in 0..n {
        comult.set(i, i, i, field.one());
    }
    let counit = vec![field.one(); n];
    let mut antipode = Matrix::zero(field, n, n);
    for i in 0..n {
        antipode.set(g.inverse[i], i, field.one());
    }
    let b = Bialgebra::new(
        Algebra::new(field, n, mult, unit),
        Coalgebra::new(field, n, comult, counit),
    );
    Ok(HopfAlgebra::new(b, antipode).validated()?)
}

/// Functions on G: the transpose structure of kG.
pub fn dual_group_algebra(g: &GroupTable, field: FieldSpec) -> Result<HopfAlgebra, CatalogError> {
    let h = group_algebra(g, field)?;
    Ok(crate::algebra::dual_hopf(&h)?)
}

/// The 4-dimensional Hopf algebra with basis {1, g, x, gx}: g^2 = 1,
/// x^2 = 0, xg = -gx, Delta g = g (x) g, Delta x = x (x) 1 + g (x) x,
/// S(g) = g, S(x) = -gx. Requires characteristic != 2.
pub fn sweedler_h4(field: FieldSpec) -> Result<HopfAlgebra, CatalogError> {
    if field.characteristic() == 2 {
        return Err(CatalogError::BadCharacteristic(2));
    }
    let one = field.one();
    let neg = one.neg();
    // indices: 0 = 1, 1 = g, 2 = x, 3 = gx
    let mut mult = Tensor3::new(field, (4, 4, 4));
    let table: &[(usize, usize, usize, &Scalar)] = &[
        (0, 0, 0, &one),
        (0, 1, 1, &one),
        (0, 2, 2, &one),
        (0, 3, 3, &one),
        (1, 0, 1, &one),
        (1, 1, 0, &one),
        (1, 2, 3, &one),
        (1, 3, 2, &one),
        (2, 0, 2, &one),
        (2, 1, 3, &neg),
        (3, 0, 3, &one),
        (3, 1, 2, &neg),
    ];
    for &(i, j, k, v) in table {
        mult.set(i, j, k, v.clone());
    }
    let mut unit = zero_vec(field, 4);
    unit[0] = one.clone();
    let mut comult = Tensor3::new(field, (4, 4, 4));
    comult.set(0, 0, 0, one.clone());
    comult.set(1, 1, 1, one.clone());
    comult.set(2, 2, 0, one.clone());
    comult.set(2, 1, 2, one.clone());
    comult.set(3, 3, 1, one.clone());
    comult.set(3, 0, 3, one.clone());
    let counit = vec![one.clone(), one.clone(), field.zero(), field.zero()];
    let mut antipode = Matrix::zero(field, 4, 4);
    antipode.set(0, 0, one.clone());
    antipode.set(1, 1, one.clone());
    antipode.set(3, 2, neg.clone());
    antipode.set(2, 3, one.clone());
    let b = Bialgebra::new(
        Algebra::new(field, 4, mult, unit),
        Coalgebra::new(field, 4, comult, counit),
    );
    Ok(HopfAlgebra::new(b, antipode).validated()?)
}

/// Exact binomial coefficient as a field scalar.
pub fn binomial(field: FieldSpec, n: u64, k: u64) -> Scalar {
    if k > n {
        return field.zero();
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    match field {
        FieldSpec::Rationals => field.parse(&acc.to_string()).expect("integer literal"),
        FieldSpec::Prime(p) => field.from_i64((acc % p as u128) as i64),
    }
}

/// k[x]/(x^p) over F_p with x primitive and S(x) = -x.
pub fn truncated_poly_hopf(p: u64) -> Result<HopfAlgebra, CatalogError> {
    let field = FieldSpec::Prime(p);
    field.validate().map_err(|_| CatalogError::BadCharacteristic(p))?;
    let n = p as usize;
    let mut mult = Tensor3::new(field, (n, n, n));
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                mult.set(i, j, i + j, field.one());
            }
        }
    }
    let mut unit = zero_vec(field, n);
    unit[0] = field.one();
    let mut comult = Tensor3::new(field, (n, n, n));
    for m in 0..n {
        for k in 0..=m {
            comult.set(m, k, m - k, binomial(field, m as u64, k as u64));
        }
    }
    let mut counit = zero_vec(field, n);
    counit[0] = field.one();
    let mut antipode = Matrix::zero(field, n, n);
    for i in 0..n {
        let v = if i % 2 == 0 { field.one() } else { field.one().neg() };
        antipode.set(i, i, v);
    }
    let b = Bialgebra::new(
        Algebra::new(field, n, mult, unit),
        Coalgebra::new(field, n, comult, counit),
    );
    Ok(HopfAlgebra::new(b, antipode).validated()?)
}

/// n x n matrix units e_{ij}; noncommutative for n >= 2.
pub fn matrix_algebra(n: usize, field: FieldSpec) -> Result<Algebra, CatalogError> {
    let d = n * n;
    let mut mult = Tensor3::new(field, (d, d, d));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if j == k {
                        mult.set(i * n + j, k * n + l, i * n + l, field.one());
                    }
                }
            }
        }
    }
    let mut unit = zero_vec(field, d);
    for i in 0..n {
        unit[i * n + i] = field.one();
    }
    Ok(Algebra::new(field, d, mult, unit).validated()?)
}

/// The ground field as a (Hopf) bialgebra of dimension 1.
pub fn ground_field_bialgebra(field: FieldSpec) -> Bialgebra {
    let mut mult = Tensor3::new(field, (1, 1, 1));
    mult.set(0, 0, 0, field.one());
    let mut comult = Tensor3::new(field, (1, 1, 1));
    comult.set(0, 0, 0, field.one());
    Bialgebra::new(
        Algebra::new(field, 1, mult, vec![field.one()]),
        Coalgebra::new(field, 1, comult, vec![field.one()]),
    )
}

pub fn ground_field_hopf(field: FieldSpec) -> HopfAlgebra {
    HopfAlgebra::new(ground_field_bialgebra(field), Matrix::identity(field, 1))
}

/// k[y]/(y^2): dual numbers, commutative.
pub fn dual_numbers(field: FieldSpec) -> Algebra {
    let mut mult = Tensor3::new(field, (2, 2, 2));
    mult.set(0, 0, 0, field.one());
    mult.set(0, 1, 1, field.one());
    mult.set(1, 0, 1, field.one());
    let mut unit = zero_vec(field, 2);
    unit[0] = field.one();
    Algebra::new(field, 2, mult, unit)
}

/// k[y]/(y^2 - y): the split idempotent algebra.
pub fn split_idempotents(field: FieldSpec) -> Algebra {
    let mut mult = Tensor3::new(field, (2, 2, 2));
    mult.set(0, 0, 0, field.one());
    mult.set(0, 1, 1, field.one());
    mult.set(1, 0, 1, field.one());
    mult.set(1, 1, 1, field.one());
    let mut unit = zero_vec(field, 2);
    unit[0] = field.one();
    Algebra::new(field, 2, mult, unit)
}

/// Commutative target algebras used across the test suites.
pub fn small_commutative_targets(field: FieldSpec) -> Vec<Algebra> {
    vec![
        ground_field_bialgebra(field).algebra,
        dual_numbers(field),
        split_idempotents(field),
    ]
}

/// kA5: the order-60 perfect example (heavy; commutator ideal has dim 59).
pub fn perfect_group_algebra(field: FieldSpec) -> Result<HopfAlgebra, CatalogError> {
    group_algebra(&alternating_group_a5(), field)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_tables_are_groups() {
        for g in [cyclic_group(2), cyclic_group(3), cyclic_group(6), symmetric_group_s3()] {
            assert_eq!(g.mult[g.identity][1 % g.order], 1 % g.order);
        }
        assert_eq!(symmetric_group_s3().order, 6);
        assert_eq!(alternating_group_a5().order, 60);
    }

    #[test]
    fn bad_group_table_rejected() {
        // 2x2 table that is not a group (constant row)
        let err = GroupTable::new(vec![vec![0, 0], vec![0, 0]]);
        assert!(err.is_err());
    }

    #[test]
    fn kc2_antipode_is_identity() {
        let h = group_algebra(&cyclic_group(2), FieldSpec::Rationals).unwrap();
        assert_eq!(h.antipode, Matrix::identity(FieldSpec::Rationals, 2));
    }

    #[test]
    fn h4_rejected_in_char_2() {
        assert_eq!(
            sweedler_h4(FieldSpec::Prime(2)).unwrap_err(),
            CatalogError::BadCharacteristic(2)
        );
    }

    #[test]
    fn h4_validates_over_q_and_f5() {
        assert!(sweedler_h4(FieldSpec::Rationals).is_ok());
        assert!(sweedler_h4(FieldSpec::Prime(5)).is_ok());
    }

    #[test]
    fn truncated_poly_p3() {
        let h = truncated_poly_hopf(3).unwrap();
        assert_eq!(h.dim(), 3);
        // Delta x = x (x) 1 + 1 (x) x
        let c = h.coalgebra();
        assert!(c.comult.get(1, 1, 0).is_one());
        assert!(c.comult.get(1, 0, 1).is_one());
        assert!(c.comult.get(1, 1, 1).is_zero());
    }

    #[test]
    fn matrix_units_noncommutative() {
        let a = matrix_algebra(2, FieldSpec::Rationals).unwrap();
        // e_{01} e_{10} = e_{00} != e_{11} = e_{10} e_{01}
        let e01 = crate::linalg::basis_vec(a.field, 4, 1);
        let e10 = crate::linalg::basis_vec(a.field, 4, 2);
        assert_eq!(a.mul_vec(&e01, &e10), crate::linalg::basis_vec(a.field, 4, 0));
        assert_eq!(a.mul_vec(&e10, &e01), crate::linalg::basis_vec(a.field, 4, 3));
        assert!(!a.is_commutative());
        assert!(matrix_algebra(1, FieldSpec::Rationals).unwrap().is_commutative());
    }

    #[test]
    fn commutative_targets_validate() {
        for a in small_commutative_targets(FieldSpec::Prime(7)) {
            assert!(a.validate().is_ok());
            assert!(a.is_commutative());
        }
    }

    #[test]
    fn dual_of_group_algebra_matches_dual_constructor() {
        let g = cyclic_group(3);
        let f = FieldSpec::Prime(5);
        let h = group_algebra(&g, f).unwrap();
        assert_eq!(dual_group_algebra(&g, f).unwrap(), crate::algebra::dual_hopf(&h).unwrap());
    }
}
