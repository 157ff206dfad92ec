//! Brute-force and generator-based enumeration of structure-preserving maps
//! over finite prime fields, with a bounded search over the rationals for
//! group-like-generated carriers.
//!
//! The enumerators are deliberately exhaustive within a budget and return
//! their results in a canonical (lexicographic) order, so they can serve as
//! independent oracles for universal-property and group-structure tests.

use crate::algebra::{Algebra, Bialgebra};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{basis_vec, vec_is_zero, vec_scale, vec_sub, vec_tensor, zero_vec, Matrix};

pub const DEFAULT_BUDGET: u64 = 1 << 20;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("enumeration budget exceeded: {needed} candidates > budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("exhaustive enumeration over Q needs a group-like-generated carrier")]
    RationalsNeedSolver,
}

/// All elements of F_p, in residue order.
pub fn field_elements(field: FieldSpec) -> Option<Vec<Scalar>> {
    match field {
        FieldSpec::Prime(p) => Some((0..p).map(|v| field.from_i64(v as i64)).collect()),
        FieldSpec::Rationals => None,
    }
}

/// Odometer over all vectors in F_p^dim (lexicographic by coordinate).
pub struct VectorIter {
    field: FieldSpec,
    p: u64,
    dim: usize,
    state: Option<Vec<u64>>,
}

impl VectorIter {
    pub fn new(field: FieldSpec, dim: usize) -> Option<Self> {
        match field {
            FieldSpec::Prime(p) => Some(VectorIter {
                field,
                p,
                dim,
                state: Some(vec![0; dim]),
            }),
            FieldSpec::Rationals => None,
        }
    }

    pub fn count(field: FieldSpec, dim: usize) -> Option<u128> {
        match field {
            FieldSpec::Prime(p) => Some((p as u128).checked_pow(dim as u32)?),
            FieldSpec::Rationals => None,
        }
    }
}

impl Iterator for VectorIter {
    type Item = Vec<Scalar>;

    fn next(&mut self) -> Option<Vec<Scalar>> {
        let state = self.state.as_mut()?;
        let out: Vec<Scalar> = state.iter().map(|&v| self.field.from_i64(v as i64)).collect();
        // increment
        let mut i = self.dim;
        loop {
            if i == 0 {
                self.state = None;
                break;
            }
            i -= 1;
            state[i] += 1;
            if state[i] < self.p {
                break;
            }
            state[i] = 0;
        }
        Some(out)
    }
}

/// Group-like elements of a bialgebra: `Delta v = v (x) v`, `eps(v) = 1`.
///
/// Over F_p the search is exhaustive. Over Q the diagonal-comultiplication
/// case (group algebras) is read off directly and otherwise a bounded
/// coefficient grid over {-1, 0, 1} is scanned; that covers every carrier in
/// the catalog but is not a completeness proof for arbitrary rational input.
pub fn grouplikes(b: &Bialgebra) -> Vec<Vec<Scalar>> {
    let d = b.dim();
    let field = b.field();
    let is_grouplike = |v: &[Scalar]| -> bool {
        !vec_is_zero(v)
            && b.coalgebra.counit_vec(v).is_one()
            && b.coalgebra.comult_vec(v) == vec_tensor(v, v, field)
    };
    match field {
        FieldSpec::Prime(_) => VectorIter::new(field, d)
            .unwrap()
            .filter(|v| is_grouplike(v))
            .collect(),
        FieldSpec::Rationals => {
            let diagonal = (0..d).all(|i| {
                b.coalgebra
                    .comult_basis(i)
                    .iter()
                    .enumerate()
                    .all(|(idx, c)| {
                        let (j, k) = crate::linalg::unflatten(idx, d);
                        if j == i && k == i {
                            c.is_one()
                        } else {
                            c.is_zero()
                        }
                    })
            });
            if diagonal {
                return (0..d).map(|i| basis_vec(field, d, i)).collect();
            }
            let mut out = Vec::new();
            let mut state = vec![0i64; d];
            loop {
                let v: Vec<Scalar> = state.iter().map(|&x| field.from_i64(x - 1)).collect();
                if is_grouplike(&v) {
                    out.push(v);
                }
                let mut i = d;
                loop {
                    if i == 0 {
                        out.sort();
                        return out;
                    }
                    i -= 1;
                    state[i] += 1;
                    if state[i] < 3 {
                        break;
                    }
                    state[i] = 0;
                }
            }
        }
    }
}

/// Echelonized span of source vectors with their prescribed images; detects
/// inconsistent image assignments on linearly dependent vectors.
struct SpanWithImage {
    field: FieldSpec,
    dim_src: usize,
    rows: Vec<(Vec<Scalar>, Vec<Scalar>)>,
    pivots: Vec<usize>,
}

impl SpanWithImage {
    fn new(field: FieldSpec, dim_src: usize) -> Self {
        SpanWithImage {
            field,
            dim_src,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Insert (v, image). Ok(true) if the span grew, Ok(false) if v was
    /// already in the span with a consistent image, Err(()) on conflict.
    fn insert(&mut self, mut v: Vec<Scalar>, mut img: Vec<Scalar>) -> Result<bool, ()> {
        for ((row, row_img), &piv) in self.rows.iter().zip(&self.pivots) {
            if !v[piv].is_zero() {
                let c = v[piv].clone();
                v = vec_sub(&v, &vec_scale(row, &c));
                img = vec_sub(&img, &vec_scale(row_img, &c));
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => {
                if vec_is_zero(&img) {
                    Ok(false)
                } else {
                    Err(())
                }
            }
            Some(piv) => {
                let inv = v[piv].inv().expect("nonzero pivot");
                let v = vec_scale(&v, &inv);
                let img = vec_scale(&img, &inv);
                self.rows.push((v, img));
                self.pivots.push(piv);
                Ok(true)
            }
        }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The induced linear map as a (dim target) x (dim source) matrix, if the
    /// span is all of the source.
    fn to_linmap(&self, dim_tgt: usize) -> Option<Matrix> {
        if self.dim() < self.dim_src {
            return None;
        }
        let r = Matrix::from_rows(self.field, self.rows.iter().map(|(v, _)| v.clone()).collect());
        let rt = r.transpose();
        let mut m = Matrix::zero(self.field, dim_tgt, self.dim_src);
        for i in 0..self.dim_src {
            let (x, _) = rt.solve(&basis_vec(self.field, self.dim_src, i)).ok()?;
            let mut img = zero_vec(self.field, dim_tgt);
            for (j, c) in x.iter().enumerate() {
                if !c.is_zero() {
                    img = crate::linalg::vec_add(&img, &vec_scale(&self.rows[j].1, c));
                }
            }
            for (rw, val) in img.into_iter().enumerate() {
                m.set(rw, i, val);
            }
        }
        Some(m)
    }
}

/// Smallest span of the given vectors (plus the unit) closed under products.
pub fn subalgebra_closure(a: &Algebra, vectors: &[Vec<Scalar>]) -> crate::linalg::Subspace {
    let mut gens: Vec<Vec<Scalar>> = vec![a.unit.clone()];
    gens.extend(vectors.iter().cloned());
    let mut span = crate::linalg::Subspace::from_vectors(a.field, a.dim, &gens);
    loop {
        let before = span.dim();
        let rows: Vec<Vec<Scalar>> = (0..span.basis.rows).map(|i| span.basis.row(i)).collect();
        let mut new_rows = rows.clone();
        for x in &rows {
            for y in &rows {
                new_rows.push(a.mul_vec(x, y));
            }
        }
        span = crate::linalg::Subspace::from_vectors(a.field, a.dim, &new_rows);
        if span.dim() == before {
            return span;
        }
    }
}

/// Greedy multiplicative generating set: basis indices added left to right
/// whenever they are not yet in the generated subalgebra.
pub fn algebra_generators(a: &Algebra) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut gen_vecs: Vec<Vec<Scalar>> = Vec::new();
    let mut span = subalgebra_closure(a, &[]);
    for i in 0..a.dim {
        if !span.contains(&basis_vec(a.field, a.dim, i)) {
            gens.push(i);
            gen_vecs.push(basis_vec(a.field, a.dim, i));
            span = subalgebra_closure(a, &gen_vecs);
        }
    }
    gens
}

pub fn is_algebra_map(src: &Algebra, tgt: &Algebra, f: &Matrix) -> bool {
    if f.apply(&src.unit) != tgt.unit {
        return false;
    }
    for i in 0..src.dim {
        for j in 0..src.dim {
            let lhs = f.apply(&src.mul_basis(i, j));
            let rhs = tgt.mul_vec(&f.col(i), &f.col(j));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

pub fn is_coalgebra_map(src: &crate::algebra::Coalgebra, tgt: &crate::algebra::Coalgebra, f: &Matrix) -> bool {
    for i in 0..src.dim {
        if !tgt.counit_vec(&f.col(i)).eq(&src.counit[i]) {
            return false;
        }
        let lhs = tgt.comult_vec(&f.col(i));
        // (f (x) f) Delta_src e_i
        let di = src.comult_basis(i);
        let mut rhs = zero_vec(src.field, tgt.dim * tgt.dim);
        for idx in 0..src.dim * src.dim {
            if di[idx].is_zero() {
                continue;
            }
            let (j, k) = crate::linalg::unflatten(idx, src.dim);
            let t = vec_tensor(&f.col(j), &f.col(k), src.field);
            rhs = crate::linalg::vec_add(&rhs, &vec_scale(&t, &di[idx]));
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

pub fn is_bialgebra_map(src: &Bialgebra, tgt: &Bialgebra, f: &Matrix) -> bool {
    is_algebra_map(&src.algebra, &tgt.algebra, f) && is_coalgebra_map(&src.coalgebra, &tgt.coalgebra, f)
}

/// Candidate image sets per generator, driven by how much coalgebra structure
/// may be assumed on the source.
enum CandidateSet {
    Grouplikes(Vec<Vec<Scalar>>),
    AllVectors,
}

fn enumerate_maps_inner(
    src_alg: &Algebra,
    tgt_dim: usize,
    candidates: &[(usize, CandidateSet)],
    grouplike_pool: &[Vec<Scalar>],
    budget: u64,
    tgt_mul: &dyn Fn(&[Scalar], &[Scalar]) -> Vec<Scalar>,
    tgt_unit: &[Scalar],
    accept: &dyn Fn(&Matrix) -> bool,
) -> Result<Vec<Matrix>, EnumError> {
    let field = src_alg.field;
    // budget check
    let mut total: u128 = 1;
    for (_, c) in candidates {
        let n = match c {
            CandidateSet::Grouplikes(v) => v.len() as u128,
            CandidateSet::AllVectors => VectorIter::count(field, tgt_dim)
                .ok_or(EnumError::RationalsNeedSolver)?,
        };
        total = total.checked_mul(n).ok_or(EnumError::BudgetExceeded {
            needed: u128::MAX,
            budget,
        })?;
    }
    if total > budget as u128 {
        return Err(EnumError::BudgetExceeded { needed: total, budget });
    }

    // materialize candidate lists
    let lists: Vec<Vec<Vec<Scalar>>> = candidates
        .iter()
        .map(|(_, c)| match c {
            CandidateSet::Grouplikes(v) => v.clone(),
            CandidateSet::AllVectors => VectorIter::new(field, tgt_dim).unwrap().collect(),
        })
        .collect();
    let _ = grouplike_pool;
    let gen_idx: Vec<usize> = candidates.iter().map(|(i, _)| *i).collect();

    let mut results: Vec<Matrix> = Vec::new();
    let mut choice = vec![0usize; lists.len()];
    'outer: loop {
        let images: Vec<&Vec<Scalar>> = choice.iter().zip(&lists).map(|(&c, l)| &l[c]).collect();
        if let Some(f) = close_generator_assignment(src_alg, tgt_dim, &gen_idx, &images, tgt_mul, tgt_unit)
        {
            if accept(&f) && !results.contains(&f) {
                results.push(f);
            }
        }
        // odometer over candidate choices
        let mut i = lists.len();
        loop {
            if i == 0 {
                break 'outer;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < lists[i].len() {
                break;
            }
            choice[i] = 0;
        }
        if lists.is_empty() {
            break;
        }
    }
    results.sort_by_key(|m| {
        let mut v = Vec::new();
        for i in 0..m.rows {
            v.extend(m.row(i));
        }
        v
    });
    Ok(results)
}

/// Propagate generator images through products until the span of expressible
/// elements covers the source; returns the induced linear map, or None when
/// the assignment is inconsistent or the generators do not generate.
fn close_generator_assignment(
    src_alg: &Algebra,
    tgt_dim: usize,
    gens: &[usize],
    images: &[&Vec<Scalar>],
    tgt_mul: &dyn Fn(&[Scalar], &[Scalar]) -> Vec<Scalar>,
    tgt_unit: &[Scalar],
) -> Option<Matrix> {
    let field = src_alg.field;
    let d = src_alg.dim;
    let mut span = SpanWithImage::new(field, d);
    let mut frontier: Vec<(Vec<Scalar>, Vec<Scalar>)> = vec![(src_alg.unit.clone(), tgt_unit.to_vec())];
    span.insert(src_alg.unit.clone(), tgt_unit.to_vec()).ok()?;
    for (&g, img) in gens.iter().zip(images) {
        let v = basis_vec(field, d, g);
        if span.insert(v.clone(), (*img).clone()).ok()? {
            frontier.push((v, (*img).clone()));
        }
    }
    while !frontier.is_empty() && span.dim() < d {
        let mut next = Vec::new();
        for (v, iv) in &frontier {
            for (&g, img) in gens.iter().zip(images) {
                let prod = src_alg.mul_vec(v, &basis_vec(field, d, g));
                let prod_img = tgt_mul(iv, img);
                if span.insert(prod.clone(), prod_img.clone()).ok()? {
                    next.push((prod, prod_img));
                }
            }
        }
        frontier = next;
    }
    span.to_linmap(tgt_dim)
}

/// All unital algebra maps src -> tgt, canonical order. Exhaustive over F_p
/// within budget; over Q only group-like-generated sources are supported.
pub fn enumerate_algebra_maps(
    src: &Algebra,
    src_coalgebra: Option<&crate::algebra::Coalgebra>,
    tgt: &Algebra,
    tgt_grouplikes: Option<&[Vec<Scalar>]>,
    budget: u64,
) -> Result<Vec<Matrix>, EnumError> {
    let gens = algebra_generators(src);
    let candidates: Vec<(usize, CandidateSet)> = gens
        .iter()
        .map(|&g| {
            // a group-like generator must land on a group-like image under a
            // bialgebra map; callers supply the pool when that pruning is sound
            let gl = src_coalgebra.and_then(|c| {
                let d = src.dim;
                let e = basis_vec(src.field, d, g);
                if c.comult_vec(&e) == vec_tensor(&e, &e, src.field) && c.counit[g].is_one() {
                    tgt_grouplikes.map(|p| p.to_vec())
                } else {
                    None
                }
            });
            match gl {
                Some(pool) => (g, CandidateSet::Grouplikes(pool)),
                None => (g, CandidateSet::AllVectors),
            }
        })
        .collect();
    let pool: Vec<Vec<Scalar>> = tgt_grouplikes.map(|p| p.to_vec()).unwrap_or_default();
    let tgt_owned = tgt.clone();
    enumerate_maps_inner(
        src,
        tgt.dim,
        &candidates,
        &pool,
        budget,
        &move |a, b| tgt_owned.mul_vec(a, b),
        &tgt.unit,
        &{
            let tgt = tgt.clone();
            let src = src.clone();
            move |f: &Matrix| is_algebra_map(&src, &tgt, f)
        },
    )
}

/// All bialgebra maps src -> tgt, canonical order.
pub fn enumerate_bialgebra_maps(
    src: &Bialgebra,
    tgt: &Bialgebra,
    budget: u64,
) -> Result<Vec<Matrix>, EnumError> {
    let pool = grouplikes(tgt);
    let maps = enumerate_algebra_maps(
        &src.algebra,
        Some(&src.coalgebra),
        &tgt.algebra,
        Some(&pool),
        budget,
    )?;
    Ok(maps
        .into_iter()
        .filter(|f| is_coalgebra_map(&src.coalgebra, &tgt.coalgebra, f))
        .collect())
}
