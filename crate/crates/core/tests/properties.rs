//! Randomized properties of the linear algebra kernel and the convolution
//! algebra, over both the rationals and small prime fields.

use bimeasure::algebra::{convolution_unit, convolve};
use bimeasure::catalog;
use bimeasure::{FieldSpec, Matrix, Scalar, Subspace};
use proptest::prelude::*;

fn field_strategy() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rationals),
        Just(FieldSpec::Prime(5)),
        Just(FieldSpec::Prime(7)),
    ]
}

fn matrix_strategy(max_dim: usize) -> impl Strategy<Value = Matrix> {
    (field_strategy(), 1..=max_dim, 1..=max_dim).prop_flat_map(|(field, r, c)| {
        proptest::collection::vec(-3i64..=3, r * c).prop_map(move |entries| {
            Matrix::from_fn(field, r, c, |i, j| field.from_i64(entries[i * c + j]))
        })
    })
}

fn subspace_pair_strategy() -> impl Strategy<Value = (Subspace, Subspace)> {
    (field_strategy(), 1..=4usize).prop_flat_map(|(field, ambient)| {
        let rows = proptest::collection::vec(
            proptest::collection::vec(-3i64..=3, ambient),
            0..=ambient,
        );
        (rows.clone(), rows).prop_map(move |(ra, rb)| {
            let to_vecs = |rows: Vec<Vec<i64>>| -> Vec<Vec<Scalar>> {
                rows.iter()
                    .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
                    .collect()
            };
            (
                Subspace::from_vectors(field, ambient, &to_vecs(ra)),
                Subspace::from_vectors(field, ambient, &to_vecs(rb)),
            )
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, ..ProptestConfig::default() })]

    #[test]
    fn rref_is_idempotent_and_rank_is_bounded(m in matrix_strategy(5)) {
        let r = m.rref();
        prop_assert_eq!(r.rref(), r.clone());
        prop_assert!(m.rank() <= m.rows.min(m.cols));
        prop_assert_eq!(r.rank(), m.rank());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, ..ProptestConfig::default() })]

    #[test]
    fn sum_and_intersection_dimensions_are_modular((u, v) in subspace_pair_strategy()) {
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(s.contains_subspace(&u) && s.contains_subspace(&v));
        prop_assert!(u.contains_subspace(&i) && v.contains_subspace(&i));
    }

    #[test]
    fn perp_is_an_involution_for_a_nondegenerate_pairing((u, _v) in subspace_pair_strategy()) {
        let pairing = Matrix::identity(u.field(), u.ambient);
        let perp = u.perp(&pairing).unwrap();
        prop_assert_eq!(perp.dim(), u.ambient - u.dim());
        let back = perp.perp(&pairing).unwrap();
        prop_assert!(back.contains_subspace(&u) && u.contains_subspace(&back));
    }

    #[test]
    fn kernel_vectors_annihilate_the_matrix(m in matrix_strategy(5)) {
        let k = m.kernel();
        prop_assert_eq!(k.rows + m.rank(), m.cols);
        for r in 0..k.rows {
            prop_assert!(m.apply(&k.row(r)).iter().all(|x| x.is_zero()));
        }
    }
}

fn conv_triple_strategy() -> impl Strategy<Value = (FieldSpec, usize, Vec<i64>, Vec<i64>, Vec<i64>)>
{
    (field_strategy(), 2..=3usize).prop_flat_map(|(field, n)| {
        let entries = || proptest::collection::vec(-2i64..=2, n * 2);
        (Just(field), Just(n), entries(), entries(), entries())
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 150, ..ProptestConfig::default() })]

    #[test]
    fn convolution_is_associative_and_unital((field, n, fa, ga, ha) in conv_triple_strategy()) {
        // maps from the cyclic group coalgebra into the dual numbers
        let c = catalog::group_algebra(&catalog::cyclic_group(n), field)
            .unwrap()
            .bialgebra
            .coalgebra;
        let a = catalog::dual_numbers(field);
        let mk = |entries: &[i64]| {
            Matrix::from_fn(field, 2, n, |i, j| field.from_i64(entries[j * 2 + i]))
        };
        let (f, g, h) = (mk(&fa), mk(&ga), mk(&ha));
        let left = convolve(&c, &a, &convolve(&c, &a, &f, &g), &h);
        let right = convolve(&c, &a, &f, &convolve(&c, &a, &g, &h));
        prop_assert_eq!(left, right);
        let e = convolution_unit(&c, &a);
        prop_assert_eq!(convolve(&c, &a, &e, &f), f.clone());
        prop_assert_eq!(convolve(&c, &a, &f, &e), f);
    }
}
