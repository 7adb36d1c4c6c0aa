use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use supertensor::catalog::{self, CatalogKey};
use supertensor::linalg::{scalar, Matrix, Scalar};
use supertensor::superalgebra::{GradedDim, LieSuperAlgebra};
use supertensor::{formulas, tensor};

fn heisenberg_key() -> impl Strategy<Value = CatalogKey> {
    prop_oneof![
        (0usize..3, 0usize..3)
            .prop_filter("non-empty", |(m, n)| m + n > 0)
            .prop_map(|(m, n)| CatalogKey::HeisenbergEven { m, n }),
        (1usize..3).prop_map(|m| CatalogKey::HeisenbergOdd { m }),
    ]
}

fn class2_key() -> impl Strategy<Value = CatalogKey> {
    prop_oneof![
        (heisenberg_key(), 0usize..2, 0usize..2)
            .prop_map(|(h, a, b)| CatalogKey::direct_sum(vec![h, CatalogKey::Abelian { m: a, n: b }])),
        (heisenberg_key(), heisenberg_key())
            .prop_filter("small", |(a, b)| a.dim().total() + b.dim().total() <= 7)
            .prop_map(|(a, b)| CatalogKey::direct_sum(vec![a, b])),
        (2usize..4, 0usize..3, 0usize..3, 0u64..50).prop_filter_map("fits", |(p, q, r, seed)| {
            let kept = GradedDim { even: r.min(1), odd: (r + q) % 2 };
            (kept.total() > 0 && kept.fits_in(catalog::free_center_dim(p, q)))
                .then_some(CatalogKey::FreeNilpotent2 { p, q, kept, seed: Some(seed) })
        }),
    ]
}

/// Random parity-preserving change of basis, listed even-first.
fn random_basis(l: &LieSuperAlgebra, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (e, d) = (l.dim().even, l.len());
    loop {
        let mut m = Matrix::zeros(d, d);
        for i in 0..d {
            let block = if i < e { 0..e } else { e..d };
            for j in block {
                m[(i, j)] = scalar(rng.gen_range(-2..=2));
            }
        }
        if m.inverse().is_some() {
            return m;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn catalog_outputs_satisfy_axioms(key in class2_key()) {
        let l = key.build(1).unwrap();
        prop_assert!(l.check_axioms().is_ok());
        prop_assert_eq!(l.dim(), key.dim());
    }

    #[test]
    fn relation_order_does_not_matter(key in heisenberg_key(), seed in any::<u64>()) {
        let l = key.build(1).unwrap();
        let n = l.len();
        let mut triples: Vec<(usize, usize, usize)> =
            (0..n).flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k)))).collect();
        triples.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let shuffled = tensor::tensor_square_ordered(&l, &triples).unwrap();
        prop_assert_eq!(shuffled.quotient_dim(), tensor::tensor_square(&l).unwrap().quotient_dim());
    }

    #[test]
    fn exterior_center_lies_in_center(key in class2_key()) {
        let l = key.build(1).unwrap();
        let z = tensor::exterior_center(&l).unwrap();
        prop_assert!(z.is_subset_of(&l.center()));
    }

    #[test]
    fn tensor_square_splits(key in class2_key()) {
        let l = key.build(1).unwrap();
        let s = tensor::summarize(&l).unwrap();
        prop_assert!(s.decomposes);
        prop_assert_eq!(s.tensor2, s.exterior2 + s.square);
        let ab = l.dim().checked_sub(l.derived_subalgebra().dim()).unwrap();
        prop_assert_eq!(s.square, tensor::gamma_dim(ab.even, ab.odd));
        prop_assert_eq!(s.exterior2, s.multiplier + l.derived_subalgebra().dim());
        prop_assert_eq!(s.tensor3, s.tensor2 * ab);
    }

    #[test]
    fn invariants_survive_basis_change(key in heisenberg_key(), extra in 0usize..2, seed in any::<u64>()) {
        let key = CatalogKey::direct_sum(vec![key, CatalogKey::Abelian { m: extra, n: 1 - extra }]);
        let l = key.build(1).unwrap();
        let moved = l.change_basis(&random_basis(&l, seed), None).unwrap();
        prop_assert!(moved.check_axioms().is_ok());
        let (a, b) = (l.recognize_derived_dim_one().unwrap(), moved.recognize_derived_dim_one().unwrap());
        prop_assert_eq!(a.kind, b.kind);
        prop_assert_eq!(a.abelian, b.abelian);
        let (sa, sb) = (tensor::summarize(&l).unwrap(), tensor::summarize(&moved).unwrap());
        prop_assert_eq!(sa.tensor2, sb.tensor2);
        prop_assert_eq!(sa.exterior2, sb.exterior2);
        prop_assert_eq!(sa.exterior_center.dim(), sb.exterior_center.dim());
    }

    #[test]
    fn direct_sum_multiplier(a in heisenberg_key(), b in heisenberg_key()) {
        prop_assume!(a.dim().total() + b.dim().total() <= 7);
        let (la, lb) = (a.build(1).unwrap(), b.build(1).unwrap());
        let sum = CatalogKey::direct_sum(vec![a, b]).build(1).unwrap();
        let ab = |l: &LieSuperAlgebra| l.dim().checked_sub(l.derived_subalgebra().dim()).unwrap();
        let m = |l: &LieSuperAlgebra| tensor::schur_multiplier_class2(l).unwrap();
        prop_assert_eq!(m(&sum), formulas::multiplier_direct_sum(m(&la), m(&lb), ab(&la), ab(&lb)));
    }
}

#[test]
fn gamma_matches_closed_form() {
    for p in 0..=6 {
        for q in 0..=6 - p {
            assert_eq!(tensor::gamma_dim(p, q), formulas::gamma_closed(p, q), "Γ(A({p}|{q}))");
        }
    }
}

#[test]
fn abelian_tensor_products() {
    for p in 0..=5 {
        for q in 0..=5 - p {
            let a = catalog::abelian(p, q);
            let s = tensor::summarize(&a).unwrap();
            assert_eq!(s.tensor2, formulas::tensor2_abelian(p, q));
            assert_eq!(s.exterior2, formulas::multiplier_abelian(p, q).unwrap());
            assert_eq!(s.multiplier, s.exterior2);
            let expected = if (p, q) == (1, 0) { a.dim() } else { GradedDim::default() };
            assert_eq!(s.exterior_center.dim(), expected, "Z^∧(A({p}|{q}))");
        }
    }
}

#[test]
fn rational_basis_change_keeps_constants_exact() {
    let l = catalog::heisenberg_even(1, 0).unwrap();
    let half: Scalar = supertensor::linalg::ratio(1, 2);
    let mut m = Matrix::identity(3);
    m[(0, 0)] = half.clone();
    let moved = l.change_basis(&m, None).unwrap();
    assert_eq!(moved.bracket_basis(0, 1), vec![(2, half)]);
}
