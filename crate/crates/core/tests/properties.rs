use jordan_lie::corpus::{self, RandomParams};
use jordan_lie::format::AlgebraFile;
use jordan_lie::{Algebra, FieldSpec, Subspace, Vector};
use proptest::prelude::*;

fn algebra(seed: u64) -> Algebra {
    let params = RandomParams {
        max_dim: 10,
        ..RandomParams::default()
    };
    corpus::random_algebra(seed, &params).unwrap()
}

fn combo(a: &Algebra, coeffs: &[i64], from: &[Vector]) -> Vector {
    let mut x = a.zero();
    for (c, v) in coeffs.iter().zip(from) {
        x.axpy(&a.field().from_i64(*c), v);
    }
    x
}

fn basis(a: &Algebra) -> Vec<Vector> {
    (0..a.dim()).map(|i| a.basis_vector(i)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn unipotent_conjugation_is_multiplicative(
        seed in 0u64..400,
        cq in prop::collection::vec(-2i64..=2, 16),
        cx in prop::collection::vec(-3i64..=3, 16),
        cy in prop::collection::vec(-3i64..=3, 16),
    ) {
        let a = algebra(seed);
        let q = combo(&a, &cq, a.radical().basis());
        let x = combo(&a, &cx, &basis(&a));
        let y = combo(&a, &cy, &basis(&a));
        let phi = |v: &Vector| a.conjugate_by_unipotent(&q, v).unwrap();
        prop_assert_eq!(phi(&a.mul(&x, &y)), a.mul(&phi(&x), &phi(&y)));
        let back = a.conjugate_by_unipotent(&a.unipotent_inverse_tail(&q), &phi(&x)).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn file_round_trip(seed in 0u64..1000, prime in prop::bool::ANY) {
        let params = RandomParams {
            max_dim: 9,
            field: if prime { FieldSpec::prime(101).unwrap() } else { FieldSpec::Rational },
            ..RandomParams::default()
        };
        let a = corpus::random_algebra(seed, &params).unwrap();
        let file = AlgebraFile::new(a.clone())
            .with_subspace("R", a.radical())
            .with_element("unit_or_zero", a.find_unit().unwrap_or_else(|| a.zero()));
        let text = file.emit();
        let back = AlgebraFile::parse(&text).unwrap();
        prop_assert_eq!(&back.algebra, &a);
        prop_assert_eq!(back.subspace("R").unwrap(), a.radical().clone());
        prop_assert_eq!(back.emit(), text);
    }

    #[test]
    fn subspaces_are_canonical(
        seed in 0u64..400,
        rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 16), 1..6),
        mix in -3i64..=3,
    ) {
        let a = algebra(seed);
        let b = basis(&a);
        let vs: Vec<Vector> = rows.iter().map(|r| combo(&a, r, &b)).collect();
        let s = a.span(vs.clone());
        let mut shuffled = vs.clone();
        shuffled.reverse();
        let extra = &vs[0] + &vs[vs.len() - 1].scale(&a.field().from_i64(mix));
        shuffled.push(extra);
        prop_assert_eq!(a.span(shuffled), s.clone());
        let t = Subspace::span(a.field(), a.dim(), s.basis().to_vec()).unwrap();
        prop_assert_eq!(t.basis(), s.basis());
    }

    #[test]
    fn radical_is_nilpotent_ideal(seed in 0u64..400) {
        let a = algebra(seed);
        let r = a.radical();
        prop_assert!(a.subspace_product(&a.full(), r).is_subspace_of(r));
        prop_assert!(a.subspace_product(r, &a.full()).is_subspace_of(r));
        prop_assert!(a.radical_power(a.nilpotency_index()).is_zero());
        prop_assert!(a.bar_quotient().target().radical().is_zero());
    }
}
