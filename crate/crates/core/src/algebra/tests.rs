use super::*;
use crate::corpus;

const Q: FieldSpec = FieldSpec::Rational;

fn span(a: &Algebra, labels: &[&str]) -> Subspace {
    a.span(labels.iter().map(|l| a.element(l).unwrap()).collect())
}

#[test]
fn commutator_and_triple_product_in_m2() {
    let m2 = corpus::matrix_algebra(2, Q);
    let e11 = m2.element("e11").unwrap();
    let e12 = m2.element("e12").unwrap();
    assert_eq!(m2.commutator(&e11, &e12).unwrap(), e12);
    let x = m2.combination(&[(3, "e11"), (-2, "e21"), (5, "e12")]).unwrap();
    assert!(m2.commutator(&x, &x).unwrap().is_zero());
    assert!(m2.multiply(&e11, &Vector::zeros(Q, 3)).is_err());
}

#[test]
fn rejects_non_associative_constants() {
    let labels = vec!["x".to_string(), "y".to_string()];
    let one = Q.one();
    // x*x = y, x*y = x, y*x = 0 fails associativity at (x, x, x)
    let err = Algebra::new(Q, labels, vec![(0, 0, 1, one.clone()), (0, 1, 0, one)], None).unwrap_err();
    assert!(matches!(err, Error::NotAssociative(..)));
}

#[test]
fn rejects_small_characteristic() {
    let f = FieldSpec::prime(5).unwrap();
    let labels = (0..6).map(|i| format!("x{i}")).collect();
    assert!(matches!(
        Algebra::new(f, labels, Vec::new(), None),
        Err(Error::UnsupportedCharacteristic { .. })
    ));
}

#[test]
fn rejects_bad_unit() {
    let labels = vec!["x".to_string()];
    let unit = Vector::from_i64(Q, &[1]);
    assert!(matches!(Algebra::new(Q, labels, Vec::new(), Some(unit)), Err(Error::BadUnit)));
}

#[test]
fn unitalize_null_algebra() {
    let a = corpus::null_algebra(1, Q);
    let u = a.unitalize();
    assert_eq!(u.dim(), 2);
    let x = u.basis_vector(0);
    let one = u.basis_vector(1);
    assert_eq!(u.mul(&one, &x), x);
    assert!(u.mul(&x, &x).is_zero());
}

#[test]
fn unitalize_m2_has_central_complement() {
    let m2 = corpus::matrix_algebra(2, Q);
    let u = m2.unitalize();
    let one = u.unit().unwrap().clone();
    assert!(u.center().contains(&one));
    let levi = u.levi().unwrap();
    assert_eq!(levi.block_sizes(), vec![2, 1]);
    let embedded = u.span((0..4).map(|i| u.basis_vector(i)).collect());
    assert!(u.is_ideal(&embedded, Side::TwoSided));
}

#[test]
fn products_and_closures() {
    let m2 = corpus::matrix_algebra(2, Q);
    let p = m2.subspace_product(&span(&m2, &["e12"]), &span(&m2, &["e21"]));
    assert_eq!(p, span(&m2, &["e11"]));
    assert_eq!(m2.ideal_closure(&span(&m2, &["e12"]), Side::TwoSided), m2.full());
    assert!(m2.subspace_product(&m2.zero_subspace(), &m2.full()).is_zero());
    assert_eq!(m2.ideal_closure(&span(&m2, &["e12"]), Side::Left), span(&m2, &["e12", "e22"]));
}

#[test]
fn center_examples() {
    let m3 = corpus::matrix_algebra(3, Q);
    assert_eq!(*m3.center(), m3.span(vec![m3.unit().unwrap().clone()]));
    let c = corpus::direct_sum(&[corpus::matrix_algebra(1, Q), corpus::null_algebra(2, Q)]).unwrap();
    assert!(c.center().is_full());
}

#[test]
fn radical_examples() {
    let m3 = corpus::matrix_algebra(3, Q);
    assert!(m3.radical().is_zero());
    let t2 = corpus::triangular(2, false, Q);
    assert_eq!(*t2.radical(), span(&t2, &["e12"]));
    let s = corpus::direct_sum(&[corpus::triangular(2, false, Q), corpus::triangular(3, false, Q)]).unwrap();
    assert_eq!(*s.radical(), span(&s, &["e12", "e'12", "e'13", "e'23"]));
}

#[test]
fn quotient_examples() {
    let t2 = corpus::triangular(2, false, Q);
    let q = t2.quotient(t2.radical()).unwrap();
    assert_eq!(q.target().dim(), 2);
    assert!(q.target().center().is_full());
    assert!(q.target().is_semisimple());
    let x = t2.combination(&[(2, "e11"), (3, "e12"), (5, "e22")]).unwrap();
    assert_eq!(q.project(&q.lift(&q.project(&x))), q.project(&x));
    assert_eq!(t2.quotient(&t2.zero_subspace()).unwrap().target().dim(), 3);
    assert_eq!(t2.quotient(&t2.full()).unwrap().target().dim(), 0);
    assert!(matches!(t2.quotient(&span(&t2, &["e11"])), Err(Error::NotAnIdeal(_))));
}

#[test]
fn levi_detection_from_raw_constants() {
    let t2 = corpus::triangular(2, false, Q);
    let raw = Algebra::new(Q, t2.labels().to_vec(), t2.structure_constants(), None).unwrap();
    let levi = raw.levi().unwrap();
    assert_eq!(levi.block_sizes(), vec![1, 1]);
    assert_eq!(*levi.radical(), span(&raw, &["e12"]));

    let m3 = corpus::matrix_algebra(3, Q);
    let raw = Algebra::new(Q, m3.labels().to_vec(), m3.structure_constants(), None).unwrap();
    assert_eq!(raw.levi().unwrap().block_sizes(), vec![3]);

    let b = corpus::build_semidirect(&[2, 2], &corpus::BimoduleSpec::chained(&[(1, 2, 1), (2, 1, 1)]), Q).unwrap();
    let raw = Algebra::new(Q, b.labels().to_vec(), b.structure_constants(), None).unwrap();
    let levi = raw.levi().unwrap();
    assert_eq!(levi.block_sizes(), vec![2, 2]);
    assert_eq!(levi.semisimple().dim() + levi.radical().dim(), raw.dim());
    assert!(raw.is_subalgebra(levi.semisimple()));
}

#[test]
fn non_split_quotient_is_reported() {
    // Q(i) as a 2-dimensional algebra: 1, i with i^2 = -1
    let one = Q.one();
    let labels = vec!["1".to_string(), "i".to_string()];
    let entries = vec![
        (0, 0, 0, one.clone()),
        (0, 1, 1, one.clone()),
        (1, 0, 1, one.clone()),
        (1, 1, 0, -one),
    ];
    let a = Algebra::new(Q, labels, entries, None).unwrap();
    assert!(matches!(a.levi(), Err(Error::NotSplit(_))));
}

#[test]
fn one_perfect_examples() {
    assert!(corpus::matrix_algebra(2, Q).is_1perfect().unwrap());
    assert!(!corpus::matrix_algebra(1, Q).is_1perfect().unwrap());
    assert!(!corpus::triangular(2, false, Q).is_1perfect().unwrap());
}

#[test]
fn one_perfect_radical_examples() {
    let m2 = corpus::matrix_algebra(2, Q);
    assert_eq!(m2.one_perfect_radical(0).unwrap(), m2.full());
    let t2 = corpus::triangular(2, false, Q);
    assert!(t2.one_perfect_radical(0).unwrap().is_zero());
    let s = corpus::direct_sum(&[corpus::matrix_algebra(2, Q), corpus::matrix_algebra(1, Q)]).unwrap();
    for seed in 0..4 {
        assert_eq!(s.one_perfect_radical(seed).unwrap(), span(&s, &["e11", "e12", "e21", "e22"]));
    }
}

#[test]
fn unipotent_conjugation_examples() {
    let t2 = corpus::triangular(2, false, Q);
    let e11 = t2.element("e11").unwrap();
    let q = t2.element("e12").unwrap();
    assert_eq!(t2.conjugate_by_unipotent(&t2.zero(), &e11).unwrap(), e11);
    assert_eq!(t2.conjugate_by_unipotent(&q, &e11).unwrap(), t2.combination(&[(1, "e11"), (-1, "e12")]).unwrap());
    let there = t2.conjugate_by_unipotent(&q, &e11).unwrap();
    let inv = t2.unipotent_inverse_tail(&q);
    assert_eq!(t2.conjugate_by_unipotent(&inv, &there).unwrap(), e11);
    assert!(matches!(t2.conjugate_by_unipotent(&e11, &e11), Err(Error::NotInRadical)));
}

#[test]
fn lie_solvability_examples() {
    assert!(corpus::triangular(3, false, Q).is_lie_solvable());
    assert!(!corpus::matrix_algebra(2, Q).is_lie_solvable());
}
