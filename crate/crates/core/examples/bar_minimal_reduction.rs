//! Shrinking a Jordan-Lie inner ideal to a bar-minimal `eAf`.
use jordan_lie::corpus::{self, BimoduleSpec};
use jordan_lie::reduction::bar_minimal_reduce;
use jordan_lie::{FieldSpec, InnerIdealCandidate};

fn main() -> jordan_lie::Result<()> {
    let a = corpus::build_semidirect(&[2, 2], &BimoduleSpec::square(&[(1, 2, 1)]), FieldSpec::Rational)?;
    let phi = corpus::random_inner_automorphism(&a, 5)?;
    let e = phi(&a.element("e11").unwrap());
    let f = phi(&a.element("e22").unwrap());
    let eaf = a.span((0..a.dim()).map(|i| a.mul3(&e, &a.basis_vector(i), &f)).collect());
    let extra = a.span(a.radical().basis().iter().take(1).cloned().collect());
    let b = eaf.sum(&extra)?;
    let mut cand = InnerIdealCandidate::in_algebra(&a, 1, b.clone())?;
    if !cand.is_jordan_lie() {
        cand = cand.with_subspace(eaf)?;
    }
    println!("dim B = {}, Jordan-Lie: {}", cand.b().dim(), cand.is_jordan_lie());
    let red = bar_minimal_reduce(&cand)?;
    println!("e = {}", a.format_element(red.pair.e()));
    println!("f = {}", a.format_element(red.pair.f()));
    println!("dim eAf = {}", red.b_prime.dim());
    for step in &red.trace.steps {
        println!("layer {}: q = {}", step.layer, a.format_element(&step.conjugator));
    }
    Ok(())
}
