//! In a semisimple algebra every Jordan-Lie inner ideal is `eAf`.
use jordan_lie::corpus;
use jordan_lie::inner_ideal::{component_split, recover_pair_semisimple};
use jordan_lie::{FieldSpec, InnerIdealCandidate};

fn main() -> jordan_lie::Result<()> {
    let q = FieldSpec::Rational;
    let a = corpus::direct_sum(&[corpus::matrix_algebra(3, q), corpus::matrix_algebra(2, q)])?;
    let b = a.span(vec![
        a.element("e12").unwrap(),
        a.element("e13").unwrap(),
        a.element("e'12").unwrap(),
    ]);
    let cand = InnerIdealCandidate::in_algebra(&a, 1, b)?;
    println!("Jordan-Lie: {}, L-perfect: {}", cand.is_jordan_lie(), cand.is_l_perfect());
    let pair = recover_pair_semisimple(&cand)?;
    println!("e = {}", a.format_element(pair.e()));
    println!("f = {}", a.format_element(pair.f()));
    println!("eAf = B: {}", pair.e_a_f(&a) == *cand.b());
    let parts: Vec<usize> = component_split(&cand)?.iter().map(|s| s.dim()).collect();
    println!("per-component dimensions {parts:?}");
    Ok(())
}
