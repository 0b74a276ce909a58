//! A Levi subalgebra along which a Jordan-Lie inner ideal splits.
use jordan_lie::corpus::{self, BimoduleSpec};
use jordan_lie::inner_ideal::{e_a_f, IdempotentPair};
use jordan_lie::reduction::split_witness;
use jordan_lie::FieldSpec;

fn main() -> jordan_lie::Result<()> {
    let a = corpus::build_semidirect(&[2], &BimoduleSpec::square(&[(1, 1, 1)]), FieldSpec::Rational)?;
    let q = a.element("u1_21").unwrap();
    let e = a.conjugate_by_unipotent(&q, &a.element("e11").unwrap())?;
    let f = a.conjugate_by_unipotent(&q, &a.element("e22").unwrap())?;
    let cand = e_a_f(&a, &IdempotentPair::new(&a, e, f)?, 1)?;
    let w = split_witness(&cand)?;
    println!("B = {}", cand.b());
    for q in &w.conjugators {
        println!("conjugator {}", a.format_element(q));
    }
    println!("B ∩ S' = {}", w.semisimple_part);
    println!("B ∩ R  = {}", w.radical_part);
    Ok(())
}
