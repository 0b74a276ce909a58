//! A Jordan-Lie inner ideal that is not regular.
use jordan_lie::corpus::example_nr;
use jordan_lie::{FieldSpec, InnerIdealCandidate};

fn main() -> jordan_lie::Result<()> {
    let ex = example_nr(FieldSpec::Rational)?;
    let a = &ex.algebra;
    println!("A1 has basis {:?}", a.labels());
    let cand = InnerIdealCandidate::in_algebra(a, 0, ex.b.clone())?;
    println!("B = {}", ex.b);
    println!("Jordan-Lie: {}", cand.is_jordan_lie());
    println!("regular:    {}", cand.is_regular());
    let prod = a.mul3(&ex.b1, &ex.a, &ex.b2);
    println!(
        "b1 a b2 = {} (in B: {})",
        a.format_element(&prod),
        ex.b.contains(&prod)
    );
    if let Some(v) = cand.regularity_violation() {
        println!("violation: {}", v.describe(a));
    }
    Ok(())
}
