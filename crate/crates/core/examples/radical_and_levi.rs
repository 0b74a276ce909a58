//! Radical, Levi blocks and the 1-perfect radical of a few algebras.
use jordan_lie::corpus::{self, BimoduleSpec};
use jordan_lie::{Algebra, FieldSpec};

fn describe(name: &str, a: &Algebra) -> jordan_lie::Result<()> {
    let levi = a.levi()?;
    println!("{name}: dim {}", a.dim());
    println!("  radical dim {}, nilpotency index {}", a.radical().dim(), a.nilpotency_index());
    println!("  Levi blocks {:?}", levi.block_sizes());
    println!("  1-perfect: {}", a.is_1perfect()?);
    println!("  P1 dim {}", a.one_perfect_radical(0)?.dim());
    Ok(())
}

fn main() -> jordan_lie::Result<()> {
    let q = FieldSpec::Rational;
    describe("T3", &corpus::triangular(3, false, q))?;
    describe("M2 + U(1,1)", &corpus::build_semidirect(&[2], &BimoduleSpec::square(&[(1, 1, 1)]), q)?)?;
    describe(
        "M2 x M1 chained",
        &corpus::build_semidirect(&[2, 1], &BimoduleSpec::chained(&[(1, 2, 1), (2, 1, 1)]), q)?,
    )?;
    describe("M3 over F_17", &corpus::matrix_algebra(3, FieldSpec::prime(17)?))?;
    Ok(())
}
