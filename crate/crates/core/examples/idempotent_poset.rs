//! DOT graph of idempotent pairs of `T3` under left-right dominance.
use jordan_lie::cli::poset_dot;
use jordan_lie::corpus;
use jordan_lie::FieldSpec;

fn main() -> jordan_lie::Result<()> {
    let a = corpus::triangular(3, false, FieldSpec::Rational);
    print!("{}", poset_dot(&a, 128)?);
    Ok(())
}
