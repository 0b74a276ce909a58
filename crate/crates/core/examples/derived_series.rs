//! Lie derived series `A^(k)` and the stable term `A^(∞)`.
use jordan_lie::corpus;
use jordan_lie::lie::{derived_infinity, derived_series};
use jordan_lie::FieldSpec;

fn main() -> jordan_lie::Result<()> {
    let q = FieldSpec::Rational;
    for (name, a) in [
        ("M2", corpus::matrix_algebra(2, q)),
        ("T3", corpus::triangular(3, false, q)),
        ("M2 x T2", corpus::direct_sum(&[corpus::matrix_algebra(2, q), corpus::triangular(2, false, q)])?),
    ] {
        let dims: Vec<usize> = derived_series(&a).iter().map(|s| s.dim()).collect();
        let p1 = a.one_perfect_radical(0)?;
        println!(
            "{name}: dims {dims:?}, A^(inf) dim {}, [P1, P1] dim {}",
            derived_infinity(&a).dim(),
            a.subspace_bracket(&p1, &p1).dim()
        );
    }
    Ok(())
}
