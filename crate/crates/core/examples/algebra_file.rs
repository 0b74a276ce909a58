//! Writing and reading the JSON algebra format.
use jordan_lie::corpus;
use jordan_lie::format::AlgebraFile;
use jordan_lie::FieldSpec;

fn main() -> jordan_lie::Result<()> {
    let a = corpus::triangular(2, false, FieldSpec::prime(101)?);
    let file = AlgebraFile::new(a.clone())
        .with_subspace("R", a.radical())
        .with_element("x", a.combination(&[(1, "e11"), (-3, "e12")]).unwrap());
    let text = file.emit();
    println!("{text}");
    let back = AlgebraFile::parse(&text)?;
    assert_eq!(back.algebra, a);
    println!("round trip ok; R = {}", back.subspace("R")?);
    Ok(())
}
