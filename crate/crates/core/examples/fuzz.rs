//! Runs the invariant suite on a handful of seeded random algebras.

use jordan_lie::conformance::{run_suite, Outcome, SuiteConfig};
use jordan_lie::corpus::{random_algebra, RandomParams};

fn main() -> jordan_lie::Result<()> {
    let count: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20);
    let params = RandomParams {
        max_dim: 12,
        ..RandomParams::default()
    };
    let cfg = SuiteConfig::default();
    let mut total = Outcome::default();
    for seed in 0..count {
        let a = random_algebra(seed, &params)?;
        let out = run_suite(&a, seed, &cfg);
        for f in &out.findings {
            println!("seed {seed} (dim {}): {}: {}", a.dim(), f.check, f.detail.lines().next().unwrap_or(""));
        }
        total.merge(out);
    }
    for (check, t) in &total.tallies {
        println!("{:>6} passed {:>4} failed  {check}", t.passed, t.failed);
    }
    println!("{} comparisons, {} candidates", total.comparisons, total.candidates);
    Ok(())
}
