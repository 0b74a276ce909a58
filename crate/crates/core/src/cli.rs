//! Command-line front end: `analyze`, `reduce`, `fuzz` and `poset`.
//!
//! Exit codes: 0 success, 1 violation found, 2 usage or precondition,
//! 3 parse error.

use std::collections::BTreeMap;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::conformance::{self, labels, Outcome, SuiteConfig, Tally};
use crate::corpus::{self, PairOptions, RandomParams};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::format::{self, AlgebraFile};
use crate::inner_ideal::{pair_relations, IdempotentPair, InnerIdealCandidate, InnerIdealReport};
use crate::linalg::{Subspace, Vector};
use crate::reduction::{self, ReductionResult, SplitWitness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "jordan-lie", version, about = "Jordan-Lie inner ideals of finite-dimensional associative algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every predicate and witness for a named subspace of `A^(k)`.
    Analyze {
        path: PathBuf,
        #[arg(long)]
        subspace: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Reduce a Jordan-Lie inner ideal to a bar-minimal `eAf`.
    Reduce {
        path: PathBuf,
        #[arg(long)]
        subspace: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Write `e`, `f`, the conjugators and the split parts as an
        /// algebra file.
        #[arg(long, value_name = "FILE")]
        emit_witness: Option<PathBuf>,
    },
    /// Run the invariant suite on seeded random algebras.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, env = "JORDAN_LIE_MAX_DIM", default_value_t = 12)]
        max_dim: usize,
        #[arg(long, env = "JORDAN_LIE_FIELD", default_value = "Q")]
        field: FieldSpec,
        /// Corrupt one structure constant of every generated algebra.
        #[arg(long)]
        mutate: bool,
        /// Directory for counterexample files.
        #[arg(long, default_value = "counterexamples")]
        out: PathBuf,
        #[arg(long, default_value_t = 64)]
        pair_budget: usize,
    },
    /// DOT graph of idempotent pairs under left-right dominance.
    Poset {
        path: PathBuf,
        #[arg(long, default_value_t = 256)]
        budget: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::TheoremViolation { .. } | Error::ReductionFailed { .. } => EXIT_VIOLATION,
        _ => EXIT_USAGE,
    }
}

/// Runs a parsed command, writing results to `out`; returns the exit code.
pub fn run(cli: Cli, out: &mut dyn std::io::Write) -> i32 {
    let res = match cli.command {
        Command::Analyze { path, subspace, k } => cmd_analyze(&path, &subspace, k).map(|r| (r, EXIT_OK)),
        Command::Reduce {
            path,
            subspace,
            k,
            emit_witness,
        } => cmd_reduce(&path, &subspace, k, emit_witness.as_deref()).map(|r| (r, EXIT_OK)),
        Command::Fuzz {
            seed,
            count,
            max_dim,
            field,
            mutate,
            out: dir,
            pair_budget,
        } => {
            let opts = FuzzOptions {
                seed,
                count,
                max_dim,
                field,
                mutate,
                pair_budget,
            };
            cmd_fuzz(&opts, Some(&dir)).map(|s| {
                let code = if s.violations > 0 { EXIT_VIOLATION } else { EXIT_OK };
                (to_pretty(&s), code)
            })
        }
        Command::Poset { path, budget, output } => cmd_poset(&path, budget).and_then(|dot| match output {
            Some(p) => {
                write_atomic(&p, dot.as_bytes())?;
                Ok((String::new(), EXIT_OK))
            }
            None => Ok((dot, EXIT_OK)),
        }),
    };
    match res {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn to_pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn vector_value(a: &Algebra, v: &Vector) -> Value {
    json!({
        "element": a.format_element(v),
        "coords": v.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

fn subspace_value(a: &Algebra, s: &Subspace) -> Value {
    json!({
        "dim": s.dim(),
        "basis": s.basis().iter().map(|v| a.format_element(v)).collect::<Vec<_>>(),
    })
}

fn pair_value(a: &Algebra, p: &IdempotentPair) -> Value {
    json!({
        "e": vector_value(a, p.e()),
        "f": vector_value(a, p.f()),
        "orthogonal": p.is_orthogonal(),
        "strict": p.is_strict(),
    })
}

fn split_value(a: &Algebra, w: &SplitWitness) -> Value {
    json!({
        "conjugators": w.conjugators.iter().map(|q| vector_value(a, q)).collect::<Vec<_>>(),
        "levi_prime_dim": w.levi_prime.dim(),
        "semisimple_part": subspace_value(a, &w.semisimple_part),
        "radical_part": subspace_value(a, &w.radical_part),
    })
}

/// A labelled boolean in a report.
fn check(label: &str, value: Option<bool>) -> Value {
    json!({ "theorem": label, "value": value })
}

fn report_value(a: &Algebra, input: Value, rep: &InnerIdealReport) -> Value {
    let mut checks = vec![
        check("inner ideal: [B, [B, L]] ⊆ B", Some(rep.is_inner)),
        check(labels::JORDAN_LIE, Some(rep.is_jordan_lie)),
        check("regular: B² = 0 and BAB ⊆ B", Some(rep.is_regular)),
        check("L-perfect: B = [B, [B, L]]", Some(rep.is_l_perfect)),
        check("bar-minimal iff B = eAf for a strict orthogonal pair", rep.is_bar_minimal),
    ];
    if rep.is_jordan_lie {
        checks.push(check(labels::SPLIT, Some(rep.split.is_some())));
    }
    json!({
        "input": input,
        "inner_ideal": rep.is_inner,
        "jordan_lie": rep.is_jordan_lie,
        "regular": rep.is_regular,
        "l_perfect": rep.is_l_perfect,
        "bar_minimal": rep.is_bar_minimal,
        "bar_dim": rep.bar.dim(),
        "core": rep.core.as_ref().map(|c| subspace_value(a, c)),
        "pair": rep.pair.as_ref().map(|p| pair_value(a, p)),
        "regular_witness": rep.witness.as_ref().map(|w| json!({
            "left": subspace_value(a, &w.left),
            "right": subspace_value(a, &w.right),
        })),
        "violation": rep.violation.as_ref().map(|v| v.describe(a)),
        "split": rep.split.as_ref().map(|w| split_value(a, w)),
        "checks": checks,
    })
}

fn load(path: &Path, subspace: &str) -> Result<(AlgebraFile, Subspace)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?;
    let file = AlgebraFile::parse(&text)?;
    let b = file.subspace(subspace)?;
    Ok((file, b))
}

fn input_value(path: &Path, subspace: &str, k: usize, a: &Algebra) -> Value {
    json!({
        "file": path.display().to_string(),
        "subspace": subspace,
        "k": k,
        "field": a.field().to_string(),
        "dim": a.dim(),
    })
}

pub fn cmd_analyze(path: &Path, subspace: &str, k: usize) -> Result<String> {
    let (file, b) = load(path, subspace)?;
    let a = &file.algebra;
    let start = Instant::now();
    let cand = InnerIdealCandidate::in_algebra(a, k, b)?;
    let rep = reduction::analyze(&cand)?;
    let mut v = report_value(a, input_value(path, subspace, k, a), &rep);
    v["timings_ms"] = json!({ "analyze": start.elapsed().as_millis() as u64 });
    Ok(to_pretty(&v))
}

pub fn cmd_reduce(path: &Path, subspace: &str, k: usize, emit_witness: Option<&Path>) -> Result<String> {
    let (file, b) = load(path, subspace)?;
    let a = &file.algebra;
    let start = Instant::now();
    let cand = InnerIdealCandidate::in_algebra(a, k, b)?;
    let red = reduction::bar_minimal_reduce(&cand)?;
    let split = reduction::split_witness_from(&cand, &red)?;
    let elapsed = start.elapsed().as_millis() as u64;
    if let Some(p) = emit_witness {
        write_atomic(p, witness_file(a, &cand, &red, &split).emit().as_bytes())?;
    }
    let v = json!({
        "input": input_value(path, subspace, k, a),
        "pair": pair_value(a, &red.pair),
        "e_a_f": subspace_value(a, &red.b_prime),
        "bar_minimal": red.b_prime == *cand.b(),
        "trace": {
            "input_dim": red.trace.input_dim,
            "core_dim": red.trace.core_dim,
            "one_perfect_radical_dim": red.trace.one_perfect_radical_dim,
            "nilpotency_index": red.trace.nilpotency_index,
            "levi_pair": {
                "e": vector_value(a, &red.trace.levi_pair.0),
                "f": vector_value(a, &red.trace.levi_pair.1),
            },
            "steps": red.trace.steps.iter().map(|s| json!({
                "layer": s.layer,
                "conjugator": vector_value(a, &s.conjugator),
            })).collect::<Vec<_>>(),
        },
        "split": split_value(a, &split),
        "checks": [
            check(labels::REDUCTION, Some(true)),
            check(labels::SPLIT, Some(true)),
        ],
        "timings_ms": { "reduce": elapsed },
    });
    Ok(to_pretty(&v))
}

/// The algebra with `B`, `eAf`, the split parts, `e`, `f` and the
/// conjugators `q1, q2, ...`.
pub fn witness_file(a: &Algebra, cand: &InnerIdealCandidate<'_>, red: &ReductionResult, split: &SplitWitness) -> AlgebraFile {
    let mut f = AlgebraFile::new(a.clone())
        .with_subspace("B", cand.b())
        .with_subspace("eAf", &red.b_prime)
        .with_subspace("B_levi", &split.semisimple_part)
        .with_subspace("B_radical", &split.radical_part)
        .with_subspace("levi_prime", &split.levi_prime)
        .with_element("e", red.pair.e().clone())
        .with_element("f", red.pair.f().clone());
    for (i, q) in split.conjugators.iter().enumerate() {
        f = f.with_element(&format!("q{}", i + 1), q.clone());
    }
    f
}

/// Writes through a temporary file in the target directory.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
        _ => PathBuf::from("."),
    };
    std::fs::create_dir_all(&dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(&dir)?;
    tmp.write_all(bytes)?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

#[derive(Clone, Debug)]
pub struct FuzzOptions {
    pub seed: u64,
    pub count: u64,
    pub max_dim: usize,
    pub field: FieldSpec,
    pub mutate: bool,
    pub pair_budget: usize,
}

impl Default for FuzzOptions {
    fn default() -> Self {
        FuzzOptions {
            seed: 0,
            count: 100,
            max_dim: 12,
            field: FieldSpec::Rational,
            mutate: false,
            pair_budget: 64,
        }
    }
}

/// Deterministic summary of a fuzz run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    pub seed: u64,
    pub count: u64,
    pub max_dim: usize,
    pub field: String,
    pub mutate: bool,
    pub violations: usize,
    pub comparisons: u64,
    pub candidates: u64,
    pub checks: BTreeMap<String, Tally>,
    pub counterexamples: Vec<String>,
}

struct Case {
    index: u64,
    seed: u64,
    algebra: Option<Algebra>,
    raw: String,
    outcome: Outcome,
}

fn fuzz_case(opts: &FuzzOptions, index: u64, seed: u64) -> Case {
    let params = RandomParams {
        max_dim: opts.max_dim,
        field: opts.field,
        ..RandomParams::default()
    };
    let cfg = SuiteConfig {
        pair_budget: opts.pair_budget,
        ..SuiteConfig::default()
    };
    let mut outcome = Outcome::default();
    let built = corpus::random_algebra(seed, &params);
    let a = match built {
        Ok(a) => a,
        Err(e) => {
            outcome.record_failure(labels::ASSOCIATIVE, format!("builder failed: {e}"));
            return Case {
                index,
                seed,
                algebra: None,
                raw: String::new(),
                outcome,
            };
        }
    };
    if !opts.mutate {
        outcome.merge(conformance::run_suite(&a, seed, &cfg));
        return Case {
            index,
            seed,
            raw: String::new(),
            algebra: Some(a),
            outcome,
        };
    }
    let mut sc = a.structure_constants();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6d75_7461_7465);
    let n = a.dim();
    let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
    sc.push((i, j, k, a.field().one()));
    let raw = format::emit_raw(a.field(), a.labels(), a.unit(), sc.clone());
    match Algebra::new(a.field(), a.labels().to_vec(), sc, a.unit().cloned()) {
        Ok(m) => {
            outcome.record_pass(labels::ASSOCIATIVE);
            outcome.merge(conformance::run_suite(&m, seed, &cfg));
            Case {
                index,
                seed,
                algebra: Some(m),
                raw,
                outcome,
            }
        }
        Err(e) => {
            outcome.record_failure(labels::ASSOCIATIVE, e.to_string());
            Case {
                index,
                seed,
                algebra: None,
                raw,
                outcome,
            }
        }
    }
}

/// Generates `count` algebras, runs the suite on each in parallel and
/// writes one algebra file and one report per violation into `dir`.
pub fn cmd_fuzz(opts: &FuzzOptions, dir: Option<&Path>) -> Result<FuzzSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let seeds: Vec<u64> = (0..opts.count).map(|_| rng.gen()).collect();
    let cases: Vec<Case> = seeds
        .par_iter()
        .enumerate()
        .map(|(i, &s)| fuzz_case(opts, i as u64, s))
        .collect();
    let mut total = Outcome::default();
    let mut files = Vec::new();
    for case in cases {
        for (n, finding) in case.outcome.findings.iter().enumerate() {
            let stem = format!("case-{:04}-{}", case.index, n);
            let algebra_text = match &case.algebra {
                Some(a) => {
                    let mut f = AlgebraFile::new(a.clone());
                    if let Some(b) = &finding.subspace {
                        f = f.with_subspace("B", b);
                    }
                    f.emit()
                }
                None => case.raw.clone(),
            };
            let report = json!({
                "seed": case.seed,
                "theorem": finding.check,
                "detail": finding.detail,
                "k": finding.k,
                "algebra_file": format!("{stem}.algebra.json"),
                "subspace": finding.subspace.as_ref().map(|_| "B"),
            });
            if let Some(dir) = dir {
                write_atomic(&dir.join(format!("{stem}.algebra.json")), algebra_text.as_bytes())?;
                write_atomic(&dir.join(format!("{stem}.report.json")), to_pretty(&report).as_bytes())?;
            }
            files.push(stem);
        }
        total.merge(case.outcome);
    }
    Ok(FuzzSummary {
        seed: opts.seed,
        count: opts.count,
        max_dim: opts.max_dim,
        field: opts.field.to_string(),
        mutate: opts.mutate,
        violations: total.violations(),
        comparisons: total.comparisons,
        candidates: total.candidates,
        checks: total.tallies.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        counterexamples: files,
    })
}

/// Graph of pairs modulo `~LR` with covering edges of `≤LR`.
pub fn cmd_poset(path: &Path, budget: usize) -> Result<String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?;
    let file = AlgebraFile::parse(&text)?;
    poset_dot(&file.algebra, budget)
}

pub fn poset_dot(a: &Algebra, budget: usize) -> Result<String> {
    let mut opts = PairOptions::new(budget);
    opts.require_fe_zero = false;
    let en = corpus::enumerate_idempotent_pairs(a, &opts)?;
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, p) in en.pairs.iter().enumerate() {
        match classes
            .iter_mut()
            .find(|c| pair_relations(a, p, &en.pairs[c[0]]).equiv_lr)
        {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    let reps: Vec<&IdempotentPair> = classes.iter().map(|c| &en.pairs[c[0]]).collect();
    let m = reps.len();
    let below: Vec<Vec<bool>> = (0..m)
        .map(|x| (0..m).map(|y| x != y && pair_relations(a, reps[x], reps[y]).leq_lr).collect())
        .collect();
    let mut out = String::new();
    out.push_str(&format!(
        "// pairs: {}, classes: {}, truncated: {}\n",
        en.pairs.len(),
        m,
        en.truncated
    ));
    out.push_str("digraph poset {\n  rankdir=BT;\n");
    for (x, p) in reps.iter().enumerate() {
        let style = if p.is_strict() { ", style=bold, color=blue" } else { "" };
        out.push_str(&format!(
            "  n{x} [label=\"dim eAf = {}\\ne = {}\\nf = {}\\nmembers = {}\"{style}];\n",
            p.e_a_f(a).dim(),
            a.format_element(p.e()),
            a.format_element(p.f()),
            classes[x].len()
        ));
    }
    for x in 0..m {
        for y in 0..m {
            if below[x][y] && !(0..m).any(|z| below[x][z] && below[z][y]) {
                out.push_str(&format!("  n{x} -> n{y};\n"));
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}
