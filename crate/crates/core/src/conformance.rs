//! The invariant suite run by `fuzz` and the conformance tests: every
//! structural claim about idempotent pairs, reductions and the 1-perfect
//! radical, checked on one algebra at a time.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::corpus::{self, PairOptions};
use crate::inner_ideal::{
    component_split, make_orthogonal, pair_relations, recover_pair_semisimple, IdempotentPair, InnerIdealCandidate,
};
use crate::lie::{bar_image, derived_infinity};
use crate::linalg::{Subspace, Vector};
use crate::reduction::{bar_minimal_reduce, is_bar_minimal, split_witness_from};

/// Descriptive names of the checks, used as keys in reports.
pub mod labels {
    pub const ASSOCIATIVE: &str = "structure constants are associative";
    pub const DOMINATION: &str = "eAf ⊆ e'Af' iff (e,f) ≤LR (e',f') for strict (e,f)";
    pub const NONVANISHING: &str = "strict nonzero pairs have eAf ≠ 0";
    pub const REDUCE_PAIR: &str = "dominated strict pairs reduce below the dominating pair";
    pub const REDUCTION: &str = "Jordan-Lie inner ideals contain a bar-minimal eAf with the same bar";
    pub const ROUND_TRIP: &str = "eAf for a strict orthogonal pair is bar-minimal";
    pub const REGULAR: &str = "bar-minimal Jordan-Lie inner ideals are regular";
    pub const SPLIT: &str = "Jordan-Lie inner ideals split";
    pub const CORE: &str = "the core is a stable sub-inner-ideal with the same bar";
    pub const IN_P1: &str = "L-perfect Jordan-Lie inner ideals lie in the 1-perfect radical";
    pub const JORDAN_LIE: &str = "for B² = 0, inner ideal iff closed under b x b' + b' x b";
    pub const P1: &str = "the 1-perfect radical is choice independent with P1² = P1, P1(A/P1) = 0";
    pub const P1_SOLVABLE: &str = "A/P1 is Lie solvable and A^(∞) = [P1, P1]";
    pub const SEMISIMPLE: &str = "semisimple: eAf determines (e,f) up to ~LR, components add up, L-perfect";
    pub const JL_NOT_REGULAR: &str = "exploration: Jordan-Lie inner ideals that are not regular";
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub pair_budget: usize,
    pub candidates: usize,
    pub p1_seeds: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            pair_budget: 64,
            candidates: 6,
            p1_seeds: 3,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: u64,
    pub failed: u64,
}

/// A failed check with enough context to reproduce it.
#[derive(Clone, Debug)]
pub struct Finding {
    pub check: &'static str,
    pub detail: String,
    pub subspace: Option<Subspace>,
    pub k: usize,
}

#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub tallies: BTreeMap<&'static str, Tally>,
    pub findings: Vec<Finding>,
    /// Number of `(p, p')` comparisons made by the domination check.
    pub comparisons: u64,
    pub candidates: u64,
}

impl Outcome {
    fn record(&mut self, check: &'static str, ok: bool, detail: impl FnOnce() -> String, b: Option<&Subspace>, k: usize) {
        let t = self.tallies.entry(check).or_default();
        if ok {
            t.passed += 1;
        } else {
            t.failed += 1;
            self.findings.push(Finding {
                check,
                detail: detail(),
                subspace: b.cloned(),
                k,
            });
        }
    }

    fn note(&mut self, check: &'static str, hit: bool) {
        let t = self.tallies.entry(check).or_default();
        if hit {
            t.failed += 1;
        } else {
            t.passed += 1;
        }
    }

    pub fn record_pass(&mut self, check: &'static str) {
        self.tallies.entry(check).or_default().passed += 1;
    }

    pub fn record_failure(&mut self, check: &'static str, detail: String) {
        self.record(check, false, || detail, None, 0);
    }

    pub fn violations(&self) -> usize {
        self.findings.len()
    }

    pub fn merge(&mut self, other: Outcome) {
        for (k, t) in other.tallies {
            let e = self.tallies.entry(k).or_default();
            e.passed += t.passed;
            e.failed += t.failed;
        }
        self.findings.extend(other.findings);
        self.comparisons += other.comparisons;
        self.candidates += other.candidates;
    }
}

/// Runs every check on `a`. Findings never abort the run.
pub fn run_suite(a: &Algebra, seed: u64, cfg: &SuiteConfig) -> Outcome {
    let mut out = Outcome::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    check_one_perfect_radical(a, cfg, &mut out);
    if let Err(e) = a.levi() {
        out.record(labels::DOMINATION, false, || format!("no Levi decomposition: {e}"), None, 0);
        return out;
    }
    let pairs = match pair_pool(a, cfg, rng.gen()) {
        Ok(p) => p,
        Err(e) => {
            out.record(labels::DOMINATION, false, || format!("pair enumeration failed: {e}"), None, 0);
            return out;
        }
    };
    check_domination(a, &pairs, &mut out);
    let orthogonal: Vec<IdempotentPair> = pairs
        .iter()
        .filter(|p| p.is_strict())
        .filter_map(|p| {
            let g = make_orthogonal(a, p.e(), p.f()).ok()?;
            IdempotentPair::new(a, p.e().clone(), g).ok()
        })
        .filter(|p| p.is_orthogonal() && p.is_strict())
        .collect();
    if a.is_semisimple() {
        check_semisimple(a, &orthogonal, cfg, &mut rng, &mut out);
    }
    for c in candidates(a, &orthogonal, cfg, &mut rng) {
        out.candidates += 1;
        check_candidate(a, &c, &mut out);
    }
    out
}

fn pair_pool(a: &Algebra, cfg: &SuiteConfig, seed: u64) -> crate::Result<Vec<IdempotentPair>> {
    let mut pairs = corpus::enumerate_idempotent_pairs(a, &PairOptions::new(cfg.pair_budget))?.pairs;
    let mut opts = PairOptions::new(cfg.pair_budget / 2);
    opts.conjugate_seed = Some(seed);
    opts.require_fe_zero = false;
    pairs.extend(corpus::enumerate_idempotent_pairs(a, &opts)?.pairs);
    Ok(pairs)
}

fn check_one_perfect_radical(a: &Algebra, cfg: &SuiteConfig, out: &mut Outcome) {
    let p1 = match a.one_perfect_radical(0) {
        Ok(p) => p,
        Err(e) => {
            out.record(labels::P1, false, || format!("P1 failed: {e}"), None, 0);
            return;
        }
    };
    for s in 1..cfg.p1_seeds {
        let other = a.one_perfect_radical(s);
        let same = other.as_ref().is_ok_and(|o| *o == p1);
        out.record(labels::P1, same, || format!("seed {s} gives {other:?}, seed 0 gives {p1}"), None, 0);
    }
    out.record(
        labels::P1,
        a.subspace_product(&p1, &p1) == p1 && a.is_ideal(&p1, crate::Side::TwoSided),
        || format!("P1 = {p1} is not an idempotent ideal"),
        None,
        0,
    );
    match a.quotient(&p1) {
        Ok(q) => {
            let t = q.target();
            let inner = t.one_perfect_radical(0);
            out.record(
                labels::P1,
                inner.as_ref().is_ok_and(|s| s.is_zero()),
                || format!("P1(A/P1) = {inner:?}"),
                None,
                0,
            );
            out.record(labels::P1_SOLVABLE, t.is_lie_solvable(), || "A/P1 is not Lie solvable".into(), None, 0);
        }
        Err(e) => out.record(labels::P1, false, || format!("A/P1 failed: {e}"), None, 0),
    }
    let inf = derived_infinity(a);
    let p1_1 = a.subspace_bracket(&p1, &p1);
    out.record(
        labels::P1_SOLVABLE,
        inf == p1_1,
        || format!("A^(∞) = {inf}, [P1, P1] = {p1_1}"),
        None,
        0,
    );
}

fn check_domination(a: &Algebra, pairs: &[IdempotentPair], out: &mut Outcome) {
    let corners: Vec<Subspace> = pairs.iter().map(|p| p.e_a_f(a)).collect();
    for (p, cp) in pairs.iter().zip(&corners) {
        if !p.is_strict() {
            continue;
        }
        out.record(
            labels::NONVANISHING,
            p.is_zero() || !cp.is_zero(),
            || format!("e = {}, f = {}", a.format_element(p.e()), a.format_element(p.f())),
            None,
            0,
        );
        for (q, cq) in pairs.iter().zip(&corners) {
            out.comparisons += 1;
            let rel = pair_relations(a, p, q);
            let contained = cp.is_subspace_of(cq);
            out.record(
                labels::DOMINATION,
                contained == rel.leq_lr,
                || {
                    format!(
                        "e = {}, f = {}, e' = {}, f' = {}: containment {contained}, ≤LR {}",
                        a.format_element(p.e()),
                        a.format_element(p.f()),
                        a.format_element(q.e()),
                        a.format_element(q.f()),
                        rel.leq_lr
                    )
                },
                None,
                0,
            );
            if rel.leq_lr {
                let r = crate::inner_ideal::reduce_pair_under(a, p, q);
                out.record(labels::REDUCE_PAIR, r.is_ok(), || format!("{r:?}"), None, 0);
            }
        }
    }
}

fn check_semisimple(a: &Algebra, pairs: &[IdempotentPair], cfg: &SuiteConfig, rng: &mut ChaCha8Rng, out: &mut Outcome) {
    let phi = match corpus::random_inner_automorphism(a, rng.gen()) {
        Ok(phi) => phi,
        Err(e) => {
            out.record(labels::SEMISIMPLE, false, || e.to_string(), None, 1);
            return;
        }
    };
    for p in pairs.iter().take(cfg.candidates.max(1) * 2) {
        let Ok(p) = IdempotentPair::new(a, phi(p.e()), phi(p.f())) else {
            out.record(labels::SEMISIMPLE, false, || "conjugated pair is not idempotent".into(), None, 1);
            continue;
        };
        let b = p.e_a_f(a);
        let Ok(cand) = InnerIdealCandidate::in_algebra(a, 1, b.clone()) else {
            out.record(labels::SEMISIMPLE, false, || "eAf is not inside [A, A]".into(), Some(&b), 1);
            continue;
        };
        let rec = recover_pair_semisimple(&cand);
        let ok = rec
            .as_ref()
            .is_ok_and(|r| r.e_a_f(a) == b && pair_relations(a, r, &p).equiv_lr);
        out.record(labels::SEMISIMPLE, ok, || format!("recovery gave {rec:?}"), Some(&b), 1);
        let split = component_split(&cand);
        let ok = split
            .as_ref()
            .is_ok_and(|ps| ps.iter().map(Subspace::dim).sum::<usize>() == b.dim());
        out.record(labels::SEMISIMPLE, ok, || format!("component split gave {split:?}"), Some(&b), 1);
        out.record(labels::SEMISIMPLE, cand.is_l_perfect(), || "not L-perfect".into(), Some(&b), 1);
    }
}

/// Jordan-Lie candidates tagged with whether they are a plain `eAf` for a
/// strict orthogonal pair.
pub struct Candidate {
    pub b: Subspace,
    pub k: usize,
    pub plain_corner: bool,
}

fn candidates(a: &Algebra, pairs: &[IdempotentPair], cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Vec<Candidate> {
    let mut out = Vec::new();
    if pairs.is_empty() {
        return out;
    }
    let l1 = crate::lie::derived_member(a, 1);
    let r_l = a.radical().intersect(&l1).expect("same ambient");
    let phi = corpus::random_inner_automorphism(a, rng.gen()).ok();
    for _ in 0..cfg.candidates {
        let p = &pairs[rng.gen_range(0..pairs.len())];
        let b = p.e_a_f(a);
        out.push(Candidate {
            b: b.clone(),
            k: 1,
            plain_corner: true,
        });
        if let Some(phi) = &phi {
            if let Ok(q) = IdempotentPair::new(a, phi(p.e()), phi(p.f())) {
                out.push(Candidate {
                    b: q.e_a_f(a),
                    k: 1,
                    plain_corner: false,
                });
            }
        }
        if r_l.dim() > 0 {
            let mut v = a.zero();
            for r in r_l.basis() {
                v.axpy(&a.field().from_i64(rng.gen_range(-1..=1)), r);
            }
            let bigger = b.sum(&a.span(vec![v])).expect("same ambient");
            if let Ok(c) = InnerIdealCandidate::in_algebra(a, 1, bigger.clone()) {
                if c.is_jordan_lie() {
                    if let Ok(core) = c.core() {
                        out.push(Candidate {
                            b: core,
                            k: 1,
                            plain_corner: false,
                        });
                    }
                    out.push(Candidate {
                        b: bigger,
                        k: 1,
                        plain_corner: false,
                    });
                }
            }
        }
    }
    out
}

/// All checks on one Jordan-Lie candidate.
pub fn check_candidate(a: &Algebra, c: &Candidate, out: &mut Outcome) {
    let cand = match InnerIdealCandidate::in_algebra(a, c.k, c.b.clone()) {
        Ok(cand) => cand,
        Err(e) => {
            out.record(labels::REDUCTION, false, || e.to_string(), Some(&c.b), c.k);
            return;
        }
    };
    let square_zero = cand.is_square_zero();
    if square_zero {
        out.record(
            labels::JORDAN_LIE,
            cand.is_inner_ideal() == cand.is_jordan_lie(),
            || "inner-ideal and triple-product predicates disagree".into(),
            Some(&c.b),
            c.k,
        );
    }
    if !cand.is_jordan_lie() {
        out.record(labels::REDUCTION, false, || "candidate is not Jordan-Lie".into(), Some(&c.b), c.k);
        return;
    }
    out.note(labels::JL_NOT_REGULAR, !cand.is_regular());
    match cand.core() {
        Ok(core) => {
            let stable = cand
                .with_subspace(core.clone())
                .map(|cc| cc.inner_step() == core)
                .unwrap_or(false);
            let ok = core.is_subspace_of(&c.b) && stable && bar_image(a, &core) == cand.bar();
            out.record(labels::CORE, ok, || format!("core = {core}"), Some(&c.b), c.k);
        }
        Err(e) => out.record(labels::CORE, false, || e.to_string(), Some(&c.b), c.k),
    }
    if cand.is_l_perfect() {
        let p1 = a.one_perfect_radical(0);
        let ok = p1.as_ref().is_ok_and(|p| c.b.is_subspace_of(p));
        out.record(labels::IN_P1, ok, || format!("P1 = {p1:?}"), Some(&c.b), c.k);
    }
    let red = match bar_minimal_reduce(&cand) {
        Ok(r) => r,
        Err(e) => {
            out.record(labels::REDUCTION, false, || e.to_string(), Some(&c.b), c.k);
            return;
        }
    };
    let ok = red.pair.is_strict()
        && red.pair.is_orthogonal()
        && red.b_prime.is_subspace_of(&c.b)
        && bar_image(a, &red.b_prime) == cand.bar()
        && red.b_prime == red.pair.e_a_f(a);
    out.record(labels::REDUCTION, ok, || format!("reduced to {:?}", red.pair), Some(&c.b), c.k);
    let minimal = cand
        .with_subspace(red.b_prime.clone())
        .and_then(|bc| is_bar_minimal(&bc));
    out.record(
        labels::REDUCTION,
        matches!(minimal, Ok(true)),
        || format!("eAf = {} is not bar-minimal: {minimal:?}", red.b_prime),
        Some(&c.b),
        c.k,
    );
    if c.plain_corner {
        out.record(
            labels::ROUND_TRIP,
            red.b_prime == c.b,
            || format!("eAf = {} reduced to {}", c.b, red.b_prime),
            Some(&c.b),
            c.k,
        );
    }
    let regular = cand
        .with_subspace(red.b_prime.clone())
        .and_then(|bc| bc.regular_witness())
        .and_then(|w| w.verify(a, &red.b_prime));
    out.record(labels::REGULAR, regular.is_ok(), || format!("{regular:?}"), Some(&c.b), c.k);
    let split = split_witness_from(&cand, &red);
    let ok = split.as_ref().is_ok_and(|w| {
        w.semisimple_part.dim() + w.radical_part.dim() == c.b.dim()
            && w.semisimple_part.sum(&w.radical_part).is_ok_and(|s| s == c.b)
    });
    out.record(labels::SPLIT, ok, || format!("{split:?}"), Some(&c.b), c.k);
}

/// Checks `[b, [b', x]] = -(b x b' + b' x b)` for `b, b'` in a square-zero
/// `B` and random `x`.
pub fn bracket_identity_holds(a: &Algebra, b: &Vector, b2: &Vector, x: &Vector) -> bool {
    let lhs = a.bracket(b, &a.bracket(b2, x));
    let rhs = -&(&a.mul3(b, x, b2) + &a.mul3(b2, x, b));
    lhs == rhs
}
