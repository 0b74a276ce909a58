//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Oracles here are computed independently of the library predicates
//! where possible: corners `eAf` as column spaces of multiplication
//! matrices, dominance by direct products, block support through block
//! identities, hyperplane ideals by exhaustive enumeration over `F_5`.

use std::time::{Duration, Instant};

use jordan_lie::cli::{cmd_fuzz, FuzzOptions};
use jordan_lie::conformance::bracket_identity_holds;
use jordan_lie::corpus::{self, BimoduleSpec, PairOptions, RandomParams};
use jordan_lie::format::AlgebraFile;
use jordan_lie::inner_ideal::{component_split, make_orthogonal, recover_pair_semisimple, IdempotentPair};
use jordan_lie::lie::{derived_infinity, derived_member};
use jordan_lie::reduction::{bar_minimal_reduce, is_bar_minimal, split_witness_from};
use jordan_lie::{Algebra, FieldSpec, InnerIdealCandidate, Matrix, Subspace, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const Q: FieldSpec = FieldSpec::Rational;

struct Verdict {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Verdict {
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            if self.failures.len() < 5 {
                self.failures.push(what());
            } else if self.failures.len() == 5 {
                self.failures.push("...".into());
            }
        }
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }

    fn absorb(&mut self, other: Verdict) {
        for f in other.failures {
            self.check(false, || f);
        }
    }
}

fn report(n: usize, name: &str, v: Verdict, elapsed: Duration, limit: Option<Duration>) -> bool {
    let mut v = v;
    if let Some(limit) = limit {
        v.check(elapsed <= limit, || format!("took {elapsed:?}, limit {limit:?}"));
    }
    let ok = v.failures.is_empty();
    println!(
        "criterion {n} {name}: {} ({:.1}s{}{})",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        if v.notes.is_empty() { "" } else { "; " },
        v.notes.join(", ")
    );
    for f in &v.failures {
        println!("    {f}");
    }
    ok
}

/// `{ e x f : x in A }` spanned by the images of the basis.
fn corner(a: &Algebra, e: &Vector, f: &Vector) -> Subspace {
    let cols: Vec<Vector> = (0..a.dim())
        .map(|i| a.mul(&a.mul(e, &a.basis_vector(i)), f))
        .collect();
    Subspace::span(a.field(), a.dim(), cols).unwrap()
}

fn left_right_dominated(a: &Algebra, p: &IdempotentPair, q: &IdempotentPair) -> bool {
    a.mul(q.e(), p.e()) == *p.e() && a.mul(p.f(), q.f()) == *p.f()
}

/// Block `r` is in the support of `x` when `1_r x` leaves the radical.
fn support(a: &Algebra, x: &Vector) -> Vec<bool> {
    let levi = a.levi().unwrap();
    levi.blocks()
        .iter()
        .map(|b| !a.radical().contains(&a.mul(&b.identity(a), x)))
        .collect()
}

fn strict_oracle(a: &Algebra, p: &IdempotentPair) -> bool {
    support(a, p.e()) == support(a, p.f())
}

fn bar(a: &Algebra, s: &Subspace) -> Subspace {
    s.sum(a.radical()).unwrap()
}

fn corpus_params(seed: u64) -> RandomParams {
    RandomParams {
        max_dim: 8 + (seed % 5) as usize,
        ..RandomParams::default()
    }
}

fn fixtures() -> Vec<Algebra> {
    let mut v = vec![
        corpus::matrix_algebra(1, Q),
        corpus::matrix_algebra(2, Q),
        corpus::matrix_algebra(3, Q),
        corpus::triangular(2, false, Q),
        corpus::triangular(3, false, Q),
        corpus::triangular(4, true, Q),
        corpus::null_algebra(2, Q),
        corpus::direct_sum(&[corpus::matrix_algebra(2, Q), corpus::matrix_algebra(1, Q)]).unwrap(),
        corpus::direct_sum(&[corpus::matrix_algebra(2, Q), corpus::triangular(2, false, Q)]).unwrap(),
        corpus::build_semidirect(&[2], &BimoduleSpec::square(&[(1, 1, 1)]), Q).unwrap(),
        corpus::build_semidirect(&[2, 2], &BimoduleSpec::square(&[(1, 2, 1)]), Q).unwrap(),
        corpus::build_semidirect(&[2], &BimoduleSpec::square(&[(1, 0, 1)]), Q).unwrap(),
        corpus::build_semidirect(&[2], &BimoduleSpec::square(&[(0, 1, 1)]), Q).unwrap(),
        corpus::build_semidirect(&[2, 1], &BimoduleSpec::chained(&[(1, 2, 1), (2, 1, 1)]), Q).unwrap(),
        corpus::example_nr(Q).unwrap().algebra,
    ];
    v.push(v[1].unitalize());
    v
}

fn criterion_1() -> Verdict {
    let mut v = Verdict::new();
    for field in [Q, FieldSpec::prime(101).unwrap()] {
        let ex = corpus::example_nr(field).unwrap();
        let a = &ex.algebra;
        let cand = InnerIdealCandidate::in_algebra(a, 0, ex.b.clone()).unwrap();
        v.check(a.dim() == 9, || format!("dim A1 = {}", a.dim()));
        v.check(cand.is_square_zero(), || "B² ≠ 0".into());
        v.check(cand.is_jordan_lie(), || format!("B not Jordan-Lie over {field}"));
        v.check(!cand.is_regular(), || format!("B regular over {field}"));
        let prod = a.mul3(&ex.b1, &ex.a, &ex.b2);
        v.check(prod == ex.e14, || format!("b1 a b2 = {}", a.format_element(&prod)));
        v.check(!ex.b.contains(&ex.e14), || "e14 in B".into());
        let cube = a.subspace_product(&a.subspace_product(&a.full(), &a.full()), &a.full());
        v.check(
            a.subspace_product(&cube, &a.full()).is_zero() || a.dim() == 0,
            || "A1^4 ≠ 0".into(),
        );
        let u = a.unitalize();
        let lift = |x: &Vector| {
            let mut c = x.coords().to_vec();
            c.push(field.zero());
            Vector::new(c)
        };
        let bu = u.span(ex.b.basis().iter().map(lift).collect());
        let cu = InnerIdealCandidate::in_algebra(&u, 0, bu).unwrap();
        v.check(cu.is_jordan_lie() && !cu.is_regular(), || "unitalized B".into());
    }
    v
}

fn criterion_2() -> Verdict {
    let results: Vec<(Verdict, u64)> = (0..500u64)
        .into_par_iter()
        .map(|seed| {
            let mut v = Verdict::new();
            let a = corpus::random_algebra(seed, &corpus_params(seed)).unwrap();
            let mut pairs = corpus::enumerate_idempotent_pairs(&a, &PairOptions::new(24)).unwrap().pairs;
            let mut opts = PairOptions::new(12);
            opts.conjugate_seed = Some(seed);
            opts.require_fe_zero = false;
            pairs.extend(corpus::enumerate_idempotent_pairs(&a, &opts).unwrap().pairs);
            let corners: Vec<Subspace> = pairs.iter().map(|p| corner(&a, p.e(), p.f())).collect();
            let mut n = 0u64;
            for (p, cp) in pairs.iter().zip(&corners) {
                let strict = strict_oracle(&a, p);
                v.check(strict == p.is_strict(), || format!("seed {seed}: strictness flag disagrees"));
                if !strict {
                    continue;
                }
                v.check(p.is_zero() || !cp.is_zero(), || format!("seed {seed}: strict nonzero pair with eAf = 0"));
                for (q, cq) in pairs.iter().zip(&corners) {
                    n += 1;
                    let contained = cp.is_subspace_of(cq);
                    v.check(contained == left_right_dominated(&a, p, q), || {
                        format!(
                            "seed {seed}: e={} f={} e'={} f'={}",
                            a.format_element(p.e()),
                            a.format_element(p.f()),
                            a.format_element(q.e()),
                            a.format_element(q.f())
                        )
                    });
                }
            }
            (v, n)
        })
        .collect();
    let mut v = Verdict::new();
    let mut total = 0;
    for (r, n) in results {
        total += n;
        v.absorb(r);
    }
    v.check(total >= 10_000, || format!("only {total} comparisons"));
    v.note(format!("500 algebras, {total} comparisons"));
    v
}

struct Cand {
    b: Subspace,
    plain: bool,
}

fn jordan_lie_candidates(a: &Algebra, seed: u64) -> Vec<Cand> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<IdempotentPair> = corpus::enumerate_idempotent_pairs(a, &PairOptions::new(64))
        .unwrap()
        .pairs
        .into_iter()
        .filter(|p| p.is_strict())
        .filter_map(|p| {
            let g = make_orthogonal(a, p.e(), p.f()).ok()?;
            IdempotentPair::new(a, p.e().clone(), g).ok()
        })
        .filter(|p| p.is_orthogonal() && p.is_strict() && !p.is_zero())
        .collect();
    let mut out = Vec::new();
    if pairs.is_empty() {
        return out;
    }
    let phi = corpus::random_inner_automorphism(a, seed).unwrap();
    let l1 = derived_member(a, 1);
    let nil = a.radical().intersect(&l1).unwrap();
    for _ in 0..2 {
        let p = &pairs[rng.gen_range(0..pairs.len())];
        let b = corner(a, p.e(), p.f());
        out.push(Cand { b: b.clone(), plain: true });
        out.push(Cand {
            b: corner(a, &phi(p.e()), &phi(p.f())),
            plain: false,
        });
        if nil.dim() > 0 {
            let mut x = a.zero();
            for r in nil.basis() {
                x.axpy(&a.field().from_i64(rng.gen_range(-1..=1)), r);
            }
            let bigger = b.sum(&a.span(vec![x])).unwrap();
            let c = InnerIdealCandidate::in_algebra(a, 1, bigger.clone()).unwrap();
            if c.is_inner_ideal() && c.is_square_zero() {
                out.push(Cand {
                    b: c.core().unwrap(),
                    plain: false,
                });
                out.push(Cand { b: bigger, plain: false });
            }
        }
    }
    out
}

/// Criteria 3 and 4 share the reduction runs.
fn criteria_3_4() -> (Verdict, Verdict, usize) {
    let results: Vec<(Verdict, Verdict, usize)> = (0..120u64)
        .into_par_iter()
        .map(|seed| {
            let mut v3 = Verdict::new();
            let mut v4 = Verdict::new();
            let a = corpus::random_algebra(10_000 + seed, &corpus_params(seed)).unwrap();
            let cands = jordan_lie_candidates(&a, seed);
            for c in &cands {
                let cand = InnerIdealCandidate::in_algebra(&a, 1, c.b.clone()).unwrap();
                v3.check(cand.is_jordan_lie(), || format!("seed {seed}: candidate not Jordan-Lie"));
                let red = match bar_minimal_reduce(&cand) {
                    Ok(r) => r,
                    Err(e) => {
                        v3.check(false, || format!("seed {seed}: {e}"));
                        continue;
                    }
                };
                let (e, f) = (red.pair.e(), red.pair.f());
                let ok = a.is_idempotent(e)
                    && a.is_idempotent(f)
                    && a.mul(e, f).is_zero()
                    && a.mul(f, e).is_zero()
                    && strict_oracle(&a, &red.pair);
                v3.check(ok, || format!("seed {seed}: pair not strict orthogonal"));
                let eaf = corner(&a, e, f);
                v3.check(eaf == red.b_prime, || format!("seed {seed}: B' ≠ eAf"));
                v3.check(eaf.is_subspace_of(&c.b), || format!("seed {seed}: eAf ⊄ B"));
                v3.check(bar(&a, &eaf) == bar(&a, &c.b), || format!("seed {seed}: bars differ"));
                let back = cand.with_subspace(eaf.clone()).unwrap();
                v3.check(matches!(is_bar_minimal(&back), Ok(true)), || format!("seed {seed}: eAf not bar-minimal"));
                if c.plain {
                    v3.check(matches!(is_bar_minimal(&cand), Ok(true)), || format!("seed {seed}: round trip"));
                }

                // regular witness, verified from scratch
                let full = a.full();
                let left = eaf.sum(&a.subspace_product(&full, &eaf)).unwrap();
                let right = eaf.sum(&a.subspace_product(&eaf, &full)).unwrap();
                let witness_ok = back.is_regular()
                    && a.subspace_product(&full, &left).is_subspace_of(&left)
                    && a.subspace_product(&right, &full).is_subspace_of(&right)
                    && a.subspace_product(&left, &right).is_zero()
                    && a.subspace_product(&right, &left).is_subspace_of(&eaf)
                    && eaf.is_subspace_of(&left.intersect(&right).unwrap());
                v4.check(witness_ok, || format!("seed {seed}: regular witness fails"));
                let lib_witness = back.regular_witness();
                v4.check(
                    lib_witness.is_ok_and(|w| w.left == left && w.right == right),
                    || format!("seed {seed}: library witness differs"),
                );

                // splitting along the transported Levi subalgebra
                match split_witness_from(&cand, &red) {
                    Ok(w) => {
                        let mut s_prime: Vec<Vector> = a.levi().unwrap().semisimple().basis().to_vec();
                        for q in &w.conjugators {
                            s_prime = s_prime.iter().map(|x| a.conjugate_by_unipotent(q, x).unwrap()).collect();
                        }
                        let s_prime = a.span(s_prime);
                        let bs = c.b.intersect(&s_prime).unwrap();
                        let br = c.b.intersect(a.radical()).unwrap();
                        let ok = s_prime == w.levi_prime
                            && a.is_subalgebra(&s_prime)
                            && s_prime.dim() + a.radical().dim() == a.dim()
                            && s_prime.intersect(a.radical()).unwrap().is_zero()
                            && bs.intersect(&br).unwrap().is_zero()
                            && bs.sum(&br).unwrap() == c.b
                            && s_prime.contains(e)
                            && s_prime.contains(f);
                        v4.check(ok, || format!("seed {seed}: split witness fails"));
                    }
                    Err(err) => v4.check(false, || format!("seed {seed}: {err}")),
                }
            }
            (v3, v4, cands.len())
        })
        .collect();
    let mut v3 = Verdict::new();
    let mut v4 = Verdict::new();
    let mut n = 0;
    for (a, b, k) in results {
        v3.absorb(a);
        v4.absorb(b);
        n += k;
    }
    v3.check(n >= 200, || format!("only {n} candidates"));
    v3.note(format!("{n} Jordan-Lie candidates"));
    v4.note(format!("{n} witnesses"));
    (v3, v4, n)
}

fn criterion_5() -> Verdict {
    let mut algebras = fixtures();
    algebras.extend((0..150u64).map(|s| corpus::random_algebra(20_000 + s, &corpus_params(s)).unwrap()));
    let n = algebras.len();
    let results: Vec<Verdict> = algebras
        .par_iter()
        .enumerate()
        .map(|(i, a)| {
            let mut v = Verdict::new();
            let p1 = a.one_perfect_radical(0).unwrap();
            for s in 1..4 {
                v.check(a.one_perfect_radical(s).unwrap() == p1, || format!("algebra {i}: seed {s} differs"));
            }
            v.check(a.subspace_product(&p1, &p1) == p1, || format!("algebra {i}: P1² ≠ P1"));
            let q = a.quotient(&p1).unwrap();
            v.check(q.target().one_perfect_radical(0).unwrap().is_zero(), || format!("algebra {i}: P1(A/P1) ≠ 0"));
            v.check(q.target().is_lie_solvable(), || format!("algebra {i}: A/P1 not Lie solvable"));
            v.check(derived_infinity(a) == a.subspace_bracket(&p1, &p1), || format!("algebra {i}: A^(∞) ≠ P1^(1)"));
            v
        })
        .collect();
    let mut v = Verdict::new();
    for r in results {
        v.absorb(r);
    }
    v.note(format!("{n} algebras, 4 descent orders"));
    v
}

fn criterion_6() -> Verdict {
    let mut algebras = vec![
        corpus::matrix_algebra(2, Q),
        corpus::matrix_algebra(3, Q),
        corpus::matrix_algebra(4, Q),
        corpus::direct_sum(&[corpus::matrix_algebra(2, Q), corpus::matrix_algebra(1, Q)]).unwrap(),
        corpus::direct_sum(&[corpus::matrix_algebra(2, Q), corpus::matrix_algebra(3, Q)]).unwrap(),
        corpus::direct_sum(&[corpus::matrix_algebra(2, Q), corpus::matrix_algebra(2, Q)]).unwrap(),
        corpus::matrix_algebra(3, FieldSpec::prime(17).unwrap()),
    ];
    let params = RandomParams {
        bimodule_density: 0.0,
        max_dim: 14,
        ..RandomParams::default()
    };
    algebras.extend((0..10u64).map(|s| corpus::random_algebra(30_000 + s, &params).unwrap()));
    let mut v = Verdict::new();
    let mut pairs_tested = 0;
    let mut jl_seen = 0;
    for (i, a) in algebras.iter().enumerate() {
        v.check(a.is_semisimple(), || format!("algebra {i} not semisimple"));
        let mut rng = ChaCha8Rng::seed_from_u64(i as u64);
        let pairs: Vec<IdempotentPair> = corpus::enumerate_idempotent_pairs(a, &PairOptions::new(200))
            .unwrap()
            .pairs
            .into_iter()
            .filter(|p| p.is_orthogonal() && p.is_strict())
            .collect();
        for round in 0..12 {
            let p = &pairs[rng.gen_range(0..pairs.len())];
            let phi = corpus::random_inner_automorphism(a, rng.gen()).unwrap();
            let p = IdempotentPair::new(a, phi(p.e()), phi(p.f())).unwrap();
            pairs_tested += 1;
            let b = corner(a, p.e(), p.f());
            let cand = InnerIdealCandidate::in_algebra(a, 1, b.clone()).unwrap();
            match recover_pair_semisimple(&cand) {
                Ok(r) => {
                    let equiv = left_right_dominated(a, &r, &p) && left_right_dominated(a, &p, &r);
                    v.check(equiv && corner(a, r.e(), r.f()) == b, || format!("algebra {i} round {round}: recovery"));
                }
                Err(e) => v.check(false, || format!("algebra {i} round {round}: {e}")),
            }
            let parts = component_split(&cand).unwrap();
            v.check(parts.iter().map(Subspace::dim).sum::<usize>() == b.dim(), || format!("algebra {i}: components"));
            // every Jordan-Lie inner ideal found near eAf is L-perfect
            let l = derived_member(a, 1);
            for x in l.basis().iter().take(4) {
                let bigger = b.sum(&a.span(vec![x.clone()])).unwrap();
                for s in [&b, &bigger] {
                    let c = InnerIdealCandidate::in_algebra(a, 1, s.clone()).unwrap();
                    if c.is_jordan_lie() {
                        jl_seen += 1;
                        v.check(c.is_l_perfect(), || format!("algebra {i}: Jordan-Lie but not L-perfect"));
                    }
                }
            }
        }
    }
    v.check(pairs_tested >= 100, || format!("only {pairs_tested} pairs"));
    v.note(format!("{} algebras, {pairs_tested} pairs, {jl_seen} Jordan-Lie checks", algebras.len()));
    v
}

/// Brute force: does some hyperplane of `F_p^n` form a two-sided ideal?
fn has_codim_one_ideal(a: &Algebra, p: u64) -> bool {
    let n = a.dim();
    let field = a.field();
    let total = p.pow(n as u32);
    for code in 1..total {
        let mut phi = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            phi.push(field.from_i64((c % p) as i64));
            c /= p;
        }
        // normalize: first nonzero coordinate is 1
        let lead = phi.iter().find(|x| !x.is_zero()).unwrap().clone();
        if !lead.is_one() {
            continue;
        }
        let phi = Vector::new(phi);
        let eval = |v: &Vector| v.iter().zip(phi.iter()).fold(field.zero(), |acc, (x, y)| &acc + &(x * y));
        let kernel: Vec<Vector> = {
            let m = Matrix::from_rows(field, n, vec![phi.clone()]).unwrap();
            jordan_lie::linalg::kernel(&m).basis().to_vec()
        };
        let ideal = kernel.iter().all(|k| {
            (0..n).all(|i| {
                let x = a.basis_vector(i);
                eval(&a.mul(&x, k)).is_zero() && eval(&a.mul(k, &x)).is_zero()
            })
        });
        if ideal {
            return true;
        }
    }
    false
}

fn small_algebras(field: FieldSpec) -> Vec<Algebra> {
    let mut v = vec![
        corpus::matrix_algebra(1, field),
        corpus::matrix_algebra(2, field),
        corpus::triangular(2, false, field),
        corpus::triangular(2, true, field),
        corpus::null_algebra(1, field),
        corpus::null_algebra(3, field),
        corpus::direct_sum(&[corpus::matrix_algebra(1, field), corpus::matrix_algebra(1, field)]).unwrap(),
        corpus::direct_sum(&[corpus::matrix_algebra(1, field), corpus::null_algebra(1, field)]).unwrap(),
        corpus::direct_sum(&[corpus::triangular(2, false, field), corpus::matrix_algebra(1, field)]).unwrap(),
        corpus::null_algebra(1, field).unitalize(),
    ];
    let params = RandomParams {
        max_dim: 4,
        field,
        ..RandomParams::default()
    };
    for s in 0..300 {
        let a = corpus::random_algebra(40_000 + s, &params).unwrap();
        if a.dim() >= 1 && !v.iter().any(|b| b.structure_constants() == a.structure_constants()) {
            v.push(a);
        }
    }
    v
}

fn criterion_7() -> Verdict {
    let mut v = Verdict::new();
    let f5 = FieldSpec::prime(5).unwrap();
    let rational = small_algebras(Q);
    let modular = small_algebras(f5);
    v.check(rational.len() == modular.len(), || "corpus sizes differ across fields".into());
    for (aq, ap) in rational.iter().zip(&modular) {
        let brute = has_codim_one_ideal(ap, 5);
        let q = aq.is_1perfect().unwrap();
        let p = ap.is_1perfect().unwrap();
        v.check(q == !brute && p == !brute, || {
            format!("{:?}: is_1perfect over Q {q}, over F5 {p}, hyperplane ideal {brute}", aq.labels())
        });
    }
    v.note(format!("{} algebras of dim ≤ 4", rational.len()));

    // triple products against nested brackets
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let pool: Vec<Algebra> = vec![
        corpus::matrix_algebra(3, Q),
        corpus::triangular(4, false, Q),
        corpus::build_semidirect(&[2, 2], &BimoduleSpec::chained(&[(1, 2, 1), (2, 1, 1)]), Q).unwrap(),
        corpus::example_nr(Q).unwrap().algebra,
    ];
    let mut triples = 0;
    let mut agreements = 0;
    while triples < 10_000 {
        let a = &pool[rng.gen_range(0..pool.len())];
        let pairs = corpus::enumerate_idempotent_pairs(a, &PairOptions::new(32)).unwrap().pairs;
        let p = &pairs[rng.gen_range(0..pairs.len())];
        let b = corner(a, p.e(), p.f());
        let b = if b.is_zero() || a.subspace_product(&b, &b).dim() > 0 {
            if a.radical().is_zero() {
                continue;
            }
            a.span(vec![a.radical().basis()[rng.gen_range(0..a.radical().dim())].clone()])
        } else {
            b
        };
        if a.subspace_product(&b, &b).dim() > 0 {
            continue;
        }
        let rand_in = |rng: &mut ChaCha8Rng, s: &Subspace| {
            let mut x = a.zero();
            for v in s.basis() {
                x.axpy(&a.field().from_i64(rng.gen_range(-3..=3)), v);
            }
            x
        };
        for _ in 0..50 {
            let (b1, b2, x) = (rand_in(&mut rng, &b), rand_in(&mut rng, &b), rand_in(&mut rng, &a.full()));
            v.check(bracket_identity_holds(a, &b1, &b2, &x), || "bracket identity fails".into());
            triples += 1;
        }
        // predicates agree on B and on B + one more radical direction
        for s in [b.clone(), b.sum(&a.span(vec![rand_in(&mut rng, a.radical())])).unwrap()] {
            let l = derived_member(a, 1);
            if !s.is_subspace_of(&l) || a.subspace_product(&s, &s).dim() > 0 {
                continue;
            }
            let c = InnerIdealCandidate::in_algebra(a, 1, s.clone()).unwrap();
            let direct = a.subspace_bracket(&s, &a.subspace_bracket(&s, &l)).is_subspace_of(&s);
            v.check(c.is_jordan_lie() == direct, || "Jordan-Lie predicate disagrees with [B,[B,L]] ⊆ B".into());
            agreements += 1;
        }
    }
    v.note(format!("{triples} triples, {agreements} predicate comparisons"));
    v
}

fn criterion_8() -> Verdict {
    let mut v = Verdict::new();
    let opts = FuzzOptions {
        seed: 42,
        count: 24,
        max_dim: 10,
        ..FuzzOptions::default()
    };
    let first = serde_json::to_string_pretty(&cmd_fuzz(&opts, None).unwrap()).unwrap();
    let second = serde_json::to_string_pretty(&cmd_fuzz(&opts, None).unwrap()).unwrap();
    v.check(first == second, || "fuzz summaries differ".into());
    let summary = cmd_fuzz(&opts, None).unwrap();
    v.check(summary.violations == 0, || format!("{} violations", summary.violations));

    let mut algebras = fixtures();
    algebras.push(corpus::triangular(3, false, FieldSpec::prime(101).unwrap()));
    algebras.extend((0..40u64).map(|s| corpus::random_algebra(50_000 + s, &corpus_params(s)).unwrap()));
    for a in &algebras {
        let b = derived_member(a, 1);
        let text = AlgebraFile::new(a.clone()).with_subspace("L", &b).emit();
        let back = AlgebraFile::parse(&text).unwrap();
        v.check(back.algebra == *a, || format!("{:?}: parse(emit(A)) ≠ A", a.labels()));
        v.check(back.subspace("L").unwrap() == b, || "subspace lost".into());
        v.check(back.emit() == text, || format!("{:?}: emit(parse(f)) ≠ f", a.labels()));
    }
    v.note(format!("{} files round-tripped", algebras.len()));
    v
}

fn main() {
    let mut all = true;
    let t = Instant::now();
    all &= report(1, "non-regular example", criterion_1(), t.elapsed(), Some(Duration::from_secs(1)));
    let t = Instant::now();
    all &= report(2, "domination iff left-right dominance", criterion_2(), t.elapsed(), Some(Duration::from_secs(300)));
    let t = Instant::now();
    let (v3, v4, _) = criteria_3_4();
    let elapsed = t.elapsed();
    all &= report(3, "bar-minimal reduction", v3, elapsed, Some(Duration::from_secs(600)));
    all &= report(4, "regular and split witnesses", v4, elapsed, None);
    let t = Instant::now();
    all &= report(5, "1-perfect radical calculus", criterion_5(), t.elapsed(), None);
    let t = Instant::now();
    all &= report(6, "semisimple classification", criterion_6(), t.elapsed(), None);
    let t = Instant::now();
    all &= report(7, "oracle cross-checks", criterion_7(), t.elapsed(), None);
    let t = Instant::now();
    all &= report(8, "determinism and file format", criterion_8(), t.elapsed(), None);
    if !all {
        std::process::exit(1);
    }
}
