//! Reduction of a Jordan-Lie inner ideal `B` to `eAf ⊆ B` with the same
//! image modulo the radical, and the splitting witnesses built from it.

use crate::algebra::{lift_idempotent_raw, Algebra};
use crate::error::{Error, Result};
use crate::inner_ideal::{IdempotentPair, InnerIdealCandidate, InnerIdealReport};
use crate::linalg::{solve, Matrix, Subspace, Vector};

/// Idempotent `e` with `e - x` in the radical; `x^2 - x` must lie in the
/// radical.
pub fn lift_idempotent(a: &Algebra, x: &Vector) -> Result<Vector> {
    x.check_len(a.dim())?;
    let defect = &a.mul(x, x) - x;
    if !a.radical().contains(&defect) {
        return Err(Error::NotIdempotent("image modulo the radical"));
    }
    lift_idempotent_raw(a, x)
}

/// Lifts orthogonal idempotents of `A/R` (in the coordinates of
/// `a.bar_quotient()`) to an orthogonal idempotent pair of `A`.
pub fn lift_strict_pair(a: &Algebra, e_bar: &Vector, f_bar: &Vector) -> Result<IdempotentPair> {
    let q = a.bar_quotient();
    let s = q.target();
    e_bar.check_len(s.dim())?;
    f_bar.check_len(s.dim())?;
    if !s.is_idempotent(e_bar) {
        return Err(Error::NotIdempotent("image of e"));
    }
    if !s.is_idempotent(f_bar) {
        return Err(Error::NotIdempotent("image of f"));
    }
    if !s.mul(e_bar, f_bar).is_zero() || !s.mul(f_bar, e_bar).is_zero() {
        return Err(Error::Precondition("images of e and f are not orthogonal".into()));
    }
    let e = lift_idempotent(a, &q.lift(e_bar))?;
    let x = q.lift(f_bar);
    let ex = a.mul(&e, &x);
    let xe = a.mul(&x, &e);
    let exe = a.mul(&ex, &e);
    let y = &(&(&x - &ex) - &xe) + &exe;
    let f = lift_idempotent(a, &y)?;
    let pair = IdempotentPair::new(a, e, f)?;
    debug_assert!(pair.is_orthogonal());
    Ok(pair)
}

/// One conjugation step of the layered solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerStep {
    /// `j` with the conjugator taken from `R^j`.
    pub layer: usize,
    pub conjugator: Vector,
}

/// How the reduction was carried out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub input_dim: usize,
    pub core_dim: usize,
    pub one_perfect_radical_dim: usize,
    pub nilpotency_index: usize,
    /// Pair in the stored Levi subalgebra before conjugation.
    pub levi_pair: (Vector, Vector),
    pub steps: Vec<LayerStep>,
}

#[derive(Clone, Debug)]
pub struct ReductionResult {
    pub pair: IdempotentPair,
    pub b_prime: Subspace,
    pub trace: ReductionTrace,
}

impl ReductionResult {
    /// Nonzero conjugators `q_1, ..., q_m` in application order.
    pub fn conjugators(&self) -> Vec<Vector> {
        self.trace.steps.iter().map(|s| s.conjugator.clone()).collect()
    }
}

fn repro(cand: &InnerIdealCandidate<'_>) -> String {
    let a = cand.algebra();
    let mut s = String::new();
    s.push_str(&format!("field {}\nlabels {:?}\n", a.field(), a.labels()));
    for (i, j, k, c) in a.structure_constants() {
        s.push_str(&format!("{i} {j} {k} {c}\n"));
    }
    s.push_str(&format!("k = {}\nB = {}\n", cand.k(), cand.b()));
    s
}

fn violation(cand: &InnerIdealCandidate<'_>, check: &str, detail: String) -> Error {
    Error::TheoremViolation {
        check: check.into(),
        detail,
        repro: repro(cand),
    }
}

/// Finds a strict orthogonal idempotent pair `(e, f)` with `eAf ⊆ B` and
/// `eAf` having the same image as `B` modulo the radical.
pub fn bar_minimal_reduce(cand: &InnerIdealCandidate<'_>) -> Result<ReductionResult> {
    if !cand.is_jordan_lie() {
        return Err(Error::NotInnerIdeal("reduction needs a Jordan-Lie inner ideal".into()));
    }
    let a = cand.algebra();
    let bar = cand.bar();
    let core = cand.core()?;
    let core_cand = cand.with_subspace(core.clone())?;
    if core_cand.bar() != bar {
        return Err(violation(cand, "the core has the same image modulo the radical", format!("core = {core}")));
    }
    let p1 = a.one_perfect_radical(0)?;
    if !core.is_subspace_of(&p1) {
        return Err(violation(
            cand,
            "L-perfect Jordan-Lie inner ideals lie in the 1-perfect radical",
            format!("core = {core}, P1 = {p1}"),
        ));
    }
    let levi = a.levi()?;

    // classify the semisimple part block by block
    let field = a.field();
    let semisimple_parts: Vec<Vector> = core.basis().iter().map(|v| levi.decompose(v).semisimple).collect();
    let mut e = a.zero();
    let mut f = a.zero();
    for (r, block) in levi.blocks().iter().enumerate() {
        let n = block.size();
        let mats: Vec<Matrix> = semisimple_parts
            .iter()
            .map(|v| {
                let c = levi.block_coords(v, r);
                Matrix::from_rows(field, n, c.chunks(n).map(|row| Vector::new(row.to_vec())).collect())
                    .expect("rows have length n")
            })
            .filter(|m| m.rows().iter().any(|row| !row.is_zero()))
            .collect();
        if mats.is_empty() {
            continue;
        }
        let (er, fr) = crate::inner_ideal::block_projections_for(field, n, &mats)?;
        e = &e + &levi.block_element(r, &er);
        f = &f + &levi.block_element(r, &fr);
    }
    let target = a.span(semisimple_parts);
    let esf = a.span(
        levi.blocks()
            .iter()
            .flat_map(|b| b.units().iter())
            .map(|u| a.mul3(&e, u, &f))
            .collect(),
    );
    if esf != target {
        return Err(violation(
            cand,
            "the image of an L-perfect Jordan-Lie inner ideal is eSf",
            format!("eSf has dimension {}, image has dimension {}", esf.dim(), target.dim()),
        ));
    }
    let levi_pair = (e.clone(), f.clone());

    // layered conjugation: keep eAf inside core + R^j
    let m = a.nilpotency_index();
    let mut steps = Vec::new();
    for j in 1..m {
        let rj = a.radical_power(j);
        let t = core.sum(&a.radical_power(j + 1))?;
        let w: Vec<Vector> = corner_basis(a, &e, &f);
        let mut rhs = Vec::new();
        for wi in &w {
            rhs.extend((-&t.reduce(wi)).into_coords());
        }
        if rhs.iter().all(|s| s.is_zero()) {
            continue;
        }
        let cols: Vec<Vector> = rj
            .basis()
            .iter()
            .map(|r| {
                let mut c = Vec::with_capacity(rhs.len());
                for wi in &w {
                    c.extend(t.reduce(&a.bracket(r, wi)).into_coords());
                }
                Vector::new(c)
            })
            .collect();
        let sol = if cols.is_empty() {
            None
        } else {
            solve(&Matrix::from_columns(field, rhs.len(), &cols)?, &Vector::new(rhs))?
        };
        let Some(sol) = sol else {
            return Err(Error::ReductionFailed {
                layer: j,
                detail: format!(
                    "no conjugator in R^{j} moves eAf into B + R^{} (e = {}, f = {})",
                    j + 1,
                    a.format_element(&e),
                    a.format_element(&f)
                ),
                repro: repro(cand),
            });
        };
        let mut q = a.zero();
        for (lambda, r) in sol.particular.iter().zip(rj.basis()) {
            q.axpy(lambda, r);
        }
        let tail = a.unipotent_inverse_tail(&q);
        e = a.conjugate_with_tail(&q, &tail, &e);
        f = a.conjugate_with_tail(&q, &tail, &f);
        steps.push(LayerStep { layer: j, conjugator: q });
    }

    let pair = IdempotentPair::new(a, e, f)?;
    let b_prime = pair.e_a_f(a);
    if !pair.is_orthogonal() || !pair.is_strict() {
        return Err(violation(cand, "the reduced pair is strict and orthogonal", format!("pair = {pair:?}")));
    }
    if !b_prime.is_subspace_of(cand.b()) || crate::lie::bar_image(a, &b_prime) != bar {
        return Err(Error::ReductionFailed {
            layer: m,
            detail: format!("final eAf = {b_prime} is not inside B with the same image"),
            repro: repro(cand),
        });
    }
    Ok(ReductionResult {
        pair,
        b_prime,
        trace: ReductionTrace {
            input_dim: cand.b().dim(),
            core_dim: core.dim(),
            one_perfect_radical_dim: p1.dim(),
            nilpotency_index: m,
            levi_pair,
            steps,
        },
    })
}

fn corner_basis(a: &Algebra, e: &Vector, f: &Vector) -> Vec<Vector> {
    a.span((0..a.dim()).map(|i| a.mul3(e, &a.basis_vector(i), f)).collect())
        .basis()
        .to_vec()
}

/// `B` equals its reduction `eAf`.
pub fn is_bar_minimal(cand: &InnerIdealCandidate<'_>) -> Result<bool> {
    Ok(bar_minimal_reduce(cand)?.b_prime == *cand.b())
}

/// A Levi subalgebra `S'` in which `B = (B ∩ S') + (B ∩ R)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitWitness {
    /// Applied in order, `x -> (1 + q) x (1 + q)^{-1}`, to the stored Levi
    /// subalgebra.
    pub conjugators: Vec<Vector>,
    pub levi_prime: Subspace,
    pub semisimple_part: Subspace,
    pub radical_part: Subspace,
}

pub fn split_witness(cand: &InnerIdealCandidate<'_>) -> Result<SplitWitness> {
    let red = bar_minimal_reduce(cand)?;
    split_witness_from(cand, &red)
}

/// Builds the splitting witness from an existing reduction of `cand`.
pub fn split_witness_from(cand: &InnerIdealCandidate<'_>, red: &ReductionResult) -> Result<SplitWitness> {
    let a = cand.algebra();
    let levi = a.levi()?;
    let conjugators = red.conjugators();
    let tails: Vec<Vector> = conjugators.iter().map(|q| a.unipotent_inverse_tail(q)).collect();
    let phi = |x: &Vector| {
        let mut y = x.clone();
        for (q, s) in conjugators.iter().zip(&tails) {
            y = a.conjugate_with_tail(q, s, &y);
        }
        y
    };
    let moved = levi.transport(a, phi)?;
    let levi_prime = moved.semisimple().clone();
    let semisimple_part = cand.b().intersect(&levi_prime)?;
    let radical_part = cand.b().intersect(a.radical())?;
    let contains_pair = levi_prime.contains(red.pair.e()) && levi_prime.contains(red.pair.f());
    if semisimple_part.dim() + radical_part.dim() != cand.b().dim() || !contains_pair {
        return Err(violation(
            cand,
            "Jordan-Lie inner ideals split along a Levi subalgebra containing e and f",
            format!(
                "dim B = {}, dim B∩S' = {}, dim B∩R = {}",
                cand.b().dim(),
                semisimple_part.dim(),
                radical_part.dim()
            ),
        ));
    }
    Ok(SplitWitness {
        conjugators,
        levi_prime,
        semisimple_part,
        radical_part,
    })
}

/// Every predicate and witness for a candidate.
pub fn analyze(cand: &InnerIdealCandidate<'_>) -> Result<InnerIdealReport> {
    let is_inner = cand.is_inner_ideal();
    let is_jordan_lie = cand.is_jordan_lie();
    let violation = cand.regularity_violation();
    let is_regular = violation.is_none();
    let witness = if is_regular { Some(cand.regular_witness()?) } else { None };
    let core = if is_inner { Some(cand.core()?) } else { None };
    let (pair, is_bar_minimal, split) = if is_jordan_lie {
        let red = bar_minimal_reduce(cand)?;
        let split = split_witness_from(cand, &red)?;
        let minimal = red.b_prime == *cand.b();
        (Some(red.pair), Some(minimal), Some(split))
    } else {
        (None, None, None)
    };
    Ok(InnerIdealReport {
        is_inner,
        is_jordan_lie,
        is_regular,
        is_l_perfect: cand.is_l_perfect(),
        is_bar_minimal,
        core,
        bar: cand.bar(),
        pair,
        witness,
        violation,
        split,
    })
}
