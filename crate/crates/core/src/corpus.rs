//! Deterministic test algebras: matrix and triangular algebras, direct sums,
//! split extensions `S + R` by sums of natural bimodules, the non-regular
//! example, and seeded random members of these families.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, MatrixUnitSystem};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::inner_ideal::IdempotentPair;
use crate::linalg::{Subspace, Vector};

const BLOCK_LETTERS: [&str; 8] = ["e", "f", "g", "h", "k", "m", "p", "t"];

fn unit_label(letter: &str, n: usize, i: usize, j: usize) -> String {
    if n < 10 {
        format!("{letter}{}{}", i + 1, j + 1)
    } else {
        format!("{letter}{}_{}", i + 1, j + 1)
    }
}

/// The full matrix algebra `M_n` with basis `e_ij`.
pub fn matrix_algebra(n: usize, field: FieldSpec) -> Algebra {
    assert!(n >= 1, "matrix size must be positive");
    let labels = (0..n * n).map(|t| unit_label("e", n, t / n, t % n)).collect();
    let one = field.one();
    let mut entries = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                entries.push((i * n + j, j * n + l, i * n + l, one.clone()));
            }
        }
    }
    let mut unit = Vector::zeros(field, n * n);
    for i in 0..n {
        unit[i * n + i] = one.clone();
    }
    let a = Algebra::new(field, labels, entries, Some(unit)).expect("matrix algebra is associative");
    let units = (0..n * n).map(|t| a.basis_vector(t)).collect();
    let block = MatrixUnitSystem::new(n, units).expect("n*n units");
    a.with_levi(vec![block]).expect("matrix units are a Levi decomposition")
}

/// Upper triangular `T_n` (`strict = false`) or strictly upper triangular
/// `n_n` (`strict = true`) matrices.
pub fn triangular(n: usize, strict: bool, field: FieldSpec) -> Algebra {
    assert!(n >= 1, "matrix size must be positive");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .filter(|(i, j)| !strict || i < j)
        .collect();
    let index: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(t, &p)| (p, t)).collect();
    let labels = pairs.iter().map(|&(i, j)| unit_label("e", n, i, j)).collect();
    let one = field.one();
    let mut entries = Vec::new();
    for (&(i, j), &a) in &index {
        for (&(k, l), &b) in &index {
            if j == k {
                if let Some(&c) = index.get(&(i, l)) {
                    entries.push((a, b, c, one.clone()));
                }
            }
        }
    }
    let unit = (!strict).then(|| {
        let mut u = Vector::zeros(field, pairs.len());
        for i in 0..n {
            u[index[&(i, i)]] = one.clone();
        }
        u
    });
    let a = Algebra::new(field, labels, entries, unit).expect("triangular algebra is associative");
    let blocks = if strict {
        Vec::new()
    } else {
        (0..n)
            .map(|i| MatrixUnitSystem::scalar(a.basis_vector(index[&(i, i)])))
            .collect()
    };
    a.with_levi(blocks).expect("diagonal units are a Levi decomposition")
}

/// The 1-dimensional algebra with zero multiplication.
pub fn null_algebra(dim: usize, field: FieldSpec) -> Algebra {
    let labels = (0..dim).map(|i| format!("x{}", i + 1)).collect();
    Algebra::new(field, labels, Vec::new(), None)
        .expect("null algebra is associative")
        .with_levi(Vec::new())
        .expect("no semisimple part")
}

fn primed(label: &str, copies: usize) -> String {
    if copies == 0 {
        return label.to_string();
    }
    let mut chars = label.chars();
    let first = chars.next().map(String::from).unwrap_or_default();
    format!("{first}{}{}", "'".repeat(copies), chars.as_str())
}

/// `A_1 + ... + A_m` with componentwise multiplication; labels of the
/// `c`-th summand carry `c` primes.
pub fn direct_sum(parts: &[Algebra]) -> Result<Algebra> {
    let field = parts.first().map(|a| a.field()).unwrap_or(FieldSpec::Rational);
    if parts.iter().any(|a| a.field() != field) {
        return Err(Error::InvalidField("summands live over different fields".into()));
    }
    let n: usize = parts.iter().map(|a| a.dim()).sum();
    let mut offsets = Vec::with_capacity(parts.len());
    let mut labels = Vec::with_capacity(n);
    let mut entries = Vec::new();
    for (c, a) in parts.iter().enumerate() {
        let off = labels.len();
        offsets.push(off);
        labels.extend(a.labels().iter().map(|l| primed(l, c)));
        for (i, j, k, s) in a.structure_constants() {
            entries.push((i + off, j + off, k + off, s));
        }
    }
    let embed = |v: &Vector, off: usize| {
        let mut w = Vector::zeros(field, n);
        for (i, s) in v.support() {
            w[i + off] = s.clone();
        }
        w
    };
    let unit = if parts.iter().all(|a| a.unit().is_some()) {
        let mut u = Vector::zeros(field, n);
        for (a, &off) in parts.iter().zip(&offsets) {
            u = &u + &embed(a.unit().expect("checked"), off);
        }
        Some(u)
    } else {
        None
    };
    let sum = Algebra::new(field, labels, entries, unit)?;
    let mut blocks = Vec::new();
    for (a, &off) in parts.iter().zip(&offsets) {
        match a.levi() {
            Ok(l) => blocks.extend(l.blocks().iter().map(|b| b.map(|v| embed(v, off)))),
            Err(_) => return Ok(sum),
        }
    }
    sum.with_levi(blocks)
}

/// How the radical of a split extension multiplies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Nilpotency {
    /// `R^2 = 0`: every listed bimodule copy is independent.
    Square,
    /// Consecutive copies compose, `U_ij U_jk -> U_ik`.
    Chained,
}

/// `multiplicity` copies of the natural `S_left`-`S_right` bimodule
/// `U_{left,right}`; index 0 stands for a one-dimensional space on which
/// `S` acts by zero, indices `1..` for the declared Levi blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BimoduleEntry {
    pub left: usize,
    pub right: usize,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BimoduleSpec {
    pub entries: Vec<BimoduleEntry>,
    pub nilpotency: Nilpotency,
    /// Permits `U_00`, which makes the algebra fail to be 1-perfect.
    pub allow_trivial: bool,
}

impl BimoduleSpec {
    pub fn square(entries: &[(usize, usize, usize)]) -> Self {
        Self::from_triples(entries, Nilpotency::Square)
    }

    pub fn chained(entries: &[(usize, usize, usize)]) -> Self {
        Self::from_triples(entries, Nilpotency::Chained)
    }

    fn from_triples(entries: &[(usize, usize, usize)], nilpotency: Nilpotency) -> Self {
        BimoduleSpec {
            entries: entries
                .iter()
                .map(|&(left, right, multiplicity)| BimoduleEntry {
                    left,
                    right,
                    multiplicity,
                })
                .collect(),
            nilpotency,
            allow_trivial: false,
        }
    }

    pub fn allowing_trivial(mut self) -> Self {
        self.allow_trivial = true;
        self
    }

    fn validate(&self, blocks: &[usize]) -> Result<()> {
        for e in &self.entries {
            if e.left > blocks.len() || e.right > blocks.len() {
                return Err(Error::InvalidSpec(format!(
                    "bimodule U_{}{} refers to a block beyond the {} declared",
                    e.left,
                    e.right,
                    blocks.len()
                )));
            }
            if e.left == 0 && e.right == 0 && !self.allow_trivial {
                return Err(Error::InvalidSpec("U_00 requested without allowing a non-1-perfect algebra".into()));
            }
        }
        if blocks.contains(&0) {
            return Err(Error::InvalidSpec("Levi blocks must have positive size".into()));
        }
        Ok(())
    }

    fn has_trivial(&self) -> bool {
        self.entries.iter().any(|e| e.left == 0 && e.right == 0 && e.multiplicity > 0)
    }
}

/// Realization of `S + R` inside a big matrix algebra: a list of slots,
/// each a copy of `V_r` (label `r`, dimension `n_r`) or a line killed by
/// `S` (label 0), and the slot pairs whose Hom spaces make up `R`.
struct Realization {
    labels: Vec<usize>,
    dims: Vec<usize>,
    starts: Vec<usize>,
    pairs: Vec<(usize, usize)>,
}

impl Realization {
    fn new(blocks: &[usize], spec: &BimoduleSpec) -> Self {
        let mut r = Realization {
            labels: Vec::new(),
            dims: Vec::new(),
            starts: Vec::new(),
            pairs: Vec::new(),
        };
        for b in 1..=blocks.len() {
            r.push(b, blocks);
        }
        let mut chain = Vec::new();
        for e in &spec.entries {
            for _ in 0..e.multiplicity {
                match spec.nilpotency {
                    Nilpotency::Square => {
                        let a = r.push(e.left, blocks);
                        let b = r.push(e.right, blocks);
                        r.pairs.push((a, b));
                    }
                    Nilpotency::Chained => {
                        if chain.last().map(|&s| r.labels[s]) != Some(e.left) {
                            chain.push(r.push(e.left, blocks));
                        }
                        chain.push(r.push(e.right, blocks));
                    }
                }
            }
        }
        for x in 0..chain.len() {
            for y in x + 1..chain.len() {
                r.pairs.push((chain[x], chain[y]));
            }
        }
        r
    }

    fn push(&mut self, label: usize, blocks: &[usize]) -> usize {
        let d = if label == 0 { 1 } else { blocks[label - 1] };
        self.starts.push(self.dims.iter().sum());
        self.labels.push(label);
        self.dims.push(d);
        self.labels.len() - 1
    }

    fn radical_dim(&self) -> usize {
        self.pairs.iter().map(|&(a, b)| self.dims[a] * self.dims[b]).sum()
    }
}

/// Dimension of `build_semidirect(blocks, spec)` without building it.
pub fn semidirect_dim(blocks: &[usize], spec: &BimoduleSpec) -> usize {
    blocks.iter().map(|n| n * n).sum::<usize>() + Realization::new(blocks, spec).radical_dim()
}

/// `A = S + R` with `S = M_{n_1} + ... + M_{n_m}` and `R` the requested sum
/// of natural bimodules, with Levi data attached.
pub fn build_semidirect(blocks: &[usize], spec: &BimoduleSpec, field: FieldSpec) -> Result<Algebra> {
    spec.validate(blocks)?;
    let real = Realization::new(blocks, spec);
    // basis elements as sparse matrices over global slot coordinates
    let mut basis: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut labels = Vec::new();
    let mut s_index: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for (r, &n) in blocks.iter().enumerate() {
        let slots: Vec<usize> = (0..real.labels.len()).filter(|&s| real.labels[s] == r + 1).collect();
        let letter = BLOCK_LETTERS[r % BLOCK_LETTERS.len()];
        let letter = if r >= BLOCK_LETTERS.len() { format!("{letter}{}", r / BLOCK_LETTERS.len()) } else { letter.to_string() };
        for i in 0..n {
            for j in 0..n {
                s_index.insert((r, i, j), basis.len());
                basis.push(slots.iter().map(|&s| (real.starts[s] + i, real.starts[s] + j)).collect());
                labels.push(unit_label(&letter, n, i, j));
            }
        }
    }
    let mut r_index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (t, &(a, b)) in real.pairs.iter().enumerate() {
        for i in 0..real.dims[a] {
            for j in 0..real.dims[b] {
                let pos = (real.starts[a] + i, real.starts[b] + j);
                r_index.insert(pos, basis.len());
                basis.push(vec![pos]);
                labels.push(format!("u{}_{}{}", t + 1, i + 1, j + 1));
            }
        }
    }
    let slot_of = |g: usize| {
        let s = real.starts.iter().rposition(|&st| st <= g).expect("coordinate in some slot");
        (s, g - real.starts[s])
    };
    let base_slot: Vec<usize> = (1..=blocks.len())
        .map(|r| real.labels.iter().position(|&l| l == r).expect("base slot exists"))
        .collect();
    let dim = basis.len();
    let one = field.one();
    let mut entries = Vec::new();
    for (x, bx) in basis.iter().enumerate() {
        for (y, by) in basis.iter().enumerate() {
            let mut prod: BTreeMap<(usize, usize), i64> = BTreeMap::new();
            for &(r1, c1) in bx {
                for &(r2, c2) in by {
                    if c1 == r2 {
                        *prod.entry((r1, c2)).or_insert(0) += 1;
                    }
                }
            }
            for ((row, col), c) in prod {
                let (sa, i) = slot_of(row);
                let (sb, j) = slot_of(col);
                let target = if sa == sb {
                    let label = real.labels[sa];
                    if label == 0 || base_slot[label - 1] != sa {
                        continue;
                    }
                    s_index[&(label - 1, i, j)]
                } else {
                    *r_index
                        .get(&(row, col))
                        .ok_or_else(|| Error::InvalidSpec("bimodule products leave the radical".into()))?
                };
                entries.push((x, y, target, field.from_i64(c)));
            }
        }
    }
    let unit = real.labels.iter().all(|&l| l != 0).then(|| {
        let mut u = Vector::zeros(field, dim);
        for (r, &n) in blocks.iter().enumerate() {
            for i in 0..n {
                u[s_index[&(r, i, i)]] = one.clone();
            }
        }
        u
    });
    // the sum of block identities is a unit only when R is killed by nothing
    let a = match Algebra::new(field, labels.clone(), entries.clone(), unit) {
        Ok(a) => a,
        Err(Error::BadUnit) => Algebra::new(field, labels, entries, None)?,
        Err(e) => return Err(e),
    };
    let levi_blocks = blocks
        .iter()
        .enumerate()
        .map(|(r, &n)| {
            let units = (0..n * n).map(|t| a.basis_vector(s_index[&(r, t / n, t % n)])).collect();
            MatrixUnitSystem::new(n, units)
        })
        .collect::<Result<Vec<_>>>()?;
    let a = a.with_levi(levi_blocks)?;
    let expect_perfect = blocks.iter().all(|&n| n > 1) && !spec.has_trivial();
    if a.is_1perfect()? != expect_perfect {
        return Err(Error::TheoremViolation {
            check: "split extensions without 1x1 blocks or U_00 are 1-perfect".into(),
            detail: format!("blocks {blocks:?}, spec {spec:?}"),
            repro: format!("{a:?}"),
        });
    }
    Ok(a)
}

/// The algebra `A_1` and inner ideal `B` of the non-regular example inside
/// two copies of strictly upper triangular 4x4 matrices.
#[derive(Clone, Debug)]
pub struct NonRegularExample {
    pub algebra: Algebra,
    pub b: Subspace,
    pub b1: Vector,
    pub b2: Vector,
    pub a: Vector,
    pub e14: Vector,
}

/// Builds the non-regular example. Needs characteristic 0 or `p > 9`.
pub fn example_nr(field: FieldSpec) -> Result<NonRegularExample> {
    let n4 = triangular(4, true, field);
    let big = direct_sum(&[n4.clone(), n4])?;
    let el = |terms: &[&str]| {
        let mut v = big.zero();
        for t in terms {
            v = &v + &big.element(t).expect("label exists");
        }
        v
    };
    let b1 = el(&["e12", "e'34"]);
    let b2 = el(&["e34", "e'12"]);
    let a = el(&["e23", "e'23"]);
    let square: Vec<&str> = vec!["e13", "e14", "e24", "e'13", "e'14", "e'24"];
    let mut basis = vec![b1, b2, a];
    basis.extend(square.iter().map(|l| el(&[l])));
    let mut labels: Vec<String> = vec!["b1".into(), "b2".into(), "a".into()];
    labels.extend(square.iter().map(|s| s.to_string()));
    let a1 = big.subalgebra(&basis, labels)?.with_levi(Vec::new())?;
    let v = |l: &str| a1.element(l).expect("label exists");
    let b = a1.span(vec![v("b1"), v("b2"), &v("e14") + &v("e'14")]);
    Ok(NonRegularExample {
        b1: v("b1"),
        b2: v("b2"),
        a: v("a"),
        e14: v("e14"),
        b,
        algebra: a1,
    })
}

/// Knobs for `random_algebra`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomParams {
    pub max_block: usize,
    pub num_blocks: usize,
    pub bimodule_density: f64,
    /// `None` picks square-zero or chained at random.
    pub nilpotency: Option<Nilpotency>,
    pub max_dim: usize,
    /// Only blocks of size at least 2 and no `U_00`.
    pub one_perfect: bool,
    pub field: FieldSpec,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams {
            max_block: 3,
            num_blocks: 3,
            bimodule_density: 0.4,
            nilpotency: None,
            max_dim: 16,
            one_perfect: false,
            field: FieldSpec::Rational,
        }
    }
}

/// The block sizes and bimodule spec `random_algebra` would build.
pub fn random_shape(seed: u64, params: &RandomParams) -> (Vec<usize>, BimoduleSpec) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let min_block = if params.one_perfect { 2 } else { 1 };
    let mut blocks = Vec::new();
    let k = if params.num_blocks == 0 { 0 } else { rng.gen_range(1..=params.num_blocks) };
    for _ in 0..k {
        let n = rng.gen_range(min_block..=params.max_block.max(min_block));
        if blocks.iter().map(|b| b * b).sum::<usize>() + n * n <= params.max_dim {
            blocks.push(n);
        }
    }
    let nilpotency = params.nilpotency.unwrap_or(if rng.gen_bool(0.5) {
        Nilpotency::Square
    } else {
        Nilpotency::Chained
    });
    let mut candidates: Vec<(usize, usize)> = (0..=blocks.len())
        .flat_map(|i| (0..=blocks.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| !(params.one_perfect && i == 0 && j == 0))
        .collect();
    candidates.shuffle(&mut rng);
    let mut spec = BimoduleSpec {
        entries: Vec::new(),
        nilpotency,
        allow_trivial: !params.one_perfect,
    };
    for (i, j) in candidates {
        if !rng.gen_bool(params.bimodule_density.clamp(0.0, 1.0)) {
            continue;
        }
        spec.entries.push(BimoduleEntry {
            left: i,
            right: j,
            multiplicity: 1,
        });
        if semidirect_dim(&blocks, &spec) > params.max_dim {
            spec.entries.pop();
        }
    }
    (blocks, spec)
}

/// A reproducible split extension chosen from `seed`.
pub fn random_algebra(seed: u64, params: &RandomParams) -> Result<Algebra> {
    let (blocks, spec) = random_shape(seed, params);
    build_semidirect(&blocks, &spec, params.field)
}

/// Options for `enumerate_idempotent_pairs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairOptions {
    /// Maximum number of pairs returned.
    pub budget: usize,
    /// Keep only pairs with `fe = 0`.
    pub require_fe_zero: bool,
    /// Conjugate by seeded unipotents `1 + q`, `q` in the radical; `e` and
    /// `f` get independent conjugators unless `require_fe_zero` is set.
    pub conjugate_seed: Option<u64>,
}

impl PairOptions {
    pub fn new(budget: usize) -> Self {
        PairOptions {
            budget,
            require_fe_zero: true,
            conjugate_seed: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PairEnumeration {
    pub pairs: Vec<IdempotentPair>,
    pub truncated: bool,
}

/// Idempotents `sum_r sum_{i in P_r} e^r_ii` for every choice of diagonal
/// patterns `P_r`, in a fixed order starting with 0.
pub fn diagonal_idempotents(a: &Algebra) -> Result<Vec<Vector>> {
    let levi = a.levi()?;
    let mut out = vec![a.zero()];
    for b in levi.blocks() {
        let mut next = Vec::with_capacity(out.len() << b.size());
        for mask in 0u32..(1 << b.size()) {
            for base in &out {
                let mut v = base.clone();
                for i in 0..b.size() {
                    if mask & (1 << i) != 0 {
                        v = &v + b.unit(i, i);
                    }
                }
                next.push(v);
            }
        }
        out = next;
    }
    Ok(out)
}

fn random_radical_element(a: &Algebra, rng: &mut ChaCha8Rng) -> Vector {
    let mut q = a.zero();
    for r in a.radical().basis() {
        q.axpy(&a.field().from_i64(rng.gen_range(-2..=2)), r);
    }
    q
}

/// Ordered pairs of diagonal-pattern idempotents, possibly conjugated.
pub fn enumerate_idempotent_pairs(a: &Algebra, opts: &PairOptions) -> Result<PairEnumeration> {
    let idems = diagonal_idempotents(a)?;
    let mut rng = opts.conjugate_seed.map(ChaCha8Rng::seed_from_u64);
    let mut pairs = Vec::new();
    let mut truncated = false;
    'outer: for e in &idems {
        for f in &idems {
            if opts.require_fe_zero && !a.mul(f, e).is_zero() {
                continue;
            }
            if pairs.len() == opts.budget {
                truncated = true;
                break 'outer;
            }
            let (e2, f2) = match rng.as_mut() {
                None => (e.clone(), f.clone()),
                Some(rng) => {
                    let q1 = random_radical_element(a, rng);
                    let q2 = if opts.require_fe_zero { q1.clone() } else { random_radical_element(a, rng) };
                    (a.conjugate_by_unipotent(&q1, e)?, a.conjugate_by_unipotent(&q2, f)?)
                }
            };
            pairs.push(IdempotentPair::new(a, e2, f2)?);
        }
    }
    Ok(PairEnumeration { pairs, truncated })
}

/// Conjugates `x` by `1 + t e^r_ij` (`i != j`) from the Levi data, moving
/// idempotents off the diagonal.
pub fn conjugate_by_elementary(a: &Algebra, r: usize, i: usize, j: usize, t: i64, x: &Vector) -> Result<Vector> {
    let levi = a.levi()?;
    let u = levi.blocks()[r].unit(i, j).scale(&a.field().from_i64(t));
    a.conjugate_by_nilpotent(&u, x)
}

/// A random inner automorphism built from elementary matrices in the Levi
/// blocks and a unipotent from the radical, applied to `x`.
pub fn random_inner_automorphism(a: &Algebra, seed: u64) -> Result<impl Fn(&Vector) -> Vector + '_> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let levi = a.levi()?;
    let mut steps: Vec<Vector> = Vec::new();
    for b in levi.blocks() {
        for _ in 0..2 {
            if b.size() > 1 {
                let i = rng.gen_range(0..b.size());
                let j = (i + rng.gen_range(1..b.size())) % b.size();
                steps.push(b.unit(i, j).scale(&a.field().from_i64(rng.gen_range(-2..=2))));
            }
        }
    }
    steps.push(random_radical_element(a, &mut rng));
    let tails: Vec<Vector> = steps.iter().map(|u| a.unipotent_inverse_tail(u)).collect();
    Ok(move |x: &Vector| {
        let mut y = x.clone();
        for (u, s) in steps.iter().zip(&tails) {
            y = a.conjugate_with_tail(u, s, &y);
        }
        y
    })
}
