//! Finite-dimensional associative algebras given by structure constants.

mod levi;

use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{kernel, BasisCoords, Matrix, Subspace, Vector};
use crate::poly::Poly;

pub use levi::{LeviDecomposition, LeviParts, MatrixUnitSystem};
pub(crate) use levi::{lift_idempotent_raw, primitive_central_idempotents};

/// Which products an ideal must absorb.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two-sided",
        }
    }
}

type Table = Vec<Vec<Vec<(usize, Scalar)>>>;

/// An associative algebra `A` with basis `b_0..b_{n-1}` and
/// `b_i b_j = sum_k c_ij^k b_k`.
#[derive(Clone)]
pub struct Algebra {
    field: FieldSpec,
    labels: Vec<String>,
    table: Table,
    unit: Option<Vector>,
    radical: OnceLock<Subspace>,
    center: OnceLock<Subspace>,
    radical_powers: OnceLock<Vec<Subspace>>,
    levi: OnceLock<std::result::Result<LeviDecomposition, String>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("field", &self.field)
            .field("labels", &self.labels)
            .field("unit", &self.unit)
            .finish_non_exhaustive()
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.labels == other.labels
            && self.table == other.table
            && self.unit == other.unit
    }
}

impl Algebra {
    /// Builds an algebra from `(i, j, k, c)` entries meaning `c` is added
    /// to the coefficient of `b_k` in `b_i b_j`. Checks the characteristic
    /// bound, associativity on basis triples, and the unit if one is given.
    pub fn new<I>(field: FieldSpec, labels: Vec<String>, entries: I, unit: Option<Vector>) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let n = labels.len();
        let mut dense = vec![vec![Vector::zeros(field, n); n]; n];
        for (i, j, k, c) in entries {
            let worst = i.max(j).max(k);
            if worst >= n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: worst + 1,
                });
            }
            if !field.contains(&c) {
                return Err(Error::InvalidField(format!("scalar {c} does not belong to {field}")));
            }
            dense[i][j][k] += &c;
        }
        Self::from_dense(field, labels, dense, unit)
    }

    /// Builds an algebra from a function giving each basis product.
    pub fn from_fn<F>(field: FieldSpec, labels: Vec<String>, unit: Option<Vector>, product: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> Vector,
    {
        let n = labels.len();
        let mut dense = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let v = product(i, j);
                v.check_len(n)?;
                row.push(v);
            }
            dense.push(row);
        }
        Self::from_dense(field, labels, dense, unit)
    }

    fn from_dense(field: FieldSpec, labels: Vec<String>, dense: Vec<Vec<Vector>>, unit: Option<Vector>) -> Result<Self> {
        let n = labels.len();
        check_characteristic(field, n)?;
        let table: Table = dense
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| v.support().map(|(k, c)| (k, c.clone())).collect())
                    .collect()
            })
            .collect();
        if let Some(u) = &unit {
            u.check_len(n)?;
        }
        let alg = Algebra {
            field,
            labels,
            table,
            unit,
            radical: OnceLock::new(),
            center: OnceLock::new(),
            radical_powers: OnceLock::new(),
            levi: OnceLock::new(),
        };
        alg.check_associative()?;
        if let Some(u) = &alg.unit {
            for i in 0..n {
                let b = alg.basis_vector(i);
                if alg.mul(u, &b) != b || alg.mul(&b, u) != b {
                    return Err(Error::BadUnit);
                }
            }
        }
        Ok(alg)
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let bij = self.basis_product(i, j);
                for k in 0..n {
                    let left = self.mul(&bij, &self.basis_vector(k));
                    let jk = self.basis_product(j, k);
                    let right = self.mul(&self.basis_vector(i), &jk);
                    if left != right {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Attaches known Levi data after validating it.
    pub fn with_levi(self, blocks: Vec<MatrixUnitSystem>) -> Result<Self> {
        let levi = LeviDecomposition::new(&self, blocks, self.radical().clone())?;
        let alg = Algebra {
            levi: OnceLock::new(),
            ..self
        };
        let _ = alg.levi.set(Ok(levi));
        Ok(alg)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    /// All nonzero structure constants as `(i, j, k, c)`, in lexicographic order.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (i, row) in self.table.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                for (k, c) in entry {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn zero(&self) -> Vector {
        Vector::zeros(self.field, self.dim())
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::unit(self.field, self.dim(), i)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let mut v = self.zero();
        for (k, c) in &self.table[i][j] {
            v[*k] = c.clone();
        }
        v
    }

    /// Parses a label such as `e12` back to its basis vector.
    pub fn element(&self, label: &str) -> Option<Vector> {
        self.labels.iter().position(|l| l == label).map(|i| self.basis_vector(i))
    }

    /// Linear combination of labelled basis elements.
    pub fn combination(&self, terms: &[(i64, &str)]) -> Option<Vector> {
        let mut v = self.zero();
        for (c, l) in terms {
            v.axpy(&self.field.from_i64(*c), &self.element(l)?);
        }
        Some(v)
    }

    /// Product without length checks; both arguments must have length `dim`.
    pub fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        let mut out = self.zero();
        for (i, ai) in a.support() {
            for (j, bj) in b.support() {
                let entry = &self.table[i][j];
                if entry.is_empty() {
                    continue;
                }
                let c = ai * bj;
                for (k, s) in entry {
                    out[*k] += &(&c * s);
                }
            }
        }
        out
    }

    pub fn mul3(&self, a: &Vector, b: &Vector, c: &Vector) -> Vector {
        self.mul(&self.mul(a, b), c)
    }

    /// `[a, b] = ab - ba` without length checks.
    pub fn bracket(&self, a: &Vector, b: &Vector) -> Vector {
        &self.mul(a, b) - &self.mul(b, a)
    }

    fn check(&self, v: &Vector) -> Result<()> {
        v.check_len(self.dim())
    }

    pub fn multiply(&self, a: &Vector, b: &Vector) -> Result<Vector> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn commutator(&self, a: &Vector, b: &Vector) -> Result<Vector> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.bracket(a, b))
    }

    /// Jordan triple product `{b, x, b'} = b x b' + b' x b`.
    pub fn triple_product(&self, b: &Vector, x: &Vector, b2: &Vector) -> Result<Vector> {
        self.check(b)?;
        self.check(x)?;
        self.check(b2)?;
        Ok(&self.mul3(b, x, b2) + &self.mul3(b2, x, b))
    }

    pub fn power(&self, x: &Vector, n: usize) -> Vector {
        assert!(n >= 1, "power of a possibly non-unital algebra needs n >= 1");
        let mut acc = x.clone();
        for _ in 1..n {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn is_nilpotent_element(&self, x: &Vector) -> bool {
        let mut p = x.clone();
        for _ in 0..=self.dim() {
            if p.is_zero() {
                return true;
            }
            p = self.mul(&p, x);
        }
        p.is_zero()
    }

    pub fn is_idempotent(&self, x: &Vector) -> bool {
        self.mul(x, x) == *x
    }

    /// Canonical span of vectors known to have length `dim`.
    pub fn span(&self, vectors: Vec<Vector>) -> Subspace {
        Subspace::canonical(self.field, self.dim(), vectors)
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.field, self.dim())
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(self.field, self.dim())
    }

    /// Span of all products `u v` with `u` in `U` and `v` in `V`.
    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut vs = Vec::with_capacity(u.dim() * v.dim());
        for a in u.basis() {
            for b in v.basis() {
                let p = self.mul(a, b);
                if !p.is_zero() {
                    vs.push(p);
                }
            }
        }
        self.span(vs)
    }

    /// Span of all brackets `[u, v]`.
    pub fn subspace_bracket(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut vs = Vec::with_capacity(u.dim() * v.dim());
        for a in u.basis() {
            for b in v.basis() {
                let p = self.bracket(a, b);
                if !p.is_zero() {
                    vs.push(p);
                }
            }
        }
        self.span(vs)
    }

    /// Span of `{u x v}` products `u x v` over bases.
    pub fn subspace_product3(&self, u: &Subspace, x: &Subspace, v: &Subspace) -> Subspace {
        let ux = self.subspace_product(u, x);
        self.subspace_product(&ux, v)
    }

    /// The smallest ideal of the given side containing `x`.
    pub fn ideal_closure(&self, x: &Subspace, side: Side) -> Subspace {
        let full = self.full();
        let mut cur = x.clone();
        loop {
            let mut vs = cur.basis().to_vec();
            if side != Side::Right {
                vs.extend(self.subspace_product(&full, &cur).basis().iter().cloned());
            }
            if side != Side::Left {
                vs.extend(self.subspace_product(&cur, &full).basis().iter().cloned());
            }
            let next = self.span(vs);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_ideal(&self, x: &Subspace, side: Side) -> bool {
        let full = self.full();
        (side == Side::Right || self.subspace_product(&full, x).is_subspace_of(x))
            && (side == Side::Left || self.subspace_product(x, &full).is_subspace_of(x))
    }

    pub fn is_subalgebra(&self, x: &Subspace) -> bool {
        self.subspace_product(x, x).is_subspace_of(x)
    }

    /// Left multiplication by `x` as a matrix acting on coordinates.
    pub fn left_matrix(&self, x: &Vector) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field, self.dim(), &cols).expect("columns have length dim")
    }

    /// Stacks the maps `x -> f(x, b_i)` for every basis element into one
    /// matrix acting on `x`.
    fn stacked_map<F>(&self, f: F) -> Matrix
    where
        F: Fn(usize, usize) -> Vector,
    {
        let n = self.dim();
        let mut rows = Vec::with_capacity(n * n);
        for i in 0..n {
            // column m of block i is f(m, i)
            let cols: Vec<Vector> = (0..n).map(|m| f(m, i)).collect();
            for k in 0..n {
                rows.push(Vector::new(cols.iter().map(|c| c[k].clone()).collect()));
            }
        }
        Matrix::from_rows(self.field, n, rows).expect("rows have length dim")
    }

    /// Center `{z : z b_i = b_i z for all i}`.
    pub fn center(&self) -> &Subspace {
        self.center.get_or_init(|| {
            let m = self.stacked_map(|m, i| &self.basis_product(m, i) - &self.basis_product(i, m));
            kernel(&m)
        })
    }

    /// Jacobson radical via the trace form `(x, y) -> tr L_{xy}`, valid
    /// because the characteristic is 0 or exceeds the dimension.
    pub fn radical(&self) -> &Subspace {
        self.radical.get_or_init(|| {
            let n = self.dim();
            let t: Vec<Scalar> = (0..n)
                .map(|k| {
                    let mut s = self.field.zero();
                    for (m, entry) in self.table[k].iter().enumerate() {
                        for (l, c) in entry {
                            if *l == m {
                                s += c;
                            }
                        }
                    }
                    s
                })
                .collect();
            let mut rows = Vec::with_capacity(n + 1);
            rows.push(Vector::new(t.clone()));
            for j in 0..n {
                let row = (0..n)
                    .map(|i| {
                        let mut s = self.field.zero();
                        for (k, c) in &self.table[i][j] {
                            s += &(c * &t[*k]);
                        }
                        s
                    })
                    .collect();
                rows.push(Vector::new(row));
            }
            kernel(&Matrix::from_rows(self.field, n, rows).expect("rows have length dim"))
        })
    }

    /// `[A, R, R^2, ...]` ending with the first zero power.
    pub fn radical_powers(&self) -> &[Subspace] {
        self.radical_powers.get_or_init(|| {
            let r = self.radical().clone();
            let mut out = vec![self.full(), r.clone()];
            while !out.last().expect("nonempty").is_zero() {
                let next = self.subspace_product(out.last().expect("nonempty"), &r);
                if &next == out.last().expect("nonempty") {
                    panic!("radical is not nilpotent; structure constants are inconsistent");
                }
                out.push(next);
            }
            out
        })
    }

    /// `R^j` for `j >= 0`, with `R^0 = A`.
    pub fn radical_power(&self, j: usize) -> Subspace {
        let p = self.radical_powers();
        p.get(j).cloned().unwrap_or_else(|| self.zero_subspace())
    }

    /// Smallest `m` with `R^m = 0`.
    pub fn nilpotency_index(&self) -> usize {
        self.radical_powers().len() - 1
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical().is_zero()
    }

    /// Quotient by a two-sided ideal, realized on the canonical coordinate
    /// complement of the ideal.
    pub fn quotient(&self, ideal: &Subspace) -> Result<QuotientMap> {
        if ideal.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: ideal.ambient_dim(),
            });
        }
        if !self.is_ideal(ideal, Side::TwoSided) {
            return Err(Error::NotAnIdeal(Side::TwoSided.name()));
        }
        let complement = ideal.complement_indices();
        let labels = complement.iter().map(|&c| self.labels[c].clone()).collect();
        let target = Algebra::from_fn(self.field, labels, self.unit.as_ref().map(|u| ideal.quotient_coords(u)), |a, b| {
            ideal.quotient_coords(&self.basis_product(complement[a], complement[b]))
        })?;
        Ok(QuotientMap {
            ideal: ideal.clone(),
            complement,
            source_dim: self.dim(),
            target,
        })
    }

    /// `A/R` together with the projection.
    pub fn bar_quotient(&self) -> QuotientMap {
        self.quotient(self.radical()).expect("radical is an ideal")
    }

    /// `A` with an external identity adjoined as the last basis element.
    pub fn unitalize(&self) -> Algebra {
        let n = self.dim();
        let mut labels = self.labels.clone();
        labels.push(fresh_label(&self.labels, "1"));
        let one = self.field.one();
        let mut entries = self.structure_constants();
        for j in 0..n {
            entries.push((n, j, j, one.clone()));
            entries.push((j, n, j, one.clone()));
        }
        entries.push((n, n, n, one.clone()));
        let unit = Vector::unit(self.field, n + 1, n);
        let alg = Algebra::new(self.field, labels, entries, Some(unit.clone())).expect("unitalization is associative");
        // carry known Levi data over, adding the block spanned by 1 - 1_S
        if let Some(Ok(levi)) = self.levi.get() {
            let mut blocks: Vec<MatrixUnitSystem> = levi.blocks().iter().map(|b| b.map(|v| embed(v, n + 1))).collect();
            let mut extra = unit;
            for b in levi.blocks() {
                extra = &extra - &embed(&b.identity(self), n + 1);
            }
            blocks.push(MatrixUnitSystem::scalar(extra));
            if let Ok(a) = alg.clone().with_levi(blocks) {
                return a;
            }
        }
        alg
    }

    /// The subalgebra with the given (independent, closed) basis, as an
    /// algebra in its own right.
    pub fn subalgebra(&self, basis: &[Vector], labels: Vec<String>) -> Result<Algebra> {
        if labels.len() != basis.len() {
            return Err(Error::DimensionMismatch {
                expected: basis.len(),
                found: labels.len(),
            });
        }
        let coords = BasisCoords::new(self.field, self.dim(), basis)?;
        let mut dense = Vec::with_capacity(basis.len());
        for a in basis {
            let mut row = Vec::with_capacity(basis.len());
            for b in basis {
                let p = self.mul(a, b);
                row.push(
                    coords
                        .coords(&p)
                        .ok_or_else(|| Error::Precondition("subspace is not closed under multiplication".into()))?,
                );
            }
            dense.push(row);
        }
        Algebra::from_dense(self.field, labels, dense, None)
    }

    /// A two-sided identity, if one exists, found by a linear solve.
    pub fn find_unit(&self) -> Option<Vector> {
        if let Some(u) = &self.unit {
            return Some(u.clone());
        }
        let n = self.dim();
        let left = self.stacked_map(|m, i| self.basis_product(m, i));
        let right = self.stacked_map(|m, i| self.basis_product(i, m));
        let mut rows = left.rows().to_vec();
        rows.extend(right.rows().iter().cloned());
        let mut rhs = Vec::with_capacity(2 * n * n);
        for _ in 0..2 {
            for i in 0..n {
                rhs.extend(self.basis_vector(i).into_coords());
            }
        }
        let m = Matrix::from_rows(self.field, n, rows).expect("rows have length dim");
        crate::linalg::solve(&m, &Vector::new(rhs)).ok().flatten().map(|s| s.particular)
    }

    /// Minimal polynomial of `x` inside a unital corner with identity `one`
    /// (`x = one x one`).
    pub fn min_poly(&self, x: &Vector, one: &Vector) -> Poly {
        let mut powers = vec![one.clone()];
        loop {
            let next = self.mul(powers.last().expect("nonempty"), x);
            let coords = BasisCoords::new(self.field, self.dim(), &powers).expect("powers stay independent until the relation");
            if let Some(c) = coords.coords(&next) {
                let mut coeffs: Vec<Scalar> = c.into_coords().into_iter().map(|s| -s).collect();
                coeffs.push(self.field.one());
                return Poly::new(self.field, coeffs);
            }
            powers.push(next);
        }
    }

    /// `p(x)` with constant term multiplying `one`.
    pub fn eval_poly(&self, p: &Poly, x: &Vector, one: &Vector) -> Vector {
        let mut acc = self.zero();
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, x);
            acc.axpy(c, one);
        }
        acc
    }

    /// The Levi decomposition, detected from the structure constants unless
    /// it was attached at construction.
    pub fn levi(&self) -> Result<&LeviDecomposition> {
        self.levi
            .get_or_init(|| levi::detect(self).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(|m| Error::NotSplit(m.clone()))
    }

    /// Levi data if it was attached or has already been detected.
    pub fn known_levi(&self) -> Option<&LeviDecomposition> {
        self.levi.get().and_then(|r| r.as_ref().ok())
    }

    /// True when the derived series of `A^(-)` reaches zero.
    pub fn is_lie_solvable(&self) -> bool {
        crate::lie::derived_infinity(self).is_zero()
    }

    /// No ideal of codimension 1: `A^2 = A` and no Levi block of size 1.
    pub fn is_1perfect(&self) -> Result<bool> {
        if self.subspace_product(&self.full(), &self.full()) != self.full() {
            return Ok(false);
        }
        Ok(self.levi()?.blocks().iter().all(|b| b.size() > 1))
    }

    /// Largest 1-perfect ideal, reached by descending through ideals of
    /// codimension 1 chosen pseudo-randomly from `seed`.
    pub fn one_perfect_radical(&self, seed: u64) -> Result<Subspace> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut current = self.full();
        loop {
            let options = codim_one_functionals(self, &current)?;
            if options.is_empty() {
                return Ok(current);
            }
            let phi = &options[rng.gen_range(0..options.len())];
            current = hyperplane(self, &current, phi, &mut rng);
        }
    }

    /// `(1 + q) x (1 + q)^{-1}` for `q` in the radical.
    pub fn conjugate_by_unipotent(&self, q: &Vector, x: &Vector) -> Result<Vector> {
        self.check(q)?;
        self.check(x)?;
        if !self.radical().contains(q) {
            return Err(Error::NotInRadical);
        }
        let s = self.unipotent_inverse_tail(q);
        Ok(self.conjugate_with_tail(q, &s, x))
    }

    /// `(1 + u) x (1 + u)^{-1}` for any nilpotent `u`.
    pub fn conjugate_by_nilpotent(&self, u: &Vector, x: &Vector) -> Result<Vector> {
        self.check(u)?;
        self.check(x)?;
        if !self.is_nilpotent_element(u) {
            return Err(Error::Precondition("conjugating element is not nilpotent".into()));
        }
        let s = self.unipotent_inverse_tail(u);
        Ok(self.conjugate_with_tail(u, &s, x))
    }

    /// Human-readable element such as `e12 + 2*e'13`.
    pub fn format_element(&self, v: &Vector) -> String {
        let mut out = String::new();
        for (i, c) in v.support() {
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&self.labels[i]);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// `s` with `(1 + q)^{-1} = 1 + s`, i.e. `s = -q + q^2 - ...`.
    pub fn unipotent_inverse_tail(&self, q: &Vector) -> Vector {
        let mut s = self.zero();
        let mut term = -q;
        while !term.is_zero() {
            s = &s + &term;
            term = -&self.mul(&term, q);
        }
        s
    }

    pub(crate) fn conjugate_with_tail(&self, q: &Vector, s: &Vector, x: &Vector) -> Vector {
        let qx = self.mul(q, x);
        let y = &(x + &qx) + &self.mul(x, s);
        &y + &self.mul(&qx, s)
    }
}

fn check_characteristic(field: FieldSpec, dim: usize) -> Result<()> {
    if let FieldSpec::Prime(p) = field {
        if p <= dim as u64 {
            return Err(Error::UnsupportedCharacteristic { characteristic: p, dim });
        }
    }
    Ok(())
}

fn embed(v: &Vector, n: usize) -> Vector {
    let mut c = v.coords().to_vec();
    c.resize(n, v.coords().first().map(|s| s.field().zero()).unwrap_or_else(|| FieldSpec::Rational.zero()));
    Vector::new(c)
}

fn fresh_label(existing: &[String], base: &str) -> String {
    let mut label = base.to_string();
    while existing.iter().any(|l| *l == label) {
        label.push('\'');
    }
    label
}

/// Functionals on the coordinates of `c` (a subalgebra) whose kernels are
/// exactly the ideals of `c` of codimension 1, one per kind: the null
/// quotients (killing `c^2`) contribute a basis of the annihilator of
/// `c^2`, the field quotients contribute one character each.
fn codim_one_functionals(a: &Algebra, c: &Subspace) -> Result<Vec<Vec<Scalar>>> {
    let m = c.dim();
    if m == 0 {
        return Ok(Vec::new());
    }
    let field = a.field();
    let labels: Vec<String> = (0..m).map(|i| format!("c{i}")).collect();
    let sub = a.subalgebra(c.basis(), labels)?;
    let full = sub.full();
    let sq = sub.subspace_product(&full, &full);
    let mut out = Vec::new();
    if sq != full {
        // the null kind is represented once; a random member is drawn later
        out.push(Vec::new());
    }
    // characters factor through C / (rad C + C[C,C]C), a commutative
    // semisimple algebra
    let comm = sub.subspace_bracket(&full, &full);
    let gen = sub.ideal_closure(&comm, Side::TwoSided);
    let ideal = sub.radical().sum(&gen).expect("same ambient");
    let q = sub.quotient(&ideal)?;
    if q.target().dim() > 0 {
        let one = q
            .target()
            .find_unit()
            .ok_or_else(|| Error::NotSplit("commutative semisimple quotient has no unit".into()))?;
        let idems = primitive_central_idempotents(q.target(), &one)?;
        let coords = BasisCoords::new(field, q.target().dim(), &idems)?;
        for i in 0..idems.len() {
            let phi: Vec<Scalar> = (0..m)
                .map(|j| {
                    let y = q.project(&sub.basis_vector(j));
                    coords.coords(&y).expect("quotient is spanned by idempotents")[i].clone()
                })
                .collect();
            out.push(phi);
        }
    }
    Ok(out)
}

/// Kernel of `phi` inside `c`; an empty `phi` means a random functional
/// vanishing on `c^2`.
fn hyperplane(a: &Algebra, c: &Subspace, phi: &[Scalar], rng: &mut ChaCha8Rng) -> Subspace {
    let m = c.dim();
    let field = a.field();
    let phi: Vec<Scalar> = if phi.is_empty() {
        let sq = a.subspace_product(c, c);
        let rows: Vec<Vector> = sq
            .basis()
            .iter()
            .map(|v| Vector::new(c.coordinates(v).expect("c^2 lies in c")))
            .collect();
        let ann = kernel(&Matrix::from_rows(field, m, rows).expect("rows have length m"));
        loop {
            let mut f = Vector::zeros(field, m);
            for b in ann.basis() {
                f.axpy(&field.from_i64(rng.gen_range(-3..=3)), b);
            }
            if !f.is_zero() {
                break f.into_coords();
            }
        }
    } else {
        phi.to_vec()
    };
    let p = phi.iter().position(|s| !s.is_zero()).expect("functional is nonzero");
    let inv = phi[p].inv().expect("nonzero");
    let vs = (0..m)
        .filter(|&i| i != p)
        .map(|i| {
            let mut v = c.basis()[i].clone();
            v.axpy(&-&(&phi[i] * &inv), &c.basis()[p]);
            v
        })
        .collect();
    a.span(vs)
}

/// Projection of an algebra onto its quotient by an ideal, with the
/// coordinate section.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    ideal: Subspace,
    complement: Vec<usize>,
    source_dim: usize,
    target: Algebra,
}

impl QuotientMap {
    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn project(&self, x: &Vector) -> Vector {
        self.ideal.quotient_coords(x)
    }

    /// Section sending target coordinates to the complement coordinates.
    pub fn lift(&self, y: &Vector) -> Vector {
        let field = self.ideal.field();
        let mut v = Vector::zeros(field, self.source_dim);
        for (i, &c) in self.complement.iter().enumerate() {
            v[c] = y[i].clone();
        }
        v
    }

    pub fn project_subspace(&self, u: &Subspace) -> Subspace {
        self.target.span(u.basis().iter().map(|v| self.project(v)).collect())
    }

    /// Full preimage of a target subspace.
    pub fn preimage(&self, u: &Subspace) -> Subspace {
        let mut vs: Vec<Vector> = u.basis().iter().map(|v| self.lift(v)).collect();
        vs.extend(self.ideal.basis().iter().cloned());
        Subspace::canonical(self.ideal.field(), self.source_dim, vs)
    }
}

#[cfg(test)]
mod tests;
