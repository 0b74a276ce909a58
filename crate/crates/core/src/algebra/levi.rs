//! Levi decompositions `A = S + R` with `S` presented as a sum of full
//! matrix algebras through explicit matrix units.

use std::collections::VecDeque;

use super::{Algebra, QuotientMap};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{BasisCoords, Subspace, Vector};
use crate::poly::Poly;

/// Elements `e_ij` (`0 <= i, j < size`) with `e_ij e_kl = delta_jk e_il`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixUnitSystem {
    size: usize,
    units: Vec<Vector>,
}

impl MatrixUnitSystem {
    /// `units` is row-major: `units[i * size + j] = e_ij`.
    pub fn new(size: usize, units: Vec<Vector>) -> Result<Self> {
        if units.len() != size * size || size == 0 {
            return Err(Error::DimensionMismatch {
                expected: size * size,
                found: units.len(),
            });
        }
        Ok(MatrixUnitSystem { size, units })
    }

    /// A 1x1 block spanned by the idempotent `e`.
    pub fn scalar(e: Vector) -> Self {
        MatrixUnitSystem { size: 1, units: vec![e] }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn unit(&self, i: usize, j: usize) -> &Vector {
        &self.units[i * self.size + j]
    }

    pub fn units(&self) -> &[Vector] {
        &self.units
    }

    /// `e_00 + ... + e_{n-1,n-1}`.
    pub fn identity(&self, a: &Algebra) -> Vector {
        let mut v = a.zero();
        for i in 0..self.size {
            v = &v + self.unit(i, i);
        }
        v
    }

    pub fn map<F: Fn(&Vector) -> Vector>(&self, f: F) -> Self {
        MatrixUnitSystem {
            size: self.size,
            units: self.units.iter().map(f).collect(),
        }
    }

    /// Checks the matrix-unit relations in `a`.
    pub fn verify(&self, a: &Algebra) -> Result<()> {
        let n = self.size;
        for u in &self.units {
            u.check_len(a.dim())?;
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let p = a.mul(self.unit(i, j), self.unit(k, l));
                        let ok = if j == k { p == *self.unit(i, l) } else { p.is_zero() };
                        if !ok {
                            return Err(Error::Precondition(format!(
                                "matrix units fail e{i}{j} * e{k}{l} in a block of size {n}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Coordinates of an element relative to `S + R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviParts {
    /// Row-major `n_r x n_r` coefficient matrices, one per block.
    pub blocks: Vec<Vec<Scalar>>,
    pub semisimple: Vector,
    pub radical: Vector,
}

#[derive(Clone, Debug)]
pub struct LeviDecomposition {
    blocks: Vec<MatrixUnitSystem>,
    radical: Subspace,
    semisimple: Subspace,
    coords: BasisCoords,
    offsets: Vec<usize>,
}

impl LeviDecomposition {
    /// Validates the blocks against `a` and its radical.
    pub fn new(a: &Algebra, blocks: Vec<MatrixUnitSystem>, radical: Subspace) -> Result<Self> {
        if radical != *a.radical() {
            return Err(Error::Precondition("supplied radical differs from the computed radical".into()));
        }
        for b in &blocks {
            b.verify(a)?;
        }
        let ids: Vec<Vector> = blocks.iter().map(|b| b.identity(a)).collect();
        for (r, x) in ids.iter().enumerate() {
            for (s, y) in ids.iter().enumerate() {
                if r != s && !a.mul(x, y).is_zero() {
                    return Err(Error::Precondition(format!("Levi blocks {r} and {s} do not annihilate each other")));
                }
            }
        }
        let mut basis = Vec::new();
        let mut offsets = Vec::with_capacity(blocks.len());
        for b in &blocks {
            offsets.push(basis.len());
            basis.extend(b.units().iter().cloned());
        }
        let semisimple = a.span(basis.clone());
        basis.extend(radical.basis().iter().cloned());
        if basis.len() != a.dim() {
            return Err(Error::Precondition(format!(
                "Levi blocks and radical have total dimension {} but the algebra has dimension {}",
                basis.len(),
                a.dim()
            )));
        }
        let coords = BasisCoords::new(a.field(), a.dim(), &basis)
            .map_err(|_| Error::Precondition("Levi blocks meet the radical or are dependent".into()))?;
        Ok(LeviDecomposition {
            blocks,
            radical,
            semisimple,
            coords,
            offsets,
        })
    }

    pub fn blocks(&self) -> &[MatrixUnitSystem] {
        &self.blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.size()).collect()
    }

    pub fn radical(&self) -> &Subspace {
        &self.radical
    }

    pub fn semisimple(&self) -> &Subspace {
        &self.semisimple
    }

    pub fn decompose(&self, x: &Vector) -> LeviParts {
        let c = self.coords.coords(x).expect("Levi basis spans the algebra");
        let field = self.radical.field();
        let n = self.radical.ambient_dim();
        let mut semisimple = Vector::zeros(field, n);
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for (b, &off) in self.blocks.iter().zip(&self.offsets) {
            let m: Vec<Scalar> = (0..b.size() * b.size()).map(|t| c[off + t].clone()).collect();
            for (t, u) in b.units().iter().enumerate() {
                semisimple.axpy(&m[t], u);
            }
            blocks.push(m);
        }
        let radical = x - &semisimple;
        LeviParts {
            blocks,
            semisimple,
            radical,
        }
    }

    /// Coefficient matrix of `x` in block `r`.
    pub fn block_coords(&self, x: &Vector, r: usize) -> Vec<Scalar> {
        let c = self.coords.coords(x).expect("Levi basis spans the algebra");
        let size = self.blocks[r].size();
        (0..size * size).map(|t| c[self.offsets[r] + t].clone()).collect()
    }

    /// Which blocks see a nonzero projection of `x`.
    pub fn block_support(&self, x: &Vector) -> Vec<bool> {
        self.decompose(x)
            .blocks
            .iter()
            .map(|m| m.iter().any(|s| !s.is_zero()))
            .collect()
    }

    /// `sum m_ij e^r_ij` for a row-major matrix `m`.
    pub fn block_element(&self, r: usize, m: &[Scalar]) -> Vector {
        let b = &self.blocks[r];
        let mut v = Vector::zeros(self.radical.field(), self.radical.ambient_dim());
        for (t, u) in b.units().iter().enumerate() {
            v.axpy(&m[t], u);
        }
        v
    }

    /// Image of the decomposition under an automorphism of `a`.
    pub fn transport<F: Fn(&Vector) -> Vector>(&self, a: &Algebra, f: F) -> Result<Self> {
        let blocks = self.blocks.iter().map(|b| b.map(&f)).collect();
        LeviDecomposition::new(a, blocks, self.radical.clone())
    }
}

/// Levi data for raw structure constants: split `A/R` into simple blocks,
/// find matrix units in each, and lift them through the radical.
pub(crate) fn detect(a: &Algebra) -> Result<LeviDecomposition> {
    let r = a.radical().clone();
    if r.dim() == a.dim() {
        return LeviDecomposition::new(a, Vec::new(), r);
    }
    let q = a.bar_quotient();
    let s = q.target();
    let one = s
        .find_unit()
        .ok_or_else(|| Error::NotSplit("semisimple quotient has no unit".into()))?;
    let central = primitive_central_idempotents(s, &one)?;
    let mut bar_blocks = Vec::with_capacity(central.len());
    for eps in &central {
        bar_blocks.push(block_matrix_units(s, eps)?);
    }
    let lifted = lift_blocks(a, &q, &bar_blocks)?;
    LeviDecomposition::new(a, lifted, r)
}

/// Splits `one` into primitive central idempotents of the semisimple
/// algebra `s` using eigenvalues of central elements.
pub(crate) fn primitive_central_idempotents(s: &Algebra, one: &Vector) -> Result<Vec<Vector>> {
    let field = s.field();
    let mut idems = vec![one.clone()];
    for z in s.center().basis() {
        let mut next = Vec::with_capacity(idems.len());
        for eps in idems {
            let x = s.mul(z, &eps);
            let m = s.min_poly(&x, &eps);
            let d = m.degree().unwrap_or(0);
            if d <= 1 {
                next.push(eps);
                continue;
            }
            let roots = m.roots();
            if roots.len() < d {
                return Err(Error::NotSplit(format!(
                    "a central element has a minimal polynomial of degree {d} with only {} roots in {field}",
                    roots.len()
                )));
            }
            for (i, lambda) in roots.iter().enumerate() {
                let mut p = Poly::constant(field.one());
                for (j, mu) in roots.iter().enumerate() {
                    if i != j {
                        let scale = (lambda - mu).inv().expect("roots are distinct");
                        p = p.mul(&Poly::linear(mu)).mul(&Poly::constant(scale));
                    }
                }
                next.push(s.eval_poly(&p, &x, &eps));
            }
        }
        idems = next;
    }
    Ok(idems)
}

fn corner(s: &Algebra, g: &Vector, h: &Vector) -> Subspace {
    s.span((0..s.dim()).map(|i| s.mul3(g, &s.basis_vector(i), h)).collect())
}

/// Matrix units for the simple component `eps s`.
fn block_matrix_units(s: &Algebra, eps: &Vector) -> Result<MatrixUnitSystem> {
    let d = corner(s, eps, eps).dim();
    let n = (1..=d).find(|n| n * n >= d).unwrap_or(0);
    if n * n != d {
        return Err(Error::NotSplit(format!(
            "a simple component of dimension {d} is not a full matrix algebra over the field"
        )));
    }
    let mut primitive = Vec::with_capacity(n);
    let mut todo = VecDeque::from([eps.clone()]);
    while let Some(g) = todo.pop_front() {
        let c = corner(s, &g, &g);
        if c.dim() == 1 {
            primitive.push(g);
            continue;
        }
        let h = split_idempotent(s, &g, &c)?;
        let rest = &g - &h;
        todo.push_back(h);
        todo.push_back(rest);
    }
    if primitive.len() != n {
        return Err(Error::NotSplit(format!(
            "a simple component of dimension {d} splits into {} primitive idempotents instead of {n}",
            primitive.len()
        )));
    }
    let p1 = &primitive[0];
    let pivot = p1.support().next().map(|(i, _)| i).expect("idempotent is nonzero");
    let mut row = vec![p1.clone()];
    let mut col = vec![p1.clone()];
    for pj in &primitive[1..] {
        let y = corner(s, p1, pj).basis()[0].clone();
        let z = corner(s, pj, p1).basis()[0].clone();
        let yz = s.mul(&y, &z);
        let c = &yz[pivot] * &p1[pivot].inv().expect("pivot entry is nonzero");
        let cinv = c
            .inv()
            .ok_or_else(|| Error::NotSplit("matrix units could not be normalized".into()))?;
        row.push(y);
        col.push(z.scale(&cinv));
    }
    let mut units = Vec::with_capacity(n * n);
    for ci in &col {
        for rj in &row {
            units.push(s.mul(ci, rj));
        }
    }
    MatrixUnitSystem::new(n, units)
}

/// A proper nonzero idempotent below `g` inside its corner `c`.
fn split_idempotent(s: &Algebra, g: &Vector, c: &Subspace) -> Result<Vector> {
    let basis = c.basis();
    let mut candidates: Vec<Vector> = basis.to_vec();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            candidates.push(&basis[i] + &basis[j]);
            candidates.push(s.mul(&basis[i], &basis[j]));
        }
    }
    for z in &candidates {
        if let Some(h) = try_split(s, g, z, c) {
            return Ok(h);
        }
    }
    Err(Error::NotSplit(format!(
        "no proper idempotent found in a corner of dimension {} over {}",
        c.dim(),
        s.field()
    )))
}

fn try_split(s: &Algebra, g: &Vector, z: &Vector, c: &Subspace) -> Option<Vector> {
    let m = s.min_poly(z, g);
    if m.degree().unwrap_or(0) <= 1 {
        return None;
    }
    for lambda in m.roots() {
        let mut x = z.clone();
        x.axpy(&-&lambda, g);
        if let Some(h) = fitting_idempotent(s, g, &x) {
            return Some(h);
        }
        for y in c.basis() {
            if let Some(h) = fitting_idempotent(s, g, &s.mul(&x, y)) {
                return Some(h);
            }
        }
    }
    None
}

/// Idempotent projecting onto the non-nilpotent Fitting component of `x`
/// in the corner with identity `g`, when it is neither 0 nor `g`.
fn fitting_idempotent(s: &Algebra, g: &Vector, x: &Vector) -> Option<Vector> {
    let m = s.min_poly(x, g);
    let a = m.coeffs().iter().take_while(|c| c.is_zero()).count();
    if a == 0 {
        return None;
    }
    let field = s.field();
    let ta = Poly::monomial(field, a);
    let (h, _) = m.div_rem(&ta);
    if h.degree().unwrap_or(0) == 0 {
        return None;
    }
    let (_, u, _) = ta.ext_gcd(&h);
    let e = s.eval_poly(&u.mul(&ta), x, g);
    s.is_idempotent(&e).then_some(e)
}

/// Iterates `e <- 3e^2 - 2e^3` until `e` is idempotent.
pub(crate) fn lift_idempotent_raw(a: &Algebra, x: &Vector) -> Result<Vector> {
    let three = a.field().from_i64(3);
    let two = a.field().from_i64(2);
    let mut e = x.clone();
    for _ in 0..=2 * a.dim() + 8 {
        let e2 = a.mul(&e, &e);
        if e2 == e {
            return Ok(e);
        }
        let e3 = a.mul(&e2, &e);
        let mut next = e2.scale(&three);
        next.axpy(&-&two, &e3);
        e = next;
    }
    Err(Error::NotIdempotent("image modulo the radical"))
}

fn lift_blocks(a: &Algebra, q: &QuotientMap, bar_blocks: &[MatrixUnitSystem]) -> Result<Vec<MatrixUnitSystem>> {
    let mut acc = a.zero();
    let mut diagonals = Vec::with_capacity(bar_blocks.len());
    for b in bar_blocks {
        let mut diag = Vec::with_capacity(b.size());
        for i in 0..b.size() {
            let x = q.lift(b.unit(i, i));
            let ax = a.mul(&acc, &x);
            let xa = a.mul(&x, &acc);
            let axa = a.mul(&ax, &acc);
            let y = &(&(&x - &ax) - &xa) + &axa;
            let e = lift_idempotent_raw(a, &y)?;
            acc = &acc + &e;
            diag.push(e);
        }
        diagonals.push(diag);
    }
    let mut out = Vec::with_capacity(bar_blocks.len());
    for (b, diag) in bar_blocks.iter().zip(diagonals) {
        let n = b.size();
        let e1 = diag[0].clone();
        let mut row = vec![e1.clone()];
        let mut col = vec![e1.clone()];
        for j in 1..n {
            let y = a.mul3(&e1, &q.lift(b.unit(0, j)), &diag[j]);
            let z = a.mul3(&diag[j], &q.lift(b.unit(j, 0)), &e1);
            let nil = &a.mul(&y, &z) - &e1;
            let mut inv = e1.clone();
            let mut term = e1.clone();
            loop {
                term = -&a.mul(&term, &nil);
                if term.is_zero() {
                    break;
                }
                inv = &inv + &term;
            }
            row.push(y);
            col.push(a.mul(&z, &inv));
        }
        let mut units = Vec::with_capacity(n * n);
        for ci in &col {
            for rj in &row {
                units.push(a.mul(ci, rj));
            }
        }
        out.push(MatrixUnitSystem::new(n, units)?);
    }
    Ok(out)
}
