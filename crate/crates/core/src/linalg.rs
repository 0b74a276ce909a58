//! Exact linear algebra: vectors, reduced row-echelon form, and subspaces
//! kept in canonical form so that equality of subspaces is equality of
//! basis lists.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Vector(coords)
    }

    pub fn zeros(field: FieldSpec, n: usize) -> Self {
        Vector(vec![field.zero(); n])
    }

    /// The `i`-th standard basis vector of `field^n`.
    pub fn unit(field: FieldSpec, n: usize, i: usize) -> Self {
        let mut v = Self::zeros(field, n);
        v.0[i] = field.one();
        v
    }

    pub fn from_i64(field: FieldSpec, coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    /// Indices and values of the nonzero coordinates.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Scalar, other: &Vector) {
        debug_assert_eq!(self.len(), other.len());
        if c.is_zero() {
            return;
        }
        for (x, y) in self.0.iter_mut().zip(other.0.iter()) {
            if !y.is_zero() {
                *x += &(c * y);
            }
        }
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: n,
                found: self.len(),
            })
        }
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Scalar {
        &mut self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.len(), rhs.len());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.len(), rhs.len());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Dense matrix stored as rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    cols: usize,
    rows: Vec<Vector>,
}

impl Matrix {
    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vector>) -> Result<Self> {
        for r in &rows {
            r.check_len(cols)?;
        }
        Ok(Matrix { field, cols, rows })
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: FieldSpec, nrows: usize, columns: &[Vector]) -> Result<Self> {
        for c in columns {
            c.check_len(nrows)?;
        }
        let rows = (0..nrows)
            .map(|i| Vector(columns.iter().map(|c| c[i].clone()).collect()))
            .collect();
        Ok(Matrix {
            field,
            cols: columns.len(),
            rows,
        })
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix {
            field,
            cols,
            rows: rows.iter().map(|r| Vector::from_i64(field, r)).collect(),
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        Matrix {
            field,
            cols: n,
            rows: (0..n).map(|i| Vector::unit(field, n, i)).collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.rows[i][j]
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        v.check_len(self.cols)?;
        Ok(Vector(
            self.rows
                .iter()
                .map(|r| {
                    let mut acc = self.field.zero();
                    for (a, b) in r.iter().zip(v.iter()) {
                        if !a.is_zero() && !b.is_zero() {
                            acc += &(a * b);
                        }
                    }
                    acc
                })
                .collect(),
        ))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.nrows() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.nrows(),
            });
        }
        let mut rows = Vec::with_capacity(self.nrows());
        for r in &self.rows {
            let mut out = Vector::zeros(self.field, other.cols);
            for (k, a) in r.support() {
                out.axpy(a, &other.rows[k]);
            }
            rows.push(out);
        }
        Ok(Matrix {
            field: self.field,
            cols: other.cols,
            rows,
        })
    }

    pub fn rank(&self) -> usize {
        rref(self.cols, self.rows.clone()).1.len()
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.nrows();
        if n != self.cols {
            return None;
        }
        if n == 0 {
            return Some(self.clone());
        }
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut c = r.0.clone();
                c.extend(Vector::unit(self.field, n, i).0);
                Vector(c)
            })
            .collect();
        let (reduced, pivots) = rref(2 * n, rows);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let rows = reduced
            .into_iter()
            .map(|r| Vector(r.0[n..].to_vec()))
            .collect();
        Some(Matrix {
            field: self.field,
            cols: n,
            rows,
        })
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = self.field.zero();
        for i in 0..self.nrows().min(self.cols) {
            acc += &self.rows[i][i];
        }
        acc
    }

    pub fn determinant(&self) -> Scalar {
        let n = self.nrows();
        assert_eq!(n, self.cols, "determinant of a non-square matrix");
        let mut m: Vec<Vec<Scalar>> = self.rows.iter().map(|r| r.0.clone()).collect();
        let mut det = self.field.one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return self.field.zero();
            };
            if p != col {
                m.swap(p, col);
                det = -det;
            }
            det = &det * &m[col][col];
            let inv = m[col][col].inv().expect("nonzero pivot");
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] * &inv;
                for c in col..n {
                    let d = &factor * &m[col][c];
                    m[r][c] -= &d;
                }
            }
        }
        det
    }
}

/// Reduced row-echelon form of `rows` (each of length `ncols`).
///
/// Returns the nonzero reduced rows and their pivot columns, which are
/// strictly increasing. Pivots are normalized to one.
pub fn rref(ncols: usize, mut rows: Vec<Vector>) -> (Vec<Vector>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        // prefer the shortest entry to keep rational growth in check
        let Some(p) = (r..rows.len())
            .filter(|&i| !rows[i][col].is_zero())
            .min_by_key(|&i| rows[i][col].height())
        else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        if !inv.is_one() {
            rows[r] = rows[r].scale(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let c = -&row[col];
                row.axpy(&c, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Null space of `m` as a subspace of `field^ncols`.
pub fn kernel(m: &Matrix) -> Subspace {
    let n = m.ncols();
    let (rows, pivots) = rref(n, m.rows().to_vec());
    let mut basis = Vec::new();
    let mut pi = 0;
    for free in 0..n {
        if pi < pivots.len() && pivots[pi] == free {
            pi += 1;
            continue;
        }
        let mut v = Vector::zeros(m.field(), n);
        v[free] = m.field().one();
        for (row, &pc) in rows.iter().zip(&pivots) {
            if !row[free].is_zero() {
                v[pc] = -&row[free];
            }
        }
        basis.push(v);
    }
    Subspace::canonical(m.field(), n, basis)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    /// The solution with every free variable set to zero.
    pub particular: Vector,
    pub kernel: Subspace,
}

/// Solves `m x = b`; `None` when inconsistent.
pub fn solve(m: &Matrix, b: &Vector) -> Result<Option<Solution>> {
    b.check_len(m.nrows())?;
    let n = m.ncols();
    let field = m.field();
    let rows = m
        .rows()
        .iter()
        .zip(b.iter())
        .map(|(r, bi)| {
            let mut c = r.coords().to_vec();
            c.push(bi.clone());
            Vector(c)
        })
        .collect();
    let (reduced, pivots) = rref(n + 1, rows);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut particular = Vector::zeros(field, n);
    for (row, &pc) in reduced.iter().zip(&pivots) {
        particular[pc] = row[n].clone();
    }
    Ok(Some(Solution {
        particular,
        kernel: kernel(m),
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineMode {
    Sum,
    Intersect,
}

/// A coordinate subspace of `field^ambient` with its canonical basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub(crate) fn canonical(field: FieldSpec, ambient: usize, vectors: Vec<Vector>) -> Self {
        let (basis, pivots) = rref(ambient, vectors);
        Subspace {
            field,
            ambient,
            basis,
            pivots,
        }
    }

    /// Canonical basis of the span of `vectors`.
    pub fn span(field: FieldSpec, ambient: usize, vectors: Vec<Vector>) -> Result<Self> {
        for v in &vectors {
            v.check_len(ambient)?;
        }
        Ok(Self::canonical(field, ambient, vectors))
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: (0..ambient).map(|i| Vector::unit(field, ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_same(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// Remainder of `v` after elimination against the basis; zero exactly
    /// at the pivot columns.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut r = v.clone();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if !r[pc].is_zero() {
                let c = -&r[pc];
                r.axpy(&c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &Vector) -> bool {
        v.len() == self.ambient && self.reduce(v).is_zero()
    }

    pub fn membership(&self, v: &Vector) -> Result<bool> {
        v.check_len(self.ambient)?;
        Ok(self.reduce(v).is_zero())
    }

    /// Coefficients of `v` in the canonical basis, when `v` lies in the span.
    pub fn coordinates(&self, v: &Vector) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Non-pivot columns: the standard basis vectors at these indices span
    /// the canonical coordinate complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.dim());
        let mut pi = 0;
        for c in 0..self.ambient {
            if pi < self.pivots.len() && self.pivots[pi] == c {
                pi += 1;
            } else {
                out.push(c);
            }
        }
        out
    }

    /// Coordinates of `v + self` in the quotient, relative to the canonical
    /// complement.
    pub fn quotient_coords(&self, v: &Vector) -> Vector {
        let r = self.reduce(v);
        Vector(self.complement_indices().into_iter().map(|c| r[c].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Ok(Self::canonical(self.field, self.ambient, vs))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        // kernel of [U | -V]; the U-half of each kernel vector gives an
        // element of the intersection
        let mut cols: Vec<Vector> = self.basis.clone();
        cols.extend(other.basis.iter().map(|v| -v));
        let m = Matrix::from_columns(self.field, self.ambient, &cols)?;
        let ker = kernel(&m);
        let vs = ker
            .basis()
            .iter()
            .map(|k| {
                let mut acc = Vector::zeros(self.field, self.ambient);
                for (i, u) in self.basis.iter().enumerate() {
                    acc.axpy(&k[i], u);
                }
                acc
            })
            .collect();
        Ok(Self::canonical(self.field, self.ambient, vs))
    }

    pub fn combine(&self, other: &Subspace, mode: CombineMode) -> Result<Subspace> {
        match mode {
            CombineMode::Sum => self.sum(other),
            CombineMode::Intersect => self.intersect(other),
        }
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    /// Image of the subspace under a linear map given as a function.
    pub fn map<F>(&self, target_dim: usize, f: F) -> Result<Subspace>
    where
        F: Fn(&Vector) -> Vector,
    {
        Subspace::span(self.field, target_dim, self.basis.iter().map(f).collect())
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, v) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Expresses vectors in a fixed (not necessarily echelon) basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisCoords {
    span: Subspace,
    // row r expresses canonical basis row r in terms of the original basis
    transform: Vec<Vector>,
    len: usize,
}

impl BasisCoords {
    /// Fails with `Precondition` when `basis` is linearly dependent.
    pub fn new(field: FieldSpec, ambient: usize, basis: &[Vector]) -> Result<Self> {
        let m = basis.len();
        let mut rows = Vec::with_capacity(m);
        for (i, b) in basis.iter().enumerate() {
            b.check_len(ambient)?;
            let mut c = b.coords().to_vec();
            c.extend(Vector::unit(field, m, i).0);
            rows.push(Vector(c));
        }
        let (reduced, pivots) = rref(ambient + m, rows);
        if pivots.len() < m || pivots.last().is_some_and(|&p| p >= ambient) {
            return Err(Error::Precondition("basis is linearly dependent".into()));
        }
        let (echelon, transform): (Vec<_>, Vec<_>) = reduced
            .into_iter()
            .map(|r| {
                let (a, b) = r.0.split_at(ambient);
                (Vector(a.to_vec()), Vector(b.to_vec()))
            })
            .unzip();
        Ok(BasisCoords {
            span: Subspace {
                field,
                ambient,
                basis: echelon,
                pivots,
            },
            transform,
            len: m,
        })
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    /// Coefficients of `v` in the original basis, when `v` lies in the span.
    pub fn coords(&self, v: &Vector) -> Option<Vector> {
        if !self.span.contains(v) {
            return None;
        }
        let mut out = Vector::zeros(self.span.field, self.len);
        for (t, &p) in self.transform.iter().zip(&self.span.pivots) {
            out.axpy(&v[p], t);
        }
        Some(out)
    }
}

/// Canonical basis of the span of `vectors` in `field^ambient`.
pub fn canonicalize(field: FieldSpec, ambient: usize, vectors: Vec<Vector>) -> Result<Subspace> {
    Subspace::span(field, ambient, vectors)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rational;

    fn v(c: &[i64]) -> Vector {
        Vector::from_i64(Q, c)
    }

    #[test]
    fn canonicalize_examples() {
        let s = canonicalize(Q, 2, vec![v(&[1, 1]), v(&[0, 1])]).unwrap();
        assert_eq!(s.basis(), &[v(&[1, 0]), v(&[0, 1])]);
        let z = canonicalize(Q, 3, vec![]).unwrap();
        assert_eq!(z.dim(), 0);
        let s = canonicalize(Q, 2, vec![v(&[2, 4])]).unwrap();
        assert_eq!(s.basis(), &[v(&[1, 2])]);
        assert!(canonicalize(Q, 2, vec![v(&[1, 2, 3])]).is_err());
    }

    #[test]
    fn combine_examples() {
        let x = canonicalize(Q, 2, vec![v(&[1, 0])]).unwrap();
        let y = canonicalize(Q, 2, vec![v(&[0, 1])]).unwrap();
        assert!(x.sum(&y).unwrap().is_full());
        assert!(x.intersect(&y).unwrap().is_zero());
        assert_eq!(x.sum(&x).unwrap(), x);
        assert_eq!(x.intersect(&x).unwrap(), x);

        let u = canonicalize(Q, 3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let w = canonicalize(Q, 3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        let i = u.combine(&w, CombineMode::Intersect).unwrap();
        assert_eq!(i.basis(), &[v(&[0, 1, 0])]);
        assert!(u.intersect(&x).is_err());
    }

    #[test]
    fn membership_examples() {
        let u = canonicalize(Q, 2, vec![v(&[1, 0])]).unwrap();
        assert!(u.membership(&v(&[0, 0])).unwrap());
        assert!(!u.membership(&v(&[1, 1])).unwrap());
        assert!(u.membership(&v(&[1, 1, 1])).is_err());
    }

    #[test]
    fn solve_rank_deficient_system() {
        let m = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        let s = solve(&m, &v(&[1, 2])).unwrap().unwrap();
        assert_eq!(s.particular, v(&[1, 0]));
        assert_eq!(s.kernel, canonicalize(Q, 2, vec![v(&[-2, 1])]).unwrap());
        assert!(solve(&m, &v(&[1, 3])).unwrap().is_none());
    }

    #[test]
    fn inverse_and_determinant() {
        let m = Matrix::from_i64(Q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(Q, 2));
        assert_eq!(m.determinant(), Q.one());
        assert!(Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn basis_coords_recover_coefficients() {
        let basis = vec![v(&[1, 1, 0]), v(&[0, 1, 1])];
        let bc = BasisCoords::new(Q, 3, &basis).unwrap();
        assert_eq!(bc.coords(&v(&[2, 5, 3])).unwrap(), v(&[2, 3]));
        assert!(bc.coords(&v(&[1, 0, 0])).is_none());
        assert!(BasisCoords::new(Q, 3, &[v(&[1, 0, 0]), v(&[2, 0, 0])]).is_err());
    }

    #[test]
    fn modular_kernel() {
        let f = FieldSpec::prime(5).unwrap();
        let m = Matrix::from_i64(f, &[&[1, 2], &[3, 1]]);
        // det = 1 - 6 = -5 = 0 mod 5
        assert_eq!(kernel(&m).dim(), 1);
    }
}
