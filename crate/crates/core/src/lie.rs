//! The Lie algebra `A^(-)` of an associative algebra: derived series,
//! nil-radical and quasi-Levi decomposition.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{Matrix, Subspace, Vector};

/// `A^(k)`, with `A^(0) = A` and `A^(k) = [A^(k-1), A^(k-1)]`.
pub fn derived_member(a: &Algebra, k: usize) -> Subspace {
    let mut l = a.full();
    for _ in 0..k {
        let next = a.subspace_bracket(&l, &l);
        if next == l {
            break;
        }
        l = next;
    }
    l
}

/// `[A^(0), A^(1), ...]` up to and including the first repeated member.
pub fn derived_series(a: &Algebra) -> Vec<Subspace> {
    derived_series_of(a, &a.full())
}

fn derived_series_of(a: &Algebra, start: &Subspace) -> Vec<Subspace> {
    let mut out = vec![start.clone()];
    loop {
        let last = out.last().expect("nonempty");
        let next = a.subspace_bracket(last, last);
        if next == *last {
            return out;
        }
        out.push(next);
    }
}

/// The stable member `A^(inf)`.
pub fn derived_infinity(a: &Algebra) -> Subspace {
    derived_series(a).pop().expect("nonempty")
}

/// Image of `u` in `A/R`.
pub fn bar_image(a: &Algebra, u: &Subspace) -> Subspace {
    a.bar_quotient().project_subspace(u)
}

/// The Lie algebra `L = A^(k)` together with its nil-radical `N = R ∩ L`.
#[derive(Clone, Debug)]
pub struct LieView<'a> {
    algebra: &'a Algebra,
    k: usize,
    l: Subspace,
    n: Subspace,
}

impl<'a> LieView<'a> {
    pub fn new(algebra: &'a Algebra, k: usize) -> Self {
        let l = derived_member(algebra, k);
        let n = algebra.radical().intersect(&l).expect("same ambient");
        LieView { algebra, k, l, n }
    }

    pub fn algebra(&self) -> &'a Algebra {
        self.algebra
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Basis of `L = A^(k)`.
    pub fn l(&self) -> &Subspace {
        &self.l
    }

    pub fn nil_radical(&self) -> &Subspace {
        &self.n
    }

    /// `(Q, N)` with `Q = S^(k)` for the stored Levi subalgebra `S`.
    pub fn quasi_levi(&self) -> Result<(Subspace, Subspace)> {
        if self.k == 0 {
            return Err(Error::Precondition("quasi-Levi decomposition needs k >= 1".into()));
        }
        let levi = self.algebra.levi()?;
        let mut q = levi.semisimple().clone();
        for _ in 0..self.k {
            let next = self.algebra.subspace_bracket(&q, &q);
            if next == q {
                break;
            }
            q = next;
        }
        let meet = q.intersect(&self.n)?;
        if !meet.is_zero() || q.dim() + self.n.dim() != self.l.dim() || !q.is_subspace_of(&self.l) {
            return Err(Error::TheoremViolation {
                check: "L = Q + N is a direct sum".into(),
                detail: format!("dim Q = {}, dim N = {}, dim L = {}", q.dim(), self.n.dim(), self.l.dim()),
                repro: format!("{:?}", self.algebra),
            });
        }
        Ok((q, self.n.clone()))
    }
}

/// Whether `q` is perfect with `q / Z(q)` semisimple. In characteristic 0
/// this uses the Killing form; in characteristic `p` the answer is read off
/// the Levi blocks and is an error when `q` is not built from them.
pub fn is_quasi_semisimple(a: &Algebra, q: &Subspace) -> Result<bool> {
    let qq = a.subspace_bracket(q, q);
    if !qq.is_subspace_of(q) {
        return Err(Error::Precondition("subspace is not a Lie subalgebra".into()));
    }
    if qq != *q {
        return Ok(false);
    }
    match a.field() {
        FieldSpec::Rational => Ok(killing_nondegenerate_mod_center(a, q)),
        FieldSpec::Prime(p) => {
            let levi = a.levi()?;
            let mut pieces = Vec::new();
            for b in levi.blocks() {
                let s = a.span(b.units().to_vec());
                let sl = a.subspace_bracket(&s, &s);
                if !sl.is_zero() && sl.is_subspace_of(q) {
                    pieces.extend(sl.basis().iter().cloned());
                }
            }
            if a.span(pieces) == *q {
                Ok(true)
            } else {
                Err(Error::Precondition(format!(
                    "quasi-semisimplicity over F{p} is only decided for sums of sl blocks of the Levi data"
                )))
            }
        }
    }
}

fn killing_nondegenerate_mod_center(a: &Algebra, q: &Subspace) -> bool {
    let field = a.field();
    let m = q.dim();
    let coords = |v: &Vector| Vector::new(q.coordinates(v).expect("bracket stays in q"));
    // center of q inside coordinates of q
    let mut rows = Vec::new();
    for y in q.basis() {
        let cols: Vec<Vector> = q.basis().iter().map(|x| a.bracket(x, y)).collect();
        for k in 0..a.dim() {
            rows.push(Vector::new(cols.iter().map(|c| c[k].clone()).collect()));
        }
    }
    let z = crate::linalg::kernel(&Matrix::from_rows(field, m, rows).expect("rows have length m"));
    let comp = z.complement_indices();
    let r = comp.len();
    let ad: Vec<Matrix> = comp
        .iter()
        .map(|&i| {
            let cols: Vec<Vector> = comp
                .iter()
                .map(|&j| z.quotient_coords(&coords(&a.bracket(&q.basis()[i], &q.basis()[j]))))
                .collect();
            Matrix::from_columns(field, r, &cols).expect("columns have length r")
        })
        .collect();
    let mut rows = Vec::with_capacity(r);
    for x in &ad {
        let row = ad
            .iter()
            .map(|y| x.mul(y).expect("square matrices").trace())
            .collect();
        rows.push(Vector::new(row));
    }
    Matrix::from_rows(field, r, rows).expect("square").rank() == r
}
