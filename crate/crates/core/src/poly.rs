//! Univariate polynomials over a [`FieldSpec`], with root finding in the
//! base field. Coefficients are stored lowest degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: FieldSpec) -> Self {
        Poly::new(field, Vec::new())
    }

    pub fn constant(c: Scalar) -> Self {
        let field = c.field();
        Poly::new(field, vec![c])
    }

    /// `t - root`.
    pub fn linear(root: &Scalar) -> Self {
        let field = root.field();
        Poly::new(field, vec![-root, field.one()])
    }

    pub fn monomial(field: FieldSpec, degree: usize) -> Self {
        let mut c = vec![field.zero(); degree + 1];
        c[degree] = field.one();
        Poly::new(field, c)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> &Scalar {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().inv().expect("nonzero lead");
        Poly::new(self.field, self.coeffs.iter().map(|c| c * &inv).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        Poly::new(
            self.field,
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z)
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        Poly::new(
            self.field,
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z)
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.coeffs.len() - 1;
        let inv = divisor.lead().inv().expect("nonzero lead");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(self.field), self.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &(&c * d);
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g` and `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::constant(f.one()), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::constant(f.one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = Poly::constant(r0.lead().inv().expect("nonzero lead"));
        (r0.mul(&inv), s0.mul(&inv), t0.mul(&inv))
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    fn pow_mod(&self, mut exp: BigInt, modulus: &Poly) -> Poly {
        let mut base = self.div_rem(modulus).1;
        let mut acc = Poly::constant(self.field.one()).div_rem(modulus).1;
        let two = BigInt::from(2);
        while exp.is_positive() {
            if exp.is_odd() {
                acc = acc.mul(&base).div_rem(modulus).1;
            }
            base = base.mul(&base).div_rem(modulus).1;
            exp = exp / &two;
        }
        acc
    }

    /// Distinct roots lying in the base field, in increasing order.
    pub fn roots(&self) -> Vec<Scalar> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut roots = match self.field {
            FieldSpec::Rational => self.rational_roots(),
            FieldSpec::Prime(p) => self.modular_roots(p),
        };
        roots.sort_by(|a, b| match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => x.cmp(y),
            (Scalar::Modular { value: x, .. }, Scalar::Modular { value: y, .. }) => x.cmp(y),
            _ => std::cmp::Ordering::Equal,
        });
        roots.dedup();
        roots
    }

    fn rational_roots(&self) -> Vec<Scalar> {
        // integer polynomial with the same roots
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(&c.to_ratio().1);
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| {
                let (n, d) = c.to_ratio();
                n * (&lcm / d)
            })
            .collect();
        let mut out = Vec::new();
        let zeros = ints.iter().take_while(|c| c.is_zero()).count();
        if zeros > 0 {
            out.push(FieldSpec::Rational.zero());
        }
        let ints = &ints[zeros..];
        if ints.len() < 2 {
            return out;
        }
        let a0 = ints[0].abs();
        let an = ints[ints.len() - 1].abs();
        let num_divs = divisors(&a0);
        let den_divs = divisors(&an);
        let reduced = Poly::new(
            FieldSpec::Rational,
            ints.iter().map(|c| FieldSpec::Rational.from_bigint(c)).collect(),
        );
        for n in &num_divs {
            for d in &den_divs {
                if !n.gcd(d).is_one() {
                    continue;
                }
                for sign in [1i64, -1] {
                    let cand = FieldSpec::Rational
                        .from_ratio(&(n * BigInt::from(sign)), d)
                        .expect("nonzero divisor");
                    if reduced.eval(&cand).is_zero() {
                        out.push(cand);
                    }
                }
            }
        }
        out
    }

    fn modular_roots(&self, p: u64) -> Vec<Scalar> {
        let field = self.field;
        if p <= 200_000 {
            return (0..p as i64)
                .map(|x| field.from_i64(x))
                .filter(|x| self.eval(x).is_zero())
                .collect();
        }
        // product of the distinct linear factors: gcd(f, t^p - t)
        let t = Poly::monomial(field, 1);
        let tp = t.pow_mod(BigInt::from(p), self);
        let g = self.gcd(&tp.sub(&t));
        let mut out = Vec::new();
        split_linear_factors(&g, p, 1, &mut out);
        out
    }
}

/// Equal-degree splitting of a product of distinct linear factors.
fn split_linear_factors(g: &Poly, p: u64, mut shift: i64, out: &mut Vec<Scalar>) {
    let field = g.field;
    match g.degree() {
        None | Some(0) => {}
        Some(1) => {
            let m = g.monic();
            out.push(-&m.coeffs[0]);
        }
        Some(_) => loop {
            let h = Poly::new(field, vec![field.from_i64(shift), field.one()]);
            shift += 1;
            let w = h.pow_mod(BigInt::from((p - 1) / 2), g);
            let d = g.gcd(&w.sub(&Poly::constant(field.one())));
            let dd = d.degree().unwrap_or(0);
            if dd > 0 && dd < g.degree().unwrap() {
                let (q, _) = g.div_rem(&d);
                split_linear_factors(&d, p, shift, out);
                split_linear_factors(&q, p, shift, out);
                return;
            }
        },
    }
}

/// Positive divisors of `n` (with `0` treated as having divisor set {1}).
/// Trial division runs up to 10^6; a remaining cofactor is treated as prime.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = 2u64;
    while d <= 1_000_000 {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            break;
        }
        let mut e = 0;
        while (&n % &bd).is_zero() {
            n /= &bd;
            e += 1;
        }
        if e > 0 {
            factors.push((bd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        factors.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (pr, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for dv in &divs {
            let mut pw = BigInt::one();
            for _ in 0..=e {
                next.push(dv * &pw);
                pw *= &pr;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(f: FieldSpec, c: &[i64]) -> Poly {
        Poly::new(f, c.iter().map(|&x| f.from_i64(x)).collect())
    }

    #[test]
    fn rational_roots_of_split_polynomial() {
        let q = FieldSpec::Rational;
        // (2t - 1)(t + 3) t = 2t^3 + 5t^2 - 3t
        let p = poly(q, &[0, -3, 5, 2]);
        let r: Vec<String> = p.roots().iter().map(|x| x.to_string()).collect();
        assert_eq!(r, vec!["-3", "0", "1/2"]);
        // t^2 + 1 has no rational roots
        assert!(poly(q, &[1, 0, 1]).roots().is_empty());
    }

    #[test]
    fn modular_roots_small_and_large_prime() {
        let f = FieldSpec::prime(7).unwrap();
        // t^2 - 2 = (t - 3)(t - 4) mod 7
        let r = poly(f, &[-2, 0, 1]).roots();
        assert_eq!(r, vec![f.from_i64(3), f.from_i64(4)]);

        let big = FieldSpec::prime(1_000_003).unwrap();
        let p = poly(big, &[-6, 11, -6, 1]); // (t-1)(t-2)(t-3)
        let mut r: Vec<u64> = p
            .roots()
            .iter()
            .map(|x| x.to_string().parse().unwrap())
            .collect();
        r.sort();
        assert_eq!(r, vec![1, 2, 3]);
    }

    #[test]
    fn ext_gcd_bezout() {
        let q = FieldSpec::Rational;
        let a = poly(q, &[0, 0, 1]); // t^2
        let b = poly(q, &[1, 1]); // t + 1
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, poly(q, &[1]));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }
}
