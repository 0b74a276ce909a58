//! Exact scalars: arbitrary-precision rationals or integers modulo a prime.
//!
//! A [`Scalar`] carries enough information to do arithmetic on its own; the
//! [`FieldSpec`] is needed only to manufacture constants (zero, one, small
//! integers) and to parse or validate input.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// The prime field `F_p`. Characteristics 2 and 3 are rejected.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p <= 3 {
            return Err(Error::InvalidField(format!(
                "characteristic {p} is not supported"
            )));
        }
        if p > u32::MAX as u64 {
            return Err(Error::InvalidField(format!("{p} exceeds the 32-bit modulus limit")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => Scalar::Modular {
                value: n.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::Prime(p) => {
                let m = BigInt::from(*p);
                let r = ((n % &m) + &m) % &m;
                Scalar::Modular {
                    value: r.to_u64().expect("reduced residue fits"),
                    modulus: *p,
                }
            }
        }
    }

    /// `num / den`; errors when `den` vanishes in this field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        let d = self.from_bigint(den);
        let inv = d
            .inv()
            .ok_or_else(|| Error::InvalidField(format!("denominator {den} vanishes")))?;
        Ok(&self.from_bigint(num) * &inv)
    }

    /// Parses `"3"`, `"-1/2"` and the like into this field.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::InvalidField(format!("cannot parse scalar `{s}`"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                self.from_ratio(&n, &d)
            }
            None => {
                let n = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(self.from_bigint(&n))
            }
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (FieldSpec::Rational, Scalar::Rational(_)) => true,
            (FieldSpec::Prime(p), Scalar::Modular { modulus, .. }) => p == modulus,
            _ => false,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::Rational);
        }
        let digits = s
            .strip_prefix('F')
            .ok_or_else(|| Error::InvalidField(format!("expected `Q` or `F<p>`, got `{s}`")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad prime in `{s}`")))?;
        FieldSpec::prime(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % m as u128) as u64;
        }
        base = ((base as u128 * base as u128) % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Modular { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: mod_pow(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Numerator and denominator of the canonical representative.
    pub fn to_ratio(&self) -> (BigInt, BigInt) {
        match self {
            Scalar::Rational(q) => (q.numer().clone(), q.denom().clone()),
            Scalar::Modular { value, .. } => (BigInt::from(*value), BigInt::one()),
        }
    }

    /// Bit-length style size measure, used to prefer small pivots.
    pub fn height(&self) -> u64 {
        match self {
            Scalar::Rational(q) => q.numer().bits() + q.denom().bits(),
            Scalar::Modular { .. } => 0,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_negative(),
            Scalar::Modular { .. } => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

fn mixed(a: &Scalar, b: &Scalar) -> ! {
    panic!("arithmetic across fields: {} and {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus: m }, Scalar::Modular { value: b, modulus: n })
                if m == n =>
            {
                Scalar::Modular {
                    value: (a + b) % m,
                    modulus: *m,
                }
            }
            _ => mixed(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Modular { value: a, modulus: m }, Scalar::Modular { value: b, modulus: n })
                if m == n =>
            {
                Scalar::Modular {
                    value: (a + m - b) % m,
                    modulus: *m,
                }
            }
            _ => mixed(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus: m }, Scalar::Modular { value: b, modulus: n })
                if m == n =>
            {
                Scalar::Modular {
                    value: ((*a as u128 * *b as u128) % *m as u128) as u64,
                    modulus: *m,
                }
            }
            _ => mixed(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a -= b,
            _ => *self = &*self - rhs,
        }
    }
}


impl serde::Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
