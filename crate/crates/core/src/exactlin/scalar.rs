//! Exact ground-field elements.
//!
//! Two fields are supported: the rationals (arbitrary precision, always in
//! lowest terms with a positive denominator) and prime fields `F_p` with
//! residues kept in `[0, p)`.
//!
//! Zero is field-agnostic: `Scalar::zero()` is a rational zero that adds and
//! multiplies correctly against residues. Any other constant that must live
//! in a particular field has to be produced by [`Field`]; a rational operand
//! meeting a residue is reduced mod `p`, which panics if its denominator is
//! divisible by `p`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Prime field `F_p`; `p` must be a prime below 2^32 so products fit in `u64`.
    pub fn prime(p: u64) -> Result<Field> {
        if !(2..1 << 32).contains(&p) || !is_prime(p) {
            return Err(Error::Parse(format!("{p} is not a supported prime modulus")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Mod {
                value: n.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
        }
    }

    /// `num / den` in this field; fails when `den` vanishes in the field.
    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.from_int(den);
        let inv = d
            .inverse()
            .ok_or_else(|| Error::Parse(format!("denominator {den} is zero in {self}")))?;
        Ok(&self.from_int(num) * &inv)
    }

    /// Parses `"p/q"`, `"p"` (rationals) or a decimal residue (prime fields).
    /// A prime field also accepts `"p/q"` when `q` is invertible.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num = BigInt::from_str(num).map_err(|_| Error::Parse(format!("bad scalar {text:?}")))?;
        let den = BigInt::from_str(den).map_err(|_| Error::Parse(format!("bad scalar {text:?}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        let value = BigRational::new(num, den);
        match self {
            Field::Rational => Ok(Scalar::Rat(value)),
            Field::Prime(p) => rational_mod(&value, *p)
                .map(|value| Scalar::Mod { value, modulus: *p })
                .ok_or_else(|| Error::Parse(format!("{text:?} has no image in F_{p}"))),
        }
    }

    /// True when `s` is a well-formed element of this field.
    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rational, Scalar::Rat(_)) => true,
            (Field::Prime(p), Scalar::Mod { value, modulus }) => modulus == p && value < p,
            (Field::Prime(_), Scalar::Rat(r)) => r.is_zero(),
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        match s.trim() {
            "q" | "Q" => Ok(Field::Rational),
            other => {
                let p = other
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown field {other:?}")))?;
                Field::prime(p)
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn rational_mod(r: &BigRational, p: u64) -> Option<u64> {
    let den = bigint_mod(r.denom(), p);
    if den == 0 {
        return None;
    }
    let num = bigint_mod(r.numer(), p);
    Some(num * pow_mod(den, p - 2, p) % p)
}

/// An exact field element.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Mod { value: u64, modulus: u64 },
}

impl Scalar {
    /// Field-agnostic zero.
    pub fn zero() -> Scalar {
        Scalar::Rat(BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    /// The multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Field this scalar belongs to; a rational zero reports `Rational`.
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    fn reduce(r: &BigRational, p: u64) -> u64 {
        rational_mod(r, p).unwrap_or_else(|| panic!("rational {r} has no image in F_{p}"))
    }

    fn combine(
        &self,
        other: &Scalar,
        rat: impl Fn(&BigRational, &BigRational) -> BigRational,
        modular: impl Fn(u64, u64, u64) -> u64,
    ) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(rat(a, b)),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed prime fields F_{p} and F_{q}");
                Scalar::Mod { value: modular(*a, *b, *p), modulus: *p }
            }
            (Scalar::Rat(a), Scalar::Mod { value: b, modulus: p }) => Scalar::Mod {
                value: modular(Self::reduce(a, *p), *b, *p),
                modulus: *p,
            },
            (Scalar::Mod { value: a, modulus: p }, Scalar::Rat(b)) => Scalar::Mod {
                value: modular(*a, Self::reduce(b, *p), *p),
                modulus: *p,
            },
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            _ => (self - other).is_zero(),
        }
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Scalar::Rat(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.combine(rhs, |a, b| a + b, |a, b, p| (a + b) % p)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.combine(rhs, |a, b| a - b, |a, b, p| (a + p - b) % p)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.combine(rhs, |a, b| a * b, |a, b, p| a * b % p)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Mod { value, modulus } => Scalar::Mod {
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
        if rhs.is_zero() {
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self - rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_normalise() {
        let q = Field::Rational;
        let x = q.parse_scalar("4/-6").unwrap();
        assert_eq!(x.to_string(), "-2/3");
        assert_eq!(q.parse_scalar("6/3").unwrap().to_string(), "2");
        assert!(q.parse_scalar("1/0").is_err());
        assert!(q.parse_scalar("abc").is_err());
    }

    #[test]
    fn residues_stay_reduced() {
        let f = Field::prime(7).unwrap();
        let x = f.from_int(-1);
        assert_eq!(x.to_string(), "6");
        let half = f.ratio(1, 2).unwrap();
        assert_eq!(half.to_string(), "4");
        assert!(f.contains(&(&half * &x)));
        assert!(f.ratio(1, 7).is_err());
        assert_eq!(f.parse_scalar("1/2").unwrap(), half);
    }

    #[test]
    fn zero_is_field_agnostic() {
        let f = Field::prime(5).unwrap();
        let z = Scalar::zero();
        let three = f.from_int(3);
        assert_eq!(&z + &three, three);
        assert!((&z * &three).is_zero());
        assert_eq!(z, f.zero());
    }

    #[test]
    fn rejects_composite_moduli() {
        assert!(Field::prime(9).is_err());
        assert!("fp:11".parse::<Field>().is_ok());
        assert!("fp:12".parse::<Field>().is_err());
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rational);
    }

    #[test]
    fn inverse_roundtrip() {
        let f = Field::prime(101).unwrap();
        for n in 1..101 {
            let x = f.from_int(n);
            assert!((&x * &x.inverse().unwrap()).is_one());
        }
    }
}
