//! Exact coefficient types shared by the span, Burnside-ring and
//! representation code.
//!
//! [`Coefficient`] is the compile-time ring interface used by generic
//! containers ([`crate::burnside::SpanMorphism`], [`crate::linalg::Matrix`]).
//! [`ExactScalar`] together with a runtime [`CoeffRing`] descriptor carries
//! character values whose modulus is only known at run time.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, pow_mod};
use crate::error::{Error, Result};

pub type Rational = BigRational;

pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
}

/// A coefficient ring in which every nonzero element is invertible.
pub trait Field: Coefficient + Div<Output = Self> {}

impl Coefficient for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_i64(n: i64) -> Self {
        n
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
}

impl Coefficient for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Coefficient for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Field for BigRational {}

/// Residue modulo a compile-time prime `P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn inverse(self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(Fp(pow_mod(self.0, P - 2, P)))
        }
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in prime field")
    }
}

impl<const P: u64> Coefficient for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn from_i64(n: i64) -> Self {
        Fp::new(n)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> Field for Fp<P> {}

/// Runtime descriptor of a coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoeffRing {
    Rationals,
    PrimeField(u64),
    /// `Z/p^n`; only used as the target of integer trace values.
    PrimePower { p: u64, n: u32 },
}

impl CoeffRing {
    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(CoeffRing::PrimeField(p))
    }

    pub fn prime_power(p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::Precondition("exponent n must be positive".into()));
        }
        p.checked_pow(n)
            .filter(|m| *m <= u32::MAX as u64)
            .ok_or(Error::BoundExceeded { what: "modulus p^n", bound: u32::MAX as usize })?;
        if n == 1 {
            Ok(CoeffRing::PrimeField(p))
        } else {
            Ok(CoeffRing::PrimePower { p, n })
        }
    }

    /// `None` for the rationals.
    pub fn modulus(&self) -> Option<u64> {
        match *self {
            CoeffRing::Rationals => None,
            CoeffRing::PrimeField(p) => Some(p),
            CoeffRing::PrimePower { p, n } => Some(p.pow(n)),
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.modulus().unwrap_or(0)
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, CoeffRing::PrimePower { .. })
    }

    pub fn from_int(&self, n: i64) -> ExactScalar {
        match self.modulus() {
            None => ExactScalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Some(m) => ExactScalar::Residue { value: n.rem_euclid(m as i64) as u64, modulus: m },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> ExactScalar {
        match self.modulus() {
            None => ExactScalar::Rational(BigRational::from_integer(n.clone())),
            Some(m) => {
                let r = n.mod_floor(&BigInt::from(m));
                ExactScalar::Residue { value: r.to_u64().expect("residue fits"), modulus: m }
            }
        }
    }

    pub fn zero(&self) -> ExactScalar {
        self.from_int(0)
    }

    pub fn one(&self) -> ExactScalar {
        self.from_int(1)
    }

    /// Parses `Q`, `Fp:7` / `F7`, or `Z/9` / `Zpn:3^2`.
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("rationals") {
            return Ok(CoeffRing::Rationals);
        }
        let bad = || Error::Parse(format!("unrecognised coefficient ring '{s}'"));
        if let Some(rest) = t.strip_prefix("Fp:").or_else(|| t.strip_prefix('F')) {
            let p: u64 = rest.parse().map_err(|_| bad())?;
            return CoeffRing::prime_field(p);
        }
        if let Some(rest) = t.strip_prefix("Zpn:") {
            let (p, n) = rest.split_once('^').ok_or_else(bad)?;
            return CoeffRing::prime_power(p.parse().map_err(|_| bad())?, n.parse().map_err(|_| bad())?);
        }
        Err(bad())
    }
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRing::Rationals => write!(f, "Q"),
            CoeffRing::PrimeField(p) => write!(f, "F{p}"),
            CoeffRing::PrimePower { p, n } => write!(f, "Z/{p}^{n}"),
        }
    }
}

/// An exact scalar: a rational or a residue modulo `modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExactScalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl ExactScalar {
    pub fn is_zero(&self) -> bool {
        match self {
            ExactScalar::Rational(r) => Zero::is_zero(r),
            ExactScalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            ExactScalar::Rational(r) => One::is_one(r),
            ExactScalar::Residue { value, modulus } => *value == 1 % *modulus,
        }
    }

    fn combine(&self, other: &Self, op: fn(i128, i128) -> i128, rop: fn(&BigRational, &BigRational) -> BigRational) -> Self {
        match (self, other) {
            (ExactScalar::Rational(a), ExactScalar::Rational(b)) => ExactScalar::Rational(rop(a, b)),
            (ExactScalar::Residue { value: a, modulus: m }, ExactScalar::Residue { value: b, modulus: n }) if m == n => {
                let v = op(*a as i128, *b as i128).rem_euclid(*m as i128);
                ExactScalar::Residue { value: v as u64, modulus: *m }
            }
            _ => panic!("exact scalars from different coefficient rings"),
        }
    }

    /// Inverse of a unit, `None` otherwise.
    pub fn inverse(&self) -> Option<Self> {
        match self {
            ExactScalar::Rational(r) if !Zero::is_zero(r) => Some(ExactScalar::Rational(r.recip())),
            ExactScalar::Rational(_) => None,
            ExactScalar::Residue { value, modulus } => {
                let ext = (*value as i64).extended_gcd(&(*modulus as i64));
                (ext.gcd == 1).then(|| ExactScalar::Residue {
                    value: ext.x.rem_euclid(*modulus as i64) as u64,
                    modulus: *modulus,
                })
            }
        }
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: Self) -> Self {
        self.combine(&rhs, |a, b| a + b, |a, b| a + b)
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: Self) -> Self {
        self.combine(&rhs, |a, b| a - b, |a, b| a - b)
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: Self) -> Self {
        self.combine(&rhs, |a, b| a * b, |a, b| a * b)
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> Self {
        match self {
            ExactScalar::Rational(r) => ExactScalar::Rational(-r),
            ExactScalar::Residue { value, modulus } => ExactScalar::Residue { value: (modulus - value) % modulus, modulus },
        }
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Rational(r) => write!(f, "{}", format_rational(r)),
            ExactScalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

/// `p/q` in lowest terms, or just `p` for integers.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("invalid rational '{s}'"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if Zero::is_zero(&d) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// Sign of a nonzero rational as `+1` / `-1`.
pub fn rational_sign(r: &BigRational) -> i64 {
    if r.is_negative() {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_field_axioms_small() {
        type F7 = Fp<7>;
        for a in 0..7 {
            let x = F7::new(a);
            if a != 0 {
                assert_eq!(x * x.inverse().unwrap(), F7::one());
            }
            assert_eq!(x + (-x), F7::zero());
        }
        assert_eq!(F7::new(-1).value(), 6);
    }

    #[test]
    fn residue_arithmetic_and_units() {
        let ring = CoeffRing::prime_power(3, 2).unwrap();
        let a = ring.from_int(4);
        let b = ring.from_int(7);
        assert_eq!(a.clone() * b.clone(), ring.from_int(28));
        assert_eq!(ring.from_int(3).inverse(), None);
        assert_eq!(a.inverse().unwrap() * ring.from_int(4), ring.one());
    }

    #[test]
    fn parse_rings() {
        assert_eq!(CoeffRing::parse("Q").unwrap(), CoeffRing::Rationals);
        assert_eq!(CoeffRing::parse("Fp:7").unwrap(), CoeffRing::PrimeField(7));
        assert_eq!(CoeffRing::parse("Zpn:3^2").unwrap(), CoeffRing::PrimePower { p: 3, n: 2 });
        assert_eq!(CoeffRing::parse("Zpn:3^1").unwrap(), CoeffRing::PrimeField(3));
        assert!(matches!(CoeffRing::parse("Fp:8"), Err(Error::NotPrime(8))));
        assert!(CoeffRing::parse("R").is_err());
    }

    #[test]
    fn rational_round_trip() {
        let r = parse_rational("-6/4").unwrap();
        assert_eq!(format_rational(&r), "-3/2");
        assert_eq!(format_rational(&parse_rational("5").unwrap()), "5");
        assert!(parse_rational("1/0").is_err());
    }
}
