//! Weierstrass curves over small finite fields: exhaustive point counts,
//! Frobenius traces, extension counts and the mod-`pⁿ` obstruction data.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::arith::{is_prime, next_prime_after, valuation};
use crate::error::{Error, Result};

pub const PRIME_FIELD_BOUND: u64 = 1_000_000;
pub const BINARY_DEGREE_BOUND: u32 = 16;
pub const ENUMERATION_BOUND: u64 = 50;
/// Largest binary field whose curves [`enumerate_curves`] collects into memory.
pub const BINARY_ENUMERATION_BOUND: u64 = 16;
pub const NAIVE_COUNT_BOUND: u64 = 4096;
pub const EXTENSION_DEGREE_BOUND: u32 = 30;

/// `F_ℓ` for a prime `ℓ`, or `F_2[t]/(m(t))` for an irreducible `m` of degree `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FiniteField {
    Prime(u64),
    /// `modulus` holds the coefficients of `m`, bit `i` for `t^i`.
    Binary { degree: u32, modulus: u32 },
}

fn poly_degree(p: u32) -> u32 {
    31 - p.leading_zeros()
}

fn poly_rem(mut a: u32, b: u32) -> u32 {
    let db = poly_degree(b);
    while a != 0 && poly_degree(a) >= db {
        a ^= b << (poly_degree(a) - db);
    }
    a
}

/// No factor of degree `1..=d/2` over `F_2`.
pub fn is_irreducible_binary(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let d = poly_degree(p);
    (1..=d / 2).all(|k| ((1u32 << k)..(1u32 << (k + 1))).all(|g| poly_rem(p, g) != 0))
}

/// The irreducible polynomial of degree `d` with the smallest bit encoding.
pub fn default_binary_modulus(d: u32) -> Result<u32> {
    if d == 0 || d > BINARY_DEGREE_BOUND {
        return Err(Error::InvalidField(format!("binary extension degree must lie in 1..={BINARY_DEGREE_BOUND}")));
    }
    ((1u32 << d)..(1u32 << (d + 1)))
        .find(|&p| is_irreducible_binary(p))
        .ok_or_else(|| Error::InvalidField(format!("no irreducible polynomial of degree {d}")))
}

fn format_poly(p: u32, var: char) -> String {
    let mut terms = Vec::new();
    for i in (0..=poly_degree(p.max(1))).rev() {
        if p >> i & 1 == 1 {
            terms.push(match i {
                0 => "1".to_string(),
                1 => var.to_string(),
                i => format!("{var}{i}"),
            });
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// Parses `x3+x+1` or `x^3+x+1`.
fn parse_poly(s: &str) -> Result<u32> {
    let bad = || Error::Parse(format!("invalid polynomial '{s}'"));
    let mut p = 0u32;
    for term in s.split('+').map(str::trim) {
        let e: u32 = match term {
            "1" => 0,
            "x" => 1,
            t => t.strip_prefix('x').map(|r| r.trim_start_matches('^')).ok_or_else(bad)?.parse().map_err(|_| bad())?,
        };
        if e > BINARY_DEGREE_BOUND {
            return Err(bad());
        }
        p ^= 1 << e;
    }
    Ok(p)
}

impl FiniteField {
    pub fn prime(l: u64) -> Result<Self> {
        if !is_prime(l) {
            return Err(Error::InvalidField(format!("{l} is not prime")));
        }
        if l > PRIME_FIELD_BOUND {
            return Err(Error::FieldTooLarge { size: l, bound: PRIME_FIELD_BOUND });
        }
        Ok(FiniteField::Prime(l))
    }

    pub fn binary(degree: u32, modulus: u32) -> Result<Self> {
        if degree == 0 || degree > BINARY_DEGREE_BOUND {
            return Err(Error::FieldTooLarge { size: 1u64 << degree.min(63), bound: 1 << BINARY_DEGREE_BOUND });
        }
        if poly_degree(modulus.max(1)) != degree || !is_irreducible_binary(modulus) {
            return Err(Error::InvalidField(format!("{} is not an irreducible polynomial of degree {degree}", format_poly(modulus, 'x'))));
        }
        Ok(FiniteField::Binary { degree, modulus })
    }

    pub fn binary_default(degree: u32) -> Result<Self> {
        Self::binary(degree, default_binary_modulus(degree)?)
    }

    /// Parses `5`, `8`, `2^3` or `2^3:poly=x3+x+1`.
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("invalid field '{s}'"));
        let (size, poly) = match t.split_once(':') {
            Some((size, rest)) => (size.to_string(), Some(rest.strip_prefix("poly=").ok_or_else(bad)?.to_string())),
            None => (t.clone(), None),
        };
        let degree = if let Some(d) = size.strip_prefix("2^") {
            Some(d.parse::<u32>().map_err(|_| bad())?)
        } else {
            let n: u64 = size.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(Error::InvalidField("field size must be positive".into()));
            }
            (n.is_power_of_two() && n > 2).then(|| n.trailing_zeros())
        };
        match (degree, poly) {
            (Some(d), Some(p)) => Self::binary(d, parse_poly(&p)?),
            (Some(d), None) => Self::binary_default(d),
            (None, None) => {
                let n: u64 = size.parse().map_err(|_| bad())?;
                if !is_prime(n) {
                    return Err(Error::InvalidField(format!("unsupported field size {n}: only primes and powers of 2")));
                }
                Self::prime(n)
            }
            (None, Some(_)) => Err(Error::InvalidField("a modulus polynomial needs a size of the form 2^d".into())),
        }
    }

    pub fn size(&self) -> u64 {
        match *self {
            FiniteField::Prime(l) => l,
            FiniteField::Binary { degree, .. } => 1 << degree,
        }
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            FiniteField::Prime(l) => l,
            FiniteField::Binary { .. } => 2,
        }
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> u32 {
        match *self {
            FiniteField::Prime(_) => 1,
            FiniteField::Binary { degree, .. } => degree,
        }
    }

    /// Image of an integer under `Z → F`.
    pub fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.characteristic() as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        match *self {
            FiniteField::Prime(l) => (a + b) % l,
            FiniteField::Binary { .. } => a ^ b,
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        match *self {
            FiniteField::Prime(l) => (l - a) % l,
            FiniteField::Binary { .. } => a,
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match *self {
            FiniteField::Prime(l) => a * b % l,
            FiniteField::Binary { modulus, .. } => {
                let mut acc = 0u64;
                for i in 0..32 {
                    if b >> i & 1 == 1 {
                        acc ^= a << i;
                    }
                }
                let m = modulus as u64;
                let dm = 63 - m.leading_zeros();
                while acc != 0 && 63 - acc.leading_zeros() >= dm {
                    acc ^= m << (63 - acc.leading_zeros() - dm);
                }
                acc
            }
        }
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.size().max(2);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        (a != 0).then(|| self.pow(a, self.size() - 2))
    }

    /// Absolute trace to `F_2` of a binary-field element.
    pub fn trace_to_f2(&self, c: u64) -> u64 {
        let mut t = 0;
        let mut x = c;
        for _ in 0..self.degree() {
            t = self.add(t, x);
            x = self.mul(x, x);
        }
        t
    }

    /// Renders an element: a residue, or a polynomial in `t`.
    pub fn format_element(&self, a: u64) -> String {
        match *self {
            FiniteField::Prime(_) => a.to_string(),
            FiniteField::Binary { .. } => format_poly(a as u32, 't'),
        }
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FiniteField::Prime(l) => write!(f, "F{l}"),
            FiniteField::Binary { degree, modulus } => write!(f, "F2^{degree}[{}]", format_poly(modulus, 'x')),
        }
    }
}

/// `y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeierstrassCurve {
    field: FiniteField,
    /// `[a1, a2, a3, a4, a6]`.
    coeffs: [u64; 5],
}

impl WeierstrassCurve {
    /// Fails on singular equations or coefficients outside the field.
    pub fn new(field: FiniteField, coeffs: [u64; 5]) -> Result<Self> {
        if coeffs.iter().any(|&c| c >= field.size()) {
            return Err(Error::Precondition(format!("coefficients must be field elements below {}", field.size())));
        }
        let e = WeierstrassCurve { field, coeffs };
        if e.discriminant() == 0 {
            return Err(Error::SingularCurve);
        }
        Ok(e)
    }

    /// Integer coefficients: reduced mod `ℓ` over a prime field, read as bit
    /// encodings of polynomials in `t` over a binary field.
    pub fn from_ints(field: FiniteField, a: [i64; 5]) -> Result<Self> {
        let coeffs = match field {
            FiniteField::Prime(_) => a.map(|c| field.from_int(c)),
            FiniteField::Binary { .. } => {
                if a.iter().any(|&c| c < 0) {
                    return Err(Error::Precondition("binary-field coefficients are nonnegative bit encodings".into()));
                }
                a.map(|c| c as u64)
            }
        };
        Self::new(field, coeffs)
    }

    /// Parses `a1,a2,a3,a4,a6`.
    pub fn parse(field: FiniteField, s: &str) -> Result<Self> {
        let parts: Vec<i64> = s
            .split(',')
            .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("invalid curve coefficients '{s}'"))))
            .collect::<Result<_>>()?;
        let a: [i64; 5] = parts.try_into().map_err(|_| Error::Parse("a curve needs five coefficients a1,a2,a3,a4,a6".into()))?;
        Self::from_ints(field, a)
    }

    pub fn field(&self) -> FiniteField {
        self.field
    }

    pub fn coeffs(&self) -> [u64; 5] {
        self.coeffs
    }

    /// `Δ = −b2²b8 − 8b4³ − 27b6² + 9b2b4b6` with the usual `b`-invariants
    /// `b2 = a1² + 4a2`, `b4 = 2a4 + a1a3`, `b6 = a3² + 4a6`,
    /// `b8 = a1²a6 + 4a2a6 − a1a3a4 + a2a3² − a4²` (Silverman, III.1).
    pub fn discriminant(&self) -> u64 {
        discriminant_with(&self.field, self.coeffs, |a, b| self.field.mul(a, b))
    }

    /// The curve `E'` with `E'(x, y) = E(x + c, y)`.
    pub fn shift_x(&self, c: u64) -> Self {
        let f = &self.field;
        let [a1, a2, a3, a4, a6] = self.coeffs;
        let m = |a: u64, b: u64| f.mul(a, b);
        let c2 = m(c, c);
        let a3n = f.add(a3, m(a1, c));
        let a2n = f.add(a2, m(f.from_int(3), c));
        let a4n = f.add(f.add(a4, m(f.from_int(2), m(a2, c))), m(f.from_int(3), c2));
        let a6n = [a6, m(a4, c), m(a2, c2), m(c2, c)].into_iter().fold(0, |acc, x| f.add(acc, x));
        WeierstrassCurve { field: self.field, coeffs: [a1, a2n, a3n, a4n, a6n] }
    }

    /// The same equation over a larger binary field; coefficients must lie in `F_2`.
    pub fn base_change_binary(&self, degree: u32) -> Result<Self> {
        if self.field.characteristic() != 2 || self.coeffs.iter().any(|&c| c > 1) {
            return Err(Error::Precondition("base change needs a curve with coefficients in F2".into()));
        }
        Self::new(FiniteField::binary_default(degree)?, self.coeffs)
    }

    fn lhs_rhs(&self, x: u64, y: u64) -> (u64, u64) {
        let f = &self.field;
        let [a1, a2, a3, a4, a6] = self.coeffs;
        let lhs = f.add(f.mul(y, y), f.mul(f.add(f.mul(a1, x), a3), y));
        (lhs, self.cubic(x, a2, a4, a6))
    }

    fn cubic(&self, x: u64, a2: u64, a4: u64, a6: u64) -> u64 {
        let f = &self.field;
        let x2 = f.mul(x, x);
        [f.mul(x2, x), f.mul(a2, x2), f.mul(a4, x), a6].into_iter().fold(0, |acc, v| f.add(acc, v))
    }
}

fn discriminant_with(f: &FiniteField, coeffs: [u64; 5], m: impl Fn(u64, u64) -> u64) -> u64 {
    let [a1, a2, a3, a4, a6] = coeffs;
    let k = |n: i64| f.from_int(n);
    let sum = |xs: &[u64]| xs.iter().fold(0, |acc, &x| f.add(acc, x));
    let b2 = f.add(m(a1, a1), m(k(4), a2));
    let b4 = f.add(m(k(2), a4), m(a1, a3));
    let b6 = f.add(m(a3, a3), m(k(4), a6));
    let b8 = sum(&[m(m(a1, a1), a6), m(m(k(4), a2), a6), f.neg(m(m(a1, a3), a4)), m(a2, m(a3, a3)), f.neg(m(a4, a4))]);
    sum(&[
        f.neg(m(m(b2, b2), b8)),
        f.neg(m(k(8), m(b4, m(b4, b4)))),
        f.neg(m(k(27), m(b6, b6))),
        m(k(9), m(b2, m(b4, b6))),
    ])
}

impl fmt::Display for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fld = &self.field;
        let [a1, a2, a3, a4, a6] = self.coeffs;
        let term = |c: u64, mono: &str| -> Option<(bool, String)> {
            if c == 0 {
                return None;
            }
            let (neg, c) = match *fld {
                FiniteField::Prime(l) if c > l / 2 => (true, l - c),
                _ => (false, c),
            };
            let body = match (c, mono.is_empty()) {
                (1, false) => mono.to_string(),
                (_, true) => fld.format_element(c),
                _ if matches!(fld, FiniteField::Binary { .. }) && c > 1 => format!("({}){mono}", fld.format_element(c)),
                _ => format!("{}{mono}", fld.format_element(c)),
            };
            Some((neg, body))
        };
        let side = |terms: Vec<Option<(bool, String)>>| {
            let mut s = String::new();
            for (neg, body) in terms.into_iter().flatten() {
                if s.is_empty() {
                    s = if neg { format!("-{body}") } else { body };
                } else {
                    s += if neg { " - " } else { " + " };
                    s += &body;
                }
            }
            s
        };
        let lhs = side(vec![Some((false, "y^2".into())), term(a1, "xy"), term(a3, "y")]);
        let rhs = side(vec![Some((false, "x^3".into())), term(a2, "x^2"), term(a4, "x"), term(a6, "")]);
        write!(f, "{lhs} = {rhs} over {fld}")
    }
}

/// Point count and Frobenius trace `a = ℓ + 1 − count`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusData {
    pub l: u64,
    pub count: u64,
    pub a: i64,
}

impl FrobeniusData {
    pub fn satisfies_hasse(&self) -> bool {
        (self.a as i128).pow(2) <= 4 * self.l as i128
    }
}

/// `|E(F_ℓ)|` including the point at infinity.
pub fn point_count(e: &WeierstrassCurve) -> Result<FrobeniusData> {
    let f = &e.field;
    let l = f.size();
    let [a1, a2, a3, a4, a6] = e.coeffs;
    let mut count = 1u64;
    match *f {
        FiniteField::Prime(p) if p != 2 => {
            // (2y + a1x + a3)² = 4(x³ + a2x² + a4x + a6) + (a1x + a3)².
            let mut chi = vec![-1i64; p as usize];
            chi[0] = 0;
            for y in 1..p {
                chi[(y * y % p) as usize] = 1;
            }
            let four = f.from_int(4);
            for x in 0..p {
                let b = f.add(f.mul(a1, x), a3);
                let d = f.add(f.mul(four, e.cubic(x, a2, a4, a6)), f.mul(b, b));
                count = (count as i64 + 1 + chi[d as usize]) as u64;
            }
        }
        _ => {
            // y² + b·y = c: one root when b = 0, else two iff Tr(c/b²) = 0.
            for x in 0..l {
                let b = f.add(f.mul(a1, x), a3);
                let c = e.cubic(x, a2, a4, a6);
                if b == 0 {
                    count += 1;
                } else {
                    let z = f.mul(c, f.inv(f.mul(b, b)).expect("nonzero"));
                    if f.trace_to_f2(z) == 0 {
                        count += 2;
                    }
                }
            }
        }
    }
    Ok(FrobeniusData { l, count, a: l as i64 + 1 - count as i64 })
}

/// Count by trying every affine pair `(x, y)`.
pub fn point_count_naive(e: &WeierstrassCurve) -> Result<FrobeniusData> {
    let l = e.field.size();
    if l > NAIVE_COUNT_BOUND {
        return Err(Error::FieldTooLarge { size: l, bound: NAIVE_COUNT_BOUND });
    }
    let mut count = 1u64;
    for x in 0..l {
        for y in 0..l {
            let (lhs, rhs) = e.lhs_rhs(x, y);
            if lhs == rhs {
                count += 1;
            }
        }
    }
    Ok(FrobeniusData { l, count, a: l as i64 + 1 - count as i64 })
}

/// `|E(F_{ℓ^r})| = ℓ^r + 1 − s_r` with `s_r = a·s_{r−1} − ℓ·s_{r−2}`.
pub fn extension_count(fd: &FrobeniusData, r: u32) -> Result<BigInt> {
    if r == 0 {
        return Err(Error::Precondition("extension degree must be positive".into()));
    }
    if r > EXTENSION_DEGREE_BOUND {
        return Err(Error::BoundExceeded { what: "extension degree", bound: EXTENSION_DEGREE_BOUND as usize });
    }
    let (a, l) = (BigInt::from(fd.a), BigInt::from(fd.l));
    let mut prev = BigInt::from(2);
    let mut cur = a.clone();
    for _ in 1..r {
        let next = &a * &cur - &l * &prev;
        prev = cur;
        cur = next;
    }
    Ok(l.pow(r) + 1 - cur)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeWitness {
    pub p: u64,
    /// Smallest `n ≥ 1` with `1 + ℓ − a ≢ 0 (mod pⁿ)`.
    pub min_n: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionCertificate {
    pub curve: String,
    pub l: u64,
    pub count: u64,
    pub a: i64,
    pub gap: u64,
    pub per_prime: Vec<PrimeWitness>,
    pub lemma36_prime: u64,
}

pub fn obstruction_certificate(e: &WeierstrassCurve, primes: &[u64]) -> Result<ObstructionCertificate> {
    let l = e.field.size();
    for &p in primes {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if l.is_multiple_of(p) {
            return Err(Error::PrimeDividesFieldSize { p, l });
        }
    }
    let fd = point_count(e)?;
    let gap = 1 + l as i64 - fd.a;
    if gap <= 0 {
        return Err(Error::Precondition(format!("nonpositive gap {gap}")));
    }
    let gap = gap as u64;
    let per_prime = primes.iter().map(|&p| PrimeWitness { p, min_n: valuation(gap, p) + 1 }).collect();
    Ok(ObstructionCertificate {
        curve: e.to_string(),
        l,
        count: fd.count,
        a: fd.a,
        gap,
        per_prime,
        lemma36_prime: next_prime_after(fd.count),
    })
}

/// Visits every smooth curve over `field`: short form `y² = x³ + ax + b` in
/// odd characteristic, the general form in characteristic 2.
pub fn for_each_curve(field: FiniteField, mut visit: impl FnMut(&WeierstrassCurve)) -> Result<()> {
    let q = field.size();
    if q > ENUMERATION_BOUND {
        return Err(Error::FieldTooLarge { size: q, bound: ENUMERATION_BOUND });
    }
    let mut try_visit = |coeffs: [u64; 5]| {
        let e = WeierstrassCurve { field, coeffs };
        if e.discriminant() != 0 {
            visit(&e);
        }
    };
    if field.characteristic() == 2 {
        for n in 0..q.pow(5) {
            let c = |i: u32| n / q.pow(i) % q;
            try_visit([c(4), c(3), c(2), c(1), c(0)]);
        }
    } else {
        for a in 0..q {
            for b in 0..q {
                try_visit([0, 0, 0, a, b]);
            }
        }
    }
    Ok(())
}

/// [`for_each_curve`] together with each curve's [`FrobeniusData`]. Binary
/// fields go through multiplication and root-count tables built once.
pub fn for_each_curve_counted(field: FiniteField, mut visit: impl FnMut(&WeierstrassCurve, FrobeniusData)) -> Result<()> {
    if field.characteristic() != 2 {
        let mut failure = None;
        for_each_curve(field, |e| match point_count(e) {
            Ok(fd) => visit(e, fd),
            Err(err) => failure = Some(err),
        })?;
        return failure.map_or(Ok(()), Err);
    }
    let q = field.size();
    if q > ENUMERATION_BOUND {
        return Err(Error::FieldTooLarge { size: q, bound: ENUMERATION_BOUND });
    }
    let n = q as usize;
    let mut table = vec![0u64; n * n];
    for a in 0..q {
        for b in 0..q {
            table[a as usize * n + b as usize] = field.mul(a, b);
        }
    }
    let mul = |a: u64, b: u64| table[a as usize * n + b as usize];
    // Affine points over one x with y² + b·y = c.
    let mut roots = vec![0u64; n * n];
    for b in 0..q {
        for c in 0..q {
            roots[b as usize * n + c as usize] = if b == 0 {
                1
            } else {
                let z = mul(c, field.inv(mul(b, b)).expect("nonzero"));
                if field.trace_to_f2(z) == 0 { 2 } else { 0 }
            };
        }
    }
    let mut bvec = vec![0u64; n];
    let mut base = vec![0u64; n];
    for a1 in 0..q {
        for a2 in 0..q {
            for a3 in 0..q {
                for (x, b) in bvec.iter_mut().enumerate() {
                    *b = mul(a1, x as u64) ^ a3;
                }
                for a4 in 0..q {
                    for (x, c) in base.iter_mut().enumerate() {
                        let x = x as u64;
                        let x2 = mul(x, x);
                        *c = mul(x2, x) ^ mul(a2, x2) ^ mul(a4, x);
                    }
                    for a6 in 0..q {
                        let coeffs = [a1, a2, a3, a4, a6];
                        if discriminant_with(&field, coeffs, mul) == 0 {
                            continue;
                        }
                        let count = 1 + (0..n).map(|x| roots[bvec[x] as usize * n + (base[x] ^ a6) as usize]).sum::<u64>();
                        visit(&WeierstrassCurve { field, coeffs }, FrobeniusData { l: q, count, a: q as i64 + 1 - count as i64 });
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn enumerate_curves(field: FiniteField) -> Result<Vec<WeierstrassCurve>> {
    if field.characteristic() == 2 && field.size() > BINARY_ENUMERATION_BOUND {
        return Err(Error::FieldTooLarge { size: field.size(), bound: BINARY_ENUMERATION_BOUND });
    }
    let mut out = Vec::new();
    for_each_curve(field, |e| out.push(*e))?;
    Ok(out)
}

/// Supported field sizes `≤ lmax`: primes and powers of 2, ascending.
pub fn supported_fields_up_to(lmax: u64) -> Result<Vec<FiniteField>> {
    let mut out = Vec::new();
    for q in 2..=lmax {
        if is_prime(q) {
            out.push(FiniteField::prime(q)?);
        } else if q.is_power_of_two() {
            out.push(FiniteField::binary_default(q.trailing_zeros())?);
        }
    }
    Ok(out)
}
