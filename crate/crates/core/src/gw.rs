//! Grothendieck–Witt groups of `ℝ` and of odd prime fields, in normal form.
//!
//! Over `ℝ` a class is its `(rank, signature)`; over `F_p` it is its rank
//! together with the discriminant in `F_p*/(F_p*)² = {±1}`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::{is_prime, pow_mod};
use crate::burnside::BurnsideElement;
use crate::error::{Error, Result};
use crate::groups::cyclic_group;
use crate::linalg::Matrix;
use crate::scalar::{parse_rational, rational_sign, Coefficient, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Reals,
    /// An odd prime field.
    PrimeField(u64),
}

impl FieldDescriptor {
    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p == 2 {
            return Err(Error::InvalidField("only odd prime fields are supported".into()));
        }
        Ok(FieldDescriptor::PrimeField(p))
    }

    /// Parses `R`, `Fp:7` or `F7`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("r") || t.eq_ignore_ascii_case("reals") {
            return Ok(FieldDescriptor::Reals);
        }
        let rest = t.strip_prefix("Fp:").or_else(|| t.strip_prefix('F')).ok_or_else(|| Error::Parse(format!("unrecognised field '{s}'")))?;
        let p: u64 = rest.parse().map_err(|_| Error::Parse(format!("unrecognised field '{s}'")))?;
        Self::prime_field(p)
    }

    /// Square class of a nonzero element: `+1` or `-1`.
    pub fn square_class(&self, a: &Rational) -> Result<i64> {
        if a.is_zero() {
            return Err(Error::ZeroEntry);
        }
        match *self {
            FieldDescriptor::Reals => Ok(rational_sign(a)),
            FieldDescriptor::PrimeField(p) => {
                let r = reduce(a, p)?;
                if r == 0 {
                    return Err(Error::ZeroEntry);
                }
                Ok(if pow_mod(r, (p - 1) / 2, p) == 1 { 1 } else { -1 })
            }
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Reals => write!(f, "R"),
            FieldDescriptor::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

fn reduce(a: &Rational, p: u64) -> Result<u64> {
    let m = BigInt::from(p);
    let num = a.numer().mod_floor(&m).to_u64().expect("residue fits");
    let den = a.denom().mod_floor(&m).to_u64().expect("residue fits");
    if den == 0 {
        return Err(Error::Precondition(format!("denominator of {a} vanishes mod {p}")));
    }
    Ok((num as u128 * pow_mod(den, p - 2, p) as u128 % p as u128) as u64)
}

/// A class in `GW(k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GWElement {
    Real { rank: i64, signature: i64 },
    Finite { p: u64, rank: i64, discriminant: i64 },
}

impl GWElement {
    pub fn zero(field: FieldDescriptor) -> Self {
        match field {
            FieldDescriptor::Reals => GWElement::Real { rank: 0, signature: 0 },
            FieldDescriptor::PrimeField(p) => GWElement::Finite { p, rank: 0, discriminant: 1 },
        }
    }

    /// `⟨a⟩`, the form `(x, y) ↦ a·x·y`.
    pub fn generator(field: FieldDescriptor, a: &Rational) -> Result<Self> {
        let c = field.square_class(a)?;
        Ok(match field {
            FieldDescriptor::Reals => GWElement::Real { rank: 1, signature: c },
            FieldDescriptor::PrimeField(p) => GWElement::Finite { p, rank: 1, discriminant: c },
        })
    }

    pub fn generator_int(field: FieldDescriptor, a: i64) -> Result<Self> {
        Self::generator(field, &Rational::from_i64(a))
    }

    /// `⟨a₁⟩ + … + ⟨aₙ⟩`.
    pub fn from_diagonal(field: FieldDescriptor, entries: &[Rational]) -> Result<Self> {
        entries.iter().try_fold(Self::zero(field), |acc, a| acc.add(&Self::generator(field, a)?))
    }

    /// Parses comma-separated diagonal entries such as `1,-1,2` or `1/2,3`.
    pub fn parse_diagonal(field: FieldDescriptor, s: &str) -> Result<Self> {
        let entries: Vec<Rational> = s.split(',').filter(|t| !t.trim().is_empty()).map(parse_rational).collect::<Result<_>>()?;
        Self::from_diagonal(field, &entries)
    }

    /// The form with the given symmetric Gram matrix, diagonalized by congruence.
    pub fn from_gram(field: FieldDescriptor, gram: &Matrix<Rational>) -> Result<Self> {
        Self::from_diagonal(field, &diagonalize_symmetric(gram)?)
    }

    pub fn field(&self) -> FieldDescriptor {
        match *self {
            GWElement::Real { .. } => FieldDescriptor::Reals,
            GWElement::Finite { p, .. } => FieldDescriptor::PrimeField(p),
        }
    }

    pub fn rank(&self) -> i64 {
        match *self {
            GWElement::Real { rank, .. } | GWElement::Finite { rank, .. } => rank,
        }
    }

    fn mismatch(&self, other: &Self) -> Error {
        Error::WrongField { expected: self.field().to_string(), found: other.field().to_string() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        match (*self, *other) {
            (GWElement::Real { rank: r1, signature: s1 }, GWElement::Real { rank: r2, signature: s2 }) => {
                Ok(GWElement::Real { rank: r1 + r2, signature: s1 + s2 })
            }
            (GWElement::Finite { p, rank: r1, discriminant: d1 }, GWElement::Finite { p: q, rank: r2, discriminant: d2 }) if p == q => {
                Ok(GWElement::Finite { p, rank: r1 + r2, discriminant: d1 * d2 })
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn neg(&self) -> Self {
        match *self {
            GWElement::Real { rank, signature } => GWElement::Real { rank: -rank, signature: -signature },
            // Square classes have order 2, so the discriminant is its own inverse.
            GWElement::Finite { p, rank, discriminant } => GWElement::Finite { p, rank: -rank, discriminant },
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        match (*self, *other) {
            (GWElement::Real { rank: r1, signature: s1 }, GWElement::Real { rank: r2, signature: s2 }) => {
                Ok(GWElement::Real { rank: r1 * r2, signature: s1 * s2 })
            }
            (GWElement::Finite { p, rank: r1, discriminant: d1 }, GWElement::Finite { p: q, rank: r2, discriminant: d2 }) if p == q => {
                let pow = |d: i64, e: i64| if d == -1 && e.rem_euclid(2) == 1 { -1 } else { 1 };
                Ok(GWElement::Finite { p, rank: r1 * r2, discriminant: pow(d1, r2) * pow(d2, r1) })
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn rank_signature(&self) -> Result<(i64, i64)> {
        match *self {
            GWElement::Real { rank, signature } => Ok((rank, signature)),
            _ => Err(Error::WrongField { expected: "R".into(), found: self.field().to_string() }),
        }
    }

    pub fn rank_discriminant(&self) -> Result<(i64, i64)> {
        match *self {
            GWElement::Finite { rank, discriminant, .. } => Ok((rank, discriminant)),
            _ => Err(Error::WrongField { expected: "an odd prime field".into(), found: self.field().to_string() }),
        }
    }

    /// Normal form rendered as a sum of generators, e.g. `2⟨1⟩ + ⟨-1⟩`.
    pub fn normal_form(&self) -> String {
        let (plus, minus, label_minus) = match *self {
            GWElement::Real { rank, signature } => ((rank + signature) / 2, (rank - signature) / 2, "<-1>".to_string()),
            GWElement::Finite { rank, discriminant, .. } => {
                if discriminant == 1 {
                    (rank, 0, String::new())
                } else {
                    (rank - 1, 1, "<u>".to_string())
                }
            }
        };
        let term = |n: i64, label: &str| match n {
            0 => None,
            1 => Some(label.to_string()),
            -1 => Some(format!("-{label}")),
            n => Some(format!("{n}{label}")),
        };
        let parts: Vec<String> = [term(plus, "<1>"), term(minus, &label_minus)].into_iter().flatten().collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ").replace("+ -", "- ")
        }
    }
}

/// Diagonal entries of a nondegenerate symmetric matrix after congruence.
pub fn diagonalize_symmetric(gram: &Matrix<Rational>) -> Result<Vec<Rational>> {
    let n = gram.rows();
    if gram.cols() != n || *gram != gram.transpose() {
        return Err(Error::Precondition("Gram matrix must be square and symmetric".into()));
    }
    let mut a = gram.clone();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        if a.get(k, k).is_zero() {
            // Make the pivot nonzero: swap in a later nonzero diagonal entry,
            // or add a row/column with a nonzero off-diagonal entry.
            if let Some(j) = (k + 1..n).find(|&j| !a.get(j, j).is_zero()) {
                congruence_swap(&mut a, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a.get(k, j).is_zero()) {
                congruence_add(&mut a, k, j);
            } else {
                return Err(Error::Precondition("Gram matrix is degenerate".into()));
            }
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            let f = a.get(i, k).clone() / pivot.clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..n {
                let v = a.get(i, j).clone() - f.clone() * a.get(k, j).clone();
                a.set(i, j, v);
            }
            for j in 0..n {
                let v = a.get(j, i).clone() - f.clone() * a.get(j, k).clone();
                a.set(j, i, v);
            }
        }
        out.push(pivot);
    }
    Ok(out)
}

fn congruence_swap(a: &mut Matrix<Rational>, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let (x, y) = (a.get(i, c).clone(), a.get(j, c).clone());
        a.set(i, c, y);
        a.set(j, c, x);
    }
    for r in 0..n {
        let (x, y) = (a.get(r, i).clone(), a.get(r, j).clone());
        a.set(r, i, y);
        a.set(r, j, x);
    }
}

/// Row `i += row j`, then column `i += column j`.
fn congruence_add(a: &mut Matrix<Rational>, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let v = a.get(i, c).clone() + a.get(j, c).clone();
        a.set(i, c, v);
    }
    for r in 0..n {
        let v = a.get(r, i).clone() + a.get(r, j).clone();
        a.set(r, i, v);
    }
}

/// `(x, y) ↦ Tr_{ℂ/ℝ}(xy)` on the basis `{1, i}`.
pub fn trace_form_gram_c_over_r() -> Matrix<Rational> {
    // Tr(1·1) = 2, Tr(1·i) = 0, Tr(i·i) = Tr(-1) = -2.
    Matrix::from_rows(vec![
        vec![Rational::from_i64(2), Rational::from_i64(0)],
        vec![Rational::from_i64(0), Rational::from_i64(-2)],
    ])
}

pub fn trace_form_c_over_r() -> Result<GWElement> {
    GWElement::from_gram(FieldDescriptor::Reals, &trace_form_gram_c_over_r())
}

/// The element `a[∗] + b[Z/2]` of `A(Z/2)` with the same rank and signature.
pub fn realize_in_burnside(x: &GWElement) -> Result<BurnsideElement<i64>> {
    let (rank, signature) = x.rank_signature()?;
    if (rank - signature).rem_euclid(2) != 0 {
        return Err(Error::Precondition("rank and signature differ in parity".into()));
    }
    let g = cyclic_group(2)?;
    // Class order: trivial subgroup (free orbit), then the whole group (point).
    BurnsideElement::new(&g, vec![(rank - signature) / 2, signature])
}
