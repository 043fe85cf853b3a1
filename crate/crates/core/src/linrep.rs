//! Permutation representations, the map `θ: A(G) → Rep(G,R)`, character
//! formulas for spans, and eigenvalue bookkeeping for cyclic groups.
//!
//! Representations are modelled by characters on conjugacy classes. Over a
//! field whose characteristic does not divide `|G|` this loses nothing;
//! operations that rely on it check the hypothesis.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::{divisors, gcd, is_prime, pow_mod, prime_factors, ramanujan_sum};
use crate::burnside::{BurnsideElement, SpanMorphism};
use crate::error::{Error, Result};
use crate::groups::{cyclic_group, same_group, Group};
use crate::gsets::{gset_from_orbit_counts, transitive_gsets, GSet};
use crate::linalg::Matrix;
use crate::scalar::{CoeffRing, Coefficient, ExactScalar, Rational};

/// Conversion of exact coefficients into a runtime coefficient ring.
pub trait IntoScalar {
    fn to_scalar(&self, ring: CoeffRing) -> Result<ExactScalar>;
}

impl IntoScalar for i64 {
    fn to_scalar(&self, ring: CoeffRing) -> Result<ExactScalar> {
        Ok(ring.from_int(*self))
    }
}

impl IntoScalar for BigInt {
    fn to_scalar(&self, ring: CoeffRing) -> Result<ExactScalar> {
        Ok(ring.from_bigint(self))
    }
}

impl IntoScalar for Rational {
    fn to_scalar(&self, ring: CoeffRing) -> Result<ExactScalar> {
        if ring == CoeffRing::Rationals {
            return Ok(ExactScalar::Rational(self.clone()));
        }
        let den = ring.from_bigint(self.denom());
        let inv = den
            .inverse()
            .ok_or_else(|| Error::Precondition(format!("denominator {} is not invertible in {ring}", self.denom())))?;
        Ok(ring.from_bigint(self.numer()) * inv)
    }
}

/// A virtual representation, by its character on conjugacy classes.
#[derive(Clone, Debug, PartialEq)]
pub struct RepElement {
    group: Group,
    ring: CoeffRing,
    character: Vec<ExactScalar>,
}

/// Coarse shape of a character.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepClass {
    Zero,
    Trivial,
    Other,
}

impl RepClass {
    pub fn as_str(self) -> &'static str {
        match self {
            RepClass::Zero => "zero",
            RepClass::Trivial => "trivial",
            RepClass::Other => "other",
        }
    }
}

impl RepElement {
    pub fn new(group: &Group, ring: CoeffRing, character: Vec<ExactScalar>) -> Result<Self> {
        let k = group.conjugacy_classes().len();
        if character.len() != k {
            return Err(Error::Precondition(format!("expected {k} character values, got {}", character.len())));
        }
        let in_ring = |v: &ExactScalar| match (v, ring.modulus()) {
            (ExactScalar::Rational(_), None) => true,
            (ExactScalar::Residue { value, modulus }, Some(m)) => *modulus == m && *value < m,
            _ => false,
        };
        if !character.iter().all(in_ring) {
            return Err(Error::Precondition(format!("character values do not lie in {ring}")));
        }
        Ok(RepElement { group: group.clone(), ring, character })
    }

    pub fn from_integers(group: &Group, ring: CoeffRing, values: &[i64]) -> Result<Self> {
        Self::new(group, ring, values.iter().map(|&v| ring.from_int(v)).collect())
    }

    pub fn zero(group: &Group, ring: CoeffRing) -> Self {
        RepElement { group: group.clone(), ring, character: vec![ring.zero(); group.conjugacy_classes().len()] }
    }

    pub fn trivial(group: &Group, ring: CoeffRing) -> Self {
        RepElement { group: group.clone(), ring, character: vec![ring.one(); group.conjugacy_classes().len()] }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn character(&self) -> &[ExactScalar] {
        &self.character
    }

    pub fn value_at(&self, g: usize) -> &ExactScalar {
        &self.character[self.group.class_of(g)]
    }

    pub fn dimension(&self) -> &ExactScalar {
        self.value_at(self.group.identity_index())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if !same_group(&self.group, &other.group) {
            return Err(Error::GroupMismatch);
        }
        if self.ring != other.ring {
            return Err(Error::ObjectMismatch("characters over different coefficient rings"));
        }
        Ok(())
    }

    fn zip(&self, other: &Self, op: fn(ExactScalar, ExactScalar) -> ExactScalar) -> Result<Self> {
        self.check(other)?;
        let character = self.character.iter().zip(&other.character).map(|(a, b)| op(a.clone(), b.clone())).collect();
        Ok(RepElement { group: self.group.clone(), ring: self.ring, character })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    /// Tensor product: pointwise product of characters.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a * b)
    }

    pub fn neg(&self) -> Self {
        RepElement { group: self.group.clone(), ring: self.ring, character: self.character.iter().map(|v| -v.clone()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.character.iter().all(ExactScalar::is_zero)
    }

    pub fn is_trivial(&self) -> bool {
        self.character.iter().all(ExactScalar::is_one)
    }

    pub fn classify(&self) -> RepClass {
        if self.is_zero() {
            RepClass::Zero
        } else if self.is_trivial() {
            RepClass::Trivial
        } else {
            RepClass::Other
        }
    }

    /// Character values as decimal strings, in conjugacy-class order.
    pub fn character_strings(&self) -> Vec<String> {
        self.character.iter().map(ToString::to_string).collect()
    }
}

/// `ρ(g)` for a permutation representation: entry `(t, t')` is `[t' = g·t]`.
pub fn permutation_matrix<C: Coefficient>(t: &GSet, g: usize) -> Matrix<C> {
    let mut m = Matrix::<C>::zeros(t.size(), t.size());
    for x in 0..t.size() {
        m.set(x, t.act(g, x), C::one());
    }
    m
}

/// A matrix representation given by one matrix per generator.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRep {
    group: Group,
    dimension: usize,
    matrices: Vec<Matrix<Rational>>,
}

impl MatrixRep {
    /// Checks that the generator matrices extend to a homomorphism.
    pub fn new(group: &Group, matrices: Vec<Matrix<Rational>>) -> Result<Self> {
        if matrices.len() != group.generators().len() {
            return Err(Error::Precondition("one matrix per generator is required".into()));
        }
        let dimension = matrices.first().map_or(0, Matrix::rows);
        if matrices.iter().any(|m| m.rows() != dimension || m.cols() != dimension) {
            return Err(Error::Precondition("matrices must be square of equal size".into()));
        }
        let rep = MatrixRep { group: group.clone(), dimension, matrices };
        let all = rep.all_matrices();
        for (s, gi) in group.generator_indices().into_iter().enumerate() {
            for h in 0..group.order() {
                if &rep.matrices[s] * &all[h] != all[group.mul(gi, h)] {
                    return Err(Error::Precondition("generator matrices violate the group relations".into()));
                }
            }
        }
        Ok(rep)
    }

    pub fn permutation(t: &GSet) -> Self {
        let matrices = t.group().generator_indices().into_iter().map(|g| permutation_matrix(t, g)).collect();
        MatrixRep { group: t.group().clone(), dimension: t.size(), matrices }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn generator_matrices(&self) -> &[Matrix<Rational>] {
        &self.matrices
    }

    /// `ρ(g)` for every element, by word evaluation.
    pub fn all_matrices(&self) -> Vec<Matrix<Rational>> {
        let n = self.group.order();
        let mut out = vec![Matrix::identity(self.dimension); n];
        for g in 1..n {
            let (parent, s) = self.group.word_step(g).expect("non-identity element has a word");
            out[g] = &self.matrices[s] * &out[parent];
        }
        out
    }

    pub fn character(&self) -> RepElement {
        let all = self.all_matrices();
        let character = self
            .group
            .class_representatives()
            .into_iter()
            .map(|g| ExactScalar::Rational(all[g].trace()))
            .collect();
        RepElement { group: self.group.clone(), ring: CoeffRing::Rationals, character }
    }
}

/// The permutation character `g ↦ |T^g|`.
pub fn permutation_character(t: &GSet, ring: CoeffRing) -> RepElement {
    let g = t.group();
    let character = g.class_representatives().into_iter().map(|x| ring.from_int(t.fixed_point_count_of(x) as i64)).collect();
    RepElement { group: g.clone(), ring, character }
}

/// `θ(Σ x_K [G/K]) = Σ x_K · R[G/K]`.
pub fn theta<C: Coefficient + IntoScalar>(x: &BurnsideElement<C>, ring: CoeffRing) -> Result<RepElement> {
    let group = x.group();
    let basis = transitive_gsets(group)?;
    let mut out = RepElement::zero(group, ring);
    for (b, c) in basis.iter().zip(x.coeffs()) {
        if c.is_zero() {
            continue;
        }
        let c = c.to_scalar(ring)?;
        for (v, g) in out.character.iter_mut().zip(group.class_representatives()) {
            *v = v.clone() + c.clone() * ring.from_int(b.fixed_point_count_of(g) as i64);
        }
    }
    Ok(out)
}

/// `θ(e)` for an idempotent `e`; always zero or trivial.
pub fn theta_of_idempotent(e: &BurnsideElement<i64>) -> Result<RepElement> {
    if !e.is_idempotent()? {
        return Err(Error::NotIdempotent);
    }
    theta(e, CoeffRing::Rationals)
}

/// Matrix of `i_* j^*` on the free module on the apex legs' targets: entry
/// `(s, t)` is `Σ coeff · |{u : left(u) = s, right(u) = t}|`.
pub fn h0_matrix_generic<C: Coefficient>(f: &SpanMorphism<C>) -> Matrix<C> {
    let mut m = Matrix::<C>::zeros(f.source().size(), f.target().size());
    for (c, span) in f.terms() {
        for u in 0..span.apex().size() {
            let (s, t) = (span.left()[u], span.right()[u]);
            let v = m.get(s, t).clone() + c.clone();
            m.set(s, t, v);
        }
    }
    m
}

/// [`h0_matrix_generic`] with entries mapped into a coefficient field.
pub fn h0_matrix(f: &SpanMorphism<Rational>, ring: CoeffRing) -> Result<Vec<Vec<ExactScalar>>> {
    if !ring.is_field() {
        return Err(Error::NotAField(ring.to_string()));
    }
    h0_matrix_generic(f)
        .to_rows()
        .into_iter()
        .map(|row| row.iter().map(|v| v.to_scalar(ring)).collect())
        .collect()
}

fn require_endomorphism<C: Coefficient>(f: &SpanMorphism<C>) -> Result<()> {
    if f.is_endomorphism() {
        Ok(())
    } else {
        Err(Error::NotAnEndomorphism)
    }
}

fn image_count(f: &SpanMorphism<Rational>, g: usize) -> Rational {
    let t = f.source();
    f.terms().into_iter().fold(Rational::zero(), |acc, (c, span)| {
        let n = (0..span.apex().size()).filter(|&u| span.left()[u] == t.act(g, span.right()[u])).count();
        acc + c * Rational::from_i64(n as i64)
    })
}

fn require_idempotent(f: &SpanMorphism<Rational>) -> Result<()> {
    if f.is_idempotent()? {
        Ok(())
    } else {
        Err(Error::NotIdempotent)
    }
}

/// `χ_{Image H⁰(f)}(g) = Σ coeff · |{u : i(u) = g·j(u)}|` for idempotent `f`.
pub fn image_character_formula(f: &SpanMorphism<Rational>, g: usize) -> Result<Rational> {
    require_idempotent(f)?;
    Ok(image_count(f, g))
}

/// [`image_character_formula`] at every group element.
pub fn image_character_values(f: &SpanMorphism<Rational>) -> Result<Vec<Rational>> {
    require_idempotent(f)?;
    Ok((0..f.group().order()).map(|g| image_count(f, g)).collect())
}

/// `χ_{θ Tr(f)}(g) = Σ coeff · |{u : g·u = u, i(u) = j(u)}|`.
pub fn trace_character_formula(f: &SpanMorphism<Rational>, g: usize) -> Result<Rational> {
    require_endomorphism(f)?;
    Ok(f.terms().into_iter().fold(Rational::zero(), |acc, (c, span)| {
        let n = (0..span.apex().size())
            .filter(|&u| span.apex().act(g, u) == u && span.left()[u] == span.right()[u])
            .count();
        acc + c * Rational::from_i64(n as i64)
    }))
}

/// Both sides of `θ Tr(f) = Image H⁰(f)` over `F_p`.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceTheoremReport {
    pub p: u64,
    pub holds: bool,
    /// Values per conjugacy class.
    pub image_character: Vec<ExactScalar>,
    pub trace_character: Vec<ExactScalar>,
    /// Elements at which the two formulas disagree.
    pub mismatches: Vec<usize>,
}

pub fn verify_idempotent_trace_theorem(f: &SpanMorphism<Rational>, p: u64) -> Result<TraceTheoremReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let order = f.group().order();
    if (order as u64).is_multiple_of(p) {
        return Err(Error::PrimeDividesOrder { p, order });
    }
    require_endomorphism(f)?;
    let ring = CoeffRing::PrimeField(p);
    let image = image_character_values(f)?;
    let image: Vec<ExactScalar> = image.iter().map(|v| v.to_scalar(ring)).collect::<Result<_>>()?;
    let mut trace = Vec::with_capacity(order);
    for g in 0..order {
        trace.push(trace_character_formula(f, g)?.to_scalar(ring)?);
    }
    let mismatches: Vec<usize> = (0..order).filter(|&g| image[g] != trace[g]).collect();
    let reps = f.group().class_representatives();
    Ok(TraceTheoremReport {
        p,
        holds: mismatches.is_empty(),
        image_character: reps.iter().map(|&g| image[g].clone()).collect(),
        trace_character: reps.iter().map(|&g| trace[g].clone()).collect(),
        mismatches,
    })
}

/// Eigenvalue multiplicities of a generator of `Z/n`: `m[k]` counts `ζ^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiplicityVector {
    pub n: usize,
    pub m: Vec<u64>,
}

impl MultiplicityVector {
    pub fn new(m: Vec<u64>) -> Result<Self> {
        if m.is_empty() {
            return Err(Error::Precondition("multiplicity vector must have length n ≥ 1".into()));
        }
        Ok(MultiplicityVector { n: m.len(), m })
    }

    pub fn dimension(&self) -> u64 {
        self.m.iter().sum()
    }

    /// Multiplicities of `θ` of one orbit of size `s`: eigenvalues of order dividing `s`.
    pub fn of_orbit(n: usize, s: usize) -> Self {
        MultiplicityVector { n, m: (0..n).map(|k| u64::from((k * s).is_multiple_of(n))).collect() }
    }
}

/// Multiplicities depend only on `gcd(k, n)`.
pub fn has_integer_traces(m: &MultiplicityVector) -> bool {
    let n = m.n as u64;
    (0..m.n).all(|k| m.m[k] == m.m[gcd(k as u64, n) as usize % m.n])
}

/// Integer character `j ↦ Σ_k m_k ζ^{jk}` via Ramanujan sums.
pub fn character_of_multiplicities(m: &MultiplicityVector) -> Result<Vec<i64>> {
    if !has_integer_traces(m) {
        return Err(Error::Precondition("multiplicities do not give integer traces".into()));
    }
    let n = m.n as u64;
    Ok((0..n)
        .map(|j| divisors(n).into_iter().map(|d| m.m[(d % n) as usize] as i64 * ramanujan_sum(n / d, j)).sum())
        .collect())
}

/// Smallest prime `q ≡ 1 (mod n)` with `q > bound`.
fn dft_prime(n: u64, bound: u64) -> u64 {
    let mut q = n + 1;
    while q <= bound || !is_prime(q) {
        q += n;
    }
    q
}

/// A primitive `n`-th root of unity mod a prime `q ≡ 1 (mod n)`.
fn primitive_root_of_unity(n: u64, q: u64) -> u64 {
    let factors = prime_factors(n);
    (2..q)
        .map(|a| pow_mod(a, (q - 1) / n, q))
        .find(|&w| factors.iter().all(|&r| pow_mod(w, n / r, q) != 1))
        .unwrap_or(1)
}

/// Inverse DFT of an integer character of `Z/n` (`chi[j] = χ(g^j)`), exact
/// over a prime field.
pub fn multiplicities_from_character(chi: &[i64]) -> Result<MultiplicityVector> {
    let n = chi.len();
    if n == 0 {
        return Err(Error::Precondition("character must have length n ≥ 1".into()));
    }
    let dim = chi[0];
    if dim < 0 {
        return Err(Error::NotACharacter(format!("negative dimension {dim}")));
    }
    let nn = n as u64;
    let q = dft_prime(nn, 2 * dim as u64);
    let w = primitive_root_of_unity(nn, q);
    let w_inv = pow_mod(w, q - 2, q);
    let n_inv = pow_mod(nn % q, q - 2, q);
    let reduce = |v: i64| v.rem_euclid(q as i64) as u64;
    let mut m = Vec::with_capacity(n);
    for k in 0..nn {
        let mut acc = 0u64;
        for (j, &c) in chi.iter().enumerate() {
            let term = reduce(c) as u128 * pow_mod(w_inv, (j as u64 * k) % nn, q) as u128 % q as u128;
            acc = ((acc as u128 + term) % q as u128) as u64;
        }
        let mk = (acc as u128 * n_inv as u128 % q as u128) as u64;
        if mk > dim as u64 {
            return Err(Error::NotACharacter(format!("eigenvalue multiplicity at k={k} is not an integer in [0, {dim}]")));
        }
        m.push(mk);
    }
    let mv = MultiplicityVector { n, m };
    match character_of_multiplicities(&mv) {
        Ok(back) if back == chi => Ok(mv),
        _ => Err(Error::NotACharacter("values are not the character of a representation".into())),
    }
}

/// G-sets `E`, `I` (as sorted multisets of orbit sizes) with `V ⊕ θE ≅ θI`.
pub fn construct_e_i(m: &MultiplicityVector) -> Result<(Vec<usize>, Vec<usize>)> {
    if !has_integer_traces(m) {
        return Err(Error::Precondition("construction requires integer traces".into()));
    }
    let n = m.n;
    let order = |k: usize| n / gcd(k as u64, n as u64) as usize;
    let mut w: Vec<i64> = m.m.iter().map(|&x| x as i64).collect();
    let (mut e, mut i) = (Vec::new(), Vec::new());
    while let Some(d) = (0..n).filter(|&k| w[k] != 0).map(order).max() {
        let a = w[(0..n).find(|&k| order(k) == d).expect("order occurs")];
        debug_assert!(a > 0);
        let add = |w: &mut Vec<i64>, s: usize, c: i64| {
            for (k, x) in MultiplicityVector::of_orbit(n, s).m.into_iter().enumerate() {
                w[k] += c * x as i64;
            }
        };
        add(&mut w, d, -a);
        i.extend(std::iter::repeat_n(d, a as usize));
        for p in prime_factors(d as u64) {
            let s = d / p as usize;
            add(&mut w, s, a);
            e.extend(std::iter::repeat_n(s, a as usize));
        }
    }
    e.sort_unstable();
    i.sort_unstable();
    Ok((e, i))
}

/// Multiplicity vector of a disjoint union of orbits of the given sizes.
pub fn multiplicities_of_orbits(n: usize, sizes: &[usize]) -> MultiplicityVector {
    let mut m = vec![0u64; n];
    for &s in sizes {
        for (k, x) in MultiplicityVector::of_orbit(n, s).m.into_iter().enumerate() {
            m[k] += x;
        }
    }
    MultiplicityVector { n, m }
}

fn enumerate_counts(sizes: &[usize], max_size: usize, visit: &mut impl FnMut(&[usize], usize)) {
    fn go(sizes: &[usize], idx: usize, left: usize, counts: &mut Vec<usize>, visit: &mut impl FnMut(&[usize], usize), total: usize) {
        if idx == sizes.len() {
            visit(counts, total);
            return;
        }
        let mut c = 0;
        loop {
            counts[idx] = c;
            go(sizes, idx + 1, left - c * sizes[idx], counts, visit, total + c * sizes[idx]);
            if (c + 1) * sizes[idx] > left {
                break;
            }
            c += 1;
        }
        counts[idx] = 0;
    }
    let mut counts = vec![0; sizes.len()];
    go(sizes, 0, max_size, &mut counts, visit, 0);
}

pub const CYCLIC_CHECK_MAX_N: usize = 12;
pub const CYCLIC_CHECK_MAX_SIZE: usize = 8;

/// Whether equal permutation characters force isomorphic `Z/n`-sets among
/// all sets of size `≤ max_size`.
pub fn cyclic_injectivity_check(n: usize, max_size: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if n > CYCLIC_CHECK_MAX_N {
        return Err(Error::BoundExceeded { what: "cyclic group order", bound: CYCLIC_CHECK_MAX_N });
    }
    if max_size > CYCLIC_CHECK_MAX_SIZE {
        return Err(Error::BoundExceeded { what: "G-set size", bound: CYCLIC_CHECK_MAX_SIZE });
    }
    let sizes: Vec<usize> = divisors(n as u64).into_iter().map(|d| d as usize).collect();
    let mut seen: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    let mut injective = true;
    enumerate_counts(&sizes, max_size, &mut |counts, _| {
        // g^j fixes every point of an orbit of size s iff s | j.
        let chi: Vec<usize> = (0..n)
            .map(|j| sizes.iter().zip(counts).filter(|(&s, _)| j % s == 0).map(|(&s, &c)| s * c).sum())
            .collect();
        if let Some(prev) = seen.insert(chi, counts.to_vec()) {
            injective &= prev == counts;
        }
    });
    Ok(injective)
}

pub const COUNTEREXAMPLE_MAX_ORDER: usize = 60;
pub const COUNTEREXAMPLE_MAX_SIZE: usize = 12;

/// The first (smallest total size) pair of non-isomorphic G-sets with equal
/// permutation characters. The pair is ordered by decreasing orbit-count
/// vector.
pub fn permutation_counterexample_search(group: &Group, max_size: usize) -> Result<Option<(GSet, GSet)>> {
    if group.order() > COUNTEREXAMPLE_MAX_ORDER {
        return Err(Error::BoundExceeded { what: "group order", bound: COUNTEREXAMPLE_MAX_ORDER });
    }
    if max_size > COUNTEREXAMPLE_MAX_SIZE {
        return Err(Error::BoundExceeded { what: "G-set size", bound: COUNTEREXAMPLE_MAX_SIZE });
    }
    let basis = transitive_gsets(group)?;
    let sizes: Vec<usize> = basis.iter().map(GSet::size).collect();
    let fixed: Vec<Vec<usize>> = basis
        .iter()
        .map(|b| group.class_representatives().into_iter().map(|g| b.fixed_point_count_of(g)).collect())
        .collect();
    let mut by_size: Vec<Vec<Vec<usize>>> = vec![Vec::new(); max_size + 1];
    enumerate_counts(&sizes, max_size, &mut |counts, total| by_size[total].push(counts.to_vec()));
    for bucket in by_size {
        let mut seen: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for counts in bucket {
            let chi: Vec<usize> = (0..fixed[0].len())
                .map(|c| counts.iter().zip(&fixed).map(|(&k, f)| k * f[c]).sum())
                .collect();
            if let Some(prev) = seen.get(&chi) {
                let (a, b) = if *prev > counts { (prev.clone(), counts) } else { (counts, prev.clone()) };
                return Ok(Some((gset_from_orbit_counts(group, &a)?, gset_from_orbit_counts(group, &b)?)));
            }
            seen.insert(chi, counts);
        }
    }
    Ok(None)
}

/// Cohomology characters of an elliptic curve over `ℝ` as `Gal(ℂ/ℝ)`
/// representations, and their alternating sum.
#[derive(Clone, Debug, PartialEq)]
pub struct GalRCheck {
    pub h0: RepElement,
    pub h1: RepElement,
    pub h2: RepElement,
    pub euler: RepElement,
}

pub fn gal_r_elliptic_check(ring: CoeffRing) -> Result<GalRCheck> {
    let g = cyclic_group(2)?;
    // Class order: identity, complex conjugation.
    let h0 = RepElement::from_integers(&g, ring, &[1, 1])?;
    let h1 = RepElement::from_integers(&g, ring, &[2, 0])?;
    let h2 = RepElement::from_integers(&g, ring, &[1, -1])?;
    let euler = h0.sub(&h1)?.add(&h2)?;
    Ok(GalRCheck { h0, h1, h2, euler })
}

/// Integer value of a rational-valued scalar, if integral.
pub fn scalar_to_i64(v: &ExactScalar) -> Option<i64> {
    match v {
        ExactScalar::Rational(r) if r.is_integer() => r.numer().to_i64(),
        ExactScalar::Residue { value, .. } => i64::try_from(*value).ok(),
        _ => None,
    }
}


#[cfg(test)]
mod proptests {
    use super::*;
    use crate::groups::klein_four;
    use crate::random::{random_burnside_element, random_endomorphism, random_gset, random_idempotent, random_morphism};
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn group(i: usize) -> Group {
        match i {
            0 => klein_four().unwrap(),
            n => cyclic_group(n).unwrap(),
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn theta_is_a_ring_homomorphism(seed in any::<u64>(), gi in 0usize..7) {
            let g = group(gi);
            let mut rng = StdRng::seed_from_u64(seed);
            let x = random_burnside_element(&g, &mut rng, 3).unwrap();
            let y = random_burnside_element(&g, &mut rng, 3).unwrap();
            let q = CoeffRing::Rationals;
            let (tx, ty) = (theta(&x, q).unwrap(), theta(&y, q).unwrap());
            prop_assert_eq!(theta(&x.multiply(&y).unwrap(), q).unwrap(), tx.mul(&ty).unwrap());
            prop_assert_eq!(theta(&x.add(&y).unwrap(), q).unwrap(), tx.add(&ty).unwrap());
        }

        #[test]
        fn h0_is_functorial(seed in any::<u64>(), gi in 0usize..5) {
            let g = group(gi);
            let mut rng = StdRng::seed_from_u64(seed);
            let s = random_gset(&g, &mut rng, 4).unwrap();
            let t = random_gset(&g, &mut rng, 4).unwrap();
            let u = random_gset(&g, &mut rng, 4).unwrap();
            let f = random_morphism(&s, &t, &mut rng, 2, 4).unwrap();
            let h = random_morphism(&t, &u, &mut rng, 2, 4).unwrap();
            let lhs = h0_matrix_generic(&f.compose(&h).unwrap());
            prop_assert_eq!(lhs, &h0_matrix_generic(&f) * &h0_matrix_generic(&h));
        }

        #[test]
        fn trace_formula_matches_theta_of_trace(seed in any::<u64>(), gi in 0usize..5) {
            let g = group(gi);
            let mut rng = StdRng::seed_from_u64(seed);
            let t = random_gset(&g, &mut rng, 4).unwrap();
            let f = random_endomorphism(&t, &mut rng, 2, 5).unwrap();
            let th = theta(&f.trace_direct().unwrap(), CoeffRing::Rationals).unwrap();
            for x in 0..g.order() {
                prop_assert_eq!(ExactScalar::Rational(trace_character_formula(&f, x).unwrap()), th.value_at(x).clone());
            }
        }

        #[test]
        fn image_formula_matches_projector_trace(seed in any::<u64>(), gi in 0usize..5) {
            let g = group(gi);
            let mut rng = StdRng::seed_from_u64(seed);
            let f = random_idempotent(&g, &mut rng, 5).unwrap();
            let p = h0_matrix_generic(&f);
            prop_assert_eq!(&p * &p, p.clone());
            let values = image_character_values(&f).unwrap();
            for x in 0..g.order() {
                let rho: Matrix<Rational> = permutation_matrix(f.source(), x);
                prop_assert_eq!(&values[x], &(&rho * &p).trace());
            }
            // Image and kernel characters add up to the permutation character.
            let id = Matrix::identity(p.rows());
            let q = &id - &p;
            prop_assert_eq!(p.rank() + q.rank(), p.rows());
            let perm = permutation_character(f.source(), CoeffRing::Rationals);
            for x in 0..g.order() {
                let rho: Matrix<Rational> = permutation_matrix(f.source(), x);
                let sum = values[x].clone() + (&rho * &q).trace();
                prop_assert_eq!(ExactScalar::Rational(sum), perm.value_at(x).clone());
            }
        }

        #[test]
        fn dft_round_trip(n in 1usize..=12, seed in any::<u64>()) {
            use rand::Rng;
            let mut rng = StdRng::seed_from_u64(seed);
            let classes: Vec<u64> = (0..=n).map(|_| rng.gen_range(0..4)).collect();
            let m: Vec<u64> = (0..n).map(|k| classes[gcd(k as u64, n as u64) as usize]).collect();
            let mv = MultiplicityVector::new(m).unwrap();
            let chi = character_of_multiplicities(&mv).unwrap();
            prop_assert_eq!(multiplicities_from_character(&chi).unwrap(), mv.clone());
            let (e, i) = construct_e_i(&mv).unwrap();
            let lhs = multiplicities_of_orbits(n, &e);
            let rhs = multiplicities_of_orbits(n, &i);
            let total: Vec<u64> = mv.m.iter().zip(&lhs.m).map(|(a, b)| a + b).collect();
            prop_assert_eq!(total, rhs.m);
            prop_assert!(e.iter().chain(&i).all(|s| n % s == 0));
        }
    }
}
