//! Random G-sets, spans and idempotent endomorphisms for property checks.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::burnside::{BurnsideElement, Span, SpanMorphism};
use crate::error::Result;
use crate::groups::Group;
use crate::gsets::{transitive_gsets, GSet};
use crate::scalar::{Coefficient, Rational};

/// A G-set of uniformly chosen size `≤ max_size`, built from random orbits.
pub fn random_gset<R: Rng>(group: &Group, rng: &mut R, max_size: usize) -> Result<GSet> {
    let basis = transitive_gsets(group)?;
    let mut remaining = rng.gen_range(0..=max_size);
    let mut out = GSet::empty(group.clone());
    loop {
        let fits: Vec<&GSet> = basis.iter().filter(|b| b.size() <= remaining).collect();
        let Some(b) = fits.choose(rng) else { break };
        remaining -= b.size();
        out = out.disjoint_union(b)?;
    }
    Ok(out)
}

/// A random equivariant map, or `None` when some orbit has no admissible image.
pub fn random_equivariant_map<R: Rng>(source: &GSet, target: &GSet, rng: &mut R) -> Option<Vec<usize>> {
    let mut images = Vec::new();
    for orbit in source.orbits() {
        let fixed = target.fixed_points(&source.stabilizer(orbit[0]));
        images.push(*fixed.choose(rng)?);
    }
    source.equivariant_map_from_orbit_images(target, &images).ok()
}

/// A random span `S ← U → T` with `|U| ≤ max_apex`.
pub fn random_span<R: Rng>(s: &GSet, t: &GSet, rng: &mut R, max_apex: usize) -> Result<Span> {
    for _ in 0..32 {
        let u = random_gset(s.group(), rng, max_apex)?;
        if let (Some(l), Some(r)) = (random_equivariant_map(&u, s, rng), random_equivariant_map(&u, t, rng)) {
            return Span::new(s.clone(), u, t.clone(), l, r);
        }
    }
    Span::empty(s, t)
}

/// A small nonzero integer or, occasionally, a fraction.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let mut n: i64 = rng.gen_range(-3..=3);
    if n == 0 {
        n = 1;
    }
    let d: i64 = if rng.gen_bool(0.25) { rng.gen_range(2..=3) } else { 1 };
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn random_morphism<R: Rng>(s: &GSet, t: &GSet, rng: &mut R, max_terms: usize, max_apex: usize) -> Result<SpanMorphism<Rational>> {
    let n = rng.gen_range(1..=max_terms.max(1));
    let mut terms = Vec::with_capacity(n);
    for _ in 0..n {
        terms.push((random_rational(rng), random_span(s, t, rng, max_apex)?));
    }
    SpanMorphism::from_terms(s, t, &terms)
}

pub fn random_endomorphism<R: Rng>(t: &GSet, rng: &mut R, max_terms: usize, max_apex: usize) -> Result<SpanMorphism<Rational>> {
    random_morphism(t, t, rng, max_terms, max_apex)
}

pub fn random_burnside_element<R: Rng>(group: &Group, rng: &mut R, bound: i64) -> Result<BurnsideElement<i64>> {
    let k = group.num_subgroup_classes()?;
    BurnsideElement::new(group, (0..k).map(|_| rng.gen_range(-bound..=bound)).collect())
}

/// An idempotent endomorphism `s ∘ r` of a random `T` built from a retract
/// `A ⊆ T` with `r ∘ s = 1_A`.
///
/// `s = [A ← A → T]` is the inclusion and
/// `r = [T ← A → A] + c·[T ← W → A]` with `W → T` landing outside `A`, so the
/// pullback defining `r ∘ s` along the second term is empty.
pub fn random_idempotent<R: Rng>(group: &Group, rng: &mut R, max_size: usize) -> Result<SpanMorphism<Rational>> {
    let mut t = random_gset(group, rng, max_size)?;
    while t.is_empty() && max_size > 0 {
        t = random_gset(group, rng, max_size)?;
    }
    let orbits = t.orbits();
    let (inside, outside): (Vec<_>, Vec<_>) = orbits.into_iter().partition(|_| rng.gen_bool(0.5));
    let a_points: Vec<usize> = inside.concat();
    let rest: Vec<usize> = outside.concat();
    let a = t.restrict(&a_points)?;
    let id_a: Vec<usize> = (0..a.size()).collect();
    let s = SpanMorphism::from_span(&Span::new(a.clone(), a.clone(), t.clone(), id_a.clone(), a_points.clone())?, Rational::one());
    let mut r = SpanMorphism::from_span(&Span::new(t.clone(), a.clone(), a.clone(), a_points, id_a)?, Rational::one());
    if !rest.is_empty() && !a.is_empty() {
        let complement = t.restrict(&rest)?;
        for _ in 0..rng.gen_range(0..=2) {
            let w = random_gset(group, rng, max_size)?;
            let (Some(psi), Some(pi)) = (random_equivariant_map(&w, &complement, rng), random_equivariant_map(&w, &a, rng)) else {
                continue;
            };
            let psi: Vec<usize> = psi.into_iter().map(|x| rest[x]).collect();
            let coeff = Rational::from_i64(rng.gen_range(-2..=2));
            r = r.add(&SpanMorphism::from_span(&Span::new(t.clone(), w, a.clone(), psi, pi)?, coeff))?;
        }
    }
    r.compose(&s)
}
