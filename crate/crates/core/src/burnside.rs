//! Spans of G-sets, the Burnside category `Burn(G)` with coefficients, its
//! categorical trace, and the Burnside ring `A(G)` with its ghost map.
//!
//! A span `S ← U → T` with transitive apex `U ≅ G/H` is determined up to
//! isomorphism by the `G`-orbit of the triple `(left(u), right(u), Stab(u))`.
//! [`SpanKey`] stores the lexicographically smallest triple of that orbit and
//! serves as the canonical basis label of a [`SpanMorphism`].

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::groups::{same_group, Group};
use crate::gsets::{transitive_gsets, GSet};
use crate::scalar::Coefficient;

/// A diagram `source ← apex → target` of equivariant maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span {
    source: GSet,
    apex: GSet,
    target: GSet,
    left: Vec<usize>,
    right: Vec<usize>,
}

/// Canonical label of a transitive span.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpanKey {
    pub left: usize,
    pub right: usize,
    /// Sorted element indices of the stabilizer of the chosen apex point.
    pub stabilizer: Vec<usize>,
}

impl Span {
    pub fn new(source: GSet, apex: GSet, target: GSet, left: Vec<usize>, right: Vec<usize>) -> Result<Self> {
        if !same_group(source.group(), apex.group()) || !same_group(apex.group(), target.group()) {
            return Err(Error::GroupMismatch);
        }
        if !apex.is_equivariant_map(&source, &left) {
            return Err(Error::NotEquivariant("left leg".into()));
        }
        if !apex.is_equivariant_map(&target, &right) {
            return Err(Error::NotEquivariant("right leg".into()));
        }
        Ok(Span { source, apex, target, left, right })
    }

    /// `T ← T → T` with both legs the identity.
    pub fn identity(t: &GSet) -> Self {
        let id: Vec<usize> = (0..t.size()).collect();
        Span { source: t.clone(), apex: t.clone(), target: t.clone(), left: id.clone(), right: id }
    }

    /// `S ← ∅ → T`.
    pub fn empty(source: &GSet, target: &GSet) -> Result<Self> {
        Span::new(source.clone(), GSet::empty(source.group().clone()), target.clone(), vec![], vec![])
    }

    pub fn source(&self) -> &GSet {
        &self.source
    }

    pub fn apex(&self) -> &GSet {
        &self.apex
    }

    pub fn target(&self) -> &GSet {
        &self.target
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    pub fn group(&self) -> &Group {
        self.apex.group()
    }

    /// One key per apex orbit, sorted.
    pub fn orbit_keys(&self) -> Vec<SpanKey> {
        let g = self.group();
        let mut keys: Vec<SpanKey> = self
            .apex
            .orbits()
            .into_iter()
            .map(|orbit| {
                orbit
                    .iter()
                    .map(|&u| SpanKey {
                        left: self.left[u],
                        right: self.right[u],
                        stabilizer: (0..g.order()).filter(|&x| self.apex.act(x, u) == u).collect(),
                    })
                    .min()
                    .expect("orbits are nonempty")
            })
            .collect();
        keys.sort();
        keys
    }

    /// `(f ⊗ g)`: product of apexes and of legs.
    pub fn product(&self, other: &Span) -> Result<Span> {
        let apex = self.apex.product(&other.apex)?;
        let m = other.apex.size();
        let (ls, rs) = (other.source.size(), other.target.size());
        let mut left = Vec::with_capacity(apex.size());
        let mut right = Vec::with_capacity(apex.size());
        for u in 0..self.apex.size() {
            for v in 0..m {
                left.push(self.left[u] * ls + other.left[v]);
                right.push(self.right[u] * rs + other.right[v]);
            }
        }
        Ok(Span {
            source: self.source.product(&other.source)?,
            apex,
            target: self.target.product(&other.target)?,
            left,
            right,
        })
    }

    /// Pullback composite: first `self`, then `next`.
    pub fn then(&self, next: &Span) -> Result<Span> {
        if self.target != next.source {
            return Err(Error::ObjectMismatch("target of the first span differs from source of the second"));
        }
        let g = self.group().clone();
        let m = next.apex.size();
        let mut index = vec![usize::MAX; self.apex.size() * m];
        let mut pairs = Vec::new();
        for u in 0..self.apex.size() {
            for v in 0..m {
                if self.right[u] == next.left[v] {
                    index[u * m + v] = pairs.len();
                    pairs.push((u, v));
                }
            }
        }
        let size = pairs.len();
        let mut action = Vec::with_capacity(g.order() * size);
        for x in 0..g.order() {
            for &(u, v) in &pairs {
                action.push(index[self.apex.act(x, u) * m + next.apex.act(x, v)]);
            }
        }
        let apex = GSet::from_action_unchecked(g, size, action);
        Ok(Span {
            source: self.source.clone(),
            apex,
            target: next.target.clone(),
            left: pairs.iter().map(|&(u, _)| self.left[u]).collect(),
            right: pairs.iter().map(|&(_, v)| next.right[v]).collect(),
        })
    }

    /// Span realizing a canonical key: apex `G/H` with the identity coset
    /// sent to `(key.left, key.right)`.
    pub fn from_key(source: &GSet, target: &GSet, key: &SpanKey) -> Result<Span> {
        let group = source.group().clone();
        let h = group.subgroup(&key.stabilizer)?;
        let apex = GSet::coset(group, &h)?;
        let left = apex.equivariant_map_from_orbit_images(source, &[key.left])?;
        let right = apex.equivariant_map_from_orbit_images(target, &[key.right])?;
        Ok(Span { source: source.clone(), apex, target: target.clone(), left, right })
    }
}

/// Spans are isomorphic iff their multisets of orbit keys agree.
pub fn span_iso_equal(a: &Span, b: &Span) -> bool {
    a.source == b.source
        && a.target == b.target
        && a.apex.size() == b.apex.size()
        && a.orbit_keys() == b.orbit_keys()
}

/// A formal combination of span isomorphism classes `S → T`, in canonical
/// form: one entry per class, no zero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct SpanMorphism<C> {
    source: GSet,
    target: GSet,
    terms: BTreeMap<SpanKey, C>,
}

impl<C: Coefficient> SpanMorphism<C> {
    pub fn zero(source: &GSet, target: &GSet) -> Result<Self> {
        if !same_group(source.group(), target.group()) {
            return Err(Error::GroupMismatch);
        }
        Ok(SpanMorphism { source: source.clone(), target: target.clone(), terms: BTreeMap::new() })
    }

    pub fn from_span(span: &Span, coeff: C) -> Self {
        let mut f = SpanMorphism { source: span.source.clone(), target: span.target.clone(), terms: BTreeMap::new() };
        for key in span.orbit_keys() {
            f.add_term(key, coeff.clone());
        }
        f
    }

    pub fn identity(t: &GSet) -> Self {
        Self::from_span(&Span::identity(t), C::one())
    }

    /// `Σ coeff · span`, canonicalized.
    pub fn from_terms(source: &GSet, target: &GSet, terms: &[(C, Span)]) -> Result<Self> {
        let mut f = Self::zero(source, target)?;
        for (c, s) in terms {
            if s.source != *source || s.target != *target {
                return Err(Error::ObjectMismatch("term does not share the morphism's source and target"));
            }
            for key in s.orbit_keys() {
                f.add_term(key, c.clone());
            }
        }
        Ok(f)
    }

    fn add_term(&mut self, key: SpanKey, c: C) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn source(&self) -> &GSet {
        &self.source
    }

    pub fn target(&self) -> &GSet {
        &self.target
    }

    pub fn group(&self) -> &Group {
        self.source.group()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Canonical terms as `(key, coefficient)` in key order.
    pub fn keyed_terms(&self) -> impl Iterator<Item = (&SpanKey, &C)> {
        self.terms.iter()
    }

    /// Canonical terms with each class realized by a transitive span.
    pub fn terms(&self) -> Vec<(C, Span)> {
        self.terms
            .iter()
            .map(|(k, c)| (c.clone(), Span::from_key(&self.source, &self.target, k).expect("canonical key")))
            .collect()
    }

    fn check_parallel(&self, other: &Self) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::ObjectMismatch("morphisms have different source or target"));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_parallel(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = SpanMorphism { source: self.source.clone(), target: self.target.clone(), terms: BTreeMap::new() };
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-C::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> SpanMorphism<D> {
        let mut out = SpanMorphism { source: self.source.clone(), target: self.target.clone(), terms: BTreeMap::new() };
        for (k, v) in &self.terms {
            out.add_term(k.clone(), f(v));
        }
        out
    }

    /// `self` followed by `next` (`next ∘ self`), by pullback.
    pub fn compose(&self, next: &Self) -> Result<Self> {
        if self.target != next.source {
            return Err(Error::ObjectMismatch("target of the first morphism differs from source of the second"));
        }
        let mut out = Self::zero(&self.source, &next.target)?;
        let firsts = self.terms();
        let seconds = next.terms();
        for (c1, s1) in &firsts {
            for (c2, s2) in &seconds {
                let c = c1.clone() * c2.clone();
                for key in s1.then(s2)?.orbit_keys() {
                    out.add_term(key, c.clone());
                }
            }
        }
        Ok(out)
    }

    pub fn monoidal_product(&self, other: &Self) -> Result<Self> {
        if !same_group(self.group(), other.group()) {
            return Err(Error::GroupMismatch);
        }
        let mut out = Self::zero(&self.source.product(&other.source)?, &self.target.product(&other.target)?)?;
        let lhs = self.terms();
        let rhs = other.terms();
        for (c1, s1) in &lhs {
            for (c2, s2) in &rhs {
                let c = c1.clone() * c2.clone();
                for key in s1.product(s2)?.orbit_keys() {
                    out.add_term(key, c.clone());
                }
            }
        }
        Ok(out)
    }

    pub fn is_idempotent(&self) -> Result<bool> {
        if !self.is_endomorphism() {
            return Err(Error::NotAnEndomorphism);
        }
        Ok(self.compose(self)? == *self)
    }

    /// `Σ_t U_{t,t}`: the diagonal sub-G-set of each apex, by orbit type.
    pub fn trace_direct(&self) -> Result<BurnsideElement<C>> {
        if !self.is_endomorphism() {
            return Err(Error::NotAnEndomorphism);
        }
        let group = self.group().clone();
        let mut out = BurnsideElement::<C>::zero(&group)?;
        for (c, span) in self.terms() {
            let diag: Vec<usize> = (0..span.apex.size()).filter(|&u| span.left[u] == span.right[u]).collect();
            let counts = span.apex.restrict(&diag)?.orbit_type()?.counts;
            for (k, n) in counts.into_iter().enumerate() {
                if n > 0 {
                    out.coeffs[k] = out.coeffs[k].clone() + c.clone() * C::from_i64(n as i64);
                }
            }
        }
        Ok(out)
    }

    /// `ε ∘ τ ∘ (f ⊗ 1_T) ∘ η` as an endomorphism of `∗`.
    pub fn trace_categorical(&self) -> Result<BurnsideElement<C>> {
        if !self.is_endomorphism() {
            return Err(Error::NotAnEndomorphism);
        }
        let t = &self.source;
        let group = self.group().clone();
        let star = GSet::point(group.clone());
        let tt = t.product(t)?;
        let n = t.size();
        let diag: Vec<usize> = (0..n).map(|x| x * n + x).collect();
        let eta = Span::new(star.clone(), t.clone(), tt.clone(), vec![0; n], diag.clone())?;
        let eps = Span::new(tt.clone(), t.clone(), star.clone(), diag, vec![0; n])?;
        let swap: Vec<usize> = (0..n * n).map(|p| (p % n) * n + p / n).collect();
        let tau = Span::new(tt.clone(), tt.clone(), tt.clone(), (0..n * n).collect(), swap)?;
        let f1 = self.monoidal_product(&Self::identity(t))?;
        let end = Self::from_span(&eta, C::one())
            .compose(&f1)?
            .compose(&Self::from_span(&tau, C::one()))?
            .compose(&Self::from_span(&eps, C::one()))?;
        let mut out = BurnsideElement::<C>::zero(&group)?;
        for (key, c) in &end.terms {
            let h = group.subgroup(&key.stabilizer)?;
            let k = group.subgroup_class_of(&h)?;
            out.coeffs[k] = out.coeffs[k].clone() + c.clone();
        }
        Ok(out)
    }
}

pub fn compose<C: Coefficient>(f: &SpanMorphism<C>, g: &SpanMorphism<C>) -> Result<SpanMorphism<C>> {
    f.compose(g)
}

pub fn monoidal_product<C: Coefficient>(f: &SpanMorphism<C>, g: &SpanMorphism<C>) -> Result<SpanMorphism<C>> {
    f.monoidal_product(g)
}

pub fn trace_direct<C: Coefficient>(f: &SpanMorphism<C>) -> Result<BurnsideElement<C>> {
    f.trace_direct()
}

pub fn trace_categorical<C: Coefficient>(f: &SpanMorphism<C>) -> Result<BurnsideElement<C>> {
    f.trace_categorical()
}

/// `χ(T)`, the categorical trace of the identity of `T`.
pub fn euler_characteristic(t: &GSet) -> Result<BurnsideElement<i64>> {
    SpanMorphism::<i64>::identity(t).trace_categorical()
}

/// An element `Σ_K coeffs[K] · [G/K]` of the Burnside ring, `K` running over
/// subgroup classes in the group's class order.
#[derive(Clone, Debug, PartialEq)]
pub struct BurnsideElement<C = i64> {
    group: Group,
    coeffs: Vec<C>,
}

impl<C: Coefficient> BurnsideElement<C> {
    pub fn new(group: &Group, coeffs: Vec<C>) -> Result<Self> {
        let k = group.num_subgroup_classes()?;
        if coeffs.len() != k {
            return Err(Error::Precondition(format!("expected {k} coefficients, got {}", coeffs.len())));
        }
        Ok(BurnsideElement { group: group.clone(), coeffs })
    }

    pub fn zero(group: &Group) -> Result<Self> {
        Self::new(group, vec![C::zero(); group.num_subgroup_classes()?])
    }

    /// `[G/K_k]`.
    pub fn basis(group: &Group, k: usize) -> Result<Self> {
        let mut x = Self::zero(group)?;
        if k >= x.coeffs.len() {
            return Err(Error::Precondition(format!("no subgroup class {k}")));
        }
        x.coeffs[k] = C::one();
        Ok(x)
    }

    /// `[∗] = [G/G]`.
    pub fn one(group: &Group) -> Result<Self> {
        let k = group.num_subgroup_classes()?;
        Self::basis(group, k - 1)
    }

    /// The class of a G-set: its orbit decomposition.
    pub fn from_gset(t: &GSet) -> Result<Self> {
        let counts = t.orbit_type()?.counts;
        Self::new(t.group(), counts.into_iter().map(|c| C::from_i64(c as i64)).collect())
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(BurnsideElement { group: self.group.clone(), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        BurnsideElement { group: self.group.clone(), coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn scale(&self, s: &C) -> Self {
        BurnsideElement { group: self.group.clone(), coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect() }
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> BurnsideElement<D> {
        BurnsideElement { group: self.group.clone(), coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Product in `A(G)` from the orbit decompositions of `G/H × G/K`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let table = structure_constants(&self.group)?;
        let k = self.coeffs.len();
        let mut coeffs = vec![C::zero(); k];
        for (h, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (kk, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.clone() * b.clone();
                for (j, &n) in table[h][kk].iter().enumerate() {
                    if n != 0 {
                        coeffs[j] = coeffs[j].clone() + ab.clone() * C::from_i64(n);
                    }
                }
            }
        }
        Ok(BurnsideElement { group: self.group.clone(), coeffs })
    }

    /// Ghost coordinates `(Σ_K x_K · |(G/K)^H|)_H`.
    pub fn marks(&self) -> Result<Vec<C>> {
        let m = self.group.table_of_marks()?;
        Ok(m.iter()
            .map(|row| {
                row.iter()
                    .zip(&self.coeffs)
                    .fold(C::zero(), |acc, (&mk, x)| if mk == 0 { acc } else { acc + x.clone() * C::from_i64(mk) })
            })
            .collect())
    }

    pub fn is_idempotent(&self) -> Result<bool> {
        Ok(self.multiply(self)? == *self)
    }
}

pub fn ring_multiply<C: Coefficient>(x: &BurnsideElement<C>, y: &BurnsideElement<C>) -> Result<BurnsideElement<C>> {
    x.multiply(y)
}

pub fn marks<C: Coefficient>(x: &BurnsideElement<C>) -> Result<Vec<C>> {
    x.marks()
}

/// `table[H][K]` is the orbit-count vector of `G/H × G/K`.
fn structure_constants(group: &Group) -> Result<&Vec<Vec<Vec<i64>>>> {
    if let Some(t) = group.burnside_products.get() {
        return Ok(t);
    }
    let basis = transitive_gsets(group)?;
    let k = basis.len();
    let mut table = vec![vec![Vec::new(); k]; k];
    for h in 0..k {
        for kk in h..k {
            let counts: Vec<i64> = basis[h].product(&basis[kk])?.orbit_type()?.counts.into_iter().map(|c| c as i64).collect();
            table[kk][h] = counts.clone();
            table[h][kk] = counts;
        }
    }
    Ok(group.burnside_products.get_or_init(|| table))
}

pub const IDEMPOTENT_CLASS_BOUND: usize = 20;

/// All idempotents of `A(G)`, sorted by coefficient vector.
///
/// Idempotents are exactly the elements whose ghost vector is 0/1. The
/// marks matrix is upper triangular, so candidate ghost vectors are fixed
/// from the last class down and abandoned as soon as back substitution
/// leaves a non-integral coefficient.
pub fn idempotents(group: &Group) -> Result<Vec<BurnsideElement<i64>>> {
    let k = group.num_subgroup_classes()?;
    if k > IDEMPOTENT_CLASS_BOUND {
        return Err(Error::BoundExceeded { what: "number of subgroup classes", bound: IDEMPOTENT_CLASS_BOUND });
    }
    let m = group.table_of_marks()?;
    let mut found = Vec::new();
    let mut x = vec![0i64; k];
    ghost_search(m, k, &mut x, &mut found);
    let mut out: Vec<BurnsideElement<i64>> =
        found.into_iter().map(|c| BurnsideElement { group: group.clone(), coeffs: c }).collect();
    out.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
    Ok(out)
}

fn ghost_search(m: &[Vec<i64>], level: usize, x: &mut [i64], found: &mut Vec<Vec<i64>>) {
    if level == 0 {
        found.push(x.to_vec());
        return;
    }
    let h = level - 1;
    let rest: i64 = (level..x.len()).map(|kk| m[h][kk] * x[kk]).sum();
    for v in [0i64, 1] {
        let num = v - rest;
        if num % m[h][h] == 0 {
            x[h] = num / m[h][h];
            ghost_search(m, h, x, found);
        }
    }
    x[h] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{alternating_group, cyclic_group, klein_four, FiniteGroup};
    use crate::gsets::gset_from_orbit_counts;
    use crate::scalar::Rational;

    fn star(g: &Group) -> GSet {
        GSet::point(g.clone())
    }

    fn free_span(g: &Group) -> Span {
        let f = GSet::free(g.clone());
        let n = f.size();
        Span::new(star(g), f, star(g), vec![0; n], vec![0; n]).unwrap()
    }

    /// Exhaustive search for an apex bijection commuting with action and legs.
    fn iso_by_search(a: &Span, b: &Span) -> bool {
        let n = a.apex().size();
        if n != b.apex().size() {
            return false;
        }
        fn extend(a: &Span, b: &Span, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let u = map.len();
            if u == a.apex().size() {
                let g = a.group();
                return (0..g.order()).all(|x| (0..u).all(|p| map[a.apex().act(x, p)] == b.apex().act(x, map[p])));
            }
            for v in 0..used.len() {
                if !used[v] && a.left()[u] == b.left()[v] && a.right()[u] == b.right()[v] {
                    used[v] = true;
                    map.push(v);
                    if extend(a, b, map, used) {
                        return true;
                    }
                    map.pop();
                    used[v] = false;
                }
            }
            false
        }
        extend(a, b, &mut Vec::new(), &mut vec![false; n])
    }

    #[test]
    fn span_iso_examples() {
        let g = cyclic_group(2).unwrap();
        let s = free_span(&g);
        assert!(span_iso_equal(&s, &s));
        let two = GSet::trivial(g.clone(), 2);
        let fixed = Span::new(star(&g), two, star(&g), vec![0, 0], vec![0, 0]).unwrap();
        assert!(!span_iso_equal(&s, &fixed));
        assert!(!iso_by_search(&s, &fixed));
        let one = Span::identity(&star(&g));
        assert!(!span_iso_equal(&s, &one));
    }

    #[test]
    fn span_iso_agrees_with_search_on_klein() {
        let g = klein_four().unwrap();
        let t = gset_from_orbit_counts(&g, &[0, 1, 0, 0, 1]).unwrap();
        let apexes: Vec<GSet> = [[0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 1, 0, 0, 1], [0, 0, 0, 0, 2], [1, 0, 0, 0, 0]]
            .iter()
            .map(|c| gset_from_orbit_counts(&g, c).unwrap())
            .collect();
        let mut spans = Vec::new();
        for u in &apexes {
            let orbits = u.orbits();
            let choices = t.size().pow(orbits.len() as u32);
            for lc in 0..choices {
                for rc in 0..choices {
                    let pick = |mut c: usize| -> Vec<usize> {
                        (0..orbits.len()).map(|_| { let v = c % t.size(); c /= t.size(); v }).collect()
                    };
                    let (Ok(l), Ok(r)) = (
                        u.equivariant_map_from_orbit_images(&t, &pick(lc)),
                        u.equivariant_map_from_orbit_images(&t, &pick(rc)),
                    ) else { continue };
                    spans.push(Span::new(t.clone(), u.clone(), t.clone(), l, r).unwrap());
                }
            }
        }
        assert!(spans.len() > 10);
        for a in &spans {
            for b in &spans {
                assert_eq!(span_iso_equal(a, b), iso_by_search(a, b));
            }
        }
    }

    #[test]
    fn compose_free_orbits_over_z2() {
        let g = cyclic_group(2).unwrap();
        let f = SpanMorphism::from_span(&free_span(&g), 1i64);
        let ff = f.compose(&f).unwrap();
        assert_eq!(ff, f.scale(&2));
        let id = SpanMorphism::<i64>::identity(&star(&g));
        assert_eq!(id.compose(&f).unwrap(), f);
        assert_eq!(f.compose(&id).unwrap(), f);
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let g = cyclic_group(2).unwrap();
        let s = free_span(&g);
        let f = SpanMorphism::from_terms(&star(&g), &star(&g), &[(2i64, s.clone()), (-2, s.clone()), (0, Span::identity(&star(&g)))]).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.num_terms(), 0);
    }

    #[test]
    fn monoidal_product_examples() {
        let g = cyclic_group(2).unwrap();
        let f = SpanMorphism::from_span(&free_span(&g), 1i64);
        let id = SpanMorphism::<i64>::identity(&star(&g));
        let fi = f.monoidal_product(&id).unwrap();
        assert_eq!(fi.trace_direct().unwrap(), f.trace_direct().unwrap());
        let ff = f.monoidal_product(&f).unwrap();
        assert_eq!(ff.keyed_terms().map(|(_, c)| *c).collect::<Vec<_>>(), vec![2]);
        let zero = SpanMorphism::<i64>::zero(&star(&g), &star(&g)).unwrap();
        assert!(zero.monoidal_product(&f).unwrap().is_zero());
    }

    #[test]
    fn trace_examples() {
        let g = cyclic_group(2).unwrap();
        let free = GSet::free(g.clone());
        let id = SpanMorphism::<i64>::identity(&free);
        assert_eq!(id.trace_direct().unwrap().coeffs(), &[1, 0]);
        assert_eq!(id.trace_categorical().unwrap().coeffs(), &[1, 0]);
        let empty = SpanMorphism::from_span(&Span::empty(&free, &free).unwrap(), 1i64);
        assert!(empty.trace_direct().unwrap().is_zero());
        assert!(empty.trace_categorical().unwrap().is_zero());

        let triv = FiniteGroup::from_generators(1, vec![]).unwrap();
        let t = GSet::trivial(triv.clone(), 3);
        let tt = t.product(&t).unwrap();
        let l: Vec<usize> = (0..9).map(|p| p / 3).collect();
        let r: Vec<usize> = (0..9).map(|p| p % 3).collect();
        let f = SpanMorphism::from_span(&Span::new(t.clone(), tt, t.clone(), l, r).unwrap(), 1i64);
        assert_eq!(f.trace_direct().unwrap().coeffs(), &[3]);
        assert_eq!(f.trace_categorical().unwrap().coeffs(), &[3]);
    }

    #[test]
    fn trace_requires_endomorphism() {
        let g = cyclic_group(2).unwrap();
        let f = SpanMorphism::<i64>::zero(&star(&g), &GSet::free(g.clone())).unwrap();
        assert_eq!(f.trace_direct(), Err(Error::NotAnEndomorphism));
        assert_eq!(f.trace_categorical(), Err(Error::NotAnEndomorphism));
    }

    #[test]
    fn euler_characteristic_examples() {
        let g = cyclic_group(2).unwrap();
        assert_eq!(euler_characteristic(&star(&g)).unwrap(), BurnsideElement::one(&g).unwrap());
        assert_eq!(euler_characteristic(&GSet::free(g.clone())).unwrap().coeffs(), &[1, 0]);
        let k = klein_four().unwrap();
        let t = gset_from_orbit_counts(&k, &[0, 1, 0, 1, 0]).unwrap();
        assert_eq!(euler_characteristic(&t).unwrap().coeffs(), &[0, 1, 0, 1, 0]);
    }

    #[test]
    fn ring_examples() {
        let g = cyclic_group(2).unwrap();
        let one = BurnsideElement::<i64>::one(&g).unwrap();
        let free = BurnsideElement::<i64>::basis(&g, 0).unwrap();
        assert_eq!(one.multiply(&free).unwrap(), free);
        assert_eq!(free.multiply(&free).unwrap(), free.scale(&2));
        assert_eq!(one.marks().unwrap(), vec![1, 1]);
        assert_eq!(free.marks().unwrap(), vec![2, 0]);

        let k = klein_four().unwrap();
        let a = BurnsideElement::<i64>::basis(&k, 1).unwrap();
        let b = BurnsideElement::<i64>::basis(&k, 2).unwrap();
        assert_eq!(a.multiply(&b).unwrap(), BurnsideElement::basis(&k, 0).unwrap());
    }

    #[test]
    fn idempotent_counts() {
        for g in [cyclic_group(2).unwrap(), klein_four().unwrap(), cyclic_group(6).unwrap()] {
            let e = idempotents(&g).unwrap();
            assert_eq!(e.len(), 2);
            assert!(e[0].is_zero());
            assert_eq!(e[1], BurnsideElement::one(&g).unwrap());
        }
        let a5 = alternating_group(5).unwrap();
        let e = idempotents(&a5).unwrap();
        assert_eq!(e.len(), 4);
        let one = BurnsideElement::one(&a5).unwrap();
        for x in &e {
            assert!(x.is_idempotent().unwrap());
            assert!(e.contains(&one.sub(x).unwrap()));
        }
    }

    #[test]
    fn rational_coefficients_compose() {
        let g = cyclic_group(2).unwrap();
        let half = Rational::new(1.into(), 2.into());
        let f = SpanMorphism::from_span(&free_span(&g), half.clone());
        assert!(f.is_idempotent().unwrap());
        assert_eq!(f.trace_direct().unwrap().coeffs(), &[half.clone(), Rational::from_i64(0)]);
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use crate::groups::{cyclic_group, klein_four};
    use crate::random::{random_burnside_element, random_endomorphism, random_gset};
    use crate::scalar::Rational;
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
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn composition_is_associative(seed in any::<u64>(), gi in 0usize..5) {
            let g = group(gi);
            let mut rng = StdRng::seed_from_u64(seed);
            let t = random_gset(&g, &mut rng, 4).unwrap();
            let f = random_endomorphism(&t, &mut rng, 2, 4).unwrap();
            let h = random_endomorphism(&t, &mut rng, 2, 4).unwrap();
            let k = random_endomorphism(&t, &mut rng, 2, 4).unwrap();
            let lhs = f.compose(&h).unwrap().compose(&k).unwrap();
            let rhs = f.compose(&h.compose(&k).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            let id = SpanMorphism::<Rational>::identity(&t);
            prop_assert_eq!(id.compose(&f).unwrap(), f.clone());
            prop_assert_eq!(f.compose(&id).unwrap(), f);
        }

        #[test]
        fn marks_is_a_ring_homomorphism(seed in any::<u64>(), gi in 0usize..7) {
            let g = group(gi);
            let mut rng = StdRng::seed_from_u64(seed);
            let x = random_burnside_element(&g, &mut rng, 3).unwrap();
            let y = random_burnside_element(&g, &mut rng, 3).unwrap();
            let (mx, my) = (x.marks().unwrap(), y.marks().unwrap());
            let prod: Vec<i64> = mx.iter().zip(&my).map(|(a, b)| a * b).collect();
            prop_assert_eq!(x.multiply(&y).unwrap().marks().unwrap(), prod);
            let sum: Vec<i64> = mx.iter().zip(&my).map(|(a, b)| a + b).collect();
            prop_assert_eq!(x.add(&y).unwrap().marks().unwrap(), sum);
        }
    }
}
