//! Finite G-sets: the objects of the Burnside category.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{same_group, Group, Subgroup};

/// A finite set with a left action of a [`FiniteGroup`].
#[derive(Clone)]
pub struct GSet {
    group: Group,
    size: usize,
    /// `action[g * size + x] = g · x`.
    action: Vec<usize>,
}

impl PartialEq for GSet {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && same_group(&self.group, &other.group) && self.action == other.action
    }
}

impl Eq for GSet {}

impl fmt::Debug for GSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GSet")
            .field("group", &self.group.spec())
            .field("size", &self.size)
            .field("generator_actions", &self.generator_actions())
            .finish()
    }
}

/// Multiset of stabilizer classes: `counts[k]` orbits have stabilizer in class `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitType {
    pub counts: Vec<usize>,
}

impl OrbitType {
    pub fn num_orbits(&self) -> usize {
        self.counts.iter().sum()
    }

    /// The multiset as a sorted list of class indices.
    pub fn classes(&self) -> Vec<usize> {
        self.counts.iter().enumerate().flat_map(|(k, &c)| std::iter::repeat_n(k, c)).collect()
    }
}

impl GSet {
    /// Builds a G-set from a full action table, checking the action axioms.
    pub fn from_action_table(group: Group, size: usize, action: Vec<usize>) -> Result<Self> {
        if action.len() != group.order() * size {
            return Err(Error::InvalidGSet(format!(
                "action table has {} entries, expected {}",
                action.len(),
                group.order() * size
            )));
        }
        let set = GSet { group, size, action };
        set.validate()?;
        Ok(set)
    }

    pub(crate) fn from_action_unchecked(group: Group, size: usize, action: Vec<usize>) -> Self {
        debug_assert_eq!(action.len(), group.order() * size);
        GSet { group, size, action }
    }

    /// Builds a G-set from the image arrays of the group's generators;
    /// the action of other elements is derived by word evaluation.
    pub fn from_generator_actions(group: Group, size: usize, generator_actions: &[Vec<usize>]) -> Result<Self> {
        if generator_actions.len() != group.generators().len() {
            return Err(Error::InvalidGSet(format!(
                "expected {} generator actions, got {}",
                group.generators().len(),
                generator_actions.len()
            )));
        }
        for imgs in generator_actions {
            let mut seen = vec![false; size];
            if imgs.len() != size || imgs.iter().any(|&y| y >= size || std::mem::replace(&mut seen[y], true)) {
                return Err(Error::InvalidGSet(format!("generator action {imgs:?} is not a permutation of {size} points")));
            }
        }
        let n = group.order();
        let mut action = vec![0usize; n * size];
        for x in 0..size {
            action[x] = x;
        }
        for g in 1..n {
            let (parent, s) = group.word_step(g).expect("non-identity element has a word");
            for x in 0..size {
                action[g * size + x] = generator_actions[s][action[parent * size + x]];
            }
        }
        GSet::from_action_table(group, size, action)
    }

    fn validate(&self) -> Result<()> {
        let n = self.group.order();
        for x in 0..self.size {
            if self.act(0, x) != x {
                return Err(Error::InvalidGSet("identity does not act trivially".into()));
            }
        }
        for g in 0..n {
            let mut seen = vec![false; self.size];
            for x in 0..self.size {
                let y = self.act(g, x);
                if y >= self.size || std::mem::replace(&mut seen[y], true) {
                    return Err(Error::InvalidGSet(format!("element {g} does not act bijectively")));
                }
            }
        }
        let gens = self.group.generator_indices();
        for &s in &gens {
            for g in 0..n {
                let sg = self.group.mul(s, g);
                for x in 0..self.size {
                    if self.act(sg, x) != self.act(s, self.act(g, x)) {
                        return Err(Error::InvalidGSet("table is not a group action".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn empty(group: Group) -> Self {
        GSet { group, size: 0, action: Vec::new() }
    }

    /// `n` points with trivial action.
    pub fn trivial(group: Group, n: usize) -> Self {
        let order = group.order();
        let action = (0..order).flat_map(|_| 0..n).collect();
        GSet { group, size: n, action }
    }

    /// The one-point G-set `∗`.
    pub fn point(group: Group) -> Self {
        GSet::trivial(group, 1)
    }

    /// Left translation on the cosets `G/H`; cosets are numbered by their
    /// smallest element index.
    pub fn coset(group: Group, h: &Subgroup) -> Result<Self> {
        let h = group.subgroup(h.elements())?;
        let n = group.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            for &x in h.elements() {
                coset_of[group.mul(g, x)] = reps.len();
            }
            reps.push(g);
        }
        let size = reps.len();
        let mut action = vec![0usize; n * size];
        for a in 0..n {
            for (c, &r) in reps.iter().enumerate() {
                action[a * size + c] = coset_of[group.mul(a, r)];
            }
        }
        Ok(GSet { group, size, action })
    }

    /// The free orbit `G/1`.
    pub fn free(group: Group) -> Self {
        let h = group.trivial_subgroup();
        GSet::coset(group, &h).expect("trivial subgroup")
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g * self.size + x]
    }

    pub fn generator_actions(&self) -> Vec<Vec<usize>> {
        self.group
            .generator_indices()
            .into_iter()
            .map(|g| (0..self.size).map(|x| self.act(g, x)).collect())
            .collect()
    }

    fn check_group(&self, other: &GSet) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    /// `self ⊔ other`; `self` occupies the first `|self|` points.
    pub fn disjoint_union(&self, other: &GSet) -> Result<GSet> {
        self.check_group(other)?;
        let size = self.size + other.size;
        let n = self.group.order();
        let mut action = Vec::with_capacity(n * size);
        for g in 0..n {
            action.extend((0..self.size).map(|x| self.act(g, x)));
            action.extend((0..other.size).map(|y| other.act(g, y) + self.size));
        }
        Ok(GSet { group: self.group.clone(), size, action })
    }

    /// Diagonal action on `self × other`; `(x, y)` is point `x·|other| + y`.
    pub fn product(&self, other: &GSet) -> Result<GSet> {
        self.check_group(other)?;
        let size = self.size * other.size;
        let n = self.group.order();
        let mut action = Vec::with_capacity(n * size);
        for g in 0..n {
            for x in 0..self.size {
                let gx = self.act(g, x);
                action.extend((0..other.size).map(|y| gx * other.size + other.act(g, y)));
            }
        }
        Ok(GSet { group: self.group.clone(), size, action })
    }

    /// Sorted points fixed by every element of `h`.
    pub fn fixed_points(&self, h: &Subgroup) -> Vec<usize> {
        (0..self.size).filter(|&x| h.elements().iter().all(|&g| self.act(g, x) == x)).collect()
    }

    pub fn fixed_point_count_of(&self, g: usize) -> usize {
        (0..self.size).filter(|&x| self.act(g, x) == x).count()
    }

    /// Orbits, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for x in 0..self.size {
            if seen[x] {
                continue;
            }
            let mut orbit: Vec<usize> = (0..self.group.order()).map(|g| self.act(g, x)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &y in &orbit {
                seen[y] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn stabilizer(&self, x: usize) -> Subgroup {
        let els: Vec<usize> = (0..self.group.order()).filter(|&g| self.act(g, x) == x).collect();
        self.group.subgroup(&els).expect("stabilizers are subgroups")
    }

    pub fn orbit_type(&self) -> Result<OrbitType> {
        let mut counts = vec![0usize; self.group.num_subgroup_classes()?];
        for orbit in self.orbits() {
            counts[self.group.subgroup_class_of(&self.stabilizer(orbit[0]))?] += 1;
        }
        Ok(OrbitType { counts })
    }

    /// Finite G-sets are classified by their orbit types.
    pub fn is_isomorphic(&self, other: &GSet) -> Result<bool> {
        self.check_group(other)?;
        if self.size != other.size {
            return Ok(false);
        }
        Ok(self.orbit_type()? == other.orbit_type()?)
    }

    /// The invariant subset `points` as a G-set, numbered in the given order.
    pub fn restrict(&self, points: &[usize]) -> Result<GSet> {
        let pos: HashMap<usize, usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        if pos.len() != points.len() {
            return Err(Error::InvalidGSet("repeated point in restriction".into()));
        }
        let n = self.group.order();
        let mut action = Vec::with_capacity(n * points.len());
        for g in 0..n {
            for &p in points {
                let q = self.act(g, p);
                action.push(*pos.get(&q).ok_or_else(|| Error::InvalidGSet("subset is not invariant".into()))?);
            }
        }
        Ok(GSet { group: self.group.clone(), size: points.len(), action })
    }

    pub fn is_equivariant_map(&self, target: &GSet, map: &[usize]) -> bool {
        map.len() == self.size
            && map.iter().all(|&y| y < target.size)
            && self.group.generator_indices().into_iter().all(|g| {
                (0..self.size).all(|x| map[self.act(g, x)] == target.act(g, map[x]))
            })
    }

    /// The equivariant map sending the smallest point of the `k`-th orbit to
    /// `images[k]`; fails when a stabilizer does not fix its chosen image.
    pub fn equivariant_map_from_orbit_images(&self, target: &GSet, images: &[usize]) -> Result<Vec<usize>> {
        self.check_group(target)?;
        let orbits = self.orbits();
        if orbits.len() != images.len() {
            return Err(Error::Precondition(format!("expected {} orbit images, got {}", orbits.len(), images.len())));
        }
        let mut map = vec![usize::MAX; self.size];
        for (orbit, &t) in orbits.iter().zip(images) {
            if t >= target.size {
                return Err(Error::Precondition(format!("image {t} outside target")));
            }
            let x0 = orbit[0];
            for g in 0..self.group.order() {
                let gx = self.act(g, x0);
                let gt = target.act(g, t);
                if map[gx] == usize::MAX {
                    map[gx] = gt;
                } else if map[gx] != gt {
                    return Err(Error::NotEquivariant(format!("stabilizer of point {x0} does not fix {t}")));
                }
            }
        }
        Ok(map)
    }
}

/// Every transitive G-set `G/H`, one per subgroup class, in class order.
pub fn transitive_gsets(group: &Group) -> Result<Vec<GSet>> {
    group
        .subgroup_conjugacy_classes()?
        .iter()
        .map(|h| GSet::coset(group.clone(), h))
        .collect()
}

/// `⊔_k counts[k] · G/H_k`.
pub fn gset_from_orbit_counts(group: &Group, counts: &[usize]) -> Result<GSet> {
    let basis = transitive_gsets(group)?;
    if counts.len() != basis.len() {
        return Err(Error::Precondition("orbit counts length differs from the number of subgroup classes".into()));
    }
    let mut out = GSet::empty(group.clone());
    for (b, &c) in basis.iter().zip(counts) {
        for _ in 0..c {
            out = out.disjoint_union(b)?;
        }
    }
    Ok(out)
}

/// Shorthand used where a group is an argument.
pub fn coset_gset(group: &Group, h: &Subgroup) -> Result<GSet> {
    GSet::coset(group.clone(), h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic_group, dihedral_group, klein_four, alternating_group};

    #[test]
    fn coset_sets() {
        let z2 = cyclic_group(2).unwrap();
        let free = GSet::free(z2.clone());
        assert_eq!(free.size(), 2);
        assert_eq!(free.fixed_point_count_of(1), 0);
        let whole = z2.whole_group();
        let pt = GSet::coset(z2.clone(), &whole).unwrap();
        assert_eq!(pt.size(), 1);
        assert_eq!(pt.fixed_points(&whole), vec![0]);

        let a5 = alternating_group(5).unwrap();
        let a4 = a5.subgroup_conjugacy_classes().unwrap()[7].clone();
        assert_eq!(a4.order(), 12);
        let five = GSet::coset(a5, &a4).unwrap();
        assert_eq!(five.size(), 5);
        assert_eq!(five.orbits().len(), 1);
    }

    #[test]
    fn disjoint_union_cases() {
        let z2 = cyclic_group(2).unwrap();
        let free = GSet::free(z2.clone());
        let e = GSet::empty(z2.clone());
        assert_eq!(e.disjoint_union(&free).unwrap(), free);
        let twice = free.disjoint_union(&free).unwrap();
        assert_eq!(twice.orbit_type().unwrap().counts, vec![2, 0]);
        let three = free.disjoint_union(&GSet::point(z2.clone())).unwrap();
        assert_eq!(three.size(), 3);
        assert_eq!(three.fixed_point_count_of(1), 1);
        assert!(matches!(free.disjoint_union(&GSet::point(klein_four().unwrap())), Err(Error::GroupMismatch)));
    }

    #[test]
    fn product_cases() {
        let z2 = cyclic_group(2).unwrap();
        let free = GSet::free(z2.clone());
        assert_eq!(GSet::point(z2.clone()).product(&free).unwrap(), free);
        let sq = free.product(&free).unwrap();
        assert_eq!(sq.size(), 4);
        assert_eq!(sq.orbit_type().unwrap().counts, vec![2, 0]);
        assert!(free.product(&GSet::empty(z2)).unwrap().is_empty());
    }

    #[test]
    fn fixed_point_cases() {
        let z2 = cyclic_group(2).unwrap();
        let free = GSet::free(z2.clone());
        assert_eq!(free.fixed_points(&z2.trivial_subgroup()), vec![0, 1]);
        assert!(free.fixed_points(&z2.whole_group()).is_empty());
        let z4 = cyclic_group(4).unwrap();
        let h = z4.subgroup_conjugacy_classes().unwrap()[1].clone();
        assert_eq!(h.order(), 2);
        let x = GSet::coset(z4, &h).unwrap();
        assert_eq!(x.fixed_points(&h), vec![0, 1]);
    }

    #[test]
    fn orbit_type_cases() {
        let z2 = cyclic_group(2).unwrap();
        assert_eq!(GSet::empty(z2.clone()).orbit_type().unwrap().num_orbits(), 0);
        let free = GSet::free(z2.clone());
        let f4 = free.disjoint_union(&free).unwrap();
        assert_eq!(f4.orbit_type().unwrap().classes(), vec![0, 0]);
        let v = klein_four().unwrap();
        let subs = v.subgroup_conjugacy_classes().unwrap();
        let x = GSet::coset(v.clone(), &subs[1]).unwrap().disjoint_union(&GSet::coset(v.clone(), &subs[2]).unwrap()).unwrap();
        assert_eq!(x.orbit_type().unwrap().classes(), vec![1, 2]);
    }

    #[test]
    fn isomorphism_cases() {
        let z2 = cyclic_group(2).unwrap();
        let free = GSet::free(z2.clone());
        assert!(free.is_isomorphic(&free).unwrap());
        assert!(!free.is_isomorphic(&GSet::trivial(z2, 2)).unwrap());
        let v = klein_four().unwrap();
        let a = gset_from_orbit_counts(&v, &[1, 0, 0, 0, 2]).unwrap();
        let b = gset_from_orbit_counts(&v, &[0, 1, 1, 1, 0]).unwrap();
        assert_eq!(a.size(), 6);
        assert_eq!(b.size(), 6);
        assert!(!a.is_isomorphic(&b).unwrap());
    }

    #[test]
    fn generator_actions_round_trip() {
        let d4 = dihedral_group(4).unwrap();
        let subs = d4.subgroup_conjugacy_classes().unwrap().to_vec();
        for h in &subs {
            let x = GSet::coset(d4.clone(), h).unwrap();
            let y = GSet::from_generator_actions(d4.clone(), x.size(), &x.generator_actions()).unwrap();
            assert_eq!(x, y);
        }
    }

    #[test]
    fn non_action_rejected() {
        // (0 1) for the generator of Z/3 violates g^3 = 1.
        let z3 = cyclic_group(3).unwrap();
        assert!(GSet::from_generator_actions(z3, 2, &[vec![1, 0]]).is_err());
    }

    #[test]
    fn equivariant_map_construction() {
        let z4 = cyclic_group(4).unwrap();
        let free = GSet::free(z4.clone());
        let pt = GSet::point(z4.clone());
        let m = free.equivariant_map_from_orbit_images(&pt, &[0]).unwrap();
        assert!(free.is_equivariant_map(&pt, &m));
        assert!(pt.equivariant_map_from_orbit_images(&free, &[0]).is_err());
    }
}
