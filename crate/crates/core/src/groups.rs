//! Concrete finite groups as permutation groups.
//!
//! A [`FiniteGroup`] is built by breadth-first closure of its generators and
//! carries every derived table eagerly: multiplication and inverse tables,
//! element conjugacy classes, conjugacy classes of subgroups and the table
//! of marks. Element indices refer to positions in [`FiniteGroup::elements`];
//! index 0 is always the identity.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

pub const DEFAULT_ORDER_BOUND: usize = 10_000;
/// Largest group order for which subgroup classes (and marks) are computed.
pub const SUBGROUP_ENUMERATION_BOUND: usize = 1_000;
const MUL_TABLE_BOUND: usize = 2_048;

/// A bijection of `{0, …, degree-1}`; `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree).collect() }
    }

    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::InvalidPermutation(format!("point {a} outside degree {degree}")));
                }
                if touched[a] {
                    return Err(Error::InvalidPermutation(format!("point {a} repeated in cycle notation")));
                }
                touched[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }

    /// Parses cycle notation such as `(0 1 2)(3 4)`; `()` is the identity.
    /// Without an explicit degree the smallest degree containing every point is used.
    pub fn parse_cycles(s: &str, degree: Option<usize>) -> Result<Self> {
        let cycles = parse_cycle_list(s)?;
        let needed = cycles.iter().flatten().map(|&x| x + 1).max().unwrap_or(1);
        let degree = degree.unwrap_or(needed);
        if needed > degree {
            return Err(Error::Parse(format!("cycle '{s}' moves points beyond degree {degree}")));
        }
        Permutation::from_cycles(degree, &cycles).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_cycle_list(s: &str) -> Result<Vec<Vec<usize>>> {
    let bad = |msg: &str| Error::Parse(format!("invalid cycle notation '{s}': {msg}"));
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    if rest.is_empty() {
        return Err(bad("empty"));
    }
    while !rest.is_empty() {
        let inner_start = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
        let close = inner_start.find(')').ok_or_else(|| bad("unclosed '('"))?;
        let body = &inner_start[..close];
        let points: Vec<usize> = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| bad("non-numeric point")))
            .collect::<Result<_>>()?;
        if points.len() > 1 {
            cycles.push(points);
        }
        rest = inner_start[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// A subgroup given by its sorted element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    fn bits(&self, group_order: usize) -> Vec<u64> {
        let mut bits = vec![0u64; group_order.div_ceil(64)];
        for &e in &self.elements {
            bits[e / 64] |= 1 << (e % 64);
        }
        bits
    }
}

#[derive(Debug)]
struct SubgroupTables {
    /// One representative per conjugacy class, by increasing order.
    classes: Vec<Subgroup>,
    /// Every subgroup (as a bitset) mapped to its class index.
    lookup: HashMap<Vec<u64>, usize>,
    class_sizes: Vec<usize>,
    marks: Vec<Vec<i64>>,
}

/// A finite permutation group with eagerly computed derived tables.
pub struct FiniteGroup {
    spec: String,
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Vec<usize>, usize>,
    /// `elements[i] = generators[word[i].1] ∘ elements[word[i].0]` for `i > 0`.
    word: Vec<(usize, usize)>,
    mul_table: Option<Vec<u32>>,
    inverses: Vec<usize>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    subgroups: Option<SubgroupTables>,
    pub(crate) burnside_products: OnceLock<Vec<Vec<Vec<i64>>>>,
}

pub type Group = Arc<FiniteGroup>;

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("spec", &self.spec).field("order", &self.order()).finish()
    }
}

/// Same group up to identical element numbering.
pub fn same_group(a: &Group, b: &Group) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl FiniteGroup {
    /// The group generated by `generators`, all of degree `degree`.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Group> {
        Self::from_generators_with_bound(degree, generators, DEFAULT_ORDER_BOUND)
    }

    pub fn from_generators_with_bound(degree: usize, generators: Vec<Permutation>, bound: usize) -> Result<Group> {
        let spec = perm_spec(degree, &generators);
        Self::build(spec, degree, generators, bound)
    }

    fn build(spec: String, degree: usize, generators: Vec<Permutation>, bound: usize) -> Result<Group> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id.images.clone(), 0usize);
        let mut word = vec![(0usize, usize::MAX)];
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for (s, gen) in generators.iter().enumerate() {
                let p = gen.compose(&elements[e]);
                if !index.contains_key(&p.images) {
                    if elements.len() >= bound {
                        return Err(Error::OrderBoundExceeded { bound });
                    }
                    index.insert(p.images.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                    word.push((e, s));
                }
            }
        }
        let n = elements.len();
        let lookup = |p: &Permutation| index[&p.images];
        let inverses: Vec<usize> = elements.iter().map(|p| lookup(&p.inverse())).collect();
        let mul_table = (n <= MUL_TABLE_BOUND).then(|| {
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    t[a * n + b] = lookup(&elements[a].compose(&elements[b])) as u32;
                }
            }
            t
        });
        let mut group = FiniteGroup {
            spec,
            degree,
            generators,
            elements,
            index,
            word,
            mul_table,
            inverses,
            class_of: Vec::new(),
            classes: Vec::new(),
            subgroups: None,
            burnside_products: OnceLock::new(),
        };
        group.compute_classes();
        if n <= SUBGROUP_ENUMERATION_BOUND {
            group.subgroups = Some(group.compute_subgroups());
        }
        Ok(Arc::new(group))
    }

    /// Parses `cyclic:n`, `klein4`, `alt:n`, `sym:n`, `dihedral:n` or
    /// `perm:(0 1 2),(3 4)` (optionally suffixed with `;n=<degree>`).
    pub fn from_spec(spec: &str) -> Result<Group> {
        let s: String = spec.split_whitespace().collect::<Vec<_>>().join(" ");
        let s = s.trim();
        let num = |t: &str| -> Result<usize> {
            t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("invalid group spec '{spec}'")))
        };
        if s == "klein4" {
            return klein_four();
        }
        if let Some(n) = s.strip_prefix("cyclic:") {
            return cyclic_group(num(n)?);
        }
        if let Some(n) = s.strip_prefix("alt:") {
            return alternating_group(num(n)?);
        }
        if let Some(n) = s.strip_prefix("sym:") {
            return symmetric_group(num(n)?);
        }
        if let Some(n) = s.strip_prefix("dihedral:") {
            return dihedral_group(num(n)?);
        }
        if let Some(body) = s.strip_prefix("perm:") {
            let (body, degree) = match body.split_once(";n=") {
                Some((b, d)) => (b, Some(num(d)?)),
                None => (body, None),
            };
            let parts: Vec<&str> = split_generators(body);
            let cycles: Vec<Vec<Vec<usize>>> = parts.iter().map(|p| parse_cycle_list(p)).collect::<Result<_>>()?;
            let needed = cycles.iter().flatten().flatten().map(|&x| x + 1).max().unwrap_or(1);
            let degree = degree.unwrap_or(needed);
            if needed > degree {
                return Err(Error::Parse(format!("group spec '{spec}' moves points beyond degree {degree}")));
            }
            let gens = cycles
                .iter()
                .map(|c| Permutation::from_cycles(degree, c))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| Error::Parse(e.to_string()))?;
            return FiniteGroup::from_generators(degree, gens);
        }
        Err(Error::Parse(format!("unrecognised group spec '{spec}'")))
    }

    fn with_spec(spec: String, degree: usize, generators: Vec<Permutation>) -> Result<Group> {
        Self::build(spec, degree, generators, DEFAULT_ORDER_BOUND)
    }

    /// The canonical spec string; [`FiniteGroup::from_spec`] rebuilds an equal group.
    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(&p.images).copied()
    }

    /// Generator indices `(parent, generator)` describing element `i` as a word.
    pub fn word_step(&self, i: usize) -> Option<(usize, usize)> {
        (i != 0).then(|| self.word[i])
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.mul_table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b]).images],
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g h g⁻¹`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.index[&g.images]).collect()
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    /// Element conjugacy classes, ordered by their smallest element (identity first).
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order()
    }

    fn compute_classes(&mut self) {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let mut class: Vec<usize> = (0..n).map(|g| self.conjugate(g, x)).collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                class_of[y] = classes.len();
            }
            classes.push(class);
        }
        self.class_of = class_of;
        self.classes = classes;
    }

    /// Closure of a set of elements under multiplication.
    pub fn subgroup_generated_by(&self, gens: &[usize]) -> Subgroup {
        let n = self.order();
        let mut present = vec![false; n];
        present[0] = true;
        let mut members = vec![0usize];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(s, x);
                if !present[y] {
                    present[y] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        Subgroup { elements: members }
    }

    /// Validates a set of element indices as a subgroup.
    pub fn subgroup(&self, elements: &[usize]) -> Result<Subgroup> {
        let mut els: Vec<usize> = elements.to_vec();
        els.sort_unstable();
        els.dedup();
        if els.iter().any(|&e| e >= self.order()) || els.first() != Some(&0) {
            return Err(Error::NotASubgroup);
        }
        let sub = Subgroup { elements: els };
        for &a in sub.elements() {
            for &b in sub.elements() {
                if !sub.contains(self.mul(a, b)) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        Ok(sub)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { elements: vec![0] }
    }

    pub fn whole_group(&self) -> Subgroup {
        Subgroup { elements: (0..self.order()).collect() }
    }

    fn conjugate_subgroup(&self, g: usize, h: &Subgroup) -> Subgroup {
        let mut els: Vec<usize> = h.elements.iter().map(|&x| self.conjugate(g, x)).collect();
        els.sort_unstable();
        Subgroup { elements: els }
    }

    fn compute_subgroups(&self) -> SubgroupTables {
        let n = self.order();
        // Every subgroup is a join of cyclic subgroups, so closing the set of
        // cyclic subgroups under joins with a cyclic subgroup reaches all of them.
        let mut cyclic_gens: Vec<usize> = Vec::new();
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut all: Vec<(Subgroup, Vec<usize>)> = Vec::new();
        for g in 0..n {
            let c = self.subgroup_generated_by(&[g]);
            if seen.insert(c.bits(n)) {
                cyclic_gens.push(g);
                all.push((c, if g == 0 { vec![] } else { vec![g] }));
            }
        }
        let mut frontier: Vec<usize> = (0..all.len()).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &hi in &frontier {
                for &g in &cyclic_gens {
                    if all[hi].0.contains(g) {
                        continue;
                    }
                    let mut gens = all[hi].1.clone();
                    gens.push(g);
                    let j = self.subgroup_generated_by(&gens);
                    if seen.insert(j.bits(n)) {
                        next.push(all.len());
                        all.push((j, gens));
                    }
                }
            }
            frontier = next;
        }

        let mut class_id = vec![usize::MAX; all.len()];
        let pos: HashMap<Vec<u64>, usize> = all.iter().enumerate().map(|(i, (s, _))| (s.bits(n), i)).collect();
        let mut raw_classes: Vec<(Subgroup, Vec<usize>)> = Vec::new();
        for i in 0..all.len() {
            if class_id[i] != usize::MAX {
                continue;
            }
            let mut members = Vec::new();
            for g in 0..n {
                let c = self.conjugate_subgroup(g, &all[i].0);
                let j = pos[&c.bits(n)];
                if class_id[j] == usize::MAX {
                    class_id[j] = raw_classes.len();
                    members.push(j);
                }
            }
            let rep = members.iter().map(|&j| all[j].0.clone()).min().expect("nonempty class");
            raw_classes.push((rep, members));
        }
        let mut order: Vec<usize> = (0..raw_classes.len()).collect();
        order.sort_by(|&a, &b| {
            let (sa, sb) = (&raw_classes[a].0, &raw_classes[b].0);
            sa.order().cmp(&sb.order()).then_with(|| sa.elements.cmp(&sb.elements))
        });
        let mut rank = vec![0; raw_classes.len()];
        for (r, &c) in order.iter().enumerate() {
            rank[c] = r;
        }
        let mut lookup = HashMap::new();
        for (i, (s, _)) in all.iter().enumerate() {
            lookup.insert(s.bits(n), rank[class_id[i]]);
        }
        let classes: Vec<Subgroup> = order.iter().map(|&c| raw_classes[c].0.clone()).collect();
        let class_sizes: Vec<usize> = order.iter().map(|&c| raw_classes[c].1.len()).collect();
        let gens_of: Vec<Vec<usize>> = classes
            .iter()
            .map(|s| all[pos[&s.bits(n)]].1.clone())
            .collect();
        let k = classes.len();
        let mut marks = vec![vec![0i64; k]; k];
        for (hi, h_gens) in gens_of.iter().enumerate() {
            for (ki, kk) in classes.iter().enumerate() {
                if classes[hi].order() > kk.order() || kk.order() % classes[hi].order() != 0 {
                    continue;
                }
                let count = (0..n)
                    .filter(|&g| {
                        let gi = self.inv(g);
                        h_gens.iter().all(|&h| kk.contains(self.conjugate(gi, h)))
                    })
                    .count();
                marks[hi][ki] = (count / kk.order()) as i64;
            }
        }
        SubgroupTables { classes, lookup, class_sizes, marks }
    }

    fn subgroup_tables(&self) -> Result<&SubgroupTables> {
        self.subgroups
            .as_ref()
            .ok_or(Error::BoundExceeded { what: "group order for subgroup enumeration", bound: SUBGROUP_ENUMERATION_BOUND })
    }

    /// One representative per conjugacy class of subgroups, by increasing order;
    /// the trivial subgroup comes first and the whole group last.
    pub fn subgroup_conjugacy_classes(&self) -> Result<&[Subgroup]> {
        Ok(&self.subgroup_tables()?.classes)
    }

    pub fn num_subgroup_classes(&self) -> Result<usize> {
        Ok(self.subgroup_tables()?.classes.len())
    }

    /// Number of subgroups conjugate to each representative.
    pub fn subgroup_class_sizes(&self) -> Result<&[usize]> {
        Ok(&self.subgroup_tables()?.class_sizes)
    }

    /// Conjugacy-class index of a subgroup.
    pub fn subgroup_class_of(&self, h: &Subgroup) -> Result<usize> {
        let t = self.subgroup_tables()?;
        t.lookup.get(&h.bits(self.order())).copied().ok_or(Error::NotASubgroup)
    }

    /// `marks[H][K] = |(G/K)^H|`, rows and columns in subgroup-class order.
    /// Nonzero entries satisfy `|H| ≤ |K|`, so the matrix is upper triangular
    /// with positive diagonal `[N_G(H) : H]`.
    pub fn table_of_marks(&self) -> Result<&[Vec<i64>]> {
        Ok(&self.subgroup_tables()?.marks)
    }
}

fn split_generators(body: &str) -> Vec<&str> {
    // Commas inside parentheses separate points, commas between cycles separate generators.
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in body.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(body[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(body[start..].trim());
    parts.into_iter().filter(|p| !p.is_empty()).collect()
}

fn perm_spec(degree: usize, generators: &[Permutation]) -> String {
    let body: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
    let needed = generators
        .iter()
        .flat_map(|g| g.cycles().into_iter().flatten())
        .map(|x| x + 1)
        .max()
        .unwrap_or(1);
    let body = if body.is_empty() { "()".to_string() } else { body.join(",") };
    if needed == degree {
        format!("perm:{body}")
    } else {
        format!("perm:{body};n={degree}")
    }
}

fn cycle_perm(degree: usize, points: &[usize]) -> Permutation {
    Permutation::from_cycles(degree, &[points.to_vec()]).expect("valid cycle")
}

/// The group generated by the `n`-cycle `(0 1 … n-1)`.
pub fn cyclic_group(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::Precondition("cyclic group order must be positive".into()));
    }
    if n > DEFAULT_ORDER_BOUND {
        return Err(Error::OrderBoundExceeded { bound: DEFAULT_ORDER_BOUND });
    }
    let gen = cycle_perm(n, &(0..n).collect::<Vec<_>>());
    FiniteGroup::with_spec(format!("cyclic:{n}"), n, vec![gen])
}

/// `ℤ/2 × ℤ/2` generated by `(0 1)(2 3)` and `(0 2)(1 3)`.
pub fn klein_four() -> Result<Group> {
    let a = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]])?;
    let b = Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]])?;
    FiniteGroup::with_spec("klein4".into(), 4, vec![a, b])
}

/// `A_n` for `n ≥ 3`; `alt:5` is generated by `(0 1 2 3 4)` and `(0 1 2)`.
pub fn alternating_group(n: usize) -> Result<Group> {
    if n < 3 {
        return Err(Error::Precondition("alternating group needs n >= 3".into()));
    }
    let three = cycle_perm(n, &[0, 1, 2]);
    let long = if n % 2 == 1 {
        cycle_perm(n, &(0..n).collect::<Vec<_>>())
    } else {
        cycle_perm(n, &(1..n).collect::<Vec<_>>())
    };
    FiniteGroup::with_spec(format!("alt:{n}"), n, vec![long, three])
}

pub fn symmetric_group(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::Precondition("symmetric group needs n >= 1".into()));
    }
    if n == 1 {
        return FiniteGroup::with_spec("sym:1".into(), 1, vec![]);
    }
    let t = cycle_perm(n, &[0, 1]);
    let long = cycle_perm(n, &(0..n).collect::<Vec<_>>());
    FiniteGroup::with_spec(format!("sym:{n}"), n, vec![long, t])
}

/// Symmetries of the regular `n`-gon, order `2n`, for `n ≥ 3`.
pub fn dihedral_group(n: usize) -> Result<Group> {
    if n < 3 {
        return Err(Error::Precondition("dihedral group needs n >= 3".into()));
    }
    let rot = cycle_perm(n, &(0..n).collect::<Vec<_>>());
    let refl = Permutation::new((0..n).map(|i| (n - i) % n).collect())?;
    FiniteGroup::with_spec(format!("dihedral:{n}"), n, vec![rot, refl])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_subgroups(g: &FiniteGroup) -> HashSet<Vec<usize>> {
        // Independent oracle: closure of every subset of size <= 2 of element
        // indices plus all unions reachable by pairwise joins until fixpoint.
        let n = g.order();
        let mut subs: HashSet<Vec<usize>> = HashSet::new();
        for a in 0..n {
            for b in a..n {
                subs.insert(g.subgroup_generated_by(&[a, b]).elements().to_vec());
            }
        }
        loop {
            let cur: Vec<Vec<usize>> = subs.iter().cloned().collect();
            let mut grew = false;
            for x in &cur {
                for y in &cur {
                    let mut gens = x.clone();
                    gens.extend(y);
                    let j = g.subgroup_generated_by(&gens).elements().to_vec();
                    grew |= subs.insert(j);
                }
            }
            if !grew {
                return subs;
            }
        }
    }

    #[test]
    fn trivial_group_from_empty_generators() {
        let g = FiniteGroup::from_generators(1, vec![]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.subgroup_conjugacy_classes().unwrap().len(), 1);
        assert_eq!(g.table_of_marks().unwrap(), &[vec![1]]);
    }

    #[test]
    fn transposition_gives_order_two() {
        let t = Permutation::parse_cycles("(0 1)", None).unwrap();
        let g = FiniteGroup::from_generators(2, vec![t]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.num_subgroup_classes().unwrap(), 2);
    }

    #[test]
    fn a5_order_and_class_sizes() {
        let gens = vec![
            Permutation::parse_cycles("(0 1 2 3 4)", None).unwrap(),
            Permutation::parse_cycles("(0 1 2)", Some(5)).unwrap(),
        ];
        let g = FiniteGroup::from_generators(5, gens).unwrap();
        assert_eq!(g.order(), 60);
        let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
        assert_eq!(*alternating_group(5).unwrap(), *g);
    }

    #[test]
    fn a5_subgroup_classes_match_oracle() {
        let g = alternating_group(5).unwrap();
        let orders: Vec<usize> = g.subgroup_conjugacy_classes().unwrap().iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 5, 6, 10, 12, 60]);
        let total: usize = g.subgroup_class_sizes().unwrap().iter().sum();
        assert_eq!(total, brute_force_subgroups(&g).len());
        assert_eq!(total, 59);
    }

    #[test]
    fn cyclic_groups() {
        assert_eq!(cyclic_group(1).unwrap().order(), 1);
        let z2 = cyclic_group(2).unwrap();
        assert_eq!(z2.order(), 2);
        let z6 = cyclic_group(6).unwrap();
        assert_eq!(z6.order(), 6);
        assert_eq!(z6.conjugacy_classes().len(), 6);
        assert!(matches!(cyclic_group(0), Err(Error::Precondition(_))));
    }

    #[test]
    fn klein_four_structure() {
        let v = klein_four().unwrap();
        assert_eq!(v.order(), 4);
        assert_eq!(v.num_subgroup_classes().unwrap(), 5);
        for e in 1..4 {
            assert_eq!(v.element_order(e), 2);
        }
        let m = v.table_of_marks().unwrap();
        assert_eq!(m[0], vec![4, 2, 2, 2, 1]);
    }

    #[test]
    fn marks_of_z2() {
        let z2 = cyclic_group(2).unwrap();
        assert_eq!(z2.table_of_marks().unwrap(), &[vec![2, 1], vec![0, 1]]);
    }

    #[test]
    fn marks_triangular_positive_diagonal() {
        for spec in ["alt:5", "sym:4", "dihedral:4", "cyclic:12"] {
            let g = FiniteGroup::from_spec(spec).unwrap();
            let m = g.table_of_marks().unwrap();
            for i in 0..m.len() {
                assert!(m[i][i] > 0, "{spec}");
                for j in 0..i {
                    assert_eq!(m[i][j], 0, "{spec}");
                }
            }
        }
    }

    #[test]
    fn subgroup_representatives_are_pairwise_non_conjugate() {
        let g = symmetric_group(4).unwrap();
        let reps = g.subgroup_conjugacy_classes().unwrap();
        assert_eq!(reps.len(), 11);
        for (i, h) in reps.iter().enumerate() {
            for x in 0..g.order() {
                let c = g.conjugate_subgroup(x, h);
                assert_eq!(g.subgroup_class_of(&c).unwrap(), i);
            }
        }
    }

    #[test]
    fn degree_mismatch_and_bound() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(
            FiniteGroup::from_generators(3, vec![a, b]),
            Err(Error::DegreeMismatch { expected: 3, found: 4 })
        ));
        let gens = vec![
            Permutation::parse_cycles("(0 1 2 3 4 5 6 7)", None).unwrap(),
            Permutation::parse_cycles("(0 1)", Some(8)).unwrap(),
        ];
        assert!(matches!(
            FiniteGroup::from_generators(8, gens),
            Err(Error::OrderBoundExceeded { .. })
        ));
    }

    #[test]
    fn specs_round_trip() {
        for spec in ["cyclic:5", "klein4", "alt:5", "sym:3", "dihedral:4", "perm:(0 1 2),(3 4)", "perm:(0 1);n=4"] {
            let g = FiniteGroup::from_spec(spec).unwrap();
            let again = FiniteGroup::from_spec(g.spec()).unwrap();
            assert_eq!(*g, *again, "{spec}");
        }
        let g = FiniteGroup::from_spec("perm: ( 0 1 2 ) , (3 4)").unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.degree(), 5);
        assert!(FiniteGroup::from_spec("nonsense").is_err());
        assert!(FiniteGroup::from_spec("perm:(0 0)").is_err());
    }

    #[test]
    fn perm_spec_of_generated_group() {
        let gens = vec![Permutation::parse_cycles("(0 1)", Some(3)).unwrap()];
        let g = FiniteGroup::from_generators(3, gens).unwrap();
        assert_eq!(g.spec(), "perm:(0 1);n=3");
    }

    #[test]
    fn invalid_subgroup_rejected() {
        let z4 = cyclic_group(4).unwrap();
        assert!(matches!(z4.subgroup(&[0, 1]), Err(Error::NotASubgroup)));
        assert_eq!(z4.subgroup(&[0, 2]).unwrap().order(), 2);
    }

    #[test]
    fn word_steps_describe_elements() {
        let g = alternating_group(5).unwrap();
        for i in 1..g.order() {
            let (parent, s) = g.word_step(i).unwrap();
            assert_eq!(g.generators()[s].compose(g.element(parent)), *g.element(i));
        }
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn closure_under_composition(a in 0usize..60, b in 0usize..60) {
            let g = alternating_group(5).unwrap();
            let p = g.element(a).compose(g.element(b));
            prop_assert_eq!(g.index_of(&p), Some(g.mul(a, b)));
            prop_assert_eq!(g.mul(a, g.inv(a)), 0);
        }

        #[test]
        fn class_sizes_partition_and_divide(n in 1usize..13) {
            let g = dihedral_group(n.max(3)).unwrap();
            let sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
            prop_assert_eq!(sizes.iter().sum::<usize>(), g.order());
            for s in sizes {
                prop_assert_eq!(g.order() % s, 0);
            }
        }
    }
}
