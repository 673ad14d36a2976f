//! Finite transformation semigroups, their minimal left ideals, and finite
//! flows of permutation groups.
//!
//! The semigroup side works with self-maps of `{0..n-1}` under the product
//! `s · t = apply s, then t` — fixed once here and used consistently, so
//! right translation by `t` post-composes and left ideals `S·s` play the
//! role of invariant subsystems. It provides closure generation, two
//! independent idempotent finders, minimal-left-ideal enumeration, and a
//! structure report certifying the classical facts about a minimal left
//! ideal (right identity, bijective right translations, equivariant
//! self-maps being exactly the right translations, and equivariant
//! isomorphism of any two minimal ideals).
//!
//! The flow side works with actions of permutation groups given by
//! generators: orbits, minimality, k-transitivity, the space of maximal
//! chains of subsets, exhaustive equivariant-map search between two actions
//! of the same group, laminar-family chain maps, and the flow of all linear
//! orders under the symmetric group. The headline negative certificate —
//! no equivariant map from points to maximal chains for a 3-transitive
//! action — comes out of [`equivariant_maps`] returning an empty list.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use thiserror::Error;

/// Errors across the semigroup and flow operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlowError {
    #[error("image {value} at position {index} is out of range for ground set {n}")]
    ImageOutOfRange {
        index: usize,
        value: usize,
        n: usize,
    },
    #[error("image list has {got} entries for ground set {n}")]
    WrongLength { got: usize, n: usize },
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators act on ground sets of different sizes ({a} vs {b})")]
    MixedGroundSets { a: usize, b: usize },
    #[error("generator {index} is not a bijection")]
    NotBijective { index: usize },
    #[error("semigroup closure exceeded {limit} elements")]
    SemigroupBudget { limit: usize },
    #[error("ideal is empty")]
    EmptyIdeal,
    #[error("element index {0} is not in the semigroup")]
    UnknownElement(usize),
    #[error("input is not a left ideal: element {element} times member {member} escapes")]
    NotALeftIdeal { element: usize, member: usize },
    #[error("k-transitivity needs at least {k} points, ground set has {n}")]
    NotEnoughPoints { n: usize, k: usize },
    #[error("k must be at least 1")]
    ZeroK,
    #[error("the two actions have different generator counts ({a} vs {b})")]
    GeneratorCountMismatch { a: usize, b: usize },
    #[error("equivariant map search would return more than {limit} maps")]
    MapBudget { limit: u64 },
    #[error("chain enumeration is limited to ground sets of at most {limit} points")]
    ChainBudget { limit: usize },
    #[error("family member {0} is empty")]
    EmptyMember(usize),
    #[error("family member {member} contains out-of-range point {point}")]
    MemberOutOfRange { member: usize, point: usize },
    #[error("family members {a} and {b} cross (neither disjoint nor nested)")]
    NotLaminar { a: usize, b: usize },
    #[error("family is missing the whole ground set")]
    MissingWholeSet,
    #[error("family is missing the singleton of point {0}")]
    MissingSingleton(usize),
    #[error("generator {generator} does not map family member {member} to a member")]
    FamilyNotPreserved { generator: usize, member: usize },
}

/// A self-map of `{0..n-1}`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SelfMap {
    n: usize,
    images: Vec<usize>,
}

impl SelfMap {
    /// A self-map from an image list of length `n` with entries below `n`.
    pub fn new(n: usize, images: Vec<usize>) -> Result<Self, FlowError> {
        if images.len() != n {
            return Err(FlowError::WrongLength {
                got: images.len(),
                n,
            });
        }
        if let Some((index, &value)) = images.iter().enumerate().find(|&(_, &v)| v >= n) {
            return Err(FlowError::ImageOutOfRange { index, value, n });
        }
        Ok(SelfMap { n, images })
    }

    /// The identity map.
    pub fn identity(n: usize) -> Self {
        SelfMap {
            n,
            images: (0..n).collect(),
        }
    }

    /// The constant map sending everything to `value`.
    pub fn constant(n: usize, value: usize) -> Self {
        assert!(value < n, "constant value out of range");
        SelfMap {
            n,
            images: vec![value; n],
        }
    }

    /// Ground-set size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The image list.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// The image of a point.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// The semigroup product `self · t`: apply `self` first, then `t`.
    pub fn then(&self, t: &SelfMap) -> SelfMap {
        assert_eq!(self.n, t.n, "ground sets differ");
        SelfMap {
            n: self.n,
            images: self.images.iter().map(|&x| t.images[x]).collect(),
        }
    }

    /// True when the map is a permutation.
    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.n];
        self.images
            .iter()
            .all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    /// True when `self · self = self`.
    pub fn is_idempotent(&self) -> bool {
        self.images.iter().all(|&v| self.images[v] == v)
    }

    /// The inverse of a permutation.
    pub fn inverse(&self) -> Option<SelfMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0usize; self.n];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Some(SelfMap {
            n: self.n,
            images: inv,
        })
    }
}

const SEMIGROUP_BUDGET: usize = 4000;

/// A finite transformation semigroup: a closed set of self-maps with its
/// multiplication table.
///
/// Elements are kept in first-discovered order of the generating run;
/// `table[i * size + j]` is the index of `element(i) · element(j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformationSemigroup {
    n: usize,
    elements: Vec<SelfMap>,
    table: Vec<u32>,
}

impl TransformationSemigroup {
    /// Ground-set size of the maps.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of elements.
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// The element at an index.
    pub fn element(&self, i: usize) -> &SelfMap {
        &self.elements[i]
    }

    /// All elements, in first-discovered order.
    pub fn elements(&self) -> &[SelfMap] {
        &self.elements
    }

    /// Index of the product `element(i) · element(j)`.
    pub fn product(&self, i: usize, j: usize) -> usize {
        self.table[i * self.elements.len() + j] as usize
    }

    /// The index of a map, if it is an element.
    pub fn index_of(&self, m: &SelfMap) -> Option<usize> {
        self.elements.iter().position(|e| e == m)
    }

    /// Indices of all idempotent elements.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&i| self.product(i, i) == i)
            .collect()
    }
}

/// Breadth-first closure of a generator list under the product.
///
/// Elements appear in first-discovered order: the (deduplicated) generators
/// first, then products in queue order with the right factor running
/// through the generators in input order. The identity map shows up only
/// when some product realizes it. Closures beyond 4000 elements are
/// refused.
pub fn generate_semigroup(generators: &[SelfMap]) -> Result<TransformationSemigroup, FlowError> {
    if generators.is_empty() {
        return Err(FlowError::EmptyGenerators);
    }
    let n = generators[0].n();
    if let Some(g) = generators.iter().find(|g| g.n() != n) {
        return Err(FlowError::MixedGroundSets { a: n, b: g.n() });
    }
    let mut elements: Vec<SelfMap> = Vec::new();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut queue: VecDeque<usize> = VecDeque::new();
    for g in generators {
        if !index.contains_key(g.images()) {
            index.insert(g.images().to_vec(), elements.len());
            queue.push_back(elements.len());
            elements.push(g.clone());
        }
    }
    while let Some(i) = queue.pop_front() {
        for g in generators {
            let prod = elements[i].then(g);
            if !index.contains_key(prod.images()) {
                if elements.len() >= SEMIGROUP_BUDGET {
                    return Err(FlowError::SemigroupBudget {
                        limit: SEMIGROUP_BUDGET,
                    });
                }
                index.insert(prod.images().to_vec(), elements.len());
                queue.push_back(elements.len());
                elements.push(prod);
            }
        }
    }
    let size = elements.len();
    let mut table = vec![0u32; size * size];
    for i in 0..size {
        for j in 0..size {
            let prod = elements[i].then(&elements[j]);
            let k = index[prod.images()];
            table[i * size + j] = k as u32;
        }
    }
    Ok(TransformationSemigroup { n, elements, table })
}

/// The idempotent power of a single map: iterate `f, f², f³, …` until the
/// power sequence cycles and return the power whose exponent is the first
/// positive multiple of the cycle length past the tail.
pub fn idempotent_power(f: &SelfMap) -> SelfMap {
    let mut powers: Vec<SelfMap> = vec![f.clone()];
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    seen.insert(f.images().to_vec(), 1);
    loop {
        let next = powers.last().expect("nonempty").then(f);
        let exp = powers.len() + 1;
        if let Some(&first) = seen.get(next.images()) {
            let lambda = exp - first;
            let mut m = lambda;
            while m < first.max(1) {
                m += lambda;
            }
            let result = powers[m - 1].clone();
            debug_assert!(result.is_idempotent());
            return result;
        }
        seen.insert(next.images().to_vec(), exp);
        powers.push(next);
    }
}

/// An idempotent element of a semigroup, found by descending through
/// closed subsemigroups: pick the first element `a` of the current set `A`;
/// replace `A` by `A·a` when that is smaller, otherwise by the stabilizer
/// `{x in A : x·a = a}` when that is smaller, otherwise `a·a = a` and `a`
/// is the answer. Each step strictly shrinks `A`, so the descent ends.
pub fn find_idempotent(s: &TransformationSemigroup) -> usize {
    let mut current: Vec<usize> = (0..s.size()).collect();
    loop {
        let a = current[0];
        let ca: BTreeSet<usize> = current.iter().map(|&x| s.product(x, a)).collect();
        if ca.len() < current.len() {
            current = ca.into_iter().collect();
            continue;
        }
        let z: Vec<usize> = current
            .iter()
            .copied()
            .filter(|&x| s.product(x, a) == a)
            .collect();
        if z.len() < current.len() {
            current = z;
            continue;
        }
        debug_assert_eq!(s.product(a, a), a);
        return a;
    }
}

/// All minimal left ideals, each as a sorted list of element indices, the
/// list itself sorted lexicographically.
///
/// The principal left ideal of `s` is `S·s ∪ {s}`; an ideal is minimal
/// exactly when every element of it generates it back, and every minimal
/// left ideal is principal, so scanning the (deduplicated) principal
/// ideals finds them all.
pub fn minimal_left_ideals(s: &TransformationSemigroup) -> Vec<Vec<usize>> {
    let principal = |e: usize| -> BTreeSet<usize> {
        let mut p: BTreeSet<usize> = (0..s.size()).map(|x| s.product(x, e)).collect();
        p.insert(e);
        p
    };
    let mut distinct: Vec<BTreeSet<usize>> = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for e in 0..s.size() {
        let p = principal(e);
        let key: Vec<usize> = p.iter().copied().collect();
        if seen.insert(key) {
            distinct.push(p);
        }
    }
    let mut minimal: Vec<Vec<usize>> = distinct
        .iter()
        .filter(|p| p.iter().all(|&t| principal(t) == **p))
        .map(|p| p.iter().copied().collect())
        .collect();
    minimal.sort();
    minimal
}

/// Whether a right translation is a bijection, and similar per-anchor
/// checks against another ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossIdealCheck {
    /// The other minimal left ideal.
    pub other_ideal: Vec<usize>,
    /// The anchor `a` in the other ideal.
    pub anchor: usize,
    /// Whether `x ↦ x·a` is a bijection onto the other ideal.
    pub bijective: bool,
    /// Whether `(s·x)·a = s·(x·a)` held at every sample point.
    pub equivariant: bool,
}

/// Certified structure of a left ideal: the classical minimal-ideal facts,
/// each checked exhaustively with witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    /// The ideal, sorted.
    pub ideal: Vec<usize>,
    /// Whether the ideal is minimal (every member generates it back).
    pub minimal: bool,
    /// An idempotent `p` in the ideal with `x·p = x` for every member, if
    /// one exists.
    pub right_identity: Option<usize>,
    /// Members whose right translation fails to biject the ideal.
    pub failed_translations: Vec<usize>,
    /// Number of equivariant self-maps found; `None` when the search was
    /// skipped because the ideal is not minimal and brute force would
    /// exceed the budget.
    pub equivariant_map_count: Option<usize>,
    /// Equivariant self-maps that are not right translations, as image
    /// vectors parallel to the sorted ideal.
    pub rogue_equivariant_maps: Vec<Vec<usize>>,
    /// Per-anchor comparisons against every other minimal left ideal.
    pub cross_checks: Vec<CrossIdealCheck>,
    /// (a) a right-identity idempotent exists.
    pub pass_a: bool,
    /// (b) every right translation is a bijection of the ideal.
    pub pass_b: bool,
    /// (c) equivariant self-maps are exactly the right translations;
    /// `None` when the search was skipped.
    pub pass_c: Option<bool>,
    /// (d) every anchor in every other minimal ideal gives an equivariant
    /// bijection.
    pub pass_d: bool,
}

impl StructureReport {
    /// True when every evaluated check passed.
    pub fn all_pass(&self) -> bool {
        self.pass_a && self.pass_b && self.pass_c.unwrap_or(true) && self.pass_d
    }
}

const EQUIVARIANT_BRUTE_BUDGET: u64 = 1_000_000;

/// Checks the minimal-left-ideal structure theorems on `m`.
///
/// `m` must be a left ideal (any set closed under left multiplication by
/// the whole semigroup); it need not be minimal — a non-minimal left ideal
/// is exactly how the checks are seen failing, and the report records
/// which of them do.
pub fn verify_ideal_structure(
    s: &TransformationSemigroup,
    m: &[usize],
) -> Result<StructureReport, FlowError> {
    let mut ideal: Vec<usize> = m.to_vec();
    ideal.sort_unstable();
    ideal.dedup();
    if ideal.is_empty() {
        return Err(FlowError::EmptyIdeal);
    }
    if let Some(&bad) = ideal.iter().find(|&&e| e >= s.size()) {
        return Err(FlowError::UnknownElement(bad));
    }
    let member: HashSet<usize> = ideal.iter().copied().collect();
    for &x in &ideal {
        for e in 0..s.size() {
            if !member.contains(&s.product(e, x)) {
                return Err(FlowError::NotALeftIdeal {
                    element: e,
                    member: x,
                });
            }
        }
    }
    let principal = |e: usize| -> BTreeSet<usize> {
        let mut p: BTreeSet<usize> = (0..s.size()).map(|x| s.product(x, e)).collect();
        p.insert(e);
        p
    };
    let ideal_set: BTreeSet<usize> = ideal.iter().copied().collect();
    let minimal = ideal.iter().all(|&e| principal(e) == ideal_set);

    // (a) right identity.
    let right_identity = ideal
        .iter()
        .copied()
        .find(|&p| s.product(p, p) == p && ideal.iter().all(|&x| s.product(x, p) == x));

    // (b) right translations biject the ideal.
    let mut failed_translations = Vec::new();
    for &y in &ideal {
        let image: BTreeSet<usize> = ideal.iter().map(|&x| s.product(x, y)).collect();
        if image != ideal_set {
            failed_translations.push(y);
        }
    }

    // (c) equivariant self-maps versus right translations.
    let pos: HashMap<usize, usize> = ideal.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let translations: BTreeSet<Vec<usize>> = ideal
        .iter()
        .map(|&y| ideal.iter().map(|&x| s.product(x, y)).collect())
        .collect();
    let found: Option<BTreeSet<Vec<usize>>> = if minimal {
        Some(equivariant_self_maps_of_minimal_ideal(s, &ideal, &pos))
    } else {
        let maps = (ideal.len() as u64).checked_pow(ideal.len() as u32);
        match maps {
            Some(total) if total <= EQUIVARIANT_BRUTE_BUDGET => {
                Some(brute_equivariant_self_maps(s, &ideal, &pos))
            }
            _ => None,
        }
    };
    let (equivariant_map_count, rogue_equivariant_maps, pass_c) = match &found {
        Some(maps) => {
            let rogues: Vec<Vec<usize>> = maps
                .iter()
                .filter(|f| !translations.contains(*f))
                .cloned()
                .collect();
            (
                Some(maps.len()),
                rogues.clone(),
                Some(rogues.is_empty() && *maps == translations),
            )
        }
        None => (None, Vec::new(), None),
    };

    // (d) right multiplication by an anchor of another minimal ideal.
    let mut cross_checks = Vec::new();
    for other in minimal_left_ideals(s) {
        if other == ideal {
            continue;
        }
        let other_set: BTreeSet<usize> = other.iter().copied().collect();
        for &anchor in &other {
            let image: Vec<usize> = ideal.iter().map(|&x| s.product(x, anchor)).collect();
            let image_set: BTreeSet<usize> = image.iter().copied().collect();
            let bijective = image_set == other_set && image.len() == image_set.len();
            let equivariant = (0..s.size()).all(|e| {
                ideal.iter().all(|&x| {
                    s.product(s.product(e, x), anchor) == s.product(e, s.product(x, anchor))
                })
            });
            cross_checks.push(CrossIdealCheck {
                other_ideal: other.clone(),
                anchor,
                bijective,
                equivariant,
            });
        }
    }
    let pass_d = cross_checks.iter().all(|c| c.bijective && c.equivariant);

    Ok(StructureReport {
        pass_a: right_identity.is_some(),
        pass_b: failed_translations.is_empty(),
        pass_c,
        pass_d,
        ideal,
        minimal,
        right_identity,
        failed_translations,
        equivariant_map_count,
        rogue_equivariant_maps,
        cross_checks,
    })
}

/// Crate-internal handle on the propagation search, for cross-checking the
/// two equivariant-map enumerations against each other on the same ideal.
pub(crate) fn propagated_equivariant_maps(
    s: &TransformationSemigroup,
    ideal: &[usize],
) -> BTreeSet<Vec<usize>> {
    let pos: HashMap<usize, usize> = ideal.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    equivariant_self_maps_of_minimal_ideal(s, ideal, &pos)
}

/// Crate-internal handle on the brute-force search; `None` when the
/// `|M|^|M|` scan would exceed `budget` candidates.
pub(crate) fn brute_equivariant_maps_budgeted(
    s: &TransformationSemigroup,
    ideal: &[usize],
    budget: u64,
) -> Option<BTreeSet<Vec<usize>>> {
    let k = ideal.len() as u64;
    let total = k.checked_pow(ideal.len() as u32)?;
    if total > budget {
        return None;
    }
    let pos: HashMap<usize, usize> = ideal.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    Some(brute_equivariant_self_maps(s, ideal, &pos))
}

/// For a minimal ideal every member is `s·x₀`, so an equivariant map is
/// determined by the image of `x₀` and every candidate image either
/// propagates consistently or dies; this search is exhaustive.
fn equivariant_self_maps_of_minimal_ideal(
    s: &TransformationSemigroup,
    ideal: &[usize],
    pos: &HashMap<usize, usize>,
) -> BTreeSet<Vec<usize>> {
    let x0 = ideal[0];
    let mut maps = BTreeSet::new();
    'candidate: for &v in ideal {
        let mut f: Vec<Option<usize>> = vec![None; ideal.len()];
        f[pos[&x0]] = Some(v);
        for e in 0..s.size() {
            let y = s.product(e, x0);
            let fy = s.product(e, v);
            let slot = &mut f[pos[&y]];
            match slot {
                Some(existing) if *existing != fy => continue 'candidate,
                _ => *slot = Some(fy),
            }
        }
        let image: Vec<usize> = f
            .into_iter()
            .map(|v| v.expect("minimality makes every member reachable from x0"))
            .collect();
        maps.insert(image);
    }
    maps
}

fn brute_equivariant_self_maps(
    s: &TransformationSemigroup,
    ideal: &[usize],
    pos: &HashMap<usize, usize>,
) -> BTreeSet<Vec<usize>> {
    let k = ideal.len();
    let mut maps = BTreeSet::new();
    let mut choice = vec![0usize; k];
    loop {
        let image: Vec<usize> = choice.iter().map(|&c| ideal[c]).collect();
        let equivariant = (0..s.size()).all(|e| {
            ideal.iter().enumerate().all(|(i, &x)| {
                let lhs = image[pos[&s.product(e, x)]];
                let rhs = s.product(e, image[i]);
                lhs == rhs
            })
        });
        if equivariant {
            maps.insert(image);
        }
        let mut idx = k;
        loop {
            if idx == 0 {
                return maps;
            }
            idx -= 1;
            choice[idx] += 1;
            if choice[idx] < k {
                break;
            }
            choice[idx] = 0;
        }
    }
}

/// A permutation-group action on `{0..n-1}`, given by generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAction {
    n: usize,
    generators: Vec<SelfMap>,
}

impl FiniteAction {
    /// An action from bijective generators on a common ground set. An
    /// empty generator list is the trivial group.
    pub fn new(n: usize, generators: Vec<SelfMap>) -> Result<Self, FlowError> {
        for (index, g) in generators.iter().enumerate() {
            if g.n() != n {
                return Err(FlowError::MixedGroundSets { a: n, b: g.n() });
            }
            if !g.is_bijective() {
                return Err(FlowError::NotBijective { index });
            }
        }
        Ok(FiniteAction { n, generators })
    }

    /// Ground-set size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The generators.
    pub fn generators(&self) -> &[SelfMap] {
        &self.generators
    }

    /// The generated permutation group, identity included.
    pub fn elements(&self) -> Vec<SelfMap> {
        let mut elements = vec![SelfMap::identity(self.n)];
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(elements[0].images().to_vec());
        let mut queue: VecDeque<usize> = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for g in &self.generators {
                let next = elements[i].then(g);
                if seen.insert(next.images().to_vec()) {
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        elements
    }
}

/// The orbit partition, each orbit sorted, orbits ordered by least member.
pub fn orbits(a: &FiniteAction) -> Vec<Vec<usize>> {
    let mut seen = vec![false; a.n()];
    let mut parts = Vec::new();
    for start in 0..a.n() {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for g in a.generators() {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                    queue.push_back(y);
                }
            }
        }
        orbit.sort_unstable();
        parts.push(orbit);
    }
    parts
}

/// True when the action has a single orbit — the finite analogue of every
/// orbit being dense.
pub fn is_minimal(a: &FiniteAction) -> bool {
    orbits(a).len() == 1
}

/// True when the induced action on ordered k-tuples of distinct points has
/// a single orbit.
pub fn is_k_transitive(a: &FiniteAction, k: usize) -> Result<bool, FlowError> {
    if k == 0 {
        return Err(FlowError::ZeroK);
    }
    if a.n() < k {
        return Err(FlowError::NotEnoughPoints { n: a.n(), k });
    }
    let start: Vec<usize> = (0..k).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        for g in a.generators() {
            let image: Vec<usize> = t.iter().map(|&x| g.apply(x)).collect();
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    let mut tuples: u64 = 1;
    for i in 0..k {
        tuples *= (a.n() - i) as u64;
    }
    Ok(seen.len() as u64 == tuples)
}

/// A maximal chain of subsets `A₁ ⊂ A₂ ⊂ … ⊂ Aₙ` with `|Aₖ| = k`, stored
/// as the order in which points enter: `Aₖ` is the first `k` entries.
///
/// Chains run from a singleton to the whole set; the empty set carries no
/// action-theoretic content and is left out.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MaximalChain {
    n: usize,
    order: Vec<usize>,
}

impl MaximalChain {
    /// A chain from the point-entry order (a permutation of `0..n`).
    pub fn from_order(order: Vec<usize>) -> Result<Self, FlowError> {
        let n = order.len();
        let as_map = SelfMap::new(n, order)?;
        if !as_map.is_bijective() {
            return Err(FlowError::NotBijective { index: 0 });
        }
        Ok(MaximalChain {
            n,
            order: as_map.images().to_vec(),
        })
    }

    /// Ground-set size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The point-entry order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// The chain as explicit sorted subsets, smallest first.
    pub fn sets(&self) -> Vec<Vec<usize>> {
        (1..=self.n)
            .map(|k| {
                let mut s = self.order[..k].to_vec();
                s.sort_unstable();
                s
            })
            .collect()
    }
}

const CHAIN_GROUND_LIMIT: usize = 8;

/// All `n!` maximal chains, in lexicographic order of their point-entry
/// orders. Ground sets beyond 8 points are refused (the list would not
/// fit anything downstream).
pub fn maximal_chains(n: usize) -> Result<Vec<MaximalChain>, FlowError> {
    if n == 0 || n > CHAIN_GROUND_LIMIT {
        return Err(FlowError::ChainBudget {
            limit: CHAIN_GROUND_LIMIT,
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut chains = Vec::new();
    loop {
        chains.push(MaximalChain {
            n,
            order: order.clone(),
        });
        if !crate::metric::next_permutation(&mut order) {
            break;
        }
    }
    Ok(chains)
}

/// Applies a permutation to every set of a chain: the image chain's entry
/// order is the pointwise image of the original order.
pub fn chain_action(g: &SelfMap, chain: &MaximalChain) -> Result<MaximalChain, FlowError> {
    if g.n() != chain.n() {
        return Err(FlowError::MixedGroundSets {
            a: g.n(),
            b: chain.n(),
        });
    }
    if !g.is_bijective() {
        return Err(FlowError::NotBijective { index: 0 });
    }
    Ok(MaximalChain {
        n: chain.n,
        order: chain.order.iter().map(|&x| g.apply(x)).collect(),
    })
}

/// The induced action on all maximal chains: the chain list (lexicographic
/// by entry order) together with the generator action on chain indices.
pub fn chain_flow(a: &FiniteAction) -> Result<(Vec<MaximalChain>, FiniteAction), FlowError> {
    let chains = maximal_chains(a.n())?;
    let index: HashMap<&[usize], usize> = chains
        .iter()
        .enumerate()
        .map(|(i, c)| (c.order(), i))
        .collect();
    let mut generators = Vec::with_capacity(a.generators().len());
    for g in a.generators() {
        let images: Vec<usize> = chains
            .iter()
            .map(|c| {
                let moved = chain_action(g, c).expect("generator is a bijection on the ground set");
                index[moved.order()]
            })
            .collect();
        generators.push(SelfMap::new(chains.len(), images)?);
    }
    let action = FiniteAction::new(chains.len(), generators)?;
    Ok((chains, action))
}

const MAP_BUDGET: u64 = 1_000_000;

/// All equivariant maps from the ground set of `a` to the ground set of
/// `b`, where generator `i` of `a` is the same group element as generator
/// `i` of `b`.
///
/// Within one orbit of `a` an equivariant map is determined by the image
/// of the orbit representative, and a candidate image survives exactly
/// when it is consistent along every generator edge of the orbit — which
/// checks it against the full stabilizer, so the per-orbit candidate lists
/// are exhaustive. Orbits constrain nothing across each other, and the
/// result is the cartesian product of the per-orbit lists, returned as
/// sorted image vectors. More than 10^6 maps is an error.
pub fn equivariant_maps(a: &FiniteAction, b: &FiniteAction) -> Result<Vec<Vec<usize>>, FlowError> {
    if a.generators().len() != b.generators().len() {
        return Err(FlowError::GeneratorCountMismatch {
            a: a.generators().len(),
            b: b.generators().len(),
        });
    }
    let parts = orbits(a);
    // Per orbit: the consistent assignments, each a (point -> target) map
    // for the orbit's points.
    let mut per_orbit: Vec<Vec<HashMap<usize, usize>>> = Vec::with_capacity(parts.len());
    for orbit in &parts {
        let rep = orbit[0];
        let mut valid = Vec::new();
        'target: for t in 0..b.n() {
            let mut assignment: HashMap<usize, usize> = HashMap::new();
            assignment.insert(rep, t);
            let mut queue = VecDeque::from([rep]);
            while let Some(x) = queue.pop_front() {
                let fx = assignment[&x];
                for (ga, gb) in a.generators().iter().zip(b.generators()) {
                    let y = ga.apply(x);
                    let fy = gb.apply(fx);
                    match assignment.get(&y) {
                        Some(&existing) => {
                            if existing != fy {
                                continue 'target;
                            }
                        }
                        None => {
                            assignment.insert(y, fy);
                            queue.push_back(y);
                        }
                    }
                }
            }
            valid.push(assignment);
        }
        per_orbit.push(valid);
    }
    let mut total: u64 = 1;
    for v in &per_orbit {
        total = total.saturating_mul(v.len() as u64);
        if total > MAP_BUDGET {
            return Err(FlowError::MapBudget { limit: MAP_BUDGET });
        }
    }
    if total == 0 {
        return Ok(Vec::new());
    }
    let mut maps = Vec::with_capacity(total as usize);
    let mut choice = vec![0usize; per_orbit.len()];
    loop {
        let mut image = vec![0usize; a.n()];
        for (orbit_idx, &c) in choice.iter().enumerate() {
            for (&point, &target) in &per_orbit[orbit_idx][c] {
                image[point] = target;
            }
        }
        maps.push(image);
        let mut idx = per_orbit.len();
        loop {
            if idx == 0 {
                maps.sort();
                maps.dedup();
                return Ok(maps);
            }
            idx -= 1;
            choice[idx] += 1;
            if choice[idx] < per_orbit[idx].len() {
                break;
            }
            choice[idx] = 0;
        }
    }
}

/// The chain of members through each point of a laminar family, with its
/// equivariance certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaminarChainReport {
    /// Family members as sorted point sets, in input order.
    pub family: Vec<Vec<usize>>,
    /// For each point, the indices of the members containing it, sorted by
    /// (size, index) — certified to be a chain under inclusion.
    pub chains: Vec<Vec<usize>>,
    /// Certified: every `chains[x]` is totally ordered by inclusion.
    pub all_chains: bool,
    /// Certified: for every generator `g` and point `x`, the chain of
    /// `g(x)` is the image of the chain of `x`.
    pub equivariant: bool,
}

/// Builds the point-to-chain map of a laminar family and certifies it
/// equivariant under an action preserving the family.
///
/// The family must be laminar (members pairwise disjoint or nested),
/// contain the whole ground set and every singleton, and be permuted by
/// every generator.
pub fn laminar_chain_map(
    family: &[Vec<usize>],
    a: &FiniteAction,
) -> Result<LaminarChainReport, FlowError> {
    let n = a.n();
    let mut members: Vec<BTreeSet<usize>> = Vec::with_capacity(family.len());
    for (i, m) in family.iter().enumerate() {
        if m.is_empty() {
            return Err(FlowError::EmptyMember(i));
        }
        if let Some(&p) = m.iter().find(|&&p| p >= n) {
            return Err(FlowError::MemberOutOfRange {
                member: i,
                point: p,
            });
        }
        members.push(m.iter().copied().collect());
    }
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let (a_set, b_set) = (&members[i], &members[j]);
            let disjoint = a_set.is_disjoint(b_set);
            let nested = a_set.is_subset(b_set) || b_set.is_subset(a_set);
            if !disjoint && !nested {
                return Err(FlowError::NotLaminar { a: i, b: j });
            }
        }
    }
    let full: BTreeSet<usize> = (0..n).collect();
    if !members.contains(&full) {
        return Err(FlowError::MissingWholeSet);
    }
    for p in 0..n {
        if !members.iter().any(|m| m.len() == 1 && m.contains(&p)) {
            return Err(FlowError::MissingSingleton(p));
        }
    }
    let member_index: HashMap<Vec<usize>, usize> = members
        .iter()
        .enumerate()
        .map(|(i, m)| (m.iter().copied().collect::<Vec<usize>>(), i))
        .collect();
    for (gi, g) in a.generators().iter().enumerate() {
        for (mi, m) in members.iter().enumerate() {
            let image: Vec<usize> = {
                let s: BTreeSet<usize> = m.iter().map(|&p| g.apply(p)).collect();
                s.into_iter().collect()
            };
            if !member_index.contains_key(&image) {
                return Err(FlowError::FamilyNotPreserved {
                    generator: gi,
                    member: mi,
                });
            }
        }
    }
    let mut chains: Vec<Vec<usize>> = Vec::with_capacity(n);
    for x in 0..n {
        let mut through: Vec<usize> = (0..members.len())
            .filter(|&i| members[i].contains(&x))
            .collect();
        through.sort_by_key(|&i| (members[i].len(), i));
        chains.push(through);
    }
    let all_chains = chains.iter().all(|chain| {
        chain
            .windows(2)
            .all(|w| members[w[0]].is_subset(&members[w[1]]))
    });
    let equivariant = a.generators().iter().all(|g| {
        (0..n).all(|x| {
            let image_chain: BTreeSet<usize> = chains[x]
                .iter()
                .map(|&mi| {
                    let image: Vec<usize> = {
                        let s: BTreeSet<usize> = members[mi].iter().map(|&p| g.apply(p)).collect();
                        s.into_iter().collect()
                    };
                    member_index[&image]
                })
                .collect();
            let target: BTreeSet<usize> = chains[g.apply(x)].iter().copied().collect();
            image_chain == target
        })
    });
    Ok(LaminarChainReport {
        family: members
            .into_iter()
            .map(|m| m.into_iter().collect())
            .collect(),
        chains,
        all_chains,
        equivariant,
    })
}

/// The flow of all linear orders on `n` points inside the space of all
/// binary relations, under the symmetric group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOrdersReport {
    pub n: usize,
    /// All strict total orders as bitmasks over `n x n` cells (bit
    /// `a*n + b` set when `a < b` in the order), ascending.
    pub orders: Vec<u64>,
    /// The permutation action maps orders to orders.
    pub invariant: bool,
    /// The orders form a single orbit.
    pub transitive: bool,
    /// Invariant and a single orbit: a minimal subflow.
    pub minimal: bool,
    /// Orbit count of the action on all `2^(n²)` relations, reported for
    /// `n <= 3`.
    pub full_space_orbits: Option<u64>,
}

const ORDER_GROUND_LIMIT: usize = 8;

/// Materializes all `n!` linear orders, certifies that the symmetric-group
/// action keeps them linear orders and moves any one onto any other, and
/// for `n <= 3` reports the orbit structure of the whole relation space.
pub fn linear_orders_flow(n: usize) -> Result<LinearOrdersReport, FlowError> {
    if n == 0 || n > ORDER_GROUND_LIMIT {
        return Err(FlowError::ChainBudget {
            limit: ORDER_GROUND_LIMIT,
        });
    }
    let generators: Vec<SelfMap> = symmetric_group_generators(n);
    let relation_image = |mask: u64, g: &SelfMap| -> u64 {
        let mut out = 0u64;
        for a in 0..n {
            for b in 0..n {
                if mask >> (a * n + b) & 1 == 1 {
                    out |= 1 << (g.apply(a) * n + g.apply(b));
                }
            }
        }
        out
    };
    let mut orders: Vec<u64> = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut mask = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                mask |= 1 << (perm[i] * n + perm[j]);
            }
        }
        orders.push(mask);
        if !crate::metric::next_permutation(&mut perm) {
            break;
        }
    }
    orders.sort_unstable();
    orders.dedup();
    let order_set: HashSet<u64> = orders.iter().copied().collect();
    let invariant = orders.iter().all(|&m| {
        generators
            .iter()
            .all(|g| order_set.contains(&relation_image(m, g)))
    });
    let transitive = {
        let mut seen: HashSet<u64> = HashSet::new();
        seen.insert(orders[0]);
        let mut queue = VecDeque::from([orders[0]]);
        while let Some(m) = queue.pop_front() {
            for g in &generators {
                let im = relation_image(m, g);
                if seen.insert(im) {
                    queue.push_back(im);
                }
            }
        }
        seen.len() == orders.len() && orders.iter().all(|m| seen.contains(m))
    };
    let full_space_orbits = if n <= 3 {
        let total: u64 = 1 << (n * n);
        let mut seen = vec![false; total as usize];
        let mut count = 0u64;
        for start in 0..total {
            if seen[start as usize] {
                continue;
            }
            count += 1;
            seen[start as usize] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(m) = queue.pop_front() {
                for g in &generators {
                    let im = relation_image(m, g);
                    if !seen[im as usize] {
                        seen[im as usize] = true;
                        queue.push_back(im);
                    }
                }
            }
        }
        Some(count)
    } else {
        None
    };
    Ok(LinearOrdersReport {
        n,
        invariant,
        transitive,
        minimal: invariant && transitive,
        orders,
        full_space_orbits,
    })
}

/// Standard generators of the symmetric group: the transposition (0 1) and
/// the full rotation, degenerating appropriately for n <= 2.
pub fn symmetric_group_generators(n: usize) -> Vec<SelfMap> {
    match n {
        0 | 1 => Vec::new(),
        2 => vec![SelfMap::new(2, vec![1, 0]).expect("valid")],
        _ => {
            let mut swap: Vec<usize> = (0..n).collect();
            swap.swap(0, 1);
            let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            vec![
                SelfMap::new(n, swap).expect("valid"),
                SelfMap::new(n, rotation).expect("valid"),
            ]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(images: &[usize]) -> SelfMap {
        SelfMap::new(images.len(), images.to_vec()).unwrap()
    }

    #[test]
    fn product_applies_left_factor_first() {
        let cycle = m(&[1, 2, 0]);
        let constant = m(&[0, 0, 0]);
        assert_eq!(cycle.then(&constant), constant);
        assert_eq!(constant.then(&cycle).images(), &[1, 1, 1]);
    }

    #[test]
    fn involution_generates_two_elements() {
        let swap = m(&[1, 0]);
        let s = generate_semigroup(std::slice::from_ref(&swap)).unwrap();
        assert_eq!(s.size(), 2);
        assert_eq!(s.elements()[0], swap);
        assert_eq!(s.elements()[1], SelfMap::identity(2));
    }

    #[test]
    fn constant_generates_itself() {
        let c = m(&[1, 1]);
        let s = generate_semigroup(&[c]).unwrap();
        assert_eq!(s.size(), 1);
        assert_eq!(s.product(0, 0), 0);
    }

    #[test]
    fn cycle_and_constant_close_to_six_elements() {
        // Hand enumeration: c, c², id, and the three constants (the
        // constant at 0 pushed around by the cycle).
        let s = generate_semigroup(&[m(&[1, 2, 0]), m(&[0, 0, 0])]).unwrap();
        assert_eq!(s.size(), 6);
        for i in 0..s.size() {
            for j in 0..s.size() {
                let prod = s.element(i).then(s.element(j));
                assert_eq!(s.element(s.product(i, j)), &prod);
            }
        }
    }

    #[test]
    fn idempotent_power_of_a_three_cycle_is_the_identity() {
        assert_eq!(idempotent_power(&m(&[1, 2, 0])), SelfMap::identity(3));
    }

    #[test]
    fn idempotent_power_of_a_constant_is_itself() {
        let c = m(&[2, 2, 2]);
        assert_eq!(idempotent_power(&c), c);
    }

    #[test]
    fn idempotent_power_squares_a_shift() {
        // f = (1,2,2): f² = (2,2,2) is the first idempotent power.
        assert_eq!(idempotent_power(&m(&[1, 2, 2])), m(&[2, 2, 2]));
    }

    #[test]
    fn descent_finds_an_idempotent_in_a_mixed_semigroup() {
        let s = generate_semigroup(&[m(&[1, 2, 0]), m(&[0, 0, 0])]).unwrap();
        let a = find_idempotent(&s);
        assert_eq!(s.product(a, a), a);
    }

    #[test]
    fn groups_have_one_ideal() {
        let s = generate_semigroup(&[m(&[1, 2, 0])]).unwrap();
        assert_eq!(minimal_left_ideals(&s), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn constants_form_singleton_ideals() {
        // x · const_c = const_c, so each constant is its own principal
        // left ideal and those are the minimal ones.
        let s = generate_semigroup(&[m(&[0, 0]), m(&[1, 1])]).unwrap();
        assert_eq!(minimal_left_ideals(&s), vec![vec![0], vec![1]]);
    }

    #[test]
    fn mixed_semigroup_has_three_singleton_ideals() {
        let s = generate_semigroup(&[m(&[1, 2, 0]), m(&[0, 0, 0])]).unwrap();
        // Discovery order: c, const0, c², const1, id, const2.
        assert_eq!(minimal_left_ideals(&s), vec![vec![1], vec![3], vec![5]]);
    }

    #[test]
    fn structure_report_passes_on_a_group() {
        let s = generate_semigroup(&[m(&[1, 2, 0])]).unwrap();
        let report = verify_ideal_structure(&s, &[0, 1, 2]).unwrap();
        assert!(report.minimal);
        assert!(report.all_pass());
        // The right identity of a group ideal is the identity element.
        let p = report.right_identity.unwrap();
        assert_eq!(s.element(p), &SelfMap::identity(3));
        assert_eq!(report.equivariant_map_count, Some(3));
    }

    #[test]
    fn structure_report_fails_on_the_nonminimal_constant_ideal() {
        let s = generate_semigroup(&[m(&[0, 0]), m(&[1, 1])]).unwrap();
        let report = verify_ideal_structure(&s, &[0, 1]).unwrap();
        assert!(!report.minimal);
        assert!(!report.pass_a, "no right identity among two constants");
        assert_eq!(report.failed_translations, vec![0, 1]);
        assert!(!report.pass_b);
        // Every self-map is equivariant here because s·x = x throughout,
        // so the identity and the swap are rogues.
        assert_eq!(report.equivariant_map_count, Some(4));
        assert_eq!(report.pass_c, Some(false));
        assert_eq!(report.rogue_equivariant_maps.len(), 2);
        assert!(!report.pass_d);
    }

    #[test]
    fn structure_report_passes_on_a_singleton_constant_ideal() {
        let s = generate_semigroup(&[m(&[0, 0]), m(&[1, 1])]).unwrap();
        let report = verify_ideal_structure(&s, &[0]).unwrap();
        assert!(report.minimal);
        assert!(report.all_pass());
        assert_eq!(report.cross_checks.len(), 1);
        assert!(report.cross_checks[0].bijective && report.cross_checks[0].equivariant);
    }

    #[test]
    fn non_ideals_are_rejected() {
        let s = generate_semigroup(&[m(&[1, 2, 0]), m(&[0, 0, 0])]).unwrap();
        // {c} is not a left ideal: const0 · c = const1 escapes.
        assert!(matches!(
            verify_ideal_structure(&s, &[0]),
            Err(FlowError::NotALeftIdeal { .. })
        ));
        assert_eq!(verify_ideal_structure(&s, &[]), Err(FlowError::EmptyIdeal));
        assert_eq!(
            verify_ideal_structure(&s, &[17]),
            Err(FlowError::UnknownElement(17))
        );
    }

    #[test]
    fn symmetric_group_acts_with_one_orbit() {
        let a = FiniteAction::new(3, symmetric_group_generators(3)).unwrap();
        assert_eq!(orbits(&a), vec![vec![0, 1, 2]]);
        assert!(is_minimal(&a));
    }

    #[test]
    fn trivial_group_has_singleton_orbits() {
        let a = FiniteAction::new(2, Vec::new()).unwrap();
        assert_eq!(orbits(&a), vec![vec![0], vec![1]]);
        assert!(!is_minimal(&a));
    }

    #[test]
    fn a_transposition_on_three_points_fixes_the_third() {
        let a = FiniteAction::new(3, vec![m(&[1, 0, 2])]).unwrap();
        assert_eq!(orbits(&a), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn symmetric_groups_are_highly_transitive() {
        for n in 3..=5 {
            let a = FiniteAction::new(n, symmetric_group_generators(n)).unwrap();
            for k in 1..=3 {
                assert!(is_k_transitive(&a, k).unwrap(), "S_{n} on {k}-tuples");
            }
        }
    }

    #[test]
    fn rotations_are_not_two_transitive() {
        let a = FiniteAction::new(3, vec![m(&[1, 2, 0])]).unwrap();
        assert!(is_k_transitive(&a, 1).unwrap());
        assert!(!is_k_transitive(&a, 2).unwrap());
    }

    #[test]
    fn transitivity_needs_enough_points() {
        let a = FiniteAction::new(2, vec![m(&[1, 0])]).unwrap();
        assert_eq!(
            is_k_transitive(&a, 3),
            Err(FlowError::NotEnoughPoints { n: 2, k: 3 })
        );
        assert_eq!(is_k_transitive(&a, 0), Err(FlowError::ZeroK));
    }

    #[test]
    fn chain_counts_match_factorials() {
        assert_eq!(maximal_chains(1).unwrap().len(), 1);
        assert_eq!(maximal_chains(3).unwrap().len(), 6);
        let sets = maximal_chains(3).unwrap()[0].sets();
        assert_eq!(sets, vec![vec![0], vec![0, 1], vec![0, 1, 2]]);
    }

    #[test]
    fn identity_fixes_every_chain() {
        let id = SelfMap::identity(3);
        for chain in maximal_chains(3).unwrap() {
            assert_eq!(chain_action(&id, &chain).unwrap(), chain);
        }
    }

    #[test]
    fn equivariant_maps_to_self_contain_the_identity() {
        let a = FiniteAction::new(3, symmetric_group_generators(3)).unwrap();
        let maps = equivariant_maps(&a, &a).unwrap();
        assert!(maps.contains(&vec![0, 1, 2]));
    }

    #[test]
    fn no_equivariant_map_from_points_to_chains() {
        // A chain assigned to a point would have to be fixed by the
        // point's stabilizer, and a transposition fixes no chain through
        // the other two points.
        let a = FiniteAction::new(3, symmetric_group_generators(3)).unwrap();
        let (_, on_chains) = chain_flow(&a).unwrap();
        assert!(equivariant_maps(&a, &on_chains).unwrap().is_empty());
    }

    #[test]
    fn trivial_group_maps_anywhere() {
        let a = FiniteAction::new(1, Vec::new()).unwrap();
        let b = FiniteAction::new(4, Vec::new()).unwrap();
        assert_eq!(equivariant_maps(&a, &b).unwrap().len(), 4);
    }

    #[test]
    fn generator_count_mismatch_is_rejected() {
        let a = FiniteAction::new(2, vec![m(&[1, 0])]).unwrap();
        let b = FiniteAction::new(2, Vec::new()).unwrap();
        assert_eq!(
            equivariant_maps(&a, &b),
            Err(FlowError::GeneratorCountMismatch { a: 1, b: 0 })
        );
    }

    #[test]
    fn minimal_family_gives_two_step_chains() {
        let family = vec![vec![0, 1, 2], vec![0], vec![1], vec![2]];
        let a = FiniteAction::new(3, symmetric_group_generators(3)).unwrap();
        let report = laminar_chain_map(&family, &a).unwrap();
        assert!(report.all_chains && report.equivariant);
        assert_eq!(report.chains[0], vec![1, 0]);
        assert_eq!(report.chains[2], vec![3, 0]);
    }

    #[test]
    fn balanced_tree_family_gives_three_step_chains() {
        let family = vec![
            vec![0, 1, 2, 3],
            vec![0, 1],
            vec![2, 3],
            vec![0],
            vec![1],
            vec![2],
            vec![3],
        ];
        // Tree automorphisms: swap within the first pair, swap the pairs.
        let a = FiniteAction::new(4, vec![m(&[1, 0, 2, 3]), m(&[2, 3, 0, 1])]).unwrap();
        let report = laminar_chain_map(&family, &a).unwrap();
        assert!(report.all_chains && report.equivariant);
        for x in 0..4 {
            assert_eq!(report.chains[x].len(), 3);
        }
        assert_eq!(report.chains[0], vec![3, 1, 0]);
    }

    #[test]
    fn crossing_sets_are_rejected() {
        let family = vec![
            vec![0, 1, 2],
            vec![0, 1],
            vec![1, 2],
            vec![0],
            vec![1],
            vec![2],
        ];
        let a = FiniteAction::new(3, Vec::new()).unwrap();
        assert_eq!(
            laminar_chain_map(&family, &a),
            Err(FlowError::NotLaminar { a: 1, b: 2 })
        );
    }

    #[test]
    fn unpreserved_family_is_rejected() {
        let family = vec![vec![0, 1, 2], vec![0, 1], vec![0], vec![1], vec![2]];
        let a = FiniteAction::new(3, vec![m(&[0, 2, 1])]).unwrap();
        assert!(matches!(
            laminar_chain_map(&family, &a),
            Err(FlowError::FamilyNotPreserved { .. })
        ));
    }

    #[test]
    fn two_point_orders_swap() {
        let report = linear_orders_flow(2).unwrap();
        assert_eq!(report.orders.len(), 2);
        assert!(report.invariant && report.transitive && report.minimal);
        assert_eq!(report.full_space_orbits, Some(10));
    }

    #[test]
    fn three_point_orders_form_one_orbit_of_six() {
        let report = linear_orders_flow(3).unwrap();
        assert_eq!(report.orders.len(), 6);
        assert!(report.minimal);
        // Burnside on the cell action: (512 + 3*32 + 2*8) / 6.
        assert_eq!(report.full_space_orbits, Some(104));
    }

    #[test]
    fn one_point_flow_is_trivially_minimal() {
        let report = linear_orders_flow(1).unwrap();
        assert_eq!(report.orders, vec![0]);
        assert!(report.minimal);
        assert_eq!(report.full_space_orbits, Some(2));
    }

    #[test]
    fn order_flows_stay_minimal_through_five_points() {
        for n in 4..=5 {
            let report = linear_orders_flow(n).unwrap();
            assert_eq!(report.orders.len(), (1..=n).product::<usize>());
            assert!(report.minimal, "n = {n}");
            assert_eq!(report.full_space_orbits, None);
        }
    }
}
