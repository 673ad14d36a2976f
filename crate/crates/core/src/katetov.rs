//! Admissible one-point distance profiles and their extensions.
//!
//! A profile `f` over a space `X` is *admissible* when
//! `|f(x) - f(y)| <= d(x,y) <= f(x) + f(y)` for all `x, y`: exactly the
//! condition for `f` to be the distance profile of a new point adjoined to
//! `X`. The module provides:
//!
//! * the admissibility check and the per-point profile `y -> d(x,y)`;
//! * the canonical 1-Lipschitz lift `g(x) = min_y (d(x,y) + f(y))` of a
//!   profile from a subset to the whole space, which extends `f` exactly and
//!   preserves sup-distances between profiles;
//! * [`adjoin`]: realize a batch of profiles as actual points, with
//!   sup-distance between the new points and zero-distance duplicates merged
//!   away, so the result is again a genuine metric space;
//! * [`one_point_extension`]: the exact single-point amalgamation step — an
//!   embedded subspace plus one more point is re-embedded with zero error;
//! * [`urysohn_approx`]: iterate rounds of profile requests (a full grid or
//!   a seeded sample) to grow a space that realizes every requested
//!   extension;
//! * [`extension_property_score`]: the fraction of grid requests over small
//!   subsets that are already realized by existing points.
//!
//! Everything is exact; there are no tolerances anywhere in this module.

use crate::metric::{restrict, FiniteMetricSpace, MetricError};
use crate::scalar::Scalar;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use thiserror::Error;

/// Why a value map fails the admissibility inequalities, with the first
/// witnessing pair in lexicographic scan order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KatetovViolation {
    #[error("value map has {got} entries but the space has {expected} points")]
    MissingValues { expected: usize, got: usize },
    #[error("negative value at point {point}")]
    Negative { point: usize },
    #[error("Lipschitz bound fails: |f({x}) - f({y})| > d({x},{y})")]
    Lipschitz { x: usize, y: usize },
    #[error("sum bound fails: f({x}) + f({y}) < d({x},{y})")]
    SumBound { x: usize, y: usize },
}

/// Errors from profile plumbing and the extension operators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KatetovError {
    #[error("profile base is empty")]
    EmptyBase,
    #[error("profile base and value list have different lengths ({base} vs {values})")]
    LengthMismatch { base: usize, values: usize },
    #[error("profile base must be strictly increasing point indices")]
    UnsortedBase,
    #[error("base point {0} out of range")]
    BasePointOutOfRange(usize),
    #[error("profiles are over different bases")]
    BaseMismatch,
    #[error("profile must be defined on all points of the space")]
    BaseNotFull,
    #[error("value map is not admissible: {0}")]
    NotKatetov(KatetovViolation),
    #[error("metric error: {0}")]
    Metric(#[from] MetricError),
    #[error("the extending space must have exactly one point outside the embedded part")]
    NotOnePoint,
    #[error("embedded-part map must pair distinct points with distinct images")]
    PhiNotInjective,
    #[error("embedded-part map is not isometric on pair ({a},{b})")]
    PhiNotIsometric { a: usize, b: usize },
    #[error("grid step and cap must be positive")]
    BadGrid,
    #[error("request subset bound must be at least 1")]
    BadSubsetBound,
    #[error("request enumeration would exceed {limit} candidates ({needed})")]
    RequestBudget { limit: u64, needed: u64 },
}

/// A value map over a (sub)set of points of an ambient space: the candidate
/// distance profile of one new point.
///
/// `base` holds strictly increasing point indices of the ambient space and
/// `values` the corresponding distances. The ambient space itself is passed
/// to each operation, keeping profiles cheap to copy and serialize.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct KatetovFunction<S> {
    base: Vec<usize>,
    values: Vec<S>,
}

impl<S: Scalar> KatetovFunction<S> {
    /// A profile over the given base points. The base must be strictly
    /// increasing and nonempty; values must be nonnegative.
    pub fn new(base: Vec<usize>, values: Vec<S>) -> Result<Self, KatetovError> {
        if base.is_empty() {
            return Err(KatetovError::EmptyBase);
        }
        if base.len() != values.len() {
            return Err(KatetovError::LengthMismatch {
                base: base.len(),
                values: values.len(),
            });
        }
        if !base.windows(2).all(|w| w[0] < w[1]) {
            return Err(KatetovError::UnsortedBase);
        }
        if let Some(i) = values.iter().position(|v| v.is_negative()) {
            return Err(KatetovError::NotKatetov(KatetovViolation::Negative {
                point: base[i],
            }));
        }
        Ok(KatetovFunction { base, values })
    }

    /// A profile defined on every point `0..n`.
    pub fn on_all(n: usize, values: Vec<S>) -> Result<Self, KatetovError> {
        Self::new((0..n).collect(), values)
    }

    /// The base point indices (strictly increasing).
    pub fn base(&self) -> &[usize] {
        &self.base
    }

    /// The values, parallel to [`Self::base`].
    pub fn values(&self) -> &[S] {
        &self.values
    }

    /// The value at an ambient point, if it is in the base.
    pub fn value_at(&self, point: usize) -> Option<&S> {
        self.base
            .binary_search(&point)
            .ok()
            .map(|i| &self.values[i])
    }

    /// True when the profile is defined on all points of a space of size `n`.
    pub fn is_full(&self, n: usize) -> bool {
        self.base.len() == n && self.base.first() == Some(&0) && self.base.last() == Some(&(n - 1))
    }
}

/// Checks the admissibility inequalities for a full value map over `x`.
///
/// Scans pairs lexicographically and reports the first violation; for a
/// violating pair the Lipschitz side is reported before the sum side.
pub fn is_katetov<S: Scalar>(
    x: &FiniteMetricSpace<S>,
    values: &[S],
) -> Result<(), KatetovViolation> {
    if values.len() != x.n() {
        return Err(KatetovViolation::MissingValues {
            expected: x.n(),
            got: values.len(),
        });
    }
    if let Some(i) = values.iter().position(|v| v.is_negative()) {
        return Err(KatetovViolation::Negative { point: i });
    }
    for i in 0..x.n() {
        for j in i + 1..x.n() {
            let d = x.dist(i, j);
            if (values[i].clone() - values[j].clone()).abs() > *d {
                return Err(KatetovViolation::Lipschitz { x: i, y: j });
            }
            if values[i].clone() + values[j].clone() < *d {
                return Err(KatetovViolation::SumBound { x: i, y: j });
            }
        }
    }
    Ok(())
}

/// Checks a subset-based profile on the submetric induced by its base.
pub fn check_on_base<S: Scalar>(
    x: &FiniteMetricSpace<S>,
    f: &KatetovFunction<S>,
) -> Result<(), KatetovError> {
    if let Some(&bad) = f.base.iter().find(|&&p| p >= x.n()) {
        return Err(KatetovError::BasePointOutOfRange(bad));
    }
    let sub = restrict(x, &f.base)?;
    is_katetov(&sub, &f.values).map_err(KatetovError::NotKatetov)
}

/// The distance profile of an existing point: `f(y) = d(x,y)`. Always
/// admissible.
pub fn point_function<S: Scalar>(x: &FiniteMetricSpace<S>, point: usize) -> KatetovFunction<S> {
    assert!(point < x.n(), "point index out of range");
    let values = (0..x.n()).map(|y| x.dist(point, y).clone()).collect();
    KatetovFunction::on_all(x.n(), values).expect("point profile is always well-formed")
}

/// The canonical 1-Lipschitz lift of a profile from its base to the whole
/// space: `g(x) = min over base points y of (d(x,y) + f(y))`.
///
/// The lift extends `f` exactly (`g` agrees with `f` on the base) and is
/// itself admissible over the whole space.
pub fn kappa_extend<S: Scalar>(
    x: &FiniteMetricSpace<S>,
    f: &KatetovFunction<S>,
) -> Result<KatetovFunction<S>, KatetovError> {
    check_on_base(x, f)?;
    let values: Vec<S> = (0..x.n())
        .map(|p| {
            f.base
                .iter()
                .zip(&f.values)
                .map(|(&y, fy)| x.dist(p, y).clone() + fy.clone())
                .min()
                .expect("base is nonempty")
        })
        .collect();
    debug_assert!(is_katetov(x, &values).is_ok());
    debug_assert!(f
        .base
        .iter()
        .zip(&f.values)
        .all(|(&y, fy)| values[y] == *fy));
    KatetovFunction::on_all(x.n(), values)
}

/// The sup-distance `max |f - g|` between two profiles over the same base.
pub fn sup_distance<S: Scalar>(
    f: &KatetovFunction<S>,
    g: &KatetovFunction<S>,
) -> Result<S, KatetovError> {
    if f.base != g.base {
        return Err(KatetovError::BaseMismatch);
    }
    Ok(f.values
        .iter()
        .zip(&g.values)
        .map(|(a, b)| (a.clone() - b.clone()).abs())
        .max()
        .expect("base is nonempty"))
}

/// One growth round: the space before, the space after, how the old points
/// sit inside the new space, and where each requested profile landed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionStep<S> {
    pub before: FiniteMetricSpace<S>,
    pub after: FiniteMetricSpace<S>,
    /// Index map `before -> after`; always isometric.
    pub embedding: Vec<usize>,
    /// Each requested profile with the `after`-index of the point realizing
    /// it (an old point when the profile duplicated one, a merged new point
    /// when two requests coincided).
    pub adjoined: Vec<(KatetovFunction<S>, usize)>,
}

/// Realizes a batch of full-base profiles as actual points.
///
/// Distances from a new point `p_f` to old points are `f`'s values;
/// distances between new points are sup-distances of their profiles. A zero
/// distance (a profile equal to an old point's profile, or two equal
/// profiles) merges the coinciding points, so the result is a genuine metric
/// space; the per-profile realization index records where each request
/// landed. Old points keep their indices.
pub fn adjoin<S: Scalar>(
    x: &FiniteMetricSpace<S>,
    fs: &[KatetovFunction<S>],
) -> Result<ExtensionStep<S>, KatetovError> {
    let n = x.n();
    for f in fs {
        if !f.is_full(n) {
            return Err(KatetovError::BaseNotFull);
        }
        is_katetov(x, &f.values).map_err(KatetovError::NotKatetov)?;
    }

    // Where each profile lands: an old point it duplicates, an earlier
    // surviving profile it equals, or a fresh index.
    let mut landing: Vec<usize> = Vec::with_capacity(fs.len());
    let mut survivors: Vec<usize> = Vec::new(); // indices into fs
    for (fi, f) in fs.iter().enumerate() {
        let dup_old = (0..n).find(|&p| f.values[p].is_zero());
        if let Some(p) = dup_old {
            // Admissibility pins the whole profile to that point's row, so
            // distance zero really is coincidence, not an accident of one
            // coordinate.
            landing.push(p);
            continue;
        }
        if let Some(&prev) = survivors.iter().find(|&&prev| fs[prev].values == f.values) {
            landing.push(landing[prev]);
            continue;
        }
        landing.push(n + survivors.len());
        survivors.push(fi);
    }

    let m = n + survivors.len();
    let mut d = vec![S::zero(); m * m];
    for i in 0..n {
        for j in 0..n {
            d[i * m + j] = x.dist(i, j).clone();
        }
    }
    for (a, &fi) in survivors.iter().enumerate() {
        let p = n + a;
        for i in 0..n {
            d[p * m + i] = fs[fi].values[i].clone();
            d[i * m + p] = fs[fi].values[i].clone();
        }
        for (b, &gi) in survivors.iter().enumerate().take(a) {
            let q = n + b;
            let v = sup_distance(&fs[fi], &fs[gi])?;
            d[p * m + q] = v.clone();
            d[q * m + p] = v;
        }
    }
    let after = FiniteMetricSpace::from_flat(m, d)
        .expect("adjoined matrix is the sup-metric on profiles and must validate");
    Ok(ExtensionStep {
        before: x.clone(),
        after,
        embedding: (0..n).collect(),
        adjoined: fs.iter().cloned().zip(landing).collect(),
    })
}

/// The result of a single-point amalgamation: the growth step on the ambient
/// space plus the induced embedding of the extending space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnePointExtension<S> {
    pub step: ExtensionStep<S>,
    /// Index map from the extending space `K` into `step.after`; preserves
    /// every distance of `K` exactly.
    pub k_embedding: Vec<usize>,
}

/// Extends an isometric embedding of all-but-one point of `k` into `x` to an
/// isometric embedding of all of `k` into a one-point extension of `x`.
///
/// `l_points` are the embedded points of `k` and `phi` their images in `x`
/// (parallel slices). The missing point's distance profile is transported
/// along `phi`, lifted canonically to all of `x`, and adjoined; the returned
/// embedding of `k` is exact — no tolerance is involved.
pub fn one_point_extension<S: Scalar>(
    x: &FiniteMetricSpace<S>,
    k: &FiniteMetricSpace<S>,
    l_points: &[usize],
    phi: &[usize],
) -> Result<OnePointExtension<S>, KatetovError> {
    if l_points.is_empty() {
        return Err(KatetovError::EmptyBase);
    }
    if l_points.len() != phi.len() {
        return Err(KatetovError::LengthMismatch {
            base: l_points.len(),
            values: phi.len(),
        });
    }
    if l_points.len() + 1 != k.n() {
        return Err(KatetovError::NotOnePoint);
    }
    if let Some(&bad) = l_points.iter().find(|&&p| p >= k.n()) {
        return Err(KatetovError::BasePointOutOfRange(bad));
    }
    if let Some(&bad) = phi.iter().find(|&&p| p >= x.n()) {
        return Err(KatetovError::BasePointOutOfRange(bad));
    }
    for a in 0..l_points.len() {
        for b in a + 1..l_points.len() {
            if l_points[a] == l_points[b] || phi[a] == phi[b] {
                return Err(KatetovError::PhiNotInjective);
            }
            if k.dist(l_points[a], l_points[b]) != x.dist(phi[a], phi[b]) {
                return Err(KatetovError::PhiNotIsometric {
                    a: l_points[a],
                    b: l_points[b],
                });
            }
        }
    }
    let q = (0..k.n())
        .find(|p| !l_points.contains(p))
        .expect("exactly one point lies outside the embedded part");

    // The missing point's profile, transported to phi(L) and sorted by image
    // index as a profile base requires.
    let mut pairs: Vec<(usize, S)> = l_points
        .iter()
        .zip(phi)
        .map(|(&lp, &im)| (im, k.dist(q, lp).clone()))
        .collect();
    pairs.sort_by_key(|&(im, _)| im);
    let (base, values): (Vec<usize>, Vec<S>) = pairs.into_iter().unzip();
    let f = KatetovFunction::new(base, values)?;
    let lifted = kappa_extend(x, &f)?;
    let step = adjoin(x, std::slice::from_ref(&lifted))?;
    let new_index = step.adjoined[0].1;

    let mut k_embedding = vec![0usize; k.n()];
    for (&lp, &im) in l_points.iter().zip(phi) {
        k_embedding[lp] = step.embedding[im];
    }
    k_embedding[q] = new_index;
    debug_assert!((0..k.n()).all(
        |a| (0..k.n()).all(|b| step.after.dist(k_embedding[a], k_embedding[b]) == k.dist(a, b))
    ));
    Ok(OnePointExtension { step, k_embedding })
}

/// How each growth round of [`urysohn_approx`] chooses its profile requests.
///
/// Both policies draw values from the grid `{0, delta, 2*delta, ...}` capped
/// at `cap`, over subsets of at most `max_subset` points, and lift each
/// admissible request to the whole space before adjoining. `Full` enumerates
/// every request; `Sampled` draws a seeded random selection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RequestPolicy<S> {
    Full {
        delta: S,
        cap: S,
        max_subset: usize,
    },
    Sampled {
        count: usize,
        delta: S,
        cap: S,
        max_subset: usize,
        seed: u64,
    },
}

const REQUEST_BUDGET: u64 = 4_000_000;

/// Iterates growth rounds on `seed_space`.
///
/// Each round enumerates (or samples) admissible grid profiles on small
/// subsets of the current space, lifts them canonically, deduplicates lifts
/// that agree as value maps, and adjoins the batch in ascending
/// value-vector order — a canonical order, so a parallel enumeration would
/// have to produce byte-identical output. Earlier spaces embed isometrically
/// in later ones via the recorded step embeddings.
pub fn urysohn_approx<S: Scalar>(
    seed_space: &FiniteMetricSpace<S>,
    iterations: usize,
    policy: &RequestPolicy<S>,
) -> Result<Vec<ExtensionStep<S>>, KatetovError> {
    let (delta, cap, max_subset) = match policy {
        RequestPolicy::Full {
            delta,
            cap,
            max_subset,
        }
        | RequestPolicy::Sampled {
            delta,
            cap,
            max_subset,
            ..
        } => (delta, cap, *max_subset),
    };
    if !delta.is_positive() || !cap.is_positive() {
        return Err(KatetovError::BadGrid);
    }
    if max_subset == 0 {
        return Err(KatetovError::BadSubsetBound);
    }
    let mut rng = match policy {
        RequestPolicy::Full { .. } => None,
        RequestPolicy::Sampled { seed, .. } => Some(ChaCha8Rng::seed_from_u64(*seed)),
    };
    let mut steps = Vec::with_capacity(iterations);
    let mut current = seed_space.clone();
    for _ in 0..iterations {
        let lifted: BTreeSet<Vec<S>> = match policy {
            RequestPolicy::Full { .. } => {
                enumerate_lifted_requests(&current, max_subset, delta, cap)?
            }
            RequestPolicy::Sampled { count, .. } => sample_lifted_requests(
                &current,
                max_subset,
                delta,
                cap,
                *count,
                rng.as_mut().expect("sampled policy carries a generator"),
            ),
        };
        let fs: Vec<KatetovFunction<S>> = lifted
            .into_iter()
            .map(|values| KatetovFunction::on_all(current.n(), values))
            .collect::<Result<_, _>>()?;
        let step = adjoin(&current, &fs)?;
        current = step.after.clone();
        steps.push(step);
    }
    Ok(steps)
}

/// Grid values `0, delta, ..., <= cap`.
pub(crate) fn grid_values<S: Scalar>(delta: &S, cap: &S) -> Vec<S> {
    let max_k = (cap.clone() / delta.clone()).floor_int();
    (0..=max_k)
        .map(|k| S::from_int(k) * delta.clone())
        .collect()
}

/// Nonempty subsets of `0..n` with at most `max_size` points, in size-then-
/// lexicographic order.
fn small_subsets(n: usize, max_size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for size in 1..=max_size.min(n) {
        subsets_of_size(n, size, 0, &mut stack, &mut out);
    }
    out
}

fn subsets_of_size(
    n: usize,
    size: usize,
    from: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if stack.len() == size {
        out.push(stack.clone());
        return;
    }
    for p in from..n {
        if n - p < size - stack.len() {
            break;
        }
        stack.push(p);
        subsets_of_size(n, size, p + 1, stack, out);
        stack.pop();
    }
}

fn enumerate_lifted_requests<S: Scalar>(
    x: &FiniteMetricSpace<S>,
    max_subset: usize,
    delta: &S,
    cap: &S,
) -> Result<BTreeSet<Vec<S>>, KatetovError> {
    let grid = grid_values(delta, cap);
    let subsets = small_subsets(x.n(), max_subset);
    let mut needed: u64 = 0;
    for y in &subsets {
        needed = needed.saturating_add((grid.len() as u64).saturating_pow(y.len() as u32));
    }
    if needed > REQUEST_BUDGET {
        return Err(KatetovError::RequestBudget {
            limit: REQUEST_BUDGET,
            needed,
        });
    }
    let mut lifted = BTreeSet::new();
    for y in &subsets {
        let sub = restrict(x, y)?;
        let mut odo = vec![0usize; y.len()];
        loop {
            let values: Vec<S> = odo.iter().map(|&k| grid[k].clone()).collect();
            if is_katetov(&sub, &values).is_ok() {
                let f = KatetovFunction::new(y.clone(), values)?;
                lifted.insert(kappa_extend(x, &f)?.values);
            }
            if !advance_odometer(&mut odo, grid.len()) {
                break;
            }
        }
    }
    Ok(lifted)
}

fn advance_odometer(odo: &mut [usize], radix: usize) -> bool {
    for digit in odo.iter_mut().rev() {
        *digit += 1;
        if *digit < radix {
            return true;
        }
        *digit = 0;
    }
    false
}

fn sample_lifted_requests<S: Scalar>(
    x: &FiniteMetricSpace<S>,
    max_subset: usize,
    delta: &S,
    cap: &S,
    count: usize,
    rng: &mut ChaCha8Rng,
) -> BTreeSet<Vec<S>> {
    let grid = grid_values(delta, cap);
    let mut lifted = BTreeSet::new();
    let mut accepted = 0usize;
    // Rejection sampling with a bounded budget keeps the round a pure
    // function of the seed even when admissible tuples are scarce.
    let budget = count.saturating_mul(64).max(64);
    for _ in 0..budget {
        if accepted >= count {
            break;
        }
        let size = rng.gen_range(1..=max_subset.min(x.n()));
        let mut y: Vec<usize> = Vec::with_capacity(size);
        while y.len() < size {
            let p = rng.gen_range(0..x.n());
            if !y.contains(&p) {
                y.push(p);
            }
        }
        y.sort_unstable();
        let values: Vec<S> = (0..size)
            .map(|_| grid[rng.gen_range(0..grid.len())].clone())
            .collect();
        let sub = restrict(x, &y).expect("sampled subset is nonempty and in range");
        if is_katetov(&sub, &values).is_err() {
            continue;
        }
        let f = KatetovFunction::new(y, values).expect("sampled profile is well-formed");
        let g = kappa_extend(x, &f).expect("admissible profiles lift");
        lifted.insert(g.values);
        accepted += 1;
    }
    lifted
}

/// Realization counts behind an extension-property score.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreReport<S> {
    pub realized: u64,
    pub total: u64,
    /// `realized / total` as an exact rational in `[0, 1]`.
    pub score: S,
}

/// Scores how completely `x` realizes grid extension requests over subsets
/// of at most `k` of its points: the fraction of admissible `(Y, f)` pairs
/// for which some existing point sits at exactly the requested distances.
pub fn extension_property_score<S: Scalar>(
    x: &FiniteMetricSpace<S>,
    k: usize,
    delta: &S,
    cap: &S,
) -> Result<ScoreReport<S>, KatetovError> {
    let universe: Vec<usize> = (0..x.n()).collect();
    extension_property_score_over(x, &universe, k, delta, cap)
}

/// As [`extension_property_score`], but with request subsets drawn from a
/// fixed universe of points instead of the whole space.
///
/// Scoring over a fixed universe is the monotone quantity: enlarging the
/// space can only realize more of a fixed request set. The unrestricted
/// score can drop when fresh points bring fresh, unrealized requests with
/// them.
pub fn extension_property_score_over<S: Scalar>(
    x: &FiniteMetricSpace<S>,
    universe: &[usize],
    k: usize,
    delta: &S,
    cap: &S,
) -> Result<ScoreReport<S>, KatetovError> {
    if !delta.is_positive() || !cap.is_positive() {
        return Err(KatetovError::BadGrid);
    }
    if k == 0 {
        return Err(KatetovError::BadSubsetBound);
    }
    let mut uni: Vec<usize> = universe.to_vec();
    uni.sort_unstable();
    uni.dedup();
    if uni.is_empty() {
        return Err(KatetovError::EmptyBase);
    }
    if let Some(&bad) = uni.iter().find(|&&p| p >= x.n()) {
        return Err(KatetovError::BasePointOutOfRange(bad));
    }

    let grid = grid_values(delta, cap);
    let subset_patterns = small_subsets(uni.len(), k);
    let mut needed: u64 = 0;
    for pat in &subset_patterns {
        needed = needed.saturating_add((grid.len() as u64).saturating_pow(pat.len() as u32));
    }
    if needed > REQUEST_BUDGET {
        return Err(KatetovError::RequestBudget {
            limit: REQUEST_BUDGET,
            needed,
        });
    }

    let mut total = 0u64;
    let mut realized = 0u64;
    for pat in &subset_patterns {
        let y: Vec<usize> = pat.iter().map(|&i| uni[i]).collect();
        let sub = restrict(x, &y)?;
        let mut odo = vec![0usize; y.len()];
        loop {
            let values: Vec<S> = odo.iter().map(|&k| grid[k].clone()).collect();
            if is_katetov(&sub, &values).is_ok() {
                total += 1;
                let witness =
                    (0..x.n()).any(|p| y.iter().zip(&values).all(|(&yy, v)| x.dist(p, yy) == v));
                if witness {
                    realized += 1;
                }
            }
            if !advance_odometer(&mut odo, grid.len()) {
                break;
            }
        }
    }
    debug_assert!(total > 0, "the zero profile on a singleton always counts");
    let score = S::from_int_ratio(realized as i64, total as i64);
    Ok(ScoreReport {
        realized,
        total,
        score,
    })
}
