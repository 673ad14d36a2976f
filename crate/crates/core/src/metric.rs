//! Finite metric spaces over exact scalars.
//!
//! A [`FiniteMetricSpace`] is a validated distance matrix: zero diagonal,
//! symmetric, strictly positive off the diagonal, and triangle-closed. The
//! module provides submetrics, exhaustive isometric-embedding search, a
//! shuttle (alternating back-and-forth) bijection search, and a seeded random
//! generator that grows a space one point at a time while staying inside the
//! admissible distance intervals.
//!
//! All searches are deterministic backtracking with lexicographic
//! tie-breaking, so equal inputs always produce equal outputs; the random
//! generator is a pure function of its seed.

use crate::scalar::Scalar;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Why a candidate distance matrix fails to be a metric.
///
/// Validation scans in a fixed order (shape, negativity, diagonal, symmetry,
/// zero off-diagonal entries, triangles) and reports the first witness in
/// row-major / lexicographic scan order, so the reported indices are
/// deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricViolation {
    #[error("matrix is empty")]
    Empty,
    #[error("matrix is not square: {rows} rows but row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },
    #[error("negative entry at ({i},{j})")]
    NegativeEntry { i: usize, j: usize },
    #[error("nonzero diagonal entry at ({i},{i})")]
    NonzeroDiagonal { i: usize },
    #[error("asymmetric pair: d({i},{j}) != d({j},{i})")]
    Asymmetric { i: usize, j: usize },
    #[error("zero distance between distinct points {i} and {j}")]
    ZeroOffDiagonal { i: usize, j: usize },
    #[error("triangle inequality fails: d({i},{k}) > d({i},{j}) + d({j},{k})")]
    Triangle { i: usize, j: usize, k: usize },
}

/// Errors from operations on an already-valid space.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("empty point subset")]
    EmptySubset,
    #[error("point index {0} out of range")]
    PointOutOfRange(usize),
    #[error("label count {got} does not match point count {expected}")]
    LabelCount { expected: usize, got: usize },
}

/// Errors from the seeded random generator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RandomMetricError {
    #[error("point count must be at least 1")]
    NoPoints,
    #[error("denominator bound must be at least 1")]
    BadDenomBound,
    #[error("cap must be positive")]
    CapNotPositive,
    #[error(
        "no admissible grid value for d({point},{prior}): the cap is smaller than the positive floor"
    )]
    EmptyInterval { point: usize, prior: usize },
}

/// A finite metric space with exact-rational distances.
///
/// Point identity is positional: points are `0..n`, and every operation in
/// the workspace addresses points by index. Labels, when present, are purely
/// decorative and never participate in equality of the metric structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMetricSpace<S> {
    n: usize,
    labels: Option<Vec<String>>,
    d: Vec<S>, // row-major n×n
}

impl<S: Scalar> FiniteMetricSpace<S> {
    /// Validates `rows` as a distance matrix and wraps it. Equivalent to
    /// [`validate_metric`].
    pub fn new(rows: Vec<Vec<S>>) -> Result<Self, MetricViolation> {
        validate_metric(rows)
    }

    /// Attaches display labels to the points.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, MetricError> {
        if labels.len() != self.n {
            return Err(MetricError::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Number of points.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The distance between points `i` and `j`.
    ///
    /// # Panics
    ///
    /// Panics if an index is out of range.
    pub fn dist(&self, i: usize, j: usize) -> &S {
        assert!(i < self.n && j < self.n, "point index out of range");
        &self.d[i * self.n + j]
    }

    /// Decorative point labels, if any.
    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Largest distance in the space (zero for a single point).
    pub fn diameter(&self) -> S {
        let mut best = S::zero();
        for v in &self.d {
            if *v > best {
                best = v.clone();
            }
        }
        best
    }

    /// The matrix as owned rows, for serialization.
    pub fn rows(&self) -> Vec<Vec<S>> {
        (0..self.n)
            .map(|i| self.d[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    /// True when the two spaces have identical distance matrices (labels are
    /// ignored; they are decoration, not structure).
    pub fn same_metric(&self, other: &Self) -> bool {
        self.n == other.n && self.d == other.d
    }

    /// Internal constructor for matrices produced by constructions that are
    /// proven valid; still runs the full validator so an internal bug cannot
    /// leak an invalid space.
    pub(crate) fn from_flat(n: usize, d: Vec<S>) -> Result<Self, MetricViolation> {
        assert_eq!(d.len(), n * n, "flat matrix has wrong length");
        let rows = (0..n)
            .map(|i| d[i * n..(i + 1) * n].to_vec())
            .collect::<Vec<_>>();
        validate_metric(rows)
    }
}

/// Checks the metric axioms and returns the validated space, or the first
/// violation in deterministic scan order.
pub fn validate_metric<S: Scalar>(
    rows: Vec<Vec<S>>,
) -> Result<FiniteMetricSpace<S>, MetricViolation> {
    let n = rows.len();
    if n == 0 {
        return Err(MetricViolation::Empty);
    }
    for (row, r) in rows.iter().enumerate() {
        if r.len() != n {
            return Err(MetricViolation::NotSquare {
                rows: n,
                row,
                len: r.len(),
            });
        }
    }
    for (i, r) in rows.iter().enumerate() {
        for (j, v) in r.iter().enumerate() {
            if v.is_negative() {
                return Err(MetricViolation::NegativeEntry { i, j });
            }
        }
    }
    for (i, r) in rows.iter().enumerate() {
        if !r[i].is_zero() {
            return Err(MetricViolation::NonzeroDiagonal { i });
        }
    }
    for (i, row) in rows.iter().enumerate() {
        for (j, value) in row.iter().enumerate().skip(i + 1) {
            if *value != rows[j][i] {
                return Err(MetricViolation::Asymmetric { i, j });
            }
        }
    }
    for (i, row) in rows.iter().enumerate() {
        for (j, value) in row.iter().enumerate().skip(i + 1) {
            if value.is_zero() {
                return Err(MetricViolation::ZeroOffDiagonal { i, j });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if rows[i][k] > rows[i][j].clone() + rows[j][k].clone() {
                    return Err(MetricViolation::Triangle { i, j, k });
                }
            }
        }
    }
    let mut d = Vec::with_capacity(n * n);
    for r in rows {
        d.extend(r);
    }
    Ok(FiniteMetricSpace { n, labels: None, d })
}

/// The submetric induced on a subset of points.
///
/// The subset may be given in any order and with repeats; the result keeps
/// the points in their original index order (deduplicated), matching the
/// positional-identity convention.
pub fn restrict<S: Scalar>(
    x: &FiniteMetricSpace<S>,
    points: &[usize],
) -> Result<FiniteMetricSpace<S>, MetricError> {
    let mut idx: Vec<usize> = points.to_vec();
    idx.sort_unstable();
    idx.dedup();
    if idx.is_empty() {
        return Err(MetricError::EmptySubset);
    }
    if let Some(&bad) = idx.iter().find(|&&p| p >= x.n) {
        return Err(MetricError::PointOutOfRange(bad));
    }
    let m = idx.len();
    let mut d = Vec::with_capacity(m * m);
    for &i in &idx {
        for &j in &idx {
            d.push(x.dist(i, j).clone());
        }
    }
    let labels = x
        .labels
        .as_ref()
        .map(|ls| idx.iter().map(|&i| ls[i].clone()).collect());
    Ok(FiniteMetricSpace { n: m, labels, d })
}

/// A partial distance-preserving injection between two spaces, stored as an
/// assignment array indexed by source point (`None` = unassigned).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialIsometry {
    pub source_points: usize,
    pub target_points: usize,
    pub assignment: Vec<Option<usize>>,
}

/// Why an assignment fails to be a partial isometry.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsometryViolation {
    #[error("assignment length {got} does not match source point count {expected}")]
    Length { expected: usize, got: usize },
    #[error("target index {target} out of range (assigned to source {source_point})")]
    TargetOutOfRange { source_point: usize, target: usize },
    #[error("sources {a} and {b} share the target {target}")]
    NotInjective { a: usize, b: usize, target: usize },
    #[error("distance mismatch on sources ({a},{b})")]
    DistanceMismatch { a: usize, b: usize },
}

impl PartialIsometry {
    /// A total assignment.
    pub fn total(assignment: Vec<usize>, target_points: usize) -> Self {
        PartialIsometry {
            source_points: assignment.len(),
            target_points,
            assignment: assignment.into_iter().map(Some).collect(),
        }
    }

    /// True when every source point is assigned.
    pub fn is_total(&self) -> bool {
        self.assignment.iter().all(Option::is_some)
    }

    /// The assignment as a plain array, when total.
    pub fn as_total(&self) -> Option<Vec<usize>> {
        self.assignment.iter().copied().collect()
    }

    /// Verifies injectivity and distance preservation against concrete
    /// spaces.
    pub fn check<S: Scalar>(
        &self,
        source: &FiniteMetricSpace<S>,
        target: &FiniteMetricSpace<S>,
    ) -> Result<(), IsometryViolation> {
        if self.assignment.len() != source.n() {
            return Err(IsometryViolation::Length {
                expected: source.n(),
                got: self.assignment.len(),
            });
        }
        let assigned: Vec<(usize, usize)> = self
            .assignment
            .iter()
            .enumerate()
            .filter_map(|(s, t)| t.map(|t| (s, t)))
            .collect();
        for &(s, t) in &assigned {
            if t >= target.n() {
                return Err(IsometryViolation::TargetOutOfRange {
                    source_point: s,
                    target: t,
                });
            }
        }
        for (p, &(a, ta)) in assigned.iter().enumerate() {
            for &(b, tb) in &assigned[p + 1..] {
                if ta == tb {
                    return Err(IsometryViolation::NotInjective { a, b, target: ta });
                }
                if source.dist(a, b) != target.dist(ta, tb) {
                    return Err(IsometryViolation::DistanceMismatch { a, b });
                }
            }
        }
        Ok(())
    }
}

/// All distance-preserving injections `a -> b`, as total assignment arrays in
/// lexicographic order. Empty when none exist.
pub fn isometric_embeddings<S: Scalar>(
    a: &FiniteMetricSpace<S>,
    b: &FiniteMetricSpace<S>,
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if a.n() > b.n() {
        return out;
    }
    let mut assign: Vec<usize> = Vec::with_capacity(a.n());
    let mut used = vec![false; b.n()];
    embed_from(a, b, &mut assign, &mut used, &mut out);
    out
}

fn embed_from<S: Scalar>(
    a: &FiniteMetricSpace<S>,
    b: &FiniteMetricSpace<S>,
    assign: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let s = assign.len();
    if s == a.n() {
        out.push(assign.clone());
        return;
    }
    'target: for t in 0..b.n() {
        if used[t] {
            continue;
        }
        for (prev_s, &prev_t) in assign.iter().enumerate() {
            if a.dist(s, prev_s) != b.dist(t, prev_t) {
                continue 'target;
            }
        }
        assign.push(t);
        used[t] = true;
        embed_from(a, b, assign, used, out);
        used[t] = false;
        assign.pop();
    }
}

/// Searches for a bijective isometry `a -> b` by the shuttle method:
/// alternately match the lowest-index unmatched source point, then the
/// lowest-index unmatched target point, backtracking on dead ends and trying
/// candidates in increasing index order.
///
/// The search is complete, so `Some`/`None` agrees with exhaustive
/// permutation search; the returned assignment is the deterministic
/// first find. Size mismatch returns `None`.
pub fn back_and_forth<S: Scalar>(
    a: &FiniteMetricSpace<S>,
    b: &FiniteMetricSpace<S>,
) -> Option<Vec<usize>> {
    if a.n() != b.n() {
        return None;
    }
    let n = a.n();
    let mut forward: Vec<Option<usize>> = vec![None; n];
    let mut backward: Vec<Option<usize>> = vec![None; n];
    if shuttle(a, b, &mut forward, &mut backward, 0) {
        Some(forward.into_iter().map(|t| t.unwrap()).collect())
    } else {
        None
    }
}

fn shuttle<S: Scalar>(
    a: &FiniteMetricSpace<S>,
    b: &FiniteMetricSpace<S>,
    forward: &mut Vec<Option<usize>>,
    backward: &mut Vec<Option<usize>>,
    matched: usize,
) -> bool {
    let n = a.n();
    if matched == n {
        return true;
    }
    let consistent = |s: usize, t: usize, forward: &[Option<usize>]| {
        forward
            .iter()
            .enumerate()
            .filter_map(|(s2, t2)| t2.map(|t2| (s2, t2)))
            .all(|(s2, t2)| a.dist(s, s2) == b.dist(t, t2))
    };
    if matched.is_multiple_of(2) {
        // Source move: extend by the lowest unmatched source point.
        let s = forward.iter().position(Option::is_none).unwrap();
        for t in 0..n {
            if backward[t].is_some() || !consistent(s, t, forward) {
                continue;
            }
            forward[s] = Some(t);
            backward[t] = Some(s);
            if shuttle(a, b, forward, backward, matched + 1) {
                return true;
            }
            forward[s] = None;
            backward[t] = None;
        }
    } else {
        // Target move: extend by the lowest unmatched target point.
        let t = backward.iter().position(Option::is_none).unwrap();
        for s in 0..n {
            if forward[s].is_some() || !consistent(s, t, forward) {
                continue;
            }
            forward[s] = Some(t);
            backward[t] = Some(s);
            if shuttle(a, b, forward, backward, matched + 1) {
                return true;
            }
            forward[s] = None;
            backward[t] = None;
        }
    }
    false
}

/// Exhaustive oracle for [`back_and_forth`]: tries every total assignment.
/// Intended for tests and cross-checks at small sizes.
pub fn brute_force_isometry<S: Scalar>(
    a: &FiniteMetricSpace<S>,
    b: &FiniteMetricSpace<S>,
) -> Option<Vec<usize>> {
    if a.n() != b.n() {
        return None;
    }
    let n = a.n();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if PartialIsometry::total(perm.clone(), n).check(a, b).is_ok() {
            return Some(perm);
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

/// Advances `perm` to its lexicographic successor; false at the last one.
pub(crate) fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Grows a random metric space with distances on the grid `k / denom_bound`,
/// one point at a time.
///
/// For each new point `m` and each prior point `i` in index order, the
/// distance `d(m,i)` is drawn uniformly from the grid values inside
/// `[L, U]`, where `L` is the largest reverse-triangle lower bound against
/// the distances already fixed (with a positive floor of `1/denom_bound`, so
/// the space is a genuine metric) and `U` is the smallest forward-triangle
/// upper bound, capped at `cap` (default `1`). The result always validates;
/// a `cap` below the floor is the one way generation can fail.
///
/// Deterministic for a fixed seed.
pub fn random_metric<S: Scalar>(
    n: usize,
    denom_bound: i64,
    cap: Option<S>,
    seed: u64,
) -> Result<FiniteMetricSpace<S>, RandomMetricError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_metric_with(n, denom_bound, cap, &mut rng)
}

/// As [`random_metric`], drawing from a caller-supplied generator so several
/// spaces can be derived from one seed stream.
pub fn random_metric_with<S: Scalar>(
    n: usize,
    denom_bound: i64,
    cap: Option<S>,
    rng: &mut ChaCha8Rng,
) -> Result<FiniteMetricSpace<S>, RandomMetricError> {
    if n == 0 {
        return Err(RandomMetricError::NoPoints);
    }
    if denom_bound < 1 {
        return Err(RandomMetricError::BadDenomBound);
    }
    let cap = cap.unwrap_or_else(S::one);
    if !cap.is_positive() {
        return Err(RandomMetricError::CapNotPositive);
    }
    let q = S::from_int(denom_bound);
    let mut d = vec![S::zero(); n * n];
    for m in 1..n {
        for i in 0..m {
            let mut lo = S::zero();
            let mut up = cap.clone();
            for j in 0..i {
                let dm = d[m * n + j].clone();
                let di = d[i * n + j].clone();
                let diff = (dm.clone() - di.clone()).abs();
                if diff > lo {
                    lo = diff;
                }
                let sum = dm + di;
                if sum < up {
                    up = sum;
                }
            }
            let mut k_lo = (lo * q.clone()).ceil_int();
            if k_lo < 1 {
                k_lo = 1; // positive floor: distinct points stay apart
            }
            let k_up = (up * q.clone()).floor_int();
            if k_lo > k_up {
                return Err(RandomMetricError::EmptyInterval { point: m, prior: i });
            }
            let k = rng.gen_range(k_lo..=k_up);
            let v = S::from_int_ratio(k, denom_bound);
            d[m * n + i] = v.clone();
            d[i * n + m] = v;
        }
    }
    Ok(FiniteMetricSpace::from_flat(n, d)
        .expect("randomly grown matrix must satisfy the metric axioms"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn r(num: i64, den: i64) -> Rat {
        Rat::from_int_ratio(num, den)
    }

    fn space(rows: &[&[i64]]) -> FiniteMetricSpace<Rat> {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|&v| r(v, 1)).collect())
            .collect();
        validate_metric(rows).unwrap()
    }

    /// The path metric on integer coordinates.
    fn line(coords: &[i64]) -> FiniteMetricSpace<Rat> {
        let rows = coords
            .iter()
            .map(|&a| coords.iter().map(|&b| r((a - b).abs(), 1)).collect())
            .collect();
        validate_metric(rows).unwrap()
    }

    #[test]
    fn smallest_nondegenerate_space_validates() {
        let x = space(&[&[0, 1], &[1, 0]]);
        assert_eq!(x.n(), 2);
        assert_eq!(*x.dist(0, 1), r(1, 1));
    }

    #[test]
    fn line_metric_validates() {
        let x = line(&[0, 1, 2, 3]);
        assert_eq!(x.n(), 4);
        assert_eq!(*x.dist(0, 3), r(3, 1));
    }

    #[test]
    fn triangle_violation_names_first_triple() {
        let rows = vec![
            vec![r(0, 1), r(1, 1), r(3, 1)],
            vec![r(1, 1), r(0, 1), r(1, 1)],
            vec![r(3, 1), r(1, 1), r(0, 1)],
        ];
        assert_eq!(
            validate_metric(rows).unwrap_err(),
            MetricViolation::Triangle { i: 0, j: 1, k: 2 }
        );
    }

    #[test]
    fn violation_scan_order_is_shape_negative_diagonal_symmetry_zero() {
        assert_eq!(
            validate_metric::<Rat>(vec![]).unwrap_err(),
            MetricViolation::Empty
        );
        let not_square = vec![vec![r(0, 1), r(1, 1)], vec![r(1, 1)]];
        assert_eq!(
            validate_metric(not_square).unwrap_err(),
            MetricViolation::NotSquare {
                rows: 2,
                row: 1,
                len: 1
            }
        );
        let negative = vec![vec![r(0, 1), r(-1, 1)], vec![r(-1, 1), r(0, 1)]];
        assert_eq!(
            validate_metric(negative).unwrap_err(),
            MetricViolation::NegativeEntry { i: 0, j: 1 }
        );
        let diag = vec![vec![r(1, 1), r(1, 1)], vec![r(1, 1), r(0, 1)]];
        assert_eq!(
            validate_metric(diag).unwrap_err(),
            MetricViolation::NonzeroDiagonal { i: 0 }
        );
        let asym = vec![vec![r(0, 1), r(1, 1)], vec![r(2, 1), r(0, 1)]];
        assert_eq!(
            validate_metric(asym).unwrap_err(),
            MetricViolation::Asymmetric { i: 0, j: 1 }
        );
        let zero = vec![vec![r(0, 1), r(0, 1)], vec![r(0, 1), r(0, 1)]];
        assert_eq!(
            validate_metric(zero).unwrap_err(),
            MetricViolation::ZeroOffDiagonal { i: 0, j: 1 }
        );
    }

    #[test]
    fn restrict_full_subset_is_identity() {
        let x = line(&[0, 1, 2]);
        let y = restrict(&x, &[0, 1, 2]).unwrap();
        assert!(x.same_metric(&y));
    }

    #[test]
    fn restrict_pair_from_line() {
        let x = line(&[0, 1, 2, 3]);
        let y = restrict(&x, &[0, 3]).unwrap();
        assert_eq!(y.n(), 2);
        assert_eq!(*y.dist(0, 1), r(3, 1));
    }

    #[test]
    fn restrict_rejects_empty_and_out_of_range() {
        let x = line(&[0, 1]);
        assert_eq!(restrict(&x, &[]).unwrap_err(), MetricError::EmptySubset);
        assert_eq!(
            restrict(&x, &[0, 5]).unwrap_err(),
            MetricError::PointOutOfRange(5)
        );
    }

    #[test]
    fn single_point_embeds_everywhere() {
        let a = space(&[&[0]]);
        let b = line(&[0, 1, 2, 4]);
        let embs = isometric_embeddings(&a, &b);
        assert_eq!(embs, vec![vec![0], vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn equilateral_triangle_has_six_self_embeddings() {
        let t = space(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        assert_eq!(isometric_embeddings(&t, &t).len(), 6);
    }

    #[test]
    fn unit_pair_into_three_point_line() {
        let a = space(&[&[0, 1], &[1, 0]]);
        let b = line(&[0, 1, 2]);
        let embs = isometric_embeddings(&a, &b);
        assert_eq!(embs, vec![vec![0, 1], vec![1, 0], vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn self_embeddings_contain_identity() {
        let x = line(&[0, 1, 3]);
        let embs = isometric_embeddings(&x, &x);
        assert!(embs.contains(&vec![0, 1, 2]));
    }

    #[test]
    fn shuttle_finds_identity_first_on_equal_spaces() {
        let x = line(&[0, 1, 2, 4]);
        assert_eq!(back_and_forth(&x, &x), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn shuttle_rejects_distinct_distance_multisets() {
        let a = line(&[0, 1, 2]);
        let b = line(&[0, 1, 3]);
        assert_eq!(back_and_forth(&a, &b), None);
        assert_eq!(brute_force_isometry(&a, &b), None);
    }

    #[test]
    fn shuttle_matches_reversed_line() {
        let a = line(&[0, 1, 2, 4]);
        let b = line(&[4, 2, 1, 0]);
        let found = back_and_forth(&a, &b).expect("reversed line is isometric");
        PartialIsometry::total(found, 4).check(&a, &b).unwrap();
        assert!(brute_force_isometry(&a, &b).is_some());
    }

    #[test]
    fn single_point_random_space() {
        let x: FiniteMetricSpace<Rat> = random_metric(1, 4, None, 7).unwrap();
        assert_eq!(x.n(), 1);
    }

    #[test]
    fn random_pair_lands_on_admissible_grid() {
        for seed in 0..32 {
            let x: FiniteMetricSpace<Rat> = random_metric(2, 4, Some(r(1, 1)), seed).unwrap();
            let v = x.dist(0, 1).clone();
            let grid: Vec<Rat> = (1..=4).map(|k| r(k, 4)).collect();
            assert!(grid.contains(&v), "d(0,1)={v} off the grid");
        }
    }

    #[test]
    fn random_triple_satisfies_all_triangles() {
        for seed in 0..64 {
            let x: FiniteMetricSpace<Rat> = random_metric(3, 8, Some(r(2, 1)), seed).unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        assert!(*x.dist(i, k) <= x.dist(i, j).clone() + x.dist(j, k).clone());
                    }
                }
            }
        }
    }

    #[test]
    fn random_generation_is_seed_deterministic() {
        let a: FiniteMetricSpace<Rat> = random_metric(6, 8, None, 99).unwrap();
        let b: FiniteMetricSpace<Rat> = random_metric(6, 8, None, 99).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn tiny_cap_reports_blocked_pair() {
        let err = random_metric::<Rat>(2, 4, Some(r(1, 8)), 0).unwrap_err();
        assert_eq!(err, RandomMetricError::EmptyInterval { point: 1, prior: 0 });
    }

    #[test]
    fn next_permutation_walks_lexicographically() {
        let mut p = vec![0, 1, 2];
        let mut seen = vec![p.clone()];
        while next_permutation(&mut p) {
            seen.push(p.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen.first().unwrap(), &vec![0, 1, 2]);
        assert_eq!(seen.last().unwrap(), &vec![2, 1, 0]);
    }
}
