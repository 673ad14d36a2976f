//! Cross-distance matrices between capped metric spaces and their capped
//! min-plus semigroup.
//!
//! A [`BiKatetovMatrix`] over spaces `X`, `Y` (both of diameter at most 1)
//! assigns each pair `(x, y)` a value in `[0, 1]` such that every row is an
//! admissible distance profile over `Y` and every column one over `X` — the
//! exact condition for the matrix to be the cross-distance block of a metric
//! on the disjoint union ([`amalgam`]). Matrices compose by the capped
//! min-plus product
//!
//! ```text
//! r(x, y) = min(1, min over z of p(x, z) + q(z, y))
//! ```
//!
//! which is associative, has [`identity_element`] (`p = d`) as a two-sided
//! unit, represents isometries contravariantly via [`graph_element`], and
//! realizes every nonempty subset `A` as an exact idempotent
//! [`idempotent_from_subset`]. [`enumerate_grid_idempotents`] searches a
//! value grid for *all* idempotent matrices and reports which of them arise
//! from subsets — finding one that does not is data, not an error.
//!
//! [`StaircaseRelation`] is a companion combinatorial model: monotone chains
//! of grid cells from `(0,0)` to `(n,n)`, composed as relations and then
//! deterministically repaired to a chain ([`staircase_compose`]).

use crate::katetov::{grid_values, is_katetov, KatetovViolation};
use crate::metric::{validate_metric, FiniteMetricSpace};
use crate::scalar::Scalar;
use std::collections::BTreeSet;
use thiserror::Error;

/// Why a candidate cross-distance matrix is rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BiKatetovViolation {
    #[error("left space has diameter > 1 at pair ({i},{j})")]
    LeftDiameter { i: usize, j: usize },
    #[error("right space has diameter > 1 at pair ({i},{j})")]
    RightDiameter { i: usize, j: usize },
    #[error("matrix shape is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    Shape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("entry ({x},{y}) lies outside [0,1]")]
    EntryOutOfRange { x: usize, y: usize },
    #[error("row {x} is not an admissible profile over the right space: {violation}")]
    Row {
        x: usize,
        violation: KatetovViolation,
    },
    #[error("column {y} is not an admissible profile over the left space: {violation}")]
    Column {
        y: usize,
        violation: KatetovViolation,
    },
}

/// Errors from the semigroup operations and the staircase model.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RoelckeError {
    #[error("invalid cross-distance matrix: {0}")]
    Invalid(#[from] BiKatetovViolation),
    #[error("middle spaces of a composition do not carry the same metric")]
    MiddleMismatch,
    #[error("space has diameter > 1")]
    DiameterExceedsOne,
    #[error("subset is empty")]
    EmptySubset,
    #[error("subset point {0} out of range")]
    PointOutOfRange(usize),
    #[error("map must be a permutation of the points")]
    NotAPermutation,
    #[error("map is not an isometry: distance changes on pair ({a},{b})")]
    NotAnIsometry { a: usize, b: usize },
    #[error("matrix is square over one space but not idempotent")]
    NotIdempotent,
    #[error("matrix sides carry different metrics; no subset can generate it")]
    SidesDiffer,
    #[error("grid step must be positive and at most 1")]
    BadDelta,
    #[error("grid search would scan {needed} matrices (limit {limit})")]
    GridBudget { limit: u64, needed: u64 },
    #[error("staircase grids differ ({a} vs {b})")]
    GridMismatch { a: usize, b: usize },
    #[error("not a staircase: {0}")]
    NotAStaircase(#[from] StaircaseViolation),
}

/// A cross-distance matrix: every row an admissible profile over the right
/// space, every column one over the left space, all values in `[0, 1]`.
///
/// The two spaces are owned by the matrix so a value is self-contained;
/// construct through [`validate_bikatetov`] or the element constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiKatetovMatrix<S> {
    left: FiniteMetricSpace<S>,
    right: FiniteMetricSpace<S>,
    p: Vec<S>,
}

impl<S: Scalar> BiKatetovMatrix<S> {
    /// The left space (row index domain).
    pub fn left(&self) -> &FiniteMetricSpace<S> {
        &self.left
    }

    /// The right space (column index domain).
    pub fn right(&self) -> &FiniteMetricSpace<S> {
        &self.right
    }

    /// The value at `(x, y)`.
    pub fn at(&self, x: usize, y: usize) -> &S {
        assert!(
            x < self.left.n() && y < self.right.n(),
            "index out of range"
        );
        &self.p[x * self.right.n() + y]
    }

    /// The matrix as rows of values.
    pub fn rows(&self) -> Vec<Vec<S>> {
        (0..self.left.n())
            .map(|x| (0..self.right.n()).map(|y| self.at(x, y).clone()).collect())
            .collect()
    }

    /// True when the two matrices have the same spaces and values (labels
    /// ignored).
    pub fn same_element(&self, other: &Self) -> bool {
        self.left.same_metric(&other.left)
            && self.right.same_metric(&other.right)
            && self.p == other.p
    }

    fn from_parts(left: FiniteMetricSpace<S>, right: FiniteMetricSpace<S>, p: Vec<S>) -> Self {
        let m = BiKatetovMatrix { left, right, p };
        debug_assert!(
            validate_bikatetov(&m.left, &m.right, m.rows()).is_ok(),
            "internally constructed matrix must validate"
        );
        m
    }
}

fn diameter_at_most_one<S: Scalar>(x: &FiniteMetricSpace<S>) -> Result<(), (usize, usize)> {
    for i in 0..x.n() {
        for j in i + 1..x.n() {
            if *x.dist(i, j) > S::one() {
                return Err((i, j));
            }
        }
    }
    Ok(())
}

/// Checks a candidate matrix against both invariant families and, on
/// success, cross-checks that the amalgamated metric on the disjoint union
/// actually validates.
///
/// Check order: left diameter, right diameter, shape, entry range (row-major
/// scan), rows ascending, columns ascending.
pub fn validate_bikatetov<S: Scalar>(
    left: &FiniteMetricSpace<S>,
    right: &FiniteMetricSpace<S>,
    p: Vec<Vec<S>>,
) -> Result<BiKatetovMatrix<S>, BiKatetovViolation> {
    if let Err((i, j)) = diameter_at_most_one(left) {
        return Err(BiKatetovViolation::LeftDiameter { i, j });
    }
    if let Err((i, j)) = diameter_at_most_one(right) {
        return Err(BiKatetovViolation::RightDiameter { i, j });
    }
    let (nx, ny) = (left.n(), right.n());
    if p.len() != nx || p.iter().any(|row| row.len() != ny) {
        let bad = p.iter().map(Vec::len).find(|&l| l != ny).unwrap_or(ny);
        return Err(BiKatetovViolation::Shape {
            rows: p.len(),
            cols: bad,
            expected_rows: nx,
            expected_cols: ny,
        });
    }
    for (x, row) in p.iter().enumerate() {
        for (y, v) in row.iter().enumerate() {
            if v.is_negative() || *v > S::one() {
                return Err(BiKatetovViolation::EntryOutOfRange { x, y });
            }
        }
    }
    for (x, row) in p.iter().enumerate() {
        is_katetov(right, row).map_err(|violation| BiKatetovViolation::Row { x, violation })?;
    }
    for y in 0..ny {
        let col: Vec<S> = p.iter().map(|row| row[y].clone()).collect();
        is_katetov(left, &col).map_err(|violation| BiKatetovViolation::Column { y, violation })?;
    }
    let flat: Vec<S> = p.into_iter().flatten().collect();
    let m = BiKatetovMatrix {
        left: left.clone(),
        right: right.clone(),
        p: flat,
    };
    // The invariants above are exactly what makes the glued matrix a
    // pseudometric, so this cannot fail; it is kept as a runtime
    // cross-check of the construction itself.
    build_amalgam(&m);
    Ok(m)
}

/// A metric on the disjoint union of the two sides, with zero-distance
/// cross pairs merged into single points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Amalgam<S> {
    pub space: FiniteMetricSpace<S>,
    /// Where each left point landed.
    pub left_image: Vec<usize>,
    /// Where each right point landed.
    pub right_image: Vec<usize>,
}

/// Glues the two sides along the matrix: within-side distances come from
/// the side metrics, cross distances from the matrix, and a zero cross
/// distance identifies the two points (each point has at most one
/// zero-partner, so the merge is a plain matching).
pub fn amalgam<S: Scalar>(m: &BiKatetovMatrix<S>) -> Amalgam<S> {
    build_amalgam(m)
}

fn build_amalgam<S: Scalar>(m: &BiKatetovMatrix<S>) -> Amalgam<S> {
    let (nx, ny) = (m.left.n(), m.right.n());
    // partner[y] = the left point at cross distance zero, if any.
    let partner: Vec<Option<usize>> = (0..ny)
        .map(|y| (0..nx).find(|&x| m.at(x, y).is_zero()))
        .collect();
    let left_image: Vec<usize> = (0..nx).collect();
    let mut right_image = vec![0usize; ny];
    let mut survivors: Vec<usize> = Vec::new();
    for y in 0..ny {
        match partner[y] {
            Some(x) => right_image[y] = x,
            None => {
                right_image[y] = nx + survivors.len();
                survivors.push(y);
            }
        }
    }
    let n = nx + survivors.len();
    let mut d = vec![S::zero(); n * n];
    for i in 0..nx {
        for j in 0..nx {
            d[i * n + j] = m.left.dist(i, j).clone();
        }
    }
    for (a, &y) in survivors.iter().enumerate() {
        let idx = nx + a;
        for x in 0..nx {
            d[idx * n + x] = m.at(x, y).clone();
            d[x * n + idx] = m.at(x, y).clone();
        }
        for (b, &y2) in survivors.iter().enumerate().take(a) {
            let idx2 = nx + b;
            d[idx * n + idx2] = m.right.dist(y, y2).clone();
            d[idx2 * n + idx] = m.right.dist(y, y2).clone();
        }
    }
    let rows: Vec<Vec<S>> = (0..n).map(|i| d[i * n..(i + 1) * n].to_vec()).collect();
    let space = validate_metric(rows)
        .expect("glued matrix must be a metric; the invariant families guarantee it");
    Amalgam {
        space,
        left_image,
        right_image,
    }
}

/// The capped min-plus product `r(x,y) = min(1, min over z of p(x,z) +
/// q(z,y))`, with the inner minimum taken in ascending `z` order.
///
/// The right space of `p` must carry the same metric as the left space of
/// `q`. The product of valid matrices is always valid.
pub fn compose<S: Scalar>(
    p: &BiKatetovMatrix<S>,
    q: &BiKatetovMatrix<S>,
) -> Result<BiKatetovMatrix<S>, RoelckeError> {
    if !p.right.same_metric(&q.left) {
        return Err(RoelckeError::MiddleMismatch);
    }
    let (nx, nz, ny) = (p.left.n(), p.right.n(), q.right.n());
    let mut out = Vec::with_capacity(nx * ny);
    for x in 0..nx {
        for y in 0..ny {
            let mut best = S::one();
            for z in 0..nz {
                let term = p.at(x, z).clone() + q.at(z, y).clone();
                if term < best {
                    best = term;
                }
            }
            out.push(best);
        }
    }
    Ok(BiKatetovMatrix::from_parts(
        p.left.clone(),
        q.right.clone(),
        out,
    ))
}

/// The two-sided unit over `X`: the matrix of the metric itself.
pub fn identity_element<S: Scalar>(
    x: &FiniteMetricSpace<S>,
) -> Result<BiKatetovMatrix<S>, RoelckeError> {
    if diameter_at_most_one(x).is_err() {
        return Err(RoelckeError::DiameterExceedsOne);
    }
    let p = (0..x.n())
        .flat_map(|i| (0..x.n()).map(move |j| x.dist(i, j).clone()))
        .collect();
    Ok(BiKatetovMatrix::from_parts(x.clone(), x.clone(), p))
}

/// The matrix of a self-isometry `g`, given as the image list `g[i]`:
/// `p(x, y) = d(g(x), y)`.
///
/// Composition acts contravariantly on these: `compose(graph_element(g),
/// graph_element(h)) = graph_element(h after g)`. The product formula
/// minimizes over the middle point left to right, and chaining the two
/// graphs threads `x` through `g` first — reordering the formula instead
/// would break the verbatim product convention used everywhere else.
pub fn graph_element<S: Scalar>(
    x: &FiniteMetricSpace<S>,
    g: &[usize],
) -> Result<BiKatetovMatrix<S>, RoelckeError> {
    if diameter_at_most_one(x).is_err() {
        return Err(RoelckeError::DiameterExceedsOne);
    }
    let n = x.n();
    if g.len() != n || {
        let mut seen = vec![false; n];
        g.iter()
            .any(|&i| i >= n || std::mem::replace(&mut seen[i], true))
    } {
        return Err(RoelckeError::NotAPermutation);
    }
    for a in 0..n {
        for b in a + 1..n {
            if x.dist(g[a], g[b]) != x.dist(a, b) {
                return Err(RoelckeError::NotAnIsometry { a, b });
            }
        }
    }
    let p = (0..n)
        .flat_map(|i| (0..n).map(move |j| x.dist(g[i], j).clone()))
        .collect();
    Ok(BiKatetovMatrix::from_parts(x.clone(), x.clone(), p))
}

/// The idempotent attached to a nonempty subset `A`:
/// `p(x,y) = min(1, min over a in A of d(x,a) + d(a,y))`.
///
/// Exactly idempotent under [`compose`], and recovered by
/// [`subset_from_idempotent`].
pub fn idempotent_from_subset<S: Scalar>(
    x: &FiniteMetricSpace<S>,
    a: &[usize],
) -> Result<BiKatetovMatrix<S>, RoelckeError> {
    if diameter_at_most_one(x).is_err() {
        return Err(RoelckeError::DiameterExceedsOne);
    }
    let mut subset: Vec<usize> = a.to_vec();
    subset.sort_unstable();
    subset.dedup();
    if subset.is_empty() {
        return Err(RoelckeError::EmptySubset);
    }
    if let Some(&bad) = subset.iter().find(|&&p| p >= x.n()) {
        return Err(RoelckeError::PointOutOfRange(bad));
    }
    let n = x.n();
    let mut p = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut best = S::one();
            for &anchor in &subset {
                let term = x.dist(i, anchor).clone() + x.dist(anchor, j).clone();
                if term < best {
                    best = term;
                }
            }
            p.push(best);
        }
    }
    Ok(BiKatetovMatrix::from_parts(x.clone(), x.clone(), p))
}

/// The zero-diagonal set `{x : p(x,x) = 0}` of an idempotent square matrix.
///
/// Inverts [`idempotent_from_subset`] exactly. An idempotent that did not
/// come from a subset may have an empty zero-diagonal set; that is a
/// returned value, not an error. Non-idempotent input is rejected.
pub fn subset_from_idempotent<S: Scalar>(
    p: &BiKatetovMatrix<S>,
) -> Result<Vec<usize>, RoelckeError> {
    if !p.left.same_metric(&p.right) {
        return Err(RoelckeError::SidesDiffer);
    }
    let square = compose(p, p)?;
    if square.p != p.p {
        return Err(RoelckeError::NotIdempotent);
    }
    Ok((0..p.left.n()).filter(|&x| p.at(x, x).is_zero()).collect())
}

/// One idempotent found by the grid search: the matrix and the subset that
/// generates it, when one does.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridIdempotent<S> {
    pub matrix: BiKatetovMatrix<S>,
    pub subset: Option<Vec<usize>>,
}

/// Outcome of scanning every matrix over a value grid for idempotents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridIdempotentReport<S> {
    /// Number of grid values per entry.
    pub grid_size: usize,
    /// Matrices scanned (grid_size ^ n²).
    pub candidates: u64,
    /// How many candidates were valid cross-distance matrices.
    pub valid: u64,
    /// All idempotents, in ascending row-major entry order.
    pub idempotents: Vec<GridIdempotent<S>>,
}

const GRID_BUDGET: u64 = 1_000_000;

/// Scans every square matrix over `X` with entries on the grid
/// `{0, delta, 2 delta, ..., <= 1}` and reports all idempotents, tagging
/// each with the generating subset when one exists.
///
/// The subset-generated idempotents always show up; the report may also
/// contain others (the all-ones matrix is idempotent whenever it is valid
/// and has no generating subset). The scan refuses to start when
/// `grid_size ^ n²` exceeds 10^6.
pub fn enumerate_grid_idempotents<S: Scalar>(
    x: &FiniteMetricSpace<S>,
    delta: &S,
) -> Result<GridIdempotentReport<S>, RoelckeError> {
    if diameter_at_most_one(x).is_err() {
        return Err(RoelckeError::DiameterExceedsOne);
    }
    if !delta.is_positive() || *delta > S::one() {
        return Err(RoelckeError::BadDelta);
    }
    let grid = grid_values(delta, &S::one());
    let n = x.n();
    let cells = n * n;
    let needed = (grid.len() as u64).saturating_pow(cells as u32);
    if needed > GRID_BUDGET {
        return Err(RoelckeError::GridBudget {
            limit: GRID_BUDGET,
            needed,
        });
    }
    // All subset idempotents, for the matching pass.
    let mut subset_pool: Vec<(Vec<usize>, Vec<S>)> = Vec::new();
    for mask in 1u64..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let m = idempotent_from_subset(x, &subset)?;
        subset_pool.push((subset, m.p));
    }

    let mut valid = 0u64;
    let mut idempotents = Vec::new();
    let mut odo = vec![0usize; cells];
    loop {
        let rows: Vec<Vec<S>> = (0..n)
            .map(|i| (0..n).map(|j| grid[odo[i * n + j]].clone()).collect())
            .collect();
        if let Ok(m) = validate_bikatetov(x, x, rows) {
            valid += 1;
            let square = compose(&m, &m).expect("sides match by construction");
            if square.p == m.p {
                let subset = subset_pool
                    .iter()
                    .find(|(_, pool_p)| *pool_p == m.p)
                    .map(|(s, _)| s.clone());
                idempotents.push(GridIdempotent { matrix: m, subset });
            }
        }
        if !advance(&mut odo, grid.len()) {
            break;
        }
    }
    Ok(GridIdempotentReport {
        grid_size: grid.len(),
        candidates: needed,
        valid,
        idempotents,
    })
}

fn advance(odo: &mut [usize], radix: usize) -> bool {
    for digit in odo.iter_mut().rev() {
        *digit += 1;
        if *digit < radix {
            return true;
        }
        *digit = 0;
    }
    false
}

/// Why a cell set fails to be a staircase.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StaircaseViolation {
    #[error("cell ({i},{j}) lies outside the {n}x{n} grid")]
    CellOutOfRange { i: usize, j: usize, n: usize },
    #[error("the origin (0,0) is missing")]
    MissingOrigin,
    #[error("the terminus (n,n) is missing")]
    MissingTerminus,
    #[error("cells ({fi},{fj}) -> ({ti},{tj}) are not a unit step")]
    BadStep {
        fi: usize,
        fj: usize,
        ti: usize,
        tj: usize,
    },
}

/// A monotone chain of grid cells from `(0,0)` to `(n,n)`.
///
/// Ordered by coordinate sum, consecutive cells differ by a unit step:
/// right, up, or diagonally both — so the diagonal `{(i,i)}` (the identity
/// relation) is itself a staircase. Monotonicity (never a pair with `i < i'`
/// but `j > j'`) follows from the step structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseRelation {
    n: usize,
    cells: Vec<(usize, usize)>,
}

impl StaircaseRelation {
    /// Validates a cell set as a staircase on the `(n+1) x (n+1)` grid.
    /// Cells may arrive in any order and duplicates are merged.
    pub fn new(n: usize, cells: &[(usize, usize)]) -> Result<Self, StaircaseViolation> {
        let set: BTreeSet<(usize, usize)> = cells.iter().copied().collect();
        if let Some(&(i, j)) = set.iter().find(|&&(i, j)| i > n || j > n) {
            return Err(StaircaseViolation::CellOutOfRange { i, j, n });
        }
        if !set.contains(&(0, 0)) {
            return Err(StaircaseViolation::MissingOrigin);
        }
        if !set.contains(&(n, n)) {
            return Err(StaircaseViolation::MissingTerminus);
        }
        let mut sorted: Vec<(usize, usize)> = set.into_iter().collect();
        sorted.sort_by_key(|&(i, j)| (i + j, i));
        for w in sorted.windows(2) {
            let ((fi, fj), (ti, tj)) = (w[0], w[1]);
            let di_ok = ti >= fi && ti - fi <= 1;
            let dj_ok = tj >= fj && tj - fj <= 1;
            if !di_ok || !dj_ok || (ti == fi && tj == fj) {
                return Err(StaircaseViolation::BadStep { fi, fj, ti, tj });
            }
        }
        Ok(StaircaseRelation { n, cells: sorted })
    }

    /// The identity relation `{(i,i)}` — all-diagonal steps.
    pub fn diagonal(n: usize) -> Self {
        StaircaseRelation {
            n,
            cells: (0..=n).map(|i| (i, i)).collect(),
        }
    }

    /// Grid size `n`: cells live in `{0..n}^2`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The cells, sorted by `(i + j, i)`.
    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    /// True when `(i, j)` is on the chain.
    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.cells
            .binary_search_by_key(&(i + j, i), |&(a, b)| (a + b, a))
            .is_ok()
    }
}

/// True when the cells form a valid staircase on the given grid.
pub fn is_staircase(n: usize, cells: &[(usize, usize)]) -> bool {
    StaircaseRelation::new(n, cells).is_ok()
}

/// Composes two staircases as relations — `(i,k)` is in the composite when
/// some `j` has `(i,j)` in `a` and `(j,k)` in `b` — and then repairs the
/// result to a staircase.
///
/// The raw relational composite need not be monotone (composing a
/// vertical-first corner path with a horizontal-first one yields the full
/// grid), so no staircase need contain it; the repair is a deterministic
/// greedy walk instead. Cells are visited in `(i+j, i)` order; a cell
/// behind the walk front in either coordinate is dropped, a cell further
/// than one unit step ahead is connected by going up first and then right.
/// The walk starts at `(0,0)` and is completed to `(n,n)`, both of which
/// always lie in the raw composite, and it leaves every already-valid
/// staircase unchanged.
pub fn staircase_compose(
    a: &StaircaseRelation,
    b: &StaircaseRelation,
) -> Result<StaircaseRelation, RoelckeError> {
    if a.n != b.n {
        return Err(RoelckeError::GridMismatch { a: a.n, b: b.n });
    }
    let n = a.n;
    let b_rows: Vec<Vec<usize>> = {
        let mut rows = vec![Vec::new(); n + 1];
        for &(j, k) in &b.cells {
            rows[j].push(k);
        }
        rows
    };
    let mut raw: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &(i, j) in &a.cells {
        for &k in &b_rows[j] {
            raw.insert((i, k));
        }
    }
    debug_assert!(raw.contains(&(0, 0)) && raw.contains(&(n, n)));

    let mut sorted: Vec<(usize, usize)> = raw.into_iter().collect();
    sorted.sort_by_key(|&(i, j)| (i + j, i));
    let mut chain: Vec<(usize, usize)> = vec![(0, 0)];
    let (mut ci, mut cj) = (0usize, 0usize);
    for &(i, j) in sorted.iter().skip(1) {
        if i < ci || j < cj {
            continue;
        }
        // Bridge up first, then right, until (i, j) is one step away.
        while j - cj > 1 || (j > cj && i - ci > 1) {
            cj += 1;
            chain.push((ci, cj));
        }
        while i - ci > 1 {
            ci += 1;
            chain.push((ci, cj));
        }
        if (i, j) != (ci, cj) {
            chain.push((i, j));
            ci = i;
            cj = j;
        }
    }
    debug_assert_eq!((ci, cj), (n, n));
    StaircaseRelation::new(n, &chain).map_err(RoelckeError::from)
}
