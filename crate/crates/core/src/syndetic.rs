//! Finite-window experiments on syndetic sets of integers, difference and
//! triple-sum sets, Bohr neighborhoods with rational frequencies, and the
//! subset-census witness for non-extreme-amenability of finite groups.
//!
//! Everything here is exact. Sets live in a symmetric window `[-N, N]`;
//! difference and triple-sum sets are computed by literal enumeration and
//! carry a reliability margin (half resp. a third of the window) inside
//! which truncation cannot manufacture or hide members. Bohr membership
//! `2|sin(pi theta n)| < eps` is decided exactly for rational `theta`: the
//! five denominators with rational squared sine get a closed-form table,
//! and every other residue class is settled by interval refinement around
//! an irrational value, which always terminates because the compared value
//! can never equal the rational threshold.

use crate::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use thiserror::Error;

/// Errors for window sets, Bohr specifications, and group tables.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyndeticError {
    #[error("window bound must be nonnegative, got {0}")]
    NegativeWindow(i64),
    #[error("member {0} lies outside the window")]
    OutOfWindow(i64),
    #[error("epsilon must be positive")]
    BadEpsilon,
    #[error("frequency {0} does not fit the supported numeric range")]
    FrequencyTooLarge(String),
    #[error("modulus must be positive")]
    BadModulus,
    #[error("group table is empty")]
    EmptyTable,
    #[error("group table row {row} has {len} entries, expected {expected}")]
    TableNotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("group table entry at ({row}, {col}) is {value}, out of range")]
    TableEntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    #[error("group table row {0} repeats an element")]
    RowNotLatin(usize),
    #[error("group table column {0} repeats an element")]
    ColumnNotLatin(usize),
    #[error("group table has no two-sided identity")]
    NoIdentity,
    #[error("group table is not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
}

/// A finite set of integers inside the symmetric window `[-N, N]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerWindowSet {
    window: i64,
    members: Vec<i64>,
}

impl IntegerWindowSet {
    /// A set from a window bound and members; members are sorted and
    /// deduplicated, and must fit the window.
    pub fn new(window: i64, members: Vec<i64>) -> Result<Self, SyndeticError> {
        if window < 0 {
            return Err(SyndeticError::NegativeWindow(window));
        }
        let mut members = members;
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&v| v < -window || v > window) {
            return Err(SyndeticError::OutOfWindow(bad));
        }
        Ok(IntegerWindowSet { window, members })
    }

    /// The window bound `N`.
    pub fn window(&self) -> i64 {
        self.window
    }

    /// The members, sorted.
    pub fn members(&self) -> &[i64] {
        &self.members
    }

    /// Membership by binary search.
    pub fn contains(&self, v: i64) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

/// All integers in the window congruent to `residue` modulo `modulus`.
pub fn residue_class_set(
    window: i64,
    modulus: i64,
    residue: i64,
) -> Result<IntegerWindowSet, SyndeticError> {
    if modulus <= 0 {
        return Err(SyndeticError::BadModulus);
    }
    let members = (-window..=window)
        .filter(|v| v.rem_euclid(modulus) == residue.rem_euclid(modulus))
        .collect();
    IntegerWindowSet::new(window, members)
}

/// The gap structure of a window set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    /// Largest difference between consecutive members; `None` with fewer
    /// than two members.
    pub max_gap: Option<i64>,
    /// Nonempty sets are syndetic within their window at bound `max_gap`.
    pub syndetic: bool,
    /// Set when there are at least two gaps and they strictly increase —
    /// the signature of a set that stops being syndetic as the window
    /// grows.
    pub growing_gaps: bool,
}

/// Measures the gaps between consecutive members. Every nonempty set is
/// trivially syndetic inside its own finite window; the report's content
/// is the bound itself and whether the gaps are trending upward.
pub fn is_syndetic(s: &IntegerWindowSet) -> GapReport {
    let gaps: Vec<i64> = s.members().windows(2).map(|w| w[1] - w[0]).collect();
    GapReport {
        max_gap: gaps.iter().copied().max(),
        syndetic: !s.members().is_empty(),
        growing_gaps: gaps.len() >= 2 && gaps.windows(2).all(|w| w[1] > w[0]),
    }
}

/// A window set together with the sub-window on which it is free of
/// truncation artifacts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReliableWindow {
    /// The computed set, clipped to the original window.
    pub set: IntegerWindowSet,
    /// Bound of the reliable sub-window `[-b, b]`.
    pub reliable_bound: i64,
}

/// The difference set `S - S`, clipped to the window and reliable on
/// `[-N/2, N/2]`: a difference that lands there has both operands within
/// half a window of each other, so clipping the operands to `[-N, N]`
/// cannot have removed any representation with operands near the target.
pub fn difference_set(s: &IntegerWindowSet) -> ReliableWindow {
    let n = s.window();
    let mut hit = vec![false; (4 * n + 1) as usize];
    for &a in s.members() {
        for &b in s.members() {
            hit[(a - b + 2 * n) as usize] = true;
        }
    }
    let members: Vec<i64> = (-n..=n).filter(|v| hit[(v + 2 * n) as usize]).collect();
    ReliableWindow {
        set: IntegerWindowSet::new(n, members).expect("members clipped to the window"),
        reliable_bound: n / 2,
    }
}

/// The triple sum `S - S + S`, clipped to the window and reliable on
/// `[-N/3, N/3]`.
pub fn triple_sum(s: &IntegerWindowSet) -> ReliableWindow {
    let n = s.window();
    let mut diff = vec![false; (4 * n + 1) as usize];
    for &a in s.members() {
        for &b in s.members() {
            diff[(a - b + 2 * n) as usize] = true;
        }
    }
    let mut hit = vec![false; (6 * n + 1) as usize];
    for d in -2 * n..=2 * n {
        if diff[(d + 2 * n) as usize] {
            for &c in s.members() {
                hit[(d + c + 3 * n) as usize] = true;
            }
        }
    }
    let members: Vec<i64> = (-n..=n).filter(|v| hit[(v + 3 * n) as usize]).collect();
    ReliableWindow {
        set: IntegerWindowSet::new(n, members).expect("members clipped to the window"),
        reliable_bound: n / 3,
    }
}

/// A finite list of rational frequencies and a positive radius, cutting
/// out the Bohr neighborhood `{n : for all theta, |e^(2 pi i theta n) - 1| < eps}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BohrSpec {
    thetas: Vec<Rat>,
    eps: Rat,
}

impl BohrSpec {
    /// A spec from frequencies and a positive radius. Frequencies are
    /// normalized into `[0, 1)`; the character they induce only sees the
    /// fractional part.
    pub fn new(thetas: Vec<Rat>, eps: Rat) -> Result<Self, SyndeticError> {
        if eps <= Rat::zero() {
            return Err(SyndeticError::BadEpsilon);
        }
        let thetas = thetas.into_iter().map(|t| t.clone() - t.floor()).collect();
        Ok(BohrSpec { thetas, eps })
    }

    /// The normalized frequencies.
    pub fn thetas(&self) -> &[Rat] {
        &self.thetas
    }

    /// The radius.
    pub fn eps(&self) -> &Rat {
        &self.eps
    }
}

/// The members of the Bohr neighborhood within `[-window, window]`,
/// decided exactly.
///
/// For `theta = u/v` the quantity `|e^(2 pi i theta n) - 1| = 2|sin(pi u n / v)|`
/// depends only on `u n mod v`, so each frequency contributes a table of
/// `v` exact verdicts of `4 sin^2(pi m / v) < eps^2` and the window scan
/// is table lookups.
pub fn bohr_members(spec: &BohrSpec, window: i64) -> Result<IntegerWindowSet, SyndeticError> {
    if window < 0 {
        return Err(SyndeticError::NegativeWindow(window));
    }
    // On the unit circle |z - 1| <= 2, so any radius beyond 2 admits everything.
    if *spec.eps() > rat(2, 1) {
        return IntegerWindowSet::new(window, (-window..=window).collect());
    }
    let eps_sq = spec.eps() * spec.eps();
    let mut tables: Vec<(i64, i64, Vec<bool>)> = Vec::with_capacity(spec.thetas().len());
    let mut cache: HashMap<(i64, i64), bool> = HashMap::new();
    for theta in spec.thetas() {
        let u = theta
            .numer()
            .to_i64()
            .ok_or_else(|| SyndeticError::FrequencyTooLarge(theta.to_string()))?;
        let v = theta
            .denom()
            .to_i64()
            .ok_or_else(|| SyndeticError::FrequencyTooLarge(theta.to_string()))?;
        let table: Vec<bool> = (0..v)
            .map(|m| {
                let g = m.gcd(&v);
                let key = (m / g, v / g);
                *cache
                    .entry(key)
                    .or_insert_with(|| four_sin_sq_less_than(key.0, key.1, &eps_sq))
            })
            .collect();
        tables.push((u, v, table));
    }
    let members: Vec<i64> = (-window..=window)
        .filter(|&n| {
            tables.iter().all(|(u, v, table)| {
                let m = (*u as i128 * n as i128).rem_euclid(*v as i128) as i64;
                table[m as usize]
            })
        })
        .collect();
    IntegerWindowSet::new(window, members)
}

/// Decides `4 sin^2(pi p / q) < c` exactly for `0 <= p < q` in lowest terms.
///
/// For `q` in {1, 2, 3, 4, 6} the left side is the rational 0, 4, 3, 2, 1
/// respectively and the comparison is immediate. For every other `q` the
/// left side is irrational (the only rational values of `cos` at rational
/// multiples of pi are 0, +-1/2, +-1), hence never equal to `c`, and a
/// refinement of rational enclosures of `2 - 2 cos(2 pi p / q)` must
/// eventually land strictly on one side.
fn four_sin_sq_less_than(p: i64, q: i64, c: &Rat) -> bool {
    debug_assert!(q >= 1 && (0..q).contains(&p) && p.gcd(&q) == 1 || p == 0);
    let exact: Option<i64> = match q {
        1 => Some(0),
        2 => Some(4),
        3 => Some(3),
        4 => Some(2),
        6 => Some(1),
        _ => None,
    };
    if let Some(value) = exact {
        return rat(value, 1) < *c;
    }
    let ratio = rat(p, q);
    let mut precision = 8usize;
    loop {
        let (pi_lo, pi_hi) = pi_bounds(precision);
        let y_lo = rat(2, 1) * &pi_lo * &ratio;
        let y_hi = rat(2, 1) * &pi_hi * &ratio;
        let mid = (&y_lo + &y_hi) / rat(2, 1);
        let slack = (&y_hi - &y_lo) / rat(2, 1);
        let (cos_lo, cos_hi) = cos_bounds(&mid, precision.max(14));
        // cos is 1-Lipschitz, so the uncertainty in y widens the cosine
        // enclosure by at most the half-width of the y interval.
        let value_lo = rat(2, 1) - rat(2, 1) * (&cos_hi + &slack);
        let value_hi = rat(2, 1) - rat(2, 1) * (&cos_lo - &slack);
        if value_hi < *c {
            return true;
        }
        if value_lo > *c {
            return false;
        }
        precision *= 2;
    }
}

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Alternating-series enclosure of `arctan(1/x)` with `terms` terms.
fn atan_recip_bounds(x: i64, terms: usize) -> (Rat, Rat) {
    let x = BigInt::from(x);
    let x_sq = &x * &x;
    let mut sum = Rat::zero();
    let mut power = x.clone();
    for k in 0..terms {
        let term = Rat::new(BigInt::one(), BigInt::from(2 * k as i64 + 1) * &power);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power *= &x_sq;
    }
    let tail = Rat::new(BigInt::one(), BigInt::from(2 * terms as i64 + 1) * &power);
    (&sum - &tail, &sum + &tail)
}

/// A rational enclosure of pi via `16 arctan(1/5) - 4 arctan(1/239)`.
fn pi_bounds(terms: usize) -> (Rat, Rat) {
    let (a_lo, a_hi) = atan_recip_bounds(5, terms);
    let (b_lo, b_hi) = atan_recip_bounds(239, terms);
    (
        rat(16, 1) * &a_lo - rat(4, 1) * &b_hi,
        rat(16, 1) * &a_hi - rat(4, 1) * &b_lo,
    )
}

/// Alternating-series enclosure of `cos(y)` for `|y| < 7` with at least 14
/// terms, which is deep enough into the regime of decreasing terms for the
/// next term to bound the remainder.
fn cos_bounds(y: &Rat, terms: usize) -> (Rat, Rat) {
    debug_assert!(y.abs() < rat(7, 1));
    let y_sq = y * y;
    let mut sum = Rat::one();
    let mut term = Rat::one();
    for k in 1..terms {
        term = term * &y_sq / rat(2 * k as i64 - 1, 1) / rat(2 * k as i64, 1);
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
    }
    let k = terms as i64;
    let tail = term * &y_sq / rat(2 * k - 1, 1) / rat(2 * k, 1);
    (&sum - &tail, &sum + &tail)
}

/// Finite-window evidence report: does the Bohr neighborhood of zero sit
/// inside the triple sum (and inside the difference set) at the reliable
/// margins?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleBohrReport {
    /// Gap structure of the input set.
    pub gap: GapReport,
    /// Reliable bound used for the triple-sum comparison (`N/3`).
    pub triple_bound: i64,
    /// Reliable bound used for the difference comparison (`N/2`).
    pub difference_bound: i64,
    /// Bohr members on the triple-sum margin.
    pub bohr_on_triple_margin: Vec<i64>,
    /// Bohr members on the margin that are missing from `S - S + S`.
    pub triple_violations: Vec<i64>,
    /// Bohr members on the `N/2` margin missing from `S - S`; tabulated
    /// for comparison, never judged.
    pub difference_violations: Vec<i64>,
    /// True when `triple_violations` is empty.
    pub holds: bool,
}

/// Checks whether every Bohr-neighborhood member on the reliable margin
/// lies in the triple sum, listing violations instead of judging them.
/// The same comparison against the plain difference set rides along.
pub fn check_triple_sum_bohr(
    s: &IntegerWindowSet,
    spec: &BohrSpec,
) -> Result<TripleBohrReport, SyndeticError> {
    let gap = is_syndetic(s);
    let triple = triple_sum(s);
    let difference = difference_set(s);
    let bohr_triple = bohr_members(spec, triple.reliable_bound)?;
    let bohr_diff = bohr_members(spec, difference.reliable_bound)?;
    let triple_violations: Vec<i64> = bohr_triple
        .members()
        .iter()
        .copied()
        .filter(|&v| !triple.set.contains(v))
        .collect();
    let difference_violations: Vec<i64> = bohr_diff
        .members()
        .iter()
        .copied()
        .filter(|&v| !difference.set.contains(v))
        .collect();
    Ok(TripleBohrReport {
        gap,
        triple_bound: triple.reliable_bound,
        difference_bound: difference.reliable_bound,
        bohr_on_triple_margin: bohr_triple.members().to_vec(),
        holds: triple_violations.is_empty(),
        triple_violations,
        difference_violations,
    })
}

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    n: usize,
    table: Vec<usize>,
    identity: usize,
}

impl GroupTable {
    /// Validates a multiplication table: square shape, in-range entries,
    /// Latin rows and columns, a two-sided identity, and associativity.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, SyndeticError> {
        let n = rows.len();
        if n == 0 {
            return Err(SyndeticError::EmptyTable);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(SyndeticError::TableNotSquare {
                    row,
                    len: r.len(),
                    expected: n,
                });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(SyndeticError::TableEntryOutOfRange { row, col, value });
                }
            }
        }
        for (i, r) in rows.iter().enumerate() {
            let mut seen = vec![false; n];
            if r.iter().any(|&v| std::mem::replace(&mut seen[v], true)) {
                return Err(SyndeticError::RowNotLatin(i));
            }
        }
        for col in 0..n {
            let mut seen = vec![false; n];
            if rows
                .iter()
                .any(|r| std::mem::replace(&mut seen[r[col]], true))
            {
                return Err(SyndeticError::ColumnNotLatin(col));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| rows[e][g] == g && rows[g][e] == g))
            .ok_or(SyndeticError::NoIdentity)?;
        let table: Vec<usize> = rows.iter().flatten().copied().collect();
        let at = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(SyndeticError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(GroupTable { n, table, identity })
    }

    /// Group order.
    pub fn order(&self) -> usize {
        self.n
    }

    /// The product of two elements.
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    /// The identity element.
    pub fn identity(&self) -> usize {
        self.identity
    }

    /// The inverse of an element.
    pub fn inverse(&self, a: usize) -> usize {
        (0..self.n)
            .find(|&x| self.product(a, x) == self.identity)
            .expect("a validated group table has inverses")
    }
}

/// A certified witness against extreme amenability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PestovWitness {
    /// The left-syndetic set, as element indices.
    pub s: Vec<usize>,
    /// The finite set with `F S = G`.
    pub f: Vec<usize>,
    /// The product set `S S^{-1}`, sorted.
    pub product_set: Vec<usize>,
    /// Recomputed: `F S` covers the group.
    pub fs_covers: bool,
    /// Recomputed: `S S^{-1}` misses part of the group.
    pub ss_inverse_proper: bool,
}

/// Exhaustive census over nonempty subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetCensus {
    /// Number of nonempty subsets examined.
    pub nonempty_subsets: u64,
    /// How many of them have `S S^{-1}` a proper subset of the group.
    pub proper_product_sets: u64,
}

/// Outcome of the extreme-amenability check on a finite group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PestovReport {
    pub order: usize,
    /// True exactly for the trivial group: every nonempty subset of a
    /// finite group is left-syndetic (take `F = G`), so extreme
    /// amenability demands `S S^{-1} = G` for all of them, and `S = {e}`
    /// already refuses any nontrivial group.
    pub extremely_amenable: bool,
    /// The witness, for nontrivial groups.
    pub witness: Option<PestovWitness>,
    /// Exhaustive subset census for groups of order at most 12.
    pub census: Option<SubsetCensus>,
}

const CENSUS_LIMIT: usize = 12;

/// Searches a finite group for a left-syndetic subset whose `S S^{-1}` is
/// not everything. The singleton `{e}` settles every nontrivial group;
/// for orders up to 12 the verdict is re-derived by scanning all nonempty
/// subsets.
pub fn pestov_witness(g: &GroupTable) -> PestovReport {
    let n = g.order();
    let census = (n <= CENSUS_LIMIT).then(|| {
        let full = (1u64 << n) - 1;
        let mut proper = 0u64;
        for mask in 1..=full {
            let mut products = 0u64;
            for a in 0..n {
                if mask >> a & 1 == 0 {
                    continue;
                }
                for b in 0..n {
                    if mask >> b & 1 == 1 {
                        products |= 1 << g.product(a, g.inverse(b));
                    }
                }
            }
            if products != full {
                proper += 1;
            }
        }
        SubsetCensus {
            nonempty_subsets: full,
            proper_product_sets: proper,
        }
    });
    if n == 1 {
        return PestovReport {
            order: n,
            extremely_amenable: true,
            witness: None,
            census,
        };
    }
    let e = g.identity();
    let s = vec![e];
    let f: Vec<usize> = (0..n).collect();
    let mut covered = vec![false; n];
    for &x in &f {
        for &y in &s {
            covered[g.product(x, y)] = true;
        }
    }
    let product_set: Vec<usize> = {
        let mut prods: std::collections::BTreeSet<usize> = std::collections::BTreeSet::new();
        for &a in &s {
            for &b in &s {
                prods.insert(g.product(a, g.inverse(b)));
            }
        }
        prods.into_iter().collect()
    };
    PestovReport {
        order: n,
        extremely_amenable: false,
        witness: Some(PestovWitness {
            fs_covers: covered.iter().all(|&c| c),
            ss_inverse_proper: product_set.len() < n,
            s,
            f,
            product_set,
        }),
        census,
    }
}

/// The cyclic group of order `n`.
pub fn cyclic_group(n: usize) -> GroupTable {
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    GroupTable::new(rows).expect("cyclic tables are groups")
}

/// The direct product of two groups, elements indexed as `a * |B| + b`.
pub fn direct_product(a: &GroupTable, b: &GroupTable) -> GroupTable {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| a.product(x / nb, y / nb) * nb + b.product(x % nb, y % nb))
                .collect()
        })
        .collect();
    GroupTable::new(rows).expect("products of groups are groups")
}

/// The dihedral group of order `2m`: rotations `r^i` at indices `0..m`,
/// reflections `s r^i` at indices `m..2m`.
pub fn dihedral_group(m: usize) -> GroupTable {
    assert!(m >= 1);
    let n = 2 * m;
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let (a, i) = (x / m, x % m);
                    let (b, j) = (y / m, y % m);
                    // (s^a r^i)(s^b r^j) = s^(a+b) r^(j + (-1)^b i)
                    let flip = (a + b) % 2;
                    let rot = if b == 0 { (i + j) % m } else { (m - i + j) % m };
                    flip * m + rot
                })
                .collect()
        })
        .collect();
    GroupTable::new(rows).expect("dihedral tables are groups")
}

/// The quaternion group of order 8: `+-1, +-i, +-j, +-k` with index
/// `2 * base + sign`.
pub fn quaternion_group() -> GroupTable {
    // base_mul[b1][b2] = (sign, base) for the product of unit quaternions.
    const BASE_MUL: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let rows: Vec<Vec<usize>> = (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (b1, s1) = (x / 2, x % 2);
                    let (b2, s2) = (y / 2, y % 2);
                    let (sign, base) = BASE_MUL[b1][b2];
                    base * 2 + (s1 + s2 + sign) % 2
                })
                .collect()
        })
        .collect();
    GroupTable::new(rows).expect("the quaternion table is a group")
}

/// The alternating group on four letters, built as the closure of a
/// 3-cycle and a double transposition.
pub fn alternating_group_4() -> GroupTable {
    use crate::flows::{generate_semigroup, SelfMap};
    let gens = vec![
        SelfMap::new(4, vec![1, 2, 0, 3]).expect("valid"),
        SelfMap::new(4, vec![1, 0, 3, 2]).expect("valid"),
    ];
    let s = generate_semigroup(&gens).expect("closure of two permutations");
    let rows: Vec<Vec<usize>> = (0..s.size())
        .map(|i| (0..s.size()).map(|j| s.product(i, j)).collect())
        .collect();
    GroupTable::new(rows).expect("permutation closures are groups")
}

/// The dicyclic group of order 12: `a^6 = e`, `b^2 = a^3`,
/// `b a b^{-1} = a^{-1}`, elements `a^i b^j` at index `j * 6 + i`.
pub fn dicyclic_group_3() -> GroupTable {
    let rows: Vec<Vec<usize>> = (0..12)
        .map(|x| {
            (0..12)
                .map(|y| {
                    let (j, i) = (x / 6, x % 6);
                    let (l, k) = (y / 6, y % 6);
                    if j == 0 {
                        l * 6 + (i + k) % 6
                    } else if l == 0 {
                        6 + (i + 6 - k) % 6
                    } else {
                        (i + 6 - k + 3) % 6
                    }
                })
                .collect()
        })
        .collect();
    GroupTable::new(rows).expect("the dicyclic table is a group")
}

/// Every group of order 2 through 12 up to isomorphism, with conventional
/// names — 23 groups.
pub fn small_group_catalogue() -> Vec<(String, GroupTable)> {
    let c = cyclic_group;
    let mut list: Vec<(String, GroupTable)> = Vec::new();
    let mut push = |name: &str, g: GroupTable| list.push((name.to_string(), g));
    push("C2", c(2));
    push("C3", c(3));
    push("C4", c(4));
    push("C2xC2", direct_product(&c(2), &c(2)));
    push("C5", c(5));
    push("C6", c(6));
    push("S3", dihedral_group(3));
    push("C7", c(7));
    push("C8", c(8));
    push("C4xC2", direct_product(&c(4), &c(2)));
    push(
        "C2xC2xC2",
        direct_product(&direct_product(&c(2), &c(2)), &c(2)),
    );
    push("D4", dihedral_group(4));
    push("Q8", quaternion_group());
    push("C9", c(9));
    push("C3xC3", direct_product(&c(3), &c(3)));
    push("C10", c(10));
    push("D5", dihedral_group(5));
    push("C11", c(11));
    push("C12", c(12));
    push("C6xC2", direct_product(&c(6), &c(2)));
    push("D6", dihedral_group(6));
    push("A4", alternating_group_4());
    push("Dic3", dicyclic_group_3());
    list
}

#[cfg(test)]
mod tests {
    use super::*;

    fn evens(window: i64) -> IntegerWindowSet {
        residue_class_set(window, 2, 0).unwrap()
    }

    #[test]
    fn evens_have_gap_two() {
        let report = is_syndetic(&evens(20));
        assert_eq!(report.max_gap, Some(2));
        assert!(report.syndetic);
        assert!(!report.growing_gaps);
    }

    #[test]
    fn squares_have_growing_gaps() {
        let members: Vec<i64> = (0..=20).map(|k| k * k).collect();
        let s = IntegerWindowSet::new(400, members).unwrap();
        let report = is_syndetic(&s);
        assert_eq!(report.max_gap, Some(39));
        assert!(report.growing_gaps);
    }

    #[test]
    fn full_window_has_gap_one_and_empty_set_is_not_syndetic() {
        let full = residue_class_set(5, 1, 0).unwrap();
        assert_eq!(is_syndetic(&full).max_gap, Some(1));
        let empty = IntegerWindowSet::new(5, vec![]).unwrap();
        assert!(!is_syndetic(&empty).syndetic);
        assert_eq!(is_syndetic(&empty).max_gap, None);
    }

    #[test]
    fn members_outside_the_window_are_rejected() {
        assert_eq!(
            IntegerWindowSet::new(3, vec![0, 4]),
            Err(SyndeticError::OutOfWindow(4))
        );
        assert_eq!(
            IntegerWindowSet::new(-1, vec![]),
            Err(SyndeticError::NegativeWindow(-1))
        );
    }

    #[test]
    fn differences_of_evens_are_even() {
        let d = difference_set(&evens(20));
        assert_eq!(d.set, evens(20));
        assert_eq!(d.reliable_bound, 10);
    }

    #[test]
    fn singleton_difference_and_triple_are_trivial() {
        let s = IntegerWindowSet::new(10, vec![0]).unwrap();
        assert_eq!(difference_set(&s).set.members(), &[0]);
        let t = triple_sum(&s);
        assert_eq!(t.set.members(), &[0]);
        assert_eq!(t.reliable_bound, 3);
    }

    #[test]
    fn difference_and_triple_match_literal_loops() {
        let n = 30i64;
        let members: Vec<i64> = (-n..=n)
            .filter(|&v| v.rem_euclid(3) == 0 || v == 1)
            .collect();
        let s = IntegerWindowSet::new(n, members.clone()).unwrap();
        let d = difference_set(&s);
        let t = triple_sum(&s);
        for v in -n..=n {
            let in_d = members.iter().any(|a| members.iter().any(|b| a - b == v));
            assert_eq!(d.set.contains(v), in_d, "difference at {v}");
            let in_t = members.iter().any(|a| {
                members
                    .iter()
                    .any(|b| members.iter().any(|c| a - b + c == v))
            });
            assert_eq!(t.set.contains(v), in_t, "triple sum at {v}");
        }
    }

    #[test]
    fn half_frequency_at_radius_one_cuts_out_the_evens() {
        let spec = BohrSpec::new(vec![rat(1, 2)], Rat::one()).unwrap();
        assert_eq!(bohr_members(&spec, 20).unwrap(), evens(20));
    }

    #[test]
    fn empty_frequency_list_admits_everything() {
        let spec = BohrSpec::new(vec![], Rat::one()).unwrap();
        assert_eq!(bohr_members(&spec, 4).unwrap().members().len(), 9);
    }

    #[test]
    fn radius_two_excludes_exactly_the_antipodes() {
        // 2|sin| reaches 2 at theta n = 1/2 mod 1, and the inequality is
        // strict, so radius 2 is not yet the full window.
        let spec = BohrSpec::new(vec![rat(1, 4)], rat(2, 1)).unwrap();
        let got = bohr_members(&spec, 10).unwrap();
        let expected: Vec<i64> = (-10i64..=10).filter(|&n| n.rem_euclid(4) != 2).collect();
        assert_eq!(got.members(), expected.as_slice());
    }

    #[test]
    fn radius_beyond_two_admits_everything() {
        let spec = BohrSpec::new(vec![rat(1, 4)], rat(21, 10)).unwrap();
        assert_eq!(bohr_members(&spec, 6).unwrap().members().len(), 13);
    }

    #[test]
    fn fifth_frequency_threshold_is_decided_exactly() {
        // 2 sin(pi/5) = 1.17557..., squeezed between the radii 1.175 and
        // 1.176; the first residue class flips between them.
        let theta = rat(1, 5);
        let wide = BohrSpec::new(vec![theta.clone()], rat(1176, 1000)).unwrap();
        let narrow = BohrSpec::new(vec![theta], rat(1175, 1000)).unwrap();
        let wide_members = bohr_members(&wide, 10).unwrap();
        let narrow_members = bohr_members(&narrow, 10).unwrap();
        let pm_one: Vec<i64> = (-10i64..=10)
            .filter(|&n| matches!(n.rem_euclid(5), 0 | 1 | 4))
            .collect();
        assert_eq!(wide_members.members(), pm_one.as_slice());
        let multiples: Vec<i64> = (-10i64..=10).filter(|&n| n.rem_euclid(5) == 0).collect();
        assert_eq!(narrow_members.members(), multiples.as_slice());
    }

    #[test]
    fn bohr_membership_is_periodic() {
        let spec = BohrSpec::new(vec![rat(1, 3), rat(1, 4)], rat(3, 2)).unwrap();
        let got = bohr_members(&spec, 30).unwrap();
        for n in -18..=18 {
            assert_eq!(got.contains(n), got.contains(n + 12), "period 12 at {n}");
        }
    }

    #[test]
    fn negative_frequencies_are_normalized() {
        let spec = BohrSpec::new(vec![rat(-1, 2)], Rat::one()).unwrap();
        assert_eq!(spec.thetas(), &[rat(1, 2)]);
    }

    #[test]
    fn nonpositive_radius_is_rejected() {
        assert_eq!(
            BohrSpec::new(vec![], Rat::zero()).err(),
            Some(SyndeticError::BadEpsilon)
        );
    }

    #[test]
    fn evens_satisfy_the_triple_sum_inclusion() {
        let spec = BohrSpec::new(vec![rat(1, 2)], Rat::one()).unwrap();
        let report = check_triple_sum_bohr(&evens(60), &spec).unwrap();
        assert!(report.holds);
        assert!(report.triple_violations.is_empty());
        assert!(report.difference_violations.is_empty());
        assert_eq!(report.triple_bound, 20);
        assert_eq!(report.difference_bound, 30);
    }

    #[test]
    fn shifted_progression_misses_zero() {
        // S = 5Z + 2: S - S + S = 5Z + 2 while the Bohr set at 1/5 with a
        // small radius is 5Z, so zero itself is a reported violation.
        let s = residue_class_set(60, 5, 2).unwrap();
        let spec = BohrSpec::new(vec![rat(1, 5)], rat(1, 2)).unwrap();
        let report = check_triple_sum_bohr(&s, &spec).unwrap();
        assert!(!report.holds);
        assert!(report.triple_violations.contains(&0));
        assert!(report
            .triple_violations
            .iter()
            .all(|v| v.rem_euclid(5) == 0));
    }

    #[test]
    fn full_window_absorbs_every_bohr_set() {
        let full = residue_class_set(30, 1, 0).unwrap();
        let spec = BohrSpec::new(vec![rat(1, 7)], rat(1, 3)).unwrap();
        let report = check_triple_sum_bohr(&full, &spec).unwrap();
        assert!(report.holds);
    }

    #[test]
    fn trivial_group_is_extremely_amenable() {
        let report = pestov_witness(&cyclic_group(1));
        assert!(report.extremely_amenable);
        assert!(report.witness.is_none());
        let census = report.census.unwrap();
        assert_eq!(census.nonempty_subsets, 1);
        assert_eq!(census.proper_product_sets, 0);
    }

    #[test]
    fn order_two_group_has_a_witness() {
        let report = pestov_witness(&cyclic_group(2));
        assert!(!report.extremely_amenable);
        let w = report.witness.unwrap();
        assert!(w.fs_covers && w.ss_inverse_proper);
        assert_eq!(w.s, vec![0]);
        assert_eq!(w.product_set, vec![0]);
        // {e} and {g} both have singleton product sets; {e, g} covers.
        let census = report.census.unwrap();
        assert_eq!(census.nonempty_subsets, 3);
        assert_eq!(census.proper_product_sets, 2);
    }

    #[test]
    fn catalogue_covers_all_small_groups() {
        let catalogue = small_group_catalogue();
        assert_eq!(catalogue.len(), 23);
        let mut histogram: HashMap<usize, usize> = HashMap::new();
        for (name, g) in &catalogue {
            *histogram.entry(g.order()).or_default() += 1;
            let report = pestov_witness(g);
            assert!(!report.extremely_amenable, "{name}");
            let w = report.witness.unwrap();
            assert!(w.fs_covers && w.ss_inverse_proper, "{name}");
            let census = report.census.unwrap();
            assert!(census.proper_product_sets >= 1, "{name}");
        }
        let expected: HashMap<usize, usize> = [
            (2, 1),
            (3, 1),
            (4, 2),
            (5, 1),
            (6, 2),
            (7, 1),
            (8, 5),
            (9, 2),
            (10, 2),
            (11, 1),
            (12, 5),
        ]
        .into_iter()
        .collect();
        assert_eq!(histogram, expected);
    }

    #[test]
    fn noncommutative_tables_validate() {
        let d4 = dihedral_group(4);
        // s r * r = s r^2 but r * s r = s r^(2-1+... ) — just probe one
        // noncommuting pair.
        assert_ne!(d4.product(1, 4), d4.product(4, 1));
        let q8 = quaternion_group();
        // i * j = k, j * i = -k.
        assert_eq!(q8.product(2, 4), 6);
        assert_eq!(q8.product(4, 2), 7);
        assert_eq!(alternating_group_4().order(), 12);
        assert_eq!(dicyclic_group_3().order(), 12);
    }

    #[test]
    fn defective_tables_are_rejected() {
        assert_eq!(
            GroupTable::new(vec![vec![0, 1], vec![1, 1]]).err(),
            Some(SyndeticError::RowNotLatin(1))
        );
        assert_eq!(
            GroupTable::new(vec![vec![0, 1], vec![0, 1]]).err(),
            Some(SyndeticError::ColumnNotLatin(0))
        );
        // Subtraction mod 3: Latin, right identity only.
        assert_eq!(
            GroupTable::new(vec![vec![0, 2, 1], vec![1, 0, 2], vec![2, 1, 0]]).err(),
            Some(SyndeticError::NoIdentity)
        );
        assert_eq!(
            GroupTable::new(vec![vec![0, 1], vec![1, 0, 0]]).err(),
            Some(SyndeticError::TableNotSquare {
                row: 1,
                len: 3,
                expected: 2
            })
        );
        // A Latin square with identity that fails associativity: the
        // smallest nonassociative loop, of order 5.
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert_eq!(
            GroupTable::new(loop5).err(),
            Some(SyndeticError::NotAssociative { a: 1, b: 1, c: 2 })
        );
    }

    #[test]
    fn inverses_invert() {
        for (name, g) in small_group_catalogue() {
            for a in 0..g.order() {
                assert_eq!(g.product(a, g.inverse(a)), g.identity(), "{name}");
                assert_eq!(g.product(g.inverse(a), a), g.identity(), "{name}");
            }
        }
    }
}
