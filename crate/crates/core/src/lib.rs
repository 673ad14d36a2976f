//! Finite, exact-arithmetic models of large-group dynamics.
//!
//! Everything in this crate happens at desk scale and in exact rational
//! arithmetic — no floating point anywhere, so triangle inequalities,
//! idempotence laws, and realization scores are checked as true equalities.
//!
//! The modules interlock like this:
//!
//! * [`metric`] — finite metric spaces with validated axioms, submetrics,
//!   exhaustive isometry search, a shuttle bijection search, and a seeded
//!   random generator;
//! * [`katetov`] — admissible one-point distance profiles over a space, their
//!   canonical 1-Lipschitz extensions, point adjunction, and iterated
//!   extension rounds with an exact realization guarantee;
//! * [`roelcke`] — two-sided distance profiles between spaces of diameter at
//!   most one, composed by a capped min-plus product; idempotents cut out by
//!   point subsets; monotone staircase relations on grids;
//! * [`flows`] — finite transformation semigroups (closure, idempotents,
//!   minimal left ideals and their structure theory) and finite group
//!   actions (orbits, transitivity, maximal chains, equivariant-map search,
//!   the linear-orders flow);
//! * [`syndetic`] — window experiments on bounded-gap integer sets:
//!   difference and triple-sum sets, exact Bohr membership for rational
//!   frequencies, and a fixed-point witness search over finite group tables;
//! * [`report`] and [`suite`] — certificate types and the seeded evidence
//!   suites the command-line tool exposes;
//! * [`io`] — the JSON value types shared by the file formats.
//!
//! Determinism is a design contract: random constructions are pure functions
//! of an explicit 64-bit seed, searches break ties lexicographically, and
//! reports serialize with stable field and key order.

pub mod io;
pub mod katetov;
pub mod metric;
pub mod report;
pub mod roelcke;
pub mod scalar;
pub mod suite;
pub mod syndetic;

pub mod flows;

pub use scalar::Scalar;

/// Default exact scalar: an arbitrary-precision rational.
pub type Rat = num_rational::Ratio<num_bigint::BigInt>;

/// Machine-word rational scalar for small, fast experiments. Overflows on
/// deep arithmetic; prefer [`Rat`] unless profiling says otherwise.
pub type Rat64 = num_rational::Ratio<i64>;
