//! Certified check suites over randomized instances.
//!
//! Each `*_pack` function runs one themed batch of property checks over
//! seeded random instances and returns one [`Certificate`] per property,
//! aggregating counts into the witness text and quoting the first
//! counterexample on failure. The packs are parameterized by instance
//! counts so the same code drives both the quick suites exposed here and
//! larger calibration runs; everything is deterministic in the seed.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::flows::{
    brute_equivariant_maps_budgeted, chain_flow, equivariant_maps, find_idempotent,
    generate_semigroup, idempotent_power, is_k_transitive, laminar_chain_map, linear_orders_flow,
    minimal_left_ideals, propagated_equivariant_maps, symmetric_group_generators,
    verify_ideal_structure, FiniteAction, SelfMap,
};
use crate::katetov::{
    check_on_base, extension_property_score_over, grid_values, kappa_extend, one_point_extension,
    point_function, sup_distance, urysohn_approx, KatetovFunction, RequestPolicy,
};
use crate::metric::{
    back_and_forth, brute_force_isometry, random_metric_with, restrict, FiniteMetricSpace,
};
use crate::report::{Certificate, SuiteReport};
use crate::roelcke::{
    compose, enumerate_grid_idempotents, graph_element, idempotent_from_subset, identity_element,
    staircase_compose, subset_from_idempotent, validate_bikatetov, BiKatetovMatrix,
    StaircaseRelation,
};
use crate::syndetic::{
    check_triple_sum_bohr, is_syndetic, pestov_witness, small_group_catalogue, BohrSpec,
    IntegerWindowSet,
};
use crate::{Rat, Scalar};

/// Counts checks and failures for one property, keeping the first
/// counterexample for the failure witness.
struct Tally {
    checks: u64,
    failures: u64,
    first_failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checks: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }

    fn certificate(&self, property: &str) -> Certificate {
        if self.failures == 0 {
            Certificate::pass(property, format!("{} checks", self.checks))
        } else {
            let first = self.first_failure.as_deref().unwrap_or("unrecorded");
            Certificate::fail(
                property,
                format!(
                    "{} of {} checks failed; first: {}",
                    self.failures, self.checks, first
                ),
            )
        }
    }
}

fn rat(num: i64, den: i64) -> Rat {
    Rat::from_int_ratio(num, den)
}

/// Nonempty subsets of `0..n` of size at most `max_size`, each sorted
/// ascending, in mask order.
fn small_subsets(n: usize, max_size: usize) -> Vec<Vec<usize>> {
    (1u32..1 << n)
        .filter(|m| m.count_ones() as usize <= max_size)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// A random sorted subset of `0..n` with `size` points.
fn random_subset(n: usize, size: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut points: Vec<usize> = (0..n).collect();
    points.shuffle(rng);
    points.truncate(size);
    points.sort_unstable();
    points
}

// ---------------------------------------------------------------------------
// Canonical extension and one-point amalgamation.
// ---------------------------------------------------------------------------

/// Exactness of the canonical lift machinery on random spaces.
///
/// Per space (up to 6 points, denominators up to 8) every admissible
/// quarter-grid profile on a subset of at most 3 points is lifted and
/// checked: the lift restricts to the profile, stays admissible, and the
/// lift map is a sup-distance isometry on sampled same-base pairs. The
/// point-profile distance identity is checked on all pairs, and a random
/// subspace is re-embedded through a one-point extension with every
/// distance compared exactly.
pub fn katetov_exactness_pack(instances: usize, seed: u64) -> Vec<Certificate> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let delta = rat(1, 4);
    let cap = Rat::one();
    let grid: Vec<Rat> = grid_values(&delta, &cap);

    let mut extends = Tally::new();
    let mut admissible = Tally::new();
    let mut isometry = Tally::new();
    let mut kuratowski = Tally::new();
    let mut embedding = Tally::new();

    for instance in 0..instances {
        let n = rng.gen_range(2..=6);
        let denom = rng.gen_range(1..=8);
        let space: FiniteMetricSpace<Rat> = random_metric_with(n, denom, None, &mut rng)
            .expect("random metric parameters are in range");

        // Lift every admissible grid profile on small subsets.
        type LiftedPair = (KatetovFunction<Rat>, KatetovFunction<Rat>);
        let mut by_base: BTreeMap<Vec<usize>, Vec<LiftedPair>> = BTreeMap::new();
        for base in small_subsets(n, 3) {
            let mut choice = vec![0usize; base.len()];
            loop {
                let values: Vec<Rat> = choice.iter().map(|&c| grid[c].clone()).collect();
                if let Ok(f) = KatetovFunction::new(base.clone(), values) {
                    if check_on_base(&space, &f).is_ok() {
                        let lift =
                            kappa_extend(&space, &f).expect("admissible profiles lift canonically");
                        extends.record(
                            f.base()
                                .iter()
                                .zip(f.values())
                                .all(|(&y, v)| lift.value_at(y) == Some(v)),
                            || {
                                format!(
                                    "instance {instance}: lift changed a base value on subset {:?}",
                                    f.base()
                                )
                            },
                        );
                        admissible.record(check_on_base(&space, &lift).is_ok(), || {
                            format!(
                                "instance {instance}: lift of a profile on {:?} is not admissible",
                                f.base()
                            )
                        });
                        by_base.entry(base.clone()).or_default().push((f, lift));
                    }
                }
                // Odometer over the grid.
                let mut idx = choice.len();
                loop {
                    if idx == 0 {
                        break;
                    }
                    idx -= 1;
                    choice[idx] += 1;
                    if choice[idx] < grid.len() {
                        break;
                    }
                    choice[idx] = 0;
                }
                if choice.iter().all(|&c| c == 0) {
                    break;
                }
            }
        }

        // The lift map preserves sup-distances on sampled same-base pairs.
        for group in by_base.values() {
            if group.len() < 2 {
                continue;
            }
            for _ in 0..5 {
                let i = rng.gen_range(0..group.len());
                let j = rng.gen_range(0..group.len());
                if i == j {
                    continue;
                }
                let (f, lf) = &group[i];
                let (g, lg) = &group[j];
                let before = sup_distance(f, g).expect("same base");
                let after = sup_distance(lf, lg).expect("full bases");
                isometry.record(before == after, || {
                    format!(
                        "instance {instance}: sup-distance {before} became {after} after lifting on {:?}",
                        f.base()
                    )
                });
            }
        }

        // Distance profiles of points recover the metric under sup-distance.
        for x in 0..n {
            for y in x + 1..n {
                let d = sup_distance(&point_function(&space, x), &point_function(&space, y))
                    .expect("full bases");
                kuratowski.record(d == *space.dist(x, y), || {
                    format!(
                        "instance {instance}: profile distance {d} differs from d({x},{y}) = {}",
                        space.dist(x, y)
                    )
                });
            }
        }

        // Re-embed a random subspace through a one-point extension.
        let subset = random_subset(n, rng.gen_range(2..=n), &mut rng);
        let k = restrict(&space, &subset).expect("subset indices are in range");
        let m = subset.len();
        let l_points: Vec<usize> = (0..m - 1).collect();
        let phi: Vec<usize> = subset[..m - 1].to_vec();
        let ext = one_point_extension(&space, &k, &l_points, &phi)
            .expect("the transported profile is admissible");
        let exact = (0..m).all(|i| {
            (i + 1..m).all(|j| {
                let a = ext.k_embedding[i];
                let b = ext.k_embedding[j];
                *ext.step.after.dist(a, b) == *k.dist(i, j)
            })
        });
        embedding.record(exact, || {
            format!("instance {instance}: one-point extension distorted subspace {subset:?}")
        });
    }

    vec![
        extends.certificate("katetov-lift-extends"),
        admissible.certificate("katetov-lift-admissible"),
        isometry.certificate("katetov-lift-isometry"),
        kuratowski.certificate("katetov-point-profiles"),
        embedding.certificate("katetov-one-point-embedding"),
    ]
}

/// After one full half-grid growth round, every request the round
/// enumerated over the seed points is realized: the extension score over
/// the embedded seed universe is exactly 1.
pub fn score_closure_pack(rounds: usize, seed: u64) -> Vec<Certificate> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let half = rat(1, 2);
    let one = Rat::one();
    let mut closure = Tally::new();

    for round in 0..rounds {
        let n = rng.gen_range(2..=4);
        let denom = rng.gen_range(1..=4);
        let space: FiniteMetricSpace<Rat> = random_metric_with(n, denom, None, &mut rng)
            .expect("random metric parameters are in range");
        let policy = RequestPolicy::Full {
            delta: half.clone(),
            cap: one.clone(),
            max_subset: 2,
        };
        let steps = urysohn_approx(&space, 1, &policy).expect("one round on 4 points is tiny");
        let step = &steps[0];
        let report = extension_property_score_over(&step.after, &step.embedding, 2, &half, &one)
            .expect("grid parameters are positive");
        closure.record(report.score == one, || {
            format!(
                "round {round}: score {}/{} after a full growth round on {n} points",
                report.realized, report.total
            )
        });
    }

    vec![closure.certificate("katetov-score-closure")]
}

/// The partial-isometry shuttle agrees with exhaustive search on random
/// pairs — half independent draws, half relabeled copies — and any
/// isometry it returns is a genuine one.
pub fn back_and_forth_pack(pairs: usize, max_n: usize, seed: u64) -> Vec<Certificate> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut agree = Tally::new();
    let mut witness = Tally::new();

    for pair in 0..pairs {
        let n = rng.gen_range(1..=max_n);
        let a: FiniteMetricSpace<Rat> = random_metric_with(n, rng.gen_range(1..=6), None, &mut rng)
            .expect("random metric parameters are in range");
        let b = if rng.gen_bool(0.5) {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let rows: Vec<Vec<Rat>> = (0..n)
                .map(|i| (0..n).map(|j| a.dist(perm[i], perm[j]).clone()).collect())
                .collect();
            FiniteMetricSpace::new(rows).expect("relabeling preserves the metric axioms")
        } else {
            random_metric_with(n, rng.gen_range(1..=6), None, &mut rng)
                .expect("random metric parameters are in range")
        };

        let fast = back_and_forth(&a, &b);
        let slow = brute_force_isometry(&a, &b);
        agree.record(fast.is_some() == slow.is_some(), || {
            format!(
                "pair {pair}: shuttle {} but exhaustive search {} on {n} points",
                if fast.is_some() {
                    "succeeded"
                } else {
                    "failed"
                },
                if slow.is_some() {
                    "succeeded"
                } else {
                    "failed"
                },
            )
        });
        if let Some(map) = fast {
            let mut seen = map.clone();
            seen.sort_unstable();
            let bijective = seen == (0..n).collect::<Vec<_>>();
            let preserves =
                (0..n).all(|i| (0..n).all(|j| *a.dist(i, j) == *b.dist(map[i], map[j])));
            witness.record(bijective && preserves, || {
                format!("pair {pair}: returned map {map:?} is not an isometry")
            });
        }
    }

    vec![
        agree.certificate("back-and-forth-oracle"),
        witness.certificate("back-and-forth-witness"),
    ]
}

// ---------------------------------------------------------------------------
// Capped min-plus semigroup laws.
// ---------------------------------------------------------------------------

/// Slices a random capped metric on a disjoint union into the chain of
/// cross-distance matrices between consecutive parts.
fn sliced_chain(
    sizes: &[usize],
    rng: &mut ChaCha8Rng,
) -> (Vec<FiniteMetricSpace<Rat>>, Vec<BiKatetovMatrix<Rat>>) {
    let total: usize = sizes.iter().sum();
    let union: FiniteMetricSpace<Rat> =
        random_metric_with(total, rng.gen_range(1..=6), Some(Rat::one()), rng)
            .expect("random metric parameters are in range");
    let mut offsets = vec![0usize];
    for &s in sizes {
        offsets.push(offsets.last().unwrap() + s);
    }
    let parts: Vec<FiniteMetricSpace<Rat>> = (0..sizes.len())
        .map(|k| {
            let indices: Vec<usize> = (offsets[k]..offsets[k + 1]).collect();
            restrict(&union, &indices).expect("contiguous index ranges are valid")
        })
        .collect();
    let matrices: Vec<BiKatetovMatrix<Rat>> = (0..sizes.len() - 1)
        .map(|k| {
            let rows: Vec<Vec<Rat>> = (offsets[k]..offsets[k + 1])
                .map(|i| {
                    (offsets[k + 1]..offsets[k + 2])
                        .map(|j| union.dist(i, j).clone())
                        .collect()
                })
                .collect();
            validate_bikatetov(&parts[k], &parts[k + 1], rows)
                .expect("cross-distance blocks of a capped metric are admissible")
        })
        .collect();
    (parts, matrices)
}

/// Raises every entry by a quarter, capped at one; admissibility survives
/// because the bump is a monotone contraction.
fn raised(m: &BiKatetovMatrix<Rat>) -> BiKatetovMatrix<Rat> {
    let quarter = rat(1, 4);
    let one = Rat::one();
    let rows: Vec<Vec<Rat>> = m
        .rows()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| {
                    let bumped = v + quarter.clone();
                    if bumped > one {
                        one.clone()
                    } else {
                        bumped
                    }
                })
                .collect()
        })
        .collect();
    validate_bikatetov(m.left(), m.right(), rows).expect("capped raises stay admissible")
}

/// Semigroup laws of the capped min-plus composition on random composable
/// chains: associativity, two-sided identity, admissibility of composites,
/// entrywise monotonicity, the contravariant graph law on relabelings, and
/// the subset/idempotent round trip.
pub fn roelcke_law_pack(triples: usize, seed: u64) -> Vec<Certificate> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut valid = Tally::new();
    let mut assoc = Tally::new();
    let mut unit = Tally::new();
    let mut monotone = Tally::new();
    let mut graph = Tally::new();
    let mut idem = Tally::new();

    for triple in 0..triples {
        let sizes: Vec<usize> = (0..4).map(|_| rng.gen_range(1..=3)).collect();
        let (parts, ms) = sliced_chain(&sizes, &mut rng);
        let (p, q, r) = (&ms[0], &ms[1], &ms[2]);

        let pq = compose(p, q).expect("middle spaces match");
        let qr = compose(q, r).expect("middle spaces match");
        valid.record(
            validate_bikatetov(pq.left(), pq.right(), pq.rows()).is_ok(),
            || format!("triple {triple}: composite of sizes {sizes:?} is not admissible"),
        );
        let left_first = compose(&pq, r).expect("middle spaces match");
        let right_first = compose(p, &qr).expect("middle spaces match");
        assoc.record(left_first.same_element(&right_first), || {
            format!("triple {triple}: bracketing changed the composite on sizes {sizes:?}")
        });

        let id_left = identity_element(&parts[0]).expect("diameters are capped at one");
        let id_right = identity_element(&parts[1]).expect("diameters are capped at one");
        let lp = compose(&id_left, p).expect("middle spaces match");
        let pr = compose(p, &id_right).expect("middle spaces match");
        unit.record(lp.same_element(p) && pr.same_element(p), || {
            format!("triple {triple}: the metric identity failed to act as a unit")
        });

        let bigger = compose(&raised(p), &raised(q)).expect("middle spaces match");
        let dominated = (0..pq.left().n())
            .all(|x| (0..pq.right().n()).all(|y| *pq.at(x, y) <= *bigger.at(x, y)));
        monotone.record(dominated, || {
            format!("triple {triple}: raising the factors lowered a composite entry")
        });

        // Contravariant graph law on an equilateral space, where every
        // relabeling is an isometry.
        let en = rng.gen_range(2..=4);
        let side = rat(rng.gen_range(1..=4), 4);
        let rows: Vec<Vec<Rat>> = (0..en)
            .map(|i| {
                (0..en)
                    .map(|j| if i == j { Rat::zero() } else { side.clone() })
                    .collect()
            })
            .collect();
        let equi = FiniteMetricSpace::new(rows).expect("equilateral spaces are metric");
        let mut g: Vec<usize> = (0..en).collect();
        g.shuffle(&mut rng);
        let mut h: Vec<usize> = (0..en).collect();
        h.shuffle(&mut rng);
        let composite: Vec<usize> = (0..en).map(|x| h[g[x]]).collect();
        let pg =
            graph_element(&equi, &g).expect("relabelings of equilateral spaces are isometries");
        let ph =
            graph_element(&equi, &h).expect("relabelings of equilateral spaces are isometries");
        let pgh = graph_element(&equi, &composite)
            .expect("relabelings of equilateral spaces are isometries");
        let product = compose(&pg, &ph).expect("matching space");
        graph.record(product.same_element(&pgh), || {
            format!("triple {triple}: graph of {g:?} then {h:?} is not the graph of the composite")
        });

        // Subset idempotents square to themselves and name their subset.
        let dn = rng.gen_range(1..=5);
        let d: FiniteMetricSpace<Rat> =
            random_metric_with(dn, rng.gen_range(1..=6), Some(Rat::one()), &mut rng)
                .expect("random metric parameters are in range");
        let subset = random_subset(dn, rng.gen_range(1..=dn), &mut rng);
        let pa = idempotent_from_subset(&d, &subset).expect("nonempty subsets are admissible");
        let squared = compose(&pa, &pa).expect("matching space");
        let named = subset_from_idempotent(&pa).expect("subset idempotents decode");
        idem.record(squared.same_element(&pa) && named == subset, || {
            format!("triple {triple}: subset {subset:?} did not round-trip through its idempotent")
        });
    }

    vec![
        assoc.certificate("roelcke-associative"),
        valid.certificate("roelcke-composite-admissible"),
        unit.certificate("roelcke-identity"),
        monotone.certificate("roelcke-monotone"),
        graph.certificate("roelcke-graph-law"),
        idem.certificate("roelcke-idempotent-subsets"),
    ]
}

/// The exhaustive half-grid idempotent census on the two-point space, plus
/// staircase composition laws on random monotone paths.
pub fn roelcke_structure_pack(staircases: usize, seed: u64) -> Vec<Certificate> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut certs = Vec::new();

    let half = rat(1, 2);
    let rows = vec![
        vec![Rat::zero(), half.clone()],
        vec![half.clone(), Rat::zero()],
    ];
    let two = FiniteMetricSpace::new(rows).expect("two points at distance one half");
    let report = enumerate_grid_idempotents(&two, &half).expect("tiny grid");
    let unanchored = report
        .idempotents
        .iter()
        .filter(|i| i.subset.is_none())
        .count();
    let census_ok = report.candidates == 81
        && report.valid == 26
        && report.idempotents.len() == 4
        && unanchored == 1;
    certs.push(if census_ok {
        Certificate::pass(
            "roelcke-grid-census",
            "81 candidates, 26 admissible, 4 idempotents on the half-grid two-point space",
        )
    } else {
        Certificate::fail(
            "roelcke-grid-census",
            format!(
                "expected 81/26/4 with one unanchored, found {}/{}/{} with {}",
                report.candidates,
                report.valid,
                report.idempotents.len(),
                unanchored
            ),
        )
    });
    certs.push(Certificate::info(
        "roelcke-grid-unanchored",
        format!("{unanchored} idempotent(s) arise from no subset (the all-ones matrix)"),
    ));

    let mut identity = Tally::new();
    let mut closed = Tally::new();
    for case in 0..staircases {
        let n = rng.gen_range(1..=6);
        let s = random_staircase(n, &mut rng);
        let t = random_staircase(n, &mut rng);
        let diag = StaircaseRelation::diagonal(n);
        let left = staircase_compose(&diag, &s).expect("matching grids");
        let right = staircase_compose(&s, &diag).expect("matching grids");
        identity.record(
            left.cells() == s.cells() && right.cells() == s.cells(),
            || format!("case {case}: the diagonal moved a staircase on grid {n}"),
        );
        closed.record(staircase_compose(&s, &t).is_ok(), || {
            format!("case {case}: composite of staircases on grid {n} failed to repair")
        });
    }
    certs.push(identity.certificate("roelcke-staircase-identity"));
    certs.push(closed.certificate("roelcke-staircase-closed"));
    certs
}

/// A uniformly random monotone lattice path from `(0,0)` to `(n,n)` with
/// unit right, up, and diagonal steps.
fn random_staircase(n: usize, rng: &mut ChaCha8Rng) -> StaircaseRelation {
    let (mut i, mut j) = (0usize, 0usize);
    let mut cells = vec![(0, 0)];
    while (i, j) != (n, n) {
        let mut steps: Vec<(usize, usize)> = Vec::new();
        if i < n {
            steps.push((i + 1, j));
        }
        if j < n {
            steps.push((i, j + 1));
        }
        if i < n && j < n {
            steps.push((i + 1, j + 1));
        }
        let &(ni, nj) = steps.choose(rng).expect("not yet at the corner");
        i = ni;
        j = nj;
        cells.push((i, j));
    }
    StaircaseRelation::new(n, &cells).expect("walks are staircases")
}

// ---------------------------------------------------------------------------
// Composition semigroups and their minimal structure.
// ---------------------------------------------------------------------------

/// Idempotent extraction and minimal-left-ideal structure on random
/// generated transformation semigroups, cross-checked against brute-force
/// equivariant-map search whenever the `|M|^|M|` scan fits the budget.
pub fn ellis_pack(sets: usize, seed: u64) -> Vec<Certificate> {
    const ORACLE_BUDGET: u64 = 1_000_000;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut power = Tally::new();
    let mut descent = Tally::new();
    let mut structure = Tally::new();
    let mut oracle = Tally::new();
    let mut ideals_seen = 0u64;

    for set in 0..sets {
        let n = rng.gen_range(2..=6);
        let generators: Vec<SelfMap> = if n <= 4 {
            let count = rng.gen_range(1..=3);
            (0..count)
                .map(|_| {
                    let images: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
                    SelfMap::new(n, images).expect("images are in range")
                })
                .collect()
        } else if rng.gen_bool(0.5) {
            let images: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
            vec![SelfMap::new(n, images).expect("images are in range")]
        } else {
            (0..2)
                .map(|_| {
                    let mut images: Vec<usize> = (0..n).collect();
                    images.shuffle(&mut rng);
                    SelfMap::new(n, images).expect("permutations are in range")
                })
                .collect()
        };
        let s = generate_semigroup(&generators)
            .expect("closures on at most 6 points stay under the budget");

        for g in &generators {
            let e = idempotent_power(g);
            power.record(e.is_idempotent() && s.index_of(&e).is_some(), || {
                format!("set {set}: the idempotent power of a generator left the semigroup")
            });
        }
        let a = find_idempotent(&s);
        descent.record(s.product(a, a) == a, || {
            format!("set {set}: the descent returned non-idempotent element {a}")
        });

        for ideal in minimal_left_ideals(&s) {
            ideals_seen += 1;
            let report =
                verify_ideal_structure(&s, &ideal).expect("minimal left ideals are left ideals");
            structure.record(
                report.minimal && report.pass_c.is_some() && report.all_pass(),
                || {
                    format!(
                        "set {set}: structure checks a={} b={} c={:?} d={} on an ideal of {}",
                        report.pass_a,
                        report.pass_b,
                        report.pass_c,
                        report.pass_d,
                        ideal.len()
                    )
                },
            );
            if let Some(brute) = brute_equivariant_maps_budgeted(&s, &ideal, ORACLE_BUDGET) {
                let propagated = propagated_equivariant_maps(&s, &ideal);
                oracle.record(propagated == brute, || {
                    format!(
                        "set {set}: propagation found {} equivariant maps, brute force {}",
                        propagated.len(),
                        brute.len()
                    )
                });
            }
        }
    }

    let mut certs = vec![
        power.certificate("flows-idempotent-power"),
        descent.certificate("flows-idempotent-descent"),
        structure.certificate("flows-ideal-structure"),
        oracle.certificate("flows-equivariant-oracle"),
    ];
    certs.push(Certificate::info(
        "flows-ideal-count",
        format!("{ideals_seen} minimal left ideals across {sets} generated semigroups"),
    ));
    certs
}

/// No equivariant map from a 3-transitive point flow to its maximal-chain
/// flow — checked exhaustively for the full symmetric actions and the
/// alternating action on 5 points — while a depth-3 laminar family on 4
/// points does induce an equivariant chain map.
pub fn obstruction_pack(max_n: usize) -> Vec<Certificate> {
    let mut certs = Vec::new();

    let mut check = |label: String, action: FiniteAction| {
        let transitive3 = is_k_transitive(&action, 3).expect("at least three points");
        let (chains, chain_action) = chain_flow(&action).expect("chain spaces are small");
        let maps = equivariant_maps(&action, &chain_action).expect("propagation is bounded");
        certs.push(if transitive3 && maps.is_empty() {
            Certificate::pass(
                label,
                format!(
                    "3-transitive; 0 of {} chain assignments are equivariant",
                    chains.len()
                ),
            )
        } else if !transitive3 {
            Certificate::fail(label, "action is not 3-transitive".to_string())
        } else {
            Certificate::fail(
                label,
                format!(
                    "{} equivariant chain maps exist, e.g. {:?}",
                    maps.len(),
                    maps[0]
                ),
            )
        });
    };

    for n in 3..=max_n {
        let action =
            FiniteAction::new(n, symmetric_group_generators(n)).expect("permutation generators");
        check(format!("flows-chain-obstruction-s{n}"), action);
    }
    if max_n >= 5 {
        let three_cycle = SelfMap::new(5, vec![1, 2, 0, 3, 4]).expect("permutation");
        let five_cycle = SelfMap::new(5, vec![1, 2, 3, 4, 0]).expect("permutation");
        let a5 = FiniteAction::new(5, vec![three_cycle, five_cycle]).expect("permutations");
        check("flows-chain-obstruction-a5".to_string(), a5);
    }

    // The balanced depth-3 laminar family on 4 points, with the symmetry
    // group that preserves it.
    let family: Vec<Vec<usize>> = vec![
        vec![0, 1, 2, 3],
        vec![0, 1],
        vec![2, 3],
        vec![0],
        vec![1],
        vec![2],
        vec![3],
    ];
    let gens = vec![
        SelfMap::new(4, vec![1, 0, 2, 3]).expect("permutation"),
        SelfMap::new(4, vec![0, 1, 3, 2]).expect("permutation"),
        SelfMap::new(4, vec![2, 3, 0, 1]).expect("permutation"),
    ];
    let action = FiniteAction::new(4, gens).expect("permutations");
    let report = laminar_chain_map(&family, &action).expect("the family is laminar");
    certs.push(if report.all_chains && report.equivariant {
        Certificate::pass(
            "flows-laminar-chain-map",
            format!(
                "depth-3 family of {} sets induces an equivariant chain map",
                report.family.len()
            ),
        )
    } else {
        Certificate::fail(
            "flows-laminar-chain-map",
            format!(
                "chains certified: {}, equivariance certified: {}",
                report.all_chains, report.equivariant
            ),
        )
    });
    certs
}

/// The strict-total-order flows are minimal with `n!` orders, and the
/// orbit census of the full relation space matches the frozen counts for
/// small `n`.
pub fn linear_orders_pack(max_n: usize) -> Vec<Certificate> {
    let frozen_orbits = [(1usize, 2u64), (2, 10), (3, 104)];
    let mut certs = Vec::new();
    for n in 1..=max_n {
        let report = linear_orders_flow(n).expect("order spaces up to 5 points are enumerable");
        let expected: u64 = (1..=n as u64).product();
        let frozen = frozen_orbits
            .iter()
            .find(|&&(m, _)| m == n)
            .map(|&(_, c)| c);
        let orbits_ok = match frozen {
            Some(count) => report.full_space_orbits == Some(count),
            None => true,
        };
        let ok = report.minimal
            && report.invariant
            && report.transitive
            && report.orders.len() as u64 == expected
            && orbits_ok;
        certs.push(if ok {
            let mut witness = format!("{} orders, invariant, one orbit", report.orders.len());
            if let Some(count) = report.full_space_orbits {
                witness.push_str(&format!("; {count} orbits on the full relation space"));
            }
            Certificate::pass(format!("flows-linear-orders-n{n}"), witness)
        } else {
            Certificate::fail(
                format!("flows-linear-orders-n{n}"),
                format!(
                    "{} orders (expected {expected}), minimal: {}, full-space orbits {:?}",
                    report.orders.len(),
                    report.minimal,
                    report.full_space_orbits
                ),
            )
        });
    }
    certs
}

// ---------------------------------------------------------------------------
// Syndetic sets, Bohr membership, and group witnesses.
// ---------------------------------------------------------------------------

/// A random syndetic set: cumulative gaps drawn uniformly from 1..=20
/// across the window.
fn random_syndetic(window: i64, rng: &mut ChaCha8Rng) -> IntegerWindowSet {
    let mut members = Vec::new();
    let mut x = -window + rng.gen_range(0..=19);
    while x <= window {
        members.push(x);
        x += rng.gen_range(1..=20);
    }
    IntegerWindowSet::new(window, members).expect("members stay inside the window")
}

/// Random syndetic sets have bounded gaps and their triple sum sets
/// swallow every rational Bohr set on the reliable margin; the difference
/// sets alone are tabulated for comparison but never judged. Every
/// nontrivial group in the small catalogue yields a syndetic set whose
/// product set misses part of the group.
pub fn syndetic_pack(sets: usize, window: i64, seed: u64) -> Vec<Certificate> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gaps = Tally::new();
    let mut triple = Tally::new();
    let mut difference_sets = 0u64;

    for case in 0..sets {
        let s = random_syndetic(window, &mut rng);
        let report = is_syndetic(&s);
        gaps.record(
            report.syndetic && report.max_gap.is_some_and(|g| g <= 20),
            || format!("case {case}: gaps exceeded the generator bound"),
        );

        let theta_count = rng.gen_range(1..=2);
        let thetas: Vec<Rat> = (0..theta_count)
            .map(|_| {
                let den = rng.gen_range(2..=12);
                let num = rng.gen_range(1..den);
                rat(num, den)
            })
            .collect();
        let eps = rat(rng.gen_range(1..=3), 2);
        let spec = BohrSpec::new(thetas, eps).expect("positive radius");
        let bohr = check_triple_sum_bohr(&s, &spec).expect("window parameters are valid");
        triple.record(bohr.triple_violations.is_empty(), || {
            format!(
                "case {case}: {} of {} Bohr members escape the triple sum set, first {}",
                bohr.triple_violations.len(),
                bohr.bohr_on_triple_margin.len(),
                bohr.triple_violations[0]
            )
        });
        if !bohr.difference_violations.is_empty() {
            difference_sets += 1;
        }
    }

    let mut certs = vec![
        gaps.certificate("syndetic-gap-bound"),
        triple.certificate("syndetic-triple-bohr"),
        Certificate::info(
            "syndetic-difference-report",
            format!(
                "{difference_sets} of {sets} sets had Bohr members outside the bare difference set"
            ),
        ),
    ];

    let mut pestov = Tally::new();
    let mut census_groups = 0u64;
    for (name, group) in small_group_catalogue() {
        let report = pestov_witness(&group);
        let good = !report.extremely_amenable
            && report.witness.as_ref().is_some_and(|w| {
                w.fs_covers && w.ss_inverse_proper && w.s == vec![group.identity()]
            });
        pestov.record(good, || {
            format!(
                "group {name} of order {} produced no valid witness",
                report.order
            )
        });
        if report.census.is_some() {
            census_groups += 1;
        }
    }
    certs.push(pestov.certificate("syndetic-pestov-witness"));
    certs.push(Certificate::info(
        "syndetic-pestov-census",
        format!("exhaustive subset census ran on {census_groups} catalogue groups"),
    ));
    certs
}

// ---------------------------------------------------------------------------
// Suite assembly.
// ---------------------------------------------------------------------------

/// The canonical-extension suite: lift exactness, score closure, and the
/// isometry shuttle.
pub fn katetov_suite(seed: u64) -> SuiteReport {
    let mut certs = katetov_exactness_pack(40, seed);
    certs.extend(score_closure_pack(6, seed.wrapping_add(1)));
    certs.extend(back_and_forth_pack(60, 6, seed.wrapping_add(2)));
    SuiteReport::assemble("katetov", seed, certs)
}

/// The capped min-plus suite: semigroup laws, the grid census, and
/// staircase composition.
pub fn roelcke_suite(seed: u64) -> SuiteReport {
    let mut certs = roelcke_law_pack(80, seed);
    certs.extend(roelcke_structure_pack(40, seed.wrapping_add(1)));
    SuiteReport::assemble("roelcke", seed, certs)
}

/// The semigroup-dynamics suite: idempotents, ideal structure, the chain
/// obstruction, and linear-order flows.
pub fn flows_suite(seed: u64) -> SuiteReport {
    let mut certs = ellis_pack(120, seed);
    certs.extend(obstruction_pack(5));
    certs.extend(linear_orders_pack(4));
    SuiteReport::assemble("flows", seed, certs)
}

/// The arithmetic suite: syndetic gaps, Bohr triple sums, and group
/// witnesses.
pub fn syndetic_suite(seed: u64) -> SuiteReport {
    SuiteReport::assemble("syndetic", seed, syndetic_pack(10, 2_000, seed))
}

/// Every suite, concatenated under one report.
pub fn all_suites(seed: u64) -> SuiteReport {
    let mut certs = katetov_suite(seed).certificates;
    certs.extend(roelcke_suite(seed).certificates);
    certs.extend(flows_suite(seed).certificates);
    certs.extend(syndetic_suite(seed).certificates);
    SuiteReport::assemble("all", seed, certs)
}

/// The suites by name.
pub const SUITE_NAMES: [&str; 5] = ["katetov", "roelcke", "flows", "syndetic", "all"];

/// Runs the named suite; `None` for an unknown name.
pub fn run_suite(name: &str, seed: u64) -> Option<SuiteReport> {
    match name {
        "katetov" => Some(katetov_suite(seed)),
        "roelcke" => Some(roelcke_suite(seed)),
        "flows" => Some(flows_suite(seed)),
        "syndetic" => Some(syndetic_suite(seed)),
        "all" => Some(all_suites(seed)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    #[test]
    fn exactness_pack_passes_on_small_batches() {
        let certs = katetov_exactness_pack(4, 11);
        assert_eq!(certs.len(), 5);
        assert!(certs.iter().all(|c| c.verdict == Verdict::Pass));
    }

    #[test]
    fn score_closure_pack_passes() {
        let certs = score_closure_pack(3, 7);
        assert!(certs.iter().all(|c| c.verdict == Verdict::Pass));
    }

    #[test]
    fn back_and_forth_pack_passes() {
        let certs = back_and_forth_pack(20, 5, 3);
        assert!(certs.iter().all(|c| c.verdict == Verdict::Pass));
    }

    #[test]
    fn roelcke_packs_pass() {
        let certs = roelcke_law_pack(10, 5);
        assert!(certs.iter().all(|c| c.verdict == Verdict::Pass));
        let certs = roelcke_structure_pack(10, 5);
        assert!(certs.iter().all(|c| c.verdict != Verdict::Fail));
    }

    #[test]
    fn flows_packs_pass() {
        let certs = ellis_pack(15, 9);
        assert!(certs.iter().all(|c| c.verdict != Verdict::Fail));
        let certs = obstruction_pack(4);
        assert!(certs.iter().all(|c| c.verdict == Verdict::Pass));
        let certs = linear_orders_pack(3);
        assert!(certs.iter().all(|c| c.verdict == Verdict::Pass));
    }

    #[test]
    fn syndetic_pack_passes() {
        let certs = syndetic_pack(2, 500, 13);
        assert!(certs.iter().all(|c| c.verdict != Verdict::Fail));
    }

    #[test]
    fn suites_are_deterministic_in_the_seed() {
        let a = syndetic_suite(4);
        let b = syndetic_suite(4);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        assert!(run_suite("nosuch", 0).is_none());
        assert_eq!(
            run_suite("syndetic", 4).unwrap().certificates,
            a.certificates
        );
    }
}
