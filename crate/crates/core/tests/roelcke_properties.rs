//! Property tests for the capped min-plus semigroup of cross-distance
//! matrices: where valid matrices come from, the algebraic laws of the
//! product, idempotents, and the staircase picture of the one-dimensional
//! case.

use ambit_core::metric::{random_metric_with, restrict, FiniteMetricSpace};
use ambit_core::roelcke::{
    amalgam, compose, enumerate_grid_idempotents, graph_element, idempotent_from_subset,
    identity_element, is_staircase, staircase_compose, subset_from_idempotent, validate_bikatetov,
    BiKatetovMatrix, StaircaseRelation,
};
use ambit_core::{Rat, Scalar};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rat(num: i64, den: i64) -> Rat {
    Rat::from_int_ratio(num, den)
}

/// Splits a diameter-capped random space into consecutive parts and returns
/// the cross-distance matrix between each adjacent pair. Rows and columns of
/// such a slice are genuine distance profiles, so every slice validates.
fn sliced(part_sizes: &[usize], denom: i64, rng: &mut ChaCha8Rng) -> Vec<BiKatetovMatrix<Rat>> {
    let total: usize = part_sizes.iter().sum();
    let union =
        random_metric_with(total, denom, Some(Rat::one()), rng).expect("parameters are in range");
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    for &s in part_sizes {
        parts.push((next..next + s).collect());
        next += s;
    }
    parts
        .windows(2)
        .map(|w| {
            let left = restrict(&union, &w[0]).unwrap();
            let right = restrict(&union, &w[1]).unwrap();
            let p: Vec<Vec<Rat>> = w[0]
                .iter()
                .map(|&a| w[1].iter().map(|&b| union.dist(a, b).clone()).collect())
                .collect();
            validate_bikatetov(&left, &right, p).expect("slices of a metric are valid")
        })
        .collect()
}

/// Entrywise capped raise `t -> min(1, t + c)`; a monotone 1-Lipschitz bump,
/// so it preserves validity.
fn raised(m: &BiKatetovMatrix<Rat>, c: &Rat) -> BiKatetovMatrix<Rat> {
    let p: Vec<Vec<Rat>> = m
        .rows()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| std::cmp::min(Rat::one(), v + c.clone()))
                .collect()
        })
        .collect();
    validate_bikatetov(m.left(), m.right(), p).expect("capped raise preserves validity")
}

/// A random monotone lattice path from (0,0) to (n,n) with unit right, up,
/// and diagonal steps.
fn random_staircase(n: usize, rng: &mut ChaCha8Rng) -> StaircaseRelation {
    let mut cells = vec![(0usize, 0usize)];
    let (mut i, mut j) = (0usize, 0usize);
    while (i, j) != (n, n) {
        let choices: &[(usize, usize)] = if i == n {
            &[(0, 1)]
        } else if j == n {
            &[(1, 0)]
        } else {
            &[(1, 0), (0, 1), (1, 1)]
        };
        let &(di, dj) = choices.choose(rng).unwrap();
        i += di;
        j += dj;
        cells.push((i, j));
    }
    StaircaseRelation::new(n, &cells).expect("a monotone walk is a staircase")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Cross-distance slices of a capped metric validate, and their glued
    /// amalgam restricts back to the original distances.
    #[test]
    fn slices_validate_and_reglue(seed in any::<u64>(), a in 1usize..=4, b in 1usize..=4, denom in 1i64..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ms = sliced(&[a, b], denom, &mut rng);
        let m = &ms[0];
        let glued = amalgam(m);
        for x in 0..a {
            for y in 0..b {
                prop_assert_eq!(
                    glued.space.dist(glued.left_image[x], glued.right_image[y]),
                    m.at(x, y)
                );
            }
        }
    }

    /// The product is associative over chained slices.
    #[test]
    fn product_is_associative(seed in any::<u64>(), sizes in prop::array::uniform4(1usize..=3), denom in 1i64..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ms = sliced(&sizes, denom, &mut rng);
        let (p, q, r) = (&ms[0], &ms[1], &ms[2]);
        let left = compose(&compose(p, q).unwrap(), r).unwrap();
        let right = compose(p, &compose(q, r).unwrap()).unwrap();
        prop_assert!(left.same_element(&right));
    }

    /// The metric matrix of each side is a two-sided unit.
    #[test]
    fn metric_matrix_is_the_unit(seed in any::<u64>(), a in 1usize..=4, b in 1usize..=4, denom in 1i64..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ms = sliced(&[a, b], denom, &mut rng);
        let p = &ms[0];
        let e_left = identity_element(p.left()).unwrap();
        let e_right = identity_element(p.right()).unwrap();
        prop_assert!(compose(&e_left, p).unwrap().same_element(p));
        prop_assert!(compose(p, &e_right).unwrap().same_element(p));
    }

    /// Raising entries preserves validity, and the product is entrywise
    /// monotone in each argument.
    #[test]
    fn product_is_monotone(seed in any::<u64>(), sizes in prop::array::uniform3(1usize..=3), denom in 1i64..=6, num in 1i64..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ms = sliced(&sizes, denom, &mut rng);
        let (p, q) = (&ms[0], &ms[1]);
        let c = rat(num, 4);
        let pq = compose(p, q).unwrap();
        let up_left = compose(&raised(p, &c), q).unwrap();
        let up_right = compose(p, &raised(q, &c)).unwrap();
        for x in 0..p.left().n() {
            for y in 0..q.right().n() {
                prop_assert!(up_left.at(x, y) >= pq.at(x, y));
                prop_assert!(up_right.at(x, y) >= pq.at(x, y));
            }
        }
    }

    /// Graphs of self-isometries multiply contravariantly:
    /// `graph(g) * graph(h) = graph(h after g)`, and the identity
    /// permutation's graph is the unit.
    #[test]
    fn graphs_compose_contravariantly(seed in any::<u64>(), n in 2usize..=4, side in 1i64..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // Equilateral space: every permutation is an isometry.
        let d = rat(side, 4);
        let rows: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rat::zero() } else { d.clone() }).collect())
            .collect();
        let x = FiniteMetricSpace::new(rows).unwrap();
        let mut g: Vec<usize> = (0..n).collect();
        let mut h: Vec<usize> = (0..n).collect();
        g.shuffle(&mut rng);
        h.shuffle(&mut rng);
        let composite: Vec<usize> = (0..n).map(|i| h[g[i]]).collect();
        let product = compose(&graph_element(&x, &g).unwrap(), &graph_element(&x, &h).unwrap()).unwrap();
        prop_assert!(product.same_element(&graph_element(&x, &composite).unwrap()));
        let idg = graph_element(&x, &(0..n).collect::<Vec<_>>()).unwrap();
        prop_assert!(idg.same_element(&identity_element(&x).unwrap()));
    }

    /// Subset idempotents square to themselves and decode back to the
    /// subset that built them.
    #[test]
    fn subset_idempotents_round_trip(seed in any::<u64>(), n in 1usize..=5, denom in 1i64..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_metric_with(n, denom, Some(Rat::one()), &mut rng).unwrap();
        let mut subset: Vec<usize> = (0..n).collect();
        subset.shuffle(&mut rng);
        subset.truncate(rng.gen_range(1..=n));
        subset.sort_unstable();
        let e = idempotent_from_subset(&x, &subset).unwrap();
        let square = compose(&e, &e).unwrap();
        prop_assert!(square.same_element(&e));
        prop_assert_eq!(subset_from_idempotent(&e).unwrap(), subset);
    }

    /// Composites of random staircases are staircases, and the diagonal is
    /// a two-sided identity for the composition.
    #[test]
    fn staircases_close_under_composition(seed in any::<u64>(), n in 1usize..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_staircase(n, &mut rng);
        let t = random_staircase(n, &mut rng);
        let st = staircase_compose(&s, &t).unwrap();
        prop_assert!(is_staircase(n, st.cells()));
        let diag = StaircaseRelation::diagonal(n);
        prop_assert_eq!(&staircase_compose(&diag, &s).unwrap(), &s);
        prop_assert_eq!(&staircase_compose(&s, &diag).unwrap(), &s);
    }
}

/// On the one-point space with grid step 1/2 the full scan is tiny and can
/// be checked by hand: three candidates `[0]`, `[1/2]`, `[1]`, all valid,
/// idempotents exactly `[0]` (generated by the whole subset) and `[1]`
/// (generated by nothing).
#[test]
fn one_point_grid_census() {
    let x = FiniteMetricSpace::new(vec![vec![Rat::zero()]]).unwrap();
    let report = enumerate_grid_idempotents(&x, &rat(1, 2)).unwrap();
    assert_eq!(report.grid_size, 3);
    assert_eq!(report.candidates, 3);
    assert_eq!(report.valid, 3);
    assert_eq!(report.idempotents.len(), 2);
    let subsets: Vec<Option<Vec<usize>>> = report
        .idempotents
        .iter()
        .map(|e| e.subset.clone())
        .collect();
    assert_eq!(subsets, vec![Some(vec![0]), None]);
    assert_eq!(report.idempotents[0].matrix.at(0, 0), &Rat::zero());
    assert_eq!(report.idempotents[1].matrix.at(0, 0), &Rat::one());
}
