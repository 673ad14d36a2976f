//! Property tests for the metric layer: random generation really produces
//! metrics, restriction is isometric, and the back-and-forth search agrees
//! with exhaustive permutation search in both directions.

use ambit_core::metric::{
    back_and_forth, brute_force_isometry, isometric_embeddings, random_metric_with, restrict,
    validate_metric, FiniteMetricSpace,
};
use ambit_core::Rat;
use proptest::prelude::*;
use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn space(n: usize, denom: i64, rng: &mut ChaCha8Rng) -> FiniteMetricSpace<Rat> {
    random_metric_with(n, denom, None, rng).expect("parameters are in range")
}

/// Relabels a space along a random permutation, returning the permutation.
fn relabeled(
    x: &FiniteMetricSpace<Rat>,
    rng: &mut ChaCha8Rng,
) -> (FiniteMetricSpace<Rat>, Vec<usize>) {
    let n = x.n();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let rows: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| x.dist(perm[i], perm[j]).clone()).collect())
        .collect();
    (
        FiniteMetricSpace::new(rows).expect("relabeling preserves the axioms"),
        perm,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Random spaces re-validate from their raw rows, up to 12 points.
    #[test]
    fn random_spaces_satisfy_the_axioms(seed in any::<u64>(), n in 1usize..=12, denom in 1i64..=10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = space(n, denom, &mut rng);
        prop_assert!(validate_metric(x.rows()).is_ok());
    }

    /// Restriction keeps exactly the selected distances.
    #[test]
    fn restriction_is_isometric(seed in any::<u64>(), n in 2usize..=9, denom in 1i64..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = space(n, denom, &mut rng);
        let mut points: Vec<usize> = (0..n).collect();
        points.shuffle(&mut rng);
        points.truncate(rng.gen_range(1..=n));
        points.sort_unstable();
        let sub = restrict(&x, &points).expect("indices are in range");
        prop_assert_eq!(sub.n(), points.len());
        for i in 0..points.len() {
            for j in 0..points.len() {
                prop_assert_eq!(sub.dist(i, j), x.dist(points[i], points[j]));
            }
        }
    }

    /// A relabeled copy is always recognized as isometric, and the map
    /// returned is a genuine isometry.
    #[test]
    fn relabelings_are_found(seed in any::<u64>(), n in 1usize..=7, denom in 1i64..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = space(n, denom, &mut rng);
        let (y, _) = relabeled(&x, &mut rng);
        let map = back_and_forth(&x, &y).expect("a relabeling is an isometry");
        let mut image = map.clone();
        image.sort_unstable();
        prop_assert_eq!(image, (0..n).collect::<Vec<_>>());
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(x.dist(i, j), y.dist(map[i], map[j]));
            }
        }
    }

    /// On independent draws the shuttle and the exhaustive permutation
    /// search agree about existence.
    #[test]
    fn shuttle_matches_exhaustive_search(seed in any::<u64>(), n in 1usize..=6, denom in 1i64..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = space(n, denom, &mut rng);
        let y = space(n, denom, &mut rng);
        prop_assert_eq!(
            back_and_forth(&x, &y).is_some(),
            brute_force_isometry(&x, &y).is_some()
        );
    }

    /// Every subspace embeds isometrically into its parent, and the
    /// identity-style embedding is among those found.
    #[test]
    fn subspaces_embed(seed in any::<u64>(), n in 2usize..=6, denom in 1i64..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = space(n, denom, &mut rng);
        let mut points: Vec<usize> = (0..n).collect();
        points.shuffle(&mut rng);
        points.truncate(rng.gen_range(1..=n.min(4)));
        points.sort_unstable();
        let sub = restrict(&x, &points).expect("indices are in range");
        let embeddings = isometric_embeddings(&sub, &x);
        prop_assert!(embeddings.contains(&points));
        for e in &embeddings {
            for i in 0..sub.n() {
                for j in 0..sub.n() {
                    prop_assert_eq!(sub.dist(i, j), x.dist(e[i], e[j]));
                }
            }
        }
    }
}
