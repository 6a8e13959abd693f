//! Oracle cross-checks: every optimized routine agrees with an independent
//! exhaustive or search-based computation on small instances.

use freemetric_core::length::{
    edit_distance, edit_distance_oracle, fg_distance, wc_length, wc_length_oracle, Weights,
};
use freemetric_core::quasi::{count_nonoverlap, count_nonoverlap_oracle, BrooksPattern};
use freemetric_core::rotation::RotationRep;
use freemetric_core::words::{enumerate_ball, sample_monoid_word, sample_word, Alphabet, Word};
use freemetric_core::{seed, Limits};
use rand::Rng;

fn alphabet() -> Alphabet {
    Alphabet::new(2).unwrap()
}

#[test]
fn wc_dp_matches_exhaustive_oracle_on_ball() {
    let a = alphabet();
    let limits = Limits::default();
    let unit = Weights::unit(2);
    for x in enumerate_ball(7, &a, &limits).unwrap() {
        let dp = wc_length(&x, &unit, &limits).unwrap().deficiency;
        let oracle = wc_length_oracle(&x, &unit, &limits).unwrap();
        assert_eq!(dp, oracle, "disagreement at {x}");
    }
}

#[test]
fn wc_dp_matches_oracle_weighted() {
    let a = alphabet();
    let limits = Limits::default();
    let weights = Weights::new(vec![1.0, 5.0]).unwrap();
    for s in 0..300u64 {
        let mut rng = seed::rng(seed::derive(21, s));
        let len = rng.random_range(0..=12);
        let x = sample_word(&mut rng, len, &a);
        let dp = wc_length(&x, &weights, &limits).unwrap().deficiency;
        let oracle = wc_length_oracle(&x, &weights, &limits).unwrap();
        assert_eq!(dp, oracle, "disagreement at {x}");
    }
}

#[test]
fn edit_distance_matches_bfs_oracle() {
    let a = alphabet();
    let unit = Weights::unit(2);
    for s in 0..150u64 {
        let mut rng = seed::rng(seed::derive(22, s));
        let lu = rng.random_range(0..=5);
        let u = sample_monoid_word(&mut rng, lu, &a);
        let lv = rng.random_range(0..=5);
        let v = sample_monoid_word(&mut rng, lv, &a);
        let fast = edit_distance(&u, &v, &unit).unwrap();
        let slow = edit_distance_oracle(&u, &v).unwrap() as f64;
        assert_eq!(fast, slow, "disagreement at ({u}, {v})");
    }
}

#[test]
fn fg_distance_equals_edit_distance_on_positive_words() {
    let a = alphabet();
    let limits = Limits::default();
    for (tag, weights) in [("unit", Weights::unit(2)), ("w15", Weights::new(vec![1.0, 5.0]).unwrap())] {
        for s in 0..200u64 {
            let mut rng = seed::rng(seed::derive(23, s));
            let lu = rng.random_range(0..=12);
            let u = sample_monoid_word(&mut rng, lu, &a);
            let lv = rng.random_range(0..=12);
            let v = sample_monoid_word(&mut rng, lv, &a);
            let group = fg_distance(&u.to_word(), &v.to_word(), &weights, &limits).unwrap();
            let monoid = edit_distance(&u, &v, &weights).unwrap();
            assert_eq!(group, monoid, "weights {tag} at ({u}, {v})");
        }
    }

    // non-integer positive weights agree up to rounding noise
    let weights = Weights::new(vec![0.7, 2.3]).unwrap();
    for s in 0..200u64 {
        let mut rng = seed::rng(seed::derive(24, s));
        let lu = rng.random_range(0..=12);
        let u = sample_monoid_word(&mut rng, lu, &a);
        let lv = rng.random_range(0..=12);
        let v = sample_monoid_word(&mut rng, lv, &a);
        let group = fg_distance(&u.to_word(), &v.to_word(), &weights, &limits).unwrap();
        let monoid = edit_distance(&u, &v, &weights).unwrap();
        assert!((group - monoid).abs() <= 1e-9, "at ({u}, {v})");
    }
}

#[test]
fn subadditive_lengths_have_pointwise_nonnegative_defect() {
    // under the triangle inequality, l(z^2) <= 2 l(z) for every z
    let a = alphabet();
    let limits = Limits::default();
    let unit = Weights::unit(2);
    let word_len = freemetric_core::length::LengthFn::word(unit.clone());
    let wc_len = freemetric_core::length::LengthFn::watson_crick(unit, limits);
    for s in 0..200u64 {
        let mut rng = seed::rng(seed::derive(25, s));
        let len = rng.random_range(0..=14);
        let z = sample_word(&mut rng, len, &a);
        for ell in [&word_len, &wc_len] {
            let defect = 2.0 * ell.eval(&z).unwrap() - ell.eval(&z.power(2)).unwrap();
            assert!(defect >= 0.0, "{} at {z}", ell.name());
        }
    }
}

#[test]
fn greedy_count_matches_exhaustive_on_periodic_words() {
    let a = alphabet();
    let limits = Limits::default();
    for pattern_text in ["a", "ab", "aba", "abab", "aab"] {
        let pattern = BrooksPattern::new(Word::parse(pattern_text, &a).unwrap()).unwrap();
        for reps in 1..=5i64 {
            let long = pattern.word().power(reps);
            for cut in 0..=long.len().min(14) {
                let g = Word::from_letters(&a, long.letters()[..cut].iter().copied()).unwrap();
                assert_eq!(
                    count_nonoverlap(&pattern, &g),
                    count_nonoverlap_oracle(&pattern, &g, &limits).unwrap(),
                    "pattern {pattern_text} in {g}"
                );
            }
        }
    }
}

#[test]
fn commutator_ratio_matches_small_angle_asymptotics() {
    // orthogonal axes: theta([a,b]) ~ eps^2, so the ratio is ~ eps/2
    let a = alphabet();
    let axes = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]];
    let ga = Word::parse("a", &a).unwrap();
    let gb = Word::parse("b", &a).unwrap();
    let comm = ga.commutator(&gb).unwrap();
    for eps in [0.1, 0.01, 0.001] {
        let rep = RotationRep::from_axes(&a, &axes, 4, eps).unwrap();
        let ratio = rep.angle_of(&comm) / (rep.angle_of(&ga) + rep.angle_of(&gb));
        let predicted = eps / 2.0;
        assert!(
            (ratio - predicted).abs() <= 0.2 * predicted,
            "eps {eps}: ratio {ratio} vs predicted {predicted}"
        );
    }
}

#[test]
fn cyclic_reduction_is_conjugation_minimal() {
    let a = alphabet();
    let limits = Limits::default();
    let conjugators = enumerate_ball(3, &a, &limits).unwrap();
    for x in enumerate_ball(4, &a, &limits).unwrap() {
        let min_len = conjugators
            .iter()
            .map(|g| g.conjugate(&x).unwrap().len())
            .min()
            .unwrap();
        assert_eq!(x.cyclic_reduce().len(), min_len, "at {x}");
    }
}
