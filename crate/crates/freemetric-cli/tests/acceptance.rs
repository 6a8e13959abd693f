//! Acceptance suite: one test per criterion, each printing a pass line.
//! Tolerances are pinned here; unit-weight values are compared exactly.

use std::f64::consts::{FRAC_PI_2, SQRT_2};
use std::process::Command;
use std::time::Instant;

use freemetric_cli::report::{Report, ReportConfig};
use freemetric_cli::suites::{run_suite, SuiteCtx};
use freemetric_core::analysis::{
    fmk_table, homogeneity_defect, walk_exact, walk_monte_carlo, Rational, RationalSeminorm,
    SampleSpec,
};
use freemetric_core::length::{
    cyc_length, edit_distance, edit_distance_oracle, fg_distance, wc_length, wc_length_oracle,
    LengthFn, LinearForm, Weights,
};
use freemetric_core::quasi::{
    brooks_value, count_nonoverlap, count_nonoverlap_oracle, induced_pseudolength, BrooksPattern,
    Quasimorphism,
};
use freemetric_core::rotation::{ball_check, commutator_ratio, make_local_length, Epsilon, RotationRep};
use freemetric_core::words::{
    enumerate_ball, sample_monoid_word, sample_word, Alphabet, Letter, MonoidWord, Word,
};
use freemetric_core::{seed, Limits};
use rand::Rng;

fn alphabet() -> Alphabet {
    Alphabet::new(2).unwrap()
}

fn limits() -> Limits {
    Limits::default()
}

fn wc(x: &Word, weights: &Weights) -> f64 {
    wc_length(x, weights, &limits()).unwrap().deficiency
}

fn gens() -> (Word, Word) {
    let a = alphabet();
    (Word::parse("a", &a).unwrap(), Word::parse("b", &a).unwrap())
}

fn all_monoid_words(max_len: usize) -> Vec<MonoidWord> {
    let a = alphabet();
    let mut out = vec![MonoidWord::empty(&a)];
    let mut frontier = vec![Vec::<Letter>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for stem in &frontier {
            for g in 0..a.rank() {
                let mut w = stem.clone();
                w.push(Letter::new(g, false));
                next.push(w);
            }
        }
        for w in &next {
            out.push(MonoidWord::from_letters(&a, w.iter().copied()).unwrap());
        }
        frontier = next;
    }
    out
}

#[test]
fn acceptance_01_exact_paper_values() {
    let unit = Weights::unit(2);
    let (a, b) = gens();
    let comm = a.commutator(&b).unwrap();

    assert_eq!(wc(&comm, &unit), 2.0);
    assert_eq!(wc(&comm.power(3), &unit), 4.0);

    let weighted = Weights::new(vec![1.0, 5.0]).unwrap();
    for k in 1..=6i64 {
        for m in 1..=6i64 {
            let c = a.power(k).commutator(&b.power(m)).unwrap();
            assert_eq!(wc(&c, &unit), 2.0 * k.min(m) as f64);
            assert_eq!(wc(&c, &weighted), 2.0 * (k as f64).min(5.0 * m as f64));
            assert_eq!(cyc_length(&c, &unit), 2.0 * (k + m) as f64);
            assert_eq!(c.len() as f64, 2.0 * (k + m) as f64);
        }
    }

    for k in 1..=5i64 {
        let c = a.power(k).commutator(&b.power(k)).unwrap();
        assert_eq!(wc(&c, &unit), 2.0 * k as f64);
        assert!(wc(&c.power(3), &unit) <= 4.0 * k as f64);
    }

    let x = Word::parse("baB", &alphabet()).unwrap();
    for n in 1..=50i64 {
        assert_eq!(x.power(n).len(), n as usize + 2);
    }
    println!("acceptance 01 exact-paper-values: PASS");
}

#[test]
fn acceptance_02_oracle_equivalence() {
    let a = alphabet();
    let lim = limits();
    let unit = Weights::unit(2);

    // matching DP vs exhaustive matching enumeration, every word in B(8)
    for x in enumerate_ball(8, &a, &lim).unwrap() {
        assert_eq!(
            wc(&x, &unit),
            wc_length_oracle(&x, &unit, &lim).unwrap(),
            "wc mismatch at {x}"
        );
    }

    // LCS edit distance vs BFS move search, every monoid pair of length <= 5
    let all = all_monoid_words(5);
    for u in &all {
        for v in &all {
            assert_eq!(
                edit_distance(u, v, &unit).unwrap(),
                edit_distance_oracle(u, v).unwrap() as f64,
                "edit mismatch at ({u}, {v})"
            );
        }
    }

    // greedy non-overlapping count vs exhaustive subset maximum, |g| <= 14
    let base = seed::derive(2024, 2);
    for i in 0..2000u64 {
        let mut rng = seed::rng(seed::derive(base, i));
        let plen = rng.random_range(1..=4);
        let pattern = BrooksPattern::new(sample_word(&mut rng, plen, &a)).unwrap();
        let glen = rng.random_range(0..=14);
        let g = sample_word(&mut rng, glen, &a);
        assert_eq!(
            count_nonoverlap(&pattern, &g),
            count_nonoverlap_oracle(&pattern, &g, &lim).unwrap(),
            "count mismatch: {} in {g}",
            pattern.word()
        );
    }
    for text in ["a", "ab", "aba", "abab", "aab", "abA"] {
        let pattern = BrooksPattern::new(Word::parse(text, &a).unwrap()).unwrap();
        for reps in 1..=6i64 {
            let long = pattern.word().power(reps);
            for cut in 0..=long.len().min(14) {
                let g = Word::from_letters(&a, long.letters()[..cut].iter().copied()).unwrap();
                assert_eq!(
                    count_nonoverlap(&pattern, &g),
                    count_nonoverlap_oracle(&pattern, &g, &lim).unwrap()
                );
            }
        }
    }
    println!("acceptance 02 oracle-equivalence: PASS");
}

#[test]
fn acceptance_03_isometric_embedding() {
    let a = alphabet();
    let lim = limits();
    let start = Instant::now();

    let all = all_monoid_words(6);
    for weights in [Weights::unit(2), Weights::new(vec![1.0, 5.0]).unwrap()] {
        for u in &all {
            for v in &all {
                assert_eq!(
                    fg_distance(&u.to_word(), &v.to_word(), &weights, &lim).unwrap(),
                    edit_distance(u, v, &weights).unwrap(),
                    "embedding mismatch at ({u}, {v})"
                );
            }
        }
        let base = seed::derive(2024, 3);
        for i in 0..200u64 {
            let mut rng = seed::rng(seed::derive(base, i));
            let lu = rng.random_range(0..=12);
            let u = sample_monoid_word(&mut rng, lu, &a);
            let lv = rng.random_range(0..=12);
            let v = sample_monoid_word(&mut rng, lv, &a);
            assert_eq!(
                fg_distance(&u.to_word(), &v.to_word(), &weights, &lim).unwrap(),
                edit_distance(&u, &v, &weights).unwrap()
            );
        }
    }

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 10, "embedding check took {elapsed:?}");
    println!("acceptance 03 isometric-embedding: PASS ({elapsed:?})");
}

#[test]
fn acceptance_04_metric_axioms() {
    let a = alphabet();
    let lim = limits();
    let unit = Weights::unit(2);

    // bi-invariance of the edit distance on 1000 seeded tuples
    let base = seed::derive(2024, 40);
    for i in 0..1000u64 {
        let mut rng = seed::rng(seed::derive(base, i));
        let glen = rng.random_range(0..=6);
        let g = sample_monoid_word(&mut rng, glen, &a);
        let hlen = rng.random_range(0..=6);
        let h = sample_monoid_word(&mut rng, hlen, &a);
        let xlen = rng.random_range(0..=8);
        let x = sample_monoid_word(&mut rng, xlen, &a);
        let ylen = rng.random_range(0..=8);
        let y = sample_monoid_word(&mut rng, ylen, &a);
        let gxh = g.concat(&x).unwrap().concat(&h).unwrap();
        let gyh = g.concat(&y).unwrap().concat(&h).unwrap();
        assert_eq!(
            edit_distance(&gxh, &gyh, &unit).unwrap(),
            edit_distance(&x, &y, &unit).unwrap()
        );
    }

    // wc conjugation invariance on 500 pairs
    let base = seed::derive(2024, 41);
    for i in 0..500u64 {
        let mut rng = seed::rng(seed::derive(base, i));
        let glen = rng.random_range(0..=8);
        let g = sample_word(&mut rng, glen, &a);
        let xlen = rng.random_range(0..=12);
        let x = sample_word(&mut rng, xlen, &a);
        assert_eq!(wc(&g.conjugate(&x).unwrap(), &unit), wc(&x, &unit));
    }

    // wc symmetry, triangle inequality, and parity on 1000 pairs
    let base = seed::derive(2024, 42);
    for i in 0..1000u64 {
        let mut rng = seed::rng(seed::derive(base, i));
        let xlen = rng.random_range(0..=16);
        let x = sample_word(&mut rng, xlen, &a);
        let ylen = rng.random_range(0..=16);
        let y = sample_word(&mut rng, ylen, &a);
        let dx = wc(&x, &unit);
        let dy = wc(&y, &unit);
        assert_eq!(dx, wc(&x.invert(), &unit));
        assert_eq!(dx as usize % 2, x.len() % 2);
        assert_eq!(dy as usize % 2, y.len() % 2);
        assert!(wc(&x.multiply(&y).unwrap(), &unit) <= dx + dy);
    }
    let _ = lim;
    println!("acceptance 04 metric-axioms: PASS");
}

#[test]
fn acceptance_05_homogeneous_pullback() {
    let a = alphabet();
    let lim = limits();
    let ell = LengthFn::pullback(LinearForm::new(vec![1.0, SQRT_2]).unwrap());

    let spec = SampleSpec::Random {
        count: 1000,
        max_len: 12,
        seed: seed::derive(2024, 50),
    };
    let report = homogeneity_defect(&ell, &spec, &a, &lim).unwrap();
    assert!(
        report.c_hat.abs() <= 1e-12,
        "pullback homogeneity defect {}",
        report.c_hat
    );

    let base = seed::derive(2024, 51);
    for i in 0..500u64 {
        let mut rng = seed::rng(seed::derive(base, i));
        let xlen = rng.random_range(0..=10);
        let x = sample_word(&mut rng, xlen, &a);
        let ylen = rng.random_range(0..=10);
        let y = sample_word(&mut rng, ylen, &a);
        let value = ell.eval(&x.commutator(&y).unwrap()).unwrap();
        assert!(value <= 1e-12, "pullback commutator length {value}");
    }

    let (ga, gb) = gens();
    let table = fmk_table(&ell, 0.0, &ga, &gb, 3, 3).unwrap();
    assert!(table.violations.is_empty());
    println!("acceptance 05 homogeneous-pullback: PASS");
}

#[test]
fn acceptance_06_defect_witnesses() {
    let unit = Weights::unit(2);
    let (a, b) = gens();

    // word length along a^k b a^-k: defect exactly 2k
    for k in 1..=10i64 {
        let z = a.power(k).multiply(&b).unwrap().multiply(&a.power(-k)).unwrap();
        let defect = 2.0 * z.len() as f64 - z.power(2).len() as f64;
        assert_eq!(defect, 2.0 * k as f64);
    }

    // cyc length triangle violation: 6 > 1 + 1
    let x = Word::parse("baB", &alphabet()).unwrap();
    let y = Word::parse("BAb", &alphabet()).unwrap();
    let xy = x.multiply(&y).unwrap();
    assert_eq!(cyc_length(&xy, &unit), 6.0);
    assert_eq!(cyc_length(&x, &unit) + cyc_length(&y, &unit), 2.0);
    println!("acceptance 06 defect-witnesses: PASS");
}

#[test]
fn acceptance_07_quasimorphisms() {
    let a = alphabet();
    let (ga, gb) = gens();
    let comm = ga.commutator(&gb).unwrap();
    let pattern = BrooksPattern::new(comm.clone()).unwrap();

    for n in 0..=10i64 {
        assert_eq!(brooks_value(&pattern, &comm.power(n)), n);
    }

    let base = seed::derive(2024, 70);
    for i in 0..500u64 {
        let mut rng = seed::rng(seed::derive(base, i));
        let plen = rng.random_range(1..=4);
        let p = BrooksPattern::new(sample_word(&mut rng, plen, &a)).unwrap();
        let glen = rng.random_range(0..=20);
        let g = sample_word(&mut rng, glen, &a);
        assert_eq!(brooks_value(&p, &g.invert()), -brooks_value(&p, &g));
    }

    let defect = 2.0;
    let ell = induced_pseudolength(&Quasimorphism::brooks(pattern), defect).unwrap();
    for n in 0..=10i64 {
        assert_eq!(ell.eval(&comm.power(n)).unwrap(), n as f64 + defect);
    }
    println!("acceptance 07 quasimorphisms: PASS");
}

#[test]
fn acceptance_08_walk_bound() {
    let exact = walk_exact(2).unwrap();
    assert_eq!(exact.mean_abs, 1.5);
    assert_eq!(exact.bound, 2.0);
    assert!(exact.mean_abs <= exact.bound);

    let mc = walk_monte_carlo(512, 100_000, seed::derive(2024, 80));
    assert_eq!(mc.bound, 32.0);
    assert!(
        mc.mean_abs <= mc.bound + 3.0 * mc.std_err,
        "estimate {} above bound {} with stderr {}",
        mc.mean_abs,
        mc.bound,
        mc.std_err
    );
    println!("acceptance 08 walk-bound: PASS");
}

#[test]
fn acceptance_09_rotations() {
    let a = alphabet();
    let lim = limits();

    // AUTO epsilon at R = 6, exhaustive ball checks
    let local = make_local_length(6, Epsilon::Auto, seed::derive(2024, 90), &a).unwrap();
    assert!((local.rep().epsilon() - FRAC_PI_2 / 6.0).abs() <= 1e-15);
    let report = ball_check(&local, 1e-6, &lim).unwrap();
    assert_eq!(report.triangle_violations, 0, "triangle violations beyond 1e-9");
    assert!(
        report.max_doubling_deviation <= 1e-9,
        "doubling deviation {}",
        report.max_doubling_deviation
    );

    // positivity across a 20-seed batch: at least 99% of seeds
    let ball = enumerate_ball(6, &a, &lim).unwrap();
    let batch = 20u64;
    let mut passing = 0u64;
    for i in 0..batch {
        let rep = RotationRep::random(&a, 6, Epsilon::Auto, seed::derive(seed::derive(2024, 91), i))
            .unwrap();
        let min_angle = ball
            .iter()
            .filter(|x| !x.is_identity())
            .map(|x| rep.angle_of(x))
            .fold(f64::INFINITY, f64::min);
        if min_angle > 1e-6 {
            passing += 1;
        } else {
            eprintln!("positivity failure at seed {i}: min angle {min_angle}");
        }
    }
    assert!(passing as f64 / batch as f64 >= 0.99);

    // tenfold ratio decay from eps = 0.1 to eps = 0.01, within 20%
    let ratio_seed = seed::derive(2024, 92);
    let quotient = commutator_ratio(0.1, ratio_seed).unwrap() / commutator_ratio(0.01, ratio_seed).unwrap();
    assert!(
        (8.0..=12.0).contains(&quotient),
        "ratio quotient {quotient} outside 10 +/- 20%"
    );
    println!("acceptance 09 rotations: PASS");
}

#[test]
fn acceptance_10_rational_seminorm() {
    let norm = RationalSeminorm::from_linear_form(&LinearForm::new(vec![1.0, SQRT_2]).unwrap());
    let half = Rational::new(1, 2);
    let value = norm.eval(&[half, half]).unwrap();
    assert!(
        (value - (1.0 + SQRT_2) / 2.0).abs() <= 1e-12,
        "seminorm at (1/2, 1/2) = {value}"
    );

    let base = seed::derive(2024, 100);
    for i in 0..1000u64 {
        let mut rng = seed::rng(seed::derive(base, i));
        let pick = |rng: &mut rand_chacha::ChaCha8Rng| {
            Rational::new(rng.random_range(-12..=12), rng.random_range(1..=12))
        };
        let p = [pick(&mut rng), pick(&mut rng)];
        let q = [pick(&mut rng), pick(&mut rng)];
        let alpha = pick(&mut rng);
        let np = norm.eval(&p).unwrap();
        let nq = norm.eval(&q).unwrap();
        assert!(np >= 0.0);
        let nsum = norm.eval(&[p[0] + q[0], p[1] + q[1]]).unwrap();
        assert!(nsum <= np + nq + 1e-9, "triangle failure: {nsum} > {np} + {nq}");
        let nscaled = norm.eval(&[alpha * p[0], alpha * p[1]]).unwrap();
        let alpha_f = (*alpha.numer() as f64 / *alpha.denom() as f64).abs();
        assert!(
            (nscaled - alpha_f * np).abs() <= 1e-9,
            "homogeneity failure: {nscaled} vs {alpha_f} * {np}"
        );
    }
    println!("acceptance 10 rational-seminorm: PASS");
}

#[test]
fn acceptance_11_determinism() {
    let build = |seed_value: u64| {
        let ctx = SuiteCtx::new(seed_value, Limits::default());
        let rows = run_suite("all", &ctx).unwrap();
        Report::new(
            ReportConfig {
                suite: "all".into(),
                seed: seed_value,
                rank: 2,
                limits: Limits::default().into(),
                walk_steps: None,
                walk_trials: None,
                walk_exact: None,
            },
            rows,
        )
        .to_json()
    };
    let first = build(42);
    let second = build(42);
    assert_eq!(first, second, "in-process reports differ");
    assert_eq!(
        first.matches("\"status\": \"fail\"").count(),
        0,
        "suite all must be fully green at seed 42"
    );

    // the shipped binary reproduces the same bytes, independent of any
    // thread-count knobs in the environment
    let run_binary = |threads: &str| {
        let output = Command::new(env!("CARGO_BIN_EXE_freemetric"))
            .args(["verify", "--suite", "all", "--seed", "42"])
            .env("RAYON_NUM_THREADS", threads)
            .output()
            .expect("binary runs");
        assert!(output.status.success());
        String::from_utf8(output.stdout).unwrap()
    };
    let one = run_binary("1");
    let eight = run_binary("8");
    assert_eq!(one, eight, "reports differ across thread counts");
    assert_eq!(one, first, "binary and in-process reports differ");
    println!("acceptance 11 determinism: PASS");
}
