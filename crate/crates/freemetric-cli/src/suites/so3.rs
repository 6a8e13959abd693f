//! Rotation-angle local lengths: exhaustive ball checks, positivity across a
//! seed batch, and the commutator-ratio decay.

use std::f64::consts::{FRAC_PI_2, PI};

use freemetric_core::rotation::{
    ball_check, commutator_ratio, make_local_length, random_unit_quaternion, Epsilon, RotationRep,
};
use freemetric_core::words::{enumerate_ball, sample_word, Word};
use freemetric_core::{seed, Error};
use rand::Rng;

use super::{scan_row, SuiteCtx};
use crate::report::{status, Row, Status};

const POSITIVITY_THRESHOLD: f64 = 1e-6;

pub fn rows(ctx: &SuiteCtx, s: u64) -> Result<Vec<Row>, Error> {
    let a = &ctx.alphabet;
    let mut rows = Vec::new();

    // exhaustive checks on B(6) with the auto angle pi/12
    {
        let f = make_local_length(6, Epsilon::Auto, seed::derive(s, 1), a)?;
        let report = ball_check(&f, POSITIVITY_THRESHOLD, &ctx.limits)?;
        rows.push(
            Row::new("so3/ball6-triangle", status(report.triangle_ok()))
                .anchor("tri")
                .value(report.triangle_violations as f64)
                .bound(0.0)
                .margin(report.max_triangle_excess)
                .witness(format!("{} pairs", report.triangle_pairs)),
        );
        rows.push(
            Row::new("so3/ball6-doubling", status(report.doubling_ok()))
                .anchor("tri")
                .value(report.max_doubling_deviation)
                .bound(1e-9)
                .witness(format!("{} words checked", report.doubling_checked)),
        );
        rows.push(
            Row::new(
                "so3/ball6-max-angle",
                status(report.max_angle <= FRAC_PI_2 + 1e-9),
            )
            .value(report.max_angle)
            .bound(FRAC_PI_2),
        );
    }

    // positivity across a 20-seed batch: at least 99% of seeds must give a
    // faithful-looking representation on B(6); individual failures are
    // reported, not fatal
    {
        let ball = enumerate_ball(6, a, &ctx.limits)?;
        let batch = 20_u64;
        let mut passing = 0_u64;
        let mut failures = Vec::new();
        for i in 0..batch {
            let rep_seed = seed::derive(seed::derive(s, 2), i);
            let rep = RotationRep::random(a, 6, Epsilon::Auto, rep_seed)?;
            let min_angle = ball
                .iter()
                .filter(|x| !x.is_identity())
                .map(|x| rep.angle_of(x))
                .fold(f64::INFINITY, f64::min);
            if min_angle > POSITIVITY_THRESHOLD {
                passing += 1;
            } else {
                failures.push(format!("seed {i}: min angle {min_angle}"));
            }
        }
        let fraction = passing as f64 / batch as f64;
        let mut row = Row::new("so3/ball6-positivity-batch", status(fraction >= 0.99))
            .value(fraction)
            .bound(0.99);
        if !failures.is_empty() {
            row = row.witness(failures.join("; "));
        }
        rows.push(row);
    }

    // degenerate representation: same axis for both generators must report
    // positivity failures rather than crash
    {
        let axes = [[0.0, 0.0, 1.0], [0.0, 0.0, 1.0]];
        let rep = RotationRep::from_axes(a, &axes, 4, 0.3)?;
        let report = ball_check(&rep.local_length(), POSITIVITY_THRESHOLD, &ctx.limits)?;
        rows.push(
            Row::new(
                "so3/degenerate-axes-reported",
                status(!report.positivity_failures.is_empty()),
            )
            .value(report.positivity_failures.len() as f64)
            .witness(
                report
                    .positivity_failures
                    .first()
                    .map(|w| w.to_string())
                    .unwrap_or_default(),
            ),
        );
    }

    // commutator ratio drops tenfold from eps = 0.1 to eps = 0.01
    {
        let ratio_seed = seed::derive(s, 3);
        let r_01 = commutator_ratio(0.1, ratio_seed)?;
        let r_001 = commutator_ratio(0.01, ratio_seed)?;
        let quotient = r_01 / r_001;
        rows.push(
            Row::new(
                "so3/commutator-ratio-decay",
                status((8.0..=12.0).contains(&quotient)),
            )
            .value(quotient)
            .bound(10.0)
            .witness(format!("ratio(0.1)={r_01}, ratio(0.01)={r_001}")),
        );
    }

    // auto epsilon formula
    {
        let f = make_local_length(8, Epsilon::Auto, seed::derive(s, 4), a)?;
        let eps = f.rep().epsilon();
        rows.push(
            Row::new("so3/auto-epsilon", status((eps - PI / 16.0).abs() <= 1e-15))
                .value(eps)
                .bound(PI / 16.0),
        );
    }

    // bi-invariant angle metric on random quaternion pairs
    {
        let mut rng = seed::rng(seed::derive(s, 5));
        let mut worst: f64 = f64::NEG_INFINITY;
        for _ in 0..10_000 {
            let p = random_unit_quaternion(&mut rng);
            let q = random_unit_quaternion(&mut rng);
            worst = worst.max((p * q).angle() - p.angle() - q.angle());
        }
        rows.push(
            Row::new("so3/quaternion-angle-triangle", status(worst <= 1e-9))
                .value(worst)
                .bound(1e-9),
        );
    }

    // conjugation invariance and the homomorphism property of words
    {
        let rep = RotationRep::random(a, 12, Epsilon::Auto, seed::derive(s, 6))?;
        let mut rng = seed::rng(seed::derive(s, 7));
        let mut worst_conj: f64 = 0.0;
        let mut worst_hom: f64 = 0.0;
        for _ in 0..500 {
            let g_len = rng.random_range(0..=5);
            let g = sample_word(&mut rng, g_len, a);
            let x_len = rng.random_range(0..=5);
            let x = sample_word(&mut rng, x_len, a);
            let conj = g.conjugate(&x)?;
            worst_conj = worst_conj.max((rep.angle_of(&conj) - rep.angle_of(&x)).abs());
            let gx = g.multiply(&x)?;
            let composed = (rep.represent(&g) * rep.represent(&x)).angle();
            worst_hom = worst_hom.max((rep.angle_of(&gx) - composed).abs());
        }
        rows.push(
            Row::new("so3/angle-conjugation-invariance", status(worst_conj <= 1e-12))
                .value(worst_conj)
                .bound(1e-12),
        );
        rows.push(
            Row::new("so3/representation-homomorphism", status(worst_hom <= 1e-12))
                .value(worst_hom)
                .bound(1e-12),
        );
    }

    // identity maps to angle zero; inverse words to equal angles
    {
        let rep = RotationRep::random(a, 8, Epsilon::Auto, seed::derive(s, 8))?;
        let e = Word::identity(a);
        let mut rng = seed::rng(seed::derive(s, 9));
        let mut bad = (rep.angle_of(&e) != 0.0).then(|| "identity".to_string());
        for _ in 0..200 {
            let x_len = rng.random_range(0..=8);
            let x = sample_word(&mut rng, x_len, a);
            if (rep.angle_of(&x.invert()) - rep.angle_of(&x)).abs() > 1e-12 {
                bad = Some(x.to_string());
                break;
            }
        }
        rows.push(scan_row("so3/angle-symmetry", bad).value(200.0));
    }

    debug_assert!(rows.iter().all(|r| r.status != Status::Skip));
    Ok(rows)
}
