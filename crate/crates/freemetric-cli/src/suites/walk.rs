//! The ±1-walk estimate behind the commutator bound: `E|Y₁ + … + Y₂ₙ|` never
//! exceeds `√(2n)`.

use freemetric_core::analysis::{walk_coefficient, walk_exact, walk_monte_carlo, WalkStats};
use freemetric_core::length::{LengthFn, Weights};
use freemetric_core::words::Word;
use freemetric_core::{seed, Error};

use super::SuiteCtx;
use crate::report::{status, Row, Status};

fn stats_row(id: String, stats: &WalkStats) -> Row {
    let row = match stats.bound_ok {
        Some(ok) => Row::new(id, status(ok)),
        None => Row::new(id, Status::Skip).witness("single trial, no spread estimate"),
    };
    row.anchor("sqrt(2n)")
        .value(stats.mean_abs)
        .bound(stats.bound)
        .margin(stats.bound - stats.mean_abs)
}

pub fn rows(ctx: &SuiteCtx, s: u64) -> Result<Vec<Row>, Error> {
    let mut rows = Vec::new();

    // explicit --n runs exactly what was asked for
    if let Some(steps) = ctx.walk_steps {
        if steps < 2 || steps % 2 != 0 || !(steps / 2).is_power_of_two() {
            return Err(Error::LimitExceeded {
                what: "walk steps (must be twice a power of two)",
                requested: steps,
                limit: 1 << 20,
            });
        }
        let n = steps / 2;
        let stats = if ctx.walk_exact {
            walk_exact(n)?
        } else {
            walk_monte_carlo(n, ctx.walk_trials.unwrap_or(100_000), seed::derive(s, 1))
        };
        let mode = if stats.exact { "exact" } else { "mc" };
        rows.push(stats_row(format!("walk/{mode}-{steps}"), &stats));
        return Ok(rows);
    }

    // default battery: exact 4-step walk, E|S| = 1.5 <= 2
    let exact4 = walk_exact(2)?;
    rows.push(stats_row("walk/exact-4".into(), &exact4));
    let exact_ok = exact4.mean_abs == 1.5 && exact4.bound == 2.0;
    rows.push(
        Row::new("walk/exact-4-value", status(exact_ok))
            .value(exact4.mean_abs)
            .bound(1.5),
    );

    // Monte Carlo at n = 512: estimate stays below sqrt(1024) = 32
    let trials = ctx.walk_trials.unwrap_or(100_000);
    let mc = walk_monte_carlo(512, trials, seed::derive(s, 2));
    rows.push(stats_row("walk/mc-1024".into(), &mc));

    // exact enumeration matches Monte Carlo within three standard errors;
    // a 3-sigma gate trips on roughly 1% of seeds by construction
    {
        let mut ok = true;
        for (i, n) in [1_u64, 2, 4].into_iter().enumerate() {
            let exact = walk_exact(n)?;
            let sampled = walk_monte_carlo(n, 50_000, seed::derive(s, 3 + i as u64));
            if (sampled.mean_abs - exact.mean_abs).abs() > 3.0 * sampled.std_err {
                ok = false;
            }
        }
        rows.push(Row::new("walk/exact-vs-mc-3sigma", status(ok)).value(3.0));
    }

    // the walk coefficient A for the wc length at (a, b):
    // max(l(a), l(a^-1)) + max(l([a,b]), l([a,b]^-1))/2 = 1 + 1 = 2
    {
        let alphabet = &ctx.alphabet;
        let wc = LengthFn::watson_crick(Weights::unit(alphabet.rank()), ctx.limits);
        let a = Word::parse("a", alphabet)?;
        let b = Word::parse("b", alphabet)?;
        let coefficient = walk_coefficient(&wc, &a, &b)?;
        rows.push(
            Row::new("walk/coefficient-wc", Status::Info)
                .anchor("A*sqrt(2n)")
                .value(coefficient),
        );
    }

    Ok(rows)
}
