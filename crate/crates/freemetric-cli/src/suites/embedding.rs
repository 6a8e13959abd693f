//! The isometric embedding of the free monoid into the free group:
//! `fg_distance` agrees with the edit distance on positive words.

use freemetric_core::length::{edit_distance, fg_distance, Weights};
use freemetric_core::words::sample_monoid_word;
use freemetric_core::{seed, Error};
use rand::Rng;

use super::{all_monoid_words, scan_row, SuiteCtx};
use crate::report::Row;

pub fn rows(ctx: &SuiteCtx, s: u64) -> Result<Vec<Row>, Error> {
    let a = &ctx.alphabet;
    let unit = Weights::unit(a.rank());
    let weighted = Weights::new(vec![1.0, 5.0])?;
    let mut rows = Vec::new();

    let all = all_monoid_words(a, 6);
    for (tag, weights) in [("unit", &unit), ("w15", &weighted)] {
        let mut bad = None;
        'outer: for u in &all {
            for v in &all {
                let group = fg_distance(&u.to_word(), &v.to_word(), weights, &ctx.limits)?;
                if group != edit_distance(u, v, weights)? {
                    bad = Some(format!("({u},{v})"));
                    break 'outer;
                }
            }
        }
        rows.push(
            scan_row(&format!("embedding/exhaustive-le6-{tag}"), bad)
                .anchor("Pisometry")
                .value((all.len() * all.len()) as f64),
        );
    }

    for (tag, weights, salt) in [("unit", &unit, 1_u64), ("w15", &weighted, 2)] {
        let base = seed::derive(s, salt);
        let mut bad = None;
        for i in 0..200_u64 {
            let mut rng = seed::rng(seed::derive(base, i));
            let u_len = rng.random_range(0..=12);
            let u = sample_monoid_word(&mut rng, u_len, a);
            let v_len = rng.random_range(0..=12);
            let v = sample_monoid_word(&mut rng, v_len, a);
            let group = fg_distance(&u.to_word(), &v.to_word(), weights, &ctx.limits)?;
            if group != edit_distance(&u, &v, weights)? {
                bad = Some(format!("({u},{v})"));
                break;
            }
        }
        rows.push(
            scan_row(&format!("embedding/random-le12-{tag}"), bad)
                .anchor("Pisometry")
                .value(200.0),
        );
    }

    Ok(rows)
}
