//! Exact closed-form values, asserted with zero tolerance at unit weights.

use std::f64::consts::SQRT_2;

use freemetric_core::analysis::{walk_exact, RationalSeminorm, Rational};
use freemetric_core::length::{cyc_length, pullback_length, wc_length, word_length, LinearForm, Weights};
use freemetric_core::quasi::{brooks_value, induced_pseudolength, BrooksPattern, Quasimorphism};
use freemetric_core::words::Word;
use freemetric_core::Error;

use super::SuiteCtx;
use crate::report::{status, Row};

pub fn rows(ctx: &SuiteCtx, _s: u64) -> Result<Vec<Row>, Error> {
    let a = &ctx.alphabet;
    let unit = Weights::unit(a.rank());
    let gen_a = Word::parse("a", a)?;
    let gen_b = Word::parse("b", a)?;
    let comm = gen_a.commutator(&gen_b)?;
    let mut rows = Vec::new();

    let wc = |x: &Word, weights: &Weights| -> Result<f64, Error> {
        Ok(wc_length(x, weights, &ctx.limits)?.deficiency)
    };

    // wc([a,b]) = 2 and wc([a,b]^3) = 4
    rows.push(
        Row::new("paper-values/wc-commutator", status(wc(&comm, &unit)? == 2.0))
            .value(wc(&comm, &unit)?)
            .bound(2.0)
            .witness(comm.to_string()),
    );
    rows.push(
        Row::new(
            "paper-values/wc-commutator-cube",
            status(wc(&comm.power(3), &unit)? == 4.0),
        )
        .value(wc(&comm.power(3), &unit)?)
        .bound(4.0)
        .witness(comm.power(3).to_string()),
    );

    // wc([a^k, b^m]) = 2 min(k, m) for k, m <= 6, unit weights
    {
        let mut ok = true;
        for k in 1..=6_i64 {
            for m in 1..=6_i64 {
                let c = gen_a.power(k).commutator(&gen_b.power(m))?;
                if wc(&c, &unit)? != 2.0 * k.min(m) as f64 {
                    ok = false;
                }
            }
        }
        rows.push(
            Row::new("paper-values/wc-min-formula", status(ok))
                .anchor("2min(|k|w_a,|m|w_b)")
                .value(36.0),
        );
    }

    // weighted version with w = (1, 5): 2 min(k w_a, m w_b)
    {
        let weighted = Weights::new(vec![1.0, 5.0])?;
        let mut ok = true;
        for k in 1..=6_i64 {
            for m in 1..=6_i64 {
                let c = gen_a.power(k).commutator(&gen_b.power(m))?;
                let expected = 2.0 * (k as f64).min(5.0 * m as f64);
                if wc(&c, &weighted)? != expected {
                    ok = false;
                }
            }
        }
        rows.push(
            Row::new("paper-values/wc-min-formula-weighted", status(ok))
                .anchor("2min(|k|w_a,|m|w_b)")
                .value(36.0),
        );
    }

    // wc([a^k, b^k]) = 2k, wc([a^k, b^k]^3) <= 4k for k <= 5
    {
        let mut ok = true;
        for k in 1..=5_i64 {
            let c = gen_a.power(k).commutator(&gen_b.power(k))?;
            if wc(&c, &unit)? != 2.0 * k as f64 || wc(&c.power(3), &unit)? > 4.0 * k as f64 {
                ok = false;
            }
        }
        rows.push(Row::new("paper-values/wc-equal-powers", status(ok)).value(5.0));
    }

    // cyc([a^k, b^m]) = 2(k + m) = word-metric length
    {
        let mut ok = true;
        for k in 1..=6_i64 {
            for m in 1..=6_i64 {
                let c = gen_a.power(k).commutator(&gen_b.power(m))?;
                let expected = 2.0 * (k + m) as f64;
                if cyc_length(&c, &unit) != expected || word_length(&c, &unit) != expected {
                    ok = false;
                }
            }
        }
        rows.push(
            Row::new("paper-values/cyc-and-word-commutator", status(ok))
                .anchor("2(|k|+|m|)")
                .value(36.0),
        );
    }

    // |(baB)^n| = n + 2 for n <= 50
    {
        let x = Word::parse("baB", a)?;
        let ok = (1..=50_i64).all(|n| x.power(n).len() == n as usize + 2);
        rows.push(
            Row::new("paper-values/word-conjugate-powers", status(ok))
                .anchor("linear-growth")
                .value(50.0)
                .witness("baB"),
        );
    }

    // f_w(w^n) = n f_w(w) for the Brooks pattern w = [a, b], n <= 10
    {
        let pattern = BrooksPattern::new(comm.clone())?;
        let ok = (0..=10_i64).all(|n| brooks_value(&pattern, &comm.power(n)) == n);
        rows.push(
            Row::new("paper-values/brooks-power-linearity", status(ok))
                .anchor("f_w(w^n)=nf_w(w)")
                .value(10.0),
        );
    }

    // |f| + D grows exactly linearly on powers of the pattern
    {
        let pattern = BrooksPattern::new(comm.clone())?;
        let defect = 2.0;
        let ell = induced_pseudolength(&Quasimorphism::brooks(pattern), defect)?;
        let ok = (0..=10_i64).try_fold(true, |acc, n| {
            Ok::<_, Error>(acc && ell.eval(&comm.power(n))? == n as f64 + defect)
        })?;
        rows.push(
            Row::new("paper-values/quasilength-linear-growth", status(ok))
                .anchor("quasimortonorm")
                .value(10.0),
        );
    }

    // pullback values of |n + sqrt(2) m|
    {
        let form = LinearForm::new(vec![1.0, SQRT_2])?;
        let ok = pullback_length(&gen_a, &form) == 1.0
            && pullback_length(&gen_b, &form) == SQRT_2
            && pullback_length(&comm, &form) == 0.0;
        rows.push(Row::new("paper-values/pullback-sqrt2", status(ok)).value(SQRT_2));
    }

    // rational seminorm at (1/2, 1/2) equals (1 + sqrt(2))/2
    {
        let norm = RationalSeminorm::from_linear_form(&LinearForm::new(vec![1.0, SQRT_2])?);
        let half = Rational::new(1, 2);
        let value = norm.eval(&[half, half])?;
        let expected = (1.0 + SQRT_2) / 2.0;
        let err = (value - expected).abs();
        rows.push(
            Row::new("paper-values/rational-seminorm-half", status(err <= 1e-12))
                .anchor("(1/n)x")
                .value(value)
                .bound(expected)
                .margin(err),
        );
    }

    // exact 4-step walk: E|S| = 1.5 <= 2
    {
        let stats = walk_exact(2)?;
        rows.push(
            Row::new(
                "paper-values/walk-exact-4",
                status(stats.mean_abs == 1.5 && stats.bound == 2.0),
            )
            .anchor("sqrt(2n)")
            .value(stats.mean_abs)
            .bound(stats.bound),
        );
    }

    Ok(rows)
}
