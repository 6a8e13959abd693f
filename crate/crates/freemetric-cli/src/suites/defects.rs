//! Defect estimation and the inequality engine: homogeneity defects with
//! witnesses, triangle defects, power/conjugation/splitting/grid checks,
//! commutator bounds, homogenization brackets, and equivalence gaps.

use freemetric_core::analysis::{
    cl_bound_check, commutator_report, conjugation_check, equivalence_gap, fmk_table, homogenize,
    homogeneity_defect, power_bounds_check, shift, splitting_check, triangle_defect,
    CommutatorStatus, DefectConstant, SampleSpec, SplitWitness, WitnessSearch,
};
use freemetric_core::length::{LengthFn, Weights};
use freemetric_core::quasi::{
    defect_sample, induced_pseudolength, qm_commutator_report, qm_homogenize, BrooksPattern,
    Quasimorphism,
};
use freemetric_core::words::Word;
use freemetric_core::{seed, Error};

use super::{scan_row, word_pairs, words, SuiteCtx};
use crate::metrics::default_form;
use crate::report::{status, Row, Status};

pub fn rows(ctx: &SuiteCtx, s: u64) -> Result<Vec<Row>, Error> {
    let a = &ctx.alphabet;
    let unit = Weights::unit(a.rank());
    let word_len = LengthFn::word(unit.clone());
    let cyc_len = LengthFn::cyclic(unit.clone());
    let wc_len = LengthFn::watson_crick(unit.clone(), ctx.limits);
    let pullback = LengthFn::pullback(default_form(a.rank()));
    let gen_a = Word::parse("a", a)?;
    let gen_b = Word::parse("b", a)?;
    let mut rows = Vec::new();

    // word length along a^k b a^-k: 2l(z) - l(z^2) = 2k exactly, so the
    // defect is unbounded
    {
        let mut ok = true;
        let mut top = 0.0;
        let mut witness = String::new();
        for k in 1..=10_i64 {
            let z = gen_a.power(k).multiply(&gen_b)?.multiply(&gen_a.power(-k))?;
            let defect = 2.0 * word_len.eval(&z)? - word_len.eval(&z.power(2))?;
            if defect != 2.0 * k as f64 {
                ok = false;
            }
            top = defect;
            witness = z.to_string();
        }
        rows.push(
            Row::new("defects/word-unbounded-family", status(ok))
                .anchor("9bound")
                .value(top)
                .witness(witness),
        );
    }

    // cyc length violates the triangle inequality at (baB, BAb): 6 > 1 + 1
    {
        let mut pairs = word_pairs(seed::derive(s, 1), 200, 10, 10, a);
        pairs.push((Word::parse("baB", a)?, Word::parse("BAb", a)?));
        let defect = triangle_defect(&cyc_len, &pairs)?;
        rows.push(
            Row::new("defects/cyc-triangle-violation", status(defect.k_hat >= 4.0))
                .anchor("ng")
                .value(defect.k_hat)
                .bound(4.0)
                .witness(format!("({},{})", defect.witness.0, defect.witness.1)),
        );
    }

    // subadditive lengths have non-positive triangle defect on samples
    {
        let pairs = word_pairs(seed::derive(s, 2), 1000, 16, 16, a);
        let wc_defect = triangle_defect(&wc_len, &pairs)?;
        rows.push(
            Row::new("defects/wc-triangle-defect", status(wc_defect.k_hat <= 0.0))
                .anchor("ng")
                .value(wc_defect.k_hat)
                .bound(0.0),
        );
        let word_defect = triangle_defect(&word_len, &pairs)?;
        rows.push(
            Row::new("defects/word-triangle-defect", status(word_defect.k_hat <= 0.0))
                .anchor("ng")
                .value(word_defect.k_hat)
                .bound(0.0),
        );
    }

    // pullback: exactly homogeneous, so the sampled defect vanishes
    {
        let spec = SampleSpec::Random {
            count: 1000,
            max_len: 12,
            seed: seed::derive(s, 3),
        };
        let report = homogeneity_defect(&pullback, &spec, a, &ctx.limits)?;
        rows.push(
            Row::new(
                "defects/pullback-homogeneity",
                status(report.c_hat.abs() <= 1e-12),
            )
            .anchor("double")
            .value(report.c_hat)
            .bound(1e-12)
            .witness(report.witness.to_string()),
        );
    }

    // pullback commutators vanish: the 5c bound at c = 0
    {
        let pairs = word_pairs(seed::derive(s, 4), 500, 10, 10, a);
        let report = commutator_report(
            &pullback,
            &DefectConstant::Asserted(0.0),
            &pairs,
            &WitnessSearch::default(),
            &ctx.limits,
        )?;
        let bad = report
            .iter()
            .find(|row| !matches!(row.status, CommutatorStatus::Pass) || row.value > 1e-12)
            .map(|row| format!("({},{})", row.x, row.y));
        rows.push(
            scan_row("defects/pullback-commutator-5c", bad)
                .anchor("xyc")
                .value(500.0)
                .bound(0.0),
        );
    }

    // pullback satisfies the two-point recursion with zero slack
    {
        let table = fmk_table(&pullback, 0.0, &gen_a, &gen_b, 3, 3)?;
        rows.push(
            Row::new("defects/pullback-fmk", status(table.violations.is_empty()))
                .anchor("fmk")
                .value(table.violations.len() as f64)
                .bound(0.0),
        );
    }

    // wc over B(4): the sampled defect and its witness (non-negative since
    // wc is subadditive)
    {
        let report = homogeneity_defect(&wc_len, &SampleSpec::Ball { radius: 4 }, a, &ctx.limits)?;
        rows.push(
            Row::new("defects/wc-homogeneity-ball4", status(report.c_hat >= 0.0))
                .anchor("9bound")
                .value(report.c_hat)
                .witness(report.witness.to_string()),
        );

        // wc([a^2,b^2]) = 2 min(2,2) = 4, with consistency against 5c-hat
        let pair = (gen_a.power(2), gen_b.power(2));
        let value = wc_len.eval(&pair.0.commutator(&pair.1)?)?;
        let rows_5c = commutator_report(
            &wc_len,
            &DefectConstant::Sampled(report),
            std::slice::from_ref(&pair),
            &WitnessSearch::default(),
            &ctx.limits,
        )?;
        let note = match &rows_5c[0].status {
            CommutatorStatus::Pass => "within 5c-hat".to_string(),
            CommutatorStatus::Fail => "fail".to_string(),
            CommutatorStatus::NeedsWitness { improved: Some((z, c)) } => {
                format!("defect witness {z} with 2l(z)-l(z^2)={c}")
            }
            CommutatorStatus::NeedsWitness { improved: None } => {
                "defect witness required beyond search space".to_string()
            }
        };
        rows.push(
            Row::new("defects/wc-commutator-5c", status(value == 4.0))
                .anchor("xyc")
                .value(value)
                .bound(4.0)
                .witness(note),
        );
    }

    // wc grid at c = 0: violations tell where the defect lives
    {
        let table = fmk_table(&wc_len, 0.0, &gen_a, &gen_b, 3, 3)?;
        rows.push(
            Row::new("defects/wc-fmk-c0", Status::Info)
                .anchor("fmk")
                .value(table.violations.len() as f64),
        );
    }

    // Brooks defect sampling: lower bound at least 1, reproducible witness
    {
        let f = Quasimorphism::brooks(BrooksPattern::new(Word::parse("ab", a)?)?);
        let sample = defect_sample(&f, a, 500, 6, seed::derive(s, 5));
        rows.push(
            Row::new("defects/brooks-defect-sample", status(sample.lower_bound >= 1.0))
                .anchor("D(f)")
                .value(sample.lower_bound)
                .bound(1.0)
                .witness(format!("({},{})", sample.witness.0, sample.witness.1)),
        );

        // monotone in the pair count for nested seeded samples
        let mut prev = 0.0;
        let mut monotone = true;
        for count in [50_u64, 100, 200, 400] {
            let s_n = defect_sample(&f, a, count, 6, seed::derive(s, 5));
            if s_n.lower_bound < prev {
                monotone = false;
            }
            prev = s_n.lower_bound;
        }
        rows.push(Row::new("defects/defect-sample-monotone", status(monotone)).value(prev));
    }

    // antisymmetry of the Brooks counting function
    {
        let base = seed::derive(s, 6);
        let mut bad = None;
        for i in 0..500_u64 {
            let mut rng = seed::rng(seed::derive(base, i));
            use rand::Rng;
            let p_len = rng.random_range(1..=4);
            let p = BrooksPattern::new(freemetric_core::words::sample_word(&mut rng, p_len, a))?;
            let g_len = rng.random_range(0..=20);
            let g = freemetric_core::words::sample_word(&mut rng, g_len, a);
            if freemetric_core::quasi::brooks_value(&p, &g.invert())
                != -freemetric_core::quasi::brooks_value(&p, &g)
            {
                bad = Some(format!("{} in {g}", p.word()));
                break;
            }
        }
        rows.push(scan_row("defects/brooks-antisymmetry", bad).value(500.0));
    }

    // |f| + D-hat satisfies the triangle inequality on the pairs that
    // certified D-hat
    {
        let f = Quasimorphism::brooks(BrooksPattern::new(Word::parse("abAB", a)?)?);
        let sample = defect_sample(&f, a, 300, 8, seed::derive(s, 7));
        let ell = induced_pseudolength(&f, sample.lower_bound)?;
        let mut bad = None;
        for i in 0..sample.pair_count {
            let mut rng = seed::rng(seed::derive(sample.seed, i));
            use rand::Rng;
            let lx = rng.random_range(0..=sample.max_len);
            let x = freemetric_core::words::sample_word(&mut rng, lx, a);
            let ly = rng.random_range(0..=sample.max_len);
            let y = freemetric_core::words::sample_word(&mut rng, ly, a);
            let xy = x.multiply(&y)?;
            if ell.eval(&xy)? > ell.eval(&x)? + ell.eval(&y)? + 1e-12 {
                bad = Some(format!("({x},{y})"));
                break;
            }
        }
        rows.push(
            scan_row("defects/quasilength-triangle-certified", bad)
                .anchor("quasimortonorm")
                .value(sample.lower_bound),
        );

        // homogenized commutator values against 3D
        let report = qm_commutator_report(
            &f,
            sample.lower_bound.max(1.0),
            &[(gen_a.clone(), gen_b.clone()), (gen_a.power(2), gen_b.power(2))],
            64,
        )?;
        let first = &report[0];
        rows.push(
            Row::new(
                "defects/qm-commutator-3d",
                status(first.homogenized == 1.0),
            )
            .anchor("quasimortonorm")
            .value(first.homogenized)
            .bound(first.bound)
            .witness(format!(
                "{} of {} rows consistent",
                report.iter().filter(|r| r.consistent).count(),
                report.len()
            )),
        );

        // homogenization of f at its own pattern is exactly 1
        let h = qm_homogenize(&f, &Word::parse("abAB", a)?, 64);
        rows.push(
            Row::new("defects/qm-homogenize-fixed-point", status(h.value == 1.0))
                .value(h.value)
                .bound(1.0),
        );
    }

    // quasimorphism pseudo-length passes the 5c bound with an asserted
    // defect upper bound (c = 2D)
    {
        let f = Quasimorphism::brooks(BrooksPattern::new(Word::parse("abAB", a)?)?);
        let asserted_defect = 12.0;
        let ell = induced_pseudolength(&f, asserted_defect)?;
        let pairs = word_pairs(seed::derive(s, 8), 200, 8, 8, a);
        let report = commutator_report(
            &ell,
            &DefectConstant::Asserted(2.0 * asserted_defect),
            &pairs,
            &WitnessSearch::default(),
            &ctx.limits,
        )?;
        let bad = report
            .iter()
            .find(|row| !matches!(row.status, CommutatorStatus::Pass))
            .map(|row| format!("({},{})", row.x, row.y));
        rows.push(
            scan_row("defects/quasilength-commutator-5c", bad)
                .anchor("xyc")
                .value(200.0)
                .bound(10.0 * asserted_defect),
        );
    }

    // approximate conjugation invariance
    {
        let pairs = word_pairs(seed::derive(s, 9), 500, 8, 12, a);
        let wc_rows = conjugation_check(&wc_len, 0.0, &pairs)?;
        let bad = wc_rows
            .iter()
            .find(|r| !r.ok || r.margin.abs() > 1e-12)
            .map(|r| format!("({},{})", r.conjugator, r.x));
        rows.push(
            scan_row("defects/conjugation-wc-exact", bad)
                .anchor("aci")
                .value(500.0),
        );

        let pb_rows = conjugation_check(&pullback, 0.0, &pairs)?;
        let bad = pb_rows
            .iter()
            .find(|r| !r.ok || r.margin.abs() > 1e-12)
            .map(|r| format!("({},{})", r.conjugator, r.x));
        rows.push(
            scan_row("defects/conjugation-pullback-exact", bad)
                .anchor("aci")
                .value(500.0),
        );

        // word length at c = 0 must be flagged: |aba^-1| = 3 > 1
        let failing = conjugation_check(&word_len, 0.0, &[(gen_a.clone(), gen_b.clone())])?;
        rows.push(
            Row::new(
                "defects/conjugation-word-flagged",
                status(!failing[0].ok && failing[0].value == 3.0),
            )
            .anchor("aci")
            .value(failing[0].value)
            .bound(failing[0].bound)
            .witness("aba^-1"),
        );
    }

    // power bounds: upper always, lower only with an honest c
    {
        let x = Word::parse("baB", a)?;
        let at_zero = power_bounds_check(&word_len, 0.0, &x, 8, false)?;
        rows.push(
            Row::new(
                "defects/power-bounds-word-c0-flagged",
                status(at_zero.upper_ok && !at_zero.lower_ok),
            )
            .anchor("rearrange")
            .value(at_zero.lower_margin)
            .witness("baB"),
        );
        let at_two = power_bounds_check(&word_len, 2.0, &x, 8, false)?;
        rows.push(
            Row::new(
                "defects/power-bounds-word-c2",
                status(at_two.upper_ok && at_two.lower_ok),
            )
            .anchor("rearrange")
            .value(at_two.lower_margin),
        );
        let exact = power_bounds_check(&pullback, 0.0, &Word::parse("ab", a)?, 8, false)?;
        rows.push(
            Row::new(
                "defects/power-bounds-pullback-exact",
                status(
                    exact.upper_ok
                        && exact.lower_ok
                        && exact.upper_margin.abs() <= 1e-12
                        && exact.lower_margin.abs() <= 1e-12,
                ),
            )
            .anchor("rearrange")
            .value(exact.upper_margin),
        );
    }

    // splitting inequality with generated witnesses, c = 0 for pullback
    {
        let base = seed::derive(s, 10);
        let mut bad = None;
        fn pick<R: rand::Rng>(
            rng: &mut R,
            max: usize,
            alphabet: &freemetric_core::words::Alphabet,
        ) -> Word {
            let len = rng.random_range(0..=max);
            freemetric_core::words::sample_word(rng, len, alphabet)
        }
        for i in 0..50_u64 {
            let mut rng = seed::rng(seed::derive(base, i));
            let w = pick(&mut rng, 6, a);
            let y = pick(&mut rng, 6, a);
            let s_word = pick(&mut rng, 4, a);
            let t_word = pick(&mut rng, 4, a);
            let x = s_word.conjugate(&w.multiply(&y)?)?;
            let z = t_word.invert().conjugate(&x)?.multiply(&w)?;
            let witness = SplitWitness {
                x,
                y,
                z,
                w,
                s: s_word,
                t: t_word,
            };
            let report = splitting_check(&pullback, 0.0, &witness)?;
            if !report.ok {
                bad = Some(format!("x={}", witness.x));
                break;
            }
        }
        rows.push(
            scan_row("defects/splitting-pullback", bad)
                .anchor("ineq")
                .value(50.0),
        );

        // degenerate instance x = wy with trivial conjugators, z = xw
        let x = Word::parse("ab", a)?;
        let witness = SplitWitness {
            x: x.clone(),
            y: gen_b.clone(),
            z: x.multiply(&gen_a)?,
            w: gen_a.clone(),
            s: Word::identity(a),
            t: Word::identity(a),
        };
        let report = splitting_check(&word_len, 0.0, &witness)?;
        rows.push(
            Row::new("defects/splitting-degenerate", status(report.ok))
                .anchor("ineq")
                .value(report.value)
                .bound(report.bound),
        );
    }

    // commutator-length bound rows
    {
        let pb = cl_bound_check(&pullback, 0.0, 3, 4, seed::derive(s, 11), 50, a)?;
        let bad = pb
            .iter()
            .find(|r| !r.ok || r.value > 1e-12)
            .map(|r| r.word.to_string());
        rows.push(
            scan_row("defects/cl-bound-pullback", bad)
                .anchor("commutatorbound")
                .value(50.0),
        );
        let wl = cl_bound_check(&word_len, 0.0, 1, 3, seed::derive(s, 12), 50, a)?;
        rows.push(
            Row::new(
                "defects/cl-bound-word-flagged",
                status(wl.iter().any(|r| !r.ok)),
            )
            .anchor("commutatorbound")
            .value(wl.iter().filter(|r| !r.ok).count() as f64),
        );
    }

    // homogenization estimates and brackets
    {
        let x = Word::parse("baB", a)?;
        let h = homogenize(&word_len, &x, 256, 2.0)?;
        let ok = h.estimate == 258.0 / 256.0 && h.bracket_lo <= 1.0 && 1.0 <= h.bracket_hi;
        rows.push(
            Row::new("defects/homogenize-conjugate-power", status(ok))
                .anchor("rearrange")
                .value(h.estimate)
                .bound(1.0)
                .witness("baB"),
        );

        let mut nested = true;
        let mut prev = homogenize(&word_len, &x, 2, 2.0)?;
        for exp in 2..=8_u32 {
            let next = homogenize(&word_len, &x, 1 << exp, 2.0)?;
            if next.estimate > prev.bracket_hi + 1e-12 || next.estimate < prev.bracket_lo - 1e-12 {
                nested = false;
            }
            prev = next;
        }
        rows.push(
            Row::new("defects/homogenize-brackets-nested", status(nested))
                .anchor("rearrange")
                .value(prev.estimate),
        );

        let comm = gen_a.commutator(&gen_b)?;
        let h = homogenize(&wc_len, &comm, 8, 2.0)?;
        rows.push(
            Row::new("defects/homogenize-wc-commutator", status(h.estimate <= 2.0))
                .anchor("rearrange")
                .value(h.estimate)
                .bound(2.0),
        );
    }

    // equivalence gaps
    {
        let sample = words(seed::derive(s, 13), 300, 12, a);
        let same = equivalence_gap(&word_len, &word_len, &sample)?;
        let shifted = equivalence_gap(&word_len, &shift(&word_len, 1.5), &sample)?;
        rows.push(
            Row::new(
                "defects/equivalence-shift-gap",
                status(same.gap == 0.0 && shifted.gap == 1.5),
            )
            .value(shifted.gap)
            .bound(1.5),
        );

        let mut family = sample;
        let k = 7_i64;
        family.push(gen_a.power(k).multiply(&gen_b)?.multiply(&gen_a.power(-k))?);
        let gap = equivalence_gap(&word_len, &cyc_len, &family)?;
        rows.push(
            Row::new("defects/equivalence-word-vs-cyc", status(gap.gap >= 2.0 * k as f64))
                .value(gap.gap)
                .bound(2.0 * k as f64)
                .witness(gap.witness.to_string()),
        );
    }

    Ok(rows)
}
