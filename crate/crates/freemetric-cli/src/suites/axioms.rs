//! Group axioms, metric axioms, and seminorm axioms on seeded samples.

use freemetric_core::analysis::{Rational, RationalSeminorm};
use freemetric_core::length::{edit_distance, verify_matching, wc_length, wc_letters, Weights};
use freemetric_core::words::{
    enumerate_ball, random_word, sample_monoid_word, sample_word, Letter, Word,
};
use freemetric_core::{seed, Error};
use rand::Rng;

use super::{scan_row, word_pairs, words, SuiteCtx};
use crate::metrics::default_form;
use crate::report::Row;

pub fn rows(ctx: &SuiteCtx, s: u64) -> Result<Vec<Row>, Error> {
    let a = &ctx.alphabet;
    let unit = Weights::unit(a.rank());
    let mut rows = Vec::new();

    // parse(print(x)) = x
    {
        let sample = words(seed::derive(s, 1), 500, 20, a);
        let bad = sample
            .iter()
            .find(|x| !Word::parse(&x.to_string(), a).is_ok_and(|back| back == **x));
        rows.push(scan_row("axioms/free-reduction-roundtrip", bad.map(|x| x.to_string()))
            .value(sample.len() as f64));
    }

    // associativity, identity, inverse: exhaustive on B(3)
    {
        let ball = enumerate_ball(3, a, &ctx.limits)?;
        let e = Word::identity(a);
        let mut bad = None;
        'outer: for x in &ball {
            if x.multiply(&e)? != *x
                || e.multiply(x)? != *x
                || !x.multiply(&x.invert())?.is_identity()
            {
                bad = Some(x.to_string());
                break;
            }
            for y in &ball {
                let xy = x.multiply(y)?;
                for z in &ball {
                    if xy.multiply(z)? != x.multiply(&y.multiply(z)?)? {
                        bad = Some(format!("({x},{y},{z})"));
                        break 'outer;
                    }
                }
            }
        }
        rows.push(scan_row("axioms/group-laws-ball3", bad)
            .value((ball.len() * ball.len() * ball.len()) as f64));
    }

    // same laws on random triples
    {
        let base = seed::derive(s, 2);
        let mut bad = None;
        for i in 0..1000_u64 {
            let mut rng = seed::rng(seed::derive(base, i));
            let x_len = rng.random_range(0..=10);
            let x = sample_word(&mut rng, x_len, a);
            let y_len = rng.random_range(0..=10);
            let y = sample_word(&mut rng, y_len, a);
            let z_len = rng.random_range(0..=10);
            let z = sample_word(&mut rng, z_len, a);
            let yz = y.multiply(&z)?;
            if x.multiply(&yz)? != x.multiply(&y)?.multiply(&z)?
                || !x.multiply(&x.invert())?.is_identity()
            {
                bad = Some(format!("({x},{y},{z})"));
                break;
            }
        }
        rows.push(scan_row("axioms/group-laws-random", bad).value(1000.0));
    }

    // |xy| <= |x| + |y| and |x^n| <= n|x|
    {
        let pairs = word_pairs(seed::derive(s, 3), 1000, 10, 10, a);
        let mut bad = None;
        for (i, (x, y)) in pairs.iter().enumerate() {
            let n = (i % 6 + 1) as i64;
            if x.multiply(y)?.len() > x.len() + y.len()
                || x.power(n).len() > n as usize * x.len()
            {
                bad = Some(format!("({x},{y})"));
                break;
            }
        }
        rows.push(scan_row("axioms/length-subadditivity", bad)
            .anchor("ng")
            .value(pairs.len() as f64));
    }

    // cyclic reduction postcondition + conjugacy class preservation
    {
        let pairs = word_pairs(seed::derive(s, 4), 500, 8, 12, a);
        let mut bad = None;
        for (g, x) in &pairs {
            let c = x.cyclic_reduce();
            let ends_cancel = !c.is_identity()
                && c.letters()[0].cancels(*c.letters().last().expect("non-empty"));
            if ends_cancel || !x.is_conjugate(&g.conjugate(x)?)? {
                bad = Some(format!("({g},{x})"));
                break;
            }
        }
        rows.push(scan_row("axioms/cyclic-reduce-postcondition", bad).value(500.0));
    }

    // abelianization is a homomorphism
    {
        let pairs = word_pairs(seed::derive(s, 5), 1000, 12, 12, a);
        let mut bad = None;
        for (x, y) in &pairs {
            if x.multiply(y)?.abelianize() != x.abelianize() + y.abelianize() {
                bad = Some(format!("({x},{y})"));
                break;
            }
        }
        rows.push(scan_row("axioms/abelianize-homomorphism", bad).value(1000.0));
    }

    // ball sizes against the no-backtrack recurrence
    {
        let rank = a.rank() as u64;
        let mut expected: u64 = 1;
        let mut layer: u64 = 1;
        let mut bad = None;
        for radius in 0..=7_usize {
            if radius > 0 {
                layer = if radius == 1 {
                    2 * rank
                } else {
                    layer * (2 * rank - 1)
                };
                expected += layer;
            }
            let ball = enumerate_ball(radius, a, &ctx.limits)?;
            let sorted = ball.windows(2).all(|p| p[0] < p[1]);
            if ball.len() as u64 != expected || !sorted {
                bad = Some(format!("radius {radius}: {} words", ball.len()));
                break;
            }
        }
        rows.push(scan_row("axioms/ball-counting", bad).value(7.0));
    }

    // seeded sampling is deterministic and hits the exact length
    {
        let base = seed::derive(s, 6);
        let mut bad = None;
        for i in 0..100_u64 {
            let len = (i % 15) as usize;
            let first = random_word(len, a, seed::derive(base, i));
            let second = random_word(len, a, seed::derive(base, i));
            if first != second || first.len() != len {
                bad = Some(format!("len {len}, draw {i}"));
                break;
            }
        }
        rows.push(scan_row("axioms/random-word-determinism", bad).value(100.0));
    }

    // edit distance bi-invariance d(gxh, gyh) = d(x, y), exact at unit weights
    {
        let base = seed::derive(s, 7);
        let mut bad = None;
        for i in 0..1000_u64 {
            let mut rng = seed::rng(seed::derive(base, i));
            let g_len = rng.random_range(0..=6);
            let g = sample_monoid_word(&mut rng, g_len, a);
            let h_len = rng.random_range(0..=6);
            let h = sample_monoid_word(&mut rng, h_len, a);
            let x_len = rng.random_range(0..=8);
            let x = sample_monoid_word(&mut rng, x_len, a);
            let y_len = rng.random_range(0..=8);
            let y = sample_monoid_word(&mut rng, y_len, a);
            let gxh = g.concat(&x)?.concat(&h)?;
            let gyh = g.concat(&y)?.concat(&h)?;
            if edit_distance(&gxh, &gyh, &unit)? != edit_distance(&x, &y, &unit)? {
                bad = Some(format!("g={g} h={h} x={x} y={y}"));
                break;
            }
        }
        rows.push(scan_row("axioms/edit-bi-invariance", bad)
            .anchor("d(gxh,gyh)=d(x,y)")
            .value(1000.0));
    }

    // wc symmetry: matchings invert
    {
        let sample = words(seed::derive(s, 8), 1000, 16, a);
        let mut bad = None;
        for x in &sample {
            let direct = wc_length(x, &unit, &ctx.limits)?.deficiency;
            let inverted = wc_length(&x.invert(), &unit, &ctx.limits)?.deficiency;
            if direct != inverted {
                bad = Some(x.to_string());
                break;
            }
        }
        rows.push(scan_row("axioms/wc-symmetry", bad).value(1000.0));
    }

    // wc triangle inequality
    {
        let pairs = word_pairs(seed::derive(s, 9), 1000, 16, 16, a);
        let mut bad = None;
        for (x, y) in &pairs {
            let xy = wc_length(&x.multiply(y)?, &unit, &ctx.limits)?.deficiency;
            let lx = wc_length(x, &unit, &ctx.limits)?.deficiency;
            let ly = wc_length(y, &unit, &ctx.limits)?.deficiency;
            if xy > lx + ly {
                bad = Some(format!("({x},{y})"));
                break;
            }
        }
        rows.push(scan_row("axioms/wc-triangle", bad).anchor("ng").value(1000.0));
    }

    // wc conjugation invariance, exact
    {
        let pairs = word_pairs(seed::derive(s, 10), 500, 8, 12, a);
        let mut bad = None;
        for (g, x) in &pairs {
            let conj = wc_length(&g.conjugate(x)?, &unit, &ctx.limits)?.deficiency;
            let plain = wc_length(x, &unit, &ctx.limits)?.deficiency;
            if conj != plain {
                bad = Some(format!("({g},{x})"));
                break;
            }
        }
        rows.push(scan_row("axioms/wc-conjugation-invariance", bad)
            .anchor("aci")
            .value(500.0));
    }

    // wc parity: each pair removes exactly two letters
    {
        let mut sample = words(seed::derive(s, 11), 1000, 16, a);
        sample.extend(enumerate_ball(6, a, &ctx.limits)?);
        let count = sample.len();
        let mut bad = None;
        for x in &sample {
            let d = wc_length(x, &unit, &ctx.limits)?.deficiency;
            if (d as usize) % 2 != x.len() % 2 {
                bad = Some(x.to_string());
                break;
            }
        }
        rows.push(scan_row("axioms/wc-parity", bad).value(count as f64));
    }

    // wc value is spelling-invariant: insert a cancelling pair anywhere
    {
        let base = seed::derive(s, 12);
        let mut bad = None;
        for i in 0..200_u64 {
            let mut rng = seed::rng(seed::derive(base, i));
            let x_len = rng.random_range(0..=10);
            let x = sample_word(&mut rng, x_len, a);
            let reduced = wc_length(&x, &unit, &ctx.limits)?.deficiency;
            let mut spelled: Vec<Letter> = x.letters().to_vec();
            let pos = rng.random_range(0..=spelled.len());
            let l = Letter::new(rng.random_range(0..a.rank()), rng.random_range(0..2) == 1);
            spelled.insert(pos, l.inverse());
            spelled.insert(pos, l);
            if reduced != wc_letters(&spelled, &unit, &ctx.limits)?.deficiency {
                bad = Some(format!("{x} with pair at {pos}"));
                break;
            }
        }
        rows.push(scan_row("axioms/wc-spelling-invariance", bad).value(200.0));
    }

    // returned matchings satisfy the axioms and reproduce the deficiency
    {
        let sample = words(seed::derive(s, 13), 200, 20, a);
        let mut bad = None;
        for x in &sample {
            let m = wc_length(x, &unit, &ctx.limits)?;
            if verify_matching(x.letters(), &m.pairs, &unit)? != m.deficiency {
                bad = Some(x.to_string());
                break;
            }
        }
        rows.push(scan_row("axioms/wc-witness-validity", bad).value(200.0));
    }

    // seminorm axioms for the rational extension of |n + sqrt(2) m|
    {
        let norm = RationalSeminorm::from_linear_form(&default_form(2));
        let base = seed::derive(s, 14);
        fn rational<R: Rng>(rng: &mut R) -> Rational {
            Rational::new(rng.random_range(-12..=12), rng.random_range(1..=12))
        }
        let mut worst: f64 = 0.0;
        let mut bad = None;
        for i in 0..1000_u64 {
            let mut rng = seed::rng(seed::derive(base, i));
            let p = [rational(&mut rng), rational(&mut rng)];
            let q = [rational(&mut rng), rational(&mut rng)];
            let alpha = rational(&mut rng);
            let np = norm.eval(&p)?;
            let nq = norm.eval(&q)?;
            let nsum = norm.eval(&[p[0] + q[0], p[1] + q[1]])?;
            let nscaled = norm.eval(&[alpha * p[0], alpha * p[1]])?;
            let alpha_f = *alpha.numer() as f64 / *alpha.denom() as f64;
            let triangle_excess = nsum - np - nq;
            let homogeneity_err = (nscaled - alpha_f.abs() * np).abs();
            worst = worst.max(triangle_excess).max(homogeneity_err);
            if np < 0.0 || triangle_excess > 1e-9 || homogeneity_err > 1e-9 {
                bad = Some(format!("p=({},{}) q=({},{}) alpha={alpha}", p[0], p[1], q[0], q[1]));
                break;
            }
        }
        rows.push(scan_row("axioms/seminorm-axioms", bad).value(worst).bound(1e-9));
    }

    Ok(rows)
}
