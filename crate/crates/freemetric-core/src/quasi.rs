//! Brooks counting quasimorphisms and the pseudo-lengths they induce.
//!
//! For a reduced pattern `w`, the Brooks function counts the maximal number
//! of non-overlapping contiguous occurrences of `w` in a reduced word, minus
//! the count for `w⁻¹`. Its defect is bounded, and `x ↦ |f(x)| + D` is a
//! pseudo-length with quasi-homogeneity constant `2D` that grows linearly on
//! powers of `w`.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use crate::fmath;
use crate::length::{LengthFlags, LengthFn};
use crate::words::{sample_word, Alphabet, Word};
use crate::{seed, Error, Limits};

/// A non-trivial reduced pattern word for a Brooks quasimorphism.
#[derive(Clone, Debug, PartialEq)]
pub struct BrooksPattern {
    word: Word,
}

impl BrooksPattern {
    pub fn new(word: Word) -> Result<BrooksPattern, Error> {
        if word.is_identity() {
            return Err(Error::EmptyPattern);
        }
        Ok(BrooksPattern { word })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }
}

/// Maximum number of pairwise non-overlapping contiguous occurrences of the
/// pattern in the reduced spelling of `g`. Greedy leftmost scan, which is
/// optimal for a single fixed-length pattern.
pub fn count_nonoverlap(pattern: &BrooksPattern, g: &Word) -> usize {
    let p = pattern.word.letters();
    let t = g.letters();
    let mut count = 0;
    let mut i = 0;
    while i + p.len() <= t.len() {
        if &t[i..i + p.len()] == p {
            count += 1;
            i += p.len();
        } else {
            i += 1;
        }
    }
    count
}

/// Exhaustive maximum over all subsets of pairwise non-overlapping occurrence
/// positions; cross-check for the greedy count on short words.
pub fn count_nonoverlap_oracle(
    pattern: &BrooksPattern,
    g: &Word,
    limits: &Limits,
) -> Result<usize, Error> {
    if g.len() > limits.oracle_len + 2 {
        return Err(Error::LimitExceeded {
            what: "occurrence oracle length",
            requested: g.len() as u64,
            limit: limits.oracle_len as u64 + 2,
        });
    }
    let p = pattern.word.letters();
    let t = g.letters();
    let starts: Vec<usize> = (0..t.len().saturating_sub(p.len() - 1))
        .filter(|&i| &t[i..i + p.len()] == p)
        .collect();

    fn best(starts: &[usize], from: usize, min_start: usize, len: usize) -> usize {
        let mut max = 0;
        for (offset, &s) in starts[from..].iter().enumerate() {
            if s < min_start {
                continue;
            }
            let taken = 1 + best(starts, from + offset + 1, s + len, len);
            max = max.max(taken);
        }
        max
    }

    Ok(best(&starts, 0, 0, p.len()))
}

/// Signed non-overlapping occurrence count: pattern minus inverse pattern.
pub fn brooks_value(pattern: &BrooksPattern, g: &Word) -> i64 {
    let inverse = BrooksPattern {
        word: pattern.word.invert(),
    };
    count_nonoverlap(pattern, g) as i64 - count_nonoverlap(&inverse, g) as i64
}

/// Provenance of a defect bound: asserted by the caller or sampled (and thus
/// only a certified lower bound on the true defect).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Asserted,
    Sampled,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DefectBound {
    pub value: f64,
    pub provenance: Provenance,
}

type QmEval = dyn Fn(&Word) -> f64 + Send + Sync;

/// A real-valued function on the free group with (claimed) bounded defect
/// `D(f) = sup |f(xy) − f(x) − f(y)|`.
#[derive(Clone)]
pub struct Quasimorphism {
    name: String,
    odd: bool,
    defect_bound: Option<DefectBound>,
    eval: Arc<QmEval>,
}

impl fmt::Debug for Quasimorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Quasimorphism")
            .field("name", &self.name)
            .field("odd", &self.odd)
            .field("defect_bound", &self.defect_bound)
            .finish_non_exhaustive()
    }
}

impl Quasimorphism {
    pub fn new(
        name: impl Into<String>,
        odd: bool,
        eval: impl Fn(&Word) -> f64 + Send + Sync + 'static,
    ) -> Quasimorphism {
        Quasimorphism {
            name: name.into(),
            odd,
            defect_bound: None,
            eval: Arc::new(eval),
        }
    }

    /// The Brooks quasimorphism of a pattern. `f(x⁻¹) = −f(x)` holds since
    /// occurrences of `w` in `g⁻¹` biject with occurrences of `w⁻¹` in `g`.
    pub fn brooks(pattern: BrooksPattern) -> Quasimorphism {
        let name = alloc::format!("brooks[{}]", pattern.word());
        Quasimorphism::new(name, true, move |g| brooks_value(&pattern, g) as f64)
    }

    /// The homomorphism `x ↦ ⟨coeffs, ab(x)⟩`; zero defect by construction.
    pub fn abelian(coeffs: Vec<f64>) -> Quasimorphism {
        Quasimorphism {
            name: String::from("abelian"),
            odd: true,
            defect_bound: Some(DefectBound {
                value: 0.0,
                provenance: Provenance::Asserted,
            }),
            eval: Arc::new(move |g: &Word| {
                coeffs
                    .iter()
                    .zip(g.abelianize().exponents())
                    .map(|(c, &e)| c * e as f64)
                    .sum()
            }),
        }
    }

    pub fn eval(&self, x: &Word) -> f64 {
        (self.eval)(x)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Whether `f(x⁻¹) = −f(x)` is claimed.
    pub fn is_odd(&self) -> bool {
        self.odd
    }

    pub fn defect_bound(&self) -> Option<DefectBound> {
        self.defect_bound
    }

    pub fn with_defect_bound(
        mut self,
        value: f64,
        provenance: Provenance,
    ) -> Result<Quasimorphism, Error> {
        if !value.is_finite() || value < 0.0 {
            return Err(Error::NegativeDefect);
        }
        self.defect_bound = Some(DefectBound { value, provenance });
        Ok(self)
    }
}

/// Result of sampling the defect `|f(xy) − f(x) − f(y)|` over random pairs.
/// The bound is always a certified lower bound on the true defect.
#[derive(Clone, Debug)]
pub struct DefectSample {
    pub lower_bound: f64,
    pub witness: (Word, Word),
    pub pair_count: u64,
    pub max_len: usize,
    pub seed: u64,
}

/// Sample `pair_count` pairs of random reduced words of length at most
/// `max_len` and take the largest defect seen. Pair `i` depends only on
/// `(seed, i)`, so enlarging the sample never changes earlier pairs.
pub fn defect_sample(
    f: &Quasimorphism,
    alphabet: &Alphabet,
    pair_count: u64,
    max_len: usize,
    seed_value: u64,
) -> DefectSample {
    let mut best = -1.0;
    let mut witness = (Word::identity(alphabet), Word::identity(alphabet));
    for i in 0..pair_count {
        let mut rng = seed::rng(seed::derive(seed_value, i));
        let lx = rng.random_range(0..=max_len);
        let x = sample_word(&mut rng, lx, alphabet);
        let ly = rng.random_range(0..=max_len);
        let y = sample_word(&mut rng, ly, alphabet);
        let xy = x.multiply(&y).expect("same alphabet");
        let defect = fmath::abs(f.eval(&xy) - f.eval(&x) - f.eval(&y));
        if defect > best {
            best = defect;
            witness = (x, y);
        }
    }
    DefectSample {
        lower_bound: best.max(0.0),
        witness,
        pair_count,
        max_len,
        seed: seed_value,
    }
}

/// A power-of-two homogenization step `f(xⁿ)/n`, with the bracket half-width
/// `D·(1 − 1/n)` when a defect bound is attached to `f`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Homogenized {
    pub value: f64,
    pub half_width: Option<f64>,
}

/// Approximate the homogenization of `f` at `x` using the power `n`.
///
/// `n` must be a power of two, at least 2.
pub fn qm_homogenize(f: &Quasimorphism, x: &Word, n: u64) -> Homogenized {
    assert!(n >= 2 && n.is_power_of_two(), "n must be a power of two >= 2");
    let value = f.eval(&x.power(n as i64)) / n as f64;
    let half_width = f
        .defect_bound()
        .map(|d| d.value * (1.0 - 1.0 / n as f64));
    Homogenized { value, half_width }
}

/// The pseudo-length `x ↦ |f(x)| + D`. Satisfies the triangle inequality
/// whenever `D` dominates the true defect, with quasi-homogeneity constant
/// `2D`.
pub fn induced_pseudolength(f: &Quasimorphism, defect: f64) -> Result<LengthFn, Error> {
    if !defect.is_finite() || defect < 0.0 {
        return Err(Error::NegativeDefect);
    }
    let name = alloc::format!("|{}|+{defect}", f.name());
    let flags = LengthFlags {
        symmetric: f.is_odd(),
        triangle: true,
        ..LengthFlags::default()
    };
    let f = f.clone();
    Ok(LengthFn::new(name, flags, move |x| {
        Ok(fmath::abs(f.eval(x)) + defect)
    }))
}

/// One row of a homogenized-commutator check against the `3D` bound.
#[derive(Clone, Debug)]
pub struct QmCommutatorRow {
    pub x: Word,
    pub y: Word,
    pub homogenized: f64,
    pub bound: f64,
    /// `|f̄([x,y])| ≤ 3D` within tolerance; a failure means the supplied
    /// defect underestimates the true one.
    pub consistent: bool,
}

/// Homogenize `f` on each commutator `[x, y]` via the power `n` and compare
/// against `3·defect`.
pub fn qm_commutator_report(
    f: &Quasimorphism,
    defect: f64,
    pairs: &[(Word, Word)],
    n: u64,
) -> Result<Vec<QmCommutatorRow>, Error> {
    if !defect.is_finite() || defect < 0.0 {
        return Err(Error::NegativeDefect);
    }
    let bound = 3.0 * defect;
    pairs
        .iter()
        .map(|(x, y)| {
            let c = x.commutator(y)?;
            let homogenized = fmath::abs(qm_homogenize(f, &c, n).value);
            Ok(QmCommutatorRow {
                x: x.clone(),
                y: y.clone(),
                homogenized,
                bound,
                consistent: homogenized <= bound + 1e-9,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    fn ab() -> Alphabet {
        Alphabet::new(2).unwrap()
    }

    fn w(text: &str) -> Word {
        Word::parse(text, &ab()).unwrap()
    }

    fn pat(text: &str) -> BrooksPattern {
        BrooksPattern::new(w(text)).unwrap()
    }

    #[test]
    fn count_examples() {
        // frozen from the exhaustive occurrence oracle
        assert_eq!(
            count_nonoverlap_oracle(&pat("ab"), &w("abab"), &Limits::default()).unwrap(),
            2
        );
        assert_eq!(count_nonoverlap(&pat("ab"), &w("abab")), 2);
        assert_eq!(count_nonoverlap(&pat("ab"), &w("")), 0);
        assert_eq!(count_nonoverlap(&pat("abAB"), &w("abAB")), 1);
    }

    #[test]
    fn greedy_matches_oracle_on_samples() {
        let limits = Limits::default();
        let a = ab();
        for s in 0..300_u64 {
            let mut rng = seed::rng(seed::derive(3, s));
            let plen = rng.random_range(1..=3);
            let p = BrooksPattern::new(sample_word(&mut rng, plen, &a)).unwrap();
            let glen = rng.random_range(0..=14);
            let g = sample_word(&mut rng, glen, &a);
            assert_eq!(
                count_nonoverlap(&p, &g),
                count_nonoverlap_oracle(&p, &g, &limits).unwrap(),
                "pattern {} in {}",
                p.word(),
                g
            );
        }
    }

    #[test]
    fn brooks_examples() {
        let p = pat("abAB");
        assert_eq!(brooks_value(&p, &w("abAB").power(3)), 3);
        assert_eq!(brooks_value(&p, &w("")), 0);
        assert_eq!(brooks_value(&pat("ab"), &w("BA")), -1);
    }

    #[test]
    fn brooks_power_linearity() {
        for n in 0..=10 {
            let p = pat("abAB");
            assert_eq!(brooks_value(&p, &p.word().power(n)), n);
        }
    }

    #[test]
    fn brooks_antisymmetry_sampled() {
        let a = ab();
        for s in 0..200_u64 {
            let mut rng = seed::rng(seed::derive(11, s));
            let plen = rng.random_range(1..=4);
            let p = BrooksPattern::new(sample_word(&mut rng, plen, &a)).unwrap();
            let glen = rng.random_range(0..=20);
            let g = sample_word(&mut rng, glen, &a);
            assert_eq!(brooks_value(&p, &g.invert()), -brooks_value(&p, &g));
        }
    }

    #[test]
    fn defect_sample_finds_brooks_defect() {
        let f = Quasimorphism::brooks(pat("ab"));
        let sample = defect_sample(&f, &ab(), 200, 6, 5);
        assert!(sample.lower_bound >= 1.0);
        // the witness reproduces its own defect
        let (x, y) = &sample.witness;
        let xy = x.multiply(y).unwrap();
        assert_eq!(
            fmath::abs(f.eval(&xy) - f.eval(x) - f.eval(y)),
            sample.lower_bound
        );
    }

    #[test]
    fn defect_sample_deterministic_and_monotone() {
        let f = Quasimorphism::brooks(pat("ab"));
        let a = ab();
        let s1 = defect_sample(&f, &a, 50, 6, 9);
        let s2 = defect_sample(&f, &a, 50, 6, 9);
        assert_eq!(s1.lower_bound, s2.lower_bound);
        assert_eq!(s1.witness, s2.witness);
        let mut prev = 0.0;
        for count in [10, 20, 40, 80] {
            let s = defect_sample(&f, &a, count, 6, 9);
            assert!(s.lower_bound >= prev);
            prev = s.lower_bound;
        }
    }

    #[test]
    fn abelian_quasimorphism_has_zero_defect() {
        let f = Quasimorphism::abelian(alloc::vec![1.0, core::f64::consts::SQRT_2]);
        let sample = defect_sample(&f, &ab(), 200, 8, 1);
        assert!(sample.lower_bound <= 1e-12);
    }

    #[test]
    fn homogenize_examples() {
        let f = Quasimorphism::brooks(pat("abAB"));
        for n in [2, 8, 64] {
            assert_eq!(qm_homogenize(&f, &w("abAB"), n).value, 1.0);
        }
        assert_eq!(qm_homogenize(&f, &w("a"), 64).value, 0.0);
        assert_eq!(qm_homogenize(&f, &w(""), 4).value, 0.0);
        let bounded = f.with_defect_bound(3.0, Provenance::Asserted).unwrap();
        let h = qm_homogenize(&bounded, &w("abAB"), 4);
        assert_eq!(h.half_width, Some(3.0 * (1.0 - 0.25)));
    }

    #[test]
    fn induced_pseudolength_examples() {
        let f = Quasimorphism::brooks(pat("abAB"));
        let ell = induced_pseudolength(&f, 2.0).unwrap();
        for n in 0..=8 {
            let x = w("abAB").power(n);
            assert_eq!(ell.eval(&x).unwrap(), n as f64 + 2.0);
        }
        assert_eq!(ell.eval(&w("")).unwrap(), 2.0);
        assert!(induced_pseudolength(&f, -1.0).is_err());
        let zero = Quasimorphism::new("zero", true, |_| 0.0);
        let z = induced_pseudolength(&zero, 0.0).unwrap();
        assert_eq!(z.eval(&w("abab")).unwrap(), 0.0);
    }

    #[test]
    fn commutator_report_rows() {
        let f = Quasimorphism::brooks(pat("abAB"));
        let pairs = alloc::vec![(w("a"), w("b"))];
        let rows = qm_commutator_report(&f, 1.0, &pairs, 64).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].homogenized, 1.0);
        assert!(rows[0].consistent);

        let lin = Quasimorphism::abelian(alloc::vec![1.0, 2.0]);
        let rows = qm_commutator_report(&lin, 0.0, &pairs, 64).unwrap();
        assert_eq!(rows[0].homogenized, 0.0);
        assert!(rows[0].consistent);

        assert!(qm_commutator_report(&f, 1.0, &[], 8).unwrap().is_empty());
    }
}
