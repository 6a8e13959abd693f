//! Quantitative checks of the inequality machinery connecting triangle
//! defects, homogeneity defects, conjugation invariance, and commutator
//! bounds.
//!
//! The central quantity is the homogeneity defect `c`: the best constant
//! with `ℓ(x²) ≥ 2ℓ(x) − c`. Together with subadditivity it pins the length
//! of every commutator below `5c`, uniformly in the arguments. Sampled
//! estimates of `c` are certified lower bounds only: exceeding `5ĉ` can
//! demand a better defect witness but never counts as a hard failure.
//! Asserted constants do fail hard.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use rand::Rng;

use crate::fmath;
use crate::length::{LengthFlags, LengthFn, LinearForm};
use crate::words::{enumerate_ball, sample_word, Alphabet, Word};
use crate::{seed, Error, Limits};

/// Comparison tolerance for floating-point pass/fail decisions.
pub const TOL: f64 = 1e-9;

/// How a sample of words is drawn; stored in reports for provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SampleSpec {
    /// Every reduced word of length at most `radius`.
    Ball { radius: usize },
    /// `count` random reduced words of length uniform in `0..=max_len`,
    /// word `i` depending only on `(seed, i)`.
    Random {
        count: u64,
        max_len: usize,
        seed: u64,
    },
}

impl SampleSpec {
    pub fn materialize(&self, alphabet: &Alphabet, limits: &Limits) -> Result<Vec<Word>, Error> {
        match *self {
            SampleSpec::Ball { radius } => enumerate_ball(radius, alphabet, limits),
            SampleSpec::Random {
                count,
                max_len,
                seed: base,
            } => Ok((0..count)
                .map(|i| {
                    let mut rng = seed::rng(seed::derive(base, i));
                    let len = rng.random_range(0..=max_len);
                    sample_word(&mut rng, len, alphabet)
                })
                .collect()),
        }
    }
}

impl fmt::Display for SampleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SampleSpec::Ball { radius } => write!(f, "ball(radius={radius})"),
            SampleSpec::Random {
                count,
                max_len,
                seed,
            } => write!(f, "random(count={count},max_len={max_len},seed={seed})"),
        }
    }
}

/// Largest triangle excess `ℓ(xy) − ℓ(x) − ℓ(y)` seen over a pair sample.
/// Non-positive certifies subadditivity on the sample.
#[derive(Clone, Debug)]
pub struct TriangleDefect {
    pub k_hat: f64,
    pub witness: (Word, Word),
}

pub fn triangle_defect(ell: &LengthFn, pairs: &[(Word, Word)]) -> Result<TriangleDefect, Error> {
    let mut best: Option<TriangleDefect> = None;
    for (x, y) in pairs {
        let xy = x.multiply(y)?;
        let excess = ell.eval(&xy)? - ell.eval(x)? - ell.eval(y)?;
        if best.as_ref().is_none_or(|b| excess > b.k_hat) {
            best = Some(TriangleDefect {
                k_hat: excess,
                witness: (x.clone(), y.clone()),
            });
        }
    }
    best.ok_or(Error::EmptySample)
}

/// The shifted function `ℓ + k`. If `ℓ` only satisfies the triangle
/// inequality up to defect `k`, the shift repairs it, at the cost of moving
/// the quasi-homogeneity constant from `c` to `c + k`.
pub fn shift(ell: &LengthFn, k: f64) -> LengthFn {
    assert!(k >= 0.0 && k.is_finite(), "shift must be non-negative");
    let old = ell.flags();
    let flags = LengthFlags {
        symmetric: old.symmetric,
        triangle: old.triangle || old.triangle_defect.is_some_and(|d| d <= k),
        triangle_defect: old.triangle_defect.map(|d| (d - k).max(0.0)),
        conjugation_invariant: old.conjugation_invariant,
        homogeneous: old.homogeneous && k == 0.0,
    };
    let inner = ell.clone();
    let name = alloc::format!("{}+{k}", ell.name());
    let shifted = LengthFn::new(name, flags, move |x| Ok(inner.eval(x)? + k));
    match ell.domain_radius() {
        Some(r) => shifted.with_domain(r),
        None => shifted,
    }
}

/// A sampled estimate of the homogeneity defect, with its argmax witness and
/// the sample it came from. Always a lower bound on the true constant.
#[derive(Clone, Debug)]
pub struct DefectReport {
    pub c_hat: f64,
    pub witness: Word,
    pub sample: SampleSpec,
}

/// Estimate `sup 2ℓ(z) − ℓ(z²)` over a sample.
///
/// For a subadditive `ℓ` every term is non-negative, so the raw maximum is
/// reported; the clamp to zero only applies to floating-point noise on
/// functions whose triangle flag is set.
pub fn homogeneity_defect(
    ell: &LengthFn,
    spec: &SampleSpec,
    alphabet: &Alphabet,
    limits: &Limits,
) -> Result<DefectReport, Error> {
    let sample = spec.materialize(alphabet, limits)?;
    let mut best: Option<(f64, Word)> = None;
    for z in &sample {
        let value = 2.0 * ell.eval(z)? - ell.eval(&z.power(2))?;
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, z.clone()));
        }
    }
    let (mut c_hat, witness) = best.ok_or(Error::EmptySample)?;
    if ell.flags().triangle && c_hat < 0.0 {
        c_hat = 0.0;
    }
    Ok(DefectReport {
        c_hat,
        witness,
        sample: spec.clone(),
    })
}

/// Margins for the two power bounds: `ℓ(xⁿ) ≤ n·ℓ(x)` from subadditivity and
/// the rearranged doubling bound `ℓ(x) ≤ ℓ(xⁿ)/n + c`. A negative margin is
/// a violation.
#[derive(Clone, Copy, Debug)]
pub struct PowerBounds {
    pub upper_margin: f64,
    pub upper_ok: bool,
    pub lower_margin: f64,
    pub lower_ok: bool,
    /// Margin for the sharper `ℓ(x) ≤ ℓ(xⁿ)/n + log₂(n)·c/n` form, when
    /// requested. Off by default.
    pub log2_margin: Option<f64>,
}

pub fn power_bounds_check(
    ell: &LengthFn,
    c: f64,
    x: &Word,
    n: u64,
    log2_form: bool,
) -> Result<PowerBounds, Error> {
    assert!(n >= 2 && n.is_power_of_two(), "n must be a power of two >= 2");
    let lx = ell.eval(x)?;
    let lxn = ell.eval(&x.power(n as i64))?;
    let upper_margin = n as f64 * lx - lxn;
    let lower_margin = lxn / n as f64 + c - lx;
    let log2_margin = log2_form.then(|| {
        let log2n = (63 - n.leading_zeros() as i64) as f64;
        lxn / n as f64 + log2n * c / n as f64 - lx
    });
    Ok(PowerBounds {
        upper_margin,
        upper_ok: upper_margin >= -TOL,
        lower_margin,
        lower_ok: lower_margin >= -TOL,
        log2_margin,
    })
}

/// One approximate-conjugation-invariance row: `ℓ(yxy⁻¹) ≤ ℓ(x) + c`.
#[derive(Clone, Debug)]
pub struct ConjRow {
    pub conjugator: Word,
    pub x: Word,
    pub value: f64,
    pub bound: f64,
    pub margin: f64,
    pub ok: bool,
}

pub fn conjugation_check(
    ell: &LengthFn,
    c: f64,
    pairs: &[(Word, Word)],
) -> Result<Vec<ConjRow>, Error> {
    pairs
        .iter()
        .map(|(y, x)| {
            let value = ell.eval(&y.conjugate(x)?)?;
            let bound = ell.eval(x)? + c;
            Ok(ConjRow {
                conjugator: y.clone(),
                x: x.clone(),
                value,
                bound,
                margin: bound - value,
                ok: bound - value >= -TOL,
            })
        })
        .collect()
}

/// Witness tuple for the splitting inequality: `x = s(wy)s⁻¹ = t(zw⁻¹)t⁻¹`
/// forces `ℓ(x) ≤ (ℓ(y) + ℓ(z))/2 + 3c/2`.
#[derive(Clone, Debug)]
pub struct SplitWitness {
    pub x: Word,
    pub y: Word,
    pub z: Word,
    pub w: Word,
    pub s: Word,
    pub t: Word,
}

#[derive(Clone, Copy, Debug)]
pub struct SplitReport {
    pub value: f64,
    pub bound: f64,
    pub margin: f64,
    pub ok: bool,
}

pub fn splitting_check(ell: &LengthFn, c: f64, w: &SplitWitness) -> Result<SplitReport, Error> {
    let wy = w.w.multiply(&w.y)?;
    let zw_inv = w.z.multiply(&w.w.invert())?;
    if w.s.conjugate(&wy)? != w.x || w.t.conjugate(&zw_inv)? != w.x {
        return Err(Error::ConjugacyWitnessInvalid);
    }
    let value = ell.eval(&w.x)?;
    let bound = (ell.eval(&w.y)? + ell.eval(&w.z)?) / 2.0 + 1.5 * c;
    Ok(SplitReport {
        value,
        bound,
        margin: bound - value,
        ok: bound - value >= -TOL,
    })
}

/// The grid `f(m, k) = ℓ(x^m [x,y]^k)` together with the cells violating the
/// two-point recursion `f(m,k) ≤ (f(m−1,k) + f(m+1,k−1))/2 + 2c`. The pair
/// `(x, y)` is kept so any cell can be recomputed.
#[derive(Clone, Debug)]
pub struct FmkTable {
    pub x: Word,
    pub y: Word,
    pub m_max: i64,
    pub k_max: i64,
    values: Vec<f64>,
    pub violations: Vec<FmkViolation>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FmkViolation {
    pub m: i64,
    pub k: i64,
    pub excess: f64,
}

impl FmkTable {
    pub fn value(&self, m: i64, k: i64) -> f64 {
        debug_assert!(m.abs() <= self.m_max && (0..=self.k_max).contains(&k));
        self.values[((m + self.m_max) * (self.k_max + 1) + k) as usize]
    }
}

/// Violations certify that `c` underestimates the true constant for `ℓ`;
/// they are monotone in `c` (raising `c` never creates one).
pub fn fmk_table(
    ell: &LengthFn,
    c: f64,
    x: &Word,
    y: &Word,
    m_max: i64,
    k_max: i64,
) -> Result<FmkTable, Error> {
    assert!(m_max >= 1 && k_max >= 1, "grid must be non-trivial");
    let comm = x.commutator(y)?;
    let mut values = Vec::with_capacity(((2 * m_max + 1) * (k_max + 1)) as usize);
    for m in -m_max..=m_max {
        let xm = x.power(m);
        for k in 0..=k_max {
            let word = xm.multiply(&comm.power(k))?;
            values.push(ell.eval(&word)?);
        }
    }
    let mut table = FmkTable {
        x: x.clone(),
        y: y.clone(),
        m_max,
        k_max,
        values,
        violations: Vec::new(),
    };
    for m in (-m_max + 1)..m_max {
        for k in 1..=k_max {
            let excess =
                table.value(m, k) - (table.value(m - 1, k) + table.value(m + 1, k - 1)) / 2.0 - 2.0 * c;
            if excess > TOL {
                table.violations.push(FmkViolation { m, k, excess });
            }
        }
    }
    Ok(table)
}

/// Statistics for the ±1-walk estimate of `E|Y₁ + … + Y₂ₙ| ≤ √(2n)`.
#[derive(Clone, Copy, Debug)]
pub struct WalkStats {
    /// Half the number of steps; a power of two.
    pub n: u64,
    /// Monte Carlo trials, or the number of enumerated outcomes in exact
    /// mode.
    pub trials: u64,
    pub mean_abs: f64,
    pub std_err: f64,
    /// `√(2n)`.
    pub bound: f64,
    pub exact: bool,
    /// `mean ≤ bound` within three standard errors; `None` when the sample
    /// is too small to judge.
    pub bound_ok: Option<bool>,
    /// Optional [`walk_coefficient`] of the length/pair the walk is coupled
    /// to, making `A·√(2n)` readable off the stats.
    pub coefficient_a: Option<f64>,
}

impl WalkStats {
    pub fn with_coefficient(mut self, a: f64) -> WalkStats {
        self.coefficient_a = Some(a);
        self
    }
}

/// Exact enumeration of all `2^(2n)` sign sequences; feasible for `2n ≤ 20`.
pub fn walk_exact(n: u64) -> Result<WalkStats, Error> {
    assert!(n >= 1 && n.is_power_of_two(), "n must be a power of two");
    let steps = 2 * n;
    if steps > 20 {
        return Err(Error::LimitExceeded {
            what: "exact walk steps",
            requested: steps,
            limit: 20,
        });
    }
    // E|S| = 2^(-2n) * sum_j C(2n, j) * |2j - 2n|
    let mut total: u64 = 0;
    let mut binom: u64 = 1;
    for j in 0..=steps {
        let displacement = (2 * j as i64 - steps as i64).unsigned_abs();
        total += binom * displacement;
        binom = binom * (steps - j) / (j + 1);
    }
    let outcomes = 1_u64 << steps;
    let mean_abs = total as f64 / outcomes as f64;
    let bound = fmath::sqrt(steps as f64);
    Ok(WalkStats {
        n,
        trials: outcomes,
        mean_abs,
        std_err: 0.0,
        bound,
        exact: true,
        bound_ok: Some(mean_abs <= bound + TOL),
        coefficient_a: None,
    })
}

/// Monte Carlo estimate over seeded trials; trial `i` depends only on
/// `(seed, i)`.
pub fn walk_monte_carlo(n: u64, trials: u64, seed_value: u64) -> WalkStats {
    assert!(n >= 1 && n.is_power_of_two(), "n must be a power of two");
    assert!(trials >= 1, "at least one trial");
    let steps = 2 * n;
    let words = steps.div_ceil(64);
    let last_mask = if steps.is_multiple_of(64) {
        u64::MAX
    } else {
        (1_u64 << (steps % 64)) - 1
    };
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for i in 0..trials {
        let mut rng = seed::rng(seed::derive(seed_value, i));
        let mut ones: u64 = 0;
        for w in 0..words {
            let mut bits: u64 = rng.random();
            if w == words - 1 {
                bits &= last_mask;
            }
            ones += bits.count_ones() as u64;
        }
        // sum of ±1 over `steps` fair bits
        let s = (2 * ones as i64 - steps as i64).unsigned_abs() as f64;
        sum += s;
        sum_sq += s * s;
    }
    let mean_abs = sum / trials as f64;
    let std_err = if trials >= 2 {
        let var = (sum_sq - trials as f64 * mean_abs * mean_abs) / (trials - 1) as f64;
        fmath::sqrt(var.max(0.0) / trials as f64)
    } else {
        0.0
    };
    let bound = fmath::sqrt(steps as f64);
    // a single trial has no spread estimate; skip the check rather than
    // misreport it
    let bound_ok = (trials >= 2).then_some(mean_abs <= bound + 3.0 * std_err + TOL);
    WalkStats {
        n,
        trials,
        mean_abs,
        std_err,
        bound,
        exact: false,
        bound_ok,
        coefficient_a: None,
    }
}

/// The constant `A = max(ℓ(x), ℓ(x⁻¹)) + max(ℓ([x,y]), ℓ([x,y]⁻¹))/2`
/// controlling the walk-coupled estimate of `f(0, n)`.
pub fn walk_coefficient(ell: &LengthFn, x: &Word, y: &Word) -> Result<f64, Error> {
    let comm = x.commutator(y)?;
    let a = ell.eval(x)?.max(ell.eval(&x.invert())?);
    let b = ell.eval(&comm)?.max(ell.eval(&comm.invert())?);
    Ok(a + b / 2.0)
}

/// Source of the homogeneity constant in commutator reports: an asserted
/// bound makes failures hard; a sampled estimate can only demand a better
/// defect witness.
#[derive(Clone, Debug)]
pub enum DefectConstant {
    Asserted(f64),
    Sampled(DefectReport),
}

impl DefectConstant {
    pub fn value(&self) -> f64 {
        match self {
            DefectConstant::Asserted(c) => *c,
            DefectConstant::Sampled(report) => report.c_hat,
        }
    }
}

/// Search space for defect witnesses: a small ball plus the power family
/// `x^m [x,y]^k` along which the defect actually accumulates.
#[derive(Clone, Copy, Debug)]
pub struct WitnessSearch {
    pub radius: usize,
    pub m_max: i64,
    pub k_max: i64,
}

impl Default for WitnessSearch {
    fn default() -> Self {
        WitnessSearch {
            radius: 4,
            m_max: 3,
            k_max: 3,
        }
    }
}

#[derive(Clone, Debug)]
pub enum CommutatorStatus {
    Pass,
    Fail,
    /// `ℓ([x,y])` exceeds `5ĉ` for a sampled `ĉ`: the `5c` bound then forces
    /// a defect witness with `2ℓ(z) − ℓ(z²) ≥ ℓ([x,y])/5` to exist somewhere;
    /// `improved` carries the best one the bounded search found.
    NeedsWitness { improved: Option<(Word, f64)> },
}

#[derive(Clone, Debug)]
pub struct CommutatorRow {
    pub x: Word,
    pub y: Word,
    pub value: f64,
    pub bound: f64,
    pub status: CommutatorStatus,
}

/// Check `ℓ([x,y]) ≤ 5c` for every pair.
pub fn commutator_report(
    ell: &LengthFn,
    c: &DefectConstant,
    pairs: &[(Word, Word)],
    search: &WitnessSearch,
    limits: &Limits,
) -> Result<Vec<CommutatorRow>, Error> {
    let bound = 5.0 * c.value();
    let mut rows = Vec::with_capacity(pairs.len());
    for (x, y) in pairs {
        let value = ell.eval(&x.commutator(y)?)?;
        let status = if value <= bound + TOL {
            CommutatorStatus::Pass
        } else {
            match c {
                DefectConstant::Asserted(_) => CommutatorStatus::Fail,
                DefectConstant::Sampled(_) => CommutatorStatus::NeedsWitness {
                    improved: defect_witness_search(ell, x, y, value, search, limits)?,
                },
            }
        };
        rows.push(CommutatorRow {
            x: x.clone(),
            y: y.clone(),
            value,
            bound,
            status,
        });
    }
    Ok(rows)
}

/// Scan the witness space for the largest `2ℓ(z) − ℓ(z²)`; returns the best
/// candidate when it explains the observed commutator length.
fn defect_witness_search(
    ell: &LengthFn,
    x: &Word,
    y: &Word,
    value: f64,
    search: &WitnessSearch,
    limits: &Limits,
) -> Result<Option<(Word, f64)>, Error> {
    let alphabet = x.alphabet();
    let mut best: Option<(Word, f64)> = None;
    let consider = |z: &Word, best: &mut Option<(Word, f64)>| {
        let (Ok(lz), Ok(lz2)) = (ell.eval(z), ell.eval(&z.power(2))) else {
            return; // outside the domain; not a usable witness
        };
        let defect = 2.0 * lz - lz2;
        if best.as_ref().is_none_or(|(_, b)| defect > *b) {
            *best = Some((z.clone(), defect));
        }
    };
    for z in enumerate_ball(search.radius, alphabet, limits)? {
        consider(&z, &mut best);
    }
    let comm = x.commutator(y)?;
    for m in -search.m_max..=search.m_max {
        let xm = x.power(m);
        for k in 0..=search.k_max {
            let z = xm.multiply(&comm.power(k))?;
            consider(&z, &mut best);
        }
    }
    Ok(best.filter(|(_, defect)| 5.0 * defect >= value - TOL))
}

#[derive(Clone, Debug)]
pub struct ClRow {
    pub word: Word,
    /// Upper bound on the commutator length, by construction.
    pub cl_upper: usize,
    pub value: f64,
    pub bound: f64,
    pub ok: bool,
}

/// Build random products of `k` commutators (so `cl ≤ k` by construction)
/// and check `ℓ(x) ≤ (5k + 1)c`; valid since the bound is monotone in `cl`.
pub fn cl_bound_check(
    ell: &LengthFn,
    c: f64,
    k: usize,
    max_len: usize,
    seed_value: u64,
    samples: u64,
    alphabet: &Alphabet,
) -> Result<Vec<ClRow>, Error> {
    let bound = (5.0 * k as f64 + 1.0) * c;
    let mut rows = Vec::with_capacity(samples as usize);
    for i in 0..samples {
        let mut rng = seed::rng(seed::derive(seed_value, i));
        let mut product = Word::identity(alphabet);
        for _ in 0..k {
            let la = rng.random_range(1..=max_len);
            let a = sample_word(&mut rng, la, alphabet);
            let lb = rng.random_range(1..=max_len);
            let b = sample_word(&mut rng, lb, alphabet);
            product = product.multiply(&a.commutator(&b)?)?;
        }
        let value = ell.eval(&product)?;
        rows.push(ClRow {
            word: product,
            cl_upper: k,
            value,
            bound,
            ok: value <= bound + TOL,
        });
    }
    Ok(rows)
}

/// A power-of-two homogenization estimate with its certified bracket: every
/// deeper power-of-two estimate lies in `[estimate − c, estimate]`.
#[derive(Clone, Copy, Debug)]
pub struct HomogenizeResult {
    pub estimate: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
}

/// Estimate the homogenization `lim ℓ(xⁿ)/n` at depth `n`.
///
/// Subadditivity makes the estimates non-increasing in `n`, and the
/// rearranged doubling bound keeps any deeper estimate within `c` below the
/// current one; the bracket is oriented accordingly.
pub fn homogenize(ell: &LengthFn, x: &Word, n: u64, c: f64) -> Result<HomogenizeResult, Error> {
    assert!(n >= 2 && n.is_power_of_two(), "n must be a power of two >= 2");
    let estimate = ell.eval(&x.power(n as i64))? / n as f64;
    Ok(HomogenizeResult {
        estimate,
        bracket_lo: estimate - c,
        bracket_hi: estimate,
    })
}

/// Largest pointwise gap `|ℓ₁(x) − ℓ₂(x)|` over a sample; bounded gaps mean
/// the two functions are equivalent.
#[derive(Clone, Debug)]
pub struct EquivalenceGap {
    pub gap: f64,
    pub witness: Word,
}

pub fn equivalence_gap(
    ell1: &LengthFn,
    ell2: &LengthFn,
    sample: &[Word],
) -> Result<EquivalenceGap, Error> {
    let mut best: Option<EquivalenceGap> = None;
    for x in sample {
        let gap = fmath::abs(ell1.eval(x)? - ell2.eval(x)?);
        if best.as_ref().is_none_or(|b| gap > b.gap) {
            best = Some(EquivalenceGap {
                gap,
                witness: x.clone(),
            });
        }
    }
    best.ok_or(Error::EmptySample)
}

pub type Rational = Ratio<i64>;

type BaseLength = dyn Fn(&[i64]) -> f64 + Send + Sync;

/// The rational extension `‖q‖ = ℓ(n·q)/n` of a homogeneous length on `Z^d`,
/// with `n` clearing denominators. Well-defined exactly because the base is
/// homogeneous, which is spot-checked on every evaluation.
#[derive(Clone)]
pub struct RationalSeminorm {
    dim: usize,
    base: Arc<BaseLength>,
}

impl fmt::Debug for RationalSeminorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RationalSeminorm")
            .field("dim", &self.dim)
            .finish_non_exhaustive()
    }
}

impl RationalSeminorm {
    pub fn new(dim: usize, base: impl Fn(&[i64]) -> f64 + Send + Sync + 'static) -> Self {
        RationalSeminorm {
            dim,
            base: Arc::new(base),
        }
    }

    /// The seminorm `v ↦ |⟨coeffs, v⟩|` on `Z^d`, extended to `Q^d`.
    pub fn from_linear_form(form: &LinearForm) -> Self {
        let form = form.clone();
        RationalSeminorm::new(form.dim(), move |v| fmath::abs(form.dot(v)))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Evaluate at a rational vector.
    pub fn eval(&self, q: &[Rational]) -> Result<f64, Error> {
        if q.len() != self.dim {
            return Err(Error::DimensionMismatch);
        }
        let mut n: i64 = 1;
        for r in q {
            n = n.checked_div(n.gcd(r.denom())).ok_or(Error::Overflow)?
                .checked_mul(*r.denom())
                .ok_or(Error::Overflow)?;
        }
        let v: Vec<i64> = q
            .iter()
            .map(|r| {
                r.numer()
                    .checked_mul(n / r.denom())
                    .ok_or(Error::Overflow)
            })
            .collect::<Result<_, _>>()?;
        let value = (self.base)(&v);
        // spot-check homogeneity on the multiple actually used
        let doubled: Vec<i64> = v
            .iter()
            .map(|&c| c.checked_mul(2).ok_or(Error::Overflow))
            .collect::<Result<_, _>>()?;
        let scale = value.max(1.0);
        if fmath::abs((self.base)(&doubled) - 2.0 * value) > TOL * scale {
            return Err(Error::NotHomogeneous);
        }
        Ok(value / n as f64)
    }
}
