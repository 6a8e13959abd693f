//! Concrete length functions and the metrics they induce.
//!
//! The centerpiece is the non-crossing-matching length `wc`: pair up letters
//! `(i, j)` with `x_j = x_i⁻¹`, disjoint and non-crossing, and charge the
//! weight of whatever stays unmatched. The minimum charge over all matchings
//! is the length. It is computed by an interval DP and cross-checked by an
//! exhaustive matching oracle on short words.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::fmath;
use crate::words::{Letter, MonoidWord, Word};
use crate::{Error, Limits};

/// One positive weight per generator, shared between a letter and its
/// inverse.
#[derive(Clone, Debug, PartialEq)]
pub struct Weights {
    per_gen: Vec<f64>,
}

impl Weights {
    /// All weights 1.
    pub fn unit(rank: usize) -> Weights {
        Weights {
            per_gen: alloc::vec![1.0; rank],
        }
    }

    pub fn new(per_gen: Vec<f64>) -> Result<Weights, Error> {
        if per_gen.is_empty() || per_gen.iter().any(|w| !w.is_finite() || *w <= 0.0) {
            return Err(Error::InvalidWeights);
        }
        Ok(Weights { per_gen })
    }

    pub fn rank(&self) -> usize {
        self.per_gen.len()
    }

    pub fn of_letter(&self, l: Letter) -> f64 {
        self.per_gen[l.generator()]
    }

    pub fn total(&self, letters: &[Letter]) -> f64 {
        letters.iter().map(|&l| self.of_letter(l)).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.per_gen.iter().all(|&w| w == 1.0)
    }
}

/// The linear form `v ↦ |⟨coefficients, v⟩|` on abelian images.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearForm {
    coeffs: Vec<f64>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<f64>) -> Result<LinearForm, Error> {
        if coeffs.is_empty() || coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidWeights);
        }
        Ok(LinearForm { coeffs })
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    /// Signed value `⟨coefficients, v⟩`.
    pub fn dot(&self, exponents: &[i64]) -> f64 {
        self.coeffs
            .iter()
            .zip(exponents)
            .map(|(c, &e)| c * e as f64)
            .sum()
    }
}

/// Axiom flags carried by a [`LengthFn`]. These are claims to be tested, not
/// facts to be trusted; the analysis module checks them on samples.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct LengthFlags {
    /// `ℓ(x⁻¹) = ℓ(x)`.
    pub symmetric: bool,
    /// `ℓ(xy) ≤ ℓ(x) + ℓ(y)`.
    pub triangle: bool,
    /// Asserted `k` with `ℓ(xy) ≤ ℓ(x) + ℓ(y) + k`; `None` when no finite
    /// defect is claimed.
    pub triangle_defect: Option<f64>,
    /// `ℓ(gxg⁻¹) = ℓ(x)`.
    pub conjugation_invariant: bool,
    /// `ℓ(xⁿ) = |n|·ℓ(x)`.
    pub homogeneous: bool,
}

type EvalFn = dyn Fn(&Word) -> Result<f64, Error> + Send + Sync;

/// An evaluatable length (or semi-length) function with declared axiom flags
/// and an optional ball domain.
#[derive(Clone)]
pub struct LengthFn {
    name: String,
    flags: LengthFlags,
    domain_radius: Option<usize>,
    eval: Arc<EvalFn>,
}

impl fmt::Debug for LengthFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LengthFn")
            .field("name", &self.name)
            .field("flags", &self.flags)
            .field("domain_radius", &self.domain_radius)
            .finish_non_exhaustive()
    }
}

impl LengthFn {
    pub fn new(
        name: impl Into<String>,
        flags: LengthFlags,
        eval: impl Fn(&Word) -> Result<f64, Error> + Send + Sync + 'static,
    ) -> LengthFn {
        LengthFn {
            name: name.into(),
            flags,
            domain_radius: None,
            eval: Arc::new(eval),
        }
    }

    /// Restrict the domain to words of length at most `radius`.
    pub fn with_domain(mut self, radius: usize) -> LengthFn {
        self.domain_radius = Some(radius);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn flags(&self) -> LengthFlags {
        self.flags
    }

    pub fn domain_radius(&self) -> Option<usize> {
        self.domain_radius
    }

    pub fn eval(&self, x: &Word) -> Result<f64, Error> {
        if let Some(radius) = self.domain_radius {
            if x.len() > radius {
                return Err(Error::DomainExceeded {
                    len: x.len(),
                    radius,
                });
            }
        }
        (self.eval)(x)
    }

    /// Weighted word length.
    pub fn word(weights: Weights) -> LengthFn {
        LengthFn::new(
            "word",
            LengthFlags {
                symmetric: true,
                triangle: true,
                ..LengthFlags::default()
            },
            move |x| Ok(word_length(x, &weights)),
        )
    }

    /// Weighted cyclic length: homogeneous and conjugation invariant, but
    /// not subadditive.
    pub fn cyclic(weights: Weights) -> LengthFn {
        LengthFn::new(
            "cyc",
            LengthFlags {
                symmetric: true,
                conjugation_invariant: true,
                homogeneous: true,
                ..LengthFlags::default()
            },
            move |x| Ok(cyc_length(x, &weights)),
        )
    }

    /// Weighted non-crossing-matching length; domain capped at the DP limit.
    pub fn watson_crick(weights: Weights, limits: Limits) -> LengthFn {
        let dp_len = limits.dp_len;
        LengthFn::new(
            "wc",
            LengthFlags {
                symmetric: true,
                triangle: true,
                conjugation_invariant: true,
                ..LengthFlags::default()
            },
            move |x| wc_length(x, &weights, &limits).map(|m| m.deficiency),
        )
        .with_domain(dp_len)
    }

    /// Pullback of `|⟨coeffs, ·⟩|` along abelianization: an exactly
    /// homogeneous pseudo-length.
    pub fn pullback(form: LinearForm) -> LengthFn {
        LengthFn::new(
            "pullback",
            LengthFlags {
                symmetric: true,
                triangle: true,
                conjugation_invariant: true,
                homogeneous: true,
                ..LengthFlags::default()
            },
            move |x| Ok(pullback_length(x, &form)),
        )
    }
}

/// Sum of letter weights of the reduced form.
pub fn word_length(x: &Word, weights: &Weights) -> f64 {
    weights.total(x.letters())
}

/// Weighted length of the cyclically reduced form.
pub fn cyc_length(x: &Word, weights: &Weights) -> f64 {
    weights.total(x.cyclic_reduce().letters())
}

/// `|⟨coefficients, abelianize(x)⟩|`.
pub fn pullback_length(x: &Word, form: &LinearForm) -> f64 {
    fmath::abs(form.dot(x.abelianize().exponents()))
}

/// Length of the longest common (not necessarily contiguous) subsequence.
pub fn lcs(u: &MonoidWord, v: &MonoidWord) -> Result<usize, Error> {
    if u.alphabet() != v.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let a = u.letters();
    let b = v.letters();
    let mut row = alloc::vec![0_usize; b.len() + 1];
    for &la in a {
        let mut diag = 0;
        for (j, &lb) in b.iter().enumerate() {
            let up = row[j + 1];
            row[j + 1] = if la == lb {
                diag + 1
            } else {
                up.max(row[j])
            };
            diag = up;
        }
    }
    Ok(row[b.len()])
}

/// Maximum total weight of a common subsequence.
fn weighted_lcs(a: &[Letter], b: &[Letter], weights: &Weights) -> f64 {
    let mut row = alloc::vec![0.0_f64; b.len() + 1];
    for &la in a {
        let mut diag = 0.0;
        for (j, &lb) in b.iter().enumerate() {
            let up = row[j + 1];
            row[j + 1] = if la == lb {
                diag + weights.of_letter(la)
            } else {
                up.max(row[j])
            };
            diag = up;
        }
    }
    row[b.len()]
}

/// Minimal total weight of single-letter insertions and deletions turning
/// `u` into `v`: the bi-invariant edit distance on the free monoid.
pub fn edit_distance(u: &MonoidWord, v: &MonoidWord, weights: &Weights) -> Result<f64, Error> {
    if u.alphabet() != v.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let common = weighted_lcs(u.letters(), v.letters(), weights);
    Ok(weights.total(u.letters()) + weights.total(v.letters()) - 2.0 * common)
}

/// Breadth-first insert/delete oracle for the unit-weight edit distance.
/// Exponential in word length; for cross-checks only.
pub fn edit_distance_oracle(u: &MonoidWord, v: &MonoidWord) -> Result<usize, Error> {
    if u.alphabet() != v.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let rank = u.alphabet().rank();
    let max_len = u.len() + v.len();
    let target = v.letters().to_vec();

    let mut queue = alloc::collections::VecDeque::new();
    let mut seen = alloc::collections::BTreeSet::new();
    let start = u.letters().to_vec();
    seen.insert(start.clone());
    queue.push_back((start, 0_usize));
    while let Some((state, dist)) = queue.pop_front() {
        if state == target {
            return Ok(dist);
        }
        let mut push = |next: Vec<Letter>, queue: &mut alloc::collections::VecDeque<_>| {
            if seen.insert(next.clone()) {
                queue.push_back((next, dist + 1));
            }
        };
        for i in 0..state.len() {
            let mut next = state.clone();
            next.remove(i);
            push(next, &mut queue);
        }
        if state.len() < max_len {
            for i in 0..=state.len() {
                for g in 0..rank {
                    let mut next = state.clone();
                    next.insert(i, Letter::new(g, false));
                    push(next, &mut queue);
                }
            }
        }
    }
    unreachable!("target is always reachable by deletions and insertions")
}

/// An optimal non-crossing matching: the minimal unmatched weight and one
/// witness set of pairs attaining it.
#[derive(Clone, Debug, PartialEq)]
pub struct MatchingResult {
    pub deficiency: f64,
    /// Index pairs `(i, j)` with `i < j` into the matched letter sequence.
    pub pairs: Vec<(usize, usize)>,
}

const UNMATCHED: u32 = u32::MAX;

/// Interval DP over a raw letter sequence. `O(n³)` time, `O(n²)` space.
///
/// The recurrence either leaves the last letter of the interval unmatched or
/// pairs it with a compatible letter `k`, splitting the interval in two.
/// Witness backtracking is deterministic: the first strict improvement wins,
/// scanning `k` in increasing order, so ties go to the lowest pairing index.
pub fn wc_letters(letters: &[Letter], weights: &Weights, limits: &Limits) -> Result<MatchingResult, Error> {
    let n = letters.len();
    if n > limits.dp_len {
        return Err(Error::LimitExceeded {
            what: "matching DP length",
            requested: n as u64,
            limit: limits.dp_len as u64,
        });
    }
    if n == 0 {
        return Ok(MatchingResult {
            deficiency: 0.0,
            pairs: Vec::new(),
        });
    }

    let idx = |i: usize, j: usize| i * n + j;
    let mut value = alloc::vec![0.0_f64; n * n];
    let mut choice = alloc::vec![UNMATCHED; n * n];

    for j in 0..n {
        value[idx(j, j)] = weights.of_letter(letters[j]);
        for i in (0..j).rev() {
            // leave j unmatched
            let mut best = value[idx(i, j - 1)] + weights.of_letter(letters[j]);
            let mut best_choice = UNMATCHED;
            // or pair j with some k in [i, j)
            for k in i..j {
                if !letters[k].cancels(letters[j]) {
                    continue;
                }
                let left = if k > i { value[idx(i, k - 1)] } else { 0.0 };
                let inner = if k < j - 1 {
                    value[idx(k + 1, j - 1)]
                } else {
                    0.0
                };
                let cand = left + inner;
                if cand < best {
                    best = cand;
                    best_choice = k as u32;
                }
            }
            value[idx(i, j)] = best;
            choice[idx(i, j)] = best_choice;
        }
    }

    let mut pairs = Vec::new();
    let mut stack = alloc::vec![(0_usize, n - 1)];
    while let Some((i, j)) = stack.pop() {
        if i > j {
            continue;
        }
        if i == j {
            continue;
        }
        match choice[idx(i, j)] {
            UNMATCHED => {
                if j > i {
                    stack.push((i, j - 1));
                }
            }
            k => {
                let k = k as usize;
                pairs.push((k, j));
                if k > i {
                    stack.push((i, k - 1));
                }
                if k < j - 1 {
                    stack.push((k + 1, j - 1));
                }
            }
        }
    }
    pairs.sort_unstable();

    Ok(MatchingResult {
        deficiency: value[idx(0, n - 1)],
        pairs,
    })
}

/// Minimal-deficiency non-crossing matching of the reduced spelling of `x`.
pub fn wc_length(x: &Word, weights: &Weights, limits: &Limits) -> Result<MatchingResult, Error> {
    wc_letters(x.letters(), weights, limits)
}

/// Exhaustive enumeration of every valid non-crossing matching of the given
/// spelling; same value as [`wc_letters`], by a different route.
pub fn wc_letters_oracle(
    letters: &[Letter],
    weights: &Weights,
    limits: &Limits,
) -> Result<f64, Error> {
    let n = letters.len();
    if n > limits.oracle_len {
        return Err(Error::LimitExceeded {
            what: "matching oracle length",
            requested: n as u64,
            limit: limits.oracle_len as u64,
        });
    }
    let mut candidates = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if letters[i].cancels(letters[j]) {
                candidates.push((i, j));
            }
        }
    }
    let total = weights.total(letters);

    fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
        let ((i, j), (k, l)) = (a, b);
        (i < k && k < j && j < l) || (k < i && i < l && l < j)
    }

    struct Search<'a> {
        candidates: Vec<(usize, usize)>,
        letters: &'a [Letter],
        weights: &'a Weights,
        total: f64,
        chosen: Vec<(usize, usize)>,
        best: f64,
    }

    impl Search<'_> {
        // Every chain of pairwise-compatible candidates, taken in index
        // order, is visited exactly once; each visited node is one valid
        // matching.
        fn run(&mut self, from: usize, used: u64, matched: f64) {
            if self.total - matched < self.best {
                self.best = self.total - matched;
            }
            for c in from..self.candidates.len() {
                let (i, j) = self.candidates[c];
                let bits = (1 << i) | (1 << j);
                if used & bits != 0 || self.chosen.iter().any(|&p| crosses(p, (i, j))) {
                    continue;
                }
                let pair_weight =
                    self.weights.of_letter(self.letters[i]) + self.weights.of_letter(self.letters[j]);
                self.chosen.push((i, j));
                self.run(c + 1, used | bits, matched + pair_weight);
                self.chosen.pop();
            }
        }
    }

    let mut search = Search {
        candidates,
        letters,
        weights,
        total,
        chosen: Vec::new(),
        best: total,
    };
    search.run(0, 0, 0.0);
    Ok(search.best)
}

/// Oracle entry point for whole words.
pub fn wc_length_oracle(x: &Word, weights: &Weights, limits: &Limits) -> Result<f64, Error> {
    wc_letters_oracle(x.letters(), weights, limits)
}

/// Check the three matching axioms against a letter sequence and return the
/// deficiency the pairs realise.
pub fn verify_matching(
    letters: &[Letter],
    pairs: &[(usize, usize)],
    weights: &Weights,
) -> Result<f64, Error> {
    let n = letters.len();
    let mut used = alloc::vec![false; n];
    for &(i, j) in pairs {
        if i >= j || j >= n || used[i] || used[j] || !letters[i].cancels(letters[j]) {
            return Err(Error::ConjugacyWitnessInvalid);
        }
        used[i] = true;
        used[j] = true;
    }
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for &(k, l) in &pairs[a + 1..] {
            if (i < k && k < j && j < l) || (k < i && i < l && l < j) {
                return Err(Error::ConjugacyWitnessInvalid);
            }
        }
    }
    Ok(letters
        .iter()
        .enumerate()
        .filter(|(i, _)| !used[*i])
        .map(|(_, &l)| weights.of_letter(l))
        .sum())
}

/// The conjugation-invariant distance `d(u, v) = wc(u⁻¹ v)` on the free
/// group; restricts to the edit distance on positive words.
pub fn fg_distance(u: &Word, v: &Word, weights: &Weights, limits: &Limits) -> Result<f64, Error> {
    let rel = u.invert().multiply(v)?;
    Ok(wc_length(&rel, weights, limits)?.deficiency)
}

/// The left-invariant distance `d(x, y) = ℓ(x⁻¹ y)` induced by a length
/// function.
pub fn induced_distance(ell: &LengthFn, x: &Word, y: &Word) -> Result<f64, Error> {
    ell.eval(&x.invert().multiply(y)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed;
    use crate::words::{enumerate_ball, sample_monoid_word, Alphabet};

    fn ab() -> Alphabet {
        Alphabet::new(2).unwrap()
    }

    fn w(text: &str) -> Word {
        Word::parse(text, &ab()).unwrap()
    }

    fn m(text: &str) -> MonoidWord {
        MonoidWord::parse(text, &ab()).unwrap()
    }

    fn unit() -> Weights {
        Weights::unit(2)
    }

    fn wc(x: &Word) -> f64 {
        wc_length(x, &unit(), &Limits::default())
            .unwrap()
            .deficiency
    }

    #[test]
    fn word_length_examples() {
        assert_eq!(word_length(&w("abAB"), &unit()), 4.0);
        let c = w("aa").commutator(&w("bbb")).unwrap();
        assert_eq!(word_length(&c, &unit()), 10.0);
        for n in 1..=8 {
            assert_eq!(word_length(&w("baB").power(n), &unit()), n as f64 + 2.0);
        }
    }

    #[test]
    fn cyc_length_examples() {
        assert_eq!(cyc_length(&w("baB"), &unit()), 1.0);
        let c = w("aa").commutator(&w("bbb")).unwrap();
        assert_eq!(cyc_length(&c, &unit()), 10.0);
        assert_eq!(cyc_length(&w(""), &unit()), 0.0);
    }

    #[test]
    fn lcs_examples() {
        assert_eq!(lcs(&m("ab"), &m("ba")).unwrap(), 1);
        assert_eq!(lcs(&m("aabab"), &m("aabab")).unwrap(), 5);
        assert_eq!(lcs(&m("aab"), &m("ab")).unwrap(), 2);
    }

    #[test]
    fn edit_distance_examples() {
        // frozen from the BFS oracle
        assert_eq!(edit_distance_oracle(&m("ab"), &m("ba")).unwrap(), 2);
        assert_eq!(edit_distance(&m("ab"), &m("ba"), &unit()).unwrap(), 2.0);
        assert_eq!(edit_distance(&m("abab"), &m("abab"), &unit()).unwrap(), 0.0);
        assert_eq!(edit_distance(&m(""), &m("ab"), &unit()).unwrap(), 2.0);
    }

    #[test]
    fn wc_paper_values() {
        let c = w("abAB");
        assert_eq!(wc(&c), 2.0);
        assert_eq!(wc(&c.power(3)), 4.0);
        let c23 = w("aa").commutator(&w("bbb")).unwrap();
        assert_eq!(wc(&c23), 4.0);
        let weighted = Weights::new(alloc::vec![1.0, 5.0]).unwrap();
        assert_eq!(
            wc_length(&c23, &weighted, &Limits::default())
                .unwrap()
                .deficiency,
            4.0
        );
        assert_eq!(wc(&w("")), 0.0);
    }

    #[test]
    fn wc_oracle_on_given_spelling() {
        let limits = Limits::default();
        // unreduced spelling aA has a single matchable pair
        let letters = [Letter::new(0, false), Letter::new(0, true)];
        assert_eq!(wc_letters_oracle(&letters, &unit(), &limits).unwrap(), 0.0);
        assert_eq!(wc_length_oracle(&w("abAB"), &unit(), &limits).unwrap(), 2.0);
        assert_eq!(wc_length_oracle(&w("ab"), &unit(), &limits).unwrap(), 2.0);
    }

    #[test]
    fn wc_matches_oracle_exhaustively() {
        let limits = Limits::default();
        for word in enumerate_ball(6, &ab(), &limits).unwrap() {
            let dp = wc(&word);
            let oracle = wc_length_oracle(&word, &unit(), &limits).unwrap();
            assert_eq!(dp, oracle, "mismatch at {word}");
        }
    }

    #[test]
    fn wc_witness_is_valid() {
        let limits = Limits::default();
        for s in 0..200_u64 {
            let x = crate::words::random_word(12, &ab(), seed::derive(99, s));
            let res = wc_length(&x, &unit(), &limits).unwrap();
            let realized = verify_matching(x.letters(), &res.pairs, &unit()).unwrap();
            assert_eq!(realized, res.deficiency);
        }
    }

    #[test]
    fn fg_distance_examples() {
        let limits = Limits::default();
        assert_eq!(fg_distance(&w("ab"), &w("ab"), &unit(), &limits).unwrap(), 0.0);
        assert_eq!(fg_distance(&w("ab"), &w("ba"), &unit(), &limits).unwrap(), 2.0);
        assert_eq!(fg_distance(&w("a"), &w(""), &unit(), &limits).unwrap(), 1.0);
    }

    #[test]
    fn fg_restricts_to_edit_on_positive_words() {
        let limits = Limits::default();
        let mut rng = seed::rng(7);
        for _ in 0..100 {
            let u = sample_monoid_word(&mut rng, 5, &ab());
            let v = sample_monoid_word(&mut rng, 4, &ab());
            let d_group = fg_distance(&u.to_word(), &v.to_word(), &unit(), &limits).unwrap();
            let d_monoid = edit_distance(&u, &v, &unit()).unwrap();
            assert_eq!(d_group, d_monoid);
        }
    }

    #[test]
    fn pullback_examples() {
        let form = LinearForm::new(alloc::vec![1.0, core::f64::consts::SQRT_2]).unwrap();
        assert_eq!(pullback_length(&w("a"), &form), 1.0);
        assert_eq!(pullback_length(&w("b"), &form), core::f64::consts::SQRT_2);
        assert_eq!(pullback_length(&w("abAB"), &form), 0.0);
    }

    #[test]
    fn induced_distance_examples() {
        let word = LengthFn::word(unit());
        assert_eq!(induced_distance(&word, &w("ab"), &w("ab")).unwrap(), 0.0);
        assert_eq!(induced_distance(&word, &w("a"), &w("ab")).unwrap(), 1.0);
        let wcl = LengthFn::watson_crick(unit(), Limits::default());
        assert_eq!(induced_distance(&wcl, &w(""), &w("abAB")).unwrap(), 2.0);
    }

    #[test]
    fn domain_is_enforced() {
        let local = LengthFn::word(unit()).with_domain(3);
        assert!(matches!(
            local.eval(&w("abab")),
            Err(Error::DomainExceeded { len: 4, radius: 3 })
        ));
    }

    #[test]
    fn dp_limit_is_enforced() {
        let tight = Limits {
            dp_len: 4,
            ..Limits::default()
        };
        assert!(matches!(
            wc_length(&w("abABab"), &unit(), &tight),
            Err(Error::LimitExceeded { .. })
        ));
        let oracle_tight = Limits {
            oracle_len: 4,
            ..Limits::default()
        };
        assert!(matches!(
            wc_length_oracle(&w("abABab"), &unit(), &oracle_tight),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn homogeneity_failure_of_wc_is_witnessed() {
        let c = w("abAB");
        assert_eq!(wc(&c), 2.0);
        assert_eq!(wc(&c.power(3)), 4.0);
        assert_ne!(wc(&c.power(3)), 3.0 * wc(&c));
    }

    #[test]
    fn cyc_triangle_failure_is_witnessed() {
        let x = w("baB");
        let y = w("BAb");
        let xy = x.multiply(&y).unwrap();
        assert_eq!(cyc_length(&xy, &unit()), 6.0);
        assert_eq!(cyc_length(&x, &unit()) + cyc_length(&y, &unit()), 2.0);
    }
}
