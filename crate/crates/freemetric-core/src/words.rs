//! Exact arithmetic of reduced words in free groups and free monoids.
//!
//! Group elements are [`Word`]s: always stored freely reduced, so structural
//! equality is group equality. Monoid elements are [`MonoidWord`]s: positive
//! letters only and never reduced (the free monoid has no cancellation).
//! Text syntax: a lowercase letter is a generator, its uppercase form the
//! inverse, so `"abAB"` spells the commutator of the first two generators.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Add;

use rand::Rng;

use crate::{seed, Error, Limits};

/// Largest supported rank; one lowercase ASCII letter per generator.
pub const MAX_RANK: usize = 26;

#[derive(Debug)]
struct AlphabetData {
    names: Vec<char>,
}

/// A finite symmetric alphabet: `rank` generators with distinct single-letter
/// names (default `a`, `b`, ...), each paired with an uppercase inverse.
#[derive(Clone, Debug)]
pub struct Alphabet(Arc<AlphabetData>);

impl Alphabet {
    /// Alphabet on `rank` generators named `a`, `b`, ... in order.
    pub fn new(rank: usize) -> Result<Self, Error> {
        if rank == 0 {
            return Err(Error::InvalidAlphabet {
                reason: "rank must be at least 1",
            });
        }
        if rank > MAX_RANK {
            return Err(Error::InvalidAlphabet {
                reason: "rank exceeds 26",
            });
        }
        let names = (0..rank).map(|i| (b'a' + i as u8) as char).collect();
        Ok(Alphabet(Arc::new(AlphabetData { names })))
    }

    /// Alphabet with explicit generator names.
    pub fn with_names(names: &[char]) -> Result<Self, Error> {
        if names.is_empty() || names.len() > MAX_RANK {
            return Err(Error::InvalidAlphabet {
                reason: "rank must be between 1 and 26",
            });
        }
        for (i, &c) in names.iter().enumerate() {
            if !c.is_ascii_lowercase() {
                return Err(Error::InvalidAlphabet {
                    reason: "generator names must be lowercase ASCII letters",
                });
            }
            if names[..i].contains(&c) {
                return Err(Error::InvalidAlphabet {
                    reason: "generator names must be distinct",
                });
            }
        }
        Ok(Alphabet(Arc::new(AlphabetData {
            names: names.to_vec(),
        })))
    }

    pub fn rank(&self) -> usize {
        self.0.names.len()
    }

    /// Display name of generator `gen`.
    pub fn name(&self, gen: usize) -> char {
        self.0.names[gen]
    }

    fn letter_of_char(&self, c: char) -> Option<Letter> {
        let lower = c.to_ascii_lowercase();
        let gen = self.0.names.iter().position(|&n| n == lower)?;
        Some(Letter::new(gen, c.is_ascii_uppercase()))
    }

    fn display_letter(&self, l: Letter) -> char {
        let name = self.name(l.generator());
        if l.is_inverse() {
            name.to_ascii_uppercase()
        } else {
            name
        }
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.names == other.0.names
    }
}

impl Eq for Alphabet {}

/// A signed generator: `gen` is the 0-based generator index, `inv` marks the
/// inverse. The derived order `a < A < b < B < ...` is the letter order used
/// for lexicographic word comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    gen: u8,
    inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inv: bool) -> Letter {
        assert!(gen < MAX_RANK, "generator index out of range");
        Letter {
            gen: gen as u8,
            inv,
        }
    }

    pub fn generator(self) -> usize {
        self.gen as usize
    }

    pub fn is_inverse(self) -> bool {
        self.inv
    }

    pub fn sign(self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            gen: self.gen,
            inv: !self.inv,
        }
    }

    /// True when the two letters cancel as neighbours (`x x⁻¹`).
    pub fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inv != other.inv
    }

    /// All `2 * rank` letters in order.
    pub fn all(rank: usize) -> impl Iterator<Item = Letter> {
        (0..rank).flat_map(|g| [Letter::new(g, false), Letter::new(g, true)])
    }
}

/// Push a letter onto a freely reduced stack, cancelling if possible.
#[inline]
fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if out.last().is_some_and(|&top| top.cancels(l)) {
        out.pop();
    } else {
        out.push(l);
    }
}

/// Length of the reduced product of two already-reduced letter sequences,
/// without materializing it.
pub(crate) fn reduced_product_len(a: &[Letter], b: &[Letter]) -> usize {
    let mut c = 0;
    while c < a.len() && c < b.len() && a[a.len() - 1 - c].cancels(b[c]) {
        c += 1;
    }
    a.len() + b.len() - 2 * c
}

/// A freely reduced word; the universal free-group element.
///
/// The stored letter sequence is always reduced, so `PartialEq` is equality
/// in the group. `Ord` is shortlex: length first, then letter order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl Word {
    /// The identity element `e` (the empty word).
    pub fn identity(alphabet: &Alphabet) -> Word {
        Word {
            alphabet: alphabet.clone(),
            letters: Vec::new(),
        }
    }

    /// Parse the `a`/`A` text syntax into a reduced word.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Word, Error> {
        let mut letters = Vec::with_capacity(text.len());
        for (position, c) in text.chars().enumerate() {
            let l = alphabet
                .letter_of_char(c)
                .ok_or(Error::UnknownSymbol { position })?;
            push_reduced(&mut letters, l);
        }
        Ok(Word {
            alphabet: alphabet.clone(),
            letters,
        })
    }

    /// Build a word from raw letters, reducing as needed.
    pub fn from_letters(
        alphabet: &Alphabet,
        letters: impl IntoIterator<Item = Letter>,
    ) -> Result<Word, Error> {
        let mut out = Vec::new();
        for l in letters {
            if l.generator() >= alphabet.rank() {
                return Err(Error::AlphabetMismatch);
            }
            push_reduced(&mut out, l);
        }
        Ok(Word {
            alphabet: alphabet.clone(),
            letters: out,
        })
    }

    pub(crate) fn from_reduced(alphabet: &Alphabet, letters: Vec<Letter>) -> Word {
        debug_assert!(letters.windows(2).all(|w| !w[0].cancels(w[1])));
        Word {
            alphabet: alphabet.clone(),
            letters,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Number of letters of the reduced form.
    #[allow(clippy::len_without_is_empty)] // is_identity plays that role
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_alphabet(&self, other: &Word) -> Result<(), Error> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    /// Freely reduced product `self · rhs`.
    pub fn multiply(&self, rhs: &Word) -> Result<Word, Error> {
        self.check_alphabet(rhs)?;
        let mut out = self.letters.clone();
        for &l in &rhs.letters {
            push_reduced(&mut out, l);
        }
        Ok(Word::from_reduced(&self.alphabet, out))
    }

    /// `self⁻¹`: reversed sequence with all signs flipped.
    pub fn invert(&self) -> Word {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        Word::from_reduced(&self.alphabet, letters)
    }

    /// Reduced `selfⁿ`; negative exponents invert.
    pub fn power(&self, n: i64) -> Word {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut out = Vec::new();
        for _ in 0..n.unsigned_abs() {
            for &l in &base.letters {
                push_reduced(&mut out, l);
            }
        }
        Word::from_reduced(&self.alphabet, out)
    }

    /// Reduced `self · x · self⁻¹`.
    pub fn conjugate(&self, x: &Word) -> Result<Word, Error> {
        self.multiply(x)?.multiply(&self.invert())
    }

    /// Reduced commutator `self · y · self⁻¹ · y⁻¹`.
    pub fn commutator(&self, y: &Word) -> Result<Word, Error> {
        self.multiply(y)?
            .multiply(&self.invert())?
            .multiply(&y.invert())
    }

    /// Strip matching first/last inverse pairs until none remain.
    pub fn cyclic_reduce(&self) -> Word {
        let mut i = 0;
        let mut j = self.letters.len();
        while j - i >= 2 && self.letters[i].cancels(self.letters[j - 1]) {
            i += 1;
            j -= 1;
        }
        Word::from_reduced(&self.alphabet, self.letters[i..j].to_vec())
    }

    /// True iff the cyclic reductions are related by a cyclic rotation.
    pub fn is_conjugate(&self, other: &Word) -> Result<bool, Error> {
        self.check_alphabet(other)?;
        let a = self.cyclic_reduce();
        let b = other.cyclic_reduce();
        let n = a.letters.len();
        if n != b.letters.len() {
            return Ok(false);
        }
        if n == 0 {
            return Ok(true);
        }
        Ok((0..n).any(|s| (0..n).all(|i| a.letters[(s + i) % n] == b.letters[i])))
    }

    /// Signed generator-count vector; a homomorphism onto `Z^rank`.
    pub fn abelianize(&self) -> AbelianImage {
        let mut exps = alloc::vec![0_i64; self.alphabet.rank()];
        for l in &self.letters {
            exps[l.generator()] += l.sign();
        }
        AbelianImage(exps)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    /// Shortlex: by length, then lexicographically in letter order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            write!(f, "{}", self.alphabet.display_letter(l))?;
        }
        Ok(())
    }
}

/// The abelian image of a word: one exponent per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianImage(Vec<i64>);

impl AbelianImage {
    pub fn zero(rank: usize) -> AbelianImage {
        AbelianImage(alloc::vec![0; rank])
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }
}

impl Add for AbelianImage {
    type Output = AbelianImage;

    fn add(self, rhs: AbelianImage) -> AbelianImage {
        assert_eq!(self.0.len(), rhs.0.len(), "rank mismatch");
        AbelianImage(
            self.0
                .iter()
                .zip(rhs.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

/// Number of reduced words of length exactly `len`.
fn reduced_count(rank: usize, len: usize) -> u128 {
    if len == 0 {
        return 1;
    }
    let r = rank as u128;
    let mut count = 2 * r;
    for _ in 1..len {
        count = count.saturating_mul(2 * r - 1);
    }
    count
}

/// All reduced words of length at most `radius`, each exactly once, in
/// shortlex order. Guarded by [`Limits`] against exponential blowups.
pub fn enumerate_ball(
    radius: usize,
    alphabet: &Alphabet,
    limits: &Limits,
) -> Result<Vec<Word>, Error> {
    if radius > limits.ball_radius {
        return Err(Error::LimitExceeded {
            what: "ball radius",
            requested: radius as u64,
            limit: limits.ball_radius as u64,
        });
    }
    let total: u128 = (0..=radius).map(|l| reduced_count(alphabet.rank(), l)).sum();
    if total > limits.ball_words as u128 {
        return Err(Error::LimitExceeded {
            what: "ball size",
            requested: total.min(u64::MAX as u128) as u64,
            limit: limits.ball_words,
        });
    }

    let mut out = Vec::with_capacity(total as usize);
    out.push(Word::identity(alphabet));
    let mut frontier: Vec<Vec<Letter>> = alloc::vec![Vec::new()];
    for _ in 0..radius {
        let mut next = Vec::with_capacity(frontier.len() * (2 * alphabet.rank() - 1));
        for stem in &frontier {
            for l in Letter::all(alphabet.rank()) {
                if stem.last().is_some_and(|&top| top.cancels(l)) {
                    continue;
                }
                let mut w = stem.clone();
                w.push(l);
                next.push(w);
            }
        }
        for w in &next {
            out.push(Word::from_reduced(alphabet, w.clone()));
        }
        frontier = next;
    }
    Ok(out)
}

/// Uniformly random reduced word of exactly `length` letters (no-backtrack
/// walk), drawn from `rng`.
pub fn sample_word<R: Rng + ?Sized>(rng: &mut R, length: usize, alphabet: &Alphabet) -> Word {
    let rank = alphabet.rank();
    let mut letters: Vec<Letter> = Vec::with_capacity(length);
    for _ in 0..length {
        let l = match letters.last() {
            None => {
                let i = rng.random_range(0..2 * rank);
                Letter::new(i / 2, i % 2 == 1)
            }
            Some(&prev) => {
                let forbidden = prev.inverse();
                let forbidden_idx = 2 * forbidden.generator() + forbidden.is_inverse() as usize;
                let mut i = rng.random_range(0..2 * rank - 1);
                if i >= forbidden_idx {
                    i += 1;
                }
                Letter::new(i / 2, i % 2 == 1)
            }
        };
        letters.push(l);
    }
    Word::from_reduced(alphabet, letters)
}

/// Seeded wrapper around [`sample_word`]; deterministic per seed.
pub fn random_word(length: usize, alphabet: &Alphabet, seed: u64) -> Word {
    sample_word(&mut seed::rng(seed), length, alphabet)
}

/// A word in the free monoid: positive letters only, never reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidWord {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl MonoidWord {
    pub fn empty(alphabet: &Alphabet) -> MonoidWord {
        MonoidWord {
            alphabet: alphabet.clone(),
            letters: Vec::new(),
        }
    }

    /// Parse lowercase generator text; uppercase letters are rejected.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<MonoidWord, Error> {
        let mut letters = Vec::with_capacity(text.len());
        for (position, c) in text.chars().enumerate() {
            let l = alphabet
                .letter_of_char(c)
                .ok_or(Error::UnknownSymbol { position })?;
            if l.is_inverse() {
                return Err(Error::NegativeLetterInMonoid { position });
            }
            letters.push(l);
        }
        Ok(MonoidWord {
            alphabet: alphabet.clone(),
            letters,
        })
    }

    pub fn from_letters(
        alphabet: &Alphabet,
        letters: impl IntoIterator<Item = Letter>,
    ) -> Result<MonoidWord, Error> {
        let mut out = Vec::new();
        for (position, l) in letters.into_iter().enumerate() {
            if l.generator() >= alphabet.rank() {
                return Err(Error::AlphabetMismatch);
            }
            if l.is_inverse() {
                return Err(Error::NegativeLetterInMonoid { position });
            }
            out.push(l);
        }
        Ok(MonoidWord {
            alphabet: alphabet.clone(),
            letters: out,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation; the monoid product.
    pub fn concat(&self, rhs: &MonoidWord) -> Result<MonoidWord, Error> {
        if self.alphabet != rhs.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        Ok(MonoidWord {
            alphabet: self.alphabet.clone(),
            letters,
        })
    }

    /// The embedding into the free group; positive words are already reduced.
    pub fn to_word(&self) -> Word {
        Word::from_reduced(&self.alphabet, self.letters.clone())
    }
}

impl fmt::Display for MonoidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            write!(f, "{}", self.alphabet.display_letter(l))?;
        }
        Ok(())
    }
}

/// Random positive word of exactly `length` letters.
pub fn sample_monoid_word<R: Rng + ?Sized>(
    rng: &mut R,
    length: usize,
    alphabet: &Alphabet,
) -> MonoidWord {
    let letters = (0..length)
        .map(|_| Letter::new(rng.random_range(0..alphabet.rank()), false))
        .collect::<Vec<_>>();
    MonoidWord {
        alphabet: alphabet.clone(),
        letters,
    }
}
