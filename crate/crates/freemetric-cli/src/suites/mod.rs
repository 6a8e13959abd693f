//! Verification suites behind `freemetric verify`.
//!
//! Each suite builds rows deterministically from the run seed: suite `k`
//! derives its own seed, and every sampled row inside derives again from a
//! fixed per-row counter, so adding rows never reshuffles existing samples
//! and rows could be evaluated in any order.

use freemetric_core::words::{sample_word, Alphabet, Word};
use freemetric_core::{seed, Limits};
use rand::Rng;

use crate::report::{Row, Status};
use crate::CliError;

mod axioms;
mod defects;
mod embedding;
mod oracles;
mod paper_values;
mod so3;
mod walk;

pub const SUITES: [&str; 7] = [
    "axioms",
    "oracles",
    "paper-values",
    "embedding",
    "defects",
    "walk",
    "so3",
];

const SALT_AXIOMS: u64 = 1;
const SALT_ORACLES: u64 = 2;
const SALT_PAPER: u64 = 3;
const SALT_EMBEDDING: u64 = 4;
const SALT_DEFECTS: u64 = 5;
const SALT_WALK: u64 = 6;
const SALT_SO3: u64 = 7;

#[derive(Clone, Debug)]
pub struct SuiteCtx {
    pub seed: u64,
    pub limits: Limits,
    pub alphabet: Alphabet,
    /// Override for the walk suite: total number of ±1 steps.
    pub walk_steps: Option<u64>,
    pub walk_trials: Option<u64>,
    pub walk_exact: bool,
}

impl SuiteCtx {
    pub fn new(seed: u64, limits: Limits) -> SuiteCtx {
        SuiteCtx {
            seed,
            limits,
            alphabet: Alphabet::new(2).expect("rank 2"),
            walk_steps: None,
            walk_trials: None,
            walk_exact: false,
        }
    }

    fn suite_seed(&self, salt: u64) -> u64 {
        seed::derive(self.seed, salt)
    }
}

/// Run one suite (or `all`) and return its rows.
pub fn run_suite(name: &str, ctx: &SuiteCtx) -> Result<Vec<Row>, CliError> {
    let rows = match name {
        "axioms" => axioms::rows(ctx, ctx.suite_seed(SALT_AXIOMS)),
        "oracles" => oracles::rows(ctx, ctx.suite_seed(SALT_ORACLES)),
        "paper-values" => paper_values::rows(ctx, ctx.suite_seed(SALT_PAPER)),
        "embedding" => embedding::rows(ctx, ctx.suite_seed(SALT_EMBEDDING)),
        "defects" => defects::rows(ctx, ctx.suite_seed(SALT_DEFECTS)),
        "walk" => walk::rows(ctx, ctx.suite_seed(SALT_WALK)),
        "so3" => so3::rows(ctx, ctx.suite_seed(SALT_SO3)),
        "all" => {
            let mut rows = Vec::new();
            for suite in SUITES {
                rows.extend(run_suite(suite, ctx)?);
            }
            return Ok(rows);
        }
        other => {
            return Err(CliError(format!(
                "unknown suite '{other}'; expected one of {} or all",
                SUITES.join(", ")
            )))
        }
    };
    rows.map_err(|e| CliError(format!("suite {name}: {e}")))
}

/// A scan row: pass when no counterexample was recorded, fail carrying the
/// counterexample as witness.
fn scan_row(id: &str, counterexample: Option<String>) -> Row {
    match counterexample {
        None => Row::new(id, Status::Pass),
        Some(witness) => Row::new(id, Status::Fail).witness(witness),
    }
}

/// `count` random words, lengths uniform in `0..=max_len`; word `i` depends
/// only on `(seed, i)`.
fn words(seed_value: u64, count: u64, max_len: usize, alphabet: &Alphabet) -> Vec<Word> {
    (0..count)
        .map(|i| {
            let mut rng = seed::rng(seed::derive(seed_value, i));
            let len = rng.random_range(0..=max_len);
            sample_word(&mut rng, len, alphabet)
        })
        .collect()
}

fn word_pairs(
    seed_value: u64,
    count: u64,
    max_x: usize,
    max_y: usize,
    alphabet: &Alphabet,
) -> Vec<(Word, Word)> {
    (0..count)
        .map(|i| {
            let mut rng = seed::rng(seed::derive(seed_value, i));
            let lx = rng.random_range(0..=max_x);
            let x = sample_word(&mut rng, lx, alphabet);
            let ly = rng.random_range(0..=max_y);
            let y = sample_word(&mut rng, ly, alphabet);
            (x, y)
        })
        .collect()
}

/// Every positive word of length at most `max_len`, in generation order.
fn all_monoid_words(
    alphabet: &Alphabet,
    max_len: usize,
) -> Vec<freemetric_core::words::MonoidWord> {
    use freemetric_core::words::{Letter, MonoidWord};
    let mut out = vec![MonoidWord::empty(alphabet)];
    let mut frontier = vec![Vec::<Letter>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for stem in &frontier {
            for g in 0..alphabet.rank() {
                let mut w = stem.clone();
                w.push(Letter::new(g, false));
                next.push(w);
            }
        }
        for w in &next {
            out.push(MonoidWord::from_letters(alphabet, w.iter().copied()).expect("positive"));
        }
        frontier = next;
    }
    out
}
