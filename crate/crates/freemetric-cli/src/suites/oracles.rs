//! Implementation-vs-oracle equivalence: the matching DP against exhaustive
//! matching enumeration, the LCS edit distance against breadth-first move
//! search, greedy occurrence counting against exhaustive subsets, and cyclic
//! reduction against conjugation minimization.

use std::collections::{BTreeMap, VecDeque};

use freemetric_core::length::{edit_distance, wc_length, wc_length_oracle, Weights};
use freemetric_core::quasi::{count_nonoverlap, count_nonoverlap_oracle, BrooksPattern};
use freemetric_core::words::{enumerate_ball, sample_word, Alphabet, Letter, MonoidWord, Word};
use freemetric_core::{seed, Error};
use rand::Rng;

use super::{all_monoid_words, scan_row, words, SuiteCtx};
use crate::report::Row;

pub fn rows(ctx: &SuiteCtx, s: u64) -> Result<Vec<Row>, Error> {
    let a = &ctx.alphabet;
    let unit = Weights::unit(a.rank());
    let mut rows = Vec::new();

    // DP vs exhaustive matchings: every reduced word of length <= 8
    {
        let ball = enumerate_ball(8, a, &ctx.limits)?;
        let mut bad = None;
        for x in &ball {
            let dp = wc_length(x, &unit, &ctx.limits)?.deficiency;
            if dp != wc_length_oracle(x, &unit, &ctx.limits)? {
                bad = Some(x.to_string());
                break;
            }
        }
        rows.push(scan_row("oracles/wc-dp-vs-exhaustive-ball8", bad).value(ball.len() as f64));
    }

    // DP vs exhaustive matchings: random words up to the oracle limit
    {
        let sample = words(seed::derive(s, 1), 500, 12, a);
        let mut bad = None;
        for x in &sample {
            let dp = wc_length(x, &unit, &ctx.limits)?.deficiency;
            if dp != wc_length_oracle(x, &unit, &ctx.limits)? {
                bad = Some(x.to_string());
                break;
            }
        }
        rows.push(scan_row("oracles/wc-dp-vs-exhaustive-random12", bad).value(500.0));
    }

    // LCS edit distance vs BFS over insert/delete moves: all pairs <= 5
    {
        let all = all_monoid_words(a, 5);
        let mut bad = None;
        let mut pairs = 0_u64;
        'outer: for u in &all {
            let distances = bfs_edit_distances(u, a, 10);
            for v in &all {
                pairs += 1;
                if edit_distance(u, v, &unit)? != distances[v.letters()] as f64 {
                    bad = Some(format!("({u},{v})"));
                    break 'outer;
                }
            }
        }
        rows.push(scan_row("oracles/edit-lcs-vs-bfs-ball5", bad).value(pairs as f64));
    }

    // greedy occurrence count vs exhaustive subsets, |g| <= 14:
    // seeded samples plus periodic worst cases
    {
        let base = seed::derive(s, 2);
        let mut checked = 0_u64;
        let mut bad = None;
        for i in 0..1500_u64 {
            let mut rng = seed::rng(seed::derive(base, i));
            let p_len = rng.random_range(1..=4);
            let p = BrooksPattern::new(sample_word(&mut rng, p_len, a)).expect("non-empty");
            let g_len = rng.random_range(0..=14);
            let g = sample_word(&mut rng, g_len, a);
            checked += 1;
            if count_nonoverlap(&p, &g) != count_nonoverlap_oracle(&p, &g, &ctx.limits)? {
                bad = Some(format!("{} in {g}", p.word()));
                break;
            }
        }
        // periodic patterns maximize overlap pressure on the greedy scan
        for pattern_text in ["a", "ab", "aab", "aba", "abA"] {
            let p = BrooksPattern::new(Word::parse(pattern_text, a)?).expect("non-empty");
            for reps in 1..=6 {
                let long = p.word().power(reps);
                for cut in 0..=long.len().min(14) {
                    let g = Word::from_letters(a, long.letters()[..cut].iter().copied())?;
                    checked += 1;
                    if count_nonoverlap(&p, &g) != count_nonoverlap_oracle(&p, &g, &ctx.limits)? {
                        bad = Some(format!("{pattern_text} in {g}"));
                    }
                }
            }
        }
        rows.push(scan_row("oracles/count-nonoverlap-vs-exhaustive", bad).value(checked as f64));
    }

    // cyclic reduction vs conjugation minimization on B(4)
    {
        let ball = enumerate_ball(4, a, &ctx.limits)?;
        let conjugators = enumerate_ball(3, a, &ctx.limits)?;
        let mut bad = None;
        for x in &ball {
            let reduced = x.cyclic_reduce().len();
            let min_conjugate = conjugators
                .iter()
                .map(|g| g.conjugate(x).map(|c| c.len()))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .min()
                .expect("non-empty ball");
            if reduced != min_conjugate {
                bad = Some(x.to_string());
                break;
            }
        }
        rows.push(
            scan_row("oracles/cyclic-reduce-vs-conjugation-min", bad).value(ball.len() as f64),
        );
    }

    // rotation-based conjugacy test vs explicit conjugator search on B(3)
    {
        let ball = enumerate_ball(3, a, &ctx.limits)?;
        let conjugators = enumerate_ball(5, a, &ctx.limits)?;
        let mut bad = None;
        'pairs: for x in &ball {
            for y in &ball {
                let fast = x.is_conjugate(y)?;
                let mut found = false;
                for g in &conjugators {
                    if g.conjugate(x)? == *y {
                        found = true;
                        break;
                    }
                }
                if fast != found {
                    bad = Some(format!("({x},{y})"));
                    break 'pairs;
                }
            }
        }
        rows.push(
            scan_row("oracles/is-conjugate-vs-search", bad)
                .value((ball.len() * ball.len()) as f64),
        );
    }

    Ok(rows)
}

/// Unit-cost insert/delete distances from `start` to every positive word of
/// length at most `max_len`, by breadth-first search. An optimal edit path
/// between words of length `<= max_len/2` never needs to leave this space.
fn bfs_edit_distances(
    start: &MonoidWord,
    alphabet: &Alphabet,
    max_len: usize,
) -> BTreeMap<Vec<Letter>, usize> {
    let mut dist = BTreeMap::new();
    let mut queue = VecDeque::new();
    dist.insert(start.letters().to_vec(), 0_usize);
    queue.push_back(start.letters().to_vec());
    while let Some(state) = queue.pop_front() {
        let d = dist[&state];
        let visit = |next: Vec<Letter>,
                     dist: &mut BTreeMap<Vec<Letter>, usize>,
                     queue: &mut VecDeque<Vec<Letter>>| {
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        };
        for i in 0..state.len() {
            let mut next = state.clone();
            next.remove(i);
            visit(next, &mut dist, &mut queue);
        }
        if state.len() < max_len {
            for i in 0..=state.len() {
                for g in 0..alphabet.rank() {
                    let mut next = state.clone();
                    next.insert(i, Letter::new(g, false));
                    visit(next, &mut dist, &mut queue);
                }
            }
        }
    }
    dist
}
