//! Metric selectors and word/weight argument parsing shared by the `len` and
//! `dist` subcommands.

use freemetric_core::length::{LengthFn, LinearForm, Weights};
use freemetric_core::quasi::{induced_pseudolength, BrooksPattern, Quasimorphism};
use freemetric_core::rotation::{make_local_length, Epsilon};
use freemetric_core::words::{Alphabet, Word};
use freemetric_core::Limits;

use crate::CliError;

/// Coefficients `1, √2, √3, √5, ...` (square roots of the primes, leading
/// 1): rationally independent, so the pullback length is positive on every
/// non-trivial abelian image.
pub fn default_form(rank: usize) -> LinearForm {
    const PRIMES: [f64; 25] = [
        2.0, 3.0, 5.0, 7.0, 11.0, 13.0, 17.0, 19.0, 23.0, 29.0, 31.0, 37.0, 41.0, 43.0, 47.0,
        53.0, 59.0, 61.0, 67.0, 71.0, 73.0, 79.0, 83.0, 89.0, 97.0,
    ];
    let coeffs = (0..rank)
        .map(|i| if i == 0 { 1.0 } else { PRIMES[i - 1].sqrt() })
        .collect();
    LinearForm::new(coeffs).expect("finite coefficients")
}

/// Parse `--weights a=1,b=5`; unnamed generators default to 1.
pub fn parse_weights(spec: Option<&str>, alphabet: &Alphabet) -> Result<Weights, CliError> {
    let mut per_gen = vec![1.0; alphabet.rank()];
    if let Some(spec) = spec {
        for part in spec.split(',') {
            let (name, value) = part
                .split_once('=')
                .ok_or_else(|| CliError(format!("bad weight entry '{part}', expected name=value")))?;
            let mut chars = name.chars();
            let (Some(c), None) = (chars.next(), chars.next()) else {
                return Err(CliError(format!("bad generator name '{name}'")));
            };
            let gen = (0..alphabet.rank())
                .find(|&g| alphabet.name(g) == c)
                .ok_or_else(|| CliError(format!("unknown generator '{name}'")))?;
            per_gen[gen] = value
                .parse::<f64>()
                .map_err(|e| CliError(format!("bad weight value '{value}': {e}")))?;
        }
    }
    Weights::new(per_gen).map_err(|e| CliError(e.to_string()))
}

/// Parse `--form 1,1.41421356` into a linear form on abelian images.
pub fn parse_form(spec: Option<&str>, rank: usize) -> Result<LinearForm, CliError> {
    match spec {
        None => Ok(default_form(rank)),
        Some(spec) => {
            let coeffs: Result<Vec<f64>, _> = spec.split(',').map(str::parse::<f64>).collect();
            let coeffs = coeffs.map_err(|e| CliError(format!("bad form coefficients: {e}")))?;
            if coeffs.len() != rank {
                return Err(CliError(format!(
                    "form has {} coefficients but rank is {rank}",
                    coeffs.len()
                )));
            }
            LinearForm::new(coeffs).map_err(|e| CliError(e.to_string()))
        }
    }
}

pub struct MetricArgs<'a> {
    pub alphabet: &'a Alphabet,
    pub weights: Weights,
    pub form: LinearForm,
    pub defect: f64,
    pub limits: Limits,
}

/// Resolve a metric selector: `word`, `cyc`, `wc`, `pullback`,
/// `brooks:<pattern>`, or `so3:<R>:<eps|auto>:<seed>`.
pub fn parse_metric(selector: &str, args: &MetricArgs) -> Result<LengthFn, CliError> {
    match selector {
        "word" => Ok(LengthFn::word(args.weights.clone())),
        "cyc" => Ok(LengthFn::cyclic(args.weights.clone())),
        "wc" => Ok(LengthFn::watson_crick(args.weights.clone(), args.limits)),
        "pullback" => Ok(LengthFn::pullback(args.form.clone())),
        _ => {
            if let Some(pattern) = selector.strip_prefix("brooks:") {
                let word = Word::parse(pattern, args.alphabet)
                    .map_err(|e| CliError(format!("bad Brooks pattern '{pattern}': {e}")))?;
                let pattern =
                    BrooksPattern::new(word).map_err(|e| CliError(e.to_string()))?;
                let f = Quasimorphism::brooks(pattern);
                return induced_pseudolength(&f, args.defect).map_err(|e| CliError(e.to_string()));
            }
            if let Some(rest) = selector.strip_prefix("so3:") {
                let parts: Vec<&str> = rest.split(':').collect();
                let [radius, eps, seed] = parts.as_slice() else {
                    return Err(CliError(format!(
                        "bad so3 selector '{selector}', expected so3:<R>:<eps|auto>:<seed>"
                    )));
                };
                let radius: usize = radius
                    .parse()
                    .map_err(|e| CliError(format!("bad so3 radius: {e}")))?;
                let epsilon = if *eps == "auto" {
                    Epsilon::Auto
                } else {
                    Epsilon::Fixed(
                        eps.parse()
                            .map_err(|e| CliError(format!("bad so3 epsilon: {e}")))?,
                    )
                };
                let seed: u64 = seed
                    .parse()
                    .map_err(|e| CliError(format!("bad so3 seed: {e}")))?;
                let local = make_local_length(radius, epsilon, seed, args.alphabet)
                    .map_err(|e| CliError(e.to_string()))?;
                return Ok(local.as_length_fn());
            }
            Err(CliError(format!("unknown metric '{selector}'")))
        }
    }
}
