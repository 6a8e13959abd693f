//! Parameter sweeps emitted as CSV.

use freemetric_core::analysis::homogenize;
use freemetric_core::length::{wc_length, LengthFn, Weights};
use freemetric_core::rotation::{ball_check, random_axis, RotationRep};
use freemetric_core::words::Word;
use freemetric_core::{seed, Limits};

use crate::CliError;

pub struct SweepArgs {
    pub kind: String,
    pub eps: Option<String>,
    pub k: Option<String>,
    pub n: Option<String>,
    pub seed: u64,
    pub limits: Limits,
}

pub fn run(args: &SweepArgs) -> Result<String, CliError> {
    match args.kind.as_str() {
        "so3-ratio" => so3_ratio(args),
        "wc-defect-family" => wc_defect_family(args),
        "homogenize" => homogenize_sweep(args),
        other => Err(CliError(format!(
            "unknown sweep kind '{other}'; expected so3-ratio, wc-defect-family, or homogenize"
        ))),
    }
}

fn parse_f64_list(spec: &str) -> Result<Vec<f64>, CliError> {
    let values: Result<Vec<f64>, _> = spec.split(',').map(str::parse::<f64>).collect();
    let values = values.map_err(|e| CliError(format!("bad list '{spec}': {e}")))?;
    if values.is_empty() {
        return Err(CliError("empty sweep range".into()));
    }
    Ok(values)
}

/// `1..6` (inclusive) or `1,2,3`.
fn parse_u64_range(spec: &str) -> Result<Vec<u64>, CliError> {
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo: u64 = lo.parse().map_err(|e| CliError(format!("bad range '{spec}': {e}")))?;
        let hi: u64 = hi.parse().map_err(|e| CliError(format!("bad range '{spec}': {e}")))?;
        if lo > hi {
            return Err(CliError(format!("empty range '{spec}'")));
        }
        return Ok((lo..=hi).collect());
    }
    let values: Result<Vec<u64>, _> = spec.split(',').map(str::parse::<u64>).collect();
    let values = values.map_err(|e| CliError(format!("bad list '{spec}': {e}")))?;
    if values.is_empty() {
        return Err(CliError("empty sweep range".into()));
    }
    Ok(values)
}

fn writer() -> csv::Writer<Vec<u8>> {
    csv::Writer::from_writer(Vec::new())
}

fn finish(writer: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| CliError(format!("csv: {e}")))
}

/// Decay of `θ([a,b]) / (θ_a + θ_b)` as the generator angle shrinks, with
/// the ball-check health of the same representation at radius 4.
fn so3_ratio(args: &SweepArgs) -> Result<String, CliError> {
    let eps_list = parse_f64_list(
        args.eps
            .as_deref()
            .ok_or_else(|| CliError("so3-ratio needs --eps <list>".into()))?,
    )?;
    let alphabet = freemetric_core::words::Alphabet::new(2).expect("rank 2");
    let a = Word::parse("a", &alphabet).expect("generator");
    let b = Word::parse("b", &alphabet).expect("generator");
    let comm = a.commutator(&b).expect("same alphabet");

    let mut out = writer();
    out.write_record(["epsilon", "seed", "ratio", "max_angle", "violations"])
        .map_err(|e| CliError(format!("csv: {e}")))?;
    for eps in eps_list {
        if !(eps > 0.0 && eps <= std::f64::consts::PI / 4.0) {
            return Err(CliError(format!("epsilon {eps} outside (0, pi/4]")));
        }
        let mut rng = seed::rng(args.seed);
        let axes = [random_axis(&mut rng), random_axis(&mut rng)];
        let rep = RotationRep::from_axes(&alphabet, &axes, 4, eps)
            .map_err(|e| CliError(e.to_string()))?;
        let ratio = rep.angle_of(&comm) / (rep.angle_of(&a) + rep.angle_of(&b));
        let report = ball_check(&rep.local_length(), 1e-6, &args.limits)
            .map_err(|e| CliError(e.to_string()))?;
        out.write_record([
            eps.to_string(),
            args.seed.to_string(),
            ratio.to_string(),
            report.max_angle.to_string(),
            report.triangle_violations.to_string(),
        ])
        .map_err(|e| CliError(format!("csv: {e}")))?;
    }
    finish(out)
}

/// Homogeneity defects `2ℓ(z) − ℓ(z²)` along three families: the commutators
/// `z = [a^k, b^k]` themselves (wc length; identically zero), the power
/// family `z = a^(-3k) [a^k, b^k]^4` where the wc defect accumulates and
/// grows without bound, and `z = a^k b a^-k` for the word length (defect
/// exactly `2k`).
fn wc_defect_family(args: &SweepArgs) -> Result<String, CliError> {
    let ks = parse_u64_range(
        args.k
            .as_deref()
            .ok_or_else(|| CliError("wc-defect-family needs --k <range>".into()))?,
    )?;
    let alphabet = freemetric_core::words::Alphabet::new(2).expect("rank 2");
    let unit = Weights::unit(2);
    let gen_a = Word::parse("a", &alphabet).expect("generator");
    let gen_b = Word::parse("b", &alphabet).expect("generator");

    let wc_defect_of = |z: &Word| -> Result<f64, CliError> {
        let wz = wc_length(z, &unit, &args.limits)
            .map_err(|e| CliError(e.to_string()))?
            .deficiency;
        let wz2 = wc_length(&z.power(2), &unit, &args.limits)
            .map_err(|e| CliError(e.to_string()))?
            .deficiency;
        Ok(2.0 * wz - wz2)
    };

    let mut out = writer();
    out.write_record([
        "k",
        "wc_comm",
        "wc_comm_sq",
        "wc_comm_defect",
        "wc_power_defect",
        "word_defect",
    ])
    .map_err(|e| CliError(format!("csv: {e}")))?;
    for k in ks {
        let k = k as i64;
        let comm = gen_a
            .power(k)
            .commutator(&gen_b.power(k))
            .expect("same alphabet");
        let wc_z = wc_length(&comm, &unit, &args.limits)
            .map_err(|e| CliError(e.to_string()))?
            .deficiency;
        let wc_z2 = wc_length(&comm.power(2), &unit, &args.limits)
            .map_err(|e| CliError(e.to_string()))?
            .deficiency;
        let power_z = gen_a
            .power(-3 * k)
            .multiply(&comm.power(4))
            .expect("same alphabet");
        let power_defect = wc_defect_of(&power_z)?;
        let conj = gen_a
            .power(k)
            .multiply(&gen_b)
            .and_then(|w| w.multiply(&gen_a.power(-k)))
            .expect("same alphabet");
        let word_defect = 2.0 * conj.len() as f64 - conj.power(2).len() as f64;
        out.write_record([
            k.to_string(),
            wc_z.to_string(),
            wc_z2.to_string(),
            (2.0 * wc_z - wc_z2).to_string(),
            power_defect.to_string(),
            word_defect.to_string(),
        ])
        .map_err(|e| CliError(format!("csv: {e}")))?;
    }
    finish(out)
}

/// Convergence of `ℓ(xⁿ)/n` with its bracket, for the word length at `baB`
/// and the wc length at `[a,b]`.
fn homogenize_sweep(args: &SweepArgs) -> Result<String, CliError> {
    let ns = parse_u64_range(args.n.as_deref().unwrap_or("2,4,8,16,32,64,128,256"))?;
    let alphabet = freemetric_core::words::Alphabet::new(2).expect("rank 2");
    let unit = Weights::unit(2);
    let word_len = LengthFn::word(unit.clone());
    let wc_len = LengthFn::watson_crick(unit, args.limits);
    let x_word = Word::parse("baB", &alphabet).expect("word");
    let x_wc = Word::parse("abAB", &alphabet).expect("word");

    let mut out = writer();
    out.write_record(["n", "word_estimate", "word_lo", "word_hi", "wc_estimate"])
        .map_err(|e| CliError(format!("csv: {e}")))?;
    for n in ns {
        if n < 2 || !n.is_power_of_two() {
            return Err(CliError(format!("n = {n} is not a power of two >= 2")));
        }
        let word = homogenize(&word_len, &x_word, n, 2.0).map_err(|e| CliError(e.to_string()))?;
        let wc = homogenize(&wc_len, &x_wc, n, 2.0).map_err(|e| CliError(e.to_string()))?;
        out.write_record([
            n.to_string(),
            word.estimate.to_string(),
            word.bracket_lo.to_string(),
            word.bracket_hi.to_string(),
            wc.estimate.to_string(),
        ])
        .map_err(|e| CliError(format!("csv: {e}")))?;
    }
    finish(out)
}
