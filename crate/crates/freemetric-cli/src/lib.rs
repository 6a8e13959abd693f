//! Library surface of the `freemetric` CLI: metric selectors, verification
//! suites, sweeps, and report serialization. The binary in `main.rs` is a
//! thin argument-parsing layer over this.

use std::fmt;

use freemetric_core::Limits;

pub mod metrics;
pub mod report;
pub mod suites;
pub mod sweep;

/// A usage or configuration error; mapped to exit code 2.
#[derive(Debug)]
pub struct CliError(pub String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CliError {}

/// Safety limits, overridable through `FREEMETRIC_LIMITS`, e.g.
/// `FREEMETRIC_LIMITS=ball_radius=10,dp_len=256`.
pub fn limits_from_env() -> Result<Limits, CliError> {
    let mut limits = Limits::default();
    let Ok(spec) = std::env::var("FREEMETRIC_LIMITS") else {
        return Ok(limits);
    };
    if spec.trim().is_empty() {
        return Ok(limits);
    }
    for part in spec.split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| CliError(format!("FREEMETRIC_LIMITS: bad entry '{part}'")))?;
        let parse = |v: &str| -> Result<u64, CliError> {
            v.parse()
                .map_err(|e| CliError(format!("FREEMETRIC_LIMITS: bad value '{v}': {e}")))
        };
        match key.trim() {
            "ball_radius" => limits.ball_radius = parse(value)? as usize,
            "ball_words" => limits.ball_words = parse(value)?,
            "dp_len" => limits.dp_len = parse(value)? as usize,
            "oracle_len" => limits.oracle_len = parse(value)? as usize,
            other => {
                return Err(CliError(format!("FREEMETRIC_LIMITS: unknown key '{other}'")));
            }
        }
    }
    Ok(limits)
}
