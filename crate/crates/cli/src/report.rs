//! JSON envelopes and plain-text summaries.
//!
//! Every JSON report has the same top level:
//!
//! ```json
//! {
//!   "tool": "punctual",
//!   "version": "0.1.0",
//!   "command": "verify-prop31",
//!   "input": { "file": "...", "field": 32003, "vars": [...], "order": "grevlex",
//!              "generators": [...], "parameters": { ... } },
//!   "result": { ... }
//! }
//! ```
//!
//! Keys come out in a fixed order and all numbers are integers.

use std::io::{self, Write};
use std::path::Path;

use punctual_core::strata::{ConeCurveReport, TruncationReport};
use punctual_core::Ideal;
use serde::Serialize;

use crate::file::IdealFile;

pub const TOOL: &str = "punctual";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize)]
pub struct InputEcho {
    pub file: String,
    pub field: u32,
    pub vars: Vec<String>,
    pub order: &'static str,
    pub generators: Vec<String>,
    pub parameters: serde_json::Value,
}

#[derive(Debug, Serialize)]
pub struct Envelope<R: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub input: InputEcho,
    pub result: R,
}

impl<R: Serialize> Envelope<R> {
    pub fn new(
        command: &'static str,
        path: &Path,
        file: &IdealFile,
        parameters: serde_json::Value,
        result: R,
    ) -> Self {
        let ring = &file.ring;
        Envelope {
            tool: TOOL,
            version: VERSION,
            command,
            input: InputEcho {
                file: path.display().to_string(),
                field: ring.field().modulus(),
                vars: ring.names().to_vec(),
                order: ring.order().name(),
                generators: file.ideal.generators().iter().map(|g| ring.display(g)).collect(),
                parameters,
            },
            result,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

pub fn print_truncation(out: &mut dyn Write, r: &TruncationReport) -> io::Result<()> {
    let c = &r.comparison;
    writeln!(out, "m = {}, reg = {}, Hilbert function checked in degrees <= {}", r.m, r.reg, r.degree_bound)?;
    match r.first_hilbert_failure {
        None => writeln!(out, "hilbert function     ok")?,
        Some(d) => writeln!(out, "hilbert function     FAILED at degree {d}")?,
    }
    let t: Vec<String> = r.strand_multiplicities.iter().map(usize::to_string).collect();
    writeln!(out, "resolution shape     {} (t = {})", verdict(r.resolution_shape_ok), t.join(", "))?;
    writeln!(
        out,
        "tangent map          {} -> {}, rank {}: {}",
        c.tangent_dim_y,
        c.tangent_dim_gamma,
        c.tangent_rank,
        if c.tangent_bijective { "bijective" } else { "NOT bijective" }
    )?;
    writeln!(
        out,
        "obstruction map      {} -> {}, kernel {}: {}",
        c.ext1_dim_y,
        c.ext1_dim_gamma,
        c.obstruction_kernel_dim,
        if c.obstruction_injective { "injective" } else { "NOT injective" }
    )?;
    writeln!(out, "{}", if r.passed() { "PASS" } else { "FAIL" })
}

fn numerator(coeffs: &[i64]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| match k {
            0 => c.to_string(),
            1 => format!("{c}t"),
            _ => format!("{c}t^{k}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

pub fn print_cone(out: &mut dyn Write, ideal: &Ideal, r: &ConeCurveReport) -> io::Result<()> {
    let ring = ideal.ring();
    writeln!(out, "I_C generators:")?;
    for g in ideal.generators() {
        writeln!(out, "  {}", ring.display(g))?;
    }
    writeln!(
        out,
        "degrees ({}, {}), seed {}, trials used {}",
        r.degrees[0], r.degrees[1], r.seed, r.trials_used
    )?;
    writeln!(out, "numerator S/I_X      {}", numerator(&r.numerator_x))?;
    writeln!(out, "numerator S/I_C      {}", numerator(&r.numerator_c))?;
    writeln!(out, "series factorization {}", verdict(r.hs_ok))?;
    writeln!(out, "dimension {} -> {}    {}", r.dim_x, r.dim_c, verdict(r.dim_ok))?;
    writeln!(out, "{}", if r.passed() { "PASS" } else { "FAIL" })
}

#[cfg(test)]
mod tests {
    use super::numerator;

    #[test]
    fn numerator_text() {
        assert_eq!(numerator(&[1, 0, -2, 0, 1]), "1 - 2t^2 + 1t^4");
        assert_eq!(numerator(&[]), "0");
    }
}
