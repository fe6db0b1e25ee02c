use serde::{Deserialize, Serialize};

use super::JobSpec;
use crate::landen::LandenState;
use crate::real::Real;

/// One line of a report. Reals are written as decimal strings carrying the
/// full working precision.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "snake_case")]
pub enum Record {
    Input(JobSpec),
    Normalization {
        p: usize,
        lambda: String,
        factor: String,
    },
    Iteration {
        n: usize,
        a: Vec<String>,
        b: Vec<String>,
        residual: String,
        /// Multiplies `∫₀^∞` of this state to give the original integral.
        factor: String,
    },
    Landen {
        converged: bool,
        steps: usize,
        algorithm: String,
        #[serde(rename = "L")]
        l: Option<String>,
        #[serde(rename = "U")]
        u: Option<String>,
        quadrature: String,
        difference: Option<f64>,
        decay_order: Option<f64>,
    },
    Pushforward {
        input: String,
        output: String,
        numerator: Vec<String>,
        denominator: Vec<String>,
        degree_in: usize,
        degree_out: usize,
        conjugacy_agrees: bool,
    },
    Quadrature {
        value: String,
        est_error: f64,
        evaluations: usize,
    },
    Agm {
        steps: usize,
        limit: String,
        pairs: Vec<[String; 2]>,
        elliptic_value: String,
        quadrature: String,
        difference: f64,
    },
    Check {
        name: String,
        passed: bool,
        detail: String,
    },
    Error {
        category: String,
        message: String,
        exit_code: i32,
    },
    Summary {
        command: String,
        exit_code: i32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        wall_time_ms: Option<f64>,
    },
}

impl Record {
    pub fn iteration(n: usize, s: &LandenState, factor: &Real) -> Self {
        let strings = |v: &[Real]| v.iter().map(Real::to_decimal_string).collect();
        Record::Iteration {
            n,
            a: strings(s.a()),
            b: strings(s.b()),
            residual: s.residual().to_sci(6),
            factor: factor.to_decimal_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

fn short(s: &str) -> String {
    match s.parse::<f64>() {
        Ok(x) => format!("{x:.17}").trim_end_matches('0').trim_end_matches('.').to_string(),
        Err(_) => s.to_string(),
    }
}

/// Human-readable rendering, one or more lines per record.
pub fn render_text(records: &[Record]) -> String {
    let mut out = String::new();
    for r in records {
        let line = match r {
            Record::Input(spec) => {
                let mut s = spec.command.name().to_string();
                if let (Some(n), Some(d)) = (&spec.numerator, &spec.denominator) {
                    s += &format!(": ({n}) / ({d})");
                }
                if !spec.values.is_empty() {
                    s += &format!(": {}", spec.values.join(", "));
                }
                s
            }
            Record::Normalization { p, lambda, factor } => {
                format!("normalized: p = {p}, lambda = {}, factor = {}", short(lambda), short(factor))
            }
            Record::Iteration { n, a, b, residual, .. } => {
                let a: Vec<String> = a.iter().map(|x| short(x)).collect();
                let b: Vec<String> = b.iter().map(|x| short(x)).collect();
                format!("x{n}: a = [{}]  b = [{}]  residual = {residual}", a.join(", "), b.join(", "))
            }
            Record::Landen { converged, steps, l, u, quadrature, difference, .. } => match (l, u) {
                (Some(l), Some(u)) => format!(
                    "converged in {steps} steps: L = {l}\nU = {u}\nquadrature = {quadrature} (difference {:.1e})",
                    difference.unwrap_or(f64::NAN)
                ),
                _ => format!("not converged after {steps} steps (converged = {converged}); quadrature = {quadrature}"),
            },
            Record::Pushforward { output, conjugacy_agrees, .. } => {
                if *conjugacy_agrees {
                    output.clone()
                } else {
                    format!("{output}\nconjugacy cross-check FAILED")
                }
            }
            Record::Quadrature { value, est_error, evaluations } => {
                format!("{value}\n(estimated error {est_error:.1e}, {evaluations} evaluations)")
            }
            Record::Agm { steps, limit, elliptic_value, quadrature, .. } => {
                format!("AGM = {limit} ({steps} steps)\npi/(2 AGM) = {elliptic_value}\nG by quadrature = {quadrature}")
            }
            Record::Check { name, passed, detail } => {
                format!("[{}] {name}: {detail}", if *passed { "pass" } else { "FAIL" })
            }
            Record::Error { category, message, .. } => format!("error ({category}): {message}"),
            Record::Summary { wall_time_ms: Some(ms), .. } => format!("({ms:.1} ms)"),
            Record::Summary { .. } => continue,
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}
