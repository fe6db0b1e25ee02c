//! Job specifications, the workflows behind the `ratlanden` binary, and their
//! line-delimited JSON reports.
//!
//! A run produces a list of [`Record`]s: an `input` echo with every default
//! resolved, workflow records, and a closing `summary` (or `error`). Feeding a
//! report back through [`run_batch`] re-runs its `input` records and ignores
//! the rest, so a report without timings reproduces itself exactly.

mod parse;
mod report;

pub use parse::{parse_polynomial, require_even};
pub use report::{render_text, Record};

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::agm::agm;
use crate::error::{Error, ErrorCategory, Result};
use crate::exactpoly::Polynomial;
use crate::landen::{iterate, normalize, step, step_geometric, step_theorem, Algorithm, LandenState};
use crate::pushforward::{
    conjugacy_pi_star, involution_pullback, pi_star, pullback_pi, Involution, RationalOneForm, Variable,
};
use crate::quadrature::{elliptic_G, integrate_halfline, DEFAULT_TOL};
use crate::real::{relative_diff, Real, DEFAULT_PRECISION};

pub const DEFAULT_MAX_ITER: usize = 30;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_NON_CONVERGENCE: i32 = 4;
pub const EXIT_ACCURACY: i32 = 5;

pub fn exit_code(category: ErrorCategory) -> i32 {
    match category {
        ErrorCategory::Parse => EXIT_PARSE,
        ErrorCategory::Domain => EXIT_DOMAIN,
        ErrorCategory::NonConvergence => EXIT_NON_CONVERGENCE,
        ErrorCategory::Accuracy => EXIT_ACCURACY,
        ErrorCategory::Internal => EXIT_CHECK_FAILED,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Pushforward,
    LandenStep,
    LandenIterate,
    Integrate,
    Agm,
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Pushforward => "pushforward",
            Command::LandenStep => "landen-step",
            Command::LandenIterate => "landen-iterate",
            Command::Integrate => "integrate",
            Command::Agm => "agm",
            Command::Verify => "verify",
        }
    }
}

/// One job. Polynomials use the syntax of [`parse_polynomial`]; `values`
/// holds the two AGM operands.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numerator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub denominator: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<String>,
    #[serde(default)]
    pub precision: Option<usize>,
    #[serde(default)]
    pub tol: Option<f64>,
    #[serde(default)]
    pub max_iter: Option<usize>,
    #[serde(default)]
    pub algorithm: Option<String>,
}

impl JobSpec {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            numerator: None,
            denominator: None,
            values: Vec::new(),
            precision: None,
            tol: None,
            max_iter: None,
            algorithm: None,
        }
    }

    pub fn integrand(mut self, numerator: &str, denominator: &str) -> Self {
        self.numerator = Some(numerator.to_string());
        self.denominator = Some(denominator.to_string());
        self
    }

    /// Fills unset settings from `defaults`, then from the built-in defaults.
    pub fn resolved(&self, defaults: &Settings) -> JobSpec {
        let mut s = self.clone();
        s.precision = Some(s.precision.or(defaults.precision).unwrap_or(DEFAULT_PRECISION));
        s.tol = Some(s.tol.or(defaults.tol).unwrap_or(DEFAULT_TOL));
        s.max_iter = Some(s.max_iter.or(defaults.max_iter).unwrap_or(DEFAULT_MAX_ITER));
        s.algorithm = Some(
            s.algorithm
                .clone()
                .or_else(|| defaults.algorithm.clone())
                .unwrap_or_else(|| Algorithm::default().name().to_string()),
        );
        if s.command != Command::Agm && s.numerator.is_none() && s.denominator.is_some() {
            s.numerator = Some("1".into());
        }
        s
    }
}

/// Settings shared by every job of an invocation; a job's own fields win.
#[derive(Clone, Debug, Default)]
pub struct Settings {
    pub precision: Option<usize>,
    pub tol: Option<f64>,
    pub max_iter: Option<usize>,
    pub algorithm: Option<String>,
    /// Adds `wall_time_ms` to summaries (and so breaks byte-for-byte reruns).
    pub timing: bool,
}

/// Records of one job and its exit status.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub records: Vec<Record>,
    pub exit_code: i32,
}

struct Job {
    command: Command,
    numerator: Option<Polynomial>,
    denominator: Option<Polynomial>,
    values: Vec<Real>,
    precision: usize,
    tol: f64,
    max_iter: usize,
    algorithm: Algorithm,
}

fn validate(spec: &JobSpec) -> Result<Job> {
    let precision = spec.precision.unwrap_or(DEFAULT_PRECISION);
    if !(16..=100_000).contains(&precision) {
        return Err(Error::Parse(format!("precision must be between 16 and 100000 bits, got {precision}")));
    }
    let tol = spec.tol.unwrap_or(DEFAULT_TOL);
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Parse(format!("tolerance must be positive, got {tol}")));
    }
    let algorithm = spec.algorithm.as_deref().unwrap_or("geometric").parse()?;
    let numerator = spec.numerator.as_deref().map(parse_polynomial).transpose()?;
    let denominator = spec.denominator.as_deref().map(parse_polynomial).transpose()?;
    let values = spec
        .values
        .iter()
        .map(|v| crate::exactpoly::parse_rational(v).map(|q| Real::from_rational(&q, precision)))
        .collect::<Result<Vec<_>>>()?;
    let job = Job {
        command: spec.command,
        numerator,
        denominator,
        values,
        precision,
        tol,
        max_iter: spec.max_iter.unwrap_or(DEFAULT_MAX_ITER),
        algorithm,
    };
    match job.command {
        Command::Agm => {
            if job.values.len() != 2 {
                return Err(Error::Parse(format!("agm needs two values, got {}", job.values.len())));
            }
        }
        Command::Verify if job.denominator.is_none() => {}
        _ => {
            let den = job.denominator.as_ref().ok_or_else(|| Error::Parse("missing denominator".into()))?;
            if den.is_zero() {
                return Err(Error::Parse("denominator is the zero polynomial".into()));
            }
            if !matches!(job.command, Command::Pushforward | Command::Integrate) {
                require_even(job.numerator.as_ref().unwrap(), "numerator")?;
                require_even(den, "denominator")?;
            }
        }
    }
    Ok(job)
}

/// Runs one job. Never panics on bad input: failures become an `error` record.
pub fn run(spec: &JobSpec, settings: &Settings) -> Outcome {
    let spec = spec.resolved(settings);
    let start = Instant::now();
    let mut records = vec![Record::Input(spec.clone())];
    let result = validate(&spec).and_then(|job| execute(&job, &mut records));
    let wall_time_ms = settings.timing.then(|| start.elapsed().as_secs_f64() * 1e3);
    let exit_code = match result {
        Ok(code) => code,
        Err(e) => {
            let code = exit_code(e.category());
            records.push(Record::Error {
                category: format!("{:?}", e.category()).to_lowercase(),
                message: e.to_string(),
                exit_code: code,
            });
            code
        }
    };
    records.push(Record::Summary { command: spec.command.name().to_string(), exit_code, wall_time_ms });
    Outcome { records, exit_code }
}

/// Runs each job line of `input`: either a bare [`JobSpec`] or an `input`
/// record from an earlier report. Other records and blank lines are skipped.
/// The exit code is the first nonzero one.
pub fn run_batch(input: &str, settings: &Settings) -> Outcome {
    let mut records = Vec::new();
    let mut exit = EXIT_OK;
    for (lineno, line) in input.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let outcome = match parse_job_line(line) {
            Ok(Some(spec)) => run(&spec, settings),
            Ok(None) => continue,
            Err(e) => Outcome {
                records: vec![Record::Error {
                    category: "parse".into(),
                    message: format!("line {}: {e}", lineno + 1),
                    exit_code: EXIT_PARSE,
                }],
                exit_code: EXIT_PARSE,
            },
        };
        if exit == EXIT_OK {
            exit = outcome.exit_code;
        }
        records.extend(outcome.records);
    }
    Outcome { records, exit_code: exit }
}

fn parse_job_line(line: &str) -> Result<Option<JobSpec>> {
    let mut value: serde_json::Value =
        serde_json::from_str(line).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    if let Some(obj) = value.as_object_mut() {
        match obj.remove("record") {
            Some(serde_json::Value::String(tag)) if tag == "input" => {}
            Some(_) => return Ok(None),
            None => {}
        }
    }
    serde_json::from_value(value).map(Some).map_err(|e| Error::Parse(format!("invalid job: {e}")))
}

fn execute(job: &Job, records: &mut Vec<Record>) -> Result<i32> {
    match job.command {
        Command::Pushforward => pushforward(job, records),
        Command::LandenStep => landen_step(job, records),
        Command::LandenIterate => landen_iterate(job, records),
        Command::Integrate => integrate(job, records),
        Command::Agm => agm_job(job, records),
        Command::Verify => verify(job, records),
    }
}

fn form_of(job: &Job) -> Result<RationalOneForm> {
    RationalOneForm::from_parts(job.numerator.clone().unwrap(), job.denominator.clone().unwrap(), Variable::Z)
}

fn coeff_strings(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().rev().map(|c| c.to_string()).collect()
}

fn pushforward(job: &Job, records: &mut Vec<Record>) -> Result<i32> {
    let form = form_of(job)?;
    let image = pi_star(&form)?;
    let agrees = conjugacy_pi_star(&form)? == image;
    records.push(Record::Pushforward {
        input: form.to_string(),
        output: image.to_string(),
        numerator: coeff_strings(image.coefficient().num()),
        denominator: coeff_strings(image.coefficient().den()),
        degree_in: form.degree(),
        degree_out: image.degree(),
        conjugacy_agrees: agrees,
    });
    Ok(if agrees { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn normalized(job: &Job, records: &mut Vec<Record>) -> Result<(LandenState, Real)> {
    let r = normalize(job.numerator.as_ref().unwrap(), job.denominator.as_ref().unwrap(), job.precision)?;
    records.push(Record::Normalization {
        p: r.state.p(),
        lambda: r.lambda.to_decimal_string(),
        factor: r.factor.to_decimal_string(),
    });
    Ok((r.state, r.factor))
}

fn landen_step(job: &Job, records: &mut Vec<Record>) -> Result<i32> {
    let (s, factor) = normalized(job, records)?;
    records.push(Record::iteration(0, &s, &factor));
    let next = step(&s, job.algorithm)?;
    records.push(Record::iteration(1, &next.state, &(&factor * &next.factor)));
    Ok(EXIT_OK)
}

fn landen_iterate(job: &Job, records: &mut Vec<Record>) -> Result<i32> {
    let (s, factor) = normalized(job, records)?;
    let trace = iterate(&s, job.tol, job.max_iter, job.algorithm)?;
    for (n, state) in trace.states.iter().enumerate() {
        records.push(Record::iteration(n, state, &factor));
    }
    let quadrature = halfline(job)?;
    let (l, u) = match (&trace.limit, trace.value()) {
        (Some(l), Some(u)) => (&(l * &factor), &u * &factor),
        _ => {
            records.push(Record::Landen {
                converged: false,
                steps: trace.steps(),
                algorithm: job.algorithm.name().into(),
                l: None,
                u: None,
                quadrature: quadrature.value.to_decimal_string(),
                difference: None,
                decay_order: trace.decay_order(4),
            });
            return Err(Error::NonConvergence(format!(
                "residual {} after {} steps",
                trace.last().residual().to_sci(3),
                trace.steps()
            )));
        }
    };
    let difference = (&u - &quadrature.value).abs().to_f64();
    records.push(Record::Landen {
        converged: true,
        steps: trace.steps(),
        algorithm: job.algorithm.name().into(),
        l: Some(l.to_decimal_string()),
        u: Some(u.to_decimal_string()),
        quadrature: quadrature.value.to_decimal_string(),
        difference: Some(difference),
        decay_order: trace.decay_order(4),
    });
    Ok(EXIT_OK)
}

fn halfline(job: &Job) -> Result<crate::quadrature::QuadratureResult> {
    let to_reals = |p: &Polynomial| -> Result<Vec<Real>> {
        Ok(p.real_coeffs()?.iter().map(|q| Real::from_rational(q, job.precision)).collect())
    };
    integrate_halfline(
        &to_reals(job.numerator.as_ref().unwrap())?,
        &to_reals(job.denominator.as_ref().unwrap())?,
        job.tol,
    )
}

fn integrate(job: &Job, records: &mut Vec<Record>) -> Result<i32> {
    let r = halfline(job)?;
    records.push(Record::Quadrature {
        value: r.value.to_decimal_string(),
        est_error: r.est_error,
        evaluations: r.evaluations,
    });
    Ok(EXIT_OK)
}

fn agm_job(job: &Job, records: &mut Vec<Record>) -> Result<i32> {
    let (a, b) = (&job.values[0], &job.values[1]);
    let trace = agm(a, b, job.tol)?;
    let g = elliptic_G(a, b, job.tol)?;
    records.push(Record::Agm {
        steps: trace.steps(),
        limit: trace.limit.to_decimal_string(),
        pairs: trace.pairs.iter().map(|(x, y)| [x.to_decimal_string(), y.to_decimal_string()]).collect(),
        elliptic_value: trace.elliptic_value().to_decimal_string(),
        quadrature: g.value.to_decimal_string(),
        difference: (&trace.elliptic_value() - &g.value).abs().to_f64(),
    });
    Ok(EXIT_OK)
}

fn check(records: &mut Vec<Record>, name: &str, passed: bool, detail: String) -> bool {
    records.push(Record::Check { name: name.into(), passed, detail });
    passed
}

/// Cross-checks every identity the library relies on for one even integrand
/// (by default `z⁴/(z⁶ + 1)`).
fn verify(job: &Job, records: &mut Vec<Record>) -> Result<i32> {
    let num = job.numerator.clone().unwrap_or_else(|| Polynomial::from_ints(&[0, 0, 0, 0, 1]));
    let den = job.denominator.clone().unwrap_or_else(|| Polynomial::from_ints(&[1, 0, 0, 0, 0, 0, 1]));
    let form = RationalOneForm::from_parts(num.clone(), den.clone(), Variable::Z)?;
    let mut ok = true;

    let image = pi_star(&form)?;
    ok &= check(records, "conjugacy", conjugacy_pi_star(&form)? == image, image.to_string());
    let deck = form.add(&involution_pullback(&form, Involution::Iota)?);
    ok &= check(records, "deck-identity", pullback_pi(&image)?.with_var(Variable::Z) == deck, deck.to_string());
    let lhs = involution_pullback(&image, Involution::Tau)?;
    let rhs = pi_star(&involution_pullback(&form, Involution::Tau)?)?;
    ok &= check(records, "equivariance", lhs == rhs, lhs.to_string());
    ok &= check(
        records,
        "degree-bound",
        image.degree() <= form.degree(),
        format!("{} <= {}", image.degree(), form.degree()),
    );

    let normalized = normalize(&num, &den, job.precision)?;
    let s = normalized.state;
    let g = step_geometric(&s)?.state;
    let t = step_theorem(&s)?.state;
    let worst = g
        .a()
        .iter()
        .chain(g.b())
        .zip(t.a().iter().chain(t.b()))
        .map(|(x, y)| relative_diff(x, y, 1.0))
        .fold(0.0, f64::max);
    ok &= check(records, "algorithm-agreement", worst < 1e-13, format!("max relative difference {worst:e}"));

    let before = s.integrate(job.tol)?.value;
    let after = g.integrate(job.tol)?.value;
    let drift = (&before - &after).abs().to_f64();
    ok &= check(records, "step-invariance", drift <= 4.0 * job.tol, format!("|Δ| = {drift:e}"));

    let trace = iterate(&s, job.tol, job.max_iter, job.algorithm)?;
    match trace.value() {
        Some(u) => {
            let diff = (&u - &before).abs().to_f64();
            ok &= check(
                records,
                "iteration-vs-quadrature",
                diff <= 10.0 * job.tol,
                format!("{} steps, |U − quadrature| = {diff:e}", trace.steps()),
            );
        }
        None => {
            ok &=
                check(records, "iteration-vs-quadrature", false, format!("no convergence in {} steps", trace.steps()));
        }
    }

    let whole_line = crate::quadrature::integrate_real_line(form.coefficient(), job.tol, job.precision);
    let pushed_line = crate::quadrature::integrate_real_line(image.coefficient(), job.tol, job.precision);
    if let (Ok(x), Ok(y)) = (whole_line, pushed_line) {
        let diff = (&x.value - &y.value).abs().to_f64();
        ok &= check(records, "real-line-invariance", diff <= 4.0 * job.tol, format!("|Δ| = {diff:e}"));
    }
    Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
}
