use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rational_landen::cli::{render_text, run, run_batch, Command, JobSpec, Outcome, Settings, EXIT_CHECK_FAILED};

/// Integrals of even rational functions by rational Landen transformations.
#[derive(Parser)]
#[command(name = "ratlanden", version)]
struct Cli {
    /// Absolute tolerance for iteration and quadrature.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Working precision in bits.
    #[arg(long, global = true)]
    precision: Option<usize>,
    #[arg(long, global = true)]
    max_iter: Option<usize>,
    #[arg(long, global = true, value_enum)]
    algorithm: Option<AlgorithmArg>,
    /// Emit line-delimited JSON records.
    #[arg(long, global = true)]
    json: bool,
    /// Leave wall-clock times out of the report so reruns are byte-identical.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Geometric,
    Theorem,
}

#[derive(clap::Args)]
struct Integrand {
    /// Numerator: coefficients in descending powers ("1,0,2") or an expression ("z^2 + 2").
    #[arg(long, short, default_value = "1")]
    num: String,
    /// Denominator, in the same syntax.
    #[arg(long, short)]
    den: String,
}

#[derive(Subcommand)]
enum Sub {
    /// Direct image of num/den dz under π(z) = (z² − 1)/(2z).
    Pushforward(Integrand),
    /// Normalize an even integrand and apply one Landen step.
    LandenStep(Integrand),
    /// Iterate Landen steps to evaluate the integral over [0, ∞).
    LandenIterate(Integrand),
    /// Integrate over [0, ∞) by adaptive quadrature.
    Integrate(Integrand),
    /// Arithmetic-geometric mean of two positive numbers.
    Agm {
        #[arg(allow_negative_numbers = true)]
        a: String,
        #[arg(allow_negative_numbers = true)]
        b: String,
    },
    /// Cross-check every identity on one even integrand (default z^4/(z^6 + 1)).
    Verify {
        #[arg(long, short)]
        num: Option<String>,
        #[arg(long, short)]
        den: Option<String>,
    },
    /// Read job specifications (or earlier reports) as JSON lines from stdin.
    Batch,
}

fn job(command: Command, i: Integrand) -> JobSpec {
    JobSpec::new(command).integrand(&i.num, &i.den)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let settings = Settings {
        precision: cli.precision,
        tol: cli.tol,
        max_iter: cli.max_iter,
        algorithm: cli.algorithm.map(|a| match a {
            AlgorithmArg::Geometric => "geometric".to_string(),
            AlgorithmArg::Theorem => "theorem".to_string(),
        }),
        timing: !cli.no_timing,
    };
    let outcome: Outcome = match cli.command {
        Sub::Pushforward(i) => run(&job(Command::Pushforward, i), &settings),
        Sub::LandenStep(i) => run(&job(Command::LandenStep, i), &settings),
        Sub::LandenIterate(i) => run(&job(Command::LandenIterate, i), &settings),
        Sub::Integrate(i) => run(&job(Command::Integrate, i), &settings),
        Sub::Agm { a, b } => {
            let mut spec = JobSpec::new(Command::Agm);
            spec.values = vec![a, b];
            run(&spec, &settings)
        }
        Sub::Verify { num, den } => {
            let mut spec = JobSpec::new(Command::Verify);
            spec.numerator = num;
            spec.denominator = den;
            run(&spec, &settings)
        }
        Sub::Batch => {
            let mut input = String::new();
            if let Err(e) = std::io::stdin().read_to_string(&mut input) {
                eprintln!("cannot read stdin: {e}");
                return ExitCode::from(EXIT_CHECK_FAILED as u8);
            }
            run_batch(&input, &settings)
        }
    };
    let text = if cli.json {
        outcome.records.iter().map(|r| r.to_json() + "\n").collect()
    } else {
        render_text(&outcome.records)
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("cannot write report: {e}");
        return ExitCode::from(EXIT_CHECK_FAILED as u8);
    }
    ExitCode::from(outcome.exit_code as u8)
}
