//! Running job specifications through the library entry point that backs the command line.

use rational_landen::cli::{render_text, run_batch, Settings};

pub fn run() -> i32 {
    let jobs = [
        r#"{"command":"landen-iterate","numerator":"z^4","denominator":"z^6+1"}"#,
        r#"{"command":"pushforward","denominator":"z^2+1"}"#,
        r#"{"command":"agm","values":["1","2"]}"#,
        r#"{"command":"integrate","denominator":"z^2-1"}"#,
    ]
    .join("\n");
    let settings = Settings { tol: Some(1e-15), ..Settings::default() };
    let outcome = run_batch(&jobs, &settings);
    print!("{}", render_text(&outcome.records));
    for record in outcome.records.iter().take(3) {
        println!("{}", record.to_json());
    }
    println!("exit code {}", outcome.exit_code);
    outcome.exit_code
}

fn main() {
    // the last job is meant to fail with a domain error
    assert_eq!(run(), 3);
}
