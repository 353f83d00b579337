//! Runs CLI queries in-process and reads the JSON reports.

use weylcalc::cli::run_query;

fn main() {
    let queries: [&[&str]; 3] = [
        &["weylcalc", "describe", "--group", "PGL2"],
        &["weylcalc", "dim", "x-flag", "--group", "SL2", "--w", r#"{"lambda":[0],"word":[1]}"#, "--class", r#"{"kappa":[0],"nu":[0]}"#],
        &["weylcalc", "classes", "--group", "SL3", "straight-classes", "--max-len", "3"],
    ];
    for argv in queries {
        let (report, code) = run_query(argv.iter().copied());
        println!("exit {code}: {}", serde_json::to_string_pretty(&report).unwrap());
    }
}
