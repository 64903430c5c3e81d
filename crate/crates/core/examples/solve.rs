// Parse a prioritized program and list its answer sets and preferred
// answer sets.
//
// ```bash
// cargo run -p praset --example solve
// ```

use praset::{analyze, parse_program, Options};

const PROGRAM: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/running.lp"));

pub fn run_example() -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let program = parse_program(PROGRAM)?;
    let analysis = analyze(&program, &Options::default())?;

    for s in analysis.answer_sets() {
        println!("answer set {s}");
    }
    let preferred: Vec<String> = analysis.preferred().map(ToString::to_string).collect();
    println!("preferred: {}", preferred.join(" "));
    assert_eq!(preferred, ["{a, b}"]);
    Ok(preferred)
}

fn main() {
    run_example().expect("solve example failed");
}
