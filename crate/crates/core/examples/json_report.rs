// The machine-readable report that `praset solve --json` prints.

use praset::report::RunReport;
use praset::{analyze, parse_program, Options};

pub fn run_example() -> Result<RunReport, Box<dyn std::error::Error>> {
    let program = parse_program(include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/unattacked_fact.lp")))?;
    let a = analyze(&program, &Options::default())?;
    let report = RunReport::new("unattacked_fact", &a, true);
    println!("{}", serde_json::to_string_pretty(&report)?);

    assert_eq!(report.answer_sets.len(), 2);
    assert!(report.details.iter().all(|d| !d.derivations.is_empty()));
    assert!(report.timing_ms.is_none());
    Ok(report)
}

fn main() {
    run_example().expect("json_report example failed");
}
