// Checking the selection principles on the bundled programs, and the
// Principle II pattern that the semantics deliberately gives up.

use praset::principles::{check_all, principle_ii_losses};
use praset::{analyze, parse_program, Options, PrioritizedProgram};

const FIXTURES: &[(&str, &str)] = &[
    ("running", include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/running.lp"))),
    ("ambiguity", include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/ambiguity.lp"))),
    ("four_rules", include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/four_rules.lp"))),
    ("extension_base", include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/extension_base.lp"))),
    ("attack_cycle", include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/attack_cycle.lp"))),
    ("incoherent", include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/incoherent.lp"))),
];

pub fn run_example() -> Result<usize, Box<dyn std::error::Error>> {
    let options = Options::default();
    let mut failures = 0;
    for (name, text) in FIXTURES {
        let a = analyze(&parse_program(text)?, &options)?;
        for r in check_all(name, &a) {
            let note = if r.vacuous { " (vacuous)" } else { "" };
            println!("{name:<15} {:<8} {:?}{note}", r.principle.to_string(), r.verdict);
            failures += usize::from(!r.passed());
        }
    }
    assert_eq!(failures, 0);

    // Adding `a :- c` to P loses {b}, although `c` is not in {b}.
    let base = parse_program(FIXTURES[3].1)?;
    let extended = parse_program(include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/extension.lp")))?;
    let added = PrioritizedProgram { rules: vec![extended.rule("r3").ok_or("r3 missing")?.clone()], prefers: vec![] };
    let lost = principle_ii_losses(&analyze(&base, &options)?, &analyze(&extended, &options)?, &added);
    for s in &lost {
        println!("Principle II: {s} is no longer preferred");
    }
    assert_eq!(lost.len(), 1);
    Ok(failures)
}

fn main() {
    run_example().expect("principles example failed");
}
