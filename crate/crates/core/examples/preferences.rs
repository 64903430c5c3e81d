// Declaring rule preferences: the transitive closure, and the errors for
// cycles and unknown names with their source positions.

use praset::{parse_program, validate_preferences, Error};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let program = parse_program(include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/extension.lp")))?;
    let order = validate_preferences(&program)?;
    for (less, more) in order.pairs() {
        println!("{more} is preferred over {less}");
    }
    assert!(order.prefers("r3", "r2"));

    match validate_preferences(&parse_program("r1: a.\nr2: b.\nprefer r1 > r2.\nprefer r2 > r1.")?) {
        Err(Error::PreferenceCycle(names)) => println!("cycle: {}", names.join(" < ")),
        other => return Err(format!("expected a cycle, got {other:?}").into()),
    }

    let err = parse_program("r1: a.\nprefer r1 > r9.").unwrap_err();
    println!("{err}");
    assert!(matches!(err, Error::UnknownRuleInPrefer { line: 2, .. }));
    Ok(())
}

fn main() {
    run_example().expect("preferences example failed");
}
