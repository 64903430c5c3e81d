// Why an answer set is or is not preferred: every derivation with its
// verdict, and for blocked ones the attack derivation that blocks it.

use praset::report::explain;
use praset::{analyze, parse_program, Options};

pub fn run_example() -> Result<String, Box<dyn std::error::Error>> {
    let program = parse_program(include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/running.lp")))?;
    let a = analyze(&program, &Options::default())?;

    let mut text = String::new();
    for i in 0..a.verdicts.len() {
        text.push_str(&explain(&a, i));
    }
    print!("{text}");

    let blocked = &a.verdicts[1];
    assert!(!blocked.preferred);
    let chain = blocked.derivations[0].blocked_by.as_ref().ok_or("expected a blocking attack")?;
    assert!(a.universe.is_complete(chain.last().attacker));
    Ok(text)
}

fn main() {
    run_example().expect("explain example failed");
}
