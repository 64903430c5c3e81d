// Export the attack graph in Graphviz format. Solid edges are definite
// attacks, dashed ones only possible; complete structures get a double
// border.
//
// ```bash
// cargo run -p praset --example dot_graph > attacks.dot && dot -Tsvg attacks.dot > attacks.svg
// ```

use praset::report::to_dot;
use praset::{analyze, parse_program, Options};

pub fn run_example() -> Result<String, Box<dyn std::error::Error>> {
    let program = parse_program(include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/four_rules.lp")))?;
    let a = analyze(&program, &Options::default())?;
    let dot = to_dot(&a, Some(0));
    print!("{dot}");
    assert!(dot.starts_with("digraph attacks {"));
    assert_eq!(dot.matches(" -> ").count(), a.closure.possible.len());
    Ok(dot)
}

fn main() {
    run_example().expect("dot_graph example failed");
}
