// Canonical derivations of the complete structure of each answer set,
// one per minimal generating set, with their step tags.

use praset::structures::{canonical_derivations, derivations, DerivationMode};
use praset::{answer_sets, parse_program, Context};

pub fn run_example() -> Result<usize, Box<dyn std::error::Error>> {
    let program = parse_program(include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/ambiguity.lp")))?;
    let ctx = Context::new(&program)?;

    let mut total = 0;
    for s in answer_sets(&ctx) {
        println!("{s}");
        for d in canonical_derivations(&ctx, &s) {
            d.check(&ctx)?;
            let rules = d.generating_set.as_ref().map(|g| g.names(&ctx)).unwrap_or_default();
            println!("  rules {rules:?}: {}", d.tags().join(" "));
            for step in &d.steps {
                println!("    {}", step.structure.display(&ctx));
            }
            total += 1;
        }
        let all_orders = derivations(&ctx, &s, DerivationMode::FoldPermutations).len();
        println!("  {all_orders} derivations when every fold order is tried");
    }
    assert_eq!(total, 3);
    Ok(total)
}

fn main() {
    run_example().expect("derivations example failed");
}
