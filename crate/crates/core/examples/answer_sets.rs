// Answer sets from first principles: the reduct of a total
// interpretation, its least model, and the rules that generate it.

use praset::semantics::{generating_rules, least_model, minimal_generating_sets, reduct};
use praset::{answer_sets, parse_program, Context, Interpretation};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let program = parse_program(
        "r1: a :- not b.
         r2: b :- not a.
         r3: a :- not c.
         r4: c :- b.",
    )?;
    let ctx = Context::new(&program)?;

    let sets = answer_sets(&ctx);
    for s in &sets {
        let total = s.to_interpretation(&ctx);
        let definite = reduct(&ctx, &total)?;
        let model: Vec<String> = least_model(&definite).iter().map(ToString::to_string).collect();
        println!("{s}: reduct has {} rules, least model {{{}}}", definite.len(), model.join(", "));

        let full = generating_rules(&ctx, s).names(&ctx);
        let minimal: Vec<Vec<String>> = minimal_generating_sets(&ctx, s).iter().map(|g| g.names(&ctx)).collect();
        println!("  generating rules {full:?}, minimal {minimal:?}");
    }
    assert_eq!(sets.iter().map(ToString::to_string).collect::<Vec<_>>(), ["{a}", "{b, c}"]);

    // {a, c} is not an answer set: `c` has no support once `b` is false.
    let not_one =
        Interpretation::total(&ctx, ctx.set_of(&[program.rules[0].head.clone(), program.rules[3].head.clone()])?);
    let lm = least_model(&reduct(&ctx, &not_one)?);
    println!("least model of the reduct for {{a, c}}: {} literals", lm.len());
    assert_eq!(lm.len(), 1);
    Ok(())
}

fn main() {
    run_example().expect("answer_sets example failed");
}
