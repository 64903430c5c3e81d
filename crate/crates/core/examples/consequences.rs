// Consequences of a set of default assumptions, with and without extra
// facts, and the self-consistency test used by argumentation structures.

use std::collections::BTreeSet;

use praset::semantics::{consequences, is_self_consistent};
use praset::{parse_program, Atom, Context, Literal, ObjectiveLiteral};

fn lit(text: &str) -> ObjectiveLiteral {
    match text.strip_prefix('-') {
        Some(atom) => ObjectiveLiteral::neg(Atom::new(atom).expect("atom")),
        None => ObjectiveLiteral::pos(Atom::new(text).expect("atom")),
    }
}

fn show(set: &BTreeSet<Literal>) -> String {
    set.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let program = parse_program(include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/running.lp")))?;
    let ctx = Context::new(&program)?;

    let w: BTreeSet<Literal> = [Literal::default(lit("-a")), Literal::default(lit("-b"))].into();
    let cn = consequences(&ctx, &BTreeSet::new(), &w)?;
    println!("Cn({}) = {{{}}}", show(&w), show(&cn));
    assert!(cn.contains(&Literal::objective(lit("b"))));

    // With `a` as an extra fact, `not -b` alone is enough for `b`.
    let w: BTreeSet<Literal> = [Literal::default(lit("-b"))].into();
    let z: BTreeSet<ObjectiveLiteral> = [lit("a")].into();
    let cn = consequences(&ctx, &z, &w)?;
    println!("Cn with {{a}} ({}) = {{{}}}", show(&w), show(&cn));
    assert!(cn.contains(&Literal::objective(lit("b"))));

    // Assuming everything false derives both `b` and `-b`.
    let bad: BTreeSet<Literal> =
        [Literal::default(lit("-a")), Literal::default(lit("b")), Literal::default(lit("-b"))].into();
    let good: BTreeSet<Literal> = [Literal::default(lit("-a"))].into();
    println!("{{{}}} self-consistent: {}", show(&bad), is_self_consistent(&ctx, &bad)?);
    println!("{{{}}} self-consistent: {}", show(&good), is_self_consistent(&ctx, &good)?);
    assert!(!is_self_consistent(&ctx, &bad)? && is_self_consistent(&ctx, &good)?);
    Ok(())
}

fn main() {
    run_example().expect("consequences example failed");
}
