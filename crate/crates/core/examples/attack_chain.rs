// The basic attack of the ambiguity program and a derived attack chain
// that reaches the complete structure of {a}, replayed rule by rule.

use praset::attacks::{find_structure, Attack};
use praset::{analyze, parse_program, Options};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let program = parse_program(include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/ambiguity.lp")))?;
    let a = analyze(&program, &Options::default())?;
    let id = |y: &[&str], x: &[&str]| find_structure(&a, y, x, &[]).ok_or("structure not derived");

    for (at, rule) in &a.basic {
        println!(
            "basic: {} attacks {} ({})",
            a.universe.get(at.attacker).display(&a.ctx),
            a.universe.get(at.attacked).display(&a.ctx),
            rule.tag()
        );
    }

    let a1 = id(&["a"], &["b"])?;
    let a2 = id(&["b"], &["a"])?;
    let u = id(&["c"], &["a"])?;
    let b = id(&["b", "c"], &["a"])?;
    let complete_a = a.verdicts[0].structure;
    let complete_a = a.universe.id_of(&complete_a).ok_or("complete structure missing")?;
    let chain = [Attack::new(a2, a1), Attack::new(u, a1), Attack::new(b, a1), Attack::new(b, complete_a)];
    a.replay(&chain, &["Q2", "Q3", "Q6"])?;
    println!("chain replayed with Q2, Q3, Q6");

    println!(
        "{} definite attacks, {} possible, stable: {}",
        a.closure.definite.len(),
        a.closure.possible.len(),
        a.closure.stable
    );
    Ok(())
}

fn main() {
    run_example().expect("attack_chain example failed");
}
