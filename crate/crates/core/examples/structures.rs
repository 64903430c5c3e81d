// Building argumentation structures by hand with R1, R2 and R3 and
// checking them against the dependency-structure conditions.

use praset::structures::{apply_r1, apply_r2, apply_r3, basic_structure, is_complete, is_dependency_structure};
use praset::{parse_program, Context};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let program = parse_program(include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/running.lp")))?;
    let ctx = Context::new(&program)?;
    let index = |name: &str| program.rule_index(name).expect("rule exists");

    let a1 = basic_structure(&ctx, index("r1")).ok_or("r1 has no basic structure")?;
    let a3 = basic_structure(&ctx, index("r3")).ok_or("r3 has no basic structure")?;
    println!("A1 = {}", a1.display(&ctx));
    println!("A3 = {}", a3.display(&ctx));

    // R1 discharges the condition `a` of A1 using A3.
    let a4 = apply_r1(&ctx, &a1, &a3)?.ok_or("R1 not applicable")?;
    println!("R1(A1, A3) = {}", a4.display(&ctx));

    let a5 = apply_r2(&ctx, &a4, &a3)?.ok_or("R2 not applicable")?;
    println!("R2(A4, A3) = {}  complete: {}", a5.display(&ctx), is_complete(&ctx, &a5));
    assert!(is_complete(&ctx, &a5));

    // R3 adds assumptions as long as they stay self-consistent.
    let b = ctx.set_of(&[program.rules[index("r1")].head.clone()])?;
    let widened = apply_r3(&ctx, &a3, b)?.ok_or("R3 not applicable")?;
    println!("R3(A3, not b) = {}", widened.display(&ctx));

    for s in [a1, a3, a4, a5, widened] {
        assert!(is_dependency_structure(&ctx, &s));
    }
    Ok(())
}

fn main() {
    run_example().expect("structures example failed");
}
