// Seeded random programs: every coherent one gets at least one preferred
// answer set, and every preferred set is an answer set.

use praset::principles::{check_principle_iii, check_theorem_subset};
use praset::random::{corpus, RandomConfig};
use praset::{analyze, Options};

pub fn run_example() -> Result<(usize, usize), Box<dyn std::error::Error>> {
    let cfg = RandomConfig { atoms: 5, max_rules: 8, ..RandomConfig::default() };
    let mut coherent = 0;
    let mut with_choice = 0;
    for (id, program) in corpus(42, 50, &cfg) {
        let a = analyze(&program, &Options::default())?;
        assert!(check_principle_iii(&id, &a).passed(), "{id}\n{}", program.render());
        assert!(check_theorem_subset(&id, &a).passed());
        coherent += usize::from(!a.verdicts.is_empty());
        with_choice += usize::from(a.preferred().count() < a.verdicts.len());
    }
    println!("50 programs: {coherent} coherent, {with_choice} where preferences discard an answer set");
    Ok((coherent, with_choice))
}

fn main() {
    run_example().expect("random_corpus example failed");
}
