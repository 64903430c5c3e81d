//! Seeded random programs for property runs.
//!
//! Each program draws its atom count from `1..=atoms` and has at most
//! `max_rules` rules with at most `max_body` body literals each. Part of
//! the rules come in pairs `x :- not y` / `y :- not x`, which is where
//! several answer sets and attacks come from. No two rules share both
//! head and body. The preference order is drawn as a subset of a
//! random total order on the rules, so it is always acyclic.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lang::{Atom, Literal, ObjectiveLiteral, PrioritizedProgram, Rule};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomConfig {
    pub atoms: usize,
    pub max_rules: usize,
    pub max_body: usize,
    /// Chance that a literal carries strong negation.
    pub strong_neg: f64,
    /// Chance that a body literal is under `not`.
    pub default_neg: f64,
    /// Chance that a pair of rules is ordered.
    pub preference_density: f64,
    /// Chance that the next two rules defeat each other by default negation.
    pub choice: f64,
}

impl Default for RandomConfig {
    fn default() -> Self {
        RandomConfig {
            atoms: 6,
            max_rules: 10,
            max_body: 3,
            strong_neg: 0.2,
            default_neg: 0.5,
            preference_density: 0.4,
            choice: 0.35,
        }
    }
}

fn atom_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("p{i}")
    }
}

pub fn random_program(rng: &mut impl Rng, cfg: &RandomConfig) -> PrioritizedProgram {
    let k = rng.gen_range(1..=cfg.atoms.max(1));
    let atoms: Vec<Atom> = (0..k).map(|i| Atom::new(atom_name(i)).expect("generated names are atoms")).collect();
    let lit = |rng: &mut dyn rand::RngCore| {
        let atom = atoms[rng.gen_range(0..atoms.len())].clone();
        ObjectiveLiteral { atom, strong_neg: rng.gen_bool(cfg.strong_neg) }
    };
    let n = rng.gen_range(1..=cfg.max_rules.max(1));
    let body_lit = |rng: &mut dyn rand::RngCore| {
        let o = lit(rng);
        if rng.gen_bool(cfg.default_neg) {
            Literal::default(o)
        } else {
            Literal::objective(o)
        }
    };
    // A program is a set of rules: no two names for the same head and body.
    let key = |r: &Rule| (r.head.clone(), r.body.iter().cloned().collect::<BTreeSet<_>>());
    let mut seen = BTreeSet::new();
    let mut rules: Vec<Rule> = Vec::with_capacity(n);
    for _ in 0..n * 20 {
        if rules.len() >= n {
            break;
        }
        let name = |k: usize| format!("r{}", rules.len() + k);
        let batch = if rules.len() + 1 < n && rng.gen_bool(cfg.choice) {
            let (x, y) = (lit(rng), lit(rng));
            let mut body = vec![Literal::default(y.clone())];
            if cfg.max_body > 1 && rng.gen_bool(0.3) {
                body.push(body_lit(rng));
            }
            vec![Rule::new(name(1), x.clone(), body), Rule::new(name(2), y, [Literal::default(x)])]
        } else {
            let head = lit(rng);
            let len = rng.gen_range(0..=cfg.max_body);
            vec![Rule::new(name(1), head, (0..len).map(|_| body_lit(rng)).collect::<Vec<_>>())]
        };
        let keys: Vec<_> = batch.iter().map(key).collect();
        if keys.iter().any(|k| seen.contains(k)) || (keys.len() == 2 && keys[0] == keys[1]) {
            continue;
        }
        seen.extend(keys);
        rules.extend(batch);
    }
    let n = rules.len();

    let mut rank: Vec<usize> = (0..n).collect();
    rank.shuffle(rng);
    let mut prefers = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(cfg.preference_density) {
                // rank[j] is more preferred than rank[i]
                prefers.push((rules[rank[i]].name.clone(), rules[rank[j]].name.clone()));
            }
        }
    }
    PrioritizedProgram { rules, prefers }
}

/// `n` programs named `random-SEED-INDEX`, reproducible from the seed.
pub fn corpus(seed: u64, n: usize, cfg: &RandomConfig) -> Vec<(String, PrioritizedProgram)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|i| (format!("random-{seed}-{i:04}"), random_program(&mut rng, cfg))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate_preferences;

    #[test]
    fn corpus_is_reproducible() {
        let cfg = RandomConfig::default();
        assert_eq!(corpus(7, 20, &cfg), corpus(7, 20, &cfg));
        assert_ne!(corpus(7, 20, &cfg), corpus(8, 20, &cfg));
    }

    #[test]
    fn programs_respect_the_bounds() {
        let cfg = RandomConfig { atoms: 4, ..Default::default() };
        for (_, p) in corpus(1, 100, &cfg) {
            assert!(!p.rules.is_empty() && p.rules.len() <= cfg.max_rules);
            assert!(p.atoms().len() <= 4);
            assert!(p.rules.iter().all(|r| r.body.len() <= cfg.max_body));
            validate_preferences(&p).unwrap();
            assert_eq!(crate::parse_program(&p.render()).unwrap(), p);
        }
    }
}
