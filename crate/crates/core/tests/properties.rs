mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use praset::semantics::minimal_generating_sets;
use praset::structures::{derivations, DerivationMode};
use praset::{
    analyze, answer_sets, parse_program, validate_preferences, Atom, Context, Literal, ObjectiveLiteral, Options,
    PrioritizedProgram, Rule,
};

use common::Lits;

type RawRule = ((usize, bool), Vec<(usize, bool, bool)>);

fn program_strategy(max_atoms: usize, max_rules: usize) -> impl Strategy<Value = PrioritizedProgram> {
    (1..=max_atoms, 1..=max_rules).prop_flat_map(|(atoms, n)| {
        let lit = (0..atoms, prop::bool::weighted(0.2));
        let rule = (lit.clone(), prop::collection::vec((0..atoms, prop::bool::weighted(0.2), any::<bool>()), 0..=3));
        (
            prop::collection::vec(rule, n),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            prop::collection::vec(prop::bool::weighted(0.35), n * n),
        )
            .prop_map(move |(raw, rank, edges): (Vec<RawRule>, Vec<usize>, Vec<bool>)| build(raw, rank, edges))
    })
}

fn objective((atom, neg): (usize, bool)) -> ObjectiveLiteral {
    let a = Atom::new(((b'a' + atom as u8) as char).to_string()).expect("atom");
    if neg {
        ObjectiveLiteral::neg(a)
    } else {
        ObjectiveLiteral::pos(a)
    }
}

fn build(raw: Vec<RawRule>, rank: Vec<usize>, edges: Vec<bool>) -> PrioritizedProgram {
    let n = raw.len();
    let rules: Vec<Rule> = raw
        .into_iter()
        .enumerate()
        .map(|(i, (head, body))| {
            let body = body.into_iter().map(|(a, neg, default)| {
                let o = objective((a, neg));
                if default {
                    Literal::default(o)
                } else {
                    Literal::objective(o)
                }
            });
            Rule::new(format!("r{}", i + 1), objective(head), body.collect::<Vec<_>>())
        })
        .collect();
    let mut prefers = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if edges[i * n + j] {
                prefers.push((rules[rank[i]].name.clone(), rules[rank[j]].name.clone()));
            }
        }
    }
    PrioritizedProgram { rules, prefers }
}

fn names(set: &[ObjectiveLiteral]) -> Lits {
    set.iter().map(ToString::to_string).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn render_parses_back(p in program_strategy(5, 8)) {
        prop_assert_eq!(parse_program(&p.render()).unwrap(), p);
    }

    #[test]
    fn preference_closure_is_a_strict_order(p in program_strategy(3, 8)) {
        let order = validate_preferences(&p).unwrap();
        for (a, b) in order.pairs() {
            prop_assert_ne!(a, b);
            prop_assert!(!order.pairs().contains(&(b.clone(), a.clone())));
            for (c, d) in order.pairs() {
                if b == c {
                    prop_assert!(order.pairs().contains(&(a.clone(), d.clone())));
                }
            }
        }
    }

    #[test]
    fn answer_sets_match_the_oracle(p in program_strategy(4, 7)) {
        let ctx = Context::new(&p).unwrap();
        let got: BTreeSet<Lits> = answer_sets(&ctx).iter().map(|s| names(s.positive())).collect();
        let want: BTreeSet<Lits> = common::answer_sets(&p).into_iter().collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn minimal_generating_sets_match_the_oracle(p in program_strategy(4, 7)) {
        let ctx = Context::new(&p).unwrap();
        for s in answer_sets(&ctx) {
            let got: BTreeSet<BTreeSet<usize>> =
                minimal_generating_sets(&ctx, &s).into_iter().map(|g| g.rules.into_iter().collect()).collect();
            let want: BTreeSet<BTreeSet<usize>> = common::minimal_generating(&p, &names(s.positive())).into_iter().collect();
            prop_assert_eq!(got, want);
        }
    }

    #[test]
    fn cn_matches_sequences_and_is_monotone(p in program_strategy(4, 7), masks in (any::<u16>(), any::<u16>(), any::<u8>())) {
        let ctx = Context::new(&p).unwrap();
        let obj = ctx.literals(ctx.all());
        let pick = |m: u64| obj.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, l)| l.clone()).collect::<BTreeSet<_>>();
        let w1 = pick(u64::from(masks.0));
        let w2: BTreeSet<_> = w1.union(&pick(u64::from(masks.1))).cloned().collect();
        let z = pick(u64::from(masks.2));
        let cn = |w: &BTreeSet<ObjectiveLiteral>| {
            let defaults: BTreeSet<Literal> = w.iter().cloned().map(Literal::default).collect();
            praset::semantics::consequences(&ctx, &z, &defaults).unwrap()
        };
        let (c1, c2) = (cn(&w1), cn(&w2));
        prop_assert!(c1.is_subset(&c2));
        let objective_part: Lits = c1.iter().filter(|l| !l.is_default()).map(ToString::to_string).collect();
        let zn: Lits = z.iter().map(ToString::to_string).collect();
        prop_assert_eq!(objective_part, common::cn_by_sequences(&p, &zn, &names(&w1.into_iter().collect::<Vec<_>>())));
    }

    #[test]
    fn complete_structures_are_answer_sets(p in program_strategy(4, 6)) {
        let a = analyze(&p, &Options::default()).unwrap();
        let oracle: BTreeSet<Lits> = common::answer_sets(&p).into_iter().collect();
        let all = a.ctx.all();
        for id in a.universe.complete_ids() {
            let s = a.universe.get(id);
            prop_assert_eq!(s.x, all.minus(s.y));
            prop_assert!(oracle.contains(&names(&a.ctx.literals(s.y))));
        }
    }

    #[test]
    fn derivations_replay_and_end_at_the_answer_set(p in program_strategy(4, 6)) {
        let ctx = Context::new(&p).unwrap();
        for s in answer_sets(&ctx) {
            for d in derivations(&ctx, &s, DerivationMode::FoldPermutations) {
                prop_assert!(d.check(&ctx).is_ok());
                prop_assert_eq!(d.last().y, s.bits());
                prop_assert_eq!(d.last().x, s.negative_bits(&ctx));
            }
        }
    }

    #[test]
    fn attack_closure_is_ordered(p in program_strategy(4, 7)) {
        let a = analyze(&p, &Options::default()).unwrap();
        for at in a.closure.definite.attacks() {
            prop_assert!(a.closure.possible.contains(at));
        }
        for (at, _) in &a.basic {
            prop_assert!(a.closure.definite.contains(*at));
        }
        for v in &a.verdicts {
            for d in &v.derivations {
                if let Some(chain) = &d.blocked_by {
                    prop_assert!(chain.steps.iter().all(|(at, _)| a.closure.definite.contains(*at)));
                    prop_assert!(a.universe.is_complete(chain.last().attacker));
                }
            }
        }
    }

    #[test]
    fn coherent_programs_have_a_preferred_answer_set(p in program_strategy(4, 8)) {
        let a = analyze(&p, &Options::default()).unwrap();
        let all: BTreeSet<Lits> = a.answer_sets().map(|s| names(s.positive())).collect();
        let won: BTreeSet<Lits> = a.preferred().map(|s| names(s.positive())).collect();
        prop_assert!(won.is_subset(&all));
        prop_assert_eq!(all.is_empty(), won.is_empty());
    }
}
