//! Rule-level attacks between generating sets and checks of Principles
//! I, III, IV and of the preferred ⊆ answer sets theorem.
//!
//! The generating sets of an answer set that get judged are its minimal
//! ones; the attacking sets range over full generating sets.

use std::fmt;

use serde::Serialize;

use crate::attacks::{Analysis, Attack};
use crate::context::Context;
use crate::lang::PrioritizedProgram;
use crate::semantics::{generating_rules, minimal_generating_sets, AnswerSet, GeneratingSet};
use crate::structures::StructureId;

pub const QUANTIFIERS: &str = "R minimal, Q full";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Principle {
    Theorem,
    I,
    III,
    IV,
}

impl fmt::Display for Principle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Principle::Theorem => "theorem",
            Principle::I => "I",
            Principle::III => "III",
            Principle::IV => "IV",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A counterexample, with literals and rules by name.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub answer_sets: Vec<Vec<String>>,
    pub rule_sets: Vec<Vec<String>>,
    pub attacks: Vec<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrincipleReport {
    pub principle: Principle,
    pub program: String,
    pub verdict: Verdict,
    /// The antecedent never held.
    pub vacuous: bool,
    pub quantifiers: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl PrincipleReport {
    fn new(principle: Principle, program: &str, vacuous: bool, witness: Option<Witness>) -> Self {
        PrincipleReport {
            principle,
            program: program.to_string(),
            verdict: if witness.is_some() { Verdict::Fail } else { Verdict::Pass },
            vacuous,
            quantifiers: QUANTIFIERS,
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Some `r1 ∈ r1s`, `r2 ∈ r2s` with `r2 ≺ r1` and `not head(r1) ∈ body⁻(r2)`.
pub fn rule_set_attacks(ctx: &Context, r1s: &GeneratingSet, r2s: &GeneratingSet) -> bool {
    attacking_pair(ctx, r1s, r2s).is_some()
}

fn attacking_pair(ctx: &Context, r1s: &GeneratingSet, r2s: &GeneratingSet) -> Option<(usize, usize)> {
    for &r1 in &r1s.rules {
        for &r2 in &r2s.rules {
            if ctx.less(r2, r1) && ctx.rules()[r2].neg.contains(ctx.rules()[r1].head) {
                return Some((r1, r2));
            }
        }
    }
    None
}

/// Generating sets of every answer set, in the shape the checks need.
struct Sets {
    full: Vec<GeneratingSet>,
    minimal: Vec<Vec<GeneratingSet>>,
}

impl Sets {
    fn new(ctx: &Context, answer_sets: &[AnswerSet]) -> Self {
        Sets {
            full: answer_sets.iter().map(|s| generating_rules(ctx, s)).collect(),
            minimal: answer_sets.iter().map(|s| minimal_generating_sets(ctx, s)).collect(),
        }
    }

    fn attacker_of(&self, ctx: &Context, r: &GeneratingSet) -> Option<usize> {
        self.full.iter().position(|q| rule_set_attacks(ctx, q, r))
    }
}

/// No full generating set of any answer set attacks `r`.
pub fn is_warranted_rule_set(ctx: &Context, answer_sets: &[AnswerSet], r: &GeneratingSet) -> bool {
    Sets::new(ctx, answer_sets).attacker_of(ctx, r).is_none()
}

fn names(ctx: &Context, g: &GeneratingSet) -> Vec<String> {
    g.names(ctx)
}

fn attack_text(a: &Analysis, at: Attack) -> String {
    let show = |id: StructureId| a.universe.get(id).display(&a.ctx).to_string();
    format!("{} attacks {}", show(at.attacker), show(at.attacked))
}

fn blocker_texts(a: &Analysis, s: &AnswerSet) -> Vec<String> {
    a.verdict(s)
        .map(|v| v.derivations.iter().filter_map(|d| d.blocked_by.as_ref()).map(|c| attack_text(a, c.last())).collect())
        .unwrap_or_default()
}

/// preferred ⊆ answer sets, each preferred set re-checked as an answer set.
pub fn check_theorem_subset(id: &str, a: &Analysis) -> PrincipleReport {
    let bad = a.preferred().find(|s| !crate::semantics::is_answer_set(&a.ctx, s.bits()));
    let witness = bad.map(|s| Witness {
        answer_sets: vec![s.names()],
        detail: "preferred set is not an answer set".into(),
        ..Default::default()
    });
    PrincipleReport::new(Principle::Theorem, id, a.verdicts.is_empty(), witness)
}

/// A coherent program has a preferred answer set.
pub fn check_principle_iii(id: &str, a: &Analysis) -> PrincipleReport {
    let vacuous = a.verdicts.is_empty();
    let witness = (!vacuous && a.preferred().next().is_none()).then(|| Witness {
        answer_sets: a.answer_sets().map(AnswerSet::names).collect(),
        attacks: a.answer_sets().flat_map(|s| blocker_texts(a, s)).collect(),
        detail: "every answer set is blocked".into(),
        ..Default::default()
    });
    PrincipleReport::new(Principle::III, id, vacuous, witness)
}

/// An answer set with a warranted minimal generating set is preferred.
pub fn check_principle_iv(id: &str, a: &Analysis) -> PrincipleReport {
    let sets: Vec<AnswerSet> = a.answer_sets().cloned().collect();
    let gs = Sets::new(&a.ctx, &sets);
    let mut vacuous = true;
    for (i, s) in sets.iter().enumerate() {
        for r in &gs.minimal[i] {
            if gs.attacker_of(&a.ctx, r).is_some() {
                continue;
            }
            vacuous = false;
            if !a.verdicts[i].preferred {
                let witness = Witness {
                    answer_sets: vec![s.names()],
                    rule_sets: vec![names(&a.ctx, r)],
                    attacks: blocker_texts(a, s),
                    detail: "warranted generating set, answer set not preferred".into(),
                };
                return PrincipleReport::new(Principle::IV, id, false, Some(witness));
            }
        }
    }
    PrincipleReport::new(Principle::IV, id, vacuous, None)
}

/// Answer sets generated by `R ∪ {d1}` and `R ∪ {d2}` with `d2 ≺ d1`,
/// where every minimal generating set of the second is attacked by a
/// warranted generating set: the second is not preferred.
pub fn check_principle_i(id: &str, a: &Analysis) -> PrincipleReport {
    let ctx = &a.ctx;
    let sets: Vec<AnswerSet> = a.answer_sets().cloned().collect();
    let gs = Sets::new(ctx, &sets);
    let warranted_q: Vec<bool> = gs.full.iter().map(|q| gs.attacker_of(ctx, q).is_none()).collect();
    let attacked_everywhere: Vec<Option<Vec<usize>>> = (0..sets.len())
        .map(|i| {
            let mut by = Vec::new();
            for r in &gs.minimal[i] {
                let q = (0..gs.full.len()).find(|&q| warranted_q[q] && rule_set_attacks(ctx, &gs.full[q], r))?;
                by.push(q);
            }
            Some(by)
        })
        .collect();

    let mut vacuous = true;
    for i1 in 0..sets.len() {
        for i2 in 0..sets.len() {
            if i1 == i2 {
                continue;
            }
            let Some(attackers) = &attacked_everywhere[i2] else { continue };
            for m1 in &gs.minimal[i1] {
                for m2 in &gs.minimal[i2] {
                    let d1: Vec<usize> = m1.rules.iter().copied().filter(|r| !m2.rules.contains(r)).collect();
                    let d2: Vec<usize> = m2.rules.iter().copied().filter(|r| !m1.rules.contains(r)).collect();
                    if d1.len() != 1 || d2.len() != 1 || !ctx.less(d2[0], d1[0]) {
                        continue;
                    }
                    vacuous = false;
                    if a.verdicts[i2].preferred {
                        let mut rule_sets = vec![names(ctx, m1), names(ctx, m2)];
                        rule_sets.extend(attackers.iter().map(|&q| names(ctx, &gs.full[q])));
                        let witness = Witness {
                            answer_sets: vec![sets[i1].names(), sets[i2].names()],
                            rule_sets,
                            attacks: Vec::new(),
                            detail: format!(
                                "d1 = {}, d2 = {}; second answer set is preferred",
                                ctx.rule_name(d1[0]),
                                ctx.rule_name(d2[0])
                            ),
                        };
                        return PrincipleReport::new(Principle::I, id, false, Some(witness));
                    }
                }
            }
        }
    }
    PrincipleReport::new(Principle::I, id, vacuous, None)
}

/// The theorem, then Principles I, III and IV.
pub fn check_all(id: &str, a: &Analysis) -> Vec<PrincipleReport> {
    vec![check_theorem_subset(id, a), check_principle_i(id, a), check_principle_iii(id, a), check_principle_iv(id, a)]
}

/// Preferred answer sets of `base` that are no longer preferred in
/// `extended`, although no new rule has its positive body inside them.
///
/// This is the Principle II pattern. It is reported, not treated as a failure.
pub fn principle_ii_losses(base: &Analysis, extended: &Analysis, added: &PrioritizedProgram) -> Vec<AnswerSet> {
    let ext = &extended.ctx;
    let mut out = Vec::new();
    for s in base.preferred() {
        let lits: Vec<_> = s.positive().to_vec();
        let Ok(bits) = ext.set_of(&lits) else { continue };
        let untouched = added.rules.iter().all(|r| r.body_pos().any(|l| !lits.contains(l)));
        let still = extended.preferred().any(|t| t.bits() == bits);
        if untouched && !still {
            out.push(s.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::attacks::{analyze, Options};
    use crate::parse_program;
    use crate::semantics::answer_sets;

    const AMBIGUITY: &str = "r1: a :- not b.\nr2: b :- not a.\nr3: a :- not c.\nr4: c :- b.\nprefer r2 > r1.";

    fn run(text: &str) -> Analysis {
        analyze(&parse_program(text).unwrap(), &Options::default()).unwrap()
    }

    fn gs(ctx: &Context, rules: &[&str]) -> GeneratingSet {
        GeneratingSet { rules: rules.iter().map(|n| ctx.program().rule_index(n).unwrap()).collect(), minimal: true }
    }

    #[test]
    fn rule_level_attacks() {
        let a = run(AMBIGUITY);
        let c = &a.ctx;
        assert!(rule_set_attacks(c, &gs(c, &["r2", "r4"]), &gs(c, &["r1"])));
        for q in [&["r1", "r3"][..], &["r2", "r4"], &["r1"]] {
            assert!(!rule_set_attacks(c, &gs(c, q), &gs(c, &["r3"])));
        }
        let sets = answer_sets(c);
        assert!(is_warranted_rule_set(c, &sets, &gs(c, &["r3"])));
        assert!(!is_warranted_rule_set(c, &sets, &gs(c, &["r1"])));
    }

    #[test]
    fn no_order_no_rule_attacks() {
        let a = run("r1: a :- not b.\nr2: b :- not a.");
        let r = gs(&a.ctx, &["r1", "r2"]);
        assert!(!rule_set_attacks(&a.ctx, &r, &r));
    }

    #[test]
    fn ambiguity_passes_everything() {
        let a = run(AMBIGUITY);
        for rep in check_all("ambiguity", &a) {
            assert!(rep.passed(), "{rep:?}");
        }
        assert!(!check_principle_iv("ambiguity", &a).vacuous);
    }

    #[test]
    fn incoherent_is_vacuous() {
        let a = run("r: p :- not p.");
        let reports = check_all("loop", &a);
        assert!(reports.iter().all(|r| r.passed() && r.vacuous));
    }

    #[test]
    fn facts_pass_iv() {
        let a = run("r1: a.\nr2: b :- a.");
        let rep = check_principle_iv("facts", &a);
        assert!(rep.passed() && !rep.vacuous);
    }

    #[test]
    fn running_example_principle_i() {
        let a = run("r1: b :- a, not -b.\nr2: -b :- not b.\nr3: a :- not -a.\nprefer r1 > r2.");
        let rep = check_principle_i("running", &a);
        assert!(rep.passed() && !rep.vacuous, "{rep:?}");
    }

    #[test]
    fn principle_ii_loss_on_extension() {
        let base_text = "r1: c :- not b.\nr2: b :- not a.\nprefer r1 > r2.";
        let ext_text = format!("{base_text}\nr3: a :- c.\nprefer r3 > r1.\nprefer r3 > r2.");
        let added = parse_program("r3: a :- c.").unwrap();
        let lost = principle_ii_losses(&run(base_text), &run(&ext_text), &added);
        assert_eq!(lost.iter().map(ToString::to_string).collect::<Vec<_>>(), ["{b}"]);
    }
}
