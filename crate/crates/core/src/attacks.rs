//! Attacks between argumentation structures and preferred answer sets.
//!
//! Attacks start from contradictions between basic structures whose rules
//! are ordered by preference, and spread by Q1–Q6. The negative premises
//! of Q1–Q4 ("is not attacked", "does not attack") are evaluated by an
//! alternating fixpoint: `Γ(J)` closes the basic attacks under Q1–Q6 with
//! negative premises tested against `J`, and the sequence
//! `U₀ = Γ(∅)`, `Lₖ₊₁ = Γ(Uₖ)`, `Uₖ₊₁ = Γ(Lₖ₊₁)` is run until it stops
//! moving. `L` is the definite attack relation, `U` the possible one.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::context::{Context, ObjSet};
use crate::error::{Error, Result};
use crate::lang::PrioritizedProgram;
use crate::semantics::{answer_sets, AnswerSet};
pub use crate::structures::DerivationMode;
use crate::structures::{
    derivations, is_complete, saturate, ArgStructure, Derivation, StructureId, StructureUniverse,
    DEFAULT_STRUCTURE_LIMIT,
};

/// Attack count cap, as a multiple of the structure limit.
pub const ATTACKS_PER_STRUCTURE: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Attack {
    pub attacker: StructureId,
    pub attacked: StructureId,
}

impl Attack {
    pub fn new(attacker: StructureId, attacked: StructureId) -> Self {
        Attack { attacker, attacked }
    }
}

/// Why an attack holds. `premise` indexes the attack it was derived from;
/// `partner` is the third structure of Q1–Q4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AttackRule {
    Basic { more: usize, less: usize },
    Q1 { premise: usize, partner: StructureId },
    Q2 { premise: usize, partner: StructureId },
    Q3 { premise: usize, partner: StructureId },
    Q4 { premise: usize, partner: StructureId },
    Q5 { premise: usize, added: ObjSet },
    Q6 { premise: usize, added: ObjSet },
}

impl AttackRule {
    pub fn tag(&self) -> &'static str {
        match self {
            AttackRule::Basic { .. } => "Basic",
            AttackRule::Q1 { .. } => "Q1",
            AttackRule::Q2 { .. } => "Q2",
            AttackRule::Q3 { .. } => "Q3",
            AttackRule::Q4 { .. } => "Q4",
            AttackRule::Q5 { .. } => "Q5",
            AttackRule::Q6 { .. } => "Q6",
        }
    }

    pub fn premise(&self) -> Option<usize> {
        match *self {
            AttackRule::Basic { .. } => None,
            AttackRule::Q1 { premise, .. }
            | AttackRule::Q2 { premise, .. }
            | AttackRule::Q3 { premise, .. }
            | AttackRule::Q4 { premise, .. }
            | AttackRule::Q5 { premise, .. }
            | AttackRule::Q6 { premise, .. } => Some(premise),
        }
    }

    fn with_premise(self, p: usize) -> Self {
        match self {
            AttackRule::Basic { .. } => self,
            AttackRule::Q1 { partner, .. } => AttackRule::Q1 { premise: p, partner },
            AttackRule::Q2 { partner, .. } => AttackRule::Q2 { premise: p, partner },
            AttackRule::Q3 { partner, .. } => AttackRule::Q3 { premise: p, partner },
            AttackRule::Q4 { partner, .. } => AttackRule::Q4 { premise: p, partner },
            AttackRule::Q5 { added, .. } => AttackRule::Q5 { premise: p, added },
            AttackRule::Q6 { added, .. } => AttackRule::Q6 { premise: p, added },
        }
    }
}

/// A chain of attacks from a basic attack; every step after the first is
/// derived from the one before it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttackDerivation {
    pub steps: Vec<(Attack, AttackRule)>,
}

impl AttackDerivation {
    pub fn last(&self) -> Attack {
        self.steps.last().expect("attack derivations are nonempty").0
    }

    pub fn tags(&self) -> Vec<&'static str> {
        self.steps.iter().map(|(_, r)| r.tag()).collect()
    }
}

/// `A` contradicts `B`: some `L ∈ Y_A` has `not L ∈ X_B`.
pub fn contradicts(a: &ArgStructure, b: &ArgStructure) -> bool {
    !a.y.is_disjoint(b.x)
}

/// Pairs of basic structures `(A_r1, A_r2)` with `r2 ≺ r1` where the first contradicts the second.
pub fn basic_attacks(ctx: &Context, universe: &StructureUniverse) -> Vec<(Attack, AttackRule)> {
    let n = ctx.rules().len();
    let mut out: Vec<(Attack, AttackRule)> = Vec::new();
    for more in 0..n {
        for less in 0..n {
            if !ctx.less(less, more) {
                continue;
            }
            let (Some(a), Some(b)) = (universe.basic_of(more), universe.basic_of(less)) else { continue };
            if contradicts(universe.get(a), universe.get(b)) {
                let at = Attack::new(a, b);
                if !out.iter().any(|(x, _)| *x == at) {
                    out.push((at, AttackRule::Basic { more, less }));
                }
            }
        }
    }
    out
}

/// The attacks found by one closure run, with provenance.
#[derive(Debug, Clone, Default)]
pub struct AttackRun {
    attacks: Vec<(Attack, AttackRule)>,
    index: HashMap<Attack, usize>,
    attacked: Vec<bool>,
}

impl AttackRun {
    pub fn len(&self) -> usize {
        self.attacks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.attacks.is_empty()
    }

    pub fn attacks(&self) -> impl Iterator<Item = Attack> + '_ {
        self.attacks.iter().map(|(a, _)| *a)
    }

    pub fn contains(&self, a: Attack) -> bool {
        self.index.contains_key(&a)
    }

    /// Some attack has `id` as its second component.
    pub fn is_attacked(&self, id: StructureId) -> bool {
        self.attacked.get(id.index()).copied().unwrap_or(false)
    }

    pub fn set(&self) -> HashSet<Attack> {
        self.index.keys().copied().collect()
    }

    /// The chain from a basic attack to `a`, following recorded premises.
    pub fn derivation(&self, a: Attack) -> Option<AttackDerivation> {
        let mut k = *self.index.get(&a)?;
        let mut rev = vec![self.attacks[k]];
        while let Some(p) = self.attacks[k].1.premise() {
            k = p;
            rev.push(self.attacks[k]);
        }
        rev.reverse();
        let steps = rev
            .into_iter()
            .enumerate()
            .map(|(i, (at, r))| (at, if i == 0 { r } else { r.with_premise(i - 1) }))
            .collect();
        Some(AttackDerivation { steps })
    }
}

struct Gamma<'a> {
    universe: &'a StructureUniverse,
    negatives: Option<&'a AttackRun>,
    allowed: Option<&'a [bool]>,
    strict_q3: bool,
    cap: usize,
}

impl Gamma<'_> {
    fn attacks(&self, c: StructureId, a: StructureId) -> bool {
        self.negatives.is_some_and(|j| j.contains(Attack::new(c, a)))
    }

    fn attacked(&self, c: StructureId) -> bool {
        self.negatives.is_some_and(|j| j.is_attacked(c))
    }

    fn allowed(&self, id: StructureId) -> bool {
        self.allowed.is_none_or(|m| m[id.index()])
    }

    fn union_id(&self, a: &ArgStructure, b: &ArgStructure) -> Option<StructureId> {
        let y = a.y.union(b.y);
        let x = a.x.union(b.x);
        if y.has_complementary_pair() || !y.is_disjoint(x) {
            return None;
        }
        self.universe.id_of(&ArgStructure::new(y, x, ObjSet::EMPTY))
    }

    fn run(&self, seeds: &[(Attack, AttackRule)]) -> Result<AttackRun> {
        let u = self.universe;
        let mut run = AttackRun { attacked: vec![false; u.len()], ..Default::default() };
        let add = |run: &mut AttackRun, at: Attack, why: AttackRule| -> Result<()> {
            if run.index.contains_key(&at) {
                return Ok(());
            }
            if run.attacks.len() >= self.cap {
                return Err(Error::ResourceLimit { what: "attacks", limit: self.cap });
            }
            run.index.insert(at, run.attacks.len());
            run.attacks.push((at, why));
            run.attacked[at.attacked.index()] = true;
            Ok(())
        };
        for &(at, why) in seeds {
            if self.allowed(at.attacked) {
                add(&mut run, at, why)?;
            }
        }
        let mut k = 0;
        while k < run.attacks.len() {
            let Attack { attacker: a, attacked: b } = run.attacks[k].0;
            let (sa, sb) = (*u.get(a), *u.get(b));

            for &(c, r) in u.unfoldings(b) {
                if self.allowed(r) && !self.attacks(c, a) {
                    add(&mut run, Attack::new(a, r), AttackRule::Q1 { premise: k, partner: c })?;
                }
            }
            for &(c, r) in u.unfoldings(a) {
                if !self.attacked(c) {
                    add(&mut run, Attack::new(r, b), AttackRule::Q2 { premise: k, partner: c })?;
                }
            }
            if sa.is_condition_free() {
                for &c in u.condition_free() {
                    if self.strict_q3 && self.attacked(c) {
                        continue;
                    }
                    if let Some(r) = self.union_id(&sa, u.get(c)) {
                        add(&mut run, Attack::new(r, b), AttackRule::Q3 { premise: k, partner: c })?;
                    }
                }
                if let Some(r) = u.completion(a) {
                    add(&mut run, Attack::new(r, b), AttackRule::Q5 { premise: k, added: u.get(r).x.minus(sa.x) })?;
                }
            }
            if sb.is_condition_free() {
                for &c in u.condition_free() {
                    if let Some(r) = self.union_id(&sb, u.get(c)) {
                        if self.allowed(r) && !self.attacks(c, a) {
                            add(&mut run, Attack::new(a, r), AttackRule::Q4 { premise: k, partner: c })?;
                        }
                    }
                }
                if let Some(r) = u.completion(b) {
                    if self.allowed(r) {
                        add(&mut run, Attack::new(a, r), AttackRule::Q6 { premise: k, added: u.get(r).x.minus(sb.x) })?;
                    }
                }
            }
            k += 1;
        }
        Ok(run)
    }
}

/// Result of the alternating fixpoint.
#[derive(Debug, Clone)]
pub struct AttackClosure {
    pub definite: AttackRun,
    pub possible: AttackRun,
    pub stable: bool,
    /// Number of Γ evaluations.
    pub rounds: usize,
}

/// Closes the basic attacks under Q1–Q6.
pub fn attack_closure(ctx: &Context, universe: &StructureUniverse, options: &Options) -> Result<AttackClosure> {
    let seeds = basic_attacks(ctx, universe);
    let gamma = |neg: Option<&AttackRun>| {
        Gamma {
            universe,
            negatives: neg,
            allowed: None,
            strict_q3: options.strict_q3,
            cap: options.limit.saturating_mul(ATTACKS_PER_STRUCTURE),
        }
        .run(&seeds)
    };
    let mut upper = gamma(None)?;
    let mut lower = AttackRun::default();
    let mut rounds = 1;
    loop {
        let next_lower = gamma(Some(&upper))?;
        let next_upper = gamma(Some(&next_lower))?;
        rounds += 2;
        let done = next_lower.len() == lower.len() && next_upper.len() == upper.len();
        lower = next_lower;
        upper = next_upper;
        if done {
            break;
        }
    }
    let stable = lower.len() == upper.len();
    Ok(AttackClosure { definite: lower, possible: upper, stable, rounds })
}

/// An attack derivation blocking `sigma`, if one exists.
///
/// The search keeps the attacked side inside `sigma`; attackers range over
/// the whole universe. Negative premises are tested against the possible
/// attacks, so every attack found is definite.
pub fn is_blocked(
    ctx: &Context,
    universe: &StructureUniverse,
    closure: &AttackClosure,
    sigma: &Derivation,
    options: &Options,
) -> Result<Option<AttackDerivation>> {
    let mut allowed = vec![false; universe.len()];
    for s in sigma.members() {
        if let Some(id) = universe.id_of(s) {
            allowed[id.index()] = true;
        }
    }
    let Some(target) = universe.id_of(sigma.last()) else {
        return Ok(None);
    };
    let seeds = basic_attacks(ctx, universe);
    let run = Gamma {
        universe,
        negatives: Some(&closure.possible),
        allowed: Some(&allowed),
        strict_q3: options.strict_q3,
        cap: options.limit.saturating_mul(ATTACKS_PER_STRUCTURE),
    }
    .run(&seeds)?;
    let hit = run.attacks().find(|at| at.attacked == target && universe.is_complete(at.attacker));
    Ok(hit.and_then(|at| run.derivation(at)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    /// Largest number of structures before `ResourceLimit`.
    pub limit: usize,
    pub derivations: DerivationMode,
    /// Keep Q3's premise that the joined structure is not attacked.
    pub strict_q3: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { limit: DEFAULT_STRUCTURE_LIMIT, derivations: DerivationMode::Canonical, strict_q3: true }
    }
}

#[derive(Debug, Clone)]
pub struct DerivationVerdict {
    pub derivation: Derivation,
    pub blocked_by: Option<AttackDerivation>,
}

impl DerivationVerdict {
    pub fn is_warranted(&self) -> bool {
        self.blocked_by.is_none()
    }
}

#[derive(Debug, Clone)]
pub struct AnswerSetVerdict {
    pub answer_set: AnswerSet,
    /// ⟨S⁺ ↩ S⁻⟩.
    pub structure: ArgStructure,
    pub derivations: Vec<DerivationVerdict>,
    pub preferred: bool,
}

/// Everything computed for one program.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub ctx: Context,
    pub universe: StructureUniverse,
    pub basic: Vec<(Attack, AttackRule)>,
    pub closure: AttackClosure,
    pub verdicts: Vec<AnswerSetVerdict>,
    pub options: Options,
}

impl Analysis {
    pub fn answer_sets(&self) -> impl Iterator<Item = &AnswerSet> {
        self.verdicts.iter().map(|v| &v.answer_set)
    }

    pub fn preferred(&self) -> impl Iterator<Item = &AnswerSet> {
        self.verdicts.iter().filter(|v| v.preferred).map(|v| &v.answer_set)
    }

    /// Some tested derivation of the complete structure `a` is not blocked.
    pub fn is_warranted(&self, a: &ArgStructure) -> bool {
        self.verdicts.iter().any(|v| v.structure == *a && v.preferred)
    }

    pub fn verdict(&self, s: &AnswerSet) -> Option<&AnswerSetVerdict> {
        self.verdicts.iter().find(|v| v.answer_set == *s)
    }

    /// Re-derives each step of a chain from the previous one by the named rule,
    /// with negative premises tested against the possible attacks.
    pub fn replay(&self, chain: &[Attack], tags: &[&str]) -> Result<()> {
        let fail = |i: usize, why: String| Err(Error::PreconditionViolation(format!("attack {}: {why}", i + 1)));
        if chain.is_empty() || tags.len() + 1 != chain.len() {
            return fail(0, "need one tag per derived attack".into());
        }
        if !self.basic.iter().any(|(a, _)| *a == chain[0]) {
            return fail(0, "not a basic attack".into());
        }
        for (i, w) in chain.windows(2).enumerate() {
            if !self.q_step(w[0], w[1], tags[i]) {
                return fail(i + 1, format!("does not follow by {}", tags[i]));
            }
        }
        Ok(())
    }

    fn q_step(&self, from: Attack, to: Attack, tag: &str) -> bool {
        let u = &self.universe;
        let j = &self.closure.possible;
        let Attack { attacker: a, attacked: b } = from;
        let (sa, sb) = (*u.get(a), *u.get(b));
        let union = |x: &ArgStructure, c: StructureId| {
            let sc = u.get(c);
            u.id_of(&ArgStructure::new(x.y.union(sc.y), x.x.union(sc.x), ObjSet::EMPTY))
                .filter(|&r| self.ctx.self_consistent(u.get(r).x))
        };
        let extends = |small: &ArgStructure, big: StructureId| {
            let sbig = u.get(big);
            small.is_condition_free() && sbig.y == small.y && small.x.is_subset(sbig.x) && sbig.is_condition_free()
        };
        match tag {
            "Q1" => {
                to.attacker == a
                    && u.unfoldings(b).iter().any(|&(c, r)| r == to.attacked && !j.contains(Attack::new(c, a)))
            }
            "Q2" => to.attacked == b && u.unfoldings(a).iter().any(|&(c, r)| r == to.attacker && !j.is_attacked(c)),
            "Q3" => {
                to.attacked == b
                    && sa.is_condition_free()
                    && u.condition_free()
                        .iter()
                        .any(|&c| (!self.options.strict_q3 || !j.is_attacked(c)) && union(&sa, c) == Some(to.attacker))
            }
            "Q4" => {
                to.attacker == a
                    && sb.is_condition_free()
                    && u.condition_free()
                        .iter()
                        .any(|&c| !j.contains(Attack::new(c, a)) && union(&sb, c) == Some(to.attacked))
            }
            "Q5" => to.attacked == b && extends(&sa, to.attacker),
            "Q6" => to.attacker == a && extends(&sb, to.attacked),
            _ => false,
        }
    }
}

/// Answer sets, structures, attacks and blocking verdicts of a program.
pub fn analyze(program: &PrioritizedProgram, options: &Options) -> Result<Analysis> {
    let ctx = Context::new(program)?;
    analyze_context(ctx, options)
}

pub fn analyze_context(ctx: Context, options: &Options) -> Result<Analysis> {
    let sets = answer_sets(&ctx);
    let universe = saturate(&ctx, options.limit)?;
    let closure = attack_closure(&ctx, &universe, options)?;
    let basic = basic_attacks(&ctx, &universe);
    let verdicts = sets
        .par_iter()
        .map(|s| {
            let structure = ArgStructure::new(s.bits(), s.negative_bits(&ctx), ObjSet::EMPTY);
            debug_assert!(is_complete(&ctx, &structure));
            let derivations = derivations(&ctx, s, options.derivations)
                .into_iter()
                .map(|d| {
                    let blocked_by = is_blocked(&ctx, &universe, &closure, &d, options)?;
                    Ok(DerivationVerdict { derivation: d, blocked_by })
                })
                .collect::<Result<Vec<_>>>()?;
            let preferred = derivations.iter().any(DerivationVerdict::is_warranted);
            Ok(AnswerSetVerdict { answer_set: s.clone(), structure, derivations, preferred })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Analysis { ctx, universe, basic, closure, verdicts, options: *options })
}

/// `Y ∪ X` for every complete structure with a warranted derivation.
pub fn preferred_answer_sets(program: &PrioritizedProgram) -> Result<Vec<AnswerSet>> {
    Ok(analyze(program, &Options::default())?.preferred().cloned().collect())
}

/// A structure in the universe by its rendered literal lists; test and
/// example helper.
pub fn find_structure(a: &Analysis, y: &[&str], x: &[&str], z: &[&str]) -> Option<StructureId> {
    let set = |names: &[&str]| -> Option<ObjSet> {
        let mut s = ObjSet::EMPTY;
        for n in names {
            let id = a.ctx.all().iter().find(|&i| a.ctx.literal(i).to_string() == *n)?;
            s.insert(id);
        }
        Some(s)
    };
    a.universe.id_of(&ArgStructure::new(set(y)?, set(x)?, set(z)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_program;

    const RUNNING: &str = "r1: b :- a, not -b.\nr2: -b :- not b.\nr3: a :- not -a.\nprefer r1 > r2.";
    const AMBIGUITY: &str = "r1: a :- not b.\nr2: b :- not a.\nr3: a :- not c.\nr4: c :- b.\nprefer r2 > r1.";

    fn run(text: &str) -> Analysis {
        analyze(&parse_program(text).unwrap(), &Options::default()).unwrap()
    }

    fn preferred(a: &Analysis) -> Vec<String> {
        a.preferred().map(ToString::to_string).collect()
    }

    #[test]
    fn contradiction() {
        let a = run(RUNNING);
        let a1 = *a.universe.get(a.universe.basic_of(0).unwrap());
        let a2 = *a.universe.get(a.universe.basic_of(1).unwrap());
        assert!(contradicts(&a1, &a2) && contradicts(&a2, &a1));
        assert!(!contradicts(&a1, &a1));
    }

    #[test]
    fn running_example() {
        let a = run(RUNNING);
        let id = |y: &[&str], x: &[&str], z: &[&str]| find_structure(&a, y, x, z).unwrap();
        let a1 = id(&["b"], &["-b"], &["a"]);
        let a2 = id(&["-b"], &["b"], &[]);
        let a4 = id(&["b"], &["-a", "-b"], &[]);
        let a5 = id(&["a", "b"], &["-a", "-b"], &[]);
        let a6 = id(&["a", "-b"], &["-a", "b"], &[]);
        assert_eq!(a.basic.iter().map(|(x, _)| *x).collect::<Vec<_>>(), [Attack::new(a1, a2)]);
        for at in [Attack::new(a1, a2), Attack::new(a4, a2), Attack::new(a5, a2), Attack::new(a5, a6)] {
            assert!(a.closure.definite.contains(at));
        }
        assert!(a.closure.definite.attacks().all(|at| at.attacker != a2));
        assert!(a.closure.stable);
        assert_eq!(preferred(&a), ["{a, b}"]);
        let blocked = a.verdicts[1].derivations[0].blocked_by.as_ref().unwrap();
        assert_eq!(blocked.last(), Attack::new(a5, a6));
    }

    #[test]
    fn no_preferences_no_attacks() {
        let a = run("r1: a :- not b.\nr2: b :- not a.");
        assert!(a.basic.is_empty() && a.closure.definite.is_empty() && a.closure.possible.is_empty());
        assert!(a.closure.stable);
        assert_eq!(preferred(&a), ["{a}", "{b}"]);
    }

    #[test]
    fn ambiguity() {
        let a = run(AMBIGUITY);
        let id = |y: &[&str], x: &[&str], z: &[&str]| find_structure(&a, y, x, z).unwrap();
        let a1 = id(&["a"], &["b"], &[]);
        let a2 = id(&["b"], &["a"], &[]);
        let u42 = id(&["c"], &["a"], &[]);
        let b = id(&["b", "c"], &["a"], &[]);
        let full_a = id(&["a"], &["-a", "b", "-b", "c", "-c"], &[]);
        assert_eq!(a.basic.iter().map(|(x, _)| *x).collect::<Vec<_>>(), [Attack::new(a2, a1)]);
        let chain = [Attack::new(a2, a1), Attack::new(u42, a1), Attack::new(b, a1), Attack::new(b, full_a)];
        a.replay(&chain, &["Q2", "Q3", "Q6"]).unwrap();
        assert!(chain.iter().all(|&at| a.closure.definite.contains(at)));
        let v = &a.verdicts[0];
        assert!(v.derivations[0].blocked_by.is_some());
        assert!(v.derivations[1].blocked_by.is_none());
        assert!(v.preferred);
    }

    #[test]
    fn blocked_runs_stay_within_definite() {
        for text in [RUNNING, AMBIGUITY] {
            let a = run(text);
            for v in &a.verdicts {
                for d in &v.derivations {
                    if let Some(chain) = &d.blocked_by {
                        assert!(chain.steps.iter().all(|(at, _)| a.closure.definite.contains(*at)));
                    }
                }
            }
        }
    }
}
