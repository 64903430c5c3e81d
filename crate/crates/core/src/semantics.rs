//! Answer sets, the consequence operator and generating rules.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::context::{Context, ObjSet};
use crate::error::{Error, Result};
use crate::lang::{Literal, ObjectiveLiteral};

/// A consistent set of literals.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Interpretation {
    pub literals: BTreeSet<Literal>,
}

impl Interpretation {
    pub fn new(literals: impl IntoIterator<Item = Literal>) -> Self {
        Interpretation { literals: literals.into_iter().collect() }
    }

    /// The total interpretation over the signature whose objective part is `positive`.
    pub fn total(ctx: &Context, positive: ObjSet) -> Self {
        let lits = ctx.all().iter().map(|id| {
            let l = ctx.literal(id);
            if positive.contains(id) {
                Literal::objective(l)
            } else {
                Literal::default(l)
            }
        });
        Interpretation::new(lits)
    }

    pub fn is_consistent(&self) -> bool {
        crate::lang::is_consistent(&self.literals)
    }

    /// Objective part, when the interpretation is total over `ctx`.
    pub fn positive_part(&self, ctx: &Context) -> Result<ObjSet> {
        let mut pos = ObjSet::EMPTY;
        let mut neg = ObjSet::EMPTY;
        for l in &self.literals {
            let id = ctx.literal_id(&l.objective).ok_or(Error::NotTotal)?;
            if l.default_neg {
                neg.insert(id);
            } else {
                pos.insert(id);
            }
        }
        if pos.union(neg) != ctx.all() || !pos.is_disjoint(neg) {
            return Err(Error::NotTotal);
        }
        Ok(pos)
    }
}

/// A rule without default literals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DefiniteRule {
    pub name: String,
    pub head: ObjectiveLiteral,
    pub body: Vec<ObjectiveLiteral>,
}

/// An answer set, stored as its objective part S⁺ over the signature.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnswerSet {
    positive: ObjSet,
    literals: Vec<ObjectiveLiteral>,
}

impl AnswerSet {
    pub(crate) fn from_bits(ctx: &Context, positive: ObjSet) -> Self {
        AnswerSet { positive, literals: ctx.literals(positive) }
    }

    /// S⁺ as bits.
    pub fn bits(&self) -> ObjSet {
        self.positive
    }

    /// S⁺ in canonical order.
    pub fn positive(&self) -> &[ObjectiveLiteral] {
        &self.literals
    }

    /// S⁻ as bits: the payloads of the default literals.
    pub fn negative_bits(&self, ctx: &Context) -> ObjSet {
        ctx.all().minus(self.positive)
    }

    pub fn to_interpretation(&self, ctx: &Context) -> Interpretation {
        Interpretation::total(ctx, self.positive)
    }

    /// `a, -b` style names, one per literal.
    pub fn names(&self) -> Vec<String> {
        self.literals.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for AnswerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names().join(", "))
    }
}

/// A set of rules generating an answer set, by rule index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GeneratingSet {
    pub rules: Vec<usize>,
    pub minimal: bool,
}

impl GeneratingSet {
    pub fn names(&self, ctx: &Context) -> Vec<String> {
        self.rules.iter().map(|&i| ctx.rule_name(i).to_string()).collect()
    }
}

/// `{r⁺ | body⁻(r) ⊆ S}` for a total interpretation `S`.
pub fn reduct(ctx: &Context, s: &Interpretation) -> Result<Vec<DefiniteRule>> {
    let positive = s.positive_part(ctx)?;
    let negative = ctx.all().minus(positive);
    Ok(ctx
        .program()
        .rules
        .iter()
        .zip(ctx.rules())
        .filter(|(_, c)| c.neg.is_subset(negative))
        .map(|(r, _)| DefiniteRule {
            name: r.name.clone(),
            head: r.head.clone(),
            body: r.body_pos().cloned().collect(),
        })
        .collect())
}

/// Forward chaining to the least fixpoint.
pub fn least_model(rules: &[DefiniteRule]) -> BTreeSet<ObjectiveLiteral> {
    let mut m = BTreeSet::new();
    loop {
        let mut changed = false;
        for r in rules {
            if !m.contains(&r.head) && r.body.iter().all(|l| m.contains(l)) {
                m.insert(r.head.clone());
                changed = true;
            }
        }
        if !changed {
            return m;
        }
    }
}

/// All answer sets, in canonical order.
///
/// Guesses which literals that occur under `not` are true; the guess is
/// kept when the least model of the reduct reproduces it exactly.
pub fn answer_sets(ctx: &Context) -> Vec<AnswerSet> {
    let under_not = ctx.rules().iter().fold(ObjSet::EMPTY, |acc, r| acc.union(r.neg));
    let mut found: Vec<ObjSet> = Vec::new();
    for guess in under_not.subsets() {
        if guess.has_complementary_pair() {
            continue;
        }
        let m = ctx.least_model(Some(ctx.all().minus(guess)), ObjSet::EMPTY);
        if m.inter(under_not) == guess && !m.has_complementary_pair() {
            found.push(m);
        }
    }
    let mut sets: Vec<AnswerSet> = found.into_iter().map(|m| AnswerSet::from_bits(ctx, m)).collect();
    sort_canonical(&mut sets);
    sets
}

pub(crate) fn sort_canonical(sets: &mut [AnswerSet]) {
    sets.sort_by(|a, b| a.positive.iter().cmp(b.positive.iter()));
}

/// Independent re-check that `positive` is the objective part of an answer set.
pub fn is_answer_set(ctx: &Context, positive: ObjSet) -> bool {
    !positive.has_complementary_pair()
        && positive.is_subset(ctx.all())
        && ctx.least_model(Some(ctx.all().minus(positive)), ObjSet::EMPTY) == positive
}

/// Cn_{P∪Z}(W) for default literals `W`.
pub fn consequences(
    ctx: &Context,
    extra_facts: &BTreeSet<ObjectiveLiteral>,
    w: &BTreeSet<Literal>,
) -> Result<BTreeSet<Literal>> {
    let z = ctx.set_of(extra_facts)?;
    let mut payload = ObjSet::EMPTY;
    for l in w {
        if !l.default_neg {
            return Err(Error::PreconditionViolation(format!("`{l}` is not a default literal")));
        }
        payload.insert(ctx.literal_id(&l.objective).ok_or_else(|| Error::InvalidAtom(l.objective.atom.to_string()))?);
    }
    let mut out = w.clone();
    out.extend(ctx.literals(ctx.cn(payload, z)).into_iter().map(Literal::objective));
    Ok(out)
}

/// Cn_P(W) is consistent.
pub fn is_self_consistent(ctx: &Context, w: &BTreeSet<Literal>) -> Result<bool> {
    let cn = consequences(ctx, &BTreeSet::new(), w)?;
    Ok(crate::lang::is_consistent(&cn))
}

/// All rules whose body holds in the answer set.
pub fn generating_rules(ctx: &Context, s: &AnswerSet) -> GeneratingSet {
    let pos = s.bits();
    let rules = ctx
        .rules()
        .iter()
        .enumerate()
        .filter(|(_, r)| r.pos.is_subset(pos) && r.neg.is_disjoint(pos))
        .map(|(i, _)| i)
        .collect();
    GeneratingSet { rules, minimal: false }
}

/// The ⊆-minimal subsets of the generating rules that regenerate S⁺.
///
/// A minimal set contains exactly one rule per literal of S⁺, so the search
/// runs over one choice of rule per head.
pub fn minimal_generating_sets(ctx: &Context, s: &AnswerSet) -> Vec<GeneratingSet> {
    let full = generating_rules(ctx, s);
    let heads: Vec<u32> = s.bits().iter().collect();
    let options: Vec<Vec<usize>> =
        heads.iter().map(|&h| full.rules.iter().copied().filter(|&i| ctx.rules()[i].head == h).collect()).collect();
    if options.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let negative = s.negative_bits(ctx);
    let mut out = Vec::new();
    let mut pick = vec![0usize; options.len()];
    loop {
        let mut chosen: Vec<usize> = pick.iter().zip(&options).map(|(&k, o)| o[k]).collect();
        if ctx.least_model_of(&chosen, negative) == s.bits() {
            chosen.sort_unstable();
            out.push(GeneratingSet { rules: chosen, minimal: true });
        }
        let mut i = 0;
        loop {
            if i == pick.len() {
                out.sort();
                return out;
            }
            pick[i] += 1;
            if pick[i] < options[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}
