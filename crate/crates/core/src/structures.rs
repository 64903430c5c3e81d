//! Argumentation structures ⟨Y ↩ X; Z⟩ and their derivations.
//!
//! `x` holds the payloads of the default literals in X, so `not L ∈ X`
//! is `x.contains(L)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::Serialize;

use crate::context::{Context, ObjSet};
use crate::error::{Error, Result};
use crate::lang::ObjectiveLiteral;
use crate::semantics::{minimal_generating_sets, AnswerSet, GeneratingSet};

pub const DEFAULT_STRUCTURE_LIMIT: usize = 200_000;

/// ⟨Y ↩ X; Z⟩ over the signature of some [`Context`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArgStructure {
    pub y: ObjSet,
    pub x: ObjSet,
    pub z: ObjSet,
}

impl ArgStructure {
    pub fn new(y: ObjSet, x: ObjSet, z: ObjSet) -> Self {
        ArgStructure { y, x, z }
    }

    /// Builds from literal lists; `x` lists the literals under `not`.
    pub fn from_literals(
        ctx: &Context,
        y: &[ObjectiveLiteral],
        x: &[ObjectiveLiteral],
        z: &[ObjectiveLiteral],
    ) -> Result<Self> {
        Ok(ArgStructure { y: ctx.set_of(y)?, x: ctx.set_of(x)?, z: ctx.set_of(z)? })
    }

    pub fn is_condition_free(&self) -> bool {
        self.z.is_empty()
    }

    pub fn display<'a>(&'a self, ctx: &'a Context) -> impl fmt::Display + 'a {
        Shown { s: self, ctx }
    }
}

struct Shown<'a> {
    s: &'a ArgStructure,
    ctx: &'a Context,
}

impl fmt::Display for Shown<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{} ↩ {}", self.ctx.fmt_set(self.s.y), self.ctx.fmt_defaults(self.s.x))?;
        if !self.s.z.is_empty() {
            write!(f, "; {}", self.ctx.fmt_set(self.s.z))?;
        }
        f.write_str("⟩")
    }
}

static CONSTRUCTED: AtomicU64 = AtomicU64::new(0);
static VIOLATIONS: AtomicU64 = AtomicU64::new(0);

/// Process-wide count of constructed structures and of those that failed
/// the dependency-structure check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Audit {
    pub constructed: u64,
    pub violations: u64,
}

pub fn audit() -> Audit {
    Audit { constructed: CONSTRUCTED.load(Ordering::Relaxed), violations: VIOLATIONS.load(Ordering::Relaxed) }
}

fn admit(ctx: &Context, s: ArgStructure) -> ArgStructure {
    CONSTRUCTED.fetch_add(1, Ordering::Relaxed);
    if !is_dependency_structure(ctx, &s) {
        VIOLATIONS.fetch_add(1, Ordering::Relaxed);
        debug_assert!(false, "not a dependency structure: {}", s.display(ctx));
    }
    s
}

/// Y consistent, X self-consistent, pos(X) ∩ Z = ∅ and Y ⊆ Cn_{P∪Z}(X).
pub fn is_dependency_structure(ctx: &Context, s: &ArgStructure) -> bool {
    let inside = s.y.union(s.x).union(s.z).is_subset(ctx.all());
    inside
        && !s.y.has_complementary_pair()
        && ctx.self_consistent(s.x)
        && s.x.is_disjoint(s.z)
        && s.y.is_subset(ctx.cn(s.x, s.z))
}

/// ⟨{head(r)} ↩ body⁻(r); body⁺(r)⟩, when body⁻(r) is self-consistent and
/// shares no literal with body⁺(r).
pub fn basic_structure(ctx: &Context, rule: usize) -> Option<ArgStructure> {
    let r = ctx.rules()[rule];
    if !ctx.self_consistent(r.neg) || !r.neg.is_disjoint(r.pos) {
        return None;
    }
    Some(admit(ctx, ArgStructure::new(ObjSet::single(r.head), r.neg, r.pos)))
}

fn unfold(ctx: &Context, a1: &ArgStructure, rule: usize) -> Option<ArgStructure> {
    let r = ctx.rules()[rule];
    let objective = a1.z.union(r.pos).union(a1.y);
    let defaults = a1.x.union(r.neg);
    if objective.has_complementary_pair() || !objective.is_disjoint(defaults) || !ctx.self_consistent(defaults) {
        return None;
    }
    let mut z = a1.z;
    z.remove(r.head);
    Some(admit(ctx, ArgStructure::new(a1.y, defaults, z.union(r.pos))))
}

fn union(ctx: &Context, a: &ArgStructure, b: &ArgStructure) -> Option<ArgStructure> {
    let y = a.y.union(b.y);
    let x = a.x.union(b.x);
    if y.has_complementary_pair() || !y.is_disjoint(x) || !ctx.self_consistent(x) {
        return None;
    }
    Some(admit(ctx, ArgStructure::new(y, x, ObjSet::EMPTY)))
}

fn extend(ctx: &Context, a: &ArgStructure, w: ObjSet) -> Option<ArgStructure> {
    let x = a.x.union(w);
    if a.y.has_complementary_pair() || !a.y.is_disjoint(x) || !ctx.self_consistent(x) {
        return None;
    }
    Some(admit(ctx, ArgStructure::new(a.y, x, ObjSet::EMPTY)))
}

/// R1: unfolds the condition `head(r2)` of `a1` with the basic structure `a2` of `r2`.
pub fn apply_r1(ctx: &Context, a1: &ArgStructure, a2: &ArgStructure) -> Result<Option<ArgStructure>> {
    if a1.y.len() != 1 || !ctx.rules().iter().any(|r| a1.y.contains(r.head)) {
        return Err(Error::PreconditionViolation("R1 needs a first premise concluding one rule head".into()));
    }
    if a1.z.is_empty() {
        return Err(Error::PreconditionViolation("R1 needs a first premise with conditions".into()));
    }
    let Some(rule) = (0..ctx.rules().len()).find(|&i| basic_structure(ctx, i).as_ref() == Some(a2)) else {
        return Err(Error::PreconditionViolation("R1 needs a basic structure as second premise".into()));
    };
    if !a1.z.contains(ctx.rules()[rule].head) {
        return Err(Error::PreconditionViolation("the second premise concludes no condition of the first".into()));
    }
    Ok(unfold(ctx, a1, rule))
}

/// R2: ⟨Y1 ∪ Y2 ↩ X1 ∪ X2⟩.
pub fn apply_r2(ctx: &Context, a1: &ArgStructure, a2: &ArgStructure) -> Result<Option<ArgStructure>> {
    if !a1.is_condition_free() || !a2.is_condition_free() {
        return Err(Error::PreconditionViolation("R2 needs condition-free premises".into()));
    }
    Ok(union(ctx, a1, a2))
}

/// R3: ⟨Y1 ↩ X1 ∪ W⟩, with `w` the payloads of W.
pub fn apply_r3(ctx: &Context, a1: &ArgStructure, w: ObjSet) -> Result<Option<ArgStructure>> {
    if !a1.is_condition_free() {
        return Err(Error::PreconditionViolation("R3 needs a condition-free premise".into()));
    }
    if !w.is_subset(ctx.all()) {
        return Err(Error::PreconditionViolation("W lies outside the signature".into()));
    }
    Ok(extend(ctx, a1, w))
}

/// Every literal of the signature is concluded or assumed absent.
pub fn is_complete(ctx: &Context, a: &ArgStructure) -> bool {
    a.is_condition_free() && a.y.union(a.x) == ctx.all()
}

/// The R3 extension of `a` to a complete structure, if it is one.
pub fn complete_extension(ctx: &Context, a: &ArgStructure) -> Option<ArgStructure> {
    if !a.is_condition_free() {
        return None;
    }
    extend(ctx, a, ctx.all().minus(a.y).minus(a.x))
}

/// Index of a structure in a [`StructureUniverse`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StructureId(pub u32);

impl StructureId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// How a structure first entered the universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Basic(usize),
    R1 { unfolded: StructureId, basic: StructureId },
    R2(StructureId, StructureId),
    R3(StructureId),
}

/// The derivable structures of a program.
///
/// Conditional structures and their unfoldings are closed exactly. The
/// condition-free part holds the R2 closure of the condition-free basic
/// and unfolded structures, plus, for each of them, its R3 extension to a
/// complete structure where that one exists. Other R3 extensions are not
/// stored; [`StructureUniverse::is_derivable`] answers for them.
#[derive(Debug, Clone)]
pub struct StructureUniverse {
    structures: Vec<ArgStructure>,
    origins: Vec<Origin>,
    index: HashMap<ArgStructure, StructureId>,
    basic: Vec<Option<StructureId>>,
    basic_rules: Vec<Vec<usize>>,
    unfoldings: Vec<Vec<(StructureId, StructureId)>>,
    condition_free: Vec<StructureId>,
    completion: Vec<Option<StructureId>>,
    complete: Vec<bool>,
    by_conclusion: HashMap<ObjSet, Vec<StructureId>>,
}

impl StructureUniverse {
    fn empty(rules: usize) -> Self {
        StructureUniverse {
            structures: Vec::new(),
            origins: Vec::new(),
            index: HashMap::new(),
            basic: vec![None; rules],
            basic_rules: Vec::new(),
            unfoldings: Vec::new(),
            condition_free: Vec::new(),
            completion: Vec::new(),
            complete: Vec::new(),
            by_conclusion: HashMap::new(),
        }
    }

    fn insert(&mut self, s: ArgStructure, origin: Origin, limit: usize) -> Result<(StructureId, bool)> {
        if let Some(&id) = self.index.get(&s) {
            return Ok((id, false));
        }
        if self.structures.len() >= limit {
            return Err(Error::ResourceLimit { what: "structures", limit });
        }
        let id = StructureId(self.structures.len() as u32);
        self.structures.push(s);
        self.origins.push(origin);
        self.index.insert(s, id);
        self.basic_rules.push(Vec::new());
        self.unfoldings.push(Vec::new());
        self.completion.push(None);
        self.complete.push(false);
        Ok((id, true))
    }

    pub fn len(&self) -> usize {
        self.structures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.structures.is_empty()
    }

    pub fn get(&self, id: StructureId) -> &ArgStructure {
        &self.structures[id.index()]
    }

    pub fn id_of(&self, s: &ArgStructure) -> Option<StructureId> {
        self.index.get(s).copied()
    }

    pub fn ids(&self) -> impl Iterator<Item = StructureId> {
        (0..self.structures.len() as u32).map(StructureId)
    }

    pub fn origin(&self, id: StructureId) -> Origin {
        self.origins[id.index()]
    }

    /// The basic structure of rule `rule`, if it has one.
    pub fn basic_of(&self, rule: usize) -> Option<StructureId> {
        self.basic[rule]
    }

    /// Rules whose basic structure is `id`.
    pub fn basic_rules(&self, id: StructureId) -> &[usize] {
        &self.basic_rules[id.index()]
    }

    /// `(partner, u(id, partner))` for every R1 step `id` takes part in, in either role.
    pub fn unfoldings(&self, id: StructureId) -> &[(StructureId, StructureId)] {
        &self.unfoldings[id.index()]
    }

    pub fn condition_free(&self) -> &[StructureId] {
        &self.condition_free
    }

    /// The stored complete R3 extension of a condition-free structure.
    pub fn completion(&self, id: StructureId) -> Option<StructureId> {
        self.completion[id.index()]
    }

    pub fn is_complete(&self, id: StructureId) -> bool {
        self.complete[id.index()]
    }

    pub fn complete_ids(&self) -> impl Iterator<Item = StructureId> + '_ {
        self.ids().filter(|&id| self.is_complete(id))
    }

    /// Membership in the full R1/R2/R3 closure.
    pub fn is_derivable(&self, ctx: &Context, s: &ArgStructure) -> bool {
        if self.index.contains_key(s) {
            return true;
        }
        if !s.is_condition_free() || !s.y.union(s.x).is_subset(ctx.all()) {
            return false;
        }
        let Some(cores) = self.by_conclusion.get(&s.y) else {
            return false;
        };
        cores.iter().any(|&c| self.get(c).x.is_subset(s.x))
            && !s.y.has_complementary_pair()
            && s.y.is_disjoint(s.x)
            && ctx.self_consistent(s.x)
    }

    /// A repetition-free derivation of a stored structure following the
    /// recorded origins.
    pub fn derivation_of(&self, id: StructureId) -> Derivation {
        let mut b = Builder::default();
        self.emit(id, &mut b);
        Derivation { steps: b.steps, generating_set: None }
    }

    fn emit(&self, id: StructureId, b: &mut Builder) -> usize {
        let s = *self.get(id);
        if let Some(&i) = b.seen.get(&s) {
            return i;
        }
        let step = match self.origin(id) {
            Origin::Basic(rule) => Step::Basic { rule },
            Origin::R1 { unfolded, basic } => {
                let u = self.emit(unfolded, b);
                let v = self.emit(basic, b);
                Step::R1 { unfolded: u, basic: v }
            }
            Origin::R2(l, r) => {
                let u = self.emit(l, b);
                let v = self.emit(r, b);
                Step::R2 { left: u, right: v }
            }
            Origin::R3(p) => {
                let u = self.emit(p, b);
                Step::R3 { premise: u, added: s.x.minus(self.get(p).x) }
            }
        };
        b.push(s, step)
    }
}

/// Builds the universe of a program; fails once more than `limit`
/// structures exist.
pub fn saturate(ctx: &Context, limit: usize) -> Result<StructureUniverse> {
    let mut u = StructureUniverse::empty(ctx.rules().len());

    for rule in 0..ctx.rules().len() {
        if let Some(s) = basic_structure(ctx, rule) {
            let (id, _) = u.insert(s, Origin::Basic(rule), limit)?;
            u.basic[rule] = Some(id);
            u.basic_rules[id.index()].push(rule);
        }
    }

    // R1: the second premise is always basic, so one pass over each
    // conditional structure suffices.
    let mut queue: Vec<StructureId> = u.ids().filter(|&id| !u.get(id).z.is_empty()).collect();
    let mut qi = 0;
    while qi < queue.len() {
        let a1 = queue[qi];
        qi += 1;
        let s1 = *u.get(a1);
        if s1.y.len() != 1 {
            continue;
        }
        for rule in 0..ctx.rules().len() {
            let Some(a2) = u.basic[rule] else { continue };
            if !s1.z.contains(ctx.rules()[rule].head) {
                continue;
            }
            if let Some(s3) = unfold(ctx, &s1, rule) {
                let (a3, new) = u.insert(s3, Origin::R1 { unfolded: a1, basic: a2 }, limit)?;
                if !u.unfoldings[a1.index()].contains(&(a2, a3)) {
                    u.unfoldings[a1.index()].push((a2, a3));
                    if a1 != a2 {
                        u.unfoldings[a2.index()].push((a1, a3));
                    }
                }
                if new && !s3.z.is_empty() {
                    queue.push(a3);
                }
            }
        }
    }

    // R2 over the condition-free generators; validity is closed under
    // subsets, so adding one generator at a time reaches every union.
    let generators: Vec<StructureId> = u.ids().filter(|&id| u.get(id).is_condition_free()).collect();
    let mut cores = generators.clone();
    let mut ci = 0;
    while ci < cores.len() {
        let a = cores[ci];
        ci += 1;
        let sa = *u.get(a);
        for &g in &generators {
            let sg = *u.get(g);
            if sg.y.is_subset(sa.y) && sg.x.is_subset(sa.x) {
                continue;
            }
            if let Some(s) = union(ctx, &sa, &sg) {
                let (id, new) = u.insert(s, Origin::R2(a, g), limit)?;
                if new {
                    cores.push(id);
                }
            }
        }
    }

    for &c in &cores {
        u.by_conclusion.entry(u.get(c).y).or_default().push(c);
    }
    let mut condition_free = cores.clone();
    for &c in &cores {
        let sc = *u.get(c);
        if let Some(full) = complete_extension(ctx, &sc) {
            let (id, new) = u.insert(full, Origin::R3(c), limit)?;
            u.completion[c.index()] = Some(id);
            u.complete[id.index()] = true;
            u.completion[id.index()] = Some(id);
            if new {
                condition_free.push(id);
            }
        }
    }
    u.condition_free = condition_free;
    Ok(u)
}

/// Justification of one derivation step; indices point at earlier steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Basic {
        rule: usize,
    },
    /// ⟨∅ ↩ ∅⟩, the start of the derivation of an answer set with S⁺ = ∅.
    Empty,
    R1 {
        unfolded: usize,
        basic: usize,
    },
    R2 {
        left: usize,
        right: usize,
    },
    R3 {
        premise: usize,
        added: ObjSet,
    },
}

impl Step {
    pub fn tag(&self) -> &'static str {
        match self {
            Step::Basic { .. } => "Basic",
            Step::Empty => "Empty",
            Step::R1 { .. } => "R1",
            Step::R2 { .. } => "R2",
            Step::R3 { .. } => "R3",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DerivationStep {
    pub structure: ArgStructure,
    pub step: Step,
}

/// A sequence of structures, each justified from earlier ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Derivation {
    pub steps: Vec<DerivationStep>,
    /// The minimal generating set the derivation was built from.
    pub generating_set: Option<GeneratingSet>,
}

impl Derivation {
    pub fn last(&self) -> &ArgStructure {
        &self.steps.last().expect("derivations are nonempty").structure
    }

    pub fn members(&self) -> impl Iterator<Item = &ArgStructure> {
        self.steps.iter().map(|s| &s.structure)
    }

    pub fn tags(&self) -> Vec<&'static str> {
        self.steps.iter().map(|s| s.step.tag()).collect()
    }

    /// Replays every step through the derivation rules.
    pub fn check(&self, ctx: &Context) -> Result<()> {
        let bad = |i: usize, why: &str| Err(Error::PreconditionViolation(format!("step {}: {why}", i + 1)));
        for (i, st) in self.steps.iter().enumerate() {
            let earlier = |j: usize| if j < i { Some(&self.steps[j].structure) } else { None };
            let got = match st.step {
                Step::Basic { rule } => basic_structure(ctx, rule),
                Step::Empty => Some(ArgStructure::default()),
                Step::R1 { unfolded, basic } => match (earlier(unfolded), earlier(basic)) {
                    (Some(a), Some(b)) => apply_r1(ctx, a, b)?,
                    _ => return bad(i, "premise does not precede"),
                },
                Step::R2 { left, right } => match (earlier(left), earlier(right)) {
                    (Some(a), Some(b)) => apply_r2(ctx, a, b)?,
                    _ => return bad(i, "premise does not precede"),
                },
                Step::R3 { premise, added } => match earlier(premise) {
                    Some(a) => apply_r3(ctx, a, added)?,
                    None => return bad(i, "premise does not precede"),
                },
            };
            if got != Some(st.structure) {
                return bad(i, "structure does not follow from its premises");
            }
        }
        if self.steps.is_empty() {
            return Err(Error::PreconditionViolation("empty derivation".into()));
        }
        Ok(())
    }
}

impl Default for ArgStructure {
    fn default() -> Self {
        ArgStructure::new(ObjSet::EMPTY, ObjSet::EMPTY, ObjSet::EMPTY)
    }
}

#[derive(Default)]
struct Builder {
    steps: Vec<DerivationStep>,
    seen: HashMap<ArgStructure, usize>,
}

impl Builder {
    fn push(&mut self, structure: ArgStructure, step: Step) -> usize {
        if let Some(&i) = self.seen.get(&structure) {
            return i;
        }
        self.steps.push(DerivationStep { structure, step });
        self.seen.insert(structure, self.steps.len() - 1);
        self.steps.len() - 1
    }
}

/// Which derivations of a complete structure are tested for warrant.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DerivationMode {
    /// One derivation per minimal generating set.
    #[default]
    Canonical,
    /// Every order of the R2 fold, for generating sets of at most
    /// [`MAX_PERMUTED`] rules.
    FoldPermutations,
}

pub const MAX_PERMUTED: usize = 7;

/// One derivation of ⟨S⁺ ↩ S⁻⟩ per minimal generating set of `s`.
pub fn canonical_derivations(ctx: &Context, s: &AnswerSet) -> Vec<Derivation> {
    derivations(ctx, s, DerivationMode::Canonical)
}

pub fn derivations(ctx: &Context, s: &AnswerSet, mode: DerivationMode) -> Vec<Derivation> {
    let mut out: Vec<Derivation> = Vec::new();
    for g in minimal_generating_sets(ctx, s) {
        let order = supported_order(ctx, &g.rules);
        let mut folds = vec![(0..order.len()).collect::<Vec<_>>()];
        if mode == DerivationMode::FoldPermutations && order.len() <= MAX_PERMUTED {
            folds = permutations(order.len());
        }
        for fold in folds {
            let d = build(ctx, s, &g, &order, &fold);
            if !out.contains(&d) {
                out.push(d);
            }
        }
    }
    out
}

/// Rules ordered so each positive body is covered by earlier heads,
/// lowest index first among the ready ones.
fn supported_order(ctx: &Context, rules: &[usize]) -> Vec<usize> {
    let mut left: Vec<usize> = rules.to_vec();
    left.sort_unstable();
    let mut have = ObjSet::EMPTY;
    let mut order = Vec::with_capacity(left.len());
    while !left.is_empty() {
        let k = left.iter().position(|&i| ctx.rules()[i].pos.is_subset(have)).expect("generating set is supported");
        let i = left.remove(k);
        have.insert(ctx.rules()[i].head);
        order.push(i);
    }
    order
}

fn build(ctx: &Context, s: &AnswerSet, g: &GeneratingSet, order: &[usize], fold: &[usize]) -> Derivation {
    let total = ArgStructure::new(s.bits(), s.negative_bits(ctx), ObjSet::EMPTY);
    let mut b = Builder::default();
    if order.is_empty() {
        let start = b.push(admit(ctx, ArgStructure::default()), Step::Empty);
        if total != ArgStructure::default() {
            let full = extend(ctx, &ArgStructure::default(), total.x).expect("answer sets are self-consistent");
            b.push(full, Step::R3 { premise: start, added: total.x });
        }
        return Derivation { steps: b.steps, generating_set: Some(g.clone()) };
    }

    let mut basic_step = HashMap::new();
    let mut unfolded = Vec::with_capacity(order.len());
    for &rule in order {
        let basic = basic_structure(ctx, rule).expect("generating rules have basic structures");
        let mut cur = b.push(basic, Step::Basic { rule });
        basic_step.insert(rule, cur);
        let mut cur_s = basic;
        while let Some(lit) = cur_s.z.iter().next() {
            let supplier =
                *order.iter().filter(|&&r| ctx.rules()[r].head == lit).min().expect("condition has a supplier");
            let next = unfold(ctx, &cur_s, supplier).expect("unfolding within an answer set");
            cur = b.push(next, Step::R1 { unfolded: cur, basic: basic_step[&supplier] });
            cur_s = next;
        }
        unfolded.push((cur, cur_s));
    }

    let (mut acc, mut acc_s) = unfolded[fold[0]];
    for &k in &fold[1..] {
        let (i, si) = unfolded[k];
        let next = union(ctx, &acc_s, &si).expect("union within an answer set");
        acc = b.push(next, Step::R2 { left: acc, right: i });
        acc_s = next;
    }
    if acc_s != total {
        let added = total.x.minus(acc_s.x);
        let full = extend(ctx, &acc_s, added).expect("answer sets are self-consistent");
        b.push(full, Step::R3 { premise: acc, added });
    }
    Derivation { steps: b.steps, generating_set: Some(g.clone()) }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_program;
    use crate::semantics::answer_sets;

    const RUNNING: &str = "r1: b :- a, not -b.\nr2: -b :- not b.\nr3: a :- not -a.\nprefer r1 > r2.";
    const AMBIGUITY: &str = "r1: a :- not b.\nr2: b :- not a.\nr3: a :- not c.\nr4: c :- b.\nprefer r2 > r1.";

    fn ctx(text: &str) -> Context {
        Context::new(&parse_program(text).unwrap()).unwrap()
    }

    fn st(ctx: &Context, y: &str, x: &str, z: &str) -> ArgStructure {
        let parse = |s: &str| -> ObjSet {
            let lits: Vec<ObjectiveLiteral> = s
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| match t.strip_prefix('-') {
                    Some(a) => ObjectiveLiteral::neg(crate::Atom::new(a).unwrap()),
                    None => ObjectiveLiteral::pos(crate::Atom::new(t).unwrap()),
                })
                .collect();
            ctx.set_of(&lits).unwrap()
        };
        ArgStructure::new(parse(y), parse(x), parse(z))
    }

    #[test]
    fn basic_structures_of_running_example() {
        let c = ctx(RUNNING);
        assert_eq!(basic_structure(&c, 0), Some(st(&c, "b", "-b", "a")));
        assert_eq!(basic_structure(&c, 1), Some(st(&c, "-b", "b", "")));
        assert_eq!(basic_structure(&c, 0).unwrap().display(&c).to_string(), "⟨{b} ↩ {not -b}; {a}⟩");
        assert_eq!(basic_structure(&ctx("r: p :- not p."), 0), None);
    }

    #[test]
    fn unfolding() {
        let c = ctx(RUNNING);
        let a1 = basic_structure(&c, 0).unwrap();
        let a3 = basic_structure(&c, 2).unwrap();
        assert_eq!(apply_r1(&c, &a1, &a3).unwrap(), Some(st(&c, "b", "-b, -a", "")));
        assert!(matches!(apply_r1(&c, &a3, &a1), Err(Error::PreconditionViolation(_))));

        let c = ctx(AMBIGUITY);
        let a4 = basic_structure(&c, 3).unwrap();
        let a2 = basic_structure(&c, 1).unwrap();
        assert_eq!(apply_r1(&c, &a4, &a2).unwrap(), Some(st(&c, "c", "a", "")));
    }

    #[test]
    fn union_and_extension() {
        let c = ctx(RUNNING);
        let a2 = basic_structure(&c, 1).unwrap();
        let a3 = basic_structure(&c, 2).unwrap();
        let a4 = st(&c, "b", "-b, -a", "");
        assert_eq!(apply_r2(&c, &a3, &a4).unwrap(), Some(st(&c, "a, b", "-b, -a", "")));
        assert_eq!(apply_r2(&c, &a2, &a3).unwrap(), Some(st(&c, "a, -b", "b, -a", "")));
        assert_eq!(apply_r2(&c, &a3, &a3).unwrap(), Some(a3));
        assert!(apply_r2(&c, &basic_structure(&c, 0).unwrap(), &a3).is_err());
        assert_eq!(apply_r3(&c, &a2, ObjSet::EMPTY).unwrap(), Some(a2));
        assert_eq!(apply_r3(&c, &a2, st(&c, "", "-b", "").x).unwrap(), None);

        let c = ctx(AMBIGUITY);
        let a1 = basic_structure(&c, 0).unwrap();
        assert_eq!(apply_r3(&c, &a1, st(&c, "", "c", "").x).unwrap(), Some(st(&c, "a", "b, c", "")));
    }

    #[test]
    fn completeness() {
        let c = ctx(RUNNING);
        assert!(is_complete(&c, &st(&c, "a, b", "-a, -b", "")));
        assert!(!is_complete(&c, &st(&c, "b", "-b, -a", "")));
        assert!(!is_complete(&c, &basic_structure(&c, 0).unwrap()));
    }

    #[test]
    fn running_example_universe() {
        let c = ctx(RUNNING);
        let u = saturate(&c, DEFAULT_STRUCTURE_LIMIT).unwrap();
        for (y, x, z) in [
            ("b", "-b", "a"),
            ("-b", "b", ""),
            ("a", "-a", ""),
            ("b", "-b, -a", ""),
            ("a, b", "-b, -a", ""),
            ("a, -b", "b, -a", ""),
        ] {
            assert!(u.id_of(&st(&c, y, x, z)).is_some(), "{y} {x} {z}");
        }
        let complete: Vec<_> = u.complete_ids().map(|id| *u.get(id)).collect();
        assert_eq!(complete.len(), 2);
        assert!(u.is_derivable(&c, &st(&c, "a", "-a, b", "")));
        assert!(!u.is_derivable(&c, &st(&c, "a", "a", "")));
        assert!(saturate(&ctx(""), 10).unwrap().is_empty());
    }

    #[test]
    fn saturation_is_a_fixpoint() {
        let c = ctx(AMBIGUITY);
        let u = saturate(&c, DEFAULT_STRUCTURE_LIMIT).unwrap();
        for a in u.ids() {
            let sa = *u.get(a);
            for rule in 0..c.rules().len() {
                if let (Some(b), true) = (u.basic_of(rule), sa.y.len() == 1 && !sa.z.is_empty()) {
                    if let Ok(Some(s)) = apply_r1(&c, &sa, u.get(b)) {
                        assert!(u.is_derivable(&c, &s));
                    }
                }
            }
            if sa.is_condition_free() {
                for &b in u.condition_free() {
                    if let Some(s) = apply_r2(&c, &sa, u.get(b)).unwrap() {
                        assert!(u.is_derivable(&c, &s));
                    }
                }
            }
        }
    }

    #[test]
    fn resource_limit() {
        let c = ctx(AMBIGUITY);
        assert_eq!(saturate(&c, 2).unwrap_err(), Error::ResourceLimit { what: "structures", limit: 2 });
    }

    #[test]
    fn derivations_of_ambiguity() {
        let c = ctx(AMBIGUITY);
        let sets = answer_sets(&c);
        let ds = canonical_derivations(&c, &sets[0]);
        assert_eq!(ds.len(), 2);
        for d in &ds {
            d.check(&c).unwrap();
            assert_eq!(d.tags(), ["Basic", "R3"]);
        }
        assert_eq!(ds[0].steps[0].structure, st(&c, "a", "b", ""));
        assert_eq!(ds[1].steps[0].structure, st(&c, "a", "c", ""));
    }

    #[test]
    fn derivation_of_running_example() {
        let c = ctx(RUNNING);
        let s = answer_sets(&c).into_iter().next().unwrap();
        let ds = canonical_derivations(&c, &s);
        assert_eq!(ds.len(), 1);
        let d = &ds[0];
        d.check(&c).unwrap();
        assert_eq!(d.tags(), ["Basic", "Basic", "R1", "R2"]);
        assert_eq!(*d.last(), st(&c, "a, b", "-a, -b", ""));
    }

    #[test]
    fn derivation_of_facts() {
        let c = ctx("r1: a.");
        let s = &answer_sets(&c)[0];
        let d = &canonical_derivations(&c, s)[0];
        d.check(&c).unwrap();
        assert_eq!(d.tags(), ["Basic", "R3"]);
        assert_eq!(d.steps[1].step, Step::R3 { premise: 0, added: st(&c, "", "-a", "").x });
    }

    #[test]
    fn derivation_with_empty_answer_set() {
        let c = ctx("r: a :- b.");
        let s = &answer_sets(&c)[0];
        let d = &canonical_derivations(&c, s)[0];
        d.check(&c).unwrap();
        assert_eq!(d.tags(), ["Empty", "R3"]);
        let e = ctx("");
        assert_eq!(canonical_derivations(&e, &answer_sets(&e)[0])[0].tags(), ["Empty"]);
    }

    #[test]
    fn fold_permutations() {
        let c = ctx("r1: a.\nr2: b.\nr3: c.");
        let s = &answer_sets(&c)[0];
        let ds = derivations(&c, s, DerivationMode::FoldPermutations);
        assert_eq!(ds.len(), 6);
        for d in &ds {
            d.check(&c).unwrap();
            assert_eq!(d.last(), ds[0].last());
        }
    }

    #[test]
    fn origin_derivations_replay() {
        let c = ctx(RUNNING);
        let u = saturate(&c, DEFAULT_STRUCTURE_LIMIT).unwrap();
        for id in u.ids() {
            let d = u.derivation_of(id);
            d.check(&c).unwrap();
            assert_eq!(d.last(), u.get(id));
        }
    }
}
