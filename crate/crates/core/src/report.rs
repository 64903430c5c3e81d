//! Serialized and printed forms of an [`Analysis`].

use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::attacks::{Analysis, Attack, AttackDerivation, AttackRule};
use crate::context::Context;
use crate::semantics::AnswerSet;
use crate::structures::{Derivation, Step, StructureId};

pub const SCHEMA: u32 = 1;

/// SHA-256 of the rendered program.
pub fn digest(ctx: &Context) -> String {
    hex::encode(Sha256::digest(ctx.program().render().as_bytes()))
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub program: String,
    pub digest: String,
    pub atoms: usize,
    pub rules: usize,
    pub answer_sets: Vec<Vec<String>>,
    pub preferred: Vec<Vec<String>>,
    pub details: Vec<AnswerSetReport>,
    pub structures: usize,
    pub attacks: ClosureReport,
    pub timing_ms: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClosureReport {
    pub basic: usize,
    pub definite: usize,
    pub possible: usize,
    pub stable: bool,
    pub rounds: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnswerSetReport {
    pub index: usize,
    pub literals: Vec<String>,
    pub preferred: bool,
    pub derivations: Vec<DerivationReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DerivationReport {
    pub generating_set: Vec<String>,
    pub steps: Vec<StepReport>,
    pub warranted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocked_by: Option<Vec<AttackStepReport>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StepReport {
    pub rule: String,
    pub premises: Vec<usize>,
    pub structure: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct AttackStepReport {
    pub rule: String,
    pub attacker: String,
    pub attacked: String,
}

/// `S⁺`, or with `total` also the default literals of `S⁻`.
pub fn answer_set_literals(ctx: &Context, s: &AnswerSet, total: bool) -> Vec<String> {
    let mut out = s.names();
    if total {
        out.extend(ctx.literals(s.negative_bits(ctx)).iter().map(|l| format!("not {l}")));
    }
    out
}

fn step_label(ctx: &Context, step: &Step) -> (String, Vec<usize>) {
    match *step {
        Step::Basic { rule } => (format!("Basic {}", ctx.rule_name(rule)), vec![]),
        Step::Empty => ("Empty".into(), vec![]),
        Step::R1 { unfolded, basic } => ("R1".into(), vec![unfolded + 1, basic + 1]),
        Step::R2 { left, right } => ("R2".into(), vec![left + 1, right + 1]),
        Step::R3 { premise, .. } => ("R3".into(), vec![premise + 1]),
    }
}

fn attack_rule_label(ctx: &Context, a: &Analysis, rule: &AttackRule) -> String {
    let show = |id: StructureId| a.universe.get(id).display(ctx).to_string();
    match *rule {
        AttackRule::Basic { more, less } => format!("Basic ({} over {})", ctx.rule_name(more), ctx.rule_name(less)),
        AttackRule::Q1 { partner, .. } => format!("Q1 with {}", show(partner)),
        AttackRule::Q2 { partner, .. } => format!("Q2 with {}", show(partner)),
        AttackRule::Q3 { partner, .. } => format!("Q3 with {}", show(partner)),
        AttackRule::Q4 { partner, .. } => format!("Q4 with {}", show(partner)),
        AttackRule::Q5 { added, .. } => format!("Q5 adding {}", ctx.fmt_defaults(added)),
        AttackRule::Q6 { added, .. } => format!("Q6 adding {}", ctx.fmt_defaults(added)),
    }
}

fn derivation_steps(ctx: &Context, d: &Derivation) -> Vec<StepReport> {
    d.steps
        .iter()
        .map(|st| {
            let (rule, premises) = step_label(ctx, &st.step);
            StepReport { rule, premises, structure: st.structure.display(ctx).to_string() }
        })
        .collect()
}

fn attack_steps(a: &Analysis, chain: &AttackDerivation) -> Vec<AttackStepReport> {
    let show = |id: StructureId| a.universe.get(id).display(&a.ctx).to_string();
    chain
        .steps
        .iter()
        .map(|(at, r)| AttackStepReport {
            rule: attack_rule_label(&a.ctx, a, r),
            attacker: show(at.attacker),
            attacked: show(at.attacked),
        })
        .collect()
}

impl RunReport {
    pub fn new(label: &str, a: &Analysis, total: bool) -> Self {
        let ctx = &a.ctx;
        let details = a
            .verdicts
            .iter()
            .enumerate()
            .map(|(i, v)| AnswerSetReport {
                index: i + 1,
                literals: answer_set_literals(ctx, &v.answer_set, total),
                preferred: v.preferred,
                derivations: v
                    .derivations
                    .iter()
                    .map(|d| DerivationReport {
                        generating_set: d.derivation.generating_set.as_ref().map(|g| g.names(ctx)).unwrap_or_default(),
                        steps: derivation_steps(ctx, &d.derivation),
                        warranted: d.is_warranted(),
                        blocked_by: d.blocked_by.as_ref().map(|c| attack_steps(a, c)),
                    })
                    .collect(),
            })
            .collect();
        RunReport {
            schema: SCHEMA,
            program: label.to_string(),
            digest: digest(ctx),
            atoms: ctx.atoms().len(),
            rules: ctx.rules().len(),
            answer_sets: a.answer_sets().map(|s| answer_set_literals(ctx, s, total)).collect(),
            preferred: a.preferred().map(|s| answer_set_literals(ctx, s, total)).collect(),
            details,
            structures: a.universe.len(),
            attacks: ClosureReport {
                basic: a.basic.len(),
                definite: a.closure.definite.len(),
                possible: a.closure.possible.len(),
                stable: a.closure.stable,
                rounds: a.closure.rounds,
            },
            timing_ms: None,
        }
    }

    /// Plain-text listing for `solve`.
    pub fn to_text(&self) -> String {
        let set = |lits: &[String]| format!("{{{}}}", lits.join(", "));
        let mut out = String::new();
        let n = self.answer_sets.len();
        let _ = writeln!(out, "{n} answer set{}", if n == 1 { "" } else { "s" });
        for (i, s) in self.answer_sets.iter().enumerate() {
            let _ = writeln!(out, "  {}: {}", i + 1, set(s));
        }
        if self.preferred.is_empty() {
            let _ = writeln!(out, "preferred: none");
        } else {
            let shown: Vec<String> = self.preferred.iter().map(|s| set(s)).collect();
            let _ = writeln!(out, "preferred: {}", shown.join(" "));
        }
        if !self.attacks.stable {
            let _ = writeln!(
                out,
                "warning: attack closure not stable ({} definite, {} possible)",
                self.attacks.definite, self.attacks.possible
            );
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(out, "time: {ms:.1} ms");
        }
        out
    }
}

/// Narrative for `explain`: derivations of answer set `index` (0-based)
/// with step tags, verdicts and blocking chains.
pub fn explain(a: &Analysis, index: usize) -> String {
    let ctx = &a.ctx;
    let v = &a.verdicts[index];
    let mut out = String::new();
    let _ = writeln!(out, "answer set {}: {}", index + 1, v.answer_set);
    let _ = writeln!(out, "complete structure: {}", v.structure.display(ctx));
    for (k, d) in v.derivations.iter().enumerate() {
        let rules = d.derivation.generating_set.as_ref().map(|g| g.names(ctx).join(", ")).unwrap_or_default();
        let _ = writeln!(
            out,
            "derivation {} (rules: {}): {}",
            k + 1,
            if rules.is_empty() { "none".to_string() } else { rules },
            if d.is_warranted() { "warranted" } else { "blocked" }
        );
        for (i, st) in derivation_steps(ctx, &d.derivation).iter().enumerate() {
            let refs = if st.premises.is_empty() {
                String::new()
            } else {
                format!(" from {}", st.premises.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            };
            let _ = writeln!(out, "  {}. {}{}  {}", i + 1, st.rule, refs, st.structure);
        }
        if let Some(chain) = &d.blocked_by {
            let blocker = a.universe.get(chain.last().attacker);
            let _ = writeln!(out, "  blocked by complete {}", blocker.display(ctx));
            let _ = writeln!(out, "  attack derivation [{}]:", chain.tags().join(", "));
            for (i, st) in attack_steps(a, chain).iter().enumerate() {
                let _ = writeln!(out, "    {}. {}: {} attacks {}", i + 1, st.rule, st.attacker, st.attacked);
            }
        }
    }
    let _ = writeln!(out, "{}", if v.preferred { "preferred" } else { "not preferred" });
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz digraph: structures appearing in possible attacks or in the
/// derivations of the selected answer set, and the attacks among them.
pub fn to_dot(a: &Analysis, focus: Option<usize>) -> String {
    let ctx = &a.ctx;
    let mut nodes: Vec<StructureId> = Vec::new();
    let keep = |id: StructureId, nodes: &mut Vec<StructureId>| {
        if !nodes.contains(&id) {
            nodes.push(id);
        }
    };
    let possible: Vec<Attack> = a.closure.possible.attacks().collect();
    for at in &possible {
        keep(at.attacker, &mut nodes);
        keep(at.attacked, &mut nodes);
    }
    if let Some(i) = focus {
        for d in &a.verdicts[i].derivations {
            for s in d.derivation.members() {
                if let Some(id) = a.universe.id_of(s) {
                    keep(id, &mut nodes);
                }
            }
        }
    }
    nodes.sort();
    let mut out = String::from("digraph attacks {\n  node [shape=box, fontname=\"monospace\"];\n");
    for id in &nodes {
        let s = a.universe.get(*id);
        let parts = [ctx.fmt_set(s.y), ctx.fmt_defaults(s.x), ctx.fmt_set(s.z)].map(|p| dot_escape(&p));
        let label = format!("Y: {}\\nX: {}\\nZ: {}", parts[0], parts[1], parts[2]);
        let extra = if a.universe.is_complete(*id) { ", peripheries=2" } else { "" };
        let _ = writeln!(out, "  s{} [label=\"{}\"{}];", id.0, label, extra);
    }
    for at in &possible {
        let style = if a.closure.definite.contains(*at) { "solid" } else { "dashed" };
        let _ = writeln!(out, "  s{} -> s{} [style={}];", at.attacker.0, at.attacked.0, style);
    }
    out.push_str("}\n");
    out
}
