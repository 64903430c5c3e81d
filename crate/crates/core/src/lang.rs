//! Literals, rules and prioritized programs.
//!
//! These are the user-facing value types. The solver works on the bitset
//! form built by [`crate::Context`], but everything that crosses the public
//! boundary in text or JSON form goes through the types here.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A propositional atom.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Atom(String);

impl Atom {
    /// Builds an atom, checking the `[a-z][a-zA-Z0-9_]*` shape.
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if is_atom_name(&name) {
            Ok(Atom(name))
        } else {
            Err(Error::InvalidAtom(name))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && name != "not" && name != "prefer"
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An atom or its strong negation.
///
/// Ordering puts `a` before `-a`, and atoms alphabetically, which is the
/// canonical order used for printing sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ObjectiveLiteral {
    pub atom: Atom,
    pub strong_neg: bool,
}

impl ObjectiveLiteral {
    pub fn pos(atom: Atom) -> Self {
        ObjectiveLiteral { atom, strong_neg: false }
    }

    pub fn neg(atom: Atom) -> Self {
        ObjectiveLiteral { atom, strong_neg: true }
    }

    /// `¬L`, with `¬¬A = A`.
    pub fn complement(&self) -> Self {
        complement(self)
    }
}

/// Flips strong negation.
pub fn complement(lit: &ObjectiveLiteral) -> ObjectiveLiteral {
    ObjectiveLiteral { atom: lit.atom.clone(), strong_neg: !lit.strong_neg }
}

impl fmt::Display for ObjectiveLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.strong_neg {
            write!(f, "-{}", self.atom)
        } else {
            write!(f, "{}", self.atom)
        }
    }
}

/// An objective literal, optionally under default negation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Literal {
    pub objective: ObjectiveLiteral,
    pub default_neg: bool,
}

impl Literal {
    pub fn objective(objective: ObjectiveLiteral) -> Self {
        Literal { objective, default_neg: false }
    }

    pub fn default(objective: ObjectiveLiteral) -> Self {
        Literal { objective, default_neg: true }
    }

    pub fn is_default(&self) -> bool {
        self.default_neg
    }
}

impl From<ObjectiveLiteral> for Literal {
    fn from(objective: ObjectiveLiteral) -> Self {
        Literal::objective(objective)
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.default_neg {
            write!(f, "not {}", self.objective)
        } else {
            write!(f, "{}", self.objective)
        }
    }
}

/// True iff the set holds no pair `{L, ¬L}` and no pair `{L, not L}`.
pub fn is_consistent<'a>(literals: impl IntoIterator<Item = &'a Literal>) -> bool {
    let mut objective = BTreeSet::new();
    let mut assumed_absent = BTreeSet::new();
    for lit in literals {
        if lit.default_neg {
            assumed_absent.insert(&lit.objective);
        } else {
            objective.insert(&lit.objective);
        }
    }
    objective.iter().all(|l| !assumed_absent.contains(l) && !objective.contains(&l.complement()))
}

/// `NAME: head :- body.`
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rule {
    pub name: String,
    pub head: ObjectiveLiteral,
    /// Body literals in source order, without duplicates.
    pub body: Vec<Literal>,
}

impl Rule {
    /// Builds a rule, dropping duplicate body literals.
    pub fn new(name: impl Into<String>, head: ObjectiveLiteral, body: impl IntoIterator<Item = Literal>) -> Self {
        let mut seen = BTreeSet::new();
        let body = body.into_iter().filter(|l| seen.insert(l.clone())).collect();
        Rule { name: name.into(), head, body }
    }

    /// The objective part of the body.
    pub fn body_pos(&self) -> impl Iterator<Item = &ObjectiveLiteral> {
        self.body.iter().filter(|l| !l.default_neg).map(|l| &l.objective)
    }

    /// The default part of the body, as the literals under `not`.
    pub fn body_neg(&self) -> impl Iterator<Item = &ObjectiveLiteral> {
        self.body.iter().filter(|l| l.default_neg).map(|l| &l.objective)
    }

    pub fn is_fact(&self) -> bool {
        self.body.is_empty()
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, self.head)?;
        if !self.body.is_empty() {
            f.write_str(" :- ")?;
            for (i, lit) in self.body.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{lit}")?;
            }
        }
        f.write_str(".")
    }
}

/// A program together with declared rule preferences.
///
/// `prefers` holds `(less, more)` pairs exactly as declared; the closure is
/// computed by [`validate_preferences`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrioritizedProgram {
    pub rules: Vec<Rule>,
    pub prefers: Vec<(String, String)>,
}

impl PrioritizedProgram {
    pub fn new(rules: Vec<Rule>, prefers: Vec<(String, String)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for rule in &rules {
            if !seen.insert(rule.name.as_str()) {
                return Err(Error::DuplicateRuleName { name: rule.name.clone(), line: 0 });
            }
        }
        for (less, more) in &prefers {
            for name in [less, more] {
                if !seen.contains(name.as_str()) {
                    return Err(Error::UnknownRuleInPrefer { name: name.clone(), line: 0, col: 0 });
                }
            }
        }
        Ok(PrioritizedProgram { rules, prefers })
    }

    pub fn rule(&self, name: &str) -> Option<&Rule> {
        self.rules.iter().find(|r| r.name == name)
    }

    pub fn rule_index(&self, name: &str) -> Option<usize> {
        self.rules.iter().position(|r| r.name == name)
    }

    /// Atoms occurring anywhere in the program, sorted by name.
    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut atoms = BTreeSet::new();
        for rule in &self.rules {
            atoms.insert(rule.head.atom.clone());
            for lit in &rule.body {
                atoms.insert(lit.objective.atom.clone());
            }
        }
        atoms
    }

    /// Renders the program in the text format accepted by [`crate::parse_program`].
    pub fn render(&self) -> String {
        let mut out = String::new();
        for rule in &self.rules {
            out.push_str(&rule.to_string());
            out.push('\n');
        }
        for (less, more) in &self.prefers {
            out.push_str(&format!("prefer {more} > {less}.\n"));
        }
        out
    }
}

impl fmt::Display for PrioritizedProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// The transitive closure of the declared preferences, as `(less, more)`
/// pairs over rule names.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PreferenceOrder {
    pairs: BTreeSet<(String, String)>,
}

impl PreferenceOrder {
    pub fn pairs(&self) -> &BTreeSet<(String, String)> {
        &self.pairs
    }

    /// `less ≺ more`
    pub fn prefers(&self, more: &str, less: &str) -> bool {
        self.pairs.contains(&(less.to_string(), more.to_string()))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Closes `prefers` transitively and rejects cycles.
pub fn validate_preferences(program: &PrioritizedProgram) -> Result<PreferenceOrder> {
    let mut succ: BTreeMap<&str, BTreeSet<&str>> = BTreeMap::new();
    for (less, more) in &program.prefers {
        if program.rule(less).is_none() {
            return Err(Error::UnknownRuleInPrefer { name: less.clone(), line: 0, col: 0 });
        }
        if program.rule(more).is_none() {
            return Err(Error::UnknownRuleInPrefer { name: more.clone(), line: 0, col: 0 });
        }
        succ.entry(less.as_str()).or_default().insert(more.as_str());
    }

    let mut pairs = BTreeSet::new();
    for &start in succ.keys() {
        // DFS from `start`, remembering the parent of each node so a cycle
        // back to `start` can be reported.
        let mut parent: BTreeMap<&str, &str> = BTreeMap::new();
        let mut stack = vec![start];
        let mut visited = BTreeSet::new();
        while let Some(node) = stack.pop() {
            for &next in succ.get(node).into_iter().flatten() {
                if next == start {
                    let mut cycle = vec![start.to_string()];
                    let mut cur = node;
                    while cur != start {
                        cycle.push(cur.to_string());
                        cur = parent[cur];
                    }
                    cycle[1..].reverse();
                    return Err(Error::PreferenceCycle(cycle));
                }
                if visited.insert(next) {
                    parent.insert(next, node);
                    pairs.insert((start.to_string(), next.to_string()));
                    stack.push(next);
                }
            }
        }
    }
    Ok(PreferenceOrder { pairs })
}
