// Brute-force oracles over the program text, independent of the bitset
// engine: literals are plain strings ("a", "-a").
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use praset::PrioritizedProgram;

pub type Lits = BTreeSet<String>;

pub struct OracleRule {
    pub name: String,
    pub head: String,
    pub pos: Lits,
    pub neg: Lits,
}

pub fn rules(p: &PrioritizedProgram) -> Vec<OracleRule> {
    p.rules
        .iter()
        .map(|r| OracleRule {
            name: r.name.clone(),
            head: r.head.to_string(),
            pos: r.body_pos().map(ToString::to_string).collect(),
            neg: r.body_neg().map(ToString::to_string).collect(),
        })
        .collect()
}

/// Obj(P): both polarities of every atom.
pub fn objective(p: &PrioritizedProgram) -> Vec<String> {
    p.atoms().iter().flat_map(|a| [a.to_string(), format!("-{a}")]).collect()
}

fn complement(l: &str) -> String {
    l.strip_prefix('-').map(str::to_string).unwrap_or_else(|| format!("-{l}"))
}

pub fn consistent(s: &Lits) -> bool {
    s.iter().all(|l| !s.contains(&complement(l)))
}

pub fn subsets<T: Clone + Ord>(items: &[T]) -> impl Iterator<Item = BTreeSet<T>> + '_ {
    (0u64..1 << items.len())
        .map(move |m| items.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, x)| x.clone()).collect())
}

/// Least model of the positive parts of `rs`.
pub fn least_model<'a>(rs: impl IntoIterator<Item = &'a OracleRule> + Clone) -> Lits {
    let mut m = Lits::new();
    loop {
        let before = m.len();
        for r in rs.clone() {
            if r.pos.is_subset(&m) {
                m.insert(r.head.clone());
            }
        }
        if m.len() == before {
            return m;
        }
    }
}

/// Every consistent S ⊆ Obj with S = lm(P^S), sorted.
pub fn answer_sets(p: &PrioritizedProgram) -> Vec<Lits> {
    let rs = rules(p);
    let mut out: Vec<Lits> = subsets(&objective(p))
        .filter(|s| consistent(s) && least_model(rs.iter().filter(|r| r.neg.is_disjoint(s))) == *s)
        .collect();
    out.sort();
    out
}

/// Indices of rules whose body holds in S.
pub fn generating(p: &PrioritizedProgram, s: &Lits) -> Vec<usize> {
    rules(p).iter().enumerate().filter(|(_, r)| r.pos.is_subset(s) && r.neg.is_disjoint(s)).map(|(i, _)| i).collect()
}

/// ⊆-minimal subsets of the generating rules whose least model is S.
pub fn minimal_generating(p: &PrioritizedProgram, s: &Lits) -> Vec<BTreeSet<usize>> {
    let rs = rules(p);
    let gen = generating(p, s);
    let regen: Vec<BTreeSet<usize>> =
        subsets(&gen).filter(|sub| least_model(sub.iter().map(|&i| &rs[i])) == *s).collect();
    regen.iter().filter(|a| !regen.iter().any(|b| b != *a && b.is_subset(a))).cloned().collect()
}

/// (less, more) pairs of the transitive closure.
pub fn less_pairs(p: &PrioritizedProgram) -> BTreeSet<(String, String)> {
    let mut pairs: BTreeSet<(String, String)> = p.prefers.iter().cloned().collect();
    loop {
        let extra: Vec<_> = pairs
            .iter()
            .flat_map(|(a, b)| pairs.iter().filter(move |(c, _)| c == b).map(move |(_, d)| (a.clone(), d.clone())))
            .filter(|x| !pairs.contains(x))
            .collect();
        if extra.is_empty() {
            return pairs;
        }
        pairs.extend(extra);
    }
}

/// Some r1 ∈ q, r2 ∈ r with r2 ≺ r1 and `not head(r1)` in the body of r2.
pub fn rule_set_attacks(p: &PrioritizedProgram, q: &[usize], r: &BTreeSet<usize>) -> bool {
    let rs = rules(p);
    let less = less_pairs(p);
    q.iter().any(|&i| {
        r.iter().any(|&j| less.contains(&(rs[j].name.clone(), rs[i].name.clone())) && rs[j].neg.contains(&rs[i].head))
    })
}

/// For each answer set: does it have a minimal generating set attacked by
/// no full generating set of any answer set?
pub fn has_warranted_minimal_set(p: &PrioritizedProgram) -> BTreeMap<Lits, bool> {
    let sets = answer_sets(p);
    let fulls: Vec<Vec<usize>> = sets.iter().map(|s| generating(p, s)).collect();
    sets.iter()
        .map(|s| {
            let ok = minimal_generating(p, s).iter().any(|r| !fulls.iter().any(|q| rule_set_attacks(p, q, r)));
            (s.clone(), ok)
        })
        .collect()
}

/// Dependency by search over rule sequences: L depends on W iff some sequence
/// r1..rk has each body satisfied by W and the earlier heads, and ends in
/// L. Sequences reaching the same head set are explored once.
pub fn cn_by_sequences(p: &PrioritizedProgram, z: &Lits, w: &Lits) -> Lits {
    let mut rs = rules(p);
    rs.extend(z.iter().map(|l| OracleRule {
        name: format!("fact {l}"),
        head: l.clone(),
        pos: Lits::new(),
        neg: Lits::new(),
    }));
    let sat = |r: &OracleRule, heads: &Lits| r.pos.is_subset(heads) && r.neg.is_subset(w);
    let mut found = Lits::new();
    let mut seen: BTreeSet<Lits> = BTreeSet::new();
    let mut stack = vec![Lits::new()];
    while let Some(heads) = stack.pop() {
        for r in rs.iter().filter(|r| sat(r, &heads)) {
            found.insert(r.head.clone());
            let mut next = heads.clone();
            next.insert(r.head.clone());
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    found
}
