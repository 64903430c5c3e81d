//! Compiled form of a program: literals become bit positions.
//!
//! Literal `i` of the signature is `2 * atom + neg`, where atoms are numbered
//! in name order. A set of objective literals is a `u64`; default literals
//! `not L` are stored by their objective payload `L`.

use std::fmt;

use crate::error::{Error, Result};
use crate::lang::{validate_preferences, Atom, ObjectiveLiteral, PreferenceOrder, PrioritizedProgram};

pub const MAX_ATOMS: usize = 32;

const EVEN: u64 = 0x5555_5555_5555_5555;

/// A set of objective literals over the program signature.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjSet(pub u64);

impl ObjSet {
    pub const EMPTY: ObjSet = ObjSet(0);

    pub fn single(id: u32) -> Self {
        ObjSet(1 << id)
    }

    pub fn contains(self, id: u32) -> bool {
        self.0 >> id & 1 == 1
    }

    pub fn insert(&mut self, id: u32) {
        self.0 |= 1 << id;
    }

    pub fn remove(&mut self, id: u32) {
        self.0 &= !(1 << id);
    }

    pub fn union(self, other: ObjSet) -> ObjSet {
        ObjSet(self.0 | other.0)
    }

    pub fn inter(self, other: ObjSet) -> ObjSet {
        ObjSet(self.0 & other.0)
    }

    pub fn minus(self, other: ObjSet) -> ObjSet {
        ObjSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: ObjSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ObjSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Every literal replaced by its complement.
    pub fn complements(self) -> ObjSet {
        ObjSet((self.0 & EVEN) << 1 | (self.0 >> 1) & EVEN)
    }

    /// Holds some `L` together with `¬L`.
    pub fn has_complementary_pair(self) -> bool {
        self.0 & self.complements().0 != 0
    }

    /// Literal ids in ascending order, which is the canonical literal order.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let id = rest.trailing_zeros();
                rest &= rest - 1;
                Some(id)
            }
        })
    }

    /// All subsets, smallest bit patterns first.
    pub fn subsets(self) -> impl Iterator<Item = ObjSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(ObjSet(cur))
        })
    }
}

/// A rule with literal sets as bitsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CompiledRule {
    pub head: u32,
    pub pos: ObjSet,
    pub neg: ObjSet,
}

/// A validated program, its signature and the closed preference relation.
#[derive(Debug, Clone)]
pub struct Context {
    program: PrioritizedProgram,
    order: PreferenceOrder,
    atoms: Vec<Atom>,
    rules: Vec<CompiledRule>,
    /// `less[i][j]` iff rule `i` ≺ rule `j`.
    less: Vec<Vec<bool>>,
    all: ObjSet,
}

impl Context {
    pub fn new(program: &PrioritizedProgram) -> Result<Self> {
        let order = validate_preferences(program)?;
        let atoms: Vec<Atom> = program.atoms().into_iter().collect();
        if atoms.len() > MAX_ATOMS {
            return Err(Error::TooManyAtoms(atoms.len()));
        }
        let id_of = |lit: &ObjectiveLiteral| {
            let a = atoms.binary_search(&lit.atom).expect("atom collected from the program");
            (2 * a + lit.strong_neg as usize) as u32
        };
        let rules = program
            .rules
            .iter()
            .map(|r| {
                let mut pos = ObjSet::EMPTY;
                let mut neg = ObjSet::EMPTY;
                for l in r.body_pos() {
                    pos.insert(id_of(l));
                }
                for l in r.body_neg() {
                    neg.insert(id_of(l));
                }
                CompiledRule { head: id_of(&r.head), pos, neg }
            })
            .collect();
        let n = program.rules.len();
        let mut less = vec![vec![false; n]; n];
        for (l, m) in order.pairs() {
            let (i, j) = (program.rule_index(l).unwrap(), program.rule_index(m).unwrap());
            less[i][j] = true;
        }
        let all = if atoms.len() == MAX_ATOMS { ObjSet(u64::MAX) } else { ObjSet((1u64 << (2 * atoms.len())) - 1) };
        Ok(Context { program: program.clone(), order, atoms, rules, less, all })
    }

    pub fn program(&self) -> &PrioritizedProgram {
        &self.program
    }

    pub fn order(&self) -> &PreferenceOrder {
        &self.order
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn rules(&self) -> &[CompiledRule] {
        &self.rules
    }

    pub fn rule_name(&self, i: usize) -> &str {
        &self.program.rules[i].name
    }

    /// Rule `i` ≺ rule `j`: `j` is more preferred.
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.less[i][j]
    }

    /// Obj(P).
    pub fn all(&self) -> ObjSet {
        self.all
    }

    pub fn literal_id(&self, lit: &ObjectiveLiteral) -> Option<u32> {
        let a = self.atoms.binary_search(&lit.atom).ok()?;
        Some((2 * a + lit.strong_neg as usize) as u32)
    }

    pub fn literal(&self, id: u32) -> ObjectiveLiteral {
        ObjectiveLiteral { atom: self.atoms[(id / 2) as usize].clone(), strong_neg: id % 2 == 1 }
    }

    pub fn literals(&self, set: ObjSet) -> Vec<ObjectiveLiteral> {
        set.iter().map(|id| self.literal(id)).collect()
    }

    /// Fails with `InvalidAtom` on a literal outside the signature.
    pub fn set_of<'a>(&self, lits: impl IntoIterator<Item = &'a ObjectiveLiteral>) -> Result<ObjSet> {
        let mut s = ObjSet::EMPTY;
        for l in lits {
            s.insert(self.literal_id(l).ok_or_else(|| Error::InvalidAtom(l.atom.name().to_string()))?);
        }
        Ok(s)
    }

    /// Least model of `{r⁺ | body⁻(r) ⊆ defaults}` plus the facts `extra`.
    /// With `defaults = None` every rule takes part.
    pub fn least_model(&self, defaults: Option<ObjSet>, extra: ObjSet) -> ObjSet {
        let mut m = extra;
        loop {
            let before = m;
            for r in &self.rules {
                if defaults.is_none_or(|d| r.neg.is_subset(d)) && r.pos.is_subset(m) {
                    m.insert(r.head);
                }
            }
            if m == before {
                return m;
            }
        }
    }

    /// Least model restricted to the rules at `subset`, each kept only if
    /// its default body is in `defaults`.
    pub fn least_model_of(&self, subset: &[usize], defaults: ObjSet) -> ObjSet {
        let mut m = ObjSet::EMPTY;
        loop {
            let before = m;
            for &i in subset {
                let r = &self.rules[i];
                if r.neg.is_subset(defaults) && r.pos.is_subset(m) {
                    m.insert(r.head);
                }
            }
            if m == before {
                return m;
            }
        }
    }

    /// Objective part of Cn_{P∪Z}(W), with `w` the payloads of W.
    pub fn cn(&self, w: ObjSet, z: ObjSet) -> ObjSet {
        self.least_model(Some(w), z)
    }

    /// W is self-consistent: Cn_P(W) holds no `{L, ¬L}` and no `{L, not L}`.
    pub fn self_consistent(&self, w: ObjSet) -> bool {
        let m = self.cn(w, ObjSet::EMPTY);
        !m.has_complementary_pair() && m.is_disjoint(w)
    }

    pub fn fmt_set(&self, set: ObjSet) -> String {
        let items: Vec<String> = set.iter().map(|id| self.literal(id).to_string()).collect();
        format!("{{{}}}", items.join(", "))
    }

    pub fn fmt_defaults(&self, set: ObjSet) -> String {
        let items: Vec<String> = set.iter().map(|id| format!("not {}", self.literal(id))).collect();
        format!("{{{}}}", items.join(", "))
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.program.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_program;

    #[test]
    fn complements_swap_pairs() {
        let s = ObjSet(0b0110_0001);
        assert_eq!(s.complements(), ObjSet(0b1001_0010));
        assert_eq!(s.complements().complements(), s);
        assert!(!s.has_complementary_pair());
        assert!(ObjSet(0b11).has_complementary_pair());
    }

    #[test]
    fn subsets_enumerate_everything_once() {
        let s = ObjSet(0b1011);
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|x| x.is_subset(s)));
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 8);
        assert_eq!(ObjSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn signature_numbering() {
        let p = parse_program("r1: b :- a, not -b.\nr2: -b :- not b.").unwrap();
        let ctx = Context::new(&p).unwrap();
        assert_eq!(ctx.all(), ObjSet(0b1111));
        let nb = ctx.literal_id(&p.rules[1].head).unwrap();
        assert_eq!(nb, 3);
        assert_eq!(ctx.literal(nb).to_string(), "-b");
        assert_eq!(ctx.rules()[0].pos, ObjSet::single(0));
        assert_eq!(ctx.rules()[0].neg, ObjSet::single(3));
    }

    #[test]
    fn too_many_atoms() {
        let text: String = (0..33).map(|i| format!("r{i}: a{i}.\n")).collect();
        let p = parse_program(&text).unwrap();
        assert_eq!(Context::new(&p).unwrap_err(), Error::TooManyAtoms(33));
        let text: String = (0..32).map(|i| format!("r{i}: a{i}.\n")).collect();
        assert_eq!(Context::new(&parse_program(&text).unwrap()).unwrap().all(), ObjSet(u64::MAX));
    }
}
