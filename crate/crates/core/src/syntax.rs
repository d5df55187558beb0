//! Abstract syntax: atoms, propositional formulas, extended disjunctive rules,
//! (optionally labelled) programs and forks.
//!
//! A rule has the shape
//!
//! ```text
//! p1 ∨ … ∨ pm ← q1 ∧ … ∧ qj ∧ ¬s1 ∧ … ∧ ¬sk ∧ ¬¬u1 ∧ … ∧ ¬¬ul
//! ```
//!
//! and is stored as its four atom collections. The head keeps its textual
//! order (duplicates collapsed); the three body parts are sets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Prefix reserved for atoms introduced by program transformations.
pub const RESERVED_PREFIX: &str = "__";

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom(Arc<str>);

impl Atom {
    /// Panics on an empty name.
    pub fn new(name: impl AsRef<str>) -> Self {
        let name = name.as_ref();
        assert!(!name.is_empty(), "atom names must be non-empty");
        Atom(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    pub fn is_reserved(&self) -> bool {
        self.0.starts_with(RESERVED_PREFIX)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<&str> for Atom {
    fn from(s: &str) -> Self {
        Atom::new(s)
    }
}

impl Serialize for Atom {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Atom {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s.is_empty() {
            return Err(serde::de::Error::custom("empty atom name"));
        }
        Ok(Atom::new(s))
    }
}

/// Convenience: a set of atoms from names.
pub fn atoms<'a>(names: impl IntoIterator<Item = &'a str>) -> BTreeSet<Atom> {
    names.into_iter().map(Atom::new).collect()
}

/// Propositional formula. `¬φ` is stored as `φ → ⊥` and `⊤` as `⊥ → ⊥`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Formula {
    Bot,
    Atom(Atom),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl AsRef<str>) -> Self {
        Formula::Atom(Atom::new(name))
    }

    pub fn top() -> Self {
        Formula::not(Formula::Bot)
    }

    pub fn not(f: Formula) -> Self {
        Formula::Implies(Box::new(f), Box::new(Formula::Bot))
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Self {
        Formula::Implies(Box::new(l), Box::new(r))
    }

    /// Right-nested conjunction; `⊤` when empty.
    pub fn conjunction(items: impl IntoIterator<Item = Formula>) -> Self {
        fold_right(items.into_iter().collect(), Formula::and).unwrap_or_else(Formula::top)
    }

    /// Right-nested disjunction; `⊥` when empty.
    pub fn disjunction(items: impl IntoIterator<Item = Formula>) -> Self {
        fold_right(items.into_iter().collect(), Formula::or).unwrap_or(Formula::Bot)
    }

    pub fn is_top(&self) -> bool {
        matches!(self, Formula::Implies(l, r) if **l == Formula::Bot && **r == Formula::Bot)
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    pub(crate) fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Formula::Bot => {}
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::render_formula(self))
    }
}

fn fold_right<T>(mut items: Vec<T>, join: impl Fn(T, T) -> T) -> Option<T> {
    let mut acc = items.pop()?;
    while let Some(x) = items.pop() {
        acc = join(x, acc);
    }
    Some(acc)
}

/// An extended disjunctive rule, optionally labelled.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rule {
    label: Option<String>,
    head: Vec<Atom>,
    pos: BTreeSet<Atom>,
    neg: BTreeSet<Atom>,
    negneg: BTreeSet<Atom>,
}

impl Rule {
    /// Head duplicates are dropped, keeping the first occurrence.
    pub fn new(
        head: impl IntoIterator<Item = Atom>,
        pos: impl IntoIterator<Item = Atom>,
        neg: impl IntoIterator<Item = Atom>,
        negneg: impl IntoIterator<Item = Atom>,
    ) -> Self {
        let mut seen = BTreeSet::new();
        let head = head.into_iter().filter(|a| seen.insert(a.clone())).collect();
        Rule {
            label: None,
            head,
            pos: pos.into_iter().collect(),
            neg: neg.into_iter().collect(),
            negneg: negneg.into_iter().collect(),
        }
    }

    pub fn fact(atom: Atom) -> Self {
        Rule::new([atom], [], [], [])
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn without_label(mut self) -> Self {
        self.label = None;
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn head(&self) -> &[Atom] {
        &self.head
    }

    pub fn head_set(&self) -> BTreeSet<Atom> {
        self.head.iter().cloned().collect()
    }

    pub fn pos(&self) -> &BTreeSet<Atom> {
        &self.pos
    }

    pub fn neg(&self) -> &BTreeSet<Atom> {
        &self.neg
    }

    pub fn negneg(&self) -> &BTreeSet<Atom> {
        &self.negneg
    }

    /// `b(r)`: every atom occurring in the body.
    pub fn body_atoms(&self) -> BTreeSet<Atom> {
        self.pos
            .iter()
            .chain(&self.neg)
            .chain(&self.negneg)
            .cloned()
            .collect()
    }

    pub fn body_is_empty(&self) -> bool {
        self.pos.is_empty() && self.neg.is_empty() && self.negneg.is_empty()
    }

    pub fn is_constraint(&self) -> bool {
        self.head.is_empty()
    }

    pub fn is_normal(&self) -> bool {
        self.head.len() <= 1
    }

    pub fn is_disjunctive(&self) -> bool {
        self.head.len() > 1
    }

    pub fn is_fact(&self) -> bool {
        self.head.len() == 1 && self.body_is_empty()
    }

    pub fn has_double_negation(&self) -> bool {
        !self.negneg.is_empty()
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = self.body_atoms();
        out.extend(self.head.iter().cloned());
        out
    }

    /// `Bd(r)`: positive atoms, then `¬s`, then `¬¬u`; `⊤` when empty.
    pub fn body_formula(&self) -> Formula {
        let pos = self.pos.iter().map(|a| Formula::Atom(a.clone()));
        let neg = self.neg.iter().map(|a| Formula::not(Formula::Atom(a.clone())));
        let negneg = self
            .negneg
            .iter()
            .map(|a| Formula::not(Formula::not(Formula::Atom(a.clone()))));
        Formula::conjunction(pos.chain(neg).chain(negneg))
    }

    /// `Hd(r)`: the head disjunction; `⊥` when empty.
    pub fn head_formula(&self) -> Formula {
        Formula::disjunction(self.head.iter().map(|a| Formula::Atom(a.clone())))
    }

    /// `Bd(r) → Hd(r)`. A rule with empty body is just its head.
    pub fn to_formula(&self) -> Formula {
        if self.body_is_empty() {
            self.head_formula()
        } else {
            Formula::implies(self.body_formula(), self.head_formula())
        }
    }

    /// `⟨r⟩`: the head disjunction replaced by the fork connective.
    pub fn forked(&self) -> Fork {
        let head = Fork::branches(self.head.iter().map(|a| Fork::Atom(a.clone())));
        if self.body_is_empty() {
            head
        } else {
            Fork::Implies(self.body_formula(), Box::new(head))
        }
    }

    /// Same rule with every atom renamed.
    pub fn map_atoms(&self, f: &impl Fn(&Atom) -> Atom) -> Rule {
        let mut r = Rule::new(
            self.head.iter().map(f),
            self.pos.iter().map(f),
            self.neg.iter().map(f),
            self.negneg.iter().map(f),
        );
        r.label = self.label.clone();
        r
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::render_rule(self))
    }
}

/// A finite program; rule order is preserved. Labels, where present, are unique.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Program {
    rules: Vec<Rule>,
}

impl Program {
    pub fn new(rules: Vec<Rule>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for r in &rules {
            if let Some(l) = r.label() {
                if !seen.insert(l) {
                    return Err(Error::DuplicateLabel(l.to_string()));
                }
            }
        }
        Ok(Program { rules })
    }

    pub fn empty() -> Self {
        Program::default()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// `AT(P)`.
    pub fn atoms(&self) -> BTreeSet<Atom> {
        self.rules.iter().flat_map(Rule::atoms).collect()
    }

    pub fn is_normal(&self) -> bool {
        self.rules.iter().all(Rule::is_normal)
    }

    pub fn has_double_negation(&self) -> bool {
        self.rules.iter().any(Rule::has_double_negation)
    }

    pub fn is_labelled(&self) -> bool {
        self.rules.iter().any(|r| r.label.is_some())
    }

    /// Labels used when a labelled view is needed: the rule's own label, or
    /// `r1, r2, …` by position, skipping names already taken.
    pub fn effective_labels(&self) -> Vec<String> {
        let taken: BTreeSet<&str> = self.rules.iter().filter_map(Rule::label).collect();
        let mut out = Vec::with_capacity(self.rules.len());
        let mut used = BTreeSet::new();
        for (i, r) in self.rules.iter().enumerate() {
            let label = match r.label() {
                Some(l) => l.to_string(),
                None => {
                    let mut candidate = format!("r{}", i + 1);
                    while taken.contains(candidate.as_str()) || used.contains(&candidate) {
                        candidate.push('\'');
                    }
                    candidate
                }
            };
            used.insert(label.clone());
            out.push(label);
        }
        out
    }

    /// Copy of the program where every rule carries its effective label.
    pub fn labelled(&self) -> Program {
        let rules = self
            .rules
            .iter()
            .zip(self.effective_labels())
            .map(|(r, l)| r.clone().with_label(l))
            .collect();
        Program { rules }
    }

    pub fn unlabelled(&self) -> Program {
        Program {
            rules: self.rules.iter().cloned().map(Rule::without_label).collect(),
        }
    }

    /// The program read as a single formula (conjunction of its rules).
    pub fn to_formula(&self) -> Formula {
        Formula::conjunction(self.rules.iter().map(Rule::to_formula))
    }

    /// `⟨P⟩`: conjunction of the forked rules; `⊤` for the empty program.
    pub fn forked(&self) -> Fork {
        match Fork::conjunction(self.rules.iter().map(Rule::forked)) {
            Some(f) => f,
            None => Fork::from(Formula::top()),
        }
    }

    /// `P ∧ L`. Labels of both sides must stay unique.
    pub fn conjoin(&self, other: &Program) -> Result<Program> {
        let mut rules = self.rules.clone();
        rules.extend(other.rules.iter().cloned());
        Program::new(rules)
    }

    pub fn without_rule(&self, index: usize) -> Program {
        let mut rules = self.rules.clone();
        rules.remove(index);
        Program { rules }
    }

    /// Rule indices grouped by head-atom set, in first-occurrence order.
    pub fn head_groups(&self) -> Vec<Vec<usize>> {
        let mut groups: BTreeMap<BTreeSet<Atom>, usize> = BTreeMap::new();
        let mut out: Vec<Vec<usize>> = Vec::new();
        for (i, r) in self.rules.iter().enumerate() {
            let slot = *groups.entry(r.head_set()).or_insert_with(|| {
                out.push(Vec::new());
                out.len() - 1
            });
            out[slot].push(i);
        }
        out
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::render_program(self))
    }
}

impl FromIterator<Rule> for Program {
    /// Panics on duplicate labels; use [`Program::new`] to handle that case.
    fn from_iter<I: IntoIterator<Item = Rule>>(iter: I) -> Self {
        Program::new(iter.into_iter().collect()).expect("duplicate rule label")
    }
}

/// A fork. Forks can not occur under `∨` or in an implication antecedent;
/// the shape of this type enforces it.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Fork {
    Bot,
    Atom(Atom),
    /// The fork connective `F | G`.
    Split(Box<Fork>, Box<Fork>),
    And(Box<Fork>, Box<Fork>),
    Or(Formula, Formula),
    Implies(Formula, Box<Fork>),
}

impl Fork {
    pub fn split(l: Fork, r: Fork) -> Self {
        Fork::Split(Box::new(l), Box::new(r))
    }

    pub fn and(l: Fork, r: Fork) -> Self {
        Fork::And(Box::new(l), Box::new(r))
    }

    pub fn implies(antecedent: Formula, consequent: Fork) -> Self {
        Fork::Implies(antecedent, Box::new(consequent))
    }

    /// Right-nested `F1 | … | Fn`; `⊥` when empty.
    pub fn branches(items: impl IntoIterator<Item = Fork>) -> Self {
        fold_right(items.into_iter().collect(), Fork::split).unwrap_or(Fork::Bot)
    }

    /// Right-nested conjunction, `None` when empty.
    pub fn conjunction(items: impl IntoIterator<Item = Fork>) -> Option<Self> {
        fold_right(items.into_iter().collect(), Fork::and)
    }

    /// `Some` iff the fork connective does not occur.
    pub fn as_formula(&self) -> Option<Formula> {
        Some(match self {
            Fork::Bot => Formula::Bot,
            Fork::Atom(a) => Formula::Atom(a.clone()),
            Fork::Split(..) => return None,
            Fork::And(l, r) => Formula::and(l.as_formula()?, r.as_formula()?),
            Fork::Or(l, r) => Formula::or(l.clone(), r.clone()),
            Fork::Implies(l, r) => Formula::implies(l.clone(), r.as_formula()?),
        })
    }

    pub fn is_formula(&self) -> bool {
        self.as_formula().is_some()
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Fork::Bot => {}
            Fork::Atom(a) => {
                out.insert(a.clone());
            }
            Fork::Split(l, r) | Fork::And(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
            Fork::Or(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
            Fork::Implies(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    pub fn depth(&self) -> usize {
        fn fdepth(f: &Formula) -> usize {
            match f {
                Formula::Bot | Formula::Atom(_) => 0,
                Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                    1 + fdepth(l).max(fdepth(r))
                }
            }
        }
        match self {
            Fork::Bot | Fork::Atom(_) => 0,
            Fork::Split(l, r) | Fork::And(l, r) => 1 + l.depth().max(r.depth()),
            Fork::Or(l, r) => 1 + fdepth(l).max(fdepth(r)),
            Fork::Implies(l, r) => 1 + fdepth(l).max(r.depth()),
        }
    }
}

impl From<Formula> for Fork {
    fn from(f: Formula) -> Self {
        match f {
            Formula::Bot => Fork::Bot,
            Formula::Atom(a) => Fork::Atom(a),
            Formula::And(l, r) => Fork::and(Fork::from(*l), Fork::from(*r)),
            Formula::Or(l, r) => Fork::Or(*l, *r),
            Formula::Implies(l, r) => Fork::Implies(*l, Box::new(Fork::from(*r))),
        }
    }
}

impl fmt::Display for Fork {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::render_fork(self))
    }
}
