//! Program translations that introduce auxiliary atoms: the polynomial
//! fork translation `pf`, double-negation elimination `t1`, and head
//! disambiguation `t2`. Auxiliary atoms use the reserved `__` prefix.

use std::collections::BTreeSet;

use crate::model::ModelSet;
use crate::syntax::{Atom, Program, Rule, RESERVED_PREFIX};

/// Fresh atom `x_position` for the rule at `rule_index` (both 1-based).
pub fn pf_atom(rule_index: usize, position: usize) -> Atom {
    Atom::new(format!("{RESERVED_PREFIX}f{rule_index}_{position}"))
}

pub fn t1_atom(q: &Atom) -> Atom {
    Atom::new(format!("{RESERVED_PREFIX}t1_{q}"))
}

pub fn t2_atom(rule_index: usize) -> Atom {
    Atom::new(format!("{RESERVED_PREFIX}t2_{rule_index}"))
}

fn relabel(r: Rule, label: Option<&str>) -> Rule {
    match label {
        Some(l) => r.with_label(l),
        None => r,
    }
}

/// `pf(⟨P⟩)` as a disjunctive program: every rule with head `p1 ∨ … ∨ pm`,
/// `m > 1`, becomes `x1 ∨ … ∨ xm ← Bd(r)` plus `pi ← xi`.
pub fn pf_translate(p: &Program) -> Program {
    let mut rules = Vec::new();
    for (i, r) in p.rules().iter().enumerate() {
        if r.is_normal() {
            rules.push(r.clone());
            continue;
        }
        let xs: Vec<Atom> = (1..=r.head().len()).map(|j| pf_atom(i + 1, j)).collect();
        let disj = Rule::new(xs.clone(), r.pos().clone(), r.neg().clone(), r.negneg().clone());
        rules.push(relabel(disj, r.label()));
        for (pi, xi) in r.head().iter().zip(xs) {
            rules.push(Rule::new([pi.clone()], [xi], [], []));
        }
    }
    Program::new(rules).expect("labels are copied one-to-one")
}

/// Replaces each `¬¬q` by `¬aux_q` and adds `aux_q ← ¬q` once per `q`.
pub fn t1_eliminate_double_negation(p: &Program) -> Program {
    let mut seen: Vec<Atom> = Vec::new();
    let mut rules = Vec::new();
    for r in p.rules() {
        if !r.has_double_negation() {
            rules.push(r.clone());
            continue;
        }
        for q in r.negneg() {
            if !seen.contains(q) {
                seen.push(q.clone());
            }
        }
        let neg: BTreeSet<Atom> = r.neg().iter().cloned().chain(r.negneg().iter().map(t1_atom)).collect();
        let nr = Rule::new(r.head().iter().cloned(), r.pos().clone(), neg, []);
        rules.push(relabel(nr, r.label()));
    }
    for q in seen {
        rules.push(Rule::new([t1_atom(&q)], [], [q], []));
    }
    Program::new(rules).expect("labels are copied one-to-one")
}

/// Within every group of two or more rules sharing a head set with at least
/// two atoms, each rule gets its own fresh head atom `aux_i` and the
/// constraint `⊥ ← aux_i` is added.
pub fn t2_disambiguate_heads(p: &Program) -> Program {
    let mut rules: Vec<Rule> = p.rules().to_vec();
    let mut constraints = Vec::new();
    for group in p.head_groups() {
        if group.len() < 2 || p.rules()[group[0]].head().len() < 2 {
            continue;
        }
        for i in group {
            let r = &p.rules()[i];
            let aux = t2_atom(i + 1);
            let head = r.head().iter().cloned().chain([aux.clone()]);
            let nr = Rule::new(head, r.pos().clone(), r.neg().clone(), r.negneg().clone());
            rules[i] = relabel(nr, r.label());
            constraints.push((i, Rule::new([], [aux], [], [])));
        }
    }
    constraints.sort_by_key(|(i, _)| *i);
    rules.extend(constraints.into_iter().map(|(_, r)| r));
    Program::new(rules).expect("labels are copied one-to-one")
}

/// Projects every model onto its non-auxiliary atoms.
pub fn strip_auxiliary(models: &ModelSet) -> ModelSet {
    models
        .iter()
        .map(|m| crate::model::Interpretation::new(m.iter().filter(|a| !a.is_reserved()).cloned()))
        .collect()
}
