//! Head selection functions, reducts, candidate stable models (open and
//! closed), DI-stable models and the immediate-consequence operator.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::compiled::CProgram;
use crate::error::{Error, Result};
use crate::model::{minimal_elements, Alphabet, Interpretation, Mask, ModelSet, MAX_ENUM_ATOMS};
use crate::syntax::{Atom, Program, Rule};

/// A choice of head atom (or `⊥`) for every rule whose body holds in `I`.
/// Keys are 0-based rule indices; rules with a false body are left out since
/// they never reach the reduct.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HeadSelection {
    choices: BTreeMap<usize, Option<Atom>>,
}

impl HeadSelection {
    pub fn new(choices: impl IntoIterator<Item = (usize, Option<Atom>)>) -> Self {
        HeadSelection {
            choices: choices.into_iter().collect(),
        }
    }

    /// `None` if the rule is not covered; `Some(None)` for `⊥`.
    pub fn choice(&self, rule: usize) -> Option<Option<&Atom>> {
        self.choices.get(&rule).map(Option::as_ref)
    }

    pub fn choices(&self) -> &BTreeMap<usize, Option<Atom>> {
        &self.choices
    }

    /// Rules with the same head set make the same choice.
    pub fn is_closed(&self, p: &Program) -> bool {
        let mut by_head: BTreeMap<BTreeSet<Atom>, &Option<Atom>> = BTreeMap::new();
        self.choices.iter().all(|(&r, c)| match p.rules().get(r) {
            None => false,
            Some(rule) => *by_head.entry(rule.head_set()).or_insert(c) == c,
        })
    }

    /// Errors unless this is a head selection for exactly the rules whose
    /// body holds in `i`.
    pub fn validate(&self, p: &Program, i: &Interpretation) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidSelection(m));
        let triggered = triggered_rules(p, i);
        if let Some(r) = self.choices.keys().find(|r| !triggered.contains(r)) {
            return bad(format!("rule#{} is not applicable in {i}", r + 1));
        }
        for r in triggered {
            let rule = &p.rules()[r];
            let true_heads: Vec<&Atom> = rule.head().iter().filter(|a| i.contains(a)).collect();
            match self.choices.get(&r) {
                None => return bad(format!("rule#{} has no choice", r + 1)),
                Some(None) if !true_heads.is_empty() => {
                    return bad(format!("rule#{} selects ⊥ but has a true head atom", r + 1))
                }
                Some(Some(a)) if !true_heads.contains(&a) => {
                    return bad(format!("rule#{} selects {a}, not a true head atom", r + 1))
                }
                _ => {}
            }
        }
        Ok(())
    }
}

impl fmt::Display for HeadSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .choices
            .iter()
            .map(|(r, c)| match c {
                Some(a) => format!("rule#{} ↦ {a}", r + 1),
                None => format!("rule#{} ↦ ⊥", r + 1),
            })
            .collect();
        f.write_str(&items.join(", "))
    }
}

fn triggered_rules(p: &Program, i: &Interpretation) -> Vec<usize> {
    p.rules()
        .iter()
        .enumerate()
        .filter(|(_, r)| {
            r.pos().iter().all(|a| i.contains(a))
                && !r.neg().iter().any(|a| i.contains(a))
                && r.negneg().iter().all(|a| i.contains(a))
        })
        .map(|(k, _)| k)
        .collect()
}

/// Choice points for a fixed `I`: each slot covers one rule (open) or all
/// triggered rules with one head set (closed); options are head bits, `0`
/// standing for `⊥`.
struct Slots {
    rules: Vec<Vec<usize>>,
    options: Vec<Vec<Mask>>,
}

impl Slots {
    fn new(cp: &CProgram, i: Mask, closed: bool) -> Slots {
        let mut keys: Vec<Mask> = Vec::new();
        let mut rules: Vec<Vec<usize>> = Vec::new();
        let mut options = Vec::new();
        for (k, r) in cp.rules.iter().enumerate() {
            if !r.body_classical(i) {
                continue;
            }
            if closed {
                if let Some(s) = keys.iter().position(|&h| h == r.head) {
                    rules[s].push(k);
                    continue;
                }
            }
            keys.push(r.head);
            rules.push(vec![k]);
            let hits = r.head & i;
            options.push(if hits == 0 {
                vec![0]
            } else {
                (0..64).map(|b| 1 << b).filter(|bit| hits & bit != 0).collect()
            });
        }
        Slots { rules, options }
    }

    /// Visits every selection as a per-rule head bit until `visit` says stop.
    fn for_each(&self, n_rules: usize, mut visit: impl FnMut(&[Mask]) -> bool) {
        let mut odo = vec![0usize; self.options.len()];
        let mut heads = vec![0 as Mask; n_rules];
        loop {
            for (s, rs) in self.rules.iter().enumerate() {
                for &r in rs {
                    heads[r] = self.options[s][odo[s]];
                }
            }
            if !visit(&heads) {
                return;
            }
            let mut s = 0;
            loop {
                if s == odo.len() {
                    return;
                }
                odo[s] += 1;
                if odo[s] < self.options[s].len() {
                    break;
                }
                odo[s] = 0;
                s += 1;
            }
        }
    }
}

fn to_selection(alphabet: &Alphabet, slots: &Slots, heads: &[Mask]) -> HeadSelection {
    HeadSelection::new(slots.rules.iter().flatten().map(|&r| {
        let h = heads[r];
        (r, (h != 0).then(|| alphabet.atoms()[h.trailing_zeros() as usize].clone()))
    }))
}

fn local_alphabet(p: &Program, i: &Interpretation) -> Result<Alphabet> {
    let alphabet = Alphabet::new(p.atoms().into_iter().chain(i.iter().cloned()));
    alphabet.ensure_at_most(crate::model::MAX_MASK_ATOMS, "selection alphabet")?;
    Ok(alphabet)
}

/// Every head selection for `i` of the requested kind.
pub fn selections(p: &Program, i: &Interpretation, closed: bool) -> Result<Vec<HeadSelection>> {
    let alphabet = local_alphabet(p, i)?;
    let cp = CProgram::compile(p, &alphabet)?;
    let slots = Slots::new(&cp, alphabet.mask_of(i.iter())?, closed);
    let mut out = Vec::new();
    slots.for_each(p.len(), |heads| {
        out.push(to_selection(&alphabet, &slots, heads));
        true
    });
    Ok(out)
}

/// `P^I_sel = {sel(Hd(r),I) ← Bd(r) | I ⊨ Bd(r)}`, without repeated rules.
pub fn reduct(p: &Program, i: &Interpretation, sel: &HeadSelection) -> Result<Program> {
    sel.validate(p, i)?;
    let mut seen = std::collections::HashSet::new();
    let mut rules = Vec::new();
    for (&k, choice) in sel.choices() {
        let r = &p.rules()[k];
        let nr = Rule::new(choice.iter().cloned(), r.pos().clone(), r.neg().clone(), r.negneg().clone());
        if seen.insert(nr.clone()) {
            rules.push(nr);
        }
    }
    Program::new(rules)
}

/// Least model of the definite rules `head ← pos` given as bit pairs.
fn least_model(rules: &[(Mask, Mask)]) -> Mask {
    let mut d = 0;
    loop {
        let before = d;
        for &(head, pos) in rules {
            if pos & !d == 0 {
                d |= head;
            }
        }
        if d == before {
            return d;
        }
    }
}

/// `I ∈ SM(P^I_sel)` for the selection given as per-rule head bits. Every
/// reduct rule has a body true in `I`, so its Gelfond-Lifschitz reduct is the
/// definite program `head ← pos` and stability means its least model is `I`.
fn stable_for(cp: &CProgram, i: Mask, heads: &[Mask]) -> bool {
    let definite: Vec<(Mask, Mask)> = cp
        .rules
        .iter()
        .zip(heads)
        .filter(|(r, _)| r.body_classical(i))
        .map(|(r, &h)| (h, r.pos))
        .collect();
    if definite.iter().any(|&(h, _)| h == 0) {
        return false;
    }
    least_model(&definite) == i
}

/// Candidate stable models with one witnessing selection each.
pub fn candidate_witnesses(
    p: &Program,
    alphabet: &Alphabet,
    closed: bool,
) -> Result<Vec<(Interpretation, HeadSelection)>> {
    alphabet.ensure_at_most(MAX_ENUM_ATOMS, "enumeration")?;
    alphabet.ensure_covers(&p.atoms())?;
    let cp = CProgram::compile(p, alphabet)?;
    let mut out = Vec::new();
    for i in 0..=alphabet.full_mask() {
        if !cp.classical(i) {
            continue;
        }
        let slots = Slots::new(&cp, i, closed);
        let mut found = None;
        slots.for_each(p.len(), |heads| {
            if stable_for(&cp, i, heads) {
                found = Some(to_selection(alphabet, &slots, heads));
                false
            } else {
                true
            }
        });
        if let Some(sel) = found {
            out.push((alphabet.interpretation(i), sel));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// `CSM(P)`, with open or closed selections.
pub fn candidate_stable_models(p: &Program, alphabet: &Alphabet, closed: bool) -> Result<ModelSet> {
    Ok(candidate_witnesses(p, alphabet, closed)?.into_iter().map(|(i, _)| i).collect())
}

/// The `⊆`-minimal closed candidate stable models.
pub fn di_stable_models(p: &Program, alphabet: &Alphabet) -> Result<ModelSet> {
    Ok(minimal_elements(&candidate_stable_models(p, alphabet, true)?))
}

/// `T_P(I) = {p | (p ← B) ∈ P, I ⊨ B}` for a normal program.
pub fn tp_step(p: &Program, i: &Interpretation) -> Result<Interpretation> {
    if let Some(k) = p.rules().iter().position(|r| !r.is_normal()) {
        return Err(Error::NonNormalProgram(k));
    }
    let triggered = triggered_rules(p, i);
    Ok(Interpretation::new(
        triggered.into_iter().flat_map(|k| p.rules()[k].head().iter().cloned()),
    ))
}

/// Classical models `I` with `T_{P^I_sel}(I) = I` for some open selection.
pub fn spm_via_fixpoint(p: &Program, alphabet: &Alphabet) -> Result<ModelSet> {
    alphabet.ensure_at_most(MAX_ENUM_ATOMS, "enumeration")?;
    alphabet.ensure_covers(&p.atoms())?;
    let cp = CProgram::compile(p, alphabet)?;
    Ok(ModelSet::from_masks(
        alphabet,
        (0..=alphabet.full_mask()).filter(|&i| {
            if !cp.classical(i) {
                return false;
            }
            let slots = Slots::new(&cp, i, false);
            let mut hit = false;
            slots.for_each(p.len(), |heads| {
                let derived = cp
                    .rules
                    .iter()
                    .zip(heads)
                    .filter(|(r, _)| r.body_classical(i))
                    .fold(0, |d, (_, &h)| d | h);
                hit = derived == i;
                !hit
            });
            hit
        }),
    ))
}
