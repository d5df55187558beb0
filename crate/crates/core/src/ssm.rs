//! Strongly supported models: models reachable by a monotone chain
//! `H0 ⊆ H1 ⊆ … ⊆ Hn = T` where each stage hits the head of every rule
//! applicable at the previous stage and holds only head atoms of those rules.

use std::fmt;

use crate::compiled::{CProgram, CRule};
use crate::error::{Error, Result};
use crate::model::{Alphabet, Interpretation, Mask, ModelSet, MAX_ENUM_ATOMS};
use crate::syntax::Program;

pub use crate::model::minimal_elements;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SsmChain {
    pub stages: Vec<Interpretation>,
    pub target: Interpretation,
}

impl fmt::Display for SsmChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.stages.iter().map(ToString::to_string).collect();
        write!(f, "{} = {}", items.join(" ⊆ "), self.target)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ChainVerdict {
    Valid,
    Violated { stage: usize, reason: String },
}

/// Rules that license stage `i`: empty-body rules for the first stage,
/// otherwise rules with `⟨H_{i-1},T⟩ ⊨ Bd(r)`.
fn applicable(rules: &[CRule], prev: Option<Mask>, t: Mask) -> impl Iterator<Item = &CRule> {
    rules.iter().filter(move |r| match prev {
        None => r.pos | r.neg | r.negneg == 0,
        Some(h) => r.body_ht(h, t),
    })
}

/// Checks both conditions at every stage, and that the chain ends in `T`.
pub fn check_chain(c: &SsmChain, p: &Program) -> Result<ChainVerdict> {
    for (k, w) in c.stages.windows(2).enumerate() {
        if !w[0].is_subset(&w[1]) {
            return Err(Error::NonMonotoneChain(k + 1));
        }
    }
    let alphabet = Alphabet::new(
        p.atoms()
            .into_iter()
            .chain(c.target.iter().cloned())
            .chain(c.stages.iter().flat_map(|s| s.iter().cloned())),
    );
    alphabet.ensure_at_most(crate::model::MAX_MASK_ATOMS, "chain alphabet")?;
    let cp = CProgram::compile(p, &alphabet)?;
    let t = alphabet.mask_of(c.target.iter())?;
    let violated = |stage, reason: String| Ok(ChainVerdict::Violated { stage, reason });
    if !cp.classical(t) {
        return violated(c.stages.len(), format!("{} is not a model", c.target));
    }
    match c.stages.last() {
        Some(last) if *last == c.target => {}
        _ => return violated(c.stages.len(), "the chain does not end in the model".into()),
    }
    let mut prev = None;
    for (k, stage) in c.stages.iter().enumerate() {
        let h = alphabet.mask_of(stage.iter())?;
        let mut pool = 0;
        for r in applicable(&cp.rules, prev, t) {
            if r.head & h == 0 {
                return violated(k, format!("misses the head of an applicable rule ({})", head_names(&alphabet, r)));
            }
            pool |= r.head;
        }
        if h & !pool != 0 {
            let extra = alphabet.interpretation(h & !pool);
            return violated(k, format!("{extra} is not licensed by an applicable rule"));
        }
        prev = Some(h);
    }
    Ok(ChainVerdict::Valid)
}

fn head_names(alphabet: &Alphabet, r: &CRule) -> String {
    alphabet.interpretation(r.head).to_string()
}

/// The greedy chain for `T`: each stage takes every atom of `T` licensed by
/// the previous one. Applicability grows with the stage, so any valid chain
/// stays below the greedy one stage by stage; `T` is strongly supported iff
/// the greedy chain reaches it.
fn greedy_chain(rules: &[CRule], t: Mask) -> Option<Vec<Mask>> {
    let pool = |prev| applicable(rules, prev, t).fold(0, |acc, r| acc | r.head);
    let mut stages = vec![pool(None) & t];
    loop {
        let last = *stages.last().expect("nonempty");
        if last == t {
            return Some(stages);
        }
        let next = pool(Some(last)) & t;
        if next == last {
            return None;
        }
        stages.push(next);
    }
}

/// Strongly supported models with a witness chain each.
pub fn ssm_witnesses(p: &Program, alphabet: &Alphabet) -> Result<Vec<(Interpretation, SsmChain)>> {
    alphabet.ensure_at_most(MAX_ENUM_ATOMS, "enumeration")?;
    alphabet.ensure_covers(&p.atoms())?;
    let cp = CProgram::compile(p, alphabet)?;
    let mut out = Vec::new();
    for t in 0..=alphabet.full_mask() {
        if !cp.classical(t) {
            continue;
        }
        if let Some(stages) = greedy_chain(&cp.rules, t) {
            let target = alphabet.interpretation(t);
            let stages = stages.into_iter().map(|m| alphabet.interpretation(m)).collect();
            out.push((target.clone(), SsmChain { stages, target }));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// `SSM(P)`.
pub fn strongly_supported_models(p: &Program, alphabet: &Alphabet) -> Result<ModelSet> {
    Ok(ssm_witnesses(p, alphabet)?.into_iter().map(|(t, _)| t).collect())
}
