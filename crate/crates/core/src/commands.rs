//! The logic behind the `forklab` subcommands, kept out of the binary so it
//! can be tested directly.

use std::fmt::Write as _;

use serde::Serialize;

use crate::denotation::strong_entailment_witness;
use crate::error::{Error, Result};
use crate::fuzz::{run_fuzz, Check, FuzzSummary};
use crate::gen::GenConfig;
use crate::justified::{explanations_of, justified_models, support_graphs_of, Explanation};
use crate::model::{Alphabet, Interpretation};
use crate::parser::{parse_fork, parse_program, render_program};
use crate::report::{ComparisonReport, ReportOptions, Semantics};
use crate::syntax::{Atom, Program};
use crate::translate::{pf_translate, t1_eliminate_double_negation, t2_disambiguate_heads};

/// Splits `a,b,c` into atoms; blanks are ignored.
pub fn parse_atom_list(s: &str) -> Result<Vec<Atom>> {
    let mut out = Vec::new();
    for name in s.split(',').map(str::trim).filter(|n| !n.is_empty()) {
        let valid = name.chars().next().is_some_and(|c| c.is_ascii_lowercase())
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(Error::InvalidConfig(format!("`{name}` is not an atom name")));
        }
        out.push(Atom::new(name));
    }
    Ok(out)
}

/// Parses `{a,b}`, `a,b` or an empty string as an interpretation.
pub fn parse_interpretation(s: &str) -> Result<Interpretation> {
    let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
    Ok(Interpretation::new(parse_atom_list(inner)?))
}

/// `models`: the selected semantics of a program and the inclusion checks
/// among them.
pub fn cmd_models(src: &str, selected: &[Semantics], extra: &[Atom], opts: &ReportOptions) -> Result<ComparisonReport> {
    let p = parse_program(src)?;
    let alphabet = Alphabet::new(p.atoms()).union(extra.iter().cloned());
    let selected = if selected.is_empty() { &Semantics::ALL[..] } else { selected };
    ComparisonReport::compute(&p, &alphabet, selected, opts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntailmentVerdict {
    pub alphabet: Vec<String>,
    pub entails: bool,
    /// The interpretation `T` where the left denotation is not included.
    pub there: Option<Interpretation>,
    /// A support of the left fork that is not in the right denotation.
    pub support: Option<String>,
}

impl std::fmt::Display for EntailmentVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (&self.there, &self.support) {
            (Some(t), Some(h)) => write!(f, "does not entail\nT = {t}\nsupport {h} is missing on the right"),
            _ => write!(f, "entails"),
        }
    }
}

/// `entails`: strong entailment between two forks.
pub fn cmd_entails(left: &str, right: &str, extra: &[Atom]) -> Result<EntailmentVerdict> {
    let (f, g) = (parse_fork(left)?, parse_fork(right)?);
    let alphabet = Alphabet::new(f.atoms().into_iter().chain(g.atoms())).union(extra.iter().cloned());
    let w = strong_entailment_witness(&f, &g, &alphabet)?;
    Ok(EntailmentVerdict {
        alphabet: alphabet.atoms().iter().map(|a| a.to_string()).collect(),
        entails: w.is_none(),
        there: w.as_ref().map(|w| w.there.clone()),
        support: w.map(|w| w.support.to_string()),
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Pass {
    Pf,
    T1,
    T2,
}

impl std::str::FromStr for Pass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pf" => Ok(Pass::Pf),
            "t1" => Ok(Pass::T1),
            "t2" => Ok(Pass::T2),
            _ => Err(Error::InvalidConfig(format!("unknown pass `{s}`, expected pf, t1 or t2"))),
        }
    }
}

/// `translate`: applies one transformation and renders the result.
pub fn cmd_translate(src: &str, pass: Pass) -> Result<String> {
    let p = parse_program(src)?;
    let t = match pass {
        Pass::Pf => pf_translate(&p),
        Pass::T1 => t1_eliminate_double_negation(&p),
        Pass::T2 => t2_disambiguate_heads(&p),
    };
    Ok(render_program(&t))
}

#[derive(Clone, Debug, Default)]
pub struct ExplainOptions {
    /// Explain only this model instead of every justified model.
    pub model: Option<Interpretation>,
    /// Every explanation instead of the first one per model.
    pub all: bool,
    /// Cyclic support graphs as well.
    pub cyclic: bool,
}

/// `explain`: explanations of justified models (or support graphs).
pub fn cmd_explain(src: &str, extra: &[Atom], opts: &ExplainOptions) -> Result<Vec<Explanation>> {
    let p = parse_program(src)?;
    let alphabet = Alphabet::new(p.atoms()).union(extra.iter().cloned());
    let models: Vec<Interpretation> = match &opts.model {
        Some(m) => {
            alphabet.ensure_covers(m.atoms())?;
            vec![m.clone()]
        }
        None => justified_models(&p, &alphabet)?.into_iter().collect(),
    };
    let mut out = Vec::new();
    for m in models {
        let graphs = graphs(&p, &m, opts.cyclic)?;
        if opts.all {
            out.extend(graphs);
        } else {
            out.extend(graphs.into_iter().next());
        }
    }
    Ok(out)
}

fn graphs(p: &Program, m: &Interpretation, cyclic: bool) -> Result<Vec<Explanation>> {
    if cyclic {
        support_graphs_of(p, m)
    } else {
        explanations_of(p, m)
    }
}

/// All explanations as DOT digraphs, one per graph.
pub fn render_dot(graphs: &[Explanation]) -> String {
    let mut out = String::new();
    for (k, g) in graphs.iter().enumerate() {
        let name = format!("{}{}", g.model(), if graphs.len() > 1 { format!(" #{}", k + 1) } else { String::new() });
        let _ = write!(out, "{}", g.to_dot(&name));
    }
    out
}

/// `fuzz`: runs the selected checks; the default set when `checks` is empty.
pub fn cmd_fuzz(cfg: &GenConfig, iterations: usize, checks: &[Check]) -> Result<FuzzSummary> {
    let checks = if checks.is_empty() { &Check::DEFAULT[..] } else { checks };
    run_fuzz(cfg, iterations, checks)
}
