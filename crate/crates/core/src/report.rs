//! Computing several semantics of one program side by side and checking the
//! inclusions expected between them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::denotation::fork_stable_models;
use crate::di::{candidate_stable_models, candidate_witnesses, di_stable_models};
use crate::error::{Error, Result};
use crate::ht::classical_models;
use crate::justified::{ad_supported, explanations_of, justified_models, supported_models_graph};
use crate::model::{minimal_elements, Alphabet, ModelSet};
use crate::search::stable_models_search;
use crate::ssm::ssm_witnesses;
use crate::syntax::Program;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Semantics {
    Classical,
    Sm,
    Fork,
    Jm,
    Spm,
    Ad,
    Csm,
    CsmClosed,
    Di,
    Ssm,
}

impl Semantics {
    pub const ALL: [Semantics; 10] = [
        Semantics::Classical,
        Semantics::Sm,
        Semantics::Fork,
        Semantics::Jm,
        Semantics::Spm,
        Semantics::Ad,
        Semantics::Csm,
        Semantics::CsmClosed,
        Semantics::Di,
        Semantics::Ssm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Semantics::Classical => "classical",
            Semantics::Sm => "sm",
            Semantics::Fork => "fork",
            Semantics::Jm => "jm",
            Semantics::Spm => "spm",
            Semantics::Ad => "ad",
            Semantics::Csm => "csm",
            Semantics::CsmClosed => "csm-closed",
            Semantics::Di => "di",
            Semantics::Ssm => "ssm",
        }
    }

    pub fn compute(self, p: &Program, alphabet: &Alphabet) -> Result<ModelSet> {
        match self {
            Semantics::Classical => classical_models(p, alphabet),
            Semantics::Sm => stable_models_search(p, alphabet),
            Semantics::Fork => fork_stable_models(&p.forked(), alphabet),
            Semantics::Jm => justified_models(p, alphabet),
            Semantics::Spm => supported_models_graph(p, alphabet),
            Semantics::Ad => ad_supported(p, alphabet),
            Semantics::Csm => candidate_stable_models(p, alphabet, false),
            Semantics::CsmClosed => candidate_stable_models(p, alphabet, true),
            Semantics::Di => di_stable_models(p, alphabet),
            Semantics::Ssm => crate::ssm::strongly_supported_models(p, alphabet),
        }
    }

    /// One witness line per model, for the semantics that have witnesses.
    pub fn witnesses(self, p: &Program, alphabet: &Alphabet) -> Result<Option<Vec<String>>> {
        Ok(Some(match self {
            Semantics::Jm => {
                let mut out = Vec::new();
                for m in justified_models(p, alphabet)? {
                    if let Some(e) = explanations_of(p, &m)?.into_iter().next() {
                        out.push(format!("{m}: {e}"));
                    }
                }
                out
            }
            Semantics::Csm | Semantics::CsmClosed => {
                candidate_witnesses(p, alphabet, self == Semantics::CsmClosed)?
                    .into_iter()
                    .map(|(m, sel)| format!("{m}: {sel}"))
                    .collect()
            }
            Semantics::Ssm => ssm_witnesses(p, alphabet)?.into_iter().map(|(_, c)| c.to_string()).collect(),
            _ => return Ok(None),
        }))
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Semantics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Semantics::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown semantics `{s}`")))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Subset,
    Equal,
    /// `lhs` is the set of ⊆-minimal elements of `rhs`.
    MinimalOf,
}

impl Relation {
    pub fn holds(self, lhs: &ModelSet, rhs: &ModelSet) -> bool {
        match self {
            Relation::Subset => lhs.is_subset(rhs),
            Relation::Equal => lhs == rhs,
            Relation::MinimalOf => *lhs == minimal_elements(rhs),
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Subset => "⊆",
            Relation::Equal => "=",
            Relation::MinimalOf => "= min",
        }
    }
}

/// The expected relations between semantics.
pub const EXPECTED: [(Semantics, Relation, Semantics); 21] = {
    use Relation::*;
    use Semantics::*;
    [
        (Sm, Subset, Fork),
        (Sm, Subset, Jm),
        (Sm, Subset, Csm),
        (Fork, Equal, Jm),
        (Fork, Equal, Csm),
        (Jm, Equal, Csm),
        (Fork, Subset, Ssm),
        (Jm, Subset, Ssm),
        (Csm, Subset, Ssm),
        (Sm, Subset, Ssm),
        (Ssm, Subset, Classical),
        (Fork, Subset, Spm),
        (Jm, Subset, Spm),
        (Csm, Subset, Spm),
        (Spm, Subset, Classical),
        (Sm, Subset, Ad),
        (Ad, Subset, Spm),
        (Sm, Subset, Classical),
        (CsmClosed, Subset, Csm),
        (Sm, Subset, CsmClosed),
        (Di, MinimalOf, CsmClosed),
    ]
};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Inclusion {
    pub lhs: Semantics,
    pub relation: Relation,
    pub rhs: Semantics,
    pub holds: bool,
}

impl fmt::Display for Inclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.holds { "ok" } else { "VIOLATED" };
        write!(f, "{} {} {}: {mark}", self.lhs, self.relation.symbol(), self.rhs)
    }
}

#[derive(Clone, PartialEq, Debug, Default, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub alphabet: Vec<String>,
    pub semantics: BTreeMap<Semantics, ModelSet>,
    pub inclusions: Vec<Inclusion>,
    pub violations: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub witnesses: BTreeMap<Semantics, Vec<String>>,
    /// Microseconds per semantics; absent unless requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_us: Option<BTreeMap<Semantics, u64>>,
}

#[derive(Clone, Debug, Default)]
pub struct ReportOptions {
    pub witnesses: bool,
    pub timings: bool,
}

impl ComparisonReport {
    pub fn compute(p: &Program, alphabet: &Alphabet, selected: &[Semantics], opts: &ReportOptions) -> Result<Self> {
        alphabet.ensure_covers(&p.atoms())?;
        let mut report = ComparisonReport {
            alphabet: alphabet.atoms().iter().map(|a| a.to_string()).collect(),
            ..Default::default()
        };
        let mut timings = BTreeMap::new();
        for &s in selected {
            if report.semantics.contains_key(&s) {
                continue;
            }
            let start = Instant::now();
            let models = s.compute(p, alphabet)?;
            timings.insert(s, start.elapsed().as_micros() as u64);
            report.semantics.insert(s, models);
            if opts.witnesses {
                if let Some(w) = s.witnesses(p, alphabet)? {
                    report.witnesses.insert(s, w);
                }
            }
        }
        for (lhs, relation, rhs) in EXPECTED {
            if let (Some(l), Some(r)) = (report.semantics.get(&lhs), report.semantics.get(&rhs)) {
                let inc = Inclusion { lhs, relation, rhs, holds: relation.holds(l, r) };
                if !inc.holds {
                    report.violations.push(format!("{} {} {}", lhs, relation.symbol(), rhs));
                }
                report.inclusions.push(inc);
            }
        }
        if opts.timings {
            report.timings_us = Some(timings);
        }
        Ok(report)
    }

    pub fn get(&self, s: Semantics) -> Option<&ModelSet> {
        self.semantics.get(&s)
    }

    pub fn is_consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alphabet: {{{}}}", self.alphabet.join(","))?;
        for (s, models) in &self.semantics {
            writeln!(f, "{:<11} {models}", format!("{s}:"))?;
        }
        for (s, lines) in &self.witnesses {
            writeln!(f, "{s} witnesses:")?;
            for l in lines {
                writeln!(f, "  {l}")?;
            }
        }
        for inc in &self.inclusions {
            writeln!(f, "{inc}")?;
        }
        if let Some(t) = &self.timings_us {
            for (s, us) in t {
                writeln!(f, "time {s}: {us}us")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_program;

    fn full(src: &str) -> ComparisonReport {
        let p = parse_program(src).unwrap();
        let al = Alphabet::new(p.atoms());
        ComparisonReport::compute(&p, &al, &Semantics::ALL, &ReportOptions { witnesses: true, timings: false }).unwrap()
    }

    #[test]
    fn program_one() {
        let r = full("a | b. a | c.");
        assert_eq!(r.get(Semantics::Sm).unwrap(), &ModelSet::of([vec!["a"], vec!["b", "c"]]));
        let four = ModelSet::of([vec!["a"], vec!["a", "b"], vec!["a", "c"], vec!["b", "c"]]);
        for s in [Semantics::Fork, Semantics::Jm, Semantics::Csm, Semantics::Spm] {
            assert_eq!(r.get(s).unwrap(), &four, "{s}");
        }
        assert_eq!(r.get(Semantics::Ssm), r.get(Semantics::Classical));
        assert_eq!(r.get(Semantics::Ssm).unwrap().len(), 5);
        assert_eq!(r.inclusions.len(), EXPECTED.len());
        assert!(r.is_consistent(), "{r}");
    }

    #[test]
    fn json_round_trip_and_shape() {
        let r = full("a | b. a. b :- not b.");
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains(r#""fork":[["a","b"]]"#), "{text}");
        assert!(text.contains(r#""sm":[]"#));
        assert!(text.contains(r#"{"lhs":"sm","relation":"subset","rhs":"fork","holds":true}"#));
        assert!(!text.contains("timings_us"));
        let back: ComparisonReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn violations_are_listed() {
        let mut r = full("p :- p.");
        assert_eq!(r.get(Semantics::Spm).unwrap(), &ModelSet::of([vec![], vec!["p"]]));
        r.semantics.insert(Semantics::Ssm, ModelSet::of([vec!["p"]]));
        let redo: Vec<_> = EXPECTED
            .iter()
            .filter(|(l, rel, rh)| !rel.holds(&r.semantics[l], &r.semantics[rh]))
            .collect();
        assert!(!redo.is_empty());
    }

    #[test]
    fn selector_parsing() {
        for s in Semantics::ALL {
            assert_eq!(s.name().parse::<Semantics>().unwrap(), s);
        }
        assert!("stable".parse::<Semantics>().is_err());
    }
}
