//! Seeded differential checks over random programs, with rule-removal
//! shrinking of counterexamples.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::denotation::{fork_stable_models, strongly_entails};
use crate::di::{candidate_stable_models, spm_via_fixpoint};
use crate::error::{Error, Result};
use crate::gen::{GenConfig, Generator};
use crate::ht::classical_models;
use crate::justified::{ad_supported, justified_models, supported_models_graph};
use crate::model::{minimal_elements, Alphabet, ModelSet};
use crate::search::stable_models_search;
use crate::ssm::strongly_supported_models;
use crate::syntax::{Fork, Program, Rule};
use crate::translate::{pf_translate, strip_auxiliary, t1_eliminate_double_negation, t2_disambiguate_heads};

/// Random two-rule contexts added to the fixed per-atom ones in the pf check.
pub const RANDOM_CONTEXTS: usize = 10;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Projected SM of `pf(P)` equals fork SM of `⟨P⟩`, also under sampled contexts.
    PfProjection,
    /// `SM ⊆ JM`, with equality for normal programs.
    SmInJm,
    /// `JM = fork SM`.
    JmFork,
    /// Open `CSM = fork SM`.
    CsmFork,
    /// Open `CSM ⊆ SSM`.
    CsmInSsm,
    /// Graph-based SPM equals the selection fixpoint SPM.
    SpmFixpoint,
    /// `SM(P) ⊆ SM(⟨P⟩)` and `P` strongly entails `⟨P⟩`.
    ForkedEntailment,
    /// `SM ⊆ SSM ⊆ M`, `SSM = SM` for normal programs and `min(SSM) = SM`
    /// for programs without negation.
    SsmBounds,
    /// `min(SSM) = SM` for every program. Fails on programs mixing
    /// disjunction and negation, e.g. `a | b. a. b :- not b.`
    SsmMinimal,
    /// `SM ⊆ AD ⊆ SPM`.
    AdChain,
    /// Double-negation elimination keeps SM modulo auxiliary atoms.
    T1,
    /// Head disambiguation keeps open CSM, and turns closed CSM into open CSM.
    T2,
}

impl Check {
    pub const ALL: [Check; 12] = [
        Check::PfProjection,
        Check::SmInJm,
        Check::JmFork,
        Check::CsmFork,
        Check::CsmInSsm,
        Check::SpmFixpoint,
        Check::ForkedEntailment,
        Check::SsmBounds,
        Check::SsmMinimal,
        Check::AdChain,
        Check::T1,
        Check::T2,
    ];

    /// Everything except the slow pf projection check and the unconditional
    /// `min(SSM) = SM`, which is known not to hold.
    pub const DEFAULT: [Check; 10] = [
        Check::SmInJm,
        Check::JmFork,
        Check::CsmFork,
        Check::CsmInSsm,
        Check::SpmFixpoint,
        Check::ForkedEntailment,
        Check::SsmBounds,
        Check::AdChain,
        Check::T1,
        Check::T2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::PfProjection => "pf-projection",
            Check::SmInJm => "sm-in-jm",
            Check::JmFork => "jm-fork",
            Check::CsmFork => "csm-fork",
            Check::CsmInSsm => "csm-in-ssm",
            Check::SpmFixpoint => "spm-fixpoint",
            Check::ForkedEntailment => "forked-entailment",
            Check::SsmBounds => "ssm-bounds",
            Check::SsmMinimal => "ssm-minimal",
            Check::AdChain => "ad-chain",
            Check::T1 => "t1",
            Check::T2 => "t2",
        }
    }

    /// `Ok(None)` when the property holds, otherwise a description.
    pub fn run(self, p: &Program, seed: u64) -> Result<Option<String>> {
        let al = Alphabet::new(p.atoms());
        let differ = |what: &str, l: &ModelSet, r: &ModelSet| -> Option<String> {
            (l != r).then(|| format!("{what}: {l} vs {r}"))
        };
        let not_sub = |what: &str, l: &ModelSet, r: &ModelSet| -> Option<String> {
            (!l.is_subset(r)).then(|| format!("{what}: {l} not in {r}"))
        };
        Ok(match self {
            Check::PfProjection => pf_projection(p, seed)?,
            Check::SmInJm => {
                let sm = stable_models_search(p, &al)?;
                let jm = justified_models(p, &al)?;
                if p.is_normal() {
                    differ("SM = JM", &sm, &jm)
                } else {
                    not_sub("SM ⊆ JM", &sm, &jm)
                }
            }
            Check::JmFork => {
                differ("JM = fork SM", &justified_models(p, &al)?, &fork_stable_models(&p.forked(), &al)?)
            }
            Check::CsmFork => differ(
                "CSM = fork SM",
                &candidate_stable_models(p, &al, false)?,
                &fork_stable_models(&p.forked(), &al)?,
            ),
            Check::CsmInSsm => {
                not_sub("CSM ⊆ SSM", &candidate_stable_models(p, &al, false)?, &strongly_supported_models(p, &al)?)
            }
            Check::SpmFixpoint => {
                differ("graph SPM = fixpoint SPM", &supported_models_graph(p, &al)?, &spm_via_fixpoint(p, &al)?)
            }
            Check::ForkedEntailment => {
                let f = p.forked();
                let sm = stable_models_search(p, &al)?;
                not_sub("SM(P) ⊆ SM(⟨P⟩)", &sm, &fork_stable_models(&f, &al)?).or_else(|| {
                    match strongly_entails(&Fork::from(p.to_formula()), &f, &al) {
                        Ok(true) => None,
                        Ok(false) => Some("P does not strongly entail ⟨P⟩".into()),
                        Err(e) => Some(e.to_string()),
                    }
                })
            }
            Check::SsmBounds => {
                let sm = stable_models_search(p, &al)?;
                let ssm = strongly_supported_models(p, &al)?;
                let positive = p.rules().iter().all(|r| r.neg().is_empty() && r.negneg().is_empty());
                not_sub("SM ⊆ SSM", &sm, &ssm)
                    .or(not_sub("SSM ⊆ M", &ssm, &classical_models(p, &al)?))
                    .or_else(|| if p.is_normal() { differ("SSM = SM", &ssm, &sm) } else { None })
                    .or_else(|| if positive { differ("min(SSM) = SM", &minimal_elements(&ssm), &sm) } else { None })
            }
            Check::SsmMinimal => {
                let ssm = strongly_supported_models(p, &al)?;
                differ("min(SSM) = SM", &minimal_elements(&ssm), &stable_models_search(p, &al)?)
            }
            Check::AdChain => {
                let sm = stable_models_search(p, &al)?;
                let ad = ad_supported(p, &al)?;
                not_sub("SM ⊆ AD", &sm, &ad).or(not_sub("AD ⊆ SPM", &ad, &supported_models_graph(p, &al)?))
            }
            Check::T1 => {
                let t = t1_eliminate_double_negation(p);
                let sm = stable_models_search(&t, &Alphabet::new(t.atoms()))?;
                differ("SM(t1 P) = SM(P)", &strip_auxiliary(&sm), &stable_models_search(p, &al)?)
            }
            Check::T2 => {
                let t = t2_disambiguate_heads(p);
                let tal = Alphabet::new(t.atoms());
                let open = candidate_stable_models(p, &al, false)?;
                differ("open CSM(t2 P) = open CSM(P)", &strip_auxiliary(&candidate_stable_models(&t, &tal, false)?), &open)
                    .or(differ(
                        "closed CSM(t2 P) = open CSM(P)",
                        &strip_auxiliary(&candidate_stable_models(&t, &tal, true)?),
                        &open,
                    ))
            }
        })
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown check `{s}`")))
    }
}

/// The sampled context family for `P`: for every atom `a` of `P` the
/// programs `a.`, `:- a.` and `:- not a.`, then [`RANDOM_CONTEXTS`] random
/// two-rule programs over the atoms of `P`, seeded by `seed`.
pub fn context_family(p: &Program, seed: u64) -> Vec<Program> {
    let atoms: Vec<_> = p.atoms().into_iter().collect();
    let mut out = vec![Program::empty()];
    for a in &atoms {
        out.push(Program::new(vec![Rule::fact(a.clone())]).expect("unlabelled"));
        out.push(Program::new(vec![Rule::new([], [a.clone()], [], [])]).expect("unlabelled"));
        out.push(Program::new(vec![Rule::new([], [], [a.clone()], [])]).expect("unlabelled"));
    }
    if !atoms.is_empty() {
        let mut g = Generator::over(atoms, seed ^ 0x5eed_c0de);
        for _ in 0..RANDOM_CONTEXTS {
            let first = g.rule(&[]);
            let second = g.rule(std::slice::from_ref(&first));
            out.push(Program::new(vec![first, second]).expect("unlabelled"));
        }
    }
    out
}

fn pf_projection(p: &Program, seed: u64) -> Result<Option<String>> {
    let v = p.atoms();
    let al = Alphabet::new(v.clone());
    let pf = pf_translate(p);
    for ctx in context_family(p, seed) {
        let extended = pf.conjoin(&ctx)?;
        let projected = stable_models_search(&extended, &Alphabet::new(extended.atoms()))?.project(&v);
        let fork = Fork::and(p.forked(), Fork::from(ctx.to_formula()));
        let expected = fork_stable_models(&fork, &al)?;
        if projected != expected {
            return Ok(Some(format!(
                "context {{{}}}: projected SM(pf P ∪ L) = {projected} vs fork SM = {expected}",
                ctx.to_string().trim().replace('\n', " ")
            )));
        }
    }
    Ok(None)
}

/// Drops rules one at a time while the check keeps failing.
pub fn shrink(p: &Program, check: Check, seed: u64) -> Program {
    let mut current = p.clone();
    'outer: loop {
        for i in 0..current.len() {
            let smaller = current.without_rule(i);
            if matches!(check.run(&smaller, seed), Ok(Some(_)) | Err(_)) {
                current = smaller;
                continue 'outer;
            }
        }
        return current;
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Counterexample {
    pub seed: u64,
    pub program: String,
    pub shrunk: String,
    pub message: String,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct CheckSummary {
    pub check: Check,
    pub passed: usize,
    pub failed: usize,
    pub failing_seeds: Vec<u64>,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct FuzzSummary {
    pub config: GenConfig,
    pub iterations: usize,
    pub checks: Vec<CheckSummary>,
}

impl FuzzSummary {
    pub fn failures(&self) -> usize {
        self.checks.iter().map(|c| c.failed).sum()
    }
}

impl fmt::Display for FuzzSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} programs from seed {}", self.iterations, self.config.seed)?;
        for c in &self.checks {
            writeln!(f, "{:<18} passed {:>5}  failed {:>5}", c.check.name(), c.passed, c.failed)?;
            if let Some(cx) = &c.counterexample {
                writeln!(f, "  seed {}: {}", cx.seed, cx.message)?;
                for line in cx.shrunk.lines() {
                    writeln!(f, "    {line}")?;
                }
            }
        }
        Ok(())
    }
}

/// Runs `checks` on the programs generated from seeds `cfg.seed + i`.
pub fn run_fuzz(cfg: &GenConfig, iterations: usize, checks: &[Check]) -> Result<FuzzSummary> {
    cfg.validate()?;
    let mut summaries: Vec<CheckSummary> = checks
        .iter()
        .map(|&check| CheckSummary { check, passed: 0, failed: 0, failing_seeds: Vec::new(), counterexample: None })
        .collect();
    for i in 0..iterations {
        let seed = cfg.seed.wrapping_add(i as u64);
        let p = Generator::new(&cfg.with_seed(seed))?.program();
        for s in summaries.iter_mut() {
            let outcome = s.check.run(&p, seed).unwrap_or_else(|e| Some(format!("error: {e}")));
            match outcome {
                None => s.passed += 1,
                Some(message) => {
                    s.failed += 1;
                    s.failing_seeds.push(seed);
                    if s.counterexample.is_none() {
                        let shrunk = shrink(&p, s.check, seed);
                        let message = match s.check.run(&shrunk, seed) {
                            Ok(Some(m)) => m,
                            Ok(None) => message,
                            Err(e) => format!("error: {e}"),
                        };
                        s.counterexample = Some(Counterexample {
                            seed,
                            program: p.to_string(),
                            shrunk: shrunk.to_string(),
                            message,
                        });
                    }
                }
            }
        }
    }
    Ok(FuzzSummary { config: cfg.clone(), iterations, checks: summaries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_program;

    #[test]
    fn checks_pass_on_examples() {
        for src in ["a | b. a | c.", "a | b. a. b :- not b.", "p :- p.", "p. :- c. a | b. b | a :- p.", ""] {
            let p = parse_program(src).unwrap();
            for c in Check::ALL.into_iter().filter(|c| *c != Check::SsmMinimal || !src.contains("not")) {
                assert_eq!(c.run(&p, 0).unwrap(), None, "{c} on {src}");
            }
        }
    }

    #[test]
    fn unconditional_ssm_minimality_fails_on_program_five() {
        let p5 = parse_program("a | b. a. b :- not b.").unwrap();
        let msg = Check::SsmMinimal.run(&p5, 0).unwrap().unwrap();
        assert_eq!(msg, "min(SSM) = SM: [{a,b}] vs []");
        assert_eq!(shrink(&p5, Check::SsmMinimal, 0), p5);
    }

    #[test]
    fn context_family_shape() {
        let p = parse_program("a | b. c :- a.").unwrap();
        let fam = context_family(&p, 3);
        assert_eq!(fam.len(), 1 + 3 * 3 + RANDOM_CONTEXTS);
        assert!(fam.iter().all(|l| l.atoms().is_subset(&p.atoms())));
        assert_eq!(fam, context_family(&p, 3));
    }

    #[test]
    fn shrinking_keeps_a_failure() {
        // JM = SM is only claimed for normal programs.
        let p = parse_program("x. a | b. a | c. d :- x.").unwrap();
        let fails = |q: &Program| {
            let al = Alphabet::new(q.atoms());
            justified_models(q, &al).unwrap() != stable_models_search(q, &al).unwrap()
        };
        assert!(fails(&p));
        let mut cur = p.clone();
        'outer: loop {
            for i in 0..cur.len() {
                if fails(&cur.without_rule(i)) {
                    cur = cur.without_rule(i);
                    continue 'outer;
                }
            }
            break;
        }
        assert_eq!(cur, parse_program("a | b. a | c.").unwrap());
    }

    #[test]
    fn small_run_is_clean_and_deterministic() {
        let cfg = GenConfig { seed: 11, ..GenConfig::default() };
        let a = run_fuzz(&cfg, 40, &Check::DEFAULT).unwrap();
        assert_eq!(a.failures(), 0, "{a}");
        assert_eq!(a, run_fuzz(&cfg, 40, &Check::DEFAULT).unwrap());
    }
}
