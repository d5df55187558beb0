//! Seeded random programs, formulas and forks for differential testing.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::syntax::{Atom, Fork, Formula, Program, Rule};

pub const MAX_GEN_ATOMS: usize = 6;
pub const MAX_GEN_RULES: usize = 8;
pub const MAX_GEN_HEAD: usize = 3;
pub const MAX_GEN_BODY: usize = 3;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenConfig {
    pub atoms: usize,
    /// Upper bound; the actual count is drawn from `1..=rules`.
    pub rules: usize,
    pub max_head: usize,
    pub max_body: usize,
    /// Probability that a body literal is `¬a`.
    pub p_neg: f64,
    /// Probability that a body literal is `¬¬a`.
    pub p_negneg: f64,
    /// Probability of an empty head.
    pub p_constraint: f64,
    /// Probability that a rule reuses the head set of an earlier disjunctive rule.
    pub p_dup_head: f64,
    pub seed: u64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            atoms: 4,
            rules: 5,
            max_head: 3,
            max_body: 2,
            p_neg: 0.3,
            p_negneg: 0.1,
            p_constraint: 0.1,
            p_dup_head: 0.1,
            seed: 0,
        }
    }
}

impl GenConfig {
    pub fn with_seed(&self, seed: u64) -> Self {
        GenConfig { seed, ..self.clone() }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.atoms == 0 || self.atoms > MAX_GEN_ATOMS {
            return bad(format!("atoms must be in 1..={MAX_GEN_ATOMS}, got {}", self.atoms));
        }
        if self.rules == 0 || self.rules > MAX_GEN_RULES {
            return bad(format!("rules must be in 1..={MAX_GEN_RULES}, got {}", self.rules));
        }
        if self.max_head == 0 || self.max_head > MAX_GEN_HEAD.min(self.atoms) {
            return bad(format!("max-head must be in 1..={}, got {}", MAX_GEN_HEAD.min(self.atoms), self.max_head));
        }
        if self.max_body > MAX_GEN_BODY.min(self.atoms) {
            return bad(format!("max-body must be at most {}, got {}", MAX_GEN_BODY.min(self.atoms), self.max_body));
        }
        for (name, p) in [
            ("p-neg", self.p_neg),
            ("p-negneg", self.p_negneg),
            ("p-constraint", self.p_constraint),
            ("p-dup-head", self.p_dup_head),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return bad(format!("{name} must be a probability, got {p}"));
            }
        }
        if self.p_neg + self.p_negneg > 1.0 {
            return bad("p-neg + p-negneg exceeds 1".into());
        }
        Ok(())
    }

    pub fn alphabet(&self) -> Vec<Atom> {
        (0..self.atoms).map(|i| Atom::new(((b'a' + i as u8) as char).to_string())).collect()
    }
}

pub struct Generator {
    cfg: GenConfig,
    atoms: Vec<Atom>,
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(cfg: &GenConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(Generator { atoms: cfg.alphabet(), rng: ChaCha8Rng::seed_from_u64(cfg.seed), cfg: cfg.clone() })
    }

    /// Generator over explicit atoms, for formulas and forks only.
    pub fn over(atoms: Vec<Atom>, seed: u64) -> Self {
        let cfg = GenConfig { seed, ..GenConfig::default() };
        Generator { atoms, rng: ChaCha8Rng::seed_from_u64(seed), cfg }
    }

    fn pick(&mut self, n: usize) -> Vec<Atom> {
        self.atoms.choose_multiple(&mut self.rng, n).cloned().collect()
    }

    fn atom(&mut self) -> Atom {
        self.atoms.choose(&mut self.rng).expect("nonempty alphabet").clone()
    }

    pub fn rule(&mut self, earlier: &[Rule]) -> Rule {
        let disjunctive: Vec<&Rule> = earlier.iter().filter(|r| r.head().len() > 1).collect();
        let head = if !disjunctive.is_empty() && self.rng.gen_bool(self.cfg.p_dup_head) {
            let mut h = disjunctive.choose(&mut self.rng).expect("nonempty").head().to_vec();
            h.shuffle(&mut self.rng);
            h
        } else if self.rng.gen_bool(self.cfg.p_constraint) {
            Vec::new()
        } else {
            let n = self.rng.gen_range(1..=self.cfg.max_head);
            self.pick(n)
        };
        let n = self.rng.gen_range(0..=self.cfg.max_body);
        let (mut pos, mut neg, mut negneg) = (Vec::new(), Vec::new(), Vec::new());
        for a in self.pick(n) {
            let x: f64 = self.rng.gen();
            if x < self.cfg.p_neg {
                neg.push(a);
            } else if x < self.cfg.p_neg + self.cfg.p_negneg {
                negneg.push(a);
            } else {
                pos.push(a);
            }
        }
        Rule::new(head, pos, neg, negneg)
    }

    pub fn program(&mut self) -> Program {
        let n = self.rng.gen_range(1..=self.cfg.rules);
        let mut rules = Vec::with_capacity(n);
        for _ in 0..n {
            let r = self.rule(&rules);
            rules.push(r);
        }
        Program::new(rules).expect("generated rules are unlabelled")
    }

    pub fn formula(&mut self, depth: usize) -> Formula {
        let leaf = depth == 0 || self.rng.gen_bool(0.3);
        if leaf {
            return if self.rng.gen_bool(0.1) { Formula::Bot } else { Formula::Atom(self.atom()) };
        }
        let l = self.formula(depth - 1);
        let r = self.formula(depth - 1);
        match self.rng.gen_range(0..3) {
            0 => Formula::and(l, r),
            1 => Formula::or(l, r),
            _ => Formula::implies(l, r),
        }
    }

    /// A fork of depth at most `depth`.
    pub fn fork(&mut self, depth: usize) -> Fork {
        if depth == 0 || self.rng.gen_bool(0.2) {
            return if self.rng.gen_bool(0.1) { Fork::Bot } else { Fork::Atom(self.atom()) };
        }
        match self.rng.gen_range(0..4) {
            0 => Fork::split(self.fork(depth - 1), self.fork(depth - 1)),
            1 => Fork::and(self.fork(depth - 1), self.fork(depth - 1)),
            2 => Fork::Or(self.formula(depth - 1), self.formula(depth - 1)),
            _ => Fork::implies(self.formula(depth - 1), self.fork(depth - 1)),
        }
    }
}

pub fn gen_program(cfg: &GenConfig) -> Result<Program> {
    Ok(Generator::new(cfg)?.program())
}

pub fn gen_fork(atoms: Vec<Atom>, depth: usize, seed: u64) -> Fork {
    Generator::over(atoms, seed).fork(depth)
}

pub fn gen_formula(atoms: Vec<Atom>, depth: usize, seed: u64) -> Formula {
    Generator::over(atoms, seed).formula(depth)
}
