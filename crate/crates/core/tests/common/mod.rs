//! Independent oracles shared by the integration tests. Everything here works
//! on explicit sets and the reference HT evaluator, never on bitmasks.
#![allow(dead_code)]

use std::collections::BTreeSet;

use forklab::ht::{classical_sat, ht_sat, HtInterpretation};
use forklab::{Alphabet, Atom, Fork, Formula, Interpretation, ModelSet, Program};

pub type Support = BTreeSet<Interpretation>;
pub type View = BTreeSet<Support>;

pub fn subsets(atoms: &BTreeSet<Atom>) -> Vec<Interpretation> {
    let v: Vec<&Atom> = atoms.iter().collect();
    (0u64..1 << v.len())
        .map(|m| Interpretation::new((0..v.len()).filter(|k| m >> k & 1 == 1).map(|k| v[k].clone())))
        .collect()
}

pub fn ht(h: &Interpretation, t: &Interpretation) -> HtInterpretation {
    HtInterpretation::new(h.atoms().clone(), t.atoms().clone()).expect("here inside there")
}

pub struct Lattice {
    pub t: Interpretation,
    pub all: Support,
    pub supports: Vec<Support>,
}

impl Lattice {
    pub fn new(t: &Interpretation) -> Self {
        let all: Support = subsets(t.atoms()).into_iter().collect();
        let others: Vec<&Interpretation> = all.iter().filter(|h| *h != t).collect();
        let mut supports = vec![Support::new()];
        for m in 0u64..1 << others.len() {
            let mut s: Support = (0..others.len()).filter(|k| m >> k & 1 == 1).map(|k| others[k].clone()).collect();
            s.insert(t.clone());
            supports.push(s);
        }
        Lattice { t: t.clone(), all, supports }
    }

    pub fn support(&self, phi: &Formula) -> Support {
        self.all.iter().filter(|h| ht_sat(&ht(h, &self.t), phi)).cloned().collect()
    }

    pub fn ideal(&self, h: &Support) -> View {
        if h.is_empty() {
            return View::new();
        }
        self.supports.iter().filter(|s| !s.is_empty() && h.is_subset(s)).cloned().collect()
    }

    pub fn closure(&self, delta: impl IntoIterator<Item = Support>) -> View {
        delta.into_iter().flat_map(|h| self.ideal(&h)).collect()
    }

    pub fn complement(&self, h: &Support) -> Support {
        if *h == self.all {
            return Support::new();
        }
        let mut out: Support = self.all.difference(h).cloned().collect();
        out.insert(self.t.clone());
        out
    }

    fn hat(v: &View) -> View {
        if v.is_empty() {
            View::from([Support::new()])
        } else {
            v.clone()
        }
    }

    pub fn formula(&self, phi: &Formula) -> View {
        self.fork(&Fork::from(phi.clone()))
    }

    /// The denotation, clause by clause, over explicit sets of supports.
    pub fn fork(&self, f: &Fork) -> View {
        match f {
            Fork::Bot => View::new(),
            Fork::Atom(p) => self.ideal(&self.support(&Formula::Atom(p.clone()))),
            Fork::And(l, r) => {
                let (l, r) = (self.fork(l), self.fork(r));
                self.closure(l.iter().flat_map(|h| r.iter().map(move |g| h.intersection(g).cloned().collect())))
            }
            Fork::Or(phi, psi) => {
                let (l, r) = (Self::hat(&self.formula(phi)), Self::hat(&self.formula(psi)));
                self.closure(l.iter().flat_map(|h| r.iter().map(move |g| h.union(g).cloned().collect())))
            }
            Fork::Implies(phi, g) => {
                let s = self.support(phi);
                if s.is_empty() {
                    View::from([self.all.clone()])
                } else {
                    let c = self.complement(&s);
                    self.closure(self.fork(g).into_iter().map(|h| c.union(&h).cloned().collect()))
                }
            }
            Fork::Split(l, r) => self.fork(l).union(&self.fork(r)).cloned().collect(),
        }
    }

    pub fn is_stable(&self, f: &Fork) -> bool {
        self.fork(f).contains(&Support::from([self.t.clone()]))
    }
}

pub fn explicit(view: &forklab::denotation::TView) -> View {
    view.supports()
        .expect("small base")
        .into_iter()
        .map(|s| s.members().into_iter().collect())
        .collect()
}

/// Stable models straight from the equilibrium definition.
pub fn equilibrium_models(phi: &Formula, alphabet: &BTreeSet<Atom>) -> ModelSet {
    subsets(alphabet)
        .into_iter()
        .filter(|t| {
            classical_sat(t.atoms(), phi)
                && !subsets(t.atoms()).iter().any(|h| h != t && ht_sat(&ht(h, t), phi))
        })
        .collect()
}

pub fn fork_models_explicit(f: &Fork, alphabet: &BTreeSet<Atom>) -> ModelSet {
    subsets(alphabet).into_iter().filter(|t| Lattice::new(t).is_stable(f)).collect()
}

/// Stable models of a normal program by the Gelfond-Lifschitz reduct and
/// least-model iteration; `¬¬q` is read in the candidate.
pub fn gl_stable(p: &Program, alphabet: &BTreeSet<Atom>) -> ModelSet {
    assert!(p.is_normal());
    subsets(alphabet)
        .into_iter()
        .filter(|t| {
            let reduct: Vec<_> = p
                .rules()
                .iter()
                .filter(|r| r.neg().iter().all(|q| !t.contains(q)) && r.negneg().iter().all(|q| t.contains(q)))
                .collect();
            let mut lm: BTreeSet<Atom> = BTreeSet::new();
            loop {
                let before = lm.len();
                for r in &reduct {
                    if r.pos().is_subset(&lm) {
                        if let Some(h) = r.head().first() {
                            lm.insert(h.clone());
                        }
                    }
                }
                if lm.len() == before {
                    break;
                }
            }
            let constraints_ok = reduct.iter().all(|r| !r.head().is_empty() || !r.pos().is_subset(&lm));
            constraints_ok && lm == *t.atoms()
        })
        .collect()
}

pub fn alphabet_of(p: &Program) -> Alphabet {
    Alphabet::new(p.atoms())
}

pub fn models(rows: &[&[&str]]) -> ModelSet {
    ModelSet::of(rows.iter().map(|r| r.to_vec()))
}
