//! Bitmask forms of programs and formulas over a fixed alphabet.

use crate::error::Result;
use crate::model::{Alphabet, Mask};
use crate::syntax::{Formula, Program, Rule};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct CRule {
    pub head: Mask,
    pub pos: Mask,
    pub neg: Mask,
    pub negneg: Mask,
}

impl CRule {
    pub fn compile(r: &Rule, alphabet: &Alphabet) -> Result<Self> {
        Ok(CRule {
            head: alphabet.mask_of(r.head())?,
            pos: alphabet.mask_of(r.pos())?,
            neg: alphabet.mask_of(r.neg())?,
            negneg: alphabet.mask_of(r.negneg())?,
        })
    }

    #[inline]
    pub fn body_classical(&self, i: Mask) -> bool {
        self.pos & !i == 0 && self.neg & i == 0 && self.negneg & !i == 0
    }

    /// `⟨H,T⟩ ⊨ Bd(r)`: positive atoms are read in `H`, negated ones in `T`.
    #[inline]
    pub fn body_ht(&self, h: Mask, t: Mask) -> bool {
        self.pos & !h == 0 && self.neg & t == 0 && self.negneg & !t == 0
    }

    #[inline]
    pub fn classical(&self, i: Mask) -> bool {
        !self.body_classical(i) || self.head & i != 0
    }

    #[inline]
    pub fn ht(&self, h: Mask, t: Mask) -> bool {
        self.classical(t) && (!self.body_ht(h, t) || self.head & h != 0)
    }
}

#[derive(Clone, Debug)]
pub(crate) struct CProgram {
    pub rules: Vec<CRule>,
}

impl CProgram {
    pub fn compile(p: &Program, alphabet: &Alphabet) -> Result<Self> {
        let rules = p
            .rules()
            .iter()
            .map(|r| CRule::compile(r, alphabet))
            .collect::<Result<_>>()?;
        Ok(CProgram { rules })
    }

    pub fn classical(&self, i: Mask) -> bool {
        self.rules.iter().all(|r| r.classical(i))
    }

    pub fn ht(&self, h: Mask, t: Mask) -> bool {
        self.rules.iter().all(|r| r.ht(h, t))
    }

    /// `T` is a model and no proper subset `H` makes `⟨H,T⟩` a model.
    pub fn is_stable(&self, t: Mask) -> bool {
        self.classical(t) && !crate::model::proper_submasks(t).any(|h| self.ht(h, t))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum CFormula {
    Bot,
    Atom(Mask),
    And(Box<CFormula>, Box<CFormula>),
    Or(Box<CFormula>, Box<CFormula>),
    Implies(Box<CFormula>, Box<CFormula>),
}

impl CFormula {
    pub fn compile(f: &Formula, alphabet: &Alphabet) -> Result<Self> {
        let bin = |l: &Formula, r: &Formula| -> Result<(Box<CFormula>, Box<CFormula>)> {
            Ok((
                Box::new(CFormula::compile(l, alphabet)?),
                Box::new(CFormula::compile(r, alphabet)?),
            ))
        };
        Ok(match f {
            Formula::Bot => CFormula::Bot,
            Formula::Atom(a) => CFormula::Atom(alphabet.bit(a)?),
            Formula::And(l, r) => {
                let (l, r) = bin(l, r)?;
                CFormula::And(l, r)
            }
            Formula::Or(l, r) => {
                let (l, r) = bin(l, r)?;
                CFormula::Or(l, r)
            }
            Formula::Implies(l, r) => {
                let (l, r) = bin(l, r)?;
                CFormula::Implies(l, r)
            }
        })
    }

    pub fn classical(&self, i: Mask) -> bool {
        match self {
            CFormula::Bot => false,
            CFormula::Atom(b) => i & b != 0,
            CFormula::And(l, r) => l.classical(i) && r.classical(i),
            CFormula::Or(l, r) => l.classical(i) || r.classical(i),
            CFormula::Implies(l, r) => !l.classical(i) || r.classical(i),
        }
    }

    pub fn ht(&self, h: Mask, t: Mask) -> bool {
        match self {
            CFormula::Bot => false,
            CFormula::Atom(b) => h & b != 0,
            CFormula::And(l, r) => l.ht(h, t) && r.ht(h, t),
            CFormula::Or(l, r) => l.ht(h, t) || r.ht(h, t),
            CFormula::Implies(l, r) => {
                (!l.classical(t) || r.classical(t)) && (!l.ht(h, t) || r.ht(h, t))
            }
        }
    }

    pub fn is_stable(&self, t: Mask) -> bool {
        self.classical(t) && !crate::model::proper_submasks(t).any(|h| self.ht(h, t))
    }
}
