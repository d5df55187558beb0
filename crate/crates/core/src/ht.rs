//! Classical and Here-and-There satisfaction, classical models and
//! stable (equilibrium) models by exhaustive enumeration.

use std::collections::BTreeSet;
use std::fmt;

use crate::compiled::{CFormula, CProgram};
use crate::error::{Error, Result};
use crate::model::{proper_submasks, Alphabet, Interpretation, ModelSet, MAX_ENUM_ATOMS};
use crate::syntax::{Atom, Formula, Program};

/// A pair `⟨H,T⟩` with `H ⊆ T`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HtInterpretation {
    here: BTreeSet<Atom>,
    there: BTreeSet<Atom>,
}

impl HtInterpretation {
    pub fn new(
        here: impl IntoIterator<Item = Atom>,
        there: impl IntoIterator<Item = Atom>,
    ) -> Result<Self> {
        let here: BTreeSet<Atom> = here.into_iter().collect();
        let there: BTreeSet<Atom> = there.into_iter().collect();
        if !here.is_subset(&there) {
            return Err(Error::HereNotInThere {
                here: Interpretation::from(here).to_string(),
                there: Interpretation::from(there).to_string(),
            });
        }
        Ok(HtInterpretation { here, there })
    }

    pub fn total(t: impl IntoIterator<Item = Atom>) -> Self {
        let there: BTreeSet<Atom> = t.into_iter().collect();
        HtInterpretation {
            here: there.clone(),
            there,
        }
    }

    pub fn here(&self) -> &BTreeSet<Atom> {
        &self.here
    }

    pub fn there(&self) -> &BTreeSet<Atom> {
        &self.there
    }

    pub fn is_total(&self) -> bool {
        self.here == self.there
    }
}

impl fmt::Display for HtInterpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "⟨{}, {}⟩",
            Interpretation::from(self.here.clone()),
            Interpretation::from(self.there.clone())
        )
    }
}

/// Truth-table evaluation of `φ` in the set of true atoms `t`.
pub fn classical_sat(t: &BTreeSet<Atom>, phi: &Formula) -> bool {
    match phi {
        Formula::Bot => false,
        Formula::Atom(a) => t.contains(a),
        Formula::And(l, r) => classical_sat(t, l) && classical_sat(t, r),
        Formula::Or(l, r) => classical_sat(t, l) || classical_sat(t, r),
        Formula::Implies(l, r) => !classical_sat(t, l) || classical_sat(t, r),
    }
}

/// `⟨H,T⟩ ⊨ φ`.
pub fn ht_sat(i: &HtInterpretation, phi: &Formula) -> bool {
    match phi {
        Formula::Bot => false,
        Formula::Atom(a) => i.here.contains(a),
        Formula::And(l, r) => ht_sat(i, l) && ht_sat(i, r),
        Formula::Or(l, r) => ht_sat(i, l) || ht_sat(i, r),
        Formula::Implies(l, r) => classical_sat(&i.there, phi) && (!ht_sat(i, l) || ht_sat(i, r)),
    }
}

fn enumeration_alphabet(alphabet: &Alphabet, atoms: &BTreeSet<Atom>) -> Result<()> {
    alphabet.ensure_at_most(MAX_ENUM_ATOMS, "enumeration")?;
    alphabet.ensure_covers(atoms)
}

/// `M(P)`: all `T ⊆ alphabet` satisfying every rule classically.
pub fn classical_models(p: &Program, alphabet: &Alphabet) -> Result<ModelSet> {
    enumeration_alphabet(alphabet, &p.atoms())?;
    let cp = CProgram::compile(p, alphabet)?;
    Ok(ModelSet::from_masks(
        alphabet,
        (0..=alphabet.full_mask()).filter(|&t| cp.classical(t)),
    ))
}

/// `M(φ)`.
pub fn formula_classical_models(phi: &Formula, alphabet: &Alphabet) -> Result<ModelSet> {
    enumeration_alphabet(alphabet, &phi.atoms())?;
    let cf = CFormula::compile(phi, alphabet)?;
    Ok(ModelSet::from_masks(
        alphabet,
        (0..=alphabet.full_mask()).filter(|&t| cf.classical(t)),
    ))
}

/// `SM(P)`: every `T` with `⟨T,T⟩ ⊨ P` and no `H ⊂ T` with `⟨H,T⟩ ⊨ P`.
pub fn stable_models(p: &Program, alphabet: &Alphabet) -> Result<ModelSet> {
    enumeration_alphabet(alphabet, &p.atoms())?;
    let cp = CProgram::compile(p, alphabet)?;
    Ok(ModelSet::from_masks(
        alphabet,
        (0..=alphabet.full_mask()).filter(|&t| cp.is_stable(t)),
    ))
}

/// `SM(φ)` for an arbitrary propositional formula.
pub fn formula_stable_models(phi: &Formula, alphabet: &Alphabet) -> Result<ModelSet> {
    enumeration_alphabet(alphabet, &phi.atoms())?;
    let cf = CFormula::compile(phi, alphabet)?;
    Ok(ModelSet::from_masks(
        alphabet,
        (0..=alphabet.full_mask()).filter(|&t| cf.is_stable(t)),
    ))
}

/// Whether a single interpretation is a stable model of `p`.
pub fn is_stable(p: &Program, t: &Interpretation) -> Result<bool> {
    let alphabet = Alphabet::new(p.atoms().into_iter().chain(t.iter().cloned()));
    alphabet.ensure_at_most(crate::model::MAX_MASK_ATOMS, "stability check")?;
    let cp = CProgram::compile(p, &alphabet)?;
    let mask = alphabet.mask_of(t.iter())?;
    Ok(cp.classical(mask) && !crate::search::has_smaller_model(&cp.rules, mask))
}

/// An HT-interpretation on which `φ` and `ψ` disagree, if any.
pub fn ht_difference(phi: &Formula, psi: &Formula, alphabet: &Alphabet) -> Result<Option<HtInterpretation>> {
    let mut atoms = phi.atoms();
    atoms.extend(psi.atoms());
    enumeration_alphabet(alphabet, &atoms)?;
    let (f, g) = (CFormula::compile(phi, alphabet)?, CFormula::compile(psi, alphabet)?);
    for t in 0..=alphabet.full_mask() {
        for h in std::iter::once(t).chain(proper_submasks(t)) {
            if f.ht(h, t) != g.ht(h, t) {
                let here = alphabet.interpretation(h).atoms().clone();
                let there = alphabet.interpretation(t).atoms().clone();
                return Ok(Some(HtInterpretation { here, there }));
            }
        }
    }
    Ok(None)
}

/// `φ ≡ ψ`: same HT-models over the alphabet.
pub fn ht_equivalent(phi: &Formula, psi: &Formula, alphabet: &Alphabet) -> Result<bool> {
    Ok(ht_difference(phi, psi, alphabet)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse_formula, parse_program};
    use crate::syntax::atoms;

    fn alpha(p: &Program) -> Alphabet {
        Alphabet::new(p.atoms())
    }

    #[test]
    fn classical_examples() {
        assert!(classical_sat(&atoms(["a"]), &parse_formula("a v b").unwrap()));
        let p1 = parse_program("a | b. a | c.").unwrap();
        assert!(classical_sat(&atoms(["a", "b", "c"]), &p1.to_formula()));
        assert!(!classical_sat(&atoms([]), &parse_formula("-b -> b").unwrap()));
    }

    #[test]
    fn ht_examples() {
        let i = HtInterpretation::new(atoms([]), atoms(["b"])).unwrap();
        assert!(!ht_sat(&i, &parse_formula("-b").unwrap()));
        let i = HtInterpretation::new(atoms(["a"]), atoms(["a", "b"])).unwrap();
        assert!(ht_sat(&i, &parse_formula("--b").unwrap()));
        let i = HtInterpretation::new(atoms([]), atoms(["p"])).unwrap();
        assert!(ht_sat(&i, &parse_formula("p -> p").unwrap()));
        assert!(HtInterpretation::new(atoms(["a"]), atoms([])).is_err());
    }

    #[test]
    fn classical_models_of_program_one() {
        let p1 = parse_program("a | b. a | c.").unwrap();
        let expected = ModelSet::of([
            vec!["a"],
            vec!["b", "c"],
            vec!["a", "b"],
            vec!["a", "c"],
            vec!["a", "b", "c"],
        ]);
        assert_eq!(classical_models(&p1, &alpha(&p1)).unwrap(), expected);
        let empty = Program::empty();
        let a = Alphabet::new([Atom::new("a")]);
        assert_eq!(classical_models(&empty, &a).unwrap(), ModelSet::of([vec![], vec!["a"]]));
        let contra = parse_program("a. :- a.").unwrap();
        assert!(classical_models(&contra, &alpha(&contra)).unwrap().is_empty());
    }

    #[test]
    fn stable_model_examples() {
        let p1 = parse_program("a | b. a | c.").unwrap();
        assert_eq!(
            stable_models(&p1, &alpha(&p1)).unwrap(),
            ModelSet::of([vec!["a"], vec!["b", "c"]])
        );
        let p5 = parse_program("a | b. a. b :- not b.").unwrap();
        assert!(stable_models(&p5, &alpha(&p5)).unwrap().is_empty());
        let p6 = parse_program("p :- p.").unwrap();
        assert_eq!(stable_models(&p6, &alpha(&p6)).unwrap(), ModelSet::of([Vec::<&str>::new()]));
    }

    #[test]
    fn extra_atoms_are_false_in_stable_models() {
        let p1 = parse_program("a | b. a | c.").unwrap();
        let wide = alpha(&p1).union([Atom::new("z")]);
        assert_eq!(
            stable_models(&p1, &wide).unwrap(),
            stable_models(&p1, &alpha(&p1)).unwrap()
        );
    }

    #[test]
    fn formula_and_program_agree() {
        let p = parse_program("a | b :- not c. c :- not not a. :- b, not a.").unwrap();
        let al = alpha(&p);
        assert_eq!(
            stable_models(&p, &al).unwrap(),
            formula_stable_models(&p.to_formula(), &al).unwrap()
        );
        assert_eq!(
            classical_models(&p, &al).unwrap(),
            formula_classical_models(&p.to_formula(), &al).unwrap()
        );
    }

    #[test]
    fn equivalence_examples() {
        let ab = Alphabet::new(atoms(["a", "b"]));
        let f = |s| parse_formula(s).unwrap();
        assert!(ht_equivalent(&f("-b -> b"), &f("--b"), &ab).unwrap());
        let w = ht_difference(&f("a"), &f("a v b"), &ab).unwrap().unwrap();
        assert!(!ht_sat(&w, &f("a")) && ht_sat(&w, &f("a v b")));
        assert!(ht_equivalent(&f("a & -b"), &f("a & -b"), &ab).unwrap());
        // excluded middle is not an HT tautology
        assert!(!ht_equivalent(&f("a v -a"), &Formula::top(), &ab).unwrap());
    }

    #[test]
    fn capacity_guard() {
        let atoms: Vec<Atom> = (0..21).map(|i| Atom::new(format!("a{i}"))).collect();
        let al = Alphabet::new(atoms);
        let err = classical_models(&Program::empty(), &al).unwrap_err();
        assert!(matches!(err, Error::Capacity { limit: 20, .. }));
    }

    #[test]
    fn alphabet_must_cover_program() {
        let p = parse_program("a :- b.").unwrap();
        let al = Alphabet::new([Atom::new("a")]);
        assert!(matches!(stable_models(&p, &al), Err(Error::AtomOutsideAlphabet(_))));
    }
}
