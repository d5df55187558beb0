//! Backtracking stable-model search for alphabets too large to enumerate.
//!
//! Candidates are built by branching on atoms with unit propagation over the
//! rules and over supportedness: in a stable model every true atom `p` has a
//! rule whose body holds and whose only true head atom is `p`. Each complete
//! candidate is then checked for minimality by a small DPLL search for a
//! proper subset satisfying the reduct.

use crate::compiled::{CProgram, CRule};
use crate::error::Result;
use crate::model::{Alphabet, Mask, ModelSet, MAX_MASK_ATOMS};
use crate::syntax::Program;

/// `SM(P)` by search; agrees with [`crate::ht::stable_models`].
pub fn stable_models_search(p: &Program, alphabet: &Alphabet) -> Result<ModelSet> {
    alphabet.ensure_at_most(MAX_MASK_ATOMS, "search")?;
    alphabet.ensure_covers(&p.atoms())?;
    let cp = CProgram::compile(p, alphabet)?;
    let mut out = Vec::new();
    let mut search = Search {
        rules: &cp.rules,
        all: alphabet.full_mask(),
        out: &mut out,
    };
    search.run(0, 0);
    Ok(ModelSet::from_masks(alphabet, out))
}

struct Search<'a> {
    rules: &'a [CRule],
    all: Mask,
    out: &'a mut Vec<Mask>,
}

enum Body {
    True,
    False,
    Open,
}

fn body_status(r: &CRule, tru: Mask, fal: Mask) -> Body {
    if r.pos & fal != 0 || r.neg & tru != 0 || r.negneg & fal != 0 {
        Body::False
    } else if r.pos & !tru == 0 && r.neg & !fal == 0 && r.negneg & !tru == 0 {
        Body::True
    } else {
        Body::Open
    }
}

impl Search<'_> {
    fn run(&mut self, tru: Mask, fal: Mask) {
        let Some((tru, fal)) = self.propagate(tru, fal) else {
            return;
        };
        let open = self.all & !tru & !fal;
        if open == 0 {
            if !has_smaller_model(self.rules, tru) {
                self.out.push(tru);
            }
            return;
        }
        let bit = open & open.wrapping_neg();
        self.run(tru | bit, fal);
        self.run(tru, fal | bit);
    }

    /// Unit propagation to a fixpoint; `None` on conflict.
    fn propagate(&self, mut tru: Mask, mut fal: Mask) -> Option<(Mask, Mask)> {
        loop {
            let (t0, f0) = (tru, fal);
            for r in self.rules {
                match body_status(r, tru, fal) {
                    Body::True => {
                        if r.head & tru == 0 {
                            let free = r.head & !fal;
                            match free.count_ones() {
                                0 => return None,
                                1 => tru |= free,
                                _ => {}
                            }
                        }
                    }
                    Body::Open if r.head & !fal == 0 => {
                        // the body must fail: force its last open literal
                        let pos = r.pos & !tru;
                        let neg = r.neg & !fal;
                        let nn = r.negneg & !tru;
                        if (pos | neg | nn).count_ones() == 1 {
                            if pos | nn != 0 {
                                fal |= pos | nn;
                            } else {
                                tru |= neg;
                            }
                        }
                    }
                    _ => {}
                }
            }
            // supportedness
            let mut cand = self.all & !fal;
            while cand != 0 {
                let bit = cand & cand.wrapping_neg();
                cand &= cand - 1;
                let mut supporters = self.rules.iter().filter(|r| {
                    r.head & bit != 0
                        && r.head & !bit & tru == 0
                        && !matches!(body_status(r, tru, fal), Body::False)
                });
                match (supporters.next(), supporters.next()) {
                    (None, _) => {
                        if tru & bit != 0 {
                            return None;
                        }
                        fal |= bit;
                    }
                    (Some(r), None) if tru & bit != 0 => {
                        tru |= r.pos | r.negneg;
                        fal |= r.neg | (r.head & !bit);
                    }
                    _ => {}
                }
            }
            if tru & fal != 0 {
                return None;
            }
            if (tru, fal) == (t0, f0) {
                return Some((tru, fal));
            }
        }
    }
}

/// Whether some `H ⊊ T` makes `⟨H,T⟩` a model of the rules.
pub(crate) fn has_smaller_model(rules: &[CRule], t: Mask) -> bool {
    // ⟨H,T⟩ ⊨ r with H ⊆ T reduces to the clause pos ⊆ H → head ∩ T ∩ H ≠ ∅
    // for rules whose negative part holds in T.
    let mut clauses: Vec<(Mask, Mask)> = rules
        .iter()
        .filter(|r| r.neg & t == 0 && r.negneg & !t == 0 && r.pos & !t == 0)
        .map(|r| (r.pos, r.head & t))
        .filter(|&(neg, pos)| neg & pos == 0)
        .collect();
    if clauses.iter().any(|&(neg, pos)| neg == 0 && pos == 0) {
        return false;
    }
    clauses.push((t, 0));
    dpll(&clauses, t, 0, 0)
}

/// Satisfiability of clauses `⋁¬neg ∨ ⋁pos` over `vars`, other atoms false.
fn dpll(clauses: &[(Mask, Mask)], vars: Mask, mut tru: Mask, mut fal: Mask) -> bool {
    loop {
        let mut changed = false;
        for &(neg, pos) in clauses {
            if neg & fal != 0 || pos & tru != 0 {
                continue;
            }
            let open_neg = neg & !tru;
            let open_pos = pos & !fal;
            match (open_neg | open_pos).count_ones() {
                0 => return false,
                1 => {
                    tru |= open_pos;
                    fal |= open_neg;
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    let open = vars & !tru & !fal;
    if open == 0 {
        return true;
    }
    let bit = open & open.wrapping_neg();
    dpll(clauses, vars, tru, fal | bit) || dpll(clauses, vars, tru | bit, fal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ht::stable_models;
    use crate::parser::parse_program;

    fn both(src: &str) -> (ModelSet, ModelSet) {
        let p = parse_program(src).unwrap();
        let al = Alphabet::new(p.atoms());
        (stable_models_search(&p, &al).unwrap(), stable_models(&p, &al).unwrap())
    }

    #[test]
    fn agrees_on_examples() {
        for src in [
            "a | b. a | c.",
            "a | b. a. b :- not b.",
            "p :- p.",
            "p :- p. p.",
            "d | a :- a. a.",
            "p. :- c. a | b. b | a :- p.",
            "a :- not b. b :- not a.",
            "a :- not not a.",
            "a | b :- not c. c :- not not a. :- b, not a.",
            "a :- b. b :- a. a | b.",
            ":- .",
            "",
        ] {
            let (s, b) = both(src);
            assert_eq!(s, b, "{src}");
        }
    }

    #[test]
    fn large_alphabet() {
        // 24 atoms, beyond brute-force range
        let src: String = (0..12).map(|i| format!("x{i} :- not y{i}. y{i} :- not x{i}. :- x{i}, y{i}.\n")).collect();
        let mut src = src;
        src.push_str("x0.");
        let p = parse_program(&src).unwrap();
        let al = Alphabet::new(p.atoms());
        assert_eq!(stable_models_search(&p, &al).unwrap().len(), 1 << 11);
    }

    #[test]
    fn smaller_model_check() {
        let p = parse_program("a | b. a :- b.").unwrap();
        let al = Alphabet::new(p.atoms());
        let cp = CProgram::compile(&p, &al).unwrap();
        assert!(!has_smaller_model(&cp.rules, 0b01));
        assert!(has_smaller_model(&cp.rules, 0b11));
    }
}
