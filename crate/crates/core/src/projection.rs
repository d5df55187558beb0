//! Projection onto a sub-vocabulary `V`: supports restricted to `V`,
//! `V`-feasibility, projected denotations and projected stable models.

use std::collections::BTreeSet;

use crate::denotation::{minimize, Base, CFork, TSupport, TView, MAX_SUPPORT_BASE};
use crate::error::{Error, Result};
use crate::model::{Alphabet, Interpretation, Mask, ModelSet};
use crate::syntax::{Atom, Fork};

/// `H_V = {H ∩ V | H ∈ H}`, a `(T ∩ V)`-support.
pub fn restrict_support(h: &TSupport, v: &BTreeSet<Atom>) -> TSupport {
    let base = h.base().restrict(v);
    TSupport::new(&base, h.members().iter().map(|m| m.restrict(v)))
        .expect("restriction of a support is a support")
}

/// No `H ⊂ T` in the support agrees with `T` on `V`.
pub fn is_v_feasible(h: &TSupport, v: &BTreeSet<Atom>) -> bool {
    let t = h.base();
    let tv = t.restrict(v);
    !h.members().iter().any(|m| m != t && m.restrict(v) == tv)
}

/// `⟦F⟧^T_V`: the closure of the restrictions of `V`-feasible supports of
/// `⟦F⟧^Z`, over every `Z ⊆ alphabet` with `Z ∩ V = T`.
///
/// Feasibility is inherited by subsets and restriction is monotone, so only
/// the minimal supports of each `⟦F⟧^Z` need to be visited.
pub fn projected_denotation(
    f: &Fork,
    t: &Interpretation,
    v: &BTreeSet<Atom>,
    alphabet: &Alphabet,
) -> Result<TView> {
    if !t.atoms().is_subset(v) {
        return Err(Error::InvalidSupport(format!("{t} is not inside the vocabulary")));
    }
    alphabet.ensure_at_most(MAX_SUPPORT_BASE, "projection alphabet")?;
    alphabet.ensure_covers(v.iter().chain(f.atoms().iter()))?;
    let cf = CFork::compile(f, alphabet)?;
    let t_mask = alphabet.mask_of(t.iter())?;
    let v_mask = alphabet.mask_of(v.iter())?;
    let outside = alphabet.full_mask() & !v_mask;
    let tv_alphabet = Alphabet::new(t.iter().cloned());
    let mut gathered = Vec::new();
    for w in std::iter::once(outside).chain(crate::model::proper_submasks(outside)) {
        let z_mask: Mask = t_mask | w;
        let z = alphabet.interpretation(z_mask);
        let base = Base::new(z_mask, alphabet.len());
        for fam in base.fork(&cf) {
            let h = TView::from_minimal(&z, vec![fam]).minimal_supports().remove(0);
            if is_v_feasible(&h, v) {
                let r = restrict_support(&h, v);
                gathered.push(family_of(&r, &tv_alphabet)?);
            }
        }
    }
    Ok(TView::from_minimal(t, minimize(gathered)))
}

fn family_of(h: &TSupport, alphabet: &Alphabet) -> Result<crate::denotation::Family> {
    let mut fam = crate::denotation::Family::EMPTY;
    for m in h.members() {
        fam.insert(alphabet.mask_of(m.iter())? as usize);
    }
    Ok(fam)
}

/// `SM(φ)|V = {T ∩ V | T ∈ SM(φ)}`.
pub fn project_sm(models: &ModelSet, v: &BTreeSet<Atom>) -> ModelSet {
    models.project(v)
}
