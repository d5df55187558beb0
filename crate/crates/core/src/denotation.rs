//! Denotational semantics of forks.
//!
//! A `T`-support is a family of subsets of `T`; it is stored as a bitset
//! indexed by the subsets of `T` (so `|T| ≤ 8`). A `T`-view is an up-set of
//! nonempty supports under `⊆`, stored as the antichain of its minimal members:
//! `ideal(H)` is exactly the set of supersets of `H`, so the antichain is a
//! canonical form and view equality/inclusion remain exact.

use std::cmp::Ordering;
use std::fmt;

use crate::compiled::CFormula;
use crate::error::{Error, Result};
use crate::model::{Alphabet, Interpretation, Mask, ModelSet};
use crate::syntax::{Atom, Fork, Formula};

/// Largest `T` a support can be built over.
pub const MAX_SUPPORT_BASE: usize = 8;
/// Largest `T` for which all supports, or all members of a view, are listed.
pub const MAX_EXPLICIT_BASE: usize = 4;

/// A set of subsets of a `≤ 8`-element base, indexed by local subset masks.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub(crate) struct Family([u64; 4]);

impl Family {
    pub const EMPTY: Family = Family([0; 4]);

    /// All subsets of a `k`-element base.
    pub fn full(k: usize) -> Family {
        let n = 1usize << k;
        let mut f = Family::EMPTY;
        for w in 0..4 {
            let lo = w * 64;
            if n >= lo + 64 {
                f.0[w] = u64::MAX;
            } else if n > lo {
                f.0[w] = (1u64 << (n - lo)) - 1;
            }
        }
        f
    }

    pub fn single(j: usize) -> Family {
        let mut f = Family::EMPTY;
        f.insert(j);
        f
    }

    #[inline]
    pub fn contains(&self, j: usize) -> bool {
        self.0[j >> 6] >> (j & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, j: usize) {
        self.0[j >> 6] |= 1 << (j & 63);
    }

    #[inline]
    pub fn union(self, o: Family) -> Family {
        Family(std::array::from_fn(|i| self.0[i] | o.0[i]))
    }

    #[inline]
    pub fn inter(self, o: Family) -> Family {
        Family(std::array::from_fn(|i| self.0[i] & o.0[i]))
    }

    #[inline]
    pub fn minus(self, o: Family) -> Family {
        Family(std::array::from_fn(|i| self.0[i] & !o.0[i]))
    }

    #[inline]
    pub fn is_subset(&self, o: &Family) -> bool {
        (0..4).all(|i| self.0[i] & !o.0[i] == 0)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..256).filter(move |&j| self.contains(j))
    }
}

/// The complement of a support over a `k`-element base.
pub(crate) fn complement_family(h: Family, k: usize) -> Family {
    let full = Family::full(k);
    if h == full {
        Family::EMPTY
    } else {
        full.minus(h).union(Family::single((1 << k) - 1))
    }
}

/// Minimal members of a set of families, sorted.
pub(crate) fn minimize(mut fams: Vec<Family>) -> Vec<Family> {
    fams.sort_by_key(|f| (f.count(), *f));
    fams.dedup();
    let mut out: Vec<Family> = Vec::with_capacity(fams.len());
    for f in fams {
        if !out.iter().any(|m| m.is_subset(&f)) {
            out.push(f);
        }
    }
    out.sort();
    out
}

/// Whether the up-set generated by `small` includes the one generated by `big`.
pub(crate) fn upset_includes(small: &[Family], big: &[Family]) -> bool {
    big.iter().all(|h| small.iter().any(|m| m.is_subset(h)))
}

/// Local indexing of the subsets of a fixed `T` inside a global alphabet.
pub(crate) struct Base {
    k: usize,
    t: Mask,
    /// Global mask of every local subset index.
    global: Vec<Mask>,
    /// Local bit of every global atom index, when it belongs to `T`.
    local_bit: Vec<Option<usize>>,
}

impl Base {
    pub fn new(t: Mask, width: usize) -> Base {
        let positions: Vec<usize> = (0..width).filter(|i| t >> i & 1 == 1).collect();
        let k = positions.len();
        let global = (0..1usize << k)
            .map(|j| {
                positions
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| j >> b & 1 == 1)
                    .fold(0, |m, (_, &p)| m | 1 << p)
            })
            .collect();
        let mut local_bit = vec![None; width];
        for (b, &p) in positions.iter().enumerate() {
            local_bit[p] = Some(b);
        }
        Base {
            k,
            t,
            global,
            local_bit,
        }
    }

    pub fn top(&self) -> usize {
        (1 << self.k) - 1
    }

    pub fn full(&self) -> Family {
        Family::full(self.k)
    }

    /// `⟦φ⟧^T`.
    pub fn support(&self, phi: &CFormula) -> Family {
        let mut f = Family::EMPTY;
        if !phi.classical(self.t) {
            return f;
        }
        for (j, &h) in self.global.iter().enumerate() {
            if phi.ht(h, self.t) {
                f.insert(j);
            }
        }
        f
    }

    fn atom_support(&self, bit: Mask) -> Family {
        let idx = bit.trailing_zeros() as usize;
        match self.local_bit.get(idx).copied().flatten() {
            None => Family::EMPTY,
            Some(b) => {
                let mut f = Family::EMPTY;
                for j in 0..1usize << self.k {
                    if j >> b & 1 == 1 {
                        f.insert(j);
                    }
                }
                f
            }
        }
    }

    fn ideal(f: Family) -> Vec<Family> {
        if f.is_empty() {
            Vec::new()
        } else {
            vec![f]
        }
    }

    fn and(l: &[Family], r: &[Family]) -> Vec<Family> {
        minimize(l.iter().flat_map(|a| r.iter().map(move |b| a.inter(*b))).collect())
    }

    /// The `∨` clause with hat-membership: an empty view contributes `[ ]`.
    fn or(l: &[Family], r: &[Family]) -> Vec<Family> {
        const HAT: [Family; 1] = [Family::EMPTY];
        let l = if l.is_empty() { &HAT[..] } else { l };
        let r = if r.is_empty() { &HAT[..] } else { r };
        minimize(
            l.iter()
                .flat_map(|a| r.iter().map(move |b| a.union(*b)))
                .filter(|f| !f.is_empty())
                .collect(),
        )
    }

    fn implies(&self, antecedent: &CFormula, consequent: Vec<Family>) -> Vec<Family> {
        let supp = self.support(antecedent);
        if supp.is_empty() {
            return vec![self.full()];
        }
        let comp = complement_family(supp, self.k);
        minimize(consequent.into_iter().map(|h| comp.union(h)).collect())
    }

    /// Clause-by-clause denotation of a formula.
    pub fn formula(&self, phi: &CFormula) -> Vec<Family> {
        match phi {
            CFormula::Bot => Vec::new(),
            CFormula::Atom(b) => Base::ideal(self.atom_support(*b)),
            CFormula::And(l, r) => Base::and(&self.formula(l), &self.formula(r)),
            CFormula::Or(l, r) => Base::or(&self.formula(l), &self.formula(r)),
            CFormula::Implies(l, r) => self.implies(l, self.formula(r)),
        }
    }

    pub fn fork(&self, f: &CFork) -> Vec<Family> {
        match f {
            CFork::Formula(phi) => self.formula(phi),
            CFork::Split(l, r) => {
                let mut v = self.fork(l);
                v.extend(self.fork(r));
                minimize(v)
            }
            CFork::And(l, r) => Base::and(&self.fork(l), &self.fork(r)),
            CFork::Implies(l, r) => self.implies(l, self.fork(r)),
        }
    }

    pub fn is_stable_view(&self, view: &[Family]) -> bool {
        let top = Family::single(self.top());
        view.contains(&top)
    }
}

/// Forks with formula-shaped subterms compiled to masks.
#[derive(Clone, Debug)]
pub(crate) enum CFork {
    Formula(CFormula),
    Split(Box<CFork>, Box<CFork>),
    And(Box<CFork>, Box<CFork>),
    Implies(CFormula, Box<CFork>),
}

impl CFork {
    pub fn compile(f: &Fork, alphabet: &Alphabet) -> Result<CFork> {
        if let Some(phi) = f.as_formula() {
            return Ok(CFork::Formula(CFormula::compile(&phi, alphabet)?));
        }
        Ok(match f {
            Fork::Split(l, r) => CFork::Split(
                Box::new(CFork::compile(l, alphabet)?),
                Box::new(CFork::compile(r, alphabet)?),
            ),
            Fork::And(l, r) => CFork::And(
                Box::new(CFork::compile(l, alphabet)?),
                Box::new(CFork::compile(r, alphabet)?),
            ),
            Fork::Implies(l, r) => CFork::Implies(
                CFormula::compile(l, alphabet)?,
                Box::new(CFork::compile(r, alphabet)?),
            ),
            Fork::Bot | Fork::Atom(_) | Fork::Or(..) => unreachable!("formula-shaped fork"),
        })
    }
}

/// A `T`-support: a set of subsets of `T` that contains `T` unless empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TSupport {
    base: Interpretation,
    members: Family,
}

fn base_alphabet(base: &Interpretation) -> Result<Alphabet> {
    let alphabet = Alphabet::new(base.iter().cloned());
    alphabet.ensure_at_most(MAX_SUPPORT_BASE, "support base")?;
    Ok(alphabet)
}

impl TSupport {
    pub fn new(base: &Interpretation, members: impl IntoIterator<Item = Interpretation>) -> Result<TSupport> {
        let alphabet = base_alphabet(base)?;
        let mut fam = Family::EMPTY;
        for m in members {
            if !m.is_subset(base) {
                return Err(Error::InvalidSupport(format!("{m} is not a subset of {base}")));
            }
            fam.insert(alphabet.mask_of(m.iter())? as usize);
        }
        if !fam.is_empty() && !fam.contains((1 << base.len()) - 1) {
            return Err(Error::InvalidSupport(format!("nonempty support over {base} must contain it")));
        }
        Ok(TSupport {
            base: base.clone(),
            members: fam,
        })
    }

    /// `[ ]`.
    pub fn empty(base: &Interpretation) -> Result<TSupport> {
        TSupport::new(base, [])
    }

    /// `2^T`.
    pub fn full(base: &Interpretation) -> Result<TSupport> {
        base_alphabet(base)?;
        Ok(TSupport {
            base: base.clone(),
            members: Family::full(base.len()),
        })
    }

    /// `[T]`.
    pub fn top(base: &Interpretation) -> Result<TSupport> {
        TSupport::new(base, [base.clone()])
    }

    pub(crate) fn from_family(base: &Interpretation, members: Family) -> TSupport {
        TSupport {
            base: base.clone(),
            members,
        }
    }

    pub fn base(&self) -> &Interpretation {
        &self.base
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn len(&self) -> usize {
        self.members.count() as usize
    }

    pub fn contains(&self, h: &Interpretation) -> bool {
        let alphabet = Alphabet::new(self.base.iter().cloned());
        match alphabet.mask_of(h.iter()) {
            Ok(m) => self.members.contains(m as usize),
            Err(_) => false,
        }
    }

    /// Members, largest first, then in atom order.
    pub fn members(&self) -> Vec<Interpretation> {
        let alphabet = Alphabet::new(self.base.iter().cloned());
        let mut out: Vec<Interpretation> = self
            .members
            .iter()
            .map(|j| alphabet.interpretation(j as Mask))
            .collect();
        out.sort_by(|a, b| match b.len().cmp(&a.len()) {
            Ordering::Equal => a.cmp(b),
            o => o,
        });
        out
    }

    pub fn is_subset(&self, other: &TSupport) -> Result<bool> {
        same_base(&self.base, &other.base)?;
        Ok(self.members.is_subset(&other.members))
    }
}

fn same_base(l: &Interpretation, r: &Interpretation) -> Result<()> {
    if l == r {
        Ok(())
    } else {
        Err(Error::BaseMismatch {
            left: l.to_string(),
            right: r.to_string(),
        })
    }
}

impl fmt::Display for TSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("[ ]");
        }
        let items: Vec<String> = self
            .members()
            .iter()
            .map(|m| if m.is_empty() { "∅".to_string() } else { m.to_string() })
            .collect();
        write!(f, "[{}]", items.join(" "))
    }
}

impl fmt::Debug for TSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A `T`-view, kept as the antichain of its `⊆`-minimal supports.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TView {
    base: Interpretation,
    mins: Vec<Family>,
}

impl TView {
    pub(crate) fn from_minimal(base: &Interpretation, mins: Vec<Family>) -> TView {
        TView {
            base: base.clone(),
            mins,
        }
    }

    pub fn base(&self) -> &Interpretation {
        &self.base
    }

    pub fn is_empty(&self) -> bool {
        self.mins.is_empty()
    }

    /// The supports that generate the view.
    pub fn minimal_supports(&self) -> Vec<TSupport> {
        self.mins.iter().map(|m| TSupport::from_family(&self.base, *m)).collect()
    }

    pub fn contains(&self, h: &TSupport) -> bool {
        h.base == self.base && !h.is_empty() && self.mins.iter().any(|m| m.is_subset(&h.members))
    }

    /// `[T] ∈ Δ`.
    pub fn contains_top(&self) -> bool {
        let top = Family::single((1 << self.base.len()) - 1);
        self.mins.contains(&top)
    }

    pub fn is_subset(&self, other: &TView) -> Result<bool> {
        same_base(&self.base, &other.base)?;
        Ok(upset_includes(&other.mins, &self.mins))
    }

    /// A support of `self` outside `other`, if any.
    pub fn difference_witness(&self, other: &TView) -> Result<Option<TSupport>> {
        same_base(&self.base, &other.base)?;
        Ok(self
            .mins
            .iter()
            .find(|h| !other.mins.iter().any(|m| m.is_subset(h)))
            .map(|h| TSupport::from_family(&self.base, *h)))
    }

    /// Every member of the view; only for small bases.
    pub fn supports(&self) -> Result<Vec<TSupport>> {
        Ok(explicit_supports(&self.base)?
            .into_iter()
            .filter(|h| self.contains(h))
            .collect())
    }
}

impl fmt::Display for TView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mins.is_empty() {
            return f.write_str("∅");
        }
        let items: Vec<String> = self
            .minimal_supports()
            .iter()
            .map(|h| format!("↓{h}"))
            .collect();
        f.write_str(&items.join(" ∪ "))
    }
}

impl fmt::Debug for TView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All `T`-supports, `[ ]` first.
pub fn explicit_supports(base: &Interpretation) -> Result<Vec<TSupport>> {
    Alphabet::new(base.iter().cloned()).ensure_at_most(MAX_EXPLICIT_BASE, "explicit supports")?;
    let k = base.len();
    let top = (1usize << k) - 1;
    let mut out = vec![TSupport::from_family(base, Family::EMPTY)];
    for rest in 0u64..1 << top {
        let mut fam = Family::single(top);
        for j in 0..top {
            if rest >> j & 1 == 1 {
                fam.insert(j);
            }
        }
        out.push(TSupport::from_family(base, fam));
    }
    Ok(out)
}

fn compile_base(t: &Interpretation, atoms: impl IntoIterator<Item = Atom>) -> Result<(Alphabet, Base)> {
    let alphabet = Alphabet::new(t.iter().cloned().chain(atoms));
    alphabet.ensure_at_most(crate::model::MAX_MASK_ATOMS, "formula alphabet")?;
    if t.len() > MAX_SUPPORT_BASE {
        return Err(Error::Capacity {
            what: "support base",
            size: t.len(),
            limit: MAX_SUPPORT_BASE,
        });
    }
    let base = Base::new(alphabet.mask_of(t.iter())?, alphabet.len());
    Ok((alphabet, base))
}

/// `⟦φ⟧^T = {H ⊆ T | ⟨H,T⟩ ⊨ φ}`.
pub fn support_of_formula(phi: &Formula, t: &Interpretation) -> Result<TSupport> {
    let (alphabet, base) = compile_base(t, phi.atoms())?;
    let cf = CFormula::compile(phi, &alphabet)?;
    Ok(TSupport::from_family(t, base.support(&cf)))
}

/// `H ≼ H'` iff `H = [ ]` or `[ ] ≠ H' ⊆ H`.
pub fn preceq(h: &TSupport, h2: &TSupport) -> Result<bool> {
    same_base(&h.base, &h2.base)?;
    Ok(h.is_empty() || (!h2.is_empty() && h2.members.is_subset(&h.members)))
}

pub fn complement(h: &TSupport) -> TSupport {
    TSupport::from_family(&h.base, complement_family(h.members, h.base.len()))
}

/// `↓H`: every nonempty `H' ≼ H`.
pub fn ideal(h: &TSupport) -> TView {
    TView::from_minimal(&h.base, Base::ideal(h.members))
}

/// The `≼`-closure of a set of supports over `base`.
pub fn closure(base: &Interpretation, supports: &[TSupport]) -> Result<TView> {
    for h in supports {
        same_base(base, &h.base)?;
    }
    let fams = supports.iter().map(|h| h.members).filter(|f| !f.is_empty()).collect();
    Ok(TView::from_minimal(base, minimize(fams)))
}

/// `⟦F⟧^T`, clause by clause.
pub fn denotation(f: &Fork, t: &Interpretation) -> Result<TView> {
    let (alphabet, base) = compile_base(t, f.atoms())?;
    let cf = CFork::compile(f, &alphabet)?;
    Ok(TView::from_minimal(t, base.fork(&cf)))
}

fn fork_alphabet(alphabet: &Alphabet, atoms: &std::collections::BTreeSet<Atom>) -> Result<()> {
    alphabet.ensure_at_most(MAX_SUPPORT_BASE, "fork alphabet")?;
    alphabet.ensure_covers(atoms)
}

/// `SM(F)`: every `T` with `[T] ∈ ⟦F⟧^T`.
pub fn fork_stable_models(f: &Fork, alphabet: &Alphabet) -> Result<ModelSet> {
    fork_alphabet(alphabet, &f.atoms())?;
    let cf = CFork::compile(f, alphabet)?;
    Ok(ModelSet::from_masks(
        alphabet,
        (0..=alphabet.full_mask()).filter(|&t| {
            let base = Base::new(t, alphabet.len());
            base.is_stable_view(&base.fork(&cf))
        }),
    ))
}

/// A failed strong entailment: `support ∈ ⟦F⟧^T \ ⟦G⟧^T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntailmentWitness {
    pub there: Interpretation,
    pub support: TSupport,
}

/// `F` strongly entails `G` over the alphabet: `⟦F⟧^T ⊆ ⟦G⟧^T` for every `T`.
/// Returns the first counterexample in model order.
pub fn strong_entailment_witness(
    f: &Fork,
    g: &Fork,
    alphabet: &Alphabet,
) -> Result<Option<EntailmentWitness>> {
    let mut atoms = f.atoms();
    atoms.extend(g.atoms());
    fork_alphabet(alphabet, &atoms)?;
    let (cf, cg) = (CFork::compile(f, alphabet)?, CFork::compile(g, alphabet)?);
    let mut ts: Vec<Mask> = (0..=alphabet.full_mask()).collect();
    ts.sort_by_key(|&t| alphabet.interpretation(t));
    for t in ts {
        let base = Base::new(t, alphabet.len());
        let (df, dg) = (base.fork(&cf), base.fork(&cg));
        if let Some(h) = df.iter().find(|h| !dg.iter().any(|m| m.is_subset(h))) {
            let there = alphabet.interpretation(t);
            let support = TSupport::from_family(&there, *h);
            return Ok(Some(EntailmentWitness { there, support }));
        }
    }
    Ok(None)
}

pub fn strongly_entails(f: &Fork, g: &Fork, alphabet: &Alphabet) -> Result<bool> {
    Ok(strong_entailment_witness(f, g, alphabet)?.is_none())
}

pub fn strongly_equivalent(f: &Fork, g: &Fork, alphabet: &Alphabet) -> Result<bool> {
    Ok(strongly_entails(f, g, alphabet)? && strongly_entails(g, f, alphabet)?)
}
