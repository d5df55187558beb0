//! Alphabets, interpretations and sorted model sets.
//!
//! Enumeration works on bitmasks relative to an [`Alphabet`]; everything that
//! leaves the crate is converted back to atom sets.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::syntax::Atom;

pub type Mask = u64;

/// Largest alphabet the brute-force enumerators accept.
pub const MAX_ENUM_ATOMS: usize = 20;
/// Hard limit of the mask representation.
pub const MAX_MASK_ATOMS: usize = 63;

/// A finite, sorted set of atoms with a stable index per atom.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Alphabet {
    atoms: Vec<Atom>,
    index: HashMap<Atom, usize>,
}

impl Alphabet {
    pub fn new(atoms: impl IntoIterator<Item = Atom>) -> Self {
        let set: BTreeSet<Atom> = atoms.into_iter().collect();
        let atoms: Vec<Atom> = set.into_iter().collect();
        let index = atoms.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
        Alphabet { atoms, index }
    }

    pub fn union(&self, extra: impl IntoIterator<Item = Atom>) -> Self {
        Alphabet::new(self.atoms.iter().cloned().chain(extra))
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn atom_set(&self) -> BTreeSet<Atom> {
        self.atoms.iter().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn index_of(&self, a: &Atom) -> Option<usize> {
        self.index.get(a).copied()
    }

    pub fn contains(&self, a: &Atom) -> bool {
        self.index.contains_key(a)
    }

    pub(crate) fn bit(&self, a: &Atom) -> Result<Mask> {
        self.index_of(a)
            .map(|i| 1 << i)
            .ok_or_else(|| Error::AtomOutsideAlphabet(a.to_string()))
    }

    pub(crate) fn mask_of<'a>(&self, atoms: impl IntoIterator<Item = &'a Atom>) -> Result<Mask> {
        atoms.into_iter().try_fold(0, |m, a| Ok(m | self.bit(a)?))
    }

    pub(crate) fn interpretation(&self, mask: Mask) -> Interpretation {
        Interpretation(
            self.atoms
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, a)| a.clone())
                .collect(),
        )
    }

    pub(crate) fn full_mask(&self) -> Mask {
        if self.atoms.len() >= 64 {
            Mask::MAX
        } else {
            (1u64 << self.atoms.len()) - 1
        }
    }

    pub fn ensure_at_most(&self, limit: usize, what: &'static str) -> Result<()> {
        if self.len() > limit {
            Err(Error::Capacity {
                what,
                size: self.len(),
                limit,
            })
        } else {
            Ok(())
        }
    }

    /// Errors unless every given atom belongs to the alphabet.
    pub fn ensure_covers<'a>(&self, atoms: impl IntoIterator<Item = &'a Atom>) -> Result<()> {
        self.mask_of(atoms).map(|_| ())
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.atoms.iter().map(Atom::name).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// A classical interpretation: the set of true atoms.
///
/// Ordered by cardinality, then lexicographically on the sorted atom list.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Interpretation(BTreeSet<Atom>);

impl Interpretation {
    pub fn new(atoms: impl IntoIterator<Item = Atom>) -> Self {
        Interpretation(atoms.into_iter().collect())
    }

    pub fn of<'a>(names: impl IntoIterator<Item = &'a str>) -> Self {
        Interpretation(names.into_iter().map(Atom::new).collect())
    }

    pub fn empty() -> Self {
        Interpretation::default()
    }

    pub fn atoms(&self) -> &BTreeSet<Atom> {
        &self.0
    }

    pub fn contains(&self, a: &Atom) -> bool {
        self.0.contains(a)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &Interpretation) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Atom> {
        self.0.iter()
    }

    /// `T ∩ V`.
    pub fn restrict(&self, vocabulary: &BTreeSet<Atom>) -> Interpretation {
        Interpretation(self.0.intersection(vocabulary).cloned().collect())
    }
}

impl From<BTreeSet<Atom>> for Interpretation {
    fn from(s: BTreeSet<Atom>) -> Self {
        Interpretation(s)
    }
}

impl Ord for Interpretation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().cmp(other.0.iter()))
    }
}

impl PartialOrd for Interpretation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(Atom::name).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

impl fmt::Debug for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A sorted set of interpretations.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ModelSet(BTreeSet<Interpretation>);

impl ModelSet {
    pub fn new() -> Self {
        ModelSet::default()
    }

    /// Builds a model set from lists of atom names.
    pub fn of<'a, I>(models: impl IntoIterator<Item = I>) -> Self
    where
        I: IntoIterator<Item = &'a str>,
    {
        models.into_iter().map(Interpretation::of).collect()
    }

    pub(crate) fn from_masks(alphabet: &Alphabet, masks: impl IntoIterator<Item = Mask>) -> Self {
        masks.into_iter().map(|m| alphabet.interpretation(m)).collect()
    }

    pub fn insert(&mut self, i: Interpretation) -> bool {
        self.0.insert(i)
    }

    pub fn contains(&self, i: &Interpretation) -> bool {
        self.0.contains(i)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Interpretation> {
        self.0.iter()
    }

    pub fn is_subset(&self, other: &ModelSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &ModelSet) -> ModelSet {
        ModelSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn difference(&self, other: &ModelSet) -> ModelSet {
        ModelSet(self.0.difference(&other.0).cloned().collect())
    }

    /// `{T ∩ V | T ∈ S}`.
    pub fn project(&self, vocabulary: &BTreeSet<Atom>) -> ModelSet {
        self.0.iter().map(|t| t.restrict(vocabulary)).collect()
    }

    /// The ⊆-minimal members.
    pub fn minimal(&self) -> ModelSet {
        minimal_elements(self)
    }
}

/// The ⊆-minimal members of a set of interpretations.
pub fn minimal_elements(set: &ModelSet) -> ModelSet {
    set.iter()
        .filter(|m| !set.iter().any(|o| o != *m && o.is_subset(m)))
        .cloned()
        .collect()
}

impl FromIterator<Interpretation> for ModelSet {
    fn from_iter<I: IntoIterator<Item = Interpretation>>(iter: I) -> Self {
        ModelSet(iter.into_iter().collect())
    }
}

impl IntoIterator for ModelSet {
    type Item = Interpretation;
    type IntoIter = std::collections::btree_set::IntoIter<Interpretation>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a ModelSet {
    type Item = &'a Interpretation;
    type IntoIter = std::collections::btree_set::Iter<'a, Interpretation>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for ModelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", items.join(" "))
    }
}

impl fmt::Debug for ModelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Iterates the proper submasks of `m`, largest first.
pub(crate) fn proper_submasks(m: Mask) -> impl Iterator<Item = Mask> {
    let mut next = if m == 0 { None } else { Some((m - 1) & m) };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & m) };
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_cardinality_then_lexicographic() {
        let s = ModelSet::of([vec!["b", "c"], vec!["a"], vec!["a", "c"], vec![], vec!["a", "b"]]);
        let rendered: Vec<String> = s.iter().map(|i| i.to_string()).collect();
        assert_eq!(rendered, ["{}", "{a}", "{a,b}", "{a,c}", "{b,c}"]);
    }

    #[test]
    fn minimal_members() {
        let s = ModelSet::of([vec!["a"], vec!["b", "c"], vec!["a", "b"], vec!["a", "c"], vec!["a", "b", "c"]]);
        assert_eq!(s.minimal(), ModelSet::of([vec!["a"], vec!["b", "c"]]));
        let single = ModelSet::of([vec!["x"]]);
        assert_eq!(minimal_elements(&single), single);
    }

    #[test]
    fn masks_round_trip() {
        let alpha = Alphabet::new(["c", "a", "b"].map(Atom::new));
        assert_eq!(alpha.atoms().iter().map(Atom::name).collect::<Vec<_>>(), ["a", "b", "c"]);
        let i = Interpretation::of(["a", "c"]);
        let m = alpha.mask_of(i.iter()).unwrap();
        assert_eq!(m, 0b101);
        assert_eq!(alpha.interpretation(m), i);
        assert!(alpha.mask_of([&Atom::new("z")]).is_err());
    }

    #[test]
    fn submasks() {
        let subs: Vec<Mask> = proper_submasks(0b101).collect();
        assert_eq!(subs, vec![0b100, 0b001, 0]);
        assert_eq!(proper_submasks(0).count(), 0);
    }

    #[test]
    fn json_shape() {
        let s = ModelSet::of([vec!["a"], vec!["b", "c"]]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"[["a"],["b","c"]]"#);
        let back: ModelSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}
