//! Support graphs and explanations of labelled programs: graph-based
//! supported models (SPM), justified models (JM), the AD notion of support,
//! and node forgetting.
//!
//! Unlabelled rules take the labels of [`Program::effective_labels`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::compiled::{CProgram, CRule};
use crate::error::{Error, Result};
use crate::model::{Alphabet, Interpretation, Mask, ModelSet, MAX_ENUM_ATOMS};
use crate::syntax::{Atom, Program};

/// A labelled directed graph `⟨I, E, λ⟩` over the atoms of an interpretation.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Explanation {
    model: Interpretation,
    labels: BTreeMap<Atom, String>,
    edges: BTreeSet<(Atom, Atom)>,
}

impl Explanation {
    pub fn new(
        model: Interpretation,
        labels: impl IntoIterator<Item = (Atom, String)>,
        edges: impl IntoIterator<Item = (Atom, Atom)>,
    ) -> Self {
        Explanation {
            model,
            labels: labels.into_iter().collect(),
            edges: edges.into_iter().collect(),
        }
    }

    /// The graph determined by a labelling: edges `q → p` for `q ∈ b+(λ(p))`.
    pub fn from_labelling<'a>(
        p: &Program,
        model: &Interpretation,
        labels: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let by_label = rules_by_label(p);
        let mut lab = BTreeMap::new();
        let mut edges = BTreeSet::new();
        for (atom, label) in labels {
            let r = by_label
                .get(label)
                .ok_or_else(|| Error::InvalidSupport(format!("unknown label {label}")))?;
            let a = Atom::new(atom);
            for q in p.rules()[*r].pos() {
                edges.insert((q.clone(), a.clone()));
            }
            lab.insert(a, label.to_string());
        }
        Ok(Explanation {
            model: model.clone(),
            labels: lab,
            edges,
        })
    }

    pub fn model(&self) -> &Interpretation {
        &self.model
    }

    pub fn labels(&self) -> &BTreeMap<Atom, String> {
        &self.labels
    }

    pub fn label_of(&self, a: &Atom) -> Option<&str> {
        self.labels.get(a).map(String::as_str)
    }

    pub fn edges(&self) -> &BTreeSet<(Atom, Atom)> {
        &self.edges
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm over the vertices
        let mut indeg: BTreeMap<&Atom, usize> = self.model.iter().map(|a| (a, 0)).collect();
        for (_, to) in &self.edges {
            *indeg.entry(to).or_default() += 1;
        }
        let mut ready: Vec<&Atom> = indeg.iter().filter(|(_, d)| **d == 0).map(|(a, _)| *a).collect();
        let mut seen = 0;
        while let Some(a) = ready.pop() {
            seen += 1;
            for (from, to) in &self.edges {
                if from == a {
                    let d = indeg.get_mut(to).expect("edge target");
                    *d -= 1;
                    if *d == 0 {
                        ready.push(to);
                    }
                }
            }
        }
        seen == indeg.len()
    }

    /// Graphviz rendering: one node per atom annotated with its label.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph \"{}\" {{\n", name.replace('"', "\\\""));
        for a in self.model.iter() {
            match self.labels.get(a) {
                Some(l) => out.push_str(&format!("  \"{a}\" [label=\"{a}\\n{l}\"];\n")),
                None => out.push_str(&format!("  \"{a}\";\n")),
            }
        }
        for (from, to) in &self.edges {
            out.push_str(&format!("  \"{from}\" -> \"{to}\";\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for Explanation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.labels.iter().map(|(a, l)| format!("{a} ↦ {l}")).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

impl fmt::Debug for Explanation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")?;
        if !self.edges.is_empty() {
            let es: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}→{b}")).collect();
            write!(f, " [{}]", es.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphVerdict {
    /// An explanation.
    ValidAcyclic,
    /// A support graph that is not an explanation.
    ValidCyclic,
    Invalid(String),
}

fn rules_by_label(p: &Program) -> BTreeMap<String, usize> {
    p.effective_labels().into_iter().enumerate().map(|(i, l)| (l, i)).collect()
}

/// Checks the conditions on a support graph of `i` under `p`.
pub fn check_support_graph(g: &Explanation, p: &Program, i: &Interpretation) -> Result<GraphVerdict> {
    if g.model != *i {
        return Err(Error::ModelMismatch {
            vertices: g.model.to_string(),
            model: i.to_string(),
        });
    }
    let invalid = |m: String| Ok(GraphVerdict::Invalid(m));
    let alphabet = Alphabet::new(p.atoms().into_iter().chain(i.iter().cloned()));
    let cp = CProgram::compile(p, &alphabet)?;
    let im = alphabet.mask_of(i.iter())?;
    if !cp.classical(im) {
        return invalid(format!("{i} is not a model of the program"));
    }
    let by_label = rules_by_label(p);
    let mut used = BTreeSet::new();
    for a in i.iter() {
        let Some(label) = g.labels.get(a) else {
            return invalid(format!("{a} has no label"));
        };
        if !used.insert(label) {
            return invalid(format!("label {label} is used twice"));
        }
        let Some(&ri) = by_label.get(label) else {
            return invalid(format!("unknown label {label}"));
        };
        let rule = &p.rules()[ri];
        if !rule.head().contains(a) {
            return invalid(format!("{a} is not in the head of {label}"));
        }
        if !cp.rules[ri].body_classical(im) {
            return invalid(format!("the body of {label} is false in {i}"));
        }
        let incoming: BTreeSet<&Atom> = g.edges.iter().filter(|(_, to)| to == a).map(|(q, _)| q).collect();
        if incoming != rule.pos().iter().collect() {
            return invalid(format!("incoming edges of {a} differ from the positive body of {label}"));
        }
    }
    if let Some(extra) = g.labels.keys().find(|a| !i.contains(a)) {
        return invalid(format!("{extra} is labelled but not a vertex"));
    }
    if let Some((q, a)) = g.edges.iter().find(|(q, a)| !i.contains(q) || !i.contains(a)) {
        return invalid(format!("edge {q} → {a} leaves the model"));
    }
    Ok(if g.is_acyclic() {
        GraphVerdict::ValidAcyclic
    } else {
        GraphVerdict::ValidCyclic
    })
}

/// Backtracking over injective labellings of the atoms of `i`.
struct Labeller<'a> {
    rules: &'a [CRule],
    atoms: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    acyclic: bool,
    chosen: Vec<usize>,
    used: Vec<bool>,
    reach: Vec<Mask>,
}

impl<'a> Labeller<'a> {
    fn new(rules: &'a [CRule], i: Mask, width: usize, acyclic: bool) -> Self {
        let atoms: Vec<usize> = (0..width).filter(|b| i >> b & 1 == 1).collect();
        let candidates = atoms
            .iter()
            .map(|&b| {
                (0..rules.len())
                    .filter(|&r| rules[r].head >> b & 1 == 1 && rules[r].body_classical(i))
                    .collect()
            })
            .collect();
        Labeller {
            rules,
            atoms,
            candidates,
            acyclic,
            chosen: Vec::new(),
            used: vec![false; rules.len()],
            reach: vec![0; width],
        }
    }

    /// Calls `visit` on every complete labelling until it returns `false`.
    fn run(&mut self, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let k = self.chosen.len();
        if k == self.atoms.len() {
            return visit(&self.chosen);
        }
        let p = self.atoms[k];
        let pbit: Mask = 1 << p;
        for ci in 0..self.candidates[k].len() {
            let r = self.candidates[k][ci];
            if self.used[r] {
                continue;
            }
            let body = self.rules[r].pos;
            let saved = if self.acyclic {
                if body & pbit != 0 || self.reach[p] & body != 0 {
                    continue;
                }
                let saved = self.reach.clone();
                let gained = pbit | self.reach[p];
                for x in 0..self.reach.len() {
                    if body >> x & 1 == 1 || self.reach[x] & body != 0 {
                        self.reach[x] |= gained;
                    }
                }
                Some(saved)
            } else {
                None
            };
            self.used[r] = true;
            self.chosen.push(r);
            let go_on = self.run(visit);
            self.chosen.pop();
            self.used[r] = false;
            if let Some(s) = saved {
                self.reach = s;
            }
            if !go_on {
                return false;
            }
        }
        true
    }
}

fn graphs_of(p: &Program, i: &Interpretation, acyclic: bool) -> Result<Vec<Explanation>> {
    let alphabet = Alphabet::new(p.atoms().into_iter().chain(i.iter().cloned()));
    alphabet.ensure_at_most(MAX_ENUM_ATOMS, "explanations")?;
    let cp = CProgram::compile(p, &alphabet)?;
    let im = alphabet.mask_of(i.iter())?;
    if !cp.classical(im) {
        return Ok(Vec::new());
    }
    let labels = p.effective_labels();
    let mut out = Vec::new();
    let mut lab = Labeller::new(&cp.rules, im, alphabet.len(), acyclic);
    let atoms = lab.atoms.clone();
    lab.run(&mut |chosen| {
        let mut g = Explanation::new(i.clone(), [], []);
        for (&b, &r) in atoms.iter().zip(chosen) {
            let a = alphabet.atoms()[b].clone();
            for q in p.rules()[r].pos() {
                g.edges.insert((q.clone(), a.clone()));
            }
            g.labels.insert(a, labels[r].clone());
        }
        out.push(g);
        true
    });
    Ok(out)
}

/// Every explanation (acyclic support graph) of `i`; empty unless `i ⊨ p`.
pub fn explanations_of(p: &Program, i: &Interpretation) -> Result<Vec<Explanation>> {
    graphs_of(p, i, true)
}

/// Every support graph of `i`, cyclic or not.
pub fn support_graphs_of(p: &Program, i: &Interpretation) -> Result<Vec<Explanation>> {
    graphs_of(p, i, false)
}

fn models_with_graph(p: &Program, alphabet: &Alphabet, acyclic: bool) -> Result<ModelSet> {
    alphabet.ensure_at_most(MAX_ENUM_ATOMS, "enumeration")?;
    alphabet.ensure_covers(&p.atoms())?;
    let cp = CProgram::compile(p, alphabet)?;
    Ok(ModelSet::from_masks(
        alphabet,
        (0..=alphabet.full_mask()).filter(|&i| {
            cp.classical(i) && !Labeller::new(&cp.rules, i, alphabet.len(), acyclic).run(&mut |_| false)
        }),
    ))
}

/// `JM(P)`: classical models with at least one explanation.
pub fn justified_models(p: &Program, alphabet: &Alphabet) -> Result<ModelSet> {
    models_with_graph(p, alphabet, true)
}

/// `SPM(P)`: classical models with at least one support graph.
pub fn supported_models_graph(p: &Program, alphabet: &Alphabet) -> Result<ModelSet> {
    models_with_graph(p, alphabet, false)
}

/// `AD(P)`: classical models where every true atom `p` has a rule with a
/// true body in which `p` is the only true head atom.
pub fn ad_supported(p: &Program, alphabet: &Alphabet) -> Result<ModelSet> {
    alphabet.ensure_at_most(MAX_ENUM_ATOMS, "enumeration")?;
    alphabet.ensure_covers(&p.atoms())?;
    let cp = CProgram::compile(p, alphabet)?;
    let supported = |i: Mask| {
        (0..alphabet.len()).filter(|b| i >> b & 1 == 1).all(|b| {
            cp.rules
                .iter()
                .any(|r| r.body_classical(i) && r.head & i == 1 << b)
        })
    };
    Ok(ModelSet::from_masks(
        alphabet,
        (0..=alphabet.full_mask()).filter(|&i| cp.classical(i) && supported(i)),
    ))
}

/// `G/A`: removes the atoms in `forget`, connecting `p0 → pn` whenever a
/// path between them runs only through forgotten atoms.
pub fn node_forget(g: &Explanation, forget: &BTreeSet<Atom>) -> Explanation {
    let kept: BTreeSet<&Atom> = g.model.iter().filter(|a| !forget.contains(*a)).collect();
    let mut edges = BTreeSet::new();
    for &start in &kept {
        // depth-first through forgotten atoms
        let mut stack: Vec<&Atom> = vec![start];
        let mut visited: BTreeSet<&Atom> = BTreeSet::new();
        while let Some(x) = stack.pop() {
            for (from, to) in &g.edges {
                if from != x {
                    continue;
                }
                if forget.contains(to) {
                    if visited.insert(to) {
                        stack.push(to);
                    }
                } else {
                    edges.insert((start.clone(), to.clone()));
                }
            }
        }
    }
    Explanation {
        model: Interpretation::new(kept.into_iter().cloned()),
        labels: g
            .labels
            .iter()
            .filter(|(a, _)| !forget.contains(*a))
            .map(|(a, l)| (a.clone(), l.clone()))
            .collect(),
        edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ht::stable_models;
    use crate::parser::parse_program;
    use crate::syntax::atoms;

    fn i(names: &[&str]) -> Interpretation {
        Interpretation::of(names.iter().copied())
    }

    fn p4() -> Program {
        parse_program("l1: a | b.\nl2: a | c.").unwrap()
    }

    #[test]
    fn checking_support_graphs() {
        let p = p4();
        let g = Explanation::from_labelling(&p, &i(&["a", "c"]), [("a", "l1"), ("c", "l2")]).unwrap();
        assert_eq!(check_support_graph(&g, &p, &i(&["a", "c"])).unwrap(), GraphVerdict::ValidAcyclic);
        let p6 = parse_program("l1: p :- p.").unwrap();
        let g = Explanation::from_labelling(&p6, &i(&["p"]), [("p", "l1")]).unwrap();
        assert_eq!(g.edges().len(), 1);
        assert_eq!(check_support_graph(&g, &p6, &i(&["p"])).unwrap(), GraphVerdict::ValidCyclic);
        for labels in [[("a", "l1"), ("b", "l1"), ("c", "l2")], [("a", "l2"), ("b", "l1"), ("c", "l2")]] {
            let g = Explanation::from_labelling(&p, &i(&["a", "b", "c"]), labels).unwrap();
            assert!(matches!(
                check_support_graph(&g, &p, &i(&["a", "b", "c"])).unwrap(),
                GraphVerdict::Invalid(_)
            ));
        }
        assert!(support_graphs_of(&p, &i(&["a", "b", "c"])).unwrap().is_empty());
        let err = check_support_graph(&g, &p, &i(&["a"])).unwrap_err();
        assert!(matches!(err, Error::ModelMismatch { .. }));
    }

    #[test]
    fn invalid_graphs_are_explained() {
        let p = parse_program("l1: a. l2: b :- a.").unwrap();
        let m = i(&["a", "b"]);
        let no_edge = Explanation::new(m.clone(), [(Atom::new("a"), "l1".into()), (Atom::new("b"), "l2".into())], []);
        assert!(matches!(check_support_graph(&no_edge, &p, &m).unwrap(), GraphVerdict::Invalid(_)));
        let wrong_head = Explanation::from_labelling(&p, &m, [("a", "l2"), ("b", "l1")]).unwrap();
        assert!(matches!(check_support_graph(&wrong_head, &p, &m).unwrap(), GraphVerdict::Invalid(_)));
        let good = Explanation::from_labelling(&p, &m, [("a", "l1"), ("b", "l2")]).unwrap();
        assert_eq!(check_support_graph(&good, &p, &m).unwrap(), GraphVerdict::ValidAcyclic);
    }

    #[test]
    fn justified_models_of_program_four() {
        let p = p4();
        let al = Alphabet::new(p.atoms());
        let jm = justified_models(&p, &al).unwrap();
        assert_eq!(jm, ModelSet::of([vec!["a"], vec!["a", "b"], vec!["a", "c"], vec!["b", "c"]]));
        let ex: Vec<String> = explanations_of(&p, &i(&["a"])).unwrap().iter().map(|e| e.to_string()).collect();
        assert_eq!(ex, ["{a ↦ l1}", "{a ↦ l2}"]);
        let ex = explanations_of(&p, &i(&["a", "b"])).unwrap();
        assert_eq!(ex.len(), 1);
        assert_eq!(ex[0].to_string(), "{a ↦ l2, b ↦ l1}");
        assert_eq!(supported_models_graph(&p, &al).unwrap(), jm);
        assert_eq!(ad_supported(&p, &al).unwrap(), ModelSet::of([vec!["a"], vec!["b", "c"]]));
    }

    #[test]
    fn loop_program() {
        let p6 = parse_program("l1: p :- p.").unwrap();
        let al = Alphabet::new(p6.atoms());
        assert_eq!(supported_models_graph(&p6, &al).unwrap(), ModelSet::of([vec![], vec!["p"]]));
        assert_eq!(justified_models(&p6, &al).unwrap(), ModelSet::of([Vec::<&str>::new()]));
        let g = &support_graphs_of(&p6, &i(&["p"])).unwrap()[0];
        assert!(g.edges().contains(&(Atom::new("p"), Atom::new("p"))));
        assert!(!g.is_acyclic());
        let fact = parse_program("a.").unwrap();
        assert_eq!(
            supported_models_graph(&fact, &Alphabet::new(fact.atoms())).unwrap(),
            ModelSet::of([vec!["a"]])
        );
    }

    #[test]
    fn normal_programs_justified_equals_stable() {
        for src in ["a :- not b. b :- not a.", "a :- b. b :- a. c :- not a.", "p :- not not p. q :- p."] {
            let p = parse_program(src).unwrap();
            let al = Alphabet::new(p.atoms());
            assert_eq!(justified_models(&p, &al).unwrap(), stable_models(&p, &al).unwrap(), "{src}");
        }
    }

    #[test]
    fn program_five() {
        let p = parse_program("a | b. a. b :- not b.").unwrap();
        assert_eq!(
            justified_models(&p, &Alphabet::new(p.atoms())).unwrap(),
            ModelSet::of([vec!["a", "b"]])
        );
    }

    #[test]
    fn forgetting() {
        let g = Explanation::new(
            i(&["q", "x", "p"]),
            [(Atom::new("q"), "l1".into()), (Atom::new("x"), "l2".into()), (Atom::new("p"), "l3".into())],
            [(Atom::new("q"), Atom::new("x")), (Atom::new("x"), Atom::new("p"))],
        );
        assert_eq!(node_forget(&g, &BTreeSet::new()), g);
        let f = node_forget(&g, &atoms(["x"]));
        assert_eq!(f.model(), &i(&["p", "q"]));
        assert_eq!(f.edges().iter().collect::<Vec<_>>(), [&(Atom::new("q"), Atom::new("p"))]);
        assert!(f.is_acyclic());
        assert_eq!(f.label_of(&Atom::new("x")), None);
    }

    #[test]
    fn dot_output() {
        let p = parse_program("l1: a. l2: b :- a.").unwrap();
        let g = &explanations_of(&p, &i(&["a", "b"])).unwrap()[0];
        let dot = g.to_dot("ab");
        assert!(dot.starts_with("digraph \"ab\" {"));
        assert!(dot.contains("\"a\" -> \"b\";"));
        assert!(dot.contains("\"b\" [label=\"b\\nl2\"];"));
    }
}
