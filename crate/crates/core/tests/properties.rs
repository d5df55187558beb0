mod common;

use std::collections::BTreeSet;

use common::{equilibrium_models, explicit, fork_models_explicit, gl_stable, subsets, Lattice};
use forklab::denotation::{
    closure, complement, denotation, explicit_supports, fork_stable_models, ideal, strongly_entails, support_of_formula,
    TSupport,
};
use forklab::di::selections;
use forklab::gen::{GenConfig, Generator};
use forklab::ht::{classical_models, classical_sat, ht_sat, stable_models};
use forklab::justified::{explanations_of, justified_models, supported_models_graph};
use forklab::parser::{parse_fork, parse_program, render_fork, render_program};
use forklab::report::{ComparisonReport, ReportOptions, Semantics};
use forklab::search::stable_models_search;
use forklab::syntax::atoms as atoms_of;
use forklab::{Alphabet, Atom, Fork, Formula, Interpretation, Program, Rule};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: RngSeed::Fixed(0x0f0e_c0de),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn program(seed: u64) -> Program {
    Generator::new(&GenConfig { seed, ..GenConfig::default() }).unwrap().program()
}

fn letters(n: usize) -> Vec<Atom> {
    ["a", "b", "c"][..n].iter().map(|s| Atom::new(*s)).collect()
}

proptest! {
    #![proptest_config(config(300))]

    #[test]
    fn programs_survive_rendering(seed in any::<u64>()) {
        let p = program(seed);
        prop_assert_eq!(parse_program(&render_program(&p)).unwrap(), p);
    }

    #[test]
    fn forks_survive_rendering(seed in any::<u64>(), n in 1usize..=3, depth in 0usize..=4) {
        let f = Generator::over(letters(n), seed).fork(depth);
        prop_assert_eq!(parse_fork(&render_fork(&f)).unwrap(), f);
    }

    #[test]
    fn here_and_there_persistence(seed in any::<u64>(), n in 1usize..=3) {
        let phi = Generator::over(letters(n), seed).formula(3);
        let alphabet: BTreeSet<Atom> = letters(n).into_iter().collect();
        for t in subsets(&alphabet) {
            prop_assert_eq!(ht_sat(&common::ht(&t, &t), &phi), classical_sat(t.atoms(), &phi));
            for h in subsets(t.atoms()) {
                if ht_sat(&common::ht(&h, &t), &phi) {
                    prop_assert!(classical_sat(t.atoms(), &phi));
                }
            }
        }
    }

    #[test]
    fn stable_models_match_the_equilibrium_definition(seed in any::<u64>()) {
        let p = program(seed);
        let al = Alphabet::new(p.atoms());
        let expected = equilibrium_models(&p.to_formula(), &p.atoms());
        prop_assert_eq!(&stable_models(&p, &al).unwrap(), &expected);
        prop_assert_eq!(&stable_models_search(&p, &al).unwrap(), &expected);
        prop_assert!(expected.is_subset(&classical_models(&p, &al).unwrap()));
    }

    #[test]
    fn normal_programs_match_the_reduct(seed in any::<u64>()) {
        let cfg = GenConfig { seed, max_head: 1, atoms: 5, rules: 8, ..GenConfig::default() };
        let p = Generator::new(&cfg).unwrap().program();
        prop_assert_eq!(stable_models_search(&p, &Alphabet::new(p.atoms())).unwrap(), gl_stable(&p, &p.atoms()));
    }

    #[test]
    fn search_agrees_on_larger_programs(seed in any::<u64>()) {
        let cfg = GenConfig { seed, atoms: 6, rules: 8, max_body: 3, ..GenConfig::default() };
        let p = Generator::new(&cfg).unwrap().program();
        let al = Alphabet::new(p.atoms());
        prop_assert_eq!(stable_models_search(&p, &al).unwrap(), stable_models(&p, &al).unwrap());
    }

    #[test]
    fn denotation_matches_the_explicit_definition(seed in any::<u64>(), n in 1usize..=3) {
        let f = Generator::over(letters(n), seed).fork(3);
        let alphabet: BTreeSet<Atom> = letters(n).into_iter().collect();
        for t in subsets(&alphabet) {
            prop_assert_eq!(explicit(&denotation(&f, &t).unwrap()), Lattice::new(&t).fork(&f), "T = {}", t);
        }
        prop_assert_eq!(fork_stable_models(&f, &Alphabet::new(alphabet.clone())).unwrap(), fork_models_explicit(&f, &alphabet));
    }

    #[test]
    fn formula_denotation_is_the_ideal_of_its_support(seed in any::<u64>(), n in 1usize..=3) {
        let phi = Generator::over(letters(n), seed).formula(3);
        for t in subsets(&letters(n).into_iter().collect()) {
            let view = denotation(&Fork::from(phi.clone()), &t).unwrap();
            prop_assert_eq!(view, ideal(&support_of_formula(&phi, &t).unwrap()));
        }
    }

    #[test]
    fn fork_laws(seed in any::<u64>(), n in 2usize..=3) {
        let mut g = Generator::over(letters(n), seed);
        let (f, h, l) = (g.fork(2), g.fork(2), g.fork(2));
        let alphabet: BTreeSet<Atom> = letters(n).into_iter().collect();
        for t in subsets(&alphabet) {
            let d = |x: &Fork| denotation(x, &t).unwrap();
            prop_assert_eq!(
                d(&Fork::split(Fork::split(f.clone(), h.clone()), l.clone())),
                d(&Fork::split(f.clone(), Fork::split(h.clone(), l.clone())))
            );
            prop_assert_eq!(
                d(&Fork::and(Fork::split(f.clone(), h.clone()), l.clone())),
                d(&Fork::split(Fork::and(f.clone(), l.clone()), Fork::and(h.clone(), l.clone())))
            );
        }
        let al = Alphabet::new(alphabet);
        let sm = |x: &Fork| fork_stable_models(x, &al).unwrap();
        prop_assert_eq!(sm(&Fork::split(f.clone(), h.clone())), sm(&f).union(&sm(&h)));
    }

    #[test]
    fn disjunction_entails_fork(seed in any::<u64>(), n in 1usize..=3, k in 1usize..=3) {
        let mut g = Generator::over(letters(n), seed);
        let phi = g.formula(2);
        let alphas: Vec<Formula> = (0..k).map(|_| g.formula(1)).collect();
        let disj = Fork::from(Formula::implies(phi.clone(), Formula::disjunction(alphas.clone())));
        let fork = Fork::implies(phi, Fork::branches(alphas.into_iter().map(Fork::from)));
        prop_assert!(strongly_entails(&disj, &fork, &Alphabet::new(letters(n))).unwrap());
    }

    #[test]
    fn programs_entail_their_forked_version(seed in any::<u64>()) {
        let p = program(seed);
        let al = Alphabet::new(p.atoms());
        prop_assert!(strongly_entails(&Fork::from(p.to_formula()), &p.forked(), &al).unwrap());
        prop_assert!(stable_models_search(&p, &al).unwrap().is_subset(&fork_stable_models(&p.forked(), &al).unwrap()));
    }

    #[test]
    fn justified_models_need_no_particular_labels(seed in any::<u64>()) {
        let p = program(seed);
        let renamed: Program = p.rules().iter().enumerate().map(|(i, r)| r.clone().with_label(format!("x{}", 7 * i + 3))).collect();
        let al = Alphabet::new(p.atoms());
        prop_assert_eq!(justified_models(&p, &al).unwrap(), justified_models(&renamed, &al).unwrap());
        for m in justified_models(&p, &al).unwrap() {
            let ours = explanations_of(&p, &m).unwrap();
            let theirs = explanations_of(&renamed, &m).unwrap();
            prop_assert_eq!(ours.len(), theirs.len());
            let shape = |e: &forklab::justified::Explanation| e.edges().clone();
            let a: BTreeSet<_> = ours.iter().map(shape).collect();
            let b: BTreeSet<_> = theirs.iter().map(shape).collect();
            prop_assert_eq!(a, b);
        }
        prop_assert!(justified_models(&p, &al).unwrap().is_subset(&supported_models_graph(&p, &al).unwrap()));
    }

    #[test]
    fn selections_never_pick_falsity_in_models(seed in any::<u64>()) {
        let p = program(seed);
        let al = Alphabet::new(p.atoms());
        for m in classical_models(&p, &al).unwrap() {
            for sel in selections(&p, &m, false).unwrap() {
                prop_assert!(sel.choices().values().all(Option::is_some));
            }
        }
    }

    #[test]
    fn reports_have_no_violations(seed in any::<u64>()) {
        let p = program(seed);
        let r = ComparisonReport::compute(&p, &Alphabet::new(p.atoms()), &Semantics::ALL, &ReportOptions::default()).unwrap();
        prop_assert!(r.is_consistent(), "{}\n{}", p, r);
    }
}

#[test]
fn complement_is_an_involution_except_at_the_bottom() {
    for t in [Interpretation::empty(), Interpretation::of(["a"]), Interpretation::of(["a", "b"]), Interpretation::of(["a", "b", "c"])] {
        let lattice = Lattice::new(&t);
        let top = TSupport::top(&t).unwrap();
        for h in explicit_supports(&t).unwrap() {
            let members: common::Support = h.members().into_iter().collect();
            let once = complement(&h);
            assert_eq!(once.members().into_iter().collect::<common::Support>(), lattice.complement(&members));
            let twice = complement(&once);
            if h == top && !t.is_empty() {
                assert_eq!(twice, TSupport::empty(&t).unwrap(), "[T] ↦ 2^T ↦ [ ]");
            } else {
                assert_eq!(twice, h, "{h}");
            }
        }
    }
}

#[test]
fn closure_is_idempotent_and_ideals_skip_the_empty_support() {
    let t = Interpretation::of(["a", "b"]);
    let all = explicit_supports(&t).unwrap();
    let empty = TSupport::empty(&t).unwrap();
    for (i, h) in all.iter().enumerate() {
        assert!(!ideal(h).contains(&empty));
        for g in &all[i..] {
            let once = closure(&t, &[h.clone(), g.clone()]).unwrap();
            let twice = closure(&t, &once.supports().unwrap()).unwrap();
            assert_eq!(once, twice);
        }
    }
}

#[test]
fn rule_translation_agrees_for_normal_rules() {
    for seed in 0..200 {
        let cfg = GenConfig { seed, max_head: 1, ..GenConfig::default() };
        for r in Generator::new(&cfg).unwrap().program().rules() {
            assert_eq!(r.forked(), Fork::from(r.to_formula()), "{r}");
        }
    }
    let r = Rule::new(atoms_of(["a", "b"]), [], [], []);
    assert!(r.forked().as_formula().is_none());
}
