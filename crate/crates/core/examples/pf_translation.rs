//! The pf translation: fork stable models recovered by projecting away
//! the auxiliary atoms.
use forklab::denotation::fork_stable_models;
use forklab::projection::project_sm;
use forklab::search::stable_models_search;
use forklab::translate::pf_translate;
use forklab::{parse_program, Alphabet};

fn main() -> forklab::Result<()> {
    let p = parse_program("a | b. a | c.")?;
    let q = pf_translate(&p);
    println!("pf(P):\n{q}");
    let projected = project_sm(&stable_models_search(&q, &Alphabet::new(q.atoms()))?, &p.atoms());
    println!("SM(pf(P)) restricted to AT(P): {projected}");
    println!("fork SM of forked P:          {}", fork_stable_models(&p.forked(), &Alphabet::new(p.atoms()))?);
    Ok(())
}
