//! Stable models and classical models of a disjunctive program.
use forklab::ht::{classical_models, stable_models};
use forklab::search::stable_models_search;
use forklab::{parse_program, Alphabet};

fn main() -> forklab::Result<()> {
    let p = parse_program("a | b. a | c. d :- not a.")?;
    let al = Alphabet::new(p.atoms());
    println!("program:\n{p}");
    println!("classical: {}", classical_models(&p, &al)?);
    println!("stable:    {}", stable_models(&p, &al)?);
    println!("search:    {}", stable_models_search(&p, &al)?);
    Ok(())
}
