//! Denotations of forks and their stable models.
use forklab::denotation::{denotation, fork_stable_models, strongly_entails};
use forklab::{parse_fork, parse_program, Alphabet, Interpretation};

fn main() -> forklab::Result<()> {
    let f = parse_fork("(a ; b) & (a ; c)")?;
    let al = Alphabet::new(f.atoms());
    for t in [Interpretation::of(["a"]), Interpretation::of(["b", "c"]), Interpretation::of(["a", "b", "c"])] {
        println!("[[{f}]]_{t} = {}", denotation(&f, &t)?);
    }
    println!("stable models of the fork: {}", fork_stable_models(&f, &al)?);

    let p = parse_program("a | b. a | c.")?;
    let disj = forklab::Fork::from(p.to_formula());
    println!("program entails its forked version: {}", strongly_entails(&disj, &p.forked(), &al)?);
    println!("forked version entails the program: {}", strongly_entails(&p.forked(), &disj, &al)?);
    Ok(())
}
