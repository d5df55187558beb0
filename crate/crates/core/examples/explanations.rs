//! Justified models with their explanation graphs, printed as DOT.
use forklab::justified::{explanations_of, justified_models, support_graphs_of};
use forklab::{parse_program, Alphabet, Interpretation};

fn main() -> forklab::Result<()> {
    let p = parse_program("r1: a | b. r2: a | c. r3: d :- a, not b.")?;
    for m in justified_models(&p, &Alphabet::new(p.atoms()))? {
        for (k, e) in explanations_of(&p, &m)?.iter().enumerate() {
            print!("{}", e.to_dot(&format!("{m} #{}", k + 1)));
        }
    }
    // A self-supporting atom has a support graph but no explanation.
    let q = parse_program("l1: p :- p.")?;
    let pi = Interpretation::of(["p"]);
    for g in support_graphs_of(&q, &pi)? {
        println!("// acyclic: {}", g.is_acyclic());
        print!("{}", g.to_dot("{p}"));
    }
    Ok(())
}
