//! Head selections: open and closed candidate stable models and DI.
use forklab::di::{candidate_stable_models, candidate_witnesses, di_stable_models};
use forklab::{parse_program, Alphabet};

fn main() -> forklab::Result<()> {
    for src in ["p. :- c. a | b. b | a :- p.", "p. :- c. a | b. b | a | c :- p."] {
        let p = parse_program(src)?;
        let al = Alphabet::new(p.atoms());
        println!("{src}");
        println!("  open csm:   {}", candidate_stable_models(&p, &al, false)?);
        println!("  closed csm: {}", candidate_stable_models(&p, &al, true)?);
        println!("  di:         {}", di_stable_models(&p, &al)?);
        for (m, sel) in candidate_witnesses(&p, &al, true)? {
            println!("  {m} via {sel}");
        }
    }
    Ok(())
}
