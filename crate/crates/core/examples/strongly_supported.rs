//! Strongly supported models with their chains.
use forklab::ssm::{minimal_elements, ssm_witnesses, strongly_supported_models};
use forklab::{parse_program, Alphabet};

fn main() -> forklab::Result<()> {
    for src in ["a | b. a | c.", "a | b. a. b :- not b.", "p :- p."] {
        let p = parse_program(src)?;
        let al = Alphabet::new(p.atoms());
        let ssm = strongly_supported_models(&p, &al)?;
        println!("{src}\n  ssm: {ssm}\n  minimal: {}", minimal_elements(&ssm));
        for (_, chain) in ssm_witnesses(&p, &al)? {
            println!("  {chain}");
        }
    }
    Ok(())
}
