//! Differential checks on seeded random programs.
use forklab::fuzz::{run_fuzz, Check};
use forklab::gen::GenConfig;

fn main() -> forklab::Result<()> {
    let cfg = GenConfig { seed: 7, ..GenConfig::default() };
    print!("{}", run_fuzz(&cfg, 200, &Check::DEFAULT)?);

    // Minimality of SSM does not hold once negation meets disjunction.
    let s = run_fuzz(&cfg, 200, &[Check::SsmMinimal])?;
    for c in &s.checks {
        if let Some(cx) = &c.counterexample {
            println!("{}: seed {}\n{}{}", c.check, cx.seed, cx.shrunk, cx.message);
        }
    }
    Ok(())
}
