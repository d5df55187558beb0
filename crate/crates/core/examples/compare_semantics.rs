//! Every semantics of one program side by side, with the expected
//! inclusions checked.
use forklab::report::{ComparisonReport, ReportOptions, Semantics};
use forklab::{parse_program, Alphabet};

fn main() -> forklab::Result<()> {
    let src = std::env::args().nth(1).unwrap_or_else(|| "a | b. a | c.".to_string());
    let p = parse_program(&src)?;
    let opts = ReportOptions { witnesses: true, timings: false };
    let r = ComparisonReport::compute(&p, &Alphabet::new(p.atoms()), &Semantics::ALL, &opts)?;
    print!("{r}");
    Ok(())
}
