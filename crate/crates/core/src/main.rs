use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use forklab::commands::{self, ExplainOptions, Pass};
use forklab::fuzz::Check;
use forklab::gen::GenConfig;
use forklab::report::{ReportOptions, Semantics};
use forklab::{Atom, Error};

#[derive(Parser)]
#[command(name = "forklab", version, about = "Compare semantics of disjunctive logic programs by exhaustive enumeration")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Exit with status 1 on any inclusion violation or failed check.
    #[arg(long, global = true)]
    strict: bool,
    /// Extra atoms for the alphabet, comma separated.
    #[arg(long, global = true)]
    alphabet: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute semantics of a program and check the expected inclusions.
    Models {
        file: PathBuf,
        /// Semantics to compute, comma separated (default: all).
        #[arg(long, value_delimiter = ',')]
        semantics: Vec<Semantics>,
        /// Print witnesses (explanations, selections, chains).
        #[arg(long, short)]
        verbose: bool,
        #[arg(long)]
        timings: bool,
    },
    /// Strong entailment between two forks.
    Entails { left: PathBuf, right: PathBuf },
    /// Apply a program transformation: pf, t1 or t2.
    Translate { pass: Pass, file: PathBuf },
    /// Explanations of justified models as DOT.
    Explain {
        file: PathBuf,
        /// Only this model, e.g. `{a,b}`.
        #[arg(long, value_parser = parse_model)]
        model: Option<forklab::Interpretation>,
        /// Every explanation, not just the first per model.
        #[arg(long)]
        all: bool,
        /// Include cyclic support graphs.
        #[arg(long)]
        cyclic: bool,
    },
    /// Run differential checks on random programs.
    Fuzz(FuzzArgs),
}

#[derive(Args)]
struct FuzzArgs {
    #[arg(long, default_value_t = 1000)]
    iterations: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Checks to run, comma separated (default: all but pf-projection and ssm-minimal).
    #[arg(long, value_delimiter = ',')]
    checks: Vec<Check>,
    #[arg(long, default_value_t = GenConfig::default().atoms)]
    atoms: usize,
    #[arg(long, default_value_t = GenConfig::default().rules)]
    rules: usize,
    #[arg(long, default_value_t = GenConfig::default().max_head)]
    max_head: usize,
    #[arg(long, default_value_t = GenConfig::default().max_body)]
    max_body: usize,
    #[arg(long, default_value_t = GenConfig::default().p_neg)]
    p_neg: f64,
    #[arg(long, default_value_t = GenConfig::default().p_negneg)]
    p_negneg: f64,
    #[arg(long, default_value_t = GenConfig::default().p_constraint)]
    p_constraint: f64,
    #[arg(long, default_value_t = GenConfig::default().p_dup_head)]
    p_dup_head: f64,
}

fn parse_model(s: &str) -> Result<forklab::Interpretation, Error> {
    commands::parse_interpretation(s)
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn run(cli: Cli) -> Result<bool, String> {
    let extra: Vec<Atom> = match &cli.alphabet {
        Some(s) => commands::parse_atom_list(s).map_err(|e| e.to_string())?,
        None => Vec::new(),
    };
    let clean = match cli.command {
        Command::Models { file, semantics, verbose, timings } => {
            let opts = ReportOptions { witnesses: verbose || cli.json, timings };
            let r = commands::cmd_models(&read(&file)?, &semantics, &extra, &opts).map_err(|e| e.to_string())?;
            println!("{}", if cli.json { json(&r) } else { r.to_string() });
            r.is_consistent()
        }
        Command::Entails { left, right } => {
            let v = commands::cmd_entails(&read(&left)?, &read(&right)?, &extra).map_err(|e| e.to_string())?;
            println!("{}", if cli.json { json(&v) } else { v.to_string() });
            v.entails
        }
        Command::Translate { pass, file } => {
            let out = commands::cmd_translate(&read(&file)?, pass).map_err(|e| e.to_string())?;
            if cli.json {
                println!("{}", json(&out));
            } else {
                print!("{out}");
            }
            true
        }
        Command::Explain { file, model, all, cyclic } => {
            let opts = ExplainOptions { model, all, cyclic };
            let graphs = commands::cmd_explain(&read(&file)?, &extra, &opts).map_err(|e| e.to_string())?;
            if cli.json {
                println!("{}", json(&graphs));
            } else {
                print!("{}", commands::render_dot(&graphs));
            }
            !graphs.is_empty()
        }
        Command::Fuzz(a) => {
            let cfg = GenConfig {
                atoms: a.atoms,
                rules: a.rules,
                max_head: a.max_head,
                max_body: a.max_body,
                p_neg: a.p_neg,
                p_negneg: a.p_negneg,
                p_constraint: a.p_constraint,
                p_dup_head: a.p_dup_head,
                seed: a.seed,
            };
            let s = commands::cmd_fuzz(&cfg, a.iterations, &a.checks).map_err(|e| e.to_string())?;
            println!("{}", if cli.json { json(&s) } else { s.to_string() });
            s.failures() == 0
        }
    };
    Ok(clean || !cli.strict)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
