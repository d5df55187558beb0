//! Exhaustive semantics lab for disjunctive logic programs with forks.

pub mod error;
pub mod syntax;
pub mod parser;
pub mod model;
mod compiled;
pub mod ht;
pub mod denotation;
pub mod search;
pub mod translate;
pub mod projection;
pub mod justified;
pub mod di;
pub mod ssm;
pub mod gen;
pub mod report;
pub mod fuzz;
pub mod commands;

pub use error::{Error, Result};
pub use model::{Alphabet, Interpretation, ModelSet};
pub use parser::{parse_fork, parse_formula, parse_program, ParseError};
pub use syntax::{Atom, Fork, Formula, Program, Rule};
