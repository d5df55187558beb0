use thiserror::Error;

use crate::parser::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("capacity exceeded: {what} needs {size} atoms, limit is {limit}")]
    Capacity {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("atom `{0}` is not part of the declared alphabet")]
    AtomOutsideAlphabet(String),

    #[error("duplicate rule label `{0}`")]
    DuplicateLabel(String),

    #[error("here-part {here} is not contained in there-part {there}")]
    HereNotInThere { here: String, there: String },

    #[error("supports have different bases: {left} vs {right}")]
    BaseMismatch { left: String, right: String },

    #[error("invalid support: {0}")]
    InvalidSupport(String),

    #[error("rule #{0} has a disjunctive head; a normal program is required")]
    NonNormalProgram(usize),

    #[error("invalid head selection: {0}")]
    InvalidSelection(String),

    #[error("graph vertices {vertices} do not match the interpretation {model}")]
    ModelMismatch { vertices: String, model: String },

    #[error("chain is not monotone at stage {0}")]
    NonMonotoneChain(usize),

    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),
}
