use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: wrong sizes, out-of-range entries, bad parameters.
    #[error("input error: {0}")]
    Input(String),

    /// A structural axiom fails; `witness` is the lexicographically first counterexample.
    #[error("axiom `{axiom}` fails at {witness:?}")]
    Axiom { axiom: String, witness: Vec<usize> },

    /// The operation needs more structure than the value carries.
    #[error("unsupported structure: {0}")]
    Unsupported(String),

    #[error("precondition failed: {message} (witness {witness:?})")]
    Precondition {
        message: String,
        witness: Vec<usize>,
    },

    #[error("search budget exceeded: {needed} candidates, budget {budget}")]
    Budget { needed: u128, budget: u128 },

    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },
}

impl Error {
    pub(crate) fn axiom(axiom: impl Into<String>, witness: impl Into<Vec<usize>>) -> Self {
        Error::Axiom {
            axiom: axiom.into(),
            witness: witness.into(),
        }
    }

    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
