use thiserror::Error;

use crate::letter::Letter;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("arity {arity} exceeds the truth-table limit of {max}")]
    ArityTooLarge { arity: usize, max: usize },

    #[error("operation requires a function of arity at least 1")]
    ArityZero,

    #[error("valuation has {found} variables, function has arity {expected}")]
    ValuationLength { expected: usize, found: usize },

    #[error("operands belong to different managers")]
    ForeignManager,

    #[error("operands were reduced under different models ({0} vs {1})")]
    ModelMismatch(String, String),

    #[error("handle is not reduced under any model")]
    NotReduced,

    #[error("model {0} carries negation but its alphabet is not closed under negation conjugation")]
    UnstableModel(String),

    #[error("letter {0} is not elementary")]
    NotElementary(Letter),

    #[error("models {0} and {1} are incomparable")]
    IncomparableModels(String, String),

    #[error("unknown model name `{0}`")]
    UnknownModel(String),

    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("invalid truth table `{text}`: {reason}")]
    BadTruthTable { text: String, reason: String },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("variable out of range: x{index} at byte {offset} (arity {arity})")]
    VariableOutOfRange {
        index: usize,
        arity: usize,
        offset: usize,
    },

    #[error("certification failed for model {model}: {reason}")]
    Certification { model: String, reason: String },
}
