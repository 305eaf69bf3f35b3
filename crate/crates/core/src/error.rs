use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("alphabet mismatch between operands")]
    AlphabetMismatch,

    #[error("degree {requested} exceeds truncation {truncation}")]
    TruncationExceeded { requested: u32, truncation: u32 },

    #[error("constant term must be {expected}, found {found}")]
    ConstantTerm { expected: String, found: String },

    #[error("not a code: word `{word}` admits two factorizations")]
    NotACode { word: String },

    #[error("word `{word}` does not belong to the monoid generated by `{code}`")]
    NotInMonoid { word: String, code: String },

    #[error("missing generator {basis}_{index} in specialization")]
    MissingGenerator { basis: &'static str, index: u32 },

    #[error("series assigned to index {index} is not homogeneous of weight {expected}")]
    WeightMismatch { index: u32, expected: u32 },

    #[error("subalphabet is not contained in the code at degree {degree}")]
    NotSubcode { degree: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
