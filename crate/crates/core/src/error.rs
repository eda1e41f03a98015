use crate::exactnum::Rational;

/// Errors produced by the toolkit.
///
/// Verification functions report *failures* through their return values
/// (reports, booleans, verdicts); `Error` is reserved for rejected inputs,
/// exceeded caps and broken hypotheses.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },

    #[error("index out of range: {context}")]
    IndexOutOfRange { context: String },

    #[error("enumeration cap exceeded for {context}: n = {requested} > cap {cap} ({estimate})")]
    CapExceeded {
        context: String,
        requested: usize,
        cap: usize,
        estimate: String,
    },

    #[error("invalid permutation: {reason}")]
    InvalidPermutation { reason: String },

    #[error("not a group: {reason}")]
    NotAGroup { reason: String },

    #[error("permutation is not a 3-cycle")]
    NotAThreeCycle,

    #[error("permutation is not a product of the witness generators")]
    NotInGeneratedGroup,

    #[error("weak-symmetry equation fails: {context}")]
    WeakSymmetryViolated { context: String },

    #[error("hypothesis breach in {stage}: {detail}")]
    HypothesisBreach { stage: String, detail: String },

    #[error("partition does not verify against the section")]
    UnverifiedPartition,

    #[error("precondition violated: {condition}")]
    PreconditionViolated { condition: String },

    #[error("epsilon too large: maximal admissible value is {max_admissible}")]
    EpsilonTooLarge { max_admissible: Rational },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn dim(context: impl Into<String>) -> Self {
        Error::DimensionMismatch {
            context: context.into(),
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
