//! Error type shared by every module of the engine.

use thiserror::Error;

/// Uniform error type for all engine operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    /// Arithmetic on operands that do not satisfy a precondition
    /// (division by zero, wrong lattice rank, non-polynomial input, ...).
    #[error("invalid operand: {0}")]
    InvalidOperand(String),

    /// Evaluation of a rational function at a zero of its denominator.
    #[error("pole at q0 = {0}")]
    EvaluationPole(String),

    /// A label or case outside the implemented tables.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Characters drawn from two different label-group declarations.
    #[error("label group mismatch: {0}")]
    LabelGroupMismatch(String),

    /// A parameter descriptor violating its invariants or matching no case.
    #[error("malformed descriptor: {0}")]
    MalformedDescriptor(String),

    /// An enhancement label that is not a character of the component group.
    #[error("invalid enhancement: {0}")]
    InvalidEnhancement(String),

    /// Required auxiliary data (dimension, restriction multiplicities, ...)
    /// was not supplied.
    #[error("incomplete data: {0}")]
    IncompleteData(String),

    /// A cuspidal-datum summary violating the depth/root-count ordering.
    #[error("invalid datum: {0}")]
    InvalidDatum(String),

    /// A comparison involving generic labels that the session has not
    /// declared enough relations to decide.
    #[error("needs declaration: {0}")]
    NeedsDeclaration(String),

    /// Operation does not apply to this input (e.g. a Langlands-quotient
    /// label requested for a tempered constituent).
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// Parse error in one of the text grammars.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, EngineError>;
