use thiserror::Error;

use crate::exactalg::Semiring;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("semiring mismatch: {left} vs {right}")]
    SemiringMismatch { left: Semiring, right: Semiring },
    #[error("cannot embed {from} into {to}")]
    Narrowing { from: Semiring, to: Semiring },
    #[error("value {value} does not belong to {semiring}")]
    OutOfSemiring { value: String, semiring: Semiring },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("letter {0:?} is not in the alphabet")]
    ForeignLetter(char),
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
    #[error("automaton is ambiguous")]
    Ambiguous,

    #[error("language is empty")]
    EmptyLanguage,
    #[error("language is finite; a numeration system needs an infinite language")]
    FiniteLanguage,
    #[error("word {0:?} is not in the language")]
    NotInLanguage(String),
    #[error("construction requires a deterministic system automaton")]
    NotDeterministic,
    #[error("invalid congruence: {0}")]
    InvalidCongruence(String),

    #[error("alphabet mismatch: {0} vs {1}")]
    AlphabetMismatch(String, String),
    #[error("invalid series document: {0}")]
    SeriesFormat(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
