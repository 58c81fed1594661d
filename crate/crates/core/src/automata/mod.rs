//! Boolean finite automata over ordered alphabets.

mod alphabet;
mod dfa;
pub mod format;
mod nfa;
mod regex;

pub use alphabet::{words_up_to, OrderedAlphabet};
pub use dfa::Dfa;
pub use format::{dfa_to_dot, nfa_to_dot, parse_automaton, write_dfa, write_nfa};
pub(crate) use nfa::reach;
pub use nfa::Nfa;
pub use regex::parse_regex;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::series::LinearRepresentation;

/// Number of words of length `length` in the language of an unambiguous
/// automaton, computed as `λ·σ^length·ν` with `σ` the sum of the letter matrices.
pub fn count_words_of_length(rep: &LinearRepresentation, length: u64) -> Result<BigUint> {
    let sigma = rep.letter_sum();
    let coefficient = rep
        .initial()
        .vec_mat(&sigma.pow(length)?)?
        .dot(rep.terminal())?;
    coefficient
        .to_biguint()
        .ok_or_else(|| Error::OutOfSemiring {
            value: coefficient.to_string(),
            semiring: crate::exactalg::Semiring::N,
        })
}
