//! Rational abstract numeration systems.
//!
//! A system is an infinite regular language over a totally ordered
//! alphabet; the integer `n` is represented by the `(n+1)`-th word of the
//! language in radix order. Everything here works on the `k`-dimensional
//! N-representation of an unambiguous automaton for the language.

mod enumerator;
mod radix;
mod unrank;
mod value;

pub use enumerator::EnumeratorRep;
pub use radix::{radix_cmp, radix_cmp_indices};
pub use unrank::Unranker;
pub use value::{TraceStep, ValueTrace};

use crate::automata::{parse_regex, Dfa, Nfa, OrderedAlphabet};
use crate::error::{Error, Result};
use crate::exactalg::Matrix;
use crate::series::LinearRepresentation;

/// A validated numeration system with its precomputed matrices.
#[derive(Debug, Clone)]
pub struct AnsSystem {
    automaton: Nfa,
    deterministic: bool,
    rep: LinearRepresentation,
    sigma: Matrix,
    sigma_below: Vec<Matrix>,
}

impl AnsSystem {
    /// Builds the system on the minimal DFA of the automaton's language.
    pub fn new(language: &Nfa) -> Result<Self> {
        let dfa = Dfa::determinize(language).minimize();
        AnsSystem::build(dfa.to_nfa(), true)
    }

    pub fn from_dfa(language: &Dfa) -> Result<Self> {
        AnsSystem::build(language.minimize().to_nfa(), true)
    }

    /// Uses the given automaton as is, after trimming; it must be unambiguous.
    pub fn from_unambiguous(automaton: &Nfa) -> Result<Self> {
        let trimmed = automaton.trim();
        if !trimmed.is_unambiguous() {
            return Err(Error::Ambiguous);
        }
        let deterministic = Dfa::from_deterministic_nfa(&trimmed).is_ok();
        AnsSystem::build(trimmed, deterministic)
    }

    pub fn from_regex(pattern: &str, alphabet: &OrderedAlphabet) -> Result<Self> {
        AnsSystem::new(&parse_regex(pattern, alphabet)?)
    }

    fn build(automaton: Nfa, deterministic: bool) -> Result<Self> {
        if automaton.is_empty() {
            return Err(Error::EmptyLanguage);
        }
        if !automaton.is_infinite() {
            return Err(Error::FiniteLanguage);
        }
        let rep = automaton.to_linear_representation()?;
        let sigma = rep.letter_sum();
        let sigma_below = (0..rep.alphabet().len())
            .map(|a| rep.letter_sum_below(a))
            .collect();
        Ok(AnsSystem {
            automaton,
            deterministic,
            rep,
            sigma,
            sigma_below,
        })
    }

    pub fn alphabet(&self) -> &OrderedAlphabet {
        self.rep.alphabet()
    }

    /// The number of states `k` of the underlying automaton.
    pub fn dimension(&self) -> usize {
        self.rep.dimension()
    }

    pub fn automaton(&self) -> &Nfa {
        &self.automaton
    }

    /// Whether the underlying automaton is deterministic, which makes `λ`
    /// and every `μ(a)` row-monomial.
    pub fn is_deterministic(&self) -> bool {
        self.deterministic
    }

    /// The minimal DFA of the language.
    pub fn language_dfa(&self) -> Dfa {
        Dfa::determinize(&self.automaton).minimize()
    }

    /// The characteristic N-representation `(λ, μ, ν)` of the language.
    pub fn linear_representation(&self) -> &LinearRepresentation {
        &self.rep
    }

    /// `σ = μ(A)`.
    pub fn sigma(&self) -> &Matrix {
        &self.sigma
    }

    /// `σ_a = μ(A_a)`, the sum of the matrices of letters smaller than `a`.
    pub fn sigma_below(&self, letter: usize) -> &Matrix {
        &self.sigma_below[letter]
    }

    pub fn contains(&self, word: &str) -> Result<bool> {
        Ok(self.contains_indices(&self.alphabet().encode(word)?))
    }

    pub fn contains_indices(&self, word: &[usize]) -> bool {
        !self.rep.coefficient_of(word).is_zero()
    }

    pub fn radix_cmp(&self, u: &str, v: &str) -> Result<std::cmp::Ordering> {
        radix_cmp(u, v, self.alphabet())
    }
}
