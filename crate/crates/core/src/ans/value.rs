use std::fmt::Write as _;

use num_bigint::BigUint;

use super::AnsSystem;
use crate::error::{Error, Result};
use crate::exactalg::Vector;

/// One row of the value computation: the vectors after reading `index` letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub index: usize,
    pub letter: Option<char>,
    /// `λ·μ(prefix)`: the states reached, entries in {0,1}.
    pub alpha: Vector,
    /// `α(previous prefix)·σ_a` for the letter just read.
    pub beta: Vector,
    /// `λ·μ(P(prefix))`: paths of words smaller than the prefix.
    pub gamma: Vector,
}

/// The full evolution of `(α, β, γ)` along a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueTrace {
    pub word: String,
    pub steps: Vec<TraceStep>,
    /// The value, when the word belongs to the language.
    pub value: Option<BigUint>,
}

impl ValueTrace {
    pub fn accepted(&self) -> bool {
        self.value.is_some()
    }

    /// Renders the trace as an `i | a_i | α | β | γ` table.
    pub fn table(&self) -> String {
        let mut out = String::from("i\ta_i\talpha\tbeta\tgamma\n");
        for s in &self.steps {
            let letter = s.letter.map(String::from).unwrap_or_default();
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                s.index, letter, s.alpha, s.beta, s.gamma
            )
            .unwrap();
        }
        out
    }
}

struct Walk {
    alpha: Vector,
    beta: Vector,
    gamma: Vector,
}

impl AnsSystem {
    fn walk(&self, word: &[usize], mut visit: impl FnMut(usize, Option<usize>, &Walk)) -> Walk {
        let lambda = self.rep.initial();
        let mut state = Walk {
            alpha: lambda.clone(),
            beta: lambda.clone(),
            gamma: Vector::zeros(lambda.orientation(), lambda.semiring(), lambda.len()),
        };
        visit(0, None, &state);
        for (i, &a) in word.iter().enumerate() {
            let beta = state
                .alpha
                .vec_mat(self.sigma_below(a))
                .expect("dimension k");
            let gamma = lambda
                .add(&beta)
                .and_then(|v| v.add(&state.gamma.vec_mat(&self.sigma)?))
                .expect("dimension k");
            let alpha = state
                .alpha
                .vec_mat(self.rep.matrix(a))
                .expect("dimension k");
            state = Walk { alpha, beta, gamma };
            visit(i + 1, Some(a), &state);
        }
        state
    }

    /// Number of words of the language strictly smaller than `word` in
    /// radix order; defined for every word.
    pub fn count_below(&self, word: &str) -> Result<BigUint> {
        let w = self.alphabet().encode(word)?;
        let walk = self.walk(&w, |_, _, _| {});
        natural(&walk.gamma, self.rep.terminal())
    }

    /// The value of a word of the language: its 0-based rank in radix order.
    ///
    /// Runs the `α`/`β`/`γ` recurrences on `k`-dimensional vectors, so the
    /// cost is linear in the word length.
    pub fn value(&self, word: &str) -> Result<BigUint> {
        let w = self.alphabet().encode(word)?;
        self.value_of(&w)
    }

    pub fn value_of(&self, word: &[usize]) -> Result<BigUint> {
        let walk = self.walk(word, |_, _, _| {});
        if walk.alpha.dot(self.rep.terminal())?.is_zero() {
            return Err(Error::NotInLanguage(self.alphabet().decode(word)));
        }
        natural(&walk.gamma, self.rep.terminal())
    }

    /// The value computation step by step, whether or not the word is in the language.
    pub fn value_trace(&self, word: &str) -> Result<ValueTrace> {
        let w = self.alphabet().encode(word)?;
        let mut steps = Vec::with_capacity(w.len() + 1);
        let walk = self.walk(&w, |index, letter, s| {
            steps.push(TraceStep {
                index,
                letter: letter.map(|a| self.alphabet().letter(a)),
                alpha: s.alpha.clone(),
                beta: s.beta.clone(),
                gamma: s.gamma.clone(),
            })
        });
        let value = if walk.alpha.dot(self.rep.terminal())?.is_zero() {
            None
        } else {
            Some(natural(&walk.gamma, self.rep.terminal())?)
        };
        Ok(ValueTrace {
            word: word.to_string(),
            steps,
            value,
        })
    }
}

fn natural(row: &Vector, column: &Vector) -> Result<BigUint> {
    let s = row.dot(column)?;
    s.to_biguint()
        .ok_or_else(|| Error::Internal(format!("rank {s} is not a natural number")))
}
