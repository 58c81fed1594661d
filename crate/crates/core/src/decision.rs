//! Deciding whether an N-rational series is the enumerating series of a
//! numeration system.
//!
//! The support of the series fixes the only candidate language. The
//! series is the enumerating series iff it equals the enumerating series
//! rebuilt from that support, and equality of two series reduces to an
//! exact zero test of their difference over Q.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;

use crate::ans::AnsSystem;
use crate::automata::{Dfa, Nfa};
use crate::error::{Error, Result};
use crate::exactalg::{Scalar, Semiring, Vector};
use crate::series::LinearRepresentation;

/// A series given by a linear representation together with its alphabet.
pub type SeriesRep = LinearRepresentation;

/// Default maximal witness length searched after a failed equivalence.
pub const DEFAULT_WITNESS_DEPTH: usize = 12;

fn require_natural(s: &SeriesRep) -> Result<()> {
    if s.semiring() != Semiring::N {
        return Err(Error::SemiringMismatch {
            left: Semiring::N,
            right: s.semiring(),
        });
    }
    Ok(())
}

/// Minimal DFA of the words with a nonzero coefficient.
///
/// Without cancellation in N, a word has a nonzero coefficient exactly when
/// it labels a path of nonzero weights, so the support is the language of
/// the underlying Boolean automaton.
pub fn support_dfa(s: &SeriesRep) -> Result<Dfa> {
    require_natural(s)?;
    let n = s.dimension();
    let mut transitions = Vec::new();
    for (a, m) in s.matrices().iter().enumerate() {
        for p in 0..n {
            for q in 0..n {
                if !m.get(p, q).is_zero() {
                    transitions.push((p, a, q));
                }
            }
        }
    }
    let nfa = Nfa::new(
        s.alphabet().clone(),
        n.max(1),
        transitions,
        s.initial().support(),
        s.terminal().support(),
    )?;
    Ok(Dfa::determinize(&nfa).minimize())
}

/// A representation of `s1 - s2` over Z (Q if either input is rational).
pub fn subtract(s1: &SeriesRep, s2: &SeriesRep) -> Result<SeriesRep> {
    s1.difference(s2)
}

/// Row-echelon basis over Q, pivots normalised to 1.
struct EchelonBasis {
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl EchelonBasis {
    /// Reduces `v` against the basis and inserts the remainder if nonzero.
    fn insert(&mut self, v: &[BigRational]) -> bool {
        let mut r = v.to_vec();
        for (pivot, row) in &self.rows {
            if r[*pivot].is_zero() {
                continue;
            }
            let factor = r[*pivot].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inverse = r[pivot].recip();
        for x in r.iter_mut() {
            *x *= &inverse;
        }
        // Keep earlier rows reduced at the new pivot.
        for (_, row) in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let factor = row[pivot].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    if !y.is_zero() {
                        *x -= &factor * y;
                    }
                }
            }
        }
        self.rows.push((pivot, r));
        true
    }
}

/// A word `w` with `⟨s, w⟩ ≠ 0`, found by exploring a spanning set of the
/// vectors `λ·μ(w)`; `None` iff the series is zero.
pub fn nonzero_word(s: &SeriesRep) -> Result<Option<Vec<usize>>> {
    let s = s.embed(Semiring::Q)?;
    let mut basis = EchelonBasis { rows: Vec::new() };
    let mut queue = VecDeque::from([(Vec::new(), s.initial().clone())]);
    while let Some((word, v)) = queue.pop_front() {
        if !basis.insert(v.entries()) {
            continue;
        }
        if !v.dot(s.terminal())?.is_zero() {
            return Ok(Some(word));
        }
        for a in 0..s.alphabet().len() {
            let mut next = word.clone();
            next.push(a);
            queue.push_back((next, v.vec_mat(s.matrix(a))?));
        }
    }
    Ok(None)
}

/// True iff every coefficient of `s` is zero. Exact; no tolerance involved.
pub fn is_zero(s: &SeriesRep) -> Result<bool> {
    Ok(nonzero_word(s)?.is_none())
}

pub fn equivalent(s1: &SeriesRep, s2: &SeriesRep) -> Result<bool> {
    is_zero(&subtract(s1, s2)?)
}

/// The radix-least word of length at most `depth` with a nonzero coefficient.
pub fn first_nonzero_up_to(s: &SeriesRep, depth: usize) -> Result<Option<Vec<usize>>> {
    fn search(
        s: &SeriesRep,
        prefix: &mut Vec<usize>,
        v: &Vector,
        remaining: usize,
    ) -> Result<bool> {
        if v.is_zero() {
            return Ok(false);
        }
        if remaining == 0 {
            return Ok(!v.dot(s.terminal())?.is_zero());
        }
        for a in 0..s.alphabet().len() {
            prefix.push(a);
            if search(s, prefix, &v.vec_mat(s.matrix(a))?, remaining - 1)? {
                return Ok(true);
            }
            prefix.pop();
        }
        Ok(false)
    }
    for length in 0..=depth {
        let mut word = Vec::with_capacity(length);
        if search(s, &mut word, s.initial(), length)? {
            return Ok(Some(word));
        }
    }
    Ok(None)
}

/// Why a series is not an enumerating series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    /// The support is finite, so it is not the language of a numeration system.
    FiniteSupport,
    /// The coefficient of `word` should be `expected` (its value plus one, or
    /// zero off the support) but is `actual`.
    Mismatch {
        word: String,
        expected: Scalar,
        actual: Scalar,
    },
    /// The series differ, but not on any word of length at most `depth`.
    BeyondDepth { depth: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No(Rejection),
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes)
    }
}

/// Decides whether `s` is the enumerating series of the numeration system
/// on its own support, searching witnesses up to `witness_depth` letters.
pub fn is_enumerating_series(s: &SeriesRep, witness_depth: usize) -> Result<Verdict> {
    let support = support_dfa(s)?;
    if !support.is_infinite() {
        return Ok(Verdict::No(Rejection::FiniteSupport));
    }
    let system = AnsSystem::from_dfa(&support)?;
    let expected = system.enumerating_series()?.final_rep;
    let difference = subtract(s, &expected)?;
    if is_zero(&difference)? {
        return Ok(Verdict::Yes);
    }
    Ok(Verdict::No(
        match first_nonzero_up_to(&difference, witness_depth)? {
            Some(word) => Rejection::Mismatch {
                word: s.alphabet().decode(&word),
                expected: expected.coefficient_of(&word),
                actual: s.coefficient_of(&word),
            },
            None => Rejection::BeyondDepth {
                depth: witness_depth,
            },
        },
    ))
}

/// Convenience: the enumerating series coefficient expected for `word`.
pub fn expected_coefficient(system: &AnsSystem, word: &str) -> Result<BigUint> {
    match system.value(word) {
        Ok(v) => Ok(v + 1u8),
        Err(Error::NotInLanguage(_)) => Ok(BigUint::zero()),
        Err(e) => Err(e),
    }
}
