//! Linear representations `(λ, μ, ν)` of recognisable series and their
//! JSON exchange format.
//!
//! ```json
//! {
//!   "semiring": "N",
//!   "dimension": 2,
//!   "alphabet": ["a", "b"],
//!   "initial": ["1", "0"],
//!   "matrices": [
//!     { "letter": "a", "rows": [["1", "0"], ["0", "1"]] },
//!     { "letter": "b", "rows": [["0", "1"], ["1", "0"]] }
//!   ],
//!   "final": ["1", "0"]
//! }
//! ```
//!
//! Numbers are decimal strings (`"12"`, `"-3"`, `"7/2"`) so that no
//! precision is lost at any magnitude.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::automata::OrderedAlphabet;
use crate::error::{Error, Result};
use crate::exactalg::{
    format_rational, parse_rational, Matrix, Orientation, Scalar, Semiring, Vector,
};

/// A row vector `λ`, one square matrix `μ(a)` per letter, and a column vector `ν`.
///
/// The coefficient of a word `w` is `λ·μ(w)·ν`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRepresentation {
    alphabet: OrderedAlphabet,
    initial: Vector,
    matrices: Vec<Matrix>,
    terminal: Vector,
}

impl LinearRepresentation {
    pub fn new(
        alphabet: OrderedAlphabet,
        initial: Vector,
        matrices: Vec<Matrix>,
        terminal: Vector,
    ) -> Result<Self> {
        let n = initial.len();
        let semiring = initial.semiring();
        if initial.orientation() != Orientation::Row
            || terminal.orientation() != Orientation::Column
        {
            return Err(Error::DimensionMismatch(
                "λ must be a row and ν a column".into(),
            ));
        }
        if terminal.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "λ has length {n}, ν has length {}",
                terminal.len()
            )));
        }
        if matrices.len() != alphabet.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for {} letters",
                matrices.len(),
                alphabet.len()
            )));
        }
        for m in &matrices {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "letter matrix is {}x{}, expected {n}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        for other in matrices
            .iter()
            .map(Matrix::semiring)
            .chain([terminal.semiring()])
        {
            if other != semiring {
                return Err(Error::SemiringMismatch {
                    left: semiring,
                    right: other,
                });
            }
        }
        Ok(LinearRepresentation {
            alphabet,
            initial,
            matrices,
            terminal,
        })
    }

    pub fn alphabet(&self) -> &OrderedAlphabet {
        &self.alphabet
    }

    pub fn semiring(&self) -> Semiring {
        self.initial.semiring()
    }

    pub fn dimension(&self) -> usize {
        self.initial.len()
    }

    pub fn initial(&self) -> &Vector {
        &self.initial
    }

    /// `μ(a)` for the letter with the given index.
    pub fn matrix(&self, letter: usize) -> &Matrix {
        &self.matrices[letter]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn terminal(&self) -> &Vector {
        &self.terminal
    }

    /// `Σ_a μ(a)`.
    pub fn letter_sum(&self) -> Matrix {
        self.letter_sum_below(self.alphabet.len())
    }

    /// `Σ_{b < a} μ(b)` where `a` is the letter with index `letter`.
    pub fn letter_sum_below(&self, letter: usize) -> Matrix {
        self.matrices[..letter].iter().fold(
            Matrix::zeros(self.semiring(), self.dimension(), self.dimension()),
            |acc, m| acc.add(m).expect("letter matrices share shape"),
        )
    }

    /// `λ·μ(w)`.
    pub fn prefix_vector(&self, word: &[usize]) -> Vector {
        word.iter().fold(self.initial.clone(), |v, &a| {
            v.vec_mat(&self.matrices[a])
                .expect("letter matrices share shape")
        })
    }

    pub fn coefficient_of(&self, word: &[usize]) -> Scalar {
        self.prefix_vector(word)
            .dot(&self.terminal)
            .expect("λ and ν share length")
    }

    /// The coefficient `λ·μ(w)·ν` of a word.
    pub fn coefficient(&self, word: &str) -> Result<Scalar> {
        Ok(self.coefficient_of(&self.alphabet.encode(word)?))
    }

    pub fn embed(&self, to: Semiring) -> Result<LinearRepresentation> {
        Ok(LinearRepresentation {
            alphabet: self.alphabet.clone(),
            initial: self.initial.embed(to)?,
            matrices: self
                .matrices
                .iter()
                .map(|m| m.embed(to))
                .collect::<Result<_>>()?,
            terminal: self.terminal.embed(to)?,
        })
    }

    pub fn with_initial(&self, initial: Vector) -> Result<LinearRepresentation> {
        LinearRepresentation::new(
            self.alphabet.clone(),
            initial,
            self.matrices.clone(),
            self.terminal.clone(),
        )
    }

    fn check_alphabet(&self, other: &LinearRepresentation) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(
                self.alphabet.to_string(),
                other.alphabet.to_string(),
            ));
        }
        Ok(())
    }

    /// Coefficient-wise product, realised by tensoring the two representations.
    pub fn hadamard(&self, other: &LinearRepresentation) -> Result<LinearRepresentation> {
        self.check_alphabet(other)?;
        if self.semiring() != other.semiring() {
            return Err(Error::SemiringMismatch {
                left: self.semiring(),
                right: other.semiring(),
            });
        }
        LinearRepresentation::new(
            self.alphabet.clone(),
            self.initial.kronecker(&other.initial)?,
            self.matrices
                .iter()
                .zip(&other.matrices)
                .map(|(a, b)| a.kronecker(b))
                .collect::<Result<_>>()?,
            self.terminal.kronecker(&other.terminal)?,
        )
    }

    /// Direct sum realising the difference of two series, over Z (or Q when
    /// either side is rational).
    pub fn difference(&self, other: &LinearRepresentation) -> Result<LinearRepresentation> {
        self.check_alphabet(other)?;
        let ring = self.semiring().join(other.semiring()).join(Semiring::Z);
        let left = self.embed(ring)?;
        let right = other.embed(ring)?;
        LinearRepresentation::new(
            self.alphabet.clone(),
            left.initial.concat(&right.initial.negated()?)?,
            left.matrices
                .iter()
                .zip(&right.matrices)
                .map(|(a, b)| a.direct_sum(b))
                .collect::<Result<_>>()?,
            left.terminal.concat(&right.terminal)?,
        )
    }

    /// Drops coordinates that are not reachable from `λ` or cannot reach `ν`.
    /// Such coordinates contribute nothing to any coefficient.
    pub fn trim(&self) -> LinearRepresentation {
        let n = self.dimension();
        let mut edges = Vec::new();
        for m in &self.matrices {
            for i in 0..n {
                for j in 0..n {
                    if !num_traits::Zero::is_zero(m.get(i, j)) {
                        edges.push((i, j));
                    }
                }
            }
        }
        let starts: BTreeSet<usize> = self.initial.support().into_iter().collect();
        let ends: BTreeSet<usize> = self.terminal.support().into_iter().collect();
        let forward = crate::automata::reach(n, &starts, edges.iter().copied());
        let backward = crate::automata::reach(n, &ends, edges.iter().map(|&(i, j)| (j, i)));
        let keep: Vec<usize> = (0..n).filter(|&i| forward[i] && backward[i]).collect();
        LinearRepresentation {
            alphabet: self.alphabet.clone(),
            initial: self.initial.select(&keep),
            matrices: self
                .matrices
                .iter()
                .map(|m| m.select(&keep, &keep))
                .collect(),
            terminal: self.terminal.select(&keep),
        }
    }

    pub fn to_document(&self) -> SeriesDocument {
        let strings = |v: &Vector| v.entries().iter().map(format_rational).collect();
        SeriesDocument {
            semiring: self.semiring().to_string(),
            dimension: self.dimension(),
            alphabet: self
                .alphabet
                .letters()
                .iter()
                .map(char::to_string)
                .collect(),
            initial: strings(&self.initial),
            matrices: self
                .matrices
                .iter()
                .enumerate()
                .map(|(a, m)| LetterMatrix {
                    letter: self.alphabet.letter(a).to_string(),
                    rows: (0..m.rows())
                        .map(|i| m.row(i).iter().map(format_rational).collect())
                        .collect(),
                })
                .collect(),
            terminal: strings(&self.terminal),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("document serialises")
    }

    pub fn from_json(text: &str) -> Result<LinearRepresentation> {
        let doc: SeriesDocument =
            serde_json::from_str(text).map_err(|e| Error::SeriesFormat(e.to_string()))?;
        doc.to_representation()
    }
}

/// Serialised form of a [`LinearRepresentation`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDocument {
    pub semiring: String,
    pub dimension: usize,
    pub alphabet: Vec<String>,
    pub initial: Vec<String>,
    pub matrices: Vec<LetterMatrix>,
    #[serde(rename = "final")]
    pub terminal: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterMatrix {
    pub letter: String,
    pub rows: Vec<Vec<String>>,
}

fn single_char(s: &str) -> Result<char> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(Error::SeriesFormat(format!(
            "letter {s:?} is not a single character"
        ))),
    }
}

impl SeriesDocument {
    pub fn to_representation(&self) -> Result<LinearRepresentation> {
        let semiring: Semiring = self.semiring.parse()?;
        let alphabet = OrderedAlphabet::new(
            self.alphabet
                .iter()
                .map(|s| single_char(s))
                .collect::<Result<Vec<_>>>()?,
        )?;
        let n = self.dimension;
        let vector = |orientation, values: &[String], what: &str| -> Result<Vector> {
            if values.len() != n {
                return Err(Error::SeriesFormat(format!(
                    "{what} has {} entries, expected {n}",
                    values.len()
                )));
            }
            Vector::new(
                orientation,
                semiring,
                values
                    .iter()
                    .map(|v| parse_rational(v))
                    .collect::<Result<_>>()?,
            )
        };
        let initial = vector(Orientation::Row, &self.initial, "initial")?;
        let terminal = vector(Orientation::Column, &self.terminal, "final")?;
        let mut matrices: Vec<Option<Matrix>> = vec![None; alphabet.len()];
        for lm in &self.matrices {
            let letter = single_char(&lm.letter)?;
            let index = alphabet.index(letter).ok_or(Error::ForeignLetter(letter))?;
            if lm.rows.len() != n || lm.rows.iter().any(|r| r.len() != n) {
                return Err(Error::SeriesFormat(format!(
                    "matrix of {letter:?} is not {n}x{n}"
                )));
            }
            let entries = lm
                .rows
                .iter()
                .flatten()
                .map(|v| parse_rational(v))
                .collect::<Result<_>>()?;
            if matrices[index]
                .replace(Matrix::new(semiring, n, n, entries)?)
                .is_some()
            {
                return Err(Error::SeriesFormat(format!("two matrices for {letter:?}")));
            }
        }
        let matrices = matrices
            .into_iter()
            .enumerate()
            .map(|(a, m)| {
                m.ok_or_else(|| {
                    Error::SeriesFormat(format!("no matrix for {:?}", alphabet.letter(a)))
                })
            })
            .collect::<Result<_>>()?;
        LinearRepresentation::new(alphabet, initial, matrices, terminal)
    }
}
