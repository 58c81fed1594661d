//! Rational abstract numeration systems realised as weighted automata.
//!
//! An abstract numeration system is an infinite regular language `L` over a
//! totally ordered alphabet; the integer `n` is written as the `(n+1)`-th
//! word of `L` in radix order. This crate computes values and
//! representations of numbers, builds a linear representation of the
//! enumerating series of `L`, constructs automata for arithmetic
//! progressions of numbers, and decides whether a given N-rational series is
//! an enumerating series.
//!
//! ```
//! use ans::automata::OrderedAlphabet;
//! use ans::ans::AnsSystem;
//!
//! let ab = OrderedAlphabet::parse("ab").unwrap();
//! let even_b = AnsSystem::from_regex("a*(ba*ba*)*", &ab).unwrap();
//! assert_eq!(even_b.value("bbabb").unwrap(), 29u32.into());
//! assert_eq!(even_b.representation_u64(18).unwrap(), "aabab");
//! ```

pub mod ans;
pub mod automata;
pub mod cli;
pub mod congruence;
pub mod decision;
pub mod error;
pub mod exactalg;
pub mod series;
pub mod systems;

pub use error::{Error, Result};
