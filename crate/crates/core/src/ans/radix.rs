use std::cmp::Ordering;

use crate::automata::OrderedAlphabet;
use crate::error::Result;

/// Radix order: shorter words first, then the first differing letter decides.
pub fn radix_cmp(u: &str, v: &str, alphabet: &OrderedAlphabet) -> Result<Ordering> {
    Ok(radix_cmp_indices(
        &alphabet.encode(u)?,
        &alphabet.encode(v)?,
    ))
}

pub fn radix_cmp_indices(u: &[usize], v: &[usize]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| u.cmp(v))
}
