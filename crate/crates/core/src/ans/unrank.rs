use num_bigint::BigUint;
use num_traits::Zero;

use super::AnsSystem;
use crate::error::{Error, Result};
use crate::exactalg::Vector;

/// Reusable unranking state: caches the columns `σ^j·ν`, whose entries
/// count the completions of length `j` from each state.
pub struct Unranker<'a> {
    system: &'a AnsSystem,
    completions: Vec<Vector>,
    length_counts: Vec<BigUint>,
}

impl<'a> Unranker<'a> {
    pub fn new(system: &'a AnsSystem) -> Self {
        Unranker {
            system,
            completions: vec![system.rep.terminal().clone()],
            length_counts: Vec::new(),
        }
    }

    fn completions(&mut self, length: usize) -> &Vector {
        while self.completions.len() <= length {
            let last = self.completions.last().expect("starts with ν");
            let next = self.system.sigma.mat_vec(last).expect("dimension k");
            self.completions.push(next);
        }
        &self.completions[length]
    }

    /// `|L ∩ A^length|`.
    pub fn words_of_length(&mut self, length: usize) -> BigUint {
        while self.length_counts.len() <= length {
            let l = self.length_counts.len();
            let column = self.completions(l).clone();
            let count = count(self.system.rep.initial(), &column);
            self.length_counts.push(count);
        }
        self.length_counts[length].clone()
    }

    /// The `(n+1)`-th word of the language in radix order, as letter indices.
    pub fn unrank(&mut self, n: &BigUint) -> Result<Vec<usize>> {
        let mut rank = n.clone();
        let mut length = 0;
        loop {
            let c = self.words_of_length(length);
            if rank < c {
                break;
            }
            rank -= c;
            length += 1;
        }

        let letters = self.system.alphabet().len();
        let mut alpha = self.system.rep.initial().clone();
        let mut word = Vec::with_capacity(length);
        for position in 0..length {
            let remaining = length - position - 1;
            let column = self.completions(remaining).clone();
            let mut chosen = None;
            for a in 0..letters {
                let next = alpha.vec_mat(self.system.rep.matrix(a))?;
                let block = count(&next, &column);
                if rank < block {
                    chosen = Some((a, next));
                    break;
                }
                rank -= block;
            }
            let (a, next) = chosen.ok_or_else(|| {
                Error::Internal(format!("rank {n} overruns the words of length {length}"))
            })?;
            word.push(a);
            alpha = next;
        }
        if !rank.is_zero() || alpha.dot(self.system.rep.terminal())?.is_zero() {
            return Err(Error::Internal(format!(
                "unranking {n} ended off the language"
            )));
        }
        Ok(word)
    }
}

fn count(row: &Vector, column: &Vector) -> BigUint {
    row.dot(column)
        .ok()
        .and_then(|s| s.to_biguint())
        .expect("path counts are natural numbers")
}

impl AnsSystem {
    /// The representation of `n`: the `(n+1)`-th word of the language.
    pub fn representation(&self, n: &BigUint) -> Result<String> {
        let word = Unranker::new(self).unrank(n)?;
        Ok(self.alphabet().decode(&word))
    }

    pub fn representation_u64(&self, n: u64) -> Result<String> {
        self.representation(&BigUint::from(n))
    }

    /// Representations of `start, start+1, …, start+count-1`.
    pub fn enumerate(&self, start: &BigUint, count: usize) -> Result<Vec<String>> {
        let mut unranker = Unranker::new(self);
        let mut n = start.clone();
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            out.push(self.alphabet().decode(&unranker.unrank(&n)?));
            n += 1u8;
        }
        Ok(out)
    }
}
