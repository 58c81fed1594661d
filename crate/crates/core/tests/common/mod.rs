//! Brute-force oracles shared by the integration tests. Nothing here goes
//! through the value, unranking or series code paths.

#![allow(dead_code)]

pub type Member = fn(&str) -> bool;

pub fn even_b(w: &str) -> bool {
    w.chars().all(|c| c == 'a' || c == 'b') && w.matches('b').count().is_multiple_of(2)
}

pub fn binary(w: &str) -> bool {
    w == "0" || (w.starts_with('1') && w.chars().all(|c| c == '0' || c == '1'))
}

pub fn fibonacci(w: &str) -> bool {
    binary(w) && !w.contains("11")
}

/// Every word over `letters` of length at most `max_len`, in radix order
/// for the order in which `letters` are listed.
pub fn all_words(letters: &[char], max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut level = vec![String::new()];
    for _ in 0..max_len {
        let next: Vec<String> = level
            .iter()
            .flat_map(|w| letters.iter().map(move |c| format!("{w}{c}")))
            .collect();
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

/// The words of a language up to `max_len`, in radix order; the index of a
/// word in this list is its value.
pub fn language(letters: &[char], max_len: usize, member: impl Fn(&str) -> bool) -> Vec<String> {
    all_words(letters, max_len)
        .into_iter()
        .filter(|w| member(w))
        .collect()
}

/// Radix order computed from character positions.
pub fn radix_less(u: &str, v: &str, letters: &[char]) -> bool {
    let key = |w: &str| {
        let idx: Vec<usize> = w
            .chars()
            .map(|c| letters.iter().position(|&l| l == c).unwrap())
            .collect();
        (idx.len(), idx)
    };
    key(u) < key(v)
}

use ans::automata::OrderedAlphabet;
use ans::exactalg::{Matrix, Orientation, Semiring, Vector};
use ans::series::LinearRepresentation;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

fn random_rational(rng: &mut impl Rng) -> BigRational {
    if rng.gen_bool(0.3) {
        return BigRational::from_integer(0.into());
    }
    BigRational::new(
        BigInt::from(rng.gen_range(-6..=6)),
        BigInt::from(rng.gen_range(1..=4)),
    )
}

/// A dense representation over Q with small random fractions.
pub fn random_rational_rep(
    rng: &mut impl Rng,
    alphabet: &OrderedAlphabet,
    dim: usize,
) -> LinearRepresentation {
    let mut vector = |o| {
        Vector::new(
            o,
            Semiring::Q,
            (0..dim).map(|_| random_rational(rng)).collect(),
        )
        .unwrap()
    };
    let initial = vector(Orientation::Row);
    let terminal = vector(Orientation::Column);
    let matrices = (0..alphabet.len())
        .map(|_| {
            Matrix::new(
                Semiring::Q,
                dim,
                dim,
                (0..dim * dim).map(|_| random_rational(rng)).collect(),
            )
            .unwrap()
        })
        .collect();
    LinearRepresentation::new(alphabet.clone(), initial, matrices, terminal).unwrap()
}

/// Coefficient `c` on `word`, zero elsewhere: a path of `|word| + 1` states.
pub fn single_word_rep(
    alphabet: &OrderedAlphabet,
    word: &[usize],
    semiring: Semiring,
    c: BigRational,
) -> LinearRepresentation {
    let n = word.len() + 1;
    let mut initial = Vector::unit(Orientation::Row, semiring, n, 0);
    if n == 1 {
        initial = Vector::new(Orientation::Row, semiring, vec![c.clone()]).unwrap();
    }
    let mut last = vec![BigRational::from_integer(0.into()); n];
    last[n - 1] = if n == 1 {
        BigRational::from_integer(1.into())
    } else {
        c
    };
    let terminal = Vector::new(Orientation::Column, semiring, last).unwrap();
    let matrices = (0..alphabet.len())
        .map(|a| {
            let mut entries = vec![BigRational::from_integer(0.into()); n * n];
            for (i, &x) in word.iter().enumerate() {
                if x == a {
                    entries[i * n + i + 1] = BigRational::from_integer(1.into());
                }
            }
            Matrix::new(semiring, n, n, entries).unwrap()
        })
        .collect();
    LinearRepresentation::new(alphabet.clone(), initial, matrices, terminal).unwrap()
}

/// Direct sum: the coefficient-wise sum of two series.
pub fn sum(s: &LinearRepresentation, t: &LinearRepresentation) -> LinearRepresentation {
    let q = s.semiring().join(t.semiring());
    let (s, t) = (s.embed(q).unwrap(), t.embed(q).unwrap());
    let matrices = s
        .matrices()
        .iter()
        .zip(t.matrices())
        .map(|(m, n)| m.direct_sum(n).unwrap())
        .collect();
    LinearRepresentation::new(
        s.alphabet().clone(),
        s.initial().concat(t.initial()).unwrap(),
        matrices,
        s.terminal().concat(t.terminal()).unwrap(),
    )
    .unwrap()
}
