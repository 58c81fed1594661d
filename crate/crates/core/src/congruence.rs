//! Automata recognising the representations of sets of numbers.
//!
//! For a progression `pN + r` the automaton runs the value recurrences with
//! `γ` reduced modulo `p`: its states are pairs `(α(w), γ(w) mod p)`. A
//! deterministic system of dimension `k` yields at most `k·p^k` states, an
//! unambiguous one at most `2^k·p^k`.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::ans::AnsSystem;
use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Vector};

/// The progression `modulus·N + residue`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CongruenceSpec {
    modulus: u64,
    residue: u64,
}

impl CongruenceSpec {
    pub fn new(modulus: u64, residue: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidCongruence(
                "modulus must be at least 1".into(),
            ));
        }
        if residue >= modulus {
            return Err(Error::InvalidCongruence(format!(
                "residue {residue} is not below modulus {modulus}"
            )));
        }
        Ok(CongruenceSpec { modulus, residue })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn contains(&self, n: &BigUint) -> bool {
        n.mod_floor(&BigUint::from(self.modulus)) == BigUint::from(self.residue)
    }
}

/// A finite union of progressions, plus finitely many extra numbers and
/// minus finitely many excluded ones.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RecognizableSetSpec {
    progressions: Vec<CongruenceSpec>,
    include: BTreeSet<BigUint>,
    exclude: BTreeSet<BigUint>,
}

impl RecognizableSetSpec {
    pub fn new(
        progressions: Vec<CongruenceSpec>,
        include: impl IntoIterator<Item = BigUint>,
        exclude: impl IntoIterator<Item = BigUint>,
    ) -> Result<Self> {
        let include: BTreeSet<BigUint> = include.into_iter().collect();
        let exclude: BTreeSet<BigUint> = exclude.into_iter().collect();
        if let Some(n) = include.intersection(&exclude).next() {
            return Err(Error::InvalidCongruence(format!(
                "{n} is both included and excluded"
            )));
        }
        Ok(RecognizableSetSpec {
            progressions,
            include,
            exclude,
        })
    }

    pub fn progressions(&self) -> &[CongruenceSpec] {
        &self.progressions
    }

    pub fn contains(&self, n: &BigUint) -> bool {
        if self.exclude.contains(n) {
            return false;
        }
        self.include.contains(n) || self.progressions.iter().any(|p| p.contains(n))
    }
}

/// `k·p^k`, saturating.
pub fn deterministic_bound(k: usize, modulus: u64) -> u64 {
    power(modulus, k).saturating_mul(k as u64)
}

/// `2^k·p^k`, saturating.
pub fn unambiguous_bound(k: usize, modulus: u64) -> u64 {
    power(modulus, k).saturating_mul(power(2, k))
}

fn power(base: u64, exponent: usize) -> u64 {
    u32::try_from(exponent)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .unwrap_or(u64::MAX)
}

fn small_vector(v: &Vector) -> Vec<u64> {
    v.to_u64s()
        .expect("characteristic representation has 0/1 entries")
}

fn reduced_rows(m: &Matrix, modulus: u64) -> Vec<Vec<u64>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|e| {
                    let r = e.numer().mod_floor(&modulus.into());
                    r.to_u64().expect("reduced below the modulus")
                })
                .collect()
        })
        .collect()
}

fn row_times(row: &[u64], m: &[Vec<u64>], modulus: Option<u64>) -> Vec<u64> {
    let cols = m.first().map_or(0, Vec::len);
    let mut out = vec![0u64; cols];
    for (i, &x) in row.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, o) in out.iter_mut().enumerate() {
            let y = m[i][j];
            if y != 0 {
                *o = match modulus {
                    Some(p) => ((*o as u128 + x as u128 * y as u128) % p as u128) as u64,
                    None => *o + x * y,
                };
            }
        }
    }
    out
}

fn run_construction(system: &AnsSystem, spec: CongruenceSpec, bound: u64) -> Result<Dfa> {
    let p = spec.modulus;
    let rep = system.linear_representation();
    let k = system.dimension();
    let letters = system.alphabet().len();
    let lambda = small_vector(rep.initial());
    let nu = small_vector(rep.terminal());
    let lambda_mod: Vec<u64> = lambda.iter().map(|x| x % p).collect();
    let mu: Vec<Vec<Vec<u64>>> = rep
        .matrices()
        .iter()
        .map(|m| (0..k).map(|i| small_vector(&row_of(m, i))).collect())
        .collect();
    let sigma_below: Vec<Vec<Vec<u64>>> = (0..letters)
        .map(|a| reduced_rows(system.sigma_below(a), p))
        .collect();
    let sigma = reduced_rows(system.sigma(), p);

    type State = (Vec<u64>, Vec<u64>);
    let start: State = (lambda.clone(), vec![0; k]);
    let mut index: HashMap<State, usize> = HashMap::from([(start.clone(), 0)]);
    let mut states = vec![start];
    let mut transitions = Vec::new();
    let mut i = 0;
    while i < states.len() {
        let (alpha, delta) = states[i].clone();
        for a in 0..letters {
            let next_alpha = row_times(&alpha, &mu[a], None);
            if next_alpha.iter().all(|&x| x == 0) {
                continue;
            }
            if next_alpha.iter().any(|&x| x > 1) {
                return Err(Error::Internal(
                    "path count above 1 in an unambiguous system".into(),
                ));
            }
            let beta = row_times(&alpha, &sigma_below[a], Some(p));
            let carried = row_times(&delta, &sigma, Some(p));
            let next_delta = (0..k)
                .map(|j| (lambda_mod[j] + beta[j] + carried[j]) % p)
                .collect();
            let target = (next_alpha, next_delta);
            let id = *index.entry(target.clone()).or_insert_with(|| {
                states.push(target);
                states.len() - 1
            });
            transitions.push((i, a, id));
        }
        i += 1;
    }
    if states.len() as u64 > bound {
        return Err(Error::Internal(format!(
            "{} states exceed the bound {bound}",
            states.len()
        )));
    }

    let dot = |x: &[u64]| x.iter().zip(&nu).map(|(a, b)| a * b).sum::<u64>();
    let finals = states
        .iter()
        .enumerate()
        .filter(|(_, (alpha, delta))| dot(alpha) == 1 && dot(delta) % p == spec.residue)
        .map(|(q, _)| q);
    Dfa::new(
        system.alphabet().clone(),
        states.len(),
        0,
        finals,
        transitions,
    )
}

fn row_of(m: &Matrix, i: usize) -> Vector {
    Vector::new(
        crate::exactalg::Orientation::Row,
        m.semiring(),
        m.row(i).to_vec(),
    )
    .expect("row of a valid matrix")
}

/// The automaton of `{representation(n) : n ≡ r mod p}` for a system built
/// on a deterministic automaton; at most `k·p^k` states, all reachable.
pub fn congruence_dfa(system: &AnsSystem, spec: CongruenceSpec) -> Result<Dfa> {
    if !system.is_deterministic() {
        return Err(Error::NotDeterministic);
    }
    run_construction(
        system,
        spec,
        deterministic_bound(system.dimension(), spec.modulus),
    )
}

/// Same language for any unambiguous system; at most `2^k·p^k` states.
pub fn congruence_dfa_unambiguous(system: &AnsSystem, spec: CongruenceSpec) -> Result<Dfa> {
    run_construction(
        system,
        spec,
        unambiguous_bound(system.dimension(), spec.modulus),
    )
}

/// Minimal automaton of the representations of a recognisable set of numbers.
pub fn recognizable_set_dfa(system: &AnsSystem, spec: &RecognizableSetSpec) -> Result<Dfa> {
    let alphabet = system.alphabet().clone();
    let mut dfa = Dfa::empty(alphabet.clone());
    for &progression in &spec.progressions {
        let part = congruence_dfa_unambiguous(system, progression)?.minimize();
        dfa = dfa.union(&part)?.minimize();
    }
    let mut unranker = crate::ans::Unranker::new(system);
    let words =
        |set: &BTreeSet<BigUint>, unranker: &mut crate::ans::Unranker| -> Result<Vec<Vec<usize>>> {
            set.iter().map(|n| unranker.unrank(n)).collect()
        };
    let included = words(&spec.include, &mut unranker)?;
    if !included.is_empty() {
        dfa = dfa.union(&Dfa::from_words(
            alphabet.clone(),
            included.iter().map(Vec::as_slice),
        ))?;
    }
    let excluded = words(&spec.exclude, &mut unranker)?;
    if !excluded.is_empty() {
        dfa = dfa.difference(&Dfa::from_words(
            alphabet,
            excluded.iter().map(Vec::as_slice),
        ))?;
    }
    Ok(dfa.minimize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::OrderedAlphabet;

    fn l1() -> AnsSystem {
        AnsSystem::from_regex("a*(ba*ba*)*", &OrderedAlphabet::parse("ab").unwrap()).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(CongruenceSpec::new(0, 0).is_err());
        assert!(CongruenceSpec::new(3, 3).is_err());
        assert!(CongruenceSpec::new(3, 2).is_ok());
        let n = |x: u32| BigUint::from(x);
        assert!(RecognizableSetSpec::new(vec![], [n(1)], [n(1)]).is_err());
        let s = RecognizableSetSpec::new(vec![CongruenceSpec::new(2, 0).unwrap()], [n(3)], [n(4)])
            .unwrap();
        assert!(s.contains(&n(3)) && s.contains(&n(6)) && !s.contains(&n(4)) && !s.contains(&n(5)));
    }

    #[test]
    fn three_n_plus_one() {
        let dfa = congruence_dfa(&l1(), CongruenceSpec::new(3, 1).unwrap()).unwrap();
        assert!(dfa.states() as u64 <= deterministic_bound(2, 3));
        assert!(dfa.accepts_str("a").unwrap());
        assert!(dfa.accepts_str("bba").unwrap());
        assert!(!dfa.accepts_str("aa").unwrap());
    }

    #[test]
    fn modulus_one_gives_the_language() {
        let sys = l1();
        let all = congruence_dfa(&sys, CongruenceSpec::new(1, 0).unwrap()).unwrap();
        assert_eq!(all.minimize(), sys.language_dfa());
    }

    #[test]
    fn bounds() {
        assert_eq!(deterministic_bound(2, 3), 18);
        assert_eq!(unambiguous_bound(2, 3), 36);
        assert_eq!(deterministic_bound(100, 10), u64::MAX);
    }

    #[test]
    fn finite_parts() {
        let sys = l1();
        let n = |x: u32| BigUint::from(x);
        let spec = RecognizableSetSpec::new(vec![], [n(0), n(4)], []).unwrap();
        let dfa = recognizable_set_dfa(&sys, &spec).unwrap();
        let expected = Dfa::from_words(sys.alphabet().clone(), [&[][..], &[0, 0, 0][..]]);
        assert!(dfa.language_eq(&expected));
        let empty = recognizable_set_dfa(&sys, &RecognizableSetSpec::default()).unwrap();
        assert!(empty.is_empty());
    }
}
