use std::collections::{BTreeSet, VecDeque};

use num_rational::BigRational;
use num_traits::One;

use super::OrderedAlphabet;
use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Orientation, Semiring, Vector};
use crate::series::LinearRepresentation;

/// Boolean automaton without ε-transitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: OrderedAlphabet,
    states: usize,
    transitions: BTreeSet<(usize, usize, usize)>,
    initials: BTreeSet<usize>,
    finals: BTreeSet<usize>,
}

impl Nfa {
    /// Transitions are `(source, letter index, target)` triples.
    pub fn new(
        alphabet: OrderedAlphabet,
        states: usize,
        transitions: impl IntoIterator<Item = (usize, usize, usize)>,
        initials: impl IntoIterator<Item = usize>,
        finals: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let transitions: BTreeSet<_> = transitions.into_iter().collect();
        let initials: BTreeSet<_> = initials.into_iter().collect();
        let finals: BTreeSet<_> = finals.into_iter().collect();
        for &(p, a, q) in &transitions {
            if p >= states || q >= states {
                return Err(Error::InvalidAutomaton(format!(
                    "transition {p} -> {q} refers to a state >= {states}"
                )));
            }
            if a >= alphabet.len() {
                return Err(Error::InvalidAutomaton(format!(
                    "letter index {a} out of range"
                )));
            }
        }
        if let Some(&s) = initials.iter().chain(&finals).find(|&&s| s >= states) {
            return Err(Error::InvalidAutomaton(format!("state {s} out of range")));
        }
        Ok(Nfa {
            alphabet,
            states,
            transitions,
            initials,
            finals,
        })
    }

    pub fn alphabet(&self) -> &OrderedAlphabet {
        &self.alphabet
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn transitions(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.transitions.iter().copied()
    }

    pub fn initials(&self) -> &BTreeSet<usize> {
        &self.initials
    }

    pub fn finals(&self) -> &BTreeSet<usize> {
        &self.finals
    }

    /// Successor lists indexed by `[state][letter]`.
    pub(crate) fn adjacency(&self) -> Vec<Vec<Vec<usize>>> {
        let mut adj = vec![vec![Vec::new(); self.alphabet.len()]; self.states];
        for &(p, a, q) in &self.transitions {
            adj[p][a].push(q);
        }
        adj
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        let adj = self.adjacency();
        let mut current: BTreeSet<usize> = self.initials.clone();
        for &a in word {
            current = current
                .iter()
                .flat_map(|&p| adj[p][a].iter().copied())
                .collect();
            if current.is_empty() {
                return false;
            }
        }
        current.iter().any(|q| self.finals.contains(q))
    }

    pub fn accepts_str(&self, word: &str) -> Result<bool> {
        Ok(self.accepts(&self.alphabet.encode(word)?))
    }

    /// States that are both accessible and co-accessible.
    pub fn useful_states(&self) -> Vec<bool> {
        let forward = reach(
            self.states,
            &self.initials,
            self.transitions.iter().map(|&(p, _, q)| (p, q)),
        );
        let backward = reach(
            self.states,
            &self.finals,
            self.transitions.iter().map(|&(p, _, q)| (q, p)),
        );
        forward
            .iter()
            .zip(&backward)
            .map(|(f, b)| *f && *b)
            .collect()
    }

    /// Removes useless states, keeping the relative order of the others.
    pub fn trim(&self) -> Nfa {
        let useful = self.useful_states();
        let mut renumber = vec![usize::MAX; self.states];
        let mut next = 0;
        for (s, &u) in useful.iter().enumerate() {
            if u {
                renumber[s] = next;
                next += 1;
            }
        }
        let keep = |s: &&usize| useful[**s];
        Nfa {
            alphabet: self.alphabet.clone(),
            states: next,
            transitions: self
                .transitions
                .iter()
                .filter(|(p, _, q)| useful[*p] && useful[*q])
                .map(|&(p, a, q)| (renumber[p], a, renumber[q]))
                .collect(),
            initials: self
                .initials
                .iter()
                .filter(keep)
                .map(|&s| renumber[s])
                .collect(),
            finals: self
                .finals
                .iter()
                .filter(keep)
                .map(|&s| renumber[s])
                .collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        !self.useful_states().into_iter().any(|u| u)
    }

    /// True iff the trim part has a cycle, i.e. the language is infinite.
    pub fn is_infinite(&self) -> bool {
        let trimmed = self.trim();
        has_cycle(
            trimmed.states,
            trimmed.transitions.iter().map(|&(p, _, q)| (p, q)),
        )
    }

    /// True iff no word labels two distinct accepting computations.
    ///
    /// A second accepting path diverges from the first at some state pair
    /// `(p, q)` with `p != q`; such a pair is accessible and co-accessible in
    /// the self-product exactly when the automaton is ambiguous.
    pub fn is_unambiguous(&self) -> bool {
        let n = self.states;
        let pair = |p: usize, q: usize| p * n + q;
        let adj = self.adjacency();
        let mut edges = Vec::new();
        for p in 0..n {
            for q in 0..n {
                for (from_p, from_q) in adj[p].iter().zip(&adj[q]) {
                    for &p2 in from_p {
                        for &q2 in from_q {
                            edges.push((pair(p, q), pair(p2, q2)));
                        }
                    }
                }
            }
        }
        let starts: BTreeSet<usize> = self
            .initials
            .iter()
            .flat_map(|&i| self.initials.iter().map(move |&j| pair(i, j)))
            .collect();
        let ends: BTreeSet<usize> = self
            .finals
            .iter()
            .flat_map(|&f| self.finals.iter().map(move |&g| pair(f, g)))
            .collect();
        let forward = reach(n * n, &starts, edges.iter().copied());
        let backward = reach(n * n, &ends, edges.iter().map(|&(s, t)| (t, s)));
        !(0..n)
            .flat_map(|p| (0..n).map(move |q| (p, q)))
            .any(|(p, q)| p != q && forward[pair(p, q)] && backward[pair(p, q)])
    }

    /// The N-representation counting accepting paths.
    ///
    /// For an unambiguous automaton the coefficient of `w` is 1 on the
    /// language and 0 elsewhere.
    pub fn to_linear_representation(&self) -> Result<LinearRepresentation> {
        if !self.is_unambiguous() {
            return Err(Error::Ambiguous);
        }
        Ok(self.path_count_representation())
    }

    pub(crate) fn path_count_representation(&self) -> LinearRepresentation {
        let n = self.states;
        let indicator = |orientation, set: &BTreeSet<usize>| {
            let mut v = Vector::zeros(orientation, Semiring::N, n);
            for &s in set {
                v = v
                    .add(&Vector::unit(orientation, Semiring::N, n, s))
                    .expect("same shape");
            }
            v
        };
        let mut matrices = vec![Matrix::zeros(Semiring::N, n, n); self.alphabet.len()];
        for &(p, a, q) in &self.transitions {
            let m = &mut matrices[a];
            let old = m.get(p, q).clone();
            m.set(p, q, old + BigRational::one());
        }
        LinearRepresentation::new(
            self.alphabet.clone(),
            indicator(Orientation::Row, &self.initials),
            matrices,
            indicator(Orientation::Column, &self.finals),
        )
        .expect("well-formed automaton yields a well-formed representation")
    }
}

pub(crate) fn reach(
    size: usize,
    starts: &BTreeSet<usize>,
    edges: impl Iterator<Item = (usize, usize)>,
) -> Vec<bool> {
    let mut adj = vec![Vec::new(); size];
    for (s, t) in edges {
        adj[s].push(t);
    }
    let mut seen = vec![false; size];
    let mut queue: VecDeque<usize> = starts.iter().copied().collect();
    for &s in starts {
        seen[s] = true;
    }
    while let Some(s) = queue.pop_front() {
        for &t in &adj[s] {
            if !seen[t] {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    seen
}

pub(crate) fn has_cycle(size: usize, edges: impl Iterator<Item = (usize, usize)>) -> bool {
    // Kahn's algorithm: a cycle exists iff some vertex is never freed.
    let mut adj = vec![Vec::new(); size];
    let mut indegree = vec![0usize; size];
    for (s, t) in edges {
        adj[s].push(t);
        indegree[t] += 1;
    }
    let mut queue: Vec<usize> = (0..size).filter(|&v| indegree[v] == 0).collect();
    let mut freed = 0;
    while let Some(v) = queue.pop() {
        freed += 1;
        for &t in &adj[v] {
            indegree[t] -= 1;
            if indegree[t] == 0 {
                queue.push(t);
            }
        }
    }
    freed < size
}
