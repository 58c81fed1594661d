use std::collections::{BTreeSet, HashMap, VecDeque};

use super::nfa::{has_cycle, reach};
use super::{Nfa, OrderedAlphabet};
use crate::error::{Error, Result};

/// Deterministic automaton with a partial transition function.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: OrderedAlphabet,
    initial: usize,
    finals: Vec<bool>,
    delta: Vec<Vec<Option<usize>>>,
}

impl Dfa {
    pub fn new(
        alphabet: OrderedAlphabet,
        states: usize,
        initial: usize,
        finals: impl IntoIterator<Item = usize>,
        transitions: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self> {
        if initial >= states {
            return Err(Error::InvalidAutomaton(format!(
                "initial state {initial} out of range"
            )));
        }
        let mut is_final = vec![false; states];
        for f in finals {
            *is_final.get_mut(f).ok_or_else(|| {
                Error::InvalidAutomaton(format!("final state {f} out of range"))
            })? = true;
        }
        let mut delta = vec![vec![None; alphabet.len()]; states];
        for (p, a, q) in transitions {
            if p >= states || q >= states || a >= alphabet.len() {
                return Err(Error::InvalidAutomaton(format!(
                    "transition ({p}, {a}, {q}) out of range"
                )));
            }
            match delta[p][a] {
                Some(old) if old != q => {
                    return Err(Error::InvalidAutomaton(format!(
                        "state {p} has two successors on letter {:?}",
                        alphabet.letter(a)
                    )))
                }
                _ => delta[p][a] = Some(q),
            }
        }
        Ok(Dfa {
            alphabet,
            initial,
            finals: is_final,
            delta,
        })
    }

    /// The one-state automaton of the empty language.
    pub fn empty(alphabet: OrderedAlphabet) -> Self {
        let width = alphabet.len();
        Dfa {
            alphabet,
            initial: 0,
            finals: vec![false],
            delta: vec![vec![None; width]],
        }
    }

    /// Interprets an NFA with a single initial state and no nondeterminism.
    pub fn from_deterministic_nfa(nfa: &Nfa) -> Result<Self> {
        if nfa.initials().len() != 1 {
            return Err(Error::InvalidAutomaton(
                "a DFA needs exactly one initial state".into(),
            ));
        }
        let initial = *nfa.initials().iter().next().expect("one initial");
        Dfa::new(
            nfa.alphabet().clone(),
            nfa.states(),
            initial,
            nfa.finals().iter().copied(),
            nfa.transitions(),
        )
    }

    /// Trie automaton accepting exactly the given words.
    pub fn from_words<'a>(
        alphabet: OrderedAlphabet,
        words: impl IntoIterator<Item = &'a [usize]>,
    ) -> Self {
        let mut dfa = Dfa::empty(alphabet);
        for w in words {
            let mut q = dfa.initial;
            for &a in w {
                q = match dfa.delta[q][a] {
                    Some(next) => next,
                    None => {
                        let next = dfa.finals.len();
                        dfa.finals.push(false);
                        dfa.delta.push(vec![None; dfa.alphabet.len()]);
                        dfa.delta[q][a] = Some(next);
                        next
                    }
                };
            }
            dfa.finals[q] = true;
        }
        dfa
    }

    pub fn alphabet(&self) -> &OrderedAlphabet {
        &self.alphabet
    }

    pub fn states(&self) -> usize {
        self.finals.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals[state]
    }

    pub fn finals(&self) -> impl Iterator<Item = usize> + '_ {
        self.finals
            .iter()
            .enumerate()
            .filter(|(_, f)| **f)
            .map(|(q, _)| q)
    }

    pub fn next(&self, state: usize, letter: usize) -> Option<usize> {
        self.delta[state][letter]
    }

    pub fn transitions(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.delta.iter().enumerate().flat_map(|(p, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(a, q)| q.map(|q| (p, a, q)))
        })
    }

    pub fn transition_count(&self) -> usize {
        self.transitions().count()
    }

    /// State reached from the initial state, if the run does not block.
    pub fn run(&self, word: &[usize]) -> Option<usize> {
        word.iter().try_fold(self.initial, |q, &a| self.delta[q][a])
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        self.run(word).is_some_and(|q| self.finals[q])
    }

    pub fn accepts_str(&self, word: &str) -> Result<bool> {
        Ok(self.accepts(&self.alphabet.encode(word)?))
    }

    pub fn to_nfa(&self) -> Nfa {
        Nfa::new(
            self.alphabet.clone(),
            self.states(),
            self.transitions(),
            [self.initial],
            self.finals(),
        )
        .expect("a DFA is a valid NFA")
    }

    /// Subset construction; only nonempty reachable subsets become states,
    /// numbered in breadth-first order.
    pub fn determinize(nfa: &Nfa) -> Dfa {
        let adj = nfa.adjacency();
        let width = nfa.alphabet().len();
        let start: BTreeSet<usize> = nfa.initials().clone();
        let mut index: HashMap<BTreeSet<usize>, usize> = HashMap::new();
        let mut subsets = vec![start.clone()];
        index.insert(start, 0);
        let mut delta: Vec<Vec<Option<usize>>> = Vec::new();
        let mut i = 0;
        while i < subsets.len() {
            let mut row = vec![None; width];
            for (a, slot) in row.iter_mut().enumerate() {
                let target: BTreeSet<usize> = subsets[i]
                    .iter()
                    .flat_map(|&p| adj[p][a].iter().copied())
                    .collect();
                if target.is_empty() {
                    continue;
                }
                let id = *index.entry(target.clone()).or_insert_with(|| {
                    subsets.push(target);
                    subsets.len() - 1
                });
                *slot = Some(id);
            }
            delta.push(row);
            i += 1;
        }
        let finals = subsets
            .iter()
            .map(|s| s.iter().any(|q| nfa.finals().contains(q)))
            .collect();
        Dfa {
            alphabet: nfa.alphabet().clone(),
            initial: 0,
            finals,
            delta,
        }
    }

    fn useful_states(&self) -> Vec<bool> {
        let edges: Vec<(usize, usize)> = self.transitions().map(|(p, _, q)| (p, q)).collect();
        let forward = reach(
            self.states(),
            &BTreeSet::from([self.initial]),
            edges.iter().copied(),
        );
        let finals: BTreeSet<usize> = self.finals().collect();
        let backward = reach(self.states(), &finals, edges.iter().map(|&(p, q)| (q, p)));
        forward
            .iter()
            .zip(&backward)
            .map(|(f, b)| *f && *b)
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        !self.useful_states()[self.initial]
    }

    /// True iff the trim part contains a cycle.
    pub fn is_infinite(&self) -> bool {
        let useful = self.useful_states();
        has_cycle(
            self.states(),
            self.transitions()
                .filter(|&(p, _, q)| useful[p] && useful[q])
                .map(|(p, _, q)| (p, q)),
        )
    }

    /// The minimal trim DFA of the same language.
    ///
    /// States are numbered breadth-first from the initial state, following
    /// edges in alphabet order, so equal languages give identical automata.
    pub fn minimize(&self) -> Dfa {
        let useful = self.useful_states();
        if !useful[self.initial] {
            return Dfa::empty(self.alphabet.clone());
        }
        let states: Vec<usize> = (0..self.states()).filter(|&q| useful[q]).collect();
        let step = |q: usize, a: usize| self.delta[q][a].filter(|&t| useful[t]);

        // Moore refinement; a missing edge acts as its own class.
        let mut class: Vec<usize> = vec![usize::MAX; self.states()];
        for &q in &states {
            class[q] = usize::from(self.finals[q]);
        }
        let mut count = 0;
        loop {
            let mut signatures: HashMap<(usize, Vec<Option<usize>>), usize> = HashMap::new();
            let mut next = vec![usize::MAX; self.states()];
            for &q in &states {
                let sig = (
                    class[q],
                    (0..self.alphabet.len())
                        .map(|a| step(q, a).map(|t| class[t]))
                        .collect(),
                );
                let fresh = signatures.len();
                next[q] = *signatures.entry(sig).or_insert(fresh);
            }
            let classes = signatures.len();
            class = next;
            if classes == count {
                break;
            }
            count = classes;
        }

        // Breadth-first canonical numbering of the classes.
        let representative: HashMap<usize, usize> =
            states.iter().rev().map(|&q| (class[q], q)).collect();
        let mut number: HashMap<usize, usize> = HashMap::new();
        let mut order = vec![class[self.initial]];
        number.insert(class[self.initial], 0);
        let mut queue = VecDeque::from([class[self.initial]]);
        let mut delta = Vec::new();
        let mut finals = Vec::new();
        while let Some(c) = queue.pop_front() {
            let q = representative[&c];
            let mut row = vec![None; self.alphabet.len()];
            for (a, slot) in row.iter_mut().enumerate() {
                if let Some(t) = step(q, a) {
                    let tc = class[t];
                    let id = *number.entry(tc).or_insert_with(|| {
                        order.push(tc);
                        queue.push_back(tc);
                        order.len() - 1
                    });
                    *slot = Some(id);
                }
            }
            delta.push(row);
            finals.push(self.finals[q]);
        }
        Dfa {
            alphabet: self.alphabet.clone(),
            initial: 0,
            finals,
            delta,
        }
    }

    /// Whether both automata accept the same language.
    pub fn language_eq(&self, other: &Dfa) -> bool {
        self.alphabet == other.alphabet && self.minimize() == other.minimize()
    }

    /// Synchronous product combining acceptance with `keep`.
    ///
    /// Missing transitions behave as an implicit rejecting sink on either side.
    pub fn product(&self, other: &Dfa, keep: impl Fn(bool, bool) -> bool) -> Result<Dfa> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(
                self.alphabet.to_string(),
                other.alphabet.to_string(),
            ));
        }
        type Pair = (Option<usize>, Option<usize>);
        let start: Pair = (Some(self.initial), Some(other.initial));
        let mut index: HashMap<Pair, usize> = HashMap::from([(start, 0)]);
        let mut pairs = vec![start];
        let mut delta = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            let mut row = vec![None; self.alphabet.len()];
            for (a, slot) in row.iter_mut().enumerate() {
                let target = (
                    p.and_then(|p| self.delta[p][a]),
                    q.and_then(|q| other.delta[q][a]),
                );
                if target == (None, None) {
                    continue;
                }
                let id = *index.entry(target).or_insert_with(|| {
                    pairs.push(target);
                    pairs.len() - 1
                });
                *slot = Some(id);
            }
            delta.push(row);
            i += 1;
        }
        let finals = pairs
            .iter()
            .map(|&(p, q)| {
                keep(
                    p.is_some_and(|p| self.finals[p]),
                    q.is_some_and(|q| other.finals[q]),
                )
            })
            .collect();
        Ok(Dfa {
            alphabet: self.alphabet.clone(),
            initial: 0,
            finals,
            delta,
        })
    }

    pub fn union(&self, other: &Dfa) -> Result<Dfa> {
        self.product(other, |x, y| x || y)
    }

    pub fn intersection(&self, other: &Dfa) -> Result<Dfa> {
        self.product(other, |x, y| x && y)
    }

    pub fn difference(&self, other: &Dfa) -> Result<Dfa> {
        self.product(other, |x, y| x && !y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::words_up_to;

    fn ab() -> OrderedAlphabet {
        OrderedAlphabet::parse("ab").unwrap()
    }

    fn even_b() -> Dfa {
        Dfa::new(
            ab(),
            2,
            0,
            [0],
            [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)],
        )
        .unwrap()
    }

    #[test]
    fn rejects_nondeterminism() {
        assert!(Dfa::new(ab(), 2, 0, [0], [(0, 0, 0), (0, 0, 1)]).is_err());
        assert!(Dfa::new(ab(), 1, 1, [0], []).is_err());
    }

    #[test]
    fn minimize_drops_unreachable_states() {
        let mut t: Vec<_> = even_b().transitions().collect();
        t.extend([(2, 0, 0), (2, 1, 3), (3, 0, 3)]);
        let d = Dfa::new(ab(), 4, 0, [0, 3], t).unwrap();
        let m = d.minimize();
        assert_eq!(m.states(), 2);
        assert_eq!(m, even_b());
    }

    #[test]
    fn minimize_is_idempotent() {
        let m = even_b().minimize();
        assert_eq!(m.minimize(), m);
    }

    #[test]
    fn empty_language_minimizes_to_one_state() {
        let d = Dfa::new(ab(), 2, 0, [], [(0, 0, 1)]).unwrap();
        assert!(d.is_empty());
        assert_eq!(d.minimize(), Dfa::empty(ab()));
        assert!(!d.is_infinite());
    }

    #[test]
    fn finite_languages() {
        let eps_a = Dfa::from_words(ab(), [&[][..], &[0][..]]);
        assert!(!eps_a.is_infinite());
        assert!(eps_a.accepts(&[]));
        assert!(eps_a.accepts(&[0]));
        assert!(!eps_a.accepts(&[0, 0]));
        assert!(even_b().is_infinite());
    }

    #[test]
    fn boolean_operations() {
        let evens = even_b();
        let a_star = Dfa::new(ab(), 1, 0, [0], [(0, 0, 0)]).unwrap();
        let inter = evens.intersection(&a_star).unwrap();
        let diff = evens.difference(&a_star).unwrap();
        let uni = a_star.union(&evens).unwrap();
        for w in words_up_to(2, 6) {
            let (x, y) = (evens.accepts(&w), a_star.accepts(&w));
            assert_eq!(inter.accepts(&w), x && y);
            assert_eq!(diff.accepts(&w), x && !y);
            assert_eq!(uni.accepts(&w), x || y);
        }
        assert!(uni.language_eq(&evens));
    }
}
