//! Plain-text automaton files and Graphviz export.
//!
//! ```text
//! alphabet: a b            # listing order is the letter order
//! states: 2
//! initial: 0
//! final: 0
//! trans: 0 a 0 | 0 b 1 | 1 a 1 | 1 b 0
//! ```
//!
//! `initial` and `final` take space-separated state lists, `trans` may be
//! repeated. `#` starts a comment.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{Dfa, Nfa, OrderedAlphabet};
use crate::error::{Error, Result};

fn invalid(line: usize, message: impl std::fmt::Display) -> Error {
    Error::InvalidAutomaton(format!("line {line}: {message}"))
}

fn parse_state(token: &str, line: usize) -> Result<usize> {
    token
        .parse()
        .map_err(|_| invalid(line, format!("expected a state number, found {token:?}")))
}

/// Reads an automaton file.
pub fn parse_automaton(text: &str) -> Result<Nfa> {
    let mut alphabet = None;
    let mut states = None;
    let mut initials = None;
    let mut finals = Vec::new();
    let mut raw_transitions: Vec<(usize, usize, String, usize)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| invalid(line_no, "expected `key: value`"))?;
        let value = value.trim();
        match key.trim() {
            "alphabet" => {
                let letters = value
                    .split_whitespace()
                    .map(|tok| {
                        let mut chars = tok.chars();
                        match (chars.next(), chars.next()) {
                            (Some(c), None) => Ok(c),
                            _ => Err(invalid(
                                line_no,
                                format!("letters are single characters, found {tok:?}"),
                            )),
                        }
                    })
                    .collect::<Result<Vec<char>>>()?;
                alphabet = Some(OrderedAlphabet::new(letters)?);
            }
            "states" => states = Some(parse_state(value, line_no)?),
            "initial" => {
                initials = Some(
                    value
                        .split_whitespace()
                        .map(|t| parse_state(t, line_no))
                        .collect::<Result<Vec<_>>>()?,
                )
            }
            "final" => {
                for t in value.split_whitespace() {
                    finals.push(parse_state(t, line_no)?);
                }
            }
            "trans" => {
                for triple in value.split('|').map(str::trim).filter(|t| !t.is_empty()) {
                    let parts: Vec<&str> = triple.split_whitespace().collect();
                    let [p, a, q] = parts[..] else {
                        return Err(invalid(
                            line_no,
                            format!("expected `source letter target`, found {triple:?}"),
                        ));
                    };
                    raw_transitions.push((
                        line_no,
                        parse_state(p, line_no)?,
                        a.to_string(),
                        parse_state(q, line_no)?,
                    ));
                }
            }
            other => return Err(invalid(line_no, format!("unknown key {other:?}"))),
        }
    }

    let alphabet = alphabet.ok_or_else(|| Error::InvalidAutomaton("missing `alphabet`".into()))?;
    let states = states.ok_or_else(|| Error::InvalidAutomaton("missing `states`".into()))?;
    let initials = initials.ok_or_else(|| Error::InvalidAutomaton("missing `initial`".into()))?;
    let mut transitions = Vec::with_capacity(raw_transitions.len());
    for (line_no, p, a, q) in raw_transitions {
        let mut chars = a.chars();
        let letter = match (chars.next(), chars.next()) {
            (Some(c), None) => alphabet.index(c).ok_or(Error::ForeignLetter(c))?,
            _ => return Err(invalid(line_no, format!("bad letter {a:?}"))),
        };
        transitions.push((p, letter, q));
    }
    Nfa::new(alphabet, states, transitions, initials, finals)
}

fn write_automaton(
    alphabet: &OrderedAlphabet,
    states: usize,
    initials: impl Iterator<Item = usize>,
    finals: impl Iterator<Item = usize>,
    transitions: impl Iterator<Item = (usize, usize, usize)>,
) -> String {
    let join = |it: &mut dyn Iterator<Item = usize>| {
        it.map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
    };
    let letters: Vec<String> = alphabet.letters().iter().map(char::to_string).collect();
    let mut out = String::new();
    writeln!(out, "alphabet: {}", letters.join(" ")).unwrap();
    writeln!(out, "states: {states}").unwrap();
    writeln!(out, "initial: {}", join(&mut { initials })).unwrap();
    writeln!(out, "final: {}", join(&mut { finals })).unwrap();
    let mut by_source: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for (p, a, q) in transitions {
        by_source
            .entry(p)
            .or_default()
            .push(format!("{p} {} {q}", alphabet.letter(a)));
    }
    for (_, triples) in by_source {
        writeln!(out, "trans: {}", triples.join(" | ")).unwrap();
    }
    out
}

pub fn write_dfa(dfa: &Dfa) -> String {
    write_automaton(
        dfa.alphabet(),
        dfa.states(),
        std::iter::once(dfa.initial()),
        dfa.finals(),
        dfa.transitions(),
    )
}

pub fn write_nfa(nfa: &Nfa) -> String {
    write_automaton(
        nfa.alphabet(),
        nfa.states(),
        nfa.initials().iter().copied(),
        nfa.finals().iter().copied(),
        nfa.transitions(),
    )
}

fn dot(
    alphabet: &OrderedAlphabet,
    states: usize,
    initials: &[usize],
    is_final: impl Fn(usize) -> bool,
    transitions: impl Iterator<Item = (usize, usize, usize)>,
) -> String {
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n");
    for q in 0..states {
        let shape = if is_final(q) {
            "doublecircle"
        } else {
            "circle"
        };
        writeln!(out, "  {q} [shape={shape}];").unwrap();
    }
    for &q in initials {
        writeln!(out, "  start{q} [shape=point];\n  start{q} -> {q};").unwrap();
    }
    let mut edges: BTreeMap<(usize, usize), Vec<char>> = BTreeMap::new();
    for (p, a, q) in transitions {
        edges.entry((p, q)).or_default().push(alphabet.letter(a));
    }
    for ((p, q), mut labels) in edges {
        labels.sort_by_key(|&c| alphabet.index(c));
        let label: Vec<String> = labels.iter().map(char::to_string).collect();
        writeln!(
            out,
            "  {p} -> {q} [label=\"{}\"];",
            label.join(",").replace('"', "\\\"")
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// Graphviz rendering with nodes and edges in ascending state order.
pub fn dfa_to_dot(dfa: &Dfa) -> String {
    dot(
        dfa.alphabet(),
        dfa.states(),
        &[dfa.initial()],
        |q| dfa.is_final(q),
        dfa.transitions(),
    )
}

pub fn nfa_to_dot(nfa: &Nfa) -> String {
    let initials: Vec<usize> = nfa.initials().iter().copied().collect();
    dot(
        nfa.alphabet(),
        nfa.states(),
        &initials,
        |q| nfa.finals().contains(&q),
        nfa.transitions(),
    )
}
