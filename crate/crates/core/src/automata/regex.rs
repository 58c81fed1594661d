//! A small regular-expression dialect compiled to a position (Glushkov) automaton.
//!
//! Syntax: letters of the alphabet, concatenation, `|`, postfix `*`, `+`,
//! `?` and parentheses. An empty branch or `()` denotes the empty word.
//! Whitespace is ignored.

use std::collections::BTreeSet;

use super::{Nfa, OrderedAlphabet};
use crate::error::{Error, Result};

#[derive(Debug)]
enum Node {
    Epsilon,
    Letter { position: usize },
    Concat(Vec<Node>),
    Alt(Vec<Node>),
    Star(Box<Node>),
    Plus(Box<Node>),
    Optional(Box<Node>),
}

struct Parser<'a> {
    tokens: Vec<(usize, char)>,
    cursor: usize,
    alphabet: &'a OrderedAlphabet,
    /// Letter index of every position, in order of appearance.
    positions: Vec<usize>,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<(usize, char)> {
        self.tokens.get(self.cursor).copied()
    }

    fn offset(&self) -> usize {
        self.peek().map_or(self.end, |(i, _)| i)
    }

    fn syntax<T>(&self, position: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position,
            message: message.into(),
        })
    }

    fn alternation(&mut self) -> Result<Node> {
        let mut branches = vec![self.concatenation()?];
        while let Some((_, '|')) = self.peek() {
            self.cursor += 1;
            branches.push(self.concatenation()?);
        }
        Ok(if branches.len() == 1 {
            branches.pop().expect("one branch")
        } else {
            Node::Alt(branches)
        })
    }

    fn concatenation(&mut self) -> Result<Node> {
        let mut factors = Vec::new();
        while let Some((_, c)) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            factors.push(self.repetition()?);
        }
        Ok(match factors.len() {
            0 => Node::Epsilon,
            1 => factors.pop().expect("one factor"),
            _ => Node::Concat(factors),
        })
    }

    fn repetition(&mut self) -> Result<Node> {
        let mut node = self.atom()?;
        while let Some((_, c)) = self.peek() {
            node = match c {
                '*' => Node::Star(Box::new(node)),
                '+' => Node::Plus(Box::new(node)),
                '?' => Node::Optional(Box::new(node)),
                _ => break,
            };
            self.cursor += 1;
        }
        Ok(node)
    }

    fn atom(&mut self) -> Result<Node> {
        let Some((at, c)) = self.peek() else {
            return self.syntax(self.end, "unexpected end of pattern");
        };
        match c {
            '(' => {
                self.cursor += 1;
                let inner = self.alternation()?;
                match self.peek() {
                    Some((_, ')')) => {
                        self.cursor += 1;
                        Ok(inner)
                    }
                    _ => self.syntax(
                        self.offset(),
                        format!("unclosed '(' opened at position {at}"),
                    ),
                }
            }
            '*' | '+' | '?' => self.syntax(at, format!("'{c}' has nothing to repeat")),
            ')' => self.syntax(at, "unbalanced ')'"),
            _ => {
                let letter = self.alphabet.index(c).ok_or(Error::ForeignLetter(c))?;
                self.cursor += 1;
                self.positions.push(letter);
                Ok(Node::Letter {
                    position: self.positions.len(),
                })
            }
        }
    }
}

struct Glushkov {
    nullable: bool,
    first: BTreeSet<usize>,
    last: BTreeSet<usize>,
}

fn analyse(node: &Node, follow: &mut [BTreeSet<usize>]) -> Glushkov {
    match node {
        Node::Epsilon => Glushkov {
            nullable: true,
            first: BTreeSet::new(),
            last: BTreeSet::new(),
        },
        Node::Letter { position } => Glushkov {
            nullable: false,
            first: BTreeSet::from([*position]),
            last: BTreeSet::from([*position]),
        },
        Node::Concat(parts) => {
            let mut acc = analyse(&Node::Epsilon, follow);
            for part in parts {
                let next = analyse(part, follow);
                for &p in &acc.last {
                    follow[p].extend(next.first.iter().copied());
                }
                if acc.nullable {
                    acc.first.extend(next.first.iter().copied());
                }
                acc.last = if next.nullable {
                    acc.last.union(&next.last).copied().collect()
                } else {
                    next.last
                };
                acc.nullable &= next.nullable;
            }
            acc
        }
        Node::Alt(branches) => {
            let mut acc = Glushkov {
                nullable: false,
                first: BTreeSet::new(),
                last: BTreeSet::new(),
            };
            for branch in branches {
                let g = analyse(branch, follow);
                acc.nullable |= g.nullable;
                acc.first.extend(g.first);
                acc.last.extend(g.last);
            }
            acc
        }
        Node::Star(inner) | Node::Plus(inner) => {
            let mut g = analyse(inner, follow);
            for &p in &g.last {
                follow[p].extend(g.first.iter().copied());
            }
            if matches!(node, Node::Star(_)) {
                g.nullable = true;
            }
            g
        }
        Node::Optional(inner) => {
            let mut g = analyse(inner, follow);
            g.nullable = true;
            g
        }
    }
}

/// Compiles `pattern` into an ε-free automaton over `alphabet`.
pub fn parse_regex(pattern: &str, alphabet: &OrderedAlphabet) -> Result<Nfa> {
    let tokens: Vec<(usize, char)> = pattern
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut parser = Parser {
        tokens,
        cursor: 0,
        alphabet,
        positions: Vec::new(),
        end: pattern.chars().count(),
    };
    let root = parser.alternation()?;
    if let Some((at, c)) = parser.peek() {
        return parser.syntax(at, format!("unexpected '{c}'"));
    }

    let positions = parser.positions;
    let mut follow = vec![BTreeSet::new(); positions.len() + 1];
    let g = analyse(&root, &mut follow);

    // State 0 is the initial state, state p the p-th letter occurrence.
    let mut transitions = Vec::new();
    for &q in &g.first {
        transitions.push((0, positions[q - 1], q));
    }
    for (p, targets) in follow.iter().enumerate().skip(1) {
        for &q in targets {
            transitions.push((p, positions[q - 1], q));
        }
    }
    let mut finals: Vec<usize> = g.last.into_iter().collect();
    if g.nullable {
        finals.push(0);
    }
    Nfa::new(
        alphabet.clone(),
        positions.len() + 1,
        transitions,
        [0],
        finals,
    )
}
