//! The three bundled numeration systems, shipped as automaton files under `data/`.

use std::str::FromStr;

use crate::ans::AnsSystem;
use crate::automata::parse_automaton;
use crate::error::{Error, Result};

pub const EVEN_B: &str = include_str!("../data/even_b.aut");
pub const BINARY: &str = include_str!("../data/binary.aut");
pub const FIBONACCI: &str = include_str!("../data/fibonacci.aut");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bundled {
    /// Words over `a < b` with an even number of `b`'s.
    EvenB,
    /// `1{0,1}* ∪ {0}`.
    Binary,
    /// Words of `1{0,1}* ∪ {0}` without factor `11`.
    Fibonacci,
}

impl Bundled {
    pub const ALL: [Bundled; 3] = [Bundled::EvenB, Bundled::Binary, Bundled::Fibonacci];

    pub fn name(self) -> &'static str {
        match self {
            Bundled::EvenB => "even-b",
            Bundled::Binary => "binary",
            Bundled::Fibonacci => "fibonacci",
        }
    }

    pub fn automaton_text(self) -> &'static str {
        match self {
            Bundled::EvenB => EVEN_B,
            Bundled::Binary => BINARY,
            Bundled::Fibonacci => FIBONACCI,
        }
    }

    pub fn system(self) -> AnsSystem {
        let nfa = parse_automaton(self.automaton_text()).expect("bundled automaton parses");
        AnsSystem::new(&nfa).expect("bundled language is infinite")
    }
}

impl FromStr for Bundled {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Bundled::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::InvalidAutomaton(format!("unknown bundled system {s:?}")))
    }
}

pub fn even_b() -> AnsSystem {
    Bundled::EvenB.system()
}

pub fn binary() -> AnsSystem {
    Bundled::Binary.system()
}

pub fn fibonacci() -> AnsSystem {
    Bundled::Fibonacci.system()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{parse_regex, Dfa, OrderedAlphabet};

    #[test]
    fn files_match_their_regexes() {
        let bin = OrderedAlphabet::parse("01").unwrap();
        let cases = [
            (
                Bundled::EvenB,
                "a*(ba*ba*)*",
                OrderedAlphabet::parse("ab").unwrap(),
            ),
            (Bundled::Binary, "0|1(0|1)*", bin.clone()),
            (Bundled::Fibonacci, "0|1(0|01)*", bin),
        ];
        for (b, pattern, alphabet) in cases {
            let from_regex = Dfa::determinize(&parse_regex(pattern, &alphabet).unwrap()).minimize();
            assert_eq!(b.system().language_dfa(), from_regex, "{}", b.name());
            assert_eq!(b.name().parse::<Bundled>().unwrap(), b);
        }
    }
}
