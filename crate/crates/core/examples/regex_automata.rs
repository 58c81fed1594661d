//! Regex to NFA, subset construction, minimisation, DOT.
//!
//!     cargo run --example regex_automata -- '(a|b)*b(a|b)' ab

use ans::automata::{dfa_to_dot, parse_regex, write_dfa, Dfa, OrderedAlphabet};

fn main() -> ans::Result<()> {
    let mut args = std::env::args().skip(1);
    let pattern = args.next().unwrap_or_else(|| "(a|b)*b(a|b)".into());
    let alphabet = OrderedAlphabet::parse(&args.next().unwrap_or_else(|| "ab".into()))?;

    let nfa = parse_regex(&pattern, &alphabet)?;
    let dfa = Dfa::determinize(&nfa);
    let minimal = dfa.minimize();
    println!(
        "nfa {} states, unambiguous: {}; dfa {}; minimal {}",
        nfa.states(),
        nfa.is_unambiguous(),
        dfa.states(),
        minimal.states()
    );
    print!("{}", write_dfa(&minimal));
    print!("{}", dfa_to_dot(&minimal));
    Ok(())
}
