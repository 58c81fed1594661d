//! Automaton accepting the representations of n ≡ 1 (mod 3), plus a
//! recognisable set built from progressions and finite edits.

use ans::automata::dfa_to_dot;
use ans::congruence::{congruence_dfa, recognizable_set_dfa, CongruenceSpec, RecognizableSetSpec};
use ans::systems;
use num_bigint::BigUint;

fn main() -> ans::Result<()> {
    let sys = systems::even_b();
    let dfa = congruence_dfa(&sys, CongruenceSpec::new(3, 1)?)?;
    let minimal = dfa.minimize();
    println!(
        "reachable states: {}, minimal: {}",
        dfa.states(),
        minimal.states()
    );

    let accepted: Vec<String> = sys
        .enumerate(&BigUint::from(0u8), 30)?
        .into_iter()
        .filter(|w| minimal.accepts_str(w).unwrap())
        .collect();
    println!("accepted among the first 30: {accepted:?}");

    let set = RecognizableSetSpec::new(
        vec![CongruenceSpec::new(4, 0)?],
        [BigUint::from(1u8)],
        [BigUint::from(8u8)],
    )?;
    let edited = recognizable_set_dfa(&sys, &set)?;
    println!("{}", dfa_to_dot(&edited));
    Ok(())
}
