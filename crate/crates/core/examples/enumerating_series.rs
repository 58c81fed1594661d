//! Builds the N-representation whose coefficient on w is value(w) + 1.

use ans::ans::AnsSystem;
use ans::automata::OrderedAlphabet;

fn main() -> ans::Result<()> {
    let sys = AnsSystem::from_regex("a*(ba*ba*)*", &OrderedAlphabet::parse("ab")?)?;
    let e = sys.enumerating_series()?;
    println!(
        "before trimming: {}, after: {}",
        e.pre_trim_dimension(),
        e.final_rep.dimension()
    );
    for w in ["", "a", "b", "bb", "bab", "bbabb"] {
        println!("{:>6}  {}", format!("{w:?}"), e.final_rep.coefficient(w)?);
    }
    println!("{}", e.final_rep.to_json());
    Ok(())
}
