//! Which series are enumerating series of a numeration system?

use ans::decision::{is_enumerating_series, Rejection, Verdict, DEFAULT_WITNESS_DEPTH};
use ans::exactalg::Scalar;
use ans::systems;

fn main() -> ans::Result<()> {
    let sys = systems::fibonacci();
    let e = sys.enumerating_series()?.final_rep;
    let doubled = e.with_initial(e.initial().scale(&Scalar::natural(2u8))?)?;
    let candidates = [
        ("enumerating series", e),
        ("characteristic series", sys.linear_representation().clone()),
        ("doubled", doubled),
    ];
    for (name, s) in &candidates {
        let verdict = match is_enumerating_series(s, DEFAULT_WITNESS_DEPTH)? {
            Verdict::Yes => "yes".to_string(),
            Verdict::No(Rejection::Mismatch {
                word,
                expected,
                actual,
            }) => {
                format!("no, coefficient of {word:?} is {actual}, should be {expected}")
            }
            Verdict::No(Rejection::FiniteSupport) => "no, finite support".to_string(),
            Verdict::No(Rejection::BeyondDepth { depth }) => {
                format!("no, but no witness within {depth} letters")
            }
        };
        println!("{name:>22}: {verdict}");
    }
    Ok(())
}
