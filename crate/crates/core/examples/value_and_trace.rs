//! Value of a word and the step-by-step vectors behind it.
//!
//!     cargo run --example value_and_trace -- bbabb

use ans::systems;

fn main() -> ans::Result<()> {
    let word = std::env::args().nth(1).unwrap_or_else(|| "bbabb".into());
    let sys = systems::even_b();
    let trace = sys.value_trace(&word)?;
    print!("{}", trace.table());
    match trace.value {
        Some(v) => println!("value({word}) = {v}"),
        None => println!(
            "{word} is not in the language; {} words precede it",
            sys.count_below(&word)?
        ),
    }
    Ok(())
}
