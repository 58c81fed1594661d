//! Representations of numbers in the three bundled systems, and back.

use ans::systems::Bundled;
use num_bigint::BigUint;

fn main() -> ans::Result<()> {
    for b in Bundled::ALL {
        let sys = b.system();
        let words = sys.enumerate(&BigUint::from(0u8), 10)?;
        let shown: Vec<&str> = words
            .iter()
            .map(|w| if w.is_empty() { "ε" } else { w })
            .collect();
        println!("{:>10}: {}", b.name(), shown.join(" "));
    }

    let fib = Bundled::Fibonacci.system();
    let big = BigUint::from(10u8).pow(30);
    let w = fib.representation(&big)?;
    println!("10^30 in Fibonacci: {w} ({} digits)", w.len());
    assert_eq!(fib.value(&w)?, big);
    Ok(())
}
