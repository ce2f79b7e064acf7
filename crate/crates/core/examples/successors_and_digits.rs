//! Walks across `w` with the successor function and prints the binary digit
//! pattern of every element that has one.
//!
//!     cargo run --example successors_and_digits

use infnat::digits::to_digits;
use infnat::element::{pred, succ};
use infnat::MNumber;

fn main() -> infnat::Result<()> {
    let mut x = MNumber::w(0);
    for _ in 0..4 {
        x = pred(&x)?;
    }
    for _ in 0..7 {
        let digits = match to_digits(&x) {
            Ok(d) => d.render(12),
            Err(e) => format!("({e})"),
        };
        println!("{:>5}  {digits}", x.to_string());
        x = succ(&x);
    }

    println!();
    for n in [0u32, 1, 5, 255, 256] {
        println!("{n:>5}  {}", to_digits(&MNumber::fin(n))?.render(12));
    }
    Ok(())
}
