//! Prints the `K` / `κ` operation table.
//!
//!     cargo run --example cardinal_table

use infnat::card::{card_add, card_div, card_mul, card_sub};
use infnat::{CardValue, Result};

fn show(r: Result<CardValue>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(_) => "undefined".to_string(),
    }
}

fn main() {
    let operands = [CardValue::fin(0u32), CardValue::fin(3u32), CardValue::K, CardValue::Kappa];
    println!("{:<6} {:<6} {:>10} {:>10} {:>10} {:>10}", "a", "b", "a + b", "a - b", "a * b", "a / b");
    for a in &operands {
        for b in &operands {
            println!(
                "{:<6} {:<6} {:>10} {:>10} {:>10} {:>10}",
                a.to_string(),
                b.to_string(),
                card_add(a, b).to_string(),
                show(card_sub(a, b)),
                card_mul(a, b).to_string(),
                show(card_div(a, b)),
            );
        }
    }
}
