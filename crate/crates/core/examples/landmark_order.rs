//! Sorts a mixed bag of elements, then measures distances and tries the
//! archimedean test on finite and infinite pairs.
//!
//!     cargo run --example landmark_order

use infnat::order::{archimedean_witness, cardinal_compare, distance, z_project};
use infnat::MNumber;
use num_bigint::BigUint;

fn main() -> infnat::Result<()> {
    let mut bag: Vec<MNumber> = ["w_2", "o_2-9", "17", "o_1+5", "w-1", "o_1", "0", "w", "o_2"]
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    bag.sort();
    let names: Vec<String> = bag.iter().map(MNumber::to_string).collect();
    println!("order:    {}", names.join(" < "));

    let pairs = [("o_2+3", "o_2-4"), ("o_1", "o_2"), ("w-3", "w_2"), ("4", "w")];
    for (a, b) in pairs {
        let (x, y): (MNumber, MNumber) = (a.parse()?, b.parse()?);
        println!(
            "{a} vs {b}: distance {:?}, by size {:?}",
            distance(&x, &y),
            cardinal_compare(&x, &y)
        );
    }

    for k in -2..=2 {
        let x = MNumber::lmk(3, k);
        println!("z-projection of {x} in class 3: {}", z_project(3, &x)?);
    }

    let bound = BigUint::from(100u32);
    for (m, n) in [("3", "10"), ("5", "w"), ("o_1", "w")] {
        let w = archimedean_witness(&m.parse()?, &n.parse()?, &bound)?;
        println!("multiples of {m} beyond {n}: {w:?}");
    }
    Ok(())
}
