//! Dumps the first rows of each enumeration of a two-ended set, plus the gap
//! blocks of a sample layout.
//!
//!     cargo run --example enumerations

use infnat::bijections::Enumerator;

fn main() -> infnat::Result<()> {
    let all = [
        Enumerator::UnionFin(2),
        Enumerator::Diff(4),
        Enumerator::UnionKK,
        Enumerator::Pairs,
        Enumerator::Gaps,
    ];
    for e in all {
        let rows = e.rows(8)?;
        let cells: Vec<String> = rows.iter().map(|(name, idx)| format!("{name}->{idx}")).collect();
        println!("{e:<12} {}", cells.join("  "));
    }
    Ok(())
}
