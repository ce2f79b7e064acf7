//! Evaluates the supported limits and prints the first terms of `1…11` in
//! binary, where every digit position settles on 1.
//!
//!     cargo run --example limits

use infnat::limits::{eval_limit, eval_xtr_limit, prefix_table, render_prefix_binary, IndexDomain, SeqFamily};

fn main() -> infnat::Result<()> {
    let cases = [
        (SeqFamily::OnesRun, IndexDomain::L),
        (SeqFamily::Pow2, IndexDomain::L),
        (SeqFamily::Pow2.shifted(5u32), IndexDomain::L),
        (SeqFamily::Identity, IndexDomain::N),
    ];
    for (f, d) in &cases {
        println!("lim[n in {d}] {f} = {:?}", eval_limit(f, *d)?);
    }
    for d in [IndexDomain::N, IndexDomain::M] {
        println!("xlim[n in {d}] n = {:?}", eval_xtr_limit(&SeqFamily::Identity, d)?);
    }
    if let Err(e) = eval_limit(&SeqFamily::OnesRun, IndexDomain::N) {
        println!("{e}");
    }

    println!();
    for row in render_prefix_binary(&prefix_table(&SeqFamily::OnesRun, 8)?) {
        println!("{row}");
    }
    Ok(())
}
