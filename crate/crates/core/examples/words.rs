//! Parsing braid expressions and basic word structure.
//!
//! Run with `cargo run --example words`.

use braidbook::braid::{beta_family, full_twist};
use braidbook::expr::{parse_expr, parse_word};

fn main() -> braidbook::error::Result<()> {
    let n = 4;
    for text in ["s1 s2^-1 s3", "(s1 s2)^3", "D2 d^-1", "beta(3,2)^-1 s3", "(d dR)^2 d"] {
        let expr = parse_expr(text, n)?;
        let w = expr.to_word(n)?;
        let perm = w.permutation();
        println!("{text:<20} -> {:<22} len {:>2}  exp {:>3}  cycles {:?}", expr.to_string(), w.len(), w.exponent_sum(), perm.cycle_type());
    }

    let w = parse_word("s1 s2 s2^-1 s3 s3^-1 s1^-1 s2", 4)?;
    println!("\nfree reduction: {w}  ->  {}", w.free_reduce());

    let b = beta_family(3, 2)?;
    println!("beta(3,2) = {b}, knot closure: {}", b.is_knot_closure());
    let up = b.markov_stabilize(true);
    println!("stabilized: {up} in B_{}", up.strands());
    let down = up.markov_destabilize().expect("single top letter");
    println!("destabilized: {down} in B_{}", down.strands());

    // Δ² is δ^n
    println!("full twist in B_3 has {} letters", full_twist(3)?.len());

    match parse_expr("s1 s4", 4) {
        Err(e) => println!("\nrejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
