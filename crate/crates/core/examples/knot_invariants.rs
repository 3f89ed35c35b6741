//! Alexander polynomials, determinants and H1 of double branched covers.

use braidbook::braid::{beta_family, delta, BraidWord};
use braidbook::burau::{alexander_polynomial, knot_determinant};
use braidbook::topology::{h1_invariant_factors, h1_order};

fn main() -> braidbook::error::Result<()> {
    let cases = [
        ("unknot", delta(5)?),
        ("trefoil", BraidWord::new(3, vec![1, 2, 1, 2])?),
        ("trefoil on 2 strands", BraidWord::new(2, vec![1, 1, 1])?),
        ("figure eight", BraidWord::new(3, vec![1, -2, 1, -2])?),
        ("beta(3,5)", beta_family(3, 5)?),
        ("beta(5,3)", beta_family(5, 3)?),
    ];
    for (name, w) in &cases {
        let a = alexander_polynomial(w)?;
        let d = knot_determinant(w)?;
        print!("{name:<22} det {d:<4} alexander {a}");
        if w.strands() % 2 == 1 {
            print!("   |H1| {}  factors {:?}", h1_order(w)?, h1_invariant_factors(w)?);
        }
        println!();
    }

    // a two-component closure has no Alexander polynomial here
    let link = BraidWord::new(3, vec![1, 1])?;
    println!("\n{}", alexander_polynomial(&link).unwrap_err());
    Ok(())
}
