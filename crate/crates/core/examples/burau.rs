//! The reduced Burau representation and its specialization at t = -1.

use braidbook::braid::{delta, delta_rev, BraidWord};
use braidbook::burau::{burau_at_minus1, burau_generator, burau_word};

fn main() -> braidbook::error::Result<()> {
    println!("sigma_1 in B_3:\n{}", burau_generator(1, true, 3)?);
    println!("sigma_1^-1 in B_3:\n{}", burau_generator(1, false, 3)?);

    for n in [3, 5] {
        println!("f(delta) for n = {n}:\n{}", burau_at_minus1(&delta(n)?));
        println!("f(delta_rev) for n = {n}:\n{}", burau_at_minus1(&delta_rev(n)?));
    }

    // braid relation: s1 s2 s1 = s2 s1 s2
    let a = BraidWord::new(3, vec![1, 2, 1])?;
    let b = BraidWord::new(3, vec![2, 1, 2])?;
    println!("braid relation holds symbolically: {}", burau_word(&a) == burau_word(&b));

    let m = burau_word(&BraidWord::new(3, vec![1, 2, 1, 2])?);
    println!("trefoil braid image:\n{m}");
    println!("as JSON: {}", m.to_json());
    Ok(())
}
