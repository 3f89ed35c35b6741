//! Handle reduction, the Dehornoy order and floors.

use std::cmp::Ordering;

use braidbook::braid::{full_twist, BraidWord};
use braidbook::ordering::{compare_dehornoy, dehornoy_floor, handle_reduce, DEFAULT_STEP_LIMIT};

fn main() -> braidbook::error::Result<()> {
    let words: [&[i32]; 4] = [&[-2, 1, 2], &[2, -1, -2], &[1, 2, 1, -2, -1, -2], &[2, 2, -1, 2]];
    for letters in words {
        let w = BraidWord::new(3, letters.to_vec())?;
        let (reduced, class) = handle_reduce(&w, DEFAULT_STEP_LIMIT)?;
        println!("{:<28} -> {:<20} {class:?}", w.to_string(), reduced.to_string());
    }

    let s1 = BraidWord::new(3, vec![1])?;
    let d2 = full_twist(3)?;
    let ord = compare_dehornoy(&d2, &s1, DEFAULT_STEP_LIMIT)?;
    println!("\nD2 vs s1: {}", if ord == Ordering::Greater { "greater" } else { "not greater" });

    for w in [d2.clone(), d2.pow(3), s1.pow(50), s1.pow(-50), d2.inverse().compose(&s1)?] {
        let shown = if w.len() > 24 { format!("<{} letters>", w.len()) } else { w.to_string() };
        println!("floor of {shown:<26} = {}", dehornoy_floor(&w, DEFAULT_STEP_LIMIT)?);
    }
    Ok(())
}
