//! The determinant family 4k² + 4k - 1, checked for both index orders.
//!
//! `cargo run --release --example determinant_table -- 30`

use braidbook::topology::verify_prop41;

fn main() -> braidbook::error::Result<()> {
    let k_max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(15);
    let rows = verify_prop41(k_max)?;
    for r in &rows {
        println!("k={:<3} predicted {:<6} narrow {:<6} wide {:<6} {}", r.k, r.predicted, r.det_narrow, r.det_wide, if r.passed() { "ok" } else { "MISMATCH" });
    }
    Ok(())
}
