//! Fractional Dehn twist coefficients from floors of powers.
//!
//! The estimate intersects `[⌊c^N⌋/N, (⌊c^N⌋+1)/N]` over powers `N` and over
//! conjugates `c` read off the word.

use braidbook::braid::{beta_family, delta, full_twist, BraidWord};
use braidbook::ordering::{bh_fdtc, fdtc, fdtc_with, FdtcOptions};

fn main() -> braidbook::error::Result<()> {
    let cases = [
        ("D2 in B_3", full_twist(3)?),
        ("delta in B_5", delta(5)?),
        ("beta(3,3)", beta_family(3, 3)?),
        ("beta(5,3)", beta_family(5, 3)?),
        ("beta(7,3)", beta_family(7, 3)?),
        ("s1 s2^-1 in B_3", BraidWord::new(3, vec![1, -2])?),
    ];
    for (name, w) in &cases {
        let n = w.strands();
        let est = fdtc(w, 8, Some(4 * n as i64))?;
        let pinned = est.pinned.map_or("-".into(), |p| p.to_string());
        let up = bh_fdtc(&est, n)?.pinned.map_or("-".into(), |p| p.to_string());
        println!("{name:<18} [{}, {}] pinned {pinned:<5} lifted {up:<5} (N = {})", est.lower, est.upper, est.power_used);
    }

    // without conjugates the sandwich alone leaves a unit-width interval
    let opts = FdtcOptions { max_power: 4, use_conjugates: false, ..FdtcOptions::default() };
    let est = fdtc_with(&beta_family(3, 2)?, &opts)?;
    println!("\nbeta(3,2), plain powers only: [{}, {}]", est.lower, est.upper);
    Ok(())
}
