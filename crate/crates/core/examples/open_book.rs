//! Open books on double branched covers, and the genus comparison between
//! two braidings of the same knot.

use braidbook::braid::{beta_family, delta};
use braidbook::topology::{open_book_report, theorem12_report, FdtcParams};

fn main() -> braidbook::error::Result<()> {
    let params = FdtcParams::default();
    for w in [beta_family(5, 3)?, delta(3)?, beta_family(4, 3)?] {
        let r = open_book_report(&w, &params)?;
        println!("{}", serde_json::to_string(&r).expect("serializable"));
    }

    println!();
    for k in 0..=4 {
        let r = theorem12_report(k, &params)?;
        let pinned = r.fdtc_upstairs.pinned.map_or("-".into(), |p| p.to_string());
        println!(
            "k={k}: genus {} vs {}, lifted fdtc {pinned}, det {} = {}, alexander equal {}",
            r.high_genus.page.genus, r.low_genus.page.genus, r.high_genus.determinant, r.low_genus.determinant, r.alexander_equal
        );
    }
    Ok(())
}
