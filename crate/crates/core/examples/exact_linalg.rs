//! Exact determinants and Smith normal form.

use braidbook::braid::beta_family;
use braidbook::burau::{burau_at_minus1, burau_word};
use braidbook::linalg::{smith_normal_form, IntMatrix, PolyMatrix};

fn main() -> braidbook::error::Result<()> {
    let m = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])?;
    let snf = smith_normal_form(&m);
    println!("M =\n{m}diagonal {:?}, rank {}", snf.diagonal, snf.rank());
    let check = snf.left.mul(&m)?.mul(&snf.right)?;
    println!("U M V =\n{check}");

    let w = beta_family(5, 7)?;
    let f = burau_at_minus1(&w);
    let pres = IntMatrix::identity(f.rows()).sub(&f)?;
    println!("I - f(beta(5,7)) =\n{pres}det {}, cokernel {:?}", pres.det()?, smith_normal_form(&pres).cokernel_factors());

    let b = burau_word(&beta_family(3, 2)?);
    let char_det = PolyMatrix::identity(b.rows()).sub(&b)?.det()?;
    println!("\ndet(I - B(beta(3,2))) = {char_det}");
    Ok(())
}
