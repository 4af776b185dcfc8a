//! Rational generating functions: construction, arithmetic and expansion.
use cycpat::genfun::{arith, cf_213, gf_1342, gf_231, gf_b231, ArithOp};

fn main() -> cycpat::Result<()> {
    for k in 2..=6 {
        let f = cf_213(k)?;
        println!("f_{k}(z; 213) = {f}");
        println!("  series: {:?}", f.series(10)?.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    }
    println!("f_5(z; 231) = {}", gf_231(5)?);
    println!("g_5(z; 231) = {}", gf_b231(5)?);
    println!("f°_4(z; 1342) = {}", gf_1342(4)?);
    let diff = arith(&cf_213(6)?, &cf_213(5)?, ArithOp::Sub)?;
    println!("f_6 - f_5 = {diff}, first terms {:?}", diff.series(8)?);
    Ok(())
}
