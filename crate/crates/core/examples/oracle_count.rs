//! Brute-force counting and listing of one avoidance class.
use cycpat::{AvoidanceQuery, Oracle, Pattern};

fn main() -> cycpat::Result<()> {
    let oracle = Oracle::from_env();
    let tau: Pattern = "213".parse()?;
    let q = AvoidanceQuery::standard(5, 3, &tau);
    println!("|A_5(δ_3; 213)| = {}", oracle.count(&q)?);
    for p in oracle.list_members(&q)? {
        println!("  {p} = {}", p.cycle_form()?);
    }
    let circ = AvoidanceQuery::circular(6, 3, &"1342".parse()?);
    println!("|A°_6(δ_3; 1342)| = {}", oracle.count(&circ)?);
    let first = AvoidanceQuery::standard(7, 4, &tau).with_first(7);
    println!("members of A_7(δ_4; 213) starting with 7: {}", oracle.count(&first)?);
    Ok(())
}
