//! Cycle notation, symmetries and pattern tests on a single permutation.
use cycpat::{Pattern, Permutation, Symmetry};

fn main() -> cycpat::Result<()> {
    let p: Permutation = "11 4 2 9 3 5 6 7 10 12 8 1".parse()?;
    let c = p.cycle_form()?;
    println!("π      = {p}");
    println!("C(π)   = {c}");
    let rc = p.apply_symmetry(Symmetry::ReverseComplement);
    println!("π^rc   = {rc} = {}", rc.cycle_form()?);
    println!("π^-1   = {}", p.inverse().cycle_form()?);
    println!("lds(π) = {}", p.lds_length());
    for tau in ["213", "231", "1324"] {
        let t: Pattern = tau.parse()?;
        println!(
            "C(π) contains {tau}: {}, some rotation does: {}",
            c.contains(&t),
            c.any_rotation_contains(&t)
        );
    }
    let back: Permutation = "(1,4,3,5,2)".parse()?;
    println!("(1,4,3,5,2) in one-line form is {back}");
    Ok(())
}
