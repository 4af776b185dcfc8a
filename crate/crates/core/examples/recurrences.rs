//! Counts from the recurrences and closed forms, far beyond oracle range.
use cycpat::{Oracle, Recurrences};

fn main() -> cycpat::Result<()> {
    let mut rec = Recurrences::new(Oracle::default());
    println!("a(30, 5; 213)   = {}", rec.a213(30, 5)?);
    println!("a(30, 5; 231)   = {}", rec.a231(30, 5)?);
    println!("a°(30, 4; 1324) = {}", rec.a1324_circ(30, 4)?);
    println!("a°(30, 6; 1342) = {}", rec.a1342_circ(30, 6)?);
    for n in 1..=12 {
        let row: Vec<String> = (3..=8).map(|k| rec.a213(n, k).map(|v| v.to_string())).collect::<Result<_, _>>()?;
        println!("n = {n:2}: {}", row.join(" "));
    }
    Ok(())
}
