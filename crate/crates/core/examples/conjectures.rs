//! Compare three conjectured sequences against brute-force counts.
use cycpat::conjectures::{check_conjecture, claimed, NamedSequence};
use cycpat::Oracle;

fn main() -> cycpat::Result<()> {
    let oracle = Oracle::default();
    for (sigma, name, map) in claimed() {
        let report = check_conjecture(&oracle, &sigma, &NamedSequence::new(name), map, 10)?;
        println!("{report}\n");
    }
    Ok(())
}
