//! Cell-by-cell cross-check of oracle, recurrence and generating function.
use cycpat::family::verify;
use cycpat::{Family, Oracle};

fn main() -> cycpat::Result<()> {
    let oracle = Oracle::default();
    for family in Family::ALL {
        let n_max = if family.name().len() == 4 { 10 } else { 9 };
        let report = verify(family, &oracle, n_max, 9)?;
        println!("{report}");
    }
    Ok(())
}
