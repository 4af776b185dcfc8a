//! The 213 and 231 tables from all three sources, plus CSV and JSON output.
use cycpat::{Family, Oracle, Source};

fn main() -> cycpat::Result<()> {
    let oracle = Oracle::default();
    for family in [Family::T213, Family::T231] {
        for source in [Source::Oracle, Source::Recurrence, Source::Genfun] {
            let t = family.table(source, &oracle, 9, 9)?;
            println!("family {family}, {source}:\n{t}");
        }
    }
    let t = Family::T213.table(Source::Oracle, &oracle, 5, 4)?;
    println!("{}", t.to_csv());
    println!("{}", t.to_json());
    Ok(())
}
