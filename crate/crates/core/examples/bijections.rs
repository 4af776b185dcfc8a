//! The constructive maps behind the recurrences, run on small examples.
use cycpat::bijections::{
    compose_as213, decompose_as213, decompose_as231, decompose_bs213, delete_n_1342, map_231_rc, strip_n2, Bullet,
};
use cycpat::Permutation;

fn show(label: &str, p: &Permutation) -> cycpat::Result<()> {
    println!("  {label} = {p} = {}", p.cycle_form()?);
    Ok(())
}

fn main() -> cycpat::Result<()> {
    let p: Permutation = "5 3 4 1 8 7 2 9 10 11 6".parse()?;
    println!("split at the first entry, k = 4:");
    let d = decompose_as213(&p, 4)?;
    show("inner", &d.inner)?;
    show("outer", &d.outer)?;
    assert_eq!(compose_as213(&d.inner, &d.outer, 4)?, p);

    println!("split at the last entry, k = 5:");
    let (a, b) = decompose_bs213(&"13 1 2 3 7 4 6 9 12 5 10 11 8".parse()?, 5)?;
    show("first", &a)?;
    show("second", &b)?;

    println!("first n, last 2:");
    show("image", &strip_n2(&"54132".parse()?, 5)?)?;

    println!("231 split, k = 5:");
    let (a, b) = decompose_as231(&"5 8 2 3 4 9 6 7 11 1 10".parse()?, 5)?;
    show("first", &a)?;
    show("second", &b)?;

    println!("231 to 213 maps:");
    show("bullet 1", &map_231_rc(&"11 4 2 9 3 5 6 7 10 12 8 1".parse()?, Bullet::One, 5)?)?;
    show("bullet 2", &map_231_rc(&"12 8 9 3 4 5 6 7 10 11 1 2".parse()?, Bullet::Two, 5)?)?;
    show("bullet 3", &map_231_rc(&"83527416".parse()?, Bullet::Three, 6)?)?;

    println!("1342, delete n:");
    show("image", &delete_n_1342(&"3421".parse()?, 4)?)?;
    Ok(())
}
