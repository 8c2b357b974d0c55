//! Reading and writing the `moa v1` text format.

use oakit::array::format::{parse_moa, serialize_moa, MoaDocument};
use oakit::constructions::trivial_moa;

fn main() -> oakit::Result<()> {
    let mut doc = MoaDocument::plain(trivial_moa(&[3, 2])?);
    doc.strength = Some(2);
    let text = serialize_moa(&doc);
    print!("{text}");
    let back = parse_moa(&text)?;
    assert_eq!(back, doc);

    match parse_moa("moa v1\nruns 2\nlevels 2\nrows:\n0\n5\n") {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
