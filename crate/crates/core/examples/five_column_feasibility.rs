//! Which five-column strength-2 level patterns can be ruled out by
//! counting alone.

use oakit::constructions::feasibility_5col;

fn main() -> oakit::Result<()> {
    let patterns: [[u32; 5]; 7] = [
        [3, 2, 2, 2, 2],
        [2, 2, 3, 3, 3],
        [5, 5, 5, 2, 3],
        [2, 3, 5, 7, 11],
        [2, 3, 3, 3, 3],
        [2, 2, 2, 2, 2],
        [4, 2, 2, 2, 2],
    ];
    for p in patterns {
        println!("{p:?}: {:?}", feasibility_5col(&p)?);
    }
    Ok(())
}
