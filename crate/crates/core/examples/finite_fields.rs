//! Arithmetic in GF(q), quadratic characters and the linear difference
//! schemes built over it.

use oakit::algebra::{ds_linear, FiniteField};
use oakit::array::strength::verify_strength;

fn main() -> oakit::Result<()> {
    let f = FiniteField::new(9)?;
    println!("GF(9): characteristic {}, modulus {:?}", f.characteristic(), f.modulus());
    let g = f.primitive();
    let powers: Vec<u32> = (0..8).map(|e| f.pow(g, e)).collect();
    println!("powers of the primitive element {g}: {powers:?}");
    let squares: Vec<u32> = f.elements().filter(|&a| f.chi(a) == 1).collect();
    println!("nonzero squares: {squares:?}");
    for a in 1..9 {
        assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
    }

    let ds = ds_linear(4, 2)?;
    let oa = ds.expand();
    println!(
        "D({},{},4) expands to {} runs with strength 2: {}",
        ds.rows(),
        ds.cols(),
        oa.runs(),
        verify_strength(&oa, 2)?.holds
    );
    Ok(())
}
