//! Strength-3 irredundant arrays from the printed ternary scheme and from
//! the cubic polynomial scheme over GF(5).

use std::time::Instant;

use oakit::constructions::families::{thm3_family, thm4_family};
use oakit::quantum::verify_k_uniform;

fn main() -> oakit::Result<()> {
    let t = Instant::now();
    let c = thm3_family(5, 36)?;
    let u = verify_k_uniform(&c.array, 3)?;
    println!(
        "{}: {} runs x {} columns, MD {:?}, 3-uniform on {}/{} triples ({:.1?})",
        c.certificate.profile,
        c.array.runs(),
        c.array.cols(),
        c.certificate.measured_md,
        u.subsets_passed,
        u.subsets_checked,
        t.elapsed()
    );
    for n in [16, 22] {
        let c = thm3_family(4, n)?;
        println!("{}: MD {:?}", c.certificate.profile, c.certificate.measured_md);
    }

    let t = Instant::now();
    let c = thm4_family(5, 4, 54)?;
    println!("{}: {} runs, MD {:?} ({:.1?})", c.certificate.profile, c.array.runs(), c.certificate.measured_md, t.elapsed());
    Ok(())
}
