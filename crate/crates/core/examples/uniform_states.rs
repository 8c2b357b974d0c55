//! Quantum states from arrays: kets, reduced density matrices and the
//! k-uniformity test.

use oakit::catalog::{fixture, seeds::ame_6_3_2};
use oakit::quantum::{emit_state, is_ame, reduced_density, verify_k_uniform};

fn main() -> oakit::Result<()> {
    let ame = ame_6_3_2()?;
    println!("{}", emit_state(ame));
    println!("AME: {}", is_ame(ame)?);
    let rho = reduced_density(ame, &[0])?;
    println!("rho on party 0: dim {}, trace {}, maximally mixed {}", rho.dim(), rho.trace(), rho.is_maximally_mixed());

    for id in ["3^1x2^9", "4^5x2^2"] {
        let Ok(f) = fixture(id) else { continue };
        let a = f.array()?;
        for k in 1..=3 {
            let u = verify_k_uniform(&a, k)?;
            println!("{id}: {k}-uniform {} ({}/{} subsets)", u.holds, u.subsets_passed, u.subsets_checked);
        }
    }
    Ok(())
}
