//! Hadamard matrices in 0/1 form and the strength-2 arrays they expand to.

use oakit::algebra::hadamard::{applicable_methods, hadamard01};
use oakit::array::distance::min_distance;

fn main() -> oakit::Result<()> {
    for n in [2, 4, 8, 12, 20, 24, 28, 36, 44] {
        let methods = applicable_methods(n);
        let Some(method) = methods.first().cloned() else {
            println!("order {n:>2}: no generator");
            continue;
        };
        let h = hadamard01(n, method.clone())?;
        let oa = h.scheme(2)?.expand();
        println!(
            "order {n:>2} via {method:?}: valid={} expansion {}x{} MD {}",
            h.is_valid(),
            oa.runs(),
            oa.cols(),
            min_distance(&oa)
        );
    }
    Ok(())
}
