//! Pairwise distances, the irredundancy test and how many columns may be
//! dropped while keeping it.

use oakit::algebra::hadamard01_auto;
use oakit::array::distance::{distance_spectrum, guaranteed_deletion_budget, is_irredundant, is_irredundant_direct};

fn main() -> oakit::Result<()> {
    let a = hadamard01_auto(20)?.scheme(2)?.expand();
    let s = distance_spectrum(&a);
    println!("{} runs x {} columns, minimum distance {}", a.runs(), a.cols(), s.min_distance);
    for (d, pairs) in &s.counts {
        println!("  distance {d:>2}: {pairs} pairs");
    }
    for k in [2, 9, 10] {
        let fast = is_irredundant(&a, k)?.holds;
        let direct = is_irredundant_direct(&a, k)?.holds;
        println!("irredundant at {k}: {fast} (direct check agrees: {})", fast == direct);
    }
    println!("columns removable at strength 2: {}", guaranteed_deletion_budget(&a, 2));
    Ok(())
}
