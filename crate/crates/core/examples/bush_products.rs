//! Reed-Solomon style arrays, their products for composite levels, and a
//! replacement that splits one 12-level column.

use oakit::array::distance::min_distance;
use oakit::array::strength::verify_strength;
use oakit::constructions::bush_oa_truncated;
use oakit::constructions::families::thm7_family;

fn main() -> oakit::Result<()> {
    for (q, k) in [(4, 2), (5, 3), (7, 4)] {
        let a = bush_oa_truncated(q, k, 2 * k as usize)?;
        println!(
            "OA({}, {}, {q}, {k}): strength {} MD {}",
            a.runs(),
            a.cols(),
            verify_strength(&a, k as usize)?.holds,
            min_distance(&a)
        );
    }
    let c = thm7_family(2, &[3, 4], &[vec![4, 3]])?;
    println!("{}: {} runs, MD {:?}", c.certificate.profile, c.array.runs(), c.certificate.measured_md);
    Ok(())
}
