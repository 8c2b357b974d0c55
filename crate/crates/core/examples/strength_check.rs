//! Exact strength verification, and the witness reported when one cell of
//! an otherwise good array is changed.

use oakit::array::strength::{max_strength, verify_strength};
use oakit::constructions::bush_oa;

fn main() -> oakit::Result<()> {
    let oa = bush_oa(5, 3)?;
    let report = verify_strength(&oa, 3)?;
    println!(
        "OA({}, {}, 5, 3): holds={} lambda={:?} subsets={}",
        oa.runs(),
        oa.cols(),
        report.holds,
        report.index,
        report.subsets_checked
    );
    println!("largest strength: {}", max_strength(&oa));

    let mut broken = oa.clone();
    broken.set(0, 0, 1)?;
    let report = verify_strength(&broken, 3)?;
    println!("after one edit: holds={}", report.holds);
    if let Some(w) = report.witness {
        println!("first failing columns {:?}: {:?}", w.columns, w.kind);
    }
    Ok(())
}
