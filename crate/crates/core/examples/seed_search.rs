//! Finding small arrays by backtracking, and proving that some do not exist.

use std::time::Instant;

use oakit::search::{exhaustive_nonexistence, search_moa, SearchSpec};

fn main() -> oakit::Result<()> {
    let specs = [
        SearchSpec::new(12, vec![3, 2, 2, 2, 2], 2),
        SearchSpec::new(12, vec![6, 2, 2], 2),
        SearchSpec::new(6, vec![6, 3, 2], 1).with_min_distance(2),
        SearchSpec::new(8, vec![2; 7], 2),
    ];
    for spec in &specs {
        let t = Instant::now();
        let out = search_moa(spec)?;
        match out.array() {
            Some(a) => println!("{} runs {:?}: found {} in {:.1?}", spec.runs, spec.levels, a.profile(), t.elapsed()),
            None => println!("{} runs {:?}: {out:?}", spec.runs, spec.levels),
        }
    }
    let spec = SearchSpec::new(12, vec![3, 2, 2, 2, 2], 2).with_min_distance(3);
    println!("12 runs, 3^1 2^4, MD 3: {:?}", exhaustive_nonexistence(&spec)?);
    Ok(())
}
