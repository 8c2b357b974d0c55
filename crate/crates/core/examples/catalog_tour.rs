//! Builds every catalog family that needs no imported seed and prints a
//! one-line summary for each.

use std::time::Instant;

use oakit::catalog::{catalog_build, catalog_list};

fn main() {
    for entry in catalog_list() {
        if let Some(seed) = entry.requires {
            println!("{:<28} needs {seed}", entry.id);
            continue;
        }
        let t = Instant::now();
        match catalog_build(&entry.id) {
            Ok(c) => println!(
                "{:<28} {:>5} runs  MD {:>3}  {:.2?}",
                entry.id,
                c.array.runs(),
                c.certificate.measured_md.unwrap_or(0),
                t.elapsed()
            ),
            Err(e) => println!("{:<28} FAILED {e}  {:.2?}", entry.id, t.elapsed()),
        }
    }
}
