//! Replacing the index column of the 24-run host by smaller arrays.

use oakit::catalog::seeds::{moa_12_3x2_4, moa_12_6x2_2};
use oakit::constructions::families::{generated_scheme, scheme_host, thm8_family};
use oakit::constructions::{expansive_replace, trivial_moa, ColumnReplacement, ReplacementPlan};

fn main() -> oakit::Result<()> {
    let scheme = generated_scheme(12, 2)?;
    let host = scheme_host(&scheme)?;
    println!("host: {} runs, {}", host.runs(), host.profile());

    for (name, b) in [("3^1 2^4", moa_12_3x2_4()?.clone()), ("6^1 2^2", moa_12_6x2_2()?.clone())] {
        let c = expansive_replace(&host, 2, &ReplacementPlan::single(ColumnReplacement::full(0, b)))?.verify()?;
        println!("replace by {name}: {}, MD {:?}", c.certificate.profile, c.certificate.measured_md);
    }

    // Keep only the 4-level column of the 4 x 3 factorial.
    let partial = ColumnReplacement::keeping(0, trivial_moa(&[4, 3])?, vec![0]);
    let c = expansive_replace(&host, 2, &ReplacementPlan::single(partial))?.verify()?;
    println!("keep one column: {}, MD {:?}", c.certificate.profile, c.certificate.measured_md);

    // Replace, then search for binary columns to drop while MD stays above 2.
    let c = thm8_family(&scheme, 12, Some((moa_12_3x2_4()?.clone(), None)), 8)?;
    println!("trimmed: {}, MD {:?}", c.certificate.profile, c.certificate.measured_md);
    for step in &c.certificate.steps {
        println!("  {step}");
    }
    Ok(())
}
