//! Appending the expansion of a square scheme to a seed with the same run
//! count, with the predicted distance checked against the measured one.

use oakit::algebra::{ds_linear, hadamard01_auto, DifferenceScheme};
use oakit::catalog::seeds::moa_12_3x2_4;
use oakit::constructions::{lemma1_juxtapose, trivial_moa};
use oakit::MixedArray;

fn main() -> oakit::Result<()> {
    let pairs: Vec<(MixedArray, DifferenceScheme)> = vec![
        (trivial_moa(&[2, 2])?, hadamard01_auto(4)?.scheme(2)?),
        (trivial_moa(&[3, 3])?, ds_linear(3, 2)?),
        (moa_12_3x2_4()?.clone(), hadamard01_auto(12)?.scheme(2)?),
    ];
    for (seed, scheme) in &pairs {
        let c = lemma1_juxtapose(seed, scheme)?.verify()?;
        let cert = &c.certificate;
        let p = cert.predicted_md.as_ref().unwrap();
        println!(
            "{} + D({},{},{}): {} runs, {}, MD {} = {} ({:?})",
            seed.profile(),
            scheme.rows(),
            scheme.cols(),
            scheme.order(),
            cert.runs,
            cert.profile,
            cert.measured_md.unwrap(),
            p.formula,
            cert.status
        );
    }
    Ok(())
}
