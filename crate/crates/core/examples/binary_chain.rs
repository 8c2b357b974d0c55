//! Irredundant arrays with one ternary column and many binary ones, grown
//! by repeated juxtaposition and trimmed to the requested width.

use oakit::constructions::families::thm1_family;
use oakit::quantum::verify_k_uniform;

fn main() -> oakit::Result<()> {
    for n in [8, 9, 13, 16, 20, 30] {
        let c = thm1_family(1, n)?;
        let uniform = verify_k_uniform(&c.array, 2)?.holds;
        println!(
            "3^1 2^{n:<2}: {:>3} runs, MD {}, 2-uniform {uniform}",
            c.array.runs(),
            c.certificate.measured_md.unwrap()
        );
    }
    Ok(())
}
