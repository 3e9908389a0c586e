//! Prints the bracket table, checks the Jacobi identity, and compares every
//! bracket with the commutator of the 6×6 model matrices.

use num_traits::Zero;
use vinberg::canonical::paper_algebra;
use vinberg::model::{basis_matrices, verify_model, MODEL_PAIRS};

fn main() -> vinberg::Result<()> {
    let g = paper_algebra();
    let names = g.names();
    println!("nonzero brackets ({}):", g.nonzero_pairs());
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let b = g.basis_bracket(i, j);
            if b.iter().any(|c| !c.is_zero()) {
                println!("  [{}, {}] = {}", names[i], names[j], g.format_vec(&b));
            }
        }
    }

    let jacobi = g.jacobi_violations();
    let mismatches = verify_model(&g)?;
    println!("jacobi: {} violations over 220 triples", jacobi.len());
    println!(
        "model: {} of {MODEL_PAIRS} pairs disagree",
        mismatches.len()
    );

    let w1 = &basis_matrices()[g.index_of("W1").expect("W1")];
    println!("X_W1 =\n{w1:?}");
    Ok(())
}
