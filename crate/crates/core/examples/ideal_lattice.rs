//! Enumerates the ideals of the bundled algebra, prints the certificate, and
//! writes the Hasse diagram as DOT to stdout.

use std::time::Instant;

use vinberg::canonical::{ideal_components, paper_algebra};
use vinberg::lattice::{enumerate_ideals, label_for, to_dot, DEFAULT_MAX_COUNT};

fn main() -> vinberg::Result<()> {
    let g = paper_algebra();
    let start = Instant::now();
    let lattice = enumerate_ideals(&g, DEFAULT_MAX_COUNT)?;
    let elapsed = start.elapsed();
    let parts = ideal_components();

    println!(
        "{} ideals, {} ({:.2?})",
        lattice.len(),
        lattice.certificate.status.label(),
        elapsed
    );
    for (i, ideal) in lattice.ideals.iter().enumerate() {
        println!(
            "  [{i:2}] dim {:2}  {}",
            ideal.dim(),
            label_for(ideal, &parts)
        );
    }
    println!("coverings:");
    for (i, j) in &lattice.coverings {
        println!(
            "  {} < {}",
            label_for(&lattice.ideals[*i], &parts),
            label_for(&lattice.ideals[*j], &parts)
        );
    }
    println!("gap checks:");
    for gap in &lattice.certificate.gap_checks {
        println!(
            "  {} -> {} (dim {}): {:?}",
            gap.lower, gap.upper, gap.dim, gap.verdict
        );
    }
    println!();
    print!("{}", to_dot(&lattice, &parts));
    Ok(())
}
