//! Runs the seeded verification suites and prints one line per suite.
//! Usage: `cargo run --example model_suites -- [seed] [samples]`.

use vinberg::model::suites::run_all;

fn main() -> vinberg::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);
    let samples = args.next().and_then(|s| s.parse().ok()).unwrap_or(100);
    for r in run_all(seed, samples, 1e-9)? {
        let kind = if r.exact { "exact" } else { "float" };
        println!(
            "{:<26} {kind}  failures {:3}  max residual {:.2e}  {}",
            r.name,
            r.failures,
            r.max_residual,
            if r.passed { "ok" } else { "FAILED" }
        );
    }
    Ok(())
}
