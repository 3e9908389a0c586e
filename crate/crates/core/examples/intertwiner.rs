//! Evaluates the multipliers on both models and the intertwiner residual for
//! a few polynomials.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vinberg::model::{
    from_params, intertwiner_residual, multiplier_m, multiplier_tilde, quotient_phi,
    random_group_params, random_multiplier, random_siegel_point, BivariatePoly,
};

fn main() -> vinberg::Result<()> {
    let c = |re: f64| Complex64::new(re, 0.0);
    let polys = [
        ("1", BivariatePoly::constant(1.0)),
        ("w1 w2", BivariatePoly::monomial(1, 1)?),
        (
            "2 - w1^3 + i w1 w2^4",
            BivariatePoly::new(vec![
                vec![c(2.0)],
                vec![c(0.0), c(0.0), c(0.0), c(0.0), Complex64::i()],
                vec![],
                vec![c(-1.0)],
            ])?,
        ),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..4 {
        let g = from_params(&random_group_params(&mut rng))?;
        let z = random_siegel_point(&mut rng);
        let p = random_multiplier(&mut rng);
        let m = multiplier_m(&g, &z, &p);
        let mt = multiplier_tilde(&quotient_phi(&g), (z.z[0], z.z[1]), &p);
        println!("n = {}, n' = {}, eta3 = {:.3}", p.n, p.nprime, p.eta3);
        println!("  m = {m:.6}, m~ = {mt:.6}");
        for (name, f) in &polys {
            println!(
                "  residual for f = {name}: {:.2e}",
                intertwiner_residual(f, &g, &z, &p)?
            );
        }
    }
    Ok(())
}
