//! Moves points of the tube domain with exact group elements and with
//! one-parameter subgroups, and checks that the torus fixes the base point.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vinberg::canonical::basis::*;
use vinberg::linalg::rational::frac;
use vinberg::model::{
    act, act_halfplane, act_matrix, exp_algebra, from_params, random_group_params,
    random_siegel_point, symplectic_check, GroupParams, SiegelPoint,
};

fn show(z: &SiegelPoint) -> String {
    z.z.iter()
        .map(|c| format!("{:.4}{:+.4}i", c.re, c.im))
        .collect::<Vec<_>>()
        .join(", ")
}

fn main() -> vinberg::Result<()> {
    let base = SiegelPoint::base();
    let g = from_params(&GroupParams {
        a3: frac(2, 1),
        ..GroupParams::identity()
    })?;
    println!("a3 = 2 sends iI3 to ({})", show(&act(&g, &base)?));

    for t in [-2.0, -1.0, 0.5, 2.0] {
        let mut c = [0.0; DIM];
        c[W1] = t;
        c[W2] = -t / 2.0;
        let w = act_matrix(&exp_algebra(&c), &base)?;
        println!(
            "exp({t} W1 + {} W2) moves iI3 by {:.2e}",
            c[W2],
            w.max_abs_diff(&base)
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..3 {
        let p = random_group_params(&mut rng);
        let g = from_params(&p)?;
        let z = random_siegel_point(&mut rng);
        let w = act(&g, &z)?;
        let first = act_halfplane(&p.sl2_1, z.z[0])?;
        println!("params {}", p.to_json());
        println!("  symplectic: {}", symplectic_check(g.matrix()));
        println!("  z  = ({})", show(&z));
        println!("  gz = ({})", show(&w));
        println!(
            "  first coordinate via SL(2): {:.2e} apart",
            (w.z[0] - first).norm()
        );
    }
    Ok(())
}
