//! Outer automorphisms and the adjoint action of the group.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vinberg::canonical::basis::DIM;
use vinberg::canonical::{paper_algebra, psi, sigma};
use vinberg::lie::LinearMap;
use vinberg::model::{adjoint, adjoint_map, from_params, random_group_params};

fn main() -> vinberg::Result<()> {
    let g = paper_algebra();
    let id = LinearMap::identity(DIM);
    for (name, map) in [("psi", psi()), ("sigma", sigma())] {
        println!(
            "{name}: automorphism {}, involution {}",
            g.check_automorphism(&map)?,
            map.compose(&map)? == id
        );
    }
    println!(
        "psi sigma = sigma psi: {}",
        psi().compose(&sigma())? == sigma().compose(&psi())?
    );

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let h = from_params(&random_group_params(&mut rng))?;
    let hi = h.inverse()?;
    println!("h = {}", h.params().to_json());
    for name in ["E1", "A31", "W1"] {
        println!("  Ad(h^-1) {name} = {}", adjoint(&hi, &g.named(name))?);
    }
    println!(
        "  Ad(h) is an automorphism: {}",
        g.check_automorphism(&adjoint_map(&h)?)?
    );
    Ok(())
}
