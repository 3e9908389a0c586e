//! Center, derived and lower central series, Killing form, radical, and the
//! quotients by a few ideals.

use vinberg::canonical::{named_sum, paper_algebra, paper_subspaces};

fn main() -> vinberg::Result<()> {
    let g = paper_algebra();
    println!("center: {}", g.format_subspace(&g.center()));
    for (k, d) in g.derived_series().iter().enumerate() {
        println!("derived {k}: dim {:2} {}", d.dim(), g.format_subspace(d));
    }
    for (k, c) in g.lower_central_series().iter().enumerate() {
        println!("lower central {k}: dim {}", c.dim());
    }
    println!(
        "solvable: {}, nilpotent: {}",
        g.is_solvable(),
        g.is_nilpotent()
    );

    let radical = g.radical()?;
    println!("radical: {}", g.format_subspace(&radical));
    let k = g.killing_restricted(&named_sum(&["s3", "s3'"]))?;
    println!("det Killing(s3 + s3') = {}", k.det()?);

    for name in ["<E3>", "h3'", "h5"] {
        let (q, _) = g.quotient(&paper_subspaces()[name])?;
        println!(
            "g / {name}: dim {}, radical dim {}, center dim {}",
            q.dim(),
            q.radical()?.dim(),
            q.center().dim()
        );
    }
    let (q, _) = g.quotient(&radical)?;
    println!(
        "g / radical: dim {}, semisimple {}",
        q.dim(),
        q.radical()?.is_zero()
    );
    Ok(())
}
