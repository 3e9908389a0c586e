//! Sweeps the four-parameter family of linear forms, printing the verdict,
//! the isotropy algebra and whether the two routes to genericity agree.

use vinberg::canonical::paper_algebra;
use vinberg::coadjoint::{
    classify, genericity_crosscheck, isotropy_algebra, linear_form, root_spaces_q,
    satisfies_ishi_bound, XiParams,
};
use vinberg::linalg::rational::int;

fn main() -> vinberg::Result<()> {
    let g = paper_algebra();
    println!("q = {:?}", root_spaces_q(&g)?);
    println!(
        "{:>4} {:>3} {:>3}  {:<24} isotropy",
        "xi3", "n", "n'", "verdict"
    );
    for xi3 in [-2, -1, 0, 1] {
        for n in 0..=2 {
            for np in 0..=2 {
                let p = XiParams::ints(xi3, 1, n, np);
                let iso = isotropy_algebra(&g, &linear_form(&p))?;
                let class = classify(&p);
                let check = if class.is_unitarizable() {
                    if genericity_crosscheck(&g, &p)? {
                        "ok"
                    } else {
                        "MISMATCH"
                    }
                } else {
                    "-"
                };
                println!(
                    "{xi3:>4} {n:>3} {np:>3}  {:<24} {} ({check})",
                    class.to_string(),
                    g.format_subspace(&iso)
                );
            }
        }
    }
    // s = (n, n', -2 xi3) against q / 2
    let s = [int(1), int(1), int(2)];
    println!(
        "s = (1, 1, 2) above q/2: {}",
        satisfies_ishi_bound(&s, &root_spaces_q(&g)?)
    );
    Ok(())
}
