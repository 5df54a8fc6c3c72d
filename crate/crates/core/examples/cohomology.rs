//! Cohomology of cyclic groups, SL2(Z) and the Jacobi group.

use jacobi_mcg::cohom::{cyclic_cohomology, h2_with_cyclic_coefficients, lhs_h2_gm, mv_gamma, mv_h2_sl2, CyclicAction};
use jacobi_mcg::jacobi::gm_torsion;

fn main() {
    for m in [2u32, 4, 6] {
        let act = CyclicAction::from_sl2_transpose(m as usize, &gm_torsion(m).unwrap()).unwrap();
        let c = cyclic_cohomology(&act).unwrap();
        println!(
            "Z/{m} on Z^2: H0 = {}, Hodd = {}, Heven = {}; H2(G{m}) = {}",
            c.h0,
            c.hodd,
            c.heven,
            lhs_h2_gm(m).unwrap()
        );
    }
    let s = mv_h2_sl2().unwrap();
    println!("SL2(Z): H2 = {}, H3 = {}", s.h2, s.h3);
    let g = mv_gamma().unwrap();
    println!("Jacobi group: H1 = {}, H2 = {}, H3 = {}", g.h1, g.h2, g.h3);
    let z = h2_with_cyclic_coefficients(28).unwrap();
    println!("with Z/28 coefficients: {} + {} = {}", z.coker_on_h2, z.ker_on_h3, z.total);
}
