//! Two-cocycles on the Jacobi group and the extensions they define.

use jacobi_mcg::cocyc::{
    cocycle_check, extension_report, normalize_exponents, omega1, omega2, omega3_z28, omega_mcg, CheckMode, CocycleName,
};
use jacobi_mcg::jacobi::JacobiEl;
use num_bigint::BigInt;

fn main() {
    for name in ["fm", "g", "phi", "fsl2", "omega1", "omega2", "omega3"] {
        let n = CocycleName::parse(name, Some(12)).unwrap();
        let mode = match n {
            CocycleName::Fm(_) => CheckMode::Exhaustive(0),
            CocycleName::G | CocycleName::Phi => CheckMode::Exhaustive(2),
            _ => CheckMode::Sampled { trials: 200, seed: 0 },
        };
        let c = cocycle_check(n, mode);
        println!("{:>8}: cocycle = {} on {} triples", n.label(), c.pass, c.triples);
    }

    type Omega = dyn Fn(&JacobiEl, &JacobiEl) -> BigInt;
    let cases: [(&str, &Omega, Option<u64>); 4] = [
        ("omega1", &omega1, None),
        ("omega2", &omega2, None),
        ("omega1 - omega2", &omega_mcg, None),
        ("omega3", &omega3_z28, Some(28)),
    ];
    for (name, w, modulus) in cases {
        let k = extension_report(w, modulus);
        let norm = normalize_exponents(&k, modulus).unwrap();
        println!(
            "{name:>16}: k = {:?}  (m, n) = ({}, {}) k5 = {}",
            k.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            norm.m,
            norm.n,
            norm.k5
        );
    }
}
