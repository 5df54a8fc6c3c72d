//! Presentations of the Jacobi group and its finite-index relatives.

use jacobi_mcg::jacobi::{abelianization_of, verify_amalgam, verify_lemma1, verify_lemma6, Builtin};

fn main() {
    for r in [verify_lemma1(), verify_lemma6(), verify_amalgam()] {
        println!("{}: {} ({} checks)", r.suite, if r.pass { "pass" } else { "FAIL" }, r.checks.len());
    }
    for name in ["gammaJ", "G2", "G4", "G6", "H28", "E(1,0)", "E(0,1)", "E(1,-1)"] {
        println!("{name:>8} ab = {}", abelianization_of(name).unwrap());
    }
    println!("{}", Builtin::GammaJ.text());
}
