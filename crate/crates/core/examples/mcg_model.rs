//! The extension of the Jacobi group by Z/28.

use jacobi_mcg::mcg::{
    element_order, eval_mcg_word, to_h28, verify_claim3, verify_eq7, verify_sdiff_h28, verify_theorem3,
};

fn main() {
    for w in ["A B A^-1 B^-1", "(Y U Y)^4", "Y U Y B^-1", "A^-1 S Y U Y", "S^28"] {
        println!("{w:>14} = {:?}", eval_mcg_word(w).unwrap());
    }
    for w in ["S", "Y U Y", "A", "Y U"] {
        println!("order of {w} = {:?}", element_order(&eval_mcg_word(w).unwrap(), 1000));
    }
    println!("A B in H_28: {:?}", to_h28(&eval_mcg_word("A B").unwrap()).unwrap().rows());
    for r in [verify_theorem3(), verify_claim3(), verify_eq7(), verify_sdiff_h28(100, 0)] {
        println!("{}: {} ({} checks)", r.suite, if r.pass { "pass" } else { "FAIL" }, r.checks.len());
    }
}
