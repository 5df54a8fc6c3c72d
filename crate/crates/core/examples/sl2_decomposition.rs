//! Writing matrices of SL2(Z) as words in y and u.

use jacobi_mcg::sl2::{abelianize, decompose, eval_syllables, render_syllables, torsion_generators, Mat2};

fn main() {
    let (alpha, beta, gamma) = torsion_generators();
    let m = Mat2::from_i64(13, 8, 8, 5).unwrap();
    for (name, g) in [("alpha", alpha), ("beta", beta), ("gamma", gamma), ("m", m)] {
        let w = decompose(&g);
        assert_eq!(eval_syllables(&w), g);
        println!("{name} = {g}: {}  ab = {}", render_syllables(&w), abelianize(&g).value());
    }
    let big = Mat2::from_i64(1, 1_000_000, 0, 1).unwrap().mul(&Mat2::u_pow(&(-7).into()));
    println!("big = {big}: {}", render_syllables(&decompose(&big)));
    assert!(Mat2::from_i64(2, 0, 0, 1).is_err());
}
