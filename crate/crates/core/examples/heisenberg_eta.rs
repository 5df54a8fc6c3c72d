//! The Heisenberg group, its Z/m quotients, and the twist eta.

use jacobi_mcg::heis::{eta, heis_to_hm, hmul, hpow, HeisEl};
use jacobi_mcg::sl2::{vec2, Mat2};
use num_bigint::BigInt;

fn main() {
    let (a, b) = (HeisEl::a(), HeisEl::b());
    let comm = hmul(&hmul(&a, &b), &hmul(&hpow(&a, &BigInt::from(-1)), &hpow(&b, &BigInt::from(-1))));
    println!("[A, B] = {comm:?}");
    println!("(AB)^5 = {:?}", hpow(&hmul(&a, &b), &BigInt::from(5)));
    println!("in H_28: {:?}", heis_to_hm(&HeisEl::new(3, 4, 5), 28).unwrap().rows());

    let m = Mat2::y().mul(&Mat2::u()).mul(&Mat2::y());
    for x in [vec2(1, 0), vec2(0, 1), vec2(2, 3)] {
        println!("eta({}, {}; yuy) = {}", x[0], x[1], eta(&x, &m));
    }
}
