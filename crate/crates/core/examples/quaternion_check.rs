//! Evaluating word maps on rational quaternions.

use jacobi_mcg::quat::{cross_check, eval_word, qinv, qmul, RationalQuaternion};
use jacobi_mcg::words::{eval_composition, FreeWord};

fn main() {
    let (i, j) = (RationalQuaternion::i(), RationalQuaternion::j());
    println!("ij = {:?}", qmul(&i, &j));
    let p = RationalQuaternion::from_ints([1, 2, -1, 3]);
    println!("p^-1 = {:?}", qinv(&p).unwrap());

    let w = FreeWord::parse("s t s^-1 t^-1").unwrap();
    println!("[i, j] = {:?}", eval_word(&w, &i, &j).unwrap());

    for (lhs, rhs) in [("Y U Y", "U Y U"), ("A B", "B A")] {
        let c = cross_check(&eval_composition(lhs).unwrap(), &eval_composition(rhs).unwrap(), 16, 0);
        println!("{lhs} = {rhs}: agree = {} after {} trials", c.agree, c.trials);
    }
}
