//! Smith normal form, abelian groups and the kernel/cokernel of a map.

use jacobi_mcg::abgrp::{
    hom_kernel_cokernel, mul_by_n, smith_normal_form, CyclicSum, FgAbHom, FgAbelianGroup, IntMatrix,
};

fn main() {
    let a = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
    let s = smith_normal_form(&a);
    println!("invariant factors: {:?}", s.invariant_factors().iter().map(|d| d.to_string()).collect::<Vec<_>>());
    assert_eq!(s.u.mul(&a).unwrap().mul(&s.v).unwrap(), s.d);

    let g = FgAbelianGroup::cokernel_of_relations(&a);
    println!("Z^3 / rows = {g}");

    // Z/4 + Z/6 -> Z/2, (n, m) -> n + m
    let f =
        FgAbHom::new(CyclicSum::from_orders(&[4, 6]), CyclicSum::from_orders(&[2]), IntMatrix::from_rows(&[[1, 1]]))
            .unwrap();
    let kc = f.kernel_cokernel().unwrap();
    println!("ker = {}, coker = {}", kc.kernel, kc.cokernel);

    let z12 = FgAbelianGroup::cyclic(12);
    let (k, c) = hom_kernel_cokernel(&mul_by_n(&z12, 28)).unwrap();
    println!("28 on Z/12: ker = {k}, coker = {c}");
}
