//! The rational arithmetic that fixes the commutator exponent.

use jacobi_mcg::mcg::mu_arithmetic;

fn main() {
    let mu = mu_arithmetic();
    println!("B1 = {}, p1 = +-{}", mu.bernoulli.0, mu.p1);
    println!("mu of the commutator = +-{}", mu.mu_commutator.0);
    println!("mu of the generator  = {}", mu.mu_generator.0);
    println!("k in {:?}, oriented k = {}", mu.candidates, mu.k);
}
