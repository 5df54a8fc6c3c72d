//! Exact integer linear algebra: Smith normal form, finitely generated
//! abelian groups, and kernels/cokernels of homomorphisms between them.

mod group;
mod hom;
mod matrix;
mod snf;

pub use group::{cokernel_with_generators, CyclicSum, FgAbelianGroup};
pub use hom::{hom_kernel_cokernel, kernel_basis, lattice_homology, mul_by_n, subquotient, FgAbHom, KernelCokernel};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithForm};

/// Canonical form of `Z^n / rowspan(relations)`.
pub fn cokernel_of_relations(relations: &IntMatrix) -> FgAbelianGroup {
    FgAbelianGroup::cokernel_of_relations(relations)
}
