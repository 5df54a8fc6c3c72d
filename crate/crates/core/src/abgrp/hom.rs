use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::group::cokernel_with_generators;
use super::{smith_normal_form, CyclicSum, FgAbelianGroup, IntMatrix};
use crate::error::{Error, Result};

/// A homomorphism between explicit cyclic sums. Column `j` of the matrix is
/// the image of the `j`-th domain generator in codomain coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FgAbHom {
    domain: CyclicSum,
    codomain: CyclicSum,
    matrix: IntMatrix,
}

/// Kernel and cokernel of a homomorphism, plus explicit kernel generators
/// (domain coordinates, one per canonical factor of the kernel).
#[derive(Clone, Debug)]
pub struct KernelCokernel {
    pub kernel: FgAbelianGroup,
    pub cokernel: FgAbelianGroup,
    pub kernel_generators: Vec<Vec<BigInt>>,
}

impl FgAbHom {
    /// Checks that each generator of order `d` is sent to an element whose
    /// order divides `d`.
    pub fn new(domain: impl Into<CyclicSum>, codomain: impl Into<CyclicSum>, matrix: IntMatrix) -> Result<Self> {
        let (domain, codomain) = (domain.into(), codomain.into());
        if matrix.rows() != codomain.len() || matrix.cols() != domain.len() {
            return Err(Error::Dimension(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                codomain.len(),
                domain.len()
            )));
        }
        for (j, d) in domain.orders().iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            for (i, e) in codomain.orders().iter().enumerate() {
                let image = &matrix[(i, j)] * d;
                let ok = if e.is_zero() { image.is_zero() } else { image.is_multiple_of(e) };
                if !ok {
                    return Err(Error::TorsionIncompatible(format!(
                        "generator {j} has order {d} but its coordinate {i} is {} in a factor of order {e}",
                        matrix[(i, j)]
                    )));
                }
            }
        }
        Ok(FgAbHom { domain, codomain, matrix })
    }

    pub fn domain(&self) -> &CyclicSum {
        &self.domain
    }

    pub fn codomain(&self) -> &CyclicSum {
        &self.codomain
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        Ok(self.codomain.reduce(&self.matrix.apply(v)?))
    }

    /// Sum of two homomorphisms with the same domain and codomain.
    pub fn add(&self, other: &FgAbHom) -> Result<FgAbHom> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::Dimension("adding homomorphisms with different signatures".into()));
        }
        FgAbHom::new(self.domain.clone(), self.codomain.clone(), self.matrix.add(&other.matrix)?)
    }

    pub fn kernel_cokernel(&self) -> Result<KernelCokernel> {
        let n = self.domain.len();
        let target_relations = self.codomain.relation_columns();
        // x is in the kernel iff F x lies in the span of the codomain relations
        let stacked = self.matrix.hstack(&target_relations)?;
        let solutions = kernel_basis(&stacked);
        let lifted = solutions.row_range(0..n);
        let (kernel, gens) = subquotient(&lifted, &self.domain.relation_columns())?;
        let kernel_generators = gens.iter().map(|g| self.domain.reduce(g)).collect();

        let image_relations = self.matrix.hstack(&target_relations)?;
        let cokernel = FgAbelianGroup::cokernel_of_relations(&image_relations.transpose());
        Ok(KernelCokernel { kernel, cokernel, kernel_generators })
    }
}

/// `(kernel, cokernel)` of `f`, both canonical.
pub fn hom_kernel_cokernel(f: &FgAbHom) -> Result<(FgAbelianGroup, FgAbelianGroup)> {
    let kc = f.kernel_cokernel()?;
    Ok((kc.kernel, kc.cokernel))
}

/// The endomorphism `x -> n x` on the canonical generators of `g`.
pub fn mul_by_n(g: &FgAbelianGroup, n: i64) -> FgAbHom {
    let gens = g.generator_orders();
    let n = BigInt::from(n);
    let diag: Vec<BigInt> =
        gens.orders().iter().map(|o| if o.is_zero() { n.clone() } else { n.mod_floor(o) }).collect();
    FgAbHom::new(gens.clone(), gens, IntMatrix::diagonal(&diag)).expect("multiplication by n is always well defined")
}

/// Basis (as columns) of the integer kernel `{ z : a z = 0 }`.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    s.v.columns(s.rank..a.cols())
}

/// `L / M` for lattices given by generating columns, where `M` must lie inside `L`.
/// Generators of the quotient are returned in ambient coordinates.
pub fn subquotient(l: &IntMatrix, m: &IntMatrix) -> Result<(FgAbelianGroup, Vec<Vec<BigInt>>)> {
    let ambient = l.rows();
    if m.rows() != ambient && m.cols() != 0 {
        return Err(Error::Dimension("subquotient of lattices in different ambient spaces".into()));
    }
    let s = smith_normal_form(l);
    let rank = s.rank;
    // basis of L: columns u_inv[:, i] * d_i for i < rank
    let mut basis = IntMatrix::zeros(ambient, rank);
    for i in 0..rank {
        for r in 0..ambient {
            basis[(r, i)] = &s.u_inv[(r, i)] * &s.d[(i, i)];
        }
    }
    let mut coords = IntMatrix::zeros(rank, m.cols());
    if m.cols() > 0 {
        let transformed = s.u.mul(m)?;
        for c in 0..m.cols() {
            for r in 0..ambient {
                let v = &transformed[(r, c)];
                if r < rank {
                    let d = &s.d[(r, r)];
                    if !v.is_multiple_of(d) {
                        return Err(Error::Dimension("sublattice is not contained in the lattice".into()));
                    }
                    coords[(r, c)] = v / d;
                } else if !v.is_zero() {
                    return Err(Error::Dimension("sublattice is not contained in the lattice".into()));
                }
            }
        }
    }
    let (group, local) = cokernel_with_generators(&coords.transpose());
    let gens = local.iter().map(|g| basis.apply(g)).collect::<Result<Vec<_>>>()?;
    Ok((group, gens))
}

/// Homology `ker(outgoing) / im(incoming)` of `Z^a -> Z^b -> Z^c`.
pub fn lattice_homology(incoming: &IntMatrix, outgoing: &IntMatrix) -> Result<FgAbelianGroup> {
    let k = kernel_basis(outgoing);
    Ok(subquotient(&k, incoming)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[i64]) -> FgAbelianGroup {
        FgAbelianGroup::from_orders(orders)
    }

    #[test]
    fn sum_map_on_z4_z6() {
        let f = FgAbHom::new(
            CyclicSum::from_orders(&[4, 6]),
            CyclicSum::from_orders(&[2]),
            IntMatrix::from_rows(&[[1, 1]]),
        )
        .unwrap();
        let kc = f.kernel_cokernel().unwrap();
        assert_eq!(kc.kernel, g(&[12]));
        assert_eq!(kc.cokernel, g(&[]));
        let gen = &kc.kernel_generators[0];
        let dom = CyclicSum::from_orders(&[4, 6]);
        assert_eq!(dom.element_order(gen), Some(BigInt::from(12)));
        // (1,5) lies in the kernel and has order 12
        let v = f.apply(&[BigInt::from(1), BigInt::from(5)]).unwrap();
        assert!(v[0].is_zero());
    }

    #[test]
    fn times_28_on_z12() {
        let z12 = g(&[12]);
        let (k, c) = hom_kernel_cokernel(&mul_by_n(&z12, 28)).unwrap();
        assert_eq!(k, g(&[4]));
        assert_eq!(c, g(&[4]));
    }

    #[test]
    fn zero_map_on_z2() {
        let f = FgAbHom::new(g(&[2]), g(&[2]), IntMatrix::zeros(1, 1)).unwrap();
        let (k, c) = hom_kernel_cokernel(&f).unwrap();
        assert_eq!(k, g(&[2]));
        assert_eq!(c, g(&[2]));
    }

    #[test]
    fn mul_by_n_shapes() {
        assert_eq!(mul_by_n(&g(&[0]), 28).matrix(), &IntMatrix::from_rows(&[[28]]));
        assert!(mul_by_n(&g(&[2]), 28).matrix().is_zero());
        assert_eq!(mul_by_n(&g(&[0, 12]), 28).matrix(), &IntMatrix::from_rows(&[[4, 0], [0, 28]]));
    }

    #[test]
    fn rejects_torsion_violations() {
        // Z/2 -> Z, 1 -> 1 is not a homomorphism
        let err = FgAbHom::new(g(&[2]), g(&[0]), IntMatrix::from_rows(&[[1]]));
        assert!(matches!(err, Err(Error::TorsionIncompatible(_))));
        // Z/4 -> Z/6, 1 -> 1 is not either
        let err =
            FgAbHom::new(CyclicSum::from_orders(&[4]), CyclicSum::from_orders(&[6]), IntMatrix::from_rows(&[[1]]));
        assert!(err.is_err());
        // Z/4 -> Z/6, 1 -> 3 is fine
        assert!(FgAbHom::new(CyclicSum::from_orders(&[4]), CyclicSum::from_orders(&[6]), IntMatrix::from_rows(&[[3]]))
            .is_ok());
    }

    #[test]
    fn homology_of_complex() {
        // Z --2--> Z --0--> Z : homology in the middle is Z/2
        let h = lattice_homology(&IntMatrix::from_rows(&[[2]]), &IntMatrix::zeros(1, 1)).unwrap();
        assert_eq!(h, g(&[2]));
    }
}
