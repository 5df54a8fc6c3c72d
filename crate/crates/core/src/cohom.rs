//! Group cohomology of the groups at hand: cyclic groups through the norm
//! map, Mayer-Vietoris assemblies for `SL2(Z)` and the Jacobi group, the
//! split pieces for `G_m`, reduction to `Z/28` coefficients, and the
//! universal coefficient step to integral homology.

use num_bigint::BigInt;
use serde::Serialize;

use crate::abgrp::{
    hom_kernel_cokernel, kernel_basis, mul_by_n, subquotient, CyclicSum, FgAbHom, FgAbelianGroup, IntMatrix,
};
use crate::error::{Error, Result};
use crate::jacobi::{abelianization_of, gm_torsion};

/// `Z/m` acting on `Z^r` by `x -> x·sigma` on row vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicAction {
    m: usize,
    sigma: IntMatrix,
}

impl CyclicAction {
    pub fn new(m: usize, sigma: IntMatrix) -> Result<Self> {
        if m == 0 || sigma.rows() != sigma.cols() {
            return Err(Error::InvalidParameter("need m >= 1 and a square action matrix".into()));
        }
        let r = sigma.rows();
        if sigma.pow(m as u32)? != IntMatrix::identity(r) {
            return Err(Error::ActionOrder(format!("sigma^{m} is not the identity")));
        }
        Ok(CyclicAction { m, sigma })
    }

    pub fn trivial(m: usize, rank: usize) -> Self {
        CyclicAction { m, sigma: IntMatrix::identity(rank) }
    }

    /// `Z/m` generated by a matrix in `SL2(Z)`, acting through its transpose.
    pub fn from_sl2_transpose(m: usize, g: &crate::sl2::Mat2) -> Result<Self> {
        let t = g.transpose();
        let [[a, b], [c, d]] = t.entries();
        let rows = vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]];
        Self::new(m, IntMatrix::from_big_rows(rows, 2)?)
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn sigma(&self) -> &IntMatrix {
        &self.sigma
    }

    pub fn rank(&self) -> usize {
        self.sigma.rows()
    }

    /// The generator as a matrix on column vectors.
    pub fn column_operator(&self) -> IntMatrix {
        self.sigma.transpose()
    }

    /// `N = 1 + T + ... + T^(m-1)` on column vectors.
    pub fn norm(&self) -> IntMatrix {
        let t = self.column_operator();
        let r = self.rank();
        let mut acc = IntMatrix::zeros(r, r);
        let mut p = IntMatrix::identity(r);
        for _ in 0..self.m {
            acc = acc.add(&p).expect("square");
            p = p.mul(&t).expect("square");
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicCohomology {
    #[serde(rename = "H0")]
    pub h0: FgAbelianGroup,
    /// `H^{2k}` for `k >= 1`.
    #[serde(rename = "Heven")]
    pub heven: FgAbelianGroup,
    /// `H^{2k-1}` for `k >= 1`.
    #[serde(rename = "Hodd")]
    pub hodd: FgAbelianGroup,
}

/// `H0 = M^G`, `H^even = M^G / N M` and `H^odd = ker N / (T - 1) M`.
pub fn cyclic_cohomology(act: &CyclicAction) -> Result<CyclicCohomology> {
    let r = act.rank();
    let t_minus_1 = act.column_operator().sub(&IntMatrix::identity(r))?;
    let n = act.norm();
    let invariants = kernel_basis(&t_minus_1);
    let h0 = FgAbelianGroup::free(invariants.cols());
    let (heven, _) = subquotient(&invariants, &n)?;
    let (hodd, _) = subquotient(&kernel_basis(&n), &t_minus_1)?;
    Ok(CyclicCohomology { h0, heven, hodd })
}

#[derive(Clone, Debug, Serialize)]
pub struct Sl2Cohomology {
    #[serde(rename = "H2")]
    pub h2: FgAbelianGroup,
    #[serde(rename = "H3")]
    pub h3: FgAbelianGroup,
    /// Generator of `H^2` inside `H^2(Z/4) + H^2(Z/6) = Z/4 + Z/6`.
    #[serde(serialize_with = "ser_vec")]
    pub kernel_generator: Vec<BigInt>,
}

fn ser_vec<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::json::BigList(v).serialize(s)
}

/// `j*: Z/4 + Z/6 -> Z/2`, `(n, m) -> n + m`.
pub fn j_star() -> FgAbHom {
    FgAbHom::new(CyclicSum::from_orders(&[4, 6]), CyclicSum::from_orders(&[2]), IntMatrix::from_rows(&[[1, 1]]))
        .expect("well defined")
}

/// `H^2(SL2(Z)) = ker j*` and `H^3(SL2(Z)) = coker j*`.
pub fn mv_h2_sl2() -> Result<Sl2Cohomology> {
    let kc = j_star().kernel_cokernel()?;
    let kernel_generator = kc.kernel_generators.first().cloned().unwrap_or_default();
    Ok(Sl2Cohomology { h2: kc.kernel, h3: kc.cokernel, kernel_generator })
}

/// Trivial coefficients `Z` and `H^2(Z^2) = Z` give the outer summands;
/// the middle one is `H^1(Z/m, H^1(Z^2))` with the transposed action.
pub fn lhs_h2_gm(m: u32) -> Result<FgAbelianGroup> {
    let act = CyclicAction::from_sl2_transpose(m as usize, &gm_torsion(m)?)?;
    let middle = cyclic_cohomology(&act)?.hodd;
    Ok(FgAbelianGroup::free(1).direct_sum(&middle).direct_sum(&FgAbelianGroup::cyclic(m.into())))
}

/// Whether the Mayer-Vietoris map is `i4* + i6*` or `i4* - i6*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MvSign {
    Sum,
    Difference,
}

/// `(Z + Z/2 + Z/4) + (Z + Z/6) -> Z + Z/2 + Z/2 + Z/2`.
pub fn mv_gamma_map(sign: MvSign) -> FgAbHom {
    let s = if sign == MvSign::Sum { 1 } else { -1 };
    let m = IntMatrix::from_rows(&[[1, 0, 0, s, 0], [0, 1, 0, 0, 0], [0, 0, 0, 0, 0], [0, 0, 1, 0, s]]);
    FgAbHom::new(CyclicSum::from_orders(&[0, 2, 4, 0, 6]), CyclicSum::from_orders(&[0, 2, 2, 2]), m)
        .expect("reductions are well defined")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaCohomology {
    #[serde(rename = "H1")]
    pub h1: FgAbelianGroup,
    #[serde(rename = "H2")]
    pub h2: FgAbelianGroup,
    #[serde(rename = "H3")]
    pub h3: FgAbelianGroup,
}

pub fn mv_gamma_with(sign: MvSign) -> Result<GammaCohomology> {
    let (h2, h3) = hom_kernel_cokernel(&mv_gamma_map(sign))?;
    let ab = abelianization_of("gammaJ")?;
    Ok(GammaCohomology { h1: FgAbelianGroup::free(ab.free_rank()), h2, h3 })
}

pub fn mv_gamma() -> Result<GammaCohomology> {
    mv_gamma_with(MvSign::Sum)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Z28Pieces {
    pub coker_on_h2: FgAbelianGroup,
    pub ker_on_h3: FgAbelianGroup,
    pub total: FgAbelianGroup,
}

/// `H^2(G, Z/q) = coker(q on H^2) + ker(q on H^3)` for the Jacobi group.
pub fn h2_with_cyclic_coefficients(q: i64) -> Result<Z28Pieces> {
    let g = mv_gamma()?;
    let (_, coker) = hom_kernel_cokernel(&mul_by_n(&g.h2, q))?;
    let (ker, _) = hom_kernel_cokernel(&mul_by_n(&g.h3, q))?;
    Ok(Z28Pieces { total: coker.direct_sum(&ker), coker_on_h2: coker, ker_on_h3: ker })
}

pub fn h2_z28() -> Result<FgAbelianGroup> {
    Ok(h2_with_cyclic_coefficients(28)?.total)
}

/// Solves `H^2 = Hom(H2, Z) + Ext(H1, Z)` and `H^3 = Hom(H3, Z) + Ext(H2, Z)`
/// for `H2`: its rank is the rank of `H^2` and its torsion that of `H^3`.
pub fn uct_homology(h2: &FgAbelianGroup, h3: &FgAbelianGroup, h1ab: &FgAbelianGroup) -> Result<FgAbelianGroup> {
    if h2.torsion_subgroup() != h1ab.torsion_subgroup() {
        return Err(Error::Uct(format!(
            "torsion of H^2 is {} but torsion of H_1 is {}",
            h2.torsion_subgroup(),
            h1ab.torsion_subgroup()
        )));
    }
    Ok(FgAbelianGroup::free(h2.free_rank()).direct_sum(&h3.torsion_subgroup()))
}
