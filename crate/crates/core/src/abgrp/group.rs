use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::{smith_normal_form, IntMatrix};
use crate::json;

/// A finitely generated abelian group in invariant-factor form
/// `Z^free_rank + Z/d1 + ... + Z/dk` with `1 < d1 | d2 | ... | dk`.
///
/// The representation is canonical, so two values are equal exactly when the
/// groups are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FgAbelianGroup {
    torsion: Vec<BigInt>,
    free_rank: usize,
}

impl FgAbelianGroup {
    pub fn trivial() -> Self {
        FgAbelianGroup { torsion: Vec::new(), free_rank: 0 }
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup { torsion: Vec::new(), free_rank: rank }
    }

    /// `Z/n`; `n = 0` gives `Z`, `n = ±1` the trivial group.
    pub fn cyclic(n: i64) -> Self {
        Self::from_cyclic_orders(&[BigInt::from(n)])
    }

    /// Builds the canonical form of `Z/o1 + Z/o2 + ...` (an order of 0 means `Z`).
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Self {
        CyclicSum::new(orders.to_vec()).canonical()
    }

    /// Convenience constructor from small orders, e.g. `&[0, 12]` for `Z + Z/12`.
    pub fn from_orders(orders: &[i64]) -> Self {
        Self::from_cyclic_orders(&orders.iter().map(|&o| BigInt::from(o)).collect::<Vec<_>>())
    }

    /// Builds a group from a torsion list and free rank, canonicalizing it.
    pub fn new(torsion: &[BigInt], free_rank: usize) -> Self {
        let mut orders = torsion.to_vec();
        orders.extend(std::iter::repeat_n(BigInt::zero(), free_rank));
        Self::from_cyclic_orders(&orders)
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    pub fn torsion_subgroup(&self) -> FgAbelianGroup {
        FgAbelianGroup { torsion: self.torsion.clone(), free_rank: 0 }
    }

    pub fn direct_sum(&self, other: &FgAbelianGroup) -> FgAbelianGroup {
        let mut orders = self.generator_orders().orders;
        orders.extend(other.generator_orders().orders);
        Self::from_cyclic_orders(&orders)
    }

    /// The canonical generator list: torsion factors first, then the free part.
    pub fn generator_orders(&self) -> CyclicSum {
        let mut orders = self.torsion.clone();
        orders.extend(std::iter::repeat_n(BigInt::zero(), self.free_rank));
        CyclicSum { orders }
    }

    /// Canonical form of `Z^n / rowspan(relations)`.
    pub fn cokernel_of_relations(relations: &IntMatrix) -> Self {
        cokernel_with_generators(relations).0
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for FgAbelianGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("FgAbelianGroup", 2)?;
        s.serialize_field("free_rank", &self.free_rank)?;
        s.serialize_field("torsion", &json::BigList(&self.torsion))?;
        s.end()
    }
}

/// An explicit direct sum of cyclic groups `Z/o1 + ... + Z/on` (order 0 is `Z`).
///
/// Unlike [`FgAbelianGroup`] this keeps the chosen generators, so homomorphisms
/// can be written down on natural bases such as `Z + Z/2 + Z/4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSum {
    orders: Vec<BigInt>,
}

impl CyclicSum {
    pub fn new(orders: Vec<BigInt>) -> Self {
        CyclicSum { orders: orders.into_iter().map(|o| o.abs()).collect() }
    }

    pub fn from_orders(orders: &[i64]) -> Self {
        Self::new(orders.iter().map(|&o| BigInt::from(o)).collect())
    }

    pub fn orders(&self) -> &[BigInt] {
        &self.orders
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn concat(&self, other: &CyclicSum) -> CyclicSum {
        let mut orders = self.orders.clone();
        orders.extend(other.orders.iter().cloned());
        CyclicSum { orders }
    }

    /// Relation columns: one column `o_i * e_i` per finite factor.
    pub fn relation_columns(&self) -> IntMatrix {
        let finite: Vec<usize> = (0..self.orders.len()).filter(|&i| !self.orders[i].is_zero()).collect();
        let mut r = IntMatrix::zeros(self.orders.len(), finite.len());
        for (c, &i) in finite.iter().enumerate() {
            r[(i, c)] = self.orders[i].clone();
        }
        r
    }

    pub fn canonical(&self) -> FgAbelianGroup {
        FgAbelianGroup::cokernel_of_relations(&self.relation_columns().transpose())
    }

    /// Reduces coordinates into `[0, o_i)` on finite factors.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        use num_integer::Integer;
        v.iter().zip(&self.orders).map(|(x, o)| if o.is_zero() { x.clone() } else { x.mod_floor(o) }).collect()
    }

    /// Order of an element given in these coordinates, `None` if infinite.
    pub fn element_order(&self, v: &[BigInt]) -> Option<BigInt> {
        use num_integer::Integer;
        let mut acc = BigInt::one();
        for (x, o) in v.iter().zip(&self.orders) {
            if o.is_zero() {
                if !x.is_zero() {
                    return None;
                }
                continue;
            }
            let g = x.gcd(o);
            let ord = if x.mod_floor(o).is_zero() { BigInt::one() } else { o / g };
            acc = acc.lcm(&ord);
        }
        Some(acc)
    }
}

impl From<&FgAbelianGroup> for CyclicSum {
    fn from(g: &FgAbelianGroup) -> Self {
        g.generator_orders()
    }
}

impl From<FgAbelianGroup> for CyclicSum {
    fn from(g: FgAbelianGroup) -> Self {
        g.generator_orders()
    }
}

/// Canonical form of `Z^n / rowspan(relations)` together with, for each
/// canonical generator (torsion first, then free), a representative vector
/// in the original coordinates.
pub fn cokernel_with_generators(relations: &IntMatrix) -> (FgAbelianGroup, Vec<Vec<BigInt>>) {
    let n = relations.cols();
    let s = smith_normal_form(relations);
    // rowspan(R) * V = rowspan(D); new coordinate e_i corresponds to row i of V^-1
    let mut torsion = Vec::new();
    let mut gens = Vec::new();
    for i in 0..s.rank {
        let d = s.d[(i, i)].clone();
        if !d.is_one() {
            torsion.push(d);
            gens.push(s.v_inv.row(i).to_vec());
        }
    }
    let mut free_gens = Vec::new();
    for i in s.rank..n {
        free_gens.push(s.v_inv.row(i).to_vec());
    }
    let free_rank = free_gens.len();
    gens.extend(free_gens);
    (FgAbelianGroup { torsion, free_rank }, gens)
}
