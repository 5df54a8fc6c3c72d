//! Smith normal form over the integers.
//!
//! For any integer matrix `A` this computes unimodular `U`, `V` with
//! `U * A * V = D`, where `D` is diagonal with a nonnegative divisibility
//! chain `d1 | d2 | ...`. The inverses of `U` and `V` are tracked alongside,
//! which is what the cokernel and kernel routines need to recover explicit
//! generators.
//!
//! Pivoting always picks the nonzero entry of smallest absolute value in the
//! active block, which keeps intermediate entries small.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl SmithForm {
    /// Nonzero diagonal entries, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }
}

struct Reducer {
    d: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
    u_inv: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.d.add_row_multiple(dst, src, k);
        self.u.add_row_multiple(dst, src, k);
        self.u_inv.add_col_multiple(src, dst, &-k);
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.d.add_col_multiple(dst, src, k);
        self.v.add_col_multiple(dst, src, k);
        self.v_inv.add_row_multiple(src, dst, &-k);
    }

    fn negate_row(&mut self, i: usize) {
        self.d.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    fn smallest_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.d.rows() {
            for j in t..self.d.cols() {
                let a = self.d[(i, j)].abs();
                if a.is_zero() {
                    continue;
                }
                if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                    best = Some((i, j, a));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut r = Reducer {
        d: a.clone(),
        u: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
        u_inv: IntMatrix::identity(m),
        v_inv: IntMatrix::identity(n),
    };
    let mut rank = 0;
    for t in 0..m.min(n) {
        loop {
            let Some((pi, pj)) = r.smallest_in_block(t) else {
                return finish(r, rank);
            };
            r.swap_rows(t, pi);
            r.swap_cols(t, pj);
            let p = r.d[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..m {
                if r.d[(i, t)].is_zero() {
                    continue;
                }
                let q = r.d[(i, t)].div_floor(&p);
                r.add_row(i, t, &-q);
                dirty |= !r.d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if r.d[(t, j)].is_zero() {
                    continue;
                }
                let q = r.d[(t, j)].div_floor(&p);
                r.add_col(j, t, &-q);
                dirty |= !r.d[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            // pivot must divide the rest of the block
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !r.d[(i, j)].is_multiple_of(&p)));
            if let Some(i) = offender {
                r.add_row(t, i, &BigInt::one());
                continue;
            }
            break;
        }
        if r.d[(t, t)].is_negative() {
            r.negate_row(t);
        }
        rank += 1;
    }
    finish(r, rank)
}

fn finish(r: Reducer, rank: usize) -> SmithForm {
    SmithForm { d: r.d, u: r.u, v: r.v, u_inv: r.u_inv, v_inv: r.v_inv, rank }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).unwrap().mul(&s.v).unwrap(), s.d);
        assert_eq!(s.u.mul(&s.u_inv).unwrap(), IntMatrix::identity(a.rows()));
        assert_eq!(s.v.mul(&s.v_inv).unwrap(), IntMatrix::identity(a.cols()));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        s
    }

    #[test]
    fn identity_is_its_own_form() {
        let s = check(&IntMatrix::identity(2));
        assert_eq!(s.d, IntMatrix::identity(2));
    }

    #[test]
    fn two_by_two_example() {
        let s = check(&IntMatrix::from_rows(&[[2, 4], [6, 8]]));
        assert_eq!(s.d, IntMatrix::from_rows(&[[2, 0], [0, 4]]));
    }

    #[test]
    fn zero_matrix() {
        let s = check(&IntMatrix::zeros(2, 3));
        assert!(s.d.is_zero());
        assert_eq!(s.rank, 0);
    }

    #[test]
    fn needs_divisibility_fixup() {
        // diag(2, 3) is diagonal but not a divisibility chain
        let s = check(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(s.invariant_factors(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn empty_shapes() {
        check(&IntMatrix::zeros(0, 3));
        check(&IntMatrix::zeros(3, 0));
    }
}
