//! Heisenberg-type groups: the normal form `A^alpha B^beta S^k` with
//! `A B A^-1 B^-1 = S`, the triple law of `H(Z)`, the matrix groups `H_m`,
//! and the action of `SL2(Z)` words on the first by conjugation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::json::Big;
use crate::sl2::{decompose, SlGen, Syllable, Vec2};

/// `A^alpha B^beta S^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeisEl {
    pub alpha: BigInt,
    pub beta: BigInt,
    pub k: BigInt,
}

impl HeisEl {
    pub fn new(alpha: impl Into<BigInt>, beta: impl Into<BigInt>, k: impl Into<BigInt>) -> Self {
        HeisEl { alpha: alpha.into(), beta: beta.into(), k: k.into() }
    }

    pub fn identity() -> Self {
        Self::new(0, 0, 0)
    }

    pub fn a() -> Self {
        Self::new(1, 0, 0)
    }

    pub fn b() -> Self {
        Self::new(0, 1, 0)
    }

    pub fn sigma() -> Self {
        Self::new(0, 0, 1)
    }

    pub fn from_vector(x: &Vec2) -> Self {
        HeisEl { alpha: x[0].clone(), beta: x[1].clone(), k: BigInt::zero() }
    }

    pub fn vector(&self) -> Vec2 {
        [self.alpha.clone(), self.beta.clone()]
    }
}

/// `(a,b,k)(a',b',k') = (a+a', b+b', k+k' - b a')`.
pub fn hmul(g: &HeisEl, h: &HeisEl) -> HeisEl {
    HeisEl { alpha: &g.alpha + &h.alpha, beta: &g.beta + &h.beta, k: &g.k + &h.k - &g.beta * &h.alpha }
}

pub fn hinv(g: &HeisEl) -> HeisEl {
    HeisEl { alpha: -&g.alpha, beta: -&g.beta, k: -&g.k - &g.alpha * &g.beta }
}

/// `g^n` in closed form; valid for every integer `n`.
pub fn hpow(g: &HeisEl, n: &BigInt) -> HeisEl {
    let tri: BigInt = n * (n - 1) / 2;
    HeisEl { alpha: n * &g.alpha, beta: n * &g.beta, k: n * &g.k - &g.alpha * &g.beta * tri }
}

impl Group for HeisEl {
    fn op(&self, other: &Self) -> Self {
        hmul(self, other)
    }

    fn inverse(&self) -> Self {
        hinv(self)
    }
}

/// The triple law `(a,b,c)(a',b',c') = (a+a', b+b', c+c' + a b' - b a')`.
pub fn hz_mul(g: [i64; 3], h: [i64; 3]) -> [i64; 3] {
    [g[0] + h[0], g[1] + h[1], g[2] + h[2] + g[0] * h[1] - g[1] * h[0]]
}

/// `[[1, a, l], [0, 1, b], [0, 0, 1]]` with `l` read mod `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HmMatrix {
    pub a: BigInt,
    pub b: BigInt,
    pub l: BigInt,
    pub m: u64,
}

impl HmMatrix {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, l: impl Into<BigInt>, m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("modulus must be at least 1".into()));
        }
        let l = l.into().mod_floor(&BigInt::from(m));
        Ok(HmMatrix { a: a.into(), b: b.into(), l, m })
    }

    pub fn identity(m: u64) -> Result<Self> {
        Self::new(0, 0, 0, m)
    }

    /// The generators `A'`, `B'` and `S'`.
    pub fn generators(m: u64) -> Result<[HmMatrix; 3]> {
        Ok([Self::new(1, 0, 0, m)?, Self::new(0, 1, 0, m)?, Self::new(0, 0, 1, m)?])
    }

    pub fn rows(&self) -> [[BigInt; 3]; 3] {
        let (o, z) = (BigInt::one(), BigInt::zero());
        [[o.clone(), self.a.clone(), self.l.clone()], [z.clone(), o.clone(), self.b.clone()], [z.clone(), z, o]]
    }
}

impl Serialize for HmMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows = self.rows();
        let rows: Vec<Vec<Big>> = rows.iter().map(|r| r.iter().map(Big).collect()).collect();
        rows.serialize(serializer)
    }
}

pub fn hm_mul(g: &HmMatrix, h: &HmMatrix) -> Result<HmMatrix> {
    if g.m != h.m {
        return Err(Error::InvalidParameter(format!("moduli differ: {} and {}", g.m, h.m)));
    }
    HmMatrix::new(&g.a + &h.a, &g.b + &h.b, &g.l + &h.l + &g.a * &h.b, g.m)
}

impl Group for HmMatrix {
    fn op(&self, other: &Self) -> Self {
        hm_mul(self, other).expect("same modulus")
    }

    fn inverse(&self) -> Self {
        HmMatrix::new(-&self.a, -&self.b, &self.a * &self.b - &self.l, self.m).expect("valid modulus")
    }
}

/// `A^alpha B^beta S^k -> A'^alpha B'^beta S'^k`, i.e. corner `l = k + alpha beta`.
pub fn heis_to_hm(g: &HeisEl, m: u64) -> Result<HmMatrix> {
    HmMatrix::new(g.alpha.clone(), g.beta.clone(), &g.k + &g.alpha * &g.beta, m)
}

/// Image of `h` under the automorphism sending `A -> img_a`, `B -> img_b`
/// and fixing `S`.
fn apply_automorphism(h: &HeisEl, img_a: &HeisEl, img_b: &HeisEl) -> HeisEl {
    let p = hpow(img_a, &h.alpha);
    let q = hpow(img_b, &h.beta);
    let mut out = hmul(&p, &q);
    out.k += &h.k;
    out
}

/// Conjugation by `y^e` sends `A -> A B^e`; by `u^e` it sends `B -> B A^-e`.
pub fn conj_by_syllable(h: &HeisEl, s: &Syllable) -> HeisEl {
    let e = &s.exp;
    match s.gen {
        SlGen::Y => {
            apply_automorphism(h, &HeisEl { alpha: BigInt::one(), beta: e.clone(), k: BigInt::zero() }, &HeisEl::b())
        }
        SlGen::U => apply_automorphism(h, &HeisEl::a(), &HeisEl { alpha: -e, beta: BigInt::one(), k: e.clone() }),
    }
}

/// Applies the letters in order, so the vector part transforms as `X·M`.
pub fn conj_by_sl2_word(h: &HeisEl, word: &[Syllable]) -> HeisEl {
    word.iter().fold(h.clone(), |acc, s| conj_by_syllable(&acc, s))
}

/// The `S`-exponent picked up when `(X, 0)` is moved across `M`.
pub fn eta(x: &Vec2, m: &crate::sl2::Mat2) -> BigInt {
    conj_by_sl2_word(&HeisEl::from_vector(x), &decompose(m)).k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{commutator, power};
    use crate::sl2::{eval_matrix_word, syllables_from_letters, vec2, Mat2};
    use crate::syntax::parse_word;

    fn h(a: i64, b: i64, k: i64) -> HeisEl {
        HeisEl::new(a, b, k)
    }

    fn word(text: &str) -> Vec<Syllable> {
        syllables_from_letters(&parse_word(text, &crate::sl2::alphabet()).unwrap())
    }

    #[test]
    fn normal_form_law() {
        assert_eq!(hmul(&HeisEl::a(), &HeisEl::b()), h(1, 1, 0));
        assert_eq!(hmul(&HeisEl::b(), &HeisEl::a()), h(1, 1, -1));
        assert_eq!(commutator(&HeisEl::a(), &HeisEl::b()), HeisEl::sigma());
        let g = h(3, -2, 5);
        assert_eq!(hmul(&g, &HeisEl::identity()), g);
        assert_eq!(hmul(&HeisEl::sigma(), &g), hmul(&g, &HeisEl::sigma()));
    }

    #[test]
    fn associativity_and_commutators_on_small_box() {
        let r = -2..=2;
        let box_: Vec<HeisEl> =
            r.clone().flat_map(|a| r.clone().flat_map(move |b| (-2..=2).map(move |k| h(a, b, k)))).collect();
        for x in &box_ {
            assert_eq!(hmul(x, &hinv(x)), HeisEl::identity());
            for y in &box_ {
                let c = commutator(&HeisEl::from_vector(&x.vector()), &HeisEl::from_vector(&y.vector()));
                assert_eq!(c.k, &x.alpha * &y.beta - &x.beta * &y.alpha);
                for z in box_.iter().step_by(7) {
                    assert_eq!(hmul(&hmul(x, y), z), hmul(x, &hmul(y, z)));
                }
            }
        }
    }

    #[test]
    fn closed_form_powers() {
        let g = h(2, -3, 4);
        for n in -5i64..=5 {
            assert_eq!(hpow(&g, &BigInt::from(n)), power(&g, n, &HeisEl::identity()), "{n}");
        }
    }

    #[test]
    fn triple_law() {
        assert_eq!(hz_mul([1, 0, 0], [0, 1, 0]), [1, 1, 1]);
        assert_eq!(hz_mul([0, 1, 0], [1, 0, 0]), [1, 1, -1]);
    }

    #[test]
    fn matrix_groups() {
        let [a, b, s] = HmMatrix::generators(28).unwrap();
        assert_eq!(hm_mul(&a, &b).unwrap().l, BigInt::one());
        assert_eq!(hm_mul(&b, &a).unwrap().l, BigInt::zero());
        assert_eq!(commutator(&a, &b), s);
        let id = HmMatrix::identity(28).unwrap();
        assert_eq!(power(&s, 28, &id), id);
        assert!((1..28).all(|k| power(&s, k, &id) != id));
        assert_eq!(hm_mul(&a, &id).unwrap(), a);
        assert!(HmMatrix::new(0, 0, 0, 0).is_err());
    }

    #[test]
    fn heis_maps_onto_h28() {
        let xs = [h(1, 0, 0), h(0, 1, 0), h(3, -2, 7), h(-5, 4, 30), h(2, 2, -1)];
        for x in &xs {
            for y in &xs {
                let lhs = heis_to_hm(&hmul(x, y), 28).unwrap();
                let rhs = hm_mul(&heis_to_hm(x, 28).unwrap(), &heis_to_hm(y, 28).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(heis_to_hm(&h(0, 0, 28), 28).unwrap(), HmMatrix::identity(28).unwrap());
    }

    #[test]
    fn generator_conjugations() {
        assert_eq!(conj_by_sl2_word(&HeisEl::a(), &word("y")), h(1, 1, 0));
        assert_eq!(conj_by_sl2_word(&HeisEl::b(), &word("u")), h(-1, 1, 1));
        assert_eq!(conj_by_sl2_word(&HeisEl::sigma(), &word("y u^-3 y")), HeisEl::sigma());
    }

    #[test]
    fn relators_act_trivially() {
        for rel in ["y u y u^-1 y^-1 u^-1", "(y u y)^4"] {
            for g in [HeisEl::a(), HeisEl::b(), h(3, -4, 2)] {
                assert_eq!(conj_by_sl2_word(&g, &word(rel)), g, "{rel}");
            }
        }
    }

    #[test]
    fn eta_values() {
        assert!(eta(&vec2(4, -9), &Mat2::identity()).is_zero());
        assert_eq!(eta(&vec2(0, 1), &Mat2::u()), BigInt::one());
        assert!(eta(&vec2(1, 0), &Mat2::y()).is_zero());
    }

    #[test]
    fn vector_part_is_row_action() {
        let w = word("y^3 u^-2 y u y^-5");
        let m = eval_matrix_word("y^3 u^-2 y u y^-5").unwrap();
        let x = vec2(7, -3);
        assert_eq!(conj_by_sl2_word(&HeisEl::from_vector(&x), &w).vector(), m.act(&x));
    }
}
