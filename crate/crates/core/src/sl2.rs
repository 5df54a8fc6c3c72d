//! `SL2(Z)` with unbounded entries, Euclidean decomposition into the
//! generators `y = [[1,1],[0,1]]` and `u = [[1,0],[-1,1]]`, and the
//! abelianization onto `Z/12`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::json::Big;
use crate::syntax::{parse_word, Alphabet, Letter};

/// An integer row vector `(x1, x2)`.
pub type Vec2 = [BigInt; 2];

pub fn vec2(x1: i64, x2: i64) -> Vec2 {
    [BigInt::from(x1), BigInt::from(x2)]
}

pub fn vec2_add(a: &Vec2, b: &Vec2) -> Vec2 {
    [&a[0] + &b[0], &a[1] + &b[1]]
}

pub fn vec2_neg(a: &Vec2) -> Vec2 {
    [-&a[0], -&a[1]]
}

/// `[[a, b], [c, d]]` with `ad - bc = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Mat2 {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(Error::NotSpecialLinear(det.to_string()));
        }
        Ok(Mat2 { a, b, c, d })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    fn raw(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::raw(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    pub fn minus_identity() -> Self {
        Self::raw(-BigInt::one(), BigInt::zero(), BigInt::zero(), -BigInt::one())
    }

    /// `y^k = [[1,k],[0,1]]`.
    pub fn y_pow(k: &BigInt) -> Self {
        Self::raw(BigInt::one(), k.clone(), BigInt::zero(), BigInt::one())
    }

    /// `u^k = [[1,0],[-k,1]]`.
    pub fn u_pow(k: &BigInt) -> Self {
        Self::raw(BigInt::one(), BigInt::zero(), -k, BigInt::one())
    }

    pub fn y() -> Self {
        Self::y_pow(&BigInt::one())
    }

    pub fn u() -> Self {
        Self::u_pow(&BigInt::one())
    }

    pub fn entries(&self) -> [[&BigInt; 2]; 2] {
        [[&self.a, &self.b], [&self.c, &self.d]]
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Self::raw(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }

    pub fn inv(&self) -> Mat2 {
        Self::raw(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn transpose(&self) -> Mat2 {
        Self::raw(self.a.clone(), self.c.clone(), self.b.clone(), self.d.clone())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Right action on a row vector: `X·M`.
    pub fn act(&self, x: &Vec2) -> Vec2 {
        [&x[0] * &self.a + &x[1] * &self.c, &x[0] * &self.b + &x[1] * &self.d]
    }
}

impl Group for Mat2 {
    fn op(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn inverse(&self) -> Self {
        self.inv()
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Serializes as `[[a,b],[c,d]]`; callers wrap it as `{"m": ...}`.
impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [[Big(&self.a), Big(&self.b)], [Big(&self.c), Big(&self.d)]].serialize(serializer)
    }
}

pub fn alphabet() -> Alphabet {
    Alphabet::new(&["y", "u"])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SlGen {
    Y,
    U,
}

/// A run `g^exp` in a generator word. Exponents are unbounded so that
/// decompositions of huge matrices stay short.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syllable {
    pub gen: SlGen,
    pub exp: BigInt,
}

impl Syllable {
    pub fn matrix(&self) -> Mat2 {
        match self.gen {
            SlGen::Y => Mat2::y_pow(&self.exp),
            SlGen::U => Mat2::u_pow(&self.exp),
        }
    }
}

pub type SlWord = Vec<Syllable>;

pub fn syllables_from_letters(word: &[Letter]) -> SlWord {
    let mut out = Vec::new();
    for l in word {
        let gen = if l.gen == 0 { SlGen::Y } else { SlGen::U };
        push_syllable(&mut out, gen, BigInt::from(if l.inverse { -1 } else { 1 }));
    }
    out
}

/// Expands runs into single letters. Only sensible for modest exponents.
pub fn letters_from_syllables(word: &[Syllable]) -> Vec<Letter> {
    let mut out = Vec::new();
    for s in word {
        let gen = match s.gen {
            SlGen::Y => 0,
            SlGen::U => 1,
        };
        let n: usize = s.exp.abs().try_into().expect("exponent too large to expand");
        out.extend(std::iter::repeat_n(Letter::new(gen, s.exp.is_negative()), n));
    }
    out
}

/// Appends `gen^exp`, merging with the last run and dropping empty runs.
pub fn push_syllable(word: &mut SlWord, gen: SlGen, exp: BigInt) {
    if exp.is_zero() {
        return;
    }
    if let Some(last) = word.last_mut() {
        if last.gen == gen {
            last.exp += exp;
            if last.exp.is_zero() {
                word.pop();
            }
            return;
        }
    }
    word.push(Syllable { gen, exp });
}

/// `"y u y^2 u y"`; the empty word is `"1"`.
pub fn render_syllables(word: &[Syllable]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    let parts: Vec<String> = word
        .iter()
        .map(|s| {
            let g = match s.gen {
                SlGen::Y => "y",
                SlGen::U => "u",
            };
            if s.exp.is_one() {
                g.to_string()
            } else {
                format!("{g}^{}", s.exp)
            }
        })
        .collect();
    parts.join(" ")
}

pub fn eval_syllables(word: &[Syllable]) -> Mat2 {
    word.iter().fold(Mat2::identity(), |acc, s| acc.mul(&s.matrix()))
}

pub fn eval_matrix_word(text: &str) -> Result<Mat2> {
    let word = parse_word(text, &alphabet())?;
    Ok(eval_syllables(&syllables_from_letters(&word)))
}

/// Writes `M` as a word in `y` and `u`.
///
/// Row operations by powers of `y` and `u` run the Euclidean algorithm on
/// the first column until `c = 0`; what remains is `y^b` or `-y^{-b}`, and
/// `-I` is emitted as `(yuy)^2`.
pub fn decompose(m: &Mat2) -> SlWord {
    let mut cur = m.clone();
    let mut applied: SlWord = Vec::new();
    while !cur.c.is_zero() {
        let (gen, exp) = if cur.a.is_zero() {
            (SlGen::Y, BigInt::one())
        } else if cur.a.abs() > cur.c.abs() {
            (SlGen::Y, -cur.a.div_floor(&cur.c))
        } else {
            (SlGen::U, cur.c.div_floor(&cur.a))
        };
        let step = Syllable { gen, exp };
        cur = step.matrix().mul(&cur);
        applied.push(step);
    }
    let mut word = Vec::new();
    for s in &applied {
        push_syllable(&mut word, s.gen, -&s.exp);
    }
    if cur.a.is_one() {
        push_syllable(&mut word, SlGen::Y, cur.b.clone());
    } else {
        for _ in 0..2 {
            push_syllable(&mut word, SlGen::Y, BigInt::one());
            push_syllable(&mut word, SlGen::U, BigInt::one());
            push_syllable(&mut word, SlGen::Y, BigInt::one());
        }
        push_syllable(&mut word, SlGen::Y, -&cur.b);
    }
    word
}

/// An element of `Z/12`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z12Class(u8);

impl Z12Class {
    pub fn new(v: i64) -> Self {
        Z12Class(v.rem_euclid(12) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl std::ops::Add for Z12Class {
    type Output = Z12Class;

    fn add(self, o: Z12Class) -> Z12Class {
        Z12Class((self.0 + o.0) % 12)
    }
}

pub fn exponent_sum(word: &[Syllable]) -> BigInt {
    word.iter().map(|s| &s.exp).sum()
}

/// `ab(M)`: exponent sum of any word for `M`, with `ab(y) = ab(u) = 1`.
/// Both relators have exponent sum divisible by 12, so this is well defined.
pub fn abelianize(m: &Mat2) -> Z12Class {
    let s = exponent_sum(&decompose(m)).mod_floor(&BigInt::from(12));
    Z12Class(u8::try_from(s).expect("residue below 12"))
}

/// `(alpha, beta, gamma)` of orders 2, 4 and 6.
pub fn torsion_generators() -> (Mat2, Mat2, Mat2) {
    (
        Mat2::minus_identity(),
        Mat2::raw(BigInt::zero(), -BigInt::one(), BigInt::one(), BigInt::zero()),
        Mat2::raw(BigInt::zero(), BigInt::one(), -BigInt::one(), BigInt::one()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::power;

    fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        Mat2::from_i64(a, b, c, d).unwrap()
    }

    #[test]
    fn products() {
        let yuy = Mat2::y().mul(&Mat2::u()).mul(&Mat2::y());
        assert_eq!(yuy, m(0, 1, -1, 0));
        assert_eq!(yuy.mul(&yuy), Mat2::minus_identity());
        let g = m(5, 3, 3, 2);
        assert!(g.mul(&g.inv()).is_identity());
        assert!(Mat2::from_i64(1, 1, 1, 1).is_err());
    }

    #[test]
    fn word_evaluation() {
        assert_eq!(eval_matrix_word("y").unwrap(), m(1, 1, 0, 1));
        assert!(eval_matrix_word("(yuy)^4").unwrap().is_identity());
        assert!(eval_matrix_word("y y^-1").unwrap().is_identity());
        assert_eq!(eval_matrix_word("y u").unwrap(), torsion_generators().2);
    }

    #[test]
    fn decompose_round_trips() {
        assert!(decompose(&Mat2::identity()).is_empty());
        for g in
            [m(0, 1, -1, 0), m(0, -1, 1, 0), m(-1, 0, 0, -1), m(-1, 7, 0, -1), m(13, 8, 21, 13), m(-34, 21, 55, -34)]
        {
            assert_eq!(eval_syllables(&decompose(&g)), g, "{g}");
        }
    }

    #[test]
    fn decompose_huge_entries() {
        let big = BigInt::from(10).pow(40u32);
        let g = Mat2::y_pow(&big).mul(&Mat2::u_pow(&(&big + 7))).mul(&m(2, 1, 1, 1));
        let w = decompose(&g);
        assert_eq!(eval_syllables(&w), g);
        assert!(w.len() < 30);
    }

    #[test]
    fn abelianization_values() {
        assert_eq!(abelianize(&Mat2::identity()).value(), 0);
        assert_eq!(abelianize(&Mat2::y()).value(), 1);
        assert_eq!(abelianize(&Mat2::u()).value(), 1);
        assert_eq!(abelianize(&Mat2::minus_identity()).value(), 6);
        let yuy = eval_matrix_word("y u y").unwrap();
        assert_eq!(abelianize(&yuy).value(), 3);
        assert_eq!(abelianize(&eval_matrix_word("u y u").unwrap()).value(), 3);
        assert_eq!(abelianize(&power(&yuy, 4, &Mat2::identity())).value(), 0);
    }

    #[test]
    fn torsion_orders() {
        let (a, b, g) = torsion_generators();
        let id = Mat2::identity();
        assert!(power(&a, 2, &id).is_identity());
        assert!(power(&b, 4, &id).is_identity());
        assert_eq!(power(&b, 2, &id), a);
        assert!(power(&g, 6, &id).is_identity());
        assert_eq!(power(&g, 3, &id), a);
        assert!(!power(&g, 2, &id).is_identity());
    }

    #[test]
    fn row_action() {
        assert_eq!(Mat2::y().act(&vec2(1, 0)), vec2(1, 1));
        assert_eq!(Mat2::u().act(&vec2(0, 1)), vec2(-1, 1));
    }
}
