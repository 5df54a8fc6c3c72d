//! Exact rational quaternions, used as a second, numeric check of the
//! word identities in [`crate::words`].

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::words::{DiffeoPair, FreeWord, S};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalQuaternion(pub [BigRational; 4]);

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl RationalQuaternion {
    pub fn new(x0: BigRational, x1: BigRational, x2: BigRational, x3: BigRational) -> Self {
        RationalQuaternion([x0, x1, x2, x3])
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        RationalQuaternion(c.map(q))
    }

    pub fn one() -> Self {
        Self::from_ints([1, 0, 0, 0])
    }

    pub fn i() -> Self {
        Self::from_ints([0, 1, 0, 0])
    }

    pub fn j() -> Self {
        Self::from_ints([0, 0, 1, 0])
    }

    pub fn k() -> Self {
        Self::from_ints([0, 0, 0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn norm_sq(&self) -> BigRational {
        self.0.iter().map(|x| x * x).sum()
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.0;
        RationalQuaternion([a.clone(), -b, -c, -d])
    }
}

impl fmt::Debug for RationalQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.0;
        write!(f, "{a} + {b}i + {c}j + {d}k")
    }
}

/// Hamilton product.
pub fn qmul(p: &RationalQuaternion, r: &RationalQuaternion) -> RationalQuaternion {
    let [a1, b1, c1, d1] = &p.0;
    let [a2, b2, c2, d2] = &r.0;
    RationalQuaternion([
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ])
}

pub fn qinv(p: &RationalQuaternion) -> Result<RationalQuaternion> {
    if p.is_zero() {
        return Err(Error::ZeroQuaternion);
    }
    let n = p.norm_sq();
    Ok(RationalQuaternion(p.conj().0.map(|x| x / &n)))
}

/// Substitutes `s` and `t` into `w` and multiplies out.
pub fn eval_word(w: &FreeWord, s: &RationalQuaternion, t: &RationalQuaternion) -> Result<RationalQuaternion> {
    let (si, ti) = (qinv(s)?, qinv(t)?);
    Ok(w.letters().iter().fold(RationalQuaternion::one(), |acc, l| {
        let x = match (l.gen == S, l.inverse) {
            (true, false) => s,
            (true, true) => &si,
            (false, false) => t,
            (false, true) => &ti,
        };
        qmul(&acc, x)
    }))
}

/// Nonzero quaternions with components `n/d`, `n` in `[-5,5]`, `d` in `[1,5]`.
pub struct QuaternionSampler {
    rng: ChaCha8Rng,
}

impl QuaternionSampler {
    pub fn new(seed: u64) -> Self {
        QuaternionSampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn sample(&mut self) -> RationalQuaternion {
        loop {
            let c = [(); 4].map(|_| {
                BigRational::new(
                    BigInt::from(self.rng.gen_range(-5i64..=5)),
                    BigInt::from(self.rng.gen_range(1i64..=5)),
                )
            });
            let r = RationalQuaternion(c);
            if !r.is_zero() {
                return r;
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct CrossCheck {
    pub agree: bool,
    pub trials: usize,
    /// The first `(s, t)` on which the maps differ.
    pub witness: Option<(RationalQuaternion, RationalQuaternion)>,
}

/// Evaluates both maps on seeded random `(s, t)` and compares exactly.
pub fn cross_check(d1: &DiffeoPair, d2: &DiffeoPair, trials: usize, seed: u64) -> CrossCheck {
    let mut sampler = QuaternionSampler::new(seed);
    for n in 0..trials.max(1) {
        let (s, t) = (sampler.sample(), sampler.sample());
        let same = |a: &FreeWord, b: &FreeWord| {
            eval_word(a, &s, &t).expect("nonzero") == eval_word(b, &s, &t).expect("nonzero")
        };
        if !(same(&d1.w1, &d2.w1) && same(&d1.w2, &d2.w2)) {
            return CrossCheck { agree: false, trials: n + 1, witness: Some((s, t)) };
        }
    }
    CrossCheck { agree: true, trials: trials.max(1), witness: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{eval_diffeo_word, gen_diffeo};

    type Q = RationalQuaternion;

    #[test]
    fn hamilton_table() {
        assert_eq!(qmul(&Q::i(), &Q::j()), Q::k());
        assert_eq!(qmul(&Q::j(), &Q::i()), Q::from_ints([0, 0, 0, -1]));
        let p = Q::from_ints([3, -1, 2, 5]);
        assert_eq!(qmul(&p, &Q::one()), p);
        assert_eq!(qmul(&Q::from_ints([1, 1, 0, 0]), &Q::from_ints([1, -1, 0, 0])), Q::from_ints([2, 0, 0, 0]));
    }

    #[test]
    fn inverses() {
        assert_eq!(qinv(&Q::one()).unwrap(), Q::one());
        assert_eq!(qinv(&Q::i()).unwrap(), Q::from_ints([0, -1, 0, 0]));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(qinv(&Q::from_ints([1, 1, 0, 0])).unwrap(), Q::new(half.clone(), -half, q(0), q(0)));
        assert_eq!(qinv(&Q::from_ints([0; 4])), Err(Error::ZeroQuaternion));
    }

    #[test]
    fn words_in_quaternions() {
        let (i, j) = (Q::i(), Q::j());
        assert_eq!(eval_word(&FreeWord::parse("s t").unwrap(), &i, &j).unwrap(), Q::k());
        assert_eq!(eval_word(&FreeWord::parse("t^-1 s t").unwrap(), &i, &j).unwrap(), Q::from_ints([0, -1, 0, 0]));
        assert_eq!(eval_word(&FreeWord::empty(), &i, &j).unwrap(), Q::one());
    }

    #[test]
    fn norm_is_multiplicative() {
        let mut s = QuaternionSampler::new(3);
        for _ in 0..50 {
            let (a, b) = (s.sample(), s.sample());
            assert_eq!(qmul(&a, &b).norm_sq(), a.norm_sq() * b.norm_sq());
        }
    }

    #[test]
    fn cross_check_detects_difference() {
        let yuy = eval_diffeo_word("Y U Y").unwrap();
        let uyu = eval_diffeo_word("U Y U").unwrap();
        assert!(cross_check(&yuy, &uyu, 16, 0).agree);
        assert!(cross_check(&DiffeoPair::identity(), &DiffeoPair::identity(), 16, 0).agree);
        let c = cross_check(&gen_diffeo("Y").unwrap(), &gen_diffeo("U").unwrap(), 16, 1);
        assert!(!c.agree && c.witness.is_some());
    }
}
