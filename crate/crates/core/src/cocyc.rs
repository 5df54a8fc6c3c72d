//! Explicit 2-cocycles, a checker for the cocycle identity, twisted
//! (central extension) products, and the relation exponents of an extension
//! of the Jacobi group.

use std::collections::HashSet;
use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::{eval_word, Group};
use crate::heis::eta;
use crate::jacobi::{gammaj_generators, jmul, JacobiEl};
use crate::json::BigList;
use crate::report::Report;
use crate::sample::{random_jacobi, random_sl2, rng};
use crate::sl2::{abelianize, torsion_generators, Mat2, Vec2};
use crate::syntax::{parse_word, Alphabet};

/// `1` if `p + q >= m` for representatives in `[0, m)`, else `0`.
pub fn f_m(p: i64, q: i64, m: i64) -> i64 {
    i64::from(p.rem_euclid(m) + q.rem_euclid(m) >= m)
}

pub fn f_sl2(a: &Mat2, b: &Mat2) -> i64 {
    f_m(abelianize(a).value().into(), abelianize(b).value().into(), 12)
}

/// `g((a,b),(s,t)) = a t`.
pub fn g_z2(v: &Vec2, w: &Vec2) -> BigInt {
    &v[0] * &w[1]
}

/// `phi(v, w) = det [v; w]`.
pub fn phi_z2(v: &Vec2, w: &Vec2) -> BigInt {
    &v[0] * &w[1] - &w[0] * &v[1]
}

/// `omega1((M,X),(M',X')) = eta(X, M') - (X M')_2 X'_1`.
pub fn omega1(g: &JacobiEl, h: &JacobiEl) -> BigInt {
    let xm = h.m.act(&g.x);
    eta(&g.x, &h.m) - &xm[1] * &h.x[0]
}

/// `omega2 = f` pulled back along `(M, X) -> M`.
pub fn omega2(g: &JacobiEl, h: &JacobiEl) -> BigInt {
    BigInt::from(f_sl2(&g.m, &h.m))
}

/// `lambda_M(X) mod 2` for the crossed homomorphism with `lambda_y(X) = X_2`,
/// `lambda_u(X) = X_1` and `lambda_{MN}(X) = lambda_M(X) + lambda_N(X M)`.
pub fn lambda_mod2(m: &Mat2, x: &Vec2) -> BigInt {
    let mut x = x.clone();
    let mut acc = BigInt::zero();
    for s in crate::sl2::decompose(m) {
        let e = &s.exp;
        let tri: BigInt = e * (e - 1) / 2;
        acc += match s.gen {
            crate::sl2::SlGen::Y => e * &x[1] + &tri * &x[0],
            crate::sl2::SlGen::U => e * &x[0] - &tri * &x[1],
        };
        x = s.matrix().act(&x);
    }
    acc.mod_floor(&BigInt::from(2))
}

/// `14 lambda_{M'}(X)`, a `Z/28`-valued cocycle of order 2.
pub fn omega3_z28(g: &JacobiEl, h: &JacobiEl) -> BigInt {
    lambda_mod2(&h.m, &g.x) * 14
}

/// `omega1 - omega2`, the cocycle of the mapping class group model.
pub fn omega_mcg(g: &JacobiEl, h: &JacobiEl) -> BigInt {
    omega1(g, h) - omega2(g, h)
}

/// An element of `Z/m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Zm {
    pub v: i64,
    pub m: i64,
}

impl Group for Zm {
    fn op(&self, o: &Self) -> Self {
        Zm { v: (self.v + o.v).rem_euclid(self.m), m: self.m }
    }

    fn inverse(&self) -> Self {
        Zm { v: (-self.v).rem_euclid(self.m), m: self.m }
    }
}

impl Group for Vec2 {
    fn op(&self, o: &Self) -> Self {
        crate::sl2::vec2_add(self, o)
    }

    fn inverse(&self) -> Self {
        crate::sl2::vec2_neg(self)
    }
}

/// Result of checking `w(g,h) + w(gh,k) = w(h,k) + w(g,hk)`.
#[derive(Clone, Debug, Serialize)]
pub struct CocycleCheck {
    pub pass: bool,
    pub normalized: bool,
    pub triples: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

/// Checks the cocycle identity on the given triples, and normalization on
/// every element that occurs, reducing values mod `modulus` when given.
/// Triples are visited in order and the first failure is reported.
pub fn check_triples<G, I>(
    triples: I,
    identity: &G,
    omega: &dyn Fn(&G, &G) -> BigInt,
    modulus: Option<&BigInt>,
) -> CocycleCheck
where
    G: Group + Debug,
    I: IntoIterator<Item = (G, G, G)>,
{
    let reduce = |v: BigInt| match modulus {
        Some(n) => v.mod_floor(n),
        None => v,
    };
    let mut count = 0u64;
    let mut normalized = true;
    let mut witness = None;
    for (g, h, k) in triples {
        count += 1;
        for x in [&g, &h, &k] {
            if !reduce(omega(identity, x)).is_zero() || !reduce(omega(x, identity)).is_zero() {
                if normalized {
                    witness.get_or_insert_with(|| json!({"not_normalized_at": format!("{x:?}")}));
                }
                normalized = false;
            }
        }
        let lhs = reduce(omega(&g, &h) + omega(&g.op(&h), &k));
        let rhs = reduce(omega(&h, &k) + omega(&g, &h.op(&k)));
        if lhs != rhs {
            witness = Some(json!({
                "g": format!("{g:?}"), "h": format!("{h:?}"), "k": format!("{k:?}"),
                "lhs": lhs.to_string(), "rhs": rhs.to_string(),
            }));
            return CocycleCheck { pass: false, normalized, triples: count, witness };
        }
    }
    CocycleCheck { pass: normalized, normalized, triples: count, witness }
}

fn all_triples<G: Clone>(set: &[G]) -> impl Iterator<Item = (G, G, G)> + '_ {
    set.iter()
        .flat_map(move |a| set.iter().flat_map(move |b| set.iter().map(move |c| (a.clone(), b.clone(), c.clone()))))
}

pub fn box_z2(bound: i64) -> Vec<Vec2> {
    (-bound..=bound).flat_map(|a| (-bound..=bound).map(move |b| crate::sl2::vec2(a, b))).collect()
}

/// Every element reachable by a word of length at most `radius`, in the
/// order first reached.
pub fn ball<G: Group + Eq + Hash>(gens: &[G], identity: &G, radius: usize) -> Vec<G> {
    let steps: Vec<G> = gens.iter().cloned().chain(gens.iter().map(Group::inverse)).collect();
    let mut seen = HashSet::new();
    let mut frontier = vec![identity.clone()];
    seen.insert(identity.clone());
    let mut out = vec![identity.clone()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for x in &frontier {
            for s in &steps {
                let y = x.op(s);
                if seen.insert(y.clone()) {
                    out.push(y.clone());
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    /// Finite domains are enumerated fully; `Z^2` uses the box `[-b, b]^2`
    /// and the infinite matrix groups the ball of generator words of length `b`.
    Exhaustive(u64),
    Sampled {
        trials: u64,
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CocycleName {
    Fm(i64),
    Fsl2,
    G,
    Phi,
    Omega1,
    Omega2,
    Omega3,
}

impl CocycleName {
    pub fn parse(name: &str, m: Option<i64>) -> Result<Self> {
        Ok(match name {
            "fm" => {
                let m = m.unwrap_or(12);
                if m < 1 {
                    return Err(Error::InvalidParameter(format!("m must be at least 1, got {m}")));
                }
                CocycleName::Fm(m)
            }
            "fsl2" | "f" => CocycleName::Fsl2,
            "g" => CocycleName::G,
            "phi" => CocycleName::Phi,
            "omega1" => CocycleName::Omega1,
            "omega2" => CocycleName::Omega2,
            "omega3" => CocycleName::Omega3,
            _ => return Err(Error::InvalidParameter(format!("unknown cocycle `{name}`"))),
        })
    }

    pub fn label(self) -> String {
        match self {
            CocycleName::Fm(m) => format!("f_{m}"),
            CocycleName::Fsl2 => "f".into(),
            CocycleName::G => "g".into(),
            CocycleName::Phi => "phi".into(),
            CocycleName::Omega1 => "omega1".into(),
            CocycleName::Omega2 => "omega2".into(),
            CocycleName::Omega3 => "omega3".into(),
        }
    }
}

fn sampled_triples<G>(trials: u64, seed: u64, mut draw: impl FnMut(&mut crate::sample::Rng8) -> G) -> Vec<(G, G, G)> {
    let mut r = rng(seed);
    (0..trials).map(|_| (draw(&mut r), draw(&mut r), draw(&mut r))).collect()
}

/// Runs the cocycle check for one of the named cocycles.
pub fn cocycle_check(name: CocycleName, mode: CheckMode) -> CocycleCheck {
    const WORD_LEN: usize = 12;
    const BOX: i64 = 9;
    match name {
        CocycleName::Fm(m) => {
            let set: Vec<Zm> = (0..m).map(|v| Zm { v, m }).collect();
            let triples: Vec<(Zm, Zm, Zm)> = match mode {
                CheckMode::Exhaustive(_) => all_triples(&set).collect(),
                CheckMode::Sampled { trials, seed } => {
                    use rand::Rng;
                    sampled_triples(trials, seed, |r| Zm { v: r.gen_range(0..m), m })
                }
            };
            let omega = move |a: &Zm, b: &Zm| BigInt::from(f_m(a.v, b.v, m));
            check_triples(triples, &Zm { v: 0, m }, &omega, None)
        }
        CocycleName::G | CocycleName::Phi => {
            let omega: &dyn Fn(&Vec2, &Vec2) -> BigInt = if name == CocycleName::G { &g_z2 } else { &phi_z2 };
            let zero = crate::sl2::vec2(0, 0);
            match mode {
                CheckMode::Exhaustive(b) => {
                    let set = box_z2(b as i64);
                    check_triples(all_triples(&set), &zero, omega, None)
                }
                CheckMode::Sampled { trials, seed } => {
                    let t = sampled_triples(trials, seed, |r| crate::sample::random_vec2(r, BOX));
                    check_triples(t, &zero, omega, None)
                }
            }
        }
        CocycleName::Fsl2 => {
            let omega = |a: &Mat2, b: &Mat2| BigInt::from(f_sl2(a, b));
            let id = Mat2::identity();
            match mode {
                CheckMode::Exhaustive(b) => {
                    let set = ball(&[Mat2::y(), Mat2::u()], &id, b as usize);
                    check_triples(all_triples(&set), &id, &omega, None)
                }
                CheckMode::Sampled { trials, seed } => {
                    check_triples(sampled_triples(trials, seed, |r| random_sl2(r, WORD_LEN)), &id, &omega, None)
                }
            }
        }
        CocycleName::Omega1 | CocycleName::Omega2 | CocycleName::Omega3 => {
            let omega: &dyn Fn(&JacobiEl, &JacobiEl) -> BigInt = match name {
                CocycleName::Omega1 => &omega1,
                CocycleName::Omega2 => &omega2,
                _ => &omega3_z28,
            };
            let modulus = (name == CocycleName::Omega3).then(|| BigInt::from(28));
            let id = JacobiEl::identity();
            match mode {
                CheckMode::Exhaustive(b) => {
                    let set = ball(&gammaj_generators(), &id, b as usize);
                    check_triples(all_triples(&set), &id, omega, modulus.as_ref())
                }
                CheckMode::Sampled { trials, seed } => {
                    let t = sampled_triples(trials, seed, |r| random_jacobi(r, WORD_LEN));
                    check_triples(t, &id, omega, modulus.as_ref())
                }
            }
        }
    }
}

/// The twisted product `(g,k)(h,l) = (gh, k + l + w(g,h))`.
pub fn extension_mul<G: Group>(omega: &dyn Fn(&G, &G) -> BigInt, a: &(G, BigInt), b: &(G, BigInt)) -> (G, BigInt) {
    (a.0.op(&b.0), &a.1 + &b.1 + omega(&a.0, &b.0))
}

pub fn extension_inv<G: Group>(omega: &dyn Fn(&G, &G) -> BigInt, a: &(G, BigInt)) -> (G, BigInt) {
    let gi = a.0.inverse();
    let k = -&a.1 - omega(&a.0, &gi);
    (gi, k)
}

/// Evaluates a word on the standard lifts `(g, 0)` of the generators.
pub fn extension_eval<G: Group>(
    omega: &dyn Fn(&G, &G) -> BigInt,
    gens: &[G],
    word: &[crate::syntax::Letter],
    identity: &G,
) -> (G, BigInt) {
    let lifts: Vec<(G, BigInt)> = gens.iter().map(|g| (g.clone(), BigInt::zero())).collect();
    let inverses: Vec<(G, BigInt)> = lifts.iter().map(|l| extension_inv(omega, l)).collect();
    word.iter().fold((identity.clone(), BigInt::zero()), |acc, l| {
        extension_mul(omega, &acc, if l.inverse { &inverses[l.gen] } else { &lifts[l.gen] })
    })
}

/// `w(e1, e2) - w(e2, e1)`, which classifies `H^2(Z^2) = Z`.
pub fn commutator_invariant(omega: &dyn Fn(&Vec2, &Vec2) -> BigInt) -> BigInt {
    let (e1, e2) = (crate::sl2::vec2(1, 0), crate::sl2::vec2(0, 1));
    omega(&e1, &e2) - omega(&e2, &e1)
}

/// In the extension of `Z/m` twisted by `omega`, the lift `Z` of `1`
/// satisfies `Z^m = C^k`; returns `k`.
pub fn cyclic_extension_exponent(omega: &dyn Fn(&Zm, &Zm) -> BigInt, m: i64) -> BigInt {
    let z = (Zm { v: 1, m }, BigInt::zero());
    let mut acc = (Zm { v: 0, m }, BigInt::zero());
    for _ in 0..m {
        acc = extension_mul(omega, &acc, &z);
    }
    acc.1
}

/// The seven relations whose central exponents `k0..k6` are reported.
pub const EXTENSION_RELATIONS: [(&str, &str, &str); 7] = [
    ("YUY=UYU", "Y U Y", "U Y U"),
    ("(YUY)^4=1", "(Y U Y)^4", "1"),
    ("AB=BA", "A B", "B A"),
    ("BU=UBA^-1", "B U", "U B A^-1"),
    ("AY=YAB", "A Y", "Y A B"),
    ("AU=UA", "A U", "U A"),
    ("BY=YB", "B Y", "Y B"),
];

/// For each relation `L = R` of the Jacobi group, the exponent `k` with
/// `L = R S^k` on the standard lifts `Y, U, A, B` in the `omega`-twisted
/// extension. With a modulus the exponents are reduced into `[0, n)`.
pub fn extension_report(omega: &dyn Fn(&JacobiEl, &JacobiEl) -> BigInt, modulus: Option<u64>) -> [BigInt; 7] {
    let gens = gammaj_generators();
    let alphabet = Alphabet::new(&["Y", "U", "A", "B"]);
    let id = JacobiEl::identity();
    EXTENSION_RELATIONS.map(|(_, lhs, rhs)| {
        let l = extension_eval(omega, &gens, &parse_word(lhs, &alphabet).expect("static"), &id);
        let r = extension_eval(omega, &gens, &parse_word(rhs, &alphabet).expect("static"), &id);
        debug_assert_eq!(l.0, r.0);
        let k = extension_mul(omega, &extension_inv(omega, &r), &l).1;
        match modulus {
            Some(n) => k.mod_floor(&BigInt::from(n)),
            None => k,
        }
    })
}

/// Normal form `E_{m,n}` of an extension from its exponents `k0..k6`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Normalized {
    /// Exponent in `AB = BA S^m`.
    #[serde(serialize_with = "ser_big")]
    pub m: BigInt,
    /// Exponent in `(YUY)^4 = S^n` once `k0` has been absorbed into `U`.
    #[serde(serialize_with = "ser_big")]
    pub n: BigInt,
    /// Common value of `k5 = k6`; always 0 over `Z`, and 0 or `n/2` over `Z/n`.
    #[serde(serialize_with = "ser_big")]
    pub k5: BigInt,
}

fn ser_big<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::json::Big(v).serialize(s)
}

/// Applies the substitutions `U -> U S^k0`, `A -> A S^-k3`, `B -> B S^k4`
/// and then enforces `k6 = -k5` and `k6 = k5`.
pub fn normalize_exponents(k: &[BigInt; 7], modulus: Option<u64>) -> Result<Normalized> {
    let m = k[2].clone();
    let n = &k[1] + &k[0] * 4;
    match modulus {
        None => {
            if !k[5].is_zero() || !k[6].is_zero() {
                return Err(Error::InconsistentExtension(format!(
                    "over Z the relations force k5 = k6 = 0, got k5 = {}, k6 = {}",
                    k[5], k[6]
                )));
            }
            Ok(Normalized { m, n, k5: BigInt::zero() })
        }
        Some(q) => {
            let q = BigInt::from(q);
            let r = |v: &BigInt| v.mod_floor(&q);
            if r(&(&k[6] + &k[5])) != BigInt::zero() || r(&(&k[6] - &k[5])) != BigInt::zero() {
                return Err(Error::InconsistentExtension(format!(
                    "need k6 = -k5 and k6 = k5 mod {q}, got k5 = {}, k6 = {}",
                    k[5], k[6]
                )));
            }
            Ok(Normalized { m: r(&m), n: r(&n), k5: r(&k[5]) })
        }
    }
}

/// Order of the class with the given normal form in `H^2(Gamma^J, Z/q)`.
/// `m` and `k5` are read mod `q`, `n` mod `gcd(12, q)` since changing the
/// lift of `Y` shifts `n` by 12.
pub fn class_order(norm: &Normalized, q: u64) -> u64 {
    let q_big = BigInt::from(q);
    let n_mod = BigInt::from(q.gcd(&12));
    let order_in = |v: &BigInt, modulus: &BigInt| -> u64 {
        let v = v.mod_floor(modulus);
        if v.is_zero() {
            1
        } else {
            (modulus / v.gcd(modulus)).to_u64().expect("small")
        }
    };
    let a = order_in(&norm.m, &q_big);
    let b = order_in(&norm.n, &n_mod);
    let c = order_in(&norm.k5, &q_big);
    a.lcm(&b).lcm(&c)
}

pub fn exponents_json(k: &[BigInt; 7]) -> Value {
    serde_json::to_value(BigList(k)).expect("serializable")
}

/// The full cocycle battery.
pub fn verify_cocycles(samples: u64, seed: u64) -> Report {
    let mut r = Report::new("cocycles");
    for m in 1..=12 {
        let c = cocycle_check(CocycleName::Fm(m), CheckMode::Exhaustive(0));
        r.check(format!("f_{m} is a cocycle (exhaustive)"), c.pass, json!(c));
    }
    for name in [CocycleName::G, CocycleName::Phi] {
        let c = cocycle_check(name, CheckMode::Exhaustive(3));
        r.check(format!("{} is a cocycle on [-3,3]^2", name.label()), c.pass, json!(c));
    }
    for name in [CocycleName::Fsl2, CocycleName::Omega1, CocycleName::Omega2, CocycleName::Omega3] {
        let c = cocycle_check(name, CheckMode::Sampled { trials: samples, seed });
        r.check(format!("{} is a cocycle ({samples} samples)", name.label()), c.pass, json!(c));
    }

    let ci = |w: &dyn Fn(&Vec2, &Vec2) -> BigInt| commutator_invariant(w);
    r.check("commutator invariant of g is 1", ci(&g_z2) == BigInt::from(1), Value::Null);
    r.check("commutator invariant of phi is 2", ci(&phi_z2) == BigInt::from(2), Value::Null);
    r.check("commutator invariant of 0 is 0", ci(&|_: &Vec2, _: &Vec2| BigInt::zero()).is_zero(), Value::Null);
    let restricted = |v: &Vec2, w: &Vec2| omega1(&JacobiEl::translation(v.clone()), &JacobiEl::translation(w.clone()));
    r.check("omega1 restricted to Z^2 has commutator invariant 1", ci(&restricted) == BigInt::from(1), Value::Null);

    for t in 1..=3 {
        let w = move |a: &Zm, b: &Zm| BigInt::from(t * f_m(a.v, b.v, 4));
        let k = cyclic_extension_exponent(&w, 4);
        r.check(format!("{t} f_4 gives Z^4 = C^{t}"), k == BigInt::from(t), json!(k.to_string()));
    }

    type Case<'a> = (&'a str, &'a dyn Fn(&JacobiEl, &JacobiEl) -> BigInt, [i64; 7], (i64, i64));
    let cases: [Case; 3] = [
        ("omega1", &omega1, [0, 0, 1, 0, 0, 0, 0], (1, 0)),
        ("omega2", &omega2, [0, 1, 0, 0, 0, 0, 0], (0, 1)),
        ("omega1 - omega2", &omega_mcg, [0, -1, 1, 0, 0, 0, 0], (1, -1)),
    ];
    for (label, w, expected, (m, n)) in cases {
        let k = extension_report(w, None);
        let ok = k.iter().zip(expected).all(|(a, b)| *a == BigInt::from(b));
        r.check(format!("{label} exponents k0..k6"), ok, exponents_json(&k));
        let norm = normalize_exponents(&k, None);
        let ok = norm.as_ref().map(|v| v.m == BigInt::from(m) && v.n == BigInt::from(n)).unwrap_or(false);
        r.check(format!("{label} defines E_({m},{n})"), ok, json!(norm.ok()));
    }

    let alpha = JacobiEl::matrix(torsion_generators().0);
    let yuy = JacobiEl::matrix(Mat2::y().mul(&Mat2::u()).mul(&Mat2::y()));
    let yuy3 = jmul(&jmul(&yuy, &yuy), &yuy);
    r.check("omega2 on lifts of (yuy)^3 and yuy is 1", omega2(&yuy3, &yuy) == BigInt::from(1), Value::Null);
    r.check("omega2 on -I, -I is 1", omega2(&alpha, &alpha) == BigInt::from(1), Value::Null);
    r
}

/// Word in `Y, U, A, B` evaluated in the Jacobi group.
pub fn jacobi_word(text: &str) -> Result<JacobiEl> {
    let w = parse_word(text, &Alphabet::new(&["Y", "U", "A", "B"]))?;
    Ok(eval_word(&gammaj_generators(), &w, &JacobiEl::identity()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl2::vec2;

    #[test]
    fn cyclic_cocycle_values() {
        assert_eq!(f_m(3, 2, 4), 1);
        assert!((0..7).all(|q| f_m(0, q, 7) == 0));
        assert_eq!(f_m(6, 6, 12), 1);
        assert_eq!(f_m(5, 6, 12), 0);
    }

    #[test]
    fn sl2_cocycle_values() {
        let yuy = Mat2::y().mul(&Mat2::u()).mul(&Mat2::y());
        let yuy3 = yuy.mul(&yuy).mul(&yuy);
        assert_eq!(f_sl2(&Mat2::identity(), &yuy), 0);
        assert_eq!(f_sl2(&yuy, &yuy3), 1);
        assert_eq!(f_sl2(&Mat2::y(), &Mat2::u()), 0);
    }

    #[test]
    fn plane_cocycles() {
        assert_eq!(g_z2(&vec2(1, 0), &vec2(0, 1)), BigInt::from(1));
        assert!(g_z2(&vec2(0, 1), &vec2(1, 0)).is_zero());
        assert!(g_z2(&vec2(0, 0), &vec2(3, 4)).is_zero());
        assert_eq!(phi_z2(&vec2(1, 0), &vec2(0, 1)), BigInt::from(1));
        assert!(phi_z2(&vec2(2, 5), &vec2(2, 5)).is_zero());
        assert_eq!(phi_z2(&vec2(2, 3), &vec2(1, 1)), BigInt::from(-1));
    }

    #[test]
    fn omega_values() {
        let [y, u, a, b] = gammaj_generators();
        assert!(omega1(&JacobiEl::identity(), &a).is_zero());
        assert!(omega1(&y, &u).is_zero());
        assert_eq!(omega1(&a, &b) - omega1(&b, &a), BigInt::from(1));
        assert!(omega2(&a, &b).is_zero());
        assert!(omega2(&JacobiEl::identity(), &y).is_zero());
    }

    #[test]
    fn non_cocycle_is_caught() {
        let bad = |v: &Vec2, w: &Vec2| &v[0] * &w[0] * &w[0];
        let c = check_triples(all_triples(&box_z2(2)), &vec2(0, 0), &bad, None);
        assert!(!c.pass && c.witness.is_some());
    }

    #[test]
    fn named_cocycles_pass() {
        for m in 1..=12 {
            assert!(cocycle_check(CocycleName::Fm(m), CheckMode::Exhaustive(0)).pass);
        }
        assert!(cocycle_check(CocycleName::G, CheckMode::Exhaustive(2)).pass);
        assert!(cocycle_check(CocycleName::Phi, CheckMode::Exhaustive(2)).pass);
        for n in [CocycleName::Fsl2, CocycleName::Omega1, CocycleName::Omega2, CocycleName::Omega3] {
            let c = cocycle_check(n, CheckMode::Sampled { trials: 60, seed: 1 });
            assert!(c.pass, "{n:?} {c:?}");
            let c = cocycle_check(n, CheckMode::Exhaustive(1));
            assert!(c.pass, "{n:?} {c:?}");
        }
    }

    #[test]
    fn lifted_commutators() {
        let w = |v: &Vec2, u: &Vec2| g_z2(v, u);
        let gens = [vec2(1, 0), vec2(0, 1)];
        let word = parse_word("a b a^-1 b^-1", &Alphabet::new(&["a", "b"])).unwrap();
        let c = extension_eval(&w, &gens, &word, &vec2(0, 0));
        assert_eq!(c, (vec2(0, 0), BigInt::from(1)));
        assert_eq!(commutator_invariant(&|_, _| BigInt::zero()), BigInt::zero());
    }

    #[test]
    fn coboundaries_have_zero_invariant() {
        let c = |v: &Vec2| &v[0] * &v[0] * 3 - &v[0] * &v[1] * 5 + &v[1] * 7;
        let delta = move |v: &Vec2, w: &Vec2| c(v) + c(w) - c(&crate::sl2::vec2_add(v, w));
        assert!(commutator_invariant(&delta).is_zero());
        let sum = |v: &Vec2, w: &Vec2| g_z2(v, w) + phi_z2(v, w);
        assert_eq!(commutator_invariant(&sum), BigInt::from(3));
    }

    #[test]
    fn extension_reports() {
        let k = extension_report(&omega1, None);
        assert_eq!(k, [0, 0, 1, 0, 0, 0, 0].map(BigInt::from));
        let k = extension_report(&omega2, None);
        assert_eq!(k, [0, 1, 0, 0, 0, 0, 0].map(BigInt::from));
        let k = extension_report(&omega_mcg, None);
        assert_eq!(k, [0, -1, 1, 0, 0, 0, 0].map(BigInt::from));
        let k = extension_report(&omega3_z28, Some(28));
        assert_eq!(k, [0, 0, 0, 0, 0, 14, 14].map(BigInt::from));
    }

    #[test]
    fn normalization() {
        let k = |v: [i64; 7]| v.map(BigInt::from);
        let n = normalize_exponents(&k([0, 1, 0, 0, 0, 0, 0]), None).unwrap();
        assert_eq!((n.m, n.n), (BigInt::from(0), BigInt::from(1)));
        let n = normalize_exponents(&k([0, -1, 1, 0, 0, 0, 0]), None).unwrap();
        assert_eq!((n.m, n.n), (BigInt::from(1), BigInt::from(-1)));
        let n = normalize_exponents(&k([1, 0, 0, 0, 0, 0, 0]), None).unwrap();
        assert_eq!((n.m, n.n), (BigInt::from(0), BigInt::from(4)));
        assert!(normalize_exponents(&k([0, 0, 0, 0, 0, 1, 1]), None).is_err());
        assert!(normalize_exponents(&k([0, 0, 0, 0, 0, 1, 1]), Some(28)).is_err());
        let n = normalize_exponents(&k([0, 0, 0, 0, 0, 14, 14]), Some(28)).unwrap();
        assert_eq!(n.k5, BigInt::from(14));
    }

    #[test]
    fn relifting_u_moves_k0_into_n() {
        // Twisting by the coboundary of c(U) = 1 (c = 0 elsewhere) re-lifts U as U S.
        let delta = |g: &JacobiEl, h: &JacobiEl| {
            let c = |x: &JacobiEl| BigInt::from(i64::from(*x == gammaj_generators()[1]));
            c(g) + c(h) - c(&jmul(g, h))
        };
        let shifted = |g: &JacobiEl, h: &JacobiEl| omega2(g, h) - delta(g, h);
        let k = extension_report(&shifted, None);
        let n = normalize_exponents(&k, None).unwrap();
        assert_eq!((n.m, n.n), (BigInt::from(0), BigInt::from(1)));
    }

    #[test]
    fn class_orders_in_z28() {
        let orders: Vec<u64> = [&omega1 as &dyn Fn(&JacobiEl, &JacobiEl) -> BigInt, &omega2, &omega3_z28]
            .iter()
            .map(|w| class_order(&normalize_exponents(&extension_report(*w, Some(28)), Some(28)).unwrap(), 28))
            .collect();
        assert_eq!(orders, vec![28, 4, 2]);
    }

    #[test]
    fn lambda_is_a_crossed_homomorphism() {
        let ms = ball(&[Mat2::y(), Mat2::u()], &Mat2::identity(), 3);
        let two = BigInt::from(2);
        for x in box_z2(2) {
            assert!(lambda_mod2(&Mat2::identity(), &x).is_zero());
            for m in ms.iter().step_by(3) {
                for n in &ms {
                    let split = lambda_mod2(m, &x) + lambda_mod2(n, &m.act(&x));
                    assert_eq!(lambda_mod2(&m.mul(n), &x), split.mod_floor(&two));
                }
            }
        }
    }

    #[test]
    fn battery() {
        let r = verify_cocycles(50, 0);
        assert!(r.pass, "{:?}", r.failures().collect::<Vec<_>>());
    }
}
