//! The mapping class group model: the Jacobi group extended by `Z/28`
//! through the cocycle `omega1 - omega2`, its Heisenberg subgroup, and the
//! rational arithmetic fixing the commutator exponent.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::cocyc::omega_mcg;
use crate::error::{Error, Result};
use crate::group::{eval_word, power, Group};
use crate::heis::{hm_mul, HmMatrix};
use crate::jacobi::{check_relations, gammaj_generators, jinv, jmul, Builtin, JacobiEl};
use crate::json::BigList;
use crate::report::Report;
use crate::sample::rng;
use crate::sl2::{Mat2, Vec2};
use crate::syntax::{parse_presentation, parse_word, Alphabet};

pub const CENTER_ORDER: u64 = 28;

/// `(M, X, k)` with `k` in `Z/28`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MCGEl {
    pub m: Mat2,
    pub x: Vec2,
    pub k: u8,
}

fn reduce28(v: BigInt) -> u8 {
    u8::try_from(v.mod_floor(&BigInt::from(CENTER_ORDER))).expect("residue below 28")
}

impl MCGEl {
    pub fn new(j: JacobiEl, k: impl Into<BigInt>) -> Self {
        MCGEl { m: j.m, x: j.x, k: reduce28(k.into()) }
    }

    pub fn identity() -> Self {
        Self::new(JacobiEl::identity(), 0)
    }

    pub fn sigma() -> Self {
        Self::new(JacobiEl::identity(), 1)
    }

    pub fn jacobi(&self) -> JacobiEl {
        JacobiEl::new(self.m.clone(), self.x.clone())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }
}

pub fn mcg_mul(g: &MCGEl, h: &MCGEl) -> MCGEl {
    let (gj, hj) = (g.jacobi(), h.jacobi());
    let k = BigInt::from(g.k) + BigInt::from(h.k) + omega_mcg(&gj, &hj);
    MCGEl::new(jmul(&gj, &hj), k)
}

pub fn mcg_inv(g: &MCGEl) -> MCGEl {
    let gj = g.jacobi();
    let gi = jinv(&gj);
    let k = -BigInt::from(g.k) - omega_mcg(&gj, &gi);
    MCGEl::new(gi, k)
}

impl Group for MCGEl {
    fn op(&self, other: &Self) -> Self {
        mcg_mul(self, other)
    }

    fn inverse(&self) -> Self {
        mcg_inv(self)
    }
}

impl fmt::Debug for MCGEl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, ({}, {}), {})", self.m, self.x[0], self.x[1], self.k)
    }
}

impl Serialize for MCGEl {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("MCGEl", 3)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("x", &BigList(&self.x))?;
        st.serialize_field("k", &self.k)?;
        st.end()
    }
}

/// Generator names accepted in words; `S` and `Σ` both denote the central generator.
pub fn alphabet() -> Alphabet {
    Alphabet::new(&["Y", "U", "A", "B", "S", "Σ"])
}

pub fn generators() -> [MCGEl; 6] {
    let [y, u, a, b] = gammaj_generators();
    [MCGEl::new(y, 0), MCGEl::new(u, 0), MCGEl::new(a, 0), MCGEl::new(b, 0), MCGEl::sigma(), MCGEl::sigma()]
}

pub fn eval_mcg_word(text: &str) -> Result<MCGEl> {
    Ok(eval_word(&generators(), &parse_word(text, &alphabet())?, &MCGEl::identity()))
}

/// Least `n <= bound` with `g^n = 1`.
pub fn element_order(g: &MCGEl, bound: u64) -> Option<u64> {
    let mut acc = g.clone();
    for n in 1..=bound {
        if acc.is_identity() {
            return Some(n);
        }
        acc = mcg_mul(&acc, g);
    }
    None
}

fn word_check(r: &mut Report, label: &str, lhs: &str, rhs: &str) {
    let (l, rr) = (eval_mcg_word(lhs).expect("static word"), eval_mcg_word(rhs).expect("static word"));
    let detail = if l == rr { Value::Null } else { json!({"lhs": l, "rhs": rr}) };
    r.check(label, l == rr, detail);
}

pub fn verify_theorem3() -> Report {
    let mut r = Report::new("theorem3");
    word_check(&mut r, "YUY = UYU", "Y U Y", "U Y U");
    word_check(&mut r, "(YUY)^4 = S^-1", "(Y U Y)^4", "S^-1");
    let gens = generators();
    let s = MCGEl::sigma();
    let central = gens[..4].iter().all(|g| mcg_mul(&s, g) == mcg_mul(g, &s));
    r.check("S commutes with Y, U, A, B", central, Value::Null);
    word_check(&mut r, "BU = UBA^-1", "B U", "U B A^-1");
    word_check(&mut r, "AY = YAB", "A Y", "Y A B");
    word_check(&mut r, "AB = BAS", "A B", "B A S");
    word_check(&mut r, "BY = YB", "B Y", "Y B");
    word_check(&mut r, "AU = UA", "A U", "U A");
    word_check(&mut r, "S^28 = 1", "S^28", "1");
    r
}

pub fn verify_claim3() -> Report {
    let mut r = Report::new("claim3");
    word_check(&mut r, "(B^-1 YUY)^4 = 1", "(B^-1 Y U Y)^4", "1");
    word_check(&mut r, "YUY B^-1 = A^-1 S YUY", "Y U Y B^-1", "A^-1 S Y U Y");
    word_check(&mut r, "YUY A^-1 = B YUY", "Y U Y A^-1", "B Y U Y");
    r
}

/// `(I, (a,b), k) -> [[1, a, k + ab], [0, 1, b], [0, 0, 1]]`.
pub fn to_h28(g: &MCGEl) -> Result<HmMatrix> {
    if !g.m.is_identity() {
        return Err(Error::InvalidParameter("element does not act trivially on homology".into()));
    }
    HmMatrix::new(g.x[0].clone(), g.x[1].clone(), BigInt::from(g.k) + &g.x[0] * &g.x[1], CENTER_ORDER)
}

pub fn from_h28(h: &HmMatrix) -> MCGEl {
    MCGEl::new(JacobiEl::translation([h.a.clone(), h.b.clone()]), &h.l - &h.a * &h.b)
}

/// The relations `S^28 = 1, AS = SA, BS = SB, ABA^-1B^-1 = S` in both models.
pub fn verify_eq7() -> Report {
    let mut r = Report::new("eq7");
    let pres = Builtin::H28.presentation();
    let g = generators();
    let mut sub = Report::new("model");
    check_relations(&mut sub, &pres, &[g[2].clone(), g[3].clone(), g[4].clone()], &MCGEl::identity());
    let hm = HmMatrix::generators(CENTER_ORDER).expect("valid modulus");
    let mut mat = Report::new("matrices");
    check_relations(&mut mat, &pres, &hm, &HmMatrix::identity(CENTER_ORDER).expect("valid modulus"));
    for c in sub.checks {
        r.check(format!("mapping classes: {}", c.name), c.pass, c.detail);
    }
    for c in mat.checks {
        r.check(format!("H_28 matrices: {}", c.name), c.pass, c.detail);
    }
    r
}

pub fn verify_sdiff_h28(samples: u64, seed: u64) -> Report {
    let mut r = Report::new("sdiff-h28");
    let g = generators();
    let (a, b, s) = (&g[2], &g[3], &g[4]);
    let hm = HmMatrix::generators(CENTER_ORDER).expect("valid modulus");
    let images_ok = to_h28(a).ok().as_ref() == Some(&hm[0])
        && to_h28(b).ok().as_ref() == Some(&hm[1])
        && to_h28(s).ok().as_ref() == Some(&hm[2]);
    r.check("A, B, S map to A', B', S'", images_ok, Value::Null);

    let pres = Builtin::H28.presentation();
    let id = HmMatrix::identity(CENTER_ORDER).expect("valid modulus");
    for ((lhs, rhs), label) in pres.relations.iter().zip(&pres.labels) {
        let l = eval_word(&hm, lhs, &id);
        let rr = eval_word(&hm, rhs, &id);
        r.check(format!("relator of {label} maps to the identity"), l == rr, Value::Null);
    }

    let mut rg = rng(seed);
    let mut hom_ok = true;
    let mut round_ok = true;
    for _ in 0..samples {
        let mut draw = || {
            let (x, y, l) = (rg.gen_range(-50i64..=50), rg.gen_range(-50i64..=50), rg.gen_range(0i64..28));
            HmMatrix::new(x, y, l, CENTER_ORDER).expect("valid modulus")
        };
        let (p, q) = (draw(), draw());
        round_ok &= to_h28(&from_h28(&p)).ok() == Some(p.clone());
        let (gp, gq) = (from_h28(&p), from_h28(&q));
        round_ok &= from_h28(&to_h28(&gp).expect("translation")) == gp;
        hom_ok &= to_h28(&mcg_mul(&gp, &gq)).ok() == hm_mul(&p, &q).ok();
    }
    r.check(format!("coordinates (a,b,l) round-trip ({samples} samples)"), round_ok, Value::Null);
    r.check(format!("the map is multiplicative ({samples} samples)"), hom_ok, Value::Null);
    let order = (1..=CENTER_ORDER as i64).find(|&n| power(&hm[2], n, &id) == id);
    r.check("S' has order 28", order == Some(28), json!({ "order": order }));
    r
}

/// Exact rational value interpreted mod 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuValue(pub BigRational);

impl MuValue {
    /// Representative in `[0, 1)`.
    pub fn mod_one(&self) -> BigRational {
        let f = self.0.floor();
        &self.0 - f
    }
}

impl Serialize for MuValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MuArithmetic {
    pub bernoulli: MuValue,
    pub p1: i64,
    /// Value of the expression for `p1(f_B) = p1(f_A) = 4`; the sign is only
    /// defined up to orientation, so the invariant is `+-` this value.
    pub mu_commutator: MuValue,
    /// `{v, -v}` reduced mod 1.
    pub mu_commutator_pair: [MuValue; 2],
    pub mu_generator: MuValue,
    /// Exponents `k` with `k mu_generator = +-mu_commutator (mod 1)`.
    pub candidates: Vec<u64>,
    /// The exponent after fixing the orientation of the generator.
    pub k: u64,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Evaluates `B1^2 / (8 (2!)^2) (1 + 2/(2^3 - 1)) (2 p1 p1')` with
/// `B1 = 1/6` and `p1 = 2 * 2 = 4` (twice the degree-two map on `H4`),
/// compares it with `mu = -8 / (2^5 7)` for the generator and solves for `k`.
pub fn mu_arithmetic() -> MuArithmetic {
    let b1 = rat(1, 6);
    let p1 = 2 * 2;
    let fact2 = BigRational::from_integer(BigInt::from(2));
    let pre = &b1 * &b1 / (BigRational::from_integer(8.into()) * &fact2 * &fact2);
    let middle = BigRational::one() + rat(2, 8 - 1);
    let value = pre * middle * BigRational::from_integer(BigInt::from(2 * p1 * p1));
    let generator = rat(-1, 32 * 7) * BigRational::from_integer(8.into());
    let candidates: Vec<u64> = (0..CENTER_ORDER)
        .filter(|&k| {
            let lhs = MuValue(BigRational::from_integer(k.into()) * &generator).mod_one();
            lhs == MuValue(value.clone()).mod_one() || lhs == MuValue(-value.clone()).mod_one()
        })
        .collect();
    // Reversing the orientation of the generator sends k to -k; choose the
    // orientation for which the commutator is the generator itself.
    let k = candidates.iter().copied().min().unwrap_or(0);
    MuArithmetic {
        bernoulli: MuValue(b1),
        p1,
        mu_commutator_pair: [MuValue(MuValue(value.clone()).mod_one()), MuValue(MuValue(-value.clone()).mod_one())],
        mu_commutator: MuValue(value),
        mu_generator: MuValue(generator),
        candidates,
        k,
    }
}

pub fn verify_mu() -> Report {
    let mut r = Report::new("mu");
    let mu = mu_arithmetic();
    r.check("expression equals 1/28 up to sign", mu.mu_commutator.0 == rat(1, 28), json!(mu.mu_commutator));
    r.check("expression equals p1 p1' / 448", mu.mu_commutator.0 == rat(mu.p1 * mu.p1, 448), Value::Null);
    r.check("generator value is -1/28", mu.mu_generator.0 == rat(-1, 28), json!(mu.mu_generator));
    r.check("k = +-1 mod 28 before fixing orientation", mu.candidates == vec![1, 27], json!(mu.candidates));
    r.check("k = 1 mod 28", mu.k == 1, json!(mu.k));
    let comm = eval_mcg_word("A B A^-1 B^-1").expect("static word");
    r.check(
        "ABA^-1B^-1 = S^k in the model",
        comm == power(&MCGEl::sigma(), mu.k as i64, &MCGEl::identity()),
        json!(comm),
    );
    r
}

/// Parses a presentation against the model's generators and checks it.
pub fn check_presentation_text(text: &str) -> Result<Report> {
    let pres = parse_presentation(text)?;
    let gens = generators();
    let names = alphabet();
    let mut model = Vec::new();
    for n in pres.alphabet.names() {
        let i = names.index(n).ok_or_else(|| Error::InvalidParameter(format!("no generator `{n}` in the model")))?;
        model.push(gens[i].clone());
    }
    let mut r = Report::new("presentation");
    check_relations(&mut r, &pres, &model, &MCGEl::identity());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::random_jacobi;
    use crate::sl2::vec2;

    #[test]
    fn basic_products() {
        let ab = eval_mcg_word("A B").unwrap();
        let ba_s = eval_mcg_word("B A S").unwrap();
        assert_eq!(ab, ba_s);
        assert_eq!(eval_mcg_word("A B A^-1 B^-1").unwrap(), MCGEl::sigma());
        assert_eq!(eval_mcg_word("(Y U Y)^4").unwrap(), MCGEl::new(JacobiEl::identity(), 27));
        let g = eval_mcg_word("Y A U^-2 B").unwrap();
        assert_eq!(mcg_mul(&g, &MCGEl::identity()), g);
        assert!(mcg_mul(&g, &mcg_inv(&g)).is_identity());
        assert_eq!(eval_mcg_word("Σ").unwrap(), eval_mcg_word("S").unwrap());
    }

    #[test]
    fn orders() {
        assert_eq!(element_order(&MCGEl::sigma(), 100), Some(28));
        assert_eq!(element_order(&MCGEl::identity(), 1), Some(1));
        let yuy = eval_mcg_word("Y U Y").unwrap();
        assert_eq!(element_order(&yuy, 200), Some(4 * 28));
        assert_eq!(element_order(&yuy, 10), None);
    }

    #[test]
    fn suites() {
        for r in [verify_theorem3(), verify_claim3(), verify_eq7(), verify_sdiff_h28(100, 0), verify_mu()] {
            assert!(r.pass, "{}: {:?}", r.suite, r.failures().collect::<Vec<_>>());
        }
        assert_eq!(verify_theorem3().checks.len(), 9);
    }

    #[test]
    fn mu_values() {
        let mu = mu_arithmetic();
        assert_eq!(mu.mu_commutator.0, rat(16, 448));
        assert_eq!(mu.mu_generator.mod_one(), rat(27, 28));
        assert_eq!(mu.k, 1);
        assert_eq!(mu.mu_commutator_pair, [MuValue(rat(1, 28)), MuValue(rat(27, 28))]);
    }

    #[test]
    fn center_and_projection() {
        let mut r = rng(4);
        let s = MCGEl::sigma();
        for _ in 0..50 {
            let g = MCGEl::new(random_jacobi(&mut r, 10), r.gen_range(0..28));
            let h = MCGEl::new(random_jacobi(&mut r, 10), 0);
            assert_eq!(mcg_mul(&s, &g), mcg_mul(&g, &s));
            assert_eq!(mcg_mul(&g, &h).jacobi(), jmul(&g.jacobi(), &h.jacobi()));
        }
    }

    #[test]
    fn translations_match_the_heisenberg_law() {
        use crate::heis::{hmul, HeisEl};
        let pts = [(1, 0, 0), (0, 1, 0), (3, -2, 5), (-4, 7, 11)];
        for &(a, b, k) in &pts {
            for &(c, d, l) in &pts {
                let g = MCGEl::new(JacobiEl::translation(vec2(a, b)), k);
                let h = MCGEl::new(JacobiEl::translation(vec2(c, d)), l);
                let prod = mcg_mul(&g, &h);
                let hp = hmul(&HeisEl::new(a, b, k), &HeisEl::new(c, d, l));
                assert_eq!(prod.x, hp.vector());
                assert_eq!(BigInt::from(prod.k), hp.k.mod_floor(&BigInt::from(28)));
            }
        }
    }

    #[test]
    fn user_presentations() {
        let r = check_presentation_text("gens: A B S\nrel: A B A^-1 B^-1 = S\n").unwrap();
        assert!(r.pass);
        assert!(check_presentation_text("gens: Q\n").is_err());
    }
}
