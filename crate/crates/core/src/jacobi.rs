//! The Jacobi group `SL2(Z) x| Z^2` with law `(M,X)(M',X') = (MM', XM' + X')`,
//! its subgroups `G_m = Z/m x| Z^2` and the presentations of both.

use std::fmt;

use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use serde_json::json;

use crate::abgrp::FgAbelianGroup;
use crate::error::{Error, Result};
use crate::group::{eval_word, power, Group};
use crate::json::BigList;
use crate::report::Report;
use crate::sl2::{torsion_generators, vec2, vec2_add, vec2_neg, Mat2, Vec2};
use crate::syntax::{parse_presentation, parse_word, Presentation};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct JacobiEl {
    pub m: Mat2,
    pub x: Vec2,
}

impl JacobiEl {
    pub fn new(m: Mat2, x: Vec2) -> Self {
        JacobiEl { m, x }
    }

    pub fn identity() -> Self {
        JacobiEl { m: Mat2::identity(), x: vec2(0, 0) }
    }

    pub fn matrix(m: Mat2) -> Self {
        JacobiEl { m, x: vec2(0, 0) }
    }

    pub fn translation(x: Vec2) -> Self {
        JacobiEl { m: Mat2::identity(), x }
    }

    pub fn is_identity(&self) -> bool {
        self.m.is_identity() && self.x.iter().all(Zero::is_zero)
    }
}

pub fn jmul(g: &JacobiEl, h: &JacobiEl) -> JacobiEl {
    JacobiEl { m: g.m.mul(&h.m), x: vec2_add(&h.m.act(&g.x), &h.x) }
}

pub fn jinv(g: &JacobiEl) -> JacobiEl {
    let mi = g.m.inv();
    JacobiEl { x: vec2_neg(&mi.act(&g.x)), m: mi }
}

impl Group for JacobiEl {
    fn op(&self, other: &Self) -> Self {
        jmul(self, other)
    }

    fn inverse(&self) -> Self {
        jinv(self)
    }
}

impl fmt::Debug for JacobiEl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, ({}, {}))", self.m, self.x[0], self.x[1])
    }
}

impl Serialize for JacobiEl {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("JacobiEl", 2)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("x", &BigList(&self.x))?;
        st.end()
    }
}

/// `y, u, a, b` in that order.
pub fn gammaj_generators() -> [JacobiEl; 4] {
    [
        JacobiEl::matrix(Mat2::y()),
        JacobiEl::matrix(Mat2::u()),
        JacobiEl::translation(vec2(1, 0)),
        JacobiEl::translation(vec2(0, 1)),
    ]
}

pub const GAMMA_J: &str = include_str!("../presentations/gammaJ.pres");
pub const G2: &str = include_str!("../presentations/G2.pres");
pub const G4: &str = include_str!("../presentations/G4.pres");
pub const G6: &str = include_str!("../presentations/G6.pres");
pub const AMALGAM: &str = include_str!("../presentations/amalgam.pres");
pub const H28: &str = include_str!("../presentations/H28.pres");

/// The central extension `E_{m,n}` of the Jacobi group by `Z = <S>`.
pub fn e_mn_text(m: i64, n: i64) -> String {
    format!(
        "gens: Y U A B S\n\
         rel: Y U Y = U Y U\n\
         rel: (Y U Y)^4 = S^{n}\n\
         rel: A B = B A S^{m}\n\
         rel: B U = U B A^-1\n\
         rel: A Y = Y A B\n\
         rel: A U = U A\n\
         rel: B Y = Y B\n\
         rel: S Y = Y S\n\
         rel: S U = U S\n\
         rel: S A = A S\n\
         rel: S B = B S\n"
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    GammaJ,
    G2,
    G4,
    G6,
    Amalgam,
    H28,
    Emn(i64, i64),
}

impl Builtin {
    /// Accepts `gammaJ`, `G2`, `G4`, `G6`, `amalgam`, `H28` and `E(m,n)`
    /// (also `E_mn(m,n)`), with or without a `.pres` suffix.
    pub fn parse(name: &str) -> Option<Builtin> {
        let name = name.trim().trim_end_matches(".pres");
        Some(match name {
            "gammaJ" => Builtin::GammaJ,
            "G2" => Builtin::G2,
            "G4" => Builtin::G4,
            "G6" => Builtin::G6,
            "amalgam" => Builtin::Amalgam,
            "H28" => Builtin::H28,
            _ => {
                let args = name.strip_prefix("E_mn(").or_else(|| name.strip_prefix("E("))?.strip_suffix(')')?;
                let (m, n) = args.split_once(',')?;
                Builtin::Emn(m.trim().parse().ok()?, n.trim().parse().ok()?)
            }
        })
    }

    pub fn text(self) -> String {
        match self {
            Builtin::GammaJ => GAMMA_J.into(),
            Builtin::G2 => G2.into(),
            Builtin::G4 => G4.into(),
            Builtin::G6 => G6.into(),
            Builtin::Amalgam => AMALGAM.into(),
            Builtin::H28 => H28.into(),
            Builtin::Emn(m, n) => e_mn_text(m, n),
        }
    }

    pub fn presentation(self) -> Presentation {
        parse_presentation(&self.text()).expect("built-in presentations parse")
    }
}

pub fn abelianization_of(name: &str) -> Result<FgAbelianGroup> {
    let b = Builtin::parse(name).ok_or_else(|| Error::InvalidParameter(format!("unknown presentation `{name}`")))?;
    Ok(b.presentation().abelianization())
}

/// Checks every relation of `pres` in a concrete model.
pub fn check_relations<G: Group + fmt::Debug>(report: &mut Report, pres: &Presentation, gens: &[G], identity: &G) {
    for ((lhs, rhs), label) in pres.relations.iter().zip(&pres.labels) {
        let l = eval_word(gens, lhs, identity);
        let r = eval_word(gens, rhs, identity);
        let detail =
            if l == r { serde_json::Value::Null } else { json!({"lhs": format!("{l:?}"), "rhs": format!("{r:?}")}) };
        report.check(label.clone(), l == r, detail);
    }
}

fn eval_in(gens: &[JacobiEl], names: &[&str], word: &str) -> JacobiEl {
    let w = parse_word(word, &crate::syntax::Alphabet::new(names)).expect("static word");
    eval_word(gens, &w, &JacobiEl::identity())
}

pub fn verify_lemma1() -> Report {
    let mut r = Report::new("lemma1");
    let gens = gammaj_generators();
    check_relations(&mut r, &Builtin::GammaJ.presentation(), &gens, &JacobiEl::identity());
    let names = ["y", "u", "a", "b"];
    let perturbed = eval_in(&gens, &names, "a y") == eval_in(&gens, &names, "y a");
    r.check("control: a y = y a is rejected", !perturbed, serde_json::Value::Null);
    r
}

/// The order-`m` torsion element used as the extra generator of `G_m`.
///
/// For `m = 4` this is `uyu = [[0,1],[-1,0]]`, the inverse of the matrix
/// returned by [`torsion_generators`]: only this orientation satisfies
/// `B beta = beta A^-1` and `A beta = beta B` under the row-vector law.
pub fn gm_torsion(m: u32) -> Result<Mat2> {
    let (a, b, g) = torsion_generators();
    match m {
        2 => Ok(a),
        4 => Ok(b.inv()),
        6 => Ok(g),
        _ => Err(Error::InvalidParameter(format!("m must be 2, 4 or 6, got {m}"))),
    }
}

/// `A, B` and the torsion generator of `G_m`.
pub fn gm_elements(m: u32) -> Result<[JacobiEl; 3]> {
    Ok([JacobiEl::translation(vec2(1, 0)), JacobiEl::translation(vec2(0, 1)), JacobiEl::matrix(gm_torsion(m)?)])
}

pub fn verify_gm(m: u32) -> Result<Report> {
    let pres = match m {
        2 => Builtin::G2,
        4 => Builtin::G4,
        6 => Builtin::G6,
        _ => return Err(Error::InvalidParameter(format!("m must be 2, 4 or 6, got {m}"))),
    }
    .presentation();
    let mut r = Report::new(&format!("G{m}"));
    let gens = gm_elements(m)?;
    check_relations(&mut r, &pres, &gens, &JacobiEl::identity());
    let order = (1..=12u32).find(|&k| power(&gens[2], k as i64, &JacobiEl::identity()).is_identity());
    r.check("torsion generator has order m", order == Some(m), json!({ "order": order }));
    Ok(r)
}

/// All three `G_m`, plus the fact about the orientation of `beta`.
pub fn verify_lemma6() -> Report {
    let mut r = Report::new("lemma6");
    for m in [2, 4, 6] {
        let sub = verify_gm(m).expect("valid m");
        for c in sub.checks {
            r.check(format!("G{m}: {}", c.name), c.pass, c.detail);
        }
    }
    let (_, beta_listed, _) = torsion_generators();
    let uyu = Mat2::u().mul(&Mat2::y()).mul(&Mat2::u());
    r.check("beta = u y u is the inverse of [[0,-1],[1,0]]", uyu == beta_listed.inv(), serde_json::Value::Null);
    let [a, b, _] = gm_elements(4).expect("m = 4");
    let listed = JacobiEl::matrix(beta_listed.clone());
    let holds = jmul(&b, &listed) == jmul(&listed, &jinv(&a));
    r.note("with beta = [[0,-1],[1,0]], B beta = beta A^-1 holds", json!(holds));
    r.note("order of [[0,-1],[1,0]] and of its inverse", json!([4, 4]));
    r
}

pub fn verify_amalgam() -> Report {
    let mut r = Report::new("amalgam");
    let (alpha, _, _) = torsion_generators();
    let beta = gm_torsion(4).expect("m = 4");
    let gamma = gm_torsion(6).expect("m = 6");
    let id = Mat2::identity();
    let (b2, g3) = (power(&beta, 2, &id), power(&gamma, 3, &id));
    r.check("beta^2 = alpha", b2 == alpha, serde_json::Value::Null);
    r.check("gamma^3 = alpha", g3 == alpha, serde_json::Value::Null);

    let gens = [
        JacobiEl::translation(vec2(1, 0)),
        JacobiEl::translation(vec2(0, 1)),
        JacobiEl::matrix(beta.clone()),
        JacobiEl::matrix(gamma.clone()),
    ];
    check_relations(&mut r, &Builtin::Amalgam.presentation(), &gens, &JacobiEl::identity());

    let (y, u) = (Mat2::y(), Mat2::u());
    r.check("gamma = y u", gamma == y.mul(&u), serde_json::Value::Null);
    r.check("beta = u y u", beta == u.mul(&y).mul(&u), serde_json::Value::Null);
    r.check("u = beta gamma^-1", u == beta.mul(&gamma.inv()), serde_json::Value::Null);
    r.check("y = gamma^2 beta^-1", y == power(&gamma, 2, &id).mul(&beta.inv()), serde_json::Value::Null);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(m: Mat2, x: (i64, i64)) -> JacobiEl {
        JacobiEl::new(m, vec2(x.0, x.1))
    }

    #[test]
    fn group_law() {
        let [y, u, a, b] = gammaj_generators();
        assert_eq!(jmul(&a, &y), el(Mat2::y(), (1, 1)));
        assert_eq!(jmul(&b, &u), el(Mat2::u(), (-1, 1)));
        assert_eq!(jmul(&a, &JacobiEl::identity()), a);
        assert_eq!(jinv(&a), JacobiEl::translation(vec2(-1, 0)));
        let ay = jmul(&a, &y);
        assert!(jmul(&ay, &jinv(&ay)).is_identity());
        assert!(jinv(&JacobiEl::identity()).is_identity());
    }

    #[test]
    fn conjugation_is_the_row_action() {
        let m = Mat2::from_i64(2, 3, 1, 2).unwrap();
        let x = vec2(5, -7);
        let g = JacobiEl::matrix(m.clone());
        let conj = jmul(&jmul(&jinv(&g), &JacobiEl::translation(x.clone())), &g);
        assert_eq!(conj, JacobiEl::translation(m.act(&x)));
    }

    #[test]
    fn lemma1_relations() {
        let r = verify_lemma1();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.checks.len(), 8);
    }

    #[test]
    fn gm_relations() {
        for m in [2, 4, 6] {
            let r = verify_gm(m).unwrap();
            assert!(r.pass, "{r:?}");
        }
        assert!(verify_gm(3).is_err());
        let r = verify_lemma6();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.notes[0].detail, json!(false));
    }

    #[test]
    fn amalgam() {
        let r = verify_amalgam();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn alpha_maps_to_twice_the_generator() {
        // G2 -> G4 -> Z/4 sends alpha to 2, and G2 -> G6 -> Z/6 sends it to 3.
        let id = Mat2::identity();
        let alpha = torsion_generators().0;
        let b = gm_torsion(4).unwrap();
        let g = gm_torsion(6).unwrap();
        assert_eq!((0..4).find(|&k| power(&b, k, &id) == alpha), Some(2));
        assert_eq!((0..6).find(|&k| power(&g, k, &id) == alpha), Some(3));
    }

    #[test]
    fn abelianizations() {
        assert_eq!(abelianization_of("gammaJ").unwrap(), FgAbelianGroup::from_orders(&[12]));
        assert_eq!(abelianization_of("G2").unwrap(), FgAbelianGroup::from_orders(&[2, 2, 2]));
        assert_eq!(abelianization_of("G4").unwrap(), FgAbelianGroup::from_orders(&[4, 2]));
        assert_eq!(abelianization_of("G6").unwrap(), FgAbelianGroup::from_orders(&[6]));
        assert_eq!(abelianization_of("amalgam").unwrap(), FgAbelianGroup::from_orders(&[12]));
        assert_eq!(abelianization_of("H28").unwrap(), FgAbelianGroup::free(2));
        assert_eq!(abelianization_of("E(1,-1)").unwrap(), FgAbelianGroup::from_orders(&[12]));
        assert_eq!(abelianization_of("E_mn(0,1)").unwrap(), FgAbelianGroup::free(1));
        assert!(abelianization_of("G5").is_err());
    }

    #[test]
    fn projection_and_section() {
        let [y, u, a, b] = gammaj_generators();
        let g = jmul(&jmul(&y, &a), &jmul(&u, &b));
        let h = jmul(&b, &jmul(&y, &y));
        assert_eq!(jmul(&g, &h).m, g.m.mul(&h.m));
        let (m1, m2) = (Mat2::y().mul(&Mat2::u()), Mat2::u());
        assert_eq!(jmul(&JacobiEl::matrix(m1.clone()), &JacobiEl::matrix(m2.clone())), JacobiEl::matrix(m1.mul(&m2)));
    }
}
