//! Free words in `s, t` and self-maps of `S3 x S3` given by word pairs
//! `(s, t) -> (w1(s,t), w2(s,t))`.

use std::fmt;

use num_bigint::BigInt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::eval_word;
use crate::jacobi::{gammaj_generators, JacobiEl};
use crate::quat::cross_check;
use crate::report::Report;
use crate::sl2::Mat2;
use crate::syntax::{parse_word, Alphabet, Letter};

pub const S: usize = 0;
pub const T: usize = 1;

/// A freely reduced word in `s` and `t`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord(Vec<Letter>);

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord(Vec::new())
    }

    pub fn s() -> Self {
        FreeWord(vec![Letter::new(S, false)])
    }

    pub fn t() -> Self {
        FreeWord(vec![Letter::new(T, false)])
    }

    /// Parses e.g. `t^-1 s t`; juxtaposed letters like `sts^-1` also work.
    pub fn parse(text: &str) -> Result<Self> {
        reduce(&parse_word(text, &Alphabet::new(&["s", "t"]))?)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        reduce_letters(v)
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// Replaces `s` by `ws` and `t` by `wt`.
    pub fn substitute(&self, ws: &FreeWord, wt: &FreeWord) -> FreeWord {
        let (ws_inv, wt_inv) = (ws.inverse(), wt.inverse());
        let mut out = Vec::new();
        for l in &self.0 {
            let piece = match (l.gen, l.inverse) {
                (S, false) => ws,
                (S, true) => &ws_inv,
                (_, false) => wt,
                (_, true) => &wt_inv,
            };
            out.extend_from_slice(&piece.0);
        }
        reduce_letters(out)
    }

    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.0.iter().filter(|l| l.gen == gen).map(|l| if l.inverse { -1 } else { 1 }).sum()
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| {
                let c = if l.gen == S { "s" } else { "t" };
                if l.inverse {
                    format!("{c}^-1")
                } else {
                    c.to_string()
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn reduce_letters(raw: Vec<Letter>) -> FreeWord {
    let mut out: Vec<Letter> = Vec::with_capacity(raw.len());
    for l in raw {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    FreeWord(out)
}

/// Free reduction. Letters must refer to `s` (0) or `t` (1).
pub fn reduce(raw: &[Letter]) -> Result<FreeWord> {
    if let Some(bad) = raw.iter().find(|l| l.gen > T) {
        return Err(Error::InvalidParameter(format!("letter index {} is not s or t", bad.gen)));
    }
    Ok(reduce_letters(raw.to_vec()))
}

/// The map `(s, t) -> (w1, w2)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DiffeoPair {
    pub w1: FreeWord,
    pub w2: FreeWord,
}

impl DiffeoPair {
    pub fn identity() -> Self {
        DiffeoPair { w1: FreeWord::s(), w2: FreeWord::t() }
    }

    fn from_text(w1: &str, w2: &str) -> Self {
        DiffeoPair { w1: FreeWord::parse(w1).expect("static word"), w2: FreeWord::parse(w2).expect("static word") }
    }
}

impl fmt::Display for DiffeoPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.w1, self.w2)
    }
}

pub const GENERATOR_NAMES: [&str; 4] = ["Y", "U", "A", "B"];

pub fn alphabet() -> Alphabet {
    Alphabet::new(&GENERATOR_NAMES)
}

/// The named generators, their inverses (`Y^-1`, `Y⁻¹`, ...) and `Id`.
pub fn gen_diffeo(name: &str) -> Result<DiffeoPair> {
    let name = name.replace('⁻', "^-").replace('¹', "1");
    Ok(match name.as_str() {
        "Y" => DiffeoPair::from_text("s", "s t"),
        "U" => DiffeoPair::from_text("t^-1 s", "t"),
        "A" => DiffeoPair::from_text("t s t^-1", "t"),
        "B" => DiffeoPair::from_text("s", "s t s^-1"),
        "Y^-1" => DiffeoPair::from_text("s", "s^-1 t"),
        "U^-1" => DiffeoPair::from_text("t s", "t"),
        "A^-1" => DiffeoPair::from_text("t^-1 s t", "t"),
        "B^-1" => DiffeoPair::from_text("s", "s^-1 t s"),
        "Id" | "id" | "1" => DiffeoPair::identity(),
        _ => return Err(Error::UnknownToken { token: name, column: 1 }),
    })
}

/// Apply `first`, then `then`: substitute `first`'s components into `then`.
pub fn compose(first: &DiffeoPair, then: &DiffeoPair) -> DiffeoPair {
    DiffeoPair { w1: then.w1.substitute(&first.w1, &first.w2), w2: then.w2.substitute(&first.w1, &first.w2) }
}

fn letter_diffeo(l: Letter) -> DiffeoPair {
    let name = GENERATOR_NAMES[l.gen];
    gen_diffeo(&if l.inverse { format!("{name}^-1") } else { name.to_string() }).expect("generator")
}

/// Composite of a parsed word, read left to right as application order.
pub fn eval_letters(word: &[Letter]) -> DiffeoPair {
    word.iter().fold(DiffeoPair::identity(), |acc, &l| compose(&acc, &letter_diffeo(l)))
}

/// `"Y U Y"` means: apply `Y`, then `U`, then `Y`.
pub fn eval_diffeo_word(text: &str) -> Result<DiffeoPair> {
    Ok(eval_letters(&parse_word(text, &alphabet())?))
}

/// Reads a word as a composition of maps, rightmost factor applied first.
pub fn eval_composition(text: &str) -> Result<DiffeoPair> {
    let mut word = parse_word(text, &alphabet())?;
    word.reverse();
    Ok(eval_letters(&word))
}

pub fn diffeo_equal(d1: &DiffeoPair, d2: &DiffeoPair) -> bool {
    d1 == d2
}

/// The action on `H3 = Z^2`: column `j` holds the exponent sums of `s` and `t`
/// in `w_j`, so `Y` gives `[[1,1],[0,1]]` and composites multiply in
/// application order.
pub fn induced_h3_matrix(d: &DiffeoPair) -> Result<Mat2> {
    let e = |w: &FreeWord, g| BigInt::from(w.exponent_sum(g));
    let (a, b, c, dd) = (e(&d.w1, S), e(&d.w2, S), e(&d.w1, T), e(&d.w2, T));
    let det = &a * &dd - &b * &c;
    Mat2::new(a, b, c, dd).map_err(|_| Error::NotInvertible(det.to_string()))
}

/// A diffeomorphism identity `lhs = rhs` with both sides written as
/// compositions (rightmost map applied first).
#[derive(Clone, Debug)]
pub struct WordIdentity {
    pub name: &'static str,
    pub lhs: &'static str,
    pub rhs: &'static str,
}

/// The eight identities used to identify the generators' relations.
pub fn identity_suite() -> Vec<WordIdentity> {
    [
        ("YUY=UYU", "Y U Y", "U Y U"),
        ("AY=YAB", "A Y", "Y A B"),
        ("AU=UA", "A U", "U A"),
        ("BY=YB", "B Y", "Y B"),
        ("BU=UBA^-1", "B U", "U B A^-1"),
        ("AB=BA", "A B", "B A"),
        ("(B^-1YUY)^4=Id", "(B^-1 Y U Y)^4", "Id"),
        ("YUYA^-1=BYUY", "Y U Y A^-1", "B Y U Y"),
    ]
    .into_iter()
    .map(|(name, lhs, rhs)| WordIdentity { name, lhs, rhs })
    .collect()
}

impl WordIdentity {
    pub fn sides(&self) -> (DiffeoPair, DiffeoPair) {
        (eval_composition(self.lhs).expect("static word"), eval_composition(self.rhs).expect("static word"))
    }

    pub fn holds(&self) -> bool {
        let (l, r) = self.sides();
        diffeo_equal(&l, &r)
    }
}

/// Symbolic and quaternion checks of every identity in [`identity_suite`].
pub fn verify_identities(trials: usize, seed: u64) -> Report {
    let mut r = Report::new("identities");
    for (i, id) in identity_suite().iter().enumerate() {
        let (l, rr) = id.sides();
        let symbolic = diffeo_equal(&l, &rr);
        let numeric = cross_check(&l, &rr, trials, seed.wrapping_add(i as u64));
        let detail = if symbolic { Value::Null } else { json!({"lhs": l.to_string(), "rhs": rr.to_string()}) };
        r.check(format!("{}: free words", id.name), symbolic, detail);
        let detail = match &numeric.witness {
            Some((s, t)) => json!({"trials": numeric.trials, "s": format!("{s:?}"), "t": format!("{t:?}")}),
            None => json!({"trials": numeric.trials}),
        };
        r.check(format!("{}: quaternions", id.name), numeric.agree, detail);
        let model = jacobi_composition(id.lhs) == jacobi_composition(id.rhs);
        r.note(format!("{}: holds on H3 together with translations", id.name), json!(model));
    }
    r
}

/// A composition (rightmost map first) evaluated in the Jacobi group, where
/// products are written in the same order as the maps.
fn jacobi_composition(text: &str) -> JacobiEl {
    let word = parse_word(text, &alphabet()).expect("static word");
    eval_word(&gammaj_generators(), &word, &JacobiEl::identity())
}

/// The three consequences `(B^-1 YUY)^4 = Id`, `YUY B^-1 = A^-1 YUY` and
/// `YUY A^-1 = B YUY`. The first and last are pointwise identities; the
/// middle one is derived using `AB = BA`, so only its image in the Jacobi
/// group is checked and the pointwise status is recorded as a note.
pub fn verify_claim1() -> Report {
    let mut r = Report::new("claim1");
    let cases = [
        ("(B^-1 YUY)^4 = Id", "(B^-1 Y U Y)^4", "Id", true),
        ("YUY B^-1 = A^-1 YUY", "Y U Y B^-1", "A^-1 Y U Y", false),
        ("YUY A^-1 = B YUY", "Y U Y A^-1", "B Y U Y", true),
    ];
    for (name, lhs, rhs, pointwise) in cases {
        let (l, rr) = (eval_composition(lhs).expect("static word"), eval_composition(rhs).expect("static word"));
        let same = diffeo_equal(&l, &rr);
        let detail = if same { Value::Null } else { json!({"lhs": l.to_string(), "rhs": rr.to_string()}) };
        if pointwise {
            r.check(format!("{name}: free words"), same, detail);
        } else {
            r.note(format!("{name}: free words"), json!({"holds": same, "sides": detail}));
        }
        r.check(format!("{name}: Jacobi group"), jacobi_composition(lhs) == jacobi_composition(rhs), Value::Null);
    }
    r
}
