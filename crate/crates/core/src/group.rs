//! A minimal group interface so that words can be evaluated in any model.

use crate::syntax::Letter;

pub trait Group: Clone + PartialEq {
    fn op(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
}

/// `g^n` by repeated squaring; negative `n` uses the inverse.
pub fn power<G: Group>(g: &G, n: i64, identity: &G) -> G {
    let mut base = if n < 0 { g.inverse() } else { g.clone() };
    let mut e = n.unsigned_abs();
    let mut acc = identity.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.op(&base);
        }
        base = base.op(&base);
        e >>= 1;
    }
    acc
}

/// Evaluates a word as the left-to-right product of generator images.
pub fn eval_word<G: Group>(gens: &[G], word: &[Letter], identity: &G) -> G {
    let inverses: Vec<G> = gens.iter().map(Group::inverse).collect();
    word.iter().fold(identity.clone(), |acc, l| acc.op(if l.inverse { &inverses[l.gen] } else { &gens[l.gen] }))
}

pub fn commutator<G: Group>(g: &G, h: &G) -> G {
    g.op(h).op(&g.inverse()).op(&h.inverse())
}
