//! Seeded random elements for the sampled checks. Every sampler takes an
//! explicit RNG so that results are reproducible from a seed.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::group::eval_word;
use crate::jacobi::{gammaj_generators, JacobiEl};
use crate::sl2::{eval_syllables, push_syllable, syllables_from_letters, Mat2, SlGen, SlWord, Vec2};
use crate::syntax::Letter;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A word of length at most `max_len` over `n_gens` generators and inverses.
pub fn random_letters(rng: &mut Rng8, n_gens: usize, max_len: usize) -> Vec<Letter> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| Letter::new(rng.gen_range(0..n_gens), rng.gen_bool(0.5))).collect()
}

pub fn random_sl2_word(rng: &mut Rng8, max_len: usize) -> SlWord {
    syllables_from_letters(&random_letters(rng, 2, max_len))
}

pub fn random_sl2(rng: &mut Rng8, max_len: usize) -> Mat2 {
    eval_syllables(&random_sl2_word(rng, max_len))
}

pub fn random_jacobi(rng: &mut Rng8, max_len: usize) -> JacobiEl {
    let w = random_letters(rng, 4, max_len);
    eval_word(&gammaj_generators(), &w, &JacobiEl::identity())
}

pub fn random_vec2(rng: &mut Rng8, bound: i64) -> Vec2 {
    [BigInt::from(rng.gen_range(-bound..=bound)), BigInt::from(rng.gen_range(-bound..=bound))]
}

fn relators() -> Vec<SlWord> {
    let w = |s: &[(SlGen, i64)]| -> SlWord {
        let mut out = Vec::new();
        for &(g, e) in s {
            push_syllable(&mut out, g, BigInt::from(e));
        }
        out
    };
    use SlGen::{U, Y};
    let braid = w(&[(Y, 1), (U, 1), (Y, 1), (U, -1), (Y, -1), (U, -1)]);
    let quartic = w(&[(Y, 1), (U, 1), (Y, 1), (Y, 1), (U, 1), (Y, 1), (Y, 1), (U, 1), (Y, 1), (Y, 1), (U, 1), (Y, 1)]);
    let inv = |r: &SlWord| -> SlWord {
        let mut out = Vec::new();
        for s in r.iter().rev() {
            push_syllable(&mut out, s.gen, -&s.exp);
        }
        out
    };
    vec![inv(&braid), inv(&quartic), braid, quartic]
}

/// Rewrites `word` by inserting `count` relators (or their inverses), each
/// conjugated by a random short word, at random positions. The result
/// evaluates to the same matrix.
pub fn insert_relators(rng: &mut Rng8, word: &SlWord, count: usize) -> SlWord {
    let rels = relators();
    let mut letters: Vec<(SlGen, BigInt)> = word.iter().map(|s| (s.gen, s.exp.clone())).collect();
    for _ in 0..count {
        let rel = rels.choose(rng).expect("nonempty");
        let conj = random_sl2_word(rng, 3);
        let mut piece: Vec<(SlGen, BigInt)> = conj.iter().map(|s| (s.gen, s.exp.clone())).collect();
        piece.extend(rel.iter().map(|s| (s.gen, s.exp.clone())));
        piece.extend(conj.iter().rev().map(|s| (s.gen, -&s.exp)));
        let at = rng.gen_range(0..=letters.len());
        letters.splice(at..at, piece);
    }
    let mut out = Vec::new();
    for (g, e) in letters {
        push_syllable(&mut out, g, e);
    }
    out
}
