use jacobi_mcg::cocyc::{omega1, omega2, omega_mcg};
use jacobi_mcg::heis::{hmul, hpow, HeisEl};
use jacobi_mcg::jacobi::{jinv, jmul, JacobiEl};
use jacobi_mcg::mcg::{from_h28, mcg_inv, mcg_mul, to_h28, MCGEl};
use jacobi_mcg::sl2::{abelianize, decompose, eval_syllables, vec2, Mat2, SlGen, SlWord, Syllable};
use jacobi_mcg::words::{compose, gen_diffeo, induced_h3_matrix, DiffeoPair};
use num_bigint::BigInt;
use proptest::prelude::*;

fn sl2_word() -> impl Strategy<Value = SlWord> {
    prop::collection::vec((any::<bool>(), -6i64..=6), 0..16).prop_map(|v| {
        v.into_iter()
            .filter(|&(_, e)| e != 0)
            .map(|(y, e)| Syllable { gen: if y { SlGen::Y } else { SlGen::U }, exp: BigInt::from(e) })
            .collect()
    })
}

fn matrix() -> impl Strategy<Value = Mat2> {
    sl2_word().prop_map(|w| eval_syllables(&w))
}

fn jacobi() -> impl Strategy<Value = JacobiEl> {
    (matrix(), -20i64..=20, -20i64..=20).prop_map(|(m, a, b)| JacobiEl::new(m, vec2(a, b)))
}

fn mcg() -> impl Strategy<Value = MCGEl> {
    (jacobi(), 0i64..28).prop_map(|(j, k)| MCGEl::new(j, k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn decompose_round_trips(m in matrix()) {
        prop_assert_eq!(eval_syllables(&decompose(&m)), m);
    }

    #[test]
    fn abelianization_is_a_homomorphism(p in matrix(), q in matrix()) {
        prop_assert_eq!(abelianize(&p.mul(&q)), abelianize(&p) + abelianize(&q));
    }

    #[test]
    fn jacobi_group_axioms(a in jacobi(), b in jacobi(), c in jacobi()) {
        prop_assert_eq!(jmul(&jmul(&a, &b), &c), jmul(&a, &jmul(&b, &c)));
        prop_assert!(jmul(&a, &jinv(&a)).is_identity());
    }

    #[test]
    fn cocycle_identities(a in jacobi(), b in jacobi(), c in jacobi()) {
        for w in [omega1 as fn(&JacobiEl, &JacobiEl) -> BigInt, omega2, omega_mcg] {
            let lhs = w(&a, &b) + w(&jmul(&a, &b), &c);
            let rhs = w(&b, &c) + w(&a, &jmul(&b, &c));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn mcg_group_axioms(a in mcg(), b in mcg(), c in mcg()) {
        prop_assert_eq!(mcg_mul(&mcg_mul(&a, &b), &c), mcg_mul(&a, &mcg_mul(&b, &c)));
        prop_assert!(mcg_mul(&a, &mcg_inv(&a)).is_identity());
        prop_assert!(mcg_mul(&mcg_inv(&a), &a).is_identity());
    }

    #[test]
    fn heisenberg_powers(a in -30i64..=30, b in -30i64..=30, k in -30i64..=30, n in -12i64..=12) {
        let g = HeisEl::new(a, b, k);
        let mut acc = HeisEl::identity();
        let step = if n >= 0 { g.clone() } else { jacobi_mcg::heis::hinv(&g) };
        for _ in 0..n.abs() {
            acc = hmul(&acc, &step);
        }
        prop_assert_eq!(hpow(&g, &BigInt::from(n)), acc);
    }

    #[test]
    fn h28_coordinates(a in -40i64..=40, b in -40i64..=40, k in 0i64..28, c in -40i64..=40, d in -40i64..=40, l in 0i64..28) {
        let g = MCGEl::new(JacobiEl::translation(vec2(a, b)), k);
        let h = MCGEl::new(JacobiEl::translation(vec2(c, d)), l);
        let (pg, ph) = (to_h28(&g).unwrap(), to_h28(&h).unwrap());
        prop_assert_eq!(from_h28(&pg), g.clone());
        prop_assert_eq!(to_h28(&mcg_mul(&g, &h)).unwrap(), jacobi_mcg::heis::hm_mul(&pg, &ph).unwrap());
    }
}

fn small_diffeos() -> Vec<DiffeoPair> {
    ["Id", "Y", "U", "A", "B", "Y^-1", "U^-1", "A^-1", "B^-1"].iter().map(|n| gen_diffeo(n).unwrap()).collect()
}

#[test]
fn composition_is_associative_and_functorial() {
    let ds = small_diffeos();
    for a in &ds {
        for b in &ds {
            for c in &ds {
                assert_eq!(compose(&compose(a, b), c), compose(a, &compose(b, c)));
            }
            let ab = induced_h3_matrix(&compose(a, b)).unwrap();
            let (ma, mb) = (induced_h3_matrix(a).unwrap(), induced_h3_matrix(b).unwrap());
            assert_eq!(ab, ma.mul(&mb));
        }
    }
}

#[test]
fn generator_inverses() {
    for n in ["Y", "U", "A", "B"] {
        let (g, gi) = (gen_diffeo(n).unwrap(), gen_diffeo(&format!("{n}^-1")).unwrap());
        assert_eq!(compose(&g, &gi), DiffeoPair::identity());
        assert_eq!(compose(&gi, &g), DiffeoPair::identity());
    }
}
