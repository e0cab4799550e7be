use num::rational::BigRational;
use num::{One, Zero};
use proptest::prelude::*;
use weilcount::combinat::{mobius, mobius_divisor_lemma_check};
use weilcount::cones::{self, Composition, ConePoint};
use weilcount::laurent::LaurentPoly;
use weilcount::series::TruncatedSeries;
use weilcount::spectral::matrix::kappa;
use weilcount::spectral::pairs::{delta_character_sum, delta_mobius_sum};
use weilcount::spectral::{kirchhoff, spanning_tree_sum};
use weilcount::integrality::{f_p, f_p_mod, star_congruence_check};
use weilcount::util::{rat, ratio};

fn small_rat() -> impl Strategy<Value = BigRational> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| ratio(n, d))
}

fn series(cap: usize, constant: i64) -> impl Strategy<Value = TruncatedSeries<BigRational>> {
    prop::collection::vec(small_rat(), cap).prop_map(move |mut v| {
        v.insert(0, rat(constant));
        TruncatedSeries::from_coeffs(v, cap, &rat(0))
    })
}

fn laurent(g: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((small_rat(), -2i64..=2, prop::collection::vec(-2i64..=2, g), 0u32..=1), 0..5).prop_map(
        move |terms| {
            let mut p = LaurentPoly::zero(g);
            for (c, t, z, gamma) in terms {
                p = p.checked_add(&LaurentPoly::monomial(g, c, t, &z, gamma)).unwrap();
            }
            p
        },
    )
}

fn composition(n: u32) -> impl Strategy<Value = Composition> {
    prop::collection::vec(any::<bool>(), (n - 1) as usize).prop_map(move |cuts| {
        let mut parts = vec![1u32];
        for c in cuts {
            if c {
                parts.push(1);
            } else {
                *parts.last_mut().unwrap() += 1;
            }
        }
        Composition::new(parts).unwrap()
    })
}

fn generic_point(n: u32) -> impl Strategy<Value = ConePoint> {
    // denominators 97 and distinct odd numerators keep partial sums off the walls
    prop::collection::vec(-500i64..=500, n as usize).prop_map(move |v| {
        let coords = v.iter().enumerate().map(|(i, x)| ratio(2 * x + 1, 97) + ratio(i as i64, 9973)).collect();
        ConePoint::new(Composition::borel(n), coords).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exp_log_inverse(s in series(6, 0)) {
        prop_assert_eq!(s.exp().unwrap().log().unwrap(), s);
    }

    #[test]
    fn log_of_product_is_sum(a in series(6, 1), b in series(6, 1)) {
        prop_assert_eq!(a.times(&b).log().unwrap(), a.log().unwrap().plus(&b.log().unwrap()));
    }

    #[test]
    fn integer_power_matches_pow_scalar(a in series(5, 1), e in 0u32..5) {
        let mut direct = TruncatedSeries::one(5, &rat(0));
        for _ in 0..e {
            direct = direct.times(&a);
        }
        prop_assert_eq!(a.pow_scalar(&rat(e as i64)).unwrap(), direct);
    }

    #[test]
    fn laurent_ring_laws(a in laurent(2), b in laurent(2), c in laurent(2)) {
        let ab_c = a.checked_mul(&b).unwrap().checked_mul(&c).unwrap();
        let a_bc = a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(&ab_c, &a_bc);
        let lhs = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
        let rhs = a.checked_mul(&b).unwrap().checked_add(&a.checked_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn laurent_exact_division_recovers_factor(a in laurent(1), b in laurent(1)) {
        prop_assume!(!b.is_empty());
        let prod = a.checked_mul(&b).unwrap();
        prop_assert_eq!(prod.exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn laurent_json_round_trip(a in laurent(2)) {
        prop_assert_eq!(LaurentPoly::from_json_str(&a.to_json_string()).unwrap(), a);
    }

    #[test]
    fn frobenius_substitution_is_multiplicative(a in laurent(1), b in laurent(1), k in 1i64..4) {
        let lhs = a.checked_mul(&b).unwrap().frobenius_substitute(k).unwrap();
        let rhs = a.frobenius_substitute(k).unwrap().checked_mul(&b.frobenius_substitute(k).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kappa_of_kirchhoff_is_tree_sum(r in 1usize..=5, w in prop::collection::vec(small_rat(), 10)) {
        let y = |i: usize, j: usize| w[(i * 5 + j) % w.len()].clone();
        prop_assert_eq!(kappa(&kirchhoff(r, y)).unwrap(), spanning_tree_sum(r, y, &BigRational::one()).unwrap());
    }

    #[test]
    fn delta_two_forms_agree(pairs in prop::collection::vec((1u64..=12, 1u64..=12), 1..=5)) {
        let ls: Vec<u64> = pairs.iter().map(|p| p.0).collect();
        let fs: Vec<u64> = pairs.iter().map(|p| p.1).collect();
        prop_assert_eq!(delta_character_sum(&ls, &fs).unwrap(), delta_mobius_sum(&ls, &fs).unwrap());
    }

    #[test]
    fn mobius_sums_to_zero_over_divisors(n in 2u64..2000) {
        let s: i64 = (1..=n).filter(|d| n % d == 0).map(mobius).sum();
        prop_assert_eq!(s, 0);
    }

    #[test]
    fn mobius_divisor_lemma(t in 1u64..=40, l in 1u64..=40, big_l in 1u64..=40) {
        prop_assert!(mobius_divisor_lemma_check(t, l, big_l));
    }

    #[test]
    fn langlands_identity((p, q, h) in (1u32..=5).prop_flat_map(|n| (composition(n), composition(n), generic_point(n)))) {
        // coarsen q to the common coarsening of p and q
        let cuts: Vec<u32> = p.cuts().intersection(&q.cuts()).copied().collect();
        let mut parts = Vec::new();
        let mut last = 0;
        for c in cuts.iter().chain(std::iter::once(&p.n())) {
            parts.push(c - last);
            last = *c;
        }
        let q = Composition::new(parts).unwrap();
        prop_assert!(cones::langlands_identity_check(&p, &q, &h).unwrap());
    }

    #[test]
    fn gamma_vanishes_at_zero((p, h) in (2u32..=5).prop_flat_map(|n| (composition(n), generic_point(n)))) {
        prop_assume!(p.r() > 1);
        let h = cones::project(&h, &p).unwrap();
        let t = ConePoint::zero(p.clone());
        prop_assert!(!cones::gamma(&p, &h, &t).unwrap());
    }

    #[test]
    fn f_p_modular_agrees(p in prop::sample::select(vec![2u64, 3, 5, 7]), n in 0u64..60) {
        let exact = f_p(p, n).unwrap();
        prop_assert_eq!(num::BigInt::from(f_p_mod(p, n, 1_000_003).unwrap()), exact % 1_000_003);
    }

    #[test]
    fn star_congruence(p in prop::sample::select(vec![2u64, 3, 5, 7, 11]), alpha in 1u32..=3, n in 1u64..=80) {
        prop_assert!(star_congruence_check(p, alpha, n).unwrap());
    }
}

#[test]
fn zero_series_has_trivial_exp() {
    let z = TruncatedSeries::zero(4, &rat(0));
    assert_eq!(z.exp().unwrap(), TruncatedSeries::one(4, &rat(0)));
    assert!(z.coeffs().iter().all(Zero::is_zero));
}
