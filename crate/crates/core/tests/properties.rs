use proptest::prelude::*;

use burau_forge::algebra::{Field, Fp, Gaussian, LaurentPoly, Rational, Ring};
use burau_forge::braid::{BraidWord, FreeWord};
use burau_forge::building::{adjacent, eval_h_word, lattice_of, phi};
use burau_forge::burau::{burau_matrix, gamma_membership, BurauKind};
use burau_forge::similitude::{q_normal_form, GenId, GenWord};
use burau_forge::stallings::{a_l_words, fold};

fn laurent<F: Field>(coeff: impl Strategy<Value = F>) -> impl Strategy<Value = LaurentPoly<F>> {
    prop::collection::vec((-5i64..=5, coeff), 0..5).prop_map(LaurentPoly::from_terms)
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Rational::new(n, d))
}

fn fp5() -> impl Strategy<Value = Fp<5>> {
    (0i64..5).prop_map(Fp::from_i64)
}

fn gaussian() -> impl Strategy<Value = Gaussian> {
    (-5i64..=5, -5i64..=5).prop_map(|(a, b)| Gaussian::from_parts((a, 1), (b, 1)))
}

fn braid(n: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n, prop::bool::ANY), 0..8).prop_map(move |ls| {
        BraidWord::new(n, ls.into_iter().map(|(i, s)| (i, if s { 1 } else { -1 })).collect()).unwrap()
    })
}

fn h_word() -> impl Strategy<Value = FreeWord> {
    prop::collection::vec((1i32..=6, prop::bool::ANY), 0..5)
        .prop_map(|ls| FreeWord::new(ls.into_iter().map(|(k, s)| if s { k } else { -k })))
}

fn bar_holds<F: Field>(a: &LaurentPoly<F>, b: &LaurentPoly<F>) -> bool {
    a.mul(b).bar() == a.bar().mul(&b.bar()) && a.add(b).bar() == a.bar().add(&b.bar()) && a.bar().bar() == *a
}

fn gen_word<F: Field>(pool: Vec<F>) -> impl Strategy<Value = GenWord<F>> {
    let n = pool.len();
    (prop::collection::vec((0..n, prop::bool::ANY), 0..=6), 0i64..2, 0i64..2).prop_map(move |(ls, a, b)| {
        let mut w = GenWord::empty();
        let mut last = None;
        for (k, s) in ls {
            if last == Some(k) {
                continue;
            }
            w.push(GenId::G(pool[k].clone()), if s { 1 } else { -1 });
            last = Some(k);
        }
        w.concat(&GenWord::new([(GenId::Hm1, a), (GenId::H0, b)]))
    })
}

fn q_pool() -> Vec<Rational> {
    ["1", "-1", "2", "-2", "1/2", "3", "-1/3"].iter().map(|s| Rational::parse(s).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bar_is_a_ring_involution_q(a in laurent(rational()), b in laurent(rational())) {
        prop_assert!(bar_holds(&a, &b));
    }

    #[test]
    fn bar_is_a_ring_involution_fp5(a in laurent(fp5()), b in laurent(fp5())) {
        prop_assert!(bar_holds(&a, &b));
    }

    #[test]
    fn bar_is_a_ring_involution_qi(a in laurent(gaussian()), b in laurent(gaussian())) {
        prop_assert!(bar_holds(&a, &b));
    }

    #[test]
    fn unreduced_images_stay_in_target(a in braid(4), b in braid(4)) {
        let m = burau_matrix::<Rational>(&a, BurauKind::Unreduced).mul(&burau_matrix(&b, BurauKind::Unreduced));
        prop_assert!(gamma_membership(&m, 4).unwrap().passes());
    }

    #[test]
    fn normal_form_round_trip_q(w in gen_word(q_pool())) {
        prop_assert_eq!(q_normal_form(&w.eval().unwrap(), 8).unwrap(), w);
    }

    #[test]
    fn normal_form_round_trip_fp5(w in gen_word((1..5).map(Fp::<5>::from_i64).collect())) {
        prop_assert_eq!(q_normal_form(&w.eval().unwrap(), 8).unwrap(), w);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn phi_is_additive(u in h_word(), v in h_word()) {
        let (pu, pv) = (phi(&eval_h_word(&u)).unwrap(), phi(&eval_h_word(&v)).unwrap());
        let puv = phi(&eval_h_word(&u.concat(&v))).unwrap();
        prop_assert_eq!(puv, (pu.0.add(&pv.0), pu.1.add(&pv.1)));
    }

    #[test]
    fn neighbours_have_consecutive_types(w in h_word(), k in 1i32..=6, s in prop::bool::ANY) {
        let x = eval_h_word(&w);
        let y = eval_h_word(&w.concat(&FreeWord::letter(if s { k } else { -k })));
        let (a, b) = (lattice_of(&x).unwrap(), lattice_of(&y).unwrap());
        prop_assert_eq!(adjacent(&a, &b), adjacent(&b, &a));
        if adjacent(&a, &b) {
            prop_assert_ne!(a.vertex_type(), b.vertex_type());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn folding_is_confluent(order in Just((0..9).collect::<Vec<usize>>()).prop_shuffle()) {
        let a = a_l_words();
        let shuffled: Vec<FreeWord> = order.iter().map(|&k| a[k].clone()).collect();
        prop_assert_eq!(fold(&shuffled, 9).unwrap(), fold(&a, 9).unwrap());
    }
}
