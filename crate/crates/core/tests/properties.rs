use std::collections::BTreeSet;

use proptest::prelude::*;

use coxtw::closure::{is_biclosed, ClosureMode};
use coxtw::oracle::Oracle;
use coxtw::words::PeriodicWord;
use coxtw::{parse_biclosed, Biclosed, CoxeterSystem, GroupElement, TwistedOrder};

const TYPES: [&str; 8] = ["A2", "B2", "G2", "A3", "A~1", "A~2", "C~2", "G~2"];

fn system() -> impl Strategy<Value = CoxeterSystem> {
    prop::sample::select(TYPES.to_vec()).prop_map(|t| CoxeterSystem::from_type(t).unwrap())
}

fn element(sys: &CoxeterSystem, word: &[usize]) -> GroupElement {
    let n = sys.num_generators();
    let w: Vec<usize> = word.iter().map(|&s| s % n).collect();
    sys.from_word(&w).unwrap()
}

/// A system, a biclosed set of one of several shapes, and three elements.
fn setup() -> impl Strategy<Value = (CoxeterSystem, Biclosed, [GroupElement; 3])> {
    let word = || prop::collection::vec(0usize..4, 0..7);
    (system(), 0usize..6, word(), word(), word(), word())
        .prop_map(|(sys, shape, a, b, c, d)| {
            let w = element(&sys, &a);
            let b_set = match shape {
                0 => Biclosed::empty(),
                1 => Biclosed::full(),
                2 => Biclosed::InvSet(w.clone()),
                3 => Biclosed::hat_of_negative(&sys),
                4 => Biclosed::twist(&sys, &w, Biclosed::hat_of_positive(&sys)),
                _ => Biclosed::complement(Biclosed::InvSet(w.clone())),
            };
            let xs = [element(&sys, &b), element(&sys, &c), element(&sys, &d)];
            (sys, b_set, xs)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn inversion_sets_have_length_many_roots((sys, _, [x, y, _]) in setup()) {
        let inv = sys.inversion_set(&x);
        prop_assert_eq!(inv.len(), x.length());
        prop_assert!(inv.iter().all(|r| sys.is_positive_root(r)));
        let xy = sys.mul(&x, &y).unwrap();
        prop_assert!(xy.length() <= x.length() + y.length());
        prop_assert_eq!((xy.length() + x.length() + y.length()) % 2, 0);
        prop_assert!(sys.mul(&x, &sys.inverse(&x).unwrap()).unwrap().is_identity());
        let reparsed = sys.from_word(x.word()).unwrap();
        prop_assert_eq!(reparsed.word(), x.word());
    }

    #[test]
    fn action_preserves_the_form((sys, _, [x, _, _]) in setup()) {
        let roots = sys.roots_up_to(1);
        for r in roots.iter().take(12) {
            for q in roots.iter().take(12) {
                let (xr, xq) = (sys.act(&x, r).unwrap(), sys.act(&x, q).unwrap());
                prop_assert!(sys.is_root(&xr));
                prop_assert_eq!(sys.inner_product(&xr, &xq), sys.inner_product(r, q));
            }
        }
    }

    #[test]
    fn twisted_length_parity_and_steps((sys, b, [x, _, _]) in setup()) {
        let order = TwistedOrder::new(&sys, b.clone());
        let t = order.tlen(&x);
        prop_assert_eq!(t.rem_euclid(2), (x.length() as i64).rem_euclid(2));
        prop_assert!(t.abs() <= x.length() as i64);
        prop_assert_eq!(t, Oracle::new(&sys, &b).tlen(&x));
        let c = order.covers(&x);
        prop_assert_eq!(c.up.len() + c.down.len(), sys.num_generators());
        for u in &c.up {
            prop_assert_eq!(order.tlen(u), t + 1);
        }
        for d in &c.down {
            prop_assert_eq!(order.tlen(d), t - 1);
        }
    }

    #[test]
    fn le_is_a_partial_order((sys, b, [x, y, z]) in setup()) {
        let order = TwistedOrder::new(&sys, b);
        prop_assert!(order.le(&x, &x));
        if order.le(&x, &y) && order.le(&y, &x) {
            prop_assert_eq!(&x, &y);
        }
        if order.le(&x, &y) && order.le(&y, &z) {
            prop_assert!(order.le(&x, &z));
        }
        prop_assert_eq!(order.le(&x, &y), order.dual().le(&y, &x));
    }

    #[test]
    fn chains_and_intervals((sys, b, [x, y, _]) in setup()) {
        let order = TwistedOrder::new(&sys, b);
        let (x, y) = if order.le(&x, &y) { (x, y) } else { (y, x) };
        prop_assume!(order.le(&x, &y));
        let chain = order.chain(&x, &y).unwrap();
        let sym = sys.inversion_set_btree(&x).symmetric_difference(&sys.inversion_set_btree(&y)).count();
        prop_assert_eq!(chain.len(), sym + 1);
        prop_assert_eq!(order.tlen(&y) - order.tlen(&x), sym as i64);
        let interval = order.interval(&x, &y).unwrap();
        prop_assert!(interval.iter().all(|v| order.le(&x, v) && order.le(v, &y)));
        prop_assert!(chain.iter().all(|v| interval.contains(v)));
    }

    #[test]
    fn twisting_is_an_action((sys, b, [u, v, _]) in setup()) {
        let uv = sys.mul(&u, &v).unwrap();
        let lhs = Biclosed::twist(&sys, &uv, b.clone());
        let rhs = Biclosed::Twisted(u.clone(), Box::new(Biclosed::Twisted(v.clone(), Box::new(b.clone()))));
        for r in sys.positive_roots_up_to(4) {
            prop_assert_eq!(lhs.contains(&sys, &r), rhs.contains(&sys, &r));
        }
        let phi = Biclosed::Twisted(u.clone(), Box::new(Biclosed::InvSet(v.clone())));
        let level = if sys.is_affine() { uv.length() } else { 0 };
        prop_assert_eq!(phi.members_up_to(&sys, level), sys.inversion_set_btree(&uv));
    }

    #[test]
    fn biclosed_near_the_identity((sys, b, _) in setup()) {
        let level = if sys.is_affine() { 2 } else { 0 };
        let ambient = sys.positive_roots_up_to(level);
        let members: Vec<_> = b.members_up_to(&sys, level).into_iter().collect();
        prop_assert!(is_biclosed(&sys, &members, &ambient, ClosureMode::TwoClosure).unwrap());
    }

    #[test]
    fn expressions_round_trip((sys, b, _) in setup()) {
        let text = b.to_string();
        let again = parse_biclosed(&sys, &text).unwrap();
        let level = if sys.is_affine() { 3 } else { 0 };
        prop_assert_eq!(again.members_up_to(&sys, level), b.members_up_to(&sys, level));
    }

    #[test]
    fn meets_are_greatest_lower_bounds((sys, b, [x, y, _]) in setup()) {
        let order = TwistedOrder::new(&sys, b);
        if let Ok(m) = order.meet(&x, &y) {
            prop_assert!(order.le(&m, &x) && order.le(&m, &y));
            for v in sys.ball(3) {
                if order.le(&v, &x) && order.le(&v, &y) {
                    prop_assert!(order.le(&v, &m));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn infinite_word_prefixes_grow(coeffs in prop::collection::vec(-2i64..=2, 2)) {
        prop_assume!(coeffs.iter().any(|&c| c != 0));
        let sys = CoxeterSystem::from_type("A~2").unwrap();
        let t = sys.translation_by_coroots(&coeffs).unwrap();
        let w = PeriodicWord::validate(&sys, &[], t.word()).unwrap();
        let mut prev = BTreeSet::new();
        for k in 0..=2 * t.length() {
            let p = w.prefix_of_length(&sys, k);
            prop_assert_eq!(p.length(), k);
            let cur = sys.inversion_set_btree(&p);
            prop_assert!(prev.is_subset(&cur));
            prop_assert!(cur.iter().all(|r| w.contains(&sys, r)));
            prev = cur;
        }
    }
}
