//! Algebraic laws of the free objects, the formula printer and parser, and
//! the semantics, as property tests.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use repkit::algebra::Representation;
use repkit::formula::{classify, parse, random_formula, Formula, GeneratorConfig};
use repkit::free::{eval_word, reduce, FreeWord, GroupAlgebraElement, Letter};
use repkit::semantics::{satisfies_at, HomSpace};
use repkit::starter::starter_catalog;

fn letters() -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((1u32..=3, any::<bool>()).prop_map(|(v, i)| Letter::new(v, i)), 0..12)
}

fn word() -> impl Strategy<Value = FreeWord> {
    letters().prop_map(reduce)
}

fn element(modulus: u32) -> impl Strategy<Value = GroupAlgebraElement> {
    prop::collection::vec((word(), 0i64..modulus as i64), 0..4)
        .prop_map(move |terms| GroupAlgebraElement::from_terms(modulus, terms))
}

fn rep(name: &str) -> Representation {
    starter_catalog().into_iter().find(|e| e.name == name).unwrap().rep
}

proptest! {
    #[test]
    fn reduction_is_idempotent_and_leaves_no_cancellation(ls in letters()) {
        let w = reduce(ls);
        prop_assert_eq!(reduce(w.letters().iter().copied()), w.clone());
        prop_assert!(w.letters().windows(2).all(|p| p[1] != p[0].inv()));
    }

    #[test]
    fn free_group_laws(a in word(), b in word(), c in word()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inv()).is_one());
        prop_assert_eq!(a.mul(&FreeWord::one()), a.clone());
        prop_assert_eq!(a.mul(&b).inv(), b.inv().mul(&a.inv()));
        prop_assert_eq!(a.pow(2), a.mul(&a));
        prop_assert!(a.pow(-3).mul(&a.pow(3)).is_one());
    }

    #[test]
    fn word_evaluation_is_a_homomorphism(a in word(), b in word(), beta in prop::collection::vec(0usize..6, 3)) {
        let g = rep("s3_sign_on_z3").group().clone();
        let ea = eval_word(&a, &beta, &g).unwrap();
        let eb = eval_word(&b, &beta, &g).unwrap();
        prop_assert_eq!(eval_word(&a.mul(&b), &beta, &g).unwrap(), g.mul(ea, eb));
        prop_assert_eq!(eval_word(&a.inv(), &beta, &g).unwrap(), g.inv(ea));
    }

    #[test]
    fn group_algebra_is_a_ring(u in element(4), v in element(4), w in element(4)) {
        prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
        prop_assert_eq!(&u * &(&v + &w), &(&u * &v) + &(&u * &w));
        prop_assert_eq!(&(&u + &v) * &w, &(&u * &w) + &(&v * &w));
        prop_assert_eq!(&u * &GroupAlgebraElement::one(4), u.clone());
        prop_assert_eq!(&GroupAlgebraElement::one(4) * &u, u.clone());
        prop_assert!((&u - &u).is_zero());
        prop_assert_eq!(&u + &v, &v + &u);
    }

    #[test]
    fn module_action_of_the_group_algebra(
        u in element(2),
        v in element(2),
        a in 0usize..4,
        beta in prop::collection::vec(0usize..6, 3),
    ) {
        let r = rep("s3_on_f2_squared");
        let m = r.module();
        let au = u.act_on(a, &beta, &r).unwrap();
        // (a∘u)∘v = a∘(uv) and a∘(u+v) = a∘u + a∘v.
        prop_assert_eq!(v.act_on(au, &beta, &r).unwrap(), (&u * &v).act_on(a, &beta, &r).unwrap());
        prop_assert_eq!((&u + &v).act_on(a, &beta, &r).unwrap(), m.add(au, v.act_on(a, &beta, &r).unwrap()));
        prop_assert_eq!(GroupAlgebraElement::one(2).act_on(a, &beta, &r).unwrap(), a);
    }

    #[test]
    fn printing_round_trips(seed in any::<u64>(), modulus in 1u32..8, action_type in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cfg = GeneratorConfig { action_type, ..GeneratorConfig::full(modulus) };
        let u = random_formula(&mut rng, &cfg);
        let text = u.to_string();
        let back = parse(&text, modulus).unwrap();
        prop_assert_eq!(&back, &u, "printed as {}", text);
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(classify(&u).is_action_type, u.is_action_type());
        if action_type {
            prop_assert!(u.is_action_type());
        }
    }

    #[test]
    fn val_agrees_with_pointwise_satisfaction(seed in any::<u64>(), which in 0usize..9) {
        let entry = &starter_catalog()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cfg = GeneratorConfig { max_depth: 3, ..GeneratorConfig::full(entry.rep.modulus()) };
        let u = random_formula(&mut rng, &cfg);
        let (n, m) = u.dims();
        let space = HomSpace::new(&entry.rep, n, m).unwrap();
        let v = space.val(&u).unwrap();
        for i in 0..space.size() {
            let p = space.point(i);
            prop_assert_eq!(v.contains(i), satisfies_at(&u, &entry.rep, &p.a, &p.g).unwrap(), "u = {} at {}", u, i);
        }
    }

    #[test]
    fn boolean_identities_of_val(seed in any::<u64>(), which in 0usize..9) {
        let entry = &starter_catalog()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cfg = GeneratorConfig { max_depth: 2, ..GeneratorConfig::full(entry.rep.modulus()) };
        let a = random_formula(&mut rng, &cfg);
        let b = random_formula(&mut rng, &cfg);
        let (n, m) = Formula::and(a.clone(), b.clone()).dims();
        let space = HomSpace::new(&entry.rep, n.max(1), m.max(1)).unwrap();
        let val = |u: &Formula| space.val(u).unwrap();
        prop_assert_eq!(val(&Formula::not(Formula::not(a.clone()))), val(&a));
        prop_assert_eq!(
            val(&Formula::not(Formula::and(a.clone(), b.clone()))),
            val(&Formula::or(Formula::not(a.clone()), Formula::not(b.clone())))
        );
        prop_assert_eq!(
            val(&Formula::forall_x(1, a.clone())),
            val(&Formula::not(Formula::exists_x(1, Formula::not(a.clone()))))
        );
        let ex = val(&Formula::exists_y(1, a.clone()));
        prop_assert!(val(&a).is_subset(&ex).unwrap());
    }
}
