mod common;

use common::*;
use fibcat::cat::{pullback, FinFunctor};
use fibcat::catalog::{self, EntryKind};
use fibcat::fib::{
    check_colax_idempotent, is_cartesian, is_fibration, is_split, is_street_fibration, pseudo_algebra_alpha,
    FibrationCheck,
};
use proptest::prelude::*;

fn catalog_functors() -> Vec<(&'static str, FinFunctor)> {
    catalog::names(EntryKind::Functor)
        .map(|n| (n, catalog::functor(n).unwrap()))
        .collect()
}

#[test]
fn catalog_cartesian_arrows_match_definition() {
    for (name, f) in catalog_functors() {
        for phi in f.source().arrow_ids() {
            let got = is_cartesian(&f, phi).unwrap().is_cartesian();
            assert_eq!(got, cartesian_oracle(&f, phi), "{name} at {}", f.source().arrow_name(phi));
        }
    }
}

#[test]
fn catalog_classification_matches_definition() {
    for (name, f) in catalog_functors() {
        let check = is_fibration(&f);
        assert_eq!(check.cleavage().is_some(), fibration_oracle(&f), "{name}");
    }
    for name in catalog::FIBRATIONS {
        assert!(is_fibration(&catalog::functor(name).unwrap()).cleavage().is_some(), "{name}");
    }
    for name in catalog::NON_FIBRATIONS {
        let f = catalog::functor(name).unwrap();
        match is_fibration(&f) {
            FibrationCheck::Refuted { object, arrow } => {
                let (a, b) = (f.source(), f.target());
                assert_eq!(b.dst(arrow), f.ob(object));
                assert!(a
                    .arrows_into(object)
                    .iter()
                    .all(|&phi| f.ar(phi) != arrow || !cartesian_oracle(&f, phi)));
            }
            FibrationCheck::Fibration(_) => panic!("{name} should be refuted"),
        }
    }
}

#[test]
fn catalog_fibrations_are_pseudo_algebras() {
    for name in catalog::FIBRATIONS {
        let f = catalog::functor(name).unwrap();
        let cl = is_fibration(&f).into_cleavage(&f).unwrap();
        let r = pseudo_algebra_alpha(&cl).unwrap();
        assert!(r.holds(), "{name}: {r:?}");
    }
}

#[test]
fn point_inclusion_monad_laws() {
    let r = check_colax_idempotent(&catalog::functor("point1").unwrap(), 200).unwrap();
    assert!(r.holds(), "{r:?}");
    assert_eq!(r.stages[0].objects, 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cartesian_matches_definition((s, d, map) in thin_functor_strategy(preorder(4), preorder(3))) {
        let (src, dst) = (thin("a", &s), thin("b", &d));
        let f = thin_functor(&src, &dst, &map);
        prop_assume!(f.is_some());
        let f = f.unwrap();
        for phi in f.source().arrow_ids() {
            prop_assert_eq!(is_cartesian(&f, phi).unwrap().is_cartesian(), cartesian_oracle(&f, phi));
        }
        prop_assert_eq!(is_fibration(&f).cleavage().is_some(), fibration_oracle(&f));
    }

    #[test]
    fn cleavages_are_normalized((s, d, map) in thin_functor_strategy(preorder(4), preorder(3))) {
        let (src, dst) = (thin("a", &s), thin("b", &d));
        let f = thin_functor(&src, &dst, &map);
        prop_assume!(f.is_some());
        let f = f.unwrap();
        if let FibrationCheck::Fibration(cl) = is_fibration(&f) {
            prop_assert!(cl.validate().is_ok());
            for x in f.source().objects() {
                prop_assert_eq!(cl.lift(x, f.target().id(f.ob(x))), f.source().id(x));
            }
            // Over a skeletal source, cartesian lifts are unique, hence split.
            let skeletal = (0..s.len()).all(|i| (0..s.len()).all(|j| i == j || !(s[i][j] && s[j][i])));
            if skeletal {
                prop_assert!(is_split(&cl).split);
            }
            prop_assert!(is_street_fibration(&f).street);
        }
    }

    #[test]
    fn fibrations_compose(
        (s, m, map1) in thin_functor_strategy(preorder(3), preorder(3)),
        d in preorder(3),
        seed in proptest::collection::vec(any::<usize>(), 3),
    ) {
        let (a, b, c) = (thin("a", &s), thin("b", &m), thin("c", &d));
        let map2: Vec<usize> = (0..m.len()).map(|i| seed[i % 3] % d.len()).collect();
        let (f, g) = (thin_functor(&a, &b, &map1), thin_functor(&b, &c, &map2));
        prop_assume!(f.is_some() && g.is_some());
        let (f, g) = (f.unwrap(), g.unwrap());
        if is_fibration(&f).cleavage().is_some() && is_fibration(&g).cleavage().is_some() {
            prop_assert!(is_fibration(&f.then(&g).unwrap()).cleavage().is_some());
        }
    }

    #[test]
    fn fibrations_are_stable_under_pullback(
        (s, d, map) in thin_functor_strategy(preorder(3), preorder(3)),
        e in preorder(3),
        seed in proptest::collection::vec(any::<usize>(), 3),
    ) {
        let (a, b, c) = (thin("a", &s), thin("b", &d), thin("c", &e));
        let kmap: Vec<usize> = (0..e.len()).map(|i| seed[i] % d.len()).collect();
        let (f, k) = (thin_functor(&a, &b, &map), thin_functor(&c, &b, &kmap));
        prop_assume!(f.is_some() && k.is_some());
        let (f, k) = (f.unwrap(), k.unwrap());
        if is_fibration(&f).cleavage().is_some() {
            let pb = pullback(&k, &f).unwrap();
            prop_assert!(is_fibration(&pb.proj_left).cleavage().is_some());
        }
    }

    #[test]
    fn fibration_check_ignores_worker_count((s, d, map) in thin_functor_strategy(preorder(4), preorder(3))) {
        let (src, dst) = (thin("a", &s), thin("b", &d));
        let f = thin_functor(&src, &dst, &map);
        prop_assume!(f.is_some());
        let f = f.unwrap();
        let run = |n| {
            rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap().install(|| match is_fibration(&f) {
                FibrationCheck::Fibration(cl) => Ok(cl.entries()),
                FibrationCheck::Refuted { object, arrow } => Err((object, arrow)),
            })
        };
        prop_assert_eq!(run(1), run(4));
    }

    #[test]
    fn fibrations_give_lawful_alpha((s, d, map) in thin_functor_strategy(poset(3), poset(3))) {
        let (src, dst) = (thin("a", &s), thin("b", &d));
        let f = thin_functor(&src, &dst, &map);
        prop_assume!(f.is_some());
        let f = f.unwrap();
        if let FibrationCheck::Fibration(cl) = is_fibration(&f) {
            let r = pseudo_algebra_alpha(&cl).unwrap();
            prop_assert!(r.holds());
        }
    }

    #[test]
    fn comma_monad_is_colax_idempotent((s, d, map) in thin_functor_strategy(poset(2), poset(2))) {
        let (src, dst) = (thin("a", &s), thin("b", &d));
        let f = thin_functor(&src, &dst, &map);
        prop_assume!(f.is_some());
        let f = f.unwrap();
        let r = check_colax_idempotent(&f, 200).unwrap();
        prop_assert!(r.left_unit && r.right_unit && r.counit_natural);
        prop_assert!(r.triangle_unit && r.triangle_mult && r.hom_bijection);
        prop_assert!(r.associativity != Some(false));
    }
}
