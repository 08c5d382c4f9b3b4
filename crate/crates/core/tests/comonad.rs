mod common;

use common::*;
use fibcat::cat::enumerate::all_functors;
use fibcat::cat::{arrow_category, FinFunctor};
use fibcat::catalog;
use fibcat::comonad::{
    build_gf, coalgebra_check, comonad_laws, counit_eval_at_identity, split_equivalent, GfCaps, GfCat,
};
use fibcat::fib::{is_fibration, is_split, FibrationCheck};
use fibcat::Error;
use proptest::prelude::*;

/// Fiber sizes of G_F by enumerating every functor out of each slice.
fn fiber_oracle(f: &FinFunctor, gf: &GfCat) -> Vec<usize> {
    gf.base()
        .objects()
        .map(|b| {
            let sl = gf.slice(b);
            all_functors(&sl.carrier, f.source())
                .into_iter()
                .filter(|x| x.then(f).unwrap() == sl.proj_left)
                .count()
        })
        .collect()
}

fn check_fibration(f: &FinFunctor) -> Result<(), TestCaseError> {
    let cl = match is_fibration(f) {
        FibrationCheck::Fibration(cl) => cl,
        FibrationCheck::Refuted { .. } => return Ok(()),
    };
    let gf = match build_gf(f, GfCaps::default()) {
        Ok(gf) => gf,
        Err(Error::InstanceTooLarge { .. }) => return Err(TestCaseError::reject("over caps")),
        Err(e) => return Err(TestCaseError::fail(e.to_string())),
    };
    let fibers: Vec<usize> = gf.base().objects().map(|b| gf.fiber(b).count()).collect();
    prop_assert_eq!(&fibers, &fiber_oracle(f, &gf));
    let canonical = gf.canonical_cleavage().unwrap();
    prop_assert!(canonical.validate().is_ok());
    prop_assert!(is_split(&canonical).split);
    let e = counit_eval_at_identity(&gf).unwrap();
    prop_assert!(e.then(f).unwrap() == gf.projection);
    let co = coalgebra_check(&gf, &cl).unwrap();
    prop_assert!(co.holds(), "{:?}", co);
    let s = split_equivalent(&gf, &cl).unwrap();
    prop_assert!(s.split.split);
    prop_assert!(s.checks.holds(), "{:?}", s.checks);
    Ok(())
}

#[test]
fn catalog_fibrations_split() {
    for name in catalog::FIBRATIONS {
        let f = catalog::functor(name).unwrap();
        check_fibration(&f).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn comultiplication_counit_laws_on_small_fibrations() {
    for name in ["id_1", "id_2", "point0", "interval2_cod"] {
        let r = comonad_laws(&catalog::functor(name).unwrap(), GfCaps::default()).unwrap();
        assert!(r.holds(), "{name}: {r:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_fibrations_split((s, d, map) in thin_functor_strategy(poset(4), poset(3))) {
        let (a, b) = (thin("a", &s), thin("b", &d));
        let f = thin_functor(&a, &b, &map);
        prop_assume!(f.is_some());
        check_fibration(&f.unwrap())?;
    }

    #[test]
    fn preorder_fibrations_split((s, d, map) in thin_functor_strategy(preorder(3), preorder(2))) {
        let (a, b) = (thin("a", &s), thin("b", &d));
        let f = thin_functor(&a, &b, &map);
        prop_assume!(f.is_some());
        check_fibration(&f.unwrap())?;
    }

    #[test]
    fn arrow_category_projections_split(p in poset(3)) {
        let arrows = arrow_category(&thin("p", &p).cat).unwrap();
        check_fibration(&arrows.proj_left)?;
        check_fibration(&arrows.proj_right)?;
    }
}
