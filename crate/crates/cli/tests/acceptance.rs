//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::Command;
use std::sync::Arc;
use std::time::Instant;

use fibcat::cat::enumerate::find_isomorphism;
use fibcat::cat::universal::{check_coequalizer, check_comma, check_pullback};
use fibcat::cat::{comma, point, pullback, FinCat, FinFunctor};
use fibcat::catalog::{self, EntryKind};
use fibcat::colimits::{
    coequalizer, conduche_check, default_max_len, generated_arrows, is_regular_epi, preservation_experiment,
    ConFailure, Quotient,
};
use fibcat::comonad::{build_gf, coalgebra_check, split_equivalent, GfCaps};
use fibcat::fib::{check_colax_idempotent, is_fibration, is_split, pseudo_algebra_alpha, FibrationCheck};
use fibcat::Error;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn functor(name: &str) -> Result<FinFunctor, String> {
    catalog::functor(name).map_err(err)
}

fn shapes() -> Vec<Arc<FinCat>> {
    catalog::TEST_SHAPES
        .iter()
        .map(|n| catalog::category(n).unwrap())
        .collect()
}

fn quop() -> Result<Quotient, String> {
    let (g, h) = (functor("quop_G")?, functor("quop_H")?);
    coequalizer(&g, &h, default_max_len(&g)).map_err(err)
}

fn criterion_1() -> Outcome {
    let q = quop()?;
    let a = catalog::category("quop_A").map_err(err)?;
    let iso = find_isomorphism(&q.carrier, &a).ok_or("quotient is not isomorphic to A")?;
    let non_identity = q.carrier.non_identity_arrows().count();
    ensure(q.carrier.object_count() == 3 && non_identity == 3, || {
        format!("{} objects, {non_identity} non-identity arrows", q.carrier.object_count())
    })?;
    let y = q.source();
    let v1 = y.arrow_by_name("v1").ok_or("no v1")?;
    let v2 = y.arrow_by_name("v2").ok_or("no v2")?;
    let class = q.functor.image_composite(&[v1, v2]).ok_or("(v1, v2) has no class")?;
    let w = a.arrow_by_name("w").ok_or("no w")?;
    ensure(iso.ar(class) == w, || "(v1, v2) does not land on w".into())?;
    Ok(format!("quotient named {:?}, isomorphic to A", q.carrier.arrow_name(class)))
}

fn criterion_2() -> Outcome {
    for name in catalog::FIBRATIONS {
        let f = functor(name)?;
        let cl = is_fibration(&f).into_cleavage(&f).map_err(err)?;
        let gf = build_gf(&f, GfCaps::default()).map_err(err)?;
        let canonical = gf.canonical_cleavage().map_err(err)?;
        ensure(canonical.validate().is_ok() && is_split(&canonical).split, || {
            format!("N({name}) is not split")
        })?;
        let co = coalgebra_check(&gf, &cl).map_err(err)?;
        ensure(co.section, || format!("counit after coalgebra is not the identity at {name}"))?;
        let s = split_equivalent(&gf, &cl).map_err(err)?;
        ensure(s.split.split && s.checks.holds(), || {
            format!("equivalence witness fails at {name}: {:?}", s.checks)
        })?;
    }
    Ok(format!("{} fibrations", catalog::FIBRATIONS.len()))
}

fn criterion_3() -> Outcome {
    for name in ["id_1", "id_2", "point1"] {
        let r = check_colax_idempotent(&functor(name)?, fibcat::fib::DEFAULT_SIZE_CAP).map_err(err)?;
        ensure(r.left_unit && r.triangle_unit && r.triangle_mult, || {
            format!("unit laws fail at {name}: {r:?}")
        })?;
        ensure(r.counit_natural && r.holds(), || format!("colax structure fails at {name}: {r:?}"))?;
    }
    Ok("Id_1, Id_2, point inclusion".into())
}

fn criterion_4() -> Outcome {
    for name in catalog::FIBRATIONS {
        let f = functor(name)?;
        let r = pseudo_algebra_alpha(&is_fibration(&f).into_cleavage(&f).map_err(err)?).map_err(err)?;
        ensure(r.left_inverse && r.over_base && r.counit_vertical && r.counit_cartesian, || {
            format!("alpha fails at {name}: {r:?}")
        })?;
    }
    for name in catalog::NON_FIBRATIONS {
        match is_fibration(&functor(name)?) {
            FibrationCheck::Refuted { .. } => {}
            FibrationCheck::Fibration(_) => return Err(format!("{name} was not refuted")),
        }
    }
    Ok(format!(
        "{} fibrations, {} refutations",
        catalog::FIBRATIONS.len(),
        catalog::NON_FIBRATIONS.len()
    ))
}

/// Pairs `G, H: 1 ⇒ 2` (the two points) coequalized by the constant `P` at `c`.
fn constant_pairs(base: &Arc<FinCat>) -> Result<Vec<(FinFunctor, FinFunctor, FinFunctor)>, String> {
    let two = catalog::category("two_points").map_err(err)?;
    let (g, h) = (functor("pick_p0")?, functor("pick_p1")?);
    Ok(base
        .objects()
        .map(|c| (g.clone(), h.clone(), FinFunctor::constant(two.clone(), base.clone(), c)))
        .collect())
}

fn criterion_5() -> Outcome {
    for name in catalog::FIBRATIONS {
        ensure(conduche_check(&functor(name)?).conduche, || format!("fibration {name} is not Conduché"))?;
    }
    for name in catalog::names(EntryKind::Category) {
        let id = FinFunctor::identity(catalog::category(name).map_err(err)?);
        ensure(conduche_check(&id).conduche, || format!("identity on {name} is not Conduché"))?;
    }
    let r = conduche_check(&functor("nonconduche_D")?);
    match &r.failure {
        Some((con, ConFailure::Empty)) if !r.conduche && con.is_empty() => {}
        other => return Err(format!("composite-picking D not refuted by an empty witness: {other:?}")),
    }
    let d = functor("quop_pick_w")?;
    let (g, h, q) = (functor("quop_G")?, functor("quop_H")?, functor("quop_Q")?);
    let r = preservation_experiment(&d, &g, &h, &q, default_max_len(&g)).map_err(err)?;
    ensure(!r.preserved, || "quop change of base reported preserved".into())?;
    let mut experiments = 0;
    for name in catalog::names(EntryKind::Functor) {
        let d = functor(name)?;
        if !conduche_check(&d).conduche {
            continue;
        }
        for (g, h, p) in constant_pairs(d.target())? {
            let r = preservation_experiment(&d, &g, &h, &p, default_max_len(&g)).map_err(err)?;
            ensure(r.preserved, || format!("not preserved along {name}: {:?}", r.mismatch))?;
            experiments += 1;
        }
    }
    let id = FinFunctor::identity(q.target().clone());
    ensure(preservation_experiment(&id, &g, &h, &q, 8).map_err(err)?.preserved, || {
        "identity change of base not preserved".into()
    })?;
    Ok(format!("{experiments} preserved experiments, quop refuted"))
}

fn criterion_6() -> Outcome {
    let mut quotients = vec![quop()?];
    for name in catalog::names(EntryKind::Category) {
        let y = catalog::category(name).map_err(err)?;
        for (a, b) in y.objects().flat_map(|a| y.objects().map(move |b| (a, b))).filter(|(a, b)| a < b) {
            match coequalizer(&point(&y, a), &point(&y, b), 6) {
                Ok(q) => quotients.push(q),
                Err(Error::NonTermination { .. }) => {}
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    for q in &quotients {
        let r = is_regular_epi(&q.functor, 8).map_err(err)?;
        ensure(r.is_regular_epi(), || format!("quotient functor not a regular epi: {r:?}"))?;
    }
    for name in ["point0", "point1"] {
        let f = functor(name)?;
        let r = is_regular_epi(&f, 8).map_err(err)?;
        let images: Vec<_> = f.arrow_map().to_vec();
        let generated = generated_arrows(f.target(), &images);
        ensure(!r.generates && generated.iter().any(|g| !g), || {
            format!("inclusion {name} passes generation")
        })?;
    }
    Ok(format!("{} quotients regular, inclusions refuted", quotients.len()))
}

fn criterion_7() -> Outcome {
    let (g, h) = (functor("point0")?, functor("point1")?);
    match coequalizer(&g, &h, 8) {
        Err(Error::NonTermination { trace, .. }) => {
            ensure(trace.windows(2).all(|w| w[0] < w[1]), || format!("trace not increasing: {trace:?}"))?;
            Ok(format!("refused, trace {trace:?}"))
        }
        Err(e) => Err(e.to_string()),
        Ok(q) => Err(format!("emitted a finite quotient with {} arrows", q.carrier.arrow_count())),
    }
}

fn criterion_8() -> Outcome {
    let tests = shapes();
    let mut checks = 0;
    for name in catalog::names(EntryKind::Functor) {
        let f = functor(name)?;
        let id = FinFunctor::identity(f.target().clone());
        for (l, r) in [(&id, &f), (&f, &id)] {
            let cc = comma(l, r).map_err(err)?;
            let expected: usize = l
                .source()
                .objects()
                .flat_map(|x| r.source().objects().map(move |y| (x, y)))
                .map(|(x, y)| f.target().hom(l.ob(x), r.ob(y)).len())
                .sum();
            ensure(expected == cc.carrier.object_count(), || format!("comma count at {name}"))?;
            let u = check_comma(&cc, &tests).map_err(err)?;
            ensure(u.holds, || format!("comma universal property at {name}: {u:?}"))?;
            checks += 1;
        }
        let pb = pullback(&f, &id).map_err(err)?;
        let u = check_pullback(&pb, &tests).map_err(err)?;
        ensure(u.holds, || format!("pullback universal property at {name}: {u:?}"))?;
        checks += 1;
    }
    let (g, h) = (functor("quop_G")?, functor("quop_H")?);
    let q = quop()?;
    let u = check_coequalizer(&g, &h, &q.functor, &tests).map_err(err)?;
    ensure(u.holds, || format!("coequalizer universal property: {u:?}"))?;
    Ok(format!("{} universal checks", checks + 1))
}

const SUITE: &[&[&str]] = &[
    &["validate", "quop_Y"],
    &["validate", "poset2x2_cod"],
    &["comma", "id:interval2", "interval2_cod", "--universal"],
    &["pullback", "interval2_cod", "interval2_dom", "--universal"],
    &["fib", "check", "id_B"],
    &["fib", "check", "two_point_nonfib"],
    &["fib", "cleavage", "poset2x2_cod"],
    &["fib", "split-check", "poset2x2_dom"],
    &["fib", "monad", "point1"],
    &["fib", "colax-check", "id_2"],
    &["fib", "alpha", "poset2x2_cod"],
    &["comonad", "build", "poset2x2_cod"],
    &["comonad", "counit", "point0"],
    &["comonad", "laws", "interval2_cod"],
    &["comonad", "coalgebra", "poset2x2_cod"],
    &["comonad", "split", "poset2x2_cod"],
    &["colim", "coeq", "quop_G", "quop_H", "--compare", "quop_A", "--universal"],
    &["colim", "coeq", "point0", "point1"],
    &["colim", "regepi", "quop_Q"],
    &["colim", "conduche", "nonconduche_D"],
    &["colim", "preserve", "quop_pick_w", "quop_G", "quop_H", "quop_Q"],
    &["dot", "quop_A"],
];

fn suite_reports(workers: &str) -> Result<Vec<u8>, String> {
    let mut all = Vec::new();
    for args in SUITE {
        let out = Command::new(env!("CARGO_BIN_EXE_fibcat"))
            .args(*args)
            .args(["--json", "--workers", workers])
            .env_clear()
            .output()
            .map_err(|e| e.to_string())?;
        if out.status.code().is_none_or(|c| c > 2) {
            return Err(format!("{args:?} crashed: {}", String::from_utf8_lossy(&out.stderr)));
        }
        all.extend_from_slice(&out.stdout);
    }
    Ok(all)
}

fn criterion_9() -> Outcome {
    let first = suite_reports("1")?;
    let second = suite_reports("1")?;
    let parallel = suite_reports("4")?;
    ensure(first == second, || "two runs differ".into())?;
    ensure(first == parallel, || "1 and 4 workers differ".into())?;
    Ok(format!("{} reports, {} bytes", SUITE.len(), first.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("quop coequalizer is A", criterion_1),
        ("splitting theorem on catalog fibrations", criterion_2),
        ("comma monad laws", criterion_3),
        ("pseudo-algebras and refutations", criterion_4),
        ("Conduché suite and preservation", criterion_5),
        ("regular-epi criterion", criterion_6),
        ("honest divergence", criterion_7),
        ("universal-property oracles", criterion_8),
        ("determinism", criterion_9),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(note) => println!("PASS criterion {}: {title} ({note}; {secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {title} ({why}; {secs:.2}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
