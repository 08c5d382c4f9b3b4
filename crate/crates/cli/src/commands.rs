use std::sync::Arc;

use fibcat::cat::enumerate::find_isomorphism;
use fibcat::cat::universal::{check_coequalizer, check_comma, check_pullback, UniversalReport};
use fibcat::cat::{comma, pullback, FinCat, FinFunctor};
use fibcat::colimits::{
    coequalizer, conduche_check, default_max_len, is_regular_epi, preservation_experiment, ConFailure,
};
use fibcat::comonad::{
    build_gf, coalgebra_check, comonad_laws, counit_eval_at_identity, split_equivalent, GfCaps,
};
use fibcat::dot::{category_dot, clustered_dot};
use fibcat::fib::{
    check_colax_idempotent, is_cartesian, is_fibration, is_split, is_street_fibration, pseudo_algebra_alpha,
    Cartesianness, Cleavage, FibrationCheck, MonadInstance, SplitFailure,
};
use fibcat::io::category_to_file;
use fibcat::catalog;
use serde_json::{json, Map, Value};

use crate::args::{Cli, ColimCommand, Command, ComonadCommand, FibCommand};
use crate::workspace::{Entry, Workspace};
use crate::CliError;

/// Result of one command before it is wrapped in a report.
pub struct Outcome {
    pub pass: bool,
    pub result: Value,
    pub dot: Option<String>,
}

fn outcome(pass: bool, result: Value) -> Outcome {
    Outcome {
        pass,
        result,
        dot: None,
    }
}

fn names_of_objects(c: &FinCat, xs: impl IntoIterator<Item = fibcat::cat::ObjId>) -> Vec<String> {
    xs.into_iter().map(|x| c.object_name(x).to_string()).collect()
}

/// Object and non-identity arrow maps by name.
fn functor_json(f: &FinFunctor) -> Value {
    let (s, t) = (f.source(), f.target());
    let objects: Map<String, Value> = s
        .objects()
        .map(|x| (s.object_name(x).to_string(), json!(t.object_name(f.ob(x)))))
        .collect();
    let arrows: Map<String, Value> = s
        .non_identity_arrows()
        .map(|a| (s.arrow_name(a).to_string(), json!(t.arrow_name(f.ar(a)))))
        .collect();
    json!({ "objects": objects, "arrows": arrows })
}

fn counts(c: &FinCat) -> Value {
    json!({ "objects": c.object_count(), "arrows": c.arrow_count() })
}

fn universal_json(r: &UniversalReport) -> Value {
    json!({
        "test_categories": r.test_categories,
        "cones": r.cones,
        "mediators": r.mediators,
        "holds": r.holds,
    })
}

fn test_shapes() -> Result<Vec<Arc<FinCat>>, CliError> {
    catalog::TEST_SHAPES
        .iter()
        .map(|n| catalog::category(n).map_err(CliError::from))
        .collect()
}

fn gf_caps(cli: &Cli) -> GfCaps {
    GfCaps {
        base_objects: cli.base_cap,
        slice_arrows: cli.slice_cap,
    }
}

fn cleavage_of(f: &FinFunctor) -> Result<Cleavage, CliError> {
    Ok(is_fibration(f).into_cleavage(f)?)
}

fn refutation_json(f: &FinFunctor, object: fibcat::cat::ObjId, arrow: fibcat::cat::ArrId) -> Result<Value, CliError> {
    let (a, b) = (f.source(), f.target());
    let mut candidates = Vec::new();
    for &phi in a.arrows_into(object) {
        if f.ar(phi) != arrow {
            continue;
        }
        if let Cartesianness::Refuted { psi, w, fillers } = is_cartesian(f, phi)? {
            candidates.push(json!({
                "candidate": a.arrow_name(phi),
                "psi": a.arrow_name(psi),
                "w": b.arrow_name(w),
                "fillers": fillers,
            }));
        }
    }
    Ok(json!({
        "object": a.object_name(object),
        "arrow": b.arrow_name(arrow),
        "rejected_candidates": candidates,
    }))
}

pub fn execute(cli: &Cli, ws: &mut Workspace) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Validate { entry } => validate(ws, entry),
        Command::Comma {
            left,
            right,
            universal,
        } => {
            let (f, g) = (ws.functor(left)?, ws.functor(right)?);
            let cc = comma(&f, &g)?;
            let b = f.target();
            let mut expected = 0;
            for x in f.source().objects() {
                for y in g.source().objects() {
                    expected += b.hom(f.ob(x), g.ob(y)).len();
                }
            }
            let formula = expected == cc.carrier.object_count();
            let mut result = json!({
                "objects": cc.carrier.object_count(),
                "arrows": cc.carrier.arrow_count(),
                "hom_formula_objects": expected,
                "formula_matches": formula,
            });
            let mut pass = formula;
            if *universal {
                let u = check_comma(&cc, &test_shapes()?)?;
                pass &= u.holds;
                result["universal"] = universal_json(&u);
            }
            Ok(Outcome {
                pass,
                result,
                dot: Some(category_dot(&cc.carrier, "comma")),
            })
        }
        Command::Pullback {
            left,
            right,
            universal,
        } => {
            let (f, g) = (ws.functor(left)?, ws.functor(right)?);
            let pb = pullback(&f, &g)?;
            let expected = f
                .source()
                .objects()
                .map(|x| g.source().objects().filter(|&y| f.ob(x) == g.ob(y)).count())
                .sum::<usize>();
            let formula = expected == pb.carrier.object_count();
            let mut result = json!({
                "objects": pb.carrier.object_count(),
                "arrows": pb.carrier.arrow_count(),
                "fiber_formula_objects": expected,
                "formula_matches": formula,
            });
            let mut pass = formula;
            if *universal {
                let u = check_pullback(&pb, &test_shapes()?)?;
                pass &= u.holds;
                result["universal"] = universal_json(&u);
            }
            Ok(Outcome {
                pass,
                result,
                dot: Some(category_dot(&pb.carrier, "pullback")),
            })
        }
        Command::Dot { entry, cluster_by } => {
            let text = match (ws.entry(entry)?, cluster_by) {
                (Entry::Category(c), None) => category_dot(&c, entry),
                (Entry::Category(c), Some(p)) => {
                    let p = ws.functor(p)?;
                    if !fibcat::cat::same_cat(p.source(), &c) {
                        return Err(CliError::Usage("clustering functor must start at the category".into()));
                    }
                    clustered_dot(&p, entry)
                }
                (Entry::Functor(f), _) => clustered_dot(&f, entry),
            };
            Ok(Outcome {
                pass: true,
                result: json!({ "dot_lines": text.lines().count() }),
                dot: Some(text),
            })
        }
        Command::Fib(c) => fib(cli, ws, c),
        Command::Comonad(c) => comonad(cli, ws, c),
        Command::Colim(c) => colim(cli, ws, c),
    }
}

fn validate(ws: &mut Workspace, entry: &str) -> Result<Outcome, CliError> {
    Ok(match ws.entry(entry)? {
        Entry::Category(c) => {
            let canonical = category_to_file(&c, None).to_json();
            outcome(
                true,
                json!({
                    "kind": "category",
                    "objects": c.object_count(),
                    "arrows": c.arrow_count(),
                    "canonical_sha256": crate::report::digest(&canonical),
                }),
            )
        }
        Entry::Functor(f) => outcome(
            true,
            json!({
                "kind": "functor",
                "source": counts(f.source()),
                "target": counts(f.target()),
            }),
        ),
    })
}

fn fib(cli: &Cli, ws: &mut Workspace, c: &FibCommand) -> Result<Outcome, CliError> {
    Ok(match c {
        FibCommand::Check { functor } => {
            let f = ws.functor(functor)?;
            let street = is_street_fibration(&f);
            match is_fibration(&f) {
                FibrationCheck::Fibration(cl) => outcome(
                    true,
                    json!({
                        "fibration": true,
                        "lifts": cl.len(),
                        "street": street.street,
                    }),
                ),
                FibrationCheck::Refuted { object, arrow } => outcome(
                    false,
                    json!({
                        "fibration": false,
                        "refutation": refutation_json(&f, object, arrow)?,
                        "street": street.street,
                    }),
                ),
            }
        }
        FibCommand::Cleavage { functor } => {
            let f = ws.functor(functor)?;
            match is_fibration(&f) {
                FibrationCheck::Fibration(cl) => {
                    let (a, b) = (f.source(), f.target());
                    let lifts: Vec<Value> = cl
                        .entries()
                        .into_iter()
                        .map(|(x, arr, l)| {
                            json!({
                                "object": a.object_name(x),
                                "arrow": b.arrow_name(arr),
                                "lift": a.arrow_name(l),
                                "reindexed": a.object_name(a.src(l)),
                            })
                        })
                        .collect();
                    outcome(true, json!({ "fibration": true, "lifts": lifts }))
                }
                FibrationCheck::Refuted { object, arrow } => outcome(
                    false,
                    json!({ "fibration": false, "refutation": refutation_json(&f, object, arrow)? }),
                ),
            }
        }
        FibCommand::SplitCheck { functor } => {
            let f = ws.functor(functor)?;
            let cl = cleavage_of(&f)?;
            let s = is_split(&cl);
            let (a, b) = (f.source(), f.target());
            let failure = match s.failure {
                None => Value::Null,
                Some(SplitFailure::Identity { object }) => json!({
                    "kind": "identity",
                    "object": a.object_name(object),
                }),
                Some(SplitFailure::Composition { object, outer, inner }) => json!({
                    "kind": "composition",
                    "object": a.object_name(object),
                    "outer": b.arrow_name(outer),
                    "inner": b.arrow_name(inner),
                }),
            };
            outcome(s.split, json!({ "split": s.split, "failure": failure }))
        }
        FibCommand::Monad { functor } => {
            let f = ws.functor(functor)?;
            let inst = MonadInstance::with_cap(&f, cli.size_cap)?;
            let carrier = inst.carrier().clone();
            let unit: Map<String, Value> = f
                .source()
                .objects()
                .map(|x| {
                    (
                        f.source().object_name(x).to_string(),
                        json!(carrier.object_name(inst.unit.ob(x))),
                    )
                })
                .collect();
            outcome(
                true,
                json!({
                    "comma": counts(&carrier),
                    "comma_objects": names_of_objects(&carrier, carrier.objects()),
                    "unit": unit,
                }),
            )
        }
        FibCommand::ColaxCheck { functor } => {
            let f = ws.functor(functor)?;
            let r = check_colax_idempotent(&f, cli.size_cap)?;
            let stages: Vec<Value> = r
                .stages
                .iter()
                .map(|s| json!({ "stage": s.stage, "objects": s.objects, "arrows": s.arrows }))
                .collect();
            outcome(
                r.holds(),
                json!({
                    "stages": stages,
                    "left_unit": r.left_unit,
                    "right_unit": r.right_unit,
                    "counit_components": r.counit_components,
                    "counit_natural": r.counit_natural,
                    "triangle_unit": r.triangle_unit,
                    "triangle_mult": r.triangle_mult,
                    "hom_bijection": r.hom_bijection,
                    "associativity": r.associativity,
                }),
            )
        }
        FibCommand::Alpha { functor } => {
            let f = ws.functor(functor)?;
            let r = pseudo_algebra_alpha(&cleavage_of(&f)?)?;
            outcome(
                r.holds(),
                json!({
                    "alpha": functor_json(&r.alpha)["objects"].clone(),
                    "left_inverse": r.left_inverse,
                    "over_base": r.over_base,
                    "counit_vertical": r.counit_vertical,
                    "counit_cartesian": r.counit_cartesian,
                    "couniversal": r.couniversal,
                    "triangles": r.triangles,
                }),
            )
        }
    })
}

fn comonad(cli: &Cli, ws: &mut Workspace, c: &ComonadCommand) -> Result<Outcome, CliError> {
    let caps = gf_caps(cli);
    Ok(match c {
        ComonadCommand::Build { functor } => {
            let f = ws.functor(functor)?;
            let gf = build_gf(&f, caps)?;
            let b = gf.base().clone();
            let fibers: Map<String, Value> = b
                .objects()
                .map(|x| (b.object_name(x).to_string(), json!(gf.fiber(x).count())))
                .collect();
            let cl = gf.canonical_cleavage()?;
            let valid = cl.validate().is_ok();
            let split = is_split(&cl).split;
            Outcome {
                pass: valid && split,
                result: json!({
                    "gf": counts(&gf.carrier),
                    "fibers": fibers,
                    "canonical_cleavage_valid": valid,
                    "canonical_cleavage_split": split,
                }),
                dot: Some(clustered_dot(&gf.projection, "G_F")),
            }
        }
        ComonadCommand::Counit { functor } => {
            let f = ws.functor(functor)?;
            let gf = build_gf(&f, caps)?;
            let e = counit_eval_at_identity(&gf)?;
            let over = e.then(&f)? == gf.projection;
            outcome(
                over,
                json!({
                    "gf": counts(&gf.carrier),
                    "counit": functor_json(&e)["objects"].clone(),
                    "over_base": over,
                }),
            )
        }
        ComonadCommand::Laws { functor } => {
            let f = ws.functor(functor)?;
            let r = comonad_laws(&f, caps)?;
            outcome(
                r.holds(),
                json!({
                    "gf": { "objects": r.gf_objects, "arrows": r.gf_arrows },
                    "ngf": { "objects": r.ngf_objects, "arrows": r.ngf_arrows },
                    "counit_left": r.counit_left,
                    "counit_right": r.counit_right,
                }),
            )
        }
        ComonadCommand::Coalgebra { functor } => {
            let f = ws.functor(functor)?;
            let cl = cleavage_of(&f)?;
            let gf = build_gf(&f, caps)?;
            let r = coalgebra_check(&gf, &cl)?;
            outcome(
                r.holds(),
                json!({
                    "coalgebra": functor_json(&r.coalgebra)["objects"].clone(),
                    "over_base": r.over_base,
                    "section": r.section,
                    "fully_faithful": r.fully_faithful,
                    "adjunction": r.adjunction,
                }),
            )
        }
        ComonadCommand::Split { functor } => {
            let f = ws.functor(functor)?;
            let cl = cleavage_of(&f)?;
            let gf = build_gf(&f, caps)?;
            let s = split_equivalent(&gf, &cl)?;
            let pass = s.split.split && s.checks.holds();
            Outcome {
                pass,
                result: json!({
                    "gf": counts(&gf.carrier),
                    "split_fibration": counts(&s.carrier),
                    "members": names_of_objects(&gf.carrier, s.members.iter().copied()),
                    "split": s.split.split,
                    "j_over_base": s.checks.j_over_base,
                    "k_over_base": s.checks.k_over_base,
                    "kj_vertical_iso": s.checks.kj_vertical_iso,
                    "jk_vertical_iso": s.checks.jk_vertical_iso,
                }),
                dot: Some(clustered_dot(&s.projection, "S")),
            }
        }
    })
}

fn colim(cli: &Cli, ws: &mut Workspace, c: &ColimCommand) -> Result<Outcome, CliError> {
    Ok(match c {
        ColimCommand::Coeq {
            g,
            h,
            compare,
            universal,
        } => {
            let (g, h) = (ws.functor(g)?, ws.functor(h)?);
            let max_len = cli.max_len.unwrap_or_else(|| default_max_len(&g));
            let q = coequalizer(&g, &h, max_len)?;
            let (y, qc) = (q.source().clone(), q.carrier.clone());
            let arrows: Vec<Value> = qc
                .non_identity_arrows()
                .map(|e| {
                    json!({
                        "name": qc.arrow_name(e),
                        "src": qc.object_name(qc.src(e)),
                        "dst": qc.object_name(qc.dst(e)),
                        "representative": q.representatives[e.0]
                            .iter()
                            .map(|&a| y.arrow_name(a))
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            let mut result = json!({
                "quotient": counts(&qc),
                "objects": names_of_objects(&qc, qc.objects()),
                "arrows": arrows,
                "quotient_functor": functor_json(&q.functor),
                "certified_at": q.certified_at,
                "trace": q.trace,
            });
            let mut pass = true;
            if let Some(name) = compare {
                let other = ws.category(name)?;
                let iso = find_isomorphism(&qc, &other).is_some();
                pass &= iso;
                result["isomorphic_to"] = json!({ "entry": name, "isomorphic": iso });
            }
            if *universal {
                let u = check_coequalizer(&g, &h, &q.functor, &test_shapes()?)?;
                pass &= u.holds;
                result["universal"] = universal_json(&u);
            }
            Outcome {
                pass,
                result,
                dot: Some(category_dot(&qc, "quotient")),
            }
        }
        ColimCommand::Regepi { functor } => {
            let f = ws.functor(functor)?;
            let max_len = cli.max_len.unwrap_or(2 * f.source().arrow_count());
            let r = is_regular_epi(&f, max_len)?;
            let t = f.target();
            outcome(
                r.is_regular_epi(),
                json!({
                    "regular_epi": r.is_regular_epi(),
                    "generates": r.generates,
                    "not_generated": r.not_generated.map(|a| t.arrow_name(a).to_string()),
                    "regular": r.regular,
                    "singleton_quotient": r.singleton_quotient.map(|(o, a)| json!({ "objects": o, "arrows": a })),
                    "collisions": r.collisions.iter().map(|&a| t.arrow_name(a)).collect::<Vec<_>>(),
                }),
            )
        }
        ColimCommand::Conduche { functor } => {
            let d = ws.functor(functor)?;
            let r = conduche_check(&d);
            let (a, c) = (d.source(), d.target());
            let (failure, dot) = match &r.failure {
                None => (Value::Null, None),
                Some((con, why)) => {
                    let objects: Vec<Value> = con
                        .objects
                        .iter()
                        .map(|&(f1, f2)| json!([a.arrow_name(f1), a.arrow_name(f2)]))
                        .collect();
                    let carrier = con.carrier(&d)?;
                    (
                        json!({
                            "f": a.arrow_name(con.f),
                            "g1": c.arrow_name(con.g1),
                            "g2": c.arrow_name(con.g2),
                            "reason": match why {
                                ConFailure::Empty => "empty",
                                ConFailure::Disconnected => "disconnected",
                            },
                            "con_objects": objects,
                            "con_arrows": carrier.arrow_count(),
                        }),
                        Some(category_dot(&carrier, "Con")),
                    )
                }
            };
            Outcome {
                pass: r.conduche,
                result: json!({
                    "conduche": r.conduche,
                    "factorizations": r.factorizations,
                    "connectivity_agrees": r.connectivity_agrees,
                    "failure": failure,
                }),
                dot,
            }
        }
        ColimCommand::Preserve { d, g, h, p } => {
            let (d, g, h, p) = (ws.functor(d)?, ws.functor(g)?, ws.functor(h)?, ws.functor(p)?);
            let max_len = cli.max_len.unwrap_or_else(|| default_max_len(&g));
            let r = preservation_experiment(&d, &g, &h, &p, max_len)?;
            outcome(
                r.preserved,
                json!({
                    "preserved": r.preserved,
                    "coeq_then_pullback": { "objects": r.coeq_then_pullback.0, "arrows": r.coeq_then_pullback.1 },
                    "pullback_then_coeq": { "objects": r.pullback_then_coeq.0, "arrows": r.pullback_then_coeq.1 },
                    "mismatch": r.mismatch,
                }),
            )
        }
    })
}
