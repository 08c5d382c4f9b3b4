//! Cartesian arrows, cleavages, split and Street fibrations.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::cat::{ArrId, FinFunctor, ObjId};
use crate::error::{Error, Result};

/// One test datum `(ψ, w)` of the cartesian property and its filler `χ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Filler {
    pub psi: ArrId,
    pub w: ArrId,
    pub chi: ArrId,
}

/// Certificate that `arrow` is cartesian: for every `ψ` into its target and
/// every `w` with `F(ψ) = F(φ)∘w`, the unique `χ` with `F(χ) = w` and `φ∘χ = ψ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartesianWitness {
    pub arrow: ArrId,
    pub fillers: Vec<Filler>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cartesianness {
    Cartesian(CartesianWitness),
    /// First test pair, in canonical order, without exactly one filler.
    Refuted { psi: ArrId, w: ArrId, fillers: usize },
}

impl Cartesianness {
    pub fn is_cartesian(&self) -> bool {
        matches!(self, Cartesianness::Cartesian(_))
    }
}

/// All `χ: src(ψ) → src(φ)` with `F(χ) = w` and `φ ∘ χ = ψ`.
pub fn fillers(f: &FinFunctor, phi: ArrId, psi: ArrId, w: ArrId) -> Vec<ArrId> {
    let a = f.source();
    a.hom(a.src(psi), a.src(phi))
        .iter()
        .copied()
        .filter(|&chi| f.ar(chi) == w && a.compose(phi, chi) == psi)
        .collect()
}

/// The unique filler, or `None` when there are zero or several.
pub fn unique_filler(f: &FinFunctor, phi: ArrId, psi: ArrId, w: ArrId) -> Option<ArrId> {
    match fillers(f, phi, psi, w).as_slice() {
        [chi] => Some(*chi),
        _ => None,
    }
}

/// Exhaustive check of the (strong) cartesian property of `phi`.
pub fn is_cartesian(f: &FinFunctor, phi: ArrId) -> Result<Cartesianness> {
    let (a, b) = (f.source(), f.target());
    if phi.0 >= a.arrow_count() {
        return Err(Error::UnknownArrow(phi.to_string()));
    }
    let (x, target) = (a.src(phi), a.dst(phi));
    let fphi = f.ar(phi);
    let mut witness = Vec::new();
    for &psi in a.arrows_into(target) {
        let y = a.src(psi);
        for &w in b.hom(f.ob(y), f.ob(x)) {
            if b.compose(fphi, w) != f.ar(psi) {
                continue;
            }
            let found = fillers(f, phi, psi, w);
            if found.len() != 1 {
                return Ok(Cartesianness::Refuted {
                    psi,
                    w,
                    fillers: found.len(),
                });
            }
            witness.push(Filler { psi, w, chi: found[0] });
        }
    }
    Ok(Cartesianness::Cartesian(CartesianWitness {
        arrow: phi,
        fillers: witness,
    }))
}

fn cartesian_lift_unchecked(f: &FinFunctor, target: ObjId, arrow: ArrId) -> Option<ArrId> {
    let a = f.source();
    let b = f.target();
    // id_a is always a cartesian lift of an identity; preferring it keeps
    // cleavages normalized.
    if b.is_identity(arrow) {
        return Some(a.id(target));
    }
    a.arrows_into(target)
        .iter()
        .copied()
        .filter(|&phi| f.ar(phi) == arrow)
        .find(|&phi| matches!(is_cartesian(f, phi), Ok(Cartesianness::Cartesian(_))))
}

/// A cartesian arrow into `target` over `arrow`, first in canonical order
/// (the identity when `arrow` is an identity).
pub fn cartesian_lift(f: &FinFunctor, target: ObjId, arrow: ArrId) -> Result<ArrId> {
    let (a, b) = (f.source(), f.target());
    if target.0 >= a.object_count() {
        return Err(Error::UnknownObject(target.to_string()));
    }
    if arrow.0 >= b.arrow_count() {
        return Err(Error::UnknownArrow(arrow.to_string()));
    }
    if b.dst(arrow) != f.ob(target) {
        return Err(Error::LawViolation(format!(
            "`{}` does not end at the image of `{}`",
            b.arrow_name(arrow),
            a.object_name(target)
        )));
    }
    cartesian_lift_unchecked(f, target, arrow).ok_or_else(|| Error::NoLift {
        object: a.object_name(target).to_string(),
        arrow: b.arrow_name(arrow).to_string(),
    })
}

/// A choice of cartesian lift for every object `a` and arrow `f` into `F(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cleavage {
    functor: FinFunctor,
    lifts: HashMap<(ObjId, ArrId), ArrId>,
}

impl Cleavage {
    /// Validates totality, typing and cartesianness of every chosen lift.
    pub fn new(functor: FinFunctor, lifts: HashMap<(ObjId, ArrId), ArrId>) -> Result<Self> {
        let cl = Cleavage { functor, lifts };
        cl.validate()?;
        Ok(cl)
    }

    pub(crate) fn new_unchecked(functor: FinFunctor, lifts: HashMap<(ObjId, ArrId), ArrId>) -> Self {
        Cleavage { functor, lifts }
    }

    pub fn validate(&self) -> Result<()> {
        let (a, b) = (self.functor.source(), self.functor.target());
        let mut expected = 0;
        for x in a.objects() {
            for &f in b.arrows_into(self.functor.ob(x)) {
                expected += 1;
                let l = *self.lifts.get(&(x, f)).ok_or_else(|| {
                    Error::UnmappedItem(format!("lift of `{}` into `{}`", b.arrow_name(f), a.object_name(x)))
                })?;
                if a.dst(l) != x || self.functor.ar(l) != f {
                    return Err(Error::LawViolation(format!(
                        "chosen lift `{}` is not over `{}` into `{}`",
                        a.arrow_name(l),
                        b.arrow_name(f),
                        a.object_name(x)
                    )));
                }
                if !is_cartesian(&self.functor, l)?.is_cartesian() {
                    return Err(Error::LawViolation(format!(
                        "chosen lift `{}` is not cartesian",
                        a.arrow_name(l)
                    )));
                }
            }
        }
        if expected != self.lifts.len() {
            return Err(Error::LawViolation("cleavage has entries outside its domain".into()));
        }
        Ok(())
    }

    pub fn functor(&self) -> &FinFunctor {
        &self.functor
    }

    pub fn lift(&self, target: ObjId, arrow: ArrId) -> ArrId {
        self.lifts[&(target, arrow)]
    }

    /// Source of the chosen lift: the reindexing of `target` along `arrow`.
    pub fn reindex(&self, target: ObjId, arrow: ArrId) -> ObjId {
        self.functor.source().src(self.lift(target, arrow))
    }

    /// `(a, f, lift(a, f))` in canonical order.
    pub fn entries(&self) -> Vec<(ObjId, ArrId, ArrId)> {
        let (a, b) = (self.functor.source(), self.functor.target());
        a.objects()
            .flat_map(|x| {
                b.arrows_into(self.functor.ob(x))
                    .iter()
                    .map(move |&f| (x, f, self.lifts[&(x, f)]))
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.lifts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lifts.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FibrationCheck {
    Fibration(Cleavage),
    /// First `(a, f)` in canonical order with no cartesian lift.
    Refuted { object: ObjId, arrow: ArrId },
}

impl FibrationCheck {
    pub fn cleavage(&self) -> Option<&Cleavage> {
        match self {
            FibrationCheck::Fibration(cl) => Some(cl),
            FibrationCheck::Refuted { .. } => None,
        }
    }

    /// The cleavage, or `NotCloven` naming the missing lift.
    pub fn into_cleavage(self, f: &FinFunctor) -> Result<Cleavage> {
        match self {
            FibrationCheck::Fibration(cl) => Ok(cl),
            FibrationCheck::Refuted { object, arrow } => Err(Error::NotCloven {
                object: f.source().object_name(object).to_string(),
                arrow: f.target().arrow_name(arrow).to_string(),
            }),
        }
    }
}

/// Searches a cartesian lift for every `(a, f)`; lifts are searched in
/// parallel per object and merged in canonical order.
pub fn is_fibration(f: &FinFunctor) -> FibrationCheck {
    let (a, b) = (f.source(), f.target());
    let per_object: Vec<std::result::Result<Vec<(ArrId, ArrId)>, ArrId>> = a
        .objects()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|x| {
            b.arrows_into(f.ob(x))
                .iter()
                .map(|&arr| cartesian_lift_unchecked(f, x, arr).map(|l| (arr, l)).ok_or(arr))
                .collect()
        })
        .collect();
    let mut lifts = HashMap::new();
    for (x, result) in a.objects().zip(per_object) {
        match result {
            Ok(list) => {
                for (arr, l) in list {
                    lifts.insert((x, arr), l);
                }
            }
            Err(arrow) => return FibrationCheck::Refuted { object: x, arrow },
        }
    }
    FibrationCheck::Fibration(Cleavage::new_unchecked(f.clone(), lifts))
}

/// Why a cleavage fails to be split.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitFailure {
    /// `lift(a, id) ≠ id_a`.
    Identity { object: ObjId },
    /// `lift(a, f∘g) ≠ lift(a, f) ∘ lift(reindex(a, f), g)`.
    Composition { object: ObjId, outer: ArrId, inner: ArrId },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitCheck {
    pub split: bool,
    pub failure: Option<SplitFailure>,
}

pub fn is_split(cl: &Cleavage) -> SplitCheck {
    let f = cl.functor();
    let (a, b) = (f.source(), f.target());
    let fail = |failure| SplitCheck {
        split: false,
        failure: Some(failure),
    };
    for x in a.objects() {
        if cl.lift(x, b.id(f.ob(x))) != a.id(x) {
            return fail(SplitFailure::Identity { object: x });
        }
    }
    for x in a.objects() {
        for &outer in b.arrows_into(f.ob(x)) {
            let upper = cl.lift(x, outer);
            let mid = a.src(upper);
            for &inner in b.arrows_into(b.src(outer)) {
                let composite = a.compose(upper, cl.lift(mid, inner));
                if cl.lift(x, b.compose(outer, inner)) != composite {
                    return fail(SplitFailure::Composition { object: x, outer, inner });
                }
            }
        }
    }
    SplitCheck {
        split: true,
        failure: None,
    }
}

/// Lift of `f ∘ iso` into `object` for a Street fibration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StreetWitness {
    pub object: ObjId,
    pub arrow: ArrId,
    pub iso: ArrId,
    pub lift: ArrId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StreetCheck {
    pub street: bool,
    pub witnesses: Vec<StreetWitness>,
    pub failure: Option<(ObjId, ArrId)>,
}

/// For every `(a, f: b → F(a))` looks for an iso `h: b' → b` (identity
/// first) and a cartesian lift of `f ∘ h` into `a`.
pub fn is_street_fibration(f: &FinFunctor) -> StreetCheck {
    let (a, b) = (f.source(), f.target());
    let mut witnesses = Vec::new();
    for x in a.objects() {
        for &arr in b.arrows_into(f.ob(x)) {
            let base = b.src(arr);
            let mut isos = vec![b.id(base)];
            for y in b.objects() {
                isos.extend(
                    b.isomorphisms(y, base)
                        .into_iter()
                        .map(|(h, _)| h)
                        .filter(|&h| !b.is_identity(h)),
                );
            }
            let found = isos.into_iter().find_map(|h| {
                cartesian_lift_unchecked(f, x, b.compose(arr, h)).map(|lift| StreetWitness {
                    object: x,
                    arrow: arr,
                    iso: h,
                    lift,
                })
            });
            match found {
                Some(w) => witnesses.push(w),
                None => {
                    return StreetCheck {
                        street: false,
                        witnesses,
                        failure: Some((x, arr)),
                    }
                }
            }
        }
    }
    StreetCheck {
        street: true,
        witnesses,
        failure: None,
    }
}
