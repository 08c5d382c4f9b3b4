//! Coalgebra structure of a cloven fibration and the comonad counit laws.

use std::collections::HashSet;

use super::gf::{build_gf, counit_eval_at_identity, n_on_morphism, GfCaps, GfCat};
use crate::cat::{ArrId, FinFunctor, ObjId};
use crate::error::{Error, Result};
use crate::fib::{unique_filler, Cleavage};

/// `a ↦ (F a, X_a)` with `X_a(s) = src(lift(a, s))`.
pub fn coalgebra_structure(gf: &GfCat, cl: &Cleavage) -> Result<FinFunctor> {
    let f = cl.functor();
    if *f != gf.functor {
        return Err(Error::LawViolation("cleavage belongs to a different functor".into()));
    }
    let (a, b) = (f.source(), f.target());
    let no_filler = || Error::LawViolation("cartesian factorization is not unique".into());

    let mut objects = Vec::with_capacity(a.object_count());
    for x in a.objects() {
        let sl = gf.slice(f.ob(x));
        let obs: Vec<ObjId> = sl
            .carrier
            .objects()
            .map(|s| cl.reindex(x, sl.object(s).arrow))
            .collect();
        let mut ars = Vec::with_capacity(sl.carrier.arrow_count());
        for m in sl.carrier.arrow_ids() {
            let e = sl.arrow(m);
            let (s1, s2) = (sl.object(e.src).arrow, sl.object(e.dst).arrow);
            let chi = unique_filler(f, cl.lift(x, s2), cl.lift(x, s1), e.left).ok_or_else(no_filler)?;
            ars.push(chi);
        }
        let section = FinFunctor::new(sl.carrier.clone(), a.clone(), obs, ars)?;
        let obj = gf
            .find_object(f.ob(x), &section)
            .ok_or_else(|| Error::LawViolation("coalgebra section is missing".into()))?;
        objects.push(obj);
    }

    let mut arrows = Vec::with_capacity(a.arrow_count());
    for k in a.arrow_ids() {
        let (x, y) = (a.src(k), a.dst(k));
        let fk = f.ar(k);
        let sl = gf.slice(f.ob(x));
        let mut comps = Vec::with_capacity(sl.carrier.object_count());
        for s in sl.carrier.objects() {
            let sa = sl.object(s).arrow;
            let psi = a.compose(k, cl.lift(x, sa));
            let phi = cl.lift(y, b.compose(fk, sa));
            comps.push(unique_filler(f, phi, psi, b.id(b.src(sa))).ok_or_else(no_filler)?);
        }
        let arr = gf
            .find_arrow(objects[x.0], objects[y.0], fk, comps)
            .ok_or_else(|| Error::LawViolation("coalgebra arrow is missing".into()))?;
        arrows.push(arr);
    }
    FinFunctor::new(a.clone(), gf.carrier.clone(), objects, arrows)
}

#[derive(Clone, Debug)]
pub struct CoalgebraReport {
    pub coalgebra: FinFunctor,
    pub counit: FinFunctor,
    /// `N(F) ∘ coalg = F`.
    pub over_base: bool,
    /// `Ε ∘ coalg = Id_A`.
    pub section: bool,
    pub fully_faithful: bool,
    /// `Hom(s, coalg a) ≅ Hom(Ε s, a)` via `Ε`.
    pub adjunction: bool,
}

impl CoalgebraReport {
    pub fn holds(&self) -> bool {
        self.over_base && self.section && self.fully_faithful && self.adjunction
    }
}

fn bijective_on_homs(
    h: &FinFunctor,
    pairs: impl Iterator<Item = (ObjId, ObjId)>,
) -> bool {
    let (s, t) = (h.source(), h.target());
    pairs.into_iter().all(|(x, y)| {
        let left = s.hom(x, y);
        let images: HashSet<ArrId> = left.iter().map(|&g| h.ar(g)).collect();
        images.len() == left.len() && images.len() == t.hom(h.ob(x), h.ob(y)).len()
    })
}

pub fn coalgebra_check(gf: &GfCat, cl: &Cleavage) -> Result<CoalgebraReport> {
    let coalgebra = coalgebra_structure(gf, cl)?;
    let counit = counit_eval_at_identity(gf)?;
    let a = gf.functor.source();
    let over_base = coalgebra.then(&gf.projection)? == gf.functor;
    let section = coalgebra.then(&counit)?.is_identity();
    let fully_faithful = bijective_on_homs(
        &coalgebra,
        a.objects().flat_map(|x| a.objects().map(move |y| (x, y))),
    );
    let adjunction = gf.carrier.objects().all(|s| {
        a.objects().all(|y| {
            let left = gf.carrier.hom(s, coalgebra.ob(y));
            let images: HashSet<ArrId> = left.iter().map(|&g| counit.ar(g)).collect();
            images.len() == left.len() && images.len() == a.hom(counit.ob(s), y).len()
        })
    });
    Ok(CoalgebraReport {
        coalgebra,
        counit,
        over_base,
        section,
        fully_faithful,
        adjunction,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComonadLawReport {
    pub gf_objects: usize,
    pub gf_arrows: usize,
    pub ngf_objects: usize,
    pub ngf_arrows: usize,
    /// `Ε_{N(F)} ∘ δ = Id`.
    pub counit_left: bool,
    /// `N(Ε_F) ∘ δ = Id`.
    pub counit_right: bool,
}

impl ComonadLawReport {
    pub fn holds(&self) -> bool {
        self.counit_left && self.counit_right
    }
}

/// Comultiplication `δ: G_F → G_{N(F)}` as the coalgebra structure of the
/// canonical cleavage of `N(F)`, checked against both counit laws.
pub fn comonad_laws(f: &FinFunctor, caps: GfCaps) -> Result<ComonadLawReport> {
    let gf = build_gf(f, caps)?;
    let ngf = build_gf(&gf.projection, caps)?;
    let delta = coalgebra_structure(&ngf, &gf.canonical_cleavage()?)?;
    let counit_outer = counit_eval_at_identity(&ngf)?;
    let counit_inner = counit_eval_at_identity(&gf)?;
    let n_counit = n_on_morphism(&counit_inner, &ngf, &gf)?;
    Ok(ComonadLawReport {
        gf_objects: gf.carrier.object_count(),
        gf_arrows: gf.carrier.arrow_count(),
        ngf_objects: ngf.carrier.object_count(),
        ngf_arrows: ngf.carrier.arrow_count(),
        counit_left: delta.then(&counit_outer)?.is_identity(),
        counit_right: delta.then(&n_counit)?.is_identity(),
    })
}
