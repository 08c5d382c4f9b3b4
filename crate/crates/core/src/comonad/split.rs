//! The split fibration equivalent to a cloven one.

use std::collections::HashMap;
use std::sync::Arc;

use super::coalgebra::coalgebra_structure;
use super::gf::{counit_eval_at_identity, GfCat};
use crate::cat::{FinCat, FinFunctor, NatTrans, ObjId};
use crate::error::{Error, Result};
use crate::fib::{is_split, Cleavage, SplitCheck};

/// `J: A → S`, `K: S → A` over the base with `K∘J ⇒ Id_A` and `J∘K ⇒ Id_S`.
#[derive(Clone, Debug)]
pub struct EquivalenceWitness {
    pub j: FinFunctor,
    pub k: FinFunctor,
    pub kj: NatTrans,
    pub jk: NatTrans,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivalenceChecks {
    pub j_over_base: bool,
    pub k_over_base: bool,
    pub kj_vertical_iso: bool,
    pub jk_vertical_iso: bool,
}

impl EquivalenceChecks {
    pub fn holds(&self) -> bool {
        self.j_over_base && self.k_over_base && self.kj_vertical_iso && self.jk_vertical_iso
    }
}

#[derive(Clone, Debug)]
pub struct SplitEquivalent {
    pub carrier: Arc<FinCat>,
    /// Objects of `G_F` kept in `S`, in canonical order.
    pub members: Vec<ObjId>,
    pub inclusion: FinFunctor,
    pub projection: FinFunctor,
    pub cleavage: Cleavage,
    pub split: SplitCheck,
    pub witness: EquivalenceWitness,
    pub checks: EquivalenceChecks,
}

/// Objects of `G_F` vertically isomorphic to some `coalg(a)`.
pub fn iso_closure(gf: &GfCat, image: &[ObjId]) -> Vec<ObjId> {
    let c = &gf.carrier;
    c.objects()
        .filter(|&s| {
            image.iter().any(|&t| {
                c.isomorphisms(s, t)
                    .into_iter()
                    .any(|(h, _)| gf.base().is_identity(gf.projection.ar(h)))
            })
        })
        .collect()
}

pub fn split_equivalent(gf: &GfCat, cl: &Cleavage) -> Result<SplitEquivalent> {
    let coalg = coalgebra_structure(gf, cl)?;
    let counit = counit_eval_at_identity(gf)?;
    let members = iso_closure(gf, coalg.object_map());
    let keyed = gf.carrier.full_subcategory(&members)?;
    let carrier = Arc::new(keyed.cat);
    let inclusion = FinFunctor::new(
        carrier.clone(),
        gf.carrier.clone(),
        keyed.obj_keys.clone(),
        keyed.arr_keys.clone(),
    )?;
    let projection = inclusion.then(&gf.projection)?;

    let outer = gf.canonical_cleavage()?;
    let b = gf.base();
    let mut lifts = HashMap::new();
    for x in carrier.objects() {
        for &f in b.arrows_into(projection.ob(x)) {
            let l = outer.lift(keyed.obj_keys[x.0], f);
            let l = keyed
                .arr_of
                .get(&l)
                .ok_or_else(|| Error::LawViolation("restricted cleavage leaves the closure".into()))?;
            lifts.insert((x, f), *l);
        }
    }
    let cleavage = Cleavage::new(projection.clone(), lifts)?;
    let split = is_split(&cleavage);

    let a = gf.functor.source();
    let j = FinFunctor::new(
        a.clone(),
        carrier.clone(),
        coalg.object_map().iter().map(|o| keyed.obj_of[o]).collect(),
        coalg.arrow_map().iter().map(|e| keyed.arr_of[e]).collect(),
    )?;
    let k = inclusion.then(&counit)?;
    let kj = NatTrans::new(
        j.then(&k)?,
        FinFunctor::identity(a.clone()),
        a.objects().map(|x| a.id(x)).collect(),
    )?;
    let jk_functor = k.then(&j)?;
    let mut comps = Vec::with_capacity(carrier.object_count());
    for x in carrier.objects() {
        let target = jk_functor.ob(x);
        let unit = carrier
            .hom(x, target)
            .iter()
            .copied()
            .find(|&h| a.is_identity(k.ar(h)))
            .ok_or_else(|| Error::LawViolation("no comparison arrow into the coalgebra".into()))?;
        let inv = carrier
            .inverse(unit)
            .ok_or_else(|| Error::LawViolation("comparison arrow is not invertible".into()))?;
        comps.push(inv);
    }
    let jk = NatTrans::new(jk_functor, FinFunctor::identity(carrier.clone()), comps)?;

    let checks = EquivalenceChecks {
        j_over_base: j.then(&projection)? == gf.functor,
        k_over_base: k.then(&gf.functor)? == projection,
        kj_vertical_iso: kj.is_vertical(&gf.functor) && kj.is_invertible(),
        jk_vertical_iso: jk.is_vertical(&projection) && jk.is_invertible(),
    };
    Ok(SplitEquivalent {
        carrier,
        members,
        inclusion,
        projection,
        cleavage,
        split,
        witness: EquivalenceWitness { j, k, kj, jk },
        checks,
    })
}
