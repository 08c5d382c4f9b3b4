//! The pseudo-algebra structure `α: B/F → A` of a cloven fibration.

use std::collections::HashSet;

use super::cartesian::{is_cartesian, is_fibration, unique_filler, Cleavage};
use super::monad::MonadInstance;
use crate::cat::{ArrId, FinFunctor, NatTrans, ObjId};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct AlphaReport {
    pub instance: MonadInstance,
    /// `(b, f, a) ↦ src(lift(a, f))`.
    pub alpha: FinFunctor,
    /// `ε: η_F ∘ α ⇒ Id` with components `(id_b, lift(a, f))`.
    pub counit: NatTrans,
    /// `α ∘ η_F = Id`.
    pub left_inverse: bool,
    /// `F ∘ α = M(F)`.
    pub over_base: bool,
    pub counit_vertical: bool,
    pub counit_cartesian: bool,
    /// `Hom(a', α o) ≅ Hom(η_F a', o)` via `g ↦ ε_o ∘ η_F(g)`.
    pub couniversal: bool,
    /// `ε ∘ η_F` and `α ∘ ε` are identities.
    pub triangles: bool,
}

impl AlphaReport {
    pub fn holds(&self) -> bool {
        self.left_inverse
            && self.over_base
            && self.counit_vertical
            && self.counit_cartesian
            && self.couniversal
            && self.triangles
    }
}

/// Builds `α` from a cleavage and checks its algebra and adjunction laws.
pub fn pseudo_algebra_alpha(cl: &Cleavage) -> Result<AlphaReport> {
    let f = cl.functor();
    let a = f.source();
    let inst = MonadInstance::new(f)?;
    let comma = &inst.comma;
    let carrier = comma.carrier.clone();

    let objects: Vec<ObjId> = carrier
        .objects()
        .map(|x| {
            let o = comma.object(x);
            cl.reindex(o.right, o.arrow)
        })
        .collect();
    let mut arrows = Vec::with_capacity(carrier.arrow_count());
    for e in carrier.arrow_ids() {
        let m = comma.arrow(e);
        let (s, t) = (comma.object(m.src), comma.object(m.dst));
        let phi = cl.lift(t.right, t.arrow);
        let psi = a.compose(m.right, cl.lift(s.right, s.arrow));
        let chi = unique_filler(f, phi, psi, m.left).ok_or_else(|| {
            Error::LawViolation(format!("no unique filler for `{}`", carrier.arrow_name(e)))
        })?;
        arrows.push(chi);
    }
    let alpha = FinFunctor::new(carrier.clone(), a.clone(), objects, arrows)?;

    let b = f.target();
    let comps: Vec<ArrId> = carrier
        .objects()
        .map(|x| {
            let o = comma.object(x);
            let src = inst.unit.ob(alpha.ob(x));
            comma
                .find_arrow(src, x, b.id(o.left), cl.lift(o.right, o.arrow))
                .expect("counit component")
        })
        .collect();
    let counit = NatTrans::new(
        alpha.then(&inst.unit)?,
        FinFunctor::identity(carrier.clone()),
        comps,
    )?;

    let left_inverse = inst.unit.then(&alpha)?.is_identity();
    let over_base = alpha.then(f)? == *inst.m();
    let counit_vertical = counit.is_vertical(inst.m());
    let mut counit_cartesian = true;
    for x in carrier.objects() {
        let lift = comma.arrow(counit.component(x)).right;
        counit_cartesian &= is_cartesian(f, lift)?.is_cartesian();
    }

    let mut couniversal = true;
    'outer: for y in a.objects() {
        let ey = inst.unit.ob(y);
        for x in carrier.objects() {
            let left = a.hom(y, alpha.ob(x));
            let right = carrier.hom(ey, x);
            let images: HashSet<ArrId> = left
                .iter()
                .map(|&g| carrier.compose(counit.component(x), inst.unit.ar(g)))
                .collect();
            if images.len() != left.len() || images.len() != right.len() {
                couniversal = false;
                break 'outer;
            }
        }
    }

    let triangles = a
        .objects()
        .all(|y| carrier.is_identity(counit.component(inst.unit.ob(y))))
        && carrier
            .objects()
            .all(|x| a.is_identity(alpha.ar(counit.component(x))));

    Ok(AlphaReport {
        instance: inst,
        alpha,
        counit,
        left_inverse,
        over_base,
        counit_vertical,
        counit_cartesian,
        couniversal,
        triangles,
    })
}

/// As [`pseudo_algebra_alpha`] with the canonical cleavage; `NotCloven` when
/// `f` is not a fibration.
pub fn pseudo_algebra_alpha_for(f: &FinFunctor) -> Result<AlphaReport> {
    let cl = is_fibration(f).into_cleavage(f)?;
    pseudo_algebra_alpha(&cl)
}
