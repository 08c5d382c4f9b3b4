//! The comma monad `F ↦ M(F) = (B/F → B)` on categories over `B`.

use std::collections::HashSet;
use std::sync::Arc;

use crate::cat::{comma_over, same_cat, ArrId, CommaCat, FinCat, FinFunctor, NatTrans, ObjId};
use crate::error::{Error, Result};

/// Default cap on the number of arrows of any constructed comma stage.
pub const DEFAULT_SIZE_CAP: usize = 200;

/// `B/F` together with `M(F)` (its domain projection) and `η_F: A → B/F`.
#[derive(Clone, Debug)]
pub struct MonadInstance {
    pub functor: FinFunctor,
    pub comma: CommaCat,
    pub unit: FinFunctor,
}

/// Number of objects of `B/F`, without building it.
pub fn comma_object_count(f: &FinFunctor) -> usize {
    let b = f.target();
    b.objects()
        .map(|x| f.source().objects().map(|a| b.hom(x, f.ob(a)).len()).sum::<usize>())
        .sum()
}

impl MonadInstance {
    pub fn new(f: &FinFunctor) -> Result<Self> {
        Self::with_cap(f, usize::MAX)
    }

    /// Builds `B/F`, refusing when it would exceed `cap` arrows.
    pub fn with_cap(f: &FinFunctor, cap: usize) -> Result<Self> {
        let estimate = comma_object_count(f);
        if estimate > cap {
            return Err(Error::InstanceTooLarge {
                what: "comma category objects".into(),
                size: estimate,
                cap,
            });
        }
        let comma = comma_over(f)?;
        if comma.carrier.arrow_count() > cap {
            return Err(Error::InstanceTooLarge {
                what: "comma category arrows".into(),
                size: comma.carrier.arrow_count(),
                cap,
            });
        }
        let b = f.target();
        let a = f.source();
        let eta_ob: Vec<ObjId> = a
            .objects()
            .map(|x| comma.find_object(f.ob(x), b.id(f.ob(x)), x).expect("unit object"))
            .collect();
        let eta_ar: Vec<ArrId> = a
            .arrow_ids()
            .map(|k| {
                comma
                    .find_arrow(eta_ob[a.src(k).0], eta_ob[a.dst(k).0], f.ar(k), k)
                    .expect("unit arrow")
            })
            .collect();
        let unit = FinFunctor::new(a.clone(), comma.carrier.clone(), eta_ob, eta_ar)?;
        Ok(MonadInstance {
            functor: f.clone(),
            comma,
            unit,
        })
    }

    /// `M(F): B/F → B`.
    pub fn m(&self) -> &FinFunctor {
        &self.comma.proj_left
    }

    pub fn carrier(&self) -> &Arc<FinCat> {
        &self.comma.carrier
    }

    pub fn base(&self) -> &Arc<FinCat> {
        self.functor.target()
    }

    /// The instance for `M(F)` itself.
    pub fn next(&self, cap: usize) -> Result<MonadInstance> {
        MonadInstance::with_cap(self.m(), cap)
    }
}

/// `μ_F: B/M(F) → B/F`, `(b₁, f₁, (b₂, f₂, a)) ↦ (b₁, f₂∘f₁, a)`.
pub fn multiplication(inner: &MonadInstance, outer: &MonadInstance) -> Result<FinFunctor> {
    if outer.functor != *inner.m() {
        return Err(Error::LawViolation(
            "outer instance is not built over the inner monad functor".into(),
        ));
    }
    let b = inner.base();
    let (oc, ic) = (&outer.comma, &inner.comma);
    let objects: Vec<ObjId> = oc
        .carrier
        .objects()
        .map(|x| {
            let o = oc.object(x);
            let p = ic.object(o.right);
            ic.find_object(o.left, b.compose(p.arrow, o.arrow), p.right)
                .expect("multiplication object")
        })
        .collect();
    let arrows: Vec<ArrId> = oc
        .carrier
        .arrow_ids()
        .map(|e| {
            let m = oc.arrow(e);
            let k = ic.arrow(m.right).right;
            ic.find_arrow(objects[m.src.0], objects[m.dst.0], m.left, k)
                .expect("multiplication arrow")
        })
        .collect();
    FinFunctor::new(oc.carrier.clone(), ic.carrier.clone(), objects, arrows)
}

/// `M(h): B/F → B/F'` for `h: A → A'` over `B`: `(b, f, a) ↦ (b, f, h a)`.
pub fn m_on_morphism(h: &FinFunctor, from: &MonadInstance, to: &MonadInstance) -> Result<FinFunctor> {
    if !same_cat(h.source(), from.functor.source()) || !same_cat(h.target(), to.functor.source()) {
        return Err(Error::TargetMismatch);
    }
    if h.then(&to.functor)? != from.functor {
        return Err(Error::LawViolation("morphism does not commute with the projections".into()));
    }
    let (fc, tc) = (&from.comma, &to.comma);
    let objects: Vec<ObjId> = fc
        .carrier
        .objects()
        .map(|x| {
            let o = fc.object(x);
            tc.find_object(o.left, o.arrow, h.ob(o.right)).expect("image object")
        })
        .collect();
    let arrows: Vec<ArrId> = fc
        .carrier
        .arrow_ids()
        .map(|e| {
            let m = fc.arrow(e);
            tc.find_arrow(objects[m.src.0], objects[m.dst.0], m.left, h.ar(m.right))
                .expect("image arrow")
        })
        .collect();
    FinFunctor::new(fc.carrier.clone(), tc.carrier.clone(), objects, arrows)
}

/// Components of `u_F: η_{M(F)} ∘ μ_F ⇒ Id` on `B/M(F)`.
pub fn counit_components(inner: &MonadInstance, outer: &MonadInstance, mu: &FinFunctor) -> Vec<ArrId> {
    let b = inner.base();
    let (oc, ic) = (&outer.comma, &inner.comma);
    oc.carrier
        .objects()
        .map(|x| {
            let o = oc.object(x);
            let p = mu.ob(x);
            let a = ic.object(o.right).right;
            let r = ic
                .find_arrow(p, o.right, o.arrow, inner.functor.source().id(a))
                .expect("counit inner arrow");
            let src = outer.unit.ob(p);
            oc.find_arrow(src, x, b.id(o.left), r).expect("counit arrow")
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageSize {
    pub stage: String,
    pub objects: usize,
    pub arrows: usize,
}

fn stage(name: &str, c: &FinCat) -> StageSize {
    StageSize {
        stage: name.to_string(),
        objects: c.object_count(),
        arrows: c.arrow_count(),
    }
}

/// Results of the colax-idempotency checks for one functor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColaxReport {
    pub stages: Vec<StageSize>,
    /// `μ_F ∘ η_{M(F)} = Id`.
    pub left_unit: bool,
    /// `μ_F ∘ M(η_F) = Id`.
    pub right_unit: bool,
    pub counit_components: usize,
    pub counit_natural: bool,
    /// `u_F` is the identity at every `η_{M(F)}(o)`.
    pub triangle_unit: bool,
    /// `μ_F(u_F)` is an identity everywhere.
    pub triangle_mult: bool,
    /// `Hom(η_{M(F)} o, x) ≅ Hom(o, μ_F x)` via `μ_F`.
    pub hom_bijection: bool,
    /// `μ_F ∘ M(μ_F) = μ_F ∘ μ_{M(F)}`; `None` when the third stage exceeds the cap.
    pub associativity: Option<bool>,
}

impl ColaxReport {
    pub fn holds(&self) -> bool {
        self.left_unit
            && self.right_unit
            && self.counit_natural
            && self.triangle_unit
            && self.triangle_mult
            && self.hom_bijection
            && self.associativity != Some(false)
    }
}

pub fn check_colax_idempotent(f: &FinFunctor, cap: usize) -> Result<ColaxReport> {
    let inner = MonadInstance::with_cap(f, cap)?;
    let outer = inner.next(cap)?;
    let mu = multiplication(&inner, &outer)?;
    let mut stages = vec![stage("B/F", inner.carrier()), stage("B/M(F)", outer.carrier())];

    let left_unit = outer.unit.then(&mu)?.is_identity();
    let m_eta = m_on_morphism(&inner.unit, &inner, &outer)?;
    let right_unit = m_eta.then(&mu)?.is_identity();

    let comps = counit_components(&inner, &outer, &mu);
    let composite = mu.then(&outer.unit)?;
    let counit_natural = NatTrans::new(
        composite,
        FinFunctor::identity(outer.carrier().clone()),
        comps.clone(),
    )
    .is_ok();

    let oc = outer.carrier();
    let ic = inner.carrier();
    let triangle_unit = ic.objects().all(|o| oc.is_identity(comps[outer.unit.ob(o).0]));
    let triangle_mult = oc.objects().all(|x| ic.is_identity(mu.ar(comps[x.0])));

    let mut hom_bijection = true;
    'outer: for o in ic.objects() {
        let eo = outer.unit.ob(o);
        for x in oc.objects() {
            let left = oc.hom(eo, x);
            let right = ic.hom(o, mu.ob(x));
            let images: HashSet<ArrId> = left.iter().map(|&m| mu.ar(m)).collect();
            let back_ok = right
                .iter()
                .all(|&g| mu.ar(oc.compose(comps[x.0], outer.unit.ar(g))) == g);
            if images.len() != left.len() || images.len() != right.len() || !back_ok {
                hom_bijection = false;
                break 'outer;
            }
        }
    }

    let associativity = match outer.next(cap) {
        Ok(third) => {
            stages.push(stage("B/M(M(F))", third.carrier()));
            let mu_m = multiplication(&outer, &third)?;
            let m_mu = m_on_morphism(&mu, &third, &outer)?;
            Some(m_mu.then(&mu)? == mu_m.then(&mu)?)
        }
        Err(Error::InstanceTooLarge { .. }) => None,
        Err(e) => return Err(e),
    };

    Ok(ColaxReport {
        stages,
        left_unit,
        right_unit,
        counit_components: comps.len(),
        counit_natural,
        triangle_unit,
        triangle_mult,
        hom_bijection,
        associativity,
    })
}
