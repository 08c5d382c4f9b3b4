//! The category `G_F` of sections over slices and its projection `N(F)`.

use std::collections::HashMap;
use std::ops::Range;
use std::sync::Arc;

use rayon::prelude::*;

use crate::cat::enumerate::{transformations_with, FunctorSearch};
use crate::cat::{same_cat, slice, ArrId, CommaCat, FinCat, FinFunctor, ObjId};
use crate::error::{Error, Result};
use crate::fib::Cleavage;

/// Limits on the base for which `G_F` is enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GfCaps {
    pub base_objects: usize,
    pub slice_arrows: usize,
}

impl Default for GfCaps {
    fn default() -> Self {
        GfCaps {
            base_objects: 6,
            slice_arrows: 20,
        }
    }
}

/// `(b, X)` with `X: B/b → A` and `F ∘ X = ∂₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfObject {
    pub base: ObjId,
    pub section: FinFunctor,
}

/// `(f, α)` with `α_s: X(s) → X'(f∘s)` vertical, indexed by the objects of `B/b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GfArrow {
    pub src: ObjId,
    pub dst: ObjId,
    pub base: ArrId,
    pub components: Vec<ArrId>,
}

#[derive(Clone, Debug)]
pub struct GfCat {
    pub functor: FinFunctor,
    pub carrier: Arc<FinCat>,
    /// `N(F)`: first projection onto the base.
    pub projection: FinFunctor,
    slices: Vec<CommaCat>,
    /// `Σ_f = f ∘ −: B/b → B/b'`, per base arrow.
    sigma: Vec<FinFunctor>,
    objects: Vec<GfObject>,
    arrows: Vec<GfArrow>,
    fibers: Vec<Range<usize>>,
    object_index: HashMap<(ObjId, Vec<ArrId>), ObjId>,
    arrow_index: HashMap<GfArrow, ArrId>,
}

impl GfCat {
    pub fn base(&self) -> &Arc<FinCat> {
        self.functor.target()
    }

    pub fn object(&self, x: ObjId) -> &GfObject {
        &self.objects[x.0]
    }

    pub fn arrow(&self, e: ArrId) -> &GfArrow {
        &self.arrows[e.0]
    }

    pub fn slice(&self, b: ObjId) -> &CommaCat {
        &self.slices[b.0]
    }

    /// The object `s` of `B/b`, where `s` is an arrow into `b`.
    pub fn slice_object(&self, b: ObjId, s: ArrId) -> ObjId {
        let base = self.base();
        self.slices[b.0]
            .find_object(base.src(s), s, ObjId(0))
            .expect("arrow ends at the slice base")
    }

    pub fn sigma(&self, f: ArrId) -> &FinFunctor {
        &self.sigma[f.0]
    }

    pub fn fiber(&self, b: ObjId) -> impl Iterator<Item = ObjId> {
        self.fibers[b.0].clone().map(ObjId)
    }

    pub fn find_object(&self, b: ObjId, section: &FinFunctor) -> Option<ObjId> {
        self.object_index.get(&(b, section.arrow_map().to_vec())).copied()
    }

    pub fn find_arrow(&self, src: ObjId, dst: ObjId, base: ArrId, components: Vec<ArrId>) -> Option<ArrId> {
        self.arrow_index
            .get(&GfArrow {
                src,
                dst,
                base,
                components,
            })
            .copied()
    }

    /// Lift of `f` at `(b', X')` is `(f, id)` out of `(b, X' ∘ Σ_f)`.
    pub fn canonical_cleavage(&self) -> Result<Cleavage> {
        let (a, b) = (self.functor.source(), self.base());
        let mut lifts = HashMap::new();
        for y in self.carrier.objects() {
            let target = &self.objects[y.0];
            for &f in b.arrows_into(target.base) {
                let pulled = self.sigma[f.0].then(&target.section)?;
                let src = self
                    .find_object(b.src(f), &pulled)
                    .ok_or_else(|| Error::LawViolation("reindexed section is missing".into()))?;
                let comps = self.slices[b.src(f).0]
                    .carrier
                    .objects()
                    .map(|s| a.id(pulled.ob(s)))
                    .collect();
                let lift = self
                    .find_arrow(src, y, f, comps)
                    .ok_or_else(|| Error::LawViolation("canonical lift is missing".into()))?;
                lifts.insert((y, f), lift);
            }
        }
        Ok(Cleavage::new_unchecked(self.projection.clone(), lifts))
    }
}

fn check_slice_caps(slices: &[CommaCat], caps: GfCaps) -> Result<()> {
    for s in slices {
        if s.carrier.arrow_count() > caps.slice_arrows {
            return Err(Error::InstanceTooLarge {
                what: "slice arrows".into(),
                size: s.carrier.arrow_count(),
                cap: caps.slice_arrows,
            });
        }
    }
    Ok(())
}

/// Sections `X: B/b → A` with `F ∘ X = ∂₀`, in enumeration order.
pub fn sections(f: &FinFunctor, sl: &CommaCat) -> Vec<FinFunctor> {
    let a = f.source();
    let dom = &sl.proj_left;
    let mut search = FunctorSearch::new(&sl.carrier, a);
    for s in sl.carrier.objects() {
        let cands = a.objects().filter(|&x| f.ob(x) == dom.ob(s)).collect();
        search = search.object_candidates(s, cands);
    }
    search
        .arrow_filter(|u, c| f.ar(c) == dom.ar(u))
        .collect(&sl.carrier, a)
}

pub fn build_gf(f: &FinFunctor, caps: GfCaps) -> Result<GfCat> {
    let (a, b) = (f.source().clone(), f.target().clone());
    if b.object_count() > caps.base_objects {
        return Err(Error::InstanceTooLarge {
            what: "base objects".into(),
            size: b.object_count(),
            cap: caps.base_objects,
        });
    }
    let slices = b.objects().map(|x| slice(&b, x)).collect::<Result<Vec<_>>>()?;
    check_slice_caps(&slices, caps)?;

    let sigma = b
        .arrow_ids()
        .map(|g| {
            let (from, to) = (&slices[b.src(g).0], &slices[b.dst(g).0]);
            let objs = from
                .carrier
                .objects()
                .map(|s| {
                    let o = from.object(s);
                    to.find_object(o.left, b.compose(g, o.arrow), o.right).expect("postcomposite")
                })
                .collect::<Vec<_>>();
            let arrs = from
                .carrier
                .arrow_ids()
                .map(|m| {
                    let e = from.arrow(m);
                    to.find_arrow(objs[e.src.0], objs[e.dst.0], e.left, e.right)
                        .expect("postcomposite arrow")
                })
                .collect();
            FinFunctor::new(from.carrier.clone(), to.carrier.clone(), objs, arrs)
        })
        .collect::<Result<Vec<_>>>()?;

    let per_base: Vec<Vec<FinFunctor>> = slices.par_iter().map(|sl| sections(f, sl)).collect();
    let mut objects = Vec::new();
    let mut fibers = Vec::new();
    for (x, list) in b.objects().zip(per_base) {
        let start = objects.len();
        objects.extend(list.into_iter().map(|section| GfObject { base: x, section }));
        fibers.push(start..objects.len());
    }

    let per_src: Vec<Vec<GfArrow>> = (0..objects.len())
        .into_par_iter()
        .map(|i| {
            let s = &objects[i];
            let mut out = Vec::new();
            for (j, t) in objects.iter().enumerate() {
                for &g in b.hom(s.base, t.base) {
                    let shifted = sigma[g.0].then(&t.section).expect("composable sections");
                    for components in transformations_with(&s.section, &shifted, |_, c| b.is_identity(f.ar(c))) {
                        out.push(GfArrow {
                            src: ObjId(i),
                            dst: ObjId(j),
                            base: g,
                            components,
                        });
                    }
                }
            }
            out
        })
        .collect();
    let arrows: Vec<GfArrow> = per_src.into_iter().flatten().collect();

    let mut within: HashMap<ObjId, usize> = HashMap::new();
    let names: Vec<String> = objects
        .iter()
        .map(|o| {
            let k = within.entry(o.base).or_insert(0);
            let name = format!("{}#{}", b.object_name(o.base), k);
            *k += 1;
            name
        })
        .collect();
    let mut parallel: HashMap<(usize, usize, ArrId), usize> = HashMap::new();
    let arrow_keys = arrows
        .iter()
        .map(|e| {
            let k = parallel.entry((e.src.0, e.dst.0, e.base)).or_insert(0);
            let name = format!(
                "{}[{}]:{}->{}",
                b.arrow_name(e.base),
                k,
                names[e.src.0],
                names[e.dst.0]
            );
            *k += 1;
            (e.clone(), name, e.src.0, e.dst.0)
        })
        .collect();
    let keyed = FinCat::from_keyed(
        names.iter().cloned().enumerate().collect(),
        arrow_keys,
        |&i| {
            let o = &objects[i];
            GfArrow {
                src: ObjId(i),
                dst: ObjId(i),
                base: b.id(o.base),
                components: o.section.source().objects().map(|s| a.id(o.section.ob(s))).collect(),
            }
        },
        |g2, g1| {
            (g1.dst == g2.src).then(|| GfArrow {
                src: g1.src,
                dst: g2.dst,
                base: b.compose(g2.base, g1.base),
                components: g1
                    .components
                    .iter()
                    .enumerate()
                    .map(|(s, &c)| a.compose(g2.components[sigma[g1.base.0].ob(ObjId(s)).0], c))
                    .collect(),
            })
        },
    )?;
    let carrier = Arc::new(keyed.cat);
    let arrows: Vec<GfArrow> = keyed.arr_keys;
    let projection = FinFunctor::new(
        carrier.clone(),
        b.clone(),
        objects.iter().map(|o| o.base).collect(),
        arrows.iter().map(|e| e.base).collect(),
    )?;
    let object_index = objects
        .iter()
        .enumerate()
        .map(|(i, o)| ((o.base, o.section.arrow_map().to_vec()), ObjId(i)))
        .collect();
    let arrow_index = keyed.arr_of;
    Ok(GfCat {
        functor: f.clone(),
        carrier,
        projection,
        slices,
        sigma,
        objects,
        arrows,
        fibers,
        object_index,
        arrow_index,
    })
}

/// `Ε: G_F → A`, `(b, X) ↦ X(id_b)`, `(f, α) ↦ X'(f → id_{b'}) ∘ α_{id_b}`.
pub fn counit_eval_at_identity(gf: &GfCat) -> Result<FinFunctor> {
    let (a, b) = (gf.functor.source(), gf.base());
    let objects = gf
        .carrier
        .objects()
        .map(|x| {
            let o = gf.object(x);
            o.section.ob(gf.slice_object(o.base, b.id(o.base)))
        })
        .collect();
    let arrows = gf
        .carrier
        .arrow_ids()
        .map(|e| {
            let m = gf.arrow(e);
            let (s, t) = (gf.object(m.src), gf.object(m.dst));
            let sl = gf.slice(t.base);
            let to_id = sl
                .find_arrow(
                    gf.slice_object(t.base, m.base),
                    gf.slice_object(t.base, b.id(t.base)),
                    m.base,
                    ArrId(0),
                )
                .expect("slice arrow to the identity");
            a.compose(t.section.ar(to_id), m.components[gf.slice_object(s.base, b.id(s.base)).0])
        })
        .collect();
    FinFunctor::new(gf.carrier.clone(), a.clone(), objects, arrows)
}

/// `N(h): G_F → G_{F'}` for `h: A → A'` over the base: `(b, X) ↦ (b, h ∘ X)`.
pub fn n_on_morphism(h: &FinFunctor, from: &GfCat, to: &GfCat) -> Result<FinFunctor> {
    if !same_cat(from.base(), to.base()) {
        return Err(Error::TargetMismatch);
    }
    if h.then(&to.functor)? != from.functor {
        return Err(Error::LawViolation("morphism does not commute with the projections".into()));
    }
    let objects = from
        .carrier
        .objects()
        .map(|x| {
            let o = from.object(x);
            let img = o.section.then(h)?;
            to.find_object(o.base, &img)
                .ok_or_else(|| Error::LawViolation("image section is missing".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let arrows = from
        .carrier
        .arrow_ids()
        .map(|e| {
            let m = from.arrow(e);
            let comps = m.components.iter().map(|&c| h.ar(c)).collect();
            to.find_arrow(objects[m.src.0], objects[m.dst.0], m.base, comps)
                .ok_or_else(|| Error::LawViolation("image arrow is missing".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    FinFunctor::new(from.carrier.clone(), to.carrier.clone(), objects, arrows)
}
