//! Comma categories, slices, arrow categories and strict pullbacks.

use std::collections::HashMap;
use std::sync::Arc;

use super::category::{ArrId, FinCat, ObjId};
use super::functor::{same_cat, FinFunctor};
use super::nat::NatTrans;
use crate::error::{Error, Result};

/// The terminal category, with a single object `*`.
pub fn terminal() -> Arc<FinCat> {
    let cat = FinCat::from_keyed(vec![((), "*".to_string())], Vec::<((), String, (), ())>::new(), |_| (), |_, _| Some(()))
        .expect("terminal category")
        .cat;
    Arc::new(cat)
}

/// The functor `1 → c` picking the object `x`.
pub fn point(c: &Arc<FinCat>, x: ObjId) -> FinFunctor {
    FinFunctor::constant(terminal(), c.clone(), x)
}

/// Object of a comma category `F ↓ G`: `(x, f: F(x) → G(y), y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CommaObject {
    pub left: ObjId,
    pub arrow: ArrId,
    pub right: ObjId,
}

/// Arrow of a comma category: `(u, k)` with `G(k) ∘ f = f' ∘ F(u)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CommaArrow {
    pub src: ObjId,
    pub dst: ObjId,
    pub left: ArrId,
    pub right: ArrId,
}

/// The comma category `F ↓ G` of two functors into a common base, with
/// both projections and the tilting transformation `F∘P₁ ⇒ G∘P₂`.
#[derive(Clone, Debug)]
pub struct CommaCat {
    pub left: FinFunctor,
    pub right: FinFunctor,
    pub carrier: Arc<FinCat>,
    pub proj_left: FinFunctor,
    pub proj_right: FinFunctor,
    pub tilt: NatTrans,
    objects: Vec<CommaObject>,
    arrows: Vec<CommaArrow>,
    object_index: HashMap<CommaObject, ObjId>,
    arrow_index: HashMap<CommaArrow, ArrId>,
}

impl CommaCat {
    pub fn object(&self, x: ObjId) -> CommaObject {
        self.objects[x.0]
    }

    pub fn arrow(&self, a: ArrId) -> CommaArrow {
        self.arrows[a.0]
    }

    pub fn find_object(&self, left: ObjId, arrow: ArrId, right: ObjId) -> Option<ObjId> {
        self.object_index
            .get(&CommaObject { left, arrow, right })
            .copied()
    }

    pub fn find_arrow(&self, src: ObjId, dst: ObjId, left: ArrId, right: ArrId) -> Option<ArrId> {
        self.arrow_index
            .get(&CommaArrow {
                src,
                dst,
                left,
                right,
            })
            .copied()
    }

    pub fn base(&self) -> &Arc<FinCat> {
        self.left.target()
    }
}

/// The comma category `F ↓ G`.
pub fn comma(f: &FinFunctor, g: &FinFunctor) -> Result<CommaCat> {
    if !same_cat(f.target(), g.target()) {
        return Err(Error::TargetMismatch);
    }
    let (a, c, b) = (f.source().clone(), g.source().clone(), f.target().clone());

    let mut objects = Vec::new();
    let mut by_ends: HashMap<(ObjId, ObjId), Vec<usize>> = HashMap::new();
    for x in a.objects() {
        for y in c.objects() {
            for &arr in b.hom(f.ob(x), g.ob(y)) {
                by_ends.entry((x, y)).or_default().push(objects.len());
                objects.push(CommaObject {
                    left: x,
                    arrow: arr,
                    right: y,
                });
            }
        }
    }
    let obj_name = |o: &CommaObject| {
        format!(
            "({},{},{})",
            a.object_name(o.left),
            b.arrow_name(o.arrow),
            c.object_name(o.right)
        )
    };

    let mut arrows = Vec::new();
    for (si, s) in objects.iter().enumerate() {
        for &u in a.arrows_out_of(s.left) {
            for &k in c.arrows_out_of(s.right) {
                let lhs = b.compose(g.ar(k), s.arrow);
                let Some(targets) = by_ends.get(&(a.dst(u), c.dst(k))) else {
                    continue;
                };
                for &ti in targets {
                    if b.compose(objects[ti].arrow, f.ar(u)) == lhs {
                        arrows.push(CommaArrow {
                            src: ObjId(si),
                            dst: ObjId(ti),
                            left: u,
                            right: k,
                        });
                    }
                }
            }
        }
    }

    let obj_keys: Vec<_> = objects.iter().map(|o| (*o, obj_name(o))).collect();
    let arrow_keys: Vec<_> = arrows
        .iter()
        .map(|m| {
            let name = format!(
                "({},{}):{}->{}",
                a.arrow_name(m.left),
                c.arrow_name(m.right),
                obj_keys[m.src.0].1,
                obj_keys[m.dst.0].1
            );
            (*m, name, objects[m.src.0], objects[m.dst.0])
        })
        .collect();
    let object_pos: HashMap<CommaObject, ObjId> = objects
        .iter()
        .enumerate()
        .map(|(i, o)| (*o, ObjId(i)))
        .collect();
    let keyed = FinCat::from_keyed(
        obj_keys,
        arrow_keys,
        |o| {
            let i = object_pos[o];
            CommaArrow {
                src: i,
                dst: i,
                left: a.id(o.left),
                right: c.id(o.right),
            }
        },
        |m2, m1| {
            (m1.dst == m2.src).then(|| CommaArrow {
                src: m1.src,
                dst: m2.dst,
                left: a.compose(m2.left, m1.left),
                right: c.compose(m2.right, m1.right),
            })
        },
    )?;
    let carrier = Arc::new(keyed.cat);
    // Keys were laid out with the same object order as `objects`.
    let objects: Vec<CommaObject> = keyed.obj_keys;
    let arrows: Vec<CommaArrow> = keyed.arr_keys;
    let object_index = keyed.obj_of;
    let arrow_index = keyed.arr_of;

    let proj_left = FinFunctor::new(
        carrier.clone(),
        a.clone(),
        objects.iter().map(|o| o.left).collect(),
        arrows.iter().map(|m| m.left).collect(),
    )?;
    let proj_right = FinFunctor::new(
        carrier.clone(),
        c.clone(),
        objects.iter().map(|o| o.right).collect(),
        arrows.iter().map(|m| m.right).collect(),
    )?;
    let tilt = NatTrans::new(
        proj_left.then(f)?,
        proj_right.then(g)?,
        objects.iter().map(|o| o.arrow).collect(),
    )?;
    Ok(CommaCat {
        left: f.clone(),
        right: g.clone(),
        carrier,
        proj_left,
        proj_right,
        tilt,
        objects,
        arrows,
        object_index,
        arrow_index,
    })
}

/// `B/F = Id_B ↓ F`.
pub fn comma_over(f: &FinFunctor) -> Result<CommaCat> {
    comma(&FinFunctor::identity(f.target().clone()), f)
}

/// The slice `B/b = Id_B ↓ b`; its left projection is the domain functor.
pub fn slice(b: &Arc<FinCat>, x: ObjId) -> Result<CommaCat> {
    comma(&FinFunctor::identity(b.clone()), &point(b, x))
}

/// The arrow category `C² = Id_C ↓ Id_C`; `proj_left` is `dom`, `proj_right` is `cod`.
pub fn arrow_category(c: &Arc<FinCat>) -> Result<CommaCat> {
    let id = FinFunctor::identity(c.clone());
    comma(&id, &id)
}

/// The strict pullback of `F: A → C` and `G: B → C`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub left: FinFunctor,
    pub right: FinFunctor,
    pub carrier: Arc<FinCat>,
    pub proj_left: FinFunctor,
    pub proj_right: FinFunctor,
    object_index: HashMap<(ObjId, ObjId), ObjId>,
    arrow_index: HashMap<(ArrId, ArrId), ArrId>,
}

impl Pullback {
    pub fn find_object(&self, x: ObjId, y: ObjId) -> Option<ObjId> {
        self.object_index.get(&(x, y)).copied()
    }

    pub fn find_arrow(&self, u: ArrId, v: ArrId) -> Option<ArrId> {
        self.arrow_index.get(&(u, v)).copied()
    }

    /// The unique functor `T → P` induced by a commuting square
    /// `F ∘ p = G ∘ q`, if the square commutes.
    pub fn mediate(&self, p: &FinFunctor, q: &FinFunctor) -> Result<FinFunctor> {
        if !same_cat(p.source(), q.source()) {
            return Err(Error::ParallelismMismatch("cone legs have different sources".into()));
        }
        let t = p.source();
        let objects = t
            .objects()
            .map(|x| {
                self.find_object(p.ob(x), q.ob(x))
                    .ok_or_else(|| Error::LawViolation("cone square does not commute on objects".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let arrows = t
            .arrow_ids()
            .map(|a| {
                self.find_arrow(p.ar(a), q.ar(a))
                    .ok_or_else(|| Error::LawViolation("cone square does not commute on arrows".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        FinFunctor::new(t.clone(), self.carrier.clone(), objects, arrows)
    }
}

pub fn pullback(f: &FinFunctor, g: &FinFunctor) -> Result<Pullback> {
    if !same_cat(f.target(), g.target()) {
        return Err(Error::TargetMismatch);
    }
    let (a, b) = (f.source().clone(), g.source().clone());
    let mut objects = Vec::new();
    for x in a.objects() {
        for y in b.objects() {
            if f.ob(x) == g.ob(y) {
                objects.push(((x, y), format!("({},{})", a.object_name(x), b.object_name(y))));
            }
        }
    }
    let mut arrows = Vec::new();
    for u in a.arrow_ids() {
        for v in b.arrow_ids() {
            if f.ar(u) == g.ar(v) {
                arrows.push((
                    (u, v),
                    format!("({},{})", a.arrow_name(u), b.arrow_name(v)),
                    (a.src(u), b.src(v)),
                    (a.dst(u), b.dst(v)),
                ));
            }
        }
    }
    let keyed = FinCat::from_keyed(
        objects,
        arrows,
        |&(x, y)| (a.id(x), b.id(y)),
        |&(u2, v2), &(u1, v1)| Some((a.try_compose(u2, u1)?, b.try_compose(v2, v1)?)),
    )?;
    let carrier = Arc::new(keyed.cat);
    let proj_left = FinFunctor::new(
        carrier.clone(),
        a.clone(),
        keyed.obj_keys.iter().map(|k| k.0).collect(),
        keyed.arr_keys.iter().map(|k| k.0).collect(),
    )?;
    let proj_right = FinFunctor::new(
        carrier.clone(),
        b.clone(),
        keyed.obj_keys.iter().map(|k| k.1).collect(),
        keyed.arr_keys.iter().map(|k| k.1).collect(),
    )?;
    Ok(Pullback {
        left: f.clone(),
        right: g.clone(),
        carrier,
        proj_left,
        proj_right,
        object_index: keyed.obj_of,
        arrow_index: keyed.arr_of,
    })
}
