//! Exhaustive universal-property checks against test categories.
//!
//! Each check enumerates every cone (or cocone) out of (into) a test
//! category and every candidate mediating functor, and verifies that
//! "compose with the universal cone" is a bijection between the two sets.

use std::collections::HashSet;
use std::sync::Arc;

use super::category::{ArrId, FinCat, ObjId};
use super::construct::{CommaCat, Pullback};
use super::enumerate::{all_functors, all_transformations};
use super::functor::FinFunctor;
use crate::error::Result;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UniversalReport {
    pub test_categories: usize,
    pub cones: usize,
    pub mediators: usize,
    pub holds: bool,
}

impl UniversalReport {
    fn absorb(&mut self, cones: usize, mediators: usize, ok: bool) {
        self.test_categories += 1;
        self.cones += cones;
        self.mediators += mediators;
        self.holds &= ok;
    }
}

type Maps = (Vec<ObjId>, Vec<ArrId>);

fn maps(f: &FinFunctor) -> Maps {
    (f.object_map().to_vec(), f.arrow_map().to_vec())
}

/// A cone image map is a bijection onto `cones` when it is injective and
/// hits exactly the cone set.
fn is_bijection<K: std::hash::Hash + Eq>(images: Vec<K>, cones: HashSet<K>) -> bool {
    let n = images.len();
    let set: HashSet<K> = images.into_iter().collect();
    set.len() == n && set == cones
}

pub fn check_pullback(pb: &Pullback, tests: &[Arc<FinCat>]) -> Result<UniversalReport> {
    let mut report = UniversalReport {
        holds: true,
        ..Default::default()
    };
    let (a, b) = (pb.left.source(), pb.right.source());
    for t in tests {
        let ps = all_functors(t, a);
        let qs = all_functors(t, b);
        let mut cones = HashSet::new();
        for p in &ps {
            let fp = p.then(&pb.left)?;
            for q in &qs {
                if fp == q.then(&pb.right)? {
                    cones.insert((maps(p), maps(q)));
                }
            }
        }
        let ms = all_functors(t, &pb.carrier);
        let images = ms
            .iter()
            .map(|m| Ok((maps(&m.then(&pb.proj_left)?), maps(&m.then(&pb.proj_right)?))))
            .collect::<Result<Vec<_>>>()?;
        let n_cones = cones.len();
        report.absorb(n_cones, ms.len(), is_bijection(images, cones));
    }
    Ok(report)
}

pub fn check_comma(cc: &CommaCat, tests: &[Arc<FinCat>]) -> Result<UniversalReport> {
    let mut report = UniversalReport {
        holds: true,
        ..Default::default()
    };
    let (a, c) = (cc.left.source(), cc.right.source());
    for t in tests {
        let ps = all_functors(t, a);
        let qs = all_functors(t, c);
        let mut cones = HashSet::new();
        for p in &ps {
            let fp = p.then(&cc.left)?;
            for q in &qs {
                let gq = q.then(&cc.right)?;
                for tau in all_transformations(&fp, &gq) {
                    cones.insert((maps(p), maps(q), tau));
                }
            }
        }
        let ms = all_functors(t, &cc.carrier);
        let images = ms
            .iter()
            .map(|m| {
                let tau: Vec<ArrId> = t.objects().map(|x| cc.tilt.component(m.ob(x))).collect();
                Ok((maps(&m.then(&cc.proj_left)?), maps(&m.then(&cc.proj_right)?), tau))
            })
            .collect::<Result<Vec<_>>>()?;
        let n_cones = cones.len();
        report.absorb(n_cones, ms.len(), is_bijection(images, cones));
    }
    Ok(report)
}

/// Checks that `q: Y → Q` is a coequalizer of `g, h: X ⇒ Y` against
/// cocones into each test category.
pub fn check_coequalizer(
    g: &FinFunctor,
    h: &FinFunctor,
    q: &FinFunctor,
    tests: &[Arc<FinCat>],
) -> Result<UniversalReport> {
    let mut report = UniversalReport {
        holds: true,
        ..Default::default()
    };
    for z in tests {
        let mut cocones = HashSet::new();
        for k in all_functors(g.target(), z) {
            if g.then(&k)? == h.then(&k)? {
                cocones.insert(maps(&k));
            }
        }
        let ms = all_functors(q.target(), z);
        let images = ms
            .iter()
            .map(|m| Ok(maps(&q.then(m)?)))
            .collect::<Result<Vec<_>>>()?;
        let n = cocones.len();
        report.absorb(n, ms.len(), is_bijection(images, cocones));
    }
    Ok(report)
}
