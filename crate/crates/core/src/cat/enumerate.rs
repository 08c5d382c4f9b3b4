//! Backtracking enumeration of functors between finite categories.
//!
//! Variables are scheduled object by object: after an object is assigned,
//! every non-identity arrow whose endpoints are both assigned becomes the
//! next variable. Each composition constraint `X(g∘f) = X(g)∘X(f)` is
//! checked as soon as the last of its three arrows is assigned.

use std::ops::ControlFlow;
use std::sync::Arc;

use super::category::{ArrId, FinCat, ObjId};
use super::functor::FinFunctor;

#[derive(Clone, Copy, Debug)]
enum Var {
    Obj(ObjId),
    Arr(ArrId),
}

type ArrowFilter<'a> = Box<dyn Fn(ArrId, ArrId) -> bool + Send + Sync + 'a>;

/// A functor search from `source` to `target` with optional per-object
/// candidate restrictions and a per-arrow filter.
pub struct FunctorSearch<'a> {
    source: &'a FinCat,
    target: &'a FinCat,
    object_candidates: Vec<Vec<ObjId>>,
    arrow_filter: Option<ArrowFilter<'a>>,
    injective_on_objects: bool,
}

impl<'a> FunctorSearch<'a> {
    pub fn new(source: &'a FinCat, target: &'a FinCat) -> Self {
        let all: Vec<ObjId> = target.objects().collect();
        FunctorSearch {
            source,
            target,
            object_candidates: vec![all; source.object_count()],
            arrow_filter: None,
            injective_on_objects: false,
        }
    }

    /// Restricts the image of source object `x` to `candidates` (kept in the given order).
    pub fn object_candidates(mut self, x: ObjId, candidates: Vec<ObjId>) -> Self {
        self.object_candidates[x.0] = candidates;
        self
    }

    /// Only images `t` of source arrows `s` with `filter(s, t)` are tried.
    pub fn arrow_filter(mut self, filter: impl Fn(ArrId, ArrId) -> bool + Send + Sync + 'a) -> Self {
        self.arrow_filter = Some(Box::new(filter));
        self
    }

    pub fn injective_on_objects(mut self) -> Self {
        self.injective_on_objects = true;
        self
    }

    /// Visits every functor in canonical order; the visitor may stop early.
    pub fn for_each(&self, mut visit: impl FnMut(&[ObjId], &[ArrId]) -> ControlFlow<()>) {
        let s = self.source;
        let mut vars = Vec::new();
        let mut pos = vec![usize::MAX; s.arrow_count()];
        let mut obj_done = vec![false; s.object_count()];
        let mut arr_done = vec![false; s.arrow_count()];
        for x in s.objects() {
            obj_done[x.0] = true;
            pos[s.id(x).0] = vars.len();
            vars.push(Var::Obj(x));
            for f in s.non_identity_arrows() {
                if !arr_done[f.0] && obj_done[s.src(f).0] && obj_done[s.dst(f).0] {
                    arr_done[f.0] = true;
                    pos[f.0] = vars.len();
                    vars.push(Var::Arr(f));
                }
            }
        }
        let mut checks: Vec<Vec<(ArrId, ArrId, ArrId)>> = vec![Vec::new(); vars.len()];
        for (g, f) in s.composable_pairs() {
            if s.is_identity(g) || s.is_identity(f) {
                continue;
            }
            let h = s.compose(g, f);
            let step = pos[g.0].max(pos[f.0]).max(pos[h.0]);
            checks[step].push((g, f, h));
        }
        let mut state = State {
            objects: vec![ObjId(usize::MAX); s.object_count()],
            arrows: vec![ArrId(usize::MAX); s.arrow_count()],
            used: vec![false; self.target.object_count()],
        };
        let _ = self.step(0, &vars, &checks, &mut state, &mut visit);
    }

    fn step(
        &self,
        i: usize,
        vars: &[Var],
        checks: &[Vec<(ArrId, ArrId, ArrId)>],
        st: &mut State,
        visit: &mut impl FnMut(&[ObjId], &[ArrId]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if i == vars.len() {
            return visit(&st.objects, &st.arrows);
        }
        let (s, t) = (self.source, self.target);
        match vars[i] {
            Var::Obj(x) => {
                for &y in &self.object_candidates[x.0] {
                    if self.injective_on_objects && st.used[y.0] {
                        continue;
                    }
                    st.objects[x.0] = y;
                    st.arrows[s.id(x).0] = t.id(y);
                    st.used[y.0] = true;
                    let r = if self.passes(&checks[i], st) {
                        self.step(i + 1, vars, checks, st, visit)
                    } else {
                        ControlFlow::Continue(())
                    };
                    st.used[y.0] = false;
                    r?;
                }
            }
            Var::Arr(f) => {
                let (a, b) = (st.objects[s.src(f).0], st.objects[s.dst(f).0]);
                for &cand in t.hom(a, b) {
                    if let Some(filter) = &self.arrow_filter {
                        if !filter(f, cand) {
                            continue;
                        }
                    }
                    st.arrows[f.0] = cand;
                    if self.passes(&checks[i], st) {
                        self.step(i + 1, vars, checks, st, visit)?;
                    }
                }
            }
        }
        ControlFlow::Continue(())
    }

    fn passes(&self, checks: &[(ArrId, ArrId, ArrId)], st: &State) -> bool {
        checks.iter().all(|&(g, f, h)| {
            self.target.compose(st.arrows[g.0], st.arrows[f.0]) == st.arrows[h.0]
        })
    }

    /// All functors, as validated [`FinFunctor`] values.
    pub fn collect(&self, source: &Arc<FinCat>, target: &Arc<FinCat>) -> Vec<FinFunctor> {
        let mut out = Vec::new();
        self.for_each(|objs, arrs| {
            out.push(FinFunctor::new_unchecked(
                source.clone(),
                target.clone(),
                objs.to_vec(),
                arrs.to_vec(),
            ));
            ControlFlow::Continue(())
        });
        out
    }

    pub fn count(&self) -> usize {
        let mut n = 0;
        self.for_each(|_, _| {
            n += 1;
            ControlFlow::Continue(())
        });
        n
    }
}

struct State {
    objects: Vec<ObjId>,
    arrows: Vec<ArrId>,
    used: Vec<bool>,
}

/// Every functor `source → target`.
pub fn all_functors(source: &Arc<FinCat>, target: &Arc<FinCat>) -> Vec<FinFunctor> {
    FunctorSearch::new(source, target).collect(source, target)
}

/// An isomorphism of categories `c → d`, if one exists.
pub fn find_isomorphism(c: &Arc<FinCat>, d: &Arc<FinCat>) -> Option<FinFunctor> {
    if c.object_count() != d.object_count() || c.arrow_count() != d.arrow_count() {
        return None;
    }
    let mut found = None;
    FunctorSearch::new(c, d).injective_on_objects().for_each(|objs, arrs| {
        let f = FinFunctor::new_unchecked(c.clone(), d.clone(), objs.to_vec(), arrs.to_vec());
        if f.is_injective_on_arrows() {
            found = Some(f);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

/// All natural transformations between two parallel functors.
pub fn all_transformations(f: &FinFunctor, g: &FinFunctor) -> Vec<Vec<ArrId>> {
    transformations_with(f, g, |_, _| true)
}

/// Natural transformations `f ⇒ g` whose every component `c` at `x`
/// satisfies `allowed(x, c)`.
pub fn transformations_with(
    f: &FinFunctor,
    g: &FinFunctor,
    allowed: impl Fn(ObjId, ArrId) -> bool,
) -> Vec<Vec<ArrId>> {
    let mut out = Vec::new();
    let mut comps = vec![ArrId(usize::MAX); f.source().object_count()];
    fn rec(
        i: usize,
        f: &FinFunctor,
        g: &FinFunctor,
        allowed: &dyn Fn(ObjId, ArrId) -> bool,
        comps: &mut Vec<ArrId>,
        out: &mut Vec<Vec<ArrId>>,
    ) {
        let dom = f.source();
        let cod = f.target();
        if i == dom.object_count() {
            out.push(comps.clone());
            return;
        }
        let x = ObjId(i);
        for &c in cod.hom(f.ob(x), g.ob(x)) {
            if !allowed(x, c) {
                continue;
            }
            comps[i] = c;
            // naturality squares whose endpoints are both assigned, one of them just now
            let ok = dom.arrows_out_of(x).iter().chain(dom.arrows_into(x)).all(|&a| {
                let (s, t) = (dom.src(a), dom.dst(a));
                if s.0 > i || t.0 > i {
                    return true;
                }
                cod.compose(g.ar(a), comps[s.0]) == cod.compose(comps[t.0], f.ar(a))
            });
            if ok {
                rec(i + 1, f, g, allowed, comps, out);
            }
        }
    }
    rec(0, f, g, &allowed, &mut comps, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn functors_from_two_are_arrows() {
        let two = catalog::category("interval2").unwrap();
        let three = catalog::category("interval3").unwrap();
        assert_eq!(all_functors(&two, &three).len(), three.arrow_count());
    }

    #[test]
    fn endofunctors_of_three_are_monotone_maps() {
        // monotone self-maps of a 3-chain: C(5,3) = 10
        let three = catalog::category("interval3").unwrap();
        assert_eq!(all_functors(&three, &three).len(), 10);
    }

    #[test]
    fn chaotic_category_has_two_automorphisms() {
        let c = catalog::category("chaotic2").unwrap();
        let n = FunctorSearch::new(&c, &c).injective_on_objects().count();
        assert_eq!(n, 2);
        assert!(find_isomorphism(&c, &c).is_some());
    }

    #[test]
    fn no_isomorphism_between_two_and_discrete_two() {
        let two = catalog::category("interval2").unwrap();
        let disc = catalog::category("two_points").unwrap();
        assert!(find_isomorphism(&two, &disc).is_none());
    }
}
