//! Generalized congruences and the regular-epimorphism criterion.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use super::words::{quotient, Quotient, Word};
use crate::cat::{ArrId, FinCat, FinFunctor, ObjId};
use crate::error::{Error, Result};

/// Lists enumerated by [`GenCongruence::check_conditions`] beyond this
/// count are not checked.
pub const LIST_CAP: usize = 20_000;

/// A generalized congruence presented as the kernel of a functor: objects
/// are related when their images agree, lists when their image composites
/// agree.
#[derive(Clone, Debug)]
pub struct GenCongruence {
    classifier: FinFunctor,
}

impl GenCongruence {
    pub fn kernel(classifier: FinFunctor) -> Self {
        GenCongruence { classifier }
    }

    pub fn category(&self) -> &Arc<FinCat> {
        self.classifier.source()
    }

    pub fn objects_related(&self, x: ObjId, y: ObjId) -> bool {
        self.classifier.ob(x) == self.classifier.ob(y)
    }

    /// Whether `(f₁, …, fₙ)` is composable up to related objects.
    pub fn is_list(&self, list: &[ArrId]) -> bool {
        let c = self.category();
        !list.is_empty() && list.windows(2).all(|w| self.objects_related(c.dst(w[0]), c.src(w[1])))
    }

    /// Image composite, the class of a list.
    pub fn class_of(&self, list: &[ArrId]) -> Option<ArrId> {
        self.is_list(list).then(|| self.classifier.image_composite(list)).flatten()
    }

    pub fn lists_related(&self, u: &[ArrId], v: &[ArrId]) -> bool {
        match (self.class_of(u), self.class_of(v)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    /// All lists of length `1..=bound` in canonical order, or `None` past the cap.
    pub fn lists(&self, bound: usize) -> Option<Vec<Word>> {
        let c = self.category();
        let mut out: Vec<Word> = Vec::new();
        let mut layer: Vec<Word> = c.arrow_ids().map(|a| vec![a]).collect();
        for _ in 0..bound {
            let mut next = Vec::new();
            for w in &layer {
                let last = *w.last().expect("non-empty");
                for a in c.arrow_ids() {
                    if self.objects_related(c.dst(last), c.src(a)) {
                        let mut v = w.clone();
                        v.push(a);
                        next.push(v);
                    }
                }
            }
            out.append(&mut layer);
            if out.len() > LIST_CAP {
                return None;
            }
            layer = next;
        }
        Some(out)
    }

    /// Re-checks conditions (1)–(4) on every list of length at most `bound`.
    pub fn check_conditions(&self, bound: usize) -> Result<ConditionReport> {
        let c = self.category();
        let lists = self.lists(bound).ok_or_else(|| Error::InstanceTooLarge {
            what: "lists".into(),
            size: LIST_CAP + 1,
            cap: LIST_CAP,
        })?;
        let mut classes: HashMap<ArrId, Vec<usize>> = HashMap::new();
        for (i, l) in lists.iter().enumerate() {
            let k = self.class_of(l).expect("enumerated lists are lists");
            classes.entry(k).or_default().push(i);
        }
        let ends = |l: &Word| (c.src(l[0]), c.dst(*l.last().expect("non-empty")));

        let endpoints = classes.values().all(|members| {
            let (s, t) = ends(&lists[members[0]]);
            members.iter().all(|&i| {
                let (s2, t2) = ends(&lists[i]);
                self.objects_related(s, s2) && self.objects_related(t, t2)
            })
        });

        let mut concatenation = true;
        let reps: Vec<&Vec<usize>> = classes.values().collect();
        'outer: for m1 in &reps {
            for m2 in &reps {
                let mut seen: HashSet<ArrId> = HashSet::new();
                for &i in m1.iter() {
                    for &j in m2.iter() {
                        if lists[i].len() + lists[j].len() > bound {
                            continue;
                        }
                        let mut w = lists[i].clone();
                        w.extend_from_slice(&lists[j]);
                        if let Some(k) = self.class_of(&w) {
                            seen.insert(k);
                        }
                    }
                }
                if seen.len() > 1 {
                    concatenation = false;
                    break 'outer;
                }
            }
        }

        let identities = c.objects().all(|x| {
            c.objects()
                .filter(|&y| self.objects_related(x, y))
                .all(|y| self.lists_related(&[c.id(x)], &[c.id(y)]))
        });
        let composites = c
            .composable_pairs()
            .all(|(g, f)| self.lists_related(&[c.compose(g, f)], &[f, g]));

        Ok(ConditionReport {
            lists_checked: lists.len(),
            endpoints,
            concatenation,
            identities,
            composites,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub lists_checked: usize,
    /// (1) related lists have related endpoints.
    pub endpoints: bool,
    /// (2) concatenations of related lists are related.
    pub concatenation: bool,
    /// (3) related objects have related identities.
    pub identities: bool,
    /// (4) a composite is related to the pair it composes.
    pub composites: bool,
}

impl ConditionReport {
    pub fn holds(&self) -> bool {
        self.endpoints && self.concatenation && self.identities && self.composites
    }
}

/// `x ~ x'` when `F x = F x'`, lists related when their images compose to the same arrow.
pub fn induced_congruence(f: &FinFunctor) -> GenCongruence {
    GenCongruence::kernel(f.clone())
}

/// The congruence of a computed quotient.
pub fn quotient_congruence(q: &Quotient) -> GenCongruence {
    GenCongruence::kernel(q.functor.clone())
}

#[derive(Clone, Debug)]
pub struct RegularEpiReport {
    /// Image arrows generate the target under composition.
    pub generates: bool,
    /// First target arrow not reached, in canonical order.
    pub not_generated: Option<ArrId>,
    /// The induced congruence is generated by one-element lists; `None`
    /// when the quotient by the singleton pairs was not certified.
    pub regular: Option<bool>,
    /// Objects and arrows of the quotient by the singleton pairs.
    pub singleton_quotient: Option<(usize, usize)>,
    /// Target arrows with more than one preimage class, when not regular.
    pub collisions: Vec<ArrId>,
}

impl RegularEpiReport {
    pub fn is_regular_epi(&self) -> bool {
        self.generates && self.regular == Some(true)
    }
}

/// Arrows of `target` reachable by composing the given arrows.
pub fn generated_arrows(target: &FinCat, gens: &[ArrId]) -> Vec<bool> {
    let mut reached = vec![false; target.arrow_count()];
    let mut frontier: Vec<ArrId> = Vec::new();
    for &g in gens {
        if !reached[g.0] {
            reached[g.0] = true;
            frontier.push(g);
        }
    }
    while let Some(a) = frontier.pop() {
        for &g in gens {
            for c in [target.try_compose(g, a), target.try_compose(a, g)].into_iter().flatten() {
                if !reached[c.0] {
                    reached[c.0] = true;
                    frontier.push(c);
                }
            }
        }
    }
    reached
}

pub fn is_regular_epi(f: &FinFunctor, max_len: usize) -> Result<RegularEpiReport> {
    let (x, y) = (f.source(), f.target());
    let reached = generated_arrows(y, f.arrow_map());
    let not_generated = y.arrow_ids().find(|a| !reached[a.0]);

    let mut objects = Vec::new();
    for a in x.objects() {
        for b in x.objects() {
            if a < b && f.ob(a) == f.ob(b) {
                objects.push((a, b));
            }
        }
    }
    let mut words = Vec::new();
    for a in x.arrow_ids() {
        for b in x.arrow_ids() {
            if a < b && f.ar(a) == f.ar(b) {
                words.push((vec![a], vec![b]));
            }
        }
    }
    let (regular, singleton_quotient, collisions) = match quotient(x, &objects, &words, max_len) {
        Ok(t) => {
            let cmp = t.mediate(f)?;
            let mut seen: HashMap<ArrId, usize> = HashMap::new();
            for e in t.carrier.arrow_ids() {
                *seen.entry(cmp.ar(e)).or_default() += 1;
            }
            let mut collisions: Vec<ArrId> = seen.into_iter().filter(|&(_, n)| n > 1).map(|(a, _)| a).collect();
            collisions.sort();
            (
                Some(collisions.is_empty()),
                Some((t.carrier.object_count(), t.carrier.arrow_count())),
                collisions,
            )
        }
        Err(Error::NonTermination { .. }) => (None, None, Vec::new()),
        Err(e) => return Err(e),
    };
    Ok(RegularEpiReport {
        generates: not_generated.is_none(),
        not_generated,
        regular,
        singleton_quotient,
        collisions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn identity_is_regular_epi() {
        let f = catalog::functor("id_B").unwrap();
        assert!(is_regular_epi(&f, 8).unwrap().is_regular_epi());
    }

    #[test]
    fn quop_quotient_is_regular_epi() {
        let q = catalog::functor("quop_Q").unwrap();
        let r = is_regular_epi(&q, 8).unwrap();
        assert!(r.generates && r.regular == Some(true), "{r:?}");
    }

    #[test]
    fn inclusion_does_not_generate() {
        let f = catalog::functor("point0").unwrap();
        let r = is_regular_epi(&f, 4).unwrap();
        assert!(!r.generates);
        assert_eq!(r.not_generated.map(|a| f.target().arrow_name(a).to_string()), Some("f".into()));
    }

    #[test]
    fn composite_picking_functor_is_not_regular() {
        // D: 2 → 3 hits f02 but its factors are missing from the image
        let d = catalog::functor("nonconduche_D").unwrap();
        assert!(!is_regular_epi(&d, 6).unwrap().generates);
    }

    #[test]
    fn quop_congruence_relates_the_pair_to_w() {
        let q = catalog::functor("quop_Q").unwrap();
        let cong = induced_congruence(&q);
        let y = q.source();
        let (v1, v2) = (y.arrow_by_name("v1").unwrap(), y.arrow_by_name("v2").unwrap());
        let (y1, y2) = (y.object_by_name("y1").unwrap(), y.object_by_name("y2").unwrap());
        assert!(cong.objects_related(y1, y2));
        let w = q.target().arrow_by_name("w").unwrap();
        assert_eq!(cong.class_of(&[v1, v2]), Some(w));
        assert!(cong.check_conditions(3).unwrap().holds());
    }

    #[test]
    fn fold_relates_singletons_with_equal_images() {
        let f = catalog::functor("fold").unwrap();
        let cong = induced_congruence(&f);
        let c = f.source();
        let (fa, fb) = (c.arrow_by_name("fa").unwrap(), c.arrow_by_name("fb").unwrap());
        assert!(cong.lists_related(&[fa], &[fb]));
        assert!(cong.check_conditions(2).unwrap().holds());
    }
}
