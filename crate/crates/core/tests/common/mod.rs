//! Shared generators and brute-force oracles for the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use fibcat::cat::{ArrId, FinCat, FinFunctor, ObjId};
use proptest::prelude::*;

/// A thin category on `0..n` with an arrow `i -> j` exactly when `rel[i][j]`.
pub struct Thin {
    pub cat: Arc<FinCat>,
    pub arrow: HashMap<(usize, usize), ArrId>,
}

/// Reflexive-transitive closure of a relation.
pub fn closure(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut rel = vec![vec![false; n]; n];
    for (i, row) in rel.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(i, j) in edges {
        rel[i][j] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if rel[i][k] && rel[k][j] {
                    rel[i][j] = true;
                }
            }
        }
    }
    rel
}

pub fn thin(name: &str, rel: &[Vec<bool>]) -> Thin {
    let n = rel.len();
    let objects = (0..n).map(|i| (i, format!("{name}{i}"))).collect();
    let mut arrows = Vec::new();
    for (i, row) in rel.iter().enumerate() {
        for (j, &related) in row.iter().enumerate() {
            if i != j && related {
                arrows.push(((i, j), format!("{name}{i}{j}"), i, j));
            }
        }
    }
    let keyed = FinCat::from_keyed(
        objects,
        arrows,
        |&i| (i, i),
        |g: &(usize, usize), f: &(usize, usize)| (f.1 == g.0).then_some((f.0, g.1)),
    )
    .expect("a preorder is a category");
    let arrow = keyed.arr_of.iter().map(|(&k, &a)| (k, a)).collect();
    Thin {
        cat: Arc::new(keyed.cat),
        arrow,
    }
}

/// The unique functor between thin categories with the given object map,
/// or `None` when the map is not monotone.
pub fn thin_functor(src: &Thin, dst: &Thin, map: &[usize]) -> Option<FinFunctor> {
    let mut arrows = vec![ArrId(0); src.cat.arrow_count()];
    for (&(i, j), &a) in &src.arrow {
        arrows[a.0] = *dst.arrow.get(&(map[i], map[j]))?;
    }
    let objects = map.iter().map(|&m| ObjId(m)).collect();
    Some(FinFunctor::new(src.cat.clone(), dst.cat.clone(), objects, arrows).expect("monotone maps are functors"))
}

/// Random relation on up to `max` objects.
pub fn relation(max: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1..=max).prop_flat_map(|n| {
        let edge = (0..n, 0..n);
        (Just(n), proptest::collection::vec(edge, 0..=n * 2))
    })
}

/// Random partial order: each upward pair `i < j` is related independently.
pub fn poset(max: usize) -> impl Strategy<Value = Vec<Vec<bool>>> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let up: Vec<_> = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| i < j && bits[i * n + j])
                .collect();
            closure(n, &up)
        })
    })
}

pub fn preorder(max: usize) -> impl Strategy<Value = Vec<Vec<bool>>> {
    relation(max).prop_map(|(n, edges)| closure(n, &edges))
}

/// A random monotone map between two random preorders.
pub fn thin_functor_strategy(
    src: impl Strategy<Value = Vec<Vec<bool>>>,
    dst: impl Strategy<Value = Vec<Vec<bool>>>,
) -> impl Strategy<Value = (Vec<Vec<bool>>, Vec<Vec<bool>>, Vec<usize>)> {
    (src, dst).prop_flat_map(|(s, d)| {
        let (n, m) = (s.len(), d.len());
        (Just(s), Just(d), proptest::collection::vec(0..m, n))
    })
}

/// Cartesianness straight from the definition: every `psi` into the target
/// of `phi` and every `w` with `F(phi) ∘ w = F(psi)` has exactly one filler.
pub fn cartesian_oracle(f: &FinFunctor, phi: ArrId) -> bool {
    let (a, b) = (f.source(), f.target());
    let target = a.dst(phi);
    for psi in a.arrow_ids().filter(|&p| a.dst(p) == target) {
        for w in b.arrow_ids() {
            if b.src(w) != f.ob(a.src(psi)) || b.dst(w) != f.ob(a.src(phi)) {
                continue;
            }
            if b.compose(f.ar(phi), w) != f.ar(psi) {
                continue;
            }
            let count = a
                .arrow_ids()
                .filter(|&chi| {
                    a.src(chi) == a.src(psi)
                        && a.dst(chi) == a.src(phi)
                        && a.compose(phi, chi) == psi
                        && f.ar(chi) == w
                })
                .count();
            if count != 1 {
                return false;
            }
        }
    }
    true
}

pub fn fibration_oracle(f: &FinFunctor) -> bool {
    let (a, b) = (f.source(), f.target());
    a.objects().all(|x| {
        b.arrow_ids().filter(|&u| b.dst(u) == f.ob(x)).all(|u| {
            a.arrow_ids()
                .any(|phi| a.dst(phi) == x && f.ar(phi) == u && cartesian_oracle(f, phi))
        })
    })
}

/// Object and arrow counts of the comma category `F/G` by brute force.
pub fn comma_counts(f: &FinFunctor, g: &FinFunctor) -> (usize, usize) {
    let b = f.target();
    let mut objects = Vec::new();
    for x in f.source().objects() {
        for y in g.source().objects() {
            for &h in b.hom(f.ob(x), g.ob(y)) {
                objects.push((x, h, y));
            }
        }
    }
    let (fa, ga) = (f.source(), g.source());
    let mut arrows = 0;
    for &(x, h, y) in &objects {
        for &(x2, h2, y2) in &objects {
            for &u in fa.hom(x, x2) {
                for &v in ga.hom(y, y2) {
                    if b.compose(h2, f.ar(u)) == b.compose(g.ar(v), h) {
                        arrows += 1;
                    }
                }
            }
        }
    }
    (objects.len(), arrows)
}

pub fn pullback_counts(f: &FinFunctor, g: &FinFunctor) -> (usize, usize) {
    let objects = f
        .source()
        .objects()
        .flat_map(|x| g.source().objects().map(move |y| (x, y)))
        .filter(|&(x, y)| f.ob(x) == g.ob(y))
        .count();
    let arrows = f
        .source()
        .arrow_ids()
        .flat_map(|u| g.source().arrow_ids().map(move |v| (u, v)))
        .filter(|&(u, v)| f.ar(u) == g.ar(v))
        .count();
    (objects, arrows)
}

/// Conduché condition straight from the definition, with connectivity of
/// each factorization category computed by repeated relaxation.
pub fn conduche_oracle(d: &FinFunctor) -> bool {
    let (a, c) = (d.source(), d.target());
    for f in a.arrow_ids() {
        let (x, y) = (d.ob(a.src(f)), d.ob(a.dst(f)));
        for m in c.objects() {
            for &g1 in c.hom(x, m) {
                for &g2 in c.hom(m, y) {
                    if c.compose(g2, g1) != d.ar(f) {
                        continue;
                    }
                    let mut facts = Vec::new();
                    for f1 in a.arrow_ids().filter(|&f1| a.src(f1) == a.src(f) && d.ar(f1) == g1) {
                        for f2 in a.arrow_ids().filter(|&f2| a.src(f2) == a.dst(f1) && a.dst(f2) == a.dst(f)) {
                            if d.ar(f2) == g2 && a.compose(f2, f1) == f {
                                facts.push((f1, f2));
                            }
                        }
                    }
                    if facts.is_empty() {
                        return false;
                    }
                    let linked = |p: (ArrId, ArrId), q: (ArrId, ArrId)| {
                        a.arrow_ids().any(|u| {
                            a.src(u) == a.dst(p.0)
                                && a.dst(u) == a.dst(q.0)
                                && c.is_identity(d.ar(u))
                                && a.compose(u, p.0) == q.0
                                && a.compose(q.1, u) == p.1
                        })
                    };
                    let mut reached = vec![false; facts.len()];
                    reached[0] = true;
                    let mut changed = true;
                    while changed {
                        changed = false;
                        for i in 0..facts.len() {
                            for j in 0..facts.len() {
                                if reached[i]
                                    && !reached[j]
                                    && (linked(facts[i], facts[j]) || linked(facts[j], facts[i]))
                                {
                                    reached[j] = true;
                                    changed = true;
                                }
                            }
                        }
                    }
                    if reached.iter().any(|r| !r) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Discrete category on `n` objects.
pub fn discrete(n: usize) -> Thin {
    let rel: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
    thin("x", &rel)
}

/// Equivalence classes generated by `pairs`, labelled by smallest member.
pub fn naive_classes(n: usize, pairs: &[(usize, usize)]) -> Vec<usize> {
    let sym: Vec<_> = pairs.iter().flat_map(|&(i, j)| [(i, j), (j, i)]).collect();
    let rel = closure(n, &sym);
    (0..n).map(|i| (0..n).find(|&j| rel[i][j]).unwrap()).collect()
}
