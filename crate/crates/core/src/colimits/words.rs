//! Quotients of a finite category by a generated congruence, computed on
//! bounded words of arrows.
//!
//! Objects are identified by union-find. Arrows of the quotient are classes
//! of reduced words: lists of non-identity arrows whose consecutive
//! endpoints are identified but distinct (equal endpoints are composed
//! away). Words up to a length bound are saturated under single-letter
//! extensions of the seed pairs. A candidate quotient is accepted only when
//! it is certified: representatives compose within the bound, the result is
//! a category, and every word folds letter by letter to its own class. Under
//! that certificate the candidate is the true quotient.

use std::collections::HashMap;
use std::sync::Arc;

use crate::cat::{ArrId, FinCat, FinFunctor, ObjId, COMPOSE_SEP};
use crate::error::{Error, Result};

/// Reduced words beyond this count abort the search.
pub const WORD_CAP: usize = 200_000;

#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    /// Merges the classes of `x` and `y`; the smaller root survives.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (a, b) = (self.find(x), self.find(y));
        if a == b {
            return false;
        }
        let (keep, drop) = if a < b { (a, b) } else { (b, a) };
        self.parent[drop] = keep;
        true
    }

    /// Class index per element, numbered by first occurrence.
    pub fn classes(&mut self) -> (Vec<usize>, usize) {
        let mut number = HashMap::new();
        let mut out = Vec::with_capacity(self.parent.len());
        for x in 0..self.parent.len() {
            let r = self.find(x);
            let next = number.len();
            out.push(*number.entry(r).or_insert(next));
        }
        (out, number.len())
    }
}

/// A word in diagrammatic order: `[a₁, …, aₙ]` stands for `aₙ ∘ … ∘ a₁`.
pub type Word = Vec<ArrId>;

/// Word arithmetic over a category with identified objects.
pub struct WordAlgebra<'a> {
    pub cat: &'a FinCat,
    pub object_class: Vec<usize>,
    pub object_classes: usize,
}

impl<'a> WordAlgebra<'a> {
    pub fn new(cat: &'a FinCat, object_pairs: &[(ObjId, ObjId)]) -> Self {
        let mut uf = UnionFind::new(cat.object_count());
        for &(x, y) in object_pairs {
            uf.union(x.0, y.0);
        }
        let (object_class, object_classes) = uf.classes();
        WordAlgebra {
            cat,
            object_class,
            object_classes,
        }
    }

    fn class(&self, x: ObjId) -> usize {
        self.object_class[x.0]
    }

    /// Composes equal junctions and drops identities.
    pub fn reduce(&self, letters: impl IntoIterator<Item = ArrId>) -> Word {
        let c = self.cat;
        let mut stack: Word = Vec::new();
        for mut a in letters {
            if c.is_identity(a) {
                continue;
            }
            if let Some(&top) = stack.last() {
                if c.dst(top) == c.src(a) {
                    stack.pop();
                    a = c.compose(a, top);
                    if c.is_identity(a) {
                        continue;
                    }
                }
            }
            stack.push(a);
        }
        stack
    }

    /// Whether `b` may follow `a` in a reduced word.
    pub fn links(&self, a: ArrId, b: ArrId) -> bool {
        let c = self.cat;
        c.dst(a) != c.src(b) && self.class(c.dst(a)) == self.class(c.src(b))
    }
}

/// Reduced words up to a length bound, including one empty word per object
/// class, indexed by length then lexicographically.
struct WordSet {
    words: Vec<Word>,
    /// `(src class, dst class)` per word.
    ends: Vec<(usize, usize)>,
    index: HashMap<Word, usize>,
}

impl WordSet {
    fn build(alg: &WordAlgebra, len: usize, cap: usize) -> Option<Self> {
        let c = alg.cat;
        let letters: Vec<ArrId> = c.non_identity_arrows().collect();
        let mut words: Vec<Word> = Vec::new();
        let mut ends = Vec::new();
        for k in 0..alg.object_classes {
            words.push(Vec::new());
            ends.push((k, k));
        }
        let mut layer: Vec<Word> = letters.iter().map(|&a| vec![a]).collect();
        for _ in 0..len {
            if words.len() + layer.len() > cap {
                return None;
            }
            let mut next = Vec::new();
            for w in layer {
                let (first, last) = (w[0], *w.last().expect("non-empty"));
                for &a in &letters {
                    if alg.links(last, a) {
                        let mut v = w.clone();
                        v.push(a);
                        next.push(v);
                    }
                }
                ends.push((alg.class(c.src(first)), alg.class(c.dst(last))));
                words.push(w);
            }
            layer = next;
        }
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        Some(WordSet { words, ends, index })
    }

    fn lookup(&self, alg: &WordAlgebra, w: &Word, src_class: usize) -> Option<usize> {
        if w.is_empty() {
            return Some(src_class);
        }
        self.index.get(w).copied().or_else(|| {
            let r = alg.reduce(w.iter().copied());
            if r.is_empty() {
                Some(src_class)
            } else {
                self.index.get(&r).copied()
            }
        })
    }
}

/// A certified quotient `q: Y → Q`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub carrier: Arc<FinCat>,
    pub functor: FinFunctor,
    /// Members of each object class, in canonical order.
    pub object_classes: Vec<Vec<ObjId>>,
    /// Shortest representative word of each arrow of `Q`.
    pub representatives: Vec<Word>,
    /// Length bound at which the quotient was certified.
    pub certified_at: usize,
    /// Number of word classes at each bound tried.
    pub trace: Vec<usize>,
}

impl Quotient {
    pub fn source(&self) -> &Arc<FinCat> {
        self.functor.source()
    }

    /// The unique `M: Q → Z` with `M ∘ q = k`, for `k` constant on the
    /// identified data.
    pub fn mediate(&self, k: &FinFunctor) -> Result<FinFunctor> {
        if !crate::cat::same_cat(k.source(), self.source()) {
            return Err(Error::TargetMismatch);
        }
        let z = k.target();
        let mut objects = Vec::with_capacity(self.carrier.object_count());
        for members in &self.object_classes {
            let img = k.ob(members[0]);
            if members.iter().any(|&m| k.ob(m) != img) {
                return Err(Error::LawViolation("functor does not identify the identified objects".into()));
            }
            objects.push(img);
        }
        let arrows = self
            .carrier
            .arrow_ids()
            .map(|e| {
                if self.carrier.is_identity(e) {
                    return Ok(z.id(objects[self.carrier.src(e).0]));
                }
                k.image_composite(&self.representatives[e.0])
                    .ok_or_else(|| Error::LawViolation("representative image is not composable".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let m = FinFunctor::new(self.carrier.clone(), z.clone(), objects, arrows)?;
        if self.functor.then(&m)? != *k {
            return Err(Error::LawViolation("functor does not factor through the quotient".into()));
        }
        Ok(m)
    }
}

/// Quotient of `y` by the congruence generated by the object pairs and the
/// word pairs; `NonTermination` when no bound up to `max_len` certifies.
pub fn quotient(
    y: &Arc<FinCat>,
    object_pairs: &[(ObjId, ObjId)],
    word_pairs: &[(Word, Word)],
    max_len: usize,
) -> Result<Quotient> {
    let alg = WordAlgebra::new(y, object_pairs);
    let mut trace = Vec::new();
    for len in 1..=max_len.max(1) {
        let Some(set) = WordSet::build(&alg, len, WORD_CAP) else {
            break;
        };
        let mut uf = UnionFind::new(set.words.len());
        let seeded = saturate(&alg, &set, word_pairs, &mut uf);
        let (classes, n) = uf.classes();
        trace.push(n);
        if !seeded {
            continue;
        }
        if let Some(q) = certify(&alg, &set, &classes, n, y, len) {
            let mut q = q?;
            q.trace = trace;
            return Ok(q);
        }
    }
    Err(Error::NonTermination { max_len, trace })
}

/// Merges the seed pairs and closes under single-letter extensions; false
/// when some seed does not fit the bound.
fn saturate(alg: &WordAlgebra, set: &WordSet, word_pairs: &[(Word, Word)], uf: &mut UnionFind) -> bool {
    let c = alg.cat;
    let seed = |w: &Word| {
        let k = alg.object_class[c.src(*w.first()?).0];
        set.lookup(alg, &alg.reduce(w.iter().copied()), k)
    };
    for (u, v) in word_pairs {
        match (seed(u), seed(v)) {
            (Some(i), Some(j)) => {
                uf.union(i, j);
            }
            _ => return false,
        }
    }
    let letters: Vec<ArrId> = c.non_identity_arrows().collect();
    // extend every word and its class root by the same letter until stable
    loop {
        let mut changed = false;
        for i in 0..set.words.len() {
            let r = uf.find(i);
            if r == i {
                continue;
            }
            let (si, di) = set.ends[i];
            for &a in &letters {
                let ka = alg.object_class[c.src(a).0];
                let kb = alg.object_class[c.dst(a).0];
                if ka == di {
                    let right = |w: &Word| {
                        let mut v = w.clone();
                        v.push(a);
                        set.lookup(alg, &v, si)
                    };
                    if let (Some(x), Some(z)) = (right(&set.words[i]), right(&set.words[r])) {
                        changed |= uf.union(x, z);
                    }
                }
                if kb == si {
                    let left = |w: &Word| {
                        let mut v = vec![a];
                        v.extend_from_slice(w);
                        set.lookup(alg, &v, ka)
                    };
                    if let (Some(x), Some(z)) = (left(&set.words[i]), left(&set.words[r])) {
                        changed |= uf.union(x, z);
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

fn certify(
    alg: &WordAlgebra,
    set: &WordSet,
    classes: &[usize],
    n: usize,
    y: &Arc<FinCat>,
    len: usize,
) -> Option<Result<Quotient>> {
    let c = alg.cat;
    // first word of each class is its shortest-lex representative
    let mut rep = vec![usize::MAX; n];
    for (i, &k) in classes.iter().enumerate() {
        if rep[k] == usize::MAX {
            rep[k] = i;
        }
    }
    let ends: Vec<(usize, usize)> = rep.iter().map(|&i| set.ends[i]).collect();
    let mut table: HashMap<(usize, usize), usize> = HashMap::new();
    for k1 in 0..n {
        for k2 in 0..n {
            if ends[k1].1 != ends[k2].0 {
                continue;
            }
            let mut w = set.words[rep[k1]].clone();
            w.extend_from_slice(&set.words[rep[k2]]);
            let i = set.lookup(alg, &w, ends[k1].0)?;
            table.insert((k2, k1), classes[i]);
        }
    }
    // every word folds through the table to its own class
    let letters: Vec<ArrId> = c.non_identity_arrows().collect();
    for (i, w) in set.words.iter().enumerate() {
        let (si, di) = set.ends[i];
        for &a in &letters {
            if alg.object_class[c.src(a).0] != di {
                continue;
            }
            let mut v = w.clone();
            v.push(a);
            if let Some(j) = set.lookup(alg, &v, si) {
                let la = set.lookup(alg, &vec![a], di)?;
                if table.get(&(classes[la], classes[i])) != Some(&classes[j]) {
                    return None;
                }
            }
        }
    }

    let mut object_classes = vec![Vec::new(); alg.object_classes];
    for x in y.objects() {
        object_classes[alg.object_class[x.0]].push(x);
    }
    let obj_names: Vec<String> = object_classes
        .iter()
        .map(|ms| ms.iter().map(|&m| y.object_name(m)).collect::<Vec<_>>().join("~"))
        .collect();
    let arrow_name = |w: &Word| {
        w.iter()
            .rev()
            .map(|&a| y.arrow_name(a))
            .collect::<Vec<_>>()
            .join(COMPOSE_SEP)
    };
    let keyed = FinCat::from_keyed(
        obj_names.iter().cloned().enumerate().collect(),
        (0..n)
            .map(|k| (k, arrow_name(&set.words[rep[k]]), ends[k].0, ends[k].1))
            .collect(),
        |&o| classes[o],
        |g, f| table.get(&(*g, *f)).copied(),
    );
    let keyed = match keyed {
        Ok(k) => k,
        Err(_) => return None,
    };
    let carrier = Arc::new(keyed.cat);
    let representatives: Vec<Word> = keyed.arr_keys.iter().map(|&k| set.words[rep[k]].clone()).collect();
    let obj_of = |x: ObjId| ObjId(alg.object_class[x.0]);
    let arr_of_letter = |a: ArrId| {
        let w = if c.is_identity(a) { Vec::new() } else { vec![a] };
        let i = set.lookup(alg, &w, alg.object_class[c.src(a).0]).expect("letters are words");
        keyed.arr_of[&classes[i]]
    };
    let functor = FinFunctor::new(
        y.clone(),
        carrier.clone(),
        y.objects().map(obj_of).collect(),
        y.arrow_ids().map(arr_of_letter).collect(),
    );
    Some(functor.map(|functor| Quotient {
        carrier,
        functor,
        object_classes,
        representatives,
        certified_at: len,
        trace: Vec::new(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn union_find_keeps_smallest_root() {
        let mut uf = UnionFind::new(4);
        uf.union(3, 1);
        uf.union(1, 2);
        assert_eq!(uf.find(2), 1);
        assert_eq!(uf.classes(), (vec![0, 1, 1, 1], 2));
    }

    #[test]
    fn reduce_composes_and_drops_identities() {
        let c = catalog::category("interval3").unwrap();
        let alg = WordAlgebra::new(&c, &[]);
        let (f01, f12, f02) = (
            c.arrow_by_name("f01").unwrap(),
            c.arrow_by_name("f12").unwrap(),
            c.arrow_by_name("f02").unwrap(),
        );
        let id1 = c.id(c.object_by_name("1").unwrap());
        assert_eq!(alg.reduce([f01, id1, f12]), vec![f02]);
    }

    #[test]
    fn trivial_quotient_is_the_category() {
        let c = catalog::category("poset2x2").unwrap();
        let q = quotient(&c, &[], &[], 4).unwrap();
        assert!(q.functor.is_isomorphism());
        assert_eq!(q.certified_at, 1);
    }

    #[test]
    fn identifying_endpoints_of_an_arrow_diverges() {
        let c = catalog::category("interval2").unwrap();
        let err = quotient(&c, &[(ObjId(0), ObjId(1))], &[], 5).unwrap_err();
        let Error::NonTermination { trace, .. } = err else {
            panic!("expected divergence")
        };
        assert_eq!(trace, vec![2, 3, 4, 5, 6]);
    }
}
