//! The Conduché condition: connected, non-empty categories of factorizations.

use std::collections::VecDeque;

use rayon::prelude::*;

use super::words::UnionFind;
use crate::cat::{ArrId, FinCat, FinFunctor};
use crate::error::Result;

/// `Con(f, g₁, g₂)`: factorizations `f = f₂∘f₁` over `(g₁, g₂)` and the
/// vertical arrows `h` between their middle objects.
#[derive(Clone, Debug)]
pub struct ConCategory {
    pub f: ArrId,
    pub g1: ArrId,
    pub g2: ArrId,
    /// `(f₁, f₂)` per object.
    pub objects: Vec<(ArrId, ArrId)>,
    /// `(src, dst, h)` per arrow, identities included.
    pub arrows: Vec<(usize, usize, ArrId)>,
}

impl ConCategory {
    pub fn build(d: &FinFunctor, f: ArrId, g1: ArrId, g2: ArrId) -> Self {
        let (a, c) = (d.source(), d.target());
        let mut objects = Vec::new();
        for &f1 in a.arrows_out_of(a.src(f)) {
            if d.ar(f1) != g1 {
                continue;
            }
            for &f2 in a.hom(a.dst(f1), a.dst(f)) {
                if d.ar(f2) == g2 && a.compose(f2, f1) == f {
                    objects.push((f1, f2));
                }
            }
        }
        let mut arrows = Vec::new();
        for (i, &(f1, f2)) in objects.iter().enumerate() {
            for (j, &(f1b, f2b)) in objects.iter().enumerate() {
                for &h in a.hom(a.dst(f1), a.dst(f1b)) {
                    if c.is_identity(d.ar(h)) && a.compose(h, f1) == f1b && a.compose(f2b, h) == f2 {
                        arrows.push((i, j, h));
                    }
                }
            }
        }
        ConCategory {
            f,
            g1,
            g2,
            objects,
            arrows,
        }
    }

    /// The carrier as a category; composition is composition of the `h`.
    pub fn carrier(&self, d: &FinFunctor) -> Result<FinCat> {
        let a = d.source();
        let name = |&(f1, f2): &(ArrId, ArrId)| format!("({},{})", a.arrow_name(f1), a.arrow_name(f2));
        let keyed = FinCat::from_keyed(
            self.objects.iter().enumerate().map(|(i, o)| (i, name(o))).collect(),
            self.arrows
                .iter()
                .map(|&(i, j, h)| ((i, j, h), a.arrow_name(h).to_string(), i, j))
                .collect(),
            |&i| (i, i, a.id(a.dst(self.objects[i].0))),
            |&(j, k, h2), &(i, j2, h1)| (j == j2).then(|| (i, k, a.compose(h2, h1))),
        )?;
        Ok(keyed.cat)
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn connected_union_find(&self) -> bool {
        let mut uf = UnionFind::new(self.objects.len());
        for &(i, j, _) in &self.arrows {
            uf.union(i, j);
        }
        uf.classes().1 == 1
    }

    pub fn connected_bfs(&self) -> bool {
        let n = self.objects.len();
        if n == 0 {
            return false;
        }
        let mut adj = vec![Vec::new(); n];
        for &(i, j, _) in &self.arrows {
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count == n
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConFailure {
    Empty,
    Disconnected,
}

#[derive(Clone, Debug)]
pub struct ConducheReport {
    pub conduche: bool,
    /// Number of `(f, g₁, g₂)` examined.
    pub factorizations: usize,
    /// Union-find and BFS connectivity agreed on every Con category.
    pub connectivity_agrees: bool,
    pub failure: Option<(ConCategory, ConFailure)>,
}

/// Per source arrow: factorizations seen, connectivity agreement, first failure.
type ArrowVerdict = (usize, bool, Option<(ConCategory, ConFailure)>);

pub fn conduche_check(d: &FinFunctor) -> ConducheReport {
    let (a, c) = (d.source(), d.target());
    let per_arrow: Vec<ArrowVerdict> = a
        .arrow_ids()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|f| {
            let df = d.ar(f);
            let mut seen = 0;
            let mut agree = true;
            for &g1 in c.arrows_out_of(c.src(df)) {
                for &g2 in c.hom(c.dst(g1), c.dst(df)) {
                    if c.compose(g2, g1) != df {
                        continue;
                    }
                    seen += 1;
                    let con = ConCategory::build(d, f, g1, g2);
                    let (uf, bfs) = (con.connected_union_find(), con.connected_bfs());
                    agree &= uf == bfs;
                    if con.is_empty() {
                        return (seen, agree, Some((con, ConFailure::Empty)));
                    }
                    if !bfs {
                        return (seen, agree, Some((con, ConFailure::Disconnected)));
                    }
                }
            }
            (seen, agree, None)
        })
        .collect();
    let mut factorizations = 0;
    let mut connectivity_agrees = true;
    let mut failure = None;
    for (n, agree, fail) in per_arrow {
        factorizations += n;
        connectivity_agrees &= agree;
        if fail.is_some() {
            failure = fail;
            break;
        }
    }
    ConducheReport {
        conduche: failure.is_none(),
        factorizations,
        connectivity_agrees,
        failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn identities_are_conduche() {
        for name in ["id_1", "id_2", "id_3", "id_B", "id_chaotic2"] {
            let r = conduche_check(&catalog::functor(name).unwrap());
            assert!(r.conduche && r.connectivity_agrees, "{name}");
        }
    }

    #[test]
    fn composite_picking_functor_fails_with_empty_con() {
        let d = catalog::functor("nonconduche_D").unwrap();
        let r = conduche_check(&d);
        assert!(!r.conduche);
        let (con, why) = r.failure.unwrap();
        assert_eq!(why, ConFailure::Empty);
        let c = d.target();
        assert_eq!(c.arrow_name(con.g1), "f01");
        assert_eq!(c.arrow_name(con.g2), "f12");
        assert_eq!(con.carrier(&d).unwrap().object_count(), 0);
    }

    #[test]
    fn codomain_functor_is_conduche() {
        let r = conduche_check(&catalog::functor("poset2x2_cod").unwrap());
        assert!(r.conduche);
        assert!(r.factorizations > 0);
    }
}
