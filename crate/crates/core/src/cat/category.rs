//! Finite categories stored as explicit object and arrow sets with a total
//! composition table.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};

/// Index of an object in a [`FinCat`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjId(pub usize);

/// Index of an arrow in a [`FinCat`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrId(pub usize);

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "o{}", self.0)
    }
}

impl fmt::Display for ArrId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{}", self.0)
    }
}

/// Separator used when naming composite arrows created by constructions.
pub const COMPOSE_SEP: &str = ".o.";

/// Reserved prefix of synthesized identity arrows.
pub const IDENTITY_PREFIX: &str = "id:";

pub fn identity_name(object: &str) -> String {
    format!("{IDENTITY_PREFIX}{object}")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: ObjId,
    pub dst: ObjId,
}

/// A finite category.
///
/// Arrows are ordered with the non-identity arrows first (in construction
/// order) followed by the identities in object order. Composition is stored
/// per arrow `g` as a row indexed by the position of `f` among the arrows
/// into `src(g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCat {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    identity: Vec<ArrId>,
    into: Vec<Vec<ArrId>>,
    out_of: Vec<Vec<ArrId>>,
    hom: Vec<Vec<ArrId>>,
    into_pos: Vec<usize>,
    table: Vec<Vec<ArrId>>,
    object_index: HashMap<String, ObjId>,
    arrow_index: HashMap<String, ArrId>,
}

impl FinCat {
    /// Builds a category from structured keys.
    ///
    /// `arrows` may or may not list identity keys; identities are always
    /// placed after the non-identity arrows and renamed `id:<object>`.
    /// `compose(g, f)` returns the key of `g ∘ f`, or `None` when the
    /// composite is missing. All category laws are checked.
    pub fn from_keyed<O, A>(
        objects: Vec<(O, String)>,
        arrows: Vec<(A, String, O, O)>,
        identity: impl Fn(&O) -> A,
        compose: impl Fn(&A, &A) -> Option<A>,
    ) -> Result<Keyed<O, A>>
    where
        O: Clone + Eq + Hash,
        A: Clone + Eq + Hash,
    {
        let mut obj_of: HashMap<O, ObjId> = HashMap::with_capacity(objects.len());
        let mut object_names = Vec::with_capacity(objects.len());
        let mut obj_keys = Vec::with_capacity(objects.len());
        for (key, name) in objects {
            if obj_of.insert(key.clone(), ObjId(object_names.len())).is_some() {
                return Err(Error::DuplicateId(name));
            }
            object_names.push(name);
            obj_keys.push(key);
        }
        let id_keys: Vec<A> = obj_keys.iter().map(&identity).collect();
        let id_lookup: HashMap<&A, ObjId> = id_keys
            .iter()
            .enumerate()
            .map(|(i, k)| (k, ObjId(i)))
            .collect();

        let mut arr_keys: Vec<A> = Vec::with_capacity(arrows.len() + obj_keys.len());
        let mut arr_list: Vec<Arrow> = Vec::with_capacity(arrows.len() + obj_keys.len());
        let mut seen: HashMap<A, ()> = HashMap::with_capacity(arrows.len());
        for (key, name, src, dst) in arrows {
            let src_id = *obj_of
                .get(&src)
                .ok_or_else(|| Error::DanglingEndpoint(format!("source of arrow `{name}`")))?;
            let dst_id = *obj_of
                .get(&dst)
                .ok_or_else(|| Error::DanglingEndpoint(format!("target of arrow `{name}`")))?;
            if let Some(&x) = id_lookup.get(&key) {
                if src_id != x || dst_id != x {
                    return Err(Error::LawViolation(format!(
                        "identity `{name}` does not have matching endpoints"
                    )));
                }
                seen.insert(key, ());
                continue;
            }
            if seen.insert(key.clone(), ()).is_some() {
                return Err(Error::DuplicateId(name));
            }
            arr_keys.push(key);
            arr_list.push(Arrow {
                name,
                src: src_id,
                dst: dst_id,
            });
        }
        let mut identity_ids = Vec::with_capacity(obj_keys.len());
        for (i, key) in id_keys.into_iter().enumerate() {
            identity_ids.push(ArrId(arr_list.len()));
            arr_list.push(Arrow {
                name: identity_name(&object_names[i]),
                src: ObjId(i),
                dst: ObjId(i),
            });
            arr_keys.push(key);
        }
        let arr_of: HashMap<A, ArrId> = arr_keys
            .iter()
            .enumerate()
            .map(|(i, k)| (k.clone(), ArrId(i)))
            .collect();

        let cat = FinCat::assemble(object_names, arr_list, identity_ids, |g, f| {
            let key = compose(&arr_keys[g.0], &arr_keys[f.0])?;
            arr_of.get(&key).copied()
        })?;
        Ok(Keyed {
            cat,
            obj_of,
            arr_of,
            obj_keys,
            arr_keys,
        })
    }

    /// Low-level constructor: fills the composition table from `compose` and
    /// validates closure, identity and associativity laws.
    fn assemble(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identity: Vec<ArrId>,
        compose: impl Fn(ArrId, ArrId) -> Option<ArrId>,
    ) -> Result<FinCat> {
        let n_obj = objects.len();
        let mut object_index = HashMap::with_capacity(n_obj);
        for (i, name) in objects.iter().enumerate() {
            if object_index.insert(name.clone(), ObjId(i)).is_some() {
                return Err(Error::DuplicateId(name.clone()));
            }
        }
        let mut arrow_index = HashMap::with_capacity(arrows.len());
        for (i, a) in arrows.iter().enumerate() {
            if arrow_index.insert(a.name.clone(), ArrId(i)).is_some() {
                return Err(Error::DuplicateId(a.name.clone()));
            }
        }
        let mut into = vec![Vec::new(); n_obj];
        let mut out_of = vec![Vec::new(); n_obj];
        let mut hom = vec![Vec::new(); n_obj * n_obj];
        let mut into_pos = vec![0; arrows.len()];
        for (i, a) in arrows.iter().enumerate() {
            into_pos[i] = into[a.dst.0].len();
            into[a.dst.0].push(ArrId(i));
            out_of[a.src.0].push(ArrId(i));
            hom[a.src.0 * n_obj + a.dst.0].push(ArrId(i));
        }
        let mut table = Vec::with_capacity(arrows.len());
        for (gi, g) in arrows.iter().enumerate() {
            let mut row = Vec::with_capacity(into[g.src.0].len());
            for &f in &into[g.src.0] {
                let h = compose(ArrId(gi), f).ok_or_else(|| Error::MissingComposite {
                    g: g.name.clone(),
                    f: arrows[f.0].name.clone(),
                })?;
                let ha = arrows.get(h.0).ok_or_else(|| {
                    Error::LawViolation(format!("composite of `{}` and `{}` is not listed", g.name, arrows[f.0].name))
                })?;
                if ha.src != arrows[f.0].src || ha.dst != g.dst {
                    return Err(Error::LawViolation(format!(
                        "composite `{}` of `{}` after `{}` has wrong endpoints",
                        ha.name, g.name, arrows[f.0].name
                    )));
                }
                row.push(h);
            }
            table.push(row);
        }
        let cat = FinCat {
            objects,
            arrows,
            identity,
            into,
            out_of,
            hom,
            into_pos,
            table,
            object_index,
            arrow_index,
        };
        cat.check_laws()?;
        Ok(cat)
    }

    /// Exhaustive check of the identity and associativity laws.
    pub fn check_laws(&self) -> Result<()> {
        for (x, &i) in self.identity.iter().enumerate() {
            let a = &self.arrows[i.0];
            if a.src.0 != x || a.dst.0 != x {
                return Err(Error::LawViolation(format!("identity of `{}` is not an endo", self.objects[x])));
            }
        }
        for f in self.arrow_ids() {
            let (s, t) = (self.src(f), self.dst(f));
            if self.compose(f, self.id(s)) != f || self.compose(self.id(t), f) != f {
                return Err(Error::LawViolation(format!(
                    "identity law fails at `{}`",
                    self.arrow_name(f)
                )));
            }
        }
        for f in self.arrow_ids() {
            for &g in &self.out_of[self.dst(f).0] {
                let gf = self.compose(g, f);
                for &h in &self.out_of[self.dst(g).0] {
                    if self.compose(h, gf) != self.compose(self.compose(h, g), f) {
                        return Err(Error::LawViolation(format!(
                            "associativity fails at ({}, {}, {})",
                            self.arrow_name(h),
                            self.arrow_name(g),
                            self.arrow_name(f)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn objects(&self) -> impl ExactSizeIterator<Item = ObjId> + Clone {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn arrow_ids(&self) -> impl ExactSizeIterator<Item = ArrId> + Clone {
        (0..self.arrows.len()).map(ArrId)
    }

    /// Non-identity arrows in canonical order.
    pub fn non_identity_arrows(&self) -> impl Iterator<Item = ArrId> + '_ {
        self.arrow_ids().filter(move |&a| !self.is_identity(a))
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x.0]
    }

    pub fn arrow_name(&self, f: ArrId) -> &str {
        &self.arrows[f.0].name
    }

    pub fn arrow(&self, f: ArrId) -> &Arrow {
        &self.arrows[f.0]
    }

    pub fn object_by_name(&self, name: &str) -> Option<ObjId> {
        self.object_index.get(name).copied()
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<ArrId> {
        self.arrow_index.get(name).copied()
    }

    pub fn src(&self, f: ArrId) -> ObjId {
        self.arrows[f.0].src
    }

    pub fn dst(&self, f: ArrId) -> ObjId {
        self.arrows[f.0].dst
    }

    pub fn id(&self, x: ObjId) -> ArrId {
        self.identity[x.0]
    }

    pub fn is_identity(&self, f: ArrId) -> bool {
        self.identity[self.src(f).0] == f
    }

    /// `g ∘ f`. Panics if the pair is not composable.
    pub fn compose(&self, g: ArrId, f: ArrId) -> ArrId {
        assert_eq!(
            self.dst(f),
            self.src(g),
            "compose: `{}` after `{}` is not composable",
            self.arrow_name(g),
            self.arrow_name(f)
        );
        self.table[g.0][self.into_pos[f.0]]
    }

    pub fn try_compose(&self, g: ArrId, f: ArrId) -> Option<ArrId> {
        (self.dst(f) == self.src(g)).then(|| self.table[g.0][self.into_pos[f.0]])
    }

    /// Composite of a path given in diagrammatic order `(f1, ..., fn)`.
    pub fn compose_path(&self, path: &[ArrId]) -> Option<ArrId> {
        let (&first, rest) = path.split_first()?;
        rest.iter().try_fold(first, |acc, &next| self.try_compose(next, acc))
    }

    pub fn hom(&self, x: ObjId, y: ObjId) -> &[ArrId] {
        &self.hom[x.0 * self.objects.len() + y.0]
    }

    pub fn arrows_into(&self, y: ObjId) -> &[ArrId] {
        &self.into[y.0]
    }

    pub fn arrows_out_of(&self, x: ObjId) -> &[ArrId] {
        &self.out_of[x.0]
    }

    /// Every composable pair `(g, f)` with `g ∘ f` defined.
    pub fn composable_pairs(&self) -> impl Iterator<Item = (ArrId, ArrId)> + '_ {
        self.arrow_ids()
            .flat_map(move |g| self.into[self.src(g).0].iter().map(move |&f| (g, f)))
    }

    /// The opposite category. Object and arrow names are kept.
    pub fn dual(&self) -> FinCat {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow {
                name: a.name.clone(),
                src: a.dst,
                dst: a.src,
            })
            .collect();
        FinCat::assemble(self.objects.clone(), arrows, self.identity.clone(), |g, f| {
            Some(self.compose(f, g))
        })
        .expect("dual of a valid category is valid")
    }

    /// All isomorphism pairs `(f, g)` with `f: x → y`, `g ∘ f = id_x` and
    /// `f ∘ g = id_y`.
    pub fn isomorphisms(&self, x: ObjId, y: ObjId) -> Vec<(ArrId, ArrId)> {
        let mut out = Vec::new();
        for &f in self.hom(x, y) {
            for &g in self.hom(y, x) {
                if self.compose(g, f) == self.id(x) && self.compose(f, g) == self.id(y) {
                    out.push((f, g));
                }
            }
        }
        out
    }

    pub fn inverse(&self, f: ArrId) -> Option<ArrId> {
        let (x, y) = (self.src(f), self.dst(f));
        self.hom(y, x)
            .iter()
            .copied()
            .find(|&g| self.compose(g, f) == self.id(x) && self.compose(f, g) == self.id(y))
    }

    /// Full subcategory on the given objects (kept in the given order).
    pub fn full_subcategory(&self, objects: &[ObjId]) -> Result<Keyed<ObjId, ArrId>> {
        let keep: std::collections::HashSet<ObjId> = objects.iter().copied().collect();
        let objs = objects
            .iter()
            .map(|&x| (x, self.object_name(x).to_string()))
            .collect();
        let arrows = self
            .non_identity_arrows()
            .filter(|&f| keep.contains(&self.src(f)) && keep.contains(&self.dst(f)))
            .map(|f| (f, self.arrow_name(f).to_string(), self.src(f), self.dst(f)))
            .collect();
        FinCat::from_keyed(objs, arrows, |&x| self.id(x), |&g, &f| self.try_compose(g, f))
    }
}

/// A category built from structured keys, together with the key maps.
#[derive(Clone, Debug)]
pub struct Keyed<O, A> {
    pub cat: FinCat,
    pub obj_of: HashMap<O, ObjId>,
    pub arr_of: HashMap<A, ArrId>,
    pub obj_keys: Vec<O>,
    pub arr_keys: Vec<A>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FinCat {
        let objects = (0..n).map(|i| (i, i.to_string())).collect();
        let mut arrows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                arrows.push(((i, j), format!("{i}{j}"), i, j));
            }
        }
        FinCat::from_keyed(objects, arrows, |&i| (i, i), |&(_, c), &(a, _)| Some((a, c)))
            .unwrap()
            .cat
    }

    #[test]
    fn chain_three_has_six_arrows() {
        let c = chain(3);
        assert_eq!(c.object_count(), 3);
        assert_eq!(c.arrow_count(), 6);
        assert!(c.is_identity(c.id(ObjId(1))));
        assert_eq!(c.arrow_name(c.id(ObjId(2))), "id:2");
        let f = c.arrow_by_name("01").unwrap();
        let g = c.arrow_by_name("12").unwrap();
        assert_eq!(c.arrow_name(c.compose(g, f)), "02");
        assert_eq!(c.compose_path(&[f, g]), c.arrow_by_name("02"));
    }

    #[test]
    fn identities_come_last() {
        let c = chain(2);
        assert_eq!(c.arrow_name(ArrId(0)), "01");
        assert_eq!(c.arrow_name(ArrId(1)), "id:0");
        assert_eq!(c.arrow_name(ArrId(2)), "id:1");
    }

    #[test]
    fn dual_reverses_arrows() {
        let c = chain(3);
        let d = c.dual();
        let f = d.arrow_by_name("01").unwrap();
        assert_eq!(d.src(f), ObjId(1));
        d.check_laws().unwrap();
        assert_eq!(d.dual(), c);
    }

    #[test]
    fn missing_composite_is_reported() {
        let objects = vec![(0, "0".into()), (1, "1".into()), (2, "2".into())];
        let arrows = vec![(10, "a".into(), 0, 1), (11, "b".into(), 1, 2)];
        let err = FinCat::from_keyed(
            objects,
            arrows,
            |&i| i + 100,
            |&g, &f| {
                if g >= 100 {
                    Some(f)
                } else if f >= 100 {
                    Some(g)
                } else {
                    None
                }
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::MissingComposite { .. }));
    }

    #[test]
    fn isomorphisms_in_a_chain_are_identities() {
        let c = chain(2);
        assert_eq!(c.isomorphisms(ObjId(0), ObjId(0)), vec![(c.id(ObjId(0)), c.id(ObjId(0)))]);
        assert!(c.isomorphisms(ObjId(0), ObjId(1)).is_empty());
    }
}
