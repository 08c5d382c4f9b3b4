use std::sync::Arc;

use super::category::{ArrId, FinCat, ObjId};
use crate::error::{Error, Result};

/// On-the-nose equality of categories, with a pointer fast path.
pub fn same_cat(a: &Arc<FinCat>, b: &Arc<FinCat>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A functor between finite categories, stored as object and arrow maps.
#[derive(Clone, Debug)]
pub struct FinFunctor {
    source: Arc<FinCat>,
    target: Arc<FinCat>,
    objects: Vec<ObjId>,
    arrows: Vec<ArrId>,
}

impl PartialEq for FinFunctor {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.arrows == other.arrows
            && same_cat(&self.source, &other.source)
            && same_cat(&self.target, &other.target)
    }
}

impl Eq for FinFunctor {}

impl FinFunctor {
    /// Builds a functor and checks every functor law exhaustively.
    pub fn new(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        objects: Vec<ObjId>,
        arrows: Vec<ArrId>,
    ) -> Result<Self> {
        let f = Self::new_unchecked(source, target, objects, arrows);
        f.check_laws()?;
        Ok(f)
    }

    /// Builds a functor whose laws are guaranteed by construction.
    pub(crate) fn new_unchecked(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        objects: Vec<ObjId>,
        arrows: Vec<ArrId>,
    ) -> Self {
        debug_assert_eq!(objects.len(), source.object_count());
        debug_assert_eq!(arrows.len(), source.arrow_count());
        FinFunctor {
            source,
            target,
            objects,
            arrows,
        }
    }

    pub fn identity(c: Arc<FinCat>) -> Self {
        let objects = c.objects().collect();
        let arrows = c.arrow_ids().collect();
        Self::new_unchecked(c.clone(), c, objects, arrows)
    }

    /// The functor out of the terminal-shaped source picking `x`.
    pub fn constant(source: Arc<FinCat>, target: Arc<FinCat>, x: ObjId) -> Self {
        let objects = vec![x; source.object_count()];
        let arrows = vec![target.id(x); source.arrow_count()];
        Self::new_unchecked(source, target, objects, arrows)
    }

    pub fn check_laws(&self) -> Result<()> {
        let (s, t) = (&*self.source, &*self.target);
        if self.objects.len() != s.object_count() || self.arrows.len() != s.arrow_count() {
            return Err(Error::LawViolation("functor maps have the wrong size".into()));
        }
        if self.objects.iter().any(|x| x.0 >= t.object_count())
            || self.arrows.iter().any(|f| f.0 >= t.arrow_count())
        {
            return Err(Error::LawViolation("functor image out of range".into()));
        }
        for f in s.arrow_ids() {
            let img = self.ar(f);
            if t.src(img) != self.ob(s.src(f)) || t.dst(img) != self.ob(s.dst(f)) {
                return Err(Error::LawViolation(format!(
                    "functor does not preserve the endpoints of `{}`",
                    s.arrow_name(f)
                )));
            }
        }
        for x in s.objects() {
            if self.ar(s.id(x)) != t.id(self.ob(x)) {
                return Err(Error::LawViolation(format!(
                    "functor does not preserve the identity of `{}`",
                    s.object_name(x)
                )));
            }
        }
        for (g, f) in s.composable_pairs() {
            if self.ar(s.compose(g, f)) != t.compose(self.ar(g), self.ar(f)) {
                return Err(Error::LawViolation(format!(
                    "functor does not preserve the composite of `{}` after `{}`",
                    s.arrow_name(g),
                    s.arrow_name(f)
                )));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Arc<FinCat> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCat> {
        &self.target
    }

    pub fn ob(&self, x: ObjId) -> ObjId {
        self.objects[x.0]
    }

    pub fn ar(&self, f: ArrId) -> ArrId {
        self.arrows[f.0]
    }

    pub fn object_map(&self) -> &[ObjId] {
        &self.objects
    }

    pub fn arrow_map(&self) -> &[ArrId] {
        &self.arrows
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &FinFunctor) -> Result<FinFunctor> {
        if !same_cat(&self.target, &next.source) {
            return Err(Error::LawViolation("functors are not composable".into()));
        }
        Ok(Self::new_unchecked(
            self.source.clone(),
            next.target.clone(),
            self.objects.iter().map(|&x| next.ob(x)).collect(),
            self.arrows.iter().map(|&f| next.ar(f)).collect(),
        ))
    }

    pub fn is_identity(&self) -> bool {
        same_cat(&self.source, &self.target)
            && self.objects.iter().enumerate().all(|(i, x)| x.0 == i)
            && self.arrows.iter().enumerate().all(|(i, f)| f.0 == i)
    }

    pub fn is_injective_on_arrows(&self) -> bool {
        let mut seen = vec![false; self.target.arrow_count()];
        self.arrows.iter().all(|f| !std::mem::replace(&mut seen[f.0], true))
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.object_count() == self.target.object_count()
            && self.source.arrow_count() == self.target.arrow_count()
            && self.is_injective_on_arrows()
    }

    /// Composite image `F(fn) ∘ … ∘ F(f1)` of a list that is composable after
    /// applying the functor.
    pub fn image_composite(&self, path: &[ArrId]) -> Option<ArrId> {
        let (&first, rest) = path.split_first()?;
        rest.iter()
            .try_fold(self.ar(first), |acc, &next| self.target.try_compose(self.ar(next), acc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn identity_functor_is_valid() {
        let two = catalog::category("interval2").unwrap();
        let id = FinFunctor::identity(two.clone());
        id.check_laws().unwrap();
        assert!(id.is_identity());
        assert!(id.is_isomorphism());
    }

    #[test]
    fn endpoint_mismatch_is_rejected() {
        let three = catalog::category("interval3").unwrap();
        let f01 = three.arrow_by_name("f01").unwrap();
        let f02 = three.arrow_by_name("f02").unwrap();
        let mut arrows: Vec<ArrId> = three.arrow_ids().collect();
        arrows[f02.0] = f01;
        let objects = three.objects().collect();
        let err = FinFunctor::new(three.clone(), three, objects, arrows).unwrap_err();
        assert!(matches!(err, Error::LawViolation(_)));
    }
}
