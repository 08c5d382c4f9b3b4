use super::category::{ArrId, ObjId};
use super::functor::{same_cat, FinFunctor};
use crate::error::{Error, Result};

/// A natural transformation between parallel functors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTrans {
    source: FinFunctor,
    target: FinFunctor,
    components: Vec<ArrId>,
}

impl NatTrans {
    pub fn new(source: FinFunctor, target: FinFunctor, components: Vec<ArrId>) -> Result<Self> {
        if !same_cat(source.source(), target.source()) || !same_cat(source.target(), target.target()) {
            return Err(Error::ParallelismMismatch("natural transformation endpoints".into()));
        }
        let t = NatTrans {
            source,
            target,
            components,
        };
        t.check_laws()?;
        Ok(t)
    }

    pub fn identity(f: FinFunctor) -> Self {
        let c = f.target().clone();
        let components = f.source().objects().map(|x| c.id(f.ob(x))).collect();
        NatTrans {
            source: f.clone(),
            target: f,
            components,
        }
    }

    pub fn check_laws(&self) -> Result<()> {
        let dom = self.source.source();
        let cod = self.source.target();
        if self.components.len() != dom.object_count() {
            return Err(Error::LawViolation("wrong number of components".into()));
        }
        for x in dom.objects() {
            let c = self.component(x);
            if c.0 >= cod.arrow_count()
                || cod.src(c) != self.source.ob(x)
                || cod.dst(c) != self.target.ob(x)
            {
                return Err(Error::LawViolation(format!(
                    "component at `{}` has the wrong type",
                    dom.object_name(x)
                )));
            }
        }
        for f in dom.arrow_ids() {
            let (x, y) = (dom.src(f), dom.dst(f));
            let lhs = cod.compose(self.target.ar(f), self.component(x));
            let rhs = cod.compose(self.component(y), self.source.ar(f));
            if lhs != rhs {
                return Err(Error::LawViolation(format!(
                    "naturality fails at `{}`",
                    dom.arrow_name(f)
                )));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &FinFunctor {
        &self.source
    }

    pub fn target(&self) -> &FinFunctor {
        &self.target
    }

    pub fn component(&self, x: ObjId) -> ArrId {
        self.components[x.0]
    }

    pub fn components(&self) -> &[ArrId] {
        &self.components
    }

    /// Whether every component is sent to an identity by `p`.
    pub fn is_vertical(&self, p: &FinFunctor) -> bool {
        self.components.iter().all(|&c| p.target().is_identity(p.ar(c)))
    }

    pub fn is_invertible(&self) -> bool {
        let c = self.source.target();
        self.components.iter().all(|&a| c.inverse(a).is_some())
    }
}
