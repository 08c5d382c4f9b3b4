//! Coequalizers of parallel functors.

use super::words::{quotient, Quotient, Word};
use crate::cat::{same_cat, FinFunctor, ObjId};
use crate::error::{Error, Result};

/// Default word-length bound: twice the number of arrows of the target.
pub fn default_max_len(g: &FinFunctor) -> usize {
    2 * g.target().arrow_count()
}

/// The coequalizer `q: Y → Q` of `g, h: X ⇒ Y`.
pub fn coequalizer(g: &FinFunctor, h: &FinFunctor, max_len: usize) -> Result<Quotient> {
    if !same_cat(g.source(), h.source()) || !same_cat(g.target(), h.target()) {
        return Err(Error::ParallelismMismatch(
            "functors do not share source and target".into(),
        ));
    }
    let x = g.source();
    let objects: Vec<(ObjId, ObjId)> = x.objects().map(|o| (g.ob(o), h.ob(o))).collect();
    let words: Vec<(Word, Word)> = x
        .non_identity_arrows()
        .map(|a| (vec![g.ar(a)], vec![h.ar(a)]))
        .collect();
    quotient(g.target(), &objects, &words, max_len)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::cat::enumerate::find_isomorphism;

    #[test]
    fn equal_pair_gives_identity_quotient() {
        let g = catalog::functor("quop_G").unwrap();
        let q = coequalizer(&g, &g, default_max_len(&g)).unwrap();
        assert!(q.functor.is_isomorphism());
    }

    #[test]
    fn quop_pair_gives_the_bundled_quotient() {
        let g = catalog::functor("quop_G").unwrap();
        let h = catalog::functor("quop_H").unwrap();
        let q = coequalizer(&g, &h, default_max_len(&g)).unwrap();
        let a = catalog::category("quop_A").unwrap();
        assert!(find_isomorphism(&q.carrier, &a).is_some());
        assert!(q.carrier.arrow_by_name("v2.o.v1").is_some());
    }

    #[test]
    fn mismatched_pair_is_rejected() {
        let g = catalog::functor("quop_G").unwrap();
        let p = catalog::functor("point0").unwrap();
        assert!(matches!(coequalizer(&g, &p, 4), Err(Error::ParallelismMismatch(_))));
    }

    #[test]
    fn endpoint_identification_does_not_terminate() {
        let g = catalog::functor("point0").unwrap();
        let h = catalog::functor("point1").unwrap();
        let err = coequalizer(&g, &h, default_max_len(&g)).unwrap_err();
        let Error::NonTermination { max_len, trace } = err else {
            panic!("expected divergence");
        };
        assert_eq!(max_len, 6);
        assert!(trace.windows(2).all(|w| w[0] < w[1]));
    }
}
