//! Does pulling back along `D` preserve a given coequalizer?

use super::coeq::coequalizer;
use crate::cat::{pullback, same_cat, FinFunctor};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreservationReport {
    pub preserved: bool,
    /// Objects and arrows of `D*(coeq(G, H))`.
    pub coeq_then_pullback: (usize, usize),
    /// Objects and arrows of `coeq(D*G, D*H)`.
    pub pullback_then_coeq: (usize, usize),
    /// First defect of the comparison functor, when it is not invertible.
    pub mismatch: Option<String>,
}

/// `D: C' → C`, a parallel pair `G, H: X ⇒ Y` and `P: Y → C` with `P∘G = P∘H`.
/// Compares `coeq(D*G, D*H)` with `D*(coeq(G, H))` through the canonical
/// comparison functor.
pub fn preservation_experiment(
    d: &FinFunctor,
    g: &FinFunctor,
    h: &FinFunctor,
    p: &FinFunctor,
    max_len: usize,
) -> Result<PreservationReport> {
    if !same_cat(p.source(), g.target()) || !same_cat(d.target(), p.target()) {
        return Err(Error::TargetMismatch);
    }
    let pg = g.then(p)?;
    if pg != h.then(p)? {
        return Err(Error::LawViolation("the pair does not lie over the base".into()));
    }

    let q = coequalizer(g, h, max_len)?;
    let pq = q.mediate(p)?;
    let over_q = pullback(d, &pq)?;

    let over_x = pullback(d, &pg)?;
    let over_y = pullback(d, p)?;
    let dg = over_y.mediate(&over_x.proj_left, &over_x.proj_right.then(g)?)?;
    let dh = over_y.mediate(&over_x.proj_left, &over_x.proj_right.then(h)?)?;
    let q2 = coequalizer(&dg, &dh, max_len)?;
    let dq = over_q.mediate(&over_y.proj_left, &over_y.proj_right.then(&q.functor)?)?;
    let cmp = q2.mediate(&dq)?;

    let (src, tgt) = (cmp.source(), cmp.target());
    let mut mismatch = None;
    let mut hit_obj = vec![false; tgt.object_count()];
    for x in src.objects() {
        hit_obj[cmp.ob(x).0] = true;
    }
    let mut hit_arr = vec![0usize; tgt.arrow_count()];
    for e in src.arrow_ids() {
        hit_arr[cmp.ar(e).0] += 1;
    }
    if let Some(x) = tgt.objects().find(|x| !hit_obj[x.0]) {
        mismatch = Some(format!("object `{}` has no preimage", tgt.object_name(x)));
    } else if let Some(e) = tgt.arrow_ids().find(|e| hit_arr[e.0] == 0) {
        mismatch = Some(format!(
            "arrow `{}` has no preimage: its factorization is not produced upstairs",
            tgt.arrow_name(e)
        ));
    } else if src.object_count() != tgt.object_count() {
        mismatch = Some("comparison identifies objects".into());
    } else if let Some(e) = tgt.arrow_ids().find(|e| hit_arr[e.0] > 1) {
        mismatch = Some(format!("arrow `{}` has several preimages", tgt.arrow_name(e)));
    }
    Ok(PreservationReport {
        preserved: mismatch.is_none() && cmp.is_isomorphism(),
        coeq_then_pullback: (tgt.object_count(), tgt.arrow_count()),
        pullback_then_coeq: (src.object_count(), src.arrow_count()),
        mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn quop_change_of_base_is_not_preserved() {
        let d = catalog::functor("quop_pick_w").unwrap();
        let (g, h, q) = (
            catalog::functor("quop_G").unwrap(),
            catalog::functor("quop_H").unwrap(),
            catalog::functor("quop_Q").unwrap(),
        );
        let r = preservation_experiment(&d, &g, &h, &q, 8).unwrap();
        assert!(!r.preserved);
        assert_eq!(r.coeq_then_pullback, (2, 3));
        assert_eq!(r.pullback_then_coeq, (2, 2));
        assert!(r.mismatch.unwrap().contains("no preimage"));
    }

    #[test]
    fn identity_change_of_base_is_preserved() {
        let (g, h, q) = (
            catalog::functor("quop_G").unwrap(),
            catalog::functor("quop_H").unwrap(),
            catalog::functor("quop_Q").unwrap(),
        );
        let d = FinFunctor::identity(q.target().clone());
        assert!(preservation_experiment(&d, &g, &h, &q, 8).unwrap().preserved);
    }

    #[test]
    fn codomain_change_of_base_is_preserved() {
        let d = catalog::functor("poset2x2_cod").unwrap();
        let (g, h, p) = (
            catalog::functor("pick_p0").unwrap(),
            catalog::functor("pick_p1").unwrap(),
            catalog::functor("two_points_over_a").unwrap(),
        );
        let r = preservation_experiment(&d, &g, &h, &p, 8).unwrap();
        assert!(r.preserved, "{r:?}");
    }
}
