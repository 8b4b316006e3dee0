//! Sub-bicategory selection displayed over a base: predicates pick out
//! objects and 1-cells, all 2-cells between selected 1-cells come along,
//! and every displayed carrier is the unit type.

use super::{BaseObj, BaseOne, BaseTwo, DCell1, DCell2, DispBicat};
use crate::bicat::{Bicat, CellPool};

pub struct SubBicat<B: Bicat> {
    base_bicat: B,
    p0: Box<dyn Fn(&B::Obj) -> bool>,
    p1: Box<dyn Fn(&B::One) -> bool>,
}

impl<B: Bicat> std::fmt::Debug for SubBicat<B> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("SubBicat")
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum SubBicatError {
    #[error("selected object whose identity 1-cell is not selected: {witness}")]
    IdentityNotClosed { witness: String },
    #[error("selected composable 1-cells whose composite is not selected: {witness}")]
    CompositionNotClosed { witness: String },
}

/// Builds the selection after checking the 1-cell predicate is closed under
/// identities of selected objects and composition of selected cells, over
/// the given pool.
pub fn subbicat<B: Bicat>(
    base: B,
    p0: impl Fn(&B::Obj) -> bool + 'static,
    p1: impl Fn(&B::One) -> bool + 'static,
    pool: &CellPool<B>,
) -> Result<SubBicat<B>, SubBicatError> {
    for a in &pool.objects {
        if p0(a) && !p1(&base.id1(a)) {
            return Err(SubBicatError::IdentityNotClosed { witness: format!("{:?}", a) });
        }
    }
    for f in &pool.ones {
        if !p1(f) {
            continue;
        }
        for g in &pool.ones {
            if p1(g) && base.one_tgt(f) == base.one_src(g) && !p1(&base.comp1(f, g)) {
                return Err(SubBicatError::CompositionNotClosed {
                    witness: format!("{:?} then {:?}", f, g),
                });
            }
        }
    }
    Ok(SubBicat { base_bicat: base, p0: Box::new(p0), p1: Box::new(p1) })
}

impl<B: Bicat> DispBicat for SubBicat<B> {
    type Base = B;
    type DObj = ();
    type DOne = ();
    type DTwo = ();

    fn base(&self) -> &B {
        &self.base_bicat
    }

    fn is_dobj(&self, a: &BaseObj<Self>, _x: &()) -> bool {
        (self.p0)(a)
    }

    fn is_done(&self, f: &BaseOne<Self>, _x: &(), _y: &(), _fd: &()) -> bool {
        (self.p1)(f)
    }

    fn is_dtwo(&self, _t: &BaseTwo<Self>, _f: &DCell1<Self>, _g: &DCell1<Self>, _td: &())
        -> bool {
        true
    }

    fn did1(&self, _a: &BaseObj<Self>, _x: &()) {}

    fn dcomp1(&self, _f: &DCell1<Self>, _g: &DCell1<Self>) {}

    fn did2(&self, _f: &DCell1<Self>) {}

    fn dvcomp2(&self, _t: &DCell2<Self>, _u: &DCell2<Self>) {}

    fn dlwhisker(&self, _f: &DCell1<Self>, _t: &DCell2<Self>) {}

    fn drwhisker(&self, _t: &DCell2<Self>, _h: &DCell1<Self>) {}

    fn dlunitor(&self, _f: &DCell1<Self>) {}

    fn dlunitor_inv(&self, _f: &DCell1<Self>) {}

    fn drunitor(&self, _f: &DCell1<Self>) {}

    fn drunitor_inv(&self, _f: &DCell1<Self>) {}

    fn dassociator(&self, _f: &DCell1<Self>, _g: &DCell1<Self>, _h: &DCell1<Self>) {}

    fn dassociator_inv(&self, _f: &DCell1<Self>, _g: &DCell1<Self>, _h: &DCell1<Self>) {}

    fn dinvertible2(&self, _t: &DCell2<Self>) -> bool {
        true
    }

    fn d_ones_over(&self, f: &BaseOne<Self>, _x: &(), _y: &()) -> Vec<()> {
        if (self.p1)(f) {
            vec![()]
        } else {
            Vec::new()
        }
    }

    fn d_twos_over(&self, _t: &BaseTwo<Self>, _f: &DCell1<Self>, _g: &DCell1<Self>) -> Vec<()> {
        vec![()]
    }
}

#[cfg(test)]
mod tests {
    use super::super::{check_displayed_axioms, ProjectionPsf, TotalBicat};
    use super::*;
    use crate::bicat::{check_pseudofunctor, CatBicat, CellPool};
    use crate::fincat::{fixtures, FinFunctor};

    fn base_pool() -> CellPool<CatBicat> {
        CellPool::generate(
            &CatBicat,
            vec![fixtures::terminal(), fixtures::walking_arrow(), fixtures::z2()],
        )
    }

    #[test]
    fn full_selection_matches_the_base() {
        let sub = subbicat(CatBicat, |_| true, |_| true, &base_pool()).unwrap();
        let t = TotalBicat(sub);
        let b = CatBicat;
        let wa = fixtures::walking_arrow();
        let z2 = fixtures::z2();
        assert_eq!(
            t.ones_between(&(wa.clone(), ()), &(z2.clone(), ())).len(),
            b.ones_between(&wa, &z2).len()
        );
        assert_eq!(
            t.ones_between(&(wa.clone(), ()), &(wa.clone(), ())).len(),
            b.ones_between(&wa, &wa).len()
        );
        let pool = CellPool::generate(&t, vec![(fixtures::terminal(), ()), (wa, ())]);
        assert_eq!(check_displayed_axioms(&t, &pool), Vec::new());
        assert_eq!(check_pseudofunctor(&t, &CatBicat, &ProjectionPsf(&t), &pool), Vec::new());
    }

    #[test]
    fn single_object_full_selection() {
        let z2 = fixtures::z2();
        let picked = z2.clone();
        let sub = subbicat(CatBicat, move |a| *a == picked, |_| true, &base_pool()).unwrap();
        let t = TotalBicat(sub);
        assert!(t.contains_obj(&(z2.clone(), ())));
        assert!(!t.contains_obj(&(fixtures::terminal(), ())));
        assert_eq!(t.ones_between(&(z2.clone(), ()), &(z2.clone(), ())).len(), 2);
        let pool = CellPool::generate(&t, vec![(z2, ())]);
        assert_eq!(check_displayed_axioms(&t, &pool), Vec::new());
    }

    #[test]
    fn object_bijective_selection_is_closed_and_lawful() {
        let bijective_on_objects = |f: &FinFunctor| {
            let n = f.dom().n_objects();
            if f.cod().n_objects() != n {
                return false;
            }
            let mut seen = vec![false; n];
            for x in f.dom().objects() {
                seen[f.on_obj(x)] = true;
            }
            seen.into_iter().all(|s| s)
        };
        let sub = subbicat(CatBicat, |_| true, bijective_on_objects, &base_pool()).unwrap();
        let t = TotalBicat(sub);
        let pool = CellPool::generate(
            &t,
            vec![(fixtures::walking_arrow(), ()), (fixtures::z2(), ())],
        );
        assert_eq!(check_displayed_axioms(&t, &pool), Vec::new());
    }

    #[test]
    fn identity_closure_failure_is_reported() {
        let err = subbicat(CatBicat, |_| true, |f| !f.is_identity(), &base_pool()).unwrap_err();
        assert!(matches!(err, SubBicatError::IdentityNotClosed { .. }));
    }

    #[test]
    fn composition_closure_failure_is_reported() {
        let wa = fixtures::walking_arrow();
        let excluded = FinFunctor::constant(&wa, &wa, 0);
        let err = subbicat(CatBicat, |_| true, move |f| *f != excluded, &base_pool()).unwrap_err();
        assert!(matches!(err, SubBicatError::CompositionNotClosed { .. }));
    }
}
