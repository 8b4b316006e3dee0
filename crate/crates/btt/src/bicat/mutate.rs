//! Mutation wrappers that break a single structural cell while keeping
//! every boundary intact. The law suites must flag each wrapper; the
//! self-test and acceptance suites use them to prove the checkers have
//! teeth.

use super::{Bicat, Pseudofunctor};

/// Replaces the associator by a parallel 2-cell different from the honest
/// one whenever the hom-set offers one; boundaries are unchanged, so every
/// pasting still typechecks and only the law suite can tell.
pub struct BrokenAssociator<B>(pub B);

impl<B: Bicat> Bicat for BrokenAssociator<B> {
    type Obj = B::Obj;
    type One = B::One;
    type Two = B::Two;

    fn contains_obj(&self, a: &Self::Obj) -> bool {
        self.0.contains_obj(a)
    }
    fn contains_one(&self, f: &Self::One) -> bool {
        self.0.contains_one(f)
    }
    fn contains_two(&self, t: &Self::Two) -> bool {
        self.0.contains_two(t)
    }
    fn one_src(&self, f: &Self::One) -> Self::Obj {
        self.0.one_src(f)
    }
    fn one_tgt(&self, f: &Self::One) -> Self::Obj {
        self.0.one_tgt(f)
    }
    fn two_src(&self, t: &Self::Two) -> Self::One {
        self.0.two_src(t)
    }
    fn two_tgt(&self, t: &Self::Two) -> Self::One {
        self.0.two_tgt(t)
    }
    fn id1(&self, a: &Self::Obj) -> Self::One {
        self.0.id1(a)
    }
    fn comp1(&self, f: &Self::One, g: &Self::One) -> Self::One {
        self.0.comp1(f, g)
    }
    fn id2(&self, f: &Self::One) -> Self::Two {
        self.0.id2(f)
    }
    fn vcomp2(&self, t: &Self::Two, u: &Self::Two) -> Self::Two {
        self.0.vcomp2(t, u)
    }
    fn lwhisker(&self, f: &Self::One, t: &Self::Two) -> Self::Two {
        self.0.lwhisker(f, t)
    }
    fn rwhisker(&self, t: &Self::Two, h: &Self::One) -> Self::Two {
        self.0.rwhisker(t, h)
    }
    fn lunitor(&self, f: &Self::One) -> Self::Two {
        self.0.lunitor(f)
    }
    fn lunitor_inv(&self, f: &Self::One) -> Self::Two {
        self.0.lunitor_inv(f)
    }
    fn runitor(&self, f: &Self::One) -> Self::Two {
        self.0.runitor(f)
    }
    fn runitor_inv(&self, f: &Self::One) -> Self::Two {
        self.0.runitor_inv(f)
    }
    fn associator(&self, f: &Self::One, g: &Self::One, h: &Self::One) -> Self::Two {
        let honest = self.0.associator(f, g, h);
        let src = self.0.two_src(&honest);
        let tgt = self.0.two_tgt(&honest);
        self.0
            .twos_between(&src, &tgt)
            .into_iter()
            .find(|t| *t != honest)
            .unwrap_or(honest)
    }
    fn associator_inv(&self, f: &Self::One, g: &Self::One, h: &Self::One) -> Self::Two {
        self.0.associator_inv(f, g, h)
    }
    fn ones_between(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::One> {
        self.0.ones_between(a, b)
    }
    fn twos_between(&self, f: &Self::One, g: &Self::One) -> Vec<Self::Two> {
        self.0.twos_between(f, g)
    }

    fn invertible2(&self, t: &Self::Two) -> bool {
        self.0.invertible2(t)
    }
}

/// Replaces a pseudofunctor's compositor the same way, leaving the listed
/// inverse honest, so invertibility and coherence both break.
pub struct BrokenCompositor<T, P> {
    pub inner: P,
    pub cod: T,
}

impl<S: Bicat, T: Bicat, P: Pseudofunctor<S, T>> Pseudofunctor<S, T> for BrokenCompositor<T, P> {
    fn on_obj(&self, a: &S::Obj) -> T::Obj {
        self.inner.on_obj(a)
    }
    fn on_one(&self, f: &S::One) -> T::One {
        self.inner.on_one(f)
    }
    fn on_two(&self, t: &S::Two) -> T::Two {
        self.inner.on_two(t)
    }
    fn identitor(&self, a: &S::Obj) -> T::Two {
        self.inner.identitor(a)
    }
    fn identitor_inv(&self, a: &S::Obj) -> T::Two {
        self.inner.identitor_inv(a)
    }
    fn compositor(&self, f: &S::One, g: &S::One) -> T::Two {
        let honest = self.inner.compositor(f, g);
        let src = self.cod.two_src(&honest);
        let tgt = self.cod.two_tgt(&honest);
        self.cod
            .twos_between(&src, &tgt)
            .into_iter()
            .find(|t| *t != honest)
            .unwrap_or(honest)
    }
    fn compositor_inv(&self, f: &S::One, g: &S::One) -> T::Two {
        self.inner.compositor_inv(f, g)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{check_bicat_axioms, check_pseudofunctor, CatBicat, CellPool, IdentityPsf};
    use super::*;
    use crate::fincat::fixtures;

    #[test]
    fn broken_associator_is_flagged() {
        let b = BrokenAssociator(CatBicat);
        let pool = CellPool::generate(&b, vec![fixtures::z2()]);
        let report = check_bicat_axioms(&b, &pool);
        assert!(report.iter().any(|v| v.law == "associator-invertible"));
        assert!(report.iter().any(|v| v.law == "triangle" || v.law == "pentagon"));
    }

    #[test]
    fn broken_compositor_is_flagged() {
        let p = BrokenCompositor { inner: IdentityPsf(CatBicat), cod: CatBicat };
        let pool = CellPool::generate(&CatBicat, vec![fixtures::z2()]);
        let report = check_pseudofunctor(&CatBicat, &CatBicat, &p, &pool);
        assert!(report.iter().any(|v| v.law == "psf-compositor-invertible"));
        assert!(report.iter().any(|v| v.law == "psf-hexagon" || v.law == "psf-lunitor"));
    }
}
