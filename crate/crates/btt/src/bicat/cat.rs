//! The strict bicategory of finite categories, functors, and natural
//! transformations, and its restriction to groupoids. Unitors and
//! associators are materialized as identity 2-cells so generic law suites
//! and the interpreter treat strict and weak instances uniformly.

use super::Bicat;
use crate::fincat::{
    compose_functors, enumerate_functors, enumerate_nat_trans, validate_category,
    validate_functor, validate_nat_trans, vcomp, whisker_left, whisker_right, FinCat, FinFunctor,
    FinNatTrans,
};

/// Finite categories as 0-cells, functors as 1-cells, natural
/// transformations as 2-cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CatBicat;

impl Bicat for CatBicat {
    type Obj = FinCat;
    type One = FinFunctor;
    type Two = FinNatTrans;

    fn contains_obj(&self, a: &FinCat) -> bool {
        validate_category(&a.to_data()).is_empty()
    }
    fn contains_one(&self, f: &FinFunctor) -> bool {
        validate_functor(f.dom(), f.cod(), f.obj_map(), f.mor_map()).is_empty()
    }
    fn contains_two(&self, t: &FinNatTrans) -> bool {
        validate_nat_trans(t.src(), t.tgt(), t.components()).is_empty()
    }

    fn one_src(&self, f: &FinFunctor) -> FinCat {
        f.dom().clone()
    }
    fn one_tgt(&self, f: &FinFunctor) -> FinCat {
        f.cod().clone()
    }
    fn two_src(&self, t: &FinNatTrans) -> FinFunctor {
        t.src().clone()
    }
    fn two_tgt(&self, t: &FinNatTrans) -> FinFunctor {
        t.tgt().clone()
    }

    fn id1(&self, a: &FinCat) -> FinFunctor {
        FinFunctor::identity(a)
    }
    fn comp1(&self, f: &FinFunctor, g: &FinFunctor) -> FinFunctor {
        compose_functors(f, g).expect("composable 1-cells")
    }
    fn id2(&self, f: &FinFunctor) -> FinNatTrans {
        FinNatTrans::identity(f)
    }
    fn vcomp2(&self, t: &FinNatTrans, u: &FinNatTrans) -> FinNatTrans {
        vcomp(t, u).expect("composable 2-cells")
    }
    fn lwhisker(&self, f: &FinFunctor, t: &FinNatTrans) -> FinNatTrans {
        whisker_left(f, t).expect("whiskerable cells")
    }
    fn rwhisker(&self, t: &FinNatTrans, h: &FinFunctor) -> FinNatTrans {
        whisker_right(t, h).expect("whiskerable cells")
    }

    fn lunitor(&self, f: &FinFunctor) -> FinNatTrans {
        FinNatTrans::identity(f)
    }
    fn lunitor_inv(&self, f: &FinFunctor) -> FinNatTrans {
        FinNatTrans::identity(f)
    }
    fn runitor(&self, f: &FinFunctor) -> FinNatTrans {
        FinNatTrans::identity(f)
    }
    fn runitor_inv(&self, f: &FinFunctor) -> FinNatTrans {
        FinNatTrans::identity(f)
    }
    fn associator(&self, f: &FinFunctor, g: &FinFunctor, h: &FinFunctor) -> FinNatTrans {
        let fg = self.comp1(f, g);
        FinNatTrans::identity(&self.comp1(&fg, h))
    }
    fn associator_inv(&self, f: &FinFunctor, g: &FinFunctor, h: &FinFunctor) -> FinNatTrans {
        self.associator(f, g, h)
    }

    fn ones_between(&self, a: &FinCat, b: &FinCat) -> Vec<FinFunctor> {
        enumerate_functors(a, b)
    }
    fn twos_between(&self, f: &FinFunctor, g: &FinFunctor) -> Vec<FinNatTrans> {
        enumerate_nat_trans(f, g)
    }

    fn invertible2(&self, t: &FinNatTrans) -> bool {
        t.is_invertible()
    }
}

/// The same cells restricted to groupoid 0-cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GpdBicat;

impl Bicat for GpdBicat {
    type Obj = FinCat;
    type One = FinFunctor;
    type Two = FinNatTrans;

    fn contains_obj(&self, a: &FinCat) -> bool {
        CatBicat.contains_obj(a) && a.is_groupoid()
    }
    fn contains_one(&self, f: &FinFunctor) -> bool {
        CatBicat.contains_one(f) && f.dom().is_groupoid() && f.cod().is_groupoid()
    }
    fn contains_two(&self, t: &FinNatTrans) -> bool {
        CatBicat.contains_two(t) && t.src().dom().is_groupoid() && t.src().cod().is_groupoid()
    }

    fn one_src(&self, f: &FinFunctor) -> FinCat {
        CatBicat.one_src(f)
    }
    fn one_tgt(&self, f: &FinFunctor) -> FinCat {
        CatBicat.one_tgt(f)
    }
    fn two_src(&self, t: &FinNatTrans) -> FinFunctor {
        CatBicat.two_src(t)
    }
    fn two_tgt(&self, t: &FinNatTrans) -> FinFunctor {
        CatBicat.two_tgt(t)
    }
    fn id1(&self, a: &FinCat) -> FinFunctor {
        CatBicat.id1(a)
    }
    fn comp1(&self, f: &FinFunctor, g: &FinFunctor) -> FinFunctor {
        CatBicat.comp1(f, g)
    }
    fn id2(&self, f: &FinFunctor) -> FinNatTrans {
        CatBicat.id2(f)
    }
    fn vcomp2(&self, t: &FinNatTrans, u: &FinNatTrans) -> FinNatTrans {
        CatBicat.vcomp2(t, u)
    }
    fn lwhisker(&self, f: &FinFunctor, t: &FinNatTrans) -> FinNatTrans {
        CatBicat.lwhisker(f, t)
    }
    fn rwhisker(&self, t: &FinNatTrans, h: &FinFunctor) -> FinNatTrans {
        CatBicat.rwhisker(t, h)
    }
    fn lunitor(&self, f: &FinFunctor) -> FinNatTrans {
        CatBicat.lunitor(f)
    }
    fn lunitor_inv(&self, f: &FinFunctor) -> FinNatTrans {
        CatBicat.lunitor_inv(f)
    }
    fn runitor(&self, f: &FinFunctor) -> FinNatTrans {
        CatBicat.runitor(f)
    }
    fn runitor_inv(&self, f: &FinFunctor) -> FinNatTrans {
        CatBicat.runitor_inv(f)
    }
    fn associator(&self, f: &FinFunctor, g: &FinFunctor, h: &FinFunctor) -> FinNatTrans {
        CatBicat.associator(f, g, h)
    }
    fn associator_inv(&self, f: &FinFunctor, g: &FinFunctor, h: &FinFunctor) -> FinNatTrans {
        CatBicat.associator_inv(f, g, h)
    }
    fn ones_between(&self, a: &FinCat, b: &FinCat) -> Vec<FinFunctor> {
        CatBicat.ones_between(a, b)
    }
    fn twos_between(&self, f: &FinFunctor, g: &FinFunctor) -> Vec<FinNatTrans> {
        CatBicat.twos_between(f, g)
    }

    fn invertible2(&self, t: &FinNatTrans) -> bool {
        CatBicat.invertible2(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::fixtures;

    #[test]
    fn strict_structure_cells_are_identities() {
        let b = CatBicat;
        let wa = fixtures::walking_arrow();
        let z2 = fixtures::z2();
        for f in b.ones_between(&wa, &z2) {
            assert!(b.lunitor(&f).components().iter().enumerate().all(|(x, &c)| {
                c == f.cod().identity(f.on_obj(x))
            }));
            assert_eq!(b.lunitor(&f), b.id2(&f));
            assert_eq!(b.runitor(&f), b.id2(&f));
        }
    }

    #[test]
    fn groupoid_membership() {
        assert!(GpdBicat.contains_obj(&fixtures::z2()));
        assert!(GpdBicat.contains_obj(&fixtures::iso_pair()));
        assert!(!GpdBicat.contains_obj(&fixtures::walking_arrow()));
        assert!(CatBicat.contains_obj(&fixtures::walking_arrow()));
    }
}
