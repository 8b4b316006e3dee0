//! Trivial displayed structure: a second bicategory carried along unchanged,
//! so displayed cells ignore the base cell they lie over and the total is
//! the product of the two bicategories.

use super::{BaseObj, BaseOne, BaseTwo, DCell1, DCell2, DispBicat};
use crate::bicat::Bicat;

pub struct TrivialDisp<B1: Bicat, B2: Bicat> {
    pub base_bicat: B1,
    pub fiber: B2,
}

impl<B1: Bicat, B2: Bicat> TrivialDisp<B1, B2> {
    pub fn new(base_bicat: B1, fiber: B2) -> Self {
        TrivialDisp { base_bicat, fiber }
    }
}

impl<B1: Bicat, B2: Bicat> DispBicat for TrivialDisp<B1, B2> {
    type Base = B1;
    type DObj = B2::Obj;
    type DOne = B2::One;
    type DTwo = B2::Two;

    fn base(&self) -> &B1 {
        &self.base_bicat
    }

    fn is_dobj(&self, _a: &BaseObj<Self>, x: &B2::Obj) -> bool {
        self.fiber.contains_obj(x)
    }

    fn is_done(&self, _f: &BaseOne<Self>, x: &B2::Obj, y: &B2::Obj, fd: &B2::One) -> bool {
        self.fiber.contains_one(fd)
            && self.fiber.one_src(fd) == *x
            && self.fiber.one_tgt(fd) == *y
    }

    fn is_dtwo(
        &self,
        _t: &BaseTwo<Self>,
        f: &DCell1<Self>,
        g: &DCell1<Self>,
        td: &B2::Two,
    ) -> bool {
        self.fiber.contains_two(td)
            && self.fiber.two_src(td) == f.cell
            && self.fiber.two_tgt(td) == g.cell
    }

    fn did1(&self, _a: &BaseObj<Self>, x: &B2::Obj) -> B2::One {
        self.fiber.id1(x)
    }

    fn dcomp1(&self, f: &DCell1<Self>, g: &DCell1<Self>) -> B2::One {
        self.fiber.comp1(&f.cell, &g.cell)
    }

    fn did2(&self, f: &DCell1<Self>) -> B2::Two {
        self.fiber.id2(&f.cell)
    }

    fn dvcomp2(&self, t: &DCell2<Self>, u: &DCell2<Self>) -> B2::Two {
        self.fiber.vcomp2(&t.cell, &u.cell)
    }

    fn dlwhisker(&self, f: &DCell1<Self>, t: &DCell2<Self>) -> B2::Two {
        self.fiber.lwhisker(&f.cell, &t.cell)
    }

    fn drwhisker(&self, t: &DCell2<Self>, h: &DCell1<Self>) -> B2::Two {
        self.fiber.rwhisker(&t.cell, &h.cell)
    }

    fn dlunitor(&self, f: &DCell1<Self>) -> B2::Two {
        self.fiber.lunitor(&f.cell)
    }

    fn dlunitor_inv(&self, f: &DCell1<Self>) -> B2::Two {
        self.fiber.lunitor_inv(&f.cell)
    }

    fn drunitor(&self, f: &DCell1<Self>) -> B2::Two {
        self.fiber.runitor(&f.cell)
    }

    fn drunitor_inv(&self, f: &DCell1<Self>) -> B2::Two {
        self.fiber.runitor_inv(&f.cell)
    }

    fn dassociator(&self, f: &DCell1<Self>, g: &DCell1<Self>, h: &DCell1<Self>) -> B2::Two {
        self.fiber.associator(&f.cell, &g.cell, &h.cell)
    }

    fn dassociator_inv(&self, f: &DCell1<Self>, g: &DCell1<Self>, h: &DCell1<Self>) -> B2::Two {
        self.fiber.associator_inv(&f.cell, &g.cell, &h.cell)
    }

    fn dinvertible2(&self, t: &DCell2<Self>) -> bool {
        self.fiber.invertible2(&t.cell)
    }

    fn d_ones_over(&self, _f: &BaseOne<Self>, x: &B2::Obj, y: &B2::Obj) -> Vec<B2::One> {
        self.fiber.ones_between(x, y)
    }

    fn d_twos_over(
        &self,
        _t: &BaseTwo<Self>,
        f: &DCell1<Self>,
        g: &DCell1<Self>,
    ) -> Vec<B2::Two> {
        self.fiber.twos_between(&f.cell, &g.cell)
    }

    /// When the fiber part is an identity 1-cell, factor by reusing the
    /// candidate's own fiber cell and closing with the fiber runitor.
    fn closed_lift(
        &self,
        f: &DCell1<Self>,
        _h: &BaseOne<Self>,
        g: &DCell1<Self>,
    ) -> Option<(B2::One, B2::Two)> {
        if f.cell != self.fiber.id1(&f.src) {
            return None;
        }
        Some((g.cell.clone(), self.fiber.runitor(&g.cell)))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{check_displayed_axioms, ProjectionPsf, TotalBicat};
    use super::*;
    use crate::bicat::{check_pseudofunctor, CatBicat, CellPool};
    use crate::fincat::fixtures;

    fn total() -> TotalBicat<TrivialDisp<CatBicat, CatBicat>> {
        TotalBicat(TrivialDisp::new(CatBicat, CatBicat))
    }

    #[test]
    fn total_is_the_product_cellwise() {
        let t = total();
        let b = CatBicat;
        let pairs = [
            (fixtures::terminal(), fixtures::z2()),
            (fixtures::walking_arrow(), fixtures::terminal()),
            (fixtures::walking_arrow(), fixtures::walking_arrow()),
        ];
        for (a1, x1) in &pairs {
            for (a2, x2) in &pairs {
                let total_ones = t.ones_between(&(a1.clone(), x1.clone()), &(a2.clone(), x2.clone()));
                let base_ones = b.ones_between(a1, a2);
                let fiber_ones = b.ones_between(x1, x2);
                assert_eq!(total_ones.len(), base_ones.len() * fiber_ones.len());
                for f in &total_ones {
                    for g in &total_ones {
                        let total_twos = t.twos_between(f, g).len();
                        let base_twos = b.twos_between(&f.base, &g.base).len();
                        let fiber_twos = b.twos_between(&f.cell, &g.cell).len();
                        assert_eq!(total_twos, base_twos * fiber_twos);
                    }
                }
            }
        }
    }

    #[test]
    fn displayed_axioms_hold() {
        let t = total();
        let objects = vec![
            (fixtures::terminal(), fixtures::z2()),
            (fixtures::walking_arrow(), fixtures::terminal()),
        ];
        let pool = CellPool::generate(&t, objects);
        assert_eq!(check_displayed_axioms(&t, &pool), Vec::new());
    }

    #[test]
    fn projection_is_a_pseudofunctor() {
        let t = total();
        let objects = vec![
            (fixtures::terminal(), fixtures::z2()),
            (fixtures::walking_arrow(), fixtures::terminal()),
        ];
        let pool = CellPool::generate(&t, objects);
        assert_eq!(check_pseudofunctor(&t, &CatBicat, &ProjectionPsf(&t), &pool), Vec::new());
    }
}
