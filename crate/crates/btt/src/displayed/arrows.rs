//! Codomain displayed structure: objects over a are 1-cells into a, 1-cells
//! over g are squares filled by an invertible 2-cell, 2-cells over θ are
//! 2-cells between the tops compatible with the fillers. The total is the
//! arrow bicategory with the codomain projection.

use super::{BaseObj, BaseOne, BaseTwo, DCell1, DCell2, DispBicat};
use crate::bicat::Bicat;

/// Square over a base 1-cell g: top 1-cell plus invertible filler
/// top . tgt-anchor ⇒ src-anchor . g.
pub struct ArrowCell<B: Bicat> {
    pub top: B::One,
    pub fill: B::Two,
}

impl<B: Bicat> Clone for ArrowCell<B> {
    fn clone(&self) -> Self {
        ArrowCell { top: self.top.clone(), fill: self.fill.clone() }
    }
}

impl<B: Bicat> PartialEq for ArrowCell<B> {
    fn eq(&self, other: &Self) -> bool {
        self.top == other.top && self.fill == other.fill
    }
}

impl<B: Bicat> std::fmt::Debug for ArrowCell<B> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ArrowCell").field("top", &self.top).field("fill", &self.fill).finish()
    }
}

pub struct ArrowsDisp<B: Bicat>(pub B);

impl<B: Bicat> DispBicat for ArrowsDisp<B> {
    type Base = B;
    type DObj = B::One;
    type DOne = ArrowCell<B>;
    type DTwo = B::Two;

    fn base(&self) -> &B {
        &self.0
    }

    fn is_dobj(&self, a: &BaseObj<Self>, h: &B::One) -> bool {
        self.0.contains_one(h) && self.0.one_tgt(h) == *a
    }

    fn is_done(&self, g: &BaseOne<Self>, h1: &B::One, h2: &B::One, fd: &ArrowCell<B>) -> bool {
        let b = &self.0;
        b.contains_one(&fd.top)
            && b.contains_two(&fd.fill)
            && b.one_src(&fd.top) == b.one_src(h1)
            && b.one_tgt(&fd.top) == b.one_src(h2)
            && b.two_src(&fd.fill) == b.comp1(&fd.top, h2)
            && b.two_tgt(&fd.fill) == b.comp1(h1, g)
            && b.invertible2(&fd.fill)
    }

    fn is_dtwo(&self, t: &BaseTwo<Self>, f: &DCell1<Self>, g: &DCell1<Self>, td: &B::Two)
        -> bool {
        let b = &self.0;
        if !b.contains_two(td)
            || b.two_src(td) != f.cell.top
            || b.two_tgt(td) != g.cell.top
        {
            return false;
        }
        let lhs = b.vcomp2(&f.cell.fill, &b.lwhisker(&f.src, t));
        let rhs = b.vcomp2(&b.rwhisker(td, &f.tgt), &g.cell.fill);
        lhs == rhs
    }

    fn did1(&self, _a: &BaseObj<Self>, h: &B::One) -> ArrowCell<B> {
        let b = &self.0;
        ArrowCell {
            top: b.id1(&b.one_src(h)),
            fill: b.vcomp2(&b.lunitor(h), &b.runitor_inv(h)),
        }
    }

    fn dcomp1(&self, f: &DCell1<Self>, g: &DCell1<Self>) -> ArrowCell<B> {
        let b = &self.0;
        let (tf, tg) = (&f.cell.top, &g.cell.top);
        let open = b.associator_inv(tf, tg, &g.tgt);
        let shift_right = b.lwhisker(tf, &g.cell.fill);
        let close = b.associator(tf, &f.tgt, &g.base);
        let shift_left = b.rwhisker(&f.cell.fill, &g.base);
        let reopen = b.associator_inv(&f.src, &f.base, &g.base);
        let fill = b.vcomp2(
            &b.vcomp2(&b.vcomp2(&b.vcomp2(&open, &shift_right), &close), &shift_left),
            &reopen,
        );
        ArrowCell { top: b.comp1(tf, tg), fill }
    }

    fn did2(&self, f: &DCell1<Self>) -> B::Two {
        self.0.id2(&f.cell.top)
    }

    fn dvcomp2(&self, t: &DCell2<Self>, u: &DCell2<Self>) -> B::Two {
        self.0.vcomp2(&t.cell, &u.cell)
    }

    fn dlwhisker(&self, f: &DCell1<Self>, t: &DCell2<Self>) -> B::Two {
        self.0.lwhisker(&f.cell.top, &t.cell)
    }

    fn drwhisker(&self, t: &DCell2<Self>, h: &DCell1<Self>) -> B::Two {
        self.0.rwhisker(&t.cell, &h.cell.top)
    }

    fn dlunitor(&self, f: &DCell1<Self>) -> B::Two {
        self.0.lunitor(&f.cell.top)
    }

    fn dlunitor_inv(&self, f: &DCell1<Self>) -> B::Two {
        self.0.lunitor_inv(&f.cell.top)
    }

    fn drunitor(&self, f: &DCell1<Self>) -> B::Two {
        self.0.runitor(&f.cell.top)
    }

    fn drunitor_inv(&self, f: &DCell1<Self>) -> B::Two {
        self.0.runitor_inv(&f.cell.top)
    }

    fn dassociator(&self, f: &DCell1<Self>, g: &DCell1<Self>, h: &DCell1<Self>) -> B::Two {
        self.0.associator(&f.cell.top, &g.cell.top, &h.cell.top)
    }

    fn dassociator_inv(&self, f: &DCell1<Self>, g: &DCell1<Self>, h: &DCell1<Self>) -> B::Two {
        self.0.associator_inv(&f.cell.top, &g.cell.top, &h.cell.top)
    }

    fn dinvertible2(&self, t: &DCell2<Self>) -> bool {
        self.0.invertible2(&t.cell)
    }

    fn d_ones_over(&self, g: &BaseOne<Self>, h1: &B::One, h2: &B::One) -> Vec<ArrowCell<B>> {
        let b = &self.0;
        let mut out = Vec::new();
        for top in b.ones_between(&b.one_src(h1), &b.one_src(h2)) {
            let near = b.comp1(&top, h2);
            let far = b.comp1(h1, g);
            for fill in b.twos_between(&near, &far) {
                if b.invertible2(&fill) {
                    out.push(ArrowCell { top: top.clone(), fill });
                }
            }
        }
        out
    }

    fn d_twos_over(&self, t: &BaseTwo<Self>, f: &DCell1<Self>, g: &DCell1<Self>)
        -> Vec<B::Two> {
        self.0
            .twos_between(&f.cell.top, &g.cell.top)
            .into_iter()
            .filter(|td| self.is_dtwo(t, f, g, td))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::{check_displayed_axioms, DispBicat, ProjectionPsf, TotalBicat};
    use super::*;
    use crate::bicat::{check_pseudofunctor, CatBicat, CellPool};
    use crate::fincat::{
        compose_functors, enumerate_functors, enumerate_nat_trans, fixtures, FinFunctor,
    };

    #[test]
    fn squares_counted_independently() {
        let d = ArrowsDisp(CatBicat);
        let terminal = fixtures::terminal();
        let z2 = fixtures::z2();
        let wa = fixtures::walking_arrow();
        let cases = [
            (
                FinFunctor::constant(&z2, &terminal, 0),
                FinFunctor::constant(&terminal, &z2, 0),
                FinFunctor::constant(&z2, &terminal, 0),
                1usize,
            ),
            (
                FinFunctor::identity(&wa),
                FinFunctor::identity(&wa),
                FinFunctor::identity(&wa),
                1usize,
            ),
        ];
        for (g, h1, h2, expected) in cases {
            let found = d.d_ones_over(&g, &h1, &h2);
            let mut direct = 0;
            for top in enumerate_functors(h1.dom(), h2.dom()) {
                let left = compose_functors(&top, &h2).unwrap();
                let right = compose_functors(&h1, &g).unwrap();
                direct += enumerate_nat_trans(&left, &right)
                    .into_iter()
                    .filter(|n| n.is_invertible())
                    .count();
            }
            assert_eq!(found.len(), direct);
            assert_eq!(found.len(), expected);
        }
    }

    fn total() -> TotalBicat<ArrowsDisp<CatBicat>> {
        TotalBicat(ArrowsDisp(CatBicat))
    }

    fn objects() -> Vec<(crate::fincat::FinCat, FinFunctor)> {
        let terminal = fixtures::terminal();
        let z2 = fixtures::z2();
        let wa = fixtures::walking_arrow();
        vec![
            (z2.clone(), FinFunctor::constant(&terminal, &z2, 0)),
            (wa.clone(), FinFunctor::identity(&wa)),
        ]
    }

    #[test]
    fn displayed_axioms_hold() {
        let t = total();
        let pool = CellPool::generate(&t, objects());
        assert_eq!(check_displayed_axioms(&t, &pool), Vec::new());
    }

    #[test]
    fn projection_is_a_pseudofunctor() {
        let t = total();
        let pool = CellPool::generate(&t, objects());
        assert_eq!(check_pseudofunctor(&t, &CatBicat, &ProjectionPsf(&t), &pool), Vec::new());
    }
}
