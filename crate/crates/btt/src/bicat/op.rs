//! Dual bicategories: `OpBicat` reverses 1-cells, `CoBicat` reverses
//! 2-cells. Cells are carried unchanged; only the operations reindex them,
//! so applying a dual twice gives definitionally identical tables.

use super::Bicat;

/// 1-cell dual: a 1-cell from a to b is a 1-cell from b to a underneath.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OpBicat<B>(pub B);

pub fn op_bicat<B: Bicat>(b: B) -> OpBicat<B> {
    OpBicat(b)
}

impl<B: Bicat> Bicat for OpBicat<B> {
    type Obj = B::Obj;
    type One = B::One;
    type Two = B::Two;

    fn contains_obj(&self, a: &B::Obj) -> bool {
        self.0.contains_obj(a)
    }
    fn contains_one(&self, f: &B::One) -> bool {
        self.0.contains_one(f)
    }
    fn contains_two(&self, t: &B::Two) -> bool {
        self.0.contains_two(t)
    }

    fn one_src(&self, f: &B::One) -> B::Obj {
        self.0.one_tgt(f)
    }
    fn one_tgt(&self, f: &B::One) -> B::Obj {
        self.0.one_src(f)
    }
    fn two_src(&self, t: &B::Two) -> B::One {
        self.0.two_src(t)
    }
    fn two_tgt(&self, t: &B::Two) -> B::One {
        self.0.two_tgt(t)
    }

    fn id1(&self, a: &B::Obj) -> B::One {
        self.0.id1(a)
    }
    fn comp1(&self, f: &B::One, g: &B::One) -> B::One {
        self.0.comp1(g, f)
    }
    fn id2(&self, f: &B::One) -> B::Two {
        self.0.id2(f)
    }
    fn vcomp2(&self, t: &B::Two, u: &B::Two) -> B::Two {
        self.0.vcomp2(t, u)
    }
    fn lwhisker(&self, f: &B::One, t: &B::Two) -> B::Two {
        self.0.rwhisker(t, f)
    }
    fn rwhisker(&self, t: &B::Two, h: &B::One) -> B::Two {
        self.0.lwhisker(h, t)
    }

    fn lunitor(&self, f: &B::One) -> B::Two {
        self.0.runitor(f)
    }
    fn lunitor_inv(&self, f: &B::One) -> B::Two {
        self.0.runitor_inv(f)
    }
    fn runitor(&self, f: &B::One) -> B::Two {
        self.0.lunitor(f)
    }
    fn runitor_inv(&self, f: &B::One) -> B::Two {
        self.0.lunitor_inv(f)
    }
    fn associator(&self, f: &B::One, g: &B::One, h: &B::One) -> B::Two {
        self.0.associator_inv(h, g, f)
    }
    fn associator_inv(&self, f: &B::One, g: &B::One, h: &B::One) -> B::Two {
        self.0.associator(h, g, f)
    }

    fn ones_between(&self, a: &B::Obj, b: &B::Obj) -> Vec<B::One> {
        self.0.ones_between(b, a)
    }
    fn twos_between(&self, f: &B::One, g: &B::One) -> Vec<B::Two> {
        self.0.twos_between(f, g)
    }

    fn invertible2(&self, t: &B::Two) -> bool {
        self.0.invertible2(t)
    }
}

/// 2-cell dual: a 2-cell from f to g is a 2-cell from g to f underneath.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoBicat<B>(pub B);

pub fn co_bicat<B: Bicat>(b: B) -> CoBicat<B> {
    CoBicat(b)
}

impl<B: Bicat> Bicat for CoBicat<B> {
    type Obj = B::Obj;
    type One = B::One;
    type Two = B::Two;

    fn contains_obj(&self, a: &B::Obj) -> bool {
        self.0.contains_obj(a)
    }
    fn contains_one(&self, f: &B::One) -> bool {
        self.0.contains_one(f)
    }
    fn contains_two(&self, t: &B::Two) -> bool {
        self.0.contains_two(t)
    }

    fn one_src(&self, f: &B::One) -> B::Obj {
        self.0.one_src(f)
    }
    fn one_tgt(&self, f: &B::One) -> B::Obj {
        self.0.one_tgt(f)
    }
    fn two_src(&self, t: &B::Two) -> B::One {
        self.0.two_tgt(t)
    }
    fn two_tgt(&self, t: &B::Two) -> B::One {
        self.0.two_src(t)
    }

    fn id1(&self, a: &B::Obj) -> B::One {
        self.0.id1(a)
    }
    fn comp1(&self, f: &B::One, g: &B::One) -> B::One {
        self.0.comp1(f, g)
    }
    fn id2(&self, f: &B::One) -> B::Two {
        self.0.id2(f)
    }
    fn vcomp2(&self, t: &B::Two, u: &B::Two) -> B::Two {
        self.0.vcomp2(u, t)
    }
    fn lwhisker(&self, f: &B::One, t: &B::Two) -> B::Two {
        self.0.lwhisker(f, t)
    }
    fn rwhisker(&self, t: &B::Two, h: &B::One) -> B::Two {
        self.0.rwhisker(t, h)
    }

    fn lunitor(&self, f: &B::One) -> B::Two {
        self.0.lunitor_inv(f)
    }
    fn lunitor_inv(&self, f: &B::One) -> B::Two {
        self.0.lunitor(f)
    }
    fn runitor(&self, f: &B::One) -> B::Two {
        self.0.runitor_inv(f)
    }
    fn runitor_inv(&self, f: &B::One) -> B::Two {
        self.0.runitor(f)
    }
    fn associator(&self, f: &B::One, g: &B::One, h: &B::One) -> B::Two {
        self.0.associator_inv(f, g, h)
    }
    fn associator_inv(&self, f: &B::One, g: &B::One, h: &B::One) -> B::Two {
        self.0.associator(f, g, h)
    }

    fn ones_between(&self, a: &B::Obj, b: &B::Obj) -> Vec<B::One> {
        self.0.ones_between(a, b)
    }
    fn twos_between(&self, f: &B::One, g: &B::One) -> Vec<B::Two> {
        self.0.twos_between(g, f)
    }

    fn invertible2(&self, t: &B::Two) -> bool {
        self.0.invertible2(t)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{hom_category, CatBicat};
    use super::*;
    use crate::fincat::{fixtures, opposite_category};

    #[test]
    fn op_twice_has_identical_tables() {
        let b = CatBicat;
        let opop = op_bicat(op_bicat(CatBicat));
        let wa = fixtures::walking_arrow();
        let z2 = fixtures::z2();
        for f in b.ones_between(&wa, &z2) {
            for g in b.ones_between(&z2, &z2) {
                assert_eq!(b.comp1(&f, &g), opop.comp1(&f, &g));
                for t in b.twos_between(&f, &f) {
                    let e = b.id1(&wa);
                    assert_eq!(b.lwhisker(&e, &t), opop.lwhisker(&e, &t));
                    assert_eq!(b.two_src(&t), opop.two_src(&t));
                    assert_eq!(b.one_src(&f), opop.one_src(&f));
                }
            }
        }
        assert_eq!(
            b.associator(
                &b.id1(&wa),
                &b.ones_between(&wa, &z2)[0],
                &b.id1(&z2)
            ),
            opop.associator(
                &b.id1(&wa),
                &b.ones_between(&wa, &z2)[0],
                &b.id1(&z2)
            )
        );
    }

    #[test]
    fn op_reverses_one_cells_only() {
        let b = CatBicat;
        let o = op_bicat(CatBicat);
        let wa = fixtures::walking_arrow();
        let t = fixtures::terminal();
        let bang = crate::fincat::FinFunctor::constant(&wa, &t, 0);
        assert_eq!(o.one_src(&bang), t);
        assert_eq!(o.one_tgt(&bang), wa);
        let id2 = b.id2(&bang);
        assert_eq!(o.two_src(&id2), b.two_src(&id2));
    }

    #[test]
    fn co_swaps_two_cell_boundaries_only() {
        let b = CatBicat;
        let c = co_bicat(CatBicat);
        let wa = fixtures::walking_arrow();
        let endos = b.ones_between(&wa, &wa);
        // single transformation from the constant-0 functor to the identity
        let n = &b.twos_between(&endos[0], &endos[1])[0];
        assert_eq!(c.two_src(n), endos[1]);
        assert_eq!(c.two_tgt(n), endos[0]);
        assert_eq!(c.one_src(&endos[0]), wa);
    }

    #[test]
    fn co_hom_is_the_opposite_hom() {
        let b = CatBicat;
        let c = co_bicat(CatBicat);
        let wa = fixtures::walking_arrow();
        let hom = hom_category(&b, &wa, &wa);
        let co_hom = hom_category(&c, &wa, &wa);
        assert_eq!(
            co_hom.sorted_by_boundary(),
            opposite_category(&hom).sorted_by_boundary()
        );
        // sanity: the walking-arrow hom has 3 objects and 6 morphisms
        assert_eq!(hom.n_objects(), 3);
        assert_eq!(hom.n_mor(), 6);
    }
}
