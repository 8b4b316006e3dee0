//! Strict indexed families displayed over finite categories: objects over a
//! category are indexed families, 1-cells over a functor are indexed
//! transformations along it, 2-cells over a natural transformation are the
//! componentwise compatibility equation, carried as a unit witness once
//! checked.

use super::{BaseObj, BaseOne, BaseTwo, DCell1, DCell2, DispBicat};
use crate::bicat::CatBicat;
use crate::fincat::{
    compose_functors, enumerate_functors, validate_indexed, FinFunctor, IndexedCat,
    IndexedNatTrans,
};

#[derive(Default)]
pub struct IndexedCatDisp {
    base_bicat: CatBicat,
}

impl IndexedCatDisp {
    pub fn new() -> Self {
        IndexedCatDisp::default()
    }
}

/// The compatibility equation a displayed 2-cell witnesses: at each base
/// object, the source transformation followed by transport along the base
/// 2-cell's component equals the target transformation.
fn compatible(n: &BaseTwo<IndexedCatDisp>, f: &DCell1<IndexedCatDisp>, g: &DCell1<IndexedCatDisp>)
    -> bool {
    let family = &f.tgt;
    f.src.base().objects().all(|x| {
        let step = compose_functors(f.cell.component(x), family.transport(n.component(x)))
            .expect("transformation components land in the transported fiber");
        step == *g.cell.component(x)
    })
}

impl DispBicat for IndexedCatDisp {
    type Base = CatBicat;
    type DObj = IndexedCat;
    type DOne = IndexedNatTrans;
    type DTwo = ();

    fn base(&self) -> &CatBicat {
        &self.base_bicat
    }

    fn is_dobj(&self, c: &BaseObj<Self>, g: &IndexedCat) -> bool {
        g.base() == c && validate_indexed(g.base(), g.fibers(), g.transports()).is_empty()
    }

    fn is_done(&self, f: &BaseOne<Self>, g1: &IndexedCat, g2: &IndexedCat, fd: &IndexedNatTrans)
        -> bool {
        fd.along() == f && fd.src() == g1 && fd.tgt() == g2
    }

    fn is_dtwo(&self, t: &BaseTwo<Self>, f: &DCell1<Self>, g: &DCell1<Self>, _td: &()) -> bool {
        *t.src() == *f.cell.along() && *t.tgt() == *g.cell.along() && compatible(t, f, g)
    }

    fn did1(&self, _c: &BaseObj<Self>, g: &IndexedCat) -> IndexedNatTrans {
        IndexedNatTrans::identity(g)
    }

    fn dcomp1(&self, f: &DCell1<Self>, g: &DCell1<Self>) -> IndexedNatTrans {
        let along = compose_functors(f.cell.along(), g.cell.along())
            .expect("composable displayed 1-cells share a family");
        let components = f
            .src
            .base()
            .objects()
            .map(|x| {
                compose_functors(
                    f.cell.component(x),
                    g.cell.component(f.cell.along().on_obj(x)),
                )
                .expect("components compose through the middle fiber")
            })
            .collect();
        IndexedNatTrans::new(f.src.clone(), g.tgt.clone(), along, components)
            .expect("composite of strictly natural families is strictly natural")
    }

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

    /// Transport along the inverse base component undoes the condition, so
    /// the displayed side of an invertible 2-cell is always invertible.
    fn dinvertible2(&self, _t: &DCell2<Self>) -> bool {
        true
    }

    fn d_ones_over(&self, f: &BaseOne<Self>, g1: &IndexedCat, g2: &IndexedCat)
        -> Vec<IndexedNatTrans> {
        let n = g1.base().n_objects();
        let per_obj: Vec<Vec<FinFunctor>> =
            (0..n).map(|x| enumerate_functors(g1.fiber(x), g2.fiber(f.on_obj(x)))).collect();
        if per_obj.iter().any(|c| c.is_empty()) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut odometer = vec![0usize; n];
        loop {
            let components: Vec<FinFunctor> =
                odometer.iter().enumerate().map(|(x, &i)| per_obj[x][i].clone()).collect();
            if let Ok(g) =
                IndexedNatTrans::new(g1.clone(), g2.clone(), f.clone(), components)
            {
                out.push(g);
            }
            let mut pos = 0;
            loop {
                if pos == n {
                    return out;
                }
                odometer[pos] += 1;
                if odometer[pos] < per_obj[pos].len() {
                    break;
                }
                odometer[pos] = 0;
                pos += 1;
            }
        }
    }

    fn d_twos_over(&self, t: &BaseTwo<Self>, f: &DCell1<Self>, g: &DCell1<Self>) -> Vec<()> {
        if self.is_dtwo(t, f, g, &()) {
            vec![()]
        } else {
            Vec::new()
        }
    }

    /// Factor through the componentwise inverses; defined exactly when the
    /// displayed 1-cell is a componentwise isomorphism.
    fn closed_lift(
        &self,
        f: &DCell1<Self>,
        h: &BaseOne<Self>,
        g: &DCell1<Self>,
    ) -> Option<(IndexedNatTrans, ())> {
        let inverses: Vec<FinFunctor> =
            f.cell.components().iter().map(|c| c.inverse()).collect::<Option<_>>()?;
        let components = g
            .src
            .base()
            .objects()
            .map(|z| {
                compose_functors(g.cell.component(z), &inverses[h.on_obj(z)])
                    .expect("factoring lands back in the source fiber")
            })
            .collect();
        let lifted = IndexedNatTrans::new(g.src.clone(), f.src.clone(), h.clone(), components)
            .expect("inverting an invertible transformation preserves strict naturality");
        Some((lifted, ()))
    }

    fn exact_cartesian(&self, f: &DCell1<Self>) -> Option<bool> {
        Some(f.cell.components().iter().all(|c| c.is_isomorphism()))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{check_displayed_axioms, ProjectionPsf, TotalBicat};
    use super::*;
    use crate::bicat::{check_pseudofunctor, CellPool};
    use crate::fincat::{fixtures, FinCat};

    fn arrow_family() -> IndexedCat {
        let wa = fixtures::walking_arrow();
        let z2 = fixtures::z2();
        let terminal = fixtures::terminal();
        IndexedCat::new(
            wa.clone(),
            vec![z2.clone(), terminal.clone()],
            vec![
                FinFunctor::identity(&z2),
                FinFunctor::identity(&terminal),
                FinFunctor::constant(&z2, &terminal, 0),
            ],
        )
        .unwrap()
    }

    fn point_family() -> IndexedCat {
        let terminal = fixtures::terminal();
        let z2 = fixtures::z2();
        IndexedCat::constant(terminal, z2)
    }

    #[test]
    fn transformations_counted_by_hand() {
        let d = IndexedCatDisp::new();
        let wa = fixtures::walking_arrow();
        let terminal = fixtures::terminal();
        let fam = arrow_family();
        let point = point_family();
        let cases: Vec<(FinFunctor, &IndexedCat, &IndexedCat, usize)> = vec![
            (FinFunctor::identity(&wa), &fam, &fam, 2),
            (FinFunctor::constant(&wa, &wa, 0), &fam, &fam, 1),
            (FinFunctor::constant(&wa, &wa, 1), &fam, &fam, 1),
            (FinFunctor::constant(&wa, &terminal, 0), &fam, &point, 1),
            (FinFunctor::constant(&terminal, &wa, 0), &point, &fam, 2),
            (FinFunctor::constant(&terminal, &wa, 1), &point, &fam, 1),
        ];
        for (along, src, tgt, expected) in cases {
            assert_eq!(d.d_ones_over(&along, src, tgt).len(), expected, "along {:?}", along);
        }
    }

    fn total() -> TotalBicat<IndexedCatDisp> {
        TotalBicat(IndexedCatDisp::new())
    }

    fn objects() -> Vec<(FinCat, IndexedCat)> {
        vec![
            (fixtures::walking_arrow(), arrow_family()),
            (fixtures::terminal(), point_family()),
        ]
    }

    #[test]
    fn displayed_axioms_hold() {
        let t = total();
        let pool = CellPool::generate(&t, objects());
        assert!(!pool.ones.is_empty());
        assert_eq!(check_displayed_axioms(&t, &pool), Vec::new());
    }

    #[test]
    fn projection_is_a_pseudofunctor() {
        let t = total();
        let pool = CellPool::generate(&t, objects());
        assert_eq!(check_pseudofunctor(&t, &CatBicat, &ProjectionPsf(&t), &pool), Vec::new());
    }
}
