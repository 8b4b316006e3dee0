//! Opcartesian displayed 2-cells: the universal property over vertical
//! composition, its decision by exhaustive search, local opcleavings for
//! the shipped instances, and preservation of opcartesianness under
//! whiskering.

use super::{ArrowCell, ArrowsDisp, BaseTwo, DCell1, DCell2, DispBicat, IndexedCatDisp, TotalBicat, TrivialDisp};
use crate::bicat::{Bicat, CellPool, LawViolation};
use crate::fincat::{compose_functors, FinCat, FinFunctor, FinNatTrans, IndexedNatTrans};

/// Two-sided inverse of a 2-cell, found by searching the finite hom.
pub fn invert2_by_search<B: Bicat>(b: &B, t: &B::Two) -> Option<B::Two> {
    let src = b.two_src(t);
    let tgt = b.two_tgt(t);
    b.twos_between(&tgt, &src).into_iter().find(|inv| {
        b.vcomp2(t, inv) == b.id2(&src) && b.vcomp2(inv, t) == b.id2(&tgt)
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum OpcartDecision {
    Opcartesian,
    NotOpcartesian { witness: String },
}

impl OpcartDecision {
    pub fn is_opcartesian(&self) -> bool {
        matches!(self, OpcartDecision::Opcartesian)
    }
}

/// Decides the universal property of a displayed 2-cell out of f: for
/// every continuation tau out of its base target and every displayed cell
/// over the composite, exactly one displayed cell over tau factors it.
pub fn decide_opcartesian_2cell<D: DispBicat>(
    t: &TotalBicat<D>,
    th: &DCell2<D>,
) -> OpcartDecision {
    let b = t.disp().base();
    let d = t.disp();
    let f = &th.src;
    let g = &th.tgt;
    let src_obj = b.one_src(&f.base);
    let tgt_obj = b.one_tgt(&f.base);
    for h in b.ones_between(&src_obj, &tgt_obj) {
        for hcell in d.d_ones_over(&h, &f.src, &f.tgt) {
            let hbar = DCell1 {
                base: h.clone(),
                src: f.src.clone(),
                tgt: f.tgt.clone(),
                cell: hcell,
            };
            for tau in b.twos_between(&g.base, &h) {
                let gamma_base = b.vcomp2(&th.base, &tau);
                for gcell in d.d_twos_over(&gamma_base, f, &hbar) {
                    let gamma = DCell2 {
                        base: gamma_base.clone(),
                        src: f.clone(),
                        tgt: hbar.clone(),
                        cell: gcell,
                    };
                    let solutions = d
                        .d_twos_over(&tau, g, &hbar)
                        .into_iter()
                        .filter(|tcell| {
                            let taubar = DCell2 {
                                base: tau.clone(),
                                src: g.clone(),
                                tgt: hbar.clone(),
                                cell: tcell.clone(),
                            };
                            t.vcomp2(th, &taubar) == gamma
                        })
                        .count();
                    if solutions != 1 {
                        return OpcartDecision::NotOpcartesian {
                            witness: format!(
                                "{solutions} factorizations over a continuation {:?}",
                                tau
                            ),
                        };
                    }
                }
            }
        }
    }
    OpcartDecision::Opcartesian
}

/// The result of lifting a displayed 1-cell along a base 2-cell: the new
/// displayed 1-cell over the target and the opcartesian 2-cell into it.
pub struct OpcartLift<D: DispBicat> {
    pub one: DCell1<D>,
    pub two: DCell2<D>,
}

/// A choice of opcartesian lift for every (base 2-cell, displayed 1-cell
/// over its source).
pub struct LocalOpcleaving<D: DispBicat> {
    lift: Box<dyn Fn(&BaseTwo<D>, &DCell1<D>) -> OpcartLift<D>>,
}

impl<D: DispBicat> LocalOpcleaving<D> {
    pub fn new(lift: impl Fn(&BaseTwo<D>, &DCell1<D>) -> OpcartLift<D> + 'static) -> Self {
        LocalOpcleaving { lift: Box::new(lift) }
    }

    pub fn lift(&self, th: &BaseTwo<D>, f: &DCell1<D>) -> OpcartLift<D> {
        (self.lift)(th, f)
    }

    /// Replaces each produced lift through the given rewrite. Used to
    /// build deliberately broken opcleavings for negative tests.
    pub fn redirect(
        self,
        twist: impl Fn(&BaseTwo<D>, &DCell1<D>, OpcartLift<D>) -> OpcartLift<D> + 'static,
    ) -> Self
    where
        D: 'static,
        BaseTwo<D>: 'static,
    {
        let inner = self.lift;
        LocalOpcleaving {
            lift: Box::new(move |th, f| twist(th, f, inner(th, f))),
        }
    }
}

/// Trivial instance: the lift keeps the fiber cell and the opcartesian
/// 2-cell is the fiber identity over the base 2-cell.
pub fn trivial_opcleaving<B1, B2>(base: B1, fiber: B2) -> LocalOpcleaving<TrivialDisp<B1, B2>>
where
    B1: Bicat + 'static,
    B2: Bicat + 'static,
{
    LocalOpcleaving::new(move |th: &B1::Two, f: &DCell1<TrivialDisp<B1, B2>>| {
        let one = DCell1 {
            base: base.two_tgt(th),
            src: f.src.clone(),
            tgt: f.tgt.clone(),
            cell: f.cell.clone(),
        };
        let two = DCell2 {
            base: th.clone(),
            src: f.clone(),
            tgt: one.clone(),
            cell: fiber.id2(&f.cell),
        };
        OpcartLift { one, two }
    })
}

/// Indexed instance: the lift composes each component with the transport
/// along the base 2-cell's component, and the opcartesian 2-cell is the
/// unique displayed cell over the base 2-cell.
pub fn indexed_opcleaving() -> LocalOpcleaving<IndexedCatDisp> {
    LocalOpcleaving::new(|n: &FinNatTrans, f: &DCell1<IndexedCatDisp>| {
        let family = &f.tgt;
        let components: Vec<FinFunctor> = f
            .src
            .base()
            .objects()
            .map(|x| {
                compose_functors(f.cell.component(x), family.transport(n.component(x)))
                    .expect("components land in the transported fiber")
            })
            .collect();
        let cell = IndexedNatTrans::new(
            f.src.clone(),
            family.clone(),
            n.tgt().clone(),
            components,
        )
        .expect("transported components are strictly natural");
        let one = DCell1 {
            base: n.tgt().clone(),
            src: f.src.clone(),
            tgt: f.tgt.clone(),
            cell,
        };
        let two = DCell2 { base: n.clone(), src: f.clone(), tgt: one.clone(), cell: () };
        OpcartLift { one, two }
    })
}

/// Codomain instance: the lift keeps the top cell and pastes the base
/// 2-cell onto the fill; the opcartesian 2-cell is the identity on the top.
pub fn arrows_opcleaving<B>(base: B) -> LocalOpcleaving<ArrowsDisp<B>>
where
    B: Bicat<Obj = FinCat, One = FinFunctor, Two = FinNatTrans> + 'static,
{
    LocalOpcleaving::new(move |th: &FinNatTrans, f: &DCell1<ArrowsDisp<B>>| {
        let top = f.cell.top.clone();
        let fill = base.vcomp2(&f.cell.fill, &base.lwhisker(&f.src, th));
        let one = DCell1 {
            base: base.two_tgt(th),
            src: f.src.clone(),
            tgt: f.tgt.clone(),
            cell: ArrowCell { top: top.clone(), fill },
        };
        let two = DCell2 {
            base: th.clone(),
            src: f.clone(),
            tgt: one.clone(),
            cell: base.id2(&top),
        };
        OpcartLift { one, two }
    })
}

/// Checks an opcleaving over pool data: lifts lie over their inputs, are
/// opcartesian, and lift invertible base 2-cells to invertible cells.
pub fn validate_opcleaving<D: DispBicat>(
    t: &TotalBicat<D>,
    lo: &LocalOpcleaving<D>,
    pool: &CellPool<TotalBicat<D>>,
) -> Vec<LawViolation> {
    let b = t.disp().base();
    let mut out = Vec::new();
    for f in &pool.ones {
        let src_obj = b.one_src(&f.base);
        let tgt_obj = b.one_tgt(&f.base);
        for g in b.ones_between(&src_obj, &tgt_obj) {
            for th in b.twos_between(&f.base, &g) {
                let lift = lo.lift(&th, f);
                let ok = lift.one.base == g
                    && lift.one.src == f.src
                    && lift.one.tgt == f.tgt
                    && t.contains_one(&lift.one)
                    && lift.two.base == th
                    && lift.two.src == *f
                    && lift.two.tgt == lift.one
                    && t.contains_two(&lift.two);
                if !ok {
                    out.push(LawViolation {
                        law: "opcleaving-boundary",
                        detail: format!("lift of {:?} has wrong boundary", th),
                    });
                    continue;
                }
                if let OpcartDecision::NotOpcartesian { witness } =
                    decide_opcartesian_2cell(t, &lift.two)
                {
                    out.push(LawViolation { law: "opcleaving-opcartesian", detail: witness });
                }
                if b.invertible2(&th) && !t.invertible2(&lift.two) {
                    out.push(LawViolation {
                        law: "opcleaving-invertible",
                        detail: format!("invertible base 2-cell {:?} lifts non-invertibly", th),
                    });
                }
            }
        }
    }
    out
}

/// Checks that opcartesian lifts stay opcartesian after whiskering with
/// pool 1-cells on either side.
pub fn check_whisker_preserves_opcart<D: DispBicat>(
    t: &TotalBicat<D>,
    lo: &LocalOpcleaving<D>,
    pool: &CellPool<TotalBicat<D>>,
) -> Vec<LawViolation> {
    let b = t.disp().base();
    let mut out = Vec::new();
    for f in &pool.ones {
        let src_obj = b.one_src(&f.base);
        let tgt_obj = b.one_tgt(&f.base);
        for g in b.ones_between(&src_obj, &tgt_obj) {
            for th in b.twos_between(&f.base, &g) {
                let lift = lo.lift(&th, f);
                if !decide_opcartesian_2cell(t, &lift.two).is_opcartesian() {
                    out.push(LawViolation {
                        law: "opcart-lift",
                        detail: format!("lift of {:?} is not opcartesian", th),
                    });
                    continue;
                }
                let src_total = t.one_src(&lift.two.src);
                let tgt_total = t.one_tgt(&lift.two.src);
                for e in &pool.ones {
                    if t.one_tgt(e) == src_total {
                        let whiskered = t.lwhisker(e, &lift.two);
                        if !decide_opcartesian_2cell(t, &whiskered).is_opcartesian() {
                            out.push(LawViolation {
                                law: "opcart-lwhisker",
                                detail: format!("left whisker by {:?} breaks {:?}", e.base, th),
                            });
                        }
                    }
                    if t.one_src(e) == tgt_total {
                        let whiskered = t.rwhisker(&lift.two, e);
                        if !decide_opcartesian_2cell(t, &whiskered).is_opcartesian() {
                            out.push(LawViolation {
                                law: "opcart-rwhisker",
                                detail: format!("right whisker by {:?} breaks {:?}", e.base, th),
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::TotalBicat;
    use super::*;
    use crate::bicat::{CatBicat, GpdBicat};
    use crate::fincat::{fixtures, IndexedCat};

    #[test]
    fn invert2_by_search_finds_two_sided_inverses() {
        let b = CatBicat;
        let wa = fixtures::walking_arrow();
        let id = FinFunctor::identity(&wa);
        let ident = b.id2(&id);
        assert_eq!(invert2_by_search(&b, &ident), Some(ident.clone()));
        let const1 = FinFunctor::constant(&wa, &wa, 1);
        let arrow = b
            .twos_between(&id, &const1)
            .into_iter()
            .next()
            .expect("the cocone into the terminal object exists");
        assert_eq!(invert2_by_search(&b, &arrow), None);
    }

    #[test]
    fn trivial_lifts_validate() {
        let t: TotalBicat<TrivialDisp<CatBicat, GpdBicat>> =
            TotalBicat(TrivialDisp::new(CatBicat, GpdBicat));
        let pool = CellPool::generate(
            &t,
            vec![
                (fixtures::terminal(), fixtures::z2()),
                (fixtures::walking_arrow(), fixtures::z2()),
            ],
        );
        let lo = trivial_opcleaving(CatBicat, GpdBicat);
        assert_eq!(validate_opcleaving(&t, &lo, &pool), Vec::new());
        assert_eq!(check_whisker_preserves_opcart(&t, &lo, &pool), Vec::new());
    }

    #[test]
    fn indexed_lifts_validate() {
        let t = TotalBicat(IndexedCatDisp::new());
        let wa = fixtures::walking_arrow();
        let z2 = fixtures::z2();
        let terminal = fixtures::terminal();
        let fam = IndexedCat::new(
            wa.clone(),
            vec![z2.clone(), terminal.clone()],
            vec![
                FinFunctor::identity(&z2),
                FinFunctor::identity(&terminal),
                FinFunctor::constant(&z2, &terminal, 0),
            ],
        )
        .unwrap();
        let point = IndexedCat::constant(terminal.clone(), z2.clone());
        let pool = CellPool::generate(&t, vec![(wa.clone(), fam), (terminal, point)]);
        let lo = indexed_opcleaving();
        assert_eq!(validate_opcleaving(&t, &lo, &pool), Vec::new());
        assert_eq!(check_whisker_preserves_opcart(&t, &lo, &pool), Vec::new());

        let f = pool.ones.iter().find(|f| *f.cell.along() == FinFunctor::identity(&wa)).unwrap();
        let n = CatBicat
            .twos_between(&FinFunctor::identity(&wa), &FinFunctor::constant(&wa, &wa, 1))
            .into_iter()
            .next()
            .unwrap();
        let lift = lo.lift(&n, f);
        for x in f.src.base().objects() {
            let expected = compose_functors(
                f.cell.component(x),
                f.tgt.transport(n.component(x)),
            )
            .unwrap();
            assert_eq!(*lift.one.cell.component(x), expected);
        }
        assert!(decide_opcartesian_2cell(&t, &lift.two).is_opcartesian());
    }

    #[test]
    fn arrows_lifts_validate() {
        let t = TotalBicat(ArrowsDisp(GpdBicat));
        let terminal = fixtures::terminal();
        let z2 = fixtures::z2();
        let pool = CellPool::generate(
            &t,
            vec![
                (terminal.clone(), FinFunctor::identity(&terminal)),
                (z2.clone(), FinFunctor::constant(&terminal, &z2, 0)),
            ],
        );
        let lo = arrows_opcleaving(GpdBicat);
        assert_eq!(validate_opcleaving(&t, &lo, &pool), Vec::new());
        assert_eq!(check_whisker_preserves_opcart(&t, &lo, &pool), Vec::new());
    }

    #[test]
    fn redirected_lift_is_caught() {
        let t: TotalBicat<TrivialDisp<CatBicat, CatBicat>> =
            TotalBicat(TrivialDisp::new(CatBicat, CatBicat));
        let wa = fixtures::walking_arrow();
        let pool: CellPool<TotalBicat<TrivialDisp<CatBicat, CatBicat>>> =
            CellPool::generate(&t, vec![(fixtures::terminal(), wa.clone())]);
        let id_wa = FinFunctor::identity(&wa);
        let const1 = FinFunctor::constant(&wa, &wa, 1);
        let bent = CatBicat.twos_between(&id_wa, &const1).into_iter().next().unwrap();
        let lo = trivial_opcleaving(CatBicat, CatBicat).redirect(move |_th, f, honest| {
            if f.cell != id_wa {
                return honest;
            }
            let one = DCell1 {
                base: honest.one.base.clone(),
                src: f.src.clone(),
                tgt: f.tgt.clone(),
                cell: const1.clone(),
            };
            let two = DCell2 {
                base: honest.two.base.clone(),
                src: f.clone(),
                tgt: one.clone(),
                cell: bent.clone(),
            };
            OpcartLift { one, two }
        });
        let violations = validate_opcleaving(&t, &lo, &pool);
        assert!(violations.iter().any(|v| v.law == "opcleaving-opcartesian"));
        assert!(violations.iter().any(|v| v.law == "opcleaving-invertible"));
        let whisker = check_whisker_preserves_opcart(&t, &lo, &pool);
        assert!(whisker.iter().any(|v| v.law == "opcart-lift"));

        let sample = pool
            .ones
            .iter()
            .find(|f| f.cell == FinFunctor::identity(&wa))
            .expect("the identity fiber cell is in the pool");
        let lift = lo.lift(&CatBicat.id2(&sample.base), sample);
        match decide_opcartesian_2cell(&t, &lift.two) {
            OpcartDecision::NotOpcartesian { witness } => assert!(!witness.is_empty()),
            OpcartDecision::Opcartesian => panic!("redirected lift decided opcartesian"),
        }
    }
}
