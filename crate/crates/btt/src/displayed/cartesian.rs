//! Cartesian 1-cells: factorization of displayed 1-cells through a chosen
//! one, uniqueness of the comparison 2-cell, decision procedures, global
//! cleavings for the shipped instances, and the equivalence between any two
//! cartesian lifts of the same base 1-cell.

use super::{
    invert2_by_search, ArrowCell, ArrowsDisp, BaseOne, BaseTwo, DCell1, DCell2, DispBicat,
    IndexedCatDisp, TotalBicat, TrivialDisp,
};
use crate::bicat::{pullback_structure, Bicat, CellPool, LawViolation};
use crate::fincat::{FinCat, FinFunctor, FinNatTrans, IndexedCat, IndexedNatTrans};

#[derive(Debug, thiserror::Error)]
pub enum CartError {
    #[error("boundary mismatch: {0}")]
    Boundary(String),
    #[error("no factorization: {0}")]
    NoSolution(String),
    #[error("factorization not unique: {0}")]
    NotUnique(String),
    #[error("structure not available: {0}")]
    Capability(String),
}

/// How a cartesian structure factors candidates through its 1-cell.
pub enum CartKind<D: DispBicat> {
    /// The 1-cell is a displayed identity; candidates transpose directly.
    Identity,
    /// The 1-cell is a composite of two cartesian 1-cells; factor through
    /// the second, then the first.
    Compose(Box<CartesianStructure<D>>, Box<CartesianStructure<D>>),
    /// The instance supplies a closed-form lift.
    ClosedForm,
    /// Search the finite displayed cells over each candidate.
    Exhaustive,
}

/// A displayed 1-cell equipped with a factorization procedure: lifts of
/// candidates through it, and unique comparison 2-cells between lifts.
pub struct CartesianStructure<D: DispBicat> {
    pub one: DCell1<D>,
    pub kind: CartKind<D>,
}

/// The identity displayed 1-cell on a total object, with direct
/// transposition as its factorization.
pub fn identity_cartesian<D: DispBicat>(
    t: &TotalBicat<D>,
    a: &(super::BaseObj<D>, D::DObj),
) -> CartesianStructure<D> {
    CartesianStructure { one: t.id1(a), kind: CartKind::Identity }
}

/// The composite of two cartesian structures, factoring in stages.
pub fn compose_cartesian<D: DispBicat>(
    t: &TotalBicat<D>,
    first: CartesianStructure<D>,
    second: CartesianStructure<D>,
) -> CartesianStructure<D> {
    assert_eq!(
        t.one_tgt(&first.one),
        t.one_src(&second.one),
        "composed cartesian structures must be composable"
    );
    CartesianStructure {
        one: t.comp1(&first.one, &second.one),
        kind: CartKind::Compose(Box::new(first), Box::new(second)),
    }
}

impl<D: DispBicat> CartesianStructure<D> {
    /// Lift of a candidate: given h and a displayed g over h followed by
    /// this structure's base cell, produce a displayed 1-cell over h and an
    /// invertible displayed 2-cell over the identity closing the triangle.
    pub fn factor_1cell(
        &self,
        t: &TotalBicat<D>,
        h: &BaseOne<D>,
        g: &DCell1<D>,
    ) -> Result<(DCell1<D>, DCell2<D>), CartError> {
        let b = t.disp().base();
        let d = t.disp();
        if g.base != b.comp1(h, &self.one.base) {
            return Err(CartError::Boundary(
                "candidate does not lie over the composite base 1-cell".into(),
            ));
        }
        if g.tgt != self.one.tgt {
            return Err(CartError::Boundary(
                "candidate does not end at the structure's target".into(),
            ));
        }
        match &self.kind {
            CartKind::Identity => {
                let lifted = DCell1 {
                    base: h.clone(),
                    src: g.src.clone(),
                    tgt: self.one.src.clone(),
                    cell: g.cell.clone(),
                };
                if !t.contains_one(&lifted) {
                    return Err(CartError::Capability(
                        "identity factorization needs the candidate cell to transpose over the bare 1-cell".into(),
                    ));
                }
                let theta = t.runitor(&lifted);
                if t.two_tgt(&theta) != *g || t.two_src(&theta) != t.comp1(&lifted, &self.one) {
                    return Err(CartError::Capability(
                        "identity factorization needs a strict base".into(),
                    ));
                }
                Ok((lifted, theta))
            }
            CartKind::Compose(first, second) => {
                let mid = b.comp1(h, &first.one.base);
                let (k, theta2) = second.factor_1cell(t, &mid, g)?;
                let (lifted, theta1) = first.factor_1cell(t, h, &k)?;
                let assoc = t.associator(&lifted, &first.one, &second.one);
                let theta = t.vcomp2(
                    &t.vcomp2(&assoc, &t.rwhisker(&theta1, &second.one)),
                    &theta2,
                );
                Ok((lifted, theta))
            }
            CartKind::ClosedForm => match d.closed_lift(&self.one, h, g) {
                Some((cell, tcell)) => {
                    let lifted = DCell1 {
                        base: h.clone(),
                        src: g.src.clone(),
                        tgt: self.one.src.clone(),
                        cell,
                    };
                    let comp = t.comp1(&lifted, &self.one);
                    let theta = DCell2 {
                        base: b.id2(&g.base),
                        src: comp,
                        tgt: g.clone(),
                        cell: tcell,
                    };
                    Ok((lifted, theta))
                }
                None => Err(CartError::NoSolution(
                    "no closed-form factorization for this candidate".into(),
                )),
            },
            CartKind::Exhaustive => {
                let idb = b.id2(&g.base);
                for cell in d.d_ones_over(h, &g.src, &self.one.src) {
                    let lifted = DCell1 {
                        base: h.clone(),
                        src: g.src.clone(),
                        tgt: self.one.src.clone(),
                        cell,
                    };
                    let comp = t.comp1(&lifted, &self.one);
                    for tcell in d.d_twos_over(&idb, &comp, g) {
                        let theta = DCell2 {
                            base: idb.clone(),
                            src: comp.clone(),
                            tgt: g.clone(),
                            cell: tcell,
                        };
                        if t.invertible2(&theta) {
                            return Ok((lifted, theta));
                        }
                    }
                }
                Err(CartError::NoSolution(format!(
                    "exhaustive search found no invertible factorization over {:?}",
                    h
                )))
            }
        }
    }

    /// The unique comparison 2-cell between two lifts: given lifts
    /// (h1, theta1) and (h2, theta2), a base 2-cell delta between the base
    /// parts, and a displayed sigma over delta whiskered by the base cell,
    /// find the single displayed 2-cell over delta satisfying
    /// whisker(result, one) then theta2 = theta1 then sigma.
    pub fn factor_2cell(
        &self,
        t: &TotalBicat<D>,
        lift1: (&DCell1<D>, &DCell2<D>),
        lift2: (&DCell1<D>, &DCell2<D>),
        delta: &BaseTwo<D>,
        sigma: &DCell2<D>,
    ) -> Result<DCell2<D>, CartError> {
        let b = t.disp().base();
        let d = t.disp();
        let (h1, th1) = lift1;
        let (h2, th2) = lift2;
        for (h, th) in [(h1, th1), (h2, th2)] {
            if th.src != t.comp1(h, &self.one) {
                return Err(CartError::Boundary(
                    "lift 2-cell does not start at the composite with the structure cell".into(),
                ));
            }
        }
        if b.two_src(delta) != h1.base || b.two_tgt(delta) != h2.base {
            return Err(CartError::Boundary(
                "comparison base 2-cell does not run between the lift bases".into(),
            ));
        }
        if sigma.src != th1.tgt || sigma.tgt != th2.tgt {
            return Err(CartError::Boundary(
                "displayed 2-cell does not run between the lift targets".into(),
            ));
        }
        if sigma.base != b.rwhisker(delta, &self.one.base) {
            return Err(CartError::Boundary(
                "displayed 2-cell does not lie over the whiskered comparison".into(),
            ));
        }
        let rhs = t.vcomp2(th1, sigma);
        let mut found = Vec::new();
        for cell in d.d_twos_over(delta, h1, h2) {
            let cand =
                DCell2 { base: delta.clone(), src: h1.clone(), tgt: h2.clone(), cell };
            if t.vcomp2(&t.rwhisker(&cand, &self.one), th2) == rhs {
                found.push(cand);
            }
        }
        match found.len() {
            1 => Ok(found.pop().expect("length checked")),
            0 => Err(CartError::NoSolution(
                "no displayed 2-cell satisfies the factorization equation".into(),
            )),
            n => Err(CartError::NotUnique(format!(
                "{n} displayed 2-cells satisfy the factorization equation"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CartScope {
    /// Decided by an instance criterion covering all candidates.
    Exact,
    /// Decided by search over the supplied pool only.
    Bounded,
}

#[derive(Debug, Clone)]
pub struct CartDecision {
    pub cartesian: bool,
    pub scope: CartScope,
    pub witness: Option<String>,
}

/// Every lift of (h, g) through f: pairs of a displayed 1-cell over h and
/// an invertible displayed 2-cell over the identity closing the triangle.
fn all_lifts<D: DispBicat>(
    t: &TotalBicat<D>,
    f: &DCell1<D>,
    h: &BaseOne<D>,
    g: &DCell1<D>,
) -> Vec<(DCell1<D>, DCell2<D>)> {
    let b = t.disp().base();
    let d = t.disp();
    let idb = b.id2(&g.base);
    let mut out = Vec::new();
    for cell in d.d_ones_over(h, &g.src, &f.src) {
        let lifted =
            DCell1 { base: h.clone(), src: g.src.clone(), tgt: f.src.clone(), cell };
        let comp = t.comp1(&lifted, f);
        for tcell in d.d_twos_over(&idb, &comp, g) {
            let theta = DCell2 {
                base: idb.clone(),
                src: comp.clone(),
                tgt: g.clone(),
                cell: tcell,
            };
            if t.invertible2(&theta) {
                out.push((lifted.clone(), theta));
            }
        }
    }
    out
}

/// Decides whether a displayed 1-cell is cartesian. Uses the instance's
/// exact criterion when it has one; otherwise quantifies both clauses over
/// candidates built from the pool and labels the answer as bounded.
pub fn decide_cartesian_1cell<D: DispBicat>(
    t: &TotalBicat<D>,
    f: &DCell1<D>,
    pool: &CellPool<TotalBicat<D>>,
) -> CartDecision {
    if let Some(cartesian) = t.disp().exact_cartesian(f) {
        return CartDecision { cartesian, scope: CartScope::Exact, witness: None };
    }
    decide_cartesian_bounded(t, f, pool)
}

/// Pool-quantified decision of both cartesianness clauses, ignoring any
/// instance criterion: every candidate built from pool objects must have a
/// lift, and every comparison problem between lifts exactly one solution.
pub fn decide_cartesian_bounded<D: DispBicat>(
    t: &TotalBicat<D>,
    f: &DCell1<D>,
    pool: &CellPool<TotalBicat<D>>,
) -> CartDecision {
    let d = t.disp();
    let b = d.base();
    let a_obj = b.one_src(&f.base);
    let cs = CartesianStructure { one: f.clone(), kind: CartKind::Exhaustive };
    for c in &pool.objects {
        let mut problems = Vec::new();
        for h in b.ones_between(&c.0, &a_obj) {
            let hf = b.comp1(&h, &f.base);
            for gcell in d.d_ones_over(&hf, &c.1, &f.tgt) {
                let g = DCell1 {
                    base: hf.clone(),
                    src: c.1.clone(),
                    tgt: f.tgt.clone(),
                    cell: gcell,
                };
                let lifts = all_lifts(t, f, &h, &g);
                if lifts.is_empty() {
                    return CartDecision {
                        cartesian: false,
                        scope: CartScope::Bounded,
                        witness: Some(format!("no lift of a candidate over {:?}", h)),
                    };
                }
                problems.push((h.clone(), g, lifts));
            }
        }
        for (h1, g1, lifts1) in &problems {
            for (h2, g2, lifts2) in &problems {
                for delta in b.twos_between(h1, h2) {
                    let sb = b.rwhisker(&delta, &f.base);
                    for scell in d.d_twos_over(&sb, g1, g2) {
                        let sigma = DCell2 {
                            base: sb.clone(),
                            src: g1.clone(),
                            tgt: g2.clone(),
                            cell: scell,
                        };
                        for l1 in lifts1 {
                            for l2 in lifts2 {
                                if let Err(e) = cs.factor_2cell(
                                    t,
                                    (&l1.0, &l1.1),
                                    (&l2.0, &l2.1),
                                    &delta,
                                    &sigma,
                                ) {
                                    return CartDecision {
                                        cartesian: false,
                                        scope: CartScope::Bounded,
                                        witness: Some(e.to_string()),
                                    };
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    CartDecision { cartesian: true, scope: CartScope::Bounded, witness: None }
}

/// The result of lifting a displayed object along a base 1-cell: the new
/// object, the cartesian 1-cell into the given object, and its structure.
pub struct GlobalLift<D: DispBicat> {
    pub obj: D::DObj,
    pub one: DCell1<D>,
    pub cart: CartesianStructure<D>,
}

/// A choice of cartesian lift for every (base 1-cell, displayed object over
/// its target).
pub struct GlobalCleaving<D: DispBicat> {
    lift: Box<dyn Fn(&BaseOne<D>, &D::DObj) -> Result<GlobalLift<D>, CartError>>,
}

impl<D: DispBicat> GlobalCleaving<D> {
    pub fn new(
        lift: impl Fn(&BaseOne<D>, &D::DObj) -> Result<GlobalLift<D>, CartError> + 'static,
    ) -> Self {
        GlobalCleaving { lift: Box::new(lift) }
    }

    pub fn lift(&self, f: &BaseOne<D>, over: &D::DObj) -> Result<GlobalLift<D>, CartError> {
        (self.lift)(f, over)
    }
}

/// Trivial instance: the lifted object is the same fiber object and the
/// lift is the fiber identity carried over the base 1-cell.
pub fn trivial_cleaving<B1, B2>(base: B1, fiber: B2) -> GlobalCleaving<TrivialDisp<B1, B2>>
where
    B1: Bicat + 'static,
    B2: Bicat + 'static,
{
    GlobalCleaving::new(move |f, y| {
        if !base.contains_one(f) || !fiber.contains_obj(y) {
            return Err(CartError::Boundary("cleaving input is not in the instance".into()));
        }
        let one = DCell1 {
            base: f.clone(),
            src: y.clone(),
            tgt: y.clone(),
            cell: fiber.id1(y),
        };
        Ok(GlobalLift {
            obj: y.clone(),
            one: one.clone(),
            cart: CartesianStructure { one, kind: CartKind::ClosedForm },
        })
    })
}

/// Codomain instance over finite categories or groupoids: lift by pullback,
/// with the apex projection as the new anchor and the pullback square as
/// the cartesian cell.
pub fn arrows_cleaving<B>(base: B) -> GlobalCleaving<ArrowsDisp<B>>
where
    B: Bicat<Obj = FinCat, One = FinFunctor, Two = FinNatTrans> + 'static,
{
    GlobalCleaving::new(move |f, anchor| {
        if !base.contains_one(f) || !base.contains_one(anchor) {
            return Err(CartError::Boundary("cleaving input is not in the base".into()));
        }
        if base.one_tgt(f) != base.one_tgt(anchor) {
            return Err(CartError::Boundary(
                "anchor does not end at the target of the lifted 1-cell".into(),
            ));
        }
        let pb = pullback_structure(f, anchor)
            .map_err(|e| CartError::Capability(format!("pullback unavailable: {e}")))?;
        let fill = pb.gamma.inverse().expect("pullback fill is invertible");
        let one = DCell1 {
            base: f.clone(),
            src: pb.pi1.clone(),
            tgt: anchor.clone(),
            cell: ArrowCell { top: pb.pi2.clone(), fill },
        };
        Ok(GlobalLift {
            obj: pb.pi1,
            one: one.clone(),
            cart: CartesianStructure { one, kind: CartKind::Exhaustive },
        })
    })
}

/// Indexed instance: lift by reindexing the family along the base functor,
/// with identity components as the cartesian cell.
pub fn indexed_cleaving() -> GlobalCleaving<IndexedCatDisp> {
    GlobalCleaving::new(|f: &FinFunctor, family: &IndexedCat| {
        if f.cod() != family.base() {
            return Err(CartError::Boundary(
                "family is not indexed over the target of the 1-cell".into(),
            ));
        }
        let fibers: Vec<FinCat> =
            f.dom().objects().map(|x| family.fiber(f.on_obj(x)).clone()).collect();
        let transports: Vec<FinFunctor> =
            f.dom().morphisms().map(|m| family.transport(f.on_mor(m)).clone()).collect();
        let reindexed = IndexedCat::new(f.dom().clone(), fibers, transports)
            .expect("reindexing preserves strict functoriality");
        let components: Vec<FinFunctor> =
            f.dom().objects().map(|x| FinFunctor::identity(family.fiber(f.on_obj(x)))).collect();
        let cell = IndexedNatTrans::new(reindexed.clone(), family.clone(), f.clone(), components)
            .expect("identity components are strictly natural");
        let one = DCell1 {
            base: f.clone(),
            src: reindexed.clone(),
            tgt: family.clone(),
            cell,
        };
        Ok(GlobalLift {
            obj: reindexed,
            one: one.clone(),
            cart: CartesianStructure { one, kind: CartKind::ClosedForm },
        })
    })
}

/// Checks a cleaving over pool data: every lift lies over its input, its
/// structure factors every candidate from the pool with a valid invertible
/// closing 2-cell, and the lifted cell decides cartesian.
pub fn validate_cleaving<D: DispBicat>(
    t: &TotalBicat<D>,
    gc: &GlobalCleaving<D>,
    pool: &CellPool<TotalBicat<D>>,
) -> Vec<LawViolation> {
    let b = t.disp().base();
    let d = t.disp();
    let mut out = Vec::new();
    for target in &pool.objects {
        for source in &pool.objects {
            for f in b.ones_between(&source.0, &target.0) {
                let lift = match gc.lift(&f, &target.1) {
                    Ok(l) => l,
                    Err(e) => {
                        out.push(LawViolation { law: "cleaving-lift", detail: e.to_string() });
                        continue;
                    }
                };
                if lift.one.base != f
                    || lift.one.src != lift.obj
                    || lift.one.tgt != target.1
                    || !t.contains_one(&lift.one)
                {
                    out.push(LawViolation {
                        law: "cleaving-boundary",
                        detail: format!("{:?}", lift.one),
                    });
                    continue;
                }
                if lift.cart.one != lift.one {
                    out.push(LawViolation {
                        law: "cleaving-structure",
                        detail: "structure does not equip the lifted cell".into(),
                    });
                }
                let decision = decide_cartesian_1cell(t, &lift.one, pool);
                if !decision.cartesian {
                    out.push(LawViolation {
                        law: "cleaving-cartesian",
                        detail: decision.witness.unwrap_or_default(),
                    });
                }
                for c in &pool.objects {
                    for h in b.ones_between(&c.0, &source.0) {
                        let hf = b.comp1(&h, &f);
                        for gcell in d.d_ones_over(&hf, &c.1, &target.1) {
                            let g = DCell1 {
                                base: hf.clone(),
                                src: c.1.clone(),
                                tgt: target.1.clone(),
                                cell: gcell,
                            };
                            match lift.cart.factor_1cell(t, &h, &g) {
                                Ok((lifted, theta)) => {
                                    let good = t.contains_one(&lifted)
                                        && lifted.base == h
                                        && t.contains_two(&theta)
                                        && theta.base == b.id2(&g.base)
                                        && theta.src == t.comp1(&lifted, &lift.one)
                                        && theta.tgt == g
                                        && t.invertible2(&theta);
                                    if !good {
                                        out.push(LawViolation {
                                            law: "cleaving-clause1",
                                            detail: format!(
                                                "invalid factorization data over {:?}",
                                                h
                                            ),
                                        });
                                    }
                                }
                                Err(e) => out.push(LawViolation {
                                    law: "cleaving-clause1",
                                    detail: e.to_string(),
                                }),
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// An adjoint equivalence over the identity between the sources of two
/// cartesian lifts of the same base 1-cell, with the comparison 2-cell
/// into the composite.
pub struct CartesianEquivalence<D: DispBicat> {
    pub forward: DCell1<D>,
    pub backward: DCell1<D>,
    pub unit: DCell2<D>,
    pub counit: DCell2<D>,
    pub comparison: DCell2<D>,
}

/// Builds the equivalence between two cartesian structures over the same
/// base 1-cell and target: each is factored through the other, and the
/// unit and counit are the unique comparison 2-cells between the composite
/// lift and the identity lift.
pub fn equivalence_between_cartesian<D: DispBicat>(
    t: &TotalBicat<D>,
    cs1: &CartesianStructure<D>,
    cs2: &CartesianStructure<D>,
) -> Result<CartesianEquivalence<D>, CartError> {
    let b = t.disp().base();
    let f1 = &cs1.one;
    let f2 = &cs2.one;
    if f1.base != f2.base || f1.tgt != f2.tgt {
        return Err(CartError::Boundary(
            "the two structures do not share a base 1-cell and target".into(),
        ));
    }
    let a = b.one_src(&f1.base);
    let ida = b.id1(&a);
    if b.comp1(&ida, &f1.base) != f1.base {
        return Err(CartError::Capability(
            "the equivalence construction needs a strict base".into(),
        ));
    }
    let (forward, theta_f) = cs2.factor_1cell(t, &ida, f1)?;
    let (backward, theta_b) = cs1.factor_1cell(t, &ida, f2)?;
    let delta_id = b.id2(&ida);

    let id1_total = t.id1(&t.one_src(f1));
    let round = t.comp1(&forward, &backward);
    let theta_round = t.vcomp2(
        &t.vcomp2(
            &t.associator_inv(&forward, &backward, f1),
            &t.lwhisker(&forward, &theta_b),
        ),
        &theta_f,
    );
    let unit = cs1.factor_2cell(
        t,
        (&id1_total, &t.lunitor(f1)),
        (&round, &theta_round),
        &delta_id,
        &t.id2(f1),
    )?;

    let id2_total = t.id1(&t.one_src(f2));
    let round_back = t.comp1(&backward, &forward);
    let theta_round_back = t.vcomp2(
        &t.vcomp2(
            &t.associator_inv(&backward, &forward, f2),
            &t.lwhisker(&backward, &theta_f),
        ),
        &theta_b,
    );
    let counit = cs2.factor_2cell(
        t,
        (&round_back, &theta_round_back),
        (&id2_total, &t.lunitor(f2)),
        &delta_id,
        &t.id2(f2),
    )?;

    let comparison = invert2_by_search(t, &theta_f).ok_or_else(|| {
        CartError::NoSolution("the closing factorization 2-cell has no inverse".into())
    })?;
    Ok(CartesianEquivalence { forward, backward, unit, counit, comparison })
}

#[cfg(test)]
mod tests {
    use super::super::{invert2_by_search, TotalBicat, TrivialDisp};
    use super::*;
    use crate::bicat::{CatBicat, GpdBicat};
    use crate::fincat::{compose_functors, fixtures};

    type Triv = TrivialDisp<CatBicat, GpdBicat>;

    fn trivial_total() -> TotalBicat<Triv> {
        TotalBicat(TrivialDisp::new(CatBicat, GpdBicat))
    }

    fn trivial_pool(t: &TotalBicat<Triv>) -> CellPool<TotalBicat<Triv>> {
        CellPool::generate(
            t,
            vec![
                (fixtures::terminal(), fixtures::z2()),
                (fixtures::walking_arrow(), fixtures::iso_pair()),
            ],
        )
    }

    #[test]
    fn identity_and_composite_cells_are_cartesian() {
        let t = trivial_total();
        let pool = trivial_pool(&t);
        let a = (fixtures::walking_arrow(), fixtures::iso_pair());
        let id_cart = identity_cartesian(&t, &a);
        assert!(decide_cartesian_bounded(&t, &id_cart.one, &pool).cartesian);

        let gc = trivial_cleaving(CatBicat, GpdBicat);
        let wa = fixtures::walking_arrow();
        let terminal = fixtures::terminal();
        let y = fixtures::z2();
        let into = FinFunctor::constant(&terminal, &wa, 0);
        let back = FinFunctor::constant(&wa, &terminal, 0);
        let first = gc.lift(&into, &y).unwrap();
        let second = gc.lift(&back, &y).unwrap();
        let comp = compose_cartesian(&t, first.cart, second.cart);
        assert!(decide_cartesian_bounded(&t, &comp.one, &pool).cartesian);

        let g = comp.one.clone();
        let (lifted, theta) = comp.factor_1cell(&t, &FinFunctor::identity(&terminal), &g).unwrap();
        assert_eq!(lifted.base, FinFunctor::identity(&terminal));
        assert!(t.invertible2(&theta));
        assert_eq!(t.two_tgt(&theta), g);
    }

    #[test]
    fn non_equivalence_fiber_cell_is_not_cartesian() {
        let t = trivial_total();
        let pool = trivial_pool(&t);
        let z2 = fixtures::z2();
        let ip = fixtures::iso_pair();
        let base = FinFunctor::constant(&fixtures::walking_arrow(), &fixtures::terminal(), 0);
        let cell = DCell1::<Triv> {
            base,
            src: z2.clone(),
            tgt: ip.clone(),
            cell: FinFunctor::constant(&z2, &ip, 0),
        };
        assert!(t.contains_one(&cell));
        let decision = decide_cartesian_bounded(&t, &cell, &pool);
        assert!(!decision.cartesian);
        assert!(decision.witness.is_some());
    }

    #[test]
    fn indexed_exact_criterion_matches_bounded_search() {
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
        let pool = CellPool::generate(&t, vec![(wa, fam), (terminal, point)]);
        let mut saw = [false, false];
        for f in &pool.ones {
            let exact = decide_cartesian_1cell(&t, f, &pool);
            assert_eq!(exact.scope, CartScope::Exact);
            let bounded = decide_cartesian_bounded(&t, f, &pool);
            assert_eq!(bounded.scope, CartScope::Bounded);
            assert_eq!(exact.cartesian, bounded.cartesian, "cell {:?}", f);
            saw[exact.cartesian as usize] = true;
        }
        assert_eq!(saw, [true, true]);
    }

    #[test]
    fn cleavings_validate_over_pools() {
        let t = trivial_total();
        let pool = trivial_pool(&t);
        let gc = trivial_cleaving(CatBicat, GpdBicat);
        assert_eq!(validate_cleaving(&t, &gc, &pool), Vec::new());

        let ti = TotalBicat(IndexedCatDisp::new());
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
        let ipool = CellPool::generate(&ti, vec![(wa, fam), (terminal.clone(), point)]);
        assert_eq!(validate_cleaving(&ti, &indexed_cleaving(), &ipool), Vec::new());

        let ta = TotalBicat(ArrowsDisp(GpdBicat));
        let apool = CellPool::generate(
            &ta,
            vec![
                (terminal.clone(), FinFunctor::identity(&terminal)),
                (z2.clone(), FinFunctor::constant(&terminal, &z2, 0)),
            ],
        );
        assert_eq!(validate_cleaving(&ta, &arrows_cleaving(GpdBicat), &apool), Vec::new());
    }

    #[test]
    fn factorization_round_trip_and_uniqueness() {
        let t = trivial_total();
        let gc = trivial_cleaving(CatBicat, GpdBicat);
        let wa = fixtures::walking_arrow();
        let terminal = fixtures::terminal();
        let z2 = fixtures::z2();
        let f = FinFunctor::constant(&wa, &terminal, 0);
        let lift = gc.lift(&f, &z2).unwrap();

        let h = FinFunctor::constant(&terminal, &wa, 0);
        let comp_base = compose_functors(&h, &f).unwrap();
        let twist = GpdBicat.ones_between(&z2, &z2).into_iter().find(|c| !c.is_identity()).unwrap();
        let g = DCell1::<Triv> { base: comp_base, src: z2.clone(), tgt: z2.clone(), cell: twist };
        assert!(t.contains_one(&g));

        let (lifted, theta) = lift.cart.factor_1cell(&t, &h, &g).unwrap();
        assert_eq!(lifted.base, h);
        assert_eq!(lifted.cell, g.cell);
        assert!(t.invertible2(&theta));
        let inv = invert2_by_search(&t, &theta).unwrap();
        assert_eq!(t.vcomp2(&theta, &inv), t.id2(&t.two_src(&theta)));

        let delta = CatBicat.id2(&h);
        let sigma = t.id2(&g);
        let comparison = lift
            .cart
            .factor_2cell(&t, (&lifted, &theta), (&lifted, &theta), &delta, &sigma)
            .unwrap();
        assert_eq!(comparison, t.id2(&lifted));
    }

    fn assert_triangles<D: DispBicat>(t: &TotalBicat<D>, eq: &CartesianEquivalence<D>) {
        let e = &eq.forward;
        let ep = &eq.backward;
        let tri1 = t.vcomp2(
            &t.vcomp2(
                &t.vcomp2(
                    &t.vcomp2(&t.lunitor_inv(e), &t.rwhisker(&eq.unit, e)),
                    &t.associator_inv(e, ep, e),
                ),
                &t.lwhisker(e, &eq.counit),
            ),
            &t.runitor(e),
        );
        assert_eq!(tri1, t.id2(e));
        let tri2 = t.vcomp2(
            &t.vcomp2(
                &t.vcomp2(
                    &t.vcomp2(&t.runitor_inv(ep), &t.lwhisker(ep, &eq.unit)),
                    &t.associator(ep, e, ep),
                ),
                &t.rwhisker(&eq.counit, ep),
            ),
            &t.lunitor(ep),
        );
        assert_eq!(tri2, t.id2(ep));
    }

    #[test]
    fn equivalence_between_cartesian_lifts() {
        let t = trivial_total();
        let gc = trivial_cleaving(CatBicat, GpdBicat);
        let wa = fixtures::walking_arrow();
        let terminal = fixtures::terminal();
        let z2 = fixtures::z2();
        let f = FinFunctor::constant(&wa, &terminal, 0);
        let lift = gc.lift(&f, &z2).unwrap();
        let again = gc.lift(&f, &z2).unwrap();
        let eq = equivalence_between_cartesian(&t, &lift.cart, &again.cart).unwrap();
        assert!(t.invertible2(&eq.unit));
        assert!(t.invertible2(&eq.counit));
        assert!(t.invertible2(&eq.comparison));
        assert_triangles(&t, &eq);

        let ip = fixtures::iso_pair();
        let swap = GpdBicat
            .ones_between(&ip, &ip)
            .into_iter()
            .find(|c| c.on_obj(0) == 1 && c.on_obj(1) == 0)
            .unwrap();
        let base = FinFunctor::identity(&terminal);
        let one_a = DCell1::<Triv> {
            base: base.clone(),
            src: ip.clone(),
            tgt: ip.clone(),
            cell: FinFunctor::identity(&ip),
        };
        let one_b = DCell1::<Triv> { base, src: ip.clone(), tgt: ip.clone(), cell: swap };
        let cs_a = CartesianStructure { one: one_a.clone(), kind: CartKind::Exhaustive };
        let cs_b = CartesianStructure { one: one_b.clone(), kind: CartKind::Exhaustive };
        let eq = equivalence_between_cartesian(&t, &cs_a, &cs_b).unwrap();
        assert!(t.invertible2(&eq.unit));
        assert!(t.invertible2(&eq.counit));
        assert_triangles(&t, &eq);
        assert_eq!(t.two_src(&eq.comparison), one_a);
        assert_eq!(t.two_tgt(&eq.comparison), t.comp1(&eq.forward, &one_b));
    }

    #[test]
    fn global_lift_shapes() {
        let gc = trivial_cleaving(CatBicat, GpdBicat);
        let wa = fixtures::walking_arrow();
        let z2 = fixtures::z2();
        let f = FinFunctor::constant(&wa, &fixtures::terminal(), 0);
        let lift = gc.lift(&f, &z2).unwrap();
        assert_eq!(lift.obj, z2);
        assert_eq!(lift.one.cell, FinFunctor::identity(&z2));

        let gi = indexed_cleaving();
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
        assert_eq!(gi.lift(&FinFunctor::identity(&wa), &fam).unwrap().obj, fam);
        let g1 = FinFunctor::constant(&terminal, &wa, 0);
        let g2 = FinFunctor::constant(&wa, &wa, 1);
        let comp = compose_functors(&g1, &g2).unwrap();
        let staged = gi.lift(&g1, &gi.lift(&g2, &fam).unwrap().obj).unwrap().obj;
        assert_eq!(gi.lift(&comp, &fam).unwrap().obj, staged);

        let ga = arrows_cleaving(GpdBicat);
        let anchor = FinFunctor::constant(&terminal, &z2, 0);
        let up = GpdBicat.ones_between(&z2, &z2).into_iter().find(|c| !c.is_identity()).unwrap();
        let alift = ga.lift(&up, &anchor).unwrap();
        let pb = pullback_structure(&up, &anchor).unwrap();
        assert_eq!(alift.obj, pb.pi1);
        assert_eq!(alift.one.cell.top, pb.pi2);
        assert_eq!(alift.one.cell.fill, pb.gamma.inverse().unwrap());
    }
}
