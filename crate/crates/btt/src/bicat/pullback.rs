//! Pullback structures in the bicategory of finite categories: a cospan's
//! iso-comma apex packaged with its projections and invertible fill, cone
//! factorization, 2-cell factorization with exhaustive uniqueness, and a
//! bounded checker quantifying both over all cones from given domains.

use super::LawViolation;
use crate::fincat::{
    compose_functors, enumerate_functors, enumerate_nat_trans, iso_comma, vcomp, whisker_left,
    whisker_right, BoundaryMismatch, FinCat, FinFunctor, FinNatTrans, IsoComma,
};

/// A pullback of a cospan `f : a -> c <- b : g`: apex with projections
/// `pi1 : apex -> a`, `pi2 : apex -> b` and invertible
/// `gamma : pi1·f => pi2·g`. The apex is the iso-comma category, kept with
/// its decodings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PullbackStructure {
    pub apex: FinCat,
    pub pi1: FinFunctor,
    pub pi2: FinFunctor,
    pub gamma: FinNatTrans,
    pub iso: IsoComma,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PullbackError {
    #[error(transparent)]
    Boundary(#[from] BoundaryMismatch),
    #[error("cone fill 2-cell is not invertible")]
    FillNotInvertible,
    #[error("2-cell pair fails the compatibility pasting over the cospan")]
    Incompatible,
}

/// A cone factored through the apex: `mediating·pi1 = first leg` and
/// `mediating·pi2 = second leg` hold on the nose, so `theta` and `tau`
/// are identity 2-cells witnessing them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeFactorization {
    pub mediating: FinFunctor,
    pub theta: FinNatTrans,
    pub tau: FinNatTrans,
}

/// Builds the pullback of the cospan `f, g`. Errors unless the functors
/// share a codomain.
pub fn pullback_structure(
    f: &FinFunctor,
    g: &FinFunctor,
) -> Result<PullbackStructure, PullbackError> {
    let iso = iso_comma(f, g)?;
    Ok(PullbackStructure {
        apex: iso.cat.clone(),
        pi1: iso.pi1.clone(),
        pi2: iso.pi2.clone(),
        gamma: iso.nat.clone(),
        iso,
    })
}

impl PullbackStructure {
    pub fn cospan_left(&self) -> &FinFunctor {
        &self.iso.cospan_left
    }
    pub fn cospan_right(&self) -> &FinFunctor {
        &self.iso.cospan_right
    }

    /// Factors a cone `(p1, p2, fill)` with invertible
    /// `fill : p1·f => p2·g` through the apex. The mediating functor
    /// satisfies both leg equations exactly and restricts `gamma` to
    /// `fill`, so the returned 2-cells are identities.
    pub fn factor_cone(
        &self,
        p1: &FinFunctor,
        p2: &FinFunctor,
        fill: &FinNatTrans,
    ) -> Result<ConeFactorization, PullbackError> {
        if !fill.is_invertible() {
            return Err(PullbackError::FillNotInvertible);
        }
        let mediating = self.iso.factor_cone(p1, p2, fill)?;
        let theta = FinNatTrans::identity(&compose_functors(&mediating, &self.pi1)?);
        let tau = FinNatTrans::identity(&compose_functors(&mediating, &self.pi2)?);
        Ok(ConeFactorization { mediating, theta, tau })
    }

    /// The compatibility pasting both factorization clauses revolve
    /// around: `(u1 ⊲ gamma) • (tau ⊳ g)  =  (theta ⊳ f) • (u2 ⊲ gamma)`.
    fn compatible(
        &self,
        u1: &FinFunctor,
        u2: &FinFunctor,
        theta: &FinNatTrans,
        tau: &FinNatTrans,
    ) -> Result<bool, BoundaryMismatch> {
        let lhs = vcomp(
            &whisker_left(u1, &self.gamma)?,
            &whisker_right(tau, self.cospan_right())?,
        )?;
        let rhs = vcomp(
            &whisker_right(theta, self.cospan_left())?,
            &whisker_left(u2, &self.gamma)?,
        )?;
        Ok(lhs == rhs)
    }

    /// Factors a compatible pair of 2-cells over the legs through the
    /// apex: given `u1, u2 : z -> apex`, `theta : u1·pi1 => u2·pi1` and
    /// `tau : u1·pi2 => u2·pi2` satisfying the compatibility pasting,
    /// returns the 2-cell `nu : u1 => u2` with `nu ⊳ pi1 = theta` and
    /// `nu ⊳ pi2 = tau`. The checker verifies it is the only one.
    pub fn factor_two_cell(
        &self,
        u1: &FinFunctor,
        u2: &FinFunctor,
        theta: &FinNatTrans,
        tau: &FinNatTrans,
    ) -> Result<FinNatTrans, PullbackError> {
        let u1p1 = compose_functors(u1, &self.pi1)?;
        let u2p1 = compose_functors(u2, &self.pi1)?;
        let u1p2 = compose_functors(u1, &self.pi2)?;
        let u2p2 = compose_functors(u2, &self.pi2)?;
        if *theta.src() != u1p1 || *theta.tgt() != u2p1 {
            return Err(BoundaryMismatch {
                op: "factor_two_cell",
                left: "first 2-cell".into(),
                right: "expected u1·pi1 => u2·pi1".into(),
            }
            .into());
        }
        if *tau.src() != u1p2 || *tau.tgt() != u2p2 {
            return Err(BoundaryMismatch {
                op: "factor_two_cell",
                left: "second 2-cell".into(),
                right: "expected u1·pi2 => u2·pi2".into(),
            }
            .into());
        }
        if !self.compatible(u1, u2, theta, tau)? {
            return Err(PullbackError::Incompatible);
        }
        // the pair projects to an apex morphism at each object: the
        // compatibility pasting at that object is the square condition
        let components: Vec<_> = u1
            .dom()
            .objects()
            .map(|zo| {
                let pair = (theta.component(zo), tau.component(zo));
                self.apex
                    .morphisms()
                    .find(|&m| {
                        self.iso.morphisms[m] == pair
                            && self.apex.src(m) == u1.on_obj(zo)
                            && self.apex.tgt(m) == u2.on_obj(zo)
                    })
                    .expect("compatible components decode to an apex morphism")
            })
            .collect();
        let nu = FinNatTrans::new(u1.clone(), u2.clone(), components)
            .expect("projected naturality lifts to the apex");
        debug_assert_eq!(whisker_right(&nu, &self.pi1).as_ref(), Ok(theta));
        debug_assert_eq!(whisker_right(&nu, &self.pi2).as_ref(), Ok(tau));
        Ok(nu)
    }
}

/// Checks both factorization clauses of a pullback against every cone and
/// every 2-cell pair whose domain is drawn from `domains`. Bounded by the
/// supplied domains; each violation names the clause that failed.
pub fn check_pullback_ump(pb: &PullbackStructure, domains: &[FinCat]) -> Vec<LawViolation> {
    let mut out = Vec::new();
    let mut fail = |law: &'static str, detail: String| {
        out.push(LawViolation { law, detail });
    };
    let f = pb.cospan_left().clone();
    let g = pb.cospan_right().clone();
    for (di, z) in domains.iter().enumerate() {
        for (i1, p1) in enumerate_functors(z, f.dom()).iter().enumerate() {
            let p1f = compose_functors(p1, &f).expect("cone leg composes");
            for (i2, p2) in enumerate_functors(z, g.dom()).iter().enumerate() {
                let p2g = compose_functors(p2, &g).expect("cone leg composes");
                for fill in enumerate_nat_trans(&p1f, &p2g) {
                    if !fill.is_invertible() {
                        continue;
                    }
                    let at = || format!("domain #{di}, cone legs #{i1} #{i2}");
                    match pb.factor_cone(p1, p2, &fill) {
                        Err(e) => fail("pullback-cone-exists", format!("{}: {e}", at())),
                        Ok(cf) => {
                            let left = compose_functors(&cf.mediating, &pb.pi1)
                                .expect("mediating functor composes");
                            let right = compose_functors(&cf.mediating, &pb.pi2)
                                .expect("mediating functor composes");
                            if left != *p1 || right != *p2 {
                                fail("pullback-cone-legs", at());
                            }
                            let lhs = vcomp(
                                &whisker_right(&cf.theta, &f).expect("pasting composes"),
                                &fill,
                            )
                            .expect("pasting composes");
                            let rhs = vcomp(
                                &whisker_left(&cf.mediating, &pb.gamma)
                                    .expect("pasting composes"),
                                &whisker_right(&cf.tau, &g).expect("pasting composes"),
                            )
                            .expect("pasting composes");
                            if lhs != rhs {
                                fail("pullback-cone-pasting", at());
                            }
                        }
                    }
                }
            }
        }
        let mediators = enumerate_functors(z, &pb.apex);
        for (i1, u1) in mediators.iter().enumerate() {
            let u1p1 = compose_functors(u1, &pb.pi1).expect("mediator composes");
            let u1p2 = compose_functors(u1, &pb.pi2).expect("mediator composes");
            for (i2, u2) in mediators.iter().enumerate() {
                let u2p1 = compose_functors(u2, &pb.pi1).expect("mediator composes");
                let u2p2 = compose_functors(u2, &pb.pi2).expect("mediator composes");
                for (ti, theta) in enumerate_nat_trans(&u1p1, &u2p1).iter().enumerate() {
                    for (tj, tau) in enumerate_nat_trans(&u1p2, &u2p2).iter().enumerate() {
                        let at = || {
                            format!("domain #{di}, mediators #{i1} #{i2}, 2-cells #{ti} #{tj}")
                        };
                        let compat = pb
                            .compatible(u1, u2, theta, tau)
                            .expect("compatibility pasting composes");
                        match pb.factor_two_cell(u1, u2, theta, tau) {
                            Err(PullbackError::Incompatible) if !compat => {}
                            Err(e) => fail("pullback-two-cell-exists", format!("{}: {e}", at())),
                            Ok(_) if !compat => fail("pullback-two-cell-spurious", at()),
                            Ok(nu) => {
                                let wl = whisker_right(&nu, &pb.pi1).expect("whisker composes");
                                let wr = whisker_right(&nu, &pb.pi2).expect("whisker composes");
                                if wl != *theta || wr != *tau {
                                    fail("pullback-two-cell-projections", at());
                                }
                                let count = enumerate_nat_trans(u1, u2)
                                    .iter()
                                    .filter(|cand| {
                                        whisker_right(cand, &pb.pi1).as_ref() == Ok(theta)
                                            && whisker_right(cand, &pb.pi2).as_ref() == Ok(tau)
                                    })
                                    .count();
                                if count != 1 {
                                    fail(
                                        "pullback-two-cell-unique",
                                        format!("{}: {count} solutions", at()),
                                    );
                                }
                            }
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
    use super::*;
    use crate::fincat::{fixtures, product_category};

    #[test]
    fn identity_cospan_pullback_is_the_diagonal() {
        let wa = fixtures::walking_arrow();
        let id = FinFunctor::identity(&wa);
        let pb = pullback_structure(&id, &id).unwrap();
        // only identity isos exist, so the apex is the diagonal copy
        assert_eq!(pb.apex.n_objects(), 2);
        assert_eq!(pb.apex.n_mor(), 3);
        assert!(pb.gamma.is_invertible());
        let report =
            check_pullback_ump(&pb, &[fixtures::terminal(), fixtures::walking_arrow()]);
        assert_eq!(report, Vec::new());
    }

    #[test]
    fn group_cospan_pullback_satisfies_the_ump() {
        let z2 = fixtures::z2();
        let id = FinFunctor::identity(&z2);
        let pb = pullback_structure(&id, &id).unwrap();
        // one object per iso fill, one morphism per (fill, group element)
        assert_eq!(pb.apex.n_objects(), 2);
        assert_eq!(pb.apex.n_mor(), 8);
        let report =
            check_pullback_ump(&pb, &[fixtures::terminal(), fixtures::walking_arrow()]);
        assert_eq!(report, Vec::new());
    }

    #[test]
    fn cospan_over_terminal_recovers_the_product() {
        let wa = fixtures::walking_arrow();
        let z2 = fixtures::z2();
        let t = fixtures::terminal();
        let f = FinFunctor::constant(&wa, &t, 0);
        let g = FinFunctor::constant(&z2, &t, 0);
        let pb = pullback_structure(&f, &g).unwrap();
        let p = product_category(&wa, &z2);
        assert_eq!(pb.apex.sorted_by_boundary(), p.cat.sorted_by_boundary());
        let report = check_pullback_ump(&pb, &[fixtures::terminal()]);
        assert_eq!(report, Vec::new());
    }

    #[test]
    fn pullback_along_point_of_arrow_is_trivial() {
        let wa = fixtures::walking_arrow();
        let t = fixtures::terminal();
        let id = FinFunctor::identity(&wa);
        let point = FinFunctor::constant(&t, &wa, 0);
        let pb = pullback_structure(&id, &point).unwrap();
        assert_eq!(pb.apex.n_objects(), 1);
        assert_eq!(pb.apex.n_mor(), 1);
        let report =
            check_pullback_ump(&pb, &[fixtures::terminal(), fixtures::walking_arrow()]);
        assert_eq!(report, Vec::new());
    }

    #[test]
    fn non_invertible_fill_is_rejected() {
        let wa = fixtures::walking_arrow();
        let t = fixtures::terminal();
        let id = FinFunctor::identity(&wa);
        let pb = pullback_structure(&id, &id).unwrap();
        let p1 = FinFunctor::constant(&t, &wa, 0);
        let p2 = FinFunctor::constant(&t, &wa, 1);
        let fill = FinNatTrans::new(p1.clone(), p2.clone(), vec![2]).unwrap();
        assert!(!fill.is_invertible());
        assert_eq!(pb.factor_cone(&p1, &p2, &fill), Err(PullbackError::FillNotInvertible));
    }

    #[test]
    fn incompatible_pair_is_rejected_and_compatible_pair_factors() {
        let z2 = fixtures::z2();
        let t = fixtures::terminal();
        let id = FinFunctor::identity(&z2);
        let pb = pullback_structure(&id, &id).unwrap();
        // mediators land on the apex object with identity fill
        let obj = pb.iso.objects.iter().position(|&(_, _, m)| m == 0).unwrap();
        let u = FinFunctor::constant(&t, &pb.apex, obj);
        let up1 = compose_functors(&u, &pb.pi1).unwrap();
        let up2 = compose_functors(&u, &pb.pi2).unwrap();
        let idc = FinNatTrans::new(up1.clone(), up1.clone(), vec![0]).unwrap();
        let flip = FinNatTrans::new(up2.clone(), up2.clone(), vec![1]).unwrap();
        // identity fill forces the two components to agree
        assert_eq!(
            pb.factor_two_cell(&u, &u, &idc, &flip),
            Err(PullbackError::Incompatible)
        );
        let flip1 = FinNatTrans::new(up1.clone(), up1.clone(), vec![1]).unwrap();
        let nu = pb.factor_two_cell(&u, &u, &flip1, &flip).unwrap();
        assert_eq!(whisker_right(&nu, &pb.pi1).unwrap(), flip1);
        assert_eq!(whisker_right(&nu, &pb.pi2).unwrap(), flip);
    }
}
