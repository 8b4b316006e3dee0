//! Opcartesian morphisms, split opcleavings of a functor, and the decision
//! procedure that either produces a split opcleaving, reports that only
//! non-split cloven choices exist, or exhibits a pair with no opcartesian
//! lift at all.

use super::{FinFunctor, MorId, ObjId};

/// Decides opcartesianness of `m` over its image by brute-force universal
/// property enumeration: for every continuation `g` of the image and every
/// morphism `h` from the source lying over image-then-g, exactly one `k`
/// over `g` satisfies "m then k = h".
pub fn is_opcartesian(p: &FinFunctor, m: MorId) -> bool {
    let e_cat = p.dom();
    let b_cat = p.cod();
    let f = p.on_mor(m);
    let (e_src, e_tgt) = (e_cat.src(m), e_cat.tgt(m));
    for g in b_cat.morphisms() {
        if b_cat.src(g) != b_cat.tgt(f) {
            continue;
        }
        let fg = b_cat.compose(f, g).expect("composable by boundary");
        for h in e_cat.morphisms() {
            if e_cat.src(h) != e_src || p.on_mor(h) != fg {
                continue;
            }
            let count = e_cat
                .morphisms()
                .filter(|&k| {
                    e_cat.src(k) == e_tgt
                        && p.on_mor(k) == g
                        && e_cat.compose(m, k) == Some(h)
                })
                .count();
            if count != 1 {
                return false;
            }
        }
    }
    true
}

/// A choice of lift per (object, coinitial base morphism) pair, over `P`.
/// A valid value has every lift over its base morphism, starting at its
/// object, opcartesian, with identities and composites respected (split).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Opcleaving {
    over: FinFunctor,
    /// Dense table: entry at `e * |B_1| + f` is the chosen lift, present
    /// exactly when `src f = P(e)`.
    lift: Vec<Option<MorId>>,
}

/// One violated opcleaving condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CleavingViolation {
    Shape { detail: String },
    /// No lift chosen for a pair that needs one.
    Missing { object: ObjId, along: MorId },
    /// A lift chosen for a pair that must not have one.
    Spurious { object: ObjId, along: MorId },
    /// The chosen lift does not start at the object or project to the
    /// base morphism.
    WrongBoundary { object: ObjId, along: MorId },
    /// The chosen lift fails the universal property.
    NotOpcartesian { object: ObjId, along: MorId },
    /// lift(e, identity) is not the identity.
    IdentityLift { object: ObjId },
    /// lift(e, f then g) differs from lift(e, f) then lift(-, g).
    CompositionLift { object: ObjId, f: MorId, g: MorId },
}

impl std::fmt::Display for CleavingViolation {
    fn fmt(&self, w: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use CleavingViolation::*;
        match self {
            Shape { detail } => write!(w, "malformed lift table: {detail}"),
            Missing { object, along } => write!(w, "no lift of {along} from object {object}"),
            Spurious { object, along } => {
                write!(w, "lift present for non-coinitial pair ({object}, {along})")
            }
            WrongBoundary { object, along } => {
                write!(w, "lift of {along} from {object} has wrong source or projection")
            }
            NotOpcartesian { object, along } => {
                write!(w, "lift of {along} from {object} is not opcartesian")
            }
            IdentityLift { object } => {
                write!(w, "lift of the identity at object {object} is not the identity")
            }
            CompositionLift { object, f, g } => {
                write!(w, "lifts from {object} do not compose along ({f} {g})")
            }
        }
    }
}

impl Opcleaving {
    /// Builds a lift table from a choice function. The function is called
    /// exactly on pairs with `src f = P(e)`.
    pub fn from_choice(over: &FinFunctor, mut choice: impl FnMut(ObjId, MorId) -> MorId) -> Self {
        let nb = over.cod().n_mor();
        let mut lift = vec![None; over.dom().n_objects() * nb];
        for e in over.dom().objects() {
            for f in over.cod().morphisms() {
                if over.cod().src(f) == over.on_obj(e) {
                    lift[e * nb + f] = Some(choice(e, f));
                }
            }
        }
        Opcleaving { over: over.clone(), lift }
    }

    pub fn from_table(over: FinFunctor, lift: Vec<Option<MorId>>) -> Self {
        Opcleaving { over, lift }
    }

    pub fn over(&self) -> &FinFunctor {
        &self.over
    }

    /// The chosen lift of `f` from `e`; defined iff `src f = P(e)`.
    pub fn lift(&self, e: ObjId, f: MorId) -> Option<MorId> {
        self.lift[e * self.over.cod().n_mor() + f]
    }

    /// Checks every opcleaving condition, including splitness, reporting
    /// all violations with witnesses.
    pub fn validate(&self) -> Vec<CleavingViolation> {
        use CleavingViolation::*;
        let mut out = Vec::new();
        let e_cat = self.over.dom();
        let b_cat = self.over.cod();
        let nb = b_cat.n_mor();
        if self.lift.len() != e_cat.n_objects() * nb {
            out.push(Shape {
                detail: format!(
                    "{} entries for {} object/morphism pairs",
                    self.lift.len(),
                    e_cat.n_objects() * nb
                ),
            });
            return out;
        }
        for e in e_cat.objects() {
            for f in b_cat.morphisms() {
                let coinitial = b_cat.src(f) == self.over.on_obj(e);
                match (coinitial, self.lift[e * nb + f]) {
                    (true, None) => out.push(Missing { object: e, along: f }),
                    (false, Some(_)) => out.push(Spurious { object: e, along: f }),
                    (true, Some(m)) => {
                        if m >= e_cat.n_mor() {
                            out.push(Shape { detail: format!("lift({e}, {f}) out of range") });
                        } else if e_cat.src(m) != e || self.over.on_mor(m) != f {
                            out.push(WrongBoundary { object: e, along: f });
                        } else if !is_opcartesian(&self.over, m) {
                            out.push(NotOpcartesian { object: e, along: f });
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        for e in e_cat.objects() {
            let id = b_cat.identity(self.over.on_obj(e));
            if self.lift[e * nb + id] != Some(e_cat.identity(e)) {
                out.push(IdentityLift { object: e });
            }
        }
        for e in e_cat.objects() {
            for f in b_cat.morphisms() {
                if b_cat.src(f) != self.over.on_obj(e) {
                    continue;
                }
                let lf = self.lift[e * nb + f].expect("checked above");
                for g in b_cat.morphisms() {
                    if b_cat.src(g) != b_cat.tgt(f) {
                        continue;
                    }
                    let fg = b_cat.compose(f, g).expect("composable by boundary");
                    let lg = self.lift[e_cat.tgt(lf) * nb + g].expect("checked above");
                    if e_cat.compose(lf, lg) != self.lift[e * nb + fg] {
                        out.push(CompositionLift { object: e, f, g });
                    }
                }
            }
        }
        out
    }
}

/// Outcome of the split opfibration decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpfibDecision {
    /// A split choice of opcartesian lifts exists; the returned one is the
    /// lexicographically least under lowest-morphism-id candidate order.
    Split(Opcleaving),
    /// Every pair has an opcartesian lift but no choice is split. Carries
    /// the lowest-morphism-id cloven choice.
    NotSplit { lifts: Vec<Option<MorId>> },
    /// Witness pair with no opcartesian lift at all.
    NotOpfibration { object: ObjId, along: MorId },
}

impl std::fmt::Display for OpfibDecision {
    fn fmt(&self, w: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OpfibDecision::Split(_) => write!(w, "split opfibration"),
            OpfibDecision::NotSplit { .. } => write!(w, "opfibration, not split"),
            OpfibDecision::NotOpfibration { object, along } => {
                write!(w, "not an opfibration: no opcartesian lift of {along} from {object}")
            }
        }
    }
}

/// Decides whether `P` is a split opfibration. Candidate lifts are tried in
/// increasing morphism id; identities are forced to identity lifts; the
/// split laws are enforced by backtracking over the remaining pairs.
pub fn decide_split_opfibration(p: &FinFunctor) -> OpfibDecision {
    let e_cat = p.dom();
    let b_cat = p.cod();
    let nb = b_cat.n_mor();
    let mut cands: Vec<Vec<MorId>> = vec![Vec::new(); e_cat.n_objects() * nb];
    for e in e_cat.objects() {
        for f in b_cat.morphisms() {
            if b_cat.src(f) != p.on_obj(e) {
                continue;
            }
            let ms: Vec<MorId> = e_cat
                .morphisms()
                .filter(|&m| e_cat.src(m) == e && p.on_mor(m) == f && is_opcartesian(p, m))
                .collect();
            if ms.is_empty() {
                return OpfibDecision::NotOpfibration { object: e, along: f };
            }
            cands[e * nb + f] = ms;
        }
    }
    let mut assign: Vec<Option<MorId>> = vec![None; e_cat.n_objects() * nb];
    let mut points = Vec::new();
    for e in e_cat.objects() {
        for f in b_cat.morphisms() {
            if b_cat.src(f) != p.on_obj(e) {
                continue;
            }
            if b_cat.is_identity(f) {
                assign[e * nb + f] = Some(e_cat.identity(e));
            } else {
                points.push((e, f));
            }
        }
    }
    // rejects the partial assignment as soon as a fully determined split
    // constraint fails
    let consistent = |assign: &[Option<MorId>]| {
        for e in e_cat.objects() {
            for f in b_cat.morphisms() {
                if b_cat.src(f) != p.on_obj(e) {
                    continue;
                }
                let Some(lf) = assign[e * nb + f] else { continue };
                for g in b_cat.morphisms() {
                    if b_cat.src(g) != b_cat.tgt(f) {
                        continue;
                    }
                    let fg = b_cat.compose(f, g).expect("composable by boundary");
                    let Some(lg) = assign[e_cat.tgt(lf) * nb + g] else { continue };
                    let Some(lfg) = assign[e * nb + fg] else { continue };
                    if e_cat.compose(lf, lg) != Some(lfg) {
                        return false;
                    }
                }
            }
        }
        true
    };
    fn dfs(
        idx: usize,
        points: &[(ObjId, MorId)],
        cands: &[Vec<MorId>],
        assign: &mut Vec<Option<MorId>>,
        nb: usize,
        consistent: &impl Fn(&[Option<MorId>]) -> bool,
    ) -> bool {
        let Some(&(e, f)) = points.get(idx) else {
            return consistent(assign);
        };
        for &m in &cands[e * nb + f] {
            assign[e * nb + f] = Some(m);
            if consistent(assign)
                && dfs(idx + 1, points, cands, assign, nb, consistent)
            {
                return true;
            }
        }
        assign[e * nb + f] = None;
        false
    }
    if dfs(0, &points, &cands, &mut assign, nb, &consistent) {
        OpfibDecision::Split(Opcleaving::from_table(p.clone(), assign))
    } else {
        let mut lifts: Vec<Option<MorId>> = vec![None; e_cat.n_objects() * nb];
        for e in e_cat.objects() {
            for f in b_cat.morphisms() {
                if b_cat.src(f) == p.on_obj(e) {
                    lifts[e * nb + f] = Some(cands[e * nb + f][0]);
                }
            }
        }
        OpfibDecision::NotSplit { lifts }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{fixtures, FinFunctor};
    use super::*;

    #[test]
    fn identity_functor_splits_with_identity_lifts() {
        let c = fixtures::walking_arrow();
        match decide_split_opfibration(&FinFunctor::identity(&c)) {
            OpfibDecision::Split(cl) => {
                for e in c.objects() {
                    for f in c.morphisms() {
                        if c.src(f) == e {
                            assert_eq!(cl.lift(e, f), Some(f));
                        }
                    }
                }
                assert!(cl.validate().is_empty());
            }
            other => panic!("expected split, got {other}"),
        }
    }

    #[test]
    fn source_inclusion_into_walking_arrow_is_rejected() {
        let t = fixtures::terminal();
        let wa = fixtures::walking_arrow();
        let p = FinFunctor::constant(&t, &wa, 0);
        assert_eq!(
            decide_split_opfibration(&p),
            OpfibDecision::NotOpfibration { object: 0, along: 2 }
        );
    }

    #[test]
    fn quotient_of_cyclic_groups_is_cloven_not_split() {
        let z4 = fixtures::cyclic_group(4);
        let z2 = fixtures::z2();
        let p = FinFunctor::new(z4.clone(), z2.clone(), vec![0], vec![0, 1, 0, 1]).unwrap();
        match decide_split_opfibration(&p) {
            OpfibDecision::NotSplit { lifts } => {
                // lowest-id choice lifts the generator to the first preimage
                assert_eq!(lifts[1], Some(1));
            }
            other => panic!("expected a non-split opfibration, got {other}"),
        }
    }

    #[test]
    fn group_isomorphism_splits() {
        let z3 = fixtures::cyclic_group(3);
        let rotate = FinFunctor::new(z3.clone(), z3.clone(), vec![0], vec![0, 2, 1]).unwrap();
        assert!(matches!(decide_split_opfibration(&rotate), OpfibDecision::Split(_)));
    }

    #[test]
    fn every_morphism_of_a_group_is_opcartesian() {
        let z4 = fixtures::cyclic_group(4);
        let z2 = fixtures::z2();
        let p = FinFunctor::new(z4.clone(), z2.clone(), vec![0], vec![0, 1, 0, 1]).unwrap();
        for m in z4.morphisms() {
            assert!(is_opcartesian(&p, m));
        }
    }
}
