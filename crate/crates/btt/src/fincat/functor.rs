//! Functors between finite categories and natural transformations between
//! parallel functors, with the whiskering and composition operations that
//! make finite categories into a (strict) bicategory.

use super::{FinCat, MorId, ObjId};

/// A functor between finite categories, given by total object and morphism
/// maps. Owns copies of both boundary categories; equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinFunctor {
    dom: FinCat,
    cod: FinCat,
    on_obj: Vec<ObjId>,
    on_mor: Vec<MorId>,
}

/// One violated functor law, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctorViolation {
    /// A map entry refers outside the codomain range, or a map has the
    /// wrong length for the domain.
    BadShape { detail: String },
    /// on_mor(f) has boundaries different from on_obj(src f) -> on_obj(tgt f).
    Boundary { mor: MorId },
    /// on_mor(identity(x)) is not identity(on_obj(x)).
    Identity { object: ObjId },
    /// on_mor(compose(f,g)) != compose(on_mor f, on_mor g).
    Composition { f: MorId, g: MorId },
}

impl std::fmt::Display for FunctorViolation {
    fn fmt(&self, w: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use FunctorViolation::*;
        match self {
            BadShape { detail } => write!(w, "malformed functor tables: {detail}"),
            Boundary { mor } => write!(w, "image of morphism {mor} has wrong boundaries"),
            Identity { object } => write!(w, "identity of object {object} not preserved"),
            Composition { f, g } => write!(w, "composite ({f} {g}) not preserved"),
        }
    }
}

/// Checks functor laws exhaustively; empty report iff the maps form a functor.
pub fn validate_functor(
    dom: &FinCat,
    cod: &FinCat,
    on_obj: &[ObjId],
    on_mor: &[MorId],
) -> Vec<FunctorViolation> {
    use FunctorViolation::*;
    let mut out = Vec::new();
    if on_obj.len() != dom.n_objects() {
        out.push(BadShape {
            detail: format!("{} object entries for {} objects", on_obj.len(), dom.n_objects()),
        });
    }
    if on_mor.len() != dom.n_mor() {
        out.push(BadShape {
            detail: format!("{} morphism entries for {} morphisms", on_mor.len(), dom.n_mor()),
        });
    }
    for (x, &y) in on_obj.iter().enumerate() {
        if y >= cod.n_objects() {
            out.push(BadShape { detail: format!("on_obj({x}) = {y} out of range") });
        }
    }
    for (f, &m) in on_mor.iter().enumerate() {
        if m >= cod.n_mor() {
            out.push(BadShape { detail: format!("on_mor({f}) = {m} out of range") });
        }
    }
    if !out.is_empty() {
        return out;
    }
    for f in dom.morphisms() {
        let m = on_mor[f];
        if cod.src(m) != on_obj[dom.src(f)] || cod.tgt(m) != on_obj[dom.tgt(f)] {
            out.push(Boundary { mor: f });
        }
    }
    for x in dom.objects() {
        if on_mor[dom.identity(x)] != cod.identity(on_obj[x]) {
            out.push(Identity { object: x });
        }
    }
    for f in dom.morphisms() {
        for g in dom.morphisms() {
            if let Some(h) = dom.compose(f, g) {
                if cod.compose(on_mor[f], on_mor[g]) != Some(on_mor[h]) {
                    out.push(Composition { f, g });
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, thiserror::Error)]
#[error("invalid functor: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
pub struct InvalidFunctor(pub Vec<FunctorViolation>);

/// Boundary mismatch between the two arguments of a pasting operation.
/// Carries a description of each offending boundary.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{op}: boundary mismatch: {left} vs {right}")]
pub struct BoundaryMismatch {
    pub op: &'static str,
    pub left: String,
    pub right: String,
}

pub(crate) fn describe_cat(c: &FinCat) -> String {
    format!("category({} objects, {} morphisms)", c.n_objects(), c.n_mor())
}

pub(crate) fn describe_functor(f: &FinFunctor) -> String {
    format!(
        "functor({} -> {}, on_obj {:?})",
        describe_cat(f.dom()),
        describe_cat(f.cod()),
        f.on_obj
    )
}

impl FinFunctor {
    /// Validates the maps and seals them into a functor.
    pub fn new(
        dom: FinCat,
        cod: FinCat,
        on_obj: Vec<ObjId>,
        on_mor: Vec<MorId>,
    ) -> Result<FinFunctor, InvalidFunctor> {
        let report = validate_functor(&dom, &cod, &on_obj, &on_mor);
        if !report.is_empty() {
            return Err(InvalidFunctor(report));
        }
        Ok(FinFunctor { dom, cod, on_obj, on_mor })
    }

    pub fn identity(c: &FinCat) -> FinFunctor {
        FinFunctor {
            dom: c.clone(),
            cod: c.clone(),
            on_obj: c.objects().collect(),
            on_mor: c.morphisms().collect(),
        }
    }

    /// The constant functor at an object: everything maps to `y` and its
    /// identity.
    pub fn constant(dom: &FinCat, cod: &FinCat, y: ObjId) -> FinFunctor {
        FinFunctor {
            dom: dom.clone(),
            cod: cod.clone(),
            on_obj: vec![y; dom.n_objects()],
            on_mor: vec![cod.identity(y); dom.n_mor()],
        }
    }

    pub fn dom(&self) -> &FinCat {
        &self.dom
    }
    pub fn cod(&self) -> &FinCat {
        &self.cod
    }
    pub fn on_obj(&self, x: ObjId) -> ObjId {
        self.on_obj[x]
    }
    pub fn on_mor(&self, f: MorId) -> MorId {
        self.on_mor[f]
    }
    pub fn obj_map(&self) -> &[ObjId] {
        &self.on_obj
    }
    pub fn mor_map(&self) -> &[MorId] {
        &self.on_mor
    }
    pub fn is_identity(&self) -> bool {
        self.dom == self.cod
            && self.on_obj.iter().enumerate().all(|(x, &y)| x == y)
            && self.on_mor.iter().enumerate().all(|(f, &m)| f == m)
    }
    /// Bijective on objects and morphisms (an isomorphism of categories,
    /// since functor laws then force the inverse to be a functor).
    pub fn is_isomorphism(&self) -> bool {
        let mut seen_obj = vec![false; self.cod.n_objects()];
        for &y in &self.on_obj {
            if seen_obj[y] {
                return false;
            }
            seen_obj[y] = true;
        }
        let mut seen_mor = vec![false; self.cod.n_mor()];
        for &m in &self.on_mor {
            if seen_mor[m] {
                return false;
            }
            seen_mor[m] = true;
        }
        seen_obj.iter().all(|&b| b) && seen_mor.iter().all(|&b| b)
    }
    /// Injective on every hom-set (parallel morphisms with equal images
    /// are equal).
    pub fn is_faithful(&self) -> bool {
        for x in self.dom.objects() {
            for y in self.dom.objects() {
                let hom: Vec<MorId> = self.dom.hom(x, y).collect();
                for (i, &f) in hom.iter().enumerate() {
                    for &g in &hom[i + 1..] {
                        if self.on_mor[f] == self.on_mor[g] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
    /// Reflects isomorphisms: only isomorphisms map to isomorphisms.
    pub fn is_conservative(&self) -> bool {
        self.dom
            .morphisms()
            .all(|f| !self.cod.is_iso(self.on_mor[f]) || self.dom.is_iso(f))
    }
    /// Inverse functor; None unless bijective on objects and morphisms.
    pub fn inverse(&self) -> Option<FinFunctor> {
        if !self.is_isomorphism() {
            return None;
        }
        let mut obj = vec![0; self.cod.n_objects()];
        for (x, &y) in self.on_obj.iter().enumerate() {
            obj[y] = x;
        }
        let mut mor = vec![0; self.cod.n_mor()];
        for (f, &m) in self.on_mor.iter().enumerate() {
            mor[m] = f;
        }
        Some(FinFunctor {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            on_obj: obj,
            on_mor: mor,
        })
    }
}

/// Composite "F then G". Errors unless cod F = dom G.
pub fn compose_functors(f: &FinFunctor, g: &FinFunctor) -> Result<FinFunctor, BoundaryMismatch> {
    if f.cod != g.dom {
        return Err(BoundaryMismatch {
            op: "compose_functors",
            left: format!("cod of first = {}", describe_cat(&f.cod)),
            right: format!("dom of second = {}", describe_cat(&g.dom)),
        });
    }
    Ok(FinFunctor {
        dom: f.dom.clone(),
        cod: g.cod.clone(),
        on_obj: f.on_obj.iter().map(|&x| g.on_obj[x]).collect(),
        on_mor: f.on_mor.iter().map(|&m| g.on_mor[m]).collect(),
    })
}

/// A natural transformation between parallel functors, given by one
/// component morphism of the codomain per object of the domain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinNatTrans {
    src: FinFunctor,
    tgt: FinFunctor,
    components: Vec<MorId>,
}

/// One violated naturality condition or malformed component family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NatTransViolation {
    /// src and tgt are not parallel functors.
    NotParallel { detail: String },
    /// Component family has the wrong length or out-of-range entries.
    BadShape { detail: String },
    /// component(x) is not a morphism on_obj_src(x) -> on_obj_tgt(x).
    ComponentBoundary { object: ObjId },
    /// Naturality square fails at a morphism of the domain.
    Naturality { mor: MorId },
}

impl std::fmt::Display for NatTransViolation {
    fn fmt(&self, w: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use NatTransViolation::*;
        match self {
            NotParallel { detail } => write!(w, "functors not parallel: {detail}"),
            BadShape { detail } => write!(w, "malformed component family: {detail}"),
            ComponentBoundary { object } => {
                write!(w, "component at object {object} has wrong boundaries")
            }
            Naturality { mor } => write!(w, "naturality square fails at morphism {mor}"),
        }
    }
}

/// Checks the naturality square at every morphism of the domain.
pub fn validate_nat_trans(
    src: &FinFunctor,
    tgt: &FinFunctor,
    components: &[MorId],
) -> Vec<NatTransViolation> {
    use NatTransViolation::*;
    let mut out = Vec::new();
    if src.dom != tgt.dom || src.cod != tgt.cod {
        out.push(NotParallel {
            detail: format!("{} vs {}", describe_functor(src), describe_functor(tgt)),
        });
        return out;
    }
    let dom = &src.dom;
    let cod = &src.cod;
    if components.len() != dom.n_objects() {
        out.push(BadShape {
            detail: format!("{} components for {} objects", components.len(), dom.n_objects()),
        });
        return out;
    }
    if let Some((x, &c)) = components.iter().enumerate().find(|&(_, &c)| c >= cod.n_mor()) {
        out.push(BadShape { detail: format!("component({x}) = {c} out of range") });
        return out;
    }
    for x in dom.objects() {
        let c = components[x];
        if cod.src(c) != src.on_obj[x] || cod.tgt(c) != tgt.on_obj[x] {
            out.push(ComponentBoundary { object: x });
        }
    }
    if !out.is_empty() {
        return out;
    }
    for f in dom.morphisms() {
        let (x, y) = (dom.src(f), dom.tgt(f));
        let left = cod.compose(src.on_mor[f], components[y]);
        let right = cod.compose(components[x], tgt.on_mor[f]);
        if left != right || left.is_none() {
            out.push(Naturality { mor: f });
        }
    }
    out
}

#[derive(Debug, Clone, thiserror::Error)]
#[error("invalid natural transformation: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
pub struct InvalidNatTrans(pub Vec<NatTransViolation>);

impl FinNatTrans {
    pub fn new(
        src: FinFunctor,
        tgt: FinFunctor,
        components: Vec<MorId>,
    ) -> Result<FinNatTrans, InvalidNatTrans> {
        let report = validate_nat_trans(&src, &tgt, &components);
        if !report.is_empty() {
            return Err(InvalidNatTrans(report));
        }
        Ok(FinNatTrans { src, tgt, components })
    }

    pub fn identity(f: &FinFunctor) -> FinNatTrans {
        FinNatTrans {
            src: f.clone(),
            tgt: f.clone(),
            components: f.obj_map().iter().map(|&x| f.cod().identity(x)).collect(),
        }
    }

    pub fn src(&self) -> &FinFunctor {
        &self.src
    }
    pub fn tgt(&self) -> &FinFunctor {
        &self.tgt
    }
    pub fn component(&self, x: ObjId) -> MorId {
        self.components[x]
    }
    pub fn components(&self) -> &[MorId] {
        &self.components
    }
    pub fn is_invertible(&self) -> bool {
        self.components.iter().all(|&c| self.src.cod().is_iso(c))
    }
    pub fn inverse(&self) -> Option<FinNatTrans> {
        let inv = self
            .components
            .iter()
            .map(|&c| self.src.cod().inverse(c))
            .collect::<Option<Vec<_>>>()?;
        Some(FinNatTrans { src: self.tgt.clone(), tgt: self.src.clone(), components: inv })
    }
}

/// Vertical composite "n then m". Errors unless tgt n = src m exactly.
pub fn vcomp(n: &FinNatTrans, m: &FinNatTrans) -> Result<FinNatTrans, BoundaryMismatch> {
    if n.tgt != m.src {
        return Err(BoundaryMismatch {
            op: "vcomp",
            left: format!("tgt of first = {}", describe_functor(&n.tgt)),
            right: format!("src of second = {}", describe_functor(&m.src)),
        });
    }
    let cod = n.src.cod();
    let components = n
        .components
        .iter()
        .zip(&m.components)
        .map(|(&a, &b)| cod.compose(a, b).expect("components share boundary objects"))
        .collect();
    Ok(FinNatTrans { src: n.src.clone(), tgt: m.tgt.clone(), components })
}

/// Left whiskering of `n : G => H` by `F`, yielding `F.G => F.H` with
/// component n(F x) at x. Errors unless cod F = dom G.
pub fn whisker_left(f: &FinFunctor, n: &FinNatTrans) -> Result<FinNatTrans, BoundaryMismatch> {
    if f.cod != *n.src.dom() {
        return Err(BoundaryMismatch {
            op: "whisker_left",
            left: format!("cod of functor = {}", describe_cat(&f.cod)),
            right: format!("dom of transformation = {}", describe_cat(n.src.dom())),
        });
    }
    Ok(FinNatTrans {
        src: compose_functors(f, &n.src).expect("boundary checked above"),
        tgt: compose_functors(f, &n.tgt).expect("boundary checked above"),
        components: f.obj_map().iter().map(|&x| n.components[x]).collect(),
    })
}

/// Right whiskering of `n : F1 => F2` by `G`, yielding `F1.G => F2.G` with
/// component G(n x) at x. Errors unless cod F1 = dom G.
pub fn whisker_right(n: &FinNatTrans, g: &FinFunctor) -> Result<FinNatTrans, BoundaryMismatch> {
    if *n.src.cod() != g.dom {
        return Err(BoundaryMismatch {
            op: "whisker_right",
            left: format!("cod of transformation = {}", describe_cat(n.src.cod())),
            right: format!("dom of functor = {}", describe_cat(&g.dom)),
        });
    }
    Ok(FinNatTrans {
        src: compose_functors(&n.src, g).expect("boundary checked above"),
        tgt: compose_functors(&n.tgt, g).expect("boundary checked above"),
        components: n.components.iter().map(|&c| g.on_mor[c]).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures;
    use super::*;

    use fixtures::chain3;

    #[test]
    fn identity_functor_validates() {
        let c = chain3();
        let f = FinFunctor::identity(&c);
        assert!(validate_functor(f.dom(), f.cod(), f.obj_map(), f.mor_map()).is_empty());
        assert!(f.is_identity());
        assert!(f.is_isomorphism());
    }

    #[test]
    fn non_functor_is_rejected() {
        let c = fixtures::walking_arrow();
        // map the arrow to id0: breaks boundary preservation
        let r = FinFunctor::new(c.clone(), c.clone(), vec![0, 1], vec![0, 1, 0]);
        assert_eq!(
            r.unwrap_err().0,
            vec![
                FunctorViolation::Boundary { mor: 2 },
                FunctorViolation::Composition { f: 2, g: 1 },
            ]
        );
    }

    #[test]
    fn faithful_and_conservative_predicates() {
        let wa = fixtures::walking_arrow();
        let pp = fixtures::parallel_pair();
        let pt = fixtures::terminal();
        assert!(FinFunctor::identity(&wa).is_faithful());
        assert!(FinFunctor::identity(&wa).is_conservative());
        // collapsing to the point keeps singleton hom-sets injective but
        // sends the non-invertible arrow to an identity
        let collapse_wa = FinFunctor::constant(&wa, &pt, 0);
        assert!(collapse_wa.is_faithful());
        assert!(!collapse_wa.is_conservative());
        // a parallel pair collapses to equal images: not faithful
        let collapse_pp = FinFunctor::constant(&pp, &pt, 0);
        assert!(!collapse_pp.is_faithful());
        // the endpoint inclusion of the point is both
        let point_in = FinFunctor::constant(&pt, &wa, 0);
        assert!(point_in.is_faithful());
        assert!(point_in.is_conservative());
    }

    #[test]
    fn whisker_left_by_identity_is_identity() {
        let c = chain3();
        let idc = FinFunctor::identity(&c);
        let constant = FinFunctor::constant(&c, &c, 2);
        // components x -> 2
        let n = FinNatTrans::new(idc.clone(), constant, vec![5, 4, 2]).unwrap();
        let w = whisker_left(&idc, &n).unwrap();
        assert_eq!(w, n);
    }

    #[test]
    fn vcomp_with_identity_is_identity() {
        let c = chain3();
        let idc = FinFunctor::identity(&c);
        let constant = FinFunctor::constant(&c, &c, 2);
        let n = FinNatTrans::new(idc.clone(), constant, vec![5, 4, 2]).unwrap();
        assert_eq!(vcomp(&FinNatTrans::identity(&idc), &n).unwrap(), n);
        assert_eq!(vcomp(&n, &FinNatTrans::identity(n.tgt())).unwrap(), n);
    }

    #[test]
    fn interchange_on_three_object_instance() {
        let c = fixtures::walking_arrow();
        let d = chain3();
        // s sends the walking arrow to 3 : 0 -> 1, s' to 4 : 1 -> 2
        let s = FinFunctor::new(c.clone(), d.clone(), vec![0, 1], vec![0, 1, 3]).unwrap();
        let s2 = FinFunctor::new(c.clone(), d.clone(), vec![1, 2], vec![1, 2, 4]).unwrap();
        let sigma = FinNatTrans::new(s, s2.clone(), vec![3, 4]).unwrap();
        let t = FinFunctor::identity(&d);
        let t2 = FinFunctor::constant(&d, &d, 2);
        let rho = FinNatTrans::new(t.clone(), t2, vec![5, 4, 2]).unwrap();
        let lhs = vcomp(&whisker_right(&sigma, &t).unwrap(), &whisker_left(&s2, &rho).unwrap())
            .unwrap();
        let rhs = vcomp(&whisker_left(&sigma.src().clone(), &rho).unwrap(), {
            let t2 = rho.tgt().clone();
            &whisker_right(&sigma, &t2).unwrap()
        })
        .unwrap();
        assert_eq!(lhs, rhs);
        // frozen componentwise evaluation: at 0, t(sigma_0)=3 then rho_1=4
        // composes to 5; at 1, t(sigma_1)=4 then rho_2=2 composes to 4
        assert_eq!(lhs.components(), &[5, 4]);
    }

    #[test]
    fn boundary_mismatch_names_both_sides() {
        let c = fixtures::walking_arrow();
        let d = chain3();
        let err = compose_functors(&FinFunctor::identity(&d), &FinFunctor::identity(&c))
            .unwrap_err();
        assert!(err.left.contains("3 objects"));
        assert!(err.right.contains("2 objects"));
    }

    /// Every vertically composable triple of transformations across a few
    /// fixture functor categories, walking arrow and two-element group.
    fn composable_triples() -> Vec<(FinNatTrans, FinNatTrans, FinNatTrans)> {
        use super::super::enumerate::{enumerate_functors, enumerate_nat_trans};
        let wa = fixtures::walking_arrow();
        let z2 = fixtures::z2();
        let mut out = Vec::new();
        for (dom, cod) in [(&wa, &wa), (&wa, &z2), (&z2, &z2)] {
            let funs = enumerate_functors(dom, cod);
            for f in &funs {
                for g in &funs {
                    for h in &funs {
                        for k in &funs {
                            for a in enumerate_nat_trans(f, g) {
                                for b in enumerate_nat_trans(g, h) {
                                    for c in enumerate_nat_trans(h, k) {
                                        out.push((a.clone(), b.clone(), c.clone()));
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

    proptest::proptest! {
        // vertical composition is associative on every composable triple
        #[test]
        fn vcomp_assoc(i in 0usize..1 << 16) {
            let triples = composable_triples();
            let (a, b, c) = &triples[i % triples.len()];
            let ab_c = vcomp(&vcomp(a, b).unwrap(), c).unwrap();
            let a_bc = vcomp(a, &vcomp(b, c).unwrap()).unwrap();
            proptest::prop_assert_eq!(ab_c, a_bc);
        }

        // whiskering the two factors of a horizontal composite in either
        // order gives the same transformation
        #[test]
        fn interchange_property(i in 0usize..1 << 16) {
            use super::super::enumerate::{enumerate_functors, enumerate_nat_trans};
            let wa = fixtures::walking_arrow();
            let z2 = fixtures::z2();
            let inner = enumerate_functors(&wa, &z2);
            let outer = enumerate_functors(&z2, &z2);
            let mut pairs = Vec::new();
            for f1 in &inner {
                for f2 in &inner {
                    for g1 in &outer {
                        for g2 in &outer {
                            for n in enumerate_nat_trans(f1, f2) {
                                for m in enumerate_nat_trans(g1, g2) {
                                    pairs.push((n.clone(), m.clone()));
                                }
                            }
                        }
                    }
                }
            }
            let (n, m) = &pairs[i % pairs.len()];
            let (f1, f2) = (n.src().clone(), n.tgt().clone());
            let (g1, g2) = (m.src().clone(), m.tgt().clone());
            let first_then_up = vcomp(
                &whisker_right(n, &g1).unwrap(),
                &whisker_left(&f2, m).unwrap(),
            )
            .unwrap();
            let up_then_first = vcomp(
                &whisker_left(&f1, m).unwrap(),
                &whisker_right(n, &g2).unwrap(),
            )
            .unwrap();
            proptest::prop_assert_eq!(first_then_up, up_then_first);
        }
    }
}
