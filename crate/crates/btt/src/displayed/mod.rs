//! Displayed bicategories: structure layered over a base bicategory, the
//! total bicategory gluing the two layers, the projection back to the base,
//! and cartesian/opcartesian lifting machinery with concrete instances.

mod arrows;
mod cartesian;
mod indexed;
mod opcart;
mod sub;
mod trivial;

pub use arrows::{ArrowCell, ArrowsDisp};
pub use cartesian::{
    arrows_cleaving, compose_cartesian, decide_cartesian_1cell, decide_cartesian_bounded,
    equivalence_between_cartesian, identity_cartesian, indexed_cleaving, trivial_cleaving,
    validate_cleaving, CartDecision, CartError, CartKind, CartScope, CartesianEquivalence,
    CartesianStructure, GlobalCleaving, GlobalLift,
};
pub use indexed::IndexedCatDisp;
pub use opcart::{
    arrows_opcleaving, check_whisker_preserves_opcart, decide_opcartesian_2cell,
    indexed_opcleaving, invert2_by_search, trivial_opcleaving, validate_opcleaving,
    LocalOpcleaving, OpcartDecision, OpcartLift,
};
pub use sub::{subbicat, SubBicat, SubBicatError};
pub use trivial::TrivialDisp;

use crate::bicat::{check_bicat_axioms, Bicat, CellPool, LawViolation, Pseudofunctor};

pub type BaseObj<D> = <<D as DispBicat>::Base as Bicat>::Obj;
pub type BaseOne<D> = <<D as DispBicat>::Base as Bicat>::One;
pub type BaseTwo<D> = <<D as DispBicat>::Base as Bicat>::Two;

/// A displayed 1-cell together with the base 1-cell it lies over and the
/// displayed objects at its endpoints. Carrying the boundary makes exact
/// structural equality meaningful for displayed parts whose own data does
/// not determine it.
pub struct DCell1<D: DispBicat> {
    pub base: BaseOne<D>,
    pub src: D::DObj,
    pub tgt: D::DObj,
    pub cell: D::DOne,
}

/// A displayed 2-cell over a base 2-cell, between two displayed 1-cells.
pub struct DCell2<D: DispBicat> {
    pub base: BaseTwo<D>,
    pub src: DCell1<D>,
    pub tgt: DCell1<D>,
    pub cell: D::DTwo,
}

impl<D: DispBicat> Clone for DCell1<D> {
    fn clone(&self) -> Self {
        DCell1 {
            base: self.base.clone(),
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            cell: self.cell.clone(),
        }
    }
}

impl<D: DispBicat> PartialEq for DCell1<D> {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base
            && self.src == other.src
            && self.tgt == other.tgt
            && self.cell == other.cell
    }
}

impl<D: DispBicat> std::fmt::Debug for DCell1<D> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DCell1")
            .field("base", &self.base)
            .field("src", &self.src)
            .field("tgt", &self.tgt)
            .field("cell", &self.cell)
            .finish()
    }
}

impl<D: DispBicat> Clone for DCell2<D> {
    fn clone(&self) -> Self {
        DCell2 {
            base: self.base.clone(),
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            cell: self.cell.clone(),
        }
    }
}

impl<D: DispBicat> PartialEq for DCell2<D> {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base
            && self.src == other.src
            && self.tgt == other.tgt
            && self.cell == other.cell
    }
}

impl<D: DispBicat> std::fmt::Debug for DCell2<D> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DCell2")
            .field("base", &self.base)
            .field("src", &self.src)
            .field("tgt", &self.tgt)
            .field("cell", &self.cell)
            .finish()
    }
}

/// Structure displayed over a base bicategory: carriers indexed by base
/// cells, displayed identity and composition at both dimensions, and
/// displayed unitors and associator lying over the base's. Laws are not
/// restated here; they hold exactly when the total bicategory passes
/// `check_bicat_axioms`, since total operations pair base operations with
/// the displayed ones and total equality is componentwise.
///
/// Displayed cells are instance-specific data; there is no universal
/// encoding. Enumerators return every displayed cell over the given base
/// cell, which keeps decision procedures exhaustive.
pub trait DispBicat: Sized {
    type Base: Bicat;
    type DObj: Clone + PartialEq + std::fmt::Debug;
    type DOne: Clone + PartialEq + std::fmt::Debug;
    type DTwo: Clone + PartialEq + std::fmt::Debug;

    fn base(&self) -> &Self::Base;

    fn is_dobj(&self, a: &BaseObj<Self>, x: &Self::DObj) -> bool;
    fn is_done(&self, f: &BaseOne<Self>, x: &Self::DObj, y: &Self::DObj, fd: &Self::DOne)
        -> bool;
    fn is_dtwo(&self, t: &BaseTwo<Self>, f: &DCell1<Self>, g: &DCell1<Self>, td: &Self::DTwo)
        -> bool;

    fn did1(&self, a: &BaseObj<Self>, x: &Self::DObj) -> Self::DOne;
    fn dcomp1(&self, f: &DCell1<Self>, g: &DCell1<Self>) -> Self::DOne;
    fn did2(&self, f: &DCell1<Self>) -> Self::DTwo;
    fn dvcomp2(&self, t: &DCell2<Self>, u: &DCell2<Self>) -> Self::DTwo;
    fn dlwhisker(&self, f: &DCell1<Self>, t: &DCell2<Self>) -> Self::DTwo;
    fn drwhisker(&self, t: &DCell2<Self>, h: &DCell1<Self>) -> Self::DTwo;

    fn dlunitor(&self, f: &DCell1<Self>) -> Self::DTwo;
    fn dlunitor_inv(&self, f: &DCell1<Self>) -> Self::DTwo;
    fn drunitor(&self, f: &DCell1<Self>) -> Self::DTwo;
    fn drunitor_inv(&self, f: &DCell1<Self>) -> Self::DTwo;
    fn dassociator(&self, f: &DCell1<Self>, g: &DCell1<Self>, h: &DCell1<Self>) -> Self::DTwo;
    fn dassociator_inv(&self, f: &DCell1<Self>, g: &DCell1<Self>, h: &DCell1<Self>)
        -> Self::DTwo;

    fn dinvertible2(&self, t: &DCell2<Self>) -> bool;

    fn d_ones_over(&self, f: &BaseOne<Self>, x: &Self::DObj, y: &Self::DObj) -> Vec<Self::DOne>;
    fn d_twos_over(&self, t: &BaseTwo<Self>, f: &DCell1<Self>, g: &DCell1<Self>)
        -> Vec<Self::DTwo>;

    /// Closed-form cartesian factorization through `f` of `g` lying over
    /// `h . base(f)`, when the instance has one. None defers to exhaustive
    /// search.
    fn closed_lift(
        &self,
        _f: &DCell1<Self>,
        _h: &BaseOne<Self>,
        _g: &DCell1<Self>,
    ) -> Option<(Self::DOne, Self::DTwo)> {
        None
    }

    /// Exact cartesianness criterion, when the instance has one. None
    /// defers to bounded search over pool data.
    fn exact_cartesian(&self, _f: &DCell1<Self>) -> Option<bool> {
        None
    }
}

/// The bicategory of pairs (base cell, displayed cell). Operations pair the
/// base operation with the displayed one, so every total cell lies over its
/// base part by construction, and each total law instance projects to a
/// base law instance.
pub struct TotalBicat<D: DispBicat>(pub D);

impl<D: DispBicat> TotalBicat<D> {
    pub fn disp(&self) -> &D {
        &self.0
    }

    fn base(&self) -> &D::Base {
        self.0.base()
    }
}

impl<D: DispBicat> Bicat for TotalBicat<D> {
    type Obj = (BaseObj<D>, D::DObj);
    type One = DCell1<D>;
    type Two = DCell2<D>;

    fn contains_obj(&self, a: &Self::Obj) -> bool {
        self.base().contains_obj(&a.0) && self.0.is_dobj(&a.0, &a.1)
    }

    fn contains_one(&self, f: &Self::One) -> bool {
        self.base().contains_one(&f.base)
            && self.0.is_dobj(&self.base().one_src(&f.base), &f.src)
            && self.0.is_dobj(&self.base().one_tgt(&f.base), &f.tgt)
            && self.0.is_done(&f.base, &f.src, &f.tgt, &f.cell)
    }

    fn contains_two(&self, t: &Self::Two) -> bool {
        self.base().contains_two(&t.base)
            && self.contains_one(&t.src)
            && self.contains_one(&t.tgt)
            && self.base().two_src(&t.base) == t.src.base
            && self.base().two_tgt(&t.base) == t.tgt.base
            && t.src.src == t.tgt.src
            && t.src.tgt == t.tgt.tgt
            && self.0.is_dtwo(&t.base, &t.src, &t.tgt, &t.cell)
    }

    fn one_src(&self, f: &Self::One) -> Self::Obj {
        (self.base().one_src(&f.base), f.src.clone())
    }

    fn one_tgt(&self, f: &Self::One) -> Self::Obj {
        (self.base().one_tgt(&f.base), f.tgt.clone())
    }

    fn two_src(&self, t: &Self::Two) -> Self::One {
        t.src.clone()
    }

    fn two_tgt(&self, t: &Self::Two) -> Self::One {
        t.tgt.clone()
    }

    fn id1(&self, a: &Self::Obj) -> Self::One {
        DCell1 {
            base: self.base().id1(&a.0),
            src: a.1.clone(),
            tgt: a.1.clone(),
            cell: self.0.did1(&a.0, &a.1),
        }
    }

    fn comp1(&self, f: &Self::One, g: &Self::One) -> Self::One {
        DCell1 {
            base: self.base().comp1(&f.base, &g.base),
            src: f.src.clone(),
            tgt: g.tgt.clone(),
            cell: self.0.dcomp1(f, g),
        }
    }

    fn id2(&self, f: &Self::One) -> Self::Two {
        DCell2 {
            base: self.base().id2(&f.base),
            src: f.clone(),
            tgt: f.clone(),
            cell: self.0.did2(f),
        }
    }

    fn vcomp2(&self, t: &Self::Two, u: &Self::Two) -> Self::Two {
        DCell2 {
            base: self.base().vcomp2(&t.base, &u.base),
            src: t.src.clone(),
            tgt: u.tgt.clone(),
            cell: self.0.dvcomp2(t, u),
        }
    }

    fn lwhisker(&self, f: &Self::One, t: &Self::Two) -> Self::Two {
        DCell2 {
            base: self.base().lwhisker(&f.base, &t.base),
            src: self.comp1(f, &t.src),
            tgt: self.comp1(f, &t.tgt),
            cell: self.0.dlwhisker(f, t),
        }
    }

    fn rwhisker(&self, t: &Self::Two, h: &Self::One) -> Self::Two {
        DCell2 {
            base: self.base().rwhisker(&t.base, &h.base),
            src: self.comp1(&t.src, h),
            tgt: self.comp1(&t.tgt, h),
            cell: self.0.drwhisker(t, h),
        }
    }

    fn lunitor(&self, f: &Self::One) -> Self::Two {
        let id = self.id1(&self.one_src(f));
        DCell2 {
            base: self.base().lunitor(&f.base),
            src: self.comp1(&id, f),
            tgt: f.clone(),
            cell: self.0.dlunitor(f),
        }
    }

    fn lunitor_inv(&self, f: &Self::One) -> Self::Two {
        let id = self.id1(&self.one_src(f));
        DCell2 {
            base: self.base().lunitor_inv(&f.base),
            src: f.clone(),
            tgt: self.comp1(&id, f),
            cell: self.0.dlunitor_inv(f),
        }
    }

    fn runitor(&self, f: &Self::One) -> Self::Two {
        let id = self.id1(&self.one_tgt(f));
        DCell2 {
            base: self.base().runitor(&f.base),
            src: self.comp1(f, &id),
            tgt: f.clone(),
            cell: self.0.drunitor(f),
        }
    }

    fn runitor_inv(&self, f: &Self::One) -> Self::Two {
        let id = self.id1(&self.one_tgt(f));
        DCell2 {
            base: self.base().runitor_inv(&f.base),
            src: f.clone(),
            tgt: self.comp1(f, &id),
            cell: self.0.drunitor_inv(f),
        }
    }

    fn associator(&self, f: &Self::One, g: &Self::One, h: &Self::One) -> Self::Two {
        DCell2 {
            base: self.base().associator(&f.base, &g.base, &h.base),
            src: self.comp1(f, &self.comp1(g, h)),
            tgt: self.comp1(&self.comp1(f, g), h),
            cell: self.0.dassociator(f, g, h),
        }
    }

    fn associator_inv(&self, f: &Self::One, g: &Self::One, h: &Self::One) -> Self::Two {
        DCell2 {
            base: self.base().associator_inv(&f.base, &g.base, &h.base),
            src: self.comp1(&self.comp1(f, g), h),
            tgt: self.comp1(f, &self.comp1(g, h)),
            cell: self.0.dassociator_inv(f, g, h),
        }
    }

    fn ones_between(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::One> {
        let mut out = Vec::new();
        for base in self.base().ones_between(&a.0, &b.0) {
            for cell in self.0.d_ones_over(&base, &a.1, &b.1) {
                out.push(DCell1 {
                    base: base.clone(),
                    src: a.1.clone(),
                    tgt: b.1.clone(),
                    cell,
                });
            }
        }
        out
    }

    fn twos_between(&self, f: &Self::One, g: &Self::One) -> Vec<Self::Two> {
        let mut out = Vec::new();
        for base in self.base().twos_between(&f.base, &g.base) {
            for cell in self.0.d_twos_over(&base, f, g) {
                out.push(DCell2 {
                    base: base.clone(),
                    src: f.clone(),
                    tgt: g.clone(),
                    cell,
                });
            }
        }
        out
    }

    fn invertible2(&self, t: &Self::Two) -> bool {
        self.base().invertible2(&t.base) && self.0.dinvertible2(t)
    }
}

/// First projection, a pseudofunctor from the total bicategory to the base
/// with identity structure cells.
pub struct ProjectionPsf<'a, D: DispBicat>(pub &'a TotalBicat<D>);

impl<D: DispBicat> Pseudofunctor<TotalBicat<D>, D::Base> for ProjectionPsf<'_, D> {
    fn on_obj(&self, a: &(BaseObj<D>, D::DObj)) -> BaseObj<D> {
        a.0.clone()
    }

    fn on_one(&self, f: &DCell1<D>) -> BaseOne<D> {
        f.base.clone()
    }

    fn on_two(&self, t: &DCell2<D>) -> BaseTwo<D> {
        t.base.clone()
    }

    fn identitor(&self, a: &(BaseObj<D>, D::DObj)) -> BaseTwo<D> {
        let b = self.0.base();
        b.id2(&b.id1(&a.0))
    }

    fn identitor_inv(&self, a: &(BaseObj<D>, D::DObj)) -> BaseTwo<D> {
        self.identitor(a)
    }

    fn compositor(&self, f: &DCell1<D>, g: &DCell1<D>) -> BaseTwo<D> {
        let b = self.0.base();
        b.id2(&b.comp1(&f.base, &g.base))
    }

    fn compositor_inv(&self, f: &DCell1<D>, g: &DCell1<D>) -> BaseTwo<D> {
        self.compositor(f, g)
    }
}

/// Law suite for a displayed bicategory: the total bicategory's axioms over
/// the pool, plus closure of all total operations in the carrier. Closure
/// is the displayed instance's obligation; the base side holds because base
/// operations land in the base carrier.
pub fn check_displayed_axioms<D: DispBicat>(
    t: &TotalBicat<D>,
    pool: &CellPool<TotalBicat<D>>,
) -> Vec<LawViolation> {
    let mut out = check_bicat_axioms(t, pool);
    let fail = |out: &mut Vec<LawViolation>, law: &'static str, detail: String| {
        out.push(LawViolation { law, detail });
    };
    for a in &pool.objects {
        if !t.contains_one(&t.id1(a)) {
            fail(&mut out, "disp-closure-id1", format!("identity over {:?}", a));
        }
    }
    for f in &pool.ones {
        if !t.contains_two(&t.id2(f)) {
            fail(&mut out, "disp-closure-id2", format!("identity 2-cell on {:?}", f));
        }
        for u in [t.lunitor(f), t.lunitor_inv(f), t.runitor(f), t.runitor_inv(f)] {
            if !t.contains_two(&u) {
                fail(&mut out, "disp-closure-unitor", format!("{:?}", u));
            }
        }
        for g in &pool.ones {
            if t.one_tgt(f) != t.one_src(g) {
                continue;
            }
            if !t.contains_one(&t.comp1(f, g)) {
                fail(&mut out, "disp-closure-comp1", format!("{:?} then {:?}", f, g));
            }
            for h in &pool.ones {
                if t.one_tgt(g) != t.one_src(h) {
                    continue;
                }
                for assoc in [t.associator(f, g, h), t.associator_inv(f, g, h)] {
                    if !t.contains_two(&assoc) {
                        fail(&mut out, "disp-closure-associator", format!("{:?}", assoc));
                    }
                }
            }
        }
    }
    for x in &pool.twos {
        for y in &pool.twos {
            if t.two_tgt(x) == t.two_src(y) && !t.contains_two(&t.vcomp2(x, y)) {
                fail(&mut out, "disp-closure-vcomp2", format!("{:?} then {:?}", x, y));
            }
        }
        for f in &pool.ones {
            if t.one_tgt(f) == t.one_src(&t.two_src(x)) && !t.contains_two(&t.lwhisker(f, x)) {
                fail(&mut out, "disp-closure-whisker", format!("{:?} under {:?}", x, f));
            }
            if t.one_src(f) == t.one_tgt(&t.two_src(x)) && !t.contains_two(&t.rwhisker(x, f)) {
                fail(&mut out, "disp-closure-whisker", format!("{:?} over {:?}", x, f));
            }
        }
    }
    out
}
