//! Bicategory interface, concrete instances over finite categories, duals,
//! pullback structures, pseudofunctors, and exhaustive law suites over
//! finite cell pools.

mod cat;
mod law;
pub mod mutate;
mod op;
mod pseudofunctor;
mod pullback;

pub use cat::{CatBicat, GpdBicat};
pub use law::{check_bicat_axioms, LawViolation};
pub use op::{co_bicat, op_bicat, CoBicat, OpBicat};
pub use pseudofunctor::{check_pseudofunctor, IdentityPsf, Pseudofunctor};
pub use pullback::{
    check_pullback_ump, pullback_structure, ConeFactorization, PullbackError, PullbackStructure,
};

use crate::fincat::{category_pool, FinCat, PoolConfig};

/// A bicategory with by-value cells, exact 2-cell equality, and finite
/// enumeration of hom data. Operations taking composable or parallel cells
/// panic if the boundaries do not match; callers assemble only well-typed
/// pastings, and file-facing layers validate before constructing cells.
///
/// Conventions: `comp1(f, g)` is f-then-g, `vcomp2(t, u)` is t-then-u,
/// `lunitor(f) : id·f ⇒ f`, `runitor(f) : f·id ⇒ f`, and
/// `associator(f, g, h) : f·(g·h) ⇒ (f·g)·h`.
pub trait Bicat {
    type Obj: Clone + PartialEq + std::fmt::Debug;
    type One: Clone + PartialEq + std::fmt::Debug;
    type Two: Clone + PartialEq + std::fmt::Debug;

    fn contains_obj(&self, a: &Self::Obj) -> bool;
    fn contains_one(&self, f: &Self::One) -> bool;
    fn contains_two(&self, t: &Self::Two) -> bool;

    fn one_src(&self, f: &Self::One) -> Self::Obj;
    fn one_tgt(&self, f: &Self::One) -> Self::Obj;
    fn two_src(&self, t: &Self::Two) -> Self::One;
    fn two_tgt(&self, t: &Self::Two) -> Self::One;

    fn id1(&self, a: &Self::Obj) -> Self::One;
    fn comp1(&self, f: &Self::One, g: &Self::One) -> Self::One;
    fn id2(&self, f: &Self::One) -> Self::Two;
    fn vcomp2(&self, t: &Self::Two, u: &Self::Two) -> Self::Two;
    fn lwhisker(&self, f: &Self::One, t: &Self::Two) -> Self::Two;
    fn rwhisker(&self, t: &Self::Two, h: &Self::One) -> Self::Two;

    fn lunitor(&self, f: &Self::One) -> Self::Two;
    fn lunitor_inv(&self, f: &Self::One) -> Self::Two;
    fn runitor(&self, f: &Self::One) -> Self::Two;
    fn runitor_inv(&self, f: &Self::One) -> Self::Two;
    fn associator(&self, f: &Self::One, g: &Self::One, h: &Self::One) -> Self::Two;
    fn associator_inv(&self, f: &Self::One, g: &Self::One, h: &Self::One) -> Self::Two;

    fn ones_between(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::One>;
    fn twos_between(&self, f: &Self::One, g: &Self::One) -> Vec<Self::Two>;

    fn invertible2(&self, t: &Self::Two) -> bool;
}

/// Finite collection of cells the law suites quantify over. Ones and twos
/// are generated from the objects, so every hom and every parallel pair is
/// covered exhaustively.
pub struct CellPool<B: Bicat> {
    pub objects: Vec<B::Obj>,
    pub ones: Vec<B::One>,
    pub twos: Vec<B::Two>,
}

impl<B: Bicat> Clone for CellPool<B> {
    fn clone(&self) -> Self {
        CellPool {
            objects: self.objects.clone(),
            ones: self.ones.clone(),
            twos: self.twos.clone(),
        }
    }
}

impl<B: Bicat> CellPool<B> {
    /// Exhaustive pool over the given objects: all 1-cells between each
    /// ordered pair, all 2-cells between each parallel pair.
    pub fn generate(b: &B, objects: Vec<B::Obj>) -> CellPool<B> {
        let mut ones = Vec::new();
        for a in &objects {
            for c in &objects {
                ones.extend(b.ones_between(a, c));
            }
        }
        let mut twos = Vec::new();
        for f in &ones {
            for g in &ones {
                if b.one_src(f) == b.one_src(g) && b.one_tgt(f) == b.one_tgt(g) {
                    twos.extend(b.twos_between(f, g));
                }
            }
        }
        CellPool { objects, ones, twos }
    }
}

/// Builds the hom-category of two objects as a finite category: objects are
/// the 1-cells a -> b, morphisms the 2-cells, composition is vertical.
pub fn hom_category<B: Bicat>(b: &B, a: &B::Obj, c: &B::Obj) -> FinCat {
    let ones = b.ones_between(a, c);
    let mut twos = Vec::new();
    let mut mor = Vec::new();
    for (i, f) in ones.iter().enumerate() {
        for (j, g) in ones.iter().enumerate() {
            for t in b.twos_between(f, g) {
                twos.push(t);
                mor.push((i, j));
            }
        }
    }
    let identity: Vec<usize> = ones
        .iter()
        .map(|f| {
            let id = b.id2(f);
            twos.iter().position(|t| *t == id).expect("identity 2-cell enumerated")
        })
        .collect();
    let mut compose = Vec::new();
    for (i, t) in twos.iter().enumerate() {
        for (j, u) in twos.iter().enumerate() {
            if mor[i].1 == mor[j].0 {
                let v = b.vcomp2(t, u);
                let k = twos.iter().position(|w| *w == v).expect("composite 2-cell enumerated");
                compose.push((i, j, k));
            }
        }
    }
    FinCat::from_data(crate::fincat::FinCatData {
        n_objects: ones.len(),
        mor,
        identity,
        compose,
    })
    .expect("hom data forms a category")
}

/// Default object list for the finite-categories law suite: small fixtures
/// with parallel arrows, isomorphisms, and groups, so 2-cells are not all
/// thin. Kept small enough that the quartic pentagon loop finishes in
/// seconds; a three-object chain fixture multiplies it tenfold.
pub fn default_cell_categories() -> Vec<FinCat> {
    use crate::fincat::fixtures::*;
    vec![terminal(), walking_arrow(), z2(), parallel_pair(), cyclic_group(3), iso_pair()]
}

/// Default object list for the finite-groupoids law suite.
pub fn default_groupoid_categories() -> Vec<FinCat> {
    use crate::fincat::fixtures::*;
    vec![terminal(), discrete(2), z2(), cyclic_group(3), iso_pair()]
}

/// The full configurable category pool, re-exported where bicategory
/// instances are selected by the CLI.
pub fn configured_categories(cfg: PoolConfig) -> Vec<FinCat> {
    category_pool(cfg)
}
