//! Finite 1-category kernel: categories as explicit composition tables,
//! functors, natural transformations, products, iso-comma categories, the
//! Grothendieck construction, and a decision procedure for split
//! opfibrations.

mod enumerate;
pub mod fixtures;
mod functor;
mod indexed;
mod io;
mod limits;
mod opfib;
mod pool;

pub use enumerate::{enumerate_categories, enumerate_functors, enumerate_nat_trans};
pub use fixtures::*;
pub use functor::*;
pub use indexed::*;
pub use io::*;
pub use limits::*;
pub use opfib::*;
pub use pool::*;

pub type ObjId = usize;
pub type MorId = usize;

/// A finite category: objects `0..n_objects`, morphisms `0..mor.len()`,
/// a designated identity per object, and a total composition table defined
/// exactly on composable pairs (diagrammatic order: `compose(f, g)` is
/// "f then g").
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinCat {
    n_objects: usize,
    mor: Vec<(ObjId, ObjId)>,
    identity: Vec<MorId>,
    compose: Vec<Option<MorId>>,
}

impl FinCat {
    pub fn n_objects(&self) -> usize {
        self.n_objects
    }
    pub fn n_mor(&self) -> usize {
        self.mor.len()
    }
    pub fn src(&self, f: MorId) -> ObjId {
        self.mor[f].0
    }
    pub fn tgt(&self, f: MorId) -> ObjId {
        self.mor[f].1
    }
    pub fn identity(&self, x: ObjId) -> MorId {
        self.identity[x]
    }
    pub fn is_identity(&self, f: MorId) -> bool {
        self.identity[self.src(f)] == f
    }
    /// Composite "f then g"; defined exactly when `tgt(f) == src(g)`.
    pub fn compose(&self, f: MorId, g: MorId) -> Option<MorId> {
        self.compose[f * self.mor.len() + g]
    }
    pub fn objects(&self) -> impl Iterator<Item = ObjId> {
        0..self.n_objects
    }
    pub fn morphisms(&self) -> impl Iterator<Item = MorId> {
        0..self.mor.len()
    }
    pub fn hom(&self, x: ObjId, y: ObjId) -> impl Iterator<Item = MorId> + '_ {
        self.morphisms().filter(move |&f| self.src(f) == x && self.tgt(f) == y)
    }
    pub fn is_iso(&self, f: MorId) -> bool {
        self.inverse(f).is_some()
    }
    pub fn inverse(&self, f: MorId) -> Option<MorId> {
        let (x, y) = self.mor[f];
        self.morphisms().find(|&g| {
            self.src(g) == y
                && self.tgt(g) == x
                && self.compose(f, g) == Some(self.identity[x])
                && self.compose(g, f) == Some(self.identity[y])
        })
    }
    pub fn is_groupoid(&self) -> bool {
        self.morphisms().all(|f| self.is_iso(f))
    }
}

/// Raw, unvalidated category tables as read from a file or built by hand.
/// `compose` lists explicit triples `(f, g, h)` meaning "f then g equals h".
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FinCatData {
    pub n_objects: usize,
    pub mor: Vec<(ObjId, ObjId)>,
    pub identity: Vec<MorId>,
    pub compose: Vec<(MorId, MorId, MorId)>,
}

/// One violated axiom or malformed entry, with the witnessing indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatViolation {
    /// A table index refers outside the object or morphism range.
    BadIndex { table: &'static str, entry: String },
    /// `identity` does not list exactly one morphism per object.
    IdentityShape { detail: String },
    /// identity(x) is not an endomorphism of x.
    IdentityBoundary { object: ObjId, mor: MorId },
    /// A composable pair has no composite in the table.
    MissingComposite { f: MorId, g: MorId },
    /// A non-composable pair has a composite in the table.
    SpuriousComposite { f: MorId, g: MorId },
    /// The same pair is given two different composites.
    ConflictingComposite { f: MorId, g: MorId, h1: MorId, h2: MorId },
    /// src/tgt of a composite disagree with its factors.
    CompositeBoundary { f: MorId, g: MorId, h: MorId },
    /// compose(identity(src f), f) != f.
    LeftUnit { f: MorId },
    /// compose(f, identity(tgt f)) != f.
    RightUnit { f: MorId },
    /// (f g) h != f (g h).
    Associativity { f: MorId, g: MorId, h: MorId },
}

impl std::fmt::Display for CatViolation {
    fn fmt(&self, w: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use CatViolation::*;
        match self {
            BadIndex { table, entry } => write!(w, "bad index in {table}: {entry}"),
            IdentityShape { detail } => write!(w, "identity table malformed: {detail}"),
            IdentityBoundary { object, mor } => {
                write!(w, "identity({object}) = {mor} is not an endomorphism of {object}")
            }
            MissingComposite { f, g } => write!(w, "composable pair ({f} {g}) has no composite"),
            SpuriousComposite { f, g } => {
                write!(w, "non-composable pair ({f} {g}) has a composite")
            }
            ConflictingComposite { f, g, h1, h2 } => {
                write!(w, "pair ({f} {g}) given two composites {h1} and {h2}")
            }
            CompositeBoundary { f, g, h } => {
                write!(w, "composite ({f} {g}) = {h} has mismatched src/tgt")
            }
            LeftUnit { f } => write!(w, "unit law fails at (id, {f})"),
            RightUnit { f } => write!(w, "unit law fails at ({f}, id)"),
            Associativity { f, g, h } => write!(w, "associativity fails at ({f} {g} {h})"),
        }
    }
}

/// Checks every category axiom on raw tables and reports all violations
/// with witnesses. Empty report iff the data is a category.
pub fn validate_category(data: &FinCatData) -> Vec<CatViolation> {
    use CatViolation::*;
    let mut out = Vec::new();
    let n_obj = data.n_objects;
    let n_mor = data.mor.len();
    for (i, &(s, t)) in data.mor.iter().enumerate() {
        if s >= n_obj || t >= n_obj {
            out.push(BadIndex { table: "morphisms", entry: format!("mor {i}: ({s} {t})") });
        }
    }
    if data.identity.len() != n_obj {
        out.push(IdentityShape {
            detail: format!("{} entries for {} objects", data.identity.len(), n_obj),
        });
    }
    for (x, &e) in data.identity.iter().enumerate() {
        if e >= n_mor {
            out.push(BadIndex { table: "identity", entry: format!("identity({x}) = {e}") });
        } else if x < n_obj && (data.mor[e].0 != x || data.mor[e].1 != x) {
            out.push(IdentityBoundary { object: x, mor: e });
        }
    }
    let mut table: Vec<Option<MorId>> = vec![None; n_mor * n_mor];
    for &(f, g, h) in &data.compose {
        if f >= n_mor || g >= n_mor || h >= n_mor {
            out.push(BadIndex { table: "compose", entry: format!("({f} {g} {h})") });
            continue;
        }
        match &mut table[f * n_mor + g] {
            slot @ None => *slot = Some(h),
            Some(h1) if *h1 != h => {
                out.push(ConflictingComposite { f, g, h1: *h1, h2: h });
            }
            Some(_) => {}
        }
    }
    if !out.iter().any(|v| matches!(v, BadIndex { .. } | IdentityShape { .. })) {
        for f in 0..n_mor {
            for g in 0..n_mor {
                let composable = data.mor[f].1 == data.mor[g].0;
                match (composable, table[f * n_mor + g]) {
                    (true, None) => out.push(MissingComposite { f, g }),
                    (false, Some(_)) => out.push(SpuriousComposite { f, g }),
                    (true, Some(h)) => {
                        if data.mor[h].0 != data.mor[f].0 || data.mor[h].1 != data.mor[g].1 {
                            out.push(CompositeBoundary { f, g, h });
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        let comp = |f: MorId, g: MorId| table[f * n_mor + g];
        for f in 0..n_mor {
            let (s, t) = data.mor[f];
            if comp(data.identity[s], f) != Some(f) {
                out.push(LeftUnit { f });
            }
            if comp(f, data.identity[t]) != Some(f) {
                out.push(RightUnit { f });
            }
        }
        for f in 0..n_mor {
            for g in 0..n_mor {
                if data.mor[f].1 != data.mor[g].0 {
                    continue;
                }
                for h in 0..n_mor {
                    if data.mor[g].1 != data.mor[h].0 {
                        continue;
                    }
                    let left = comp(f, g).and_then(|fg| comp(fg, h));
                    let right = comp(g, h).and_then(|gh| comp(f, gh));
                    if left != right || left.is_none() {
                        out.push(Associativity { f, g, h });
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, thiserror::Error)]
#[error("invalid category: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
pub struct InvalidCat(pub Vec<CatViolation>);

impl FinCat {
    /// Validates raw tables and seals them into an immutable category.
    /// All downstream operations assume validity.
    pub fn from_data(data: FinCatData) -> Result<FinCat, InvalidCat> {
        let report = validate_category(&data);
        if !report.is_empty() {
            return Err(InvalidCat(report));
        }
        let n_mor = data.mor.len();
        let mut table = vec![None; n_mor * n_mor];
        for (f, g, h) in data.compose {
            table[f * n_mor + g] = Some(h);
        }
        Ok(FinCat {
            n_objects: data.n_objects,
            mor: data.mor,
            identity: data.identity,
            compose: table,
        })
    }

    pub fn to_data(&self) -> FinCatData {
        let n_mor = self.mor.len();
        let mut compose = Vec::new();
        for f in 0..n_mor {
            for g in 0..n_mor {
                if let Some(h) = self.compose[f * n_mor + g] {
                    compose.push((f, g, h));
                }
            }
        }
        FinCatData {
            n_objects: self.n_objects,
            mor: self.mor.clone(),
            identity: self.identity.clone(),
            compose,
        }
    }

    /// Relabels morphisms into stable (src, tgt) order. Two categories that
    /// differ only in morphism enumeration order within boundary groups
    /// compare equal after this.
    pub fn sorted_by_boundary(&self) -> FinCat {
        let mut order: Vec<MorId> = (0..self.n_mor()).collect();
        order.sort_by_key(|&m| (self.src(m), self.tgt(m)));
        let mut renamed = vec![0; self.n_mor()];
        for (new, &old) in order.iter().enumerate() {
            renamed[old] = new;
        }
        let data = self.to_data();
        FinCat::from_data(FinCatData {
            n_objects: data.n_objects,
            mor: order.iter().map(|&m| data.mor[m]).collect(),
            identity: data.identity.iter().map(|&m| renamed[m]).collect(),
            compose: data
                .compose
                .iter()
                .map(|&(f, g, h)| (renamed[f], renamed[g], renamed[h]))
                .collect(),
        })
        .expect("relabeling preserves the category laws")
    }
}

/// The category with the same objects, reversed morphisms, and transposed
/// composition. Morphism ids are preserved, so the construction is an
/// involution on the nose.
pub fn opposite_category(c: &FinCat) -> FinCat {
    let data = c.to_data();
    FinCat::from_data(FinCatData {
        n_objects: data.n_objects,
        mor: data.mor.iter().map(|&(s, t)| (t, s)).collect(),
        identity: data.identity,
        compose: data.compose.iter().map(|&(f, g, h)| (g, f, h)).collect(),
    })
    .expect("opposite tables satisfy the category laws")
}
