//! Pseudofunctors between bicategories: structure cells with explicit
//! inverses, the identity instance, and an exhaustive law suite over a
//! finite cell pool of the domain.

use super::{Bicat, CellPool, LawViolation};

/// A pseudofunctor from `S` to `T`. The structure cells are
/// `identitor(a) : id(F a) => F(id a)` and
/// `compositor(f, g) : F f · F g => F(f·g)`, both invertible with the
/// listed inverses. Callers pass composable cells; implementations may
/// panic otherwise, matching the pasting operations on `Bicat`.
pub trait Pseudofunctor<S: Bicat, T: Bicat> {
    fn on_obj(&self, a: &S::Obj) -> T::Obj;
    fn on_one(&self, f: &S::One) -> T::One;
    fn on_two(&self, t: &S::Two) -> T::Two;
    fn identitor(&self, a: &S::Obj) -> T::Two;
    fn identitor_inv(&self, a: &S::Obj) -> T::Two;
    fn compositor(&self, f: &S::One, g: &S::One) -> T::Two;
    fn compositor_inv(&self, f: &S::One, g: &S::One) -> T::Two;
}

/// The identity pseudofunctor on `B`, with identity structure cells.
pub struct IdentityPsf<B>(pub B);

impl<B: Bicat> Pseudofunctor<B, B> for IdentityPsf<B> {
    fn on_obj(&self, a: &B::Obj) -> B::Obj {
        a.clone()
    }
    fn on_one(&self, f: &B::One) -> B::One {
        f.clone()
    }
    fn on_two(&self, t: &B::Two) -> B::Two {
        t.clone()
    }
    fn identitor(&self, a: &B::Obj) -> B::Two {
        self.0.id2(&self.0.id1(a))
    }
    fn identitor_inv(&self, a: &B::Obj) -> B::Two {
        self.0.id2(&self.0.id1(a))
    }
    fn compositor(&self, f: &B::One, g: &B::One) -> B::Two {
        self.0.id2(&self.0.comp1(f, g))
    }
    fn compositor_inv(&self, f: &B::One, g: &B::One) -> B::Two {
        self.0.id2(&self.0.comp1(f, g))
    }
}

struct Ctx<'a, S: Bicat, T: Bicat, P> {
    src: &'a S,
    tgt: &'a T,
    p: &'a P,
    pool: &'a CellPool<S>,
    out: Vec<LawViolation>,
}

impl<'a, S: Bicat, T: Bicat, P: Pseudofunctor<S, T>> Ctx<'a, S, T, P> {
    fn fail(&mut self, law: &'static str, detail: String) {
        self.out.push(LawViolation { law, detail });
    }

    fn eq(&mut self, law: &'static str, lhs: &T::Two, rhs: &T::Two, detail: impl Fn() -> String) {
        if lhs != rhs {
            self.fail(law, detail());
        }
    }

    /// Images land in the codomain and boundaries are preserved on the
    /// nose. Everything later pastes cells, so a failure here ends the
    /// check.
    fn images(&mut self) {
        for (i, a) in self.pool.objects.iter().enumerate() {
            if !self.tgt.contains_obj(&self.p.on_obj(a)) {
                self.fail("psf-image", format!("object #{i} maps outside the codomain"));
            }
        }
        for (i, f) in self.pool.ones.iter().enumerate() {
            let ff = self.p.on_one(f);
            if !self.tgt.contains_one(&ff) {
                self.fail("psf-image", format!("1-cell #{i} maps outside the codomain"));
                continue;
            }
            if self.tgt.one_src(&ff) != self.p.on_obj(&self.src.one_src(f))
                || self.tgt.one_tgt(&ff) != self.p.on_obj(&self.src.one_tgt(f))
            {
                self.fail("psf-boundary", format!("1-cell #{i} image endpoints differ"));
            }
        }
        for (i, t) in self.pool.twos.iter().enumerate() {
            let ft = self.p.on_two(t);
            if !self.tgt.contains_two(&ft) {
                self.fail("psf-image", format!("2-cell #{i} maps outside the codomain"));
                continue;
            }
            if self.tgt.two_src(&ft) != self.p.on_one(&self.src.two_src(t))
                || self.tgt.two_tgt(&ft) != self.p.on_one(&self.src.two_tgt(t))
            {
                self.fail("psf-boundary", format!("2-cell #{i} image boundary differs"));
            }
        }
    }

    /// Structure cells have the advertised boundaries; a failure here also
    /// ends the check.
    fn structure_boundaries(&mut self) {
        for (i, a) in self.pool.objects.iter().enumerate() {
            let want_src = self.tgt.id1(&self.p.on_obj(a));
            let want_tgt = self.p.on_one(&self.src.id1(a));
            for (cell, name) in [
                (self.p.identitor(a), "identitor"),
                (self.p.identitor_inv(a), "identitor-inv"),
            ] {
                if !self.tgt.contains_two(&cell) {
                    self.fail(
                        "psf-structure-boundary",
                        format!("{name} at object #{i} is not a codomain 2-cell"),
                    );
                    continue;
                }
                let (s, t) = if name == "identitor" {
                    (&want_src, &want_tgt)
                } else {
                    (&want_tgt, &want_src)
                };
                if self.tgt.two_src(&cell) != *s || self.tgt.two_tgt(&cell) != *t {
                    self.fail(
                        "psf-structure-boundary",
                        format!("{name} at object #{i} has the wrong boundary"),
                    );
                }
            }
        }
        for (i, j) in self.composable_one_pairs() {
            let f = &self.pool.ones[i];
            let g = &self.pool.ones[j];
            let want_src = self.tgt.comp1(&self.p.on_one(f), &self.p.on_one(g));
            let want_tgt = self.p.on_one(&self.src.comp1(f, g));
            for (cell, name) in [
                (self.p.compositor(f, g), "compositor"),
                (self.p.compositor_inv(f, g), "compositor-inv"),
            ] {
                if !self.tgt.contains_two(&cell) {
                    self.fail(
                        "psf-structure-boundary",
                        format!("{name} at 1-cells #{i} #{j} is not a codomain 2-cell"),
                    );
                    continue;
                }
                let (s, t) = if name == "compositor" {
                    (&want_src, &want_tgt)
                } else {
                    (&want_tgt, &want_src)
                };
                if self.tgt.two_src(&cell) != *s || self.tgt.two_tgt(&cell) != *t {
                    self.fail(
                        "psf-structure-boundary",
                        format!("{name} at 1-cells #{i} #{j} has the wrong boundary"),
                    );
                }
            }
        }
    }

    fn composable_one_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, f) in self.pool.ones.iter().enumerate() {
            for (j, g) in self.pool.ones.iter().enumerate() {
                if self.src.one_tgt(f) == self.src.one_src(g) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Identity and vertical composites of 2-cells are preserved exactly.
    fn vertical_functoriality(&mut self) {
        for (i, f) in self.pool.ones.iter().enumerate() {
            let lhs = self.p.on_two(&self.src.id2(f));
            let rhs = self.tgt.id2(&self.p.on_one(f));
            self.eq("psf-id2", &lhs, &rhs, || format!("1-cell #{i}"));
        }
        for i in 0..self.pool.twos.len() {
            for j in 0..self.pool.twos.len() {
                let t = &self.pool.twos[i];
                let u = &self.pool.twos[j];
                if self.src.two_tgt(t) != self.src.two_src(u) {
                    continue;
                }
                let lhs = self.p.on_two(&self.src.vcomp2(t, u));
                let rhs = self.tgt.vcomp2(&self.p.on_two(t), &self.p.on_two(u));
                self.eq("psf-vcomp", &lhs, &rhs, || format!("2-cells #{i} #{j}"));
            }
        }
    }

    /// The compositor commutes with whiskering on either side.
    fn compositor_naturality(&mut self) {
        for (ti, t) in self.pool.twos.iter().enumerate() {
            let f1 = self.src.two_src(t);
            let f2 = self.src.two_tgt(t);
            for (gi, g) in self.pool.ones.iter().enumerate() {
                if self.src.one_tgt(&f1) == self.src.one_src(g) {
                    let lhs = self.tgt.vcomp2(
                        &self.tgt.rwhisker(&self.p.on_two(t), &self.p.on_one(g)),
                        &self.p.compositor(&f2, g),
                    );
                    let rhs = self.tgt.vcomp2(
                        &self.p.compositor(&f1, g),
                        &self.p.on_two(&self.src.rwhisker(t, g)),
                    );
                    self.eq("psf-compositor-natural-l", &lhs, &rhs, || {
                        format!("2-cell #{ti}, 1-cell #{gi}")
                    });
                }
                if self.src.one_tgt(g) == self.src.one_src(&f1) {
                    let lhs = self.tgt.vcomp2(
                        &self.tgt.lwhisker(&self.p.on_one(g), &self.p.on_two(t)),
                        &self.p.compositor(g, &f2),
                    );
                    let rhs = self.tgt.vcomp2(
                        &self.p.compositor(g, &f1),
                        &self.p.on_two(&self.src.lwhisker(g, t)),
                    );
                    self.eq("psf-compositor-natural-r", &lhs, &rhs, || {
                        format!("1-cell #{gi}, 2-cell #{ti}")
                    });
                }
            }
        }
    }

    /// Unitor compatibility: the codomain unitor factors through the
    /// structure cells and the image of the domain unitor.
    fn unitors(&mut self) {
        for (i, f) in self.pool.ones.iter().enumerate() {
            let a = self.src.one_src(f);
            let b = self.src.one_tgt(f);
            let ff = self.p.on_one(f);
            let lhs = self.tgt.vcomp2(
                &self.tgt.vcomp2(
                    &self.tgt.rwhisker(&self.p.identitor(&a), &ff),
                    &self.p.compositor(&self.src.id1(&a), f),
                ),
                &self.p.on_two(&self.src.lunitor(f)),
            );
            self.eq("psf-lunitor", &lhs, &self.tgt.lunitor(&ff), || format!("1-cell #{i}"));
            let lhs = self.tgt.vcomp2(
                &self.tgt.vcomp2(
                    &self.tgt.lwhisker(&ff, &self.p.identitor(&b)),
                    &self.p.compositor(f, &self.src.id1(&b)),
                ),
                &self.p.on_two(&self.src.runitor(f)),
            );
            self.eq("psf-runitor", &lhs, &self.tgt.runitor(&ff), || format!("1-cell #{i}"));
        }
    }

    /// Associator compatibility: both rebracketing paths from
    /// `F f·(F g·F h)` to `F((f·g)·h)` agree.
    fn hexagon(&mut self) {
        for (i, f) in self.pool.ones.iter().enumerate() {
            for (j, g) in self.pool.ones.iter().enumerate() {
                if self.src.one_tgt(f) != self.src.one_src(g) {
                    continue;
                }
                for (k, h) in self.pool.ones.iter().enumerate() {
                    if self.src.one_tgt(g) != self.src.one_src(h) {
                        continue;
                    }
                    let (ff, fg, fh) =
                        (self.p.on_one(f), self.p.on_one(g), self.p.on_one(h));
                    let gh = self.src.comp1(g, h);
                    let lhs = self.tgt.vcomp2(
                        &self.tgt.vcomp2(
                            &self.tgt.lwhisker(&ff, &self.p.compositor(g, h)),
                            &self.p.compositor(f, &gh),
                        ),
                        &self.p.on_two(&self.src.associator(f, g, h)),
                    );
                    let rhs = self.tgt.vcomp2(
                        &self.tgt.vcomp2(
                            &self.tgt.associator(&ff, &fg, &fh),
                            &self.tgt.rwhisker(&self.p.compositor(f, g), &fh),
                        ),
                        &self.p.compositor(&self.src.comp1(f, g), h),
                    );
                    self.eq("psf-hexagon", &lhs, &rhs, || format!("1-cells #{i} #{j} #{k}"));
                }
            }
        }
    }

    /// The listed inverses really invert the structure cells.
    fn invertibility(&mut self) {
        for (i, a) in self.pool.objects.iter().enumerate() {
            let io = self.p.identitor(a);
            let ii = self.p.identitor_inv(a);
            let unit = self.tgt.id2(&self.tgt.id1(&self.p.on_obj(a)));
            let image = self.tgt.id2(&self.p.on_one(&self.src.id1(a)));
            self.eq("psf-identitor-invertible", &self.tgt.vcomp2(&io, &ii), &unit, || {
                format!("object #{i}")
            });
            self.eq("psf-identitor-invertible", &self.tgt.vcomp2(&ii, &io), &image, || {
                format!("object #{i}")
            });
        }
        for (i, j) in self.composable_one_pairs() {
            let f = &self.pool.ones[i];
            let g = &self.pool.ones[j];
            let c = self.p.compositor(f, g);
            let ci = self.p.compositor_inv(f, g);
            let pair = self.tgt.id2(&self.tgt.comp1(&self.p.on_one(f), &self.p.on_one(g)));
            let image = self.tgt.id2(&self.p.on_one(&self.src.comp1(f, g)));
            self.eq("psf-compositor-invertible", &self.tgt.vcomp2(&c, &ci), &pair, || {
                format!("1-cells #{i} #{j}")
            });
            self.eq("psf-compositor-invertible", &self.tgt.vcomp2(&ci, &c), &image, || {
                format!("1-cells #{i} #{j}")
            });
        }
    }
}

/// Checks every pseudofunctor law on every instantiation the pool
/// supports: boundary preservation, exact functoriality on 2-cells,
/// compositor naturality, unitor and associator compatibility, and
/// invertibility of the structure cells.
pub fn check_pseudofunctor<S: Bicat, T: Bicat, P: Pseudofunctor<S, T>>(
    src: &S,
    tgt: &T,
    p: &P,
    pool: &CellPool<S>,
) -> Vec<LawViolation> {
    let mut ctx = Ctx { src, tgt, p, pool, out: Vec::new() };
    ctx.images();
    ctx.structure_boundaries();
    if !ctx.out.is_empty() {
        return ctx.out;
    }
    ctx.vertical_functoriality();
    ctx.compositor_naturality();
    ctx.unitors();
    ctx.hexagon();
    ctx.invertibility();
    ctx.out
}
