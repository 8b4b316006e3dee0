//! Exhaustive bicategory law suite over a finite cell pool. Every law is
//! checked on every instantiation the pool supports; violations carry the
//! law name and the pool indices of the offending cells.

use super::{Bicat, CellPool};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawViolation {
    pub law: &'static str,
    pub detail: String,
}

impl std::fmt::Display for LawViolation {
    fn fmt(&self, w: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(w, "{}: {}", self.law, self.detail)
    }
}

struct Ctx<'a, B: Bicat> {
    b: &'a B,
    pool: &'a CellPool<B>,
    // object positions of each 1-cell's endpoints, when the endpoint is in
    // the pool; chain loops need them, per-cell laws do not
    one_src: Vec<Option<usize>>,
    one_tgt: Vec<Option<usize>>,
    // 1-cell positions of each 2-cell's boundary
    two_src: Vec<Option<usize>>,
    two_tgt: Vec<Option<usize>>,
    // ones bucketed by source object position
    ones_from: Vec<Vec<usize>>,
    out: Vec<LawViolation>,
}

impl<'a, B: Bicat> Ctx<'a, B> {
    fn new(b: &'a B, pool: &'a CellPool<B>) -> Self {
        let obj_pos = |o: &B::Obj| pool.objects.iter().position(|p| p == o);
        let one_src: Vec<_> = pool.ones.iter().map(|f| obj_pos(&b.one_src(f))).collect();
        let one_tgt: Vec<_> = pool.ones.iter().map(|f| obj_pos(&b.one_tgt(f))).collect();
        let one_pos = |f: &B::One| pool.ones.iter().position(|p| p == f);
        let two_src: Vec<_> = pool.twos.iter().map(|t| one_pos(&b.two_src(t))).collect();
        let two_tgt: Vec<_> = pool.twos.iter().map(|t| one_pos(&b.two_tgt(t))).collect();
        let mut ones_from = vec![Vec::new(); pool.objects.len()];
        for (i, s) in one_src.iter().enumerate() {
            if let Some(s) = s {
                ones_from[*s].push(i);
            }
        }
        Ctx { b, pool, one_src, one_tgt, two_src, two_tgt, ones_from, out: Vec::new() }
    }

    fn fail(&mut self, law: &'static str, detail: String) {
        self.out.push(LawViolation { law, detail });
    }

    fn eq(&mut self, law: &'static str, lhs: &B::Two, rhs: &B::Two, detail: impl Fn() -> String) {
        if lhs != rhs {
            self.fail(law, detail());
        }
    }

    fn carrier(&mut self) {
        for (i, o) in self.pool.objects.iter().enumerate() {
            if !self.b.contains_obj(o) {
                self.fail("carrier", format!("object #{i} not in the instance"));
            }
        }
        for (i, f) in self.pool.ones.iter().enumerate() {
            if !self.b.contains_one(f) {
                self.fail("carrier", format!("1-cell #{i} not in the instance"));
            }
        }
        for (i, t) in self.pool.twos.iter().enumerate() {
            if !self.b.contains_two(t) {
                self.fail("carrier", format!("2-cell #{i} not in the instance"));
            }
        }
    }

    fn per_two_cell(&mut self) {
        for i in 0..self.pool.twos.len() {
            let t = self.pool.twos[i].clone();
            let f = self.b.two_src(&t);
            let g = self.b.two_tgt(&t);
            let l = self.b.vcomp2(&self.b.id2(&f), &t);
            self.eq("vcomp-left-unit", &l, &t, || format!("2-cell #{i}"));
            let r = self.b.vcomp2(&t, &self.b.id2(&g));
            self.eq("vcomp-right-unit", &r, &t, || format!("2-cell #{i}"));

            // naturality of the unitors
            let a = self.b.one_src(&f);
            let b_obj = self.b.one_tgt(&f);
            let lhs = self.b.vcomp2(&self.b.lwhisker(&self.b.id1(&a), &t), &self.b.lunitor(&g));
            let rhs = self.b.vcomp2(&self.b.lunitor(&f), &t);
            self.eq("lunitor-natural", &lhs, &rhs, || format!("2-cell #{i}"));
            let lhs = self.b.vcomp2(&self.b.rwhisker(&t, &self.b.id1(&b_obj)), &self.b.runitor(&g));
            let rhs = self.b.vcomp2(&self.b.runitor(&f), &t);
            self.eq("runitor-natural", &lhs, &rhs, || format!("2-cell #{i}"));
        }
    }

    fn per_one_cell(&mut self) {
        for i in 0..self.pool.ones.len() {
            let f = self.pool.ones[i].clone();
            let idf = self.b.id2(&f);
            let one_f = self.b.comp1(&self.b.id1(&self.b.one_src(&f)), &f);
            let f_one = self.b.comp1(&f, &self.b.id1(&self.b.one_tgt(&f)));
            let l = self.b.lunitor(&f);
            let li = self.b.lunitor_inv(&f);
            self.eq("lunitor-invertible", &self.b.vcomp2(&l, &li), &self.b.id2(&one_f), || {
                format!("1-cell #{i}")
            });
            self.eq("lunitor-invertible", &self.b.vcomp2(&li, &l), &idf, || format!("1-cell #{i}"));
            let r = self.b.runitor(&f);
            let ri = self.b.runitor_inv(&f);
            self.eq("runitor-invertible", &self.b.vcomp2(&r, &ri), &self.b.id2(&f_one), || {
                format!("1-cell #{i}")
            });
            self.eq("runitor-invertible", &self.b.vcomp2(&ri, &r), &idf, || format!("1-cell #{i}"));
        }
    }

    /// Composable 2-cell chains: vertical associativity.
    fn vcomp_assoc(&mut self) {
        for i in 0..self.pool.twos.len() {
            for j in 0..self.pool.twos.len() {
                if self.two_tgt[i] != self.two_src[j] || self.two_tgt[i].is_none() {
                    continue;
                }
                for k in 0..self.pool.twos.len() {
                    if self.two_tgt[j] != self.two_src[k] || self.two_tgt[j].is_none() {
                        continue;
                    }
                    let (t, u, v) =
                        (&self.pool.twos[i], &self.pool.twos[j], &self.pool.twos[k]);
                    let lhs = self.b.vcomp2(&self.b.vcomp2(t, u), v);
                    let rhs = self.b.vcomp2(t, &self.b.vcomp2(u, v));
                    self.eq("vcomp-assoc", &lhs, &rhs, || format!("2-cells #{i} #{j} #{k}"));
                }
            }
        }
    }

    /// One-cell pairs: whisker identity laws and the triangle.
    fn one_pairs(&mut self) {
        for i in 0..self.pool.ones.len() {
            for j in 0..self.pool.ones.len() {
                if self.one_tgt[i] != self.one_src[j] || self.one_tgt[i].is_none() {
                    continue;
                }
                let f = self.pool.ones[i].clone();
                let g = self.pool.ones[j].clone();
                let fg = self.b.comp1(&f, &g);
                let lhs = self.b.lwhisker(&f, &self.b.id2(&g));
                self.eq("lwhisker-id2", &lhs, &self.b.id2(&fg), || format!("1-cells #{i} #{j}"));
                let rhs = self.b.rwhisker(&self.b.id2(&f), &g);
                self.eq("rwhisker-id2", &rhs, &self.b.id2(&fg), || format!("1-cells #{i} #{j}"));

                let mid = self.b.id1(&self.b.one_tgt(&f));
                let tri_l = self.b.vcomp2(
                    &self.b.associator(&f, &mid, &g),
                    &self.b.rwhisker(&self.b.runitor(&f), &g),
                );
                let tri_r = self.b.lwhisker(&f, &self.b.lunitor(&g));
                self.eq("triangle", &tri_l, &tri_r, || format!("1-cells #{i} #{j}"));
            }
        }
    }

    /// A 2-cell against a 1-cell on each side: whisker/vcomp functoriality
    /// and interchange.
    fn whisker_functoriality(&mut self) {
        // composable 2-cell pairs indexed by shared middle 1-cell
        let mut pairs = Vec::new();
        for i in 0..self.pool.twos.len() {
            for j in 0..self.pool.twos.len() {
                if self.two_tgt[i] == self.two_src[j] && self.two_tgt[i].is_some() {
                    pairs.push((i, j));
                }
            }
        }
        for &(i, j) in &pairs {
            let t = self.pool.twos[i].clone();
            let u = self.pool.twos[j].clone();
            let tu = self.b.vcomp2(&t, &u);
            let src_obj = self.b.one_src(&self.b.two_src(&t));
            let tgt_obj = self.b.one_tgt(&self.b.two_src(&t));
            for e in 0..self.pool.ones.len() {
                if self.one_tgt[e].is_some()
                    && self.pool.objects[self.one_tgt[e].unwrap()] == src_obj
                {
                    let ec = self.pool.ones[e].clone();
                    let lhs = self.b.lwhisker(&ec, &tu);
                    let rhs =
                        self.b.vcomp2(&self.b.lwhisker(&ec, &t), &self.b.lwhisker(&ec, &u));
                    self.eq("lwhisker-vcomp", &lhs, &rhs, || {
                        format!("1-cell #{e}, 2-cells #{i} #{j}")
                    });
                }
                if self.one_src[e].is_some()
                    && self.pool.objects[self.one_src[e].unwrap()] == tgt_obj
                {
                    let hc = self.pool.ones[e].clone();
                    let lhs = self.b.rwhisker(&tu, &hc);
                    let rhs =
                        self.b.vcomp2(&self.b.rwhisker(&t, &hc), &self.b.rwhisker(&u, &hc));
                    self.eq("rwhisker-vcomp", &lhs, &rhs, || {
                        format!("2-cells #{i} #{j}, 1-cell #{e}")
                    });
                }
            }
        }
    }

    /// Horizontally adjacent 2-cells: the interchange law.
    fn interchange(&mut self) {
        for i in 0..self.pool.twos.len() {
            let t = self.pool.twos[i].clone();
            let f = self.b.two_src(&t);
            let f2 = self.b.two_tgt(&t);
            let mid = self.b.one_tgt(&f);
            for j in 0..self.pool.twos.len() {
                let u = self.pool.twos[j].clone();
                let g = self.b.two_src(&u);
                if self.b.one_src(&g) != mid {
                    continue;
                }
                let g2 = self.b.two_tgt(&u);
                let lhs = self.b.vcomp2(&self.b.rwhisker(&t, &g), &self.b.lwhisker(&f2, &u));
                let rhs = self.b.vcomp2(&self.b.lwhisker(&f, &u), &self.b.rwhisker(&t, &g2));
                self.eq("interchange", &lhs, &rhs, || format!("2-cells #{i} #{j}"));
            }
        }
    }

    /// One-cell triples: associator invertibility and naturality in each
    /// argument.
    fn one_triples(&mut self) {
        let chains = self.chains3();
        for &(i, j, k) in &chains {
            let f = self.pool.ones[i].clone();
            let g = self.pool.ones[j].clone();
            let h = self.pool.ones[k].clone();
            let a = self.b.associator(&f, &g, &h);
            let ai = self.b.associator_inv(&f, &g, &h);
            let left_assoc = self.b.comp1(&self.b.comp1(&f, &g), &h);
            let right_assoc = self.b.comp1(&f, &self.b.comp1(&g, &h));
            self.eq(
                "associator-invertible",
                &self.b.vcomp2(&a, &ai),
                &self.b.id2(&right_assoc),
                || format!("1-cells #{i} #{j} #{k}"),
            );
            self.eq(
                "associator-invertible",
                &self.b.vcomp2(&ai, &a),
                &self.b.id2(&left_assoc),
                || format!("1-cells #{i} #{j} #{k}"),
            );
        }
        // naturality: a 2-cell in one slot, 1-cells in the others
        for t_i in 0..self.pool.twos.len() {
            let (Some(fi), Some(_)) = (self.two_src[t_i], self.two_tgt[t_i]) else {
                continue;
            };
            let (Some(src_o), Some(tgt_o)) = (self.one_src[fi], self.one_tgt[fi]) else {
                continue;
            };
            let t = self.pool.twos[t_i].clone();
            let p = self.b.two_src(&t);
            let p2 = self.b.two_tgt(&t);
            // slot 1: t ⊳ (g·h) followed by the associator
            for &j in &self.ones_from[tgt_o].clone() {
                let Some(jt) = self.one_tgt[j] else { continue };
                for &k in &self.ones_from[jt].clone() {
                    let g = self.pool.ones[j].clone();
                    let h = self.pool.ones[k].clone();
                    let gh = self.b.comp1(&g, &h);
                    let lhs = self.b.vcomp2(
                        &self.b.rwhisker(&t, &gh),
                        &self.b.associator(&p2, &g, &h),
                    );
                    let rhs = self.b.vcomp2(
                        &self.b.associator(&p, &g, &h),
                        &self.b.rwhisker(&self.b.rwhisker(&t, &g), &h),
                    );
                    self.eq("associator-natural-1", &lhs, &rhs, || {
                        format!("2-cell #{t_i}, 1-cells #{j} #{k}")
                    });
                }
            }
            // slot 2: f ⊲ (t ⊳ h)
            for e in 0..self.pool.ones.len() {
                if self.one_tgt[e] != Some(src_o) {
                    continue;
                }
                for &k in &self.ones_from[tgt_o].clone() {
                    let f = self.pool.ones[e].clone();
                    let h = self.pool.ones[k].clone();
                    let lhs = self.b.vcomp2(
                        &self.b.lwhisker(&f, &self.b.rwhisker(&t, &h)),
                        &self.b.associator(&f, &p2, &h),
                    );
                    let rhs = self.b.vcomp2(
                        &self.b.associator(&f, &p, &h),
                        &self.b.rwhisker(&self.b.lwhisker(&f, &t), &h),
                    );
                    self.eq("associator-natural-2", &lhs, &rhs, || {
                        format!("1-cell #{e}, 2-cell #{t_i}, 1-cell #{k}")
                    });
                }
            }
            // slot 3: f ⊲ (g ⊲ t)
            for e in 0..self.pool.ones.len() {
                let Some(et) = self.one_tgt[e] else { continue };
                for &j in &self.ones_from[et].clone() {
                    if self.one_tgt[j] != Some(src_o) {
                        continue;
                    }
                    let f = self.pool.ones[e].clone();
                    let g = self.pool.ones[j].clone();
                    let fg = self.b.comp1(&f, &g);
                    let lhs = self.b.vcomp2(
                        &self.b.lwhisker(&f, &self.b.lwhisker(&g, &t)),
                        &self.b.associator(&f, &g, &p2),
                    );
                    let rhs = self.b.vcomp2(
                        &self.b.associator(&f, &g, &p),
                        &self.b.lwhisker(&fg, &t),
                    );
                    self.eq("associator-natural-3", &lhs, &rhs, || {
                        format!("1-cells #{e} #{j}, 2-cell #{t_i}")
                    });
                }
            }
        }
    }

    fn chains3(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.pool.ones.len() {
            let Some(it) = self.one_tgt[i] else { continue };
            for &j in &self.ones_from[it] {
                let Some(jt) = self.one_tgt[j] else { continue };
                for &k in &self.ones_from[jt] {
                    out.push((i, j, k));
                }
            }
        }
        out
    }

    fn pentagon(&mut self) {
        for i in 0..self.pool.ones.len() {
            let Some(it) = self.one_tgt[i] else { continue };
            let f = self.pool.ones[i].clone();
            for &j in &self.ones_from[it].clone() {
                let Some(jt) = self.one_tgt[j] else { continue };
                let g = self.pool.ones[j].clone();
                let fg = self.b.comp1(&f, &g);
                for &k in &self.ones_from[jt].clone() {
                    let Some(kt) = self.one_tgt[k] else { continue };
                    let h = self.pool.ones[k].clone();
                    let gh = self.b.comp1(&g, &h);
                    let a_fgh = self.b.associator(&f, &g, &h);
                    for &l in &self.ones_from[kt].clone() {
                        let e = self.pool.ones[l].clone();
                        let he = self.b.comp1(&h, &e);
                        let lhs = self.b.vcomp2(
                            &self.b.vcomp2(
                                &self.b.lwhisker(&f, &self.b.associator(&g, &h, &e)),
                                &self.b.associator(&f, &gh, &e),
                            ),
                            &self.b.rwhisker(&a_fgh, &e),
                        );
                        let rhs = self.b.vcomp2(
                            &self.b.associator(&f, &g, &he),
                            &self.b.associator(&fg, &h, &e),
                        );
                        self.eq("pentagon", &lhs, &rhs, || {
                            format!("1-cells #{i} #{j} #{k} #{l}")
                        });
                    }
                }
            }
        }
    }
}

/// Checks every bicategory law on every instantiation the pool supports.
/// Returns one violation per failing law instance; empty for lawful
/// instances.
pub fn check_bicat_axioms<B: Bicat>(b: &B, pool: &CellPool<B>) -> Vec<LawViolation> {
    let mut ctx = Ctx::new(b, pool);
    ctx.carrier();
    if !ctx.out.is_empty() {
        return ctx.out;
    }
    ctx.per_two_cell();
    ctx.per_one_cell();
    ctx.vcomp_assoc();
    ctx.one_pairs();
    ctx.whisker_functoriality();
    ctx.interchange();
    ctx.one_triples();
    ctx.pentagon();
    ctx.out
}

#[cfg(test)]
mod tests {
    use super::super::{
        co_bicat, default_cell_categories, default_groupoid_categories, op_bicat, CatBicat,
        CellPool, GpdBicat,
    };
    use super::*;
    use crate::fincat::fixtures;

    #[test]
    fn finite_categories_form_a_bicategory() {
        let b = CatBicat;
        let pool = CellPool::generate(&b, default_cell_categories());
        assert_eq!(check_bicat_axioms(&b, &pool), Vec::new());
    }

    #[test]
    fn finite_groupoids_form_a_bicategory() {
        let b = GpdBicat;
        let pool = CellPool::generate(&b, default_groupoid_categories());
        assert_eq!(check_bicat_axioms(&b, &pool), Vec::new());
    }

    #[test]
    fn both_duals_are_lawful() {
        let objects =
            vec![fixtures::terminal(), fixtures::walking_arrow(), fixtures::z2()];
        let b = op_bicat(CatBicat);
        let pool = CellPool::generate(&b, objects.clone());
        assert_eq!(check_bicat_axioms(&b, &pool), Vec::new());
        let c = co_bicat(CatBicat);
        let pool = CellPool::generate(&c, objects);
        assert_eq!(check_bicat_axioms(&c, &pool), Vec::new());
    }
}
