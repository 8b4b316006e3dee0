//! Chosen binary products and iso-comma categories, the pullback-like
//! limits used by the pullback comprehension model.

use super::{
    compose_functors, describe_cat, describe_functor, BoundaryMismatch, FinCat, FinCatData,
    FinFunctor, FinNatTrans, MorId, ObjId,
};

/// A chosen binary product with its projections. Object `(x, y)` has index
/// `x * |D_0| + y`; morphism `(f, g)` has index `f * |D_1| + g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product {
    pub cat: FinCat,
    pub pi1: FinFunctor,
    pub pi2: FinFunctor,
    d_objects: usize,
    d_mor: usize,
}

impl Product {
    pub fn obj_index(&self, x: ObjId, y: ObjId) -> ObjId {
        x * self.d_objects + y
    }
    pub fn obj_pair(&self, p: ObjId) -> (ObjId, ObjId) {
        (p / self.d_objects, p % self.d_objects)
    }
    pub fn mor_index(&self, f: MorId, g: MorId) -> MorId {
        f * self.d_mor + g
    }
    pub fn mor_pair(&self, p: MorId) -> (MorId, MorId) {
        (p / self.d_mor, p % self.d_mor)
    }

    /// The pairing of a cone `(F, G)`: the unique functor into the product
    /// whose composites with the projections are F and G.
    pub fn pair(&self, f: &FinFunctor, g: &FinFunctor) -> Result<FinFunctor, BoundaryMismatch> {
        if f.dom() != g.dom() {
            return Err(BoundaryMismatch {
                op: "Product::pair",
                left: format!("dom of first leg = {}", describe_cat(f.dom())),
                right: format!("dom of second leg = {}", describe_cat(g.dom())),
            });
        }
        if f.cod() != self.pi1.cod() || g.cod() != self.pi2.cod() {
            return Err(BoundaryMismatch {
                op: "Product::pair",
                left: format!("legs into {} and {}", describe_cat(f.cod()), describe_cat(g.cod())),
                right: format!(
                    "product of {} and {}",
                    describe_cat(self.pi1.cod()),
                    describe_cat(self.pi2.cod())
                ),
            });
        }
        let on_obj =
            f.obj_map().iter().zip(g.obj_map()).map(|(&x, &y)| self.obj_index(x, y)).collect();
        let on_mor =
            f.mor_map().iter().zip(g.mor_map()).map(|(&a, &b)| self.mor_index(a, b)).collect();
        Ok(FinFunctor::new(f.dom().clone(), self.cat.clone(), on_obj, on_mor)
            .expect("pairing of functors is a functor"))
    }
}

/// The product category C x D with componentwise composition.
pub fn product_category(c: &FinCat, d: &FinCat) -> Product {
    let d_objects = d.n_objects();
    let d_mor = d.n_mor();
    let mor: Vec<(ObjId, ObjId)> = c
        .morphisms()
        .flat_map(|f| {
            d.morphisms().map(move |g| (f, g))
        })
        .map(|(f, g)| {
            (c.src(f) * d_objects + d.src(g), c.tgt(f) * d_objects + d.tgt(g))
        })
        .collect();
    let identity =
        (0..c.n_objects() * d_objects)
            .map(|p| c.identity(p / d_objects) * d_mor + d.identity(p % d_objects))
            .collect();
    let mut compose = Vec::new();
    for f1 in c.morphisms() {
        for g1 in d.morphisms() {
            for f2 in c.morphisms() {
                for g2 in d.morphisms() {
                    if let (Some(fc), Some(gc)) = (c.compose(f1, f2), d.compose(g1, g2)) {
                        compose.push((f1 * d_mor + g1, f2 * d_mor + g2, fc * d_mor + gc));
                    }
                }
            }
        }
    }
    let cat = FinCat::from_data(FinCatData {
        n_objects: c.n_objects() * d_objects,
        mor,
        identity,
        compose,
    })
    .expect("product tables form a category");
    let pi1 = FinFunctor::new(
        cat.clone(),
        c.clone(),
        (0..cat.n_objects()).map(|p| p / d_objects).collect(),
        (0..cat.n_mor()).map(|p| p / d_mor).collect(),
    )
    .expect("first projection is a functor");
    let pi2 = FinFunctor::new(
        cat.clone(),
        d.clone(),
        (0..cat.n_objects()).map(|p| p % d_objects).collect(),
        (0..cat.n_mor()).map(|p| p % d_mor).collect(),
    )
    .expect("second projection is a functor");
    Product { cat, pi1, pi2, d_objects, d_mor }
}

/// An iso-comma category over a cospan `F : C1 -> C3 <- C2 : G`, with its
/// projections and the invertible transformation `pi1.F => pi2.G` whose
/// component at `(x, y, f)` is `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoComma {
    pub cat: FinCat,
    pub pi1: FinFunctor,
    pub pi2: FinFunctor,
    pub nat: FinNatTrans,
    /// The cospan legs the comma was built over.
    pub cospan_left: FinFunctor,
    pub cospan_right: FinFunctor,
    /// Object decodings: `(x, y, f)` with `f : F(x) -> G(y)` invertible.
    pub objects: Vec<(ObjId, ObjId, MorId)>,
    /// Morphism decodings: `(g, h)` with the square condition
    /// `F(g) then f2  =  f1 then G(h)`.
    pub morphisms: Vec<(MorId, MorId)>,
}

impl IsoComma {
    pub fn obj_index(&self, x: ObjId, y: ObjId, f: MorId) -> Option<ObjId> {
        self.objects.iter().position(|&o| o == (x, y, f))
    }
    pub fn mor_index(&self, src: ObjId, g: MorId, h: MorId) -> Option<MorId> {
        self.morphisms
            .iter()
            .enumerate()
            .position(|(m, &p)| p == (g, h) && self.cat.src(m) == src)
    }

    /// Factors a cone through the iso-comma category: given legs
    /// `H1 : Z -> C1`, `H2 : Z -> C2` and an invertible `mu : H1.F => H2.G`,
    /// produces `U : Z -> cat` with `U.pi1 = H1`, `U.pi2 = H2` exactly, and
    /// `nat` restricting along U to `mu`.
    pub fn factor_cone(
        &self,
        h1: &FinFunctor,
        h2: &FinFunctor,
        mu: &FinNatTrans,
    ) -> Result<FinFunctor, BoundaryMismatch> {
        if h1.dom() != h2.dom() {
            return Err(BoundaryMismatch {
                op: "IsoComma::factor_cone",
                left: format!("dom of first leg = {}", describe_cat(h1.dom())),
                right: format!("dom of second leg = {}", describe_cat(h2.dom())),
            });
        }
        let want_src = compose_functors(h1, &self.cospan_left)?;
        let want_tgt = compose_functors(h2, &self.cospan_right)?;
        if *mu.src() != want_src || *mu.tgt() != want_tgt || !mu.is_invertible() {
            return Err(BoundaryMismatch {
                op: "IsoComma::factor_cone",
                left: format!("filler {} => {}", describe_functor(mu.src()), describe_functor(mu.tgt())),
                right: "expected an invertible filler from leg.F to leg.G".into(),
            });
        }
        let z = h1.dom();
        let on_obj: Option<Vec<ObjId>> = z
            .objects()
            .map(|zo| self.obj_index(h1.on_obj(zo), h2.on_obj(zo), mu.component(zo)))
            .collect();
        let Some(on_obj) = on_obj else {
            return Err(BoundaryMismatch {
                op: "IsoComma::factor_cone",
                left: "cone object images".into(),
                right: "no matching iso-comma object".into(),
            });
        };
        let on_mor: Option<Vec<MorId>> = z
            .morphisms()
            .map(|zm| {
                let src = on_obj[z.src(zm)];
                self.mor_index(src, h1.on_mor(zm), h2.on_mor(zm))
            })
            .collect();
        let Some(on_mor) = on_mor else {
            return Err(BoundaryMismatch {
                op: "IsoComma::factor_cone",
                left: "cone morphism images".into(),
                right: "no matching iso-comma morphism".into(),
            });
        };
        Ok(FinFunctor::new(z.clone(), self.cat.clone(), on_obj, on_mor)
            .expect("cone factorization is a functor"))
    }
}

/// Builds the iso-comma category of `F` and `G`. Errors unless the functors
/// share their codomain.
pub fn iso_comma(f: &FinFunctor, g: &FinFunctor) -> Result<IsoComma, BoundaryMismatch> {
    if f.cod() != g.cod() {
        return Err(BoundaryMismatch {
            op: "iso_comma",
            left: format!("cod of first = {}", describe_cat(f.cod())),
            right: format!("cod of second = {}", describe_cat(g.cod())),
        });
    }
    let (c1, c2, c3) = (f.dom(), g.dom(), f.cod());
    let mut objects = Vec::new();
    for x in c1.objects() {
        for y in c2.objects() {
            for m in c3.morphisms() {
                if c3.src(m) == f.on_obj(x) && c3.tgt(m) == g.on_obj(y) && c3.is_iso(m) {
                    objects.push((x, y, m));
                }
            }
        }
    }
    let mut morphisms = Vec::new();
    let mut mor = Vec::new();
    for (si, &(x1, y1, f1)) in objects.iter().enumerate() {
        for (ti, &(x2, y2, f2)) in objects.iter().enumerate() {
            for gm in c1.morphisms() {
                if c1.src(gm) != x1 || c1.tgt(gm) != x2 {
                    continue;
                }
                for hm in c2.morphisms() {
                    if c2.src(hm) != y1 || c2.tgt(hm) != y2 {
                        continue;
                    }
                    let left = c3.compose(f.on_mor(gm), f2);
                    let right = c3.compose(f1, g.on_mor(hm));
                    if left == right && left.is_some() {
                        morphisms.push((gm, hm));
                        mor.push((si, ti));
                    }
                }
            }
        }
    }
    let identity = objects
        .iter()
        .enumerate()
        .map(|(i, &(x, y, _))| {
            morphisms
                .iter()
                .enumerate()
                .position(|(m, &p)| {
                    p == (c1.identity(x), c2.identity(y)) && mor[m] == (i, i)
                })
                .expect("identity square present")
        })
        .collect();
    let mut compose = Vec::new();
    for (m1, &(g1, h1)) in morphisms.iter().enumerate() {
        for (m2, &(g2, h2)) in morphisms.iter().enumerate() {
            if mor[m1].1 != mor[m2].0 {
                continue;
            }
            let gc = c1.compose(g1, g2).expect("composable by boundary");
            let hc = c2.compose(h1, h2).expect("composable by boundary");
            let hit = morphisms
                .iter()
                .enumerate()
                .position(|(m, &p)| p == (gc, hc) && mor[m] == (mor[m1].0, mor[m2].1))
                .expect("composite square satisfies the square condition");
            compose.push((m1, m2, hit));
        }
    }
    let cat = FinCat::from_data(FinCatData {
        n_objects: objects.len(),
        mor,
        identity,
        compose,
    })
    .expect("iso-comma tables form a category");
    let pi1 = FinFunctor::new(
        cat.clone(),
        c1.clone(),
        objects.iter().map(|&(x, _, _)| x).collect(),
        morphisms.iter().map(|&(gm, _)| gm).collect(),
    )
    .expect("first projection is a functor");
    let pi2 = FinFunctor::new(
        cat.clone(),
        c2.clone(),
        objects.iter().map(|&(_, y, _)| y).collect(),
        morphisms.iter().map(|&(_, hm)| hm).collect(),
    )
    .expect("second projection is a functor");
    let nat = FinNatTrans::new(
        compose_functors(&pi1, f).expect("projection composes"),
        compose_functors(&pi2, g).expect("projection composes"),
        objects.iter().map(|&(_, _, m)| m).collect(),
    )
    .expect("comma component family is natural");
    Ok(IsoComma {
        cat,
        pi1,
        pi2,
        nat,
        cospan_left: f.clone(),
        cospan_right: g.clone(),
        objects,
        morphisms,
    })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures;
    use super::*;

    #[test]
    fn product_with_terminal_is_isomorphic() {
        let c = fixtures::walking_arrow();
        let p = product_category(&c, &fixtures::terminal());
        assert!(p.pi1.is_isomorphism());
        assert_eq!(p.cat.n_objects(), c.n_objects());
        assert_eq!(p.cat.n_mor(), c.n_mor());
    }

    #[test]
    fn product_sizes_multiply() {
        let c = fixtures::walking_arrow();
        let d = fixtures::z2();
        let p = product_category(&c, &d);
        assert_eq!(p.cat.n_objects(), c.n_objects() * d.n_objects());
        assert_eq!(p.cat.n_mor(), c.n_mor() * d.n_mor());
    }

    #[test]
    fn square_category_has_four_objects_nine_morphisms() {
        let s = fixtures::commuting_square();
        assert_eq!(s.n_objects(), 4);
        assert_eq!(s.n_mor(), 9);
    }

    #[test]
    fn pairing_factors_through_projections() {
        let c = fixtures::walking_arrow();
        let d = fixtures::z2();
        let p = product_category(&c, &d);
        let f = FinFunctor::identity(&c);
        let g = FinFunctor::constant(&c, &d, 0);
        let u = p.pair(&f, &g).unwrap();
        assert_eq!(compose_functors(&u, &p.pi1).unwrap(), f);
        assert_eq!(compose_functors(&u, &p.pi2).unwrap(), g);
    }

    #[test]
    fn iso_comma_of_identities_on_discrete_is_the_category() {
        let c = fixtures::discrete(2);
        let ic = iso_comma(&FinFunctor::identity(&c), &FinFunctor::identity(&c)).unwrap();
        // only identity isos exist, so objects are (x, x, id)
        assert_eq!(ic.cat.n_objects(), 2);
        assert_eq!(ic.cat.n_mor(), 2);
        assert!(ic.pi1.is_isomorphism());
    }

    #[test]
    fn iso_comma_over_z2_has_two_objects() {
        let t = fixtures::terminal();
        let z = fixtures::z2();
        let f = FinFunctor::constant(&t, &z, 0);
        let ic = iso_comma(&f, &f).unwrap();
        // one triple per iso of the group
        assert_eq!(ic.cat.n_objects(), 2);
        assert!(ic.cat.is_groupoid());
        // squares: h determined by g and the two fills, one endo per object
        // plus cross morphisms: g=h=id with s.f2 = f1.s
        assert_eq!(ic.cat.n_mor(), 2);
    }

    #[test]
    fn iso_comma_nat_component_is_the_fill() {
        let t = fixtures::terminal();
        let z = fixtures::z2();
        let f = FinFunctor::constant(&t, &z, 0);
        let ic = iso_comma(&f, &f).unwrap();
        for (i, &(_, _, m)) in ic.objects.iter().enumerate() {
            assert_eq!(ic.nat.component(i), m);
        }
        assert!(ic.nat.is_invertible());
    }

    #[test]
    fn cone_factorization_recovers_legs() {
        let c = fixtures::walking_arrow();
        let ic = iso_comma(&FinFunctor::identity(&c), &FinFunctor::identity(&c)).unwrap();
        let h = FinFunctor::identity(&c);
        let mu = FinNatTrans::identity(&h);
        let u = ic.factor_cone(&h, &h, &mu).unwrap();
        assert_eq!(compose_functors(&u, &ic.pi1).unwrap(), h);
        assert_eq!(compose_functors(&u, &ic.pi2).unwrap(), h);
    }
}
