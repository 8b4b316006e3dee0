//! Text format for category, functor, natural transformation, and indexed
//! family records. Record fields mirror the construction data exactly;
//! composition is explicit triples, and any unspecified composable pair is
//! a format error (reported by validation).

use super::{
    FinCat, FinCatData, FinFunctor, FinNatTrans, IndexedCat, InvalidCat, InvalidFunctor,
    InvalidIndexed, InvalidNatTrans,
};
use crate::sexp::{parse_sexps, Pos, Sexp, SexpError};

/// Which structured maps a display collection accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Variance {
    #[default]
    Covariant,
    Contravariant,
    Isovariant,
}

impl Variance {
    pub fn as_str(self) -> &'static str {
        match self {
            Variance::Covariant => "covariant",
            Variance::Contravariant => "contravariant",
            Variance::Isovariant => "isovariant",
        }
    }
}

/// A named collection of display maps: the listed functors (by table
/// identity) are the accepted 1-cells, with the stated variance.
#[derive(Debug, Clone, PartialEq)]
pub struct PredicateRecord {
    pub variance: Variance,
    pub maps: Vec<FinFunctor>,
}

/// Parsed contents of a category file, in record order.
#[derive(Debug, Clone, Default)]
pub struct CatFile {
    pub categories: Vec<(String, FinCat)>,
    pub functors: Vec<(String, FinFunctor)>,
    pub nat_trans: Vec<(String, FinNatTrans)>,
    pub indexed: Vec<(String, IndexedCat)>,
    pub predicates: Vec<(String, PredicateRecord)>,
}

impl CatFile {
    pub fn category(&self, name: &str) -> Option<&FinCat> {
        self.categories.iter().find(|(n, _)| n == name).map(|(_, c)| c)
    }
    pub fn functor(&self, name: &str) -> Option<&FinFunctor> {
        self.functors.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }
    pub fn nat_tran(&self, name: &str) -> Option<&FinNatTrans> {
        self.nat_trans.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }
    pub fn indexed(&self, name: &str) -> Option<&IndexedCat> {
        self.indexed.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }
    pub fn predicate(&self, name: &str) -> Option<&PredicateRecord> {
        self.predicates.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum CatFileError {
    #[error(transparent)]
    Syntax(#[from] SexpError),
    #[error("{pos}: {msg}")]
    Form { pos: Pos, msg: String },
    #[error("duplicate record name {name}")]
    Duplicate { name: String },
    #[error("{pos}: unknown record {name}")]
    Unknown { pos: Pos, name: String },
    #[error("category {name}: {source}")]
    Category { name: String, source: InvalidCat },
    #[error("functor {name}: {source}")]
    Functor { name: String, source: InvalidFunctor },
    #[error("nattrans {name}: {source}")]
    NatTrans { name: String, source: InvalidNatTrans },
    #[error("indexed {name}: {source}")]
    Indexed { name: String, source: InvalidIndexed },
}

fn form_err(pos: Pos, msg: impl Into<String>) -> CatFileError {
    CatFileError::Form { pos, msg: msg.into() }
}

fn expect_usize(e: &Sexp) -> Result<usize, CatFileError> {
    e.as_usize().ok_or_else(|| form_err(e.pos(), "expected a number"))
}

fn expect_symbol(e: &Sexp) -> Result<&str, CatFileError> {
    match e.atom() {
        Some(s) if s.parse::<usize>().is_err() => Ok(s),
        _ => Err(form_err(e.pos(), "expected a name")),
    }
}

/// A field form `(head n1 n2 ...)` with a fixed arity of numbers.
fn field<'a>(e: &'a Sexp, head: &str, arity: usize) -> Result<Option<Vec<usize>>, CatFileError> {
    let Some(items) = e.list() else {
        return Err(form_err(e.pos(), "expected a field form"));
    };
    let Some(h) = items.first().and_then(Sexp::atom) else {
        return Err(form_err(e.pos(), "expected a field head"));
    };
    if h != head {
        return Ok(None);
    }
    if items.len() != arity + 1 {
        return Err(form_err(
            e.pos(),
            format!("{head} takes {arity} numbers, got {}", items.len() - 1),
        ));
    }
    items[1..].iter().map(expect_usize).collect::<Result<Vec<_>, _>>().map(Some)
}

/// A field form `(head n1 n2 ...)` of any length.
fn vec_field(e: &Sexp, head: &str) -> Result<Option<Vec<usize>>, CatFileError> {
    let Some(items) = e.list() else {
        return Err(form_err(e.pos(), "expected a field form"));
    };
    let Some(h) = items.first().and_then(Sexp::atom) else {
        return Err(form_err(e.pos(), "expected a field head"));
    };
    if h != head {
        return Ok(None);
    }
    items[1..].iter().map(expect_usize).collect::<Result<Vec<_>, _>>().map(Some)
}

/// Parses a category file, resolving references in order of appearance.
pub fn parse_cat_file(text: &str) -> Result<CatFile, CatFileError> {
    let forms = parse_sexps(text)?;
    let mut out = CatFile::default();
    let mut names = std::collections::HashSet::new();
    for form in &forms {
        let Some(items) = form.list() else {
            return Err(form_err(form.pos(), "expected a record form"));
        };
        let Some(head) = items.first().and_then(Sexp::atom) else {
            return Err(form_err(form.pos(), "expected a record head"));
        };
        if items.len() < 2 {
            return Err(form_err(form.pos(), format!("{head} record needs a name")));
        }
        let name = expect_symbol(&items[1])?.to_string();
        if !names.insert(name.clone()) {
            return Err(CatFileError::Duplicate { name });
        }
        match head {
            "category" => {
                let mut data = FinCatData::default();
                let mut identity = Vec::new();
                let mut saw_objects = false;
                for e in &items[2..] {
                    if let Some(v) = field(e, "objects", 1)? {
                        data.n_objects = v[0];
                        saw_objects = true;
                    } else if let Some(v) = field(e, "mor", 2)? {
                        data.mor.push((v[0], v[1]));
                    } else if let Some(v) = field(e, "identity", 2)? {
                        identity.push((v[0], v[1], e.pos()));
                    } else if let Some(v) = field(e, "compose", 3)? {
                        data.compose.push((v[0], v[1], v[2]));
                    } else {
                        return Err(form_err(e.pos(), "unknown category field"));
                    }
                }
                if !saw_objects {
                    return Err(form_err(form.pos(), "category record lacks (objects N)"));
                }
                data.identity = vec![usize::MAX; data.n_objects];
                for (x, m, pos) in identity {
                    if x >= data.n_objects {
                        return Err(form_err(pos, format!("identity object {x} out of range")));
                    }
                    data.identity[x] = m;
                }
                if data.identity.iter().any(|&m| m == usize::MAX) {
                    return Err(form_err(form.pos(), "missing identity entry for some object"));
                }
                let cat = FinCat::from_data(data)
                    .map_err(|source| CatFileError::Category { name: name.clone(), source })?;
                out.categories.push((name, cat));
            }
            "functor" => {
                if items.len() < 4 {
                    return Err(form_err(form.pos(), "functor record needs dom and cod names"));
                }
                let dom_name = expect_symbol(&items[2])?;
                let cod_name = expect_symbol(&items[3])?;
                let dom = out
                    .category(dom_name)
                    .ok_or_else(|| CatFileError::Unknown {
                        pos: items[2].pos(),
                        name: dom_name.into(),
                    })?
                    .clone();
                let cod = out
                    .category(cod_name)
                    .ok_or_else(|| CatFileError::Unknown {
                        pos: items[3].pos(),
                        name: cod_name.into(),
                    })?
                    .clone();
                let mut on_obj = None;
                let mut on_mor = None;
                for e in &items[4..] {
                    if let Some(v) = vec_field(e, "on-obj")? {
                        on_obj = Some(v);
                    } else if let Some(v) = vec_field(e, "on-mor")? {
                        on_mor = Some(v);
                    } else {
                        return Err(form_err(e.pos(), "unknown functor field"));
                    }
                }
                let (Some(on_obj), Some(on_mor)) = (on_obj, on_mor) else {
                    return Err(form_err(form.pos(), "functor record needs on-obj and on-mor"));
                };
                let f = FinFunctor::new(dom, cod, on_obj, on_mor)
                    .map_err(|source| CatFileError::Functor { name: name.clone(), source })?;
                out.functors.push((name, f));
            }
            "nattrans" => {
                if items.len() < 4 {
                    return Err(form_err(form.pos(), "nattrans record needs src and tgt names"));
                }
                let src_name = expect_symbol(&items[2])?;
                let tgt_name = expect_symbol(&items[3])?;
                let src = out
                    .functor(src_name)
                    .ok_or_else(|| CatFileError::Unknown {
                        pos: items[2].pos(),
                        name: src_name.into(),
                    })?
                    .clone();
                let tgt = out
                    .functor(tgt_name)
                    .ok_or_else(|| CatFileError::Unknown {
                        pos: items[3].pos(),
                        name: tgt_name.into(),
                    })?
                    .clone();
                let mut components = None;
                for e in &items[4..] {
                    if let Some(v) = vec_field(e, "components")? {
                        components = Some(v);
                    } else {
                        return Err(form_err(e.pos(), "unknown nattrans field"));
                    }
                }
                let Some(components) = components else {
                    return Err(form_err(form.pos(), "nattrans record needs components"));
                };
                let n = FinNatTrans::new(src, tgt, components)
                    .map_err(|source| CatFileError::NatTrans { name: name.clone(), source })?;
                out.nat_trans.push((name, n));
            }
            "indexed" => {
                if items.len() < 3 {
                    return Err(form_err(form.pos(), "indexed record needs a base name"));
                }
                let base_name = expect_symbol(&items[2])?;
                let base = out
                    .category(base_name)
                    .ok_or_else(|| CatFileError::Unknown {
                        pos: items[2].pos(),
                        name: base_name.into(),
                    })?
                    .clone();
                let mut fiber = vec![None; base.n_objects()];
                let mut transport = vec![None; base.n_mor()];
                for e in &items[3..] {
                    let Some(sub) = e.list() else {
                        return Err(form_err(e.pos(), "expected a field form"));
                    };
                    match sub.first().and_then(Sexp::atom) {
                        Some("fiber") if sub.len() == 3 => {
                            let x = expect_usize(&sub[1])?;
                            let cname = expect_symbol(&sub[2])?;
                            let c = out.category(cname).ok_or_else(|| CatFileError::Unknown {
                                pos: sub[2].pos(),
                                name: cname.into(),
                            })?;
                            if x >= fiber.len() {
                                return Err(form_err(sub[1].pos(), "fiber object out of range"));
                            }
                            fiber[x] = Some(c.clone());
                        }
                        Some("transport") if sub.len() == 3 => {
                            let m = expect_usize(&sub[1])?;
                            let fname = expect_symbol(&sub[2])?;
                            let f = out.functor(fname).ok_or_else(|| CatFileError::Unknown {
                                pos: sub[2].pos(),
                                name: fname.into(),
                            })?;
                            if m >= transport.len() {
                                return Err(form_err(
                                    sub[1].pos(),
                                    "transport morphism out of range",
                                ));
                            }
                            transport[m] = Some(f.clone());
                        }
                        _ => return Err(form_err(e.pos(), "unknown indexed field")),
                    }
                }
                let fiber: Option<Vec<FinCat>> = fiber.into_iter().collect();
                let transport: Option<Vec<FinFunctor>> = transport.into_iter().collect();
                let (Some(fiber), Some(transport)) = (fiber, transport) else {
                    return Err(form_err(
                        form.pos(),
                        "indexed record must cover every object and morphism",
                    ));
                };
                let fam = IndexedCat::new(base, fiber, transport)
                    .map_err(|source| CatFileError::Indexed { name: name.clone(), source })?;
                out.indexed.push((name, fam));
            }
            "predicate" => {
                let mut variance = Variance::Covariant;
                let mut maps = Vec::new();
                for e in &items[2..] {
                    let Some(sub) = e.list() else {
                        return Err(form_err(e.pos(), "expected a field form"));
                    };
                    match sub.first().and_then(Sexp::atom) {
                        Some("variance") if sub.len() == 2 => {
                            variance = match expect_symbol(&sub[1])? {
                                "covariant" => Variance::Covariant,
                                "contravariant" => Variance::Contravariant,
                                "isovariant" => Variance::Isovariant,
                                other => {
                                    return Err(form_err(
                                        sub[1].pos(),
                                        format!("unknown variance {other}"),
                                    ))
                                }
                            };
                        }
                        Some("maps") => {
                            for me in &sub[1..] {
                                let fname = expect_symbol(me)?;
                                let f = out.functor(fname).ok_or_else(|| {
                                    CatFileError::Unknown { pos: me.pos(), name: fname.into() }
                                })?;
                                maps.push(f.clone());
                            }
                        }
                        _ => return Err(form_err(e.pos(), "unknown predicate field")),
                    }
                }
                out.predicates.push((name, PredicateRecord { variance, maps }));
            }
            other => {
                return Err(form_err(form.pos(), format!("unknown record kind {other}")));
            }
        }
    }
    Ok(out)
}

fn print_category(name: &str, c: &FinCat, out: &mut String) {
    let data = c.to_data();
    out.push_str(&format!("(category {name}\n  (objects {})\n", data.n_objects));
    for (s, t) in &data.mor {
        out.push_str(&format!("  (mor {s} {t})\n"));
    }
    for (x, m) in data.identity.iter().enumerate() {
        out.push_str(&format!("  (identity {x} {m})\n"));
    }
    for (f, g, h) in &data.compose {
        out.push_str(&format!("  (compose {f} {g} {h})\n"));
    }
    out.push_str(")\n");
}

/// Prints a file in the canonical layout: one record per block, one field
/// per line. Categories referenced by functor or indexed records must be
/// present under the same names for the output to parse back.
pub fn print_cat_file(file: &CatFile) -> String {
    let mut out = String::new();
    for (name, c) in &file.categories {
        print_category(name, c, &mut out);
    }
    for (name, f) in &file.functors {
        let dom = file
            .categories
            .iter()
            .find(|(_, c)| c == f.dom())
            .map(|(n, _)| n.clone())
            .unwrap_or_else(|| "?".into());
        let cod = file
            .categories
            .iter()
            .find(|(_, c)| c == f.cod())
            .map(|(n, _)| n.clone())
            .unwrap_or_else(|| "?".into());
        out.push_str(&format!("(functor {name} {dom} {cod}\n"));
        let objs: Vec<String> = f.obj_map().iter().map(|x| x.to_string()).collect();
        let mors: Vec<String> = f.mor_map().iter().map(|m| m.to_string()).collect();
        out.push_str(&format!("  (on-obj {})\n", objs.join(" ")));
        out.push_str(&format!("  (on-mor {})\n", mors.join(" ")));
        out.push_str(")\n");
    }
    for (name, n) in &file.nat_trans {
        let src = file
            .functors
            .iter()
            .find(|(_, f)| f == n.src())
            .map(|(nm, _)| nm.clone())
            .unwrap_or_else(|| "?".into());
        let tgt = file
            .functors
            .iter()
            .find(|(_, f)| f == n.tgt())
            .map(|(nm, _)| nm.clone())
            .unwrap_or_else(|| "?".into());
        let comps: Vec<String> = n.components().iter().map(|c| c.to_string()).collect();
        out.push_str(&format!(
            "(nattrans {name} {src} {tgt}\n  (components {})\n)\n",
            comps.join(" ")
        ));
    }
    for (name, fam) in &file.indexed {
        let base = file
            .categories
            .iter()
            .find(|(_, c)| c == fam.base())
            .map(|(n, _)| n.clone())
            .unwrap_or_else(|| "?".into());
        out.push_str(&format!("(indexed {name} {base}\n"));
        for (x, fc) in fam.fibers().iter().enumerate() {
            let cname = file
                .categories
                .iter()
                .find(|(_, c)| c == fc)
                .map(|(n, _)| n.clone())
                .unwrap_or_else(|| "?".into());
            out.push_str(&format!("  (fiber {x} {cname})\n"));
        }
        for (m, tf) in fam.transports().iter().enumerate() {
            let fname = file
                .functors
                .iter()
                .find(|(_, f)| f == tf)
                .map(|(n, _)| n.clone())
                .unwrap_or_else(|| "?".into());
            out.push_str(&format!("  (transport {m} {fname})\n"));
        }
        out.push_str(")\n");
    }
    for (name, p) in &file.predicates {
        out.push_str(&format!("(predicate {name}\n  (variance {})\n", p.variance.as_str()));
        let names: Vec<String> = p
            .maps
            .iter()
            .map(|pf| {
                file.functors
                    .iter()
                    .find(|(_, f)| f == pf)
                    .map(|(n, _)| n.clone())
                    .unwrap_or_else(|| "?".into())
            })
            .collect();
        out.push_str(&format!("  (maps {})\n)\n", names.join(" ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::fixtures;
    use super::*;

    fn sample_file() -> CatFile {
        let wa = fixtures::walking_arrow();
        let t = fixtures::terminal();
        let bang = FinFunctor::constant(&wa, &t, 0);
        let idwa = FinFunctor::identity(&wa);
        let idt = FinFunctor::identity(&t);
        let n = FinNatTrans::identity(&idwa);
        CatFile {
            categories: vec![("WA".into(), wa.clone()), ("T".into(), t.clone())],
            functors: vec![
                ("bang".into(), bang.clone()),
                ("idWA".into(), idwa.clone()),
                ("idT".into(), idt),
            ],
            nat_trans: vec![("refl".into(), n)],
            indexed: vec![(
                "triv".into(),
                IndexedCat::constant(wa.clone(), t.clone()),
            )],
            predicates: vec![(
                "disp".into(),
                PredicateRecord { variance: Variance::Covariant, maps: vec![bang, idwa] },
            )],
        }
    }

    #[test]
    fn print_then_parse_is_identity() {
        let file = sample_file();
        let text = print_cat_file(&file);
        let back = parse_cat_file(&text).unwrap();
        assert_eq!(back.categories, file.categories);
        assert_eq!(back.functors, file.functors);
        assert_eq!(back.nat_trans, file.nat_trans);
        assert_eq!(
            back.indexed.iter().map(|(n, _)| n).collect::<Vec<_>>(),
            file.indexed.iter().map(|(n, _)| n).collect::<Vec<_>>()
        );
        assert!(back.indexed[0].1 == file.indexed[0].1);
        assert_eq!(back.predicates, file.predicates);
    }

    #[test]
    fn predicate_defaults_to_covariant_and_rejects_unknown_maps() {
        let base = print_cat_file(&CatFile {
            categories: vec![("T".into(), fixtures::terminal())],
            functors: vec![("idT".into(), FinFunctor::identity(&fixtures::terminal()))],
            ..Default::default()
        });
        let ok = parse_cat_file(&format!("{base}(predicate P (maps idT))")).unwrap();
        assert_eq!(ok.predicate("P").unwrap().variance, Variance::Covariant);
        assert_eq!(ok.predicate("P").unwrap().maps.len(), 1);
        let missing = parse_cat_file(&format!("{base}(predicate P (maps ghost))"));
        assert!(matches!(missing, Err(CatFileError::Unknown { name, .. }) if name == "ghost"));
        let bad = parse_cat_file(&format!("{base}(predicate P (variance weird) (maps idT))"));
        assert!(matches!(bad, Err(CatFileError::Form { .. })));
    }

    #[test]
    fn parse_then_print_is_byte_identical() {
        let text = print_cat_file(&sample_file());
        let printed = print_cat_file(&parse_cat_file(&text).unwrap());
        assert_eq!(text, printed);
    }

    #[test]
    fn missing_composite_is_rejected() {
        let text = "(category C\n (objects 1)\n (mor 0 0)\n (identity 0 0))";
        match parse_cat_file(text) {
            Err(CatFileError::Category { name, source }) => {
                assert_eq!(name, "C");
                assert!(source
                    .0
                    .contains(&super::super::CatViolation::MissingComposite { f: 0, g: 0 }));
            }
            other => panic!("expected a category validation error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_reference_is_reported_with_position() {
        let text = "(functor F nowhere also-nowhere\n  (on-obj)\n  (on-mor))";
        match parse_cat_file(text) {
            Err(CatFileError::Unknown { name, .. }) => assert_eq!(name, "nowhere"),
            other => panic!("expected an unknown-name error, got {other:?}"),
        }
    }

    #[test]
    fn indexed_must_cover_all_fibers() {
        let wa_text = print_cat_file(&CatFile {
            categories: vec![("WA".into(), fixtures::walking_arrow())],
            ..Default::default()
        });
        let text = format!("{wa_text}(indexed I WA\n  (fiber 0 WA)\n)");
        assert!(matches!(parse_cat_file(&text), Err(CatFileError::Form { .. })));
    }
}
