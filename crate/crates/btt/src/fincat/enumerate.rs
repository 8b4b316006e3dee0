//! Bounded exhaustive enumeration of finite categories by backtracking over
//! composition tables. Morphism labels are canonicalized: identities come
//! first in object order, then the other morphisms sorted by (src, tgt).

use super::{validate_functor, validate_nat_trans, FinCat, FinCatData, FinFunctor, FinNatTrans, MorId};

/// All categories with at most `max_obj` objects and `max_mor` morphisms,
/// under the canonical label order. Distinct tables are distinct entries.
pub fn enumerate_categories(max_obj: usize, max_mor: usize) -> Vec<FinCat> {
    let mut out = Vec::new();
    for n_obj in 0..=max_obj {
        if n_obj > max_mor {
            break;
        }
        for extra in 0..=(max_mor - n_obj) {
            let mut boundaries = Vec::new();
            boundary_multisets(n_obj * n_obj, extra, 0, &mut boundaries, &mut |bs| {
                enumerate_tables(n_obj, bs, &mut out);
            });
        }
    }
    out
}

/// Nondecreasing sequences of `len` boundary codes from `0..space`.
fn boundary_multisets(
    space: usize,
    len: usize,
    min: usize,
    acc: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if len == 0 {
        emit(acc);
        return;
    }
    for code in min..space {
        acc.push(code);
        boundary_multisets(space, len - 1, code, acc, emit);
        acc.pop();
    }
}

fn enumerate_tables(n_obj: usize, extra_codes: &[usize], out: &mut Vec<FinCat>) {
    let mut mor: Vec<(usize, usize)> = (0..n_obj).map(|x| (x, x)).collect();
    for &code in extra_codes {
        mor.push((code / n_obj.max(1), code % n_obj.max(1)));
    }
    let n_mor = mor.len();
    let is_id = |f: MorId| f < n_obj;
    let mut table: Vec<Option<MorId>> = vec![None; n_mor * n_mor];
    let mut free = Vec::new();
    for f in 0..n_mor {
        for g in 0..n_mor {
            if mor[f].1 != mor[g].0 {
                continue;
            }
            if is_id(f) {
                table[f * n_mor + g] = Some(g);
            } else if is_id(g) {
                table[f * n_mor + g] = Some(f);
            } else {
                free.push((f, g));
            }
        }
    }
    // candidates per free cell: any morphism with the composite boundary
    let cands: Vec<Vec<MorId>> = free
        .iter()
        .map(|&(f, g)| {
            (0..n_mor)
                .filter(|&h| mor[h].0 == mor[f].0 && mor[h].1 == mor[g].1)
                .collect()
        })
        .collect();
    fn assoc_ok(mor: &[(usize, usize)], table: &[Option<MorId>], n_mor: usize) -> bool {
        for f in 0..n_mor {
            for g in 0..n_mor {
                if mor[f].1 != mor[g].0 {
                    continue;
                }
                let Some(fg) = table[f * n_mor + g] else { continue };
                for h in 0..n_mor {
                    if mor[g].1 != mor[h].0 {
                        continue;
                    }
                    let (Some(gh), Some(fg_h)) =
                        (table[g * n_mor + h], table[fg * n_mor + h])
                    else {
                        continue;
                    };
                    let Some(f_gh) = table[f * n_mor + gh] else { continue };
                    if fg_h != f_gh {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn dfs(
        idx: usize,
        free: &[(MorId, MorId)],
        cands: &[Vec<MorId>],
        mor: &[(usize, usize)],
        table: &mut Vec<Option<MorId>>,
        n_mor: usize,
        n_obj: usize,
        out: &mut Vec<FinCat>,
    ) {
        let Some(&(f, g)) = free.get(idx) else {
            let compose = (0..n_mor)
                .flat_map(|f| (0..n_mor).map(move |g| (f, g)))
                .filter_map(|(f, g)| table[f * n_mor + g].map(|h| (f, g, h)))
                .collect();
            let data = FinCatData {
                n_objects: n_obj,
                mor: mor.to_vec(),
                identity: (0..n_obj).collect(),
                compose,
            };
            out.push(FinCat::from_data(data).expect("backtracking preserves the axioms"));
            return;
        };
        for &h in &cands[idx] {
            table[f * n_mor + g] = Some(h);
            if assoc_ok(mor, table, n_mor) {
                dfs(idx + 1, free, cands, mor, table, n_mor, n_obj, out);
            }
        }
        table[f * n_mor + g] = None;
    }
    if cands.iter().any(|c| c.is_empty()) {
        return;
    }
    dfs(0, &free, &cands, &mor, &mut table, n_mor, n_obj, out);
}

/// All functors between two given categories, in lexicographic order of
/// (object map, morphism map). Identities are forced and candidates are
/// restricted to the image hom-set, so the search prunes hard.
pub fn enumerate_functors(dom: &FinCat, cod: &FinCat) -> Vec<FinFunctor> {
    let mut out = Vec::new();
    if dom.n_objects() == 0 {
        out.push(FinFunctor::new(dom.clone(), cod.clone(), vec![], vec![]).unwrap());
        return out;
    }
    if cod.n_objects() == 0 {
        return out;
    }
    let mut on_obj = vec![0; dom.n_objects()];
    loop {
        assign_mor(dom, cod, &on_obj, &mut vec![None; dom.n_mor()], 0, &mut out);
        // odometer over object assignments
        let mut i = on_obj.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            on_obj[i] += 1;
            if on_obj[i] < cod.n_objects() {
                break;
            }
            on_obj[i] = 0;
        }
    }
}

fn assign_mor(
    dom: &FinCat,
    cod: &FinCat,
    on_obj: &[usize],
    on_mor: &mut Vec<Option<MorId>>,
    f: MorId,
    out: &mut Vec<FinFunctor>,
) {
    if f == dom.n_mor() {
        let table: Vec<MorId> = on_mor.iter().map(|m| m.unwrap()).collect();
        if validate_functor(dom, cod, on_obj, &table).is_empty() {
            out.push(
                FinFunctor::new(dom.clone(), cod.clone(), on_obj.to_vec(), table).unwrap(),
            );
        }
        return;
    }
    let src = on_obj[dom.src(f)];
    let tgt = on_obj[dom.tgt(f)];
    let cands: Vec<MorId> = if dom.is_identity(f) {
        vec![cod.identity(src)]
    } else {
        cod.hom(src, tgt).collect()
    };
    'cand: for m in cands {
        on_mor[f] = Some(m);
        // check each composite whose factors are all assigned
        for g in 0..=f {
            for h in 0..=f {
                if let Some(k) = dom.compose(g, h) {
                    if k <= f {
                        let (Some(mg), Some(mh), Some(mk)) = (on_mor[g], on_mor[h], on_mor[k])
                        else {
                            continue;
                        };
                        if cod.compose(mg, mh) != Some(mk) {
                            on_mor[f] = None;
                            continue 'cand;
                        }
                    }
                }
            }
        }
        assign_mor(dom, cod, on_obj, on_mor, f + 1, out);
        on_mor[f] = None;
    }
}

/// All natural transformations between two parallel functors, in
/// lexicographic component order.
pub fn enumerate_nat_trans(src: &FinFunctor, tgt: &FinFunctor) -> Vec<FinNatTrans> {
    let mut out = Vec::new();
    if src.dom() != tgt.dom() || src.cod() != tgt.cod() {
        return out;
    }
    assign_comp(src, tgt, &mut Vec::new(), &mut out);
    out
}

fn assign_comp(
    src: &FinFunctor,
    tgt: &FinFunctor,
    comps: &mut Vec<MorId>,
    out: &mut Vec<FinNatTrans>,
) {
    let cod = src.cod();
    let x = comps.len();
    if x == src.dom().n_objects() {
        if validate_nat_trans(src, tgt, comps).is_empty() {
            out.push(FinNatTrans::new(src.clone(), tgt.clone(), comps.clone()).unwrap());
        }
        return;
    }
    'cand: for c in cod.hom(src.on_obj(x), tgt.on_obj(x)) {
        comps.push(c);
        // naturality for morphisms with both endpoints assigned
        for f in src.dom().morphisms() {
            let (a, b) = (src.dom().src(f), src.dom().tgt(f));
            if a < comps.len() && b < comps.len() {
                let left = cod.compose(src.on_mor(f), comps[b]);
                let right = cod.compose(comps[a], tgt.on_mor(f));
                if left != right {
                    comps.pop();
                    continue 'cand;
                }
            }
        }
        assign_comp(src, tgt, comps, out);
        comps.pop();
    }
}
