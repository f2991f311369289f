//! Deterministic instance generators. Every family is a pure function
//! of its parameters and the seed, and every emitted object passes its
//! validating constructor.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use semilocal::algebra::{
    direct_product, ideal_generated, matrix_extension, quotient_by_ideal, upper_triangular,
    Algebra, Morphism,
};
use semilocal::fp::{FpMatrix, FpPoly};
use semilocal::module::{module_from_presentation, quotient_module, FdModule};
use semilocal::{FieldProduct, Subspace};

use crate::format::{algebra_to_instance, Instance};

pub const POOL_ENUMERATION_CAP: u128 = 1 << 12;
pub const ENDO_ENUMERATION_CAP: u128 = 1 << 14;

/// GF(p)[x]/(f) for a monic modulus polynomial.
pub fn poly_quotient_algebra(p: u64, f: &FpPoly) -> Algebra {
    assert!(f.is_monic(), "modulus polynomial must be monic");
    let n = f.degree();
    let x = FpPoly::x(p);
    let mut consts = vec![0u64; n * n * n];
    for i in 0..n {
        for j in 0..n {
            let mut pw = FpPoly::one(p);
            for _ in 0..(i + j) {
                pw = pw.mul(&x);
            }
            let rem = pw.rem(f);
            for (k, &c) in rem.coeffs().iter().enumerate() {
                consts[(i * n + j) * n + k] = c;
            }
        }
    }
    let mut unit = vec![0u64; n];
    unit[0] = 1;
    Algebra::new(p, n, consts, unit).expect("polynomial quotient is associative and unital")
}

pub fn truncated_poly(p: u64, n: usize) -> Algebra {
    let mut coeffs = vec![0u64; n + 1];
    coeffs[n] = 1;
    poly_quotient_algebra(p, &FpPoly::new(p, coeffs))
}

/// GF(p^k) as a GF(p)-algebra for small k, via fixed irreducible moduli.
pub fn field_extension(p: u64, k: usize) -> Option<Algebra> {
    let f = match (p, k) {
        (2, 2) => FpPoly::new(2, vec![1, 1, 1]),
        (2, 3) => FpPoly::new(2, vec![1, 1, 0, 1]),
        (3, 2) => FpPoly::new(3, vec![1, 0, 1]),
        (5, 2) => FpPoly::new(5, vec![2, 0, 1]),
        _ => return None,
    };
    debug_assert!(f.is_irreducible());
    Some(poly_quotient_algebra(p, &f))
}

/// Truncated path algebra of an acyclic quiver: basis all paths of
/// length at most `max_len`, product concatenation (zero past the cap).
pub fn path_algebra(p: u64, edges: &[(usize, usize)], max_len: usize) -> Result<Algebra, String> {
    let verts = edges
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .max()
        .map_or(1, |m| m + 1);
    // acyclicity by topological scan
    let mut indeg = vec![0usize; verts];
    for &(_, b) in edges {
        indeg[b] += 1;
    }
    let mut stack: Vec<usize> = (0..verts).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    let mut indeg2 = indeg.clone();
    while let Some(v) = stack.pop() {
        seen += 1;
        for &(a, b) in edges {
            if a == v {
                indeg2[b] -= 1;
                if indeg2[b] == 0 {
                    stack.push(b);
                }
            }
        }
    }
    if seen != verts {
        return Err("quiver has a cycle".into());
    }
    // paths as (start, edge list); trivial paths first, then by length
    #[derive(Clone, PartialEq, Eq)]
    struct Path {
        start: usize,
        end: usize,
        edges: Vec<usize>,
    }
    let mut paths: Vec<Path> = (0..verts)
        .map(|v| Path {
            start: v,
            end: v,
            edges: vec![],
        })
        .collect();
    let mut frontier: Vec<Path> = paths.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for path in &frontier {
            for (ei, &(a, b)) in edges.iter().enumerate() {
                if a == path.end {
                    let mut e2 = path.edges.clone();
                    e2.push(ei);
                    next.push(Path {
                        start: path.start,
                        end: b,
                        edges: e2,
                    });
                }
            }
        }
        paths.extend(next.iter().cloned());
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    let dim = paths.len();
    let index_of = |q: &Path| paths.iter().position(|r| r == q);
    let mut consts = vec![0u64; dim * dim * dim];
    for (i, q) in paths.iter().enumerate() {
        for (j, r) in paths.iter().enumerate() {
            if q.end != r.start {
                continue;
            }
            if q.edges.len() + r.edges.len() > max_len {
                continue;
            }
            let mut e2 = q.edges.clone();
            e2.extend_from_slice(&r.edges);
            let composite = Path {
                start: q.start,
                end: r.end,
                edges: e2,
            };
            if let Some(k) = index_of(&composite) {
                consts[(i * dim + j) * dim + k] = 1;
            }
        }
    }
    let mut unit = vec![0u64; dim];
    for v in 0..verts {
        let trivial = Path {
            start: v,
            end: v,
            edges: vec![],
        };
        unit[index_of(&trivial).unwrap()] = 1;
    }
    Algebra::with_cap(p, dim, consts, unit, 64).map_err(|e| e.to_string())
}

/// GF(p) (+) GF(p)^d with V squaring to zero.
pub fn trivial_extension_algebra(p: u64, d: usize) -> Algebra {
    let k = Algebra::field(p).unwrap();
    let id = FpMatrix::identity(p, d);
    semilocal::trivial_extension(&k, &[id.clone()], &[id]).unwrap()
}

fn parse_quiver(spec: &str) -> Result<Vec<(usize, usize)>, String> {
    let mut edges = Vec::new();
    for part in spec.split(',') {
        let part = part.trim();
        let (a, b) = part
            .split_once("->")
            .or_else(|| part.split_once('-'))
            .ok_or_else(|| format!("bad quiver edge '{part}'"))?;
        let a: usize = a.trim().parse().map_err(|_| format!("bad vertex '{a}'"))?;
        let b: usize = b.trim().parse().map_err(|_| format!("bad vertex '{b}'"))?;
        edges.push((a, b));
    }
    Ok(edges)
}

fn get_num<T: std::str::FromStr>(
    params: &BTreeMap<String, String>,
    key: &str,
    default: T,
) -> Result<T, String> {
    match params.get(key) {
        None => Ok(default),
        Some(v) => v.parse().map_err(|_| format!("bad value for {key}: '{v}'")),
    }
}

/// Builds a named family. Parameters are key=value tokens; unknown keys
/// are rejected.
pub fn build_family(
    family: &str,
    params: &BTreeMap<String, String>,
    seed: u64,
) -> Result<Vec<Instance>, String> {
    let check_keys = |allowed: &[&str]| -> Result<(), String> {
        for k in params.keys() {
            if !allowed.contains(&k.as_str()) {
                return Err(format!("unknown parameter '{k}' for family {family}"));
            }
        }
        Ok(())
    };
    let gen_tag = Some(family.to_string());
    match family {
        "triangular" => {
            check_keys(&["n", "p"])?;
            let n: usize = get_num(params, "n", 2)?;
            let p: u64 = get_num(params, "p", 2)?;
            let (t, _) = upper_triangular(&Algebra::field(p).map_err(|e| e.to_string())?, n)
                .map_err(|e| e.to_string())?;
            Ok(vec![algebra_to_instance(
                &format!("triangular_{n}_{p}"),
                &t,
                gen_tag,
                Some(seed),
            )])
        }
        "truncated-poly" => {
            check_keys(&["n", "p"])?;
            let n: usize = get_num(params, "n", 3)?;
            let p: u64 = get_num(params, "p", 3)?;
            if n == 0 {
                return Err("n must be positive".into());
            }
            let a = truncated_poly(p, n);
            Ok(vec![algebra_to_instance(
                &format!("truncpoly_{n}_{p}"),
                &a,
                gen_tag,
                Some(seed),
            )])
        }
        "path-algebra" => {
            check_keys(&["quiver", "len", "p"])?;
            let spec = params
                .get("quiver")
                .cloned()
                .unwrap_or_else(|| "0-1".to_string());
            let len: usize = get_num(params, "len", 2)?;
            let p: u64 = get_num(params, "p", 2)?;
            let edges = parse_quiver(&spec)?;
            let a = path_algebra(p, &edges, len)?;
            Ok(vec![algebra_to_instance(
                &format!("path_{}_{}", len, p),
                &a,
                gen_tag,
                Some(seed),
            )])
        }
        "trivial-ext" => {
            check_keys(&["p", "dims"])?;
            let p: u64 = get_num(params, "p", 2)?;
            let d: usize = get_num(params, "dims", 1)?;
            let a = trivial_extension_algebra(p, d);
            Ok(vec![algebra_to_instance(
                &format!("trivext_{p}_{d}"),
                &a,
                gen_tag,
                Some(seed),
            )])
        }
        "product" => {
            check_keys(&["left", "right"])?;
            let left = build_named(params.get("left").map(String::as_str).unwrap_or("truncated-poly:2:2"))?;
            let right = build_named(params.get("right").map(String::as_str).unwrap_or("triangular:2:2"))?;
            let (prod, _, _) = direct_product(&left, &right).map_err(|e| e.to_string())?;
            Ok(vec![algebra_to_instance("product", &prod, gen_tag, Some(seed))])
        }
        "matrix" => {
            check_keys(&["n", "base"])?;
            let n: usize = get_num(params, "n", 2)?;
            let base = build_named(params.get("base").map(String::as_str).unwrap_or("field:2"))?;
            let m = matrix_extension(&base, n).map_err(|e| e.to_string())?;
            Ok(vec![algebra_to_instance(
                &format!("matrix_{n}"),
                &m,
                gen_tag,
                Some(seed),
            )])
        }
        "sample" => {
            check_keys(&["count"])?;
            let count: usize = get_num(params, "count", 5)?;
            let pool = algebra_pool(seed, count);
            Ok(pool
                .into_iter()
                .map(|(name, a)| algebra_to_instance(&name, &a, gen_tag.clone(), Some(seed)))
                .collect())
        }
        other => Err(format!("unknown family '{other}'")),
    }
}

/// Compact family spec "name:arg1:arg2" used inside product/matrix.
fn build_named(spec: &str) -> Result<Algebra, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts[0] {
        "field" => {
            let p: u64 = parts.get(1).unwrap_or(&"2").parse().map_err(|_| "bad p")?;
            Algebra::field(p).map_err(|e| e.to_string())
        }
        "truncated-poly" => {
            let n: usize = parts.get(1).unwrap_or(&"2").parse().map_err(|_| "bad n")?;
            let p: u64 = parts.get(2).unwrap_or(&"2").parse().map_err(|_| "bad p")?;
            Ok(truncated_poly(p, n))
        }
        "triangular" => {
            let n: usize = parts.get(1).unwrap_or(&"2").parse().map_err(|_| "bad n")?;
            let p: u64 = parts.get(2).unwrap_or(&"2").parse().map_err(|_| "bad p")?;
            Ok(upper_triangular(&Algebra::field(p).map_err(|e| e.to_string())?, n)
                .map_err(|e| e.to_string())?
                .0)
        }
        "gf" => {
            let p: u64 = parts.get(1).unwrap_or(&"2").parse().map_err(|_| "bad p")?;
            let k: usize = parts.get(2).unwrap_or(&"2").parse().map_err(|_| "bad k")?;
            field_extension(p, k).ok_or_else(|| format!("no stored modulus for GF({p}^{k})"))
        }
        other => Err(format!("unknown base family '{other}'")),
    }
}

/// A mixed pool of validated semilocal algebras, capped so exhaustive
/// locality checks stay within budget.
pub fn algebra_pool(seed: u64, count: usize) -> Vec<(String, Algebra)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut idx = 0usize;
    while out.len() < count {
        let pick = rng.gen_range(0..8u32);
        let cand: Option<(String, Algebra)> = match pick {
            0 => {
                let n = rng.gen_range(2..=4usize);
                let p = [2u64, 3, 5][rng.gen_range(0..3usize)];
                Some((format!("truncpoly_{n}_{p}_{idx}"), truncated_poly(p, n)))
            }
            1 => {
                let p = [2u64, 3][rng.gen_range(0..2usize)];
                let t = upper_triangular(&Algebra::field(p).unwrap(), 2).unwrap().0;
                Some((format!("triangular_2_{p}_{idx}"), t))
            }
            2 => {
                let quivers: [&[(usize, usize)]; 4] = [
                    &[(0, 1)],
                    &[(0, 1), (1, 2)],
                    &[(0, 2), (1, 2)],
                    &[(0, 1), (0, 2)],
                ];
                let q = quivers[rng.gen_range(0..4usize)];
                let len = rng.gen_range(1..=2usize);
                path_algebra(2, q, len)
                    .ok()
                    .map(|a| (format!("path_{idx}"), a))
            }
            3 => {
                let p = [2u64, 3][rng.gen_range(0..2usize)];
                let d = rng.gen_range(1..=2usize);
                Some((format!("trivext_{p}_{d}_{idx}"), trivial_extension_algebra(p, d)))
            }
            4 => field_extension(2, rng.gen_range(2..=3usize))
                .map(|a| (format!("gfext_{idx}"), a)),
            5 => {
                let a = truncated_poly([2u64, 3][rng.gen_range(0..2usize)], 2);
                let b = Algebra::field(a.modulus()).unwrap();
                direct_product(&a, &b)
                    .ok()
                    .map(|(p, _, _)| (format!("product_{idx}"), p))
            }
            6 => {
                let p = [2u64, 3][rng.gen_range(0..2usize)];
                matrix_extension(&Algebra::field(p).unwrap(), 2)
                    .ok()
                    .map(|m| (format!("matrix2_{p}_{idx}"), m))
            }
            _ => {
                let p = 2u64;
                matrix_extension(&truncated_poly(p, 2), 2)
                    .ok()
                    .map(|m| (format!("matrixtp_{idx}"), m))
            }
        };
        idx += 1;
        if let Some((name, a)) = cand {
            if a.element_count() <= POOL_ENUMERATION_CAP {
                out.push((name, a));
            }
        }
    }
    out
}

/// Algebras with p strictly larger than the dimension, where both
/// radical methods apply.
pub fn algebra_pool_p_gt_dim(seed: u64, count: usize) -> Vec<(String, Algebra)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut idx = 0usize;
    while out.len() < count {
        let p = [5u64, 7, 11, 13][rng.gen_range(0..4usize)];
        let pick = rng.gen_range(0..5u32);
        let cand: Option<(String, Algebra)> = match pick {
            0 => {
                let n = rng.gen_range(2..=4usize);
                Some((format!("truncpoly_{n}_{p}_{idx}"), truncated_poly(p, n)))
            }
            1 => {
                let t = upper_triangular(&Algebra::field(p).unwrap(), 2).unwrap().0;
                Some((format!("triangular_2_{p}_{idx}"), t))
            }
            2 => {
                let d = rng.gen_range(1..=2usize);
                Some((format!("trivext_{p}_{d}_{idx}"), trivial_extension_algebra(p, d)))
            }
            3 => {
                // random monic modulus polynomial of degree 2..4
                let deg = rng.gen_range(2..=4usize);
                let mut coeffs: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..p)).collect();
                coeffs.push(1);
                let f = FpPoly::new(p, coeffs);
                Some((format!("polyquot_{idx}"), poly_quotient_algebra(p, &f)))
            }
            _ => {
                let a = truncated_poly(p, 2);
                let b = Algebra::field(p).unwrap();
                direct_product(&a, &b)
                    .ok()
                    .map(|(m, _, _)| (format!("product_{p}_{idx}"), m))
            }
        };
        idx += 1;
        if let Some((name, a)) = cand {
            if a.modulus() > a.dim() as u64 {
                out.push((name, a));
            }
        }
    }
    out
}

/// Random finitely presented modules over `a`, canonical instances
/// first, filtered so End(M) stays enumerable.
pub fn module_pool(a: &Algebra, seed: u64, count: usize) -> Vec<FdModule> {
    let mut out: Vec<FdModule> = Vec::new();
    let p = a.modulus();
    let reg = FdModule::regular(a);
    let push_checked = |m: FdModule, out: &mut Vec<FdModule>| {
        if m.dim() == 0 || m.dim() > 6 {
            return;
        }
        if let Ok(endo) = m.endo_algebra() {
            if (p as u128).pow(endo.dim() as u32) <= ENDO_ENUMERATION_CAP {
                out.push(m);
            }
        }
    };
    if let Ok(series) = reg.structural_series() {
        let series = series.clone();
        if let Ok((top, _, _)) = quotient_module(&reg, &series.radical_sub) {
            push_checked(top, &mut out);
        }
        if let Ok((soc, _)) = semilocal::submodule_module(&reg, &series.socle) {
            push_checked(soc, &mut out);
        }
    }
    push_checked(reg, &mut out);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0;
    while out.len() < count && attempts < count * 30 {
        attempts += 1;
        let rows = rng.gen_range(1..=2usize);
        let cols = rng.gen_range(1..=2usize);
        let mut rels = Vec::with_capacity(cols);
        for _ in 0..cols {
            let mut col = Vec::with_capacity(rows);
            for _ in 0..rows {
                let coords: Vec<u64> = (0..a.dim())
                    .map(|_| {
                        if rng.gen_bool(0.5) {
                            0
                        } else {
                            rng.gen_range(0..p)
                        }
                    })
                    .collect();
                col.push(a.element(coords).unwrap());
            }
            rels.push(col);
        }
        if let Ok(pres) = module_from_presentation(a, rows, &rels) {
            push_checked(pres.module, &mut out);
        }
    }
    out.truncate(count);
    out
}

/// A certified-local morphism family member; the classifier tag records
/// its construction.
pub struct GeneratedMorphism {
    pub name: String,
    pub morphism: Morphism,
    /// true when the construction guarantees locality
    pub expected_local: bool,
}

/// Rotating family of morphisms: canonical projections, radical
/// sub-ideal quotients, triangular inclusions, diagonal embeddings,
/// matrix lifts, and deliberately non-local product projections.
pub fn morphism_pool(seed: u64, count: usize) -> Vec<GeneratedMorphism> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let algebras = algebra_pool(seed ^ 0x9E3779B97F4A7C15, count.max(8));
    let mut out = Vec::with_capacity(count);
    let mut idx = 0usize;
    while out.len() < count {
        let (aname, a) = &algebras[idx % algebras.len()];
        idx += 1;
        let pick = rng.gen_range(0..6u32);
        let gm = (|| -> Option<GeneratedMorphism> {
            match pick {
                0 => {
                    let q = a.semisimple_quotient().ok()?;
                    Some(GeneratedMorphism {
                        name: format!("proj_rad_{aname}_{idx}"),
                        morphism: q.projection.clone(),
                        expected_local: true,
                    })
                }
                1 => {
                    // quotient by a random sub-ideal of the radical
                    let ideal = random_radical_subideal(a, &mut rng)?;
                    let q = quotient_by_ideal(a, &ideal).ok()?;
                    Some(GeneratedMorphism {
                        name: format!("proj_subideal_{aname}_{idx}"),
                        morphism: q.projection,
                        expected_local: true,
                    })
                }
                2 => {
                    let p = [2u64, 3][rng.gen_range(0..2usize)];
                    let (_, incl) = upper_triangular(&Algebra::field(p).unwrap(), 2).ok()?;
                    Some(GeneratedMorphism {
                        name: format!("triangular_incl_{p}_{idx}"),
                        morphism: incl,
                        expected_local: true,
                    })
                }
                3 => {
                    // diagonal embedding A -> A x A
                    let (prod, _, _) = direct_product(a, a).ok()?;
                    let mut mat = FpMatrix::zero(a.modulus(), a.dim(), prod.dim());
                    for r in 0..a.dim() {
                        mat.set(r, r, 1);
                        mat.set(r, a.dim() + r, 1);
                    }
                    let m = Morphism::new(a.clone(), prod, mat).ok()?;
                    Some(GeneratedMorphism {
                        name: format!("diagonal_{aname}_{idx}"),
                        morphism: m,
                        expected_local: true,
                    })
                }
                4 => {
                    // matrix lift of the canonical projection, enumerable only
                    if (a.modulus() as u128).pow((4 * a.dim()) as u32) > ENDO_ENUMERATION_CAP {
                        return None;
                    }
                    let q = a.semisimple_quotient().ok()?;
                    let m = semilocal::matrix_morphism_lift(&q.projection, 2).ok()?;
                    Some(GeneratedMorphism {
                        name: format!("m2_proj_{aname}_{idx}"),
                        morphism: m,
                        expected_local: true,
                    })
                }
                _ => {
                    // non-local: projection of a product onto one factor
                    let (_, pa, _) =
                        direct_product(a, &Algebra::field(a.modulus()).unwrap()).ok()?;
                    Some(GeneratedMorphism {
                        name: format!("factor_proj_{aname}_{idx}"),
                        morphism: pa,
                        expected_local: false,
                    })
                }
            }
        })();
        if let Some(g) = gm {
            out.push(g);
        }
    }
    out
}

/// Local morphisms with field-product codomain, mixing the canonical
/// projection with block duplication so the selected index set is a
/// proper subset in some instances.
pub struct FieldProductMorphism {
    pub name: String,
    pub morphism: Morphism,
    pub product: FieldProduct,
}

pub fn field_product_pool(seed: u64, count: usize) -> Vec<FieldProductMorphism> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let algebras = algebra_pool(seed ^ 0xA5A5A5A5, count.max(8));
    let mut out = Vec::with_capacity(count);
    let mut idx = 0usize;
    while out.len() < count && idx < count * 20 {
        let (aname, a) = &algebras[idx % algebras.len()];
        idx += 1;
        let Ok(wb) = a.wedderburn() else { continue };
        if wb.blocks.iter().any(|b| b.matrix_size != 1) {
            continue; // codomain would not be a field product
        }
        let Ok(q) = a.semisimple_quotient() else { continue };
        let Ok(base) = FieldProduct::from_semisimple(&q.algebra) else {
            continue;
        };
        let k = base.block_count();
        // choose a covering multiset of blocks: all blocks once, plus
        // up to two duplicates
        let mut picks: Vec<usize> = (0..k).collect();
        for _ in 0..rng.gen_range(0..=2usize) {
            picks.push(rng.gen_range(0..k));
        }
        // shuffle deterministically
        for i in (1..picks.len()).rev() {
            let j = rng.gen_range(0..=i);
            picks.swap(i, j);
        }
        let taus: Vec<Morphism> = picks
            .iter()
            .map(|&b| q.projection.compose(&base.projections[b]).unwrap())
            .collect();
        let factors: Vec<Algebra> = taus.iter().map(|t| t.codomain().clone()).collect();
        let Ok(product) = FieldProduct::from_factors(&factors) else {
            continue;
        };
        let mut mat = FpMatrix::zero(a.modulus(), a.dim(), product.algebra.dim());
        let mut off = 0usize;
        for tau in &taus {
            for r in 0..a.dim() {
                for c in 0..tau.codomain().dim() {
                    mat.set(r, off + c, tau.matrix().at(r, c));
                }
            }
            off += tau.codomain().dim();
        }
        let Ok(morphism) = Morphism::new(a.clone(), product.algebra.clone(), mat) else {
            continue;
        };
        out.push(FieldProductMorphism {
            name: format!("fieldprod_{aname}_{idx}"),
            morphism,
            product,
        });
    }
    out
}

/// Sub-ideal of the radical generated by a seeded choice of basis rows.
pub fn random_radical_subideal(a: &Algebra, rng: &mut ChaCha8Rng) -> Option<Subspace> {
    let rad = &a.radical().ok()?.radical;
    if rad.is_zero() {
        return None;
    }
    let mut gens = Vec::new();
    for r in 0..rad.basis().rows() {
        if rng.gen_bool(0.5) {
            gens.push(a.element(rad.basis().row(r).to_vec()).unwrap());
        }
    }
    Some(ideal_generated(a, &gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pools_are_deterministic() {
        let a1 = algebra_pool(42, 10);
        let a2 = algebra_pool(42, 10);
        assert_eq!(a1.len(), a2.len());
        for ((n1, x1), (n2, x2)) in a1.iter().zip(&a2) {
            assert_eq!(n1, n2);
            assert_eq!(x1.consts(), x2.consts());
        }
    }

    #[test]
    fn path_algebra_line_is_triangular_shaped() {
        // quiver 0 -> 1, length cap 2: dim 3, isomorphic to UT2(GF(2))
        let a = path_algebra(2, &[(0, 1)], 2).unwrap();
        assert_eq!(a.dim(), 3);
        let rad = a.radical().unwrap();
        assert_eq!(rad.radical.dim(), 1);
        assert_eq!(a.ring_codim().unwrap(), 2);
    }

    #[test]
    fn path_algebra_rejects_cycles() {
        assert!(path_algebra(2, &[(0, 1), (1, 0)], 2).is_err());
    }

    #[test]
    fn truncated_poly_from_family_params() {
        let mut params = BTreeMap::new();
        params.insert("n".to_string(), "3".to_string());
        params.insert("p".to_string(), "3".to_string());
        let insts = build_family("truncated-poly", &params, 0).unwrap();
        assert_eq!(insts.len(), 1);
    }

    #[test]
    fn field_extension_blocks() {
        let gf4 = field_extension(2, 2).unwrap();
        let w = gf4.wedderburn().unwrap();
        assert_eq!(w.block_count(), 1);
        assert_eq!(w.blocks[0].field_degree, 2);
    }

    #[test]
    fn module_pool_respects_caps() {
        let a = truncated_poly(2, 3);
        let pool = module_pool(&a, 7, 12);
        assert!(!pool.is_empty());
        for m in &pool {
            assert!(m.dim() <= 6);
            let endo = m.endo_algebra().unwrap();
            assert!((2u128).pow(endo.dim() as u32) <= ENDO_ENUMERATION_CAP);
        }
    }
}
