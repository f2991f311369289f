//! Projective covers, injective envelopes, and free covers with
//! prescribed tops.
//!
//! Projective covers are assembled from lifted primitive idempotents,
//! one indecomposable projective per simple block. Injective envelopes
//! are the linear duals of projective covers over the opposite algebra,
//! which swaps superfluous kernels with essential images exactly.

use super::{
    direct_sum, dual_module, module_from_presentation, quotient_module, submodule_module,
    FdModule, ModuleHom,
};
use crate::algebra::{enumerate_vectors, Algebra, Element, Subspace};
use crate::error::{Error, Result};
use crate::fp::FpMatrix;
use crate::radical::lift_idempotent;

/// One lifted primitive idempotent per Wedderburn block of A/J(A),
/// cached on the algebra; block i's idempotent generates the projective
/// cover of the i-th simple.
pub fn primitive_idempotents(a: &Algebra) -> Result<&Vec<Element>> {
    if let Some(v) = a.0.primitive_idempotents.get() {
        return Ok(v);
    }
    let computed = compute_primitive_idempotents(a)?;
    let _ = a.0.primitive_idempotents.set(computed);
    Ok(a.0.primitive_idempotents.get().unwrap())
}

fn compute_primitive_idempotents(a: &Algebra) -> Result<Vec<Element>> {
    let wb = a.wedderburn()?.clone();
    let quot = a.semisimple_quotient()?.clone();
    let q = &quot.algebra;
    let mut out = Vec::with_capacity(wb.blocks.len());
    for b in &wb.blocks {
        let prim_bar = if b.matrix_size == 1 {
            b.idempotent.clone()
        } else {
            primitive_in_block(q, &b.idempotent, b.matrix_size * b.field_degree)?
        };
        out.push(lift_idempotent(a, &prim_bar)?);
    }
    Ok(out)
}

/// A primitive idempotent inside the simple block e*Q: the idempotent
/// generator of a minimal right ideal.
fn primitive_in_block(q: &Algebra, e: &Element, minimal_dim: usize) -> Result<Element> {
    let p = q.modulus();
    // the block as a right ideal: rows e * b_j
    let mut ideal = q.left_mult_of(e.coords()).row_space();
    // shrink to a minimal right ideal; cyclic ideals of basis elements
    // first, full enumeration as fallback
    loop {
        if ideal.rows() == minimal_dim {
            break;
        }
        let mut best: Option<FpMatrix> = None;
        for r in 0..ideal.rows() {
            let cyc = cyclic_right_ideal(q, ideal.row(r));
            if cyc.rows() > 0 && cyc.rows() < ideal.rows() {
                let better = match &best {
                    None => true,
                    Some(b) => cyc.rows() < b.rows(),
                };
                if better {
                    best = Some(cyc);
                }
            }
        }
        if best.is_none() {
            // every basis element generates the whole ideal; sweep all
            // elements of the ideal in coordinate order
            'sweep: for coeffs in enumerate_vectors(p, ideal.rows()).skip(1) {
                let mut v = vec![0u64; q.dim()];
                for (r, &c) in coeffs.iter().enumerate() {
                    if c != 0 {
                        for (vi, &b) in v.iter_mut().zip(ideal.row(r)) {
                            *vi = (*vi + c * b) % p;
                        }
                    }
                }
                let cyc = cyclic_right_ideal(q, &v);
                if cyc.rows() > 0 && cyc.rows() < ideal.rows() {
                    best = Some(cyc);
                    break 'sweep;
                }
            }
        }
        match best {
            Some(b) => ideal = b,
            None => {
                return Err(Error::AssertionFailure(
                    "minimal right ideal search stalled".into(),
                ))
            }
        }
    }
    // idempotent generator: pick u with u * I != 0, solve u z = u in I
    let d = ideal.rows();
    for r in 0..d {
        let u = ideal.row(r).to_vec();
        let mut prods = FpMatrix::zero(p, d, q.dim());
        let mut nonzero = false;
        for s in 0..d {
            let prod = q.mul_coords(&u, ideal.row(s));
            if prod.iter().any(|&c| c != 0) {
                nonzero = true;
            }
            for (c, &x) in prod.iter().enumerate() {
                prods.set(s, c, x);
            }
        }
        if !nonzero {
            continue;
        }
        // solve sum_s x_s (u * w_s) = u
        if let Some(x) = prods.transpose().solve(&u).ok().flatten() {
            let mut z = vec![0u64; q.dim()];
            for (s, &c) in x.iter().enumerate() {
                if c != 0 {
                    for (zi, &b) in z.iter_mut().zip(ideal.row(s)) {
                        *zi = (*zi + c * b) % p;
                    }
                }
            }
            let ze = q.element(z)?;
            if !ze.is_zero() && ze.is_idempotent() {
                return Ok(ze);
            }
        }
    }
    Err(Error::AssertionFailure(
        "no idempotent generator found in a minimal right ideal".into(),
    ))
}

/// Right ideal v * Q as a canonical row space.
fn cyclic_right_ideal(q: &Algebra, v: &[u64]) -> FpMatrix {
    let mut rows = FpMatrix::zero(q.modulus(), 0, q.dim());
    for j in 0..q.dim() {
        rows.push_row(&q.right_mult(j).apply_row(v));
    }
    rows.row_space()
}

/// A projective cover: P -> M epi with superfluous kernel.
pub struct Cover {
    pub module: FdModule,
    pub map: ModuleHom,
    pub kernel: Subspace,
}

pub fn projective_cover(m: &FdModule) -> Result<Cover> {
    let a = m.algebra().clone();
    let p = a.modulus();
    if m.dim() == 0 {
        let zero = FdModule::zero(&a);
        let map = ModuleHom::new(zero.clone(), m.clone(), FpMatrix::zero(p, 0, 0))?;
        let kernel = zero.zero_subspace();
        return Ok(Cover {
            module: zero,
            map,
            kernel,
        });
    }
    let series = m.structural_series()?.clone();
    let wb = a.wedderburn()?.clone();
    let prims = primitive_idempotents(&a)?.clone();
    let regular = FdModule::regular(&a);
    let (top, top_proj, _) = quotient_module(m, &series.radical_sub)?;

    // per block: the indecomposable projective eps*A and generators of M
    // whose top images are chosen greedily to be independent; the chosen
    // generator w turns eps*a into w*a under the cover map
    let mut summands: Vec<FdModule> = Vec::new();
    let mut summand_bases: Vec<FpMatrix> = Vec::new(); // basis of eps*A in A-coordinates
    let mut generators: Vec<Vec<u64>> = Vec::new();
    for bi in 0..wb.blocks.len() {
        let needed = series.top_isotypic[bi];
        if needed == 0 {
            continue;
        }
        let eps = &prims[bi];
        let eps_basis = a.left_mult_of(eps.coords()).row_space();
        let proj_sub = regular.subspace_from_rows(&eps_basis);
        let (proj_mod, _) = submodule_module(&regular, &proj_sub)?;
        // candidates: basis of M * eps
        let m_eps = m.action_of(eps.coords()).row_space();
        let mut chosen = 0usize;
        let mut span = top.zero_subspace();
        for r in 0..m_eps.rows() {
            if chosen == needed {
                break;
            }
            let w = m_eps.row(r).to_vec();
            let wbar = top_proj.apply(&w);
            if span.contains(&wbar) {
                continue;
            }
            let gen_sub = top.submodule_generated(&FpMatrix::from_rows(p, top.dim(), &[wbar]));
            span = span.sum(&gen_sub);
            summands.push(proj_mod.clone());
            summand_bases.push(eps_basis.clone());
            generators.push(w);
            chosen += 1;
        }
        if chosen != needed {
            return Err(Error::AssertionFailure(
                "projective cover generator search incomplete".into(),
            ));
        }
    }

    let (pmod, _, _) = if summands.is_empty() {
        (FdModule::zero(&a), vec![], vec![])
    } else {
        direct_sum(&summands)?
    };
    // pi sends the basis element u of a copy of eps*A to w * u
    let mut pi = FpMatrix::zero(p, pmod.dim(), m.dim());
    let mut row = 0usize;
    for (basis, w) in summand_bases.iter().zip(&generators) {
        for r in 0..basis.rows() {
            let img = m.action_of(basis.row(r)).apply_row(w);
            pi_set_row(&mut pi, row, &img);
            row += 1;
        }
    }
    let map = ModuleHom::new(pmod.clone(), m.clone(), pi)?;
    if !map.is_epi() {
        return Err(Error::AssertionFailure("projective cover map not epi".into()));
    }
    let kernel = map.kernel();
    let pos = pmod.submodule_position(&kernel)?;
    if !pos.superfluous {
        return Err(Error::AssertionFailure(
            "projective cover kernel not superfluous".into(),
        ));
    }
    Ok(Cover {
        module: pmod,
        map,
        kernel,
    })
}

fn pi_set_row(pi: &mut FpMatrix, row: usize, img: &[u64]) {
    for (c, &x) in img.iter().enumerate() {
        pi.set(row, c, x);
    }
}

/// An injective envelope: M -> E essential mono into an injective.
pub struct Envelope {
    pub module: FdModule,
    pub map: ModuleHom,
}

pub fn injective_envelope(m: &FdModule) -> Result<Envelope> {
    let a = m.algebra().clone();
    let aop = a.opposite().clone();
    let dm = dual_module(m, &aop)?;
    let cover = projective_cover(&dm)?;
    let e = dual_module(&cover.module, &a)?;
    // D(pi): D(D(M)) = M -> D(P); the double dual has identical actions
    let iota = ModuleHom::new(m.clone(), e.clone(), cover.map.matrix().transpose())?;
    if !iota.is_mono() {
        return Err(Error::AssertionFailure("envelope map not mono".into()));
    }
    let pos = e.submodule_position(&iota.image())?;
    if !pos.essential {
        return Err(Error::AssertionFailure("envelope image not essential".into()));
    }
    Ok(Envelope { module: e, map: iota })
}

/// Injectivity witnessed through duality: the dual must be its own
/// projective cover (zero kernel).
pub fn is_injective(m: &FdModule) -> Result<bool> {
    let aop = m.algebra().opposite().clone();
    let dm = dual_module(m, &aop)?;
    let cover = projective_cover(&dm)?;
    Ok(cover.kernel.is_zero())
}

/// Direct extension test for injectivity against every cyclic right
/// ideal inclusion x A <= A: every hom x A -> M must extend to A. This
/// is the cross-validation oracle for `is_injective` at small dimension.
pub fn baer_cyclic_check(m: &FdModule, budget: u64) -> Result<bool> {
    let a = m.algebra();
    let p = a.modulus();
    let needed = a.element_count();
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    for x in enumerate_vectors(p, a.dim()) {
        // hom f: xA -> M is determined by f(x) = w with ann(x) <= ann(w);
        // it extends iff w = e * rho(x) for some e
        let xmat = a.left_mult_of(&x); // rows x * b_j? no: left_mult_of(x) maps v -> x v
        // ann_r(x) = {a : x a = 0}: kernel of v -> x v on row vectors
        let ann = xmat.transpose().reduce().kernel;
        // admissible w: w * rho(u) = 0 for all u in ann
        let admissible = if ann.rows() == 0 {
            FpMatrix::identity(p, m.dim()).row_space()
        } else {
            let mut stacked: Option<FpMatrix> = None;
            for r in 0..ann.rows() {
                let act = m.action_of(ann.row(r));
                stacked = Some(match stacked {
                    None => act,
                    Some(s) => s.hstack(&act),
                });
            }
            stacked.unwrap().transpose().reduce().kernel
        };
        // extendable w: image of e -> e * rho(x)
        let image = m.action_of(&x).row_space();
        if admissible.rows() != image.rows() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A complement module N with top(M) (+) top(N) free over A/J of
/// minimal rank: one copy of the presented module A/(1 - eps_i)A per
/// missing simple.
pub fn build_top_complement(m: &FdModule) -> Result<FdModule> {
    let a = m.algebra().clone();
    let wb = a.wedderburn()?.clone();
    let series = m.structural_series()?;
    let tops = &series.top_isotypic;
    let rank = wb
        .blocks
        .iter()
        .zip(tops)
        .map(|(b, &l)| l.div_ceil(b.matrix_size))
        .max()
        .unwrap_or(0);
    let mut parts: Vec<FdModule> = Vec::new();
    let prims = primitive_idempotents(&a)?.clone();
    for ((block, &l), eps) in wb.blocks.iter().zip(tops).zip(&prims) {
        let missing = rank * block.matrix_size - l;
        for _ in 0..missing {
            let one_minus = a.one().sub(eps);
            let pres = module_from_presentation(&a, 1, &[vec![one_minus]])?;
            parts.push(pres.module);
        }
    }
    let n = if parts.is_empty() {
        FdModule::zero(&a)
    } else {
        direct_sum(&parts)?.0
    };
    // verification: top(M (+) N) is the free top of rank `rank`
    let (w, _, _) = direct_sum(&[m.clone(), n.clone()])?;
    let ws = w.structural_series()?;
    for (b, &l) in wb.blocks.iter().zip(&ws.top_isotypic) {
        if l != rank * b.matrix_size {
            return Err(Error::AssertionFailure(
                "top complement does not complete a free top".into(),
            ));
        }
    }
    Ok(n)
}

/// A free cover 0 -> K -> F -> W -> 0 with K <= F J, built by lifting a
/// free basis of the top.
pub struct FreeCover {
    pub free: FdModule,
    pub rank: usize,
    pub map: ModuleHom,
    pub kernel: Subspace,
}

pub fn free_cover(w: &FdModule, budget: u64) -> Result<FreeCover> {
    let a = w.algebra().clone();
    let p = a.modulus();
    let series = w.structural_series()?;
    let (top, _top_proj, top_sect) = quotient_module(w, &series.radical_sub)?;
    let qdim = a.semisimple_quotient()?.algebra.dim();
    if qdim == 0 {
        return Err(Error::AssertionFailure("zero semisimple quotient".into()));
    }
    if top.dim() % qdim != 0 {
        return Err(Error::CoverViolation);
    }
    let rank = top.dim() / qdim;
    // generators of the top that are free of annihilator and independent
    let needed = (p as u128).pow(top.dim() as u32);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut span = top.zero_subspace();
    let mut gens: Vec<Vec<u64>> = Vec::new();
    for vbar in enumerate_vectors(p, top.dim()).skip(1) {
        if gens.len() == rank {
            break;
        }
        let cyc = top.submodule_generated(&FpMatrix::from_rows(p, top.dim(), &[vbar.clone()]));
        if cyc.dim() != qdim {
            continue; // annihilator nonzero
        }
        if span.intersect(&cyc).dim() != 0 {
            continue;
        }
        span = span.sum(&cyc);
        gens.push(vbar);
    }
    if gens.len() != rank {
        return Err(Error::CoverViolation);
    }
    let parts: Vec<FdModule> = (0..rank.max(1)).map(|_| FdModule::regular(&a)).collect();
    let (free, _, _) = if rank == 0 {
        (FdModule::zero(&a), vec![], vec![])
    } else {
        direct_sum(&parts[..rank])?
    };
    let mut pi = FpMatrix::zero(p, free.dim(), w.dim());
    for (j, vbar) in gens.iter().enumerate() {
        let v = top_sect.apply_row(vbar); // representative in W
        for l in 0..a.dim() {
            let img = w.action(l).apply_row(&v);
            for (c, &x) in img.iter().enumerate() {
                pi.set(j * a.dim() + l, c, x);
            }
        }
    }
    let map = ModuleHom::new(free.clone(), w.clone(), pi)?;
    if !map.is_epi() {
        return Err(Error::CoverViolation);
    }
    let kernel = map.kernel();
    let fs = free.structural_series()?;
    if !fs.radical_sub.contains_subspace(&kernel) {
        return Err(Error::CoverViolation);
    }
    Ok(FreeCover {
        free,
        rank,
        map,
        kernel,
    })
}
