//! Standard constructions on structure-constant algebras: matrix
//! extensions, triangular subalgebras, trivial extensions, direct
//! products, generated ideals, and quotients by ideals.

use super::{Algebra, Element, Morphism, Subspace};
use crate::error::{Error, Result};
use crate::fp::{Complement, FpMatrix};

/// M_n(A): basis e_{uv} b_w, index (u*n + v)*dim(A) + w.
pub fn matrix_extension(a: &Algebra, n: usize) -> Result<Algebra> {
    assert!(n >= 1, "matrix extension needs n >= 1");
    let d = a.dim();
    let nd = n * n * d;
    let idx = |u: usize, v: usize, w: usize| (u * n + v) * d + w;
    let mut consts = vec![0u64; nd * nd * nd];
    for u in 0..n {
        for v in 0..n {
            for w in 0..d {
                let row = idx(u, v, w);
                for v2 in 0..n {
                    for w2 in 0..d {
                        let col = idx(v, v2, w2); // only u' = v survives
                        for k in 0..d {
                            let c = a.c(w, w2, k);
                            if c != 0 {
                                consts[(row * nd + col) * nd + idx(u, v2, k)] = c;
                            }
                        }
                    }
                }
            }
        }
    }
    let mut unit = vec![0u64; nd];
    for u in 0..n {
        for w in 0..d {
            unit[idx(u, u, w)] = a.unit_coords()[w];
        }
    }
    Algebra::with_cap(a.modulus(), nd, consts, unit, usize::MAX)
}

/// The entrywise-induced morphism M_n(phi): M_n(A) -> M_n(B).
pub fn matrix_morphism_lift(phi: &Morphism, n: usize) -> Result<Morphism> {
    let mn_a = matrix_extension(phi.domain(), n)?;
    let mn_b = matrix_extension(phi.codomain(), n)?;
    let da = phi.domain().dim();
    let db = phi.codomain().dim();
    let mut m = FpMatrix::zero(phi.domain().modulus(), mn_a.dim(), mn_b.dim());
    for u in 0..n {
        for v in 0..n {
            for w in 0..da {
                let row = (u * n + v) * da + w;
                for w2 in 0..db {
                    m.set(row, (u * n + v) * db + w2, phi.matrix().at(w, w2));
                }
            }
        }
    }
    Morphism::new(mn_a, mn_b, m)
}

/// Upper triangular subalgebra of M_n(D), with its inclusion morphism.
pub fn upper_triangular(d: &Algebra, n: usize) -> Result<(Algebra, Morphism)> {
    assert!(n >= 1, "triangular algebra needs n >= 1");
    let dd = d.dim();
    // positions (u, v) with u <= v, lexicographic
    let positions: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u..n).map(move |v| (u, v)))
        .collect();
    let pos_index = |u: usize, v: usize| positions.iter().position(|&q| q == (u, v)).unwrap();
    let dim = positions.len() * dd;
    let idx = |pi: usize, w: usize| pi * dd + w;
    let mut consts = vec![0u64; dim * dim * dim];
    for (pi, &(u, v)) in positions.iter().enumerate() {
        for w in 0..dd {
            let row = idx(pi, w);
            for (qi, &(u2, v2)) in positions.iter().enumerate() {
                if u2 != v {
                    continue;
                }
                for w2 in 0..dd {
                    let col = idx(qi, w2);
                    let ti = pos_index(u, v2);
                    for k in 0..dd {
                        let c = d.c(w, w2, k);
                        if c != 0 {
                            consts[(row * dim + col) * dim + idx(ti, k)] = c;
                        }
                    }
                }
            }
        }
    }
    let mut unit = vec![0u64; dim];
    for u in 0..n {
        let pi = pos_index(u, u);
        for w in 0..dd {
            unit[idx(pi, w)] = d.unit_coords()[w];
        }
    }
    let tri = Algebra::with_cap(d.modulus(), dim, consts, unit, usize::MAX)?;
    let full = matrix_extension(d, n)?;
    let mut incl = FpMatrix::zero(d.modulus(), dim, full.dim());
    for (pi, &(u, v)) in positions.iter().enumerate() {
        for w in 0..dd {
            incl.set(idx(pi, w), (u * n + v) * dd + w, 1);
        }
    }
    let embedding = Morphism::new(tri.clone(), full, incl)?;
    Ok((tri, embedding))
}

/// Trivial extension K (+) V with V^2 = 0, for commutative K and a
/// K-bimodule V given by left/right action matrices per K-basis vector
/// (row convention: v |-> v * act).
pub fn trivial_extension(
    k: &Algebra,
    left_actions: &[FpMatrix],
    right_actions: &[FpMatrix],
) -> Result<Algebra> {
    if !k.is_commutative() {
        return Err(Error::BimoduleAxiomViolation("base algebra not commutative"));
    }
    let kd = k.dim();
    if left_actions.len() != kd || right_actions.len() != kd {
        return Err(Error::DimensionMismatch {
            context: "trivial extension action count",
            expected: kd,
            got: left_actions.len().min(right_actions.len()),
        });
    }
    let vd = left_actions.first().map_or(0, |m| m.rows());
    let p = k.modulus();
    for m in left_actions.iter().chain(right_actions) {
        if m.rows() != vd || m.cols() != vd {
            return Err(Error::BimoduleAxiomViolation("action matrix shape"));
        }
    }
    let sum_action = |acts: &[FpMatrix], coords: &[u64]| -> FpMatrix {
        let mut out = FpMatrix::zero(p, vd, vd);
        for (i, &c) in coords.iter().enumerate() {
            if c != 0 {
                out = out.add(&acts[i].scale(c));
            }
        }
        out
    };
    // unit acts as identity on both sides
    let idm = FpMatrix::identity(p, vd);
    if sum_action(left_actions, k.unit_coords()) != idm {
        return Err(Error::BimoduleAxiomViolation("unit left action"));
    }
    if sum_action(right_actions, k.unit_coords()) != idm {
        return Err(Error::BimoduleAxiomViolation("unit right action"));
    }
    for i in 0..kd {
        for j in 0..kd {
            let prod: Vec<u64> = (0..kd).map(|l| k.c(i, j, l)).collect();
            // (b_i b_j) . v = b_i . (b_j . v):   LA(b_j) LA(b_i) = LA(b_i b_j)
            if left_actions[j].mul(&left_actions[i]) != sum_action(left_actions, &prod) {
                return Err(Error::BimoduleAxiomViolation("left action multiplicativity"));
            }
            // v . (b_i b_j) = (v . b_i) . b_j:   RA(b_i) RA(b_j) = RA(b_i b_j)
            if right_actions[i].mul(&right_actions[j]) != sum_action(right_actions, &prod) {
                return Err(Error::BimoduleAxiomViolation("right action multiplicativity"));
            }
            // (b_i . v) . b_j = b_i . (v . b_j)
            if left_actions[i].mul(&right_actions[j]) != right_actions[j].mul(&left_actions[i]) {
                return Err(Error::BimoduleAxiomViolation("left/right compatibility"));
            }
        }
    }

    let dim = kd + vd;
    let mut consts = vec![0u64; dim * dim * dim];
    let mut set = |i: usize, j: usize, k2: usize, v: u64| {
        consts[(i * dim + j) * dim + k2] = v;
    };
    for i in 0..kd {
        for j in 0..kd {
            for l in 0..kd {
                set(i, j, l, k.c(i, j, l));
            }
        }
        for j in 0..vd {
            // b_i * v_j: left action of b_i on v_j
            for l in 0..vd {
                set(i, kd + j, kd + l, left_actions[i].at(j, l));
            }
            // v_j * b_i: right action
            for l in 0..vd {
                set(kd + j, i, kd + l, right_actions[i].at(j, l));
            }
        }
    }
    let mut unit = vec![0u64; dim];
    unit[..kd].copy_from_slice(k.unit_coords());
    Algebra::with_cap(p, dim, consts, unit, usize::MAX)
}

/// A x B with componentwise operations, plus the two projections.
pub fn direct_product(a: &Algebra, b: &Algebra) -> Result<(Algebra, Morphism, Morphism)> {
    let (prod, mut projs) = direct_product_many(&[a.clone(), b.clone()])?;
    let pb = projs.pop().unwrap();
    let pa = projs.pop().unwrap();
    Ok((prod, pa, pb))
}

/// Finite direct product with all projections.
pub fn direct_product_many(factors: &[Algebra]) -> Result<(Algebra, Vec<Morphism>)> {
    assert!(!factors.is_empty(), "empty product");
    let p = factors[0].modulus();
    if factors.iter().any(|f| f.modulus() != p) {
        return Err(Error::OwnerMismatch("product over distinct moduli"));
    }
    let dim: usize = factors.iter().map(|f| f.dim()).sum();
    let offsets: Vec<usize> = factors
        .iter()
        .scan(0usize, |acc, f| {
            let o = *acc;
            *acc += f.dim();
            Some(o)
        })
        .collect();
    let mut consts = vec![0u64; dim * dim * dim];
    let mut unit = vec![0u64; dim];
    for (f, &off) in factors.iter().zip(&offsets) {
        let d = f.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let c = f.c(i, j, k);
                    if c != 0 {
                        consts[((off + i) * dim + (off + j)) * dim + (off + k)] = c;
                    }
                }
            }
            unit[off + i] = f.unit_coords()[i];
        }
    }
    let prod = Algebra::with_cap(p, dim, consts, unit, usize::MAX)?;
    let mut projs = Vec::with_capacity(factors.len());
    for (f, &off) in factors.iter().zip(&offsets) {
        let mut m = FpMatrix::zero(p, dim, f.dim());
        for i in 0..f.dim() {
            m.set(off + i, i, 1);
        }
        projs.push(Morphism::new(prod.clone(), f.clone(), m)?);
    }
    Ok((prod, projs))
}

/// Smallest two-sided ideal containing the generators: closure of the
/// span under left and right multiplication by basis elements.
pub fn ideal_generated(a: &Algebra, gens: &[Element]) -> Subspace {
    let p = a.modulus();
    let n = a.dim();
    let mut basis = FpMatrix::zero(p, 0, n);
    for g in gens {
        assert_eq!(g.algebra(), a, "generator owner mismatch");
        basis.push_row(g.coords());
    }
    let mut span = basis.row_space();
    loop {
        let before = span.rows();
        let mut next = span.clone();
        for r in 0..span.rows() {
            let row = span.row(r).to_vec();
            for i in 0..n {
                next.push_row(&a.left_mult(i).apply_row(&row));
                next.push_row(&a.right_mult(i).apply_row(&row));
            }
        }
        span = next.row_space();
        if span.rows() == before {
            break;
        }
    }
    Subspace::from_rows(a.id(), &span)
}

/// Quotient by a two-sided ideal: the algebra on the complement basis,
/// the projection, and a linear section picking the distinguished
/// representative of each quotient basis vector.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Algebra,
    pub projection: Morphism,
    pub section: FpMatrix,
}

pub fn quotient_by_ideal(a: &Algebra, ideal: &Subspace) -> Result<Quotient> {
    if ideal.owner() != a.id() {
        return Err(Error::OwnerMismatch("ideal of a different algebra"));
    }
    if !a.is_ideal(ideal) {
        return Err(Error::NotAnIdeal);
    }
    // in the zero ring 1 = 0 lies in the zero ideal vacuously; the
    // quotient is the zero ring again
    if a.dim() > 0 && ideal.contains(a.unit_coords()) {
        return Err(Error::IdealContainsUnit);
    }
    let comp = Complement::new(ideal.basis().clone());
    let q = comp.dim();
    let p = a.modulus();
    let mut consts = vec![0u64; q * q * q];
    for i in 0..q {
        let ei = comp.embed(&unit_vec(p, q, i));
        for j in 0..q {
            let ej = comp.embed(&unit_vec(p, q, j));
            let prod = a.mul_coords(&ei, &ej);
            let coords = comp.project(&prod);
            for (k, &c) in coords.iter().enumerate() {
                consts[(i * q + j) * q + k] = c;
            }
        }
    }
    let unit = comp.project(a.unit_coords());
    let quot = Algebra::with_cap(p, q, consts, unit, usize::MAX)?;
    let projection = Morphism::new(a.clone(), quot.clone(), comp.projector_matrix())?;
    Ok(Quotient {
        algebra: quot,
        projection,
        section: comp.section_matrix(),
    })
}

fn unit_vec(p: u64, n: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0u64; n];
    v[i] = 1 % p;
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gfp(p: u64) -> Algebra {
        Algebra::field(p).unwrap()
    }

    fn truncated_poly(p: u64, n: usize) -> Algebra {
        let mut consts = vec![0u64; n * n * n];
        for i in 0..n {
            for j in 0..n {
                if i + j < n {
                    consts[(i * n + j) * n + (i + j)] = 1;
                }
            }
        }
        let mut unit = vec![0u64; n];
        unit[0] = 1;
        Algebra::new(p, n, consts, unit).unwrap()
    }

    #[test]
    fn m1_is_isomorphic_copy() {
        let a = truncated_poly(3, 2);
        let m1 = matrix_extension(&a, 1).unwrap();
        assert_eq!(m1.dim(), a.dim());
        assert_eq!(m1.consts(), a.consts());
    }

    #[test]
    fn m2_gf2_has_dim_4() {
        let m2 = matrix_extension(&gfp(2), 2).unwrap();
        assert_eq!(m2.dim(), 4);
        // e01 * e10 = e00, e10 * e01 = e11
        let e01 = m2.basis_element(1);
        let e10 = m2.basis_element(2);
        assert_eq!(e01.mul(&e10), m2.basis_element(0));
        assert_eq!(e10.mul(&e01), m2.basis_element(3));
    }

    #[test]
    fn ut1_is_the_base() {
        let (t, _) = upper_triangular(&gfp(2), 1).unwrap();
        assert_eq!(t.dim(), 1);
    }

    #[test]
    fn ut2_gf2_shape() {
        let (t, incl) = upper_triangular(&gfp(2), 2).unwrap();
        assert_eq!(t.dim(), 3);
        assert!(incl.is_injective());
        // strictly-upper generator squares to zero
        let x = t.basis_element(1); // positions: (0,0), (0,1), (1,1)
        assert!(x.mul(&x).is_zero());
    }

    #[test]
    fn trivial_extension_regular_bimodule() {
        // K = GF(2), V = GF(2) regular: isomorphic to GF(2)[x]/(x^2)
        let k = gfp(2);
        let id = FpMatrix::identity(2, 1);
        let a = trivial_extension(&k, &[id.clone()], &[id]).unwrap();
        assert_eq!(a.dim(), 2);
        let x = a.basis_element(1);
        assert!(x.mul(&x).is_zero());
        let tp = truncated_poly(2, 2);
        assert_eq!(a.consts(), tp.consts());
    }

    #[test]
    fn trivial_extension_rejects_bad_actions() {
        // right action not multiplicative over K = GF(2)[x]/(x^2)
        let k = truncated_poly(2, 2);
        let id = FpMatrix::identity(2, 1);
        let bad = FpMatrix::from_rows(2, 1, &[vec![1]]); // x acts as identity: x*x=0 but id*id=id
        let err = trivial_extension(&k, &[id.clone(), bad.clone()], &[id, bad]).unwrap_err();
        assert!(matches!(err, Error::BimoduleAxiomViolation(_)));
    }

    #[test]
    fn product_with_zero_ring_is_identity() {
        let a = truncated_poly(3, 2);
        let z = Algebra::zero_ring(3).unwrap();
        let (prod, pa, _) = direct_product(&a, &z).unwrap();
        assert_eq!(prod.dim(), a.dim());
        assert_eq!(prod.consts(), a.consts());
        assert!(pa.is_onto());
    }

    #[test]
    fn ideal_generated_by_unit_is_everything() {
        let a = truncated_poly(3, 2);
        let i = ideal_generated(&a, &[a.one()]);
        assert_eq!(i.dim(), 2);
    }

    #[test]
    fn ideal_generated_by_x_is_span_x() {
        let a = truncated_poly(3, 2);
        let i = ideal_generated(&a, &[a.basis_element(1)]);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[0, 1]));
    }

    #[test]
    fn matrix_unit_generates_all_of_simple_ring() {
        let m2 = matrix_extension(&gfp(2), 2).unwrap();
        let i = ideal_generated(&m2, &[m2.basis_element(1)]);
        assert_eq!(i.dim(), 4);
    }

    #[test]
    fn quotient_by_zero_is_identity() {
        let a = truncated_poly(3, 2);
        let q = quotient_by_ideal(&a, &a.zero_subspace()).unwrap();
        assert_eq!(q.algebra.dim(), 2);
        assert_eq!(q.algebra.consts(), a.consts());
    }

    #[test]
    fn truncated_poly_mod_x_is_base_field() {
        let a = truncated_poly(3, 2);
        let ideal = ideal_generated(&a, &[a.basis_element(1)]);
        let q = quotient_by_ideal(&a, &ideal).unwrap();
        assert_eq!(q.algebra.dim(), 1);
        assert!(q.projection.is_onto());
        assert_eq!(q.projection.kernel(), ideal);
    }

    #[test]
    fn quotient_rejects_unit_ideal() {
        let a = truncated_poly(3, 2);
        let i = ideal_generated(&a, &[a.one()]);
        assert_eq!(quotient_by_ideal(&a, &i).unwrap_err(), Error::IdealContainsUnit);
    }

    #[test]
    fn swap_automorphism_of_product() {
        let (prod, _, _) = direct_product(&gfp(2), &gfp(2)).unwrap();
        let swap = FpMatrix::from_rows(2, 2, &[vec![0, 1], vec![1, 0]]);
        assert!(Morphism::new(prod.clone(), prod, swap).is_ok());
    }
}
