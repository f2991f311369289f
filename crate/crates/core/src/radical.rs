//! Jacobson radical, semisimple quotient, Wedderburn block data, ring
//! codimension, and idempotent lifting.
//!
//! Two radical computations are provided. The enumeration method tests
//! the quasi-regularity criterion directly: x lies in the radical iff
//! 1 - t x is a unit for every t, with the quantifier deduplicated to
//! the left ideal A x (t x ranges over exactly A x). The trace method
//! computes the kernel of (i, j) |-> tr(L_{b_i b_j}) and is valid when
//! p > dim, where vanishing power traces certify nilpotence.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{quotient_by_ideal, Algebra, Element, Quotient, Subspace};
use crate::error::{Error, Result};
use crate::fp::{FpMatrix, FpPoly};

pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 20;
pub const DEFAULT_SPLIT_TRIALS: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadicalMethod {
    TraceIteration,
    BruteForce,
}

impl std::fmt::Display for RadicalMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RadicalMethod::TraceIteration => write!(f, "trace-iteration"),
            RadicalMethod::BruteForce => write!(f, "brute-force"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RadicalReport {
    pub radical: Subspace,
    pub nilpotency_index: usize,
    pub method: RadicalMethod,
}

/// J(A) by exhaustive quasi-regularity testing over a spanning search.
///
/// Exact cuts keep the enumeration honest and tractable: members of the
/// radical lie in the kernel of the trace form tr(L_{xy}) (products
/// against radical elements are nilpotent, and nilpotent left
/// multiplications are traceless at every characteristic), so only that
/// subspace is scanned; candidates are normalized to leading
/// coefficient 1; a candidate already inside the confirmed span is
/// skipped, so the full inner scan runs exactly dim J(A) times; and
/// non-nilpotent candidates are discarded before any scan.
pub fn radical_bruteforce(a: &Algebra, budget: u64) -> Result<RadicalReport> {
    let p = a.modulus();
    let n = a.dim();
    // kernel of the trace form: a two-sided ideal containing J(A)
    let mut t = FpMatrix::zero(p, n, n);
    for i in 0..n {
        for j in 0..n {
            let mut tr = 0u64;
            let (li, lj) = (a.left_mult(i), a.left_mult(j));
            for r in 0..n {
                for s in 0..n {
                    tr = (tr + li.at(r, s) * lj.at(s, r)) % p;
                }
            }
            t.set(i, j, tr);
        }
    }
    let cone = t.reduce().kernel; // rref basis of the candidate subspace
    let k = cone.rows();
    let needed = (p as u128).pow(k as u32);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut confirmed = FpMatrix::zero(p, 0, n);

    // candidates with leading cone coefficient 1 at position `lead`
    for lead in 0..k {
        let suffix = k - lead - 1;
        let total = (p as u128).pow(suffix as u32);
        for idx in 0..total {
            let mut coeffs = vec![0u64; k];
            coeffs[lead] = 1;
            let mut m = idx;
            for c in coeffs[lead + 1..].iter_mut().rev() {
                *c = (m % p as u128) as u64;
                m /= p as u128;
            }
            let mut x = vec![0u64; n];
            for (r, &cf) in coeffs.iter().enumerate() {
                if cf != 0 {
                    for (xi, &b) in x.iter_mut().zip(cone.row(r)) {
                        *xi = (*xi + cf * b) % p;
                    }
                }
            }
            if confirmed.rows() > 0 && confirmed.reduce_vector(&x).iter().all(|&e| e == 0) {
                continue; // already known to lie in the radical
            }
            // necessary condition: members of a nilpotent ideal are nilpotent
            if !a.left_mult_of(&x).is_nilpotent() {
                continue;
            }
            if quasi_regular(a, &x) {
                confirmed.push_row(&x);
                confirmed = confirmed.row_space();
            }
        }
    }
    let radical = Subspace::from_rows(a.id(), &confirmed);
    let nilpotency_index = nilpotency_index(a, &radical);
    debug_assert!(a.is_ideal(&radical));
    Ok(RadicalReport {
        radical,
        nilpotency_index,
        method: RadicalMethod::BruteForce,
    })
}

/// 1 - t x is a unit for every t in A; t x ranges over the left ideal
/// A x, so it suffices to scan that subspace.
fn quasi_regular(a: &Algebra, x: &[u64]) -> bool {
    let p = a.modulus();
    let n = a.dim();
    // A x = row space of t |-> t x over basis t, i.e. of the right
    // multiplication matrix by x
    let ax = a.right_mult_of(x).row_space();
    let d = ax.rows();
    let total = (p as u128).pow(d as u32);
    let one = a.unit_coords();
    for idx in 0..total {
        let mut coeffs = vec![0u64; d];
        let mut m = idx;
        for c in coeffs.iter_mut().rev() {
            *c = (m % p as u128) as u64;
            m /= p as u128;
        }
        let mut y = vec![0u64; n];
        for (r, &cf) in coeffs.iter().enumerate() {
            if cf != 0 {
                for (yi, &b) in y.iter_mut().zip(ax.row(r)) {
                    *yi = (*yi + cf * b) % p;
                }
            }
        }
        let one_minus_y: Vec<u64> = one
            .iter()
            .zip(&y)
            .map(|(&u, &v)| (u + p - v) % p)
            .collect();
        if !a.is_unit_coords(&one_minus_y) {
            return false;
        }
    }
    true
}

/// J(A) as the kernel of the trace form, valid for p > dim(A).
pub fn radical_trace(a: &Algebra) -> Result<RadicalReport> {
    let p = a.modulus();
    let n = a.dim();
    if p <= n as u64 {
        return Err(Error::CharTooSmall { p, dim: n });
    }
    let mut t = FpMatrix::zero(p, n, n);
    for i in 0..n {
        for j in 0..n {
            // tr of left multiplication by b_i b_j
            let prod: Vec<u64> = (0..n).map(|k| a.c(i, j, k)).collect();
            t.set(i, j, a.left_mult_of(&prod).trace());
        }
    }
    let radical = Subspace::from_rows(a.id(), &t.reduce().kernel);
    let nilpotency_index = nilpotency_index(a, &radical);
    debug_assert!(a.is_ideal(&radical));
    Ok(RadicalReport {
        radical,
        nilpotency_index,
        method: RadicalMethod::TraceIteration,
    })
}

/// Smallest k >= 1 with J^k = 0, by repeated ideal multiplication;
/// bounded by dim(A) + 1.
fn nilpotency_index(a: &Algebra, radical: &Subspace) -> usize {
    if radical.is_zero() {
        return 1;
    }
    let mut power = radical.basis().clone();
    let mut k = 1usize;
    while power.rows() > 0 {
        assert!(k <= a.dim() + 1, "nilpotency bound violated");
        let mut next = FpMatrix::zero(a.modulus(), 0, a.dim());
        for r in 0..power.rows() {
            for s in 0..radical.basis().rows() {
                next.push_row(&a.mul_coords(power.row(r), radical.basis().row(s)));
            }
        }
        power = next.row_space();
        k += 1;
    }
    k
}

impl Algebra {
    /// Cached radical: trace method when p > dim, enumeration otherwise.
    pub fn radical(&self) -> Result<&RadicalReport> {
        if let Some(r) = self.0.radical.get() {
            return Ok(r);
        }
        let report = if self.modulus() > self.dim() as u64 {
            radical_trace(self)?
        } else {
            radical_bruteforce(self, DEFAULT_ENUMERATION_BUDGET)?
        };
        let _ = self.0.radical.set(report);
        Ok(self.0.radical.get().unwrap())
    }

    pub fn is_semisimple(&self) -> Result<bool> {
        Ok(self.radical()?.radical.is_zero())
    }

    /// Cached quotient A -> A/J(A) with projection and section.
    pub fn semisimple_quotient(&self) -> Result<&Quotient> {
        if let Some(q) = self.0.semisimple.get() {
            return Ok(q);
        }
        let radical = self.radical()?.radical.clone();
        let q = quotient_by_ideal(self, &radical)?;
        let _ = self.0.semisimple.set(q);
        Ok(self.0.semisimple.get().unwrap())
    }

    /// Cached Wedderburn block data of A/J(A).
    pub fn wedderburn(&self) -> Result<&SemisimpleDecomposition> {
        if let Some(w) = self.0.wedderburn.get() {
            return Ok(w);
        }
        let quotient = self.semisimple_quotient()?.algebra.clone();
        let dec = wedderburn_decompose(&quotient, DEFAULT_SPLIT_TRIALS, 0)?;
        let _ = self.0.wedderburn.set(dec);
        Ok(self.0.wedderburn.get().unwrap())
    }

    /// Dual Goldie dimension of the ring: sum of block matrix sizes of
    /// the semisimple quotient.
    pub fn ring_codim(&self) -> Result<usize> {
        Ok(self
            .wedderburn()?
            .blocks
            .iter()
            .map(|b| b.matrix_size)
            .sum())
    }
}

/// One simple block of a semisimple algebra: M_{n}(GF(p^k)) with its
/// central primitive idempotent.
#[derive(Clone, Debug)]
pub struct WedderburnBlock {
    pub matrix_size: usize,
    pub field_degree: usize,
    pub idempotent: Element,
}

#[derive(Clone, Debug)]
pub struct SemisimpleDecomposition {
    pub blocks: Vec<WedderburnBlock>,
}

impl SemisimpleDecomposition {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn total_dim(&self) -> usize {
        self.blocks
            .iter()
            .map(|b| b.matrix_size * b.matrix_size * b.field_degree)
            .sum()
    }

    pub fn goldie_dim(&self) -> usize {
        self.blocks.iter().map(|b| b.matrix_size).sum()
    }
}

/// Splits a semisimple algebra into its Wedderburn blocks.
///
/// The center is split by factoring minimal polynomials of its basis
/// elements and refining with the CRT idempotents; blocks left
/// uncertified are attacked with seeded random center elements. A block
/// is certified a field by a generator whose minimal polynomial is
/// irreducible of degree equal to the block center dimension.
pub fn wedderburn_decompose(
    s: &Algebra,
    trials: u32,
    seed: u64,
) -> Result<SemisimpleDecomposition> {
    if !s.radical()?.radical.is_zero() {
        return Err(Error::AssertionFailure(
            "wedderburn decomposition of a non-semisimple algebra".into(),
        ));
    }
    let p = s.modulus();
    let n = s.dim();
    if n == 0 {
        return Ok(SemisimpleDecomposition { blocks: vec![] });
    }
    // center: x with b_i x = x b_i for all i
    let mut rows = FpMatrix::zero(p, 0, n);
    for i in 0..n {
        let diff = s.left_mult(i).sub(s.right_mult(i));
        // condition: x * (L_i - R_i) = 0 for the row vector x, i.e.
        // (L_i - R_i)^T x^T = 0
        let t = diff.transpose();
        for r in 0..t.rows() {
            rows.push_row(t.row(r));
        }
    }
    let center = rows.reduce().kernel; // rref basis of the center
    let center_dim = center.rows();

    // blocks as center idempotents, refined until certified fields
    let mut certified: Vec<(Vec<u64>, usize)> = Vec::new(); // (idempotent, center dim)
    let mut pending: Vec<Vec<u64>> = vec![s.one().coords().to_vec()];

    // phase 1: center basis elements
    for cb in 0..center_dim {
        let z = center.row(cb).to_vec();
        refine_blocks(s, &z, &mut pending)?;
    }
    // try to certify with center basis elements first
    let mut uncertified = Vec::new();
    'outer: for e in pending.drain(..) {
        let block_center_dim = block_center_dim(s, &center, &e);
        if block_center_dim == 1 {
            certified.push((e, 1));
            continue;
        }
        for cb in 0..center_dim {
            let w = s.mul_coords(&e, center.row(cb));
            let mp = relative_min_poly(s, &e, &w);
            if mp.is_irreducible() && mp.degree() == block_center_dim {
                certified.push((e, block_center_dim));
                continue 'outer;
            }
        }
        uncertified.push(e);
    }
    // phase 2: seeded random center elements
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0u32;
    while let Some(e) = uncertified.pop() {
        if attempts >= trials {
            return Err(Error::SplitBudgetExceeded { trials });
        }
        attempts += 1;
        let mut z = vec![0u64; n];
        for cb in 0..center_dim {
            let c = rng.gen_range(0..p);
            if c != 0 {
                for (zi, &b) in z.iter_mut().zip(center.row(cb)) {
                    *zi = (*zi + c * b) % p;
                }
            }
        }
        let mut shard = vec![e];
        refine_blocks(s, &z, &mut shard)?;
        for e2 in shard {
            let d = block_center_dim(s, &center, &e2);
            if d == 1 {
                certified.push((e2, 1));
                continue;
            }
            let w = s.mul_coords(&e2, &z);
            let mp = relative_min_poly(s, &e2, &w);
            if mp.is_irreducible() && mp.degree() == d {
                certified.push((e2, d));
            } else {
                uncertified.push(e2);
            }
        }
    }

    let mut blocks = Vec::new();
    for (e, k) in certified {
        // block dimension: dim e*S
        let block_dim = s.left_mult_of(&e).row_space().rows();
        if block_dim % k != 0 {
            return Err(Error::AssertionFailure("block dim not divisible by k".into()));
        }
        let m2 = block_dim / k;
        let msize = (m2 as f64).sqrt().round() as usize;
        if msize * msize != m2 {
            return Err(Error::AssertionFailure(
                "block dim / k is not a perfect square".into(),
            ));
        }
        blocks.push(WedderburnBlock {
            matrix_size: msize,
            field_degree: k,
            idempotent: s.element(e)?,
        });
    }
    // deterministic block order
    blocks.sort_by(|a, b| {
        (a.matrix_size, a.field_degree, a.idempotent.coords().to_vec()).cmp(&(
            b.matrix_size,
            b.field_degree,
            b.idempotent.coords().to_vec(),
        ))
    });
    let dec = SemisimpleDecomposition { blocks };
    if dec.total_dim() != n {
        return Err(Error::AssertionFailure(
            "wedderburn block dimensions do not sum to dim".into(),
        ));
    }
    // idempotents orthogonal and summing to 1
    let mut acc = s.zero();
    for b in &dec.blocks {
        acc = acc.add(&b.idempotent);
    }
    if !acc.is_one() {
        return Err(Error::AssertionFailure("idempotents do not sum to 1".into()));
    }
    for (i, bi) in dec.blocks.iter().enumerate() {
        for bj in dec.blocks.iter().skip(i + 1) {
            if !bi.idempotent.mul(&bj.idempotent).is_zero() {
                return Err(Error::AssertionFailure("idempotents not orthogonal".into()));
            }
        }
    }
    Ok(dec)
}

/// Splits every idempotent in `blocks` along the factors of the minimal
/// polynomial of z restricted to that block.
fn refine_blocks(s: &Algebra, z: &[u64], blocks: &mut Vec<Vec<u64>>) -> Result<()> {
    let mut out = Vec::with_capacity(blocks.len());
    for e in blocks.drain(..) {
        let w = s.mul_coords(&e, z);
        let mp = relative_min_poly(s, &e, &w);
        let fact = mp.factor()?;
        if fact.factors.len() <= 1 {
            out.push(e);
            continue;
        }
        // semisimple commutative block: the minimal polynomial is squarefree
        if fact.factors.iter().any(|(_, m)| *m > 1) {
            return Err(Error::AssertionFailure(
                "minimal polynomial of a central element is not squarefree".into(),
            ));
        }
        let full: FpPoly = fact.product(s.modulus());
        for (f, _) in &fact.factors {
            // CRT idempotent: h = full / f, g = h * (h^{-1} mod f), e_i = g(w)
            let h = full.divmod(f).0;
            let hinv = poly_inverse_mod(&h, f)
                .ok_or_else(|| Error::AssertionFailure("CRT factor not coprime".into()))?;
            let g = h.mul(&hinv);
            let ei = eval_poly_at(s, &e, &w, &g);
            // g has degree < deg(full); reduce not needed since eval is exact
            if ei.iter().all(|&c| c == 0) {
                return Err(Error::AssertionFailure("zero CRT idempotent".into()));
            }
            out.push(ei);
        }
    }
    *blocks = out;
    Ok(())
}

/// Minimal polynomial of w inside the block with identity e (powers are
/// taken with w^0 = e).
fn relative_min_poly(s: &Algebra, e: &[u64], w: &[u64]) -> FpPoly {
    let p = s.modulus();
    let n = s.dim();
    let mut powers: Vec<Vec<u64>> = vec![e.to_vec()];
    let mut span = FpMatrix::zero(p, 0, n);
    span.push_row(e);
    span = span.row_space();
    loop {
        let last = powers.last().unwrap();
        let next = s.mul_coords(last, w);
        if span.reduce_vector(&next).iter().all(|&c| c == 0) {
            // express next in the power basis: solve sum a_i w^i = next
            let mut m = FpMatrix::zero(p, powers.len(), n);
            for (r, pw) in powers.iter().enumerate() {
                for (c, &v) in pw.iter().enumerate() {
                    m.set(r, c, v);
                }
            }
            // solve x * m = next  <=>  m^T x^T = next^T
            let sol = m
                .transpose()
                .solve(&next)
                .expect("shape ok")
                .expect("next lies in the span");
            // min poly: x^d - sum a_i x^i
            let mut coeffs = vec![0u64; powers.len() + 1];
            for (i, &a) in sol.iter().enumerate() {
                coeffs[i] = (p - a % p) % p;
            }
            coeffs[powers.len()] = 1;
            return FpPoly::new(p, coeffs);
        }
        span.push_row(&next);
        span = span.row_space();
        powers.push(next);
    }
}

/// Evaluates g at w inside the block with identity e.
fn eval_poly_at(s: &Algebra, e: &[u64], w: &[u64], g: &FpPoly) -> Vec<u64> {
    let p = s.modulus();
    let n = s.dim();
    let mut acc = vec![0u64; n];
    // Horner with w^0 = e
    for &c in g.coeffs().iter().rev() {
        acc = s.mul_coords(&acc, w);
        if c != 0 {
            for (a, &ei) in acc.iter_mut().zip(e) {
                *a = (*a + c * ei) % p;
            }
        }
    }
    acc
}

/// Inverse of h modulo f when coprime.
fn poly_inverse_mod(h: &FpPoly, f: &FpPoly) -> Option<FpPoly> {
    // extended Euclid
    let p = h.modulus();
    let (mut r0, mut r1) = (f.clone(), h.rem(f));
    let (mut s0, mut s1) = (FpPoly::zero(p), FpPoly::one(p));
    while !r1.is_zero() {
        let (q, r) = r0.divmod(&r1);
        let s = s0.sub(&q.mul(&s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if r0.degree() != 0 || r0.is_zero() {
        return None;
    }
    let inv_lead = crate::fp::invm(r0.leading(), p);
    Some(s0.scale(inv_lead).rem(f))
}

/// Center dimension of the block cut out by idempotent e: dim(e * center).
fn block_center_dim(s: &Algebra, center: &FpMatrix, e: &[u64]) -> usize {
    let p = s.modulus();
    let mut rows = FpMatrix::zero(p, 0, s.dim());
    for r in 0..center.rows() {
        rows.push_row(&s.mul_coords(e, center.row(r)));
    }
    rows.row_space().rows()
}

/// Lifts an idempotent of A/J(A) to an exact idempotent of A by the
/// refinement e <- 3 e^2 - 2 e^3; the defect ideal squares each step.
pub fn lift_idempotent(a: &Algebra, ebar: &Element) -> Result<Element> {
    let quot = a.semisimple_quotient()?;
    if ebar.algebra() != &quot.algebra {
        return Err(Error::OwnerMismatch("idempotent not in the semisimple quotient"));
    }
    if !ebar.is_idempotent() {
        return Err(Error::AssertionFailure("input is not idempotent".into()));
    }
    let mut e = a.element(quot.section.apply_row(ebar.coords()))?;
    let index = a.radical()?.nilpotency_index;
    let steps = (usize::BITS - (index.max(1) - 1).leading_zeros()) as usize; // ceil(log2(index))
    for _ in 0..steps {
        let e2 = e.mul(&e);
        let e3 = e2.mul(&e);
        e = e2.scale(3 % a.modulus()).sub(&e3.scale(2 % a.modulus()));
    }
    if !e.is_idempotent() {
        return Err(Error::AssertionFailure("idempotent refinement did not converge".into()));
    }
    if quot.projection.apply(&e) != *ebar {
        return Err(Error::AssertionFailure("lift does not project back".into()));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{direct_product, matrix_extension, upper_triangular};

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

    fn gf4_as_gf2_algebra() -> Algebra {
        // basis {1, a} with a^2 = a + 1
        let n = 2;
        let mut consts = vec![0u64; n * n * n];
        let mut set = |i: usize, j: usize, k: usize| consts[(i * n + j) * n + k] = 1;
        set(0, 0, 0);
        set(0, 1, 1);
        set(1, 0, 1);
        set(1, 1, 0);
        set(1, 1, 1);
        Algebra::new(2, n, consts, vec![1, 0]).unwrap()
    }

    #[test]
    fn simple_ring_has_zero_radical() {
        let m2 = matrix_extension(&Algebra::field(2).unwrap(), 2).unwrap();
        let r = radical_bruteforce(&m2, 1 << 20).unwrap();
        assert!(r.radical.is_zero());
        assert_eq!(r.nilpotency_index, 1);
    }

    #[test]
    fn truncated_poly_radical_is_x() {
        let a = truncated_poly(3, 2);
        let r = radical_bruteforce(&a, 1 << 20).unwrap();
        assert_eq!(r.radical.dim(), 1);
        assert!(r.radical.contains(&[0, 1]));
        assert_eq!(r.nilpotency_index, 2);
    }

    #[test]
    fn triangular_radical_strictly_upper() {
        let (t, _) = upper_triangular(&Algebra::field(2).unwrap(), 2).unwrap();
        let r = radical_bruteforce(&t, 1 << 20).unwrap();
        assert_eq!(r.radical.dim(), 1);
        assert!(r.radical.contains(&[0, 1, 0]));
        assert_eq!(r.nilpotency_index, 2);
    }

    #[test]
    fn trace_method_agrees_small_cases() {
        let a = truncated_poly(5, 2);
        let t = radical_trace(&a).unwrap();
        let b = radical_bruteforce(&a, 1 << 20).unwrap();
        assert_eq!(t.radical, b.radical);

        let m2 = matrix_extension(&Algebra::field(7).unwrap(), 2).unwrap();
        let t = radical_trace(&m2).unwrap();
        assert!(t.radical.is_zero());
    }

    #[test]
    fn trace_method_precondition() {
        let (t, _) = upper_triangular(&Algebra::field(2).unwrap(), 2).unwrap();
        assert!(matches!(radical_trace(&t), Err(Error::CharTooSmall { .. })));
    }

    #[test]
    fn semisimple_quotient_of_triangular() {
        let (t, _) = upper_triangular(&Algebra::field(2).unwrap(), 2).unwrap();
        let q = t.semisimple_quotient().unwrap();
        assert_eq!(q.algebra.dim(), 2);
        assert!(q.algebra.is_semisimple().unwrap());
        let w = q.algebra.wedderburn().unwrap();
        assert_eq!(w.block_count(), 2);
        assert!(w.blocks.iter().all(|b| b.matrix_size == 1 && b.field_degree == 1));
    }

    #[test]
    fn wedderburn_of_m2() {
        let m2 = matrix_extension(&Algebra::field(3).unwrap(), 2).unwrap();
        let w = wedderburn_decompose(&m2, 64, 0).unwrap();
        assert_eq!(w.block_count(), 1);
        assert_eq!(w.blocks[0].matrix_size, 2);
        assert_eq!(w.blocks[0].field_degree, 1);
    }

    #[test]
    fn wedderburn_of_gf4() {
        let a = gf4_as_gf2_algebra();
        let w = wedderburn_decompose(&a, 64, 0).unwrap();
        assert_eq!(w.block_count(), 1);
        assert_eq!(w.blocks[0].matrix_size, 1);
        assert_eq!(w.blocks[0].field_degree, 2);
    }

    #[test]
    fn wedderburn_of_product() {
        let (prod, _, _) =
            direct_product(&Algebra::field(2).unwrap(), &Algebra::field(2).unwrap()).unwrap();
        let w = wedderburn_decompose(&prod, 64, 0).unwrap();
        assert_eq!(w.block_count(), 2);
        assert_eq!(prod.ring_codim().unwrap(), 2);
    }

    #[test]
    fn codim_is_additive_and_matrix_codim_is_n() {
        let a = Algebra::field(3).unwrap();
        let m2 = matrix_extension(&a, 2).unwrap();
        let (prod, _, _) = direct_product(&a, &m2).unwrap();
        assert_eq!(prod.ring_codim().unwrap(), 3);
        assert_eq!(m2.ring_codim().unwrap(), 2);
        let m2_gf4 = matrix_extension(&gf4_as_gf2_algebra(), 2).unwrap();
        assert_eq!(m2_gf4.ring_codim().unwrap(), 2);
    }

    #[test]
    fn lift_idempotents_of_triangular() {
        let (t, _) = upper_triangular(&Algebra::field(3).unwrap(), 2).unwrap();
        let q = t.semisimple_quotient().unwrap();
        // trivial lifts
        let one = lift_idempotent(&t, &q.algebra.one()).unwrap();
        assert!(one.is_one());
        let zero = lift_idempotent(&t, &q.algebra.zero()).unwrap();
        assert!(zero.is_zero());
        // each wedderburn idempotent lifts to an exact idempotent
        let w = t.wedderburn().unwrap();
        for b in &w.blocks {
            let e = lift_idempotent(&t, &b.idempotent).unwrap();
            assert!(e.is_idempotent());
            assert_eq!(q.projection.apply(&e), b.idempotent);
        }
    }

    #[test]
    fn quotient_by_radical_has_zero_radical() {
        for a in [
            truncated_poly(3, 3),
            upper_triangular(&Algebra::field(2).unwrap(), 2).unwrap().0,
            truncated_poly(2, 4),
        ] {
            let q = a.semisimple_quotient().unwrap();
            assert!(q.algebra.is_semisimple().unwrap());
        }
    }
}
