//! Structure-constant algebras over GF(p), their elements, subspaces,
//! and validated morphisms.
//!
//! An algebra is given by c[i][j][k] with b_i * b_j = sum_k c[i][j][k] b_k
//! and a unit vector. Both the unit laws and associativity for all basis
//! triples are checked at construction. Every algebra carries an identity
//! token so elements and morphisms cannot cross algebras silently.

mod constructions;

pub use constructions::{
    direct_product, direct_product_many, ideal_generated, matrix_extension, matrix_morphism_lift,
    quotient_by_ideal, trivial_extension, upper_triangular, Quotient,
};

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::fp::{check_modulus, mulm, Complement, FpMatrix};

/// Identity token shared by algebras and modules; referential checks only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OwnerId(pub u64);

static NEXT_OWNER: AtomicU64 = AtomicU64::new(1);

pub(crate) fn fresh_owner() -> OwnerId {
    OwnerId(NEXT_OWNER.fetch_add(1, Ordering::Relaxed))
}

/// Default dimension cap for validated construction; the O(dim^5)
/// associativity check is the reason for the cap.
pub const DEFAULT_DIM_CAP: usize = 64;

pub(crate) struct AlgebraData {
    id: OwnerId,
    p: u64,
    dim: usize,
    consts: Vec<u64>,
    unit: Vec<u64>,
    left_mult: Vec<FpMatrix>,
    right_mult: Vec<FpMatrix>,
    pub(crate) radical: OnceLock<crate::radical::RadicalReport>,
    pub(crate) semisimple: OnceLock<Quotient>,
    pub(crate) wedderburn: OnceLock<crate::radical::SemisimpleDecomposition>,
    pub(crate) primitive_idempotents: OnceLock<Vec<Element>>,
    pub(crate) opposite: OnceLock<Algebra>,
}

/// A finite-dimensional associative unital algebra over GF(p).
///
/// Cheap to clone (shared handle); equality is identity of the handle.
#[derive(Clone)]
pub struct Algebra(pub(crate) Arc<AlgebraData>);

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.0.id == other.0.id
    }
}

impl Eq for Algebra {}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Algebra(id={}, p={}, dim={})",
            self.0.id.0, self.0.p, self.0.dim
        )
    }
}

impl Algebra {
    /// Validated construction with the default dimension cap.
    pub fn new(p: u64, dim: usize, consts: Vec<u64>, unit: Vec<u64>) -> Result<Algebra> {
        Self::with_cap(p, dim, consts, unit, DEFAULT_DIM_CAP)
    }

    /// Validated construction with an explicit dimension cap override.
    pub fn with_cap(
        p: u64,
        dim: usize,
        consts: Vec<u64>,
        unit: Vec<u64>,
        cap: usize,
    ) -> Result<Algebra> {
        check_modulus(p)?;
        if dim > cap {
            return Err(Error::DimCapExceeded { dim, cap });
        }
        if consts.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                context: "structure constants",
                expected: dim * dim * dim,
                got: consts.len(),
            });
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch {
                context: "unit vector",
                expected: dim,
                got: unit.len(),
            });
        }
        let consts: Vec<u64> = consts.into_iter().map(|c| c % p).collect();
        let unit: Vec<u64> = unit.into_iter().map(|c| c % p).collect();

        let at = |i: usize, j: usize, k: usize| consts[(i * dim + j) * dim + k];
        // right multiplication by b_j on row vectors: R_j[i][k] = c[i][j][k]
        let mut right_mult = Vec::with_capacity(dim);
        for j in 0..dim {
            let mut m = FpMatrix::zero(p, dim, dim);
            for i in 0..dim {
                for k in 0..dim {
                    m.set(i, k, at(i, j, k));
                }
            }
            right_mult.push(m);
        }
        // left multiplication by b_i on row vectors: L_i[j][k] = c[i][j][k]
        let mut left_mult = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut m = FpMatrix::zero(p, dim, dim);
            for j in 0..dim {
                for k in 0..dim {
                    m.set(j, k, at(i, j, k));
                }
            }
            left_mult.push(m);
        }

        // unit laws on every basis vector
        for i in 0..dim {
            let left = left_mult[i].apply_row(&unit); // b_i * 1... rows: v |-> b_i v with v = unit
            let right = right_mult[i].apply_row(&unit); // 1 * b_i
            let mut e = vec![0u64; dim];
            e[i] = 1 % p;
            if left != e || right != e {
                return Err(Error::UnitViolation { i });
            }
        }

        // associativity: (x b_j) b_k = x (b_j b_k) for all x, as matrices
        for j in 0..dim {
            for k in 0..dim {
                let lhs = right_mult[j].mul(&right_mult[k]);
                let mut rhs = FpMatrix::zero(p, dim, dim);
                for l in 0..dim {
                    let cjkl = at(j, k, l);
                    if cjkl != 0 {
                        rhs = rhs.add(&right_mult[l].scale(cjkl));
                    }
                }
                if lhs != rhs {
                    // locate a witness basis triple for the error payload
                    let i = (0..dim)
                        .find(|&i| lhs.row(i) != rhs.row(i))
                        .unwrap_or(0);
                    return Err(Error::AssociativityViolation { i, j, k });
                }
            }
        }

        Ok(Algebra(Arc::new(AlgebraData {
            id: fresh_owner(),
            p,
            dim,
            consts,
            unit,
            left_mult,
            right_mult,
            radical: OnceLock::new(),
            semisimple: OnceLock::new(),
            wedderburn: OnceLock::new(),
            primitive_idempotents: OnceLock::new(),
            opposite: OnceLock::new(),
        })))
    }

    /// The base field GF(p) as a one-dimensional algebra.
    pub fn field(p: u64) -> Result<Algebra> {
        Algebra::new(p, 1, vec![1], vec![1])
    }

    /// The zero ring (dimension 0); its only element is both 0 and 1.
    pub fn zero_ring(p: u64) -> Result<Algebra> {
        Algebra::new(p, 0, vec![], vec![])
    }

    pub fn id(&self) -> OwnerId {
        self.0.id
    }

    pub fn modulus(&self) -> u64 {
        self.0.p
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> u64 {
        self.0.consts[(i * self.0.dim + j) * self.0.dim + k]
    }

    pub fn consts(&self) -> &[u64] {
        &self.0.consts
    }

    pub fn unit_coords(&self) -> &[u64] {
        &self.0.unit
    }

    pub fn one(&self) -> Element {
        Element {
            algebra: self.clone(),
            coords: self.0.unit.clone(),
        }
    }

    pub fn zero(&self) -> Element {
        Element {
            algebra: self.clone(),
            coords: vec![0; self.0.dim],
        }
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut coords = vec![0u64; self.0.dim];
        coords[i] = 1 % self.0.p;
        Element {
            algebra: self.clone(),
            coords,
        }
    }

    pub fn element(&self, coords: Vec<u64>) -> Result<Element> {
        if coords.len() != self.0.dim {
            return Err(Error::DimensionMismatch {
                context: "element coordinates",
                expected: self.0.dim,
                got: coords.len(),
            });
        }
        let coords = coords.into_iter().map(|c| c % self.0.p).collect();
        Ok(Element {
            algebra: self.clone(),
            coords,
        })
    }

    /// Matrix of x |-> b_i * x on row vectors.
    pub fn left_mult(&self, i: usize) -> &FpMatrix {
        &self.0.left_mult[i]
    }

    /// Matrix of x |-> x * b_i on row vectors.
    pub fn right_mult(&self, i: usize) -> &FpMatrix {
        &self.0.right_mult[i]
    }

    /// Matrix of x |-> a * x for a with the given coordinates.
    pub fn left_mult_of(&self, coords: &[u64]) -> FpMatrix {
        let mut m = FpMatrix::zero(self.0.p, self.0.dim, self.0.dim);
        for (i, &a) in coords.iter().enumerate() {
            if a != 0 {
                m = m.add(&self.0.left_mult[i].scale(a));
            }
        }
        m
    }

    /// Matrix of x |-> x * a for a with the given coordinates.
    pub fn right_mult_of(&self, coords: &[u64]) -> FpMatrix {
        let mut m = FpMatrix::zero(self.0.p, self.0.dim, self.0.dim);
        for (j, &a) in coords.iter().enumerate() {
            if a != 0 {
                m = m.add(&self.0.right_mult[j].scale(a));
            }
        }
        m
    }

    pub fn mul_coords(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let p = self.0.p;
        let dim = self.0.dim;
        let mut out = vec![0u64; dim];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            // a_i * (b_i * b) via the left multiplication matrix
            let part = self.0.left_mult[i].apply_row(b);
            for (o, &x) in out.iter_mut().zip(&part) {
                *o = (*o + ai * x) % p;
            }
        }
        out
    }

    pub fn is_unit_coords(&self, coords: &[u64]) -> bool {
        self.left_mult_of(coords).is_invertible()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.0.dim;
        for i in 0..n {
            for j in (i + 1)..n {
                for k in 0..n {
                    if self.c(i, j, k) != self.c(j, i, k) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Number of elements p^dim.
    pub fn element_count(&self) -> u128 {
        (self.0.p as u128).pow(self.0.dim as u32)
    }

    /// The opposite algebra, c_op[i][j][k] = c[j][i][k]; cached one way
    /// (the opposite of the opposite is a fresh copy).
    pub fn opposite(&self) -> &Algebra {
        self.0.opposite.get_or_init(|| {
            let n = self.0.dim;
            let mut consts = vec![0u64; n * n * n];
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        consts[(i * n + j) * n + k] = self.c(j, i, k);
                    }
                }
            }
            Algebra::with_cap(self.0.p, n, consts, self.0.unit.clone(), usize::MAX)
                .expect("opposite of a valid algebra is valid")
        })
    }

    /// Full algebra as a subspace of itself.
    pub fn full_subspace(&self) -> Subspace {
        Subspace {
            owner: self.0.id,
            basis: FpMatrix::identity(self.0.p, self.0.dim),
        }
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace {
            owner: self.0.id,
            basis: FpMatrix::zero(self.0.p, 0, self.0.dim),
        }
    }

    pub fn subspace_from_rows(&self, rows: &FpMatrix) -> Subspace {
        assert_eq!(rows.cols(), self.0.dim, "subspace ambient dimension");
        Subspace {
            owner: self.0.id,
            basis: rows.row_space(),
        }
    }

    /// Whether the subspace is a two-sided ideal.
    pub fn is_ideal(&self, u: &Subspace) -> bool {
        if u.owner != self.0.id {
            return false;
        }
        for r in 0..u.basis.rows() {
            let row = u.basis.row(r);
            for i in 0..self.0.dim {
                if !u.contains(&self.0.left_mult[i].apply_row(row))
                    || !u.contains(&self.0.right_mult[i].apply_row(row))
                {
                    return false;
                }
            }
        }
        true
    }
}

/// Enumerates all coordinate vectors of GF(p)^n in lexicographic order
/// (coordinate 0 most significant).
pub fn enumerate_vectors(p: u64, n: usize) -> impl Iterator<Item = Vec<u64>> {
    let total = (p as u128).pow(n as u32);
    (0..total).map(move |idx| coords_from_index(p, n, idx))
}

pub fn coords_from_index(p: u64, n: usize, idx: u128) -> Vec<u64> {
    let mut coords = vec![0u64; n];
    let mut m = idx;
    for c in coords.iter_mut().rev() {
        *c = (m % p as u128) as u64;
        m /= p as u128;
    }
    coords
}

/// An element of a specific algebra; arithmetic panics on owner mismatch.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    algebra: Algebra,
    coords: Vec<u64>,
}

impl std::fmt::Debug for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Element{:?}", self.coords)
    }
}

impl Element {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coords == self.algebra.0.unit
    }

    pub fn add(&self, other: &Element) -> Element {
        assert_eq!(self.algebra, other.algebra, "element owner mismatch");
        let p = self.algebra.0.p;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Element {
            algebra: self.algebra.clone(),
            coords,
        }
    }

    pub fn sub(&self, other: &Element) -> Element {
        assert_eq!(self.algebra, other.algebra, "element owner mismatch");
        let p = self.algebra.0.p;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        Element {
            algebra: self.algebra.clone(),
            coords,
        }
    }

    pub fn mul(&self, other: &Element) -> Element {
        assert_eq!(self.algebra, other.algebra, "element owner mismatch");
        Element {
            algebra: self.algebra.clone(),
            coords: self.algebra.mul_coords(&self.coords, &other.coords),
        }
    }

    pub fn scale(&self, s: u64) -> Element {
        let p = self.algebra.0.p;
        let coords = self.coords.iter().map(|&a| mulm(a, s % p, p)).collect();
        Element {
            algebra: self.algebra.clone(),
            coords,
        }
    }

    pub fn pow(&self, mut e: u64) -> Element {
        let mut acc = self.algebra.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// True iff the left multiplication matrix is invertible; in a
    /// finite-dimensional unital algebra this is two-sided invertibility.
    pub fn is_unit(&self) -> bool {
        self.algebra.is_unit_coords(&self.coords)
    }

    pub fn inverse(&self) -> Option<Element> {
        // solve x * L_a = unit, i.e. a * x = 1; two-sided at finite dimension
        let l = self.algebra.left_mult_of(&self.coords);
        let inv = l.invert().ok()??;
        let coords = inv.apply_row(&self.algebra.0.unit);
        Some(Element {
            algebra: self.algebra.clone(),
            coords,
        })
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    pub fn is_nilpotent(&self) -> bool {
        self.algebra.left_mult_of(&self.coords).is_nilpotent()
    }
}

/// A subspace of an algebra or module, held as a canonical rref basis, so
/// subspace equality is matrix equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    pub(crate) owner: OwnerId,
    pub(crate) basis: FpMatrix,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(owner={}, dim={}, ambient={})",
            self.owner.0,
            self.basis.rows(),
            self.basis.cols()
        )
    }
}

impl Subspace {
    pub fn from_rows(owner: OwnerId, rows: &FpMatrix) -> Subspace {
        Subspace {
            owner,
            basis: rows.row_space(),
        }
    }

    pub fn zero(owner: OwnerId, p: u64, ambient: usize) -> Subspace {
        Subspace {
            owner,
            basis: FpMatrix::zero(p, 0, ambient),
        }
    }

    pub fn owner(&self) -> OwnerId {
        self.owner
    }

    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.rows() == 0
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.basis.reduce_vector(v).iter().all(|&e| e == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.rows_contained_in(&self.basis)
    }

    /// Coefficients of v in the rref basis, or None when v is outside.
    pub fn express(&self, v: &[u64]) -> Option<Vec<u64>> {
        if !self.contains(v) {
            return None;
        }
        let mut coords = Vec::with_capacity(self.basis.rows());
        for r in 0..self.basis.rows() {
            let pivot = self.basis.row(r).iter().position(|&e| e != 0);
            match pivot {
                Some(c) => coords.push(v[c]),
                None => coords.push(0),
            }
        }
        Some(coords)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.owner, other.owner, "subspace owner mismatch");
        Subspace {
            owner: self.owner,
            basis: self.basis.vstack(&other.basis).row_space(),
        }
    }

    /// Intersection via orthogonal complements: (U^perp + V^perp)^perp.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.owner, other.owner, "subspace owner mismatch");
        let up = self.basis.reduce().kernel;
        let vp = other.basis.reduce().kernel;
        let joined = up.vstack(&vp);
        Subspace {
            owner: self.owner,
            basis: joined.reduce().kernel,
        }
    }

    pub fn complement(&self) -> Complement {
        Complement::new(self.basis.clone())
    }
}

/// A unital multiplicative linear map between algebras over the same
/// prime, stored as a domain.dim x codomain.dim matrix on row vectors.
#[derive(Clone)]
pub struct Morphism {
    domain: Algebra,
    codomain: Algebra,
    matrix: FpMatrix,
}

impl std::fmt::Debug for Morphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Morphism({:?} -> {:?})",
            self.domain, self.codomain
        )
    }
}

impl Morphism {
    /// Constructed only if unit preservation and multiplicativity hold.
    pub fn new(domain: Algebra, codomain: Algebra, matrix: FpMatrix) -> Result<Morphism> {
        if domain.modulus() != codomain.modulus() {
            return Err(Error::OwnerMismatch("morphism over distinct moduli"));
        }
        if matrix.rows() != domain.dim() || matrix.cols() != codomain.dim() {
            return Err(Error::DimensionMismatch {
                context: "morphism matrix",
                expected: domain.dim() * codomain.dim(),
                got: matrix.rows() * matrix.cols(),
            });
        }
        if matrix.apply_row(domain.unit_coords()) != codomain.unit_coords() {
            return Err(Error::UnitNotPreserved);
        }
        for i in 0..domain.dim() {
            for j in 0..domain.dim() {
                let prod_coords: Vec<u64> = (0..domain.dim()).map(|k| domain.c(i, j, k)).collect();
                let lhs = matrix.apply_row(&prod_coords);
                let rhs = codomain.mul_coords(matrix.row(i), matrix.row(j));
                if lhs != rhs {
                    return Err(Error::NotMultiplicative { i, j });
                }
            }
        }
        Ok(Morphism {
            domain,
            codomain,
            matrix,
        })
    }

    pub fn identity(a: &Algebra) -> Morphism {
        Morphism {
            domain: a.clone(),
            codomain: a.clone(),
            matrix: FpMatrix::identity(a.modulus(), a.dim()),
        }
    }

    pub fn domain(&self) -> &Algebra {
        &self.domain
    }

    pub fn codomain(&self) -> &Algebra {
        &self.codomain
    }

    pub fn matrix(&self) -> &FpMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &Element) -> Element {
        assert_eq!(x.algebra(), &self.domain, "morphism applied across owners");
        Element {
            algebra: self.codomain.clone(),
            coords: self.matrix.apply_row(x.coords()),
        }
    }

    pub fn apply_coords(&self, coords: &[u64]) -> Vec<u64> {
        self.matrix.apply_row(coords)
    }

    /// self then other.
    pub fn compose(&self, other: &Morphism) -> Result<Morphism> {
        if self.codomain != other.domain {
            return Err(Error::OwnerMismatch("morphism composition"));
        }
        Ok(Morphism {
            domain: self.domain.clone(),
            codomain: other.codomain.clone(),
            matrix: self.matrix.mul(&other.matrix),
        })
    }

    pub fn kernel(&self) -> Subspace {
        // row-vector convention: the kernel is the left kernel of the matrix
        Subspace {
            owner: self.domain.id(),
            basis: self.matrix.transpose().reduce().kernel,
        }
    }

    pub fn image(&self) -> Subspace {
        Subspace {
            owner: self.codomain.id(),
            basis: self.matrix.row_space(),
        }
    }

    pub fn is_onto(&self) -> bool {
        self.matrix.rank() == self.codomain.dim()
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.domain.dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn gf2() -> Algebra {
        Algebra::field(2).unwrap()
    }

    /// GF(p)[x]/(x^n) as structure constants.
    pub(crate) fn truncated_poly(p: u64, n: usize) -> Algebra {
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
    fn base_field_is_valid() {
        let a = gf2();
        assert_eq!(a.dim(), 1);
        assert!(a.one().is_unit());
    }

    #[test]
    fn missing_unit_rejected() {
        // b1*b1 = b2, b2*b2 = b1, no unit vector works
        let mut consts = vec![0u64; 8];
        consts[(0 * 2 + 0) * 2 + 1] = 1;
        consts[(1 * 2 + 1) * 2 + 0] = 1;
        let err = Algebra::new(3, 2, consts, vec![1, 0]).unwrap_err();
        assert!(matches!(err, Error::UnitViolation { .. }));
    }

    #[test]
    fn truncated_poly_nilpotent_generator() {
        let a = truncated_poly(3, 2);
        let x = a.basis_element(1);
        assert!(x.mul(&x).is_zero());
        assert!(!x.is_unit());
        assert!(x.is_nilpotent());
    }

    #[test]
    fn unit_one_plus_x_has_inverse_one_minus_x() {
        // (1+x)(1-x) = 1 - x^2 = 1 in GF(3)[x]/(x^2)
        let a = truncated_poly(3, 2);
        let e = a.element(vec![1, 1]).unwrap();
        assert!(e.is_unit());
        let inv = e.inverse().unwrap();
        assert_eq!(inv.coords(), &[1, 2]);
        assert!(e.mul(&inv).is_one());
    }

    #[test]
    fn non_associative_rejected() {
        // b1 is unit; force b2*b2 = b2 but break (b2 b2) b2 vs b2 (b2 b2)
        // by making b2*b2 = b1 and b2*b1 = b2 while b1 is declared unit:
        // associativity then forces nothing wrong, so use a genuinely
        // broken table: b2 b2 = b2, b2 b2 b2 must match, break via c.
        let n = 3;
        let mut consts = vec![0u64; n * n * n];
        let mut set = |i: usize, j: usize, k: usize, v: u64| {
            consts[(i * n + j) * n + k] = v;
        };
        // b0 = unit
        for i in 0..n {
            set(0, i, i, 1);
            if i != 0 {
                set(i, 0, i, 1);
            }
        }
        set(1, 1, 2, 1); // b1^2 = b2
        set(1, 2, 0, 1); // b1 b2 = 1
        set(2, 1, 1, 1); // b2 b1 = b1  -> (b1 b1) b1 = b2 b1 = b1, b1 (b1 b1) = b1 b2 = 1
        let err = Algebra::new(5, n, consts, {
            let mut u = vec![0; n];
            u[0] = 1;
            u
        })
        .unwrap_err();
        assert!(matches!(err, Error::AssociativityViolation { .. }));
    }

    #[test]
    fn subspace_canonical_equality() {
        let a = truncated_poly(5, 3);
        let s1 = a.subspace_from_rows(&FpMatrix::from_rows(5, 3, &[vec![0, 2, 1], vec![0, 0, 3]]));
        let s2 = a.subspace_from_rows(&FpMatrix::from_rows(5, 3, &[vec![0, 1, 0], vec![0, 0, 1]]));
        assert_eq!(s1, s2);
    }

    #[test]
    fn morphism_rejects_non_multiplicative() {
        // x |-> 1 on GF(3)[x]/(x^2): x^2 = 0 but image 1*1 = 1
        let a = truncated_poly(3, 2);
        let m = FpMatrix::from_rows(3, 2, &[vec![1, 0], vec![1, 0]]);
        let err = Morphism::new(a.clone(), a.clone(), m).unwrap_err();
        assert!(matches!(err, Error::NotMultiplicative { .. }));
    }

    #[test]
    fn identity_morphism_valid() {
        let a = truncated_poly(3, 2);
        let m = Morphism::identity(&a);
        let x = a.element(vec![1, 2]).unwrap();
        assert_eq!(m.apply(&x), x);
    }
}
