//! Dense exact matrices over GF(p) with deterministic row reduction.
//!
//! Pivoting is fixed (first nonzero column, smallest row index), so the
//! reduced row echelon form is canonical: two subspaces are equal exactly
//! when their rref bases are equal entrywise.

use crate::error::{Error, Result};

/// Largest modulus such that a product of two residues fits in u64.
pub const MAX_MODULUS: u64 = 1 << 31;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Checks p is a prime in the supported range.
pub fn check_modulus(p: u64) -> Result<()> {
    if p >= MAX_MODULUS || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

#[inline]
pub fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn mulm(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

/// Inverse of a nonzero residue, by Fermat exponentiation.
pub fn invm(a: u64, p: u64) -> u64 {
    debug_assert!(a != 0);
    powm(a, p - 2, p)
}

pub fn powm(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulm(acc, base, p);
        }
        base = mulm(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Row-major dense matrix with entries reduced mod p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

/// Outcome of `reduce`: canonical rref, rank, and a canonical kernel basis.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub rref: FpMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
    /// Rows span {x : m xᵀ = 0}; themselves in rref canonical form.
    pub kernel: FpMatrix,
}

impl std::fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "FpMatrix {}x{} mod {}", self.rows, self.cols, self.p)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.entries[r * self.cols..(r + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl FpMatrix {
    pub fn new(p: u64, rows: usize, cols: usize, entries: Vec<u64>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        let entries = entries.into_iter().map(|e| e % p).collect();
        FpMatrix {
            p,
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(p: u64, rows: usize, cols: usize) -> Self {
        FpMatrix {
            p,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zero(p, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1 % p;
        }
        m
    }

    pub fn from_rows(p: u64, cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            entries.extend(r.iter().map(|e| e % p));
        }
        FpMatrix {
            p,
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.entries[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<u64> {
        self.row(r).to_vec()
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn push_row(&mut self, row: &[u64]) {
        assert_eq!(row.len(), self.cols);
        self.entries.extend(row.iter().map(|e| e % self.p));
        self.rows += 1;
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = FpMatrix::zero(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.at(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        assert_eq!(self.p, other.p, "matrix product modulus mismatch");
        let p = self.p;
        let mut out = FpMatrix::zero(p, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a == 0 {
                    continue;
                }
                let orow = &other.entries[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.entries[r * other.cols..(r + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(orow) {
                    *d = (*d + a * b) % p;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let p = self.p;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| addm(a, b, p))
            .collect();
        FpMatrix {
            p,
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let p = self.p;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| subm(a, b, p))
            .collect();
        FpMatrix {
            p,
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn scale(&self, s: u64) -> FpMatrix {
        let p = self.p;
        let s = s % p;
        let entries = self.entries.iter().map(|&a| mulm(a, s, p)).collect();
        FpMatrix {
            p,
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    /// v * self for a row vector v of length `rows`.
    pub fn apply_row(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.rows, "row vector length mismatch");
        let p = self.p;
        let mut out = vec![0u64; self.cols];
        for (r, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let row = &self.entries[r * self.cols..(r + 1) * self.cols];
            for (o, &b) in out.iter_mut().zip(row) {
                *o = (*o + a * b) % p;
            }
        }
        out
    }

    /// Concatenates `other` to the right of `self`.
    pub fn hstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.p, other.p);
        let cols = self.cols + other.cols;
        let mut out = FpMatrix::zero(self.p, self.rows, cols);
        for r in 0..self.rows {
            out.entries[r * cols..r * cols + self.cols].copy_from_slice(self.row(r));
            out.entries[r * cols + self.cols..(r + 1) * cols].copy_from_slice(other.row(r));
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.p, other.p);
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        FpMatrix {
            p: self.p,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// In-place Gauss-Jordan elimination; returns the pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..self.cols {
            // first nonzero entry in this column at or below `lead`
            let Some(pr) = (lead..self.rows).find(|&r| self.at(r, col) != 0) else {
                continue;
            };
            self.swap_rows(lead, pr);
            let inv = invm(self.at(lead, col), p);
            self.scale_row(lead, inv);
            for r in 0..self.rows {
                if r != lead {
                    let f = self.at(r, col);
                    if f != 0 {
                        self.axpy_rows(lead, r, p - f);
                    }
                }
            }
            pivots.push(col);
            lead += 1;
            if lead == self.rows {
                break;
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: u64) {
        let p = self.p;
        for c in 0..self.cols {
            let i = r * self.cols + c;
            self.entries[i] = mulm(self.entries[i], s, p);
        }
    }

    /// row[dst] += s * row[src]
    fn axpy_rows(&mut self, src: usize, dst: usize, s: u64) {
        let p = self.p;
        for c in 0..self.cols {
            let v = mulm(self.entries[src * self.cols + c], s, p);
            let i = dst * self.cols + c;
            self.entries[i] = addm(self.entries[i], v, p);
        }
    }

    /// Canonical reduced row echelon form, rank, pivot columns, and a
    /// canonical basis of the right kernel.
    pub fn reduce(&self) -> Reduction {
        let mut rref = self.clone();
        let pivots = rref.rref_in_place();
        let rank = pivots.len();
        rref.entries.truncate(rank * rref.cols);
        rref.rows = rank;

        // kernel: one generator per free column, then renormalize to rref
        let is_pivot = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let p = self.p;
        let mut kernel = FpMatrix::zero(p, 0, self.cols);
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut gen = vec![0u64; self.cols];
            gen[free] = 1 % p;
            for (prow, &pc) in pivots.iter().enumerate() {
                let coeff = rref.at(prow, free);
                if coeff != 0 {
                    gen[pc] = p - coeff;
                }
            }
            kernel.push_row(&gen);
        }
        let kernel = kernel.row_space();
        Reduction {
            rref,
            rank,
            pivots,
            kernel,
        }
    }

    /// Canonical rref basis of the row space (zero rows dropped).
    pub fn row_space(&self) -> FpMatrix {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        m.entries.truncate(pivots.len() * m.cols);
        m.rows = pivots.len();
        m
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Solves self * x = b; free variables are set to 0 in rref order.
    pub fn solve(&self, b: &[u64]) -> Result<Option<Vec<u64>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                context: "solve right-hand side",
                expected: self.rows,
                got: b.len(),
            });
        }
        Ok(self.solve_many(&[b.to_vec()]).pop().unwrap())
    }

    /// Solves self * x = b for several right-hand sides with one reduction.
    pub fn solve_many(&self, bs: &[Vec<u64>]) -> Vec<Option<Vec<u64>>> {
        let p = self.p;
        let k = bs.len();
        let mut aug = FpMatrix::zero(p, self.rows, self.cols + k);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.entries[r * aug.cols + c] = self.at(r, c);
            }
            for (j, b) in bs.iter().enumerate() {
                assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
                aug.entries[r * aug.cols + self.cols + j] = b[r] % p;
            }
        }
        let pivots = aug.rref_in_place();
        bs.iter()
            .enumerate()
            .map(|(j, _)| {
                let bcol = self.cols + j;
                // inconsistent iff some pivot sits in this rhs column is
                // impossible (pivots are scanned left to right), instead:
                // a row with zero lhs but nonzero rhs entry
                for r in 0..aug.rows {
                    let lhs_zero = (0..self.cols).all(|c| aug.at(r, c) == 0);
                    if lhs_zero && aug.at(r, bcol) != 0 {
                        return None;
                    }
                }
                let mut x = vec![0u64; self.cols];
                for (prow, &pc) in pivots.iter().enumerate() {
                    if pc < self.cols {
                        x[pc] = aug.at(prow, bcol);
                    }
                }
                Some(x)
            })
            .collect()
    }

    /// Inverse when it exists; `None` iff rank < dimension.
    pub fn invert(&self) -> Result<Option<FpMatrix>> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let p = self.p;
        let mut aug = FpMatrix::zero(p, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.entries[r * 2 * n + c] = self.at(r, c);
            }
            aug.entries[r * 2 * n + n + r] = 1 % p;
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Ok(None);
        }
        let mut inv = FpMatrix::zero(p, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.entries[r * n + c] = aug.at(r, n + c);
            }
        }
        Ok(Some(inv))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// True when every row of `self` lies in the row space of `other`
    /// (other must be in rref form for the fast path to be exact).
    pub fn rows_contained_in(&self, rref_basis: &FpMatrix) -> bool {
        assert_eq!(self.cols, rref_basis.cols);
        (0..self.rows).all(|r| rref_basis.reduce_vector(self.row(r)).iter().all(|&e| e == 0))
    }

    /// Reduces `v` modulo the row space of `self`, assuming `self` is in
    /// rref form: subtracts multiples of basis rows to clear the pivot
    /// coordinates. The result is supported on non-pivot columns and is
    /// zero iff v lies in the row space.
    pub fn reduce_vector(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let p = self.p;
        let mut out = v.to_vec();
        for r in 0..self.rows {
            let pc = match self.row(r).iter().position(|&e| e != 0) {
                Some(c) => c,
                None => continue,
            };
            let f = out[pc];
            if f != 0 {
                for c in 0..self.cols {
                    out[c] = subm(out[c], mulm(f, self.at(r, c), p), p);
                }
            }
        }
        out
    }

    pub fn trace(&self) -> u64 {
        debug_assert_eq!(self.rows, self.cols);
        let mut t = 0;
        for i in 0..self.rows {
            t = addm(t, self.at(i, i), self.p);
        }
        t
    }

    /// Whether self^k = 0 for some k (square matrices).
    pub fn is_nilpotent(&self) -> bool {
        debug_assert_eq!(self.rows, self.cols);
        if self.rows == 0 {
            return true;
        }
        let mut m = self.clone();
        let mut e = 1usize;
        while e < self.rows {
            if m.is_zero() {
                return true;
            }
            m = m.mul(&m);
            e *= 2;
        }
        m.is_zero()
    }
}

/// Deterministic complement of a row space given by an rref basis:
/// the coordinates at non-pivot columns parameterize the quotient.
#[derive(Clone, Debug)]
pub struct Complement {
    basis: FpMatrix,
    free_cols: Vec<usize>,
}

impl Complement {
    /// `rref_basis` must already be in reduced row echelon form.
    pub fn new(rref_basis: FpMatrix) -> Self {
        let mut is_pivot = vec![false; rref_basis.cols()];
        for r in 0..rref_basis.rows() {
            if let Some(c) = rref_basis.row(r).iter().position(|&e| e != 0) {
                is_pivot[c] = true;
            }
        }
        let free_cols = (0..rref_basis.cols()).filter(|&c| !is_pivot[c]).collect();
        Complement {
            basis: rref_basis,
            free_cols,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.free_cols.len()
    }

    pub fn free_cols(&self) -> &[usize] {
        &self.free_cols
    }

    /// Quotient coordinates of an ambient vector.
    pub fn project(&self, v: &[u64]) -> Vec<u64> {
        let reduced = self.basis.reduce_vector(v);
        self.free_cols.iter().map(|&c| reduced[c]).collect()
    }

    /// The distinguished ambient representative of quotient coordinates.
    pub fn embed(&self, coords: &[u64]) -> Vec<u64> {
        assert_eq!(coords.len(), self.free_cols.len());
        let mut v = vec![0u64; self.basis.cols()];
        for (&c, &x) in self.free_cols.iter().zip(coords) {
            v[c] = x;
        }
        v
    }

    /// ambient_dim x dim matrix of `project` acting on row vectors.
    pub fn projector_matrix(&self) -> FpMatrix {
        let n = self.ambient_dim();
        let mut m = FpMatrix::zero(self.basis.modulus(), n, self.dim());
        for r in 0..n {
            let mut e = vec![0u64; n];
            e[r] = 1;
            let coords = self.project(&e);
            for (c, &x) in coords.iter().enumerate() {
                m.set(r, c, x);
            }
        }
        m
    }

    /// dim x ambient_dim matrix of `embed` acting on row vectors.
    pub fn section_matrix(&self) -> FpMatrix {
        let mut m = FpMatrix::zero(self.basis.modulus(), self.dim(), self.ambient_dim());
        for (r, &c) in self.free_cols.iter().enumerate() {
            m.set(r, c, 1);
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_reduce() {
        let m = FpMatrix::identity(2, 3);
        let red = m.reduce();
        assert_eq!(red.rank, 3);
        assert_eq!(red.kernel.rows(), 0);
        assert_eq!(red.rref, m);
    }

    #[test]
    fn zero_matrix_kernel() {
        let m = FpMatrix::zero(5, 2, 4);
        let red = m.reduce();
        assert_eq!(red.rank, 0);
        assert_eq!(red.kernel.rows(), 4);
        assert_eq!(red.kernel, FpMatrix::identity(5, 4));
    }

    #[test]
    fn rank_one_kernel_gf5() {
        // [[1,2],[2,4]] over GF(5): rank 1, kernel spanned by (3,1),
        // canonically (1,2) after normalization; 1*1 + 2*2 = 5 = 0 mod 5.
        let m = FpMatrix::from_rows(5, 2, &[vec![1, 2], vec![2, 4]]);
        let red = m.reduce();
        assert_eq!(red.rank, 1);
        assert_eq!(red.kernel.rows(), 1);
        assert_eq!(red.kernel.row(0), &[1, 2]);
        // (3,1) spans the same line: 2 * (3,1) = (1,2) mod 5
        assert_eq!(red.kernel.row_space(), FpMatrix::from_rows(5, 2, &[vec![3, 1]]).row_space());
        // kernel rows are actual kernel vectors
        for r in 0..red.kernel.rows() {
            let v = red.kernel.row(r);
            for row in 0..m.rows() {
                let dot: u64 = (0..2).map(|c| m.at(row, c) * v[c]).sum::<u64>() % 5;
                assert_eq!(dot, 0);
            }
        }
    }

    #[test]
    fn reduce_is_idempotent() {
        let m = FpMatrix::from_rows(3, 4, &[vec![1, 2, 0, 1], vec![2, 1, 1, 0], vec![0, 0, 1, 1]]);
        let r1 = m.reduce().rref;
        let r2 = r1.reduce().rref;
        assert_eq!(r1, r2);
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let id = FpMatrix::identity(7, 4);
        let b = vec![3, 0, 6, 2];
        assert_eq!(id.solve(&b).unwrap(), Some(b.clone()));
        let z = FpMatrix::zero(7, 3, 3);
        assert_eq!(z.solve(&[0, 1, 0]).unwrap(), None);
    }

    #[test]
    fn solve_postcheck_gf3() {
        // residual m*x - b = 0 verified by multiplication
        let m = FpMatrix::from_rows(
            3,
            6,
            &[
                vec![1, 2, 0, 1, 1, 0],
                vec![0, 1, 2, 2, 0, 1],
                vec![1, 0, 1, 0, 2, 2],
                vec![2, 2, 1, 1, 0, 0],
                vec![0, 0, 2, 1, 1, 1],
                vec![1, 1, 1, 2, 2, 1],
            ],
        );
        // make the system consistent by construction: b = m * x0
        let x0 = vec![1, 0, 2, 1, 1, 2];
        let b: Vec<u64> = (0..6)
            .map(|r| (0..6).map(|c| m.at(r, c) * x0[c]).sum::<u64>() % 3)
            .collect();
        let x = m.solve(&b).unwrap().expect("consistent");
        let bx: Vec<u64> = (0..6)
            .map(|r| (0..6).map(|c| m.at(r, c) * x[c]).sum::<u64>() % 3)
            .collect();
        assert_eq!(bx, b);
    }

    #[test]
    fn invert_nilpotent_shift_absent() {
        let m = FpMatrix::from_rows(2, 2, &[vec![0, 1], vec![0, 0]]);
        assert_eq!(m.invert().unwrap(), None);
        assert!(m.is_nilpotent());
    }

    #[test]
    fn invert_random_gf7_postcheck() {
        let m = FpMatrix::from_rows(
            7,
            5,
            &[
                vec![1, 3, 0, 2, 5],
                vec![2, 1, 4, 0, 1],
                vec![0, 2, 1, 6, 3],
                vec![4, 0, 5, 1, 2],
                vec![3, 3, 2, 2, 1],
            ],
        );
        let inv = m.invert().unwrap().expect("invertible");
        assert_eq!(m.mul(&inv), FpMatrix::identity(7, 5));
        assert_eq!(inv.mul(&m), FpMatrix::identity(7, 5));
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let m = FpMatrix::from_rows(5, 3, &[vec![1, 2, 3], vec![2, 4, 1], vec![0, 0, 0], vec![3, 1, 4]]);
        assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn invert_present_iff_kernel_zero() {
        for entries in [
            vec![vec![1u64, 1], vec![0, 1]],
            vec![vec![1, 2], vec![2, 4]],
            vec![vec![0, 0], vec![0, 0]],
            vec![vec![2, 1], vec![1, 2]],
        ] {
            let m = FpMatrix::from_rows(5, 2, &entries);
            let red = m.reduce();
            assert_eq!(m.invert().unwrap().is_some(), red.kernel.rows() == 0);
        }
    }
}
