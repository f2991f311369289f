//! Shared fixtures and brute-force oracles for the integration tests.
//!
//! The lattice oracle enumerates every submodule of a small module by
//! scanning all rref bases, then recovers socle, radical, essential and
//! superfluous positions from their definitions. It never calls the
//! structural-series code it is used to check.

use semilocal::algebra::{upper_triangular, Algebra};
use semilocal::fp::FpMatrix;
use semilocal::{FdModule, Subspace};

pub fn truncated_poly(p: u64, n: usize) -> Algebra {
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

pub fn ut2(p: u64) -> Algebra {
    upper_triangular(&Algebra::field(p).unwrap(), 2).unwrap().0
}

pub fn gf4() -> Algebra {
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

/// Every subspace of GF(p)^n as an rref basis, by pivot-set scan.
pub fn all_subspaces(p: u64, n: usize) -> Vec<FpMatrix> {
    let mut out = vec![FpMatrix::zero(p, 0, n)];
    for k in 1..=n {
        for pivots in subsets(n, k) {
            // free entries: (r, c) with c > pivots[r], c not a pivot
            let mut free = Vec::new();
            for (r, &pc) in pivots.iter().enumerate() {
                for c in (pc + 1)..n {
                    if !pivots.contains(&c) {
                        free.push((r, c));
                    }
                }
            }
            let total = (p as u128).pow(free.len() as u32);
            for idx in 0..total {
                let mut m = FpMatrix::zero(p, k, n);
                for (r, &pc) in pivots.iter().enumerate() {
                    m.set(r, pc, 1);
                }
                let mut rem = idx;
                for &(r, c) in &free {
                    m.set(r, c, (rem % p as u128) as u64);
                    rem /= p as u128;
                }
                out.push(m);
            }
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..n {
            cur.push(c);
            rec(c + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

pub fn all_submodules(m: &FdModule) -> Vec<Subspace> {
    all_subspaces(m.modulus(), m.dim())
        .into_iter()
        .map(|b| m.subspace_from_rows(&b))
        .filter(|u| m.is_submodule(u))
        .collect()
}

/// Socle as the sum of the minimal nonzero submodules.
pub fn socle_by_lattice(m: &FdModule, subs: &[Subspace]) -> Subspace {
    let minimal: Vec<&Subspace> = subs
        .iter()
        .filter(|u| !u.is_zero())
        .filter(|u| {
            subs.iter()
                .all(|v| v.is_zero() || !u.contains_subspace(v) || v == *u)
        })
        .collect();
    let mut acc = m.zero_subspace();
    for u in minimal {
        acc = acc.sum(u);
    }
    acc
}

/// Radical as the intersection of the maximal proper submodules.
pub fn radical_by_lattice(m: &FdModule, subs: &[Subspace]) -> Subspace {
    let full = m.full_subspace();
    let maximal: Vec<&Subspace> = subs
        .iter()
        .filter(|u| **u != full)
        .filter(|u| {
            subs.iter()
                .all(|v| *v == full || !v.contains_subspace(u) || v == *u)
        })
        .collect();
    let mut acc = full;
    for u in maximal {
        acc = acc.intersect(u);
    }
    acc
}

/// U essential iff it meets every nonzero submodule.
pub fn essential_by_lattice(u: &Subspace, subs: &[Subspace]) -> bool {
    subs.iter()
        .filter(|v| !v.is_zero())
        .all(|v| u.intersect(v).dim() > 0)
}

/// U superfluous iff U + V = M forces V = M.
pub fn superfluous_by_lattice(m: &FdModule, u: &Subspace, subs: &[Subspace]) -> bool {
    let full = m.full_subspace();
    subs.iter()
        .filter(|v| **v != full)
        .all(|v| u.sum(v) != full)
}
