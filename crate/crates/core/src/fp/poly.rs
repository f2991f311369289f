//! Univariate polynomials over GF(p): arithmetic, gcd, and complete
//! factorization (squarefree / distinct-degree / equal-degree).
//!
//! Splitting elements for the equal-degree stage are drawn from a fixed
//! enumeration of polynomials instead of an RNG, so factorizations are
//! reproducible across runs and platforms.

use super::matrix::{addm, invm, mulm, subm};
use crate::error::{Error, Result};

/// Coefficients stored low degree first; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl std::fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0 (mod {})", self.p);
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect();
        write!(f, "{} (mod {})", terms.join(" + "), self.p)
    }
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        FpPoly::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        FpPoly::new(p, vec![0, 1])
    }

    pub fn constant(p: u64, c: u64) -> Self {
        FpPoly::new(p, vec![c])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports 0 by convention of callers that
    /// check `is_zero` first.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn monic(&self) -> FpPoly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = invm(self.leading(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, s: u64) -> FpPoly {
        FpPoly::new(
            self.p,
            self.coeffs.iter().map(|&c| mulm(c, s, self.p)).collect(),
        )
    }

    pub fn add(&self, other: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *o = addm(a, b, self.p);
        }
        FpPoly::new(self.p, out)
    }

    pub fn sub(&self, other: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *o = subm(a, b, self.p);
        }
        FpPoly::new(self.p, out)
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % self.p;
            }
        }
        FpPoly::new(self.p, out)
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn divmod(&self, div: &FpPoly) -> (FpPoly, FpPoly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let p = self.p;
        if self.is_zero() || self.degree() < div.degree() {
            return (FpPoly::zero(p), self.clone());
        }
        let dinv = invm(div.leading(), p);
        let mut rem = self.coeffs.clone();
        let dq = self.degree() - div.degree();
        let mut quot = vec![0u64; dq + 1];
        for k in (0..=dq).rev() {
            let top = rem[k + div.degree()];
            if top == 0 {
                continue;
            }
            let q = mulm(top, dinv, p);
            quot[k] = q;
            for (i, &dc) in div.coeffs.iter().enumerate() {
                rem[k + i] = subm(rem[k + i], mulm(q, dc, p), p);
            }
        }
        (FpPoly::new(p, quot), FpPoly::new(p, rem))
    }

    pub fn rem(&self, div: &FpPoly) -> FpPoly {
        self.divmod(div).1
    }

    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> FpPoly {
        if self.coeffs.len() <= 1 {
            return FpPoly::zero(self.p);
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulm(c, (i as u64) % self.p, self.p))
            .collect();
        FpPoly::new(self.p, out)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = addm(mulm(acc, x, p), c, p);
        }
        acc
    }

    /// self^e mod m via square-and-multiply.
    pub fn powmod(&self, mut e: u128, m: &FpPoly) -> FpPoly {
        let mut base = self.rem(m);
        let mut acc = FpPoly::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Extracts p-th roots of a polynomial whose nonzero terms all have
    /// exponent divisible by p (over GF(p), c^(1/p) = c).
    fn pth_root(&self) -> FpPoly {
        let p = self.p as usize;
        let out = self.coeffs.iter().step_by(p).copied().collect();
        FpPoly::new(self.p, out)
    }

    /// Irreducibility by the Rabin test: x^(p^n) = x mod f and
    /// gcd(x^(p^(n/r)) - x, f) = 1 for every prime r | n.
    pub fn is_irreducible(&self) -> bool {
        if self.is_zero() || self.degree() == 0 {
            return false;
        }
        let n = self.degree();
        if n == 1 {
            return true;
        }
        let f = self.monic();
        let p = self.p;
        let x = FpPoly::x(p);
        for r in prime_divisors(n as u64) {
            let e = (p as u128).pow((n as u32) / (r as u32));
            let xe = x.powmod(e, &f);
            let g = xe.sub(&x).gcd(&f);
            if g.degree() != 0 || g.is_zero() {
                return false;
            }
        }
        let e = (p as u128).pow(n as u32);
        let xe = x.powmod(e, &f);
        xe == x.rem(&f)
    }

    /// Factors a nonzero polynomial into monic irreducibles with
    /// multiplicities, sorted by (degree, coefficients); the returned
    /// unit is the leading coefficient.
    pub fn factor(&self) -> Result<Factored> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let unit = self.leading();
        let mut factors: Vec<(FpPoly, u32)> = Vec::new();
        squarefree_decompose(&self.monic(), 1, &mut factors);
        let mut out: Vec<(FpPoly, u32)> = Vec::new();
        for (sf, mult) in factors {
            for irr in factor_squarefree(&sf) {
                out.push((irr, mult));
            }
        }
        out.sort_by(|a, b| {
            (a.0.degree(), a.0.coeffs())
                .cmp(&(b.0.degree(), b.0.coeffs()))
                .then(a.1.cmp(&b.1))
        });
        // merge duplicates (can arise when squarefree parts share factors
        // across different multiplicities only through the p-th power path)
        let mut merged: Vec<(FpPoly, u32)> = Vec::new();
        for (f, m) in out {
            if let Some(last) = merged.last_mut() {
                if last.0 == f {
                    last.1 += m;
                    continue;
                }
            }
            merged.push((f, m));
        }
        Ok(Factored {
            unit,
            factors: merged,
        })
    }
}

/// Result of `FpPoly::factor`; multiplying everything back recovers the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factored {
    pub unit: u64,
    pub factors: Vec<(FpPoly, u32)>,
}

impl Factored {
    pub fn product(&self, p: u64) -> FpPoly {
        let mut acc = FpPoly::constant(p, self.unit);
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Accumulates the squarefree parts of `f` (monic) with their multiplicities.
fn squarefree_decompose(f: &FpPoly, outer_mult: u32, out: &mut Vec<(FpPoly, u32)>) {
    let p = f.modulus();
    if f.degree() == 0 {
        return;
    }
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f is a p-th power
        let root = f.pth_root();
        squarefree_decompose(&root, outer_mult * p as u32, out);
        return;
    }
    let mut c = f.gcd(&deriv);
    let mut w = f.divmod(&c).0;
    let mut i: u32 = 1;
    while w.degree() > 0 {
        let y = w.gcd(&c);
        let part = w.divmod(&y).0;
        if part.degree() > 0 {
            out.push((part, outer_mult * i));
        }
        w = y.clone();
        c = c.divmod(&y).0;
        i += 1;
    }
    if c.degree() > 0 {
        // remaining factors have multiplicity divisible by p
        let root = c.pth_root();
        squarefree_decompose(&root, outer_mult * p as u32, out);
    }
}

/// Distinct-degree then equal-degree factorization of a squarefree monic f.
fn factor_squarefree(f: &FpPoly) -> Vec<FpPoly> {
    let p = f.modulus();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = FpPoly::x(p);
    let mut h = x.clone();
    let mut d = 0usize;
    while rest.degree() > 0 {
        d += 1;
        if 2 * d > rest.degree() {
            // what is left is irreducible
            out.push(rest.monic());
            break;
        }
        h = h.powmod(p as u128, &rest);
        let g = h.sub(&x).gcd(&rest);
        if g.degree() > 0 {
            split_equal_degree(&g, d, &mut out);
            rest = rest.divmod(&g).0;
            h = h.rem(&rest);
        }
    }
    out
}

/// Splits a product of distinct irreducibles of the same degree d.
fn split_equal_degree(f: &FpPoly, d: usize, out: &mut Vec<FpPoly>) {
    if f.degree() == d {
        out.push(f.monic());
        return;
    }
    let p = f.modulus();
    // deterministic sweep over candidate splitting polynomials
    for idx in 1u64.. {
        let a = poly_from_index(p, idx, 2 * d);
        if a.degree() == 0 {
            continue;
        }
        let g = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = a.clone();
            let mut s = a.clone();
            for _ in 1..d {
                s = s.mul(&s).rem(f);
                t = t.add(&s);
            }
            t.gcd(f)
        } else {
            let e = ((p as u128).pow(d as u32) - 1) / 2;
            let ae = a.powmod(e, f);
            ae.sub(&FpPoly::one(p)).gcd(f)
        };
        if g.degree() > 0 && g.degree() < f.degree() {
            split_equal_degree(&g, d, out);
            split_equal_degree(&f.divmod(&g).0, d, out);
            return;
        }
    }
    unreachable!("splitting sweep is exhaustive over GF(p)[x]");
}

/// The idx-th polynomial of degree < max_deg in base-p digit order.
fn poly_from_index(p: u64, idx: u64, max_deg: usize) -> FpPoly {
    let mut coeffs = Vec::with_capacity(max_deg);
    let mut m = idx;
    while m > 0 && coeffs.len() < max_deg {
        coeffs.push(m % p);
        m /= p;
    }
    FpPoly::new(p, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u64, c: &[u64]) -> FpPoly {
        FpPoly::new(p, c.to_vec())
    }

    #[test]
    fn factor_x2_minus_x_gf2() {
        // x^2 - x = x(x+1) over GF(2): roots 0 and 1
        let f = poly(2, &[0, 1, 1]);
        let fact = f.factor().unwrap();
        assert_eq!(fact.factors.len(), 2);
        assert_eq!(fact.factors[0].0, poly(2, &[0, 1]));
        assert_eq!(fact.factors[1].0, poly(2, &[1, 1]));
        assert_eq!(fact.product(2), f);
    }

    #[test]
    fn x2_x_1_irreducible_gf2() {
        // no roots in GF(2) and degree 2
        let f = poly(2, &[1, 1, 1]);
        assert_ne!(f.eval(0), 0);
        assert_ne!(f.eval(1), 0);
        assert!(f.is_irreducible());
        let fact = f.factor().unwrap();
        assert_eq!(fact.factors, vec![(f.clone(), 1)]);
    }

    #[test]
    fn x4_minus_1_gf5_four_linear_factors() {
        // 1, 2, 3, 4 are the 4th roots of unity mod 5
        let f = poly(5, &[4, 0, 0, 0, 1]);
        for r in 1..5 {
            assert_eq!(f.eval(r), 0);
        }
        let fact = f.factor().unwrap();
        assert_eq!(fact.factors.len(), 4);
        for (g, m) in &fact.factors {
            assert_eq!(g.degree(), 1);
            assert_eq!(*m, 1);
        }
        assert_eq!(fact.product(5), f);
    }

    #[test]
    fn factor_with_multiplicities() {
        // (x+1)^2 * (x^2+x+1) over GF(2)
        let a = poly(2, &[1, 1]);
        let b = poly(2, &[1, 1, 1]);
        let f = a.mul(&a).mul(&b);
        let fact = f.factor().unwrap();
        assert_eq!(fact.factors, vec![(a, 2), (b, 1)]);
        assert_eq!(fact.product(2), f);
    }

    #[test]
    fn factor_pth_power() {
        // (x+2)^3 over GF(3) has zero derivative in disguise
        let a = poly(3, &[2, 1]);
        let f = a.mul(&a).mul(&a);
        let fact = f.factor().unwrap();
        assert_eq!(fact.factors, vec![(a, 3)]);
        assert_eq!(fact.product(3), f);
    }

    #[test]
    fn zero_poly_rejected() {
        assert_eq!(FpPoly::zero(3).factor(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn refactor_roundtrip_sweep() {
        // deterministic sweep standing in for the random refactor suite:
        // every polynomial of degree <= 4 over GF(2), GF(3) re-multiplies
        for p in [2u64, 3] {
            let max = (p as u64).pow(5);
            for idx in 1..max {
                let f = poly_from_index(p, idx, 5);
                if f.is_zero() {
                    continue;
                }
                let fact = f.factor().unwrap();
                assert_eq!(fact.product(p), f, "failed at p={p} idx={idx}");
                for (g, _) in &fact.factors {
                    assert!(g.is_irreducible(), "non-irreducible factor for p={p} idx={idx}");
                }
            }
        }
    }
}
