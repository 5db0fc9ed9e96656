//! Lambda_n = O[T]/((1+T)^{p^n} - 1) over the local coefficient ring, in the T-basis.

use std::sync::Arc;

use arith_core::{LocalElem, LocalRing};

#[derive(Debug, Clone)]
pub struct LambdaNPoly {
    pub p: u64,
    pub n: u32,
    pub ring: Arc<LocalRing>,
    /// coefficients of T^0 .. T^{p^n - 1}
    pub coeffs: Vec<LocalElem>,
    /// known to be exactly zero, not just zero to the working precision
    pub exact_zero: bool,
}

impl PartialEq for LambdaNPoly {
    fn eq(&self, o: &Self) -> bool {
        self.p == o.p && self.n == o.n && self.coeffs == o.coeffs
    }
}

/// Row k of Pascal's triangle mod q, entries 0..=k.
fn binomials(upto: usize, q: u64) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(upto + 1);
    rows.push(vec![1 % q]);
    for k in 1..=upto {
        let prev = &rows[k - 1];
        let mut r = vec![1 % q; k + 1];
        for j in 1..k {
            r[j] = (prev[j - 1] + prev[j]) % q;
        }
        rows.push(r);
    }
    rows
}

fn binom_row(nn: u64, q: u64) -> Vec<u64> {
    // C(nn, j) mod q via multiplicative formula on exact integers
    let mut out = vec![0u64; nn as usize + 1];
    let mut c = num_bigint::BigUint::from(1u32);
    let qb = num_bigint::BigUint::from(q);
    for j in 0..=nn {
        out[j as usize] = (&c % &qb).try_into().unwrap();
        c = c * (nn - j) / (j + 1);
    }
    out
}

/// Reduce a T-polynomial modulo (1+T)^{len} - 1.
fn reduce_mod(mut c: Vec<LocalElem>, len: usize, ring: &Arc<LocalRing>) -> Vec<LocalElem> {
    if c.len() <= len {
        c.resize(len, LocalElem::zero(ring));
        return c;
    }
    let row = binom_row(len as u64, ring.q);
    // T^len = -(sum_{j=1}^{len-1} C(len, j) T^j)
    for k in (len..c.len()).rev() {
        if c[k].is_zero_rep() {
            continue;
        }
        let top = std::mem::replace(&mut c[k], LocalElem::zero(ring));
        for j in 1..len {
            if row[j] != 0 {
                let idx = k - len + j;
                c[idx] = c[idx].sub(&top.scale_u(row[j]));
            }
        }
    }
    c.truncate(len);
    c
}

impl LambdaNPoly {
    pub fn zero(p: u64, n: u32, ring: &Arc<LocalRing>) -> Self {
        LambdaNPoly { p, n, ring: ring.clone(), coeffs: vec![LocalElem::zero(ring); p.pow(n) as usize], exact_zero: true }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// From T-coefficients (length at most p^n).
    pub fn from_coeffs(p: u64, n: u32, ring: &Arc<LocalRing>, mut coeffs: Vec<LocalElem>) -> Self {
        coeffs = reduce_mod(coeffs, p.pow(n) as usize, ring);
        LambdaNPoly { p, n, ring: ring.clone(), coeffs, exact_zero: false }
    }

    pub fn from_ints(p: u64, n: u32, ring: &Arc<LocalRing>, c: &[i64]) -> Self {
        Self::from_coeffs(p, n, ring, c.iter().map(|&x| LocalElem::from_int(ring, x)).collect())
    }

    pub fn constant(p: u64, n: u32, c: LocalElem) -> Self {
        let ring = c.ring.clone();
        Self::from_coeffs(p, n, &ring, vec![c])
    }

    /// sum_t g_t (1+T)^t.
    pub fn from_group(p: u64, n: u32, ring: &Arc<LocalRing>, g: &[LocalElem]) -> Self {
        let len = p.pow(n) as usize;
        let binom = binomials(len.saturating_sub(1), ring.q);
        let mut out = vec![LocalElem::zero(ring); len];
        for (t, gt) in g.iter().enumerate() {
            if gt.is_zero_rep() {
                continue;
            }
            for (k, &b) in binom[t].iter().enumerate() {
                if b != 0 {
                    out[k] = out[k].add(&gt.scale_u(b));
                }
            }
        }
        LambdaNPoly { p, n, ring: ring.clone(), coeffs: out, exact_zero: false }
    }

    /// (1+T)^e for e taken mod p^n.
    pub fn one_plus_t_pow(p: u64, n: u32, ring: &Arc<LocalRing>, e: u64) -> Self {
        let len = p.pow(n);
        let mut g = vec![LocalElem::zero(ring); len as usize];
        g[(e % len) as usize] = LocalElem::one(ring);
        Self::from_group(p, n, ring, &g)
    }

    pub fn is_zero_rep(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero_rep())
    }

    pub fn add(&self, o: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add(b)).collect();
        LambdaNPoly { coeffs, exact_zero: false, ..self.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.sub(b)).collect();
        LambdaNPoly { coeffs, exact_zero: false, ..self.clone() }
    }

    pub fn scale(&self, c: &LocalElem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a.mul(c)).collect();
        LambdaNPoly { coeffs, exact_zero: self.exact_zero, ..self.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let len = self.len();
        let mut raw = vec![LocalElem::zero(&self.ring); 2 * len - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_rep() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero_rep() {
                    raw[i + j] = raw[i + j].add(&a.mul(b));
                }
            }
        }
        let coeffs = reduce_mod(raw, len, &self.ring);
        LambdaNPoly { coeffs, exact_zero: self.exact_zero || o.exact_zero, ..self.clone() }
    }

    /// Reduction modulo (1+T)^{p^{n-1}} - 1.
    pub fn proj(&self) -> Self {
        assert!(self.n >= 1);
        let coeffs = reduce_mod(self.coeffs.clone(), self.p.pow(self.n - 1) as usize, &self.ring);
        LambdaNPoly { n: self.n - 1, coeffs, ..self.clone() }
    }

    /// Same polynomial viewed one level up.
    pub fn lift(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(self.p.pow(self.n + 1) as usize, LocalElem::zero(&self.ring));
        LambdaNPoly { n: self.n + 1, coeffs, ..self.clone() }
    }

    /// omega_n(T) = sum_{j=0}^{p-1} (1+T)^{j p^{n-1}} in Lambda_n.
    pub fn omega(p: u64, n: u32, ring: &Arc<LocalRing>) -> Self {
        let len = p.pow(n) as usize;
        let step = p.pow(n - 1) as usize;
        let mut g = vec![LocalElem::zero(ring); len];
        for j in 0..p as usize {
            g[j * step] = LocalElem::one(ring);
        }
        Self::from_group(p, n, ring, &g)
    }

    /// h -> lift(h) omega_{n+1}.
    pub fn trace_up(&self) -> Self {
        let mut r = self.lift().mul(&Self::omega(self.p, self.n + 1, &self.ring));
        r.exact_zero = self.exact_zero;
        r
    }

    /// Coefficients as lists of stored digits.
    pub fn digits(&self) -> Vec<Vec<u64>> {
        self.coeffs.iter().map(|c| c.coeffs().to_vec()).collect()
    }
}
