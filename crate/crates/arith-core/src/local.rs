//! The coefficient ring O/p^B with O = Z_p[zeta_d, zeta_{p^s}].
//!
//! O is presented as W[pi]/(Phi_{p^s}(1+pi)) where W = Z_p[x]/(u(x)) is unramified
//! and u is the Hensel lift of one irreducible factor of Phi_d mod p. Elements
//! carry coefficients mod p^B on the basis x^i pi^j, i < deg u, j < phi(p^s).

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{ArithError, Result};
use crate::numth::{egcd, euler_phi, gcd, mul_mod, mult_order, reduce};
use crate::rat::{rat_mod, Rat};

fn poly_mulmod(a: &[u64], b: &[u64], modp: &[u64], q: u64) -> Vec<u64> {
    let f = modp.len() - 1;
    let mut raw = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            raw[i + j] = (raw[i + j] + mul_mod(x, y, q)) % q;
        }
    }
    for i in (f..raw.len()).rev() {
        let c = raw[i];
        if c == 0 {
            continue;
        }
        raw[i] = 0;
        for k in 0..f {
            let t = mul_mod(c, modp[k], q);
            raw[i - f + k] = (raw[i - f + k] + q - t) % q;
        }
    }
    raw.truncate(f);
    raw.resize(f, 0);
    raw
}

fn poly_divides_mod_p(a: &[u64], b: &[u64], p: u64) -> bool {
    // does monic b divide a over F_p
    let db = b.len() - 1;
    let mut r: Vec<u64> = a.iter().map(|c| c % p).collect();
    if r.len() <= db {
        return r.iter().all(|&c| c == 0);
    }
    for i in (db..r.len()).rev() {
        let c = r[i];
        if c == 0 {
            continue;
        }
        for k in 0..=db {
            r[i - db + k] = (r[i - db + k] + p * p - c * b[k] % p) % p;
        }
    }
    r.iter().all(|&c| c == 0)
}

/// Monic lift mod p^B of the least irreducible factor of Phi_d mod p.
///
/// Candidates are ordered by their coefficient lists read from degree f-1 down to 0.
/// The returned coefficients are low degree first, reduced into [0, p^B).
pub fn hensel_factor(d: u64, p: u64, b: u32) -> Result<Vec<u64>> {
    if gcd(d, p) != 1 {
        return Err(ArithError::InvalidParameter(format!("{p} divides {d}")));
    }
    let q = p.checked_pow(b).ok_or_else(|| ArithError::InvalidParameter("p^B overflows".into()))?;
    let f = if d == 1 { 1 } else { mult_order(p % d, d).unwrap() as usize };
    let phi: Vec<u64> = crate::poly::cyclotomic(d).iter().map(|&c| reduce(c, p)).collect();
    let total = p.pow(f as u32);
    let mut ubar = None;
    for idx in 0..total {
        // digit of degree f-1 is most significant
        let mut cand = vec![0u64; f + 1];
        let mut r = idx;
        for k in 0..f {
            cand[k] = r % p;
            r /= p;
        }
        cand[f] = 1;
        if poly_divides_mod_p(&phi, &cand, p) {
            ubar = Some(cand);
            break;
        }
    }
    let ubar = ubar.expect("Phi_d has a factor of degree f mod p");
    if f == 1 {
        // Teichmuller lift of the root
        let root = (p - ubar[0]) % p;
        let mut z = root % q;
        for _ in 0..b {
            z = crate::numth::pow_mod(z, p, q);
        }
        return Ok(vec![(q - z) % q, 1]);
    }
    let modp: Vec<u64> = ubar.clone();
    let pf = p.pow(f as u32);
    let mut z = vec![0u64; f];
    z[1] = 1;
    for _ in 0..b {
        z = poly_pow(&z, pf, &modp, q);
    }
    // conjugates z^{p^i}
    let mut conj = vec![z.clone()];
    for _ in 1..f {
        let last = conj.last().unwrap().clone();
        conj.push(poly_pow(&last, p, &modp, q));
    }
    // prod (Y - c_i) with coefficients in R = (Z/q)[X]/(ubar)
    let mut prod: Vec<Vec<u64>> = vec![{
        let mut one = vec![0u64; f];
        one[0] = 1;
        one
    }];
    for c in &conj {
        let mut next = vec![vec![0u64; f]; prod.len() + 1];
        for (k, coef) in prod.iter().enumerate() {
            for t in 0..f {
                next[k + 1][t] = (next[k + 1][t] + coef[t]) % q;
            }
            let cc = poly_mulmod(coef, c, &modp, q);
            for t in 0..f {
                next[k][t] = (next[k][t] + q - cc[t]) % q;
            }
        }
        prod = next;
    }
    let mut u = Vec::with_capacity(f + 1);
    for coef in &prod {
        if coef[1..].iter().any(|&c| c != 0) {
            return Err(ArithError::InvalidParameter("Frobenius orbit polynomial not rational".into()));
        }
        u.push(coef[0]);
    }
    Ok(u)
}

fn poly_pow(a: &[u64], mut e: u64, modp: &[u64], q: u64) -> Vec<u64> {
    let f = modp.len() - 1;
    let mut r = vec![0u64; f];
    r[0] = 1;
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            r = poly_mulmod(&r, &base, modp, q);
        }
        base = poly_mulmod(&base, &base, modp, q);
        e >>= 1;
    }
    r
}

#[derive(Clone, PartialEq, Eq)]
pub struct LocalRing {
    pub p: u64,
    pub d: u64,
    pub s: u32,
    pub b: u32,
    pub q: u64,
    /// deg of the unramified modulus
    pub f: usize,
    /// ramification index phi(p^s)
    pub e: usize,
    pub unram_modulus: Vec<u64>,
    eis: Vec<u64>,
    zeta_pows: Vec<Vec<u64>>,
}

impl fmt::Debug for LocalRing {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "LocalRing(p={}, d={}, s={}, B={})", self.p, self.d, self.s, self.b)
    }
}

pub const DEFAULT_PRECISION: u32 = 20;

impl LocalRing {
    pub fn new(p: u64, d: u64, s: u32, b: u32) -> Result<Arc<Self>> {
        if p < 3 || !crate::numth::is_prime(p) {
            return Err(ArithError::InvalidParameter(format!("p = {p} must be an odd prime")));
        }
        if b == 0 {
            return Err(ArithError::InvalidParameter("precision B must be positive".into()));
        }
        let q = p
            .checked_pow(b)
            .filter(|&q| q < (1u64 << 62))
            .ok_or_else(|| ArithError::InvalidParameter(format!("{p}^{b} exceeds 62 bits")))?;
        let u = hensel_factor(d, p, b)?;
        let f = u.len() - 1;
        let e = if s == 0 { 1 } else { euler_phi(p.pow(s)) as usize };
        let eis = eisenstein(p, s, q);
        let mut ring = LocalRing { p, d, s, b, q, f, e, unram_modulus: u, eis, zeta_pows: vec![] };
        let m = d * p.pow(s);
        let ps = p.pow(s);
        let zd = ring.x_elem();
        let zp = ring.one_plus_pi();
        let (_, a, bb) = egcd(d as i128, ps as i128);
        let alpha = (a.rem_euclid(ps as i128)) as u64;
        let beta = (bb.rem_euclid(d as i128)) as u64;
        let zm = ring.raw_mul(&ring.raw_pow(&zp, alpha), &ring.raw_pow(&zd, beta));
        let mut pows = Vec::with_capacity(m as usize);
        let mut cur = ring.raw_one();
        for _ in 0..m {
            pows.push(cur.clone());
            cur = ring.raw_mul(&cur, &zm);
        }
        debug_assert_eq!(cur, ring.raw_one());
        ring.zeta_pows = pows;
        Ok(Arc::new(ring))
    }

    /// Ring large enough for roots of unity of every listed order and for zeta_{p^s_min}.
    pub fn for_orders(p: u64, orders: &[u64], s_min: u32, b: u32) -> Result<Arc<Self>> {
        let mut d = 1u64;
        let mut s = s_min;
        for &o in orders {
            let v = crate::numth::val(o, p);
            s = s.max(v);
            d = crate::numth::lcm(d, o / p.pow(v));
        }
        Self::new(p, d, s, b)
    }

    pub fn m(&self) -> u64 {
        self.d * self.p.pow(self.s)
    }

    fn len(&self) -> usize {
        self.f * self.e
    }

    fn raw_one(&self) -> Vec<u64> {
        let mut v = vec![0u64; self.len()];
        v[0] = 1;
        v
    }

    fn x_elem(&self) -> Vec<u64> {
        let mut v = vec![0u64; self.len()];
        if self.f == 1 {
            v[0] = (self.q - self.unram_modulus[0]) % self.q;
        } else {
            v[self.e] = 1;
        }
        v
    }

    fn one_plus_pi(&self) -> Vec<u64> {
        let mut v = self.raw_one();
        if self.s > 0 {
            if self.e == 1 {
                // p = 2 only; unreachable for odd p
                v[0] = (v[0] + 1) % self.q;
            } else {
                v[1] = 1;
            }
        }
        v
    }

    fn raw_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let (f, e, q) = (self.f, self.e, self.q);
        let w = 2 * e - 1;
        let mut t = vec![0u128; (2 * f - 1) * w];
        for i1 in 0..f {
            for j1 in 0..e {
                let x = a[i1 * e + j1];
                if x == 0 {
                    continue;
                }
                for i2 in 0..f {
                    let row = (i1 + i2) * w + j1;
                    for j2 in 0..e {
                        let y = b[i2 * e + j2];
                        if y != 0 {
                            let slot = &mut t[row + j2];
                            *slot = (*slot + x as u128 * y as u128) % q as u128;
                        }
                    }
                }
            }
        }
        let qq = q as u128;
        // reduce pi-degree
        for i in 0..(2 * f - 1) {
            for j in (e..w).rev() {
                let c = t[i * w + j] % qq;
                if c == 0 {
                    continue;
                }
                t[i * w + j] = 0;
                for k in 0..e {
                    let sub = c * self.eis[k] as u128 % qq;
                    let slot = &mut t[i * w + j - e + k];
                    *slot = (*slot + qq - sub) % qq;
                }
            }
        }
        // reduce x-degree
        for i in (f..(2 * f - 1)).rev() {
            for j in 0..e {
                let c = t[i * w + j] % qq;
                if c == 0 {
                    continue;
                }
                t[i * w + j] = 0;
                for k in 0..f {
                    let sub = c * self.unram_modulus[k] as u128 % qq;
                    let slot = &mut t[(i - f + k) * w + j];
                    *slot = (*slot + qq - sub) % qq;
                }
            }
        }
        let mut out = vec![0u64; f * e];
        for i in 0..f {
            for j in 0..e {
                out[i * e + j] = (t[i * w + j] % qq) as u64;
            }
        }
        out
    }

    fn raw_pow(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut r = self.raw_one();
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                r = self.raw_mul(&r, &base);
            }
            base = self.raw_mul(&base, &base);
            e >>= 1;
        }
        r
    }

    /// zeta_order^k with zeta_order = zeta_m^{m/order}; order must divide d p^s.
    pub fn zeta(self: &Arc<Self>, order: u64, k: i64) -> Result<LocalElem> {
        let m = self.m();
        if order == 0 || m % order != 0 {
            return Err(ArithError::InvalidParameter(format!(
                "root of unity of order {order} not in ring with m = {m}"
            )));
        }
        let idx = reduce(k, order) * (m / order);
        Ok(LocalElem { ring: self.clone(), c: self.zeta_pows[idx as usize].clone() })
    }

    /// The uniformizer zeta_{p^s} - 1 (or p when s = 0).
    pub fn uniformizer(self: &Arc<Self>) -> LocalElem {
        let mut c = vec![0u64; self.len()];
        if self.s == 0 {
            c[0] = self.p % self.q;
        } else {
            c[1] = 1;
        }
        LocalElem { ring: self.clone(), c }
    }

    pub fn known_precision(&self) -> Rat {
        Rat::from_integer(BigInt::from(self.b))
    }
}

/// Phi_{p^s}(1 + pi) mod q, monic of degree phi(p^s).
fn eisenstein(p: u64, s: u32, q: u64) -> Vec<u64> {
    if s == 0 {
        return vec![0, 1];
    }
    let step = p.pow(s - 1) as usize;
    let top = (p as usize - 1) * step;
    // binomial rows mod q
    let mut out = vec![0u64; top + 1];
    let mut row = vec![1u64];
    for nexp in 0..=top {
        if nexp % step == 0 {
            for (k, &c) in row.iter().enumerate() {
                out[k] = (out[k] + c) % q;
            }
        }
        let mut next = vec![1u64; row.len() + 1];
        for k in 1..row.len() {
            next[k] = (row[k - 1] + row[k]) % q;
        }
        row = next;
    }
    out
}

#[derive(Clone, PartialEq, Eq)]
pub struct LocalElem {
    pub ring: Arc<LocalRing>,
    c: Vec<u64>,
}

impl fmt::Debug for LocalElem {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "{:?}", self.c)
    }
}

impl LocalElem {
    pub fn zero(ring: &Arc<LocalRing>) -> Self {
        LocalElem { ring: ring.clone(), c: vec![0; ring.len()] }
    }

    pub fn one(ring: &Arc<LocalRing>) -> Self {
        Self::from_int(ring, 1)
    }

    pub fn from_int(ring: &Arc<LocalRing>, n: i64) -> Self {
        let mut z = Self::zero(ring);
        z.c[0] = reduce(n, ring.q);
        z
    }

    pub fn from_big(ring: &Arc<LocalRing>, n: &BigInt) -> Self {
        let mut z = Self::zero(ring);
        z.c[0] = n.mod_floor(&BigInt::from(ring.q)).to_u64().unwrap();
        z
    }

    pub fn from_rat(ring: &Arc<LocalRing>, r: &Rat) -> Result<Self> {
        let mut z = Self::zero(ring);
        z.c[0] = rat_mod(r, ring.q)?;
        Ok(z)
    }

    /// Coefficient of x^i pi^j in [0, p^B).
    pub fn coeff(&self, i: usize, j: usize) -> u64 {
        self.c[i * self.ring.e + j]
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn add(&self, o: &Self) -> Self {
        let q = self.ring.q;
        let c = self.c.iter().zip(&o.c).map(|(a, b)| (a + b) % q).collect();
        LocalElem { ring: self.ring.clone(), c }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let q = self.ring.q;
        let c = self.c.iter().zip(&o.c).map(|(a, b)| (a + q - b) % q).collect();
        LocalElem { ring: self.ring.clone(), c }
    }

    pub fn neg(&self) -> Self {
        let q = self.ring.q;
        LocalElem { ring: self.ring.clone(), c: self.c.iter().map(|a| (q - a) % q).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        LocalElem { ring: self.ring.clone(), c: self.ring.raw_mul(&self.c, &o.c) }
    }

    pub fn scale(&self, n: i64) -> Self {
        let q = self.ring.q;
        let k = reduce(n, q);
        LocalElem { ring: self.ring.clone(), c: self.c.iter().map(|&a| mul_mod(a, k, q)).collect() }
    }

    pub fn scale_u(&self, k: u64) -> Self {
        let q = self.ring.q;
        LocalElem { ring: self.ring.clone(), c: self.c.iter().map(|&a| mul_mod(a, k % q, q)).collect() }
    }

    pub fn scale_big(&self, n: &BigInt) -> Self {
        let k = n.mod_floor(&BigInt::from(self.ring.q)).to_u64().unwrap();
        self.scale_u(k)
    }

    pub fn pow(&self, e: u64) -> Self {
        LocalElem { ring: self.ring.clone(), c: self.ring.raw_pow(&self.c, e) }
    }

    /// True when every stored digit is zero, i.e. the element is 0 mod p^B.
    pub fn is_zero_rep(&self) -> bool {
        self.c.iter().all(|&a| a == 0)
    }

    /// Reduction modulo the maximal ideal vanishes.
    pub fn is_zero_mod_pi(&self) -> bool {
        let (f, e, p) = (self.ring.f, self.ring.e, self.ring.p);
        (0..f).all(|i| self.c[i * e] % p == 0)
    }

    /// Normalized valuation (ord_p(p) = 1), in (1/e)Z.
    pub fn val(&self) -> Result<Rat> {
        let (f, e, p) = (self.ring.f, self.ring.e, self.ring.p);
        let mut best: Option<Rat> = None;
        for j in 0..e {
            for i in 0..f {
                let a = self.c[i * e + j];
                if a == 0 {
                    continue;
                }
                let v = crate::numth::val(a, p) as i64 * e as i64 + j as i64;
                let r = Rat::new(BigInt::from(v), BigInt::from(e as i64));
                if best.as_ref().is_none_or(|b| &r < b) {
                    best = Some(r);
                }
            }
        }
        match best {
            Some(v) if v < self.ring.known_precision() => Ok(v),
            _ => Err(ArithError::PrecisionExhausted { cap: self.ring.b }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn hensel_examples() {
        let u = hensel_factor(1, 3, 5).unwrap();
        assert_eq!(u, vec![243 - 1, 1]);
        let u4 = hensel_factor(4, 3, 2).unwrap();
        assert_eq!(u4, vec![1, 0, 1]);
        let u8 = hensel_factor(8, 3, 1).unwrap();
        assert_eq!(u8, vec![2, 1, 1]);
    }

    #[test]
    fn basic_valuations() {
        let r = LocalRing::new(5, 1, 1, 20).unwrap();
        assert_eq!(LocalElem::from_int(&r, 5).val().unwrap(), rat(1, 1));
        let one_minus_zeta = LocalElem::one(&r).sub(&r.zeta(5, 1).unwrap());
        assert_eq!(one_minus_zeta.val().unwrap(), rat(1, 4));
        let r2 = LocalRing::new(3, 4, 0, 10).unwrap();
        assert_eq!(r2.zeta(4, 1).unwrap().val().unwrap(), rat(0, 1));
        assert!(LocalElem::zero(&r2).val().is_err());
    }

    #[test]
    fn zeta_has_exact_order() {
        let r = LocalRing::new(3, 8, 2, 12).unwrap();
        let z = r.zeta(72, 1).unwrap();
        assert_eq!(z.pow(72), LocalElem::one(&r));
        assert_ne!(z.pow(36), LocalElem::one(&r));
        assert_ne!(z.pow(24), LocalElem::one(&r));
    }
}
