//! Teichmuller decomposition and the discrete logarithm t_n on (Z/p^{n+1}M)^x.

use crate::error::{ArithError, Result};
use crate::numth::{gcd, inv_mod, mul_mod, pow_mod};

/// Split a unit mod p^{n+1} into its Teichmuller part and its principal-unit part.
pub fn teichmuller_decompose(a: i64, p: u64, n: u32) -> Result<(u64, u64)> {
    let q = p.pow(n + 1);
    let a = crate::numth::reduce(a, q);
    if a % p == 0 {
        return Err(ArithError::NotAUnit { value: a as i64, p });
    }
    let w = pow_mod(a, p.pow(n), q);
    let one = mul_mod(a, inv_mod(w, q).unwrap(), q);
    Ok((w, one))
}

/// Table of t_n(a), the exponent with gamma^{t_n(a)} = <a> mod p^{n+1}.
///
/// Only a mod p^{n+1} matters, so entries are stored by that residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TnTable {
    pub p: u64,
    pub n: u32,
    pub m: u64,
    pub generator: u64,
    entries: Vec<u32>,
}

const NONUNIT: u32 = u32::MAX;

impl TnTable {
    /// Table for the standard generator 1+p.
    pub fn new(p: u64, n: u32, m: u64) -> Result<Self> {
        Self::with_generator(p, n, m, 1 + p)
    }

    /// Table for any topological generator gamma = 1 mod p, gamma != 1 mod p^2.
    pub fn with_generator(p: u64, n: u32, m: u64, gamma: u64) -> Result<Self> {
        if p < 3 || !crate::numth::is_prime(p) {
            return Err(ArithError::InvalidParameter(format!("p = {p} must be an odd prime")));
        }
        if m == 0 || m % p == 0 {
            return Err(ArithError::InvalidParameter(format!("tame level {m} must be prime to p")));
        }
        let q = p.pow(n + 1);
        let g = gamma % q;
        if g % p != 1 || (n >= 1 && g % (p * p) == 1) {
            return Err(ArithError::InvalidParameter(format!("{gamma} does not generate 1 + pZ_p")));
        }
        let mut log = vec![NONUNIT; q as usize];
        let mut x = 1u64;
        for t in 0..p.pow(n) {
            log[x as usize] = t as u32;
            x = mul_mod(x, g, q);
        }
        let mut entries = vec![NONUNIT; q as usize];
        for a in 0..q {
            if gcd(a, p) == 1 {
                let (_, one) = teichmuller_decompose(a as i64, p, n)?;
                entries[a as usize] = log[one as usize];
            }
        }
        Ok(TnTable { p, n, m, generator: g, entries })
    }

    pub fn modulus(&self) -> u64 {
        self.p.pow(self.n + 1) * self.m
    }

    /// t_n(a) in Z/p^n; None when a is not prime to p.
    pub fn t(&self, a: i64) -> Option<u64> {
        let q = self.p.pow(self.n + 1);
        let v = self.entries[crate::numth::reduce(a, q) as usize];
        (v != NONUNIT).then_some(v as u64)
    }

    /// Units of Z/p^{n+1}M in increasing order.
    pub fn units(&self) -> Vec<u64> {
        let m = self.modulus();
        (1..m).filter(|&a| gcd(a, m) == 1).collect()
    }
}
