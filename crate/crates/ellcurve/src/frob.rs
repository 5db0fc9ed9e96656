//! Roots of x^2 - a x + l*beta over F_p and F_{p^2}.

use arith_core::numth::{divisors, inv_mod, reduce};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::curve::ECurve;
use crate::error::{CurveError, Result};

/// Element a + b*r of F_p[r]/(r^2 - nonres); b = 0 for F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Fp2 {
    pub a: u64,
    pub b: u64,
    pub p: u64,
    pub nonres: u64,
}

impl Fp2 {
    pub fn new(a: u64, b: u64, p: u64) -> Self {
        Fp2 { a: a % p, b: b % p, p, nonres: least_nonresidue(p) }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_one(&self) -> bool {
        self.a == 1 % self.p && self.b == 0
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.p;
        let a = (self.a * o.a + self.b * o.b % p * self.nonres) % p;
        let b = (self.a * o.b + self.b * o.a) % p;
        Fp2 { a, b, ..*self }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut r = Fp2 { a: 1, b: 0, ..*self };
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        r
    }

    /// Multiplicative order; None for zero.
    pub fn order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let group = if self.b == 0 { self.p - 1 } else { self.p * self.p - 1 };
        divisors(group).into_iter().find(|&k| self.pow(k).is_one())
    }
}

fn least_nonresidue(p: u64) -> u64 {
    (2..p).find(|&x| (1..p).all(|y| y * y % p != x)).unwrap_or(0)
}

fn sqrt_mod(x: u64, p: u64) -> Option<u64> {
    (0..p).find(|&y| y * y % p == x % p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrobeniusRoot {
    pub ell: u64,
    pub p: u64,
    /// root of least multiplicative order (ties: the one listed first)
    pub alpha: Fp2,
    pub beta: Fp2,
    pub in_base_field: bool,
    /// None when alpha = 0
    pub mult_order: Option<u64>,
}

/// Roots of x^2 - a_l x + l*neb mod p.
pub fn frobenius_root(a_ell: i64, ell: u64, p: u64, neb: u64) -> FrobeniusRoot {
    let a = reduce(a_ell, p);
    let c = (ell % p) * (neb % p) % p;
    let disc = (a * a + 4 * (p - c)) % p;
    let inv2 = inv_mod(2, p).unwrap();
    let (r1, r2, base) = match sqrt_mod(disc, p) {
        Some(s) => (
            Fp2::new((a + s) * inv2 % p, 0, p),
            Fp2::new((a + p - s) * inv2 % p, 0, p),
            true,
        ),
        None => {
            // sqrt(disc) = k r with k^2 nonres = disc
            let nr = least_nonresidue(p);
            let k = (1..p).find(|&k| k * k % p * nr % p == disc).unwrap();
            (Fp2::new(a * inv2 % p, k * inv2 % p, p), Fp2::new(a * inv2 % p, (p - k) * inv2 % p, p), false)
        }
    };
    let key = |x: &Fp2| x.order().unwrap_or(u64::MAX);
    let (alpha, beta) = if key(&r2) < key(&r1) { (r2, r1) } else { (r1, r2) };
    FrobeniusRoot { ell, p, alpha, beta, in_base_field: base, mult_order: alpha.order() }
}

/// #E(F_{l^f}) = l^f + 1 - s_f with s_f = a s_{f-1} - l s_{f-2}.
pub fn count_over_extension(a_ell: i64, ell: u64, f: u32) -> BigInt {
    let a = BigInt::from(a_ell);
    let l = BigInt::from(ell);
    let mut s_prev = BigInt::from(2);
    let mut s = a.clone();
    for _ in 1..f {
        let next = &a * &s - &l * &s_prev;
        s_prev = s;
        s = next;
    }
    if f == 0 {
        return BigInt::zero();
    }
    l.pow(f) + 1 - s
}

/// E(F_{l^f})[p] != 0, decided by alpha^f = 1 or beta^f = 1.
pub fn local_p_torsion(e: &ECurve, ell: u64, f: u32, p: u64) -> Result<bool> {
    if e.conductor % ell == 0 {
        return Err(CurveError::BadReduction(ell));
    }
    if ell == p {
        return Err(CurveError::Invalid("l must differ from p".into()));
    }
    let a = e.count_a_ell(ell)?;
    let fr = frobenius_root(a, ell, p, 1);
    Ok(fr.alpha.pow(f as u64).is_one() || fr.beta.pow(f as u64).is_one())
}
