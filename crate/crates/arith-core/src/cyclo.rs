//! Cyclotomic integers in Z[zeta_d, zeta_{p^s}] = Z[zeta_m], m = d p^s.

use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::error::{ArithError, Result};
use crate::local::{LocalElem, LocalRing};
use crate::numth::{euler_phi, gcd};
use crate::poly::cyclotomic;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycField {
    pub p: u64,
    pub d: u64,
    pub s: u32,
    pub m: u64,
    phi: Vec<i64>,
}

impl CycField {
    pub fn new(p: u64, d: u64, s: u32) -> Result<Arc<Self>> {
        if d == 0 || gcd(d, p) != 1 {
            return Err(ArithError::InvalidParameter(format!("tame order {d} must be prime to {p}")));
        }
        let m = d * p.pow(s);
        Ok(Arc::new(CycField { p, d, s, m, phi: cyclotomic(m) }))
    }

    /// Smallest field holding all roots of unity of the given orders.
    pub fn for_orders(p: u64, orders: &[u64]) -> Result<Arc<Self>> {
        let mut d = 1u64;
        let mut s = 0u32;
        for &o in orders {
            let v = crate::numth::val(o, p);
            s = s.max(v);
            d = crate::numth::lcm(d, o / p.pow(v));
        }
        Self::new(p, d, s)
    }

    pub fn degree(&self) -> usize {
        euler_phi(self.m) as usize
    }

    pub fn contains_order(&self, order: u64) -> bool {
        self.m % order == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycInt {
    pub field: Arc<CycField>,
    pub coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn zero(field: &Arc<CycField>) -> Self {
        CycInt { field: field.clone(), coeffs: vec![BigInt::zero(); field.degree()] }
    }

    pub fn from_int(field: &Arc<CycField>, n: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(field);
        z.coeffs[0] = n.into();
        z
    }

    /// zeta_order^k, where zeta_order = zeta_m^{m/order}.
    pub fn zeta(field: &Arc<CycField>, order: u64, k: i64) -> Result<Self> {
        if !field.contains_order(order) {
            return Err(ArithError::InvalidParameter(format!(
                "order {order} root of unity not in Q(zeta_{})",
                field.m
            )));
        }
        let e = crate::numth::reduce(k, order) * (field.m / order);
        let mut raw = vec![BigInt::zero(); e as usize + 1];
        raw[e as usize] = BigInt::from(1);
        Ok(Self::reduce_raw(field, raw))
    }

    /// Element sum raw[k] zeta_m^k for any length of `raw`.
    pub fn from_raw(field: &Arc<CycField>, mut raw: Vec<BigInt>) -> Self {
        let m = field.m as usize;
        if raw.len() > m {
            for k in m..raw.len() {
                let c = std::mem::take(&mut raw[k]);
                raw[k % m] += c;
            }
            raw.truncate(m);
        }
        Self::reduce_raw(field, raw)
    }

    fn reduce_raw(field: &Arc<CycField>, mut raw: Vec<BigInt>) -> Self {
        let deg = field.degree();
        let phi = &field.phi;
        if raw.len() > deg {
            for i in (deg..raw.len()).rev() {
                if raw[i].is_zero() {
                    continue;
                }
                let c = std::mem::take(&mut raw[i]);
                for (k, &ck) in phi.iter().enumerate().take(deg) {
                    if ck != 0 {
                        raw[i - deg + k] -= &c * ck;
                    }
                }
            }
            raw.truncate(deg);
        }
        raw.resize(deg, BigInt::zero());
        CycInt { field: field.clone(), coeffs: raw }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        CycInt { field: self.field.clone(), coeffs }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect();
        CycInt { field: self.field.clone(), coeffs }
    }

    pub fn neg(&self) -> Self {
        CycInt { field: self.field.clone(), coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        CycInt { field: self.field.clone(), coeffs: self.coeffs.iter().map(|a| a * n).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let deg = self.field.degree();
        let mut raw = vec![BigInt::zero(); 2 * deg];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        Self::reduce_raw(&self.field, raw)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut r = Self::from_int(&self.field, 1);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        r
    }

    /// Complex value under zeta_m -> exp(2 pi i / m).
    pub fn to_complex(&self) -> Complex64 {
        let m = self.field.m as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold(Complex64::new(0.0, 0.0), |acc, (k, c)| {
                let ang = 2.0 * std::f64::consts::PI * k as f64 / m;
                acc + Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), ang)
            })
    }

    /// Image in a local ring containing zeta_m.
    pub fn to_local(&self, ring: &Arc<LocalRing>) -> Result<LocalElem> {
        let z = ring.zeta(self.field.m, 1)?;
        let mut acc = LocalElem::zero(ring);
        let mut pw = LocalElem::one(ring);
        for c in &self.coeffs {
            if !c.is_zero() {
                acc = acc.add(&pw.scale_big(c));
            }
            pw = pw.mul(&z);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity_sum_to_zero() {
        let f = CycField::new(3, 1, 2).unwrap();
        let mut s = CycInt::zero(&f);
        for k in 0..9 {
            s = s.add(&CycInt::zeta(&f, 9, k).unwrap());
        }
        assert!(s.is_zero());
        let z = CycInt::zeta(&f, 9, 1).unwrap();
        assert_eq!(z.pow(9), CycInt::from_int(&f, 1));
        assert_ne!(z.pow(3), CycInt::from_int(&f, 1));
    }

    #[test]
    fn complex_embedding() {
        let f = CycField::new(5, 4, 1).unwrap();
        let i = CycInt::zeta(&f, 4, 1).unwrap();
        let c = i.to_complex();
        assert!((c.re).abs() < 1e-12 && (c.im - 1.0).abs() < 1e-12);
    }

    #[test]
    fn quadratic_gauss_sum_mod_5() {
        let f = CycField::new(5, 1, 1).unwrap();
        let mut tau = CycInt::zero(&f);
        for a in 1..5i64 {
            let leg = if a == 1 || a == 4 { 1 } else { -1 };
            tau = tau.add(&CycInt::zeta(&f, 5, a).unwrap().scale(&BigInt::from(leg)));
        }
        assert_eq!(tau.mul(&tau), CycInt::from_int(&f, 5));
    }
}
