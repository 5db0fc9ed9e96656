//! Primitive Dirichlet characters with values stored as exponents of zeta_order.

use std::sync::Arc;

use arith_core::numth::{divisors, gcd, lcm, reduce};
use arith_core::{CycField, CycInt, LocalElem, LocalRing, TnTable};
use serde::{Deserialize, Serialize};

use crate::error::{CharError, Result};
use crate::units::UnitGroup;

const ZERO: u32 = u32::MAX;

/// chi(a) = zeta_order^{table[a mod conductor]}; always primitive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirichletChar {
    pub conductor: u64,
    pub order: u64,
    table: Vec<u32>,
}

/// JSON form: exponents on the generator system of [`UnitGroup::new`] for the modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharSpec {
    pub modulus: u64,
    pub exponents: Vec<u64>,
}

impl DirichletChar {
    pub fn trivial() -> Self {
        DirichletChar { conductor: 1, order: 1, table: vec![0] }
    }

    /// Character of modulus m from exponents on the generators: chi(g_i) = zeta_{ord_i}^{k_i}.
    pub fn from_exponents(g: &UnitGroup, ks: &[u64]) -> Result<Self> {
        if ks.len() != g.gens.len() {
            return Err(CharError::BadExponents { got: ks.len(), want: g.gens.len() });
        }
        let big = g.exponent();
        let table = (0..g.m)
            .map(|a| match g.log(a as i64) {
                None => ZERO,
                Some(l) => {
                    let mut e = 0u64;
                    for ((&li, &ki), &oi) in l.iter().zip(ks).zip(&g.orders) {
                        e = (e + li * ki % oi * (big / oi)) % big;
                    }
                    e as u32
                }
            })
            .collect();
        Ok(Self::reduce_raw(g.m, big, table))
    }

    pub fn from_spec(s: &CharSpec) -> Result<Self> {
        if s.modulus == 0 {
            return Err(CharError::Invalid("modulus must be positive".into()));
        }
        Self::from_exponents(&UnitGroup::new(s.modulus), &s.exponents)
    }

    /// Build from a raw table mod m with values zeta_ord^{table}, reducing to primitive form.
    fn reduce_raw(m: u64, ord: u64, table: Vec<u32>) -> Self {
        let m = m.max(1);
        let cond = divisors(m)
            .into_iter()
            .find(|&d| (0..m).all(|a| table[a as usize] == ZERO || a % d != 1 % d || table[a as usize] == 0))
            .unwrap();
        let mut t = vec![ZERO; cond as usize];
        for b in 0..cond {
            if gcd(b, cond) != 1 && cond > 1 {
                continue;
            }
            let a = (0..m / cond).map(|k| b + k * cond).find(|&a| table[a as usize] != ZERO).unwrap();
            t[b as usize] = table[a as usize];
        }
        let mut g = ord;
        for &x in &t {
            if x != ZERO {
                g = gcd(g, x as u64);
            }
        }
        let order = ord / g.max(1);
        let step = ord / order;
        for x in t.iter_mut() {
            if *x != ZERO {
                *x = (*x as u64 / step) as u32;
            }
        }
        DirichletChar { conductor: cond, order, table: t }
    }

    /// Exponent k with chi(a) = zeta_order^k; None when chi(a) = 0.
    pub fn exp(&self, a: i64) -> Option<u64> {
        let v = self.table[reduce(a, self.conductor) as usize];
        (v != ZERO).then_some(v as u64)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_even(&self) -> bool {
        self.exp(-1) == Some(0)
    }

    pub fn parity(&self) -> i64 {
        if self.is_even() {
            1
        } else {
            -1
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let m = lcm(self.conductor, o.conductor);
        let ord = lcm(self.order, o.order);
        let table = (0..m as i64)
            .map(|a| match (self.exp(a), o.exp(a)) {
                (Some(x), Some(y)) => ((x * (ord / self.order) + y * (ord / o.order)) % ord) as u32,
                _ => ZERO,
            })
            .collect();
        Self::reduce_raw(m, ord, table)
    }

    pub fn pow(&self, k: u64) -> Self {
        let table = self
            .table
            .iter()
            .map(|&x| if x == ZERO { ZERO } else { ((x as u64 * k) % self.order) as u32 })
            .collect();
        Self::reduce_raw(self.conductor, self.order, table)
    }

    pub fn inv(&self) -> Self {
        self.pow(self.order - 1)
    }

    /// Exponent of p in the conductor.
    pub fn p_exponent(&self, p: u64) -> u32 {
        arith_core::numth::val(self.conductor, p)
    }

    /// Prime-to-p part M_chi of the conductor.
    pub fn tame_conductor(&self, p: u64) -> u64 {
        self.conductor / p.pow(self.p_exponent(p))
    }

    pub fn value_cyc(&self, a: i64, field: &Arc<CycField>) -> Result<CycInt> {
        Ok(match self.exp(a) {
            None => CycInt::zero(field),
            Some(k) => CycInt::zeta(field, self.order, k as i64)?,
        })
    }

    pub fn value_local(&self, a: i64, ring: &Arc<LocalRing>) -> Result<LocalElem> {
        Ok(match self.exp(a) {
            None => LocalElem::zero(ring),
            Some(k) => ring.zeta(self.order, k as i64)?,
        })
    }

    /// Values as complex numbers, zeta_order -> exp(2 pi i / order).
    pub fn value_complex(&self, a: i64) -> (f64, f64) {
        match self.exp(a) {
            None => (0.0, 0.0),
            Some(k) => {
                let t = 2.0 * std::f64::consts::PI * k as f64 / self.order as f64;
                (t.cos(), t.sin())
            }
        }
    }

    /// The pair (chi1, chi2): prime-to-p order part and p-power order part.
    pub fn decompose(&self, p: u64) -> (Self, Self) {
        let v = arith_core::numth::val(self.order, p);
        let pv = p.pow(v);
        let r = self.order / pv;
        // a = 1 mod r, a = 0 mod p^v
        let a = arith_core::numth::crt(&[(1 % r.max(1), r.max(1)), (0, pv)]);
        let b = (self.order + 1 - a % self.order) % self.order;
        (self.pow(a), self.pow(b))
    }

    /// The character a -> zeta_{p^m}^{t_m(a)} of Gal(Q_(m)/Q), conductor p^{m+1}.
    pub fn canonical(p: u64, m: u32) -> Result<Self> {
        if m == 0 {
            return Ok(Self::trivial());
        }
        let tab = TnTable::new(p, m, 1)?;
        let q = p.pow(m + 1);
        let table = (0..q).map(|a| tab.t(a as i64).map_or(ZERO, |t| t as u32)).collect();
        Ok(Self::reduce_raw(q, p.pow(m), table))
    }

    /// Exponents on the generator system of (Z/conductor)^x.
    pub fn to_spec(&self) -> CharSpec {
        let g = UnitGroup::new(self.conductor);
        let exponents = g
            .gens
            .iter()
            .zip(&g.orders)
            .map(|(&x, &o)| {
                let e = self.exp(x as i64).unwrap();
                // chi(g) = zeta_order^e = zeta_o^{e o / order}
                e * o / self.order
            })
            .collect();
        CharSpec { modulus: self.conductor, exponents }
    }
}
