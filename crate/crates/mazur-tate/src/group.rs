//! Exact elements of O[Z/p^n] in the group basis: sum_t g_t sigma^t, sigma <-> 1 + T.

use std::sync::Arc;

use arith_core::{CycField, CycInt, LocalRing};
use num_bigint::BigInt;

use crate::error::Result;
use crate::lambda::LambdaNPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPoly {
    pub p: u64,
    pub n: u32,
    pub field: Arc<CycField>,
    pub g: Vec<CycInt>,
}

impl GroupPoly {
    pub fn zero(p: u64, n: u32, field: &Arc<CycField>) -> Self {
        GroupPoly { p, n, field: field.clone(), g: vec![CycInt::zero(field); p.pow(n) as usize] }
    }

    pub fn len(&self) -> usize {
        self.g.len()
    }

    pub fn is_empty(&self) -> bool {
        self.g.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.g.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        GroupPoly { g: self.g.iter().zip(&o.g).map(|(a, b)| a.add(b)).collect(), ..self.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        GroupPoly { g: self.g.iter().zip(&o.g).map(|(a, b)| a.sub(b)).collect(), ..self.clone() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        GroupPoly { g: self.g.iter().map(|a| a.scale(k)).collect(), ..self.clone() }
    }

    pub fn scale_cyc(&self, k: &CycInt) -> Self {
        GroupPoly { g: self.g.iter().map(|a| a.mul(k)).collect(), ..self.clone() }
    }

    /// Convolution in the cyclic group.
    pub fn mul(&self, o: &Self) -> Self {
        let len = self.len();
        let mut out = vec![CycInt::zero(&self.field); len];
        for (i, a) in self.g.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.g.iter().enumerate() {
                if !b.is_zero() {
                    let k = (i + j) % len;
                    out[k] = out[k].add(&a.mul(b));
                }
            }
        }
        GroupPoly { g: out, ..self.clone() }
    }

    /// Image under Z/p^n -> Z/p^{n-1}.
    pub fn proj(&self) -> Self {
        let len = self.len() / self.p as usize;
        let mut out = vec![CycInt::zero(&self.field); len];
        for (t, a) in self.g.iter().enumerate() {
            out[t % len] = out[t % len].add(a);
        }
        GroupPoly { n: self.n - 1, g: out, ..self.clone() }
    }

    /// Trace from level n to n+1: each sigma^t goes to the sum of its preimages.
    pub fn trace_up(&self) -> Self {
        let len = self.len() * self.p as usize;
        let g = (0..len).map(|t| self.g[t % self.len()].clone()).collect();
        GroupPoly { n: self.n + 1, g, ..self.clone() }
    }

    /// Value at T = zeta_{p^i} - 1.
    pub fn eval_at_root(&self, i: u32) -> Result<CycInt> {
        let order = self.p.pow(i);
        let mut acc = CycInt::zero(&self.field);
        for (t, a) in self.g.iter().enumerate() {
            if !a.is_zero() {
                acc = acc.add(&a.mul(&CycInt::zeta(&self.field, order, t as i64)?));
            }
        }
        Ok(acc)
    }

    /// Local image in T-basis.
    pub fn to_lambda(&self, ring: &Arc<LocalRing>) -> Result<LambdaNPoly> {
        let loc = self.g.iter().map(|c| c.to_local(ring)).collect::<arith_core::Result<Vec<_>>>()?;
        let mut l = LambdaNPoly::from_group(self.p, self.n, ring, &loc);
        l.exact_zero = self.is_zero();
        Ok(l)
    }
}
