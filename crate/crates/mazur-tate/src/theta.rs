//! Theta elements in Z[(Z/p^{n+1}M)^x] and their twists into Lambda_n.

use std::sync::Arc;

use arith_core::numth::gcd;
use arith_core::{CycField, CycInt, LocalElem, LocalRing, TnTable};
use characters::DirichletChar;
use modsym::{EigenSymbol, Sign};
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{MtError, Result};
use crate::group::GroupPoly;
use crate::lambda::LambdaNPoly;

/// Coefficients phi({inf} - {a/p^{n+1}M}) for the units a mod p^{n+1}M.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaElem {
    pub p: u64,
    pub n: u32,
    pub m: u64,
    pub modulus: u64,
    /// increasing
    pub units: Vec<u64>,
    pub values: Vec<i64>,
}

fn units_of(modulus: u64) -> Vec<u64> {
    (1..modulus).filter(|&a| gcd(a, modulus) == 1).collect()
}

impl ThetaElem {
    pub fn from_fn(p: u64, n: u32, m: u64, mut f: impl FnMut(u64) -> i64) -> Result<Self> {
        if m == 0 || m % p == 0 {
            return Err(MtError::Invalid(format!("tame level {m} must be prime to {p}")));
        }
        let modulus = p.pow(n + 1) * m;
        let units = units_of(modulus);
        let values = units.iter().map(|&a| f(a)).collect();
        Ok(ThetaElem { p, n, m, modulus, units, values })
    }

    pub fn coeff(&self, a: i64) -> Option<i64> {
        let r = a.rem_euclid(self.modulus as i64) as u64;
        self.units.binary_search(&r).ok().map(|i| self.values[i])
    }

    pub fn len(&self) -> usize {
        self.units.len()
    }

    pub fn is_empty(&self) -> bool {
        self.units.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        ThetaElem { values: self.values.iter().zip(&o.values).map(|(a, b)| a + b).collect(), ..self.clone() }
    }

    pub fn scale(&self, k: i64) -> Self {
        ThetaElem { values: self.values.iter().map(|a| a * k).collect(), ..self.clone() }
    }

    /// Image at level n-1: sum over lifts.
    pub fn proj(&self) -> Self {
        let small = self.modulus / self.p;
        let mut out = ThetaElem::from_fn(self.p, self.n - 1, self.m, |_| 0).unwrap();
        for (&a, &v) in self.units.iter().zip(&self.values) {
            let i = out.units.binary_search(&(a % small)).unwrap();
            out.values[i] += v;
        }
        out
    }

    /// nu: each sigma_a at level n goes to the sum of its lifts at level n+1.
    pub fn trace_up(&self) -> Self {
        ThetaElem::from_fn(self.p, self.n + 1, self.m, |b| self.coeff(b as i64).unwrap()).unwrap()
    }
}

/// Theta_n^M of the full symbol phi+ + phi-.
pub fn theta_raw(sym: &EigenSymbol, n: u32, m: u64) -> Result<ThetaElem> {
    let modulus = (sym.p.pow(n + 1) * m) as i64;
    ThetaElem::from_fn(sym.p, n, m, |a| sym.eval_full(a as i64, modulus))
}

/// Theta_n^M built from one sign component only.
pub fn theta_signed(sym: &EigenSymbol, n: u32, m: u64, sign: Sign) -> Result<ThetaElem> {
    let modulus = (sym.p.pow(n + 1) * m) as i64;
    ThetaElem::from_fn(sym.p, n, m, |a| sym.eval(a as i64, modulus, sign))
}

/// psi must factor through (Z/p^{n+1}M)^x.
pub fn check_conductor(psi: &DirichletChar, p: u64, n: u32, m: u64) -> Result<()> {
    let tame = psi.tame_conductor(p);
    if m % tame != 0 || psi.p_exponent(p) > n + 1 {
        return Err(MtError::ConductorMismatch { conductor: psi.conductor, modulus: p.pow(n + 1) * m });
    }
    Ok(())
}

/// Cyclotomic field holding the values of every character listed and zeta_{p^n}.
pub fn field_for(p: u64, n: u32, chars: &[DirichletChar]) -> Result<Arc<CycField>> {
    let mut orders: Vec<u64> = chars.iter().map(|c| c.order).collect();
    orders.push(p.pow(n));
    Ok(CycField::for_orders(p, &orders)?)
}

pub fn ring_for(p: u64, n: u32, chars: &[DirichletChar], b: u32) -> Result<Arc<LocalRing>> {
    let orders: Vec<u64> = chars.iter().map(|c| c.order).collect();
    Ok(LocalRing::for_orders(p, &orders, n, b)?)
}

fn check_table(theta: &ThetaElem, table: &TnTable) -> Result<()> {
    if table.p != theta.p || table.n != theta.n {
        return Err(MtError::Invalid(format!(
            "t-table is for (p, n) = ({}, {}), element is at ({}, {})",
            table.p, table.n, theta.p, theta.n
        )));
    }
    Ok(())
}

/// sum_a c_a psi(a) sigma^{t_n(a)}, exactly.
pub fn twist_exact(theta: &ThetaElem, psi: &DirichletChar, table: &TnTable, field: &Arc<CycField>) -> Result<GroupPoly> {
    check_table(theta, table)?;
    check_conductor(psi, theta.p, theta.n, theta.m)?;
    if !field.contains_order(psi.order) {
        return Err(MtError::Invalid(format!("field Q(zeta_{}) lacks values of order {}", field.m, psi.order)));
    }
    let p = theta.p;
    let len = p.pow(theta.n) as usize;
    let mm = field.m as usize;
    let step = (field.m / psi.order) as usize;
    let mut raw = vec![vec![BigInt::zero(); mm]; len];
    for (&a, &c) in theta.units.iter().zip(&theta.values) {
        if c == 0 {
            continue;
        }
        let Some(k) = psi.exp(a as i64) else { continue };
        let t = table.t(a as i64).unwrap() as usize;
        raw[t][k as usize * step] += c;
    }
    let g = raw.into_iter().map(|r| CycInt::from_raw(field, r)).collect();
    Ok(GroupPoly { p, n: theta.n, field: field.clone(), g })
}

/// The same sum in the local ring, returned in the T-basis.
pub fn twist(theta: &ThetaElem, psi: &DirichletChar, table: &TnTable, ring: &Arc<LocalRing>) -> Result<LambdaNPoly> {
    check_table(theta, table)?;
    check_conductor(psi, theta.p, theta.n, theta.m)?;
    let len = theta.p.pow(theta.n) as usize;
    let zetas = (0..psi.order).map(|k| ring.zeta(psi.order, k as i64)).collect::<arith_core::Result<Vec<_>>>()?;
    let mut g = vec![LocalElem::zero(ring); len];
    let mut any = false;
    for (&a, &c) in theta.units.iter().zip(&theta.values) {
        if c == 0 {
            continue;
        }
        let Some(k) = psi.exp(a as i64) else { continue };
        let t = table.t(a as i64).unwrap() as usize;
        g[t] = g[t].add(&zetas[k as usize].scale(c));
        any = true;
    }
    let mut out = LambdaNPoly::from_group(theta.p, theta.n, ring, &g);
    out.exact_zero = !any;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ellcurve::by_label;

    #[test]
    fn support_sizes() {
        let e = by_label("11a1").unwrap();
        let sym = EigenSymbol::build(&e, 3).unwrap();
        assert_eq!(theta_raw(&sym, 0, 1).unwrap().len(), 2);
        assert_eq!(theta_raw(&sym, 1, 1).unwrap().len(), 6);
        assert_eq!(theta_raw(&sym, 2, 1).unwrap().len(), 18);
        assert_eq!(theta_raw(&sym, 1, 2).unwrap().len(), 6);
    }

    #[test]
    fn proj_after_trace_is_p() {
        let th = ThetaElem::from_fn(3, 1, 2, |a| a as i64 % 7 - 3).unwrap();
        assert_eq!(th.trace_up().proj(), th.scale(3));
    }
}
