//! Euler factors h_l and the sequence c_m.

use std::sync::Arc;

use arith_core::{rat, rat_int, CycField, CycInt, LocalElem, LocalRing, Rat, TnTable};
use characters::DirichletChar;
use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{MtError, Result};
use crate::group::GroupPoly;
use crate::lambda::LambdaNPoly;

/// (t_n(l), exponent of psi(l)); t is taken in Z/p^n, so (1+T)^{-t} is exponent p^n - t.
fn ell_data(ell: u64, psi: &DirichletChar, table: &TnTable) -> Result<(u64, u64)> {
    let k = psi.exp(ell as i64).ok_or(MtError::ConductorError(ell))?;
    let t = table.t(ell as i64).ok_or(MtError::BadAuxiliaryPrime(ell))?;
    Ok((t, k))
}

/// h_l = a_l - psi(l) sigma^t - eps l^{k-2} psi(l)^{-1} sigma^{-t}, exactly.
pub fn euler_h_exact(
    ell: u64,
    psi: &DirichletChar,
    table: &TnTable,
    a_ell: i64,
    eps_ell: i64,
    k: u32,
    field: &Arc<CycField>,
) -> Result<GroupPoly> {
    let (t, e) = ell_data(ell, psi, table)?;
    let p = table.p;
    let n = table.n;
    let len = p.pow(n);
    let mut h = GroupPoly::zero(p, n, field);
    h.g[0] = CycInt::from_int(field, a_ell);
    let z = CycInt::zeta(field, psi.order, e as i64)?;
    h.g[t as usize] = h.g[t as usize].sub(&z);
    if eps_ell != 0 {
        let zi = CycInt::zeta(field, psi.order, -(e as i64))?;
        let c = BigInt::from(eps_ell) * BigInt::from(ell).pow(k - 2);
        let ti = ((len - t) % len) as usize;
        h.g[ti] = h.g[ti].sub(&zi.scale(&c));
    }
    Ok(h)
}

/// Local version in the T-basis.
pub fn euler_h(
    ell: u64,
    psi: &DirichletChar,
    table: &TnTable,
    a_ell: i64,
    eps_ell: i64,
    k: u32,
    ring: &Arc<LocalRing>,
) -> Result<LambdaNPoly> {
    let (t, e) = ell_data(ell, psi, table)?;
    let p = table.p;
    let n = table.n;
    let len = p.pow(n);
    let mut g = vec![LocalElem::zero(ring); len as usize];
    g[0] = LocalElem::from_int(ring, a_ell);
    g[t as usize] = g[t as usize].sub(&ring.zeta(psi.order, e as i64)?);
    if eps_ell != 0 {
        let c = BigInt::from(eps_ell) * BigInt::from(ell).pow(k - 2);
        let ti = ((len - t) % len) as usize;
        g[ti] = g[ti].sub(&ring.zeta(psi.order, -(e as i64))?.scale_big(&c));
    }
    Ok(LambdaNPoly::from_group(p, n, ring, &g))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CSeq {
    pub p: u64,
    pub a_p: i64,
    pub eps: i64,
    pub k: u32,
    #[serde(serialize_with = "ser_rats")]
    pub values: Vec<Rat>,
}

fn ser_rats<S: serde::Serializer>(v: &[Rat], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

/// c_0 = 0, c_1 = 1, c_m = a_p/p c_{m-1} - eps p^{k-3} c_{m-2}.
pub fn c_values(p: u64, a_p: i64, eps: i64, k: u32, m: usize) -> CSeq {
    let pk3 = if k >= 3 { rat_int(p.pow(k - 3) as i64) } else { rat(1, p.pow(3 - k) as i64) };
    let ap = rat(a_p, p as i64);
    let e = rat_int(eps);
    let mut values = vec![rat_int(0), rat_int(1)];
    for i in 2..=m.max(1) {
        let v = &ap * &values[i - 1] - &e * &pk3 * &values[i - 2];
        values.push(v);
    }
    values.truncate(m + 1);
    CSeq { p, a_p, eps, k, values }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_small() {
        let c = c_values(3, 0, 1, 2, 3);
        assert_eq!(c.values, vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(-1, 3)]);
        let c = c_values(5, -1, 0, 2, 4);
        for (m, v) in c.values.iter().enumerate().skip(1) {
            assert_eq!(*v, rat(-1, 5).pow(m as i32 - 1));
        }
    }

    #[test]
    fn h_at_zero() {
        let f = CycField::new(3, 1, 1).unwrap();
        let tab = TnTable::new(3, 1, 1).unwrap();
        let h = euler_h_exact(7, &DirichletChar::trivial(), &tab, -2, 1, 2, &f).unwrap();
        assert_eq!(h.eval_at_root(0).unwrap(), CycInt::from_int(&f, -2 - 1 - 1));
        // t_1(7) = 2
        assert_eq!(h.g[2], CycInt::from_int(&f, -1));
        assert_eq!(h.g[1], CycInt::from_int(&f, -1));
    }
}
