//! Exact checks of the tame and vertical relations and of evaluation at p-power roots of unity.

use std::sync::Arc;

use arith_core::{CycField, TnTable};
use characters::DirichletChar;
use modsym::EigenSymbol;
use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{MtError, Result};
use crate::euler::{c_values, euler_h_exact};
use crate::group::GroupPoly;
use crate::theta::{theta_raw, twist_exact, ThetaElem};

#[derive(Debug, Clone, Serialize)]
pub struct TameReport {
    pub ell: u64,
    pub n: u32,
    pub m: u64,
    pub equal: bool,
    /// first group index t where the sides differ
    pub first_diff: Option<usize>,
}

fn first_diff(a: &GroupPoly, b: &GroupPoly) -> Option<usize> {
    a.g.iter().zip(&b.g).position(|(x, y)| x != y)
}

fn twist_at(th: &ThetaElem, psi: &DirichletChar, field: &Arc<CycField>) -> Result<GroupPoly> {
    let tab = TnTable::new(th.p, th.n, th.m)?;
    twist_exact(th, psi, &tab, field)
}

/// Theta^{Ml}(psi) against h_l(psi) Theta^M(psi), both built from scratch.
pub fn check_tame_compat(
    sym: &EigenSymbol,
    n: u32,
    m: u64,
    ell: u64,
    psi: &DirichletChar,
    field: &Arc<CycField>,
) -> Result<TameReport> {
    let p = sym.p;
    if ell == p || m % ell == 0 || !arith_core::numth::is_prime(ell) {
        return Err(MtError::BadAuxiliaryPrime(ell));
    }
    if psi.exp(ell as i64).is_none() {
        return Err(MtError::ConductorError(ell));
    }
    let lhs = twist_at(&theta_raw(sym, n, m * ell)?, psi, field)?;
    let base = twist_at(&theta_raw(sym, n, m)?, psi, field)?;
    let tab = TnTable::new(p, n, m)?;
    let a = sym.curve.a_ell(ell).map_err(|e| MtError::Invalid(e.to_string()))?;
    let h = euler_h_exact(ell, psi, &tab, a, sym.curve.eps(ell), 2, field)?;
    let rhs = h.mul(&base);
    let d = first_diff(&lhs, &rhs);
    Ok(TameReport { ell, n, m, equal: d.is_none(), first_diff: d })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Convention {
    /// pi(Theta_n) = a_p Theta_{n-1} - eps nu_{n-2,n-1}(Theta_{n-2})
    Shifted,
    /// pi(Theta_n) = pi(a_p Theta_n - eps nu_{n-1,n}(Theta_{n-1}))
    Literal,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerticalReport {
    pub n: u32,
    pub m: u64,
    pub shifted_holds: bool,
    pub literal_holds: bool,
    pub convention: Convention,
}

/// Three-term relation between levels n, n-1, n-2 in both readings of the indices.
pub fn check_vertical(sym: &EigenSymbol, n: u32, m: u64, psi: &DirichletChar, field: &Arc<CycField>) -> Result<VerticalReport> {
    if n < 2 {
        return Err(MtError::Invalid("vertical relation needs n >= 2".into()));
    }
    let p = sym.p;
    let ap = BigInt::from(sym.curve.a_ell(p).map_err(|e| MtError::Invalid(e.to_string()))?);
    let eps = BigInt::from(sym.curve.eps(p));
    let th_n = theta_raw(sym, n, m)?;
    let th_n1 = theta_raw(sym, n - 1, m)?;
    let th_n2 = theta_raw(sym, n - 2, m)?;
    let lhs = twist_at(&th_n, psi, field)?.proj();

    let shifted = twist_at(&th_n1, psi, field)?.scale(&ap).sub(&twist_at(&th_n2.trace_up(), psi, field)?.scale(&eps));
    let literal = twist_at(&th_n, psi, field)?.scale(&ap).sub(&twist_at(&th_n1.trace_up(), psi, field)?.scale(&eps)).proj();

    let shifted_holds = lhs == shifted;
    let literal_holds = lhs == literal;
    let convention = match (shifted_holds, literal_holds) {
        (true, _) => Convention::Shifted,
        (false, true) => Convention::Literal,
        _ => return Err(MtError::NoConventionMatches),
    };
    Ok(VerticalReport { n, m, shifted_holds, literal_holds, convention })
}

#[derive(Debug, Clone, Serialize)]
pub struct EvalReport {
    pub n: u32,
    /// (i, holds) for each level checked
    pub levels: Vec<(u32, bool)>,
}

impl EvalReport {
    pub fn all_hold(&self) -> bool {
        self.levels.iter().all(|l| l.1)
    }
}

/// Theta_n(zeta_{p^i} - 1) = p^{n-i} c_{n-i+1} Theta_i(zeta_{p^i} - 1) for 1 <= i < n
/// (and i = 0 when psi is wildly ramified), wherever psi factors through level i.
pub fn check_eval_compat(sym: &EigenSymbol, n: u32, m: u64, psi: &DirichletChar, field: &Arc<CycField>) -> Result<EvalReport> {
    let p = sym.p;
    let ap = sym.curve.a_ell(p).map_err(|e| MtError::Invalid(e.to_string()))?;
    let c = c_values(p, ap, sym.curve.eps(p), 2, n as usize + 1);
    let top = twist_at(&theta_raw(sym, n, m)?, psi, field)?;
    let lowest = if psi.p_exponent(p) > 0 { 0 } else { 1 };
    let mut levels = vec![];
    for i in lowest..n {
        if psi.p_exponent(p) > i + 1 {
            continue;
        }
        let low = twist_at(&theta_raw(sym, i, m)?, psi, field)?;
        let lhs = top.eval_at_root(i)?;
        let cc = &c.values[(n - i + 1) as usize];
        let scale = BigInt::from(p).pow(n - i) * cc.numer();
        let ok = lhs.scale(cc.denom()) == low.eval_at_root(i)?.scale(&scale);
        levels.push((i, ok));
    }
    Ok(EvalReport { n, levels })
}
