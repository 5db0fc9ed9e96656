//! lambda_n^{Ml}(psi) = lambda_n^M(psi) + g_{psi,n}(l), mu unchanged.

use arith_core::TnTable;
use characters::DirichletChar;
use mazur_tate::{field_for, ring_for, theta_raw, twist, twist_exact, ThetaElem};
use modsym::EigenSymbol;
use serde::Serialize;

use crate::error::{IwError, Result};
use crate::growth::g_psi_n;
use crate::invariants::{invariants, InvariantPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TransitionVerdict {
    Holds,
    Fails,
    /// mu_n^M(psi) > 0 (or Theta = 0): the lambda claim is not tested
    SkippedMuPositive,
    /// t_n(l) = 0 with a nonzero predicted jump: l splits completely in Q_(n)
    SkippedDegenerate,
    /// lambda_n^M(psi) + g >= p^n, past the last coefficient of Lambda_n
    SkippedWrap,
}

#[derive(Debug, Clone, Serialize)]
pub struct TransitionReport {
    pub ell: u64,
    pub n: u32,
    pub m: u64,
    pub base: InvariantPair,
    pub raised: InvariantPair,
    pub predicted_jump: u64,
    pub verdict: TransitionVerdict,
}

/// Invariants of twist(theta, psi); a twist that vanishes to the working precision is
/// rebuilt exactly to tell F = 0 apart from a precision shortfall.
pub fn theta_invariants(th: &ThetaElem, psi: &DirichletChar, b: u32) -> Result<InvariantPair> {
    let tab = TnTable::new(th.p, th.n, th.m)?;
    let ring = ring_for(th.p, th.n, std::slice::from_ref(psi), b)?;
    let f = twist(th, psi, &tab, &ring)?;
    if f.is_zero_rep() {
        let field = field_for(th.p, 0, std::slice::from_ref(psi))?;
        if twist_exact(th, psi, &tab, &field)?.is_zero() {
            return Ok(InvariantPair::infinite());
        }
    }
    invariants(&f)
}

pub fn check_transition(psi: &DirichletChar, ell: u64, n: u32, sym: &EigenSymbol, m: u64, b: u32) -> Result<TransitionReport> {
    let p = sym.p;
    if ell == p || m % ell == 0 {
        return Err(IwError::Invalid(format!("l = {ell} must be prime to pM")));
    }
    let base = theta_invariants(&theta_raw(sym, n, m)?, psi, b)?;
    let raised = theta_invariants(&theta_raw(sym, n, m * ell)?, psi, b)?;
    let a = sym.curve.a_ell(ell).map_err(|e| IwError::Invalid(e.to_string()))?;
    let bad = sym.curve.conductor % ell == 0;
    let jump = g_psi_n(ell, psi, n, a, bad, 2, p)?;
    let degenerate = TnTable::new(p, n, 1)?.t(ell as i64) == Some(0) && jump > 0;
    let verdict = if !base.mu_is_zero() {
        TransitionVerdict::SkippedMuPositive
    } else if degenerate {
        TransitionVerdict::SkippedDegenerate
    } else if base.lambda.unwrap() + jump >= p.pow(n) {
        TransitionVerdict::SkippedWrap
    } else if raised.mu == base.mu && raised.lambda == base.lambda.map(|l| l + jump) {
        TransitionVerdict::Holds
    } else {
        TransitionVerdict::Fails
    };
    Ok(TransitionReport { ell, n, m, base, raised, predicted_jump: jump, verdict })
}
