//! lambda(Theta_n) - q_n along n when a_p = 0.

use characters::DirichletChar;
use iwasawa::{q_n, theta_invariants, InvariantPair};
use mazur_tate::{field_for, theta_raw, twist_exact};
use modsym::EigenSymbol;
use arith_core::TnTable;
use serde::Serialize;

use crate::error::{KidaError, Result};

#[derive(Debug, Clone, Serialize)]
pub struct SignedLevel {
    pub n: u32,
    pub invariants: InvariantPair,
    pub q_n: u64,
    pub difference: Option<i64>,
    /// Theta_n vanishes at zeta_{p^j} - 1 for 1 <= j < n, j = n - 1 mod 2
    pub trivial_zeros: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SignedReport {
    pub curve: String,
    pub p: u64,
    pub levels: Vec<SignedLevel>,
    pub constant: Option<i64>,
    pub holds: bool,
}

pub fn signed_growth_check(sym: &EigenSymbol, psi: &DirichletChar, ns: &[u32], b: u32) -> Result<SignedReport> {
    let p = sym.p;
    let ap = sym.curve.a_ell(p)?;
    if ap != 0 {
        return Err(KidaError::Invalid(format!("a_{p} = {ap} is not 0")));
    }
    let m = psi.tame_conductor(p);
    let mut levels = vec![];
    for &n in ns {
        let th = theta_raw(sym, n, m)?;
        let inv = theta_invariants(&th, psi, b)?;
        let field = field_for(p, n, std::slice::from_ref(psi))?;
        let g = twist_exact(&th, psi, &TnTable::new(p, n, m)?, &field)?;
        let mut trivial_zeros = true;
        for j in (1..n).filter(|j| (n - 1 - j) % 2 == 0) {
            trivial_zeros &= g.eval_at_root(j)?.is_zero();
        }
        let q = q_n(p, n);
        let difference = inv.lambda.map(|l| l as i64 - q as i64);
        levels.push(SignedLevel { n, invariants: inv, q_n: q, difference, trivial_zeros });
    }
    let constant = levels.first().and_then(|l| l.difference);
    let holds = constant.is_some()
        && levels.iter().all(|l| l.difference == constant && l.invariants.mu_is_zero() && l.trivial_zeros);
    Ok(SignedReport { curve: sym.curve.name(), p, levels, constant, holds })
}
