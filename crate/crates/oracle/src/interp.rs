//! Theta_n^M(f, psi, zeta - 1) against tau(psi chi) L(f, conj(psi chi), 1) / Omega.

use arith_core::numth::gcd;
use arith_core::{rat_int, TnTable};
use characters::DirichletChar;
use mazur_tate::{c_values, field_for, theta_raw, twist_exact};
use modsym::{EigenSymbol, Sign};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::eichler::eichler_integral;
use crate::error::{OracleError, Result};
use crate::gauss::gauss_sum;
use crate::lvalue::lvalue_twisted;
use crate::qexp::QExpansion;

/// phi^+(r) = Re I(r) / omega_plus, phi^-(r) = Im I(r) / omega_minus, I(r) = 2 pi i int_r^{i inf} f.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Periods {
    pub omega_plus: f64,
    pub omega_minus: f64,
    /// cusps a/m the two ratios were read from
    pub plus_from: (i64, i64),
    pub minus_from: (i64, i64),
    pub fricke_sign: i64,
}

impl Periods {
    /// Omega^{sign} in tau L / Omega: -omega_+ or -i omega_-.
    pub fn omega(&self, parity: i64) -> Complex64 {
        if parity == 1 {
            Complex64::new(-self.omega_plus, 0.0)
        } else {
            Complex64::new(0.0, -self.omega_minus)
        }
    }
}

fn cusp_candidates(level: u64) -> Vec<(i64, i64)> {
    let mut v = vec![(0, 1)];
    for m in 2..40i64 {
        if gcd(m as u64, level) != 1 {
            continue;
        }
        for a in 1..m {
            if gcd(a as u64, m as u64) == 1 {
                v.push((a, m));
            }
        }
    }
    v
}

/// One ratio per sign: the trivial twist {inf} - {0} when it is nonzero, else the first cusp a/m
/// with nonzero symbol value.
pub fn calibrate(sym: &EigenSymbol, q: &QExpansion, fricke_sign: i64) -> Result<Periods> {
    let mut plus = None;
    let mut minus = None;
    for (a, m) in cusp_candidates(q.level) {
        if plus.is_some() && minus.is_some() {
            break;
        }
        let i = eichler_integral(q, a, m, fricke_sign)?;
        let sp = sym.eval(a, m, Sign::Plus);
        let sm = sym.eval(a, m, Sign::Minus);
        if plus.is_none() && sp != 0 {
            plus = Some((i.re / sp as f64, (a, m)));
        }
        if minus.is_none() && sm != 0 {
            minus = Some((i.im / sm as f64, (a, m)));
        }
    }
    let (omega_plus, plus_from) = plus.ok_or_else(|| OracleError::Invalid("plus symbol vanishes on all test cusps".into()))?;
    let (omega_minus, minus_from) = minus.ok_or_else(|| OracleError::Invalid("minus symbol vanishes on all test cusps".into()))?;
    Ok(Periods { omega_plus, omega_minus, plus_from, minus_from, fricke_sign })
}

#[derive(Debug, Clone, Serialize)]
pub struct PathCheck {
    pub a: i64,
    pub m: i64,
    pub exact_plus: i64,
    pub exact_minus: i64,
    pub oracle_plus: f64,
    pub oracle_minus: f64,
    pub deviation: f64,
}

/// Symbol values on the cusps a/m against the calibrated integrals; deviation relative to the
/// largest value of each sign among the cusps.
pub fn check_paths(sym: &EigenSymbol, q: &QExpansion, per: &Periods, cusps: &[(i64, i64)]) -> Result<Vec<PathCheck>> {
    let mut out = vec![];
    for &(a, m) in cusps {
        let i = eichler_integral(q, a, m, per.fricke_sign)?;
        let ep = sym.eval(a, m, Sign::Plus);
        let em = sym.eval(a, m, Sign::Minus);
        let op = i.re / per.omega_plus;
        let om = i.im / per.omega_minus;
        let dev = ((op - ep as f64).abs()).max((om - em as f64).abs());
        out.push(PathCheck { a, m, exact_plus: ep, exact_minus: em, oracle_plus: op, oracle_minus: om, deviation: dev });
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct InterpReport {
    pub p: u64,
    pub n: u32,
    /// the root zeta_{p^i} the element is evaluated at
    pub i: u32,
    pub tame: u64,
    pub conductor: u64,
    pub parity: i64,
    pub exact: (f64, f64),
    /// tau(chi) L(f, conj chi, 1) / Omega, times p^{n-i} c_{n-i+1} when i < n
    pub predicted: (f64, f64),
    pub l_value: (f64, f64),
    pub rel_err: f64,
    pub err_bound: f64,
    pub ok: bool,
}

/// Theta_n^M(f, psi, zeta_{p^i} - 1) for 1 <= i <= n, M the tame conductor of psi.
pub fn check_interpolation(
    sym: &EigenSymbol,
    q: &QExpansion,
    per: &Periods,
    psi: &DirichletChar,
    n: u32,
    i: u32,
    tol: f64,
) -> Result<InterpReport> {
    let p = sym.p;
    if i == 0 || i > n {
        return Err(OracleError::Invalid(format!("root level {i} outside 1..={n}")));
    }
    let m = psi.tame_conductor(p);
    if gcd(m, q.level) != 1 {
        return Err(OracleError::NotCoprime { m, level: q.level });
    }
    let th = theta_raw(sym, n, m)?;
    let field = field_for(p, n, std::slice::from_ref(psi))?;
    let g = twist_exact(&th, psi, &TnTable::new(p, n, m)?, &field)?;
    let exact = g.eval_at_root(i)?.to_complex();

    let chi = psi.mul(&DirichletChar::canonical(p, i)?);
    let want = p.pow(i + 1) * m;
    if chi.conductor != want {
        return Err(OracleError::NotPrimitive { conductor: chi.conductor, want });
    }
    let l = lvalue_twisted(q, &chi, per.fricke_sign, tol)?;
    let tau = gauss_sum(&chi).z();
    let parity = chi.parity();
    let mut factor = 1.0;
    if i < n {
        let ap = sym.curve.a_ell(p)?;
        let c = c_values(p, ap, sym.curve.eps(p), 2, (n - i + 1) as usize);
        factor = (rat_int(p.pow(n - i) as i64) * &c.values[(n - i + 1) as usize]).to_f64().unwrap_or(f64::NAN);
    }
    let pred = tau * l.z() / per.omega(parity) * factor;
    let scale = exact.norm().max(pred.norm());
    let diff = (exact - pred).norm();
    let rel_err = if scale == 0.0 { 0.0 } else { diff / scale };
    let err_bound = l.err * tau.norm() / per.omega(parity).norm() * factor.abs();
    let ok = if scale < 1e-9 { diff <= tol } else { rel_err <= tol };
    Ok(InterpReport {
        p,
        n,
        i,
        tame: m,
        conductor: chi.conductor,
        parity,
        exact: (exact.re, exact.im),
        predicted: (pred.re, pred.im),
        l_value: (l.re, l.im),
        rel_err,
        err_bound,
        ok,
    })
}
