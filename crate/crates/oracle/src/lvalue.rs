//! L(f, conj chi, 1) through the twisted form f_{conj chi}(z) = tau(chi)^{-1} sum_a chi(a) f(z + a/m).

use characters::DirichletChar;
use num_complex::Complex64;

use crate::eichler::{eichler_integral, ComplexVal};
use crate::error::{OracleError, Result};
use crate::gauss::gauss_sum;
use crate::qexp::QExpansion;

/// sum_a chi(a) 2 pi i int_{a/m}^{i inf} f = -tau(chi) L(f, conj chi, 1).
pub fn birch_sum(q: &QExpansion, chi: &DirichletChar, fricke_sign: i64) -> Result<ComplexVal> {
    let m = chi.conductor as i64;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    for a in 0..m {
        if chi.exp(a).is_none() {
            continue;
        }
        let (re, im) = chi.value_complex(a);
        let v = eichler_integral(q, a, m, fricke_sign)?;
        acc += Complex64::new(re, im) * v.z();
        err += v.err;
    }
    Ok(ComplexVal::new(acc, err))
}

/// L(f, conj chi, 1) for primitive chi of conductor prime to N.
pub fn lvalue_twisted(q: &QExpansion, chi: &DirichletChar, fricke_sign: i64, tol: f64) -> Result<ComplexVal> {
    let s = birch_sum(q, chi, fricke_sign)?;
    let tau = gauss_sum(chi);
    let norm = tau.z().norm();
    let v = -s.z() / tau.z();
    let err = s.err / norm + tau.err * v.norm() / norm;
    if err > tol {
        return Err(OracleError::ToleranceUnreachable { err, tol, terms: q.bound() });
    }
    Ok(ComplexVal::new(v, err))
}
