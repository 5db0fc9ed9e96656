//! Gauss sums tau(n, chi) = sum_{a mod m} chi(a) e(n a / m).

use std::sync::Arc;

use arith_core::numth::{is_prime, lcm};
use arith_core::{CycField, CycInt};
use characters::DirichletChar;
use num_bigint::BigInt;
use num_complex::Complex64;

use crate::eichler::ComplexVal;
use crate::error::Result;

/// Q(zeta_L) with L = lcm(conductor, order), zeta_L -> exp(2 pi i / L).
pub fn gauss_field(chi: &DirichletChar) -> Result<Arc<CycField>> {
    let l = lcm(chi.conductor, chi.order);
    // any prime not dividing L serves as the distinguished prime of the field
    let p = (2..).find(|&q| is_prime(q) && l % q != 0).unwrap();
    Ok(CycField::new(p, l, 0)?)
}

/// tau(n, chi) in Z[zeta_L].
pub fn gauss_sum_exact_at(chi: &DirichletChar, n: i64, field: &Arc<CycField>) -> Result<CycInt> {
    let m = chi.conductor;
    let l = field.m;
    let mut raw = vec![BigInt::from(0); l as usize];
    for a in 0..m as i64 {
        if let Some(k) = chi.exp(a) {
            let e = (k * (l / chi.order) + arith_core::numth::reduce(n * a, m) * (l / m)) % l;
            raw[e as usize] += 1;
        }
    }
    Ok(CycInt::from_raw(field, raw))
}

pub fn gauss_sum_exact(chi: &DirichletChar) -> Result<CycInt> {
    gauss_sum_exact_at(chi, 1, &gauss_field(chi)?)
}

/// tau(chi) as a complex number.
pub fn gauss_sum(chi: &DirichletChar) -> ComplexVal {
    let m = chi.conductor;
    let mut acc = Complex64::new(0.0, 0.0);
    for a in 0..m as i64 {
        let (re, im) = chi.value_complex(a);
        if re == 0.0 && im == 0.0 {
            continue;
        }
        let e = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * a as f64 / m as f64);
        acc += Complex64::new(re, im) * e;
    }
    ComplexVal::new(acc, m as f64 * 4.0 * f64::EPSILON)
}

/// Complex conjugate in Z[zeta_L]: zeta -> zeta^{-1}.
pub fn conj(x: &CycInt) -> CycInt {
    let l = x.field.m as usize;
    let mut raw = vec![BigInt::from(0); l];
    for (k, c) in x.coeffs.iter().enumerate() {
        raw[(l - k) % l] += c;
    }
    CycInt::from_raw(&x.field, raw)
}
