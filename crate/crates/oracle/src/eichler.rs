//! 2 pi i int_{a/m}^{i inf} f(z) dz, split at height 1/(m sqrt N) with an Atkin-Lehner matrix.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{OracleError, Result};
use crate::qexp::QExpansion;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexVal {
    pub re: f64,
    pub im: f64,
    /// absolute error bound
    pub err: f64,
}

impl ComplexVal {
    pub fn new(z: Complex64, err: f64) -> Self {
        ComplexVal { re: z.re, im: z.im, err }
    }

    pub fn z(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn zero() -> Self {
        ComplexVal { re: 0.0, im: 0.0, err: 0.0 }
    }
}

/// -sum a_n/n e^{2 pi i n z} = 2 pi i int_z^{i inf} f, Im z > 0; tail from |a_n| <= d(n) sqrt n <= 2n.
pub fn integral_from(q: &QExpansion, z: Complex64) -> (Complex64, f64) {
    let y = z.im;
    let step = Complex64::new(0.0, 2.0 * PI * z.re).exp() * (-2.0 * PI * y).exp();
    let mut w = Complex64::new(1.0, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut abs = 0.0;
    for n in 1..=q.bound() {
        w *= step;
        if q.a[n] != 0 {
            let t = w * (q.a[n] as f64 / n as f64);
            acc += t;
            abs += t.norm();
        }
    }
    let r = (-2.0 * PI * y).exp();
    let tail = 2.0 * r.powi(q.bound() as i32 + 1) / (1.0 - r);
    let round = abs * f64::EPSILON * 8.0 + q.bound() as f64 * f64::EPSILON * abs.max(1.0);
    (-acc, tail + round)
}

/// (b, d) with N a d - m b = 1.
fn atkin_lehner(level: u64, a: i64, m: i64) -> Option<(i64, i64)> {
    let x = level as i128 * a as i128;
    let (g, s, t) = ext_gcd(x, m as i128);
    if g.abs() != 1 {
        return None;
    }
    // x s + m t = g
    let d = s * g;
    let b = -t * g;
    Some((b as i64, d as i64))
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        return (a, 1, 0);
    }
    let (g, s, t) = ext_gcd(b, a.rem_euclid(b));
    (g, t, s - (a.div_euclid(b)) * t)
}

/// The split at heights (t h, h / t), h = 1/(m sqrt N).
pub fn eichler_at_height(q: &QExpansion, a: i64, m: i64, fricke_sign: i64, t: f64) -> Result<ComplexVal> {
    let n = q.level;
    if m == 0 {
        return Ok(ComplexVal::zero());
    }
    let (b, d) = atkin_lehner(n, a, m).ok_or(OracleError::NotCoprime { m: m.unsigned_abs(), level: n })?;
    let nf = n as f64;
    let h = 1.0 / (m as f64 * nf.sqrt());
    let z1 = Complex64::new(a as f64 / m as f64, t * h);
    // W^{-1} z1 with W = [[N a, b], [N m, N d]]
    let w1 = (z1 * (nf * d as f64) - b as f64) / (z1 * (-nf * m as f64) + nf * a as f64);
    let (i1, e1) = integral_from(q, z1);
    let (i2, e2) = integral_from(q, w1);
    Ok(ComplexVal::new(i1 - i2 * fricke_sign as f64, e1 + e2))
}

/// 2 pi i int_{a/m}^{i inf} f(z) dz for gcd(m, N) = 1.
pub fn eichler_integral(q: &QExpansion, a: i64, m: i64, fricke_sign: i64) -> Result<ComplexVal> {
    eichler_at_height(q, a, m, fricke_sign, 1.0)
}

/// Same, failing when the error bound exceeds tol.
pub fn eichler_integral_tol(q: &QExpansion, a: i64, m: i64, fricke_sign: i64, tol: f64) -> Result<ComplexVal> {
    let v = eichler_integral(q, a, m, fricke_sign)?;
    if v.err > tol {
        return Err(OracleError::ToleranceUnreachable { err: v.err, tol, terms: q.bound() });
    }
    Ok(v)
}

/// The sign w with f | W_N = w f, from agreement of the split at two heights.
pub fn fricke_sign(q: &QExpansion) -> Result<i64> {
    let mut found = vec![];
    for s in [1i64, -1] {
        let mut ok = true;
        for (a, m) in [(0, 1), (1, 2), (1, 3), (2, 5)] {
            if arith_core::numth::gcd(m as u64, q.level) != 1 {
                continue;
            }
            let x = eichler_at_height(q, a, m, s, 1.0)?;
            let y = eichler_at_height(q, a, m, s, 2.0)?;
            ok &= (x.z() - y.z()).norm() <= 10.0 * (x.err + y.err) + 1e-9;
        }
        if ok {
            found.push(s);
        }
    }
    match found.as_slice() {
        [s] => Ok(*s),
        _ => Err(OracleError::FrickeUndetermined(format!("consistent signs: {found:?}"))),
    }
}
