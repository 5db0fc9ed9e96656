//! q-expansion coefficients of the newform attached to a curve.

use ellcurve::ECurve;
use serde::Serialize;

use crate::error::Result;

#[derive(Debug, Clone, Serialize)]
pub struct QExpansion {
    pub level: u64,
    /// a[n] for 0 <= n <= bound, a[0] = 0
    pub a: Vec<i64>,
}

impl QExpansion {
    /// a_n for n <= bound from a_l (point counts at good l, reduction type at bad l).
    pub fn from_curve(e: &ECurve, bound: usize) -> Result<Self> {
        let n = e.conductor;
        let mut spf = vec![0usize; bound + 1];
        for i in 2..=bound {
            if spf[i] == 0 {
                let mut j = i;
                while j <= bound {
                    if spf[j] == 0 {
                        spf[j] = i;
                    }
                    j += i;
                }
            }
        }
        let mut a = vec![0i64; bound + 1];
        if bound >= 1 {
            a[1] = 1;
        }
        for m in 2..=bound {
            let l = spf[m];
            let mut r = m;
            let mut k = 0;
            while r % l == 0 {
                r /= l;
                k += 1;
            }
            if r > 1 {
                a[m] = a[r] * a[m / r];
                continue;
            }
            // m = l^k
            let al = if k == 1 { e.a_ell(l as u64)? } else { a[l] };
            a[m] = if k == 1 {
                al
            } else {
                let eps = (n % l as u64 != 0) as i64;
                al * a[m / l] - eps * l as i64 * a[m / l / l]
            };
        }
        Ok(QExpansion { level: n, a })
    }

    /// Terms making the summed truncation error of a Birch sum at conductor m fall below tol.
    pub fn terms_needed(level: u64, m: u64, tol: f64) -> usize {
        let r = (-2.0 * std::f64::consts::PI / (m as f64 * (level as f64).sqrt())).exp();
        // 2 integrals per cusp, m cusps, divided by |tau| = sqrt m
        let target = tol * 1e-2 / (2.0 * (m as f64).sqrt());
        let need = ((target * (1.0 - r) / 2.0).ln() / r.ln()).ceil();
        (need.max(1.0) as usize).max(1000)
    }

    pub fn bound(&self) -> usize {
        self.a.len() - 1
    }

    /// a_{mn} = a_m a_n for coprime m, n <= limit with mn <= bound.
    pub fn spot_check(&self, limit: usize) -> bool {
        let b = self.bound();
        for m in 1..=limit {
            for n in 1..=limit {
                if m * n <= b && arith_core::numth::gcd(m as u64, n as u64) == 1 && self.a[m * n] != self.a[m] * self.a[n] {
                    return false;
                }
            }
        }
        self.a.get(1) == Some(&1)
    }
}
