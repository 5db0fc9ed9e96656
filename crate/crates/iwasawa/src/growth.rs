//! Splitting counts in Q_(n), the jump g_{psi,n}(l), and signed growth q_n, omega_n^{+-}.

use std::sync::Arc;

use arith_core::numth::reduce;
use arith_core::{LocalElem, LocalRing, TnTable};
use characters::DirichletChar;
use mazur_tate::LambdaNPoly;

use crate::error::Result;

/// Number of primes above l in Q_(n): the exact p-power dividing t_n(l), p^n when t_n(l) = 0.
pub fn g_q_layer(ell: u64, table: &TnTable) -> u64 {
    let p = table.p;
    let t = table.t(ell as i64).expect("l prime to p");
    if t == 0 {
        return p.pow(table.n);
    }
    p.pow(arith_core::numth::val(t, p))
}

/// Which clause of the definition applies; used to check coverage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum GCase {
    GoodNoCongruence,
    GoodSimple,
    GoodDouble,
    BadNoCongruence,
    BadCongruence,
    PsiVanishes,
}

/// g_{psi,n}(l) with the clause that produced it.
pub fn g_psi_n_case(ell: u64, psi: &DirichletChar, n: u32, a_ell: i64, divides_n: bool, k: u32, p: u64) -> Result<(u64, GCase)> {
    let Some(e) = psi.exp(ell as i64) else {
        return Ok((0, GCase::PsiVanishes));
    };
    let table = TnTable::new(p, n, 1)?;
    let g = g_q_layer(ell, &table);
    let ring: Arc<LocalRing> = LocalRing::for_orders(p, &[psi.order], 0, 2)?;
    let z = ring.zeta(psi.order, e as i64)?;
    let a = LocalElem::from_int(&ring, a_ell);
    if divides_n {
        return Ok(if a.sub(&z).is_zero_mod_pi() { (g, GCase::BadCongruence) } else { (0, GCase::BadNoCongruence) });
    }
    let lk = (reduce(ell as i64, p) as i64).pow(k - 2);
    let zi = ring.zeta(psi.order, -(e as i64))?;
    if !a.sub(&z).sub(&zi.scale(lk)).is_zero_mod_pi() {
        return Ok((0, GCase::GoodNoCongruence));
    }
    // a = +-2 l^{(k-2)/2} in an algebraic closure of F_p iff a^2 = 4 l^{k-2}
    let pp = p as i64;
    let double = (a_ell * a_ell - 4 * lk).rem_euclid(pp) == 0;
    Ok(if double { (2 * g, GCase::GoodDouble) } else { (g, GCase::GoodSimple) })
}

pub fn g_psi_n(ell: u64, psi: &DirichletChar, n: u32, a_ell: i64, divides_n: bool, k: u32, p: u64) -> Result<u64> {
    Ok(g_psi_n_case(ell, psi, n, a_ell, divides_n, k, p)?.0)
}

/// q_n = p^{n-1} - p^{n-2} + ... ending in p - 1 (n even) or p^2 - p (n odd).
pub fn q_n(p: u64, n: u32) -> u64 {
    let mut q: i64 = 0;
    let mut sign = 1i64;
    for j in (1..n).rev() {
        q += sign * p.pow(j) as i64;
        sign = -sign;
    }
    if n % 2 == 0 && n > 0 {
        q -= 1;
    }
    q as u64
}

/// Phi_{p^j}(1+T) in Lambda_n.
pub fn cyclotomic_factor(p: u64, j: u32, n: u32, ring: &Arc<LocalRing>) -> LambdaNPoly {
    let len = p.pow(n) as usize;
    let step = p.pow(j - 1) as usize;
    let mut g = vec![LocalElem::zero(ring); len];
    for i in 0..p as usize {
        g[(i * step) % len] = g[(i * step) % len].add(&LocalElem::one(ring));
    }
    LambdaNPoly::from_group(p, n, ring, &g)
}

#[derive(Debug, Clone)]
pub struct OmegaPair {
    /// product of Phi_{p^j}(1+T), 1 <= j <= n, j even
    pub plus: LambdaNPoly,
    /// same over odd j
    pub minus: LambdaNPoly,
}

impl OmegaPair {
    /// The factor Theta_n is divisible by when a_p = 0: indices j = n-1, n-3, ...
    pub fn vanishing(&self, n: u32) -> &LambdaNPoly {
        if n % 2 == 1 {
            &self.plus
        } else {
            &self.minus
        }
    }
}

pub fn omega_pm(p: u64, n: u32, ring: &Arc<LocalRing>) -> OmegaPair {
    let one = LambdaNPoly::from_ints(p, n, ring, &[1]);
    let mut plus = one.clone();
    let mut minus = one;
    for j in 1..=n {
        let f = cyclotomic_factor(p, j, n, ring);
        if j % 2 == 0 {
            plus = plus.mul(&f);
        } else {
            minus = minus.mul(&f);
        }
    }
    OmegaPair { plus, minus }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_values() {
        assert_eq!(q_n(3, 1), 0);
        assert_eq!(q_n(3, 2), 2);
        assert_eq!(q_n(3, 3), 6);
        assert_eq!(q_n(3, 4), 27 - 9 + 3 - 1);
        assert_eq!(q_n(5, 3), 20);
    }

    #[test]
    fn layer_counts() {
        let t = TnTable::new(3, 1, 1).unwrap();
        assert_eq!(g_q_layer(7, &t), 1);
        assert_eq!(g_q_layer(17, &t), 3);
        // 2 generates (Z/3^k)^x
        for n in 1..5 {
            assert_eq!(g_q_layer(2, &TnTable::new(3, n, 1).unwrap()), 1);
        }
    }
}
