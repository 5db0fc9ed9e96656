//! Theta_n(f/K) from the product of twisted elements over the characters of K.

use std::sync::Arc;

use arith_core::{LocalElem, LocalRing, TnTable};
use characters::{AbelianFieldDesc, DirichletChar};
use modsym::EigenSymbol;
use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{MtError, Result};
use crate::group::GroupPoly;
use crate::lambda::LambdaNPoly;
use crate::theta::{field_for, theta_raw, twist_exact};

#[derive(Debug, Clone)]
pub struct Descent {
    pub n: u32,
    pub n_k: u32,
    /// product over characters at level n + n_K
    pub g: GroupPoly,
    /// the element h at level n with g(T) = h((1+T)^{p^{n_K}} - 1), group basis
    pub h_exact: GroupPoly,
    /// h in the S-basis over the local ring
    pub h: LambdaNPoly,
    /// the same descent applied to the product in O[T] of the degree < p^{n+n_K}
    /// representatives, without reduction mod (1+T)^{p^{n+n_K}} - 1
    pub h_poly: Vec<LocalElem>,
    pub factors: Vec<(DirichletChar, GroupPoly)>,
}

/// Write g = sum_j h_j u^j with u = (1+T)^{p^k} - 1; every remainder must be constant.
pub fn iterated_division(g: &[LocalElem], p: u64, k: u32, ring: &Arc<LocalRing>) -> Result<Vec<LocalElem>> {
    let du = p.pow(k) as usize;
    // u = sum_{j=1}^{du} C(du, j) T^j, monic
    let mut u = vec![0u64; du + 1];
    let mut c = BigUint::from(1u32);
    let q = BigUint::from(ring.q);
    for (j, uj) in u.iter_mut().enumerate() {
        *uj = (&c % &q).try_into().unwrap();
        c = c * (du - j) / (j + 1);
    }
    u[0] = 0;
    let mut cur: Vec<LocalElem> = g.to_vec();
    let mut out = vec![];
    while !cur.is_empty() {
        if cur.len() <= du {
            if let Some(i) = (1..cur.len()).find(|&i| !cur[i].is_zero_rep()) {
                return Err(MtError::DescentResidual { index: i });
            }
            out.push(cur[0].clone());
            break;
        }
        let mut rem = cur.clone();
        let mut quo = vec![LocalElem::zero(ring); cur.len() - du];
        for i in (du..rem.len()).rev() {
            let top = rem[i].clone();
            if top.is_zero_rep() {
                continue;
            }
            quo[i - du] = top.clone();
            for (j, &uj) in u.iter().enumerate().take(du) {
                if uj != 0 {
                    rem[i - du + j] = rem[i - du + j].sub(&top.scale_u(uj));
                }
            }
            rem[i] = LocalElem::zero(ring);
        }
        if let Some(i) = (1..du).find(|&i| !rem[i].is_zero_rep()) {
            return Err(MtError::DescentResidual { index: i });
        }
        out.push(rem[0].clone());
        cur = quo;
    }
    Ok(out)
}

/// Theta_n(f/K) for K given by its character group; precision B for the local ring.
pub fn descend_to_field(sym: &EigenSymbol, x: &AbelianFieldDesc, n: u32, b: u32) -> Result<Descent> {
    let p = sym.p;
    if x.p != p {
        return Err(MtError::Invalid(format!("field described at p = {}, symbol at p = {p}", x.p)));
    }
    let n_k = x.n_k;
    let level = n + n_k;
    let chars = &x.group.elements;
    let field = field_for(p, 0, chars)?;
    let mut factors = Vec::with_capacity(chars.len());
    for psi in chars {
        let m = psi.tame_conductor(p);
        let th = theta_raw(sym, level, m)?;
        let tab = TnTable::new(p, level, m)?;
        factors.push((psi.clone(), twist_exact(&th, psi, &tab, &field)?));
    }
    let mut g = factors[0].1.clone();
    for (_, f) in &factors[1..] {
        g = g.mul(f);
    }
    let step = p.pow(n_k) as usize;
    if let Some(t) = (0..g.len()).find(|&t| t % step != 0 && !g.g[t].is_zero()) {
        return Err(MtError::DescentResidual { index: t });
    }
    let hg = (0..p.pow(n) as usize).map(|k| g.g[k * step].clone()).collect::<Vec<_>>();
    if let Some(k) = hg.iter().position(|c| c.coeffs[1..].iter().any(|x| !x.is_zero())) {
        return Err(MtError::CoefficientDrift { index: k });
    }
    let h_exact = GroupPoly { p, n, field: field.clone(), g: hg };

    let orders: Vec<u64> = chars.iter().map(|c| c.order).collect();
    let ring = LocalRing::for_orders(p, &orders, 0, b)?;
    let g_loc = g.to_lambda(&ring)?;
    let hs = iterated_division(&g_loc.coeffs, p, n_k, &ring)?;
    let digits = ring.f * ring.e;
    for (k, c) in hs.iter().enumerate() {
        if (1..digits).any(|i| c.coeffs()[i] != 0) {
            return Err(MtError::CoefficientDrift { index: k });
        }
    }
    let mut h = LambdaNPoly::from_coeffs(p, n, &ring, hs);
    h.exact_zero = h_exact.is_zero();

    let mut prod = vec![LocalElem::one(&ring)];
    for (_, f) in &factors {
        prod = poly_mul(&prod, &f.to_lambda(&ring)?.coeffs);
    }
    let h_poly = iterated_division(&prod, p, n_k, &ring)?;
    for (k, c) in h_poly.iter().enumerate() {
        if (1..digits).any(|i| c.coeffs()[i] != 0) {
            return Err(MtError::CoefficientDrift { index: k });
        }
    }
    Ok(Descent { n, n_k, g, h_exact, h, h_poly, factors })
}

fn poly_mul(a: &[LocalElem], b: &[LocalElem]) -> Vec<LocalElem> {
    let ring = a[0].ring.clone();
    let mut out = vec![LocalElem::zero(&ring); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero_rep() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero_rep() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
    }
    out
}
