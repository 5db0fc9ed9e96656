//! Per-prime correction data, aggregated over the primes w of L_(n) above each l.

use arith_core::numth::{factor, pow_mod, reduce};
use ellcurve::{local_p_torsion, ReductionKind};
use serde::Serialize;

use crate::error::Result;
use crate::instance::{KidaInstance, P1P2Convention, Subject};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Class {
    P1,
    P2,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeData {
    pub ell: u64,
    pub reduction: ReductionKind,
    /// e, f of w over Q, and the number of w above l in L_(n)
    pub e_abs: u64,
    pub f_abs: u64,
    pub count: u64,
    /// e, f of w over K_(n + n_L - n_K)
    pub e_rel: u64,
    pub f_rel: u64,
    pub class: Class,
    /// count f_rel (e_rel - 1), doubled on P2
    pub contribution: u64,
}

/// Every l != p ramified in L_(n) / K_(n + n_L - n_K), with its class.
pub fn build_p1_p2(inst: &KidaInstance) -> Result<Vec<PrimeData>> {
    let p = inst.p;
    let top = inst.l.layer(inst.n)?;
    let base = inst.k.layer(inst.k_level())?;
    let e = inst.curve();
    let mut out = vec![];
    for (ell, _) in factor(top.conductor()) {
        if ell == p {
            continue;
        }
        let sl = top.group.splitting(ell);
        let sk = base.group.splitting(ell);
        let e_rel = sl.e / sk.e;
        let f_rel = sl.f / sk.f;
        if e_rel == 1 {
            continue;
        }
        let red = e.classify_reduction(ell)?;
        let f_abs = sl.f as u32;
        let class = match inst.subject {
            Subject::Curve => match red.kind {
                ReductionKind::SplitMultiplicative => Class::P1,
                ReductionKind::NonsplitMultiplicative if f_abs % 2 == 0 => Class::P1,
                ReductionKind::Good if local_p_torsion(e, ell, f_abs, p)? => Class::P2,
                _ => Class::Neither,
            },
            Subject::Eigenform => {
                if e.conductor % ell == 0 {
                    let one = pow_mod(reduce(red.a_ell, p), f_abs as u64, p) == 1;
                    match (inst.convention, one) {
                        (P1P2Convention::Prop34, true) | (P1P2Convention::Thm38, false) => Class::P1,
                        _ => Class::Neither,
                    }
                } else if local_p_torsion(e, ell, f_abs, p)? {
                    Class::P2
                } else {
                    Class::Neither
                }
            }
        };
        let weight = match class {
            Class::P1 => 1,
            Class::P2 => 2,
            Class::Neither => 0,
        };
        out.push(PrimeData {
            ell,
            reduction: red.kind,
            e_abs: sl.e,
            f_abs: sl.f,
            count: sl.g,
            e_rel,
            f_rel,
            class,
            contribution: weight * sl.g * f_rel * (e_rel - 1),
        });
    }
    Ok(out)
}
