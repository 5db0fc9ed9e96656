//! Kida instances: a curve, p, and abelian fields K in L with [L:K] a power of p.

use arith_core::numth::val;
use arith_core::rat::val_int;
use characters::AbelianFieldDesc;
use ellcurve::{ECurve, ReductionKind};
use modsym::EigenSymbol;
use serde::{Deserialize, Serialize};

use crate::error::{KidaError, Result};

/// How the correction sets are decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Subject {
    /// reduction types at the primes w of L_(n); needs (Add)
    Curve,
    /// conditions on the rational prime below w only; no (Add)
    Eigenform,
}

/// Reading of the eigenform correction sets at primes dividing N.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum P1P2Convention {
    /// P1: l | N and alpha^f = 1, matching the character-sum count at l | N
    #[default]
    Prop34,
    /// P1: l | N and alpha^f != 1, as displayed for eigenforms
    Thm38,
}

#[derive(Debug, Clone)]
pub struct KidaInstance {
    pub sym: EigenSymbol,
    pub p: u64,
    pub k: AbelianFieldDesc,
    pub l: AbelianFieldDesc,
    pub n: u32,
    pub subject: Subject,
    pub convention: P1P2Convention,
    pub precision: u32,
}

impl KidaInstance {
    pub fn new(curve: &ECurve, p: u64, k: AbelianFieldDesc, l: AbelianFieldDesc, n: u32) -> Result<Self> {
        let sym = EigenSymbol::build(curve, p)?;
        Self::with_symbol(sym, k, l, n)
    }

    pub fn with_symbol(sym: EigenSymbol, k: AbelianFieldDesc, l: AbelianFieldDesc, n: u32) -> Result<Self> {
        let p = sym.p;
        let inst = KidaInstance {
            sym,
            p,
            k,
            l,
            n,
            subject: Subject::Curve,
            convention: P1P2Convention::Prop34,
            precision: arith_core::DEFAULT_PRECISION,
        };
        inst.validate()?;
        Ok(inst)
    }

    /// Like [`KidaInstance::with_symbol`], validated under the given subject.
    pub fn configured(
        sym: EigenSymbol,
        k: AbelianFieldDesc,
        l: AbelianFieldDesc,
        n: u32,
        subject: Subject,
        convention: P1P2Convention,
        precision: u32,
    ) -> Result<Self> {
        let p = sym.p;
        let inst = KidaInstance { sym, p, k, l, n, subject, convention, precision };
        inst.validate()?;
        Ok(inst)
    }

    pub fn curve(&self) -> &ECurve {
        &self.sym.curve
    }

    /// [L:K], a power of p.
    pub fn relative_degree(&self) -> u64 {
        self.l.degree() / self.k.degree()
    }

    /// [L_inf : K_inf] = [L:K] / p^{n_L - n_K}.
    pub fn infinite_degree(&self) -> u64 {
        self.relative_degree() / self.p.pow(self.l.n_k - self.k.n_k)
    }

    /// Level of Theta over K on the right side: n + n_L - n_K.
    pub fn k_level(&self) -> u32 {
        self.n + self.l.n_k - self.k.n_k
    }

    fn validate(&self) -> Result<()> {
        let p = self.p;
        if self.k.p != p || self.l.p != p {
            return Err(KidaError::Invalid("fields are described at a different prime".into()));
        }
        if self.n < 1 {
            return Err(KidaError::Invalid("level n must be at least 1".into()));
        }
        if !self.k.group.is_subgroup_of(&self.l.group) {
            return Err(KidaError::Invalid("K is not contained in L".into()));
        }
        let d = self.relative_degree();
        if p.pow(val(d, p)) != d {
            return Err(KidaError::Invalid(format!("[L:K] = {d} is not a power of {p}")));
        }
        let kp = val(self.k.degree(), p);
        if kp > 0 && self.n < val(self.l.degree(), p) {
            return Err(KidaError::Invalid(format!(
                "p | [K:Q] needs n >= ord_p([L:Q]) = {}",
                val(self.l.degree(), p)
            )));
        }
        if self.subject == Subject::Curve {
            check_add(self.curve(), &self.l.layer(self.n)?)?;
        }
        Ok(())
    }
}

/// E stays additive at every prime of F above an additive prime of E.
pub fn check_add(e: &ECurve, f: &AbelianFieldDesc) -> Result<()> {
    for (ell, _) in arith_core::numth::factor(e.conductor) {
        if e.classify_reduction(ell)?.kind != ReductionKind::Additive {
            continue;
        }
        let ram = f.group.splitting(ell).e;
        if ram == 1 {
            continue;
        }
        if ell < 5 {
            return Err(KidaError::AddUndecided(ell));
        }
        let vd = val_int(&e.disc, ell).unwrap_or(0);
        let vj = match val_int(&e.c4, ell) {
            Some(v4) => 3 * v4 - vd,
            None => 0,
        };
        let semistable = if vj < 0 { ram % 2 == 0 } else { (ram as i64 * vd) % 12 == 0 };
        if semistable {
            return Err(KidaError::AddViolated { ell, e: ram });
        }
    }
    Ok(())
}
