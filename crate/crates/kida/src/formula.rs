//! Both sides of the formula, and the compatibility along a tower M in K in L.

use characters::AbelianFieldDesc;
use arith_core::TnTable;
use iwasawa::{g_q_layer, invariants, poly_invariants, InvariantPair};
use mazur_tate::descend_to_field;
use modsym::EigenSymbol;
use serde::Serialize;

use crate::error::Result;
use crate::instance::{KidaInstance, P1P2Convention, Subject};
use crate::primes::{build_p1_p2, Class, PrimeData};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Equal,
    Unequal,
    SkippedMuPositive,
}

#[derive(Debug, Clone, Serialize)]
pub struct KidaReport {
    pub curve: String,
    pub p: u64,
    pub n: u32,
    pub k_degree: u64,
    pub l_degree: u64,
    pub n_k: u32,
    pub n_l: u32,
    pub subject: Subject,
    pub convention: P1P2Convention,
    /// invariants of Theta_n(E/L)
    pub theta_l: FieldInvariants,
    /// invariants of Theta_{n + n_L - n_K}(E/K)
    pub theta_k: FieldInvariants,
    pub k_level: u32,
    pub infinite_degree: u64,
    pub lhs: Option<u64>,
    pub rhs_base: Option<u64>,
    pub primes: Vec<PrimeData>,
    pub p1_contrib: u64,
    pub p2_contrib: u64,
    pub rhs: Option<u64>,
    /// rhs does not fit below p^n, the size of Lambda_n
    pub rhs_exceeds_level: bool,
    /// some twisted factor over K, raised by the largest possible jump at the primes in
    /// P1 and P2, reaches p^{n+n_L}: the factors over L then wrap and mu over L need not vanish
    pub factor_wraps: bool,
    pub verdict: Verdict,
}

impl KidaReport {
    pub fn corrections(&self) -> u64 {
        self.p1_contrib + self.p2_contrib
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FieldInvariants {
    /// from the product in O[T]
    pub theta: InvariantPair,
    /// from the product in Lambda_{n+n_F}; differs once the lambdas add up past p^n
    pub reduced: InvariantPair,
    /// (character, invariants of its twisted factor)
    pub factors: Vec<(String, InvariantPair)>,
}

fn factor_label(c: &characters::DirichletChar) -> String {
    format!("{}:{}", c.conductor, c.order)
}

/// lambda and mu of Theta_n(E/F), F given by its character group.
pub fn theta_over(sym: &EigenSymbol, f: &AbelianFieldDesc, n: u32, b: u32) -> Result<FieldInvariants> {
    let d = descend_to_field(sym, f, n, b)?;
    let any_zero = d.factors.iter().any(|(_, g)| g.is_zero());
    let theta = poly_invariants(&d.h_poly, any_zero)?;
    let reduced = if d.h_exact.is_zero() { InvariantPair::infinite() } else { invariants(&d.h)? };
    let ring = d.h.ring.clone();
    let mut factors = vec![];
    for (c, g) in &d.factors {
        let inv = if g.is_zero() { InvariantPair::infinite() } else { invariants(&g.to_lambda(&ring)?)? };
        factors.push((factor_label(c), inv));
    }
    Ok(FieldInvariants { theta, reduced, factors })
}

pub fn verify_kida(inst: &KidaInstance) -> Result<KidaReport> {
    let p = inst.p;
    let theta_l = theta_over(&inst.sym, &inst.l, inst.n, inst.precision)?;
    let theta_k = theta_over(&inst.sym, &inst.k, inst.k_level(), inst.precision)?;
    let primes = build_p1_p2(inst)?;
    let sum = |c: Class| primes.iter().filter(|x| x.class == c).map(|x| x.contribution).sum::<u64>();
    let p1_contrib = sum(Class::P1);
    let p2_contrib = sum(Class::P2);
    let deg = inst.infinite_degree();
    let rhs_base = theta_k.theta.lambda.map(|l| deg * l);
    let rhs = rhs_base.map(|b| b + p1_contrib + p2_contrib);
    let level = inst.n + inst.l.n_k;
    let table = TnTable::new(p, level, 1)?;
    let jump: u64 = primes
        .iter()
        .map(|x| match x.class {
            Class::P1 => g_q_layer(x.ell, &table),
            Class::P2 => 2 * g_q_layer(x.ell, &table),
            Class::Neither => 0,
        })
        .sum();
    let k_max = theta_k.factors.iter().filter_map(|(_, f)| f.lambda).max().unwrap_or(0);
    let factor_wraps = jump > 0 && k_max + jump >= p.pow(level);
    let verdict = if !theta_k.theta.mu_is_zero() {
        Verdict::SkippedMuPositive
    } else if theta_l.theta.mu_is_zero() && theta_l.theta.lambda == rhs {
        Verdict::Equal
    } else {
        Verdict::Unequal
    };
    Ok(KidaReport {
        curve: inst.curve().name(),
        p,
        n: inst.n,
        k_degree: inst.k.degree(),
        l_degree: inst.l.degree(),
        n_k: inst.k.n_k,
        n_l: inst.l.n_k,
        subject: inst.subject,
        convention: inst.convention,
        lhs: theta_l.theta.lambda,
        theta_l,
        theta_k,
        k_level: inst.k_level(),
        infinite_degree: deg,
        rhs_base,
        primes,
        p1_contrib,
        p2_contrib,
        factor_wraps,
        rhs_exceeds_level: rhs.is_some_and(|r| r >= p.pow(inst.n)),
        rhs,
        verdict,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TowerReport {
    pub l_over_m: KidaReport,
    pub k_over_m: KidaReport,
    pub l_over_k: KidaReport,
    /// C(L/K) = C(L/M) - [L_inf:K_inf] C(K/M)
    pub corrections_consistent: bool,
    /// lambda(L) - [L_inf:K_inf] lambda(K) = C(L/M) - [L_inf:K_inf] C(K/M)
    pub lambdas_consistent: bool,
    pub consistent: bool,
}

/// The three reports for M in K in L with p not dividing [M:Q] and n >= ord_p([L:Q]).
pub fn verify_tower_consistency(
    sym: &EigenSymbol,
    m: &AbelianFieldDesc,
    k: &AbelianFieldDesc,
    l: &AbelianFieldDesc,
    n: u32,
    precision: u32,
) -> Result<TowerReport> {
    let mk = |lo: &AbelianFieldDesc, hi: &AbelianFieldDesc, lev: u32| -> Result<KidaReport> {
        let mut inst = KidaInstance::with_symbol(sym.clone(), lo.clone(), hi.clone(), lev)?;
        inst.precision = precision;
        verify_kida(&inst)
    };
    let l_over_m = mk(m, l, n)?;
    let l_over_k = mk(k, l, n)?;
    let k_over_m = mk(m, k, n + l.n_k - k.n_k)?;
    let d = l_over_k.infinite_degree as i64;
    let c = |r: &KidaReport| r.corrections() as i64;
    let corrections_consistent = c(&l_over_k) == c(&l_over_m) - d * c(&k_over_m);
    let lambdas_consistent = match (l_over_k.lhs, l_over_k.theta_k.theta.lambda) {
        (Some(a), Some(b)) => a as i64 - d * b as i64 == c(&l_over_m) - d * c(&k_over_m),
        _ => false,
    };
    let consistent = corrections_consistent && lambdas_consistent;
    Ok(TowerReport { l_over_m, k_over_m, l_over_k, corrections_consistent, lambdas_consistent, consistent })
}
