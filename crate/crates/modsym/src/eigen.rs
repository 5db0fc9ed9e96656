//! Eigensymbols of elliptic curves.

use std::sync::Arc;

use arith_core::numth::{factor, gcd, primes_up_to};
use arith_core::rat::content;
use arith_core::{rat_int, Rat};
use ellcurve::ECurve;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Result, SymError};
use crate::linalg::{kernel, mat_vec, Matrix};
use crate::p1::cusp;
use crate::space::{decompose_zero_to, ManinSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(s: i64) -> Sign {
        if s >= 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// The divisor {inf} - {a/m}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CuspPath {
    pub a: i64,
    pub m: i64,
}

impl CuspPath {
    pub fn new(a: i64, m: i64) -> Self {
        let (a, m) = cusp(a as i128, m as i128);
        CuspPath { a: a as i64, m: m as i64 }
    }
}

/// ceil(index(Gamma0(N)) / 12).
pub fn sturm_bound(n: u64) -> u64 {
    let mut idx = n;
    for (q, _) in factor(n) {
        idx = idx / q * (q + 1);
    }
    idx.div_ceil(12)
}

#[derive(Debug, Clone)]
pub struct EigenSymbol {
    pub space: Arc<ManinSpace>,
    pub curve: ECurve,
    pub p: u64,
    /// primitive integer values on the Manin symbols
    pub plus: Vec<i64>,
    pub minus: Vec<i64>,
    /// factor taking the reduced-echelon eigenvector to the stored one
    pub plus_scale: Rat,
    pub minus_scale: Rat,
    /// primes whose Hecke operators cut the eigenspace
    pub hecke_primes: Vec<u64>,
}

/// Scale a rational vector to a primitive integer vector with first nonzero entry positive.
fn primitive(v: &[Rat]) -> (Vec<i64>, Rat) {
    let c = content(v);
    let mut s = Rat::from_integer(1.into()) / c;
    if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        s = -s;
    }
    let out = v.iter().map(|x| (x * &s).to_integer().to_i64().expect("symbol value fits in i64")).collect();
    (out, s)
}

fn sub_scalar(m: &Matrix, a: i64) -> Matrix {
    let mut out = m.clone();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] -= rat_int(a);
    }
    out
}

pub fn isolate_eigensymbol(space: &Arc<ManinSpace>, e: &ECurve, p: u64, sturm_override: Option<u64>) -> Result<EigenSymbol> {
    if e.conductor != space.n {
        return Err(SymError::LevelMismatch { curve: e.conductor, level: space.n });
    }
    let n = space.n;
    let bound = sturm_override.unwrap_or_else(|| sturm_bound(n));
    let mut primes: Vec<u64> = primes_up_to(bound).into_iter().filter(|&l| gcd(l, n) == 1).collect();
    if primes.is_empty() {
        primes.push((2..).find(|&l| arith_core::numth::is_prime(l) && gcd(l, n) == 1).unwrap());
    }
    let dim = space.dim();
    let mut stacked: Matrix = Vec::new();
    for &l in &primes {
        let a = e.a_ell(l)?;
        stacked.extend(sub_scalar(&space.hecke_matrix(l), a));
    }
    let (ker, _) = kernel(&stacked, dim);
    if ker.len() != 2 {
        return Err(SymError::NotRationalNewform(ker.len()));
    }
    let iota = space.iota_matrix();
    let split = |sign: i64| -> Result<(Vec<i64>, Rat)> {
        let mut cand: Vec<Vec<Rat>> = Vec::new();
        for v in &ker {
            let iv = mat_vec(&iota, v);
            let w: Vec<Rat> = v.iter().zip(&iv).map(|(a, b)| a + b * rat_int(sign)).collect();
            if w.iter().any(|x| !x.is_zero()) {
                cand.push(w);
            }
        }
        let Some(first) = cand.first().cloned() else {
            return Err(SymError::SignSplit { sign: sign as i8, dim: 0 });
        };
        // every candidate must be proportional to the first
        let piv = first.iter().position(|x| !x.is_zero()).unwrap();
        for w in &cand[1..] {
            let r = &w[piv] / &first[piv];
            if w.iter().zip(&first).any(|(a, b)| a != &(b * &r)) {
                return Err(SymError::SignSplit { sign: sign as i8, dim: 2 });
            }
        }
        let vals = space.values(&first);
        let (prim, s) = primitive(&vals);
        Ok((prim, s))
    };
    let (plus, plus_scale) = split(1)?;
    let (minus, minus_scale) = split(-1)?;
    Ok(EigenSymbol { space: space.clone(), curve: e.clone(), p, plus, minus, plus_scale, minus_scale, hecke_primes: primes })
}

impl EigenSymbol {
    pub fn build(e: &ECurve, p: u64) -> Result<Self> {
        isolate_eigensymbol(&ManinSpace::new(e.conductor), e, p, None)
    }

    pub fn values(&self, sign: Sign) -> &[i64] {
        match sign {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }

    /// phi^sign{0, a/m}.
    pub fn zero_to(&self, a: i64, m: i64, sign: Sign) -> i64 {
        let v = self.values(sign);
        decompose_zero_to(&self.space.p1, a as i128, m as i128).into_iter().map(|i| v[i]).sum()
    }

    /// phi^sign({inf} - {a/m}) = phi^sign{a/m, inf}.
    pub fn eval(&self, a: i64, m: i64, sign: Sign) -> i64 {
        self.zero_to(1, 0, sign) - self.zero_to(a, m, sign)
    }

    /// phi^+ + phi^- at {inf} - {a/m}.
    pub fn eval_full(&self, a: i64, m: i64) -> i64 {
        self.eval(a, m, Sign::Plus) + self.eval(a, m, Sign::Minus)
    }

    pub fn eval_path(&self, path: CuspPath, sign: Sign) -> Rat {
        rat_int(self.eval(path.a, path.m, sign))
    }

    /// min over Manin symbols of ord_p of the values; 0 after normalization.
    pub fn min_valuation(&self, sign: Sign) -> Option<u32> {
        self.values(sign)
            .iter()
            .filter(|&&x| x != 0)
            .map(|&x| arith_core::numth::val(x.unsigned_abs(), self.p))
            .min()
    }

    /// gcd of |phi^sign{0, b/d}| over gcd(d, N) = 1, d <= bound: the lattice spanned by
    /// integrals over closed paths on X0(N).
    pub fn period_lattice_gcd(&self, sign: Sign, bound: i64) -> i64 {
        let n = self.space.n as i64;
        let mut g = 0i64;
        for d in 1..=bound {
            if d.gcd(&n) != 1 {
                continue;
            }
            for b in 0..d {
                if b.gcd(&d) == 1 {
                    g = g.gcd(&self.zero_to(b, d, sign));
                }
            }
        }
        g
    }
}
