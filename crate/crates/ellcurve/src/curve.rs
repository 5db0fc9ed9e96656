use std::collections::BTreeMap;

use arith_core::numth::{factor, is_prime};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{CurveError, Result};

pub const DEFAULT_COUNT_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionKind {
    Good,
    #[serde(alias = "split")]
    SplitMultiplicative,
    #[serde(alias = "nonsplit")]
    NonsplitMultiplicative,
    Additive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionData {
    pub ell: u64,
    pub kind: ReductionKind,
    pub a_ell: i64,
}

/// JSON form of a curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
    pub a4: i64,
    pub a6: i64,
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(default)]
    pub small_prime_reduction: BTreeMap<u64, ReductionKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ECurve {
    pub a: [BigInt; 5],
    pub c4: BigInt,
    pub c6: BigInt,
    pub disc: BigInt,
    pub conductor: u64,
    pub small_prime_reduction: BTreeMap<u64, ReductionKind>,
    pub label: Option<String>,
    pub count_bound: u64,
}

fn ord(n: &BigInt, l: u64) -> u32 {
    if n.is_zero() {
        return u32::MAX;
    }
    let lb = BigInt::from(l);
    let mut m = n.abs();
    let mut v = 0;
    while (&m % &lb).is_zero() {
        m /= &lb;
        v += 1;
    }
    v
}

impl ECurve {
    pub fn new(a: [i64; 5], conductor: u64) -> Result<Self> {
        Self::with_table(a, conductor, BTreeMap::new())
    }

    pub fn with_table(a: [i64; 5], conductor: u64, table: BTreeMap<u64, ReductionKind>) -> Result<Self> {
        let [a1, a2, a3, a4, a6] = a.map(BigInt::from);
        let b2 = &a1 * &a1 + 4 * &a2;
        let b4 = 2 * &a4 + &a1 * &a3;
        let b6 = &a3 * &a3 + 4 * &a6;
        let b8 = &a1 * &a1 * &a6 + 4 * &a2 * &a6 - &a1 * &a3 * &a4 + &a2 * &a3 * &a3 - &a4 * &a4;
        let c4 = &b2 * &b2 - 24 * &b4;
        let b2c: BigInt = &b2 * &b2 * &b2;
        let c6: BigInt = -b2c + 36 * &b2 * &b4 - 216 * &b6;
        let b228: BigInt = &b2 * &b2 * &b8;
        let disc: BigInt = -b228 - 8 * &b4 * &b4 * &b4 - 27 * &b6 * &b6 + 9 * &b2 * &b4 * &b6;
        let e = ECurve {
            a: [a1, a2, a3, a4, a6],
            c4,
            c6,
            disc,
            conductor,
            small_prime_reduction: table,
            label: None,
            count_bound: DEFAULT_COUNT_BOUND,
        };
        e.validate()?;
        Ok(e)
    }

    pub fn from_spec(spec: &CurveSpec) -> Result<Self> {
        let mut e = Self::with_table(
            [spec.a1, spec.a2, spec.a3, spec.a4, spec.a6],
            spec.n,
            spec.small_prime_reduction.clone(),
        )?;
        e.label = spec.label.clone();
        Ok(e)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let spec: CurveSpec = serde_json::from_str(s).map_err(|e| CurveError::Invalid(e.to_string()))?;
        Self::from_spec(&spec)
    }

    pub fn to_spec(&self) -> CurveSpec {
        let a: Vec<i64> = self.a.iter().map(|x| x.to_i64().unwrap()).collect();
        CurveSpec {
            a1: a[0],
            a2: a[1],
            a3: a[2],
            a4: a[3],
            a6: a[4],
            n: self.conductor,
            small_prime_reduction: self.small_prime_reduction.clone(),
            label: self.label.clone(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.disc.is_zero() {
            return Err(CurveError::Invalid("singular model".into()));
        }
        if self.a.iter().any(|x| x.to_i64().is_none()) {
            return Err(CurveError::Invalid("coefficients must fit in 64 bits".into()));
        }
        if self.conductor == 0 {
            return Err(CurveError::Invalid("conductor must be positive".into()));
        }
        let bad: Vec<u64> = factor(self.conductor).iter().map(|&(q, _)| q).collect();
        for &(q, e) in &factor(self.conductor) {
            if !(&self.disc % BigInt::from(q)).is_zero() {
                return Err(CurveError::ConductorMismatch(format!("{q} divides N but not the discriminant")));
            }
            if q >= 5 {
                let v4 = ord(&self.c4, q);
                let v6 = ord(&self.c6, q);
                let vd = ord(&self.disc, q);
                if v4 >= 4 && v6 >= 6 && vd >= 12 {
                    return Err(CurveError::NotMinimal(q));
                }
                let expected = if v4 == 0 { 1 } else { 2 };
                if e != expected {
                    return Err(CurveError::ConductorMismatch(format!(
                        "exponent of {q} in N is {e}, reduction type needs {expected}"
                    )));
                }
            } else if !self.small_prime_reduction.contains_key(&q) {
                return Err(CurveError::SmallPrimeUnsupported(q));
            }
        }
        // every prime of bad reduction must divide N
        let mut d = self.disc.abs();
        for q in &bad {
            let qb = BigInt::from(*q);
            while (&d % &qb).is_zero() {
                d /= &qb;
            }
        }
        if d > BigInt::from(1) {
            // a remaining factor signals a prime of bad reduction missing from N (for a minimal model)
            let rest = d.to_u64().unwrap_or(u64::MAX);
            if rest != u64::MAX {
                let q = factor(rest)[0].0;
                if q >= 5 || self.small_prime_reduction.get(&q) != Some(&ReductionKind::Good) {
                    return Err(CurveError::ConductorMismatch(format!("{q} divides the discriminant but not N")));
                }
            }
        }
        for (&q, &kind) in &self.small_prime_reduction {
            if q != 2 && q != 3 {
                return Err(CurveError::Invalid(format!("small prime table entry for {q}")));
            }
            if (self.conductor % q == 0) == (kind == ReductionKind::Good) {
                return Err(CurveError::ConductorMismatch(format!("table kind at {q} disagrees with N")));
            }
            if self.conductor % q == 0 {
                let a = self.count_reduced(q);
                let expect = match kind {
                    ReductionKind::SplitMultiplicative => 1,
                    ReductionKind::NonsplitMultiplicative => -1,
                    _ => 0,
                };
                if a != expect {
                    return Err(CurveError::ConductorMismatch(format!(
                        "table kind at {q} disagrees with the reduced curve (a = {a})"
                    )));
                }
            }
        }
        Ok(())
    }

    fn coeffs_mod(&self, l: u64) -> [u64; 5] {
        let lb = BigInt::from(l);
        let v: Vec<u64> = self.a.iter().map(|x| x.mod_floor(&lb).to_u64().unwrap()).collect();
        [v[0], v[1], v[2], v[3], v[4]]
    }

    /// l + 1 - #E~(F_l) for the reduced (possibly singular) cubic.
    pub fn count_reduced(&self, l: u64) -> i64 {
        let [a1, a2, a3, a4, a6] = self.coeffs_mod(l);
        let mut count: u64 = 1;
        if l == 2 {
            for x in 0..2u64 {
                for y in 0..2u64 {
                    let lhs = (y * y + a1 * x * y + a3 * y) % 2;
                    let rhs = (x * x * x + a2 * x * x + a4 * x + a6) % 2;
                    if lhs == rhs {
                        count += 1;
                    }
                }
            }
        } else {
            // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
            let b2 = (a1 * a1 + 4 * a2) % l;
            let b4 = (2 * a4 + a1 * a3) % l;
            let b6 = (a3 * a3 + 4 * a6) % l;
            let mut chi = vec![-1i8; l as usize];
            chi[0] = 0;
            for y in 1..l {
                chi[(y * y % l) as usize] = 1;
            }
            for x in 0..l {
                let v = ((4 * x % l) * x % l * x % l + b2 * x % l * x % l + 2 * b4 % l * x % l + b6) % l;
                count += (1 + chi[v as usize] as i64) as u64;
            }
        }
        l as i64 + 1 - count as i64
    }

    /// a_l by exhaustive point counting, for l of good reduction.
    pub fn count_a_ell(&self, l: u64) -> Result<i64> {
        if !is_prime(l) {
            return Err(CurveError::Invalid(format!("{l} is not prime")));
        }
        if self.conductor % l == 0 {
            return Err(CurveError::BadReduction(l));
        }
        if l > self.count_bound {
            return Err(CurveError::BoundExceeded { ell: l, bound: self.count_bound });
        }
        let a = self.count_reduced(l);
        debug_assert!((a * a) as u64 <= 4 * l);
        Ok(a)
    }

    /// Reduction type at l with the matching a_l.
    pub fn classify_reduction(&self, l: u64) -> Result<ReductionData> {
        if self.conductor % l != 0 {
            return Ok(ReductionData { ell: l, kind: ReductionKind::Good, a_ell: self.count_a_ell(l)? });
        }
        let kind = if l >= 5 {
            let lb = BigInt::from(l);
            if (&self.c4 % &lb).is_zero() {
                ReductionKind::Additive
            } else {
                let m = (-&self.c6).mod_floor(&lb).to_u64().unwrap();
                let is_sq = (1..l).any(|y| y * y % l == m);
                if is_sq {
                    ReductionKind::SplitMultiplicative
                } else {
                    ReductionKind::NonsplitMultiplicative
                }
            }
        } else {
            *self
                .small_prime_reduction
                .get(&l)
                .ok_or(CurveError::SmallPrimeUnsupported(l))?
        };
        let a_ell = match kind {
            ReductionKind::SplitMultiplicative => 1,
            ReductionKind::NonsplitMultiplicative => -1,
            _ => 0,
        };
        Ok(ReductionData { ell: l, kind, a_ell })
    }

    /// a_l for every prime l (good or bad), the Hecke eigenvalue of the attached newform.
    pub fn a_ell(&self, l: u64) -> Result<i64> {
        Ok(self.classify_reduction(l)?.a_ell)
    }

    /// epsilon_N(l): 1 if l does not divide N, else 0.
    pub fn eps(&self, l: u64) -> i64 {
        (self.conductor % l != 0) as i64
    }

    pub fn name(&self) -> String {
        self.label.clone().unwrap_or_else(|| {
            let a: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
            format!("[{}]", a.join(","))
        })
    }
}

/// A few small-conductor optimal curves.
pub fn catalog() -> Vec<ECurve> {
    let mut out = Vec::new();
    let mk = |label: &str, a: [i64; 5], n: u64, table: &[(u64, ReductionKind)]| {
        let mut e = ECurve::with_table(a, n, table.iter().cloned().collect()).expect("catalog curve");
        e.label = Some(label.to_string());
        e
    };
    out.push(mk("11a1", [0, -1, 1, -10, -20], 11, &[]));
    out.push(mk("14a1", [1, 0, 1, 4, -6], 14, &[(2, ReductionKind::NonsplitMultiplicative)]));
    out.push(mk("17a1", [1, -1, 1, -1, -14], 17, &[]));
    out.push(mk("19a1", [0, 1, 1, -9, -15], 19, &[]));
    out.push(mk("37a1", [0, 0, 1, -1, 0], 37, &[]));
    out
}

pub fn by_label(label: &str) -> Option<ECurve> {
    catalog().into_iter().find(|e| e.label.as_deref() == Some(label))
}
