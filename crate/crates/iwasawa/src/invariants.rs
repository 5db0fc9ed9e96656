//! mu and lambda of an element of Lambda_n.

use arith_core::{rat_int, LocalElem, Rat};
use mazur_tate::LambdaNPoly;
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::error::{IwError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantPair {
    /// None for F = 0
    pub mu: Option<Rat>,
    pub lambda: Option<u64>,
    /// digits of precision left above mu
    pub precision_margin: Option<Rat>,
    /// lambda >= p^n - p^{n-1}: too close to the ring size to be read as stable
    pub level_bound: bool,
}

impl InvariantPair {
    pub fn infinite() -> Self {
        InvariantPair { mu: None, lambda: None, precision_margin: None, level_bound: false }
    }

    pub fn is_infinite(&self) -> bool {
        self.mu.is_none()
    }

    pub fn mu_is_zero(&self) -> bool {
        self.mu.as_ref().is_some_and(|m| *m == rat_int(0))
    }
}

impl Serialize for InvariantPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("InvariantPair", 4)?;
        st.serialize_field("mu", &self.mu.as_ref().map_or("inf".to_string(), |m| m.to_string()))?;
        match self.lambda {
            Some(l) => st.serialize_field("lambda", &l)?,
            None => st.serialize_field("lambda", "inf")?,
        }
        st.serialize_field("precision_margin", &self.precision_margin.as_ref().map(|m| m.to_string()))?;
        st.serialize_field("level_bound", &self.level_bound)?;
        st.end()
    }
}

impl std::fmt::Display for InvariantPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (&self.mu, self.lambda) {
            (Some(m), Some(l)) => write!(f, "mu = {m}, lambda = {l}"),
            _ => write!(f, "mu = inf, lambda = inf"),
        }
    }
}

/// mu = min ord_p(a_i), lambda = least i attaining it.
pub fn invariants(f: &LambdaNPoly) -> Result<InvariantPair> {
    if f.exact_zero {
        return Ok(InvariantPair::infinite());
    }
    let (mu, lambda, margin) = min_val(&f.coeffs, f.ring.b, f.ring.known_precision())?;
    let len = f.p.pow(f.n);
    let bound = if f.n == 0 { 1 } else { len - len / f.p };
    Ok(InvariantPair { mu: Some(mu), lambda: Some(lambda), precision_margin: Some(margin), level_bound: lambda >= bound })
}

/// mu and lambda of a polynomial in O[T] with no reduction; `exact_zero` as for Lambda_n.
pub fn poly_invariants(coeffs: &[LocalElem], exact_zero: bool) -> Result<InvariantPair> {
    if exact_zero || coeffs.is_empty() {
        return Ok(InvariantPair::infinite());
    }
    let ring = &coeffs[0].ring;
    let (mu, lambda, margin) = min_val(coeffs, ring.b, ring.known_precision())?;
    Ok(InvariantPair { mu: Some(mu), lambda: Some(lambda), precision_margin: Some(margin), level_bound: false })
}

fn min_val(coeffs: &[LocalElem], cap: u32, known: Rat) -> Result<(Rat, u64, Rat)> {
    let mut best: Option<(Rat, usize)> = None;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero_rep() {
            continue;
        }
        let v = match c.val() {
            Ok(v) => v,
            Err(_) => continue,
        };
        if best.as_ref().is_none_or(|(b, _)| v < *b) {
            best = Some((v, i));
        }
    }
    let (mu, lambda) = best.ok_or(IwError::PrecisionExhausted { cap })?;
    let margin = known - &mu;
    Ok((mu, lambda as u64, margin))
}
