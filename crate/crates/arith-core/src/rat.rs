//! Reduced rationals. `BigRational` already keeps gcd(num, den) = 1 and den > 0.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{ArithError, Result};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// p-adic valuation of a nonzero integer.
pub fn val_int(n: &BigInt, p: u64) -> Option<i64> {
    if n.is_zero() {
        return None;
    }
    let pb = BigInt::from(p);
    let mut v = 0;
    let mut m = n.abs();
    loop {
        let (q, r) = m.div_rem(&pb);
        if !r.is_zero() {
            break;
        }
        m = q;
        v += 1;
    }
    Some(v)
}

/// p-adic valuation of a rational; None for zero.
pub fn val_rat(r: &Rat, p: u64) -> Option<i64> {
    let vn = val_int(r.numer(), p)?;
    let vd = val_int(r.denom(), p).unwrap_or(0);
    Some(vn - vd)
}

/// Image of a p-integral rational in Z/q.
pub fn rat_mod(r: &Rat, q: u64) -> Result<u64> {
    let qb = BigInt::from(q);
    let n = r.numer().mod_floor(&qb).to_u64().unwrap();
    let d = r.denom().mod_floor(&qb).to_u64().unwrap();
    let dinv = crate::numth::inv_mod(d, q).ok_or_else(|| ArithError::NonIntegral(r.to_string()))?;
    Ok(crate::numth::mul_mod(n, dinv, q))
}

/// Least common denominator of a slice, and gcd of numerators after clearing it.
pub fn content(v: &[Rat]) -> Rat {
    let mut den = BigInt::one();
    for x in v {
        den = den.lcm(x.denom());
    }
    let mut g = BigInt::zero();
    for x in v {
        let n = x.numer() * (&den / x.denom());
        g = g.gcd(&n);
    }
    if g.is_zero() {
        return Rat::zero();
    }
    Rat::new(g, den)
}

pub fn to_i64(r: &Rat) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuations() {
        assert_eq!(val_rat(&rat(18, 5), 3), Some(2));
        assert_eq!(val_rat(&rat(5, 27), 3), Some(-3));
        assert_eq!(val_rat(&rat(0, 1), 3), None);
    }

    #[test]
    fn content_of_vector() {
        let v = vec![rat(2, 3), rat(4, 9), rat(0, 1)];
        assert_eq!(content(&v), rat(2, 9));
    }

    #[test]
    fn reduction_mod_prime_power() {
        assert_eq!(rat_mod(&rat(1, 2), 9).unwrap(), 5);
        assert!(rat_mod(&rat(1, 3), 9).is_err());
    }
}
