//! Small-integer number theory on machine words.

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Extended gcd on signed integers: returns (g, x, y) with ax + by = g.
pub fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = egcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(base: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut b = base % m;
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = egcd(a as i128 % m as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i128) as u64)
}

/// Reduce a signed integer into [0, m).
pub fn reduce(a: i64, m: u64) -> u64 {
    (a as i128).rem_euclid(m as i128) as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return vec![];
    }
    let mut sieve = vec![true; n as usize + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n as usize {
        if sieve[i] {
            let mut j = i * i;
            while j <= n as usize {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (0..=n).filter(|&k| sieve[k as usize]).collect()
}

/// Prime factorization as (prime, exponent) pairs, primes increasing.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factor(n)
        .iter()
        .fold(n, |acc, &(q, _)| acc / q * (q - 1))
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).take_while(|d| d * d <= n).filter(|d| n % d == 0).collect();
    let mut big: Vec<u64> = out.iter().rev().map(|d| n / d).filter(|&e| e * e != n).collect();
    out.append(&mut big);
    out
}

/// Exponent of `p` dividing `n` (n > 0).
pub fn val(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n > 0 && n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// Multiplicative order of `a` modulo `m`; None when `a` is not a unit.
pub fn mult_order(a: u64, m: u64) -> Option<u64> {
    if gcd(a % m, m) != 1 {
        return None;
    }
    if m == 1 {
        return Some(1);
    }
    let lam = carmichael(m);
    let mut ord = lam;
    for (q, _) in factor(lam) {
        while ord % q == 0 && pow_mod(a, ord / q, m) == 1 {
            ord /= q;
        }
    }
    Some(ord)
}

pub fn carmichael(m: u64) -> u64 {
    factor(m).iter().fold(1, |acc, &(q, e)| {
        let l = if q == 2 && e >= 3 {
            1u64 << (e - 2)
        } else {
            (q - 1) * q.pow(e - 1)
        };
        lcm(acc, l)
    })
}

/// Smallest primitive root modulo an odd prime power.
pub fn primitive_root(q: u64, e: u32) -> u64 {
    let m = q.pow(e);
    let phi = (q - 1) * q.pow(e - 1);
    (2..m)
        .find(|&g| gcd(g, q) == 1 && mult_order(g, m) == Some(phi))
        .unwrap_or(1)
}

/// Solve x = r_i mod m_i for pairwise coprime moduli.
pub fn crt(residues: &[(u64, u64)]) -> u64 {
    let mut x: u64 = 0;
    let mut m: u64 = 1;
    for &(r, mi) in residues {
        let inv = inv_mod(m % mi, mi).expect("moduli must be coprime");
        let t = mul_mod((r + mi - x % mi) % mi, inv, mi);
        x += m * t;
        m *= mi;
        x %= m;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_roots() {
        assert_eq!(mult_order(2, 7), Some(3));
        assert_eq!(mult_order(4, 9), Some(3));
        assert_eq!(primitive_root(3, 2), 2);
        assert_eq!(primitive_root(7, 1), 3);
        assert_eq!(carmichael(8), 2);
        assert_eq!(euler_phi(63), 36);
    }

    #[test]
    fn crt_small() {
        let x = crt(&[(2, 3), (3, 5), (2, 7)]);
        assert_eq!(x, 23);
    }

    #[test]
    fn divisors_sorted() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(9), vec![1, 3, 9]);
    }
}
