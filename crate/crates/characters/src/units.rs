//! Structure of (Z/m)^x with a fixed generator system.

use arith_core::numth::{factor, gcd, mul_mod, primitive_root};

/// Generators are taken prime power by prime power in increasing order, lifted by CRT:
/// a primitive root for odd q^e; -1 (and 5 when 8 | m) for the 2-part.
#[derive(Debug, Clone)]
pub struct UnitGroup {
    pub m: u64,
    pub gens: Vec<u64>,
    pub orders: Vec<u64>,
    logs: Vec<Option<Vec<u64>>>,
}

fn crt_lift(x: u64, q: u64, m: u64) -> u64 {
    // y = x mod q, y = 1 mod m/q
    let r = m / q;
    (0..q).map(|k| 1 + k * r).find(|y| y % q == x % q).unwrap() % m
}

impl UnitGroup {
    pub fn new(m: u64) -> Self {
        let mut gens = Vec::new();
        let mut orders = Vec::new();
        for (q, e) in factor(m) {
            let qe = q.pow(e);
            if q == 2 {
                if e >= 2 {
                    gens.push(crt_lift(qe - 1, qe, m));
                    orders.push(2);
                }
                if e >= 3 {
                    gens.push(crt_lift(5, qe, m));
                    orders.push(qe / 4);
                }
            } else {
                gens.push(crt_lift(primitive_root(q, e), qe, m));
                orders.push(qe / q * (q - 1));
            }
        }
        let mut logs = vec![None; m.max(1) as usize];
        let mut exps = vec![0u64; gens.len()];
        let size: u64 = orders.iter().product();
        for _ in 0..size {
            let mut x = 1 % m.max(1);
            for (g, &k) in gens.iter().zip(&exps) {
                for _ in 0..k {
                    x = mul_mod(x, *g, m.max(1));
                }
            }
            logs[x as usize] = Some(exps.clone());
            for i in 0..exps.len() {
                exps[i] += 1;
                if exps[i] < orders[i] {
                    break;
                }
                exps[i] = 0;
            }
        }
        if m <= 1 {
            logs[0] = Some(vec![]);
        }
        UnitGroup { m: m.max(1), gens, orders, logs }
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |a, &b| arith_core::numth::lcm(a, b))
    }

    /// Exponents of a on the generators; None for non-units.
    pub fn log(&self, a: i64) -> Option<&[u64]> {
        let r = arith_core::numth::reduce(a, self.m);
        if gcd(r, self.m) != 1 && self.m > 1 {
            return None;
        }
        self.logs[r as usize].as_deref()
    }

    pub fn units(&self) -> Vec<u64> {
        (0..self.m).filter(|&a| self.m == 1 || gcd(a, self.m) == 1).collect()
    }
}
