//! P^1(Z/N) and cusp classes of Gamma0(N).

use arith_core::numth::{egcd, gcd, inv_mod};

#[derive(Debug, Clone)]
pub struct P1List {
    pub n: u64,
    pub points: Vec<(u64, u64)>,
    index: Vec<u32>,
}

fn canonical(c: u64, d: u64, n: u64) -> (u64, u64) {
    (1..=n.max(1))
        .filter(|&u| gcd(u, n) == 1)
        .map(|u| (u * c % n.max(1), u * d % n.max(1)))
        .min()
        .unwrap()
}

impl P1List {
    pub fn new(n: u64) -> Self {
        let nn = n.max(1);
        let mut points = Vec::new();
        let mut index = vec![u32::MAX; (nn * nn) as usize];
        for c in 0..nn {
            for d in 0..nn {
                if gcd(gcd(c, d), nn) != 1 {
                    continue;
                }
                let k = canonical(c, d, nn);
                let slot = (k.0 * nn + k.1) as usize;
                if index[slot] == u32::MAX {
                    index[slot] = points.len() as u32;
                    points.push(k);
                }
                index[(c * nn + d) as usize] = index[slot];
            }
        }
        P1List { n: nn, points, index }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Index of (c:d), for integers with gcd(c, d, N) = 1.
    pub fn index_of(&self, c: i128, d: i128) -> usize {
        let n = self.n as i128;
        let (c, d) = (c.rem_euclid(n) as u64, d.rem_euclid(n) as u64);
        let i = self.index[(c * self.n + d) as usize];
        assert!(i != u32::MAX, "({c}:{d}) is not in P1(Z/{})", self.n);
        i as usize
    }

    /// An SL2(Z) matrix [a b; c d] whose bottom row reduces to the given point.
    pub fn lift(&self, i: usize) -> [i128; 4] {
        let (c0, d0) = self.points[i];
        let n = self.n as i128;
        let c = if c0 == 0 { n } else { c0 as i128 };
        let mut d = d0 as i128;
        while egcd(c, d).0 != 1 {
            d += n;
        }
        let (_, x, y) = egcd(d, c); // x d + y c = 1
        [x, -y, c, d]
    }
}

/// Cusp x/y with y >= 0, gcd = 1; y = 0 is infinity.
pub type Cusp = (i128, i128);

pub fn cusp(num: i128, den: i128) -> Cusp {
    if den == 0 {
        return (1, 0);
    }
    let g = egcd(num, den).0;
    let (mut a, mut b) = (num / g, den / g);
    if b < 0 {
        a = -a;
        b = -b;
    }
    (a, b)
}

/// Canonical representative of the Gamma0(N)-class of a cusp, as a column mod N.
/// Gamma0(N) reduces onto the upper triangular matrices of SL2(Z/N), and Gamma(N)
/// classes are columns mod N up to sign.
pub fn cusp_class(c: Cusp, n: u64) -> (u64, u64) {
    let nn = n.max(1);
    let (a, m) = ((c.0.rem_euclid(nn as i128)) as u64, (c.1.rem_euclid(nn as i128)) as u64);
    let mut best = (u64::MAX, u64::MAX);
    for x in 1..=nn {
        let Some(xi) = inv_mod(x % nn, nn) else { continue };
        if gcd(x, nn) != 1 {
            continue;
        }
        for y in 0..nn {
            let cand = ((x * a + y * m) % nn, xi * m % nn);
            best = best.min(cand);
        }
    }
    best
}

/// Representatives of the cusp classes, in order of first appearance among 1/0, 0/1, a/c.
pub fn cusp_classes(n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let nn = n.max(1) as i128;
    let mut push = |c: Cusp| {
        let k = cusp_class(c, n);
        if !out.contains(&k) {
            out.push(k);
        }
    };
    push((1, 0));
    for den in 1..=nn {
        for num in 0..den.max(1) {
            if egcd(num, den).0 == 1 {
                push((num, den));
            }
        }
    }
    out
}
