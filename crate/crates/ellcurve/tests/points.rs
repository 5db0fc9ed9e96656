use ellcurve::{by_label, catalog, count_over_extension, local_p_torsion, ECurve, ReductionKind};
use num_bigint::BigInt;
use proptest::prelude::*;

/// F_{l^f} with elements encoded as base-l digit vectors packed into usize.
struct Gf {
    l: usize,
    f: usize,
    q: usize,
    modulus: Vec<usize>, // monic, degree f, low to high without the leading 1
}

impl Gf {
    fn new(l: usize, f: usize) -> Self {
        let q = l.pow(f as u32);
        for code in 0..q {
            let modulus: Vec<usize> = (0..f).map(|i| code / l.pow(i as u32) % l).collect();
            let g = Gf { l, f, q, modulus };
            if g.is_irreducible() {
                return g;
            }
        }
        unreachable!()
    }

    fn digits(&self, x: usize) -> Vec<usize> {
        (0..self.f).map(|i| x / self.l.pow(i as u32) % self.l).collect()
    }

    fn pack(&self, d: &[usize]) -> usize {
        d.iter().rev().fold(0, |acc, &c| acc * self.l + c)
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.digits(a), self.digits(b));
        self.pack(&x.iter().zip(&y).map(|(u, v)| (u + v) % self.l).collect::<Vec<_>>())
    }

    fn scal(&self, c: usize) -> usize {
        c % self.l
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.digits(a), self.digits(b));
        let mut r = vec![0usize; 2 * self.f];
        for i in 0..self.f {
            for j in 0..self.f {
                r[i + j] = (r[i + j] + x[i] * y[j]) % self.l;
            }
        }
        for k in (self.f..2 * self.f).rev() {
            let c = r[k];
            if c != 0 {
                r[k] = 0;
                for (i, &m) in self.modulus.iter().enumerate() {
                    r[k - self.f + i] = (r[k - self.f + i] + self.l * self.l - c * m % self.l) % self.l;
                }
            }
        }
        self.pack(&r[..self.f])
    }

    fn is_irreducible(&self) -> bool {
        // the quotient is a field iff every nonzero element satisfies a^{q-1} = 1
        (1..self.q).all(|a| self.pow(a, self.q - 1) == 1)
    }

    fn pow(&self, a: usize, mut e: usize) -> usize {
        let (mut r, mut b) = (1, a);
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    fn frob(&self, a: usize) -> usize {
        self.pow(a, self.l)
    }

    fn trace(&self, a: usize) -> usize {
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.f {
            acc = self.add(acc, x);
            x = self.frob(x);
        }
        acc
    }

    fn inv(&self, a: usize) -> usize {
        (1..self.q).find(|&b| self.mul(a, b) == 1).unwrap()
    }
}

fn brute_count(e: &ECurve, l: usize, f: usize) -> usize {
    let gf = Gf::new(l, f);
    let c: Vec<usize> = e
        .a
        .iter()
        .map(|x| {
            let m = ((x % BigInt::from(l)) + BigInt::from(l)) % BigInt::from(l);
            gf.scal(m.to_string().parse().unwrap())
        })
        .collect();
    let [a1, a2, a3, a4, a6] = [c[0], c[1], c[2], c[3], c[4]];
    let mut squares = vec![false; gf.q];
    for y in 0..gf.q {
        squares[gf.mul(y, y)] = true;
    }
    let mut count = 1;
    for x in 0..gf.q {
        // y^2 + b y = r
        let b = gf.add(gf.mul(a1, x), a3);
        let x2 = gf.mul(x, x);
        let r = [gf.mul(x2, x), gf.mul(a2, x2), gf.mul(a4, x), a6].into_iter().fold(0, |s, t| gf.add(s, t));
        if l == 2 {
            if b == 0 {
                count += 1;
            } else {
                let binv = gf.inv(b);
                let z = gf.mul(r, gf.mul(binv, binv));
                if gf.trace(z) == 0 {
                    count += 2;
                }
            }
        } else {
            // (2y + b)^2 = b^2 + 4 r
            let d = gf.add(gf.mul(b, b), gf.mul(gf.scal(4), r));
            count += if d == 0 {
                1
            } else if squares[d] {
                2
            } else {
                0
            };
        }
    }
    count
}

#[test]
fn a_ell_examples() {
    let e = by_label("11a1").unwrap();
    assert_eq!(brute_count(&e, 2, 1), 5);
    assert_eq!(brute_count(&e, 3, 1), 5);
    assert_eq!(e.count_a_ell(2).unwrap(), -2);
    assert_eq!(e.count_a_ell(3).unwrap(), -1);
}

#[test]
fn hasse_bound() {
    for e in catalog() {
        for l in arith_core::numth::primes_up_to(400) {
            if e.conductor % l != 0 {
                let a = e.count_a_ell(l).unwrap();
                assert!((a * a) as u64 <= 4 * l, "{} l={l}", e.name());
            }
        }
    }
}

#[test]
fn extension_counts_match_brute_force() {
    for e in catalog() {
        for &l in &[2usize, 3, 5, 7] {
            if e.conductor % l as u64 == 0 {
                continue;
            }
            let a = e.count_a_ell(l as u64).unwrap();
            let mut f = 1;
            while l.pow(f as u32) <= 800 {
                let brute = brute_count(&e, l, f);
                assert_eq!(count_over_extension(a, l as u64, f as u32), BigInt::from(brute), "{} l={l} f={f}", e.name());
                f += 1;
            }
        }
    }
}

#[test]
fn local_torsion_matches_point_counts() {
    // recurrence counts agree with brute force above, so the full l^f <= 10^4 range uses them
    for e in catalog() {
        for l in arith_core::numth::primes_up_to(100) {
            if e.conductor % l == 0 {
                continue;
            }
            let a = e.count_a_ell(l).unwrap();
            for &p in &[3u64, 5, 7] {
                if p == l {
                    continue;
                }
                let mut f = 1u32;
                while l.pow(f) <= 10_000 {
                    let n = count_over_extension(a, l, f);
                    let div = (&n % BigInt::from(p)) == BigInt::from(0);
                    assert_eq!(local_p_torsion(&e, l, f, p).unwrap(), div, "{} l={l} f={f} p={p}", e.name());
                    f += 1;
                }
            }
        }
    }
}

#[test]
fn eleven_a1_at_two_mod_five() {
    let e = by_label("11a1").unwrap();
    for f in 1..=4usize {
        let brute = brute_count(&e, 2, f);
        assert_eq!(local_p_torsion(&e, 2, f as u32, 5).unwrap(), brute % 5 == 0, "f={f}");
    }
}

#[test]
fn fourteen_a1_reduction() {
    let e = by_label("14a1").unwrap();
    assert_eq!(e.classify_reduction(7).unwrap().kind, ReductionKind::SplitMultiplicative);
    assert_eq!(e.classify_reduction(2).unwrap().kind, ReductionKind::NonsplitMultiplicative);
    assert_eq!(e.count_reduced(2), -1);
    assert_eq!(e.count_reduced(7), 1);
}

#[test]
fn json_round_trip() {
    let e = by_label("14a1").unwrap();
    let s = serde_json::to_string(&e.to_spec()).unwrap();
    let back = ECurve::from_json(&s).unwrap();
    assert_eq!(back.a, e.a);
    assert_eq!(back.small_prime_reduction, e.small_prime_reduction);
    assert!(ECurve::from_json(r#"{"a1":0,"a2":-1,"a3":1,"a4":-10,"a6":-20,"N":13}"#).is_err());
    assert!(ECurve::from_json(r#"{"a1":0,"a2":-1,"a3":1,"a4":-10,"a6":-20,"N":11,"x":1}"#).is_err());
}

fn transform(a: [i64; 5], u: i64, r: i64, s: i64, t: i64) -> [i64; 5] {
    let [a1, a2, a3, a4, a6] = a;
    let a1p = (a1 + 2 * s) * u;
    let a2p = a2 - s * a1 + 3 * r - s * s;
    let a3p = (a3 + r * a1 + 2 * t) * u;
    let a4p = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
    let a6p = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
    [a1p, a2p, a3p, a4p, a6p]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduction_stable_under_isomorphism(idx in 0usize..5, neg in any::<bool>(), r in -3i64..4, s in -2i64..3, t in -3i64..4) {
        let e = &catalog()[idx];
        let a: Vec<i64> = e.a.iter().map(|x| x.to_string().parse().unwrap()).collect();
        let u = if neg { -1 } else { 1 };
        let b = transform([a[0], a[1], a[2], a[3], a[4]], u, r, s, t);
        let e2 = ECurve::with_table(b, e.conductor, e.small_prime_reduction.clone()).unwrap();
        for l in arith_core::numth::primes_up_to(60) {
            let x = e.classify_reduction(l).unwrap();
            let y = e2.classify_reduction(l).unwrap();
            prop_assert_eq!(x, y);
        }
    }
}
