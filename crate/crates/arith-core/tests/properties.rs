use arith_core::numth::{gcd, mul_mod, pow_mod};
use arith_core::poly::cyclotomic;
use arith_core::{hensel_factor, rat, teichmuller_decompose, val_p, CycField, CycInt, LocalElem, LocalRing, TnTable};
use proptest::prelude::*;

/// Brute-force oracle: search (omega, t) with omega^{p-1} = 1 and omega (1+p)^t = a.
fn brute_t(a: u64, p: u64, n: u32) -> u64 {
    let q = p.pow(n + 1);
    for t in 0..p.pow(n) {
        let g = pow_mod(1 + p, t, q);
        for w in 1..q {
            if pow_mod(w, p - 1, q) == 1 && mul_mod(w, g, q) == a % q {
                return t;
            }
        }
    }
    unreachable!()
}

#[test]
fn t_table_matches_brute_force() {
    for &(p, n) in &[(3u64, 1u32), (3, 2), (5, 1), (5, 2), (7, 1)] {
        let tab = TnTable::new(p, n, 1).unwrap();
        let q = p.pow(n + 1);
        for a in 1..q {
            if a % p != 0 {
                assert_eq!(tab.t(a as i64).unwrap(), brute_t(a, p, n), "p={p} n={n} a={a}");
            }
        }
    }
}

#[test]
fn generator_change_rescales_logs() {
    let p = 3;
    let n = 3;
    let a = TnTable::new(p, n, 1).unwrap();
    let b = TnTable::with_generator(p, n, 1, (1 + p) * (1 + p)).unwrap();
    let pn = p.pow(n);
    for x in 1..p.pow(n + 1) as i64 {
        if let (Some(ta), Some(tb)) = (a.t(x), b.t(x)) {
            assert_eq!((2 * tb) % pn, ta);
        }
    }
}

#[test]
fn hensel_factor_divides_cyclotomic() {
    for &(d, p, b) in &[(4u64, 3u64, 6u32), (8, 3, 5), (3, 5, 8), (7, 3, 4), (12, 5, 6), (1, 7, 3)] {
        let u = hensel_factor(d, p, b).unwrap();
        let q = p.pow(b);
        let mut r: Vec<i128> = cyclotomic(d).iter().map(|&c| c as i128).collect();
        let du = u.len() - 1;
        for i in (du..r.len()).rev() {
            let c = r[i].rem_euclid(q as i128);
            for k in 0..=du {
                r[i - du + k] -= c * u[k] as i128;
            }
        }
        assert!(r.iter().all(|c| c.rem_euclid(q as i128) == 0), "d={d} p={p}");
    }
}

#[test]
fn cyclo_valuation_matches_local() {
    let f = CycField::new(3, 1, 2).unwrap();
    let ring = LocalRing::new(3, 1, 2, 20).unwrap();
    let one_minus = CycInt::from_int(&f, 1).sub(&CycInt::zeta(&f, 9, 1).unwrap());
    assert_eq!(val_p(&one_minus, &ring).unwrap(), rat(1, 6));
    let three = CycInt::from_int(&f, 3);
    assert_eq!(val_p(&three, &ring).unwrap(), rat(1, 1));
    assert!(val_p(&CycInt::zero(&f), &ring).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn t_is_a_homomorphism(a in 1u64..2000, b in 1u64..2000, pi in 0usize..3, n in 1u32..4, m in prop::sample::select(vec![1u64, 2, 7, 11])) {
        let p = [3u64, 5, 7][pi];
        prop_assume!(m % p != 0 && gcd(a, p * m) == 1 && gcd(b, p * m) == 1);
        let tab = TnTable::new(p, n, m).unwrap();
        let pn = p.pow(n);
        let ab = (a * b) % tab.modulus();
        prop_assert_eq!(tab.t(ab as i64).unwrap(), (tab.t(a as i64).unwrap() + tab.t(b as i64).unwrap()) % pn);
    }

    #[test]
    fn t_reduction_compatible(a in 1u64..5000, pi in 0usize..2, n in 2u32..4) {
        let p = [3u64, 5][pi];
        prop_assume!(a % p != 0);
        let big = TnTable::new(p, n, 1).unwrap();
        for m in 1..n {
            let small = TnTable::new(p, m, 1).unwrap();
            prop_assert_eq!(big.t(a as i64).unwrap() % p.pow(m), small.t(a as i64).unwrap());
        }
    }

    #[test]
    fn teichmuller_recombines(a in 1i64..100000, pi in 0usize..3, n in 0u32..4) {
        let p = [3u64, 5, 7][pi];
        prop_assume!(a as u64 % p != 0);
        let q = p.pow(n + 1);
        let (w, u) = teichmuller_decompose(a, p, n).unwrap();
        prop_assert_eq!(mul_mod(w, u, q), a as u64 % q);
        prop_assert_eq!(pow_mod(w, p - 1, q), 1 % q);
        prop_assert_eq!(u % p, 1 % p);
    }

    #[test]
    fn valuation_is_additive(xs in prop::collection::vec(-30i64..30, 6), ys in prop::collection::vec(-30i64..30, 6)) {
        let ring = LocalRing::new(3, 4, 1, 20).unwrap();
        let build = |v: &[i64]| {
            let mut acc = LocalElem::zero(&ring);
            for (k, &c) in v.iter().enumerate() {
                let z = ring.zeta(12, k as i64).unwrap();
                acc = acc.add(&z.scale(c));
            }
            acc
        };
        let x = build(&xs);
        let y = build(&ys);
        if let (Ok(vx), Ok(vy)) = (x.val(), y.val()) {
            if let Ok(vxy) = x.mul(&y).val() {
                prop_assert_eq!(vxy, vx + vy);
            }
        }
    }
}
