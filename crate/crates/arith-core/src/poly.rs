//! Dense integer polynomials, low degree first.

pub fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic polynomial; panics if the remainder is nonzero.
pub fn poly_div_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    assert_eq!(b[db], 1);
    let mut r = a.to_vec();
    if r.len() <= db {
        assert!(r.iter().all(|&c| c == 0));
        return vec![0];
    }
    let mut q = vec![0i64; r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        if c != 0 {
            for (k, &bk) in b.iter().enumerate() {
                r[i + k] -= c * bk;
            }
        }
    }
    assert!(r.iter().all(|&c| c == 0), "inexact division");
    q
}

/// The m-th cyclotomic polynomial.
pub fn cyclotomic(m: u64) -> Vec<i64> {
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    let mut out = num;
    for d in crate::numth::divisors(m) {
        if d < m {
            out = poly_div_exact(&out, &cyclotomic(d));
        }
    }
    out
}
