//! Dense exact linear algebra over Q.

use arith_core::Rat;
use num_traits::{One, Zero};

pub type Matrix = Vec<Vec<Rat>>;

/// Row echelon form in place; returns pivot columns. Rows are scaled so pivots are 1 and
/// pivot columns are cleared above and below.
pub fn rref(m: &mut Matrix, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row >= m.len() {
            break;
        }
        let Some(r) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, r);
        let inv = Rat::one() / &m[row][col];
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[row].clone();
        for (r2, other) in m.iter_mut().enumerate() {
            if r2 != row && !other[col].is_zero() {
                let f = other[col].clone();
                for (x, y) in other.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    pivots
}

pub fn rank(m: &Matrix, ncols: usize) -> usize {
    let mut c = m.clone();
    rref(&mut c, ncols).len()
}

/// Basis of {x : m x = 0}, one vector per free column with a 1 there and 0 at other free columns.
pub fn kernel(m: &Matrix, ncols: usize) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let mut e = m.clone();
    let pivots = rref(&mut e, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); ncols];
            v[f] = Rat::one();
            for (row, &pc) in e.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            v
        })
        .collect();
    (basis, free)
}

pub fn mat_vec(m: &Matrix, v: &[Rat]) -> Vec<Rat> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(Rat::zero(), |acc, (a, b)| acc + a * b))
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let k = b.len();
    let n = if k == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| (0..n).map(|j| (0..k).fold(Rat::zero(), |acc, i| acc + &row[i] * &b[i][j])).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use arith_core::rat_int;

    #[test]
    fn kernel_of_rank_one() {
        let m = vec![vec![rat_int(1), rat_int(2), rat_int(3)], vec![rat_int(2), rat_int(4), rat_int(6)]];
        let (k, free) = kernel(&m, 3);
        assert_eq!(free, vec![1, 2]);
        for v in &k {
            assert!(mat_vec(&m, v).iter().all(|x| x.is_zero()));
        }
        assert_eq!(rank(&m, 3), 1);
    }
}
