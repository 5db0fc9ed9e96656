//! The space of Q-valued functionals on weight-2 Manin symbols for Gamma0(N).
//!
//! A functional is a function on P^1(Z/N) killed by the two-term relation
//! x + xS = 0 and the three-term relation x + x tau + x tau^2 = 0. The Manin symbol
//! (c:d) stands for the path {g(0), g(inf)} = {b/d, a/c} with g = [a b; c d] in SL2(Z).

use std::sync::Arc;

use arith_core::numth::gcd;
use arith_core::Rat;
use num_traits::Zero;

use crate::linalg::{kernel, rank, Matrix};
use crate::p1::{cusp, cusp_class, cusp_classes, Cusp, P1List};

#[derive(Debug, Clone)]
pub struct ManinSpace {
    pub n: u64,
    pub p1: P1List,
    /// basis of the relation kernel, each a function on p1
    pub basis: Vec<Vec<Rat>>,
    /// coordinates of a functional are its values at these p1 indices
    pub free: Vec<usize>,
    pub cusps: Vec<(u64, u64)>,
    /// boundary of each Manin symbol as (cusp index of a/c, cusp index of b/d)
    pub boundary: Vec<(usize, usize)>,
    pub boundary_rank: usize,
}

/// Index list of Manin symbols whose sum is the path {0, a/m}.
pub fn decompose_zero_to(p1: &P1List, a: i128, m: i128) -> Vec<usize> {
    let (a, m) = cusp(a, m);
    let mut out = Vec::new();
    // convergents, starting from 0/1 and 1/0
    let (mut pp, mut qp) = (0i128, 1i128);
    let (mut pc, mut qc) = (1i128, 0i128);
    out.push(p1.index_of(0, 1));
    if m == 0 {
        return out;
    }
    let (mut x, mut y) = (a, m);
    while y != 0 {
        let q = x.div_euclid(y);
        let r = x.rem_euclid(y);
        let (pn, qn) = (q * pc + pp, q * qc + qp);
        pp = pc;
        qp = qc;
        pc = pn;
        qc = qn;
        let det = pc * qp - pp * qc;
        out.push(p1.index_of(det * qc, qp));
        x = y;
        y = r;
    }
    out
}

impl ManinSpace {
    pub fn new(n: u64) -> Arc<Self> {
        let p1 = P1List::new(n);
        let len = p1.len();
        let mut rel: Matrix = Vec::new();
        let mut push = |idx: &[usize]| {
            let mut row = vec![Rat::zero(); len];
            for &i in idx {
                row[i] += Rat::from_integer(1.into());
            }
            if row.iter().any(|x| !x.is_zero()) {
                rel.push(row);
            }
        };
        for &(c, d) in &p1.points {
            let (c, d) = (c as i128, d as i128);
            push(&[p1.index_of(c, d), p1.index_of(d, -c)]);
            push(&[p1.index_of(c, d), p1.index_of(d, -c - d), p1.index_of(-c - d, c)]);
        }
        let (basis, free) = kernel(&rel, len);
        let cusps = cusp_classes(n);
        let find = |c: Cusp| cusps.iter().position(|&k| k == cusp_class(c, n)).unwrap();
        let boundary: Vec<(usize, usize)> = (0..len)
            .map(|i| {
                let [a, b, c, d] = p1.lift(i);
                (find(cusp(a, c)), find(cusp(b, d)))
            })
            .collect();
        let mut bm: Matrix = vec![vec![Rat::zero(); cusps.len()]; len];
        for (i, &(hi, lo)) in boundary.iter().enumerate() {
            bm[i][hi] += Rat::from_integer(1.into());
            bm[i][lo] -= Rat::from_integer(1.into());
        }
        let boundary_rank = rank(&bm, cusps.len());
        Arc::new(ManinSpace { n, p1, basis, free, cusps, boundary, boundary_rank })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn cuspidal_dim(&self) -> usize {
        self.dim() - self.boundary_rank
    }

    /// phi{0, r} for a functional given by its values on p1.
    pub fn eval_zero_to<T: Clone + std::ops::Add<Output = T>>(&self, values: &[T], zero: T, r: Cusp) -> T {
        decompose_zero_to(&self.p1, r.0, r.1).into_iter().fold(zero, |acc, i| acc + values[i].clone())
    }

    /// phi{alpha, beta} = phi{0, beta} - phi{0, alpha}.
    pub fn eval_between(&self, values: &[Rat], alpha: Cusp, beta: Cusp) -> Rat {
        self.eval_zero_to(values, Rat::zero(), beta) - self.eval_zero_to(values, Rat::zero(), alpha)
    }

    /// Values of T_l phi on every Manin symbol, with
    /// (T_l phi){a, b} = eps phi{l a, l b} + sum_j phi{(a + j)/l, (b + j)/l}.
    pub fn hecke_values(&self, values: &[Rat], l: u64) -> Vec<Rat> {
        let eps = gcd(l, self.n) == 1;
        let li = l as i128;
        let act = |c: Cusp, m: [i128; 4]| -> Cusp {
            // [a b; 0 d] applied to x/y
            if c.1 == 0 {
                return (1, 0);
            }
            cusp(m[0] * c.0 + m[1] * c.1, m[3] * c.1)
        };
        (0..self.p1.len())
            .map(|i| {
                let [a, b, c, d] = self.p1.lift(i);
                let (from, to) = (cusp(b, d), cusp(a, c));
                let mut acc = Rat::zero();
                if eps {
                    acc += self.eval_between(values, act(from, [li, 0, 0, 1]), act(to, [li, 0, 0, 1]));
                }
                for j in 0..li {
                    acc += self.eval_between(values, act(from, [1, j, 0, li]), act(to, [1, j, 0, li]));
                }
                acc
            })
            .collect()
    }

    /// Matrix of T_l on coordinates; column k is T_l applied to basis vector k.
    pub fn hecke_matrix(&self, l: u64) -> Matrix {
        let cols: Vec<Vec<Rat>> = self.basis.iter().map(|w| self.coords(&self.hecke_values(w, l))).collect();
        transpose(&cols, self.dim())
    }

    /// The involution phi(c:d) -> phi(-c:d) on coordinates.
    pub fn iota_matrix(&self) -> Matrix {
        let cols: Vec<Vec<Rat>> = self.basis.iter().map(|w| self.coords(&self.iota_values(w))).collect();
        transpose(&cols, self.dim())
    }

    pub fn iota_values(&self, values: &[Rat]) -> Vec<Rat> {
        self.p1
            .points
            .iter()
            .map(|&(c, d)| values[self.p1.index_of(-(c as i128), d as i128)].clone())
            .collect()
    }

    pub fn coords(&self, values: &[Rat]) -> Vec<Rat> {
        self.free.iter().map(|&f| values[f].clone()).collect()
    }

    pub fn values(&self, coords: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.p1.len()];
        for (w, c) in self.basis.iter().zip(coords) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(w) {
                *o += c * x;
            }
        }
        out
    }
}

fn transpose(cols: &[Vec<Rat>], n: usize) -> Matrix {
    (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
}
