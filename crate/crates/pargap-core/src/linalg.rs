//! Exact linear algebra over the rationals.
//!
//! Everything downstream (root lattices, annihilators, prolongations,
//! deformation checks) reduces to rank / nullspace / span questions, and all
//! of it must be exact: a single rounded pivot would silently change a
//! symmetry dimension. We therefore work over `Ratio<i128>` throughout.

use num::rational::Ratio;
use num::{One, Signed, Zero};

pub type Q = Ratio<i128>;

pub fn q(n: impl Into<i128>) -> Q {
    Ratio::from_integer(n.into())
}

pub fn qr(n: i128, d: i128) -> Q {
    Ratio::new(n, d)
}

/// Reduces `m` to row echelon form in place; returns the pivot columns.
pub fn row_echelon(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(best) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, best);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for cc in c..cols {
                    let sub = f * m[r][cc];
                    m[i][cc] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(mut m: Vec<Vec<Q>>) -> usize {
    row_echelon(&mut m).len()
}

/// Basis of the right null space `{x : m x = 0}`.
pub fn nullspace(mut m: Vec<Vec<Q>>, cols: usize) -> Vec<Vec<Q>> {
    let pivots = row_echelon(&mut m);
    let pivot_set: Vec<bool> = {
        let mut v = vec![false; cols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set[free] {
            continue;
        }
        let mut vec = vec![Q::zero(); cols];
        vec[free] = Q::one();
        for (row, &p) in pivots.iter().enumerate() {
            vec[p] = -m[row][free];
        }
        basis.push(clear_denominators(vec));
    }
    basis
}

/// One exact solution of `m x = b`, if any.
pub fn solve(m: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut aug: Vec<Vec<Q>> = m
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let pivots = row_echelon(&mut aug);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = aug[row][cols];
    }
    Some(x)
}

/// Scales a rational vector to a primitive integer vector (nicer to print,
/// and keeps numerators small across long reductions).
pub fn clear_denominators(mut v: Vec<Q>) -> Vec<Q> {
    let mut lcm: i128 = 1;
    for x in &v {
        lcm = num::integer::lcm(lcm, *x.denom());
    }
    let mut gcd: i128 = 0;
    for x in v.iter_mut() {
        *x *= q(lcm);
        gcd = num::integer::gcd(gcd, x.numer().abs());
    }
    if gcd > 1 {
        for x in v.iter_mut() {
            *x /= q(gcd);
        }
    }
    v
}

/// An incrementally built subspace kept in reduced row echelon form.
///
/// `reduce` returns the residual of a vector against the current basis, so
/// membership tests and completions share one code path.
#[derive(Clone, Debug, Default)]
pub struct Span {
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.rows
    }

    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p];
                for (x, y) in v.iter_mut().zip(row) {
                    let sub = f * *y;
                    *x -= sub;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Inserts `v` if independent of the current span; returns true if the
    /// dimension grew.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            *x *= inv;
        }
        for (row, &rp) in self.rows.iter_mut().zip(&self.pivots) {
            if !row[p].is_zero() && rp != p {
                let f = row[p];
                for (x, y) in row.iter_mut().zip(&r) {
                    let sub = f * *y;
                    *x -= sub;
                }
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }
}
