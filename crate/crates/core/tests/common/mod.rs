//! Independent oracles for the integration tests. Nothing here calls the
//! crate's linear algebra, double description or triangulation code.

#![allow(dead_code)]

use igusa_core::polyhedra::MonomialIdeal;
use igusa_core::ring::BiPoly;
use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Q = Ratio<i128>;

pub fn q(x: i64) -> Q {
    Q::from_integer(x as i128)
}

/// Solve `sum c_j basis[j] = x` for linearly independent `basis`; `None`
/// when `x` is outside the span or the basis is dependent.
pub fn solve(basis: &[Vec<i64>], x: &[i64]) -> Option<Vec<Q>> {
    let n = x.len();
    let r = basis.len();
    // rows: coordinates, columns: basis vectors plus right-hand side
    let mut m: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut row: Vec<Q> = basis.iter().map(|b| q(b[i])).collect();
            row.push(q(x[i]));
            row
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..r {
        let Some(p) = (pivot_row..n).find(|&i| !m[i][col].is_zero()) else {
            return None;
        };
        m.swap(pivot_row, p);
        let inv = m[pivot_row][col].recip();
        for v in m[pivot_row].iter_mut() {
            *v *= inv;
        }
        for i in 0..n {
            if i != pivot_row && !m[i][col].is_zero() {
                let f = m[i][col];
                for k in 0..=r {
                    let sub = f * m[pivot_row][k];
                    m[i][k] -= sub;
                }
            }
        }
        pivot_row += 1;
    }
    if (pivot_row..n).any(|i| !m[i][r].is_zero()) {
        return None;
    }
    Some((0..r).map(|i| m[i][r]).collect())
}

pub fn rank(vectors: &[Vec<i64>]) -> usize {
    let mut rows: Vec<Vec<Q>> = vectors.iter().map(|v| v.iter().map(|&x| q(x)).collect()).collect();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            let f = rows[i][c] / rows[r][c];
            for k in c..cols {
                let sub = f * rows[r][k];
                rows[i][k] -= sub;
            }
        }
        r += 1;
    }
    r
}

pub fn independent(vectors: &[Vec<i64>]) -> bool {
    rank(vectors) == vectors.len()
}

/// Carathéodory: `x` lies in `cone(rays)` iff it is a nonnegative
/// combination of some linearly independent subset.
pub fn in_cone(rays: &[Vec<i64>], x: &[i64]) -> bool {
    if x.iter().all(|&c| c == 0) {
        return true;
    }
    let m = rays.len();
    (1u32..(1 << m)).any(|mask| {
        let subset: Vec<Vec<i64>> = (0..m)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| rays[i].clone())
            .collect();
        independent(&subset)
            && solve(&subset, x).is_some_and(|c| c.iter().all(|v| *v >= Q::zero()))
    })
}

/// `x` is `sum lambda_i v_i` with `lambda_i >= 0`, and `> 0` for `open`.
pub fn in_half_open_simplicial(rays: &[Vec<i64>], open: &[usize], x: &[i64]) -> bool {
    match solve(rays, x) {
        None => false,
        Some(c) => c.iter().enumerate().all(|(j, v)| {
            if open.contains(&j) {
                *v > Q::zero()
            } else {
                *v >= Q::zero()
            }
        }),
    }
}

/// Fraction-free determinant (Bareiss).
pub fn det(rows: &[Vec<i64>]) -> i128 {
    let n = rows.len();
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Fourier–Motzkin feasibility of `A lambda <= b`.
fn feasible(mut rows: Vec<(Vec<Q>, Q)>, vars: usize) -> bool {
    for v in 0..vars {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for row in rows {
            if row.0[v] > Q::zero() {
                pos.push(row);
            } else if row.0[v] < Q::zero() {
                neg.push(row);
            } else {
                rest.push(row);
            }
        }
        for (pa, pb) in &pos {
            for (na, nb) in &neg {
                let (fp, fn_) = (-na[v], pa[v]);
                let a: Vec<Q> = pa.iter().zip(na).map(|(x, y)| *x * fp + *y * fn_).collect();
                let row = (a, *pb * fp + *nb * fn_);
                if !rest.contains(&row) {
                    rest.push(row);
                }
            }
        }
        rows = rest;
    }
    rows.iter().all(|(_, b)| *b >= Q::zero())
}

/// `u` lies in `conv(generators) + R_{>=0}^n`, decided by eliminating the
/// convex weights.
pub fn in_newton_polyhedron(ideal: &MonomialIdeal, u: &[Q]) -> bool {
    let gens = ideal.generators();
    let m = gens.len();
    let mut rows: Vec<(Vec<Q>, Q)> = Vec::new();
    for j in 0..m {
        let mut a = vec![Q::zero(); m];
        a[j] = -Q::one();
        rows.push((a, Q::zero()));
    }
    rows.push((vec![Q::one(); m], Q::one()));
    rows.push((vec![-Q::one(); m], -Q::one()));
    for (i, ui) in u.iter().enumerate() {
        let a: Vec<Q> = gens.iter().map(|g| q(g.coords()[i])).collect();
        rows.push((a, *ui));
    }
    feasible(rows, m)
}

/// All `x in N^n` with `sum x <= bound`.
pub fn points_up_to(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    fn walk(x: &mut Vec<i64>, k: usize, left: i64, out: &mut Vec<Vec<i64>>) {
        if k == x.len() {
            out.push(x.clone());
            return;
        }
        for v in 0..=left {
            x[k] = v;
            walk(x, k + 1, left - v, out);
        }
        x[k] = 0;
    }
    walk(&mut x, 0, bound, &mut out);
    out
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `sum over lattice points x of cone(rays) with l2(x) <= bound of
/// T^{l1(x)} P^{l2(x)}`, for rays and `l2` with nonnegative entries and
/// `l2 >= 1` coordinatewise.
pub fn brute_cone_series(rays: &[Vec<i64>], l1: &[i64], l2: &[i64], bound: i64) -> BiPoly {
    let n = l1.len();
    let mut out = BiPoly::zero();
    for x in points_up_to(n, bound) {
        let p = dot(l2, &x);
        if p <= bound && in_cone(rays, &x) {
            out = &out + &BiPoly::monomial(1, dot(l1, &x) as u32, p as u32);
        }
    }
    out
}
