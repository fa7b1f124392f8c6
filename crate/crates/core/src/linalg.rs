//! Exact linear algebra over `Q` and lattice operations over `Z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn to_rat(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
}

pub fn from_big(v: &[BigInt]) -> Vec<i64> {
    v.iter()
        .map(|x| x.to_i64().expect("coordinate fits in i64"))
        .collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_big(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn gcd_all(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divide by the gcd of the entries; the zero vector is returned unchanged.
pub fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = gcd_all(&v);
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

pub fn primitive_i64(v: &[i64]) -> Vec<i64> {
    from_big(&primitive(to_big(v)))
}

/// Clear denominators of a rational vector and make it primitive.
pub fn integer_direction(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    primitive(v.iter().map(|x| (x * &l).to_integer()).collect())
}

/// Row-reduce in place; returns the pivot columns.
fn row_echelon(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let sub = &f * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(vectors: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = vectors.iter().map(|v| to_rat(v)).collect();
    row_echelon(&mut m).len()
}

/// Coordinates of `x` in terms of the linearly independent `basis`, or `None`
/// if `x` is outside their span.
pub fn coordinates(basis: &[Vec<BigRational>], x: &[BigRational]) -> Option<Vec<BigRational>> {
    let k = basis.len();
    let n = x.len();
    // n equations, k unknowns: augmented matrix rows indexed by coordinate.
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(x[i].clone());
            row
        })
        .collect();
    let pivots = row_echelon(&mut m);
    if pivots.contains(&k) {
        return None;
    }
    debug_assert_eq!(pivots.len(), k, "basis must be independent");
    let mut out = vec![BigRational::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        out[c] = m[r][k].clone();
    }
    Some(out)
}

pub fn coordinates_i64(basis: &[Vec<i64>], x: &[i64]) -> Option<Vec<BigRational>> {
    let b: Vec<Vec<BigRational>> = basis.iter().map(|v| to_rat(v)).collect();
    coordinates(&b, &to_rat(x))
}

/// Indices of a maximal linearly independent subset, chosen greedily.
pub fn independent_subset(vectors: &[Vec<BigInt>]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        let mut trial = rows.clone();
        trial.push(v.iter().map(|x| BigRational::from_integer(x.clone())).collect());
        if row_echelon(&mut trial.clone()).len() == trial.len() {
            rows = trial;
            chosen.push(i);
        }
    }
    chosen
}

/// Inverse of a square rational matrix given by rows.
pub fn inverse(rows: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = rows.len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    let pivots = row_echelon(&mut m);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn determinant(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    let mut m: Vec<Vec<BigRational>> = rows.iter().map(|v| to_rat(v)).collect();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return BigInt::zero();
        };
        if piv != c {
            m.swap(piv, c);
            det = -det;
        }
        det *= &m[c][c];
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &m[c][c];
                for j in c..n {
                    let sub = &f * &m[c][j];
                    m[i][j] -= sub;
                }
            }
        }
    }
    det.to_integer()
}

/// Column operations on `cols` (each entry a column of length `rows`) that
/// bring the top `rows_used` rows into lower echelon form. Returns, for each
/// processed row, the pivot column index. Columns are transformed by
/// unimodular operations only.
fn column_echelon(cols: &mut [Vec<BigInt>], rows_used: usize) -> Vec<usize> {
    let ncols = cols.len();
    let mut pivots = Vec::new();
    let mut next = 0;
    for r in 0..rows_used {
        if next == ncols {
            break;
        }
        loop {
            // Column with the smallest nonzero |entry| in row r among next..
            let best = (next..ncols)
                .filter(|&j| !cols[j][r].is_zero())
                .min_by(|&a, &b| cols[a][r].abs().cmp(&cols[b][r].abs()));
            let Some(best) = best else { break };
            cols.swap(next, best);
            let mut done = true;
            for j in next + 1..ncols {
                if cols[j][r].is_zero() {
                    continue;
                }
                let q = cols[j][r].div_floor(&cols[next][r]);
                let (pivot, target) = split_pair(cols, next, j);
                for (t, p) in target.iter_mut().zip(pivot.iter()) {
                    *t -= &q * p;
                }
                if !cols[j][r].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if (next..ncols).any(|j| !cols[j][r].is_zero()) {
            if cols[next][r].is_negative() {
                for x in cols[next].iter_mut() {
                    *x = -x.clone();
                }
            }
            pivots.push(next);
            next += 1;
        }
    }
    pivots
}

fn split_pair<T>(v: &mut [T], i: usize, j: usize) -> (&T, &mut T) {
    debug_assert!(i < j);
    let (a, b) = v.split_at_mut(j);
    (&a[i], &mut b[0])
}

/// Lattice basis of `{x in Z^ncols : row . x = 0 for every row}`.
pub fn integer_kernel(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let m = rows.len();
    // Column j holds (A e_j ; e_j).
    let mut cols: Vec<Vec<BigInt>> = (0..ncols)
        .map(|j| {
            let mut c: Vec<BigInt> = rows.iter().map(|r| r[j].clone()).collect();
            c.extend((0..ncols).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }));
            c
        })
        .collect();
    let pivots = column_echelon(&mut cols, m);
    cols.into_iter()
        .skip(pivots.len())
        .map(|c| c[m..].to_vec())
        .collect()
}

/// Lattice basis of `span_R(vectors) ∩ Z^n`.
pub fn saturated_basis(vectors: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let rows: Vec<Vec<BigInt>> = vectors.iter().map(|v| to_big(v)).collect();
    let kernel = integer_kernel(&rows, n);
    if kernel.is_empty() {
        return (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
    }
    integer_kernel(&kernel, n).iter().map(|v| from_big(v)).collect()
}

/// Diagonal of a lower-triangular Hermite form of the square integer matrix
/// whose columns are `cols`. The product is `|det|`, and
/// `{x : 0 <= x_i < d_i}` is a full set of coset representatives of
/// `Z^r / cols Z^r`.
pub fn hermite_diagonal(cols: &[Vec<BigInt>]) -> Vec<BigInt> {
    let r = cols.len();
    let mut work = cols.to_vec();
    let pivots = column_echelon(&mut work, r);
    assert_eq!(pivots.len(), r, "matrix must be nonsingular");
    (0..r).map(|i| work[i][i].clone()).collect()
}
