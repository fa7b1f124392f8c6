//! Double-description method for full-dimensional polyhedral cones.
//!
//! Given generators `g_1, …, g_m` spanning `R^d`, the facets of
//! `cone(g_1, …, g_m)` are the extreme rays of the dual cone
//! `{y : <y, g_j> >= 0}`. The dual cone is built one constraint at a time,
//! starting from the simplicial cone cut out by `d` independent generators,
//! with the combinatorial adjacency test deciding which ray pairs produce
//! new rays.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::linalg::{dot_big, independent_subset, integer_direction, inverse, primitive};

#[derive(Clone, Debug)]
struct Ray {
    vector: Vec<BigInt>,
    /// Bitset over constraint indices where the ray is tight.
    zeros: Vec<u64>,
}

fn bit_set(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn bit_and_count(a: &[u64], b: &[u64]) -> (Vec<u64>, u32) {
    let v: Vec<u64> = a.iter().zip(b).map(|(x, y)| x & y).collect();
    let c = v.iter().map(|x| x.count_ones()).sum();
    (v, c)
}

fn bit_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Primitive facet covectors `y` of the cone generated by `generators`
/// (all of length `d`), so that `<y, g> >= 0` for every generator and each
/// `y` is tight on a codimension-one face. The generators must span `R^d`.
/// Output is sorted.
pub fn cone_facets(generators: &[Vec<BigInt>], d: usize) -> Vec<Vec<BigInt>> {
    let basis = independent_subset(generators);
    assert_eq!(basis.len(), d, "generators must span the ambient space");
    let words = generators.len().div_ceil(64);

    // Initial simplicial cone: columns of the inverse of the basis rows.
    let rows: Vec<Vec<BigRational>> = basis
        .iter()
        .map(|&i| generators[i].iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let inv = inverse(&rows).expect("independent rows");
    let mut rays: Vec<Ray> = (0..d)
        .map(|k| {
            let col: Vec<BigRational> = (0..d).map(|i| inv[i][k].clone()).collect();
            let vector = integer_direction(&col);
            let mut zeros = vec![0u64; words];
            for (pos, &gi) in basis.iter().enumerate() {
                if pos != k {
                    bit_set(&mut zeros, gi);
                }
            }
            Ray { vector, zeros }
        })
        .collect();

    for (ci, g) in generators.iter().enumerate() {
        if basis.contains(&ci) {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| dot_big(&r.vector, g)).collect();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for (i, v) in values.iter().enumerate() {
            if v.is_positive() {
                pos.push(i);
            } else if v.is_negative() {
                neg.push(i);
            }
        }
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len());
        for &pi in &pos {
            for &ni in &neg {
                let (common, count) = bit_and_count(&rays[pi].zeros, &rays[ni].zeros);
                if (count as usize) + 2 < d {
                    continue;
                }
                let blocked = rays.iter().enumerate().any(|(k, r)| {
                    k != pi && k != ni && bit_subset(&common, &r.zeros)
                });
                if blocked {
                    continue;
                }
                let vp = &values[pi];
                let vn = -&values[ni];
                let vector: Vec<BigInt> = rays[pi]
                    .vector
                    .iter()
                    .zip(&rays[ni].vector)
                    .map(|(a, b)| a * &vn + b * vp)
                    .collect();
                let mut zeros = common;
                bit_set(&mut zeros, ci);
                next.push(Ray {
                    vector: primitive(vector),
                    zeros,
                });
            }
        }
        for (i, r) in rays.into_iter().enumerate() {
            let v = &values[i];
            if v.is_negative() {
                continue;
            }
            let mut r = r;
            if v.is_zero() {
                bit_set(&mut r.zeros, ci);
            }
            next.push(r);
        }
        rays = next;
    }
    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.vector).collect();
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::to_big;

    fn facets(gens: &[Vec<i64>], d: usize) -> Vec<Vec<i64>> {
        let g: Vec<Vec<BigInt>> = gens.iter().map(|v| to_big(v)).collect();
        cone_facets(&g, d)
            .into_iter()
            .map(|v| crate::linalg::from_big(&v))
            .collect()
    }

    #[test]
    fn orthant_facets() {
        let f = facets(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]], 3);
        assert_eq!(f, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    }

    #[test]
    fn square_cone_has_four_facets() {
        let gens = [vec![1, 0, 1], vec![0, 1, 1], vec![-1, 0, 1], vec![0, -1, 1], vec![0, 0, 1]];
        let f = facets(&gens, 3);
        assert_eq!(f.len(), 4);
        for y in &f {
            for g in &gens {
                assert!(crate::linalg::dot(y, g) >= 0);
            }
        }
    }
}
