//! Bigraded lattice-point generating functions of rational cones,
//! `sum over v in cone ∩ Z^n of T^{l1(v)} P^{l2(v)}`, as rational functions
//! whose denominator factors come from the rays.
//!
//! A simplicial cell with rays `v_1..v_r` contributes
//! `(sum over parallelepiped points x of T^{l1(x)} P^{l2(x)}) / prod (1 - T^{l1(v_i)} P^{l2(v_i)})`.
//! Non-simplicial cones are triangulated and the cells made half-open so
//! that they partition the cone.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fan::{faces, triangulate_indices, Cone};
use crate::linalg::{coordinates_i64, dot, hermite_diagonal, inverse, saturated_basis};
use crate::ring::{BiPoly, BiRationalFunction, BinomialFactor};

/// `l1` multiplies `s`, `l2` is the constant part of the exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Grading {
    pub l1: Vec<i64>,
    pub l2: Vec<i64>,
}

impl Grading {
    pub fn new(l1: Vec<i64>, l2: Vec<i64>) -> Self {
        Self { l1, l2 }
    }

    /// `l1 >= 0` and `l2 > 0` on every ray.
    pub fn validate(&self, cone: &Cone) -> Result<()> {
        if self.l1.len() != cone.ambient_dim || self.l2.len() != cone.ambient_dim {
            return Err(Error::InvalidGrading("length differs from ambient dimension".into()));
        }
        for r in &cone.rays {
            if dot(&self.l1, r) < 0 {
                return Err(Error::InvalidGrading(format!("l1 negative on ray {r:?}")));
            }
            if dot(&self.l2, r) <= 0 {
                return Err(Error::InvalidGrading(format!("l2 not positive on ray {r:?}")));
            }
        }
        Ok(())
    }

    fn factor(&self, v: &[i64]) -> BinomialFactor {
        BinomialFactor::new(degree(dot(&self.l1, v)), degree(dot(&self.l2, v)))
            .expect("l2 positive on rays")
    }

    fn monomial(&self, v: &[i64]) -> BiPoly {
        BiPoly::monomial(1, degree(dot(&self.l1, v)), degree(dot(&self.l2, v)))
    }
}

fn degree(x: i64) -> u32 {
    u32::try_from(x).expect("grading value is a nonnegative u32")
}

/// A simplicial cone with some facets removed: the facet opposite `rays[j]`
/// is excluded when `open_facets` contains `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalfOpenSimplicialCone {
    pub ambient_dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub open_facets: Vec<usize>,
}

impl HalfOpenSimplicialCone {
    pub fn closed(ambient_dim: usize, rays: Vec<Vec<i64>>) -> Self {
        Self {
            ambient_dim,
            rays,
            open_facets: Vec::new(),
        }
    }

    pub fn generating_function(&self, g: &Grading) -> BiRationalFunction {
        let numerator = parallelepiped_points(self)
            .iter()
            .fold(BiPoly::zero(), |acc, x| &acc + &g.monomial(x));
        let denominator = self.rays.iter().map(|v| g.factor(v)).collect();
        BiRationalFunction::new(numerator, denominator)
    }
}

/// Lattice points `sum lambda_i v_i` with `lambda_j in (0, 1]` for open
/// facets and `[0, 1)` otherwise, in the lattice `span(rays) ∩ Z^n`.
///
/// Coset representatives of `L / (Z v_1 + … + Z v_r)` come from the diagonal
/// of a Hermite form of the ray matrix in a basis of `L`; each is then
/// shifted into the half-open box. Output is sorted.
pub fn parallelepiped_points(cell: &HalfOpenSimplicialCone) -> Vec<Vec<i64>> {
    let n = cell.ambient_dim;
    let r = cell.rays.len();
    if r == 0 {
        return vec![vec![0; n]];
    }
    let basis = saturated_basis(&cell.rays, n);
    assert_eq!(basis.len(), r, "cell rays must be linearly independent");
    // Ray coordinates in the lattice basis; integral because the basis spans
    // the saturated lattice.
    let local: Vec<Vec<BigInt>> = cell
        .rays
        .iter()
        .map(|v| {
            coordinates_i64(&basis, v)
                .expect("ray in span")
                .into_iter()
                .map(|x| x.to_integer())
                .collect()
        })
        .collect();
    let diag: Vec<usize> = hermite_diagonal(&local)
        .iter()
        .map(|d| d.to_usize().expect("small index"))
        .collect();
    // lambda = M^-1 x where M has the local ray vectors as columns.
    let m_rows: Vec<Vec<BigRational>> = (0..r)
        .map(|i| (0..r).map(|j| BigRational::from_integer(local[j][i].clone())).collect())
        .collect();
    let m_inv = inverse(&m_rows).expect("independent rays");
    let open: Vec<bool> = (0..r).map(|j| cell.open_facets.contains(&j)).collect();

    let mut out = Vec::new();
    let mut x = vec![0usize; r];
    loop {
        let xr: Vec<BigRational> = x.iter().map(|&k| BigRational::from_integer(k.into())).collect();
        let lambda: Vec<BigRational> = m_inv
            .iter()
            .map(|row| row.iter().zip(&xr).map(|(a, b)| a * b).sum())
            .collect();
        let shifted: Vec<BigRational> = lambda
            .iter()
            .zip(&open)
            .map(|(l, &is_open)| {
                let f = l - l.floor();
                if is_open && f.is_zero() {
                    BigRational::one()
                } else {
                    f
                }
            })
            .collect();
        let point: Vec<i64> = (0..n)
            .map(|k| {
                let s: BigRational = shifted
                    .iter()
                    .zip(&cell.rays)
                    .map(|(l, v)| l * BigRational::from_integer(v[k].into()))
                    .sum();
                debug_assert!(s.is_integer());
                s.to_integer().to_i64().expect("fits")
            })
            .collect();
        out.push(point);
        // odometer over the box prod [0, d_i)
        let mut k = 0;
        loop {
            if k == r {
                out.sort();
                return out;
            }
            x[k] += 1;
            if x[k] < diag[k] {
                break;
            }
            x[k] = 0;
            k += 1;
        }
    }
}

/// Lexicographically ordered reference vectors: an interior point of the first
/// cell followed by that cell's rays. Comparing a linear functional on this
/// sequence lexicographically is the same as evaluating it at a generic point
/// infinitesimally close to the interior point.
fn reference_sequence(rays: &[Vec<i64>], first_cell: &[usize], n: usize) -> Vec<Vec<i64>> {
    let mut interior = vec![0i64; n];
    for &i in first_cell {
        for k in 0..n {
            interior[k] += rays[i][k];
        }
    }
    let mut seq = vec![interior];
    seq.extend(first_cell.iter().map(|&i| rays[i].clone()));
    seq
}

/// Make the simplicial `cells` (index sets into `rays`, all of the same
/// dimension and forming a subdivision) half-open so that their lattice
/// points are disjoint and cover the union. A facet is removed when a generic
/// point near the interior of `cells[0]` lies strictly on its far side.
pub fn half_open_cells(
    ambient_dim: usize,
    rays: &[Vec<i64>],
    cells: &[Vec<usize>],
) -> Vec<HalfOpenSimplicialCone> {
    let reference = reference_sequence(rays, &cells[0], ambient_dim);
    cells
        .iter()
        .map(|cell| {
            let cell_rays: Vec<Vec<i64>> = cell.iter().map(|&i| rays[i].clone()).collect();
            let coords: Vec<Vec<BigRational>> = reference
                .iter()
                .map(|q| coordinates_i64(&cell_rays, q).expect("reference point in span"))
                .collect();
            let open_facets = (0..cell_rays.len())
                .filter(|&j| {
                    coords
                        .iter()
                        .map(|c| &c[j])
                        .find(|x| !x.is_zero())
                        .expect("reference sequence spans the cell")
                        .is_negative()
                })
                .collect();
            HalfOpenSimplicialCone {
                ambient_dim,
                rays: cell_rays,
                open_facets,
            }
        })
        .collect()
}

/// Half-open cells of a placing triangulation of `cone`; together they
/// partition the lattice points of the cone.
pub fn half_open_decomposition(cone: &Cone) -> Vec<HalfOpenSimplicialCone> {
    let cells = triangulate_indices(&cone.rays);
    half_open_cells(cone.ambient_dim, &cone.rays, &cells)
}

/// Generating function of all lattice points of the closed cone.
pub fn closed_cone_gf(cone: &Cone, g: &Grading) -> Result<BiRationalFunction> {
    g.validate(cone)?;
    if cone.rays.is_empty() {
        return Ok(BiRationalFunction::one());
    }
    Ok(half_open_decomposition(cone)
        .iter()
        .fold(BiRationalFunction::zero(), |acc, cell| {
            acc.add(&cell.generating_function(g))
        }))
}

/// Generating function of the lattice points in the relative interior, by
/// Möbius inversion over the face lattice.
pub fn open_cone_gf(cone: &Cone, g: &Grading) -> Result<BiRationalFunction> {
    g.validate(cone)?;
    let mut acc = BiRationalFunction::zero();
    for (face, sign) in faces(cone) {
        let z = closed_cone_gf(&face, g)?;
        acc = if sign > 0 { acc.add(&z) } else { acc.sub(&z) };
    }
    Ok(acc)
}
