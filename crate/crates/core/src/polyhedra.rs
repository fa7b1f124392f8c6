//! Monomial ideals and their Newton polyhedra `conv(generators) + R_{>=0}^n`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::dd::cone_facets;
use crate::error::{Error, Result};
use crate::linalg::{dot, from_big, rank, to_big};

/// Exponent vector `u` of the monomial `x^u`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn dot(&self, v: &[i64]) -> i64 {
        dot(&self.0, v)
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// A nonzero proper monomial ideal of `Z[x_1, …, x_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawIdeal")]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<ExponentVector>,
}

#[derive(Deserialize)]
struct RawIdeal {
    n: usize,
    generators: Vec<Vec<i64>>,
}

impl TryFrom<RawIdeal> for MonomialIdeal {
    type Error = Error;
    fn try_from(raw: RawIdeal) -> Result<Self> {
        Self::new(raw.n, raw.generators.into_iter().map(ExponentVector).collect())
    }
}

impl MonomialIdeal {
    pub fn new(n: usize, generators: Vec<ExponentVector>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        if generators.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        for (i, g) in generators.iter().enumerate() {
            if g.len() != n {
                return Err(Error::DimensionMismatch {
                    index: i,
                    expected: n,
                    got: g.len(),
                });
            }
            if g.0.iter().any(|&x| x < 0) {
                return Err(Error::NegativeExponent(i));
            }
            if g.is_zero() {
                return Err(Error::ImproperIdeal(i));
            }
        }
        Ok(Self { n, generators })
    }

    pub fn from_rows(n: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(n, rows.iter().map(|r| ExponentVector(r.to_vec())).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    /// `nu(a) = min <u, a>` over the generators.
    pub fn nu(&self, a: &[i64]) -> i64 {
        self.generators
            .iter()
            .map(|g| g.dot(a))
            .min()
            .expect("ideal has generators")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", crate::parse::monomial_string(g.coords(), None))?;
        }
        f.write_str(")")
    }
}

/// The inequality `<u, normal> >= offset`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Facet {
    pub fn value(&self, u: &[i64]) -> i64 {
        dot(&self.normal, u) - self.offset
    }

    pub fn is_coordinate(&self) -> bool {
        self.offset == 0
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.normal.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c != 1 {
                write!(f, "{c}")?;
            }
            write!(f, "u{}", i + 1)?;
        }
        write!(f, " >= {}", self.offset)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonPolyhedron {
    /// Sorted lexicographically.
    pub vertices: Vec<ExponentVector>,
    /// Sorted by normal; normals are primitive, nonnegative and distinct.
    pub facets: Vec<Facet>,
}

impl NewtonPolyhedron {
    pub fn ambient_dim(&self) -> usize {
        self.vertices[0].len()
    }

    pub fn contains(&self, u: &[BigRational]) -> bool {
        self.facets.iter().all(|f| {
            let lhs: BigRational = f
                .normal
                .iter()
                .zip(u)
                .map(|(&c, x)| x * BigRational::from_integer(c.into()))
                .sum();
            lhs >= BigRational::from_integer(f.offset.into())
        })
    }

    pub fn contains_int(&self, u: &[i64]) -> bool {
        self.facets.iter().all(|f| f.value(u) >= 0)
    }

    /// Indices of the facets tight at `u`.
    pub fn tight_facets(&self, u: &[i64]) -> Vec<usize> {
        (0..self.facets.len())
            .filter(|&i| self.facets[i].value(u) == 0)
            .collect()
    }

    pub fn facet_index(&self, normal: &[i64]) -> Option<usize> {
        self.facets.iter().position(|f| f.normal == normal)
    }
}

/// Vertices and facets of the Newton polyhedron of `ideal`.
///
/// The polyhedron is homogenized to the cone over `(g, 1)` for each generator
/// and `(e_i, 0)` for each coordinate direction; its facets other than the one
/// at infinity are exactly the facets of the polyhedron.
pub fn newton_polyhedron(ideal: &MonomialIdeal) -> NewtonPolyhedron {
    let n = ideal.n();
    let mut points: Vec<Vec<i64>> = ideal.generators().iter().map(|g| g.0.clone()).collect();
    points.sort();
    points.dedup();

    let mut cone_gens: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..n {
        let mut e = vec![0i64; n + 1];
        e[i] = 1;
        cone_gens.push(to_big(&e));
    }
    for p in &points {
        let mut h = p.clone();
        h.push(1);
        cone_gens.push(to_big(&h));
    }
    let mut facets: Vec<Facet> = cone_facets(&cone_gens, n + 1)
        .into_iter()
        .filter_map(|y| {
            let y = from_big(&y);
            let normal = y[..n].to_vec();
            if normal.iter().all(|&c| c == 0) {
                return None;
            }
            debug_assert!(normal.iter().all(|&c| c >= 0));
            Some(Facet {
                normal,
                offset: -y[n],
            })
        })
        .collect();
    facets.sort();

    let vertices: Vec<ExponentVector> = points
        .into_iter()
        .filter(|p| {
            let tight: Vec<Vec<i64>> = facets
                .iter()
                .filter(|f| f.value(p) == 0)
                .map(|f| f.normal.clone())
                .collect();
            rank(&tight) == n
        })
        .map(ExponentVector)
        .collect();
    NewtonPolyhedron { vertices, facets }
}

/// Whether `u` satisfies every facet inequality.
pub fn polyhedron_membership(p: &NewtonPolyhedron, u: &[BigRational]) -> bool {
    p.contains(u)
}
