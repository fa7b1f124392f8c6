//! The Igusa zeta function of a monomial ideal as an exact rational function
//! in `T = p^{-s}` and `P = p^{-1}`, together with its divisor data and pole
//! report.
//!
//! `Z_I = (1 - P)^n * sum over a in N^n of T^{nu(a)} P^{|a|}`. On each cone of
//! the normal fan `nu` is the linear form of the cone's vertex, so the sum
//! splits into lattice-point generating functions of the fan's cones.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use crate::cone_gf::{half_open_cells, open_cone_gf, Grading, HalfOpenSimplicialCone};
use crate::error::{Error, Result};
use crate::fan::{normal_fan, triangulate_indices, Fan};
use crate::polyhedra::{newton_polyhedron, ExponentVector, MonomialIdeal, NewtonPolyhedron};
use crate::ring::{BiPoly, BiRationalFunction, BinomialFactor};

/// The torus-invariant divisor of one fan ray `v`: `k_e = |v| - 1` and
/// `a_e = nu(v)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorData {
    pub ray: Vec<i64>,
    pub k_e: i64,
    pub a_e: i64,
    /// `a_e = 0`: the divisor contributes no pole in `s`.
    pub flagged: bool,
}

impl DivisorData {
    /// `-(k_e + 1) / a_e`, or `None` when flagged.
    pub fn candidate(&self) -> Option<BigRational> {
        (self.a_e > 0).then(|| -BigRational::new((self.k_e + 1).into(), self.a_e.into()))
    }
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidatePole {
    #[serde_as(as = "DisplayFromStr")]
    pub realpart: BigRational,
    /// Rays `v` with `-|v| / nu(v)` equal to `realpart`.
    pub rays: Vec<Vec<i64>>,
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pole {
    #[serde_as(as = "DisplayFromStr")]
    pub realpart: BigRational,
    pub order_bound: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaResult {
    pub ideal: MonomialIdeal,
    pub zeta: BiRationalFunction,
    pub divisors: Vec<DivisorData>,
    pub candidate_poles: Vec<CandidatePole>,
    pub actual_poles: Vec<Pole>,
}

/// `(1 - P)^k`.
pub fn one_minus_p_pow(k: usize) -> BiPoly {
    BiPoly::binomial(0, 1).pow(k as u32)
}

fn standard_grading(fan: &Fan, vertex: usize) -> Grading {
    Grading::new(fan.vertices[vertex].coords().to_vec(), vec![1; fan.ambient_dim])
}

/// Half-open simplicial cells partitioning the lattice points of the
/// orthant, each with the index of the vertex whose linear form equals `nu`
/// on it.
///
/// Each maximal cone is triangulated by placing its rays in lexicographic
/// order; these triangulations agree on shared faces, so together they
/// subdivide the orthant and one generic reference point makes all cells
/// half-open consistently.
pub fn orthant_cells(fan: &Fan) -> Vec<(HalfOpenSimplicialCone, usize)> {
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut vertex_of: Vec<usize> = Vec::new();
    for s in fan.maximal_cones() {
        let cone = &fan.cones[s];
        let local: Vec<Vec<i64>> = cone.rays.iter().map(|&r| fan.rays[r].clone()).collect();
        for cell in triangulate_indices(&local) {
            cells.push(cell.iter().map(|&k| cone.rays[k]).collect());
            vertex_of.push(cone.associated_vertex);
        }
    }
    half_open_cells(fan.ambient_dim, &fan.rays, &cells)
        .into_iter()
        .zip(vertex_of)
        .collect()
}

#[cfg(feature = "parallel")]
fn cell_functions(fan: &Fan, cells: &[(HalfOpenSimplicialCone, usize)]) -> Vec<BiRationalFunction> {
    use rayon::prelude::*;
    cells
        .par_iter()
        .map(|(cell, v)| cell.generating_function(&standard_grading(fan, *v)))
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn cell_functions(fan: &Fan, cells: &[(HalfOpenSimplicialCone, usize)]) -> Vec<BiRationalFunction> {
    cells
        .iter()
        .map(|(cell, v)| cell.generating_function(&standard_grading(fan, *v)))
        .collect()
}

/// Reduced zeta function from the normal fan, summing over the half-open
/// cells of [`orthant_cells`].
pub fn zeta_from_fan(fan: &Fan) -> BiRationalFunction {
    let cells = orthant_cells(fan);
    let parts = cell_functions(fan, &cells);
    BiRationalFunction::sum(&parts)
        .mul_poly(&one_minus_p_pow(fan.ambient_dim))
        .reduce()
}

/// Open generating function of every fan cone under its own grading, in the
/// order of [`Fan::cones`].
pub fn open_cone_functions(fan: &Fan) -> Result<Vec<BiRationalFunction>> {
    (0..fan.cones.len())
        .map(|i| open_cone_gf(&fan.cone(i), &standard_grading(fan, fan.cones[i].associated_vertex)))
        .collect()
}

/// The same function computed cone by cone: `(1 - P)^n` times the sum of
/// the open generating functions of all fan cones.
pub fn zeta_by_open_cones(fan: &Fan) -> Result<BiRationalFunction> {
    let parts = open_cone_functions(fan)?;
    Ok(BiRationalFunction::sum(&parts)
        .mul_poly(&one_minus_p_pow(fan.ambient_dim))
        .reduce())
}

/// One entry per fan ray, in the fan's ray order.
pub fn divisor_data(ideal: &MonomialIdeal) -> Vec<DivisorData> {
    divisors_of_fan(ideal, &normal_fan(&newton_polyhedron(ideal)))
}

fn divisors_of_fan(ideal: &MonomialIdeal, fan: &Fan) -> Vec<DivisorData> {
    fan.rays
        .iter()
        .map(|v| {
            let a_e = ideal.nu(v);
            DivisorData {
                ray: v.clone(),
                k_e: v.iter().sum::<i64>() - 1,
                a_e,
                flagged: a_e == 0,
            }
        })
        .collect()
}

/// Distinct candidate real parts, largest first, with their rays.
pub fn candidate_poles(divisors: &[DivisorData]) -> Vec<CandidatePole> {
    let mut groups: BTreeMap<BigRational, Vec<Vec<i64>>> = BTreeMap::new();
    for d in divisors {
        if let Some(c) = d.candidate() {
            groups.entry(c).or_default().push(d.ray.clone());
        }
    }
    groups
        .into_iter()
        .rev()
        .map(|(realpart, rays)| CandidatePole { realpart, rays })
        .collect()
}

/// Integer coefficients of the `d`-th cyclotomic polynomial, constant term
/// first.
pub fn cyclotomic(d: u32) -> Vec<BigInt> {
    assert!(d > 0);
    let mut p: Vec<BigInt> = vec![BigInt::zero(); d as usize + 1];
    p[0] = -BigInt::one();
    p[d as usize] = BigInt::one();
    for e in (1..d).filter(|e| d % e == 0) {
        p = divide_monic(&p, &cyclotomic(e));
    }
    p
}

fn divide_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![BigInt::zero(); num.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd].clone();
        for (j, dc) in den.iter().enumerate() {
            rem[k + j] -= &c * dc;
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

/// `Phi_d(T^alpha P^beta)` as a polynomial in `T` and `P`.
fn cyclotomic_in(d: u32, alpha: u32, beta: u32) -> BiPoly {
    BiPoly::from_terms(
        cyclotomic(d)
            .into_iter()
            .enumerate()
            .map(|(k, c)| ((alpha * k as u32, beta * k as u32), c)),
    )
}

/// Denominator factors `1 - T^a P^b` with `a > 0` sharing one ratio `b / a`.
#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoleGroup {
    #[serde_as(as = "DisplayFromStr")]
    pub realpart: BigRational,
    pub factors: Vec<BinomialFactor>,
    /// Order of the pole along the group's primitive monomial `m`: the
    /// largest excess, over `d`, of factors divisible by `Phi_d(m)` over the
    /// multiplicity of `Phi_d(m)` in the numerator. Zero means the group's
    /// factors are cancelled by the numerator.
    pub order: u32,
}

/// Group the surviving denominator factors with `a > 0` by `b / a`, largest
/// real part first, and compute each group's order.
///
/// All factors in a group are `1 - m^g` for the same primitive monomial
/// `m = T^alpha P^beta`; `1 - m^g` is the product of `Phi_d(m)` over `d | g`,
/// and each `Phi_d(m)` is irreducible, so its multiplicity in numerator and
/// denominator determines the order exactly.
pub fn pole_groups(zeta: &BiRationalFunction) -> Vec<PoleGroup> {
    let mut groups: BTreeMap<(u32, u32), Vec<u32>> = BTreeMap::new();
    for f in zeta.denominator().iter().filter(|f| f.a > 0) {
        let g = f.a.gcd(&f.b);
        groups.entry((f.a / g, f.b / g)).or_default().push(g);
    }
    let mut out: Vec<PoleGroup> = groups
        .into_iter()
        .map(|((alpha, beta), gs)| {
            let mut ds: Vec<u32> = gs
                .iter()
                .flat_map(|&g| (1..=g).filter(move |d| g % d == 0))
                .collect();
            ds.sort_unstable();
            ds.dedup();
            let order = ds
                .into_iter()
                .map(|d| {
                    let count = gs.iter().filter(|&&g| g % d == 0).count() as u32;
                    let (in_numerator, _) = zeta
                        .numerator()
                        .divisibility_order(&cyclotomic_in(d, alpha, beta), count);
                    count - in_numerator
                })
                .max()
                .unwrap_or(0);
            PoleGroup {
                realpart: -BigRational::new(beta.into(), alpha.into()),
                factors: gs
                    .iter()
                    .map(|&g| BinomialFactor { a: alpha * g, b: beta * g })
                    .collect(),
                order,
            }
        })
        .collect();
    out.sort_by(|x, y| y.realpart.cmp(&x.realpart));
    out
}

/// Poles in `s` of a reduced zeta function with real part and order bound,
/// largest real part first. Factors with `a = 0` are constant in `s` and
/// ignored; orders are clamped at `n`.
pub fn pole_report(zeta: &BiRationalFunction, n: usize) -> Vec<Pole> {
    pole_groups(zeta)
        .into_iter()
        .filter(|g| g.order > 0)
        .map(|g| Pole {
            realpart: g.realpart,
            order_bound: g.order.min(n as u32),
        })
        .collect()
}

/// Zeta function of an ideal with the divisor table and pole data.
pub fn igusa_zeta(ideal: &MonomialIdeal) -> Result<ZetaResult> {
    let polyhedron = newton_polyhedron(ideal);
    Ok(zeta_with(ideal, &polyhedron, &normal_fan(&polyhedron)))
}

/// As [`igusa_zeta`] with the polyhedron and fan already built.
pub fn zeta_with(ideal: &MonomialIdeal, _polyhedron: &NewtonPolyhedron, fan: &Fan) -> ZetaResult {
    let zeta = zeta_from_fan(fan);
    let divisors = divisors_of_fan(ideal, fan);
    ZetaResult {
        ideal: ideal.clone(),
        actual_poles: pole_report(&zeta, ideal.n()),
        candidate_poles: candidate_poles(&divisors),
        divisors,
        zeta,
    }
}

/// `prod over u_i > 0 of (1 - P) / (1 - T^{u_i} P)`, the zeta function of the
/// principal ideal `(x^u)`.
pub fn principal_zeta(u: &ExponentVector) -> Result<BiRationalFunction> {
    if u.is_zero() {
        return Err(Error::ImproperIdeal(0));
    }
    if let Some(i) = u.coords().iter().position(|&x| x < 0) {
        return Err(Error::NegativeExponent(i));
    }
    let active: Vec<u32> = u.coords().iter().filter(|&&x| x > 0).map(|&x| x as u32).collect();
    Ok(BiRationalFunction::new(
        one_minus_p_pow(active.len()),
        active.iter().map(|&a| BinomialFactor { a, b: 1 }).collect(),
    ))
}

/// `(1 - P)^n * sum over a in N^n with |a| <= bound of T^{nu(a)} P^{|a|}`,
/// truncated to `P`-degree at most `bound`. Evaluates `nu` directly from the
/// generators.
pub fn series_oracle(ideal: &MonomialIdeal, bound: u32) -> BiPoly {
    let n = ideal.n();
    let mut sum = BiPoly::zero();
    let mut a = vec![0i64; n];
    fn walk(ideal: &MonomialIdeal, a: &mut Vec<i64>, k: usize, left: i64, sum: &mut BiPoly) {
        if k == a.len() {
            let total: i64 = a.iter().sum();
            *sum = &*sum + &BiPoly::monomial(1, ideal.nu(a) as u32, total as u32);
            return;
        }
        for x in 0..=left {
            a[k] = x;
            walk(ideal, a, k + 1, left - x, sum);
        }
        a[k] = 0;
    }
    walk(ideal, &mut a, 0, bound as i64, &mut sum);
    one_minus_p_pow(n).mul_truncated(&sum, bound)
}

fn latex_power(a: u32, b: u32) -> String {
    let mut parts = Vec::new();
    match a {
        0 => {}
        1 => parts.push("s".to_string()),
        _ => parts.push(format!("{a}s")),
    }
    if b > 0 {
        parts.push(b.to_string());
    }
    format!("p^{{-{}}}", parts.join("-"))
}

/// LaTeX for a polynomial in `T = p^{-s}`, `P = p^{-1}`.
pub fn latex_poly(p: &BiPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (&(t, q), c)) in p.terms().enumerate() {
        let negative = c < &BigInt::zero();
        let abs = if negative { -c } else { c.clone() };
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let constant = t == 0 && q == 0;
        if constant {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
            }
            out.push_str(&latex_power(t, q));
        }
    }
    out
}

/// LaTeX for a rational function with factored denominator.
pub fn latex(f: &BiRationalFunction) -> String {
    let num = latex_poly(f.numerator());
    if f.denominator().is_empty() {
        return num;
    }
    let mut counts: BTreeMap<BinomialFactor, usize> = BTreeMap::new();
    for g in f.denominator() {
        *counts.entry(*g).or_insert(0) += 1;
    }
    let den: String = counts
        .iter()
        .map(|(g, &k)| {
            let base = format!("(1 - {})", latex_power(g.a, g.b));
            if k == 1 {
                base
            } else {
                format!("{base}^{{{k}}}")
            }
        })
        .collect();
    format!("\\frac{{{num}}}{{{den}}}")
}
