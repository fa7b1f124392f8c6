//! Rational polyhedral cones and the normal fan of a Newton polyhedron.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use crate::dd::cone_facets;
use crate::error::{Error, Result};
use crate::linalg::{
    coordinates_i64, dot, from_big, integer_direction, inverse, primitive_i64, rank,
    saturated_basis, to_rat,
};
use crate::polyhedra::{ExponentVector, MonomialIdeal, NewtonPolyhedron};

/// A pointed rational polyhedral cone.
///
/// `ineqs` is a list of covectors `h` with `<h, x> >= 0` on the cone whose
/// tight sets include every facet; it may contain redundant entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cone {
    pub ambient_dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub ineqs: Vec<Vec<i64>>,
    pub dim: usize,
    pub associated_vertex: Option<ExponentVector>,
}

impl Cone {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            rays: Vec::new(),
            ineqs: Vec::new(),
            dim: 0,
            associated_vertex: None,
        }
    }

    /// Cone generated by `generators`. Generators are made primitive,
    /// duplicates and non-extreme generators are dropped, and the supporting
    /// inequalities are computed. Fails on non-pointed input.
    pub fn from_rays(ambient_dim: usize, generators: &[Vec<i64>]) -> Result<Self> {
        let mut rays: Vec<Vec<i64>> = Vec::new();
        for g in generators {
            if g.len() != ambient_dim {
                return Err(Error::InvalidCone(format!(
                    "generator of length {} in dimension {ambient_dim}",
                    g.len()
                )));
            }
            if g.iter().all(|&x| x == 0) {
                continue;
            }
            let p = primitive_i64(g);
            if !rays.contains(&p) {
                rays.push(p);
            }
        }
        if rays.is_empty() {
            return Ok(Self::zero(ambient_dim));
        }
        let basis = saturated_basis(&rays, ambient_dim);
        let d = basis.len();
        let local: Vec<Vec<BigInt>> = rays
            .iter()
            .map(|r| {
                let c = coordinates_i64(&basis, r).expect("ray lies in its own span");
                c.iter().map(|x| x.to_integer()).collect()
            })
            .collect();
        let facets_local = cone_facets(&local, d);
        // Pointed iff the facet covectors span the dual space.
        let flocal: Vec<Vec<i64>> = facets_local.iter().map(|f| from_big(f)).collect();
        if rank(&flocal) < d {
            return Err(Error::InvalidCone("cone contains a line".into()));
        }
        let extreme: Vec<usize> = (0..rays.len())
            .filter(|&i| {
                let tight: Vec<Vec<i64>> = flocal
                    .iter()
                    .filter(|f| dot(f, &from_big(&local[i])) == 0)
                    .cloned()
                    .collect();
                rank(&tight) + 1 == d
            })
            .collect();
        let rays: Vec<Vec<i64>> = extreme.iter().map(|&i| rays[i].clone()).collect();
        let ineqs = flocal.iter().map(|y| lift_covector(&basis, y)).collect();
        Ok(Self {
            ambient_dim,
            rays,
            ineqs,
            dim: d,
            associated_vertex: None,
        })
    }

    pub fn is_simplicial(&self) -> bool {
        self.rays.len() == self.dim
    }

    pub fn contains(&self, a: &[i64]) -> bool {
        if self.rays.is_empty() {
            return a.iter().all(|&x| x == 0);
        }
        let basis = saturated_basis(&self.rays, self.ambient_dim);
        if coordinates_i64(&basis, a).is_none() {
            return false;
        }
        self.ineqs.iter().all(|h| dot(h, a) >= 0)
    }

    /// Whether `a` lies in the relative interior.
    pub fn contains_relint(&self, a: &[i64]) -> bool {
        if !self.contains(a) {
            return false;
        }
        self.ineqs
            .iter()
            .filter(|h| self.rays.iter().any(|r| dot(h, r) != 0))
            .all(|h| dot(h, a) > 0)
    }
}

/// A covector on `R^n` that agrees with `local` on the lattice spanned by
/// `basis`, scaled to a primitive integer vector.
fn lift_covector(basis: &[Vec<i64>], local: &[i64]) -> Vec<i64> {
    // h = sum c_j b_j with Gram(b) c = local.
    let gram: Vec<Vec<BigRational>> = basis
        .iter()
        .map(|bi| {
            basis
                .iter()
                .map(|bj| BigRational::from_integer(dot(bi, bj).into()))
                .collect()
        })
        .collect();
    let inv = inverse(&gram).expect("basis is independent");
    let target = to_rat(local);
    let c: Vec<BigRational> = inv
        .iter()
        .map(|row| row.iter().zip(&target).map(|(a, b)| a * b).sum())
        .collect();
    let n = basis[0].len();
    let h: Vec<BigRational> = (0..n)
        .map(|k| {
            c.iter()
                .zip(basis)
                .map(|(cj, bj)| cj * BigRational::from_integer(bj[k].into()))
                .sum()
        })
        .collect();
    from_big(&integer_direction(&h))
}

/// Ray-index sets of every face of a cone (including the zero face and the
/// cone itself), from the tight sets of its inequalities.
fn face_ray_sets(rays: &[Vec<i64>], ineqs: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let tight: Vec<BTreeSet<usize>> = ineqs
        .iter()
        .map(|h| (0..rays.len()).filter(|&i| dot(h, &rays[i]) == 0).collect())
        .collect();
    let full: BTreeSet<usize> = (0..rays.len()).collect();
    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut stack = vec![full];
    seen.insert(BTreeSet::new());
    while let Some(f) = stack.pop() {
        if !seen.insert(f.clone()) {
            continue;
        }
        for t in &tight {
            let g: BTreeSet<usize> = f.intersection(t).copied().collect();
            if !seen.contains(&g) {
                stack.push(g);
            }
        }
    }
    seen.into_iter().map(|s| s.into_iter().collect()).collect()
}

/// Every face of `cone` paired with the Möbius sign `(-1)^(dim cone - dim face)`,
/// ordered by dimension and then by ray indices.
pub fn faces(cone: &Cone) -> Vec<(Cone, i32)> {
    let mut out: Vec<(Vec<usize>, Cone, i32)> = face_ray_sets(&cone.rays, &cone.ineqs)
        .into_iter()
        .map(|idx| {
            let rays: Vec<Vec<i64>> = idx.iter().map(|&i| cone.rays[i].clone()).collect();
            let dim = rank(&rays);
            let sign = if (cone.dim - dim) % 2 == 0 { 1 } else { -1 };
            let face = Cone {
                ambient_dim: cone.ambient_dim,
                rays,
                ineqs: cone.ineqs.clone(),
                dim,
                associated_vertex: cone.associated_vertex.clone(),
            };
            (idx, face, sign)
        })
        .collect();
    out.sort_by(|a, b| (a.1.dim, &a.0).cmp(&(b.1.dim, &b.0)));
    out.into_iter().map(|(_, c, s)| (c, s)).collect()
}

/// Placing triangulation of a pointed cone: rays are inserted in
/// lexicographic order and each new ray is coned over the boundary facets it
/// sees. Returns cells as index sets into `rays`; no new rays are introduced.
pub fn triangulate_indices(rays: &[Vec<i64>]) -> Vec<Vec<usize>> {
    if rays.is_empty() {
        return vec![Vec::new()];
    }
    let mut order: Vec<usize> = (0..rays.len()).collect();
    order.sort_by(|&a, &b| rays[a].cmp(&rays[b]));
    let mut cells: Vec<Vec<usize>> = vec![vec![order[0]]];
    let mut placed: Vec<Vec<i64>> = vec![rays[order[0]].clone()];
    let mut dim = 1;
    for &r in &order[1..] {
        placed.push(rays[r].clone());
        if rank(&placed) > dim {
            for c in cells.iter_mut() {
                c.push(r);
                c.sort_unstable();
            }
            dim += 1;
            continue;
        }
        let mut facet_count: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for c in &cells {
            for j in 0..c.len() {
                let mut f = c.clone();
                f.remove(j);
                *facet_count.entry(f).or_insert(0) += 1;
            }
        }
        let mut new_cells = Vec::new();
        for c in &cells {
            let basis: Vec<Vec<i64>> = c.iter().map(|&i| rays[i].clone()).collect();
            let mu = coordinates_i64(&basis, &rays[r]).expect("ray in span");
            for j in 0..c.len() {
                if !mu[j].is_negative() {
                    continue;
                }
                let mut f = c.clone();
                f.remove(j);
                if facet_count[&f] == 1 {
                    f.push(r);
                    f.sort_unstable();
                    new_cells.push(f);
                }
            }
        }
        cells.extend(new_cells);
    }
    cells.sort();
    cells
}

/// Simplicial cells of a placing triangulation of `cone`.
pub fn triangulate(cone: &Cone) -> Result<Vec<Cone>> {
    if cone.is_simplicial() {
        return Ok(vec![cone.clone()]);
    }
    triangulate_indices(&cone.rays)
        .into_iter()
        .map(|cell| {
            let rays: Vec<Vec<i64>> = cell.iter().map(|&i| cone.rays[i].clone()).collect();
            let mut c = Cone::from_rays(cone.ambient_dim, &rays)?;
            c.associated_vertex = cone.associated_vertex.clone();
            Ok(c)
        })
        .collect()
}

/// One cone of a [`Fan`], stored by global ray indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanCone {
    pub rays: Vec<usize>,
    pub dim: usize,
    /// Index into [`Fan::vertices`].
    pub associated_vertex: usize,
    #[serde(skip)]
    ineqs: Vec<Vec<i64>>,
}

/// The normal fan of a Newton polyhedron.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fan {
    pub ambient_dim: usize,
    /// Primitive ray generators, in the order of the polyhedron's facets.
    pub rays: Vec<Vec<i64>>,
    pub vertices: Vec<ExponentVector>,
    /// Ordered by dimension, then by ray indices.
    pub cones: Vec<FanCone>,
    /// Pairs `(tau, sigma)` with `tau` a proper face of `sigma`.
    pub face_relation: Vec<(usize, usize)>,
}

impl Fan {
    pub fn cone(&self, i: usize) -> Cone {
        let c = &self.cones[i];
        Cone {
            ambient_dim: self.ambient_dim,
            rays: c.rays.iter().map(|&r| self.rays[r].clone()).collect(),
            ineqs: c.ineqs.clone(),
            dim: c.dim,
            associated_vertex: Some(self.vertices[c.associated_vertex].clone()),
        }
    }

    pub fn maximal_cones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.cones.len()).filter(|&i| self.cones[i].dim == self.ambient_dim)
    }

    /// Indices of all cones that are faces of cone `sigma`, including itself.
    pub fn faces_of(&self, sigma: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .face_relation
            .iter()
            .filter(|(_, s)| *s == sigma)
            .map(|(t, _)| *t)
            .collect();
        out.push(sigma);
        out.sort_unstable();
        out
    }

    pub fn index_of(&self, ray_set: &[usize]) -> Option<usize> {
        self.cones.iter().position(|c| c.rays == ray_set)
    }
}

/// Normal fan: one cone `sigma_Q` per face `Q` of the polyhedron, with
/// `dim sigma_Q = n - dim Q`.
///
/// For each vertex `w` the maximal cone `sigma_w` is generated by the normals
/// of the facets through `w` and cut out by `<u - w, v> >= 0` (over vertices
/// `u`) and `v >= 0`; its faces come from the tight sets of those
/// inequalities. Non-maximal cones keep the lexicographically smallest vertex
/// whose maximal cone contains them.
pub fn normal_fan(p: &NewtonPolyhedron) -> Fan {
    let n = p.ambient_dim();
    let rays: Vec<Vec<i64>> = p.facets.iter().map(|f| f.normal.clone()).collect();
    let mut by_rays: BTreeMap<Vec<usize>, FanCone> = BTreeMap::new();
    for (wi, w) in p.vertices.iter().enumerate() {
        let tight = p.tight_facets(w.coords());
        let mut ineqs: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            ineqs.push(e);
        }
        for u in &p.vertices {
            if u != w {
                let diff: Vec<i64> = u.coords().iter().zip(w.coords()).map(|(a, b)| a - b).collect();
                ineqs.push(primitive_i64(&diff));
            }
        }
        ineqs.sort();
        ineqs.dedup();
        let local_rays: Vec<Vec<i64>> = tight.iter().map(|&i| rays[i].clone()).collect();
        for face in face_ray_sets(&local_rays, &ineqs) {
            let global: Vec<usize> = face.iter().map(|&k| tight[k]).collect();
            by_rays.entry(global.clone()).or_insert_with(|| FanCone {
                dim: rank(&global.iter().map(|&r| rays[r].clone()).collect::<Vec<_>>()),
                rays: global,
                associated_vertex: wi,
                ineqs: ineqs.clone(),
            });
        }
    }
    let mut cones: Vec<FanCone> = by_rays.into_values().collect();
    cones.sort_by(|a, b| (a.dim, &a.rays).cmp(&(b.dim, &b.rays)));
    let mut face_relation = Vec::new();
    for (s, sigma) in cones.iter().enumerate() {
        for (t, tau) in cones.iter().enumerate() {
            if t != s
                && tau.rays.len() < sigma.rays.len()
                && tau.rays.iter().all(|r| sigma.rays.contains(r))
            {
                face_relation.push((t, s));
            }
        }
    }
    face_relation.sort_unstable();
    Fan {
        ambient_dim: n,
        rays,
        vertices: p.vertices.clone(),
        cones,
        face_relation,
    }
}

/// `nu(a) = min { <u, a> : x^u in I }`.
pub fn nu(ideal: &MonomialIdeal, a: &[i64]) -> i64 {
    ideal.nu(a)
}

/// The unique cone of `fan` whose relative interior contains `a`.
pub fn locate_cone(fan: &Fan, a: &[i64]) -> Option<usize> {
    (0..fan.cones.len()).find(|&i| fan.cone(i).contains_relint(a))
}
