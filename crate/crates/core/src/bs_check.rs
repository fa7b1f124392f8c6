//! Facet roots `-L_Q(e)` of the Bernstein–Sato polynomial and the check that
//! every pole real part of the zeta function is one of them.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use crate::error::{Error, Result};
use crate::polyhedra::{newton_polyhedron, Facet, MonomialIdeal, NewtonPolyhedron};
use crate::zeta::{zeta_with, ZetaResult};
use crate::fan::normal_fan;

/// A facet `<u, normal> >= offset` with `offset > 0`, and the root
/// `-|normal| / offset`.
#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetRoot {
    pub facet: Facet,
    #[serde_as(as = "DisplayFromStr")]
    pub root: BigRational,
}

/// One root per facet not lying in a coordinate hyperplane, in facet order.
pub fn facet_bs_roots(p: &NewtonPolyhedron) -> Vec<FacetRoot> {
    p.facets
        .iter()
        .filter(|f| f.offset > 0)
        .map(|f| FacetRoot {
            facet: f.clone(),
            root: -BigRational::new(f.normal.iter().sum::<i64>().into(), f.offset.into()),
        })
        .collect()
}

/// Log canonical threshold: the least `|normal| / offset` over facets with
/// positive offset.
pub fn lct(p: &NewtonPolyhedron) -> Result<BigRational> {
    facet_bs_roots(p)
        .into_iter()
        .map(|r| -r.root)
        .min()
        .ok_or(Error::NoPositiveFacet)
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde_as(as = "DisplayFromStr")]
    pub pole: BigRational,
    /// The facet whose normal is the fan ray producing the pole.
    pub facet: Facet,
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCheck {
    pub pass: bool,
    #[serde_as(as = "Vec<DisplayFromStr>")]
    pub poles: Vec<BigRational>,
    #[serde_as(as = "Vec<DisplayFromStr>")]
    pub facet_roots: Vec<BigRational>,
    pub witnesses: Vec<Witness>,
    /// Poles with no facet root; empty when `pass`.
    #[serde_as(as = "Vec<DisplayFromStr>")]
    pub unmatched: Vec<BigRational>,
    #[serde_as(as = "DisplayFromStr")]
    pub lct: BigRational,
    /// Whether `-lct` is an actual pole.
    pub lct_attained: bool,
}

/// Compute the zeta function of `ideal` and check its poles against the
/// facet roots.
pub fn check_facet_roots(ideal: &MonomialIdeal) -> Result<RootCheck> {
    let p = newton_polyhedron(ideal);
    let fan = normal_fan(&p);
    check_roots(&zeta_with(ideal, &p, &fan), &p)
}

/// Match each actual pole of `zeta` with a facet of `p` whose root equals
/// it. The facet normals are the rays of the normal fan, so the witness is
/// the facet of the ray that produced the pole.
pub fn check_roots(zeta: &ZetaResult, p: &NewtonPolyhedron) -> Result<RootCheck> {
    let roots = facet_bs_roots(p);
    let lct = lct(p)?;
    let poles: Vec<BigRational> = zeta.actual_poles.iter().map(|q| q.realpart.clone()).collect();
    let mut witnesses = Vec::new();
    let mut unmatched = Vec::new();
    for pole in &poles {
        match roots.iter().find(|r| &r.root == pole) {
            Some(r) => witnesses.push(Witness {
                pole: pole.clone(),
                facet: r.facet.clone(),
            }),
            None => unmatched.push(pole.clone()),
        }
    }
    let mut facet_roots: Vec<BigRational> = roots.into_iter().map(|r| r.root).collect();
    facet_roots.sort_by(|a, b| b.cmp(a));
    facet_roots.dedup();
    Ok(RootCheck {
        pass: unmatched.is_empty(),
        lct_attained: poles.contains(&-lct.clone()),
        poles,
        facet_roots,
        witnesses,
        unmatched,
        lct,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, rows: &[&[i64]]) -> MonomialIdeal {
        MonomialIdeal::from_rows(n, rows).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn roots_and_thresholds() {
        let p = newton_polyhedron(&ideal(2, &[&[1, 0], &[0, 1]]));
        let r = facet_bs_roots(&p);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].root, rat(-2, 1));
        assert_eq!(lct(&p).unwrap(), rat(2, 1));

        let p = newton_polyhedron(&ideal(1, &[&[2]]));
        assert_eq!(facet_bs_roots(&p)[0].root, rat(-1, 2));
        assert_eq!(lct(&p).unwrap(), rat(1, 2));

        let p = newton_polyhedron(&ideal(2, &[&[3, 0], &[1, 1], &[0, 3]]));
        let roots: Vec<BigRational> = facet_bs_roots(&p).into_iter().map(|r| r.root).collect();
        assert_eq!(roots, vec![rat(-1, 1), rat(-1, 1)]);
        assert_eq!(lct(&p).unwrap(), rat(1, 1));
    }

    #[test]
    fn check_examples() {
        let c = check_facet_roots(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap();
        assert!(c.pass);
        assert_eq!(c.poles, vec![rat(-2, 1)]);
        assert_eq!(c.witnesses[0].facet.normal, vec![1, 1]);
        assert!(c.lct_attained);

        let c = check_facet_roots(&ideal(3, &[&[2, 0, 3]])).unwrap();
        assert!(c.pass);
        assert_eq!(c.poles, vec![rat(-1, 3), rat(-1, 2)]);

        let c = check_facet_roots(&ideal(2, &[&[3, 0], &[1, 1], &[0, 3]])).unwrap();
        assert!(c.pass);
        assert!(c.poles.iter().all(|p| *p == rat(-1, 1)));
        let text = serde_json::to_string(&c).unwrap();
        assert!(text.starts_with(r#"{"pass":true,"poles":["-1"]"#));
        assert_eq!(serde_json::from_str::<RootCheck>(&text).unwrap(), c);
    }
}
