//! Seeded random monomial ideals and the per-ideal verification run over
//! them: series oracle equality, candidate confinement and the facet-root
//! check.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use crate::bs_check::{check_roots, RootCheck};
use crate::error::Result;
use crate::fan::normal_fan;
use crate::polyhedra::{newton_polyhedron, ExponentVector, MonomialIdeal};
use crate::zeta::{series_oracle, zeta_with, Pole};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusLimits {
    pub max_n: usize,
    pub max_generators: usize,
    pub max_exponent: i64,
}

impl Default for CorpusLimits {
    fn default() -> Self {
        Self {
            max_n: 4,
            max_generators: 6,
            max_exponent: 5,
        }
    }
}

/// A random ideal with `1 <= n <= max_n` and `1..=max_generators` nonzero
/// generators with entries in `0..=max_exponent`.
pub fn random_ideal<R: Rng>(rng: &mut R, limits: &CorpusLimits) -> MonomialIdeal {
    let n = rng.gen_range(1..=limits.max_n);
    let count = rng.gen_range(1..=limits.max_generators);
    let gens = (0..count)
        .map(|_| loop {
            let g: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=limits.max_exponent)).collect();
            if g.iter().any(|&x| x != 0) {
                break ExponentVector(g);
            }
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("generated ideal is valid")
}

/// `count` ideals from a ChaCha stream seeded with `seed`.
pub fn corpus(seed: u64, count: usize, limits: &CorpusLimits) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_ideal(&mut rng, limits)).collect()
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub ideal: MonomialIdeal,
    pub bound: u32,
    /// Series expansion of the zeta function equals the direct sum.
    pub oracle_match: bool,
    /// Every actual pole is a candidate `-(k_E + 1) / a_E`.
    pub candidates_ok: bool,
    pub roots: RootCheck,
    pub poles: Vec<Pole>,
    #[serde_as(as = "DisplayFromStr")]
    pub lct: BigRational,
    pub pass: bool,
}

/// Run all checks on one ideal with series bound `bound`.
pub fn verify_ideal(ideal: &MonomialIdeal, bound: u32) -> Result<Verification> {
    let p = newton_polyhedron(ideal);
    let fan = normal_fan(&p);
    let z = zeta_with(ideal, &p, &fan);
    let oracle_match = z.zeta.series_expand(bound)? == series_oracle(ideal, bound);
    let candidates_ok = z
        .actual_poles
        .iter()
        .all(|pole| z.candidate_poles.iter().any(|c| c.realpart == pole.realpart));
    let roots = check_roots(&z, &p)?;
    Ok(Verification {
        ideal: ideal.clone(),
        bound,
        pass: oracle_match && candidates_ok && roots.pass,
        oracle_match,
        candidates_ok,
        lct: roots.lct.clone(),
        roots,
        poles: z.actual_poles,
    })
}

/// [`verify_ideal`] over many ideals, in input order.
pub fn verify_all(ideals: &[MonomialIdeal], bound: u32) -> Result<Vec<Verification>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        ideals.par_iter().map(|i| verify_ideal(i, bound)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        ideals.iter().map(|i| verify_ideal(i, bound)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_corpus_is_deterministic_and_within_limits() {
        let limits = CorpusLimits::default();
        let a = corpus(7, 20, &limits);
        assert_eq!(a, corpus(7, 20, &limits));
        assert_ne!(a, corpus(8, 20, &limits));
        for i in &a {
            assert!(i.n() <= 4 && i.generators().len() <= 6);
            assert!(i.generators().iter().all(|g| g.coords().iter().all(|&x| (0..=5).contains(&x))));
        }
        assert!(corpus(1, 0, &limits).is_empty());
    }

    #[test]
    fn verification_passes_on_small_ideals() {
        let i = MonomialIdeal::from_rows(2, &[&[3, 0], &[1, 1], &[0, 3]]).unwrap();
        let v = verify_ideal(&i, 8).unwrap();
        assert!(v.pass && v.oracle_match && v.candidates_ok);
    }
}
