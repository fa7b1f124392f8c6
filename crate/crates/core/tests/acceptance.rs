//! Acceptance criteria, one pass/fail line each. Runs as a plain binary so
//! the lines are always printed; exits nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use igusa_core::bs_check::check_roots;
use igusa_core::cone_gf::{closed_cone_gf, open_cone_gf, parallelepiped_points, Grading, HalfOpenSimplicialCone};
use igusa_core::corpus::{corpus, CorpusLimits};
use igusa_core::fan::{normal_fan, Fan};
use igusa_core::polyhedra::{newton_polyhedron, ExponentVector, MonomialIdeal, NewtonPolyhedron};
use igusa_core::ring::{BiPoly, BiRationalFunction, BinomialFactor};
use igusa_core::zeta::{pole_groups, series_oracle, zeta_with, ZetaResult};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CORPUS_SEED: u64 = 1;
const CORPUS_SIZE: usize = 50;

struct Entry {
    ideal: MonomialIdeal,
    polyhedron: NewtonPolyhedron,
    fan: Fan,
    zeta: ZetaResult,
}

fn bf(a: u32, b: u32) -> BinomialFactor {
    BinomialFactor::new(a, b).unwrap()
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn ideal(n: usize, rows: &[&[i64]]) -> MonomialIdeal {
    MonomialIdeal::from_rows(n, rows).unwrap()
}

fn timed_zeta(i: &MonomialIdeal) -> (BiRationalFunction, Duration) {
    let t = Instant::now();
    let z = igusa_core::zeta::igusa_zeta(i).unwrap().zeta;
    (z, t.elapsed())
}

fn closed_forms() -> Result<String, String> {
    let one_minus_p = BiPoly::binomial(0, 1);
    let cases = [
        ("(x)", ideal(1, &[&[1]]), BiRationalFunction::new(one_minus_p.clone(), vec![bf(1, 1)])),
        ("(x^2)", ideal(1, &[&[2]]), BiRationalFunction::new(one_minus_p.clone(), vec![bf(2, 1)])),
        ("(x,y)", ideal(2, &[&[1, 0], &[0, 1]]), BiRationalFunction::new(BiPoly::binomial(0, 2), vec![bf(1, 2)])),
    ];
    let mut slowest = Duration::ZERO;
    for (name, i, expected) in cases {
        let (z, dt) = timed_zeta(&i);
        slowest = slowest.max(dt);
        if z != expected {
            return Err(format!("{name}: got {z}, expected {expected}"));
        }
        if dt >= Duration::from_secs(1) {
            return Err(format!("{name}: took {dt:?}"));
        }
    }
    // every principal (x^u) with n in {3, 4} and exponents <= 4
    let mut count = 0;
    for code in 1..125 * 5 {
        let u: Vec<i64> = (0..4).map(|k| (code / 5i64.pow(k)) % 5).collect();
        let n = if u[3] > 0 { 4 } else { 3 };
        let u = u[..n].to_vec();
        if u.iter().all(|&x| x == 0) {
            continue;
        }
        let active: Vec<u32> = u.iter().filter(|&&x| x > 0).map(|&x| x as u32).collect();
        let expected = BiRationalFunction::new(
            one_minus_p.pow(active.len() as u32),
            active.iter().map(|&a| bf(a, 1)).collect(),
        );
        let (z, dt) = timed_zeta(&MonomialIdeal::new(n, vec![ExponentVector(u.clone())]).unwrap());
        slowest = slowest.max(dt);
        if z != expected || dt >= Duration::from_secs(1) {
            return Err(format!("principal {u:?}: got {z} in {dt:?}"));
        }
        count += 1;
    }
    Ok(format!("3 named ideals + {count} principal ideals exact; slowest {slowest:?}"))
}

fn oracle_equivalence(entries: &[Entry], build: Duration) -> Result<String, String> {
    let t = Instant::now();
    for e in entries {
        let lhs = e.zeta.zeta.series_expand(10).map_err(|x| x.to_string())?;
        if lhs != series_oracle(&e.ideal, 10) {
            return Err(format!("{}: series differ", e.ideal));
        }
    }
    let total = build + t.elapsed();
    if total >= Duration::from_secs(300) {
        return Err(format!("took {total:?}"));
    }
    Ok(format!("{} ideals, B = 10, {total:?} including zeta computation", entries.len()))
}

fn candidate_confinement(entries: &[Entry]) -> Result<String, String> {
    let mut poles = 0;
    for e in entries {
        for p in &e.zeta.actual_poles {
            let ok = e.zeta.divisors.iter().any(|d| d.a_e > 0 && d.candidate().as_ref() == Some(&p.realpart));
            if !ok {
                return Err(format!("{}: pole {} has no divisor", e.ideal, p.realpart));
            }
            poles += 1;
        }
    }
    Ok(format!("{poles} poles, 0 exceptions"))
}

fn facet_roots(entries: &[Entry]) -> Result<String, String> {
    let (mut poles, mut attained) = (0, 0);
    for e in entries {
        let c = check_roots(&e.zeta, &e.polyhedron).map_err(|x| x.to_string())?;
        if !c.pass || c.witnesses.len() != c.poles.len() {
            return Err(format!("{}: unmatched {:?}", e.ideal, c.unmatched));
        }
        poles += c.poles.len();
        attained += usize::from(c.lct_attained);
    }
    Ok(format!(
        "{poles} poles witnessed, 0 exceptions; -lct attained as a pole for {attained}/{} ideals",
        entries.len()
    ))
}

fn cone_identities(entries: &[Entry]) -> Result<String, String> {
    let mut cones = 0;
    for e in entries {
        for s in 0..e.fan.cones.len() {
            let v = &e.fan.vertices[e.fan.cones[s].associated_vertex];
            let g = Grading::new(v.coords().to_vec(), vec![1; e.ideal.n()]);
            let closed = closed_cone_gf(&e.fan.cone(s), &g).map_err(|x| x.to_string())?;
            let parts = e
                .fan
                .faces_of(s)
                .into_iter()
                .map(|t| open_cone_gf(&e.fan.cone(t), &g))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|x| x.to_string())?;
            if !closed.same_value(&BiRationalFunction::sum(&parts)) {
                return Err(format!("{}: face sum fails on cone {s}", e.ideal));
            }
            cones += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut cells = 0;
    while cells < 100 {
        let n = rng.gen_range(1..=4);
        let rays: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-4..=6)).collect()).collect();
        let d = common::det(&rays);
        if d == 0 {
            continue;
        }
        let count = parallelepiped_points(&HalfOpenSimplicialCone::closed(n, rays.clone())).len() as i128;
        if count != d.abs() {
            return Err(format!("cell {rays:?}: {count} points, |det| = {}", d.abs()));
        }
        cells += 1;
    }
    Ok(format!("face sums on {cones} fan cones; parallelepiped counts on {cells} random cells"))
}

fn order_bound(entries: &[Entry]) -> Result<String, String> {
    let mut max_seen = 0;
    for e in entries {
        let n = e.ideal.n() as u32;
        for g in pole_groups(&e.zeta.zeta).iter().filter(|g| g.order > 0) {
            if g.order > n {
                return Err(format!("{}: order {} at {} exceeds n = {n}", e.ideal, g.order, g.realpart));
            }
        }
        for p in &e.zeta.actual_poles {
            if p.order_bound > n {
                return Err(format!("{}: reported order {} exceeds n", e.ideal, p.order_bound));
            }
            max_seen = max_seen.max(p.order_bound);
        }
    }
    Ok(format!("all orders <= n before clamping; largest order seen {max_seen}"))
}

fn normalization(entries: &[Entry]) -> Result<String, String> {
    for e in entries {
        if series_oracle(&e.ideal, 8).at_t_one() != BiPoly::one() {
            return Err(format!("{}: mass differs from 1", e.ideal));
        }
    }
    Ok(format!("{} ideals, P-degree <= 8", entries.len()))
}

fn specialization() -> Result<String, String> {
    let z = igusa_core::zeta::igusa_zeta(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap().zeta;
    let u = z.specialize_prime(2).map_err(|x| x.to_string())?;
    if u.numerator.coeffs() != [rat(3, 4)] || u.denominator.coeffs() != [rat(1, 1), rat(-1, 4)] {
        return Err(format!("got {u}"));
    }
    // the only pole is the root T = 4 = 2^2 of the denominator, so Re(s) = -2
    let root = -u.denominator.coeff(0) / u.denominator.coeff(1);
    if root != rat(4, 1) {
        return Err(format!("pole at T = {root}"));
    }
    Ok(format!("{u}, pole T = 4 = 2^2, Re(s) = -2"))
}

fn run(name: &str, f: impl FnOnce() -> Result<String, String>) -> bool {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    match outcome {
        Ok(detail) => {
            println!("PASS  {name}: {detail}");
            true
        }
        Err(detail) => {
            println!("FAIL  {name}: {detail}");
            false
        }
    }
}

fn main() -> ExitCode {
    let t = Instant::now();
    let entries: Vec<Entry> = corpus(CORPUS_SEED, CORPUS_SIZE, &CorpusLimits::default())
        .into_iter()
        .map(|ideal| {
            let polyhedron = newton_polyhedron(&ideal);
            let fan = normal_fan(&polyhedron);
            let zeta = zeta_with(&ideal, &polyhedron, &fan);
            Entry { ideal, polyhedron, fan, zeta }
        })
        .collect();
    let build = t.elapsed();
    println!(
        "corpus: seed {CORPUS_SEED}, {} ideals (n <= 4, <= 6 generators, exponents <= 5)",
        entries.len()
    );

    let results = [
        run("1 closed forms", closed_forms),
        run("2 oracle equivalence", || oracle_equivalence(&entries, build)),
        run("3 poles are divisor candidates", || candidate_confinement(&entries)),
        run("4 poles are facet roots", || facet_roots(&entries)),
        run("5 cone-level identities", || cone_identities(&entries)),
        run("6 pole-order bound", || order_bound(&entries)),
        run("7 normalization", || normalization(&entries)),
        run("8 specialization at p = 2", specialization),
    ];
    let passed = results.iter().filter(|&&r| r).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
