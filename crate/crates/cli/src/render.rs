//! Text and JSON rendering of each command's result. JSON output is one
//! compact object per ideal; exact numbers are strings.

use igusa_core::bs_check::{check_roots, facet_bs_roots, RootCheck};
use igusa_core::corpus::{CorpusLimits, Verification};
use igusa_core::fan::{normal_fan, Fan};
use igusa_core::parse::monomial_string;
use igusa_core::polyhedra::{newton_polyhedron, MonomialIdeal, NewtonPolyhedron};
use igusa_core::ring::{BiRationalFunction, BinomialFactor, UniRational};
use igusa_core::zeta::{candidate_poles, divisor_data, latex, open_cone_functions, zeta_with, Pole, ZetaResult};
use serde::Serialize;

use crate::input::Input;
use crate::CliError;

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize")
}

fn ideal_text(ideal: &MonomialIdeal, vars: &[String]) -> String {
    let gens: Vec<String> = ideal
        .generators()
        .iter()
        .map(|g| monomial_string(g.coords(), Some(vars)))
        .collect();
    format!("({})", gens.join(", "))
}

fn vector(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn factors(d: &[BinomialFactor]) -> String {
    let parts: Vec<String> = d.iter().map(|f| format!("({},{})", f.a, f.b)).collect();
    format!("[{}]", parts.join(", "))
}

fn poles(p: &[Pole]) -> String {
    let parts: Vec<String> = p.iter().map(|q| format!("({}, {})", q.realpart, q.order_bound)).collect();
    format!("[{}]", parts.join(", "))
}

fn pipeline(ideal: &MonomialIdeal) -> (NewtonPolyhedron, Fan, ZetaResult) {
    let p = newton_polyhedron(ideal);
    let fan = normal_fan(&p);
    let z = zeta_with(ideal, &p, &fan);
    (p, fan, z)
}

#[derive(Serialize)]
struct Specialized {
    prime: u64,
    function: UniRational,
    text: String,
}

#[derive(Serialize)]
struct ZetaReport<'a> {
    vars: &'a [String],
    #[serde(flatten)]
    result: &'a ZetaResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    specialized: Option<Specialized>,
    #[serde(skip_serializing_if = "Option::is_none")]
    latex: Option<String>,
}

pub fn zeta(input: &Input, prime: Option<u64>, want_latex: bool, json: bool) -> Result<String, CliError> {
    let (_, _, z) = pipeline(&input.ideal);
    let specialized = prime
        .map(|p| {
            z.zeta.specialize_prime(p).map(|function| Specialized {
                prime: p,
                text: function.to_string(),
                function,
            })
        })
        .transpose()?;
    let tex = want_latex.then(|| latex(&z.zeta));
    if json {
        return Ok(to_json(&ZetaReport {
            vars: &input.vars,
            result: &z,
            specialized,
            latex: tex,
        }));
    }
    let mut lines = vec![
        format!("ideal: {}", ideal_text(&input.ideal, &input.vars)),
        format!("zeta: {}    (T = p^-s, P = p^-1)", z.zeta),
        format!("numerator: {}", z.zeta.numerator()),
        format!("denominator: {}", factors(z.zeta.denominator())),
        "divisors:".to_string(),
    ];
    lines.extend(divisor_lines(&input.ideal));
    lines.push(format!("poles: {}", poles(&z.actual_poles)));
    if let Some(s) = specialized {
        lines.push(format!("at p = {}: {}", s.prime, s.text));
    }
    if let Some(t) = tex {
        lines.push(format!("latex: {t}"));
    }
    Ok(lines.join("\n"))
}

fn divisor_lines(ideal: &MonomialIdeal) -> Vec<String> {
    divisor_data(ideal)
        .iter()
        .map(|d| {
            let tail = match d.candidate() {
                Some(c) => format!("candidate {c}"),
                None => "flagged (a_E = 0)".to_string(),
            };
            format!("  ray {}: k_E = {}, a_E = {}, {tail}", vector(&d.ray), d.k_e, d.a_e)
        })
        .collect()
}

#[derive(Serialize)]
struct NewtonReport<'a> {
    ideal: &'a MonomialIdeal,
    polyhedron: &'a NewtonPolyhedron,
}

pub fn newton(input: &Input, json: bool) -> String {
    let p = newton_polyhedron(&input.ideal);
    if json {
        return to_json(&NewtonReport {
            ideal: &input.ideal,
            polyhedron: &p,
        });
    }
    let verts: Vec<String> = p.vertices.iter().map(|v| v.to_string()).collect();
    let mut lines = vec![
        format!("ideal: {}", ideal_text(&input.ideal, &input.vars)),
        format!("vertices: {}", verts.join(" ")),
        "facets:".to_string(),
    ];
    lines.extend(p.facets.iter().map(|f| format!("  {f}")));
    lines.join("\n")
}

#[derive(Serialize)]
struct FanReport<'a> {
    ideal: &'a MonomialIdeal,
    fan: &'a Fan,
    /// Open generating function of each cone, graded by its vertex; same
    /// order as `fan.cones`.
    open_generating_functions: &'a [BiRationalFunction],
}

pub fn fan(input: &Input, json: bool) -> Result<String, CliError> {
    let fan = normal_fan(&newton_polyhedron(&input.ideal));
    let gfs = open_cone_functions(&fan)?;
    if json {
        return Ok(to_json(&FanReport {
            ideal: &input.ideal,
            fan: &fan,
            open_generating_functions: &gfs,
        }));
    }
    let rays: Vec<String> = fan.rays.iter().enumerate().map(|(k, r)| format!("{k}:{}", vector(r))).collect();
    let mut lines = vec![
        format!("ideal: {}", ideal_text(&input.ideal, &input.vars)),
        format!("rays: {}", rays.join(" ")),
        format!("cones ({}):", fan.cones.len()),
    ];
    for (k, (c, gf)) in fan.cones.iter().zip(&gfs).enumerate() {
        lines.push(format!(
            "  {k}: dim {}, rays {:?}, vertex {}, open GF {gf}",
            c.dim, c.rays, fan.vertices[c.associated_vertex]
        ));
    }
    Ok(lines.join("\n"))
}

pub fn divisors(input: &Input, json: bool) -> String {
    let d = divisor_data(&input.ideal);
    let c = candidate_poles(&d);
    if json {
        return to_json(&serde_json::json!({
            "ideal": input.ideal,
            "divisors": d,
            "candidate_poles": c,
        }));
    }
    let mut lines = vec![format!("ideal: {}", ideal_text(&input.ideal, &input.vars))];
    lines.extend(divisor_lines(&input.ideal));
    let cs: Vec<String> = c.iter().map(|x| x.realpart.to_string()).collect();
    lines.push(format!("candidate poles: {}", cs.join(", ")));
    lines.join("\n")
}

#[derive(Serialize)]
struct RootReport<'a> {
    ideal: &'a MonomialIdeal,
    #[serde(flatten)]
    check: &'a RootCheck,
}

pub fn bsroots(input: &Input, json: bool) -> Result<(String, bool), CliError> {
    let (p, _, z) = pipeline(&input.ideal);
    let check = check_roots(&z, &p)?;
    if json {
        let text = to_json(&RootReport {
            ideal: &input.ideal,
            check: &check,
        });
        return Ok((text, check.pass));
    }
    let mut lines = vec![
        format!("ideal: {}", ideal_text(&input.ideal, &input.vars)),
        "facet roots:".to_string(),
    ];
    lines.extend(facet_bs_roots(&p).iter().map(|r| format!("  {}  from {}", r.root, r.facet)));
    lines.push(format!("lct: {}", check.lct));
    let ps: Vec<String> = check.poles.iter().map(|x| x.to_string()).collect();
    lines.push(format!("poles: {}", ps.join(", ")));
    for w in &check.witnesses {
        lines.push(format!("  pole {} is the root of {}", w.pole, w.facet));
    }
    for u in &check.unmatched {
        lines.push(format!("  pole {u} matches no facet root"));
    }
    lines.push(format!(
        "-lct attained as a pole: {}",
        if check.lct_attained { "yes" } else { "no" }
    ));
    lines.push(format!("check: {}", if check.pass { "pass" } else { "FAIL" }));
    Ok((lines.join("\n"), check.pass))
}

pub fn verification(input: &Input, v: &Verification, json: bool) -> String {
    if json {
        return to_json(v);
    }
    let mut failed = Vec::new();
    if !v.oracle_match {
        failed.push(format!("series differs from the direct sum up to P^{}", v.bound));
    }
    if !v.candidates_ok {
        failed.push("a pole is not a divisor candidate".to_string());
    }
    if !v.roots.pass {
        let u: Vec<String> = v.roots.unmatched.iter().map(|x| x.to_string()).collect();
        failed.push(format!("poles {} are not facet roots", u.join(", ")));
    }
    let head = format!("{}: ", ideal_text(&input.ideal, &input.vars));
    if failed.is_empty() {
        format!(
            "pass {head}series matches up to P^{}, poles {} are facet roots, lct {}",
            v.bound,
            poles(&v.poles),
            v.lct
        )
    } else {
        format!("FAIL {head}{}", failed.join("; "))
    }
}

pub fn corpus_report(results: &[Verification]) -> String {
    results.iter().map(|v| to_json(v) + "\n").collect()
}

#[derive(Serialize)]
struct CorpusSummary<'a> {
    seed: u64,
    count: usize,
    limits: &'a CorpusLimits,
    bound: u32,
    passed: usize,
    lct_attained: usize,
    max_pole_order: u32,
}

pub fn corpus_summary(seed: u64, limits: &CorpusLimits, bound: u32, results: &[Verification], json: bool) -> String {
    let s = CorpusSummary {
        seed,
        count: results.len(),
        limits,
        bound,
        passed: results.iter().filter(|v| v.pass).count(),
        lct_attained: results.iter().filter(|v| v.roots.lct_attained).count(),
        max_pole_order: results.iter().flat_map(|v| &v.poles).map(|p| p.order_bound).max().unwrap_or(0),
    };
    if json {
        return to_json(&s);
    }
    format!(
        "seed {seed}, {} ideals (n <= {}, <= {} generators, exponents <= {}), B = {bound}: {}/{} pass; \
         -lct attained as a pole for {}/{}; largest pole order {}",
        s.count,
        limits.max_n,
        limits.max_generators,
        limits.max_exponent,
        s.passed,
        s.count,
        s.lct_attained,
        s.count,
        s.max_pole_order
    )
}
