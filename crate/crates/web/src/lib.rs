//! WebAssembly bindings for the demo page in `www/`.
//!
//! Each exported function takes the ideal as typed by the user and returns
//! a JSON string; errors come back as a thrown JS `Error` carrying the
//! message. The plain `*_json` functions do the work and are what the tests
//! call.

use igusa_core::bs_check::{check_roots, facet_bs_roots};
use igusa_core::fan::normal_fan;
use igusa_core::parse::{monomial_string, parse_ideal};
use igusa_core::polyhedra::{newton_polyhedron, MonomialIdeal};
use igusa_core::zeta::{latex, zeta_with};
use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Number of `T^k` coefficients shown for a specialized zeta function.
const SERIES_TERMS: usize = 8;

fn parse(text: &str) -> Result<(MonomialIdeal, Vec<String>), String> {
    parse_ideal(text, None).map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("view types serialize")
}

fn ideal_text(ideal: &MonomialIdeal, vars: &[String]) -> String {
    let gens: Vec<String> = ideal
        .generators()
        .iter()
        .map(|g| monomial_string(g.coords(), Some(vars)))
        .collect();
    format!("({})", gens.join(", "))
}

/// Vertices, facets with their roots, and the normal fan: enough to draw a
/// Newton polygon when `n = 2`.
pub fn newton_json(text: &str) -> Result<String, String> {
    let (ideal, vars) = parse(text)?;
    let p = newton_polyhedron(&ideal);
    let fan = normal_fan(&p);
    let roots = facet_bs_roots(&p);
    let facets: Vec<_> = p
        .facets
        .iter()
        .map(|f| {
            let root = roots.iter().find(|r| &r.facet == f).map(|r| r.root.to_string());
            json!({ "normal": f.normal, "offset": f.offset, "text": f.to_string(), "root": root })
        })
        .collect();
    let cones: Vec<_> = fan
        .cones
        .iter()
        .map(|c| json!({ "dim": c.dim, "rays": c.rays, "vertex": fan.vertices[c.associated_vertex] }))
        .collect();
    Ok(to_json(&json!({
        "ideal": ideal_text(&ideal, &vars),
        "vars": vars,
        "n": ideal.n(),
        "generators": ideal.generators(),
        "vertices": p.vertices,
        "facets": facets,
        "rays": fan.rays,
        "cones": cones,
    })))
}

/// The reduced zeta function with its poles, divisor data and the
/// pole/facet-root check.
pub fn zeta_json(text: &str) -> Result<String, String> {
    let (ideal, vars) = parse(text)?;
    let p = newton_polyhedron(&ideal);
    let fan = normal_fan(&p);
    let z = zeta_with(&ideal, &p, &fan);
    let check = check_roots(&z, &p).map_err(|e| e.to_string())?;
    let denominator: Vec<_> = z.zeta.denominator().iter().map(|f| [f.a, f.b]).collect();
    let divisors: Vec<_> = z
        .divisors
        .iter()
        .map(|d| {
            let candidate = d.candidate().map(|c| c.to_string());
            json!({ "ray": d.ray, "k_e": d.k_e, "a_e": d.a_e, "candidate": candidate })
        })
        .collect();
    Ok(to_json(&json!({
        "ideal": ideal_text(&ideal, &vars),
        "text": z.zeta.to_string(),
        "numerator": z.zeta.numerator().to_string(),
        "denominator": denominator,
        "latex": latex(&z.zeta),
        "divisors": divisors,
        "candidate_poles": z.candidate_poles,
        "poles": z.actual_poles,
        "check": check,
    })))
}

/// The zeta function at a fixed prime `p`, as a rational function of
/// `T = p^-s`, with its first power-series coefficients.
pub fn specialize_json(text: &str, prime: u32) -> Result<String, String> {
    let (ideal, vars) = parse(text)?;
    let p = newton_polyhedron(&ideal);
    let z = zeta_with(&ideal, &p, &normal_fan(&p));
    let u = z.zeta.specialize_prime(prime.into()).map_err(|e| e.to_string())?;
    let series: Vec<String> = u.series(SERIES_TERMS - 1).iter().map(|c| c.to_string()).collect();
    Ok(to_json(&json!({
        "ideal": ideal_text(&ideal, &vars),
        "prime": prime,
        "text": u.to_string(),
        "function": u,
        "series": series,
    })))
}

#[wasm_bindgen]
pub fn newton(text: &str) -> Result<String, JsError> {
    newton_json(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn zeta(text: &str) -> Result<String, JsError> {
    zeta_json(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn specialize(text: &str, prime: u32) -> Result<String, JsError> {
    specialize_json(text, prime).map_err(|e| JsError::new(&e))
}
