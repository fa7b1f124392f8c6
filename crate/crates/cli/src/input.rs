//! Reading ideals from `--ideal` or `--file`.
//!
//! Accepted forms: a monomial list (`"x^2*y, y^3"`), a JSON ideal object
//! `{"n": 2, "generators": [[2, 1], [0, 3]]}`, a JSON exponent matrix
//! `[[2, 1], [0, 3]]`, a JSON array of either, JSON Lines of either, and
//! JSON Lines written by `igusa corpus` (each line's `ideal` field). A text
//! file that is not JSON holds one monomial list per line; blank lines and
//! lines starting with `#` are skipped.

use std::fs;

use igusa_core::parse::{default_vars, parse_ideal, parse_vars};
use igusa_core::polyhedra::{ExponentVector, MonomialIdeal};
use igusa_core::Error;
use serde_json::Value;

use crate::CliError;

/// An ideal together with the variable names used to print it.
#[derive(Clone, Debug)]
pub struct Input {
    pub ideal: MonomialIdeal,
    pub vars: Vec<String>,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Core(Error::Parse {
        line,
        column,
        message: message.into(),
    })
}

fn looks_like_json(text: &str) -> bool {
    matches!(text.trim_start().chars().next(), Some('{' | '['))
}

pub fn read_inputs(ideal: Option<&str>, file: Option<&str>, vars: Option<&str>) -> Result<Vec<Input>, CliError> {
    let vars = vars.map(parse_vars).transpose()?;
    let (text, whole) = match (ideal, file) {
        (Some(t), None) => (t.to_string(), true),
        (None, Some("-")) => (std::io::read_to_string(std::io::stdin())?, false),
        (None, Some(path)) => (
            fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?,
            false,
        ),
        _ => return Err(CliError::Usage("give exactly one of --ideal or --file".into())),
    };
    let inputs = if looks_like_json(&text) {
        from_json(&text, vars.as_deref())?
    } else if whole {
        vec![from_text(&text, vars.as_deref(), 0)?]
    } else {
        let mut out = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            out.push(from_text(line, vars.as_deref(), i)?);
        }
        out
    };
    if inputs.is_empty() {
        return Err(CliError::Usage("input contains no ideals".into()));
    }
    Ok(inputs)
}

/// Parse one monomial list; `line_offset` shifts reported line numbers to
/// the position in the enclosing file.
fn from_text(text: &str, vars: Option<&[String]>, line_offset: usize) -> Result<Input, CliError> {
    match parse_ideal(text, vars) {
        Ok((ideal, vars)) => Ok(Input { ideal, vars }),
        Err(Error::Parse { line, column, message }) => Err(parse_error(line + line_offset, column, message)),
        Err(e) => Err(e.into()),
    }
}

fn from_json(text: &str, vars: Option<&[String]>) -> Result<Vec<Input>, CliError> {
    let values: Vec<(Value, usize)> = match serde_json::from_str::<Value>(text) {
        Ok(v) => vec![(v, 1)],
        Err(whole) => {
            // JSON Lines, recognized by a first line that is a complete value.
            let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
            if serde_json::from_str::<Value>(first).is_err() {
                return Err(parse_error(whole.line(), whole.column(), strip_position(&whole)));
            }
            let mut out = Vec::new();
            for (i, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                let v = serde_json::from_str::<Value>(line)
                    .map_err(|e| parse_error(i + 1, e.column(), strip_position(&e)))?;
                out.push((v, i + 1));
            }
            out
        }
    };
    let mut ideals = Vec::new();
    for (v, line) in values {
        collect(v, line, &mut ideals)?;
    }
    ideals
        .into_iter()
        .map(|ideal| {
            let vars = match vars {
                Some(v) if v.len() != ideal.n() => {
                    return Err(CliError::Usage(format!(
                        "--vars declares {} variables but the ideal has n = {}",
                        v.len(),
                        ideal.n()
                    )))
                }
                Some(v) => v.to_vec(),
                None => default_vars(ideal.n()),
            };
            Ok(Input { ideal, vars })
        })
        .collect()
}

/// serde_json appends " at line L column C"; the position is reported
/// separately.
fn strip_position(e: &serde_json::Error) -> String {
    let s = e.to_string();
    match s.rfind(" at line ") {
        Some(k) => s[..k].to_string(),
        None => s,
    }
}

fn is_matrix(v: &[Value]) -> bool {
    !v.is_empty() && v.iter().all(|row| row.as_array().is_some_and(|r| r.iter().all(Value::is_number)))
}

fn collect(v: Value, line: usize, out: &mut Vec<MonomialIdeal>) -> Result<(), CliError> {
    match v {
        Value::Object(mut map) => {
            if let Some(inner) = map.remove("ideal") {
                return collect(inner, line, out);
            }
            let ideal: MonomialIdeal = serde_json::from_value(Value::Object(map))
                .map_err(|e| parse_error(line, 1, format!("not an ideal object: {e}")))?;
            out.push(ideal);
        }
        Value::Array(rows) if is_matrix(&rows) => {
            let gens: Vec<Vec<i64>> = serde_json::from_value(Value::Array(rows))
                .map_err(|e| parse_error(line, 1, format!("exponent matrix entries must be integers: {e}")))?;
            let n = gens[0].len();
            out.push(MonomialIdeal::new(n, gens.into_iter().map(ExponentVector).collect())?);
        }
        Value::Array(items) if !items.is_empty() => {
            for item in items {
                collect(item, line, out)?;
            }
        }
        other => {
            return Err(parse_error(
                line,
                1,
                format!("expected an ideal object, an exponent matrix or a list of them, found {other}"),
            ))
        }
    }
    Ok(())
}
