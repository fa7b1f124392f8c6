//! Monomial-list input such as `"x^2*y, y^3"`.
//!
//! Generators are separated by commas, factors by `*`, powers written with
//! `^`. The literal `1` stands for the empty monomial. Variables are either
//! declared up front or inferred from the input and sorted alphabetically.

use crate::error::{Error, Result};
use crate::polyhedra::{ExponentVector, MonomialIdeal};

/// Default variable names for dimension `n`.
pub fn default_vars(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

/// Render an exponent vector as a monomial, e.g. `x^2*y`.
pub fn monomial_string(coords: &[i64], vars: Option<&[String]>) -> String {
    let names = match vars {
        Some(v) => v.to_vec(),
        None => default_vars(coords.len()),
    };
    let parts: Vec<String> = coords
        .iter()
        .zip(&names)
        .filter(|(e, _)| **e != 0)
        .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Star,
    Caret,
    Comma,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, column);
        match c {
            '\n' => {
                line += 1;
                column = 1;
                i += 1;
                continue;
            }
            c if c.is_whitespace() => {
                column += 1;
                i += 1;
                continue;
            }
            '*' => out.push(Spanned { tok: Tok::Star, line: l0, column: c0 }),
            '^' => out.push(Spanned { tok: Tok::Caret, line: l0, column: c0 }),
            ',' => out.push(Spanned { tok: Tok::Comma, line: l0, column: c0 }),
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let v: i64 = s
                    .parse()
                    .map_err(|_| err(l0, c0, format!("integer {s} out of range")))?;
                column += i - start;
                out.push(Spanned { tok: Tok::Int(v), line: l0, column: c0 });
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                column += i - start;
                out.push(Spanned { tok: Tok::Ident(s), line: l0, column: c0 });
                continue;
            }
            other => return Err(err(l0, c0, format!("unexpected character {other:?}"))),
        }
        column += 1;
        i += 1;
    }
    Ok(out)
}

/// `(variable, exponent)` factors of one monomial, with positions.
type RawMonomial = Vec<(String, i64, usize, usize)>;

fn parse_monomials(tokens: &[Spanned]) -> Result<Vec<RawMonomial>> {
    let mut out = Vec::new();
    let mut pos = 0;
    let end_pos = |pos: usize| {
        tokens
            .get(pos)
            .or(tokens.last())
            .map_or((1, 1), |t| (t.line, t.column))
    };
    loop {
        let mut mono: RawMonomial = Vec::new();
        loop {
            let Some(t) = tokens.get(pos) else {
                let (l, c) = end_pos(pos);
                return Err(err(l, c, "expected a variable or 1"));
            };
            match &t.tok {
                Tok::Ident(name) => {
                    pos += 1;
                    let mut exp = 1;
                    if tokens.get(pos).is_some_and(|t| t.tok == Tok::Caret) {
                        pos += 1;
                        match tokens.get(pos) {
                            Some(Spanned { tok: Tok::Int(e), .. }) => {
                                exp = *e;
                                pos += 1;
                            }
                            Some(o) => return Err(err(o.line, o.column, "expected an exponent after '^'")),
                            None => {
                                let (l, c) = end_pos(pos);
                                return Err(err(l, c, "expected an exponent after '^'"));
                            }
                        }
                    }
                    mono.push((name.clone(), exp, t.line, t.column));
                }
                Tok::Int(1) => pos += 1,
                Tok::Int(v) => {
                    return Err(err(
                        t.line,
                        t.column,
                        format!("coefficient {v} not allowed; generators are monomials"),
                    ))
                }
                _ => return Err(err(t.line, t.column, "expected a variable or 1")),
            }
            match tokens.get(pos) {
                Some(Spanned { tok: Tok::Star, .. }) => pos += 1,
                _ => break,
            }
        }
        out.push(mono);
        match tokens.get(pos) {
            None => break,
            Some(Spanned { tok: Tok::Comma, .. }) => pos += 1,
            Some(t) => return Err(err(t.line, t.column, "expected ',' or '*'")),
        }
    }
    Ok(out)
}

/// Parse a comma-separated list of distinct variable names.
pub fn parse_vars(text: &str) -> Result<Vec<String>> {
    let tokens = lex(text)?;
    let mut vars: Vec<String> = Vec::new();
    let mut expect_ident = true;
    for t in &tokens {
        match (&t.tok, expect_ident) {
            (Tok::Ident(name), true) => {
                if vars.contains(name) {
                    return Err(err(t.line, t.column, format!("variable {name} declared twice")));
                }
                vars.push(name.clone());
                expect_ident = false;
            }
            (Tok::Comma, false) => expect_ident = true,
            _ => return Err(err(t.line, t.column, "expected a comma-separated list of variable names")),
        }
    }
    if vars.is_empty() {
        return Err(err(1, 1, "no variables declared"));
    }
    Ok(vars)
}

/// Parse a monomial list into an ideal. Returns the ideal and the variable
/// order used.
pub fn parse_ideal(text: &str, vars: Option<&[String]>) -> Result<(MonomialIdeal, Vec<String>)> {
    let tokens = lex(text)?;
    if tokens.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    let monomials = parse_monomials(&tokens)?;
    let vars: Vec<String> = match vars {
        Some(v) => v.to_vec(),
        None => {
            let mut names: Vec<String> = monomials
                .iter()
                .flatten()
                .map(|(name, ..)| name.clone())
                .collect();
            names.sort();
            names.dedup();
            if names.is_empty() {
                // Only constants: the ideal is the unit ideal in one variable.
                names.push("x".to_string());
            }
            names
        }
    };
    let mut gens = Vec::with_capacity(monomials.len());
    for mono in &monomials {
        let mut e = vec![0i64; vars.len()];
        for (name, exp, line, column) in mono {
            let Some(k) = vars.iter().position(|v| v == name) else {
                return Err(err(*line, *column, format!("undeclared variable {name}")));
            };
            e[k] += exp;
        }
        gens.push(ExponentVector(e));
    }
    let ideal = MonomialIdeal::new(vars.len(), gens)?;
    Ok((ideal, vars))
}
