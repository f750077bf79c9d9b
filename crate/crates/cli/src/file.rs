//! The `.ideal` text format.
//!
//! ```text
//! # twisted cubic
//! field 32003
//! vars x y z w
//! order grevlex
//! ideal:
//! x*z - y^2
//! x*w - y*z
//! y*w - z^2
//! ```
//!
//! `field` and `order` are optional; the default modulus is 32003 unless
//! `PUNCTUAL_MODULUS` is set. `#` starts a comment anywhere on a line.

use std::fmt::Write as _;

use punctual_core::field::DEFAULT_MODULUS;
use punctual_core::ring::parse_polynomial;
use punctual_core::{Ideal, MonomialOrder, PrimeField, Ring};
use thiserror::Error;

pub const MODULUS_ENV: &str = "PUNCTUAL_MODULUS";

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct FileError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> FileError {
    FileError { line, column, message: message.into() }
}

/// A parsed ideal file: the ring, the ideal, and the generator texts as written.
#[derive(Clone, Debug)]
pub struct IdealFile {
    pub ring: Ring,
    pub ideal: Ideal,
    pub generator_text: Vec<String>,
}

fn default_modulus() -> Result<u32, FileError> {
    match std::env::var(MODULUS_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| err(0, 0, format!("{MODULUS_ENV}={v:?} is not a modulus"))),
        Err(_) => Ok(DEFAULT_MODULUS),
    }
}

/// 1-based column of the first non-blank character after `offset` bytes.
fn column_at(line: &str, offset: usize) -> usize {
    line[..offset].chars().count() + 1
}

pub fn parse_ideal_file(text: &str) -> Result<IdealFile, FileError> {
    let mut modulus: Option<u32> = None;
    let mut names: Option<(Vec<String>, usize)> = None;
    let mut order = MonomialOrder::Grevlex;
    let mut in_ideal = false;
    // (line number, column of the expression start, expression)
    let mut exprs: Vec<(usize, usize, String)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let start = content.len() - content.trim_start().len();
        if in_ideal {
            exprs.push((lineno, column_at(raw, start), trimmed.to_string()));
            continue;
        }
        let mut words = trimmed.split_whitespace();
        let keyword = words.next().unwrap();
        let rest: Vec<&str> = words.collect();
        match keyword {
            "field" => {
                let [p] = rest[..] else {
                    return Err(err(lineno, column_at(raw, start), "expected `field <p>`"));
                };
                let col = column_at(raw, raw.find(p).unwrap_or(start));
                let p: u32 = p.parse().map_err(|_| err(lineno, col, format!("`{p}` is not an integer")))?;
                PrimeField::new(p).map_err(|e| err(lineno, col, e.to_string()))?;
                modulus = Some(p);
            }
            "vars" => {
                if rest.is_empty() {
                    return Err(err(lineno, column_at(raw, start), "expected `vars <name>+`"));
                }
                names = Some((rest.iter().map(|s| s.to_string()).collect(), lineno));
            }
            "order" => {
                order = match rest[..] {
                    ["grevlex"] => MonomialOrder::Grevlex,
                    ["lex"] => MonomialOrder::Lex,
                    _ => return Err(err(lineno, column_at(raw, start), "expected `order grevlex|lex`")),
                };
            }
            "ideal:" if rest.is_empty() => in_ideal = true,
            "ideal" if rest == [":"] => in_ideal = true,
            _ => return Err(err(lineno, column_at(raw, start), format!("unknown directive `{keyword}`"))),
        }
    }

    let (names, vars_line) =
        names.ok_or_else(|| err(text.lines().count().max(1), 1, "missing `vars` line"))?;
    if !in_ideal {
        return Err(err(text.lines().count().max(1), 1, "missing `ideal:` line"));
    }
    let p = match modulus {
        Some(p) => p,
        None => default_modulus()?,
    };
    let field = PrimeField::new(p).map_err(|e| err(0, 0, format!("{MODULUS_ENV}: {e}")))?;
    let ring = Ring::new(field, order, &names).map_err(|e| err(vars_line, 1, e.to_string()))?;

    let mut gens = Vec::with_capacity(exprs.len());
    for (k, (lineno, col, expr)) in exprs.iter().enumerate() {
        let f = parse_polynomial(&ring, expr).map_err(|e| err(*lineno, col + e.column - 1, e.message))?;
        if let Err(punctual_core::Error::Inhomogeneous { first, second }) = f.homogeneous_degree() {
            return Err(err(
                *lineno,
                *col,
                format!("generator {} is inhomogeneous: terms of degree {first} and {second}", k + 1),
            ));
        }
        gens.push(f);
    }
    let ideal = Ideal::new(ring.clone(), gens).map_err(|e| err(0, 0, e.to_string()))?;
    Ok(IdealFile { ring, ideal, generator_text: exprs.into_iter().map(|(_, _, e)| e).collect() })
}

/// Renders an ideal in the file format; parsing the result gives back the
/// same generators.
pub fn write_ideal_file(ideal: &Ideal) -> String {
    let ring = ideal.ring();
    let mut s = String::new();
    writeln!(s, "field {}", ring.field().modulus()).unwrap();
    writeln!(s, "vars {}", ring.names().join(" ")).unwrap();
    writeln!(s, "order {}", ring.order().name()).unwrap();
    s.push_str("ideal:\n");
    for g in ideal.generators() {
        writeln!(s, "{}", ring.display(g)).unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWISTED: &str = "field 32003\nvars x y z w\nideal:\nx*z - y^2\nx*w - y*z\ny*w - z^2\n";

    #[test]
    fn parses_twisted_cubic() {
        let f = parse_ideal_file(TWISTED).unwrap();
        assert_eq!(f.ring.nvars(), 4);
        assert_eq!(f.ring.field().modulus(), 32003);
        assert_eq!(f.ideal, punctual_core::corpus::twisted_cubic());
    }

    #[test]
    fn comments_and_order() {
        let f = parse_ideal_file(
            "# c\nfield 7 # small\nvars a b\norder lex\nideal:\n a^2 + b^2  # sum\n\n a*b\n",
        )
        .unwrap();
        assert_eq!(f.ring.order(), MonomialOrder::Lex);
        assert_eq!(f.ideal.generators().len(), 2);
        assert_eq!(f.generator_text, vec!["a^2 + b^2", "a*b"]);
    }

    #[test]
    fn inhomogeneous_generator() {
        let e = parse_ideal_file("vars x y\nideal:\nx*y\nx^2 + y\n").unwrap_err();
        assert_eq!((e.line, e.column), (4, 1));
        assert!(e.message.contains("generator 2"), "{e}");
        assert!(e.message.contains("degree 2 and 1"), "{e}");
    }

    #[test]
    fn non_prime_field() {
        let e = parse_ideal_file("field 10\nvars x\nideal:\nx\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 7));
        assert!(e.message.contains("not a prime"), "{e}");
    }

    #[test]
    fn expression_error_column() {
        let e = parse_ideal_file("vars x y\nideal:\n  x*q\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 5));
    }

    #[test]
    fn missing_sections() {
        assert!(parse_ideal_file("ideal:\nx\n").unwrap_err().message.contains("vars"));
        assert!(parse_ideal_file("vars x\n").unwrap_err().message.contains("ideal:"));
        assert!(parse_ideal_file("vars x\nring q\nideal:\n").unwrap_err().message.contains("ring"));
        assert_eq!(parse_ideal_file("# c\nvars x x\nideal:\n").unwrap_err().line, 2);
    }

    #[test]
    fn write_round_trips() {
        let f = parse_ideal_file(TWISTED).unwrap();
        let g = parse_ideal_file(&write_ideal_file(&f.ideal)).unwrap();
        assert_eq!(g.ideal.generators(), f.ideal.generators());
        assert_eq!(g.ring, f.ring);
    }
}
