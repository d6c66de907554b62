//! Line-oriented system description files.
//!
//! - `#` starts a comment anywhere in a line; blank lines are ignored
//! - first content line: `resonance <p> <q>`
//! - following lines: `term <u> <v> [a=<rational>] [b=<rational>]` where an
//!   omitted value keeps that coefficient symbolic
//! - [`parse_system_file`] reports syntax errors with 1-based line numbers
//! - [`format_system_file`] emits text that re-parses to an equal family

use std::str::FromStr;

use saddleq::system::{SystemFamily, TermIndex};
use saddleq::Rat;

/// Parse a system description into a validated family.
pub fn parse_system_file(text: &str) -> Result<SystemFamily<Rat>, String> {
    let mut resonance: Option<(u32, u32)> = None;
    let mut specs: Vec<(TermIndex, Option<Rat>, Option<Rat>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let number = i + 1;
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("resonance") => {
                if resonance.is_some() {
                    return Err(format!("line {number}: repeated `resonance` line"));
                }
                if !specs.is_empty() {
                    return Err(format!(
                        "line {number}: `resonance` must come before any `term` line"
                    ));
                }
                let p = parse_int(tokens.next(), number, "p")?;
                let q = parse_int(tokens.next(), number, "q")?;
                expect_end(tokens.next(), number)?;
                resonance = Some((p, q));
            }
            Some("term") => {
                if resonance.is_none() {
                    return Err(format!(
                        "line {number}: a `resonance <p> <q>` line must come first"
                    ));
                }
                let u = parse_int(tokens.next(), number, "u")?;
                let v = parse_int(tokens.next(), number, "v")?;
                let mut a = None;
                let mut b = None;
                for token in tokens {
                    let (key, value) = token.split_once('=').ok_or_else(|| {
                        format!("line {number}: expected `a=<rational>` or `b=<rational>`, got `{token}`")
                    })?;
                    let slot = match key {
                        "a" => &mut a,
                        "b" => &mut b,
                        other => {
                            return Err(format!(
                                "line {number}: unknown coefficient `{other}` (expected `a` or `b`)"
                            ))
                        }
                    };
                    if slot.is_some() {
                        return Err(format!("line {number}: repeated `{key}=` value"));
                    }
                    *slot = Some(Rat::from_str(value).map_err(|e| {
                        format!("line {number}: bad rational `{value}`: {e}")
                    })?);
                }
                specs.push((TermIndex::new(u, v), a, b));
            }
            Some(other) => {
                return Err(format!(
                    "line {number}: expected `resonance` or `term`, got `{other}`"
                ));
            }
            None => unreachable!("blank lines are skipped"),
        }
    }
    let (p, q) = resonance.ok_or("the file contains no `resonance <p> <q>` line")?;
    SystemFamily::new(p, q, specs).map_err(|e| e.to_string())
}

/// Emit a family back into the file format.
pub fn format_system_file(family: &SystemFamily<Rat>) -> String {
    let mut out = format!(
        "resonance {} {}\n",
        family.resonance().p(),
        family.resonance().q()
    );
    for s in 0..family.ell() {
        let t = family.term(s);
        out.push_str(&format!("term {} {}", t.u, t.v));
        if let Some(a) = family.a_value(s) {
            out.push_str(&format!(" a={a}"));
        }
        if let Some(b) = family.b_value(s) {
            out.push_str(&format!(" b={b}"));
        }
        out.push('\n');
    }
    out
}

fn parse_int(token: Option<&str>, number: usize, what: &str) -> Result<u32, String> {
    let token =
        token.ok_or_else(|| format!("line {number}: missing value for `{what}`"))?;
    token
        .parse()
        .map_err(|_| format!("line {number}: `{what}` must be a nonnegative integer, got `{token}`"))
}

fn expect_end(token: Option<&str>, number: usize) -> Result<(), String> {
    match token {
        None => Ok(()),
        Some(extra) => Err(format!("line {number}: unexpected trailing `{extra}`")),
    }
}
