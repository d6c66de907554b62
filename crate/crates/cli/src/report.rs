//! Machine-readable run reports.
//!
//! - [`Report`]: the JSON document written by `--json <path>`
//! - identical inputs produce byte-identical JSON apart from `millis`
//! - polynomials appear both as display strings (which re-parse) and as
//!   structured term lists with exact rational coefficients

use serde::Serialize;
use serde_json::{json, Value};

use saddleq::polyring::Polynomial;
use saddleq::system::SystemFamily;
use saddleq::Rat;

/// One CLI invocation: the command, a digest of the input family (when the
/// command takes one), the command-specific result, and the elapsed time.
#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub family: Option<Value>,
    pub result: Value,
    pub millis: u128,
}

/// Digest of a parsed family: resonance and term list with exact values.
pub fn family_json(family: &SystemFamily<Rat>) -> Value {
    let terms: Vec<Value> = (0..family.ell())
        .map(|s| {
            let t = family.term(s);
            json!({
                "u": t.u,
                "v": t.v,
                "a": family.a_value(s).map(|c| c.to_string()),
                "b": family.b_value(s).map(|c| c.to_string()),
            })
        })
        .collect();
    json!({
        "p": family.resonance().p(),
        "q": family.resonance().q(),
        "terms": terms,
    })
}

/// A polynomial as its display string plus a structured term list.
pub fn poly_json(f: &Polynomial<Rat>) -> Value {
    let names = f.vars().names();
    let terms: Vec<Value> = f
        .terms()
        .map(|(m, c)| {
            let monomial: Vec<Value> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| json!({"variable": names[i], "exponent": e}))
                .collect();
            json!({"coefficient": c.to_string(), "monomial": monomial})
        })
        .collect();
    json!({"text": f.to_string(), "terms": terms})
}

/// JSON array of polynomials.
pub fn polys_json(fs: &[Polynomial<Rat>]) -> Value {
    Value::Array(fs.iter().map(poly_json).collect())
}
