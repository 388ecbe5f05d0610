//! JSON shapes for results: polynomials, rationals, floats, subsets.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use whitney::{BiPolynomial, IntPolynomial, Subset};

pub fn poly(p: &IntPolynomial, var: &str) -> Value {
    let coeffs: Vec<String> = p.coeffs().iter().map(BigInt::to_string).collect();
    json!({ "var": var, "coeffs": coeffs, "display": p.display_in(var) })
}

pub fn bipoly(p: &BiPolynomial) -> Value {
    let terms: Vec<Value> = p.terms().map(|(i, j, c)| json!([i, j, c.to_string()])).collect();
    json!({ "vars": ["x", "y"], "terms": terms, "display": p.to_string() })
}

/// `"p/q"`, or `"p"` for integers.
pub fn rational(r: &BigRational) -> Value {
    Value::String(r.to_string())
}

pub fn big(b: &BigInt) -> Value {
    Value::String(b.to_string())
}

/// Rounded to 12 significant digits.
pub fn float(x: f64) -> Value {
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    serde_json::Number::from_f64(rounded).map_or(Value::Null, Value::Number)
}

pub fn labels<S: AsRef<str>>(all: &[S], set: Subset) -> Vec<String> {
    set.iter().map(|i| all[i].as_ref().to_string()).collect()
}

pub fn print(value: &Value, compact: bool) {
    let text = if compact {
        serde_json::to_string(value)
    } else {
        serde_json::to_string_pretty(value)
    };
    println!("{}", text.expect("values built from json! always serialize"));
}
