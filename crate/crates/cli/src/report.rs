//! Text rendering of verdicts and reports.

use rlse_core::{Rational, Value, Verdict, Witness};
use serde::Serialize;

/// Exit status: every check passed, or the set is embeddable.
pub const EXIT_PASS: u8 = 0;
/// A check failed; the report names a witness.
pub const EXIT_FAIL: u8 = 1;
/// Command line or input file could not be understood.
pub const EXIT_USAGE: u8 = 2;
/// The input is well formed but violates a precondition of the command.
pub const EXIT_PRECONDITION: u8 = 3;

/// Output of a command: the text and JSON forms of the same report.
#[derive(Debug)]
pub struct Report {
    pub text: String,
    pub json: serde_json::Value,
    pub code: u8,
}

impl Report {
    pub fn new(text: String, json: impl Serialize, code: u8) -> Self {
        let json = serde_json::to_value(json).expect("reports serialize");
        Report { text, json, code }
    }
}

pub fn vector(values: &[Rational]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn value(v: &Value, label: &dyn Fn(usize) -> String) -> String {
    match v {
        Value::Element(x) => label(*x),
        Value::Vector(values) => vector(values),
        other => other.to_string(),
    }
}

pub fn witness(law: &str, w: &Witness, label: &dyn Fn(usize) -> String) -> String {
    let lhs = value(&w.lhs, label);
    let rhs = value(&w.rhs, label);
    if w.args.is_empty() {
        return format!("{law} fails: lhs = {lhs}, rhs = {rhs}");
    }
    let args: Vec<String> = w.args.iter().map(|&a| label(a)).collect();
    format!("{law} fails at ({}): lhs = {lhs}, rhs = {rhs}", args.join(", "))
}

/// `PASS name` or `FAIL name: <law> fails at (...)`.
pub fn verdict_line(name: &str, v: &Verdict, label: &dyn Fn(usize) -> String) -> String {
    match &v.witness {
        None => format!("PASS {name}"),
        Some(w) => format!("FAIL {name}: {}", witness(&v.law, w, label)),
    }
}
