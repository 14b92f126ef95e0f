use std::fmt;

use serde::{Serialize, Serializer};

use crate::Rational;

/// One evaluated side of a law at a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    /// A carrier element, by index.
    Element(usize),
    Scalar(Rational),
    /// A real function over the state space (may leave `[0, 1]`).
    Vector(Vec<Rational>),
    Flag(bool),
    /// Something required to exist in the structure does not.
    Missing,
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Element(i) => write!(f, "{i}"),
            Value::Scalar(q) => write!(f, "{q}"),
            Value::Vector(v) => {
                f.write_str("(")?;
                for (k, q) in v.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{q}")?;
                }
                f.write_str(")")
            }
            Value::Flag(b) => write!(f, "{b}"),
            Value::Missing => f.write_str("<missing>"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Value::Element(i) => s.serialize_u64(*i as u64),
            Value::Scalar(q) => s.serialize_str(&q.to_string()),
            Value::Vector(v) => s.collect_seq(v.iter().map(|q| q.to_string())),
            Value::Flag(b) => s.serialize_bool(*b),
            Value::Missing => s.serialize_none(),
        }
    }
}

/// The tuple at which a law fails, with both sides evaluated there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub args: Vec<usize>,
    pub lhs: Value,
    pub rhs: Value,
}

impl Witness {
    pub fn new(args: Vec<usize>, lhs: Value, rhs: Value) -> Self {
        Witness { args, lhs, rhs }
    }

    pub fn elements(args: &[usize], lhs: usize, rhs: usize) -> Self {
        Witness::new(args.to_vec(), Value::Element(lhs), Value::Element(rhs))
    }
}

/// Outcome of checking a single law or a battery of laws.
///
/// A failing verdict always carries a witness; a passing one never does.
/// For batteries, `law` names the first failing member, or the battery itself
/// when everything holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub passed: bool,
    pub law: String,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn pass(law: impl Into<String>) -> Self {
        Verdict { passed: true, law: law.into(), witness: None }
    }

    pub fn fail(law: impl Into<String>, witness: Witness) -> Self {
        Verdict { passed: false, law: law.into(), witness: Some(witness) }
    }

    /// Returns the first failing verdict, or a pass under `name`.
    pub fn first_failure(name: &str, verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
        verdicts.into_iter().find(|v| !v.passed).unwrap_or_else(|| Verdict::pass(name))
    }

    /// Renames a passing verdict; failures keep the name of the violated law.
    pub(crate) fn or_pass_as(self, name: &str) -> Verdict {
        if self.passed {
            Verdict::pass(name)
        } else {
            self
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "{} holds", self.law),
            Some(w) => {
                write!(f, "{} fails at (", self.law)?;
                for (k, a) in w.args.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, "): lhs = {}, rhs = {}", w.lhs, w.rhs)
            }
        }
    }
}
