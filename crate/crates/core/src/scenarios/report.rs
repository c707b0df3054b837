use std::fmt;

use serde::Serialize;

use crate::chow::{GradedClass, Rational};
use crate::error::Result;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Provenance {
    /// Printed in the source literature.
    Paper,
    /// Immediate from definitions.
    Trivial,
    /// Computed independently (by hand, by another route, or by an oracle).
    Derived,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Paper => "PAPER",
            Provenance::Trivial => "TRIVIAL",
            Provenance::Derived => "DERIVED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Class(GradedClass),
    Scalar(#[serde(with = "crate::chow::as_string")] Rational),
    /// Polynomial coefficients, constant term first.
    Polynomial(#[serde(serialize_with = "ser_rationals")] Vec<Rational>),
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

impl From<GradedClass> for Value {
    fn from(c: GradedClass) -> Self {
        Value::Class(c)
    }
}

impl From<Rational> for Value {
    fn from(r: Rational) -> Self {
        Value::Scalar(r)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Class(c) => write!(f, "{c}"),
            Value::Scalar(r) => write!(f, "{r}"),
            Value::Polynomial(p) => {
                let s: Vec<String> = p.iter().map(ToString::to_string).collect();
                write!(f, "[{}]", s.join(", "))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Equal,
    Differs,
}

#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub name: String,
    pub computed: Option<Value>,
    pub expected: Value,
    pub relation: Relation,
    pub provenance: Provenance,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScenarioReport {
    pub name: String,
    pub inputs: serde_json::Value,
    pub entries: Vec<Entry>,
}

impl ScenarioReport {
    pub fn new(name: impl Into<String>, inputs: serde_json::Value) -> Self {
        ScenarioReport {
            name: name.into(),
            inputs,
            entries: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn entry(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    /// Records `computed == expected`; an engine error is a failing entry.
    pub fn check<V: Into<Value>>(
        &mut self,
        name: impl Into<String>,
        computed: Result<V>,
        expected: impl Into<Value>,
        provenance: Provenance,
    ) -> &mut Entry {
        self.push(name, computed, expected, provenance, Relation::Equal)
    }

    /// Records `computed != expected`.
    pub fn check_differs<V: Into<Value>>(
        &mut self,
        name: impl Into<String>,
        computed: Result<V>,
        expected: impl Into<Value>,
        provenance: Provenance,
    ) -> &mut Entry {
        self.push(name, computed, expected, provenance, Relation::Differs)
    }

    fn push<V: Into<Value>>(
        &mut self,
        name: impl Into<String>,
        computed: Result<V>,
        expected: impl Into<Value>,
        provenance: Provenance,
        relation: Relation,
    ) -> &mut Entry {
        let expected = expected.into();
        let (computed, pass, note) = match computed {
            Ok(v) => {
                let v = v.into();
                let equal = v == expected;
                let pass = match relation {
                    Relation::Equal => equal,
                    Relation::Differs => !equal,
                };
                (Some(v), pass, None)
            }
            Err(e) => (None, false, Some(e.to_string())),
        };
        self.entries.push(Entry {
            name: name.into(),
            computed,
            expected,
            relation,
            provenance,
            pass,
            note,
        });
        self.entries.last_mut().unwrap()
    }
}

impl Entry {
    pub fn with_note(&mut self, note: impl Into<String>) -> &mut Self {
        let note = note.into();
        self.note = Some(match self.note.take() {
            Some(old) => format!("{old}; {note}"),
            None => note,
        });
        self
    }
}

impl fmt::Display for ScenarioReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "scenario {}", self.name)?;
        let width = self.entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
        for e in &self.entries {
            let status = if e.pass { "PASS" } else { "FAIL" };
            let computed = e
                .computed
                .as_ref()
                .map_or_else(|| "<error>".to_string(), ToString::to_string);
            let rel = match e.relation {
                Relation::Equal => "expected",
                Relation::Differs => "must differ from",
            };
            write!(
                f,
                "  [{status}] {:<width$}  {computed}  ({rel} {} [{}])",
                e.name, e.expected, e.provenance
            )?;
            if let Some(note) = &e.note {
                write!(f, "  note: {note}")?;
            }
            writeln!(f)?;
        }
        let failed = self.failures().count();
        writeln!(
            f,
            "{}: {} of {} checks passed",
            if failed == 0 { "PASS" } else { "FAIL" },
            self.entries.len() - failed,
            self.entries.len()
        )
    }
}
