//! Observations: the canonical encoding of a fully forced result plus the
//! ordered effect trace emitted while interpreting it. Every commuting
//! diagram in the library is tested as equality of Observations.

use serde::Serialize;

use crate::value::Value;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Observation {
    pub value: String,
    pub trace: Vec<String>,
}

impl Observation {
    pub fn new(value: String, trace: Vec<String>) -> Observation {
        Observation { value, trace }
    }

    /// Observation of a pure value: no trace.
    pub fn of_value(v: &Value) -> Observation {
        Observation {
            value: v.encode(),
            trace: Vec::new(),
        }
    }
}
