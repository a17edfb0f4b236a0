//! Canonical JSON reports. Keys are sorted and scalars are written in the field's normal
//! form, so a report depends only on its inputs and seed.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::braided::Verdict;
use crate::cochain::{Ybh2Cochain, Ybh3Cochain};
use crate::io::{canonical_json, encode_map, SCHEMA};
use crate::scalar::Field;
use crate::tensor::TensorMap;

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    fields: BTreeMap<String, Value>,
    checks: BTreeMap<String, Value>,
    failed: bool,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut fields = BTreeMap::new();
        fields.insert("schema".into(), json!(SCHEMA));
        fields.insert("command".into(), json!(command));
        Report { fields, checks: BTreeMap::new(), failed: false }
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        self.fields.insert(key.into(), serde_json::to_value(value).expect("report values serialize"));
    }

    /// Record a named check; `detail` is merged into its entry.
    pub fn check(&mut self, name: &str, passed: bool, detail: Option<Value>) {
        let mut entry = serde_json::Map::new();
        entry.insert("pass".into(), json!(passed));
        if let Some(Value::Object(extra)) = detail {
            entry.extend(extra);
        } else if let Some(other) = detail {
            entry.insert("detail".into(), other);
        }
        self.checks.insert(name.into(), Value::Object(entry));
        self.failed |= !passed;
    }

    pub fn check_verdict(&mut self, name: &str, v: &Verdict) {
        match v {
            Verdict::Pass => self.check(name, true, None),
            Verdict::Fail(w) => self.check(name, false, Some(json!({"witness": {"input": w.input, "output": w.output}}))),
        }
    }

    pub fn all_passed(&self) -> bool {
        !self.failed
    }

    pub fn to_value(&self) -> Value {
        let mut out: serde_json::Map<String, Value> = self.fields.clone().into_iter().collect();
        if !self.checks.is_empty() {
            out.insert("checks".into(), Value::Object(self.checks.clone().into_iter().collect()));
            out.insert("pass".into(), json!(!self.failed));
        }
        Value::Object(out)
    }

    pub fn to_canonical_json(&self) -> String {
        canonical_json(&self.to_value())
    }
}

pub fn map_value<F: Field>(m: &TensorMap<F>) -> Value {
    serde_json::to_value(encode_map(m)).expect("entries serialize")
}

pub fn cochain2_value<F: Field>(c: &Ybh2Cochain<F>) -> Value {
    json!({"phi": map_value(&c.phi), "psi": map_value(&c.psi)})
}

pub fn cochain3_value<F: Field>(c: &Ybh3Cochain<F>) -> Value {
    json!({
        "beta": map_value(&c.beta),
        "alpha_yi": map_value(&c.alpha_yi),
        "alpha_iy": map_value(&c.alpha_iy),
        "gamma": map_value(&c.gamma),
    })
}

pub fn vector_value<F: Field>(field: &F, v: &[F::Elem]) -> Value {
    Value::Array(v.iter().map(|x| json!(field.format(x))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided::Witness;

    #[test]
    fn checks_drive_the_verdict() {
        let mut r = Report::new("check");
        r.set("dim", 2);
        r.check_verdict("yi", &Verdict::Pass);
        assert!(r.all_passed());
        r.check_verdict("iy", &Verdict::Fail(Witness { input: vec![0, 1], output: vec![1, 0] }));
        assert!(!r.all_passed());
        let text = r.to_canonical_json();
        assert!(text.find("\"checks\"").unwrap() < text.find("\"command\"").unwrap());
        assert_eq!(text, r.clone().to_canonical_json());
        assert_eq!(r.to_value()["checks"]["iy"]["witness"]["input"], json!([0, 1]));
        assert_eq!(r.to_value()["pass"], json!(false));
    }
}
