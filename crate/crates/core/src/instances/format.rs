//! The JSON instance file format.
//!
//! An instance file is either a named family,
//!
//! ```json
//! { "family": "example_3_1", "m": 2 }
//! ```
//!
//! or a full description:
//!
//! ```json
//! {
//!   "n": 4,
//!   "tuple": [1, 2],
//!   "weights": [1, 1, 2, 2],
//!   "system": { "kind": "generators", "points": ["1100", "0011"] },
//!   "objective": { "kind": "table", "values": [4, 1, 4, 3, 4] }
//! }
//! ```
//!
//! Points are strings of `0`/`1` with the leftmost character first.
//! `system.kind` is `"explicit"` (closed downward on load, unless
//! `"strict": true`) or `"generators"`. `objective` is either a table of
//! `f(0), f(1), ...` or `{ "kind": "named", "name": <family>, "m": <int> }`
//! to reuse a family's objective. An optional `"name"` labels the instance.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::families::FamilyName;
use super::{GroundPoint, IndependenceSystem, Instance, ObjectiveTable, WeightVector};
use crate::error::{Error, Result};
use crate::monoid::PrimitiveTuple;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SystemKind {
    Explicit,
    Generators,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystemSpec {
    pub kind: SystemKind,
    pub points: Vec<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub strict: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ObjectiveSpec {
    Table { values: Vec<f64> },
    Named { name: FamilyName, m: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    pub tuple: Vec<u64>,
    pub weights: Vec<u64>,
    pub system: SystemSpec,
    pub objective: ObjectiveSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: FamilyName,
    pub m: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InstanceFile {
    Family(FamilySpec),
    Inline(InstanceSpec),
}

fn format_err(field: impl Into<String>, message: impl ToString) -> Error {
    Error::Format { field: field.into(), message: message.to_string() }
}

fn field<T: DeserializeOwned>(obj: &Map<String, Value>, name: &str) -> Result<T> {
    let value = obj.get(name).ok_or_else(|| format_err(name, "missing field"))?;
    serde_json::from_value(value.clone()).map_err(|e| format_err(name, e))
}

const INLINE_FIELDS: [&str; 6] = ["name", "n", "tuple", "weights", "system", "objective"];

/// Parses an instance file, naming the offending field on failure.
pub fn parse_instance_file(text: &str) -> Result<InstanceFile> {
    let value: Value = serde_json::from_str(text).map_err(|e| format_err("instance", e))?;
    let obj = value.as_object().ok_or_else(|| format_err("instance", "expected a JSON object"))?;
    if obj.contains_key("family") {
        for key in obj.keys() {
            if key != "family" && key != "m" {
                return Err(format_err(key.as_str(), "unexpected field next to `family`"));
            }
        }
        return Ok(InstanceFile::Family(FamilySpec { family: field(obj, "family")?, m: field(obj, "m")? }));
    }
    for key in obj.keys() {
        if !INLINE_FIELDS.contains(&key.as_str()) {
            return Err(format_err(key.as_str(), "unknown field"));
        }
    }
    Ok(InstanceFile::Inline(InstanceSpec {
        name: obj.get("name").map(|_| field(obj, "name")).transpose()?,
        n: field(obj, "n")?,
        tuple: field(obj, "tuple")?,
        weights: field(obj, "weights")?,
        system: field(obj, "system")?,
        objective: field(obj, "objective")?,
    }))
}

impl InstanceFile {
    pub fn build(&self) -> Result<Instance> {
        match self {
            InstanceFile::Family(spec) => spec.family.instance(spec.m),
            InstanceFile::Inline(spec) => spec.build(),
        }
    }
}

impl InstanceSpec {
    pub fn build(&self) -> Result<Instance> {
        let n = self.n;
        let tuple = PrimitiveTuple::new(self.tuple.clone()).map_err(|e| format_err("tuple", e))?;
        if self.weights.len() != n {
            return Err(format_err("weights", format!("has {} entries but n = {n}", self.weights.len())));
        }
        let weights = WeightVector::new(self.weights.clone(), tuple).map_err(|e| format_err("weights", e))?;
        let points = self
            .system
            .points
            .iter()
            .enumerate()
            .map(|(k, s)| {
                let p = GroundPoint::parse(s).map_err(|e| format_err(format!("system.points[{k}]"), e))?;
                if p.len() != n {
                    return Err(format_err(format!("system.points[{k}]"), format!("has length {} but n = {n}", p.len())));
                }
                Ok(p)
            })
            .collect::<Result<Vec<_>>>()?;
        let system = match (self.system.kind, self.system.strict) {
            (SystemKind::Explicit, false) => IndependenceSystem::explicit(n, points),
            (SystemKind::Explicit, true) => IndependenceSystem::explicit_strict(n, points),
            (SystemKind::Generators, _) => IndependenceSystem::generators(n, points),
        }
        .map_err(|e| format_err("system", e))?;
        let objective = match &self.objective {
            ObjectiveSpec::Table { values } => ObjectiveTable::new(values.clone()),
            ObjectiveSpec::Named { name, m } => name.objective(*m),
        }
        .map_err(|e| format_err("objective", e))?;
        let name = self.name.clone().unwrap_or_else(|| "instance".to_string());
        Instance::new(name, system, weights, objective).map_err(|e| match e {
            Error::TableTooShort { .. } => format_err("objective", e),
            other => other,
        })
    }

    /// Describes an instance, keeping its representation.
    pub fn from_instance(instance: &Instance) -> Self {
        let system = &instance.system;
        InstanceSpec {
            name: Some(instance.name.clone()),
            n: instance.n(),
            tuple: instance.tuple().entries().to_vec(),
            weights: instance.weights.weights().to_vec(),
            system: SystemSpec {
                kind: if system.is_explicit() { SystemKind::Explicit } else { SystemKind::Generators },
                points: system.listed_points().iter().map(GroundPoint::to_bitstring).collect(),
                strict: false,
            },
            objective: ObjectiveSpec::Table { values: instance.objective.values().to_vec() },
        }
    }
}

/// Loads an instance from file contents.
pub fn load_instance(text: &str) -> Result<Instance> {
    parse_instance_file(text)?.build()
}

/// Serializes an instance as a full (inline) description.
pub fn write_instance(instance: &Instance) -> String {
    serde_json::to_string_pretty(&InstanceSpec::from_instance(instance)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::families::example_3_1;

    const EXAMPLE: &str = r#"{
        "n": 4,
        "tuple": [1, 2],
        "weights": [1, 1, 2, 2],
        "system": { "kind": "generators", "points": ["1100", "0011"] },
        "objective": { "kind": "named", "name": "example_3_1", "m": 1 }
    }"#;

    #[test]
    fn inline_matches_family() {
        let inline = load_instance(EXAMPLE).unwrap();
        let family = load_instance(r#"{"family": "example_3_1", "m": 1}"#).unwrap();
        assert_eq!(inline.image().unwrap(), family.image().unwrap());
        assert_eq!(inline.objective, family.objective);
        assert_eq!(inline.system, family.system);
    }

    #[test]
    fn round_trip() {
        let inst = example_3_1(2).unwrap();
        let back = load_instance(&write_instance(&inst)).unwrap();
        assert_eq!(back, inst);
        let explicit = inst.with_system(inst.system.to_explicit().unwrap()).unwrap();
        let back = load_instance(&write_instance(&explicit)).unwrap();
        assert_eq!(back.image().unwrap(), inst.image().unwrap());
    }

    fn failing_field(text: &str) -> String {
        match load_instance(text) {
            Err(Error::Format { field, .. }) => field,
            other => panic!("expected a format error, got {other:?}"),
        }
    }

    #[test]
    fn diagnostics_name_the_field() {
        assert_eq!(failing_field(&EXAMPLE.replace("[1, 1, 2, 2]", "[1, 1, 2]")), "weights");
        assert_eq!(failing_field(&EXAMPLE.replace("[1, 1, 2, 2]", "[1, 1, 2, 3]")), "weights");
        assert_eq!(failing_field(&EXAMPLE.replace("[1, 2]", "[2, 4]")), "tuple");
        assert_eq!(failing_field(&EXAMPLE.replace("\"0011\"", "\"0021\"")), "system.points[1]");
        assert_eq!(failing_field(&EXAMPLE.replace("\"0011\"", "\"001\"")), "system.points[1]");
        assert_eq!(failing_field(&EXAMPLE.replace("\"n\": 4,", "")), "n");
        assert_eq!(failing_field(&EXAMPLE.replace("\"named\"", "\"lookup\"")), "objective");
        assert_eq!(failing_field(&EXAMPLE.replace("\"kind\": \"generators\"", "\"kind\": \"cloud\"")), "system");
        assert_eq!(failing_field(r#"{"family": "example_3_1", "m": 2, "extra": 1}"#), "extra");
        assert_eq!(failing_field("[1, 2]"), "instance");
        let short = EXAMPLE.replace(
            r#"{ "kind": "named", "name": "example_3_1", "m": 1 }"#,
            r#"{ "kind": "table", "values": [0, 1] }"#,
        );
        assert_eq!(failing_field(&short), "objective");
    }

    #[test]
    fn strict_explicit_rejects_unclosed() {
        let text = r#"{
            "n": 2, "tuple": [1], "weights": [1, 1],
            "system": { "kind": "explicit", "points": ["00", "11"], "strict": true },
            "objective": { "kind": "table", "values": [0, 1, 2] }
        }"#;
        assert_eq!(failing_field(text), "system");
        let lenient = text.replace("\"strict\": true", "\"strict\": false");
        assert_eq!(load_instance(&lenient).unwrap().system.enumerate().unwrap().len(), 4);
    }
}
