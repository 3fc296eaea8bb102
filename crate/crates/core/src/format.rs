//! JSON documents for semirings, semimodules, maps, sequences and matrix
//! generator lists.
//!
//! A semiring is either explicit tables, a named family such as
//! `{"family": "bni", "n": 4, "i": 2}`, or the bare `{"n": 4, "i": 2}`.
//! A semimodule has a `scalars` semiring plus either tables or
//! `{"kind": "regular" | "zero" | "power", "n": k}`. A map has `source`,
//! `target` and `table`; a sequence is `{"maps": [...]}` or a bare array of
//! maps; generators are `{"gens": [...]}` or a bare array of matrices.
//!
//! Errors name the JSON path of the offending value.

use std::path::Path;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde_json::{json, Map, Value};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::morphism::LinearMap;
use crate::semimodule::{FiniteSemimodule, ModuleTables};
use crate::semiring::{build_bni, build_named_with_caps, Family, FiniteSemiring, SemiringTables};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Semiring(Arc<FiniteSemiring>),
    Module(Arc<FiniteSemimodule>),
    Map(LinearMap),
    Sequence(Vec<LinearMap>),
    Generators(Vec<Mat2>),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Semiring(_) => "semiring",
            Document::Module(_) => "module",
            Document::Map(_) => "map",
            Document::Sequence(_) => "sequence",
            Document::Generators(_) => "generators",
        }
    }
}

fn typed<T: DeserializeOwned>(v: &Value, path: &str) -> Result<T> {
    serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::Parse(format!("{path}: expected an object")))
}

fn field<'a>(o: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    o.get(key)
        .ok_or_else(|| Error::Parse(format!("{path}: missing field `{key}`")))
}

fn context(e: Error, path: &str) -> Error {
    match e {
        Error::Structural(m) => Error::Structural(format!("{path}: {m}")),
        Error::Parameter(m) => Error::Parameter(format!("{path}: {m}")),
        Error::Precondition(m) => Error::Precondition(format!("{path}: {m}")),
        other => other,
    }
}

pub fn semiring_from_value(v: &Value, path: &str, caps: &Caps) -> Result<Arc<FiniteSemiring>> {
    let o = object(v, path)?;
    let s = if o.contains_key("family") {
        let f: Family = typed(v, path)?;
        build_named_with_caps(&f, caps)
    } else if o.contains_key("add") || o.contains_key("mul") {
        let t: SemiringTables = typed(v, path)?;
        if t.size > caps.semiring_size {
            return Err(Error::Resource {
                what: format!("{path}: semiring size"),
                needed: t.size as u128,
                cap: caps.semiring_size as u128,
            });
        }
        FiniteSemiring::from_tables(t)
    } else if o.len() == 2 && o.contains_key("n") && o.contains_key("i") {
        let (n, i): (usize, usize) = (typed(&o["n"], &format!("{path}.n"))?, typed(&o["i"], &format!("{path}.i"))?);
        build_bni(n, i)
    } else {
        return Err(Error::Parse(format!(
            "{path}: not a semiring (expected tables, `family`, or `n` and `i`)"
        )));
    };
    s.map(Arc::new).map_err(|e| context(e, path))
}

pub fn module_from_value(v: &Value, path: &str, caps: &Caps) -> Result<Arc<FiniteSemimodule>> {
    let o = object(v, path)?;
    let scalars = semiring_from_value(field(o, "scalars", path)?, &format!("{path}.scalars"), caps)?;
    let m = if let Some(kind) = o.get("kind") {
        let kind: String = typed(kind, &format!("{path}.kind"))?;
        match kind.as_str() {
            "regular" => Ok(FiniteSemimodule::regular(scalars)),
            "zero" => Ok(FiniteSemimodule::zero_module(scalars)),
            "power" => {
                let n: usize = typed(field(o, "n", path)?, &format!("{path}.n"))?;
                FiniteSemimodule::power(scalars, n, caps)
            }
            other => {
                return Err(Error::Parse(format!(
                    "{path}.kind: unknown module kind {other:?} (expected regular, zero or power)"
                )))
            }
        }
    } else {
        let mut rest = o.clone();
        rest.remove("scalars");
        let t: ModuleTables = typed(&Value::Object(rest), path)?;
        if t.size > caps.module_size {
            return Err(Error::Resource {
                what: format!("{path}: module size"),
                needed: t.size as u128,
                cap: caps.module_size as u128,
            });
        }
        FiniteSemimodule::from_tables(scalars, t)
    };
    m.map(Arc::new).map_err(|e| context(e, path))
}

pub fn map_from_value(v: &Value, path: &str, caps: &Caps) -> Result<LinearMap> {
    let o = object(v, path)?;
    let source = module_from_value(field(o, "source", path)?, &format!("{path}.source"), caps)?;
    let target = module_from_value(field(o, "target", path)?, &format!("{path}.target"), caps)?;
    let table: Vec<usize> = typed(field(o, "table", path)?, &format!("{path}.table"))?;
    LinearMap::new(source, target, table).map_err(|e| context(e, path))
}

fn sequence_from_value(items: &[Value], path: &str, caps: &Caps) -> Result<Vec<LinearMap>> {
    items
        .iter()
        .enumerate()
        .map(|(i, v)| map_from_value(v, &format!("{path}[{i}]"), caps))
        .collect()
}

fn generators_from_value(items: &[Value], path: &str) -> Result<Vec<Mat2>> {
    items
        .iter()
        .enumerate()
        .map(|(i, v)| typed(v, &format!("{path}[{i}]")))
        .collect()
}

/// Parses any document, dispatching on its shape.
pub fn load_str(text: &str, caps: &Caps) -> Result<Document> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let path = "$";
    if let Some(items) = v.as_array() {
        let looks_like_matrix = items.first().and_then(Value::as_object).is_some_and(|o| o.contains_key("a"));
        return if looks_like_matrix {
            generators_from_value(items, path).map(Document::Generators)
        } else {
            sequence_from_value(items, path, caps).map(Document::Sequence)
        };
    }
    let o = object(&v, path)?;
    if let Some(maps) = o.get("maps") {
        let items = maps
            .as_array()
            .ok_or_else(|| Error::Parse("$.maps: expected an array".into()))?;
        return sequence_from_value(items, "$.maps", caps).map(Document::Sequence);
    }
    if let Some(gens) = o.get("gens") {
        let items = gens
            .as_array()
            .ok_or_else(|| Error::Parse("$.gens: expected an array".into()))?;
        return generators_from_value(items, "$.gens").map(Document::Generators);
    }
    if o.contains_key("table") {
        return map_from_value(&v, path, caps).map(Document::Map);
    }
    if o.contains_key("scalars") {
        return module_from_value(&v, path, caps).map(Document::Module);
    }
    semiring_from_value(&v, path, caps).map(Document::Semiring)
}

pub fn load_path(path: &Path, caps: &Caps) -> Result<Document> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    load_str(&text, caps).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn semiring_to_value(s: &FiniteSemiring) -> Value {
    serde_json::to_value(s.to_tables()).expect("tables serialize")
}

pub fn module_to_value(m: &FiniteSemimodule) -> Value {
    let mut v = serde_json::to_value(m.to_tables()).expect("tables serialize");
    v.as_object_mut()
        .expect("tables are an object")
        .insert("scalars".into(), semiring_to_value(m.scalars()));
    v
}

pub fn map_to_value(f: &LinearMap) -> Value {
    json!({
        "source": module_to_value(f.source()),
        "target": module_to_value(f.target()),
        "table": f.table(),
    })
}

pub fn to_value(doc: &Document) -> Value {
    match doc {
        Document::Semiring(s) => semiring_to_value(s),
        Document::Module(m) => module_to_value(m),
        Document::Map(f) => map_to_value(f),
        Document::Sequence(maps) => json!({ "maps": maps.iter().map(map_to_value).collect::<Vec<_>>() }),
        Document::Generators(gens) => json!({ "gens": gens }),
    }
}

/// Pretty-printed JSON that [`load_str`] reads back to an equal document.
pub fn save_string(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(&to_value(doc)).expect("values serialize");
    s.push('\n');
    s
}
