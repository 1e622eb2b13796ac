//! The shipped JSON schema must stay in lock-step with the report
//! serialization: every geometry exercised by the table harness validates.

use std::path::Path;

use serde_json::Value;

use pargap_core::{golden_all, run_query, LieType};

fn load_schema() -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn resolve<'a>(root: &'a Value, node: &'a Value) -> &'a Value {
    match node.get("$ref").and_then(Value::as_str) {
        Some(r) => {
            let mut cur = root;
            for seg in r.trim_start_matches("#/").split('/') {
                cur = cur.get(seg).unwrap_or(&Value::Null);
            }
            cur
        }
        None => node,
    }
}

fn type_name(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "boolean",
        Value::Number(n) if n.is_i64() || n.is_u64() => "integer",
        Value::Number(_) => "number",
        Value::String(_) => "string",
        Value::Array(_) => "array",
        Value::Object(_) => "object",
    }
}

fn validate(root: &Value, schema: &Value, value: &Value, path: &str, errors: &mut Vec<String>) {
    let node = resolve(root, schema);
    if let Some(ty) = node.get("type") {
        let allowed: Vec<&str> = match ty {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(Value::as_str).collect(),
            _ => vec![],
        };
        let actual = type_name(value);
        let ok = allowed.contains(&actual)
            || (actual == "integer" && allowed.contains(&"number"));
        if !ok {
            errors.push(format!("{path}: type {actual} not in {allowed:?}"));
            return;
        }
    }
    if let (Some(min), Some(n)) = (node.get("minimum").and_then(Value::as_i64), value.as_i64()) {
        if n < min {
            errors.push(format!("{path}: {n} below minimum {min}"));
        }
    }
    if let Some(obj) = value.as_object() {
        if let Some(required) = node.get("required").and_then(Value::as_array) {
            for req in required.iter().filter_map(Value::as_str) {
                if !obj.contains_key(req) {
                    errors.push(format!("{path}: missing required key {req:?}"));
                }
            }
        }
        let props = node.get("properties").and_then(Value::as_object);
        let closed = node.get("additionalProperties") == Some(&Value::Bool(false));
        for (key, val) in obj {
            match props.and_then(|p| p.get(key)) {
                Some(sub) => validate(root, sub, val, &format!("{path}.{key}"), errors),
                None if closed => {
                    errors.push(format!("{path}: unexpected key {key:?}"));
                }
                None => {}
            }
        }
    }
    if let Some(arr) = value.as_array() {
        if let Some(min) = node.get("minItems").and_then(Value::as_u64) {
            if (arr.len() as u64) < min {
                errors.push(format!("{path}: fewer than {min} items"));
            }
        }
        if let Some(max) = node.get("maxItems").and_then(Value::as_u64) {
            if (arr.len() as u64) > max {
                errors.push(format!("{path}: more than {max} items"));
            }
        }
        if let Some(items) = node.get("items") {
            for (i, val) in arr.iter().enumerate() {
                validate(root, items, val, &format!("{path}[{i}]"), errors);
            }
        }
    }
}

fn assert_valid(schema: &Value, doc: &Value, label: &str) {
    let mut errors = Vec::new();
    validate(schema, schema, doc, "$", &mut errors);
    assert!(errors.is_empty(), "{label}: {errors:#?}");
}

#[test]
fn every_table_geometry_validates_against_the_schema() {
    let schema = load_schema();
    let mut seen = std::collections::BTreeSet::new();
    for row in golden_all(8) {
        if !seen.insert((row.lie_type, row.crossed.clone())) {
            continue;
        }
        let outcome = run_query(row.lie_type, &row.crossed, false).unwrap();
        let doc = serde_json::to_value(&outcome).unwrap();
        assert_valid(&schema, &doc, &format!("{}/{:?}", row.lie_type, row.crossed));
    }
    assert!(seen.len() > 250, "harness exercised only {} geometries", seen.len());
}

#[test]
fn relabelled_and_rigid_queries_validate_too() {
    let schema = load_schema();
    for (t, crossed) in [("B2", vec![1]), ("D3", vec![1]), ("A1", vec![1]), ("A7", vec![1, 2, 3, 4, 5, 6, 7])] {
        let outcome = run_query(LieType::parse(t).unwrap(), &crossed, false).unwrap();
        let doc = serde_json::to_value(&outcome).unwrap();
        assert_valid(&schema, &doc, t);
    }
}

#[test]
fn schema_rejects_malformed_documents() {
    let schema = load_schema();
    let good = run_query(LieType::parse("G2").unwrap(), &[1], false).unwrap();
    let mut doc = serde_json::to_value(&good).unwrap();
    doc["branches"][0]["word"] = serde_json::json!([1]);
    doc["extra"] = serde_json::json!(1);
    doc.as_object_mut().unwrap().remove("rigid");
    let mut errors = Vec::new();
    validate(&schema, &schema, &doc, "$", &mut errors);
    assert!(errors.iter().any(|e| e.contains("fewer than 2")), "{errors:?}");
    assert!(errors.iter().any(|e| e.contains("unexpected key")), "{errors:?}");
    assert!(errors.iter().any(|e| e.contains("missing required key")), "{errors:?}");
}
