//! Browser bindings: inspect a weak brace, deform its canonical solution at a
//! chosen element, and compare two deformations up to equivalence.
//!
//! Each operation takes either a built-in name or a pasted JSON document and
//! returns a JSON string. The plain functions are what the wasm exports wrap.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;
use ybe_core::brace::{is_two_sided, WeakBrace};
use ybe_core::catalog::{builtin_brace, builtins};
use ybe_core::deform::{deformed_solution, in_right_distributor, right_distributor};
use ybe_core::io::{expect_brace, parse_structure};
use ybe_core::ybe::{check_braid, find_equivalence, properties, PairMap, DEFAULT_BUDGET};

fn load(source: &str) -> Result<WeakBrace, String> {
    let s = source.trim();
    let loaded = if s.starts_with('{') {
        parse_structure(s).and_then(expect_brace)
    } else {
        builtin_brace(s)
    };
    loaded.map_err(|e| e.to_string())
}

fn element(w: &WeakBrace, z: usize) -> Result<usize, String> {
    if z < w.size() {
        Ok(z)
    } else {
        Err(format!("element {z} is out of range 0..{}", w.size()))
    }
}

fn grid(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
}

fn summary(r: &PairMap) -> Value {
    let p = properties(r);
    json!({
        "braid": check_braid(r).holds,
        "bijective": p.bijective,
        "left_nondeg": p.left_nondeg,
        "right_nondeg": p.right_nondeg,
        "involutive": p.involutive,
    })
}

pub fn builtin_list() -> Value {
    let names: Vec<&str> = builtins().iter().map(|(n, _)| *n).collect();
    json!(names)
}

/// Level, tables, distributor and one row per deformation parameter.
pub fn inspect(source: &str) -> Result<Value, String> {
    let w = load(source)?;
    let n = w.size();
    let rows: Vec<Value> = (0..n)
        .map(|z| {
            let mut row = summary(&deformed_solution(&w, z));
            row["z"] = json!(z);
            row["label"] = json!(w.label(z));
            row["in_distributor"] = json!(in_right_distributor(&w, z));
            row
        })
        .collect();
    Ok(json!({
        "n": n,
        "level": w.level().as_str(),
        "two_sided": is_two_sided(&w),
        "labels": w.labels(),
        "add": grid(n, |a, b| w.add(a, b)),
        "mul": grid(n, |a, b| w.mul(a, b)),
        "distributor": right_distributor(&w),
        "rows": rows,
    }))
}

/// The deformed map at `z` as two tables, `sigma[a][b]` and `tau[a][b]`
/// (the second component of `r(a, b)`).
pub fn deform(source: &str, z: usize) -> Result<Value, String> {
    let w = load(source)?;
    let z = element(&w, z)?;
    let r = deformed_solution(&w, z);
    let n = w.size();
    Ok(json!({
        "z": z,
        "labels": w.labels(),
        "in_distributor": in_right_distributor(&w, z),
        "sigma": grid(n, |a, b| r.apply(a, b).0),
        "tau": grid(n, |a, b| r.apply(a, b).1),
        "summary": summary(&r),
    }))
}

/// Searches for a bijection intertwining the deformations at `z1` and `z2`.
pub fn compare(source: &str, z1: usize, z2: usize) -> Result<Value, String> {
    let w = load(source)?;
    let (z1, z2) = (element(&w, z1)?, element(&w, z2)?);
    let r = deformed_solution(&w, z1);
    let s = deformed_solution(&w, z2);
    let found = find_equivalence(&r, &s, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    Ok(json!({
        "equivalent": found.is_some(),
        "witness": found.map(|phi| phi.iter().map(|&i| w.label(i)).collect::<Vec<_>>()),
    }))
}

fn export(v: Result<Value, String>) -> Result<String, JsError> {
    v.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = builtinNames)]
pub fn builtin_names_js() -> String {
    builtin_list().to_string()
}

#[wasm_bindgen(js_name = inspect)]
pub fn inspect_js(source: &str) -> Result<String, JsError> {
    export(inspect(source))
}

#[wasm_bindgen(js_name = deform)]
pub fn deform_js(source: &str, z: usize) -> Result<String, JsError> {
    export(deform(source, z))
}

#[wasm_bindgen(js_name = compare)]
pub fn compare_js(source: &str, z1: usize, z2: usize) -> Result<String, JsError> {
    export(compare(source, z1, z2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_names_are_listed() {
        let v = builtin_list();
        assert!(v.as_array().unwrap().contains(&json!("b6")));
    }

    #[test]
    fn bad_sources_are_reported() {
        assert!(load("no_such_thing").is_err());
        assert!(load("{\"kind\":").is_err());
        assert!(deform("b6", 99).unwrap_err().contains("out of range"));
    }
}
