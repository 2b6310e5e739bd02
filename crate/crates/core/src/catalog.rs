//! Named built-in weak braces and the machine-readable catalog report.

use serde_json::{json, Value};

use crate::brace::{is_two_sided, WeakBrace};
use crate::deform::{deformation_report, right_distributor};
use crate::error::{Error, Result};
use crate::io::{doc, expect_brace, int, resolve, StructureDoc};
use crate::ybe::{find_equivalence, PairMap};

fn b(name: &str, params: &[(&str, crate::io::Param)]) -> StructureDoc {
    StructureDoc::builder(name, params)
}

fn group(name: &str, key: &str, v: u64) -> StructureDoc {
    b(name, &[(key, int(v))])
}

/// The built-in examples, in catalog order.
pub fn builtins() -> Vec<(&'static str, StructureDoc)> {
    let s3 = group("symmetric", "n", 3);
    let u8 = b("sandwich_units", &[("m", int(8))]);
    let b6 = b("rump_mod", &[("n", int(6))]);
    vec![
        ("b6", b6.clone()),
        ("rump_mod_4", b("rump_mod", &[("n", int(4))])),
        ("rump_mod_8", b("rump_mod", &[("n", int(8))])),
        ("u8", u8.clone()),
        ("trivial_s3", b("trivial", &[("of", doc(s3.clone()))])),
        ("almost_trivial_s3", b("almost_trivial", &[("of", doc(s3))])),
        (
            "trivial_three_element",
            b("trivial", &[("of", doc(b("three_element_monoid", &[])))]),
        ),
        ("sandwich_chain_3", b("sandwich_chain", &[("k", int(3))])),
        (
            "u8_x_b6",
            b("brace_product", &[("left", doc(u8)), ("right", doc(b6))]),
        ),
        (
            "trivial_z2",
            b("trivial", &[("of", doc(group("cyclic", "n", 2)))]),
        ),
        ("cyclic_circ_4", b("cyclic_circ", &[("m", int(4))])),
        ("cyclic_circ_8", b("cyclic_circ", &[("m", int(8))])),
    ]
}

pub fn builtin(name: &str) -> Option<StructureDoc> {
    builtins()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, d)| d)
}

pub fn builtin_brace(name: &str) -> Result<WeakBrace> {
    let d = builtin(name).ok_or_else(|| Error::input(format!("no built-in named `{name}`")))?;
    expect_brace(resolve(&d)?)
}

/// Partition of the maps into equivalence classes, each listed by index.
///
/// Classes are formed greedily against the first member of each class, in
/// index order. Refuses with [`Error::Budget`] when the search would.
pub fn equivalence_partition(maps: &[PairMap], budget: u128) -> Result<Vec<Vec<usize>>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'next: for (i, r) in maps.iter().enumerate() {
        for class in classes.iter_mut() {
            if find_equivalence(&maps[class[0]], r, budget)?.is_some() {
                class.push(i);
                continue 'next;
            }
        }
        classes.push(vec![i]);
    }
    Ok(classes)
}

/// One catalog record: level, distributor, solution count and the
/// equivalence partition of the deformed maps (null when over budget).
pub fn catalog_record(name: &str, d: &StructureDoc, budget: u128) -> Result<Value> {
    let w = expect_brace(resolve(d)?)?;
    let rep = deformation_report(&w);
    let maps: Vec<PairMap> = rep.per_z.iter().map(|e| e.r_z.clone()).collect();
    let (partition, refused) = match equivalence_partition(&maps, budget) {
        Ok(p) => (json!(p), false),
        Err(Error::Budget { .. }) => (Value::Null, true),
        Err(e) => return Err(e),
    };
    let distributor = right_distributor(&w);
    Ok(json!({
        "name": name,
        "builder": d.to_value(),
        "n": w.size(),
        "level": w.level().as_str(),
        "two_sided": is_two_sided(&w),
        "distributor": distributor,
        "distributor_size": distributor.len(),
        "solution_count": rep.per_z.iter().filter(|e| e.is_solution).count(),
        "theorem_holds": rep.theorem_holds,
        "partition": partition,
        "budget_refused": refused,
    }))
}

/// Catalog of the named built-ins (`["all"]` selects every one).
pub fn catalog(names: &[String], budget: u128) -> Result<Value> {
    let all = builtins();
    let selected: Vec<(&str, StructureDoc)> = if names.iter().any(|n| n == "all") {
        all
    } else {
        names
            .iter()
            .map(|n| {
                all.iter()
                    .find(|(k, _)| k == n)
                    .cloned()
                    .ok_or_else(|| Error::input(format!("no built-in named `{n}`")))
            })
            .collect::<Result<_>>()?
    };
    let records = selected
        .iter()
        .map(|(n, d)| catalog_record(n, d, budget))
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({ "records": records }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ybe::DEFAULT_BUDGET;

    #[test]
    fn every_builtin_resolves() {
        for (name, _) in builtins() {
            let w = builtin_brace(name).unwrap();
            assert!(w.size() > 0, "{name}");
        }
    }

    #[test]
    fn trivial_three_element_partition() {
        let rec = catalog_record(
            "t3",
            &builtin("trivial_three_element").unwrap(),
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert_eq!(rec["distributor"], json!([0, 1, 2]));
        assert_eq!(rec["solution_count"], json!(3));
        // r_e is not equivalent to r_x
        let p = rec["partition"].as_array().unwrap();
        assert!(p.iter().all(|c| {
            let c = c.as_array().unwrap();
            !(c.contains(&json!(0)) && c.contains(&json!(1)))
        }));
    }

    #[test]
    fn large_carrier_is_refused_not_truncated() {
        let rec = catalog_record("u8_x_b6", &builtin("u8_x_b6").unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(rec["partition"], Value::Null);
        assert_eq!(rec["budget_refused"], json!(true));
    }

    #[test]
    fn catalog_is_deterministic() {
        let names = vec!["b6".to_string(), "u8".to_string()];
        let a = catalog(&names, DEFAULT_BUDGET).unwrap();
        let b = catalog(&names, DEFAULT_BUDGET).unwrap();
        assert_eq!(crate::io::render_value(&a), crate::io::render_value(&b));
        assert!(catalog(&["nope".to_string()], DEFAULT_BUDGET).is_err());
    }
}
