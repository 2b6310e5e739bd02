//! Canonical JSON documents for every structure kind, and the builder registry.
//!
//! A document is an object with `kind`, `n`, `payload` and optional `labels`:
//!
//! | kind         | payload                                              |
//! |--------------|------------------------------------------------------|
//! | `table`      | `n x n` array                                        |
//! | `heap`       | `n` arrays of `n x n`                                |
//! | `weak_brace` | `{"add": table, "mul": table}`                       |
//! | `near_truss` | `{"heap": ternary, "mul": table, "unit": k or null}` |
//! | `pair_map`   | `{"sigma": table, "tau": table}`                     |
//! | `retraction` | `{"truss": doc, "brace": doc, "pi": [..], "gamma": [..]}` |
//!
//! Builder documents are `{"kind": "builder", "name": .., "params": {..}}`,
//! where a parameter is an integer or a nested document.
//!
//! Rendering is canonical: sorted keys, no insignificant whitespace, one
//! trailing LF.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::brace::{build_brace, verify_weak_brace, BraceKind, Level, WeakBrace};
use crate::deform::{check_map, deformed_solution};
use crate::error::{Error, Result};
use crate::table::{build_group, chain_semilattice, three_element_monoid, CayleyTable, GroupKind};
use crate::truss::{
    build_retraction, heap_of_group, identity_retraction, near_truss_solution, product_near_truss,
    semidirect_retraction, trivial_retraction, truss_of_brace, truss_of_ring_mod, verify_heap,
    verify_near_truss, Heap, NearTruss, Retraction,
};
use crate::ybe::{canonical_solution, PairMap};

type Table = Vec<Vec<usize>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureDoc {
    Table {
        payload: Table,
        labels: Option<Vec<String>>,
    },
    Heap {
        payload: Vec<Table>,
        labels: Option<Vec<String>>,
    },
    WeakBrace {
        add: Table,
        mul: Table,
        labels: Option<Vec<String>>,
    },
    NearTruss {
        heap: Vec<Table>,
        mul: Table,
        unit: Option<usize>,
        labels: Option<Vec<String>>,
    },
    PairMap {
        sigma: Table,
        tau: Table,
        labels: Option<Vec<String>>,
    },
    Retraction {
        truss: Box<StructureDoc>,
        brace: Box<StructureDoc>,
        pi: Vec<usize>,
        gamma: Vec<usize>,
    },
    Builder {
        name: String,
        params: BTreeMap<String, Param>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Param {
    Int(u64),
    Doc(Box<StructureDoc>),
}

/// A resolved, verified structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Table(CayleyTable),
    Heap(Heap),
    WeakBrace(WeakBrace),
    NearTruss(NearTruss),
    PairMap(PairMap),
    Retraction(Retraction),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Table(_) => "table",
            Structure::Heap(_) => "heap",
            Structure::WeakBrace(_) => "weak_brace",
            Structure::NearTruss(_) => "near_truss",
            Structure::PairMap(_) => "pair_map",
            Structure::Retraction(_) => "retraction",
        }
    }
}

impl StructureDoc {
    pub fn kind(&self) -> &'static str {
        match self {
            StructureDoc::Table { .. } => "table",
            StructureDoc::Heap { .. } => "heap",
            StructureDoc::WeakBrace { .. } => "weak_brace",
            StructureDoc::NearTruss { .. } => "near_truss",
            StructureDoc::PairMap { .. } => "pair_map",
            StructureDoc::Retraction { .. } => "retraction",
            StructureDoc::Builder { .. } => "builder",
        }
    }

    pub fn builder(name: &str, params: &[(&str, Param)]) -> StructureDoc {
        StructureDoc::Builder {
            name: name.to_string(),
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
        }
    }

    fn size(&self) -> Option<usize> {
        match self {
            StructureDoc::Table { payload, .. } => Some(payload.len()),
            StructureDoc::Heap { payload, .. } => Some(payload.len()),
            StructureDoc::WeakBrace { add, .. } => Some(add.len()),
            StructureDoc::NearTruss { heap, .. } => Some(heap.len()),
            StructureDoc::PairMap { sigma, .. } => Some(sigma.len()),
            StructureDoc::Retraction { pi, .. } => Some(pi.len()),
            StructureDoc::Builder { .. } => None,
        }
    }

    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("kind".into(), json!(self.kind()));
        if let Some(n) = self.size() {
            m.insert("n".into(), json!(n));
        }
        let labels = match self {
            StructureDoc::Table { labels, .. }
            | StructureDoc::Heap { labels, .. }
            | StructureDoc::WeakBrace { labels, .. }
            | StructureDoc::NearTruss { labels, .. }
            | StructureDoc::PairMap { labels, .. } => labels.clone(),
            _ => None,
        };
        if let Some(l) = labels {
            m.insert("labels".into(), json!(l));
        }
        match self {
            StructureDoc::Table { payload, .. } => {
                m.insert("payload".into(), json!(payload));
            }
            StructureDoc::Heap { payload, .. } => {
                m.insert("payload".into(), json!(payload));
            }
            StructureDoc::WeakBrace { add, mul, .. } => {
                m.insert("payload".into(), json!({ "add": add, "mul": mul }));
            }
            StructureDoc::NearTruss {
                heap, mul, unit, ..
            } => {
                m.insert(
                    "payload".into(),
                    json!({ "heap": heap, "mul": mul, "unit": unit }),
                );
            }
            StructureDoc::PairMap { sigma, tau, .. } => {
                m.insert("payload".into(), json!({ "sigma": sigma, "tau": tau }));
            }
            StructureDoc::Retraction {
                truss,
                brace,
                pi,
                gamma,
            } => {
                m.insert(
                    "payload".into(),
                    json!({
                        "truss": truss.to_value(),
                        "brace": brace.to_value(),
                        "pi": pi,
                        "gamma": gamma,
                    }),
                );
            }
            StructureDoc::Builder { name, params } => {
                m.insert("name".into(), json!(name));
                let p: Map<String, Value> = params
                    .iter()
                    .map(|(k, v)| {
                        let v = match v {
                            Param::Int(i) => json!(i),
                            Param::Doc(d) => d.to_value(),
                        };
                        (k.clone(), v)
                    })
                    .collect();
                m.insert("params".into(), Value::Object(p));
            }
        }
        Value::Object(m)
    }
}

/// Canonical text of a JSON value: sorted keys, compact, trailing LF.
pub fn render_value(v: &Value) -> String {
    // serde_json's map is ordered by key unless `preserve_order` is enabled
    let mut s = serde_json::to_string(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn render(doc: &StructureDoc) -> String {
    render_value(&doc.to_value())
}

pub fn parse(text: &str) -> Result<StructureDoc> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        path: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    parse_value(&v, "")
}

fn perr(path: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        path: if path.is_empty() {
            "$".into()
        } else {
            path.to_string()
        },
        message: message.into(),
    }
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn obj<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| perr(path, "expected an object"))
}

fn field<'a>(m: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    m.get(key)
        .ok_or_else(|| perr(&join(path, key), "missing field"))
}

fn only_keys(m: &Map<String, Value>, allowed: &[&str], path: &str) -> Result<()> {
    match m.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(perr(&join(path, k), "unknown field")),
        None => Ok(()),
    }
}

fn uint(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| perr(path, "expected a non-negative integer"))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| perr(path, "expected an array"))
}

fn index_list(v: &Value, len: usize, bound: usize, path: &str) -> Result<Vec<usize>> {
    let a = array(v, path)?;
    if a.len() != len {
        return Err(perr(
            path,
            format!("expected {len} entries, got {}", a.len()),
        ));
    }
    a.iter()
        .enumerate()
        .map(|(i, x)| {
            let p = format!("{path}[{i}]");
            let k = uint(x, &p)?;
            if k >= bound {
                return Err(perr(&p, format!("entry {k} out of range for size {bound}")));
            }
            Ok(k)
        })
        .collect()
}

fn table(v: &Value, n: usize, path: &str) -> Result<Table> {
    let rows = array(v, path)?;
    if rows.len() != n {
        return Err(perr(path, format!("expected {n} rows, got {}", rows.len())));
    }
    rows.iter()
        .enumerate()
        .map(|(i, r)| index_list(r, n, n, &format!("{path}[{i}]")))
        .collect()
}

fn ternary(v: &Value, n: usize, path: &str) -> Result<Vec<Table>> {
    let planes = array(v, path)?;
    if planes.len() != n {
        return Err(perr(
            path,
            format!("expected {n} planes, got {}", planes.len()),
        ));
    }
    planes
        .iter()
        .enumerate()
        .map(|(i, p)| table(p, n, &format!("{path}[{i}]")))
        .collect()
}

fn labels(m: &Map<String, Value>, n: usize, path: &str) -> Result<Option<Vec<String>>> {
    let Some(v) = m.get("labels") else {
        return Ok(None);
    };
    let p = join(path, "labels");
    let a = array(v, &p)?;
    if a.len() != n {
        return Err(perr(&p, format!("expected {n} labels, got {}", a.len())));
    }
    let l: Vec<String> = a
        .iter()
        .enumerate()
        .map(|(i, x)| {
            x.as_str()
                .map(str::to_string)
                .ok_or_else(|| perr(&format!("{p}[{i}]"), "expected a string"))
        })
        .collect::<Result<_>>()?;
    let mut sorted = l.clone();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(perr(&p, "labels must be distinct"));
    }
    Ok(Some(l))
}

fn parse_value(v: &Value, path: &str) -> Result<StructureDoc> {
    let m = obj(v, path)?;
    let kind_path = join(path, "kind");
    let kind = field(m, "kind", path)?
        .as_str()
        .ok_or_else(|| perr(&kind_path, "expected a string"))?;
    if kind == "builder" {
        only_keys(m, &["kind", "name", "params"], path)?;
        let name_path = join(path, "name");
        let name = field(m, "name", path)?
            .as_str()
            .ok_or_else(|| perr(&name_path, "expected a string"))?;
        if !BUILDERS.iter().any(|b| b.name == name) {
            return Err(perr(&name_path, format!("unknown builder `{name}`")));
        }
        let params_path = join(path, "params");
        let mut params = BTreeMap::new();
        if let Some(p) = m.get("params") {
            for (k, x) in obj(p, &params_path)? {
                let kp = join(&params_path, k);
                let param = if x.is_object() {
                    Param::Doc(Box::new(parse_value(x, &kp)?))
                } else {
                    Param::Int(
                        x.as_u64()
                            .ok_or_else(|| perr(&kp, "expected an integer or a document"))?,
                    )
                };
                params.insert(k.clone(), param);
            }
        }
        return Ok(StructureDoc::Builder {
            name: name.to_string(),
            params,
        });
    }
    only_keys(m, &["kind", "n", "payload", "labels"], path)?;
    let n_path = join(path, "n");
    let n = uint(field(m, "n", path)?, &n_path)?;
    if n == 0 {
        return Err(perr(&n_path, "size must be positive"));
    }
    let pp = join(path, "payload");
    let payload = field(m, "payload", path)?;
    let sub = |key: &str| -> Result<(&Value, String)> {
        let o = obj(payload, &pp)?;
        Ok((field(o, key, &pp)?, join(&pp, key)))
    };
    let keys = |allowed: &[&str]| only_keys(obj(payload, &pp)?, allowed, &pp);
    let doc = match kind {
        "table" => StructureDoc::Table {
            payload: table(payload, n, &pp)?,
            labels: labels(m, n, path)?,
        },
        "heap" => StructureDoc::Heap {
            payload: ternary(payload, n, &pp)?,
            labels: labels(m, n, path)?,
        },
        "weak_brace" => {
            keys(&["add", "mul"])?;
            let (a, ap) = sub("add")?;
            let (b, bp) = sub("mul")?;
            StructureDoc::WeakBrace {
                add: table(a, n, &ap)?,
                mul: table(b, n, &bp)?,
                labels: labels(m, n, path)?,
            }
        }
        "near_truss" => {
            keys(&["heap", "mul", "unit"])?;
            let (h, hp) = sub("heap")?;
            let (b, bp) = sub("mul")?;
            let up = join(&pp, "unit");
            let unit = match obj(payload, &pp)?.get("unit") {
                None | Some(Value::Null) => None,
                Some(u) => {
                    let k = uint(u, &up)?;
                    if k >= n {
                        return Err(perr(&up, format!("entry {k} out of range for size {n}")));
                    }
                    Some(k)
                }
            };
            StructureDoc::NearTruss {
                heap: ternary(h, n, &hp)?,
                mul: table(b, n, &bp)?,
                unit,
                labels: labels(m, n, path)?,
            }
        }
        "pair_map" => {
            keys(&["sigma", "tau"])?;
            let (s, sp) = sub("sigma")?;
            let (t, tp) = sub("tau")?;
            StructureDoc::PairMap {
                sigma: table(s, n, &sp)?,
                tau: table(t, n, &tp)?,
                labels: labels(m, n, path)?,
            }
        }
        "retraction" => {
            keys(&["truss", "brace", "pi", "gamma"])?;
            if m.contains_key("labels") {
                return Err(perr(
                    &join(path, "labels"),
                    "retractions carry labels on their parts",
                ));
            }
            let (t, tp) = sub("truss")?;
            let (b, bp) = sub("brace")?;
            let truss = parse_value(t, &tp)?;
            let brace = parse_value(b, &bp)?;
            let nb = brace
                .size()
                .ok_or_else(|| perr(&bp, "expected an explicit structure"))?;
            if truss.size() != Some(n) {
                return Err(perr(&tp, format!("expected a structure of size {n}")));
            }
            let (p, pip) = sub("pi")?;
            let (g, gp) = sub("gamma")?;
            StructureDoc::Retraction {
                pi: index_list(p, n, nb, &pip)?,
                gamma: index_list(g, nb, n, &gp)?,
                truss: Box::new(truss),
                brace: Box::new(brace),
            }
        }
        other => return Err(perr(&kind_path, format!("unknown kind `{other}`"))),
    };
    Ok(doc)
}

fn table_labels(t: &CayleyTable) -> Option<Vec<String>> {
    t.labels().map(<[String]>::to_vec)
}

fn with_opt_labels(t: CayleyTable, labels: &Option<Vec<String>>) -> CayleyTable {
    match labels {
        Some(l) => t.with_labels(l.clone()),
        None => t,
    }
}

/// Explicit document for a resolved structure.
pub fn to_doc(s: &Structure) -> StructureDoc {
    match s {
        Structure::Table(t) => StructureDoc::Table {
            payload: t.rows(),
            labels: table_labels(t),
        },
        Structure::Heap(h) => StructureDoc::Heap {
            payload: h.rows(),
            labels: None,
        },
        Structure::WeakBrace(w) => StructureDoc::WeakBrace {
            add: w.add_table().rows(),
            mul: w.mul_table().rows(),
            labels: table_labels(w.mul_table()),
        },
        Structure::NearTruss(t) => StructureDoc::NearTruss {
            heap: t.heap().rows(),
            mul: t.mul_table().rows(),
            unit: t.unit(),
            labels: table_labels(t.mul_table()),
        },
        Structure::PairMap(r) => StructureDoc::PairMap {
            sigma: r.sigma_rows(),
            tau: r.tau_rows(),
            labels: None,
        },
        Structure::Retraction(r) => StructureDoc::Retraction {
            truss: Box::new(to_doc(&Structure::NearTruss(r.truss().clone()))),
            brace: Box::new(to_doc(&Structure::WeakBrace(r.brace().clone()))),
            pi: r.pi().to_vec(),
            gamma: r.gamma().to_vec(),
        },
    }
}

/// Verify an explicit document or run a builder.
///
/// Weak braces are accepted at any level; callers that need more check
/// [`WeakBrace::level`].
pub fn resolve(doc: &StructureDoc) -> Result<Structure> {
    Ok(match doc {
        StructureDoc::Table { payload, labels } => {
            Structure::Table(with_opt_labels(CayleyTable::new(payload.clone())?, labels))
        }
        StructureDoc::Heap { payload, .. } => Structure::Heap(verify_heap(payload.clone())?),
        StructureDoc::WeakBrace { add, mul, labels } => {
            let w = verify_weak_brace(
                CayleyTable::new(add.clone())?,
                CayleyTable::new(mul.clone())?,
                Level::Weak,
            )?;
            Structure::WeakBrace(match labels {
                Some(l) => w.with_labels(l.clone()),
                None => w,
            })
        }
        StructureDoc::NearTruss {
            heap,
            mul,
            unit,
            labels,
        } => {
            let t = verify_near_truss(
                verify_heap(heap.clone())?,
                CayleyTable::new(mul.clone())?,
                *unit,
            )?;
            Structure::NearTruss(match labels {
                Some(l) => t.with_labels(l.clone()),
                None => t,
            })
        }
        StructureDoc::PairMap { sigma, tau, .. } => {
            Structure::PairMap(PairMap::new(sigma.clone(), tau.clone())?)
        }
        StructureDoc::Retraction {
            truss,
            brace,
            pi,
            gamma,
        } => {
            let t = expect_truss(resolve(truss)?)?;
            let b = expect_brace(resolve(brace)?)?;
            Structure::Retraction(build_retraction(t, b, pi.clone(), gamma.clone())?)
        }
        StructureDoc::Builder { name, params } => {
            let entry = BUILDERS
                .iter()
                .find(|b| b.name == name)
                .ok_or_else(|| Error::input(format!("unknown builder `{name}`")))?;
            if let Some(k) = params.keys().find(|k| !entry.params.contains(&k.as_str())) {
                return Err(Error::input(format!(
                    "builder `{name}` has no parameter `{k}`"
                )));
            }
            (entry.run)(&Params { name, params })?
        }
    })
}

pub fn parse_structure(text: &str) -> Result<Structure> {
    resolve(&parse(text)?)
}

fn wrong_kind(expected: &str, got: &Structure) -> Error {
    Error::input(format!("expected a {expected}, got a {}", got.kind()))
}

pub fn expect_table(s: Structure) -> Result<CayleyTable> {
    match s {
        Structure::Table(t) => Ok(t),
        other => Err(wrong_kind("table", &other)),
    }
}

pub fn expect_brace(s: Structure) -> Result<WeakBrace> {
    match s {
        Structure::WeakBrace(w) => Ok(w),
        other => Err(wrong_kind("weak_brace", &other)),
    }
}

pub fn expect_truss(s: Structure) -> Result<NearTruss> {
    match s {
        Structure::NearTruss(t) => Ok(t),
        other => Err(wrong_kind("near_truss", &other)),
    }
}

pub fn expect_retraction(s: Structure) -> Result<Retraction> {
    match s {
        Structure::Retraction(r) => Ok(r),
        other => Err(wrong_kind("retraction", &other)),
    }
}

pub fn expect_pair_map(s: Structure) -> Result<PairMap> {
    match s {
        Structure::PairMap(r) => Ok(r),
        other => Err(wrong_kind("pair_map", &other)),
    }
}

struct Params<'a> {
    name: &'a str,
    params: &'a BTreeMap<String, Param>,
}

impl Params<'_> {
    fn int(&self, key: &str) -> Result<usize> {
        match self.params.get(key) {
            Some(Param::Int(i)) => usize::try_from(*i)
                .map_err(|_| Error::input(format!("{}.{key} is too large", self.name))),
            Some(Param::Doc(_)) => Err(Error::input(format!(
                "{}.{key} must be an integer",
                self.name
            ))),
            None => Err(Error::input(format!(
                "builder `{}` needs `{key}`",
                self.name
            ))),
        }
    }

    fn doc(&self, key: &str) -> Result<Structure> {
        match self.params.get(key) {
            Some(Param::Doc(d)) => resolve(d),
            Some(Param::Int(_)) => Err(Error::input(format!(
                "{}.{key} must be a document",
                self.name
            ))),
            None => Err(Error::input(format!(
                "builder `{}` needs `{key}`",
                self.name
            ))),
        }
    }

    fn group(&self, key: &str) -> Result<CayleyTable> {
        expect_table(self.doc(key)?)
    }

    fn brace(&self, key: &str) -> Result<WeakBrace> {
        expect_brace(self.doc(key)?)
    }

    fn skew(&self, key: &str) -> Result<WeakBrace> {
        let b = self.brace(key)?;
        if b.level() < Level::Skew {
            return Err(Error::Unsupported(format!(
                "{}.{key} must be a skew brace, got level {}",
                self.name,
                b.level().as_str()
            )));
        }
        Ok(b)
    }

    fn element(&self, key: &str, n: usize) -> Result<usize> {
        let z = self.int(key)?;
        if z >= n {
            return Err(Error::input(format!(
                "{}.{key} = {z} out of range for size {n}",
                self.name
            )));
        }
        Ok(z)
    }
}

/// A named constructor reachable from builder documents.
pub struct BuilderSpec {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub summary: &'static str,
    run: fn(&Params) -> Result<Structure>,
}

fn group(kind: GroupKind) -> Result<Structure> {
    build_group(kind).map(Structure::Table)
}

fn brace(kind: BraceKind) -> Result<Structure> {
    build_brace(kind).map(Structure::WeakBrace)
}

pub static BUILDERS: &[BuilderSpec] = &[
    BuilderSpec {
        name: "cyclic",
        params: &["n"],
        summary: "cyclic group Z/n",
        run: |p| group(GroupKind::Cyclic(p.int("n")?)),
    },
    BuilderSpec {
        name: "symmetric",
        params: &["n"],
        summary: "symmetric group S_n, n <= 4",
        run: |p| group(GroupKind::Symmetric(p.int("n")?)),
    },
    BuilderSpec {
        name: "dihedral",
        params: &["n"],
        summary: "dihedral group of order 2n",
        run: |p| group(GroupKind::Dihedral(p.int("n")?)),
    },
    BuilderSpec {
        name: "units_mod",
        params: &["m"],
        summary: "unit group of Z/m",
        run: |p| group(GroupKind::UnitsMod(p.int("m")?)),
    },
    BuilderSpec {
        name: "group_product",
        params: &["left", "right"],
        summary: "direct product of two tables",
        run: |p| {
            Ok(Structure::Table(
                p.group("left")?.direct_product(&p.group("right")?),
            ))
        },
    },
    BuilderSpec {
        name: "three_element_monoid",
        params: &[],
        summary: "the Clifford monoid {e, x, y} with x, y a group of order 2 below e",
        run: |_| Ok(Structure::Table(three_element_monoid())),
    },
    BuilderSpec {
        name: "chain_semilattice",
        params: &["k"],
        summary: "meet table of a k-element chain, 0 on top",
        run: |p| Ok(Structure::Table(chain_semilattice(p.int("k")?))),
    },
    BuilderSpec {
        name: "trivial",
        params: &["of"],
        summary: "trivial weak brace a + b = a o b on a Clifford semigroup",
        run: |p| brace(BraceKind::Trivial(p.group("of")?)),
    },
    BuilderSpec {
        name: "almost_trivial",
        params: &["of"],
        summary: "almost trivial weak brace a + b = b o a",
        run: |p| brace(BraceKind::AlmostTrivial(p.group("of")?)),
    },
    BuilderSpec {
        name: "rump_mod",
        params: &["n"],
        summary: "Z/n with a o b = a + (-1)^a b, n even",
        run: |p| brace(BraceKind::RumpMod(p.int("n")?)),
    },
    BuilderSpec {
        name: "sandwich_units",
        params: &["m"],
        summary: "units of Z/m with a +_1 b = a - 1 + b and multiplication",
        run: |p| brace(BraceKind::SandwichUnits(p.int("m")?)),
    },
    BuilderSpec {
        name: "cyclic_circ",
        params: &["m"],
        summary: "cyclic (B, o) of even order m with g^k + g^l = g^(k + (-1)^k l)",
        run: |p| brace(BraceKind::CyclicCirc(p.int("m")?)),
    },
    BuilderSpec {
        name: "brace_product",
        params: &["left", "right"],
        summary: "direct product of two weak braces",
        run: |p| {
            brace(BraceKind::DirectProduct(
                Box::new(p.brace("left")?),
                Box::new(p.brace("right")?),
            ))
        },
    },
    BuilderSpec {
        name: "sandwich_chain",
        params: &["k"],
        summary: "strong semilattice U(Z/2^k) -> ... -> U(Z/2) of sandwich braces",
        run: |p| brace(BraceKind::SandwichChain(p.int("k")?)),
    },
    BuilderSpec {
        name: "heap_of_group",
        params: &["of"],
        summary: "heap [a,b,c] = a b^-1 c",
        run: |p| heap_of_group(&p.group("of")?).map(Structure::Heap),
    },
    BuilderSpec {
        name: "truss_of_brace",
        params: &["brace"],
        summary: "T(B): heap a - b + c, multiplication o",
        run: |p| truss_of_brace(&p.skew("brace")?).map(Structure::NearTruss),
    },
    BuilderSpec {
        name: "truss_of_ring_mod",
        params: &["m"],
        summary: "Z/m with heap a - b + c and ring multiplication",
        run: |p| truss_of_ring_mod(p.int("m")?).map(Structure::NearTruss),
    },
    BuilderSpec {
        name: "identity_retraction",
        params: &["brace"],
        summary: "pi = gamma = id on T(B)",
        run: |p| identity_retraction(&p.skew("brace")?).map(Structure::Retraction),
    },
    BuilderSpec {
        name: "trivial_retraction",
        params: &["truss"],
        summary: "retraction of a unital near-truss onto the one-element brace",
        run: |p| trivial_retraction(&expect_truss(p.doc("truss")?)?).map(Structure::Retraction),
    },
    BuilderSpec {
        name: "product_retraction",
        params: &["brace", "truss"],
        summary: "T(B) x T with pi the projection and gamma(b) = (b, 1)",
        run: |p| {
            let t = expect_truss(p.doc("truss")?)?;
            product_near_truss(&p.skew("brace")?, &t).map(|(_, r)| Structure::Retraction(r))
        },
    },
    BuilderSpec {
        name: "semidirect_retraction",
        params: &["p"],
        summary: "U(Z/p) acting on Z/p, a retraction that does not split, p in {3, 5}",
        run: |p| semidirect_retraction(p.int("p")?).map(Structure::Retraction),
    },
    BuilderSpec {
        name: "canonical_solution",
        params: &["brace"],
        summary: "r(a, b) = (lambda_a(b), rho_b(a))",
        run: |p| Ok(Structure::PairMap(canonical_solution(&p.brace("brace")?))),
    },
    BuilderSpec {
        name: "deformed_solution",
        params: &["brace", "z"],
        summary: "r_z for any parameter z",
        run: |p| {
            let b = p.brace("brace")?;
            let z = p.element("z", b.size())?;
            Ok(Structure::PairMap(deformed_solution(&b, z)))
        },
    },
    BuilderSpec {
        name: "check_solution",
        params: &["brace", "w"],
        summary: "r_w(a, b) = (a o b - a o w + w, (..)^- o a o b)",
        run: |p| {
            let b = p.brace("brace")?;
            let w = p.element("w", b.size())?;
            Ok(Structure::PairMap(check_map(&b, w)))
        },
    },
    BuilderSpec {
        name: "near_truss_solution",
        params: &["retraction", "z"],
        summary: "r^z(a, b) = (eta_a(b), eta_a(b)^-1 ab) on a retraction",
        run: |p| {
            let r = expect_retraction(p.doc("retraction")?)?;
            let z = p.element("z", r.truss().size())?;
            near_truss_solution(&r, z).map(Structure::PairMap)
        },
    },
];

/// Shorthand for an integer builder parameter.
pub fn int(i: u64) -> Param {
    Param::Int(i)
}

/// Shorthand for a nested builder document.
pub fn doc(d: StructureDoc) -> Param {
    Param::Doc(Box::new(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rump_builder_gives_b6() {
        let s =
            parse_structure(r#"{"kind":"builder","name":"rump_mod","params":{"n":6}}"#).unwrap();
        assert_eq!(
            expect_brace(s).unwrap(),
            build_brace(BraceKind::RumpMod(6)).unwrap()
        );
    }

    #[test]
    fn explicit_table() {
        let doc = parse(r#"{"kind":"table","n":2,"payload":[[0,1],[1,0]]}"#).unwrap();
        let t = expect_table(resolve(&doc).unwrap()).unwrap();
        assert_eq!(t, build_group(GroupKind::Cyclic(2)).unwrap());
    }

    #[test]
    fn out_of_range_entry_has_path() {
        let text = r#"{"kind":"table","n":4,"payload":[[0,1,2,3],[1,2,7,0],[2,3,0,1],[3,0,1,2]]}"#;
        let Err(Error::Parse { path, .. }) = parse(text) else {
            panic!("expected parse error")
        };
        assert_eq!(path, "payload[1][2]");
    }

    #[test]
    fn nested_paths_and_unknown_builder() {
        let text = r#"{"kind":"weak_brace","n":1,"payload":{"add":[[0]],"mul":[[3]]}}"#;
        let Err(Error::Parse { path, .. }) = parse(text) else {
            panic!()
        };
        assert_eq!(path, "payload.mul[0][0]");
        let text = r#"{"kind":"builder","name":"nope","params":{}}"#;
        let Err(Error::Parse { path, .. }) = parse(text) else {
            panic!()
        };
        assert_eq!(path, "name");
        assert!(matches!(parse("{"), Err(Error::Parse { .. })));
    }

    #[test]
    fn canonical_round_trip() {
        let text =
            "{\"kind\":\"table\",\"labels\":[\"a\",\"b\"],\"n\":2,\"payload\":[[0,1],[1,0]]}\n";
        assert_eq!(render(&parse(text).unwrap()), text);
        let spaced = "{ \"payload\": [[0,1],[1,0]], \"n\": 2, \"kind\": \"table\" }";
        assert_eq!(
            render(&parse(spaced).unwrap()),
            "{\"kind\":\"table\",\"n\":2,\"payload\":[[0,1],[1,0]]}\n"
        );
    }

    #[test]
    fn every_kind_round_trips_through_text() {
        let u8 = StructureDoc::builder("sandwich_units", &[("m", int(8))]);
        let docs = [
            StructureDoc::builder("cyclic", &[("n", int(3))]),
            StructureDoc::builder(
                "heap_of_group",
                &[("of", doc(StructureDoc::builder("cyclic", &[("n", int(3))])))],
            ),
            u8.clone(),
            StructureDoc::builder("truss_of_ring_mod", &[("m", int(4))]),
            StructureDoc::builder(
                "deformed_solution",
                &[("brace", doc(u8.clone())), ("z", int(1))],
            ),
            StructureDoc::builder("identity_retraction", &[("brace", doc(u8))]),
        ];
        for d in docs {
            assert_eq!(parse(&render(&d)).unwrap(), d);
            let s = resolve(&d).unwrap();
            let explicit = to_doc(&s);
            let text = render(&explicit);
            assert_eq!(parse(&text).unwrap(), explicit);
            assert_eq!(resolve(&parse(&text).unwrap()).unwrap(), s);
        }
    }

    #[test]
    fn wrong_param_kind_is_input_error() {
        let d = StructureDoc::builder("trivial", &[("of", int(3))]);
        assert!(matches!(resolve(&d), Err(Error::Input(_))));
        let d = StructureDoc::builder("cyclic", &[("n", int(3)), ("m", int(2))]);
        assert!(matches!(resolve(&d), Err(Error::Input(_))));
    }
}
