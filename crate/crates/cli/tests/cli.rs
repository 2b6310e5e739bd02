use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn ybe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ybe"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_doc(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn distributor_of_rump_six() {
    let o = ybe(&["distributor", data("b6.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    // a o 3 = a + 3 for every a, so 3 joins the identity
    assert_eq!(stdout(&o), "0 3\n");
}

#[test]
fn distributor_structure_report() {
    let o = ybe(&[
        "distributor",
        data("u8.json").to_str().unwrap(),
        "--structure",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("0 1 2 3\n"));
    assert!(!s.contains("FAIL"));
}

#[test]
fn solutions_on_trivial_weak_brace() {
    let o = ybe(&["solutions", data("t3.json").to_str().unwrap(), "--all-z"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let rows: Vec<&str> = s.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    for r in rows {
        let f: Vec<&str> = r.split('\t').collect();
        assert_eq!((f[2], f[3]), ("1", "1"));
    }
}

#[test]
fn solutions_on_rump_six_hold_biconditional() {
    let o = ybe(&["solutions", data("b6.json").to_str().unwrap(), "--all-z"]);
    assert_eq!(o.status.code(), Some(0));
    for r in stdout(&o).lines().skip(1) {
        let f: Vec<&str> = r.split('\t').collect();
        assert_eq!(f[2], f[3], "row {r}");
    }
}

#[test]
fn non_equivalent_deformations() {
    let o = ybe(&[
        "equiv",
        data("t3_re.json").to_str().unwrap(),
        data("t3_rx.json").to_str().unwrap(),
    ]);
    assert_eq!(stdout(&o), "none\n");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn equivalence_witness_and_budget() {
    let o = ybe(&[
        "equiv",
        data("t3_re.json").to_str().unwrap(),
        data("t3_re.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0 1 2\n");
    let o = ybe(&[
        "equiv",
        data("t3_re.json").to_str().unwrap(),
        data("t3_re.json").to_str().unwrap(),
        "--budget",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_levels_and_errors() {
    let b6 = data("b6.json");
    assert_eq!(
        ybe(&["verify", b6.to_str().unwrap(), "--level", "brace"])
            .status
            .code(),
        Some(0)
    );
    let t3 = data("t3.json");
    let o = ybe(&["verify", t3.to_str().unwrap(), "--level", "skew"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());
    assert_eq!(
        ybe(&["verify", t3.to_str().unwrap(), "--level", "bogus"])
            .status
            .code(),
        Some(2)
    );

    let dir = tempfile::tempdir().unwrap();
    let bad = write_doc(
        &dir,
        "bad.json",
        r#"{"kind":"table","n":4,"payload":[[0,1,2,3],[1,2,7,0],[2,3,0,1],[3,0,1,2]]}"#,
    );
    let o = ybe(&["verify", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("payload[1][2]"));
    let nonassoc = write_doc(
        &dir,
        "na.json",
        r#"{"kind":"table","n":2,"payload":[[1,0],[0,0]]}"#,
    );
    assert_eq!(ybe(&["verify", &nonassoc]).status.code(), Some(1));
    assert_eq!(
        ybe(&["verify", "/nonexistent/file.json"]).status.code(),
        Some(2)
    );
}

#[test]
fn deform_emits_pair_map_and_checks() {
    let o = ybe(&[
        "deform",
        data("u8.json").to_str().unwrap(),
        "--z",
        "1",
        "--check",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("{\"kind\":\"pair_map\",\"n\":4,"));
    // outside the distributor the braid check fails
    let o = ybe(&[
        "deform",
        data("b6.json").to_str().unwrap(),
        "--z",
        "1",
        "--check",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = ybe(&["deform", data("b6.json").to_str().unwrap(), "--z", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn deform_output_is_a_readable_document() {
    let o = ybe(&["deform", data("u8.json").to_str().unwrap(), "--z", "1"]);
    let dir = tempfile::tempdir().unwrap();
    let p = write_doc(&dir, "r.json", &stdout(&o));
    let v = ybe(&["verify", &p]);
    assert_eq!(v.status.code(), Some(0));
    assert_eq!(stdout(&v), "ok pair_map n=4 solution\n");
}

#[test]
fn near_truss_solve() {
    let o = ybe(&[
        "nt-solve",
        data("u8_x_z5.json").to_str().unwrap(),
        "--z",
        "7",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).starts_with("{\"kind\":\"pair_map\",\"n\":20,"));
}

#[test]
fn catalog_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = ybe(&[
            "catalog",
            "--builders",
            "b6,u8,trivial_three_element",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    let ta = std::fs::read(&a).unwrap();
    assert_eq!(ta, std::fs::read(&b).unwrap());
    assert!(ta.ends_with(b"}\n"));
    assert!(!ta.contains(&b'\r'));
    assert_eq!(
        ybe(&["catalog", "--builders", "missing"]).status.code(),
        Some(2)
    );
}
