use serde_json::json;
use ybe_demo::{compare, deform, inspect};

#[test]
fn inspect_marks_distributor_rows() {
    let v = inspect("b6").unwrap();
    assert_eq!(v["distributor"], json!([0, 3]));
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    for row in rows {
        let z = row["z"].as_u64().unwrap();
        assert_eq!(row["in_distributor"], json!(z == 0 || z == 3));
        if z == 0 || z == 3 {
            assert_eq!(row["braid"], json!(true));
        }
    }
}

#[test]
fn deform_at_identity_is_the_canonical_map() {
    let v = deform("b6", 0).unwrap();
    let sigma = v["sigma"].as_array().unwrap();
    // lambda_0 is the identity
    assert_eq!(sigma[0], json!([0, 1, 2, 3, 4, 5]));
    assert_eq!(v["summary"]["braid"], json!(true));
}

#[test]
fn pasted_documents_are_accepted() {
    let doc = r#"{"kind":"builder","name":"trivial","params":{"of":{"kind":"builder","name":"three_element_monoid","params":{}}}}"#;
    let v = inspect(doc).unwrap();
    assert_eq!(v["n"], json!(3));
    assert_eq!(v["distributor"], json!([0, 1, 2]));
}

#[test]
fn compare_finds_witness_or_none() {
    let same = compare("b6", 0, 0).unwrap();
    assert_eq!(same["equivalent"], json!(true));
    assert_eq!(same["witness"].as_array().unwrap().len(), 6);
    let t3 = "trivial_three_element";
    assert_eq!(compare(t3, 0, 1).unwrap()["equivalent"], json!(false));
}
