use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../docs")
        .join(name);
    let text = std::fs::read_to_string(&path).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn lines(args: &[&str]) -> Vec<Value> {
    let o = Command::new(env!("CARGO_BIN_EXE_threeweight"))
        .args(args)
        .output()
        .unwrap();
    String::from_utf8(o.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn assert_valid(v: &jsonschema::Validator, doc: &Value) {
    let errors: Vec<String> = v.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{doc}: {errors:?}");
}

#[test]
fn sweep_records_match_schema() {
    let v = schema("sweep_record.schema.json");
    let mut rows = lines(&["sweep", "--kind", "sum", "--e", "4..5"]);
    rows.extend(lines(&["sweep", "--kind", "legacy", "--e", "4"]));
    rows.extend(lines(&["sweep", "--kind", "code", "--e", "4"]));
    rows.extend(lines(&["sweep", "--kind", "code", "--e", "6", "--h", "3"]));
    assert!(rows.len() > 3000);
    for r in &rows {
        assert_valid(&v, r);
    }
}

#[test]
fn enumerators_match_schema() {
    let v = schema("weight_enumerator.schema.json");
    for args in [
        ["code", "--e", "5", "--h", "1", "--a", "1", "--b", "0"],
        ["code", "--e", "4", "--h", "1", "--a", "1", "--b", "0"],
        ["code", "--e", "6", "--h", "1", "--a", "g", "--b", "1"],
        ["code", "--e", "4", "--h", "2", "--a", "1", "--b", "1"],
    ] {
        let mut args = args.to_vec();
        args.extend(["--paranoid", "--format", "json"]);
        let doc = &lines(&args)[0];
        assert_valid(&v, &doc["theorem"]);
        assert_valid(&v, &doc["oracle"]);
    }
}
