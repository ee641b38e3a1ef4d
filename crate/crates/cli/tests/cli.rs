use std::io::Write;
use std::process::{Command, Output, Stdio};

fn gridnet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gridnet")).args(args).env("GRIDNET_WORKERS", "2").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn diameter_of_moore_digraph() {
    let o = gridnet(&["diameter", "na:10,-1,1,3,-3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3\n");
}

#[test]
fn literal_ten_vertex_tuple_is_a_validation_failure() {
    let o = gridnet(&["diameter", "na:10,-1,1,3,3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("alpha+beta+gamma+delta = 6"));
    let forced = gridnet(&["diameter", "na:10,-1,1,3,3", "--force"]);
    assert_eq!(forced.status.code(), Some(0));
    assert_eq!(stdout(&forced), "5\n");
}

#[test]
fn bounds_prints_moore_value() {
    let o = gridnet(&["bounds", "ds", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let row = text.lines().nth(1).unwrap();
    assert_eq!(row.split_whitespace().nth(2), Some("25"));

    let o = gridnet(&["bounds", "mh", "--k", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["moore_value"], 20);
}

#[test]
fn verify_theorem_42_passes() {
    let o = gridnet(&["verify", "4.2", "--k-max", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("33 rows, 0 failed\n"));
}

#[test]
fn verify_with_search_reports_the_missing_order() {
    let o = gridnet(&["verify", "4.2", "--k-max", "1", "--search", "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let missing = v["rows"].as_array().unwrap().iter().find(|r| r["case"] == "missing").unwrap();
    assert_eq!(missing["order"], 14);
    assert_eq!(missing["searched"], 5);
    assert_eq!(missing["claimed_optimum"], 4);
}

#[test]
fn verify_other_targets() {
    for args in [
        &["verify", "4.1", "--k-max", "5"][..],
        &["verify", "4.3", "--k-max", "2"],
        &["verify", "sandwich", "--n-max", "20"],
        &["verify", "line-digraph", "--n-max", "12", "--sample-max", "20", "--stride", "7"],
    ] {
        let o = gridnet(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).contains(" 0 failed"));
    }
}

#[test]
fn gen_json_round_trips_through_diameter() {
    let gen = gridnet(&["gen", "mh:20,1,7,-3,7,1,-5,1,-9", "--format", "json"]);
    assert_eq!(gen.status.code(), Some(0));
    let mut child = Command::new(env!("CARGO_BIN_EXE_gridnet"))
        .args(["diameter", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&gen.stdout).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4\n");
}

#[test]
fn gen_dot() {
    let o = gridnet(&["gen", "ds:5,1,2"]);
    let text = stdout(&o);
    assert!(text.starts_with("digraph G {\n"));
    assert_eq!(text.matches(" -> ").count(), 20);
}

#[test]
fn derive_translations() {
    let o = gridnet(&["derive", "na", "ds:13,2,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("na:26,-1,1,5,-5"));
    let o = gridnet(&["derive", "mh", "ds:13,2,3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["derived"], "mh:52,1,11,-3,11,1,-9,1,-13");
    assert_eq!(v["source_diameter"], 2);
    assert!(v["failed_conditions"].as_array().unwrap().is_empty());
    let o = gridnet(&["derive", "na", "mh:20,1,7,-3,7,1,-5,1,-9"]);
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn search_outputs() {
    let o = gridnet(&["search", "ds", "--n", "13", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["min_diameter"], 2);
    assert!(v["witnesses"].as_array().unwrap().iter().any(|w| w == "ds:13,2,3"));

    let o = gridnet(&["search", "mh", "--n", "20", "--direct", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("family,order,mode,min_diameter,witness\n"));
    assert!(text.lines().nth(1).unwrap().starts_with("mh,20,direct,4,\"mh:20,"));
}

#[test]
fn search_respects_cap() {
    let o = gridnet(&["search", "na", "--n", "200"]);
    assert_eq!(o.status.code(), Some(64));
    let o = gridnet(&["search", "na", "--n", "122", "--cap", "130", "--witness-cap", "1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn worker_count_does_not_change_output() {
    let run = |w: &str| {
        Command::new(env!("CARGO_BIN_EXE_gridnet"))
            .args(["search", "na", "--n", "18", "--format", "json"])
            .env("GRIDNET_WORKERS", w)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("3"));
}

#[test]
fn table_csv() {
    let o = gridnet(&["table", "na", "--k-max", "1", "--csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("k,order,case,diameter,expected,result"));
    assert!(text.contains("1,12,b,4,4,pass\n"));
    assert!(text.contains("1,14,missing,5,4,pass\n"));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(gridnet(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(gridnet(&["diameter", "na:10,x"]).status.code(), Some(64));
    assert_eq!(gridnet(&["diameter", "xx:10,1,2"]).status.code(), Some(64));
    assert_eq!(gridnet(&["search", "ds", "--n", "13", "--direct"]).status.code(), Some(64));
    assert_eq!(gridnet(&["--help"]).status.code(), Some(0));
    assert_eq!(gridnet(&["--version"]).status.code(), Some(0));
}

#[test]
fn bad_graph_json_is_a_validation_failure() {
    let dir = std::env::temp_dir().join(format!("gridnet-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, r#"{"order":2,"arcs":[[5]]}"#).unwrap();
    let o = gridnet(&["diameter", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}
