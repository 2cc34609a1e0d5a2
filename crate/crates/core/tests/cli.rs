use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cusplevi")).args(args).output().expect("run cusplevi")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn isolated_b3_lists_three_nodes() {
    let o = run(&["isolated", "--type", "B", "--rank", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].contains("A1xA1xA1"));
    assert!(lines[2].contains("A3"));
}

#[test]
fn isolated_in_characteristic_two_drops_nodes() {
    let o = run(&["isolated", "--type", "B", "--rank", "3", "--p", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn e8_json() {
    let o = run(&["jordan-levis", "--type", "E", "--rank", "8", "--s", "0,0,0,0,0,1/3,0,0", "--format", "json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["group"], "E8");
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 6);
    assert_eq!(records[0]["levi"], "E8");
    assert_eq!(records[0]["centralizer"], "2E6x2A2");
    assert!(records.iter().all(|r| r["j_nodes"].is_array()));
    assert_eq!(records[5]["j_nodes"].as_array().unwrap().len(), 0);
}

#[test]
fn e8_text_has_header_and_rows() {
    let o = run(&["jordan-levis", "--type", "E", "--rank", "8", "--s", "0,0,0,0,0,1/3,0,0"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().starts_with("E8 s="));
    assert_eq!(text.lines().filter(|l| l.contains(" | J=")).count(), 6);
}

#[test]
fn e8_order_five_is_unsupported() {
    let o = run(&["jordan-levis", "--type", "E", "--rank", "8", "--s", "0,0,0,0,1/5,0,0,0", "--q-mod", "2:5"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn invalid_input_exits_with_two() {
    assert_eq!(run(&["roots", "--type", "Q", "--rank", "2"]).status.code(), Some(2));
    assert_eq!(run(&["roots", "--type", "D", "--rank", "2"]).status.code(), Some(2));
    assert_eq!(run(&["cover", "--type", "A", "--rank", "2", "--w", "7"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn cover_with_signed_permutation() {
    let o = run(&["cover", "--type", "C", "--rank", "4", "--w", "u14 u23"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("A1xA1.Phi1^2"));
}

#[test]
fn table_c2_characteristic_two() {
    let o = run(&["table", "--type", "C", "--rank", "2", "--p", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("C2 | C2"));
    assert!(text.contains("Phi1^2 | Phi1^2"));
}
