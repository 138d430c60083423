use std::io::Write;
use std::process::{Command, Output, Stdio};

use tensorcirc::{CirculantSpec, Graph};

fn tensorcirc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tensorcirc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tensorcirc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_writes_c4_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.g");
    let o = tensorcirc(&["build", "C 4 {2}", "-o", path.to_str().unwrap()]);
    assert!(o.status.success());
    let g: Graph = std::fs::read_to_string(&path).unwrap().parse().unwrap();
    assert_eq!((g.order(), g.edge_count()), (4, 2));
}

#[test]
fn build_round_trips_small_specs() {
    let dir = tempfile::tempdir().unwrap();
    for s in (1..=12).flat_map(CirculantSpec::all_of_order).step_by(7) {
        let path = dir.path().join("g.txt");
        let o = tensorcirc(&["build", &s.to_string(), "-o", path.to_str().unwrap()]);
        assert!(o.status.success(), "{s}");
        let g: Graph = std::fs::read_to_string(&path).unwrap().parse().unwrap();
        assert_eq!(g, s.build(), "{s}");
    }
}

#[test]
fn product_piped_into_check() {
    let dir = tempfile::tempdir().unwrap();
    let (k2, k4) = (dir.path().join("k2.g"), dir.path().join("k4.g"));
    assert!(tensorcirc(&["build", "K 2", "-o", k2.to_str().unwrap()])
        .status
        .success());
    assert!(tensorcirc(&["build", "K 4", "-o", k4.to_str().unwrap()])
        .status
        .success());
    let product = tensorcirc(&[
        "product",
        "tensor",
        k2.to_str().unwrap(),
        k4.to_str().unwrap(),
    ]);
    assert!(product.status.success());
    let check = with_stdin(&["check", "-"], &stdout(&product));
    assert!(check.status.success());
    assert_eq!(stdout(&check), "NOT CIRCULANT (exhausted, n=8)\n");
}

#[test]
fn check_reports_witness() {
    let o = tensorcirc(&["check", "K 3,3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    let spec: CirculantSpec = lines
        .next()
        .unwrap()
        .strip_prefix("CIRCULANT ")
        .unwrap()
        .parse()
        .unwrap();
    assert_eq!(spec.order(), 6);
    assert!(lines.next().unwrap().starts_with("witness ("));
}

#[test]
fn structured_and_text_agree() {
    let text = stdout(&tensorcirc(&["check", "C 8 {1,4}"]));
    let json: serde_json::Value = serde_json::from_str(&stdout(&tensorcirc(&[
        "--format",
        "json",
        "check",
        "C 8 {1,4}",
    ])))
    .unwrap();
    assert_eq!(json["circulant"], true);
    assert_eq!(
        text.lines().next().unwrap(),
        format!("CIRCULANT {}", json["spec"].as_str().unwrap())
    );
    assert_eq!(
        text.lines().nth(1).unwrap(),
        format!("witness {}", json["witness"].as_str().unwrap())
    );
}

#[test]
fn root_of_k33() {
    let o = tensorcirc(&["root", "C 6 {1,3}"]);
    assert!(o.status.success());
    let h: Graph = stdout(&o).parse().unwrap();
    assert_eq!(h, tensorcirc::kn_star(3));
}

#[test]
fn verify_capped_run_passes() {
    let o = tensorcirc(&["verify", "--max-order", "16"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("THEOREM 1 PASS "));
    assert_eq!(text.lines().count(), 11);
    let json: serde_json::Value = serde_json::from_str(&stdout(&tensorcirc(&[
        "verify",
        "--max-order",
        "16",
        "--format",
        "json",
    ])))
    .unwrap();
    let results = json["results"].as_array().unwrap();
    for (line, item) in text.lines().zip(results) {
        let fields: Vec<&str> = line.split(' ').collect();
        assert_eq!(fields[1], item["id"].to_string());
        assert_eq!(fields[2] == "PASS", item["passed"].as_bool().unwrap());
        assert_eq!(fields[3], item["instances"].to_string());
    }
    assert!(stdout(&tensorcirc(&["--quiet", "verify", "--max-order", "8"])).is_empty());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["build", "C 4 {3}"],
        vec!["build", "nonsense"],
        vec!["check", "/no/such/file"],
        vec!["check", "C 30 {1}"],
        vec!["--max-order", "30", "check", "K 3"],
        vec!["product", "sideways", "K 2", "K 3"],
        vec!["frobnicate"],
    ] {
        let o = tensorcirc(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn malformed_file_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.g");
    std::fs::write(&path, "3 2\n0 1\n").unwrap();
    assert_eq!(
        tensorcirc(&["check", path.to_str().unwrap()]).status.code(),
        Some(2)
    );
}
