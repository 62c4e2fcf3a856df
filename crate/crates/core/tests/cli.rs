use std::process::Command;

fn surjalg(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_surjalg"))
        .args(args)
        .env_remove("SURJALG_FORCE")
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn gdim_three() {
    assert_eq!(surjalg(&["gdim", "--n", "3"]), (0, "2\n".into(), String::new()));
}

#[test]
fn cartan_zero() {
    let (code, out, _) = surjalg(&["cartan", "--n", "0"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["matrix"], serde_json::json!([[1]]));
    assert_eq!(v["index"], serde_json::json!([[]]));
}

#[test]
fn quiver_dot() {
    let (code, out, _) = surjalg(&["quiver", "--n", "4", "--format", "dot"]);
    assert_eq!(code, 0);
    let nodes: std::collections::BTreeSet<&str> = out
        .lines()
        .filter(|l| l.contains("rank=same"))
        .flat_map(|l| l.split('"').skip(1).step_by(2))
        .collect();
    assert_eq!(nodes.len(), 12);
    assert_eq!(out.matches(" -> ").count(), 15);
    assert_eq!(out.matches("\"[3,1]\" -> \"[2,1]\"").count(), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(surjalg(&["frobnicate"]).0, 1);
    assert_eq!(surjalg(&["resolve", "--n", "3", "--partition", "[1,2]"]).0, 1);
    let (code, out, err) = surjalg(&["gdim", "--n", "6"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("--force"));
    assert_eq!(surjalg(&["cartan", "--n", "4", "--method", "closed_form"]).0, 1);
}

#[test]
fn force_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_surjalg"))
        .args(["gdim", "--n", "3", "--guard", "2"])
        .env("SURJALG_FORCE", "1")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "2\n");
    assert_eq!(surjalg(&["gdim", "--n", "3", "--guard", "2"]).0, 2);
}

#[test]
fn verify_passes() {
    let (code, out, _) = surjalg(&["verify", "--n", "4"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn progress_goes_to_stderr() {
    let (code, out, err) = surjalg(&["-v", "gdim", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1\n");
    assert!(err.contains("building"));
}

#[test]
fn deterministic_output() {
    for args in [&["cartan", "--n", "4", "--format", "csv"][..], &["resolve", "--n", "4", "--partition", "[2,1,1]"]] {
        assert_eq!(surjalg(args), surjalg(args));
    }
}

#[test]
fn small_commands() {
    assert_eq!(surjalg(&["char", "--lambda", "[2,1]", "--mu", "[1,1,1]"]).1, "2\n");
    assert_eq!(surjalg(&["lr", "--lambda", "[1]", "--delta", "[1]"]).1, "{\"[1,1]\":1,\"[2]\":1}\n");
    assert_eq!(surjalg(&["lr", "--lambda", "[2,1]", "--delta", "[2,1]", "--gamma", "[3,2,1]"]).1, "{\"[3,2,1]\":2}\n");
    let (code, out, _) = surjalg(&["homchar", "--r", "2", "--k", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"degrees\":[1,2],\"values\":[1,1]}\n");
    let (_, out, _) = surjalg(&["decompose", "{\"degrees\":[2],\"values\":[0,2]}"]);
    assert_eq!(out, "{\"[2]\":1,\"[1,1]\":1}\n");
    let (_, out, _) = surjalg(&["resolve", "--n", "2", "--partition", "[2]"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["terms"], serde_json::json!([[0, 0, 1, 0], [0, 1, 0, 0]]));
}
