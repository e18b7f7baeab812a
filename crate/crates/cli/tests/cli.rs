use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diffschub")).args(args).env_remove("DIFFSCHUB_CACHE").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn lr_verifies() {
    let o = run(&["lr", "2,1", "2,1", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("3,2,1: 2"));
}

#[test]
fn apply_nabla() {
    let o = run(&["apply", "--basis", "partition", "--op", "nabla", "--elem", "1*4,3,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3 * 3,3,1\n1 * 4,2,1\n-2 * 4,3\n");
}

#[test]
fn apply_on_permutations() {
    let o = run(&["apply", "--basis", "permutation", "--op", "rho(2)", "--elem", "3,1,2@1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 * @0\n");
}

#[test]
fn identities_pass() {
    for kind in ["jt-h", "jt-e", "giambelli"] {
        let o = run(&["identity", kind, "3,2"]);
        assert_eq!(o.status.code(), Some(0), "{kind}");
        assert!(stdout(&o).contains("pass"));
    }
}

#[test]
fn usage_errors_exit_two() {
    let o = run(&["apply", "--basis", "partition", "--op", "xi(", "--elem", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 3"));
    assert_eq!(run(&["lr", "2,x", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["mult-ss", "--partition", "1", "--perm", "1,1@0"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["mult-ss", "--partition", "2,1", "--perm", "3,1,4,2@1", "--json"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["expansion"]["basis"], "permutation");
}

#[test]
fn product_verification_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.json");
    let o = Command::new(env!("CARGO_BIN_EXE_diffschub"))
        .args(["mult-ss", "--partition", "1", "--perm", "0,1,-1@-1", "--verify"])
        .env("DIFFSCHUB_CACHE", &cache)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("polynomial oracle: pass"));
    assert!(cache.exists());
    let again = run(&["mult-ss", "--partition", "1", "--perm", "0,1,-1@-1", "--cache", cache.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(0));
    std::fs::write(&cache, r#"{"version": 99, "entries": []}"#).unwrap();
    let stale = run(&["mult-ss", "--partition", "1", "--perm", "2,1@1", "--cache", cache.to_str().unwrap()]);
    assert_eq!(stale.status.code(), Some(1));
}

#[test]
fn stanley_verifies() {
    let o = run(&["stanley", "--perm", "2,1,4,3@1", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("1 * 1,1\n1 * 2\n"));
}

#[test]
fn scaled_suite_and_bench() {
    let o = run(&["suite", "--max-size", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 13);
    let dir = tempfile::tempdir().unwrap();
    for kind in ["lr", "mult-ss"] {
        let csv = dir.path().join(format!("{kind}.csv"));
        let b = run(&["bench", kind, "--max-size", "4", "--csv", csv.to_str().unwrap()]);
        assert_eq!(b.status.code(), Some(0));
        let table = std::fs::read_to_string(&csv).unwrap();
        assert_eq!(table.lines().count(), 5);
        assert!(table.lines().skip(1).all(|l| l.ends_with(",true")));
    }
}
