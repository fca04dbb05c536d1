use std::io::Write as _;

use jonesrep::cli::dispatch;

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = dispatch(
        std::iter::once("jonesrep").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn temp_json(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn documented_examples() {
    assert_eq!(run(&["dim", "5", "1"]).1, "5\n");
    assert_eq!(run(&["dim", "0", "0"]).1, "1\n");
    assert_eq!(run(&["dim", "4", "0", "3"]).1, "1\n");
    let (code, out, _) = run(&["charpoly", "4", "2", "[2,2 3 3 3 2 -1]"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.trim(),
        "(x - 1) * (x^2 + (t^3 - 3*t^2 + 6*t - 7 + 6*t^-1 - 3*t^-2 + t^-3)*x + (1))"
    );
}

#[test]
fn parameter_modes() {
    assert_eq!(
        run(&["--root-of-unity", "10", "image-order", "3", "1"]).1,
        "order 60, simple: true\n"
    );
    assert_eq!(
        run(&["--theta", "1/5", "image-order", "3", "1"]).1,
        "order 60, simple: true\n"
    );
    let (code, out, _) = run(&[
        "--root-of-unity",
        "10",
        "elliptic",
        "4",
        "2",
        "[2,2 3 3 3 2 -1]",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("angle_degrees: 96.7786"), "{out}");
    let (_, out, _) = run(&["--trace-cos", "7", "elliptic", "4", "2", "[2,2 3 3 3 2 -1]"]);
    assert!(out.contains("degree_bound: 6"), "{out}");
    let (code, out, _) = run(&["--t-rational", "-2", "discrete"]);
    assert_eq!(code, 0);
    assert!(out.contains("discrete: true"), "{out}");
    let (_, out, _) = run(&["--trace", "29/10", "discrete"]);
    assert!(out.contains("discrete: false"), "{out}");
}

#[test]
fn representation_commands() {
    let (code, out, _) = run(&["basis", "4", "0"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
    let (code, out, _) = run(&["matrix", "4", "0", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
    assert_eq!(run(&["gram", "3", "1"]).0, 0);
    assert_eq!(run(&["fingerprint", "5", "1"]).0, 0);
    let (code, out, _) = run(&["connectivity", "4", "2", "--adjoint"]);
    assert_eq!(code, 0);
    assert!(out.contains("strongly_connected: true"), "{out}");
    let (code, out, _) = run(&["irreducible", "4", "0"]);
    assert_eq!(code, 0);
    assert!(out.contains("Irreducible"), "{out}");
    let (code, out, _) = run(&["cob", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("identity holds: true"), "{out}");
}

#[test]
fn file_inputs() {
    let pd = temp_json("[[1,1,2,2]]");
    let (code, out, _) = run(&["bracket", pd.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "-s^5 - s");

    let edge =
        temp_json(r#"{"vertices": 2, "edges": [[0, 1, "3"]], "rotations": {"0": [0], "1": [0]}}"#);
    let (code, out, _) = run(&["potts", edge.path().to_str().unwrap(), "--colors", "5"]);
    assert_eq!(code, 0);
    // n (n - 1 + y) at n = 5, y = 3
    assert_eq!(out, "Z = 35\noracle = 35\n");
    let (code, out, _) = run(&[
        "--json",
        "--t-rational",
        "16",
        "potts",
        edge.path().to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("z_oracle"), "{out}");

    let k5 = temp_json(
        r#"{"vertices": 5, "edges": [[0,1,"2"],[0,2,"2"],[0,3,"2"],[0,4,"2"],[1,2,"2"],[1,3,"2"],[1,4,"2"],[2,3,"2"],[2,4,"2"],[3,4,"2"]]}"#,
    );
    assert_eq!(
        run(&["potts", k5.path().to_str().unwrap(), "--colors", "2"]).0,
        1
    );
    assert_eq!(run(&["bracket", "/nonexistent/file.json"]).0, 1);
}

#[test]
fn errors_and_determinism() {
    assert_eq!(run(&["dim", "x", "1"]).0, 2);
    assert_eq!(run(&["--theta", "1/5", "--trace", "3", "discrete"]).0, 2);
    assert_eq!(run(&["--root-of-unity", "5", "basis", "5", "5"]).0, 1);
    assert_eq!(run(&["--trace", "3", "basis", "4", "0"]).0, 1);
    assert_eq!(run(&["--t-rational", "2", "basis", "4", "0"]).0, 1);
    let a = run(&["--json", "connectivity", "4", "2", "--adjoint"]);
    assert_eq!(a, run(&["--json", "connectivity", "4", "2", "--adjoint"]));
    let v: serde_json::Value = serde_json::from_str(&a.1).unwrap();
    assert_eq!(v["strongly_connected"], serde_json::Value::Bool(true));
}

#[test]
fn selftest_single_criterion() {
    let (code, out, _) = run(&["selftest", "--only", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("[PASS]"));
    assert_eq!(run(&["selftest", "--only", "12"]).0, 1);
}
