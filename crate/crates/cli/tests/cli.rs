use std::path::PathBuf;

use punctual::file::parse_ideal_file;

fn corpus(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "corpus", name].iter().collect();
    p.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("punctual").chain(args.iter().copied());
    let code = punctual::run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn hilb_of_zero_ideal() {
    let (code, out, _) = run(&["hilb", &corpus("zero_n2.ideal"), "--up-to", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 2 3 4\n");
}

#[test]
fn truncate_below_bound_is_usage_error() {
    let (code, out, err) = run(&["truncate", &corpus("twisted_cubic.ideal"), "--m", "2"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("reg + 2 = 4"), "{err}");
}

#[test]
fn verify_reports_bijection() {
    let (code, out, _) = run(&["verify-prop31", &corpus("twisted_cubic.ideal"), "--m", "4", "--json", "-"]);
    assert_eq!(code, 0);
    let json = &out[out.find('{').unwrap()..];
    let v: serde_json::Value = serde_json::from_str(json).unwrap();
    assert_eq!(v["result"]["comparison"]["tangent_bijective"], true);
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["input"]["parameters"]["m"], 4);
}

#[test]
fn truncate_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["twisted_cubic.ideal", "quadric_cone.ideal", "max_sq_n3.ideal", "zero_n2.ideal"] {
        let out = dir.path().join(name);
        let (code, _, err) = run(&["truncate", &corpus(name), "--m", "5", "-o", out.to_str().unwrap()]);
        assert_eq!(code, 0, "{err}");
        let written = std::fs::read_to_string(&out).unwrap();
        let first = parse_ideal_file(&written).unwrap();
        let again = parse_ideal_file(&punctual::file::write_ideal_file(&first.ideal)).unwrap();
        assert_eq!(first.ideal.generators(), again.ideal.generators(), "{name}");
        let gamma = punctual_core::strata::truncate_ideal(
            &parse_ideal_file(&std::fs::read_to_string(corpus(name)).unwrap()).unwrap().ideal,
            5,
            false,
        )
        .unwrap();
        assert_eq!(first.ideal.generators(), gamma.generators(), "{name}");
    }
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = ["cone-curve", &corpus("quadric_cone.ideal"), "--m", "4", "--seed", "9", "--json", "-"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
}

#[test]
fn parse_errors_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ideal");
    std::fs::write(&bad, "vars x y\nideal:\nx^2 + y\n").unwrap();
    let (code, _, err) = run(&["gb", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3") && err.contains("generator 1"), "{err}");

    std::fs::write(&bad, "field 10\nvars x\nideal:\nx\n").unwrap();
    assert_eq!(run(&["gb", bad.to_str().unwrap()]).0, 2);
    assert_eq!(run(&["gb", "/nonexistent/file.ideal"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
}

#[test]
fn exhausted_trials_is_computation_error() {
    let (code, _, err) =
        run(&["cone-curve", &corpus("zero_n3.ideal"), "--m", "2", "--seed", "1", "--trials", "0"]);
    assert_eq!(code, 3);
    assert!(err.contains("0 trial"), "{err}");
}

#[test]
fn forced_small_m_fails_checks() {
    let (code, out, _) = run(&["verify-prop31", &corpus("twisted_cubic.ideal"), "--m", "2", "--force"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL"));
}

#[test]
fn res_json_lists_entries() {
    let (code, out, _) = run(&["res", &corpus("ci_2_2.ideal"), "--json", "-"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out[out.find('{').unwrap()..]).unwrap();
    assert_eq!(v["result"], serde_json::json!([{"i": 0, "j": 2, "beta": 2}, {"i": 1, "j": 4, "beta": 1}]));
}

#[test]
fn oracle_commands() {
    assert_eq!(run(&["oracle", "hilb", &corpus("twisted_cubic.ideal"), "--up-to", "4"]).1, "1 4 7 10 13\n");
    assert_eq!(run(&["oracle", "tangent", &corpus("twisted_cubic.ideal")]).1, "12\n");
    let (_, syz, _) = run(&["oracle", "syz", &corpus("twisted_cubic.ideal"), "--bound", "3"]);
    assert!(syz.ends_with("3: 2\n"), "{syz}");
}

#[test]
fn modulus_from_environment() {
    // the only test touching the variable
    std::env::set_var(punctual::file::MODULUS_ENV, "7");
    let f = parse_ideal_file("vars x y\nideal:\nx^2\n").unwrap();
    std::env::remove_var(punctual::file::MODULUS_ENV);
    assert_eq!(f.ring.field().modulus(), 7);
    let explicit = parse_ideal_file("field 11\nvars x\nideal:\nx\n").unwrap();
    assert_eq!(explicit.ring.field().modulus(), 11);
}
