//! End-to-end behaviour of the command-line surface.

use std::path::PathBuf;
use std::process::Command;

use latcover_cli::{run, CommandResult, Status};
use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn call(args: &[&str], stdin: &str) -> (CommandResult, i32, String) {
    let mut argv = vec!["latcover"];
    argv.extend_from_slice(args);
    let out = run(argv, &mut stdin.as_bytes());
    let parsed: CommandResult = serde_json::from_str(&out.stdout).expect("envelope parses");
    (parsed, out.code, out.stdout)
}

#[test]
fn cube_is_normal() {
    let (r, code, _) = call(&["is-normal", &fixture("cube.json")], "");
    assert_eq!((r.status, code), (Status::Ok, 0));
    assert_eq!(r.payload["normal"], Value::Bool(true));
}

#[test]
fn reeve_tetrahedron_is_not_very_ample() {
    let (r, code, _) = call(&["is-very-ample", &fixture("reeve.json")], "");
    assert_eq!((r.status, code), (Status::Fail, 1));
    let w = &r.payload["witness"];
    assert_eq!(w["vertex_index"], 0);
    assert_eq!(w["point"], serde_json::json!(["1", "1", "1"]));
    let (r, code, _) = call(&["boundary-cover", &fixture("reeve.json")], "");
    assert_eq!((r.status, code), (Status::Fail, 1));
    assert_eq!(r.payload["witness"]["point"], serde_json::json!(["1", "1", "1"]));
}

#[test]
fn counterexample_in_dimension_six() {
    let (r, code, _) = call(&["verify-counterexample", "--d", "6"], "");
    assert_eq!((r.status, code), (Status::Ok, 0));
    assert_eq!(r.payload["target"], serde_json::json!(vec!["5/2"; 6]));
    assert_eq!(r.payload["representable"], Value::Bool(false));
    assert_eq!(r.payload["lattice_points"], 76);
    let (r, code, _) = call(&["verify-counterexample", "--d", "7"], "");
    assert_eq!((r.status, code), (Status::Error, 2));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let (r, code, _) = call(&["hull"], "{\"vertices\": [[0, 0]");
    assert_eq!((r.status, code), (Status::Error, 2));
    assert!(r.diagnostics[0].contains("malformed"));
    let (_, code, _) = call(&["hull"], "{\"vertices\": [[\"1/0\", 0]]}");
    assert_eq!(code, 2);
    let out = run(["latcover", "no-such-command"], &mut "".as_bytes());
    assert_eq!(out.code, 2);
    let out = run(["latcover", "is-normal", "--jobs", "0"], &mut "".as_bytes());
    assert_eq!(out.code, 2);
}

#[test]
fn envelopes_round_trip_and_are_deterministic() {
    let ball = std::fs::read_to_string(fixture("unit_ball.json")).unwrap();
    let (reeve, cone) = (fixture("reeve.json"), fixture("cone.json"));
    let cases: Vec<(Vec<&str>, String)> = vec![
        (vec!["hull", &reeve], String::new()),
        (vec!["ellipsoid-points"], ball.clone()),
        (vec!["peel-chain"], ball.clone()),
        (vec!["stack", "--b", "5/4"], ball.clone()),
        (vec!["hilbert-basis", &cone], String::new()),
        (vec!["gp", &reeve], String::new()),
        (vec!["build-qd", "--d", "5"], String::new()),
    ];
    for (args, input) in cases {
        let (first, code, text) = call(&args, &input);
        assert_eq!(code, 0, "{args:?}: {text}");
        let again = serde_json::to_string_pretty(&first).unwrap() + "\n";
        assert_eq!(again, text, "{args:?} does not round-trip");
        let (_, _, second) = call(&args, &input);
        assert_eq!(text, second, "{args:?} is not deterministic");
    }
}

#[test]
fn covers_pipe_into_the_verifier() {
    let ball = std::fs::read_to_string(fixture("unit_ball.json")).unwrap();
    for method in ["chain", "symmetric"] {
        let (r, code, text) = call(&["cover-ellipsoid3", "--method", method], &ball);
        assert_eq!(code, 0);
        assert_eq!(r.payload["verified"], Value::Bool(true));
        let (v, code, _) = call(&["verify-cover"], &text);
        assert_eq!((v.status, code), (Status::Ok, 0));

        let mut cover = r.payload["cover"].clone();
        cover["simplices"].as_array_mut().unwrap().pop();
        let (v, code, _) = call(&["verify-cover"], &cover.to_string());
        assert_eq!((v.status, code), (Status::Fail, 1));
        assert!(v.payload["witness"].is_array());
    }
    let (r, code, text) = call(&["boundary-cover", &fixture("cube.json")], "");
    assert_eq!((r.status, code), (Status::Ok, 0));
    assert_eq!(r.payload["cover"]["scope"], "boundary-neighbourhood");
    let (v, code, _) = call(&["verify-cover"], &text);
    assert_eq!((v.status, code), (Status::Ok, 0));
}

#[test]
fn non_unimodular_simplices_are_rejected() {
    let cover = r#"{
        "target": {"vertices": [[0,0,0],[1,0,0],[0,1,0],[1,1,2]]},
        "points": [[0,0,0],[1,0,0],[0,1,0],[1,1,2]],
        "simplices": [[0,1,2,3]],
        "scope": "full"
    }"#;
    let (r, code, _) = call(&["verify-cover"], cover);
    assert_eq!((r.status, code), (Status::Fail, 1));
    assert_eq!(r.payload["invalid_simplex"], 0);
}

#[test]
fn summary_format_and_corpus_seed() {
    let out = run(["latcover", "--format", "summary", "is-normal", &fixture("cube.json")], &mut "".as_bytes());
    assert!(out.stdout.starts_with("status: ok\n"));
    assert!(out.stdout.contains("normal: true"));
    let a = call(&["corpus", "--kind", "ellipsoids", "--count", "2", "--seed", "9"], "").2;
    let b = call(&["corpus", "--kind", "ellipsoids", "--count", "2", "--seed", "9"], "").2;
    let c = call(&["corpus", "--kind", "ellipsoids", "--count", "2", "--seed", "10"], "").2;
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_latcover");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["is-normal", &fixture("cube.json")]), Some(0));
    assert_eq!(status(&["is-very-ample", &fixture("reeve.json")]), Some(1));
    assert_eq!(status(&["hull", "/definitely/missing.json"]), Some(2));
}
