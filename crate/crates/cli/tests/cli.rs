//! Exercises the CLI surface: verbs, exit codes, batch mode, and file output.

use std::process::{Command, Output};

fn tropdiff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tropdiff"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn parse_errors_exit_two() {
    let out = tropdiff(&["vert", "", "--m", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = tropdiff(&["vert", "t^2 ++ u", "--m", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = tropdiff(&["member", "--set", "{not json", "--point", "(1,1)", "--m", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dimension_errors_exit_three() {
    let out = tropdiff(&["vert", "t3 + t1", "--m", "2"]);
    assert_eq!(out.status.code(), Some(3));
    // weight count must match the number of indeterminates
    let out = tropdiff(&["tropw", "x1[(0,0)]*x2[(0,0)]", "--weight", "omega", "--m", "2"]);
    assert_eq!(out.status.code(), Some(3));
    let out = tropdiff(&["plot", "t1 + t2 + t3", "--m", "3"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn member_and_cmp_verbs() {
    let out = tropdiff(&[
        "member",
        "--set",
        r#"{"dim":2,"points":[],"cones":[[1,1]]}"#,
        "--point",
        "(2,3)",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), r#"{"contains":true}"#);

    let out = tropdiff(&["member", "--set", "t + u", "--point", "(1,1)", "--newton"]);
    assert_eq!(stdout(&out).trim(), r#"{"contains":true}"#);
    let out = tropdiff(&["member", "--set", "t + u", "--point", "(1,1)"]);
    assert_eq!(stdout(&out).trim(), r#"{"contains":false}"#);

    let out = tropdiff(&["cmp", "t*u", "t + u", "--m", "2"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["leq"], serde_json::json!(true));
    assert_eq!(v["prec"], serde_json::json!(true));
    assert_eq!(v["eq"], serde_json::json!(false));
}

#[test]
fn batch_results_keep_input_order() {
    fn args(jobs: &str) -> Vec<&str> {
        vec![
            "vert", "t^2 + t*u + u^3", "t + u", "t*u + t^3", "u^4 + t^2*u", "--m", "2",
            "--jobs", jobs,
        ]
    }
    let sequential = tropdiff(&args("1"));
    let parallel = tropdiff(&args("4"));
    assert!(sequential.status.success());
    assert_eq!(sequential.stdout, parallel.stdout);
    assert_eq!(stdout(&sequential).lines().count(), 4);
    assert_eq!(
        stdout(&sequential).lines().next().unwrap(),
        "[[0,3],[1,1],[2,0]]"
    );
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("tropdiff-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("plot.svg");
    let out = tropdiff(&[
        "plot",
        "t^2 + t*u + u^3",
        "--m",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn arithmetic_verbs_round_trip() {
    let out = tropdiff(&["mul", "t + u", "t - u", "--m", "2"]);
    assert_eq!(stdout(&out).trim(), "t1^2 - t2^2");
    let out = tropdiff(&["add", "t + u", "t - u", "--m", "2", "--pretty"]);
    assert_eq!(stdout(&out).trim(), "2*t");
    let out = tropdiff(&["deriv", "t^2*u", "--by", "(1,0)", "--m", "2"]);
    assert_eq!(stdout(&out).trim(), "2*t1*t2");
    let out = tropdiff(&["deriv", "omega", "--by", "(1,1)", "--bool", "--m", "2"]);
    assert_eq!(
        stdout(&out).trim(),
        r#"{"cones":[[0,0]],"dim":2,"points":[]}"#
    );
    let out = tropdiff(&["add", "t + u", "u^2", "--kind", "bool", "--m", "2"]);
    assert_eq!(
        stdout(&out).trim(),
        r#"{"cones":[],"dim":2,"points":[[0,1],[0,2],[1,0]]}"#
    );
}

#[test]
fn tropw_shapes_follow_coefficients() {
    let out = tropdiff(&["tropw", "x1[(1)] + t1*x1[(0)] + t1^3", "--weight", "omega"]);
    assert_eq!(stdout(&out).trim(), "[[0]]");
    let out = tropdiff(&["tropw", "(1)/(t1)*x1[(0)]", "--weight", "1"]);
    assert_eq!(stdout(&out).trim(), r#"{"den":[[1]],"num":[[0]]}"#);
}

#[test]
fn translate_lands_integral() {
    let out = tropdiff(&["translate", "x1[(0)] + x1[(1)]", "--weight", "t1"]);
    assert_eq!(stdout(&out).trim(), "t1*x1[(0)] + x1[(1)]");
}
