use std::path::PathBuf;
use std::process::{Command, Output};

use orbitloom_cli::doc::CurveSpecDoc;
use orbitloom_cli::ops::{self, DataFormat, TubeOptions};
use orbitloom_core::export::SvgStyle;
use orbitloom_core::{Point3, Rational};

fn orbitloom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbitloom"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> Vec<u8> {
    let out = orbitloom(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn eq3_doc(a: i64, b: i64, c: f64) -> CurveSpecDoc {
    CurveSpecDoc::eq3(Rational::from_integer(a), Rational::from_integer(b), c)
}

#[test]
fn symmetry_line() {
    assert_eq!(
        stdout(&["symmetry", "--eq3", "6,14,1"]),
        b"order=5 angle=1.256637 residual<1e-9\n"
    );
    assert_eq!(
        stdout(&["symmetry", "--eq3", "10,14,1"]),
        b"order=3 angle=2.094395 residual<1e-9\n"
    );
}

#[test]
fn symmetry_json_report() {
    let v: serde_json::Value =
        serde_json::from_slice(&stdout(&["symmetry", "--eq3", "7,17,1", "--json"])).unwrap();
    assert_eq!(v["order"], 6);
    assert_eq!(v["verified"], true);
}

#[test]
fn spec_file_agrees_with_flag() {
    let path = scratch("eq3.json");
    std::fs::write(&path, serde_json::to_vec(&eq3_doc(6, 14, 1.0)).unwrap()).unwrap();
    let from_file = stdout(&["symmetry", "--spec", path.to_str().unwrap()]);
    assert_eq!(from_file, stdout(&["symmetry", "--eq3", "6,14,1"]));
}

#[test]
fn validation_errors_exit_2() {
    for args in [
        &["symmetry", "--eq3", "6.5,14,1"][..],
        &["symmetry", "--eq3", "6,14"],
        &["curve", "sample", "--eq3", "6,14,1", "--range", "0"],
        &["export", "stl", "--eq3", "6,14,1", "--around", "2"],
        &["orbit", "chain", "--links", "1,0,+1"],
        &["symmetry"],
    ] {
        let out = orbitloom(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn missing_file_is_not_a_validation_error() {
    let out = orbitloom(&["symmetry", "--spec", "/nonexistent/spec.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sample_matches_library_bytes() {
    let got = stdout(&[
        "curve", "sample", "--eq3", "6,14,1", "--n", "33", "--range", "-1,2.5", "--format", "json",
    ]);
    let built = eq3_doc(6, 14, 1.0).build(None).unwrap();
    let line = ops::sample(&built, 33, Some([-1.0, 2.5])).unwrap();
    let mut want = Vec::new();
    ops::write_samples(&line, DataFormat::Json, &mut want).unwrap();
    assert_eq!(got, want);

    let csv = stdout(&["curve", "sample", "--eq3", "6,14,1", "--n", "2"]);
    let text = String::from_utf8(csv).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert!(text.starts_with("u,x,y\n0,1.3333333333333333,0.5\n"));
}

#[test]
fn sample_with_drift_has_three_coordinates() {
    let text = String::from_utf8(stdout(&[
        "curve", "sample", "--eq3", "6,14,1", "--n", "4", "--drift", "0,0,1",
    ]))
    .unwrap();
    assert!(text.starts_with("u,x,y,z\n"));
}

#[test]
fn stl_size_with_and_without_drift() {
    let expected = 84 + 50 * (2 * 16 * 512);
    for drift in [Some("0,0,0.3"), None] {
        let path = scratch(&format!("tube-{}.stl", drift.is_some()));
        let mut args = vec![
            "export",
            "stl",
            "--eq3",
            "6,14,1",
            "--tube-radius",
            "0.05",
            "--around",
            "16",
            "--along",
            "512",
        ];
        if let Some(d) = drift {
            args.extend(["--drift", d]);
        }
        args.extend(["-o", path.to_str().unwrap()]);
        assert!(stdout(&args).is_empty());
        let bytes = std::fs::read(&path).unwrap();
        assert_eq!(bytes.len(), expected);

        let mut built = eq3_doc(6, 14, 1.0).build(None).unwrap();
        built.drift = drift.map(|_| Point3::new(0.0, 0.0, 0.3));
        let opts = TubeOptions {
            radius: 0.05,
            around: 16,
            along: 512,
            unit_scale: 1.0,
        };
        assert_eq!(bytes, ops::stl(&built, &opts).unwrap());
    }
}

#[test]
fn svg_to_file_matches_stdout() {
    let path = scratch("eq3.svg");
    stdout(&[
        "export",
        "svg",
        "--eq3",
        "6,14,1",
        "--arcs",
        "7",
        "-o",
        path.to_str().unwrap(),
    ]);
    let from_stdout = stdout(&["export", "svg", "--eq3", "6,14,1", "--arcs", "7"]);
    assert_eq!(std::fs::read(&path).unwrap(), from_stdout);
    let built = eq3_doc(6, 14, 1.0).build(None).unwrap();
    assert_eq!(
        from_stdout,
        ops::svg(&built, Some(7), None, &SvgStyle::default()).unwrap()
    );
    assert_eq!(
        String::from_utf8(from_stdout)
            .unwrap()
            .matches("<path")
            .count(),
        7
    );
}

#[test]
fn orbit_chain_output_feeds_symmetry() {
    let doc = stdout(&[
        "orbit",
        "chain",
        "--links",
        "1.523679,1.8808,+1",
        "--view",
        "Earth",
        "--max-denominator",
        "10",
    ]);
    let path = scratch("mars.json");
    std::fs::write(&path, &doc).unwrap();
    let line = String::from_utf8(stdout(&["symmetry", "--spec", path.to_str().unwrap()])).unwrap();
    assert!(line.starts_with("order=7 "), "{line}");
}

#[test]
fn orbit_chain_with_observer_file() {
    let observer = scratch("observer.json");
    std::fs::write(
        &observer,
        r#"[{"radius": 1.0, "period": 1.0, "direction": 1}]"#,
    )
    .unwrap();
    let doc = stdout(&[
        "orbit",
        "chain",
        "--links",
        "1,1,+1;0.3,0.25,-1",
        "--view",
        observer.to_str().unwrap(),
    ]);
    let v: serde_json::Value = serde_json::from_slice(&doc).unwrap();
    let comps = v["components"].as_array().unwrap();
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[0]["freq_num"], -4);
}

#[test]
fn kepler3_table() {
    let text = String::from_utf8(stdout(&["orbit", "kepler3"])).unwrap();
    assert_eq!(text.lines().count(), 10);
    assert!(text
        .lines()
        .any(|l| l.starts_with("Earth") && l.ends_with("1.000000")));
    assert!(text.ends_with("max_deviation=0.014800\n"));
}
