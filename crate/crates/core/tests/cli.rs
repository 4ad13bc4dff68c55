//! End-to-end runs of the `curvefam` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

const CASSINI: &str = "(x^2+y^2+t^2)^2 - 4*t^2*x^2 - s^4";
const LINEAR: &str = "-1 + x^2 + t*(x-y) + s*(x^3-y)";

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("curvefam-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let p = self.0.join(name);
        std::fs::write(&p, text).unwrap();
        p
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn curvefam(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvefam")).args(args).output().unwrap()
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn counts(v: &Value) -> Vec<u64> {
    v["counts"].as_array().unwrap().iter().map(|c| c.as_u64().unwrap()).collect()
}

#[test]
fn cassini_json_and_drawing() {
    let dir = Scratch::new("cassini");
    let input = dir.file("f.txt", CASSINI);
    let svg = dir.0.join("f.svg");
    let v = json_of(&curvefam(&["analyze", "-i", input.to_str().unwrap(), "--svg", svg.to_str().unwrap()]));
    assert_eq!(v["schema"], 1);
    assert_eq!(v["branch"], "generic_R");
    assert_eq!(counts(&v), [1, 12, 12]);
    assert_eq!(v["A_set"].as_array().unwrap().len(), 1);
    let picture = std::fs::read_to_string(svg).unwrap();
    // Ten branch arcs, the two halves of the line t = 0 and the origin.
    assert_eq!(picture.matches("class=\"branch\"").count(), 10);
    assert_eq!(picture.matches("class=\"vertical\"").count(), 2);
    assert_eq!(picture.matches("class=\"point\"").count(), 1);
}

#[test]
fn linear_system_with_labels() {
    let dir = Scratch::new("linear");
    let input = dir.file("f.txt", LINEAR);
    let v = json_of(&curvefam(&["analyze", "-i", input.to_str().unwrap(), "--topology"]));
    assert_eq!(v["branch"], "R_zero_M_ts");
    assert_eq!(counts(&v), [3, 4, 2]);
    for cell in v["cells"].as_array().unwrap() {
        assert_eq!(cell["topology_status"], "labeled");
        let want = [2, 3, 1][cell["dim"].as_u64().unwrap() as usize];
        assert_eq!(cell["components"], want, "{cell}");
    }
}

#[test]
fn renamed_variables_give_the_same_decomposition() {
    let dir = Scratch::new("names");
    let input = dir.file("f.txt", "(u^2+v^2+a^2)^2 - 4*a^2*u^2 - b^4");
    let v = json_of(&curvefam(&[
        "analyze", "-i", input.to_str().unwrap(), "--vars", "u,v", "--params", "a,b",
    ]));
    assert_eq!(counts(&v), [1, 12, 12]);
    assert_eq!(v["variables"]["params"], serde_json::json!(["a", "b"]));
}

#[test]
fn one_parameter_mode() {
    let dir = Scratch::new("one");
    let input = dir.file("f.txt", "x^2 + y^2 - t");
    let v = json_of(&curvefam(&["analyze", "-i", input.to_str().unwrap(), "--one-param", "t"]));
    assert_eq!(v["A_set"].as_array().unwrap().len(), 1);
    assert_eq!(v["cells"].as_array().unwrap().len(), 3);
}

#[test]
fn output_file_matches_standard_output() {
    let dir = Scratch::new("out");
    let input = dir.file("f.txt", LINEAR);
    let path = dir.0.join("out.json");
    let printed = curvefam(&["analyze", "-i", input.to_str().unwrap()]);
    let written = curvefam(&["analyze", "-i", input.to_str().unwrap(), "-o", path.to_str().unwrap()]);
    assert!(written.status.success());
    assert_eq!(printed.stdout, std::fs::read(path).unwrap());
}

#[test]
fn parse_errors_exit_with_2() {
    let dir = Scratch::new("parse");
    let input = dir.file("f.txt", "x^2 + ");
    let out = curvefam(&["analyze", "-i", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "parse error");
    assert_eq!(err["offset"], 6);
}

#[test]
fn missing_input_exits_with_4() {
    let out = curvefam(&["analyze", "-i", "/nonexistent/curvefam/input.txt"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn hypothesis_failures_exit_with_3() {
    let dir = Scratch::new("hyp");
    let input = dir.file("f.txt", "(t - s)*(x^2 + y^2 - 1)");
    let out = curvefam(&["analyze", "-i", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}
