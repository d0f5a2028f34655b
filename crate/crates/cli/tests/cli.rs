use std::process::{Command, Output};

const TAU: &str = "T(1,-5) - t*T(0,1) + t^-3*T(0,5) - t^-8*T(1,-1)";

fn trefoil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trefoil")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn summary(o: &Output) -> serde_json::Value {
    let out = stdout(o);
    let last = out.lines().last().expect("summary line");
    serde_json::from_str(last).expect("summary is JSON")
}

#[test]
fn tau_is_in_the_kernel() {
    let o = trefoil(&["pi", "--expr", TAU]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("0"));
    assert_eq!(summary(&o)["zero"], true);
}

#[test]
fn tau_is_in_the_right_kernel_after_mirroring() {
    let o = trefoil(&["--chirality", "right", "pi", "--expr", "T(1,5) - t^-1*T(0,1) + t^3*T(0,5) - t^8*T(1,1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(summary(&o)["zero"], true);
}

#[test]
fn specialized_action() {
    let o = trefoil(&["--t-value", "-1", "pi", "--expr", "T(0,2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("S(2) - S(0)"));
}

#[test]
fn product_to_sum() {
    let o = trefoil(&["mul", "--expr", "T(1,0)", "--expr", "T(0,1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("t^-1*T(1,-1) + t*T(1,1)"));
}

#[test]
fn type_mismatch_is_an_input_error() {
    let o = trefoil(&["mul", "--expr", "T(1,0)", "--expr", "l"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(summary(&o)["status"], "input_error");
}

#[test]
fn syntax_error_is_an_input_error() {
    let o = trefoil(&["pi", "--expr", "T(1,"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn illegal_specializations() {
    assert_eq!(trefoil(&["--t-value", "0", "pi", "--expr", "T(1,0)"]).status.code(), Some(4));
    assert_eq!(trefoil(&["--t-value", "-1", "aideal", "gens"]).status.code(), Some(4));
    assert_eq!(trefoil(&["--t-value", "2", "classical"]).status.code(), Some(4));
}

#[test]
fn aideal_unit() {
    let o = trefoil(&["aideal", "verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("(-1, -1)"));
    let o = trefoil(&["--chirality", "right", "aideal", "verify"]);
    assert_eq!(stdout(&o).lines().next(), Some("(1, 1)"));
}

#[test]
fn classical_factor() {
    let o = trefoil(&["--t-value", "-1", "classical"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(summary(&o)["factor"], "(l - 1)*(l + m^6)");
}

fn gens_file(name: &str, exprs: &[&str]) -> std::path::PathBuf {
    let mut items = Vec::new();
    for e in exprs {
        let o = trefoil(&["--format", "json", "mul", "--expr", e]);
        let first = stdout(&o).lines().next().unwrap().to_string();
        items.push(serde_json::from_str::<serde_json::Value>(&first).unwrap());
    }
    let path = std::env::temp_dir().join(format!("trefoil-cli-{name}-{}.json", std::process::id()));
    std::fs::write(&path, serde_json::Value::Array(items).to_string()).unwrap();
    path
}

#[test]
fn membership_found_and_not_found() {
    let path = gens_file("member", &[TAU]);
    let p = path.to_str().unwrap();
    let target = format!("T(0,1)*({TAU})");
    let o = trefoil(&["member", "--target", &target, "--gens-file", p, "--bound-p", "0", "--bound-q", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(summary(&o)["replays"], true);
    let o = trefoil(&["member", "--target", "T(0,1)", "--gens-file", p, "--bound-p", "0", "--bound-q", "1"]);
    assert_eq!(o.status.code(), Some(3));
    let _ = std::fs::remove_file(path);
}

#[test]
fn kernel_dimension() {
    let o = trefoil(&["--format", "json", "kernel", "--pmax", "1", "--qmin", "-10", "--qmax", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(summary(&o)["dimension"], 6);
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "kernel", "--pmax", "1", "--qmin", "-8", "--qmax", "2"];
    assert_eq!(trefoil(&args).stdout, trefoil(&args).stdout);
}
