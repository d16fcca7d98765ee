use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tilecensus"))
        .args(args)
        .env_remove("TILECENSUS_BUDGET")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (v, out.status.code().unwrap())
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_string())
        .collect()
}

fn ints(v: &Value) -> Vec<i128> {
    strings(v).iter().map(|s| s.parse().unwrap()).collect()
}

#[test]
fn genfunc_examples() {
    let (v, code) = json(&["genfunc", "4", "5"]);
    assert_eq!(code, 0);
    assert_eq!(ints(&v["gf"]["num"]), [1, 2, 1]);
    assert_eq!(ints(&v["gf"]["den"]), [1, -3, 1]);
    assert_eq!(v["case_tag"], "EVEN");
    assert_eq!(v["symbol"]["p"], 4);

    let (v, code) = json(&["genfunc", "inf", "3"]);
    assert_eq!(code, 0);
    assert_eq!(ints(&v["gf"]["num"]), [1, 1]);
    assert_eq!(ints(&v["gf"]["den"]), [1, -2]);
    assert_eq!(v["symbol"]["p"], "inf");

    let (v, code) = json(&["genfunc", "3", "5"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "SphericalOutOfScope");
}

#[test]
fn census_examples() {
    let (v, _) = json(&["census", "3", "7", "4"]);
    assert_eq!(ints(&v["series"]), [1, 7, 21, 56, 147]);
    let (v, _) = json(&["census", "6", "3", "4"]);
    assert_eq!(ints(&v["series"]), [1, 3, 6, 9, 12]);
    let (v, _) = json(&["census", "4", "5", "0"]);
    assert_eq!(ints(&v["series"]), [1]);
    let (v, _) = json(&["census", "4", "5"]);
    assert_eq!(v["series"].as_array().unwrap().len(), 21);
}

#[test]
fn census_types_add_up() {
    let (v, _) = json(&["census", "5", "4", "12", "--types"]);
    let total = ints(&v["series"]);
    let t = &v["type_series"];
    let (a, b, c) = (ints(&t["a"]), ints(&t["b"]), ints(&t["c"]));
    for n in 1..=12 {
        assert_eq!(total[n], a[n] + b[n] + c[n]);
    }
}

/// Re-expanding the emitted P/Q by long division reproduces the series.
#[test]
fn gf_round_trips_to_series() {
    for (p, q) in [("4", "5"), ("7", "3"), ("3", "9"), ("inf", "4"), ("6", "6")] {
        let (v, _) = json(&["census", p, q, "25"]);
        let num = ints(&v["gf"]["num"]);
        let den = ints(&v["gf"]["den"]);
        assert_eq!(den[0], 1);
        let mut s: Vec<i128> = Vec::new();
        for n in 0..=25 {
            let mut x = num.get(n).copied().unwrap_or(0);
            for k in 1..den.len().min(n + 1) {
                x -= den[k] * s[n - k];
            }
            s.push(x);
        }
        assert_eq!(s, ints(&v["series"]), "{{{p},{q}}}");
    }
}

#[test]
fn verify_examples() {
    let (v, code) = json(&["verify", "4", "5", "--depth", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["oracle"]["match"], true);

    let (v, code) = json(&["verify", "5", "4", "--depth", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["oracle"]["match"], true);

    let (v, code) = json(&["verify", "3", "6", "--depth", "8"]);
    assert_eq!(code, 0);
    assert_eq!(v["oracle"]["match"], true);
    assert!(v["oracle"]["trusted_depth"].as_u64().unwrap() >= 8);
    assert_eq!(v["oracle"]["first_mismatch"], Value::Null);

    let (v, code) = json(&["verify", "inf", "3", "--depth", "5"]);
    assert_eq!(code, 0);
    assert_eq!(ints(&v["oracle"]["v"]), [1, 3, 6, 12, 24, 48]);
}

#[test]
fn verify_budget_from_flag_and_environment() {
    let (v, code) = json(&["verify", "4", "5", "--budget", "300"]);
    assert_eq!(code, 0);
    assert_eq!(v["oracle"]["budget_exhausted"], true);
    assert!(v["oracle"]["vertices"].as_u64().unwrap() <= 300);

    let out = Command::new(env!("CARGO_BIN_EXE_tilecensus"))
        .args(["verify", "4", "5"])
        .env("TILECENSUS_BUDGET", "300")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["oracle"]["budget"], 300);
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn verify_spherical_exits_two() {
    assert_eq!(run(&["verify", "4", "3"]).status.code(), Some(2));
}

#[test]
fn dump_map_file() {
    let dir = std::env::temp_dir().join(format!("tilecensus-dump-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("map.txt");
    let out = run(&[
        "verify",
        "4",
        "5",
        "--depth",
        "2",
        "--dump-map",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# tilecensus-map v1"));
    assert!(lines.next().unwrap().starts_with("# symbol {4,5}"));
    let origin: Vec<&str> = lines.next().unwrap().split_whitespace().collect();
    assert_eq!(&origin[..4], ["0", "0", "O", "closed"]);
    assert_eq!(origin.len(), 4 + 5);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn asym_examples() {
    let (v, code) = json(&["asym", "4", "5"]);
    assert_eq!(code, 0);
    let lambda = v["growth"]["lambda"].as_f64().unwrap();
    assert!((lambda - 2.618_034_0).abs() < 1e-7);
    assert_eq!(v["growth"]["classification"], "HYPERBOLIC");

    let (v, _) = json(&["asym", "4", "4"]);
    assert_eq!(v["growth"]["classification"], "EUCLIDEAN");
    assert_eq!(v["growth"]["z0"], Value::Null);

    let (v, _) = json(&["asym", "inf", "3"]);
    assert_eq!(v["growth"]["lambda"].as_f64(), Some(2.0));
}

#[test]
fn csv_and_plain_layouts() {
    let out = run(&["census", "4", "4", "3", "--format", "csv"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "n,v\n0,1\n1,4\n2,8\n3,12\n"
    );

    let out = run(&["census", "4", "4", "3", "--format", "plain"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1\n4\n8\n12\n");

    let out = run(&["genfunc", "4", "5", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("part,power,coefficient\nnum,0,1\n"));

    for cmd in [
        vec!["asym", "7", "3"],
        vec!["verify", "7", "3", "--depth", "4"],
    ] {
        let mut args = cmd.clone();
        args.extend(["--format", "csv"]);
        let text = String::from_utf8(run(&args).stdout).unwrap();
        let header = text.lines().next().unwrap();
        assert!(header.contains(','), "{cmd:?}: {header}");
    }
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["census", "4"]).status.code(), Some(1));
    assert_eq!(run(&["genfunc", "x", "5"]).status.code(), Some(1));
    assert_eq!(run(&["genfunc", "2", "5"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["census", "7", "3", "30", "--types"],
        vec!["asym", "5", "5"],
        vec!["verify", "3", "7", "--depth", "5"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout, "{args:?}");
    }
}
