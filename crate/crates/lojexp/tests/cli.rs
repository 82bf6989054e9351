//! End-to-end checks of the command-line interface: the documented
//! examples, JSON round-trips, oracle verification, and exit codes.

use std::io::Write;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lojexp"))
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("lojexp-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim().to_string()
}

#[test]
fn loj_on_diagonal_ideal_prints_seven() {
    let diag = write_temp("diag.json", r#"{"dim":3,"gens":[[2,0,0],[0,7,0],[0,0,3]]}"#);
    let m = write_temp("m3.json", r#"{"dim":3,"gens":[[1,0,0],[0,1,0],[0,0,1]]}"#);
    let out = bin()
        .args(["loj", "--a", diag.to_str().unwrap(), "--b", m.to_str().unwrap(), "--verify"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "7");
}

#[test]
fn theta_of_m_cubed_is_rigid_one() {
    let mk = write_temp("mk.json", r#"{"dim":2,"gens":[[3,0],[2,1],[1,2],[0,3]]}"#);
    let plain = bin()
        .args(["theta", "--ideal", mk.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(plain.status.success());
    assert_eq!(stdout(&plain), "1");
    let json = bin()
        .args(["theta", "--ideal", mk.to_str().unwrap(), "--json"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["theta"], "1");
    assert_eq!(v["rigid"], true);
}

#[test]
fn family_analyze_reports_the_wall() {
    let fam = write_temp(
        "ex97.json",
        r#"{"candidates":[
            {"label":[3,2],"a0":"12","a1":"0","b0":"7","b1":"3"},
            {"label":[1,1],"a0":"5","a1":"0","b0":"3","b1":"1"}
        ]}"#,
    );
    let out = bin()
        .args(["family", "walls", fam.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1/3");
    let json = bin()
        .args(["family", "analyze", fam.to_str().unwrap(), "--json"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["walls"][0]["value"], "1/3");
    assert_eq!(v["chambers"][0]["maximizers"][0], "(3,2)");
    assert_eq!(v["chambers"][1]["maximizers"][0], "(1,1)");
    assert_eq!(v["l_continuous"], true);
    assert_eq!(v["inv_l_affine"], false);
}

#[test]
fn closure_output_reparses_to_equal_values() {
    let i = write_temp("i23.json", r#"{"dim":2,"gens":[[2,0],[0,3]]}"#);
    let out = bin()
        .args(["closure", "--ideal", i.to_str().unwrap(), "--verify"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["gens"], serde_json::json!([[0, 3], [1, 2], [2, 0]]));
    // Feed the emitted ideal back through the CLI.
    let again = write_temp("i23-closure.json", &text);
    let out2 = bin()
        .args(["closure", "--ideal", again.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(stdout(&out2), text);
}

#[test]
fn member_and_contain_with_verification() {
    let a = write_temp("a.json", r#"{"dim":2,"gens":[[4,0],[2,3],[0,5]]}"#);
    let m = write_temp("m2.json", r#"{"dim":2,"gens":[[1,0],[0,1]]}"#);
    let out = bin()
        .args(["member", "--ideal", a.to_str().unwrap(), "--point", "1,4", "--verify"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "true");

    let out = bin()
        .args([
            "contain", "--b", m.to_str().unwrap(), "--q", "5", "--a", a.to_str().unwrap(),
            "--p", "1", "--verify", "--json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["member"], true);

    let out = bin()
        .args([
            "contain", "--b", m.to_str().unwrap(), "--q", "4", "--a", a.to_str().unwrap(),
            "--p", "1", "--json",
        ])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["member"], false);
    assert_eq!(v["witness"]["kind"], "violated_facet");
}

#[test]
fn lct_with_diagonal_verification() {
    let i = write_temp("lct.json", r#"{"dim":2,"gens":[[2,0],[0,3]]}"#);
    let out = bin()
        .args(["lct", "--input", i.to_str().unwrap(), "--verify"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "5/6");
    // Filtration form of the staircase region.
    let f = write_temp(
        "lin.json",
        r#"{"kind":"linear","dim":2,"constraints":[{"w":[1,2],"c":"3"}]}"#,
    );
    let out = bin()
        .args(["lct", "--input", f.to_str().unwrap(), "--verify"])
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "1");
}

#[test]
fn mixed_and_milnor_outputs() {
    let i = write_temp("mi.json", r#"{"dim":2,"gens":[[2,0],[0,3]]}"#);
    let m = write_temp("mm.json", r#"{"dim":2,"gens":[[1,0],[0,1]]}"#);
    let out = bin()
        .args(["mixed", "--i", i.to_str().unwrap(), "--j", m.to_str().unwrap(), "--json"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["e"], serde_json::json!([1, 2, 6]));
    assert_eq!(v["stable"], true);

    let out = bin()
        .args(["milnor", "--exponents", "3,4", "--json"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["mu"], 6);
    assert_eq!(v["gradient_loj"], "3");
}

#[test]
fn sharpness_and_infinity_commands() {
    let out = bin().args(["sharpness", "--weights", "1,1"]).output().unwrap();
    assert_eq!(stdout(&out), "N=3 p=1 q=3");

    let map = write_temp(
        "deg.json",
        r#"{"n":2,"components":[
            [{"exp":[1,0],"coeff":"1"},{"exp":[0,1],"coeff":"1"}],
            [{"exp":[1,0],"coeff":"1"},{"exp":[0,1],"coeff":"1"}]
        ]}"#,
    );
    let out = bin()
        .args(["infinity-check", "--map", map.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "degenerate");

    let table = write_temp(
        "table.json",
        r#"{"rows":[{"label":"E1","ordX":1,"ordY":0},{"label":"E2","ordX":1,"ordY":5}]}"#,
    );
    let out = bin()
        .args(["infinity-min", "--table", table.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "0");
    let out = bin()
        .args(["infinity-min", "--table", table.to_str().unwrap(), "--labels", "E2"])
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "5");
}

#[test]
fn exit_codes() {
    // Invalid input -> 2.
    let bad = write_temp("bad.json", r#"{"not": "an ideal"}"#);
    let out = bin()
        .args(["facets", "--ideal", bad.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Unsupported dimension -> 3.
    let dim5 = write_temp(
        "dim5.json",
        r#"{"dim":5,"gens":[[1,0,0,0,0],[0,1,0,0,0],[0,0,1,0,0],[0,0,0,1,0],[0,0,0,0,1]]}"#,
    );
    let out = bin()
        .args(["facets", "--ideal", dim5.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    // Unsupported family action -> 3.
    let fam = write_temp(
        "fam1.json",
        r#"{"candidates":[{"label":"u","a0":"1","a1":"0","b0":"1","b1":"0"}]}"#,
    );
    let out = bin()
        .args(["family", "plot", fam.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn selftest_smoke_seeded() {
    // A tiny deterministic smoke via the library; the CLI selftest runs the
    // full suites and is exercised by the acceptance criterion instead.
    let out = bin().args(["facets", "--ideal", write_temp(
        "facets.json",
        r#"{"dim":2,"gens":[[5,0],[2,3],[0,7]]}"#,
    ).to_str().unwrap()]).output().unwrap();
    assert_eq!(stdout(&out), "(1,1)>=5 (2,1)>=7");
}
