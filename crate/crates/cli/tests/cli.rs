use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arctype"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("arctype-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn construct_to(spec: &str, name: &str) -> String {
    let path = tmp(name);
    let o = run(&["construct", spec, "--out", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path.to_str().unwrap().to_string()
}

#[test]
fn analyze_holt() {
    let path = construct_to("named:holt", "holt.txt");
    let o = run(&["analyze", &path]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("arc-type: (2+2)\n"), "{s}");
    assert!(s.contains("half-arc-transitive: yes\n"), "{s}");
    assert!(s.contains("aut-order: 54\n"), "{s}");
}

#[test]
fn analyze_prism() {
    let path = construct_to("named:prism", "prism.txt");
    let s = stdout(&run(&["analyze", &path]));
    assert!(s.contains("arc-type: 2+1\n"), "{s}");
}

#[test]
fn analyze_path_requires_vt() {
    let path = tmp("p4.txt");
    std::fs::write(&path, "4 3\n0 1\n1 2\n2 3\n").unwrap();
    let p = path.to_str().unwrap();
    let o = run(&["analyze", p]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("arc-type: not vertex-transitive"));
    let o = run(&["analyze", p, "--require-vt"]);
    assert!(!o.status.success());
}

#[test]
fn analyze_rejects_bad_input() {
    let path = tmp("bad.txt");
    std::fs::write(&path, "3 2\n0 1\n").unwrap();
    assert!(!run(&["analyze", path.to_str().unwrap()]).status.success());
    let path = tmp("disconnected.txt");
    std::fs::write(&path, "4 2\n0 1\n2 3\n").unwrap();
    let o = run(&["analyze", path.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(stdout(&o).contains("connected: no"));
}

#[test]
fn factor_k4_k2() {
    let path = construct_to("named:k4xk2", "k4k2.txt");
    let s = stdout(&run(&["factor", &path]));
    assert!(s.contains("factors: K4, K2\n"), "{s}");
    assert!(s.contains("certificate: ok\n"), "{s}");
    let path = construct_to("named:petersen", "petersen.txt");
    assert!(stdout(&run(&["factor", &path])).contains("prime: yes\n"));
}

#[test]
fn count_types_last_line() {
    let o = run(&["count-types", "10"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert_eq!(s.lines().count(), 10);
    assert_eq!(s.lines().last(), Some("10, 42, 118"));
    assert_eq!(s.lines().next(), Some("1, 1, 1"));
}

#[test]
fn table1_passes() {
    let o = run(&["table1"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let s = stdout(&o);
    assert!(s.contains("P10: holt on 27 vertices, edge-type 4 arc-type (2+2): match"), "{s}");
    assert!(s.contains("P13: fig6-40 on 40 vertices, edge-type 2+2 arc-type 2+(1+1): match"), "{s}");
    assert!(s.contains("P14: grr42 on 42 vertices, edge-type 2+2 arc-type (1+1)+(1+1): match"), "{s}");
    assert!(s.contains("constructed: 15\nmismatches: 0\n"), "{s}");
}

#[test]
fn realize_reports() {
    let o = run(&["realize", "(3+3)"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("block 1: B(3,6,9)"), "{s}");
    assert!(s.contains("verified-arc-type: (3+3)"), "{s}");

    let o = run(&["realize", "(2+2)+3", "--verify", "compositional"]);
    let s = stdout(&o);
    assert!(o.status.success(), "{s}");
    assert!(s.contains("certificate: compositional"), "{s}");
    assert!(s.contains("blocks-pairwise-non-isomorphic: yes"), "{s}");

    let o = run(&["realize", "1+1"]);
    assert!(!o.status.success());
    let o = run(&["realize", "(2+2)+(2+2)+(2+2)+(2+2)+(2+2)", "--verify", "off"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("pool exhausted"));
}

#[test]
fn realize_writes_graph_that_analyzes_back() {
    let path = tmp("realized.txt");
    let p = path.to_str().unwrap();
    assert!(run(&["realize", "2+(1+1)", "--out", p]).status.success());
    let s = stdout(&run(&["analyze", p]));
    assert!(s.contains("n: 40\n") && s.contains("arc-type: 2+(1+1)\n"), "{s}");
}

#[test]
fn construct_specs() {
    let s = stdout(&run(&["construct", "circulant:7:1,2"]));
    assert!(s.starts_with("spec: circulant:7:1,2\nn: 7\nm: 14\nvalency: 4\n7 14\n"), "{s}");
    assert!(!run(&["construct", "bouwer:2:6:8"]).status.success());
    assert!(!run(&["construct", "nonsense"]).status.success());
    let s = stdout(&run(&["construct", "cayley:dihedral:11:x,xy,xy^3"]));
    assert!(s.contains("n: 22\n"), "{s}");
}

#[test]
fn reports_are_deterministic() {
    for args in [&["table1"][..], &["realize", "2+1+(1+1)"], &["count-types", "8"]] {
        assert_eq!(stdout(&run(args)), stdout(&run(args)));
    }
}

#[test]
fn report_to_file() {
    let path = tmp("counts.txt");
    let o = run(&["count-types", "4", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap(), "1, 1, 1\n2, 2, 3\n3, 3, 4\n4, 5, 9\n");
}
