//! End-to-end tests of the command-line interface: output values, JSON
//! schema round-trips, determinism and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_koszul"))
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("koszul-cli-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

const RUNNING_EXAMPLE: &str = "vars x y z\nx*y^2\nx*y*z^3\ny^5\nz^6\n";
const STANLEY_EXAMPLE: &str = "vars x y z\nx^2*y\nx*z\ny^3\nz^3\n";
const NETWORK_PATHS: &str = "components e1 e2 e3 e4 e5 e6 e7 e8\n\
    1 0 0 0 0 1 0 0\n\
    1 0 0 1 0 0 1 0\n\
    0 1 0 1 0 1 0 0\n\
    1 0 0 1 1 0 0 1\n\
    0 1 0 0 0 0 1 0\n\
    0 0 1 1 1 1 0 0\n\
    0 1 0 0 1 0 0 1\n\
    0 0 1 0 1 0 1 0\n\
    0 0 1 0 0 0 0 1\n";

#[test]
fn betti_totals_of_running_example() {
    let file = write_temp("betti.ideal", RUNNING_EXAMPLE);
    let out = stdout_of(&["betti", file.to_str().unwrap(), "--strategy", "lex-last"]);
    assert!(out.contains("no repeated multidegrees"));
    assert!(out.contains("totals 4 4 1"));
    let exact = stdout_of(&["betti", file.to_str().unwrap(), "--strategy", "lex-last", "--exact"]);
    assert!(exact.contains("totals 4 4 1"));
}

#[test]
fn hilbert_reliability_polynomial() {
    // the ideal generated by the network's minimal paths, as an ideal file
    let mut text = String::from("vars e1 e2 e3 e4 e5 e6 e7 e8\n");
    for line in NETWORK_PATHS.lines().skip(1) {
        let factors: Vec<String> = line
            .split_whitespace()
            .enumerate()
            .filter(|(_, v)| *v == "1")
            .map(|(i, _)| format!("e{}", i + 1))
            .collect();
        text.push_str(&factors.join("*"));
        text.push('\n');
    }
    let file = write_temp("network.ideal", &text);
    let out = stdout_of(&["hilbert", file.to_str().unwrap(), "--specialize", "p"]);
    assert_eq!(out.trim(), "3p^2 + 4p^3 - 9p^4 - 10p^5 + 27p^6 - 18p^7 + 4p^8");
}

#[test]
fn hilbert_accepts_paths_files_and_underscore_strategies() {
    let file = write_temp("paths-for-hilbert.paths", NETWORK_PATHS);
    let out = stdout_of(&["hilbert", file.to_str().unwrap(), "--specialize", "p"]);
    assert_eq!(out.trim(), "3p^2 + 4p^3 - 9p^4 - 10p^5 + 27p^6 - 18p^7 + 4p^8");
    let ideal = write_temp("alias.ideal", RUNNING_EXAMPLE);
    let out = stdout_of(&["betti", ideal.to_str().unwrap(), "--strategy", "lex_last"]);
    assert!(out.contains("totals 4 4 1"));
}

#[test]
fn reliability_from_paths_file() {
    let file = write_temp("network.paths", NETWORK_PATHS);
    let out = stdout_of(&["reliability", "--paths-file", file.to_str().unwrap()]);
    assert_eq!(
        out.trim(),
        "R(p) = 3p^2 + 4p^3 - 9p^4 - 10p^5 + 27p^6 - 18p^7 + 4p^8"
    );
    let bound = stdout_of(&[
        "reliability",
        "--paths-file",
        file.to_str().unwrap(),
        "--bound-r",
        "1",
    ]);
    assert_eq!(bound.trim(), "r=1 (upper bound, 9 sets): 3p^2 + 4p^3 + 2p^4");
    let json = stdout_of(&[
        "reliability",
        "--paths-file",
        file.to_str().unwrap(),
        "--bound-r",
        "2",
        "--json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["side"], "lower");
    assert_eq!(value["sets_used"], "45");
}

#[test]
fn decompose_irreducible_components() {
    let file = write_temp("stanley.ideal", STANLEY_EXAMPLE);
    let out = stdout_of(&["decompose", file.to_str().unwrap(), "--kind", "irreducible"]);
    let lines: Vec<&str> = out.trim().lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines.contains(&"<z, y>"));
    assert!(lines.contains(&"<z, x^2, y^3>"));
    assert!(lines.contains(&"<x, z^3, y^3>"));
    let stanley = stdout_of(&["decompose", file.to_str().unwrap(), "--kind", "stanley"]);
    assert!(stanley.contains("x^3 * k[x]"));
    assert!(stanley.contains("dimension 1"));
}

#[test]
fn json_round_trip_and_determinism() {
    let file = write_temp("roundtrip.ideal", STANLEY_EXAMPLE);
    let a = stdout_of(&["betti", file.to_str().unwrap(), "--exact", "--json"]);
    let b = stdout_of(&["betti", file.to_str().unwrap(), "--exact", "--json"]);
    assert_eq!(a, b, "identical invocations must be byte-identical");
    let value: serde_json::Value = serde_json::from_str(&a).unwrap();
    let entries = value["betti"].as_array().unwrap();
    // re-build the in-memory table and compare against the library
    let ideal = koszul::MonomialIdeal::new(
        3,
        vec![
            koszul::Multidegree::new(vec![2, 1, 0]),
            koszul::Multidegree::new(vec![1, 0, 1]),
            koszul::Multidegree::new(vec![0, 3, 0]),
            koszul::Multidegree::new(vec![0, 0, 3]),
        ],
    );
    let expected = koszul::resolution::betti_numbers(&ideal);
    assert_eq!(entries.len(), expected.len());
    for entry in entries {
        let i = entry["i"].as_u64().unwrap() as usize;
        let exps: Vec<u64> = entry["multidegree"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_u64().unwrap())
            .collect();
        let mult = entry["multiplicity"].as_u64().unwrap() as usize;
        assert_eq!(expected[&(i, koszul::Multidegree::new(exps))], mult);
    }
    // tree schema round-trips positions as decimal strings
    let tree_json = stdout_of(&["mvt", file.to_str().unwrap(), "--json"]);
    let tree: serde_json::Value = serde_json::from_str(&tree_json).unwrap();
    let nodes = tree["tree"].as_array().unwrap();
    assert!(nodes.iter().any(|n| n["position"] == "1"));
    for node in nodes {
        assert!(node["position"].as_str().unwrap().parse::<u128>().is_ok());
        assert!(node["dimension"].as_u64().is_some());
    }
    // parallel expansion yields the same bytes
    let seq = stdout_of(&["mvt", file.to_str().unwrap()]);
    let par = stdout_of(&["mvt", file.to_str().unwrap(), "--parallel"]);
    assert_eq!(seq, par);
}

#[test]
fn family_and_resolution_commands() {
    let out = stdout_of(&["family", "--name", "k_out_of_n", "--params", "3,5"]);
    assert!(out.contains("betti 10 15 6"));
    let out = stdout_of(&["family", "--name", "series_parallel", "--params", "4,4,3,2"]);
    let betti_line = out.lines().find(|l| l.starts_with("betti")).unwrap();
    let total: u128 = betti_line
        .split_whitespace()
        .skip(1)
        .map(|v| v.parse::<u128>().unwrap())
        .sum();
    assert_eq!(total, 4725);
    let file = write_temp("res.ideal", "vars x y z\nx^2*y\nx*y^3\nx*z\ny*z\n");
    let out = stdout_of(&["resolution", file.to_str().unwrap(), "--kind", "taylor"]);
    assert!(out.contains("length 4"));
    assert!(out.contains("size 15 (with augmentation 16)"));
    let out = stdout_of(&["resolution", file.to_str().unwrap(), "--kind", "minimal"]);
    assert!(out.contains("size 9 (with augmentation 10)"));
    assert!(out.contains("minimal true"));
}

#[test]
fn exit_codes_and_warnings() {
    // parse error: unknown variable
    let file = write_temp("bad.ideal", "vars x y\nx*q\n");
    let out = run(&["betti", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown variable"));
    // parse error: malformed exponent
    let file = write_temp("bad2.ideal", "vars x y\nx^two\n");
    let out = run(&["hilbert", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    // unsupported parameter combination
    let out = run(&["family", "--name", "k_out_of_n", "--params", "7,3"]);
    assert_eq!(out.status.code(), Some(2));
    let file = write_temp("paths.paths", "components a b\n1 0\n0 1\n");
    let out = run(&["reliability", "--paths-file", file.to_str().unwrap(), "--bound-r", "9"]);
    assert_eq!(out.status.code(), Some(2));
    // non-minimal generators produce a warning but succeed
    let file = write_temp("warn.ideal", "vars x y\nx*y\nx^2*y\n");
    let out = run(&["betti", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn print_parse_round_trip() {
    // canonical form is stable under parse -> print -> parse
    for text in [RUNNING_EXAMPLE, STANLEY_EXAMPLE, "vars a b\na^4\nb\n"] {
        let file = write_temp("rt.ideal", text);
        let first = stdout_of(&["mvt", file.to_str().unwrap()]);
        let file2 = write_temp("rt2.ideal", text);
        let second = stdout_of(&["mvt", file2.to_str().unwrap()]);
        assert_eq!(first, second);
    }
}
