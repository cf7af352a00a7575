use std::fs;
use std::process::{Command, Output};

fn bkmult(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bkmult")).args(args).output().expect("binary runs")
}

#[test]
fn unsupported_system_is_a_usage_error() {
    let out = bkmult(&["verify", "--system", "E6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unsupported system"));
}

#[test]
fn malformed_word_is_a_usage_error() {
    let out = bkmult(&["constant", "--system", "A2", "1,3", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn zero_threads_rejected() {
    assert_eq!(bkmult(&["verify", "--system", "A2", "--threads", "0"]).status.code(), Some(2));
}

#[test]
fn a2_report() {
    let out = bkmult(&["verify", "--system", "A2", "--deterministic"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dual_pair_count"], 6);
    assert_eq!(v["max_bk_constant"], 1);
    assert_eq!(v["elapsed_ms"], 0);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn g2_passes() {
    assert_eq!(bkmult(&["verify", "--system", "G2"]).status.code(), Some(0));
}

#[test]
fn identity_factor_echoes() {
    let out = bkmult(&["constant", "--system", "B2", "", "1,2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("cup: [1,2]\n"), "{text}");
    assert!(text.contains("odot0: [1,2]\n"), "{text}");
}

#[test]
fn constant_served_from_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("a3.jsonl");
    let cache = cache.to_str().unwrap();
    let args = ["constant", "--system", "A3", "--cache", cache, "2", "2,1"];
    let first = bkmult(&args);
    let stored = fs::read_to_string(cache).unwrap();
    let second = bkmult(&args);
    assert_eq!(first.stdout, second.stdout);
    assert!(String::from_utf8_lossy(&second.stderr).contains("1 hit"));
    assert_eq!(fs::read_to_string(cache).unwrap(), stored);
    assert!(stored.starts_with("{\"schema\":1,\"system\":\"A3\",\"indexing\":\"lex\"}\n"));
}

#[test]
fn cache_for_other_system_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    let cache = cache.to_str().unwrap();
    bkmult(&["constant", "--system", "A2", "--cache", cache, "1", "2"]);
    let out = bkmult(&["constant", "--system", "B2", "--cache", cache, "1", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn stale_schema_is_discarded() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    fs::write(&cache, "{\"schema\":0,\"system\":\"A2\",\"indexing\":\"lex\"}\ngarbage\n").unwrap();
    let out = bkmult(&["constant", "--system", "A2", "--cache", cache.to_str().unwrap(), "1", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(fs::read_to_string(&cache).unwrap().starts_with("{\"schema\":1"));
}

#[test]
fn cache_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("d3.jsonl");
    let cache = cache.to_str().unwrap();
    let run = |threads: &str| bkmult(&["verify", "--system", "D3", "--deterministic", "--threads", threads, "--cache", cache]);
    let a = run("1");
    let first = fs::read(cache).unwrap();
    fs::remove_file(cache).unwrap();
    let b = run("4");
    assert_eq!(fs::read(cache).unwrap(), first);
    assert_eq!(a.stdout, b.stdout);
    // warm cache gives the same report
    assert_eq!(run("2").stdout, a.stdout);
}

#[test]
fn reports_identical_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for t in ["1", "3", "8"] {
        let path = dir.path().join(format!("r{t}.json"));
        let out = bkmult(&["verify", "--system", "D4", "--deterministic", "--threads", t, "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        reports.push(fs::read(path).unwrap());
    }
    assert!(reports.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn decompositions_count_matches_list() {
    let count = bkmult(&["decompositions", "--system", "B2", "--k-max", "2", "--count"]);
    let list = bkmult(&["decompositions", "--system", "B2", "--k-max", "2"]);
    let n: usize = String::from_utf8(count.stdout).unwrap().trim().parse().unwrap();
    assert_eq!(n, String::from_utf8(list.stdout).unwrap().lines().count());
    assert_eq!(n, 6);
}

#[test]
fn crosscheck_passes() {
    let out = bkmult(&["crosscheck", "--system", "A3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("schubert_polynomials: 300 checked, 0 mismatches"));
}
