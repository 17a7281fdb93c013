use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn cnbtest(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cnbtest"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn field(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("no {key} in {text:?}"))
        .to_string()
}

fn two_cliques(dir: &Path, size: usize) -> String {
    let mut s = String::new();
    for block in 0..2 {
        for i in 0..size {
            for j in i + 1..size {
                s.push_str(&format!("{} {}\n", block * size + i, block * size + j));
            }
        }
    }
    fs::write(dir.join("cliques.edges"), s).unwrap();
    "cliques.edges".into()
}

#[test]
fn gen_is_byte_identical_for_equal_seeds() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["a.edges", "b.edges"] {
        let o = cnbtest(dir.path(), &["gen", "--model", "er", "--n", "100", "--p", "0.05", "--seed", "7", "--out", name]);
        assert!(o.status.success(), "{}", stderr(&o));
    }
    let a = fs::read(dir.path().join("a.edges")).unwrap();
    assert_eq!(a, fs::read(dir.path().join("b.edges")).unwrap());
    let o = cnbtest(dir.path(), &["gen", "--model", "er", "--n", "100", "--p", "0.05", "--seed", "8"]);
    assert_ne!(o.stdout, a);
}

#[test]
fn block_family_generation_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["gen", "--model", "balanced", "--n1", "60", "--n2", "40", "--p0", "0.1", "--delta", "0.5", "--seed", "3"];
    let first = cnbtest(dir.path(), &args);
    assert!(first.status.success(), "{}", stderr(&first));
    fs::write(dir.path().join("g.edges"), &first.stdout).unwrap();
    let o = cnbtest(dir.path(), &["gen", "--model", "balanced", "--n1", "60", "--n2", "40", "--p0", "0.1", "--delta", "0.5", "--seed", "3", "--out", "h.edges"]);
    assert!(o.status.success());
    assert_eq!(fs::read(dir.path().join("h.edges")).unwrap(), first.stdout);
    let o = cnbtest(dir.path(), &["count-nb", "--graph", "g.edges"]);
    assert!(o.status.success(), "{}", stderr(&o));
    field(&stdout(&o), "k_hat").parse::<usize>().unwrap();
}

#[test]
fn test_reports_statistic_threshold_and_decision() {
    let dir = tempfile::tempdir().unwrap();
    let g = two_cliques(dir.path(), 15);
    let o = cnbtest(dir.path(), &["test", "--graph", &g, "--k0", "1", "--stat", "cnb", "--null", "tw"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    let stat: f64 = field(&out, "statistic").parse().unwrap();
    let thr: f64 = field(&out, "threshold").parse().unwrap();
    assert!(stat > thr);
    assert_eq!(field(&out, "decision"), "reject");
    assert!(stderr(&o).contains("# command=test"));
    assert!(stderr(&o).contains("# alpha=0.05"));
}

#[test]
fn tw_test_is_calibrated_on_erdos_renyi() {
    let dir = tempfile::tempdir().unwrap();
    let seeds = 20;
    let mut accepted = 0;
    for seed in 0..seeds {
        let s = seed.to_string();
        let o = cnbtest(dir.path(), &["gen", "--model", "er", "--n", "500", "--p", "0.08", "--seed", &s, "--out", "g.edges"]);
        assert!(o.status.success());
        let o = cnbtest(dir.path(), &["test", "--graph", "g.edges", "--k0", "1", "--stat", "cnb", "--alpha", "0.05", "--null", "tw"]);
        assert!(o.status.success(), "{}", stderr(&o));
        if field(&stdout(&o), "decision") == "accept" {
            accepted += 1;
        }
    }
    assert!(accepted * 10 >= seeds * 9, "accepted {accepted} of {seeds}");
}

#[test]
fn simulated_null_round_trips_through_test() {
    let dir = tempfile::tempdir().unwrap();
    let o = cnbtest(dir.path(), &["gen", "--n", "120", "--p", "0.1", "--seed", "2", "--out", "g.edges"]);
    assert!(o.status.success());
    let o = cnbtest(dir.path(), &["null-sim", "--stat", "tri", "--n", "120", "--p", "0.1", "--reps", "200", "--seed", "4", "--out", "null.csv"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = cnbtest(dir.path(), &["test", "--graph", "g.edges", "--stat", "tri", "--null-csv", "null.csv"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let thr: f64 = field(&stdout(&o), "threshold").parse().unwrap();
    let csv = fs::read_to_string(dir.path().join("null.csv")).unwrap();
    let mut values: Vec<f64> = csv.lines().filter(|l| !l.starts_with('#')).map(|l| l.parse().unwrap()).collect();
    values.sort_by(f64::total_cmp);
    assert_eq!(thr, values[189]);

    let o = cnbtest(dir.path(), &["test", "--graph", "g.edges", "--stat", "cnb", "--null-csv", "null.csv"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn estimate_k_writes_dendrogram_and_labels() {
    let dir = tempfile::tempdir().unwrap();
    let g = two_cliques(dir.path(), 25);
    let o = cnbtest(
        dir.path(),
        &["estimate-k", "--graph", &g, "--method", "recursive", "--stat", "cnb", "--alpha", "0.01", "--null", "mc", "--reps", "100", "--min-size", "20", "--labels-out", "labels.csv"],
    );
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(field(&out, "k_hat"), "2");
    assert_eq!(field(&out, "leaf_sizes"), "25;25");
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("dendrogram.json")).unwrap()).unwrap();
    assert_eq!(json["members"].as_array().unwrap().len(), 50);
    assert_eq!(json["children"].as_array().unwrap().len(), 2);
    let labels = fs::read_to_string(dir.path().join("labels.csv")).unwrap();
    let rows: Vec<&str> = labels.lines().skip(1).collect();
    assert_eq!(rows.len(), 50);
    let block = |r: &str| r.split(',').nth(1).unwrap().to_string();
    assert!(rows[..25].iter().all(|r| block(r) == block(rows[0])));
    assert!(rows[25..].iter().all(|r| block(r) != block(rows[0])));
}

#[test]
fn sequential_estimate_on_two_cliques() {
    let dir = tempfile::tempdir().unwrap();
    let g = two_cliques(dir.path(), 25);
    let o = cnbtest(dir.path(), &["estimate-k", "--graph", &g, "--method", "sequential", "--reps", "100", "--out", "steps.json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(field(&stdout(&o), "k_hat"), "2");
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("steps.json")).unwrap()).unwrap();
    assert_eq!(json["k_hat"], 2);
}

#[test]
fn spectrum_csv_lists_leading_values() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("k4.edges"), "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let o = cnbtest(dir.path(), &["spectrum", "--graph", "k4.edges", "--op", "nb", "--all", "--out", "s.csv"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = fs::read_to_string(dir.path().join("s.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("index,re,im"));
    let first: Vec<f64> = lines.next().unwrap().split(',').map(|x| x.parse().unwrap()).collect();
    assert_eq!(first[0], 1.0);
    assert!((first[1] - 2.0).abs() < 1e-10);
    assert_eq!(csv.lines().count(), 9);
}

#[test]
fn config_file_values_apply_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("run.cfg"), "# er sample\nmodel = er\nn=80\np=0.1 # density\nseed=5\n").unwrap();
    let from_cfg = cnbtest(dir.path(), &["gen", "--config", "run.cfg"]);
    assert!(from_cfg.status.success(), "{}", stderr(&from_cfg));
    assert!(stderr(&from_cfg).contains("# seed=5"));
    let direct = cnbtest(dir.path(), &["gen", "--n", "80", "--p", "0.1", "--seed", "5"]);
    assert_eq!(from_cfg.stdout, direct.stdout);
    let overridden = cnbtest(dir.path(), &["gen", "--config", "run.cfg", "--seed", "6"]);
    assert!(stderr(&overridden).contains("# seed=6"));
    let six = cnbtest(dir.path(), &["gen", "--n", "80", "--p", "0.1", "--seed", "6"]);
    assert_eq!(overridden.stdout, six.stdout);
}

#[test]
fn config_file_rejects_unknown_and_repeated_keys() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.cfg"), "n=80\nwidth=3\n").unwrap();
    let o = cnbtest(dir.path(), &["gen", "--config", "bad.cfg"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("unknown key \"width\""));
    fs::write(dir.path().join("dup.cfg"), "n=80\nn=90\n").unwrap();
    assert_eq!(cnbtest(dir.path(), &["gen", "--config", "dup.cfg"]).status.code(), Some(1));
    fs::write(dir.path().join("flag.cfg"), "graph=x.edges\nlcc=maybe\n").unwrap();
    assert_eq!(cnbtest(dir.path(), &["count-nb", "--config", "flag.cfg"]).status.code(), Some(1));
    assert_eq!(cnbtest(dir.path(), &["gen", "--config", "missing.cfg"]).status.code(), Some(2));
}

#[test]
fn exit_codes_for_parameter_and_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let g = two_cliques(dir.path(), 5);
    let code = |args: &[&str]| cnbtest(dir.path(), args).status.code();
    assert_eq!(code(&["test", "--graph", &g, "--alpha", "2"]), Some(1));
    assert_eq!(code(&["test", "--graph", &g, "--stat", "magic"]), Some(1));
    assert_eq!(code(&["test", "--graph", &g, "--unknown-flag"]), Some(1));
    assert_eq!(code(&["test", "--graph", &g, "--k0", "2", "--null", "tw"]), Some(1));
    assert_eq!(code(&["gen", "--model", "er", "--n", "10"]), Some(1));
    assert_eq!(code(&["frobnicate"]), Some(1));
    assert_eq!(code(&["count-nb", "--graph", "absent.edges"]), Some(2));
    fs::write(dir.path().join("junk.edges"), "0 1\nzero two\n").unwrap();
    assert_eq!(code(&["count-nb", "--graph", "junk.edges"]), Some(2));
    assert_eq!(code(&["gen", "--n", "10", "--p", "0.5", "--out", "no/such/dir/g.edges"]), Some(2));
    assert_eq!(code(&["--help"]), Some(0));
}

#[test]
fn lcc_flag_restricts_to_largest_component() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("g.edges"), "0 1\n1 2\n2 0\n10 11\n").unwrap();
    let o = cnbtest(dir.path(), &["spectrum", "--graph", "g.edges", "--op", "adj", "--all", "--lcc"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().count(), 4);
    assert!(stderr(&o).contains("3 of 5 nodes"));
}

#[test]
fn diag_and_power_tables_are_csv() {
    let dir = tempfile::tempdir().unwrap();
    let o = cnbtest(dir.path(), &["diag", "--kind", "vdv", "--mode", "constant", "--scale", "0.2", "--ns", "60,120", "--reps", "3", "--out", "vdv.csv"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = fs::read_to_string(dir.path().join("vdv.csv")).unwrap();
    assert_eq!(csv.lines().filter(|l| !l.starts_with('#')).count(), 3);
    let o = cnbtest(
        dir.path(),
        &["power", "--n1", "40", "--n2", "40", "--p0", "0.2", "--delta-step", "0.5", "--delta-max", "0.5", "--reps", "4", "--null-reps", "20", "--stats", "cnb,tri"],
    );
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "stat,delta,power,se"));
    assert_eq!(out.lines().filter(|l| l.starts_with("cnb,") || l.starts_with("tri,")).count(), 4);
    let o = cnbtest(dir.path(), &["power", "--n1", "40", "--n2", "40", "--p0", "0.2", "--stats", "cnb,bogus"]);
    assert_eq!(o.status.code(), Some(1));
}
