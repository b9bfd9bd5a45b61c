use std::path::PathBuf;
use std::process::{Command, Output};

use iquandle_cli::record::ResultRecord;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iquandle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn records(text: &str) -> Vec<ResultRecord> {
    text.lines()
        .map(|l| ResultRecord::from_line(l).unwrap())
        .collect()
}

#[test]
fn enum_trefoil() {
    let o = run(&["enum", data("trefoil.txt").to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(stdout(&o), "order 3\ncomponents 3\n");
}

#[test]
fn enum_single_generator() {
    let o = run(&["enum", data("single.txt").to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("order 1\n"));
}

#[test]
fn enum_free_quandle_hits_budget() {
    let o = run(&[
        "enum",
        data("free2.txt").to_str().unwrap(),
        "--max-vertices",
        "1000",
    ]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("budget exceeded"));
}

#[test]
fn enum_parse_error_has_position() {
    let o = run(&["enum", data("bad.txt").to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 2, column 9"), "{}", stderr(&o));
}

#[test]
fn enum_missing_file() {
    let o = run(&["enum", data("absent.txt").to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}

#[test]
fn enum_writes_dot_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let json = dir.path().join("r.jsonl");
    let o = run(&[
        "enum",
        data("trefoil.txt").to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
        "--json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let g = std::fs::read_to_string(&dot).unwrap();
    assert!(g.starts_with("graph quandle {"));
    assert_eq!(
        g.lines()
            .filter(|l| l.contains(" [label=\"") && !l.contains("--"))
            .count(),
        3
    );
    let text = std::fs::read_to_string(&json).unwrap();
    let r = records(&text);
    assert_eq!(r.len(), 1);
    assert_eq!(r[0].order, Some(3));
    assert!(r[0].params.is_none());
    assert_eq!(r[0].presentation_hash.len(), 64);
    assert_eq!(r[0].to_line() + "\n", text);
}

#[test]
fn montesinos_353_check() {
    let o = run(&["montesinos", "--p", "3", "--q", "5", "--e", "3", "--check"]);
    let out = stdout(&o);
    assert_eq!(code(&o), 0, "{out}");
    assert!(out.contains("order 84 (predicted 84)"));
    assert!(!out.contains("MISMATCH"));
    assert!(out.matches("ok").count() >= 5);
}

#[test]
fn montesinos_344_components() {
    let o = run(&["montesinos", "--p", "3", "--q", "4", "--e", "4", "--check"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("components 36 36 18 (predicted 36 36 18)"));
}

#[test]
fn montesinos_negative_e() {
    let o = run(&["montesinos", "--p", "1", "--q", "2", "--e", "-1"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    // w = (e - 1)q - p = -5, order 2(q + 1)|w|
    assert!(stdout(&o).contains("order 30 (predicted 30)"));
}

#[test]
fn montesinos_gcd_violation() {
    let o = run(&["montesinos", "--p", "4", "--q", "6", "--e", "1"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("gcd"));
}

#[test]
fn montesinos_budget() {
    let o = run(&[
        "montesinos",
        "--p",
        "3",
        "--q",
        "5",
        "--e",
        "3",
        "--max-vertices",
        "20",
    ]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("budget exceeded"));
}

#[test]
fn sweep_orders() {
    let o = run(&["sweep", "--q-max", "5", "--e-min", "0", "--e-max", "3"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let rs = records(&stdout(&o));
    // φ(2) + φ(3) + φ(4) + φ(5) = 1 + 2 + 2 + 4 values of p, four values of e
    assert_eq!(rs.len(), 9 * 4);
    for r in &rs {
        let pr = r.params.unwrap();
        let w = ((pr.e - 1) * pr.q - pr.p).unsigned_abs();
        assert_eq!(r.order, Some(2 * (pr.q as u64 + 1) * w));
        assert_eq!(r.matches.order, Some(true));
        assert!(r.elapsed_us.is_none());
    }
}

#[test]
fn sweep_q2_has_only_p1() {
    let o = run(&["sweep", "--q-max", "2", "--e-min", "-2", "--e-max", "2"]);
    let rs = records(&stdout(&o));
    assert_eq!(rs.len(), 5);
    assert!(rs.iter().all(|r| r.params.unwrap().p == 1));
}

#[test]
fn sweep_is_deterministic_across_runs_and_jobs() {
    let args = [
        "sweep", "--q-max", "6", "--e-min", "-1", "--e-max", "3", "--check",
    ];
    let a = run(&args);
    let b = run(&args);
    let mut par = args.to_vec();
    par.extend(["--jobs", "4"]);
    let c = run(&par);
    assert_eq!(code(&a), 0, "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let rs = records(&stdout(&a));
    let keys: Vec<_> = rs
        .iter()
        .map(|r| {
            let p = r.params.unwrap();
            (p.q, p.p, p.e)
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(rs.iter().all(|r| r.matches.geodesics == Some(true)));
}

#[test]
fn sweep_json_file_and_timing() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("s.jsonl");
    let o = run(&[
        "sweep",
        "--q-max",
        "3",
        "--timing",
        "--json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let rs = records(&std::fs::read_to_string(&json).unwrap());
    assert!(!rs.is_empty());
    assert!(rs.iter().all(|r| r.elapsed_us.is_some()));
}

#[test]
fn geodesics_353() {
    let o = run(&["geodesics", "--p", "3", "--q", "5", "--e", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("6 maximal: 1×70, 5×28\n"));
}

#[test]
fn aut_131() {
    let o = run(&["aut", "--p", "1", "--q", "3", "--e", "1"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let f: Vec<&str> = out.split_whitespace().collect();
    assert_eq!(f[0], "count");
    assert_eq!(f[3], "bound");
    let (count, bound): (u64, u64) = (f[1].parse().unwrap(), f[4].parse().unwrap());
    assert_eq!(bound, 24);
    assert!(count <= bound);
    assert_eq!(f[5], format!("attained={}", count == bound));
}

#[test]
fn aut_order_one() {
    let o = run(&["aut", "--input", data("single.txt").to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "count 1\n");
}

#[test]
fn source_args_are_exclusive() {
    let o = run(&["geodesics", "--p", "1"]);
    assert_eq!(code(&o), 2);
    let o = run(&["geodesics"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn montesinos_aut_flag_only_when_requested() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.jsonl");
    let j = json.to_str().unwrap();
    let o = run(&[
        "montesinos",
        "--p",
        "1",
        "--q",
        "3",
        "--e",
        "1",
        "--json",
        j,
    ]);
    assert_eq!(code(&o), 0);
    let r = &records(&std::fs::read_to_string(&json).unwrap())[0];
    assert_eq!(r.matches.aut_bound, None);
    assert_eq!(r.matches.geodesics, None);

    let o = run(&[
        "montesinos",
        "--p",
        "1",
        "--q",
        "3",
        "--e",
        "1",
        "--aut",
        "--json",
        j,
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("≤ bound 24 attained="));
    let r = &records(&std::fs::read_to_string(&json).unwrap())[0];
    assert_eq!(r.matches.aut_bound, Some(true));
}
