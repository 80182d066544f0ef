use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn limpack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_limpack"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(name);
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", s(&path)]);
    let out = limpack(&full);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn gen_reports_counts() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("p.txt");
    let out = limpack(&[
        "gen",
        "--family",
        "petersen",
        "--copies",
        "2",
        "--out",
        s(&path),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "vertices: 20\nedges: 30\n");
    assert!(fs::read_to_string(&path).unwrap().starts_with("20 30\n"));
}

#[test]
fn solve_petersen() {
    let dir = TempDir::new().unwrap();
    let g = gen(dir.path(), "p.txt", &["--family", "petersen"]);
    let out = limpack(&["solve", "--exact", "--k", "3", s(&g)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("optimum: 7"), "{}", stdout(&out));
    let out = limpack(&["solve", "--dominating", "--l", "1", s(&g)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("optimum: 3"), "{}", stdout(&out));
}

#[test]
fn every_constructor_output_verifies() {
    let dir = TempDir::new().unwrap();
    let g = gen(
        dir.path(),
        "g.txt",
        &[
            "--family",
            "random-regular",
            "--n",
            "40",
            "--r",
            "3",
            "--seed",
            "2",
        ],
    );
    for (method, k) in [
        ("cubic2", "2"),
        ("greedy", "1"),
        ("greedy", "3"),
        ("sample-repair", "2"),
        ("lll", "2"),
    ] {
        let out = limpack(&[
            "construct",
            "--method",
            method,
            "--k",
            k,
            "--seed",
            "4",
            s(&g),
        ]);
        assert_eq!(
            code(&out),
            0,
            "{method}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let report = write(dir.path(), "report.txt", &stdout(&out));
        let check = limpack(&["verify", "--k", k, "--packing", s(&report), s(&g)]);
        assert_eq!(code(&check), 0, "{method} k={k}: {}", stdout(&check));
    }
}

#[test]
fn cubic2_on_typed_input_with_trace() {
    let dir = TempDir::new().unwrap();
    // A diamond of c-edges hanging off a d-path.
    let g = write(
        dir.path(),
        "t.txt",
        "6 6\n0 1 c\n0 2 c\n1 2 c\n1 3 c\n2 3 c\n3 4 d\n",
    );
    let trace = dir.path().join("trace.txt");
    let out = limpack(&[
        "construct",
        "--method",
        "cubic2",
        "--k",
        "2",
        "--trace",
        s(&trace),
        s(&g),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let steps: usize = stdout(&out)
        .lines()
        .find_map(|l| l.strip_prefix("steps: "))
        .unwrap()
        .parse()
        .unwrap();
    assert_eq!(fs::read_to_string(&trace).unwrap().lines().count(), steps);
    let report = write(dir.path(), "r.txt", &stdout(&out));
    assert_eq!(
        code(&limpack(&[
            "verify",
            "--k",
            "2",
            "--packing",
            s(&report),
            s(&g)
        ])),
        0
    );
    assert_eq!(
        code(&limpack(&[
            "verify",
            "--k",
            "1",
            "--packing",
            s(&report),
            s(&g)
        ])),
        2
    );
}

#[test]
fn verify_rejects_overfull_sets() {
    let dir = TempDir::new().unwrap();
    let g = gen(dir.path(), "c.txt", &["--family", "cycle", "--n", "6"]);
    let bad = write(dir.path(), "bad.txt", "0 1\n");
    let out = limpack(&["verify", "--k", "1", "--packing", s(&bad), s(&g)]);
    assert_eq!(code(&out), 1);
    let good = write(dir.path(), "good.txt", "0 3 # two apart\n");
    assert_eq!(
        code(&limpack(&[
            "verify",
            "--k",
            "1",
            "--packing",
            s(&good),
            s(&g)
        ])),
        0
    );
    let dom = write(dir.path(), "dom.txt", "0 3\n");
    assert_eq!(
        code(&limpack(&[
            "verify",
            "--dominating",
            "--l",
            "1",
            "--packing",
            s(&dom),
            s(&g)
        ])),
        0
    );
}

#[test]
fn k4_is_refused_by_cubic2() {
    let dir = TempDir::new().unwrap();
    let g = write(
        dir.path(),
        "k4.txt",
        "4 6\n0 1 c\n0 2 c\n0 3 c\n1 2 c\n1 3 c\n2 3 c\n",
    );
    let out = limpack(&["construct", "--method", "cubic2", "--k", "2", s(&g)]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("[0, 1, 2, 3]"));
}

#[test]
fn bounds_in_parameter_and_file_mode() {
    let out = limpack(&[
        "bounds", "--k", "2", "--n", "60", "--maxdeg", "3", "--mindeg", "3",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("subcubic-third"));
    let out = limpack(&[
        "bounds", "--k", "4", "--n", "10", "--maxdeg", "3", "--mindeg", "3",
    ]);
    assert!(
        stdout(&out).contains("all-vertices 10.000000000000"),
        "{}",
        stdout(&out)
    );
    let dir = TempDir::new().unwrap();
    let g = gen(dir.path(), "p.txt", &["--family", "petersen"]);
    assert_eq!(code(&limpack(&["bounds", "--k", "2", s(&g)])), 0);
    assert_eq!(
        code(&limpack(&["bounds", "--k", "2", "--n", "10", s(&g)])),
        2
    );
}

#[test]
fn exit_codes_for_bad_input() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.txt");
    assert_eq!(code(&limpack(&["solve", "--k", "1", s(&missing)])), 3);
    let broken = write(dir.path(), "broken.txt", "3 2\n0 1\n");
    let out = limpack(&["solve", "--k", "1", s(&broken)]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));
    let g = gen(dir.path(), "c.txt", &["--family", "cycle", "--n", "5"]);
    assert_eq!(code(&limpack(&["solve", "--k", "0", s(&g)])), 2);
    assert_eq!(
        code(&limpack(&[
            "construct",
            "--method",
            "lll",
            "--k",
            "1",
            "--p",
            "1.5",
            s(&g)
        ])),
        2
    );
    assert_eq!(
        code(&limpack(&[
            "construct",
            "--method",
            "cubic2",
            "--k",
            "3",
            s(&g)
        ])),
        2
    );
    assert_eq!(code(&limpack(&["solve", s(&g)])), 2);
    let big = gen(
        dir.path(),
        "big.txt",
        &["--family", "random-regular", "--n", "100", "--r", "3"],
    );
    assert_eq!(code(&limpack(&["solve", "--k", "1", s(&big)])), 3);
}

#[test]
fn lll_round_limit_exits_one() {
    let dir = TempDir::new().unwrap();
    let g = gen(dir.path(), "k4.txt", &["--family", "k4"]);
    // p = 1 keeps all four vertices in every neighbourhood; one round is not enough.
    let out = limpack(&[
        "construct",
        "--method",
        "lll",
        "--k",
        "1",
        "--p",
        "1",
        "--max-rounds",
        "1",
        s(&g),
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("converged: false"));
    let report = write(dir.path(), "r.txt", &stdout(&out));
    assert_eq!(
        code(&limpack(&[
            "verify",
            "--k",
            "1",
            "--packing",
            s(&report),
            s(&g)
        ])),
        0
    );
}

#[test]
fn bench_without_timing_is_reproducible() {
    let a = limpack(&["bench", "--suite", "paper", "--no-timing"]);
    let b = limpack(&["bench", "--suite", "paper", "--no-timing"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("family\tn\tk\tmethod\tsize\texact\tlower\tupper\tcheck\n"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn documented_examples() {
    let dir = TempDir::new().unwrap();
    let c6 = gen(dir.path(), "c6.graph", &["--family", "cycle", "--n", "6"]);
    let out = limpack(&["solve", "--k", "2", s(&c6)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("optimum: 4\n"));

    let h6 = gen(dir.path(), "h6.graph", &["--family", "h6"]);
    let three = write(dir.path(), "p.txt", "0 1 2\n");
    let out = limpack(&["verify", "--k", "2", "--packing", s(&three), s(&h6)]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("violation: vertex"));
}
