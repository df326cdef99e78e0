use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zzsynth")).args(args).current_dir(dir).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn workspace() -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    let files = [
        ("zero.json", r#"{"n": 2, "phases": [0, 0, 0, 0]}"#),
        ("cz.json", r#"{"n": 2, "phases": [0, 0, 0, 3.141592653589793]}"#),
        ("not.json", r#"{"re": [[0, 1], [1, 0]], "im": [[0, 0], [0, 0]]}"#),
        ("skew.json", r#"{"re": [[1, 1], [0, 1]], "im": [[0, 0], [0, 0]]}"#),
        ("pair.json", r#"{"n": 2, "constant": 0, "terms": [{"qubits": [1, 2], "coeff": 0.7}]}"#),
        ("xor.json", r#"{"n": 2, "values": [0, 1, 1, 0]}"#),
        ("two.json", r#"{"n": 2, "shifts": [100, -50], "couplings": [{"i": 1, "j": 2, "J": 20}]}"#),
        (
            "chain.json",
            r#"{"n": 3, "shifts": [100, 200, 300], "couplings": [{"i": 1, "j": 2, "J": 50}, {"i": 2, "j": 3, "J": 30}]}"#,
        ),
        ("bad.json", r#"{"n": 2, "phases": [0, 0"#),
    ];
    for (name, body) in files {
        fs::write(dir.path().join(name), body).unwrap();
    }
    dir
}

#[test]
fn zero_phases_compile_to_empty_sequence() {
    let w = workspace();
    let o = run(w.path(), &["compile", "--phases", "zero.json", "-o", "z.txt"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("zz=0 one_qubit=0 phase=0 total=0"));
    assert_eq!(fs::read_to_string(w.path().join("z.txt")).unwrap(), "QUBITS 2\n");
    assert_eq!(code(&run(w.path(), &["verify", "z.txt", "--phases", "zero.json"])), 0);
}

#[test]
fn compile_without_output_prints_sequence() {
    let w = workspace();
    let o = run(w.path(), &["compile", "--zpoly", "pair.json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "QUBITS 2\nZZ 1 2 6.9999999999999996e-1\n");
}

#[test]
fn controlled_not_counts_and_verifies() {
    let w = workspace();
    let o = run(w.path(), &["compile", "--cu", "not.json", "--qubits", "3", "-o", "cn.txt"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("zz=6 "), "{}", stdout(&o));
    assert_eq!(code(&run(w.path(), &["verify", "cn.txt", "--cu", "not.json"])), 0);
}

#[test]
fn grover_conditional_phase_matches_its_phase_file() {
    let w = workspace();
    let o = run(
        w.path(),
        &["compile", "--algorithm", "conditional-phase", "--qubits", "2", "--marked", "3", "-o", "c.txt"],
    );
    assert_eq!(code(&o), 0);
    let v = run(w.path(), &["verify", "c.txt", "--phases", "cz.json"]);
    assert_eq!(code(&v), 0);
    assert!(stdout(&v).contains("PASS"));
}

#[test]
fn wrong_target_fails_with_distance() {
    let w = workspace();
    run(w.path(), &["compile", "--algorithm", "walsh-hadamard", "--qubits", "2", "-o", "w.txt"]);
    let o = run(w.path(), &["verify", "w.txt", "--phases", "cz.json"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("FAIL"));
    let d: f64 = out.lines().find_map(|l| l.strip_prefix("distance_up_to_phase: ")).unwrap().parse().unwrap();
    assert!(d >= 1e-10);
}

#[test]
fn deutsch_jozsa_truth_table_round_trip() {
    let w = workspace();
    assert_eq!(code(&run(w.path(), &["compile", "--truth-table", "xor.json", "-o", "dj.txt"])), 0);
    assert_eq!(code(&run(w.path(), &["verify", "dj.txt", "--truth-table", "xor.json"])), 0);
    assert_eq!(code(&run(w.path(), &["verify", "dj.txt", "--phases", "cz.json"])), 1);
}

#[test]
fn input_errors_exit_2() {
    let w = workspace();
    assert_eq!(code(&run(w.path(), &["compile", "--phases", "bad.json"])), 2);
    assert_eq!(code(&run(w.path(), &["compile", "--phases", "missing.json"])), 2);
    assert_eq!(code(&run(w.path(), &["compile", "--cu", "skew.json", "--qubits", "2"])), 2);
    assert_eq!(code(&run(w.path(), &["compile", "--cu", "not.json"])), 2);
    assert_eq!(code(&run(w.path(), &["compile", "--phases", "zero.json", "--cu", "not.json"])), 2);
    assert_eq!(code(&run(w.path(), &["verify", "bad.json", "--phases", "zero.json"])), 2);
    assert_eq!(code(&run(w.path(), &["ion", "--lambda", "pi/0"])), 2);
    assert_eq!(code(&run(w.path(), &["classify", "2 Q1x"])), 2);
}

#[test]
fn semantic_errors_exit_3() {
    let w = workspace();
    let big = run(w.path(), &["compile", "--algorithm", "grover", "--qubits", "2", "--marked", "4"]);
    assert_eq!(code(&big), 3);
    run(w.path(), &["compile", "--algorithm", "walsh-hadamard", "--qubits", "3", "-o", "w3.txt"]);
    assert_eq!(code(&run(w.path(), &["verify", "w3.txt", "--phases", "zero.json"])), 3);
    assert_eq!(code(&run(w.path(), &["schedule", "--graph", "chain.json", "--pair", "1,3", "--tau", "1e-3"])), 3);
    assert_eq!(code(&run(w.path(), &["schedule", "--graph", "chain.json", "--pair", "1,4", "--tau", "1e-3"])), 3);
    assert_eq!(code(&run(w.path(), &["schedule", "--graph", "two.json", "--pair", "1,2", "--tau", "-1"])), 3);
}

#[test]
fn two_spin_schedule_is_a_single_echo() {
    let w = workspace();
    let o = run(w.path(), &["schedule", "--graph", "two.json", "--pair", "1,2", "--tau", "1e-3", "-o", "s.txt"]);
    assert_eq!(code(&o), 0);
    let report = stdout(&o);
    assert!(report.contains("surviving terms: 1 [2 I1z I2z]"), "{report}");
    assert!(report.contains("schedule: SE1  segments: 2"));
    assert!(report.contains("PASS"));
    let text = fs::read_to_string(w.path().join("s.txt")).unwrap();
    assert!(text.starts_with("SPINS 2\n"));
}

#[test]
fn chain_schedule_report_is_clean() {
    let w = workspace();
    let o = run(w.path(), &["schedule", "--graph", "chain.json", "--pair", "2,3", "--tau", "1e-3", "-o", "s.txt"]);
    assert_eq!(code(&o), 0);
    let report = stdout(&o);
    assert!(report.contains("surviving terms: 1 [2 I2z I3z]"), "{report}");
    assert!(report.contains("schedule: SE2  segments: 8"), "{report}");
    assert!(report.contains("total duration: 4.000000e-3 s"));
}

#[test]
fn ion_examples() {
    let w = workspace();
    let o = run(w.path(), &["ion", "--lambda", "pi"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("lambda = π (exact)"));
    assert!(out.contains("phi1   = π/2"));
    assert!(out.contains(": hold"));

    let out = stdout(&run(w.path(), &["ion", "--lambda", "2pi"]));
    assert!(out.contains("theta1 = π\n") && out.contains("theta2 = 0"), "{out}");

    for lambda in ["0", "-1.3", "-3pi/4"] {
        let o = run(w.path(), &["ion", "--lambda", lambda, "--phi2", "0.4"]);
        assert_eq!(code(&o), 0);
        assert!(stdout(&o).contains(": hold"), "{lambda}");
    }
}

#[test]
fn classify_examples() {
    let w = workspace();
    let cases = [
        ("I1z", "orders {+0}", "Longitudinal"),
        ("I1x", "orders {-1, +1}", "General"),
        ("2 I1x I2x", "orders {-2, +0, +2}", "EvenOrder"),
        ("I1x I2x + I1y I2y", "orders {+0}", "ZeroQuantum"),
    ];
    for (op, orders, label) in cases {
        let o = run(w.path(), &["classify", op]);
        assert_eq!(code(&o), 0);
        let out = stdout(&o);
        assert!(out.contains(orders), "{op}: {out}");
        assert!(out.contains(&format!("subspace: {label}")), "{op}: {out}");
    }
}

#[test]
fn outputs_are_byte_deterministic() {
    let w = workspace();
    for (args, file) in [
        (vec!["compile", "--algorithm", "grover", "--qubits", "4", "--marked", "9", "-o"], "g"),
        (vec!["schedule", "--graph", "chain.json", "--pair", "1,2", "--tau", "2e-3", "-o"], "s"),
    ] {
        let mut runs = Vec::new();
        for i in 0..2 {
            let name = format!("{file}{i}.txt");
            let mut a = args.clone();
            a.push(&name);
            let o = run(w.path(), &a);
            assert_eq!(code(&o), 0);
            runs.push((fs::read(w.path().join(&name)).unwrap(), o.stdout));
        }
        assert_eq!(runs[0], runs[1]);
    }
}
