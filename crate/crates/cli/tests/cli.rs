use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_balancing"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn gen_rows() {
    let out = run(&["gen", "--upto", "4"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).ends_with("4 204\n"));

    let out = run(&["gen", "--upto", "0"]);
    assert_eq!(stdout(&out), "0 0\n");
}

#[test]
fn gen_fast_and_recurrence_are_byte_identical() {
    let a = run(&["gen", "--upto", "50", "--method", "fast"]);
    let b = run(&["gen", "--upto", "50", "--method", "recurrence"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn gen_lucas_csv() {
    let out = run(&["gen", "--upto", "2", "--seq", "C", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,C\n0,1\n1,3\n2,17\n");
}

#[test]
fn linearize_text() {
    assert_eq!(
        stdout(&run(&["linearize", "--power", "3"])),
        "(1/32)*B(3n) - (3/32)*B(n)\n"
    );
    assert_eq!(stdout(&run(&["linearize", "--power", "1"])), "B(n)\n");
    let out = run(&["linearize", "--power", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["constant"], "-1/16");
    assert_eq!(v["power"], 2);
}

#[test]
fn sum_values() {
    assert_eq!(stdout(&run(&["sum", "--m", "1", "--power", "1", "--upto", "4"])), "246\n");
    assert_eq!(stdout(&run(&["sum", "--m", "1", "--power", "3", "--upto", "2"])), "217\n");
    assert_eq!(stdout(&run(&["sum", "--m", "2", "--power", "1", "--upto", "0"])), "0\n");
}

#[test]
fn sum_with_oracle() {
    let out = run(&["sum", "--m", "2", "--power", "2", "--upto", "2", "--oracle"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "41652\noracle 41652 (agree)\n");

    let out = run(&[
        "sum", "--m", "1", "--power", "2", "--upto", "3", "--oracle", "--sweep", "--format", "csv",
    ]);
    assert_eq!(
        stdout(&out),
        "n,value,oracle\n0,0,0\n1,1,1\n2,37,37\n3,1262,1262\n"
    );
}

#[test]
fn formula_text() {
    let out = run(&["formula", "--m", "1", "--power", "1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "(1/4)*B(n+1) - (1/4)*B(n) - 1/4");
    assert!(text.contains("matches direct summation"));

    let out = run(&["formula", "--m", "2", "--power", "1"]);
    assert_eq!(
        stdout(&out).lines().next().unwrap(),
        "(1/32)*B(2n+2) - (1/32)*B(2n) - 3/16"
    );

    let out = run(&["formula", "--m", "1", "--power", "2"]);
    assert!(stdout(&out).lines().nth(1).unwrap().starts_with("# n = 0..4: 0,"));
}

#[test]
fn verify_runs() {
    let out = run(&["verify", "--lemma-max-m", "10"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).ends_with("summary: 9/9 passed\n"));

    let out = run(&["verify", "--odd-max-l", "0"]);
    assert_eq!(stdout(&out), "odd l=0: pass\nsummary: 1/1 passed\n");

    let out = run(&["verify", "--even-max-l", "4", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], 4);
    assert_eq!(v["total"], 4);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&run(&["linearize", "--power", "0"])), 2);
    assert_eq!(code(&run(&["gen", "--upto", "-1"])), 2);
    assert_eq!(code(&run(&["gen", "--upto", "3", "--method", "magic"])), 2);
    assert_eq!(code(&run(&["sum", "--m", "0", "--power", "1", "--upto", "3"])), 2);
    assert_eq!(code(&run(&["formula", "--m", "1", "--power", "1", "--format", "csv"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn json_outputs_round_trip() {
    let cases: [&[&str]; 5] = [
        &["gen", "--upto", "12", "--format", "json"],
        &["linearize", "--power", "6", "--format", "json"],
        &["sum", "--m", "3", "--power", "4", "--upto", "9", "--oracle", "--format", "json"],
        &["formula", "--m", "2", "--power", "5", "--format", "json"],
        &["verify", "--odd-max-l", "3", "--format", "json"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(code(&out), 0, "{args:?}");
        let text = stdout(&out);
        assert_eq!(text.matches('\n').count(), 1, "single document: {args:?}");
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string(&v).unwrap() + "\n";
        assert_eq!(again, text, "{args:?}");
    }
}

#[test]
fn formula_json_parses_back_into_core_types() {
    let out = run(&["formula", "--m", "2", "--power", "3", "--format", "json"]);
    let expr: balancing_core::ClosedSumExpr = serde_json::from_slice(&out.stdout).unwrap();
    for n in 0..6 {
        assert_eq!(
            expr.evaluate(n).unwrap(),
            balancing_core::brute_force_power_sum(2, 3, n).unwrap()
        );
    }
    let out = run(&["linearize", "--power", "5", "--format", "json"]);
    let form: balancing_core::LinearForm = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(form, balancing_core::linearize(5).unwrap());
}
