use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_padic-fft"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn plan_prints_parameters() {
    let out = run(&["plan", "-p", "3", "-N", "100"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("p=3 N=100 r=2 s=104 d=6\n"));
}

#[test]
fn root_prints_lifted_factor() {
    let out = run(&["root", "-p", "19", "-s", "5", "-K", "2", "--seed", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let f = text.lines().find(|l| l.starts_with("f = ")).unwrap();
    assert!(f == "f = X^2 + 5*X + 1 (mod 19)" || f == "f = X^2 + 15*X + 1 (mod 19)", "{f}");
    if f.contains("5*X + 1") && !f.contains("15") {
        assert!(text.contains("lifted = X^2 + 43*X + 1 (mod 19^2)"));
    }
}

#[test]
fn root_factor_depends_only_on_inputs() {
    let args = ["root", "-p", "3", "-N", "100", "-K", "8", "--seed", "0x1234"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn multiplies_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.txt", "3 4\n0\n1\n1\n");
    let out = dir.path().join("out.txt");
    let status = run(&["mul", &a, &a, "-o", out.to_str().unwrap()]);
    assert!(status.status.success());
    assert_eq!(std::fs::read_to_string(out).unwrap(), "3 4\n0\n1\n2\n1\n");
}

#[test]
fn multiplication_adds_exponents_and_reduces() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.txt", "19 2\n-1\n360\n5\n7\n");
    let b = write(dir.path(), "b.txt", "19 2\n3\n2\n0\n0\n1\n");
    let out = run(&["mul", &a, &b]);
    assert!(out.status.success());
    // (360 + 5Y + 7Y^2)(2 + Y^3) mod 361
    let expected = "19 2\n2\n359\n10\n14\n360\n5\n7\n";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn small_dft_file() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.txt", "3 4\n0\n1\n1\n");
    let out = run(&["dft", "-s", "4", &a]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4 2\n0\n2\n0\n1\n1\n0\n0\n1\n80\n");
}

#[test]
fn dft_then_idft_restores_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let coeffs: Vec<String> = (1..=60u64).map(|i| (i * i * 7919 % 6561).to_string()).collect();
    let text = format!("3 8\n-3\n{}\n", coeffs.join("\n"));
    let input = write(dir.path(), "f.txt", &text);
    let evals = dir.path().join("f.eval");
    let back = dir.path().join("back.txt");
    let first = run(&["dft", "--seed", "7", &input, "-o", evals.to_str().unwrap()]);
    assert!(first.status.success(), "{}", String::from_utf8_lossy(&first.stderr));
    let header = std::fs::read_to_string(&evals).unwrap();
    assert!(header.starts_with("104 6\n-3\n"));
    let second =
        run(&["idft", "-p", "3", "-K", "8", "--seed", "7", evals.to_str().unwrap(), "-o", back.to_str().unwrap()]);
    assert!(second.status.success(), "{}", String::from_utf8_lossy(&second.stderr));
    assert_eq!(std::fs::read_to_string(back).unwrap(), text);
}

#[test]
fn same_job_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.txt", "19 3\n0\n5\n6\n7\n8\n");
    let first = run(&["dft", "-N", "10", &a]);
    let second = run(&["dft", "-N", "10", &a]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn error_codes_and_exit_status() {
    let out = run(&["plan", "-p", "9", "-N", "10"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(String::from_utf8(out.stderr).unwrap().lines().next().unwrap(), "ERROR NotPrime 9 is not prime");

    let out = run(&["plan", "-p", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["mul", "/nonexistent/a", "/nonexistent/b"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("ERROR Io "));

    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "3 4\n0\n81\n");
    let out = run(&["dft", &bad]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("ERROR BadInput "));

    let long = write(dir.path(), "long.txt", "3 4\n0\n1\n1\n1\n");
    let out = run(&["dft", "-s", "2", &long]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("ERROR DegreeOverflow "));

    let out = run(&["root", "-p", "3", "-s", "6"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("ERROR NotCoprime "));
}

#[test]
fn bench_emits_csv() {
    let out = run(&["bench", "-p", "3", "-K", "4", "--ns", "10,100"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "N,r,s,d,s/N,predicted,predicted/N,small_d,d_matches,measured");
    for line in lines {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells.len(), 10);
        let predicted: u64 = cells[5].parse().unwrap();
        let measured: u64 = cells[9].parse().unwrap();
        assert!(measured <= 8 * predicted);
    }
}
