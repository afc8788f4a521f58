use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use runs_cli::{parse_runs_tsv, verify_report};
use runs_core::{all_runs, compute_runs, gen_fibonacci, Direction, OrderSpec, Text};

fn runs_bin(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_runs"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

const FIG1: &str = "aaaaabcabababcabababcabababcabaaaaa";

#[test]
fn runs_examples() {
    let o = runs_bin(&["runs"], b"bananatree");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "2\t6\t2\n9\t10\t1\n");

    let o = runs_bin(&["runs"], b"");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "");

    let o = runs_bin(&["runs"], FIG1.as_bytes());
    assert!(stdout(&o).lines().any(|l| l == "5\t31\t7"));
}

#[test]
fn runs_direction_and_stats() {
    let o = runs_bin(&["runs", "--direction", "--stats"], b"bananatree");
    assert_eq!(stdout(&o), "2\t6\t2\tinc\n9\t10\t1\tdec\n");
    let err = String::from_utf8(o.stderr).unwrap();
    let last = err.lines().last().unwrap();
    assert!(last.starts_with("n=10 runs=2 runs_per_100n=20.0 comparisons="), "{last}");
    assert!(last.contains(" mibps="));
}

#[test]
fn runs_output_reparses_to_library_result() {
    let text = gen_fibonacci(12).unwrap();
    let o = runs_bin(&["runs", "--direction"], text.as_bytes());
    let parsed = parse_runs_tsv(stdout(&o)).unwrap();
    let expected: Vec<_> =
        all_runs(&text).iter().map(|r| (r.start, r.end, r.period, Some(r.direction))).collect();
    assert_eq!(parsed, expected);
}

#[test]
fn unreadable_input_fails() {
    let o = runs_bin(&["runs", "/nonexistent/input"], b"");
    assert!(!o.status.success());
    assert!(String::from_utf8(o.stderr).unwrap().contains("/nonexistent/input"));
}

#[test]
fn nss_examples() {
    let o = runs_bin(&["nss"], b"banana");
    assert_eq!(stdout(&o), "1\t2\t1\n2\t4\t2\n3\t4\t1\n4\t6\t2\n5\t6\t1\n6\t7\t1\n");
    assert_eq!(stdout(&runs_bin(&["nss"], b"a")), "1\t2\t1\n");
    let aaaa = runs_bin(&["nss"], b"aaaa");
    let nss: Vec<&str> = stdout(&aaaa).lines().map(|l| l.split('\t').nth(1).unwrap()).collect();
    assert_eq!(nss, ["2", "3", "4", "5"]);
}

#[test]
fn orders_from_flags_and_files() {
    assert_eq!(stdout(&runs_bin(&["nss", "--order", "reversed"], b"cba")), "1\t4\t3\n2\t4\t2\n3\t4\t1\n");

    let path = scratch("reversed.perm");
    let ranks: String = (0..=255u8).rev().map(|r| format!("{r}\n")).collect();
    std::fs::write(&path, ranks).unwrap();
    let spec = format!("perm:{}", path.display());
    let from_file = runs_bin(&["nss", "--order", &spec], b"cbacab");
    assert_eq!(stdout(&from_file), stdout(&runs_bin(&["nss", "--order", "reversed"], b"cbacab")));

    let o = runs_bin(&["nss", "--order", "sideways"], b"ab");
    assert!(!o.status.success());
}

#[test]
fn verify_exit_codes() {
    let o = runs_bin(&["verify"], FIG1.as_bytes());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "");

    let o = runs_bin(&["verify", "--order", "reversed"], b"abaababaabaab");
    assert_eq!(o.status.code(), Some(0));

    let o = runs_bin(&["verify", "--max-oracle-n", "5"], b"banana");
    assert_eq!(o.status.code(), Some(2));

    let big = vec![b'a'; 4097];
    assert_eq!(runs_bin(&["verify"], &big).status.code(), Some(2));
    assert_eq!(runs_bin(&["verify", "--max-oracle-n", "100000"], &big).status.code(), Some(2));
}

#[test]
fn verify_reports_corrupted_tables() {
    let text = Text::from("banana");
    let order = OrderSpec::natural();
    let mut computed = compute_runs(&text, &order);
    computed.passes[0].lce.llce.set(2, Some(5));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(verify_report(&text, &order, &computed, &mut out, &mut err).unwrap(), 1);
    assert_eq!(String::from_utf8(out).unwrap(), "llce\tpass=0\ti=2\texpected=1\tactual=5\n");

    let mut computed = compute_runs(&text, &order);
    computed.runs[0].direction = Direction::Increasing;
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(verify_report(&text, &order, &computed, &mut out, &mut err).unwrap(), 1);
    assert!(String::from_utf8(out).unwrap().starts_with("direction\t2\t6\t2\texpected=dec\tactual=inc"));
}

#[test]
fn gen_families() {
    assert_eq!(stdout(&runs_bin(&["gen", "--family", "fib:5"], b"")), "abaab");
    assert_eq!(stdout(&runs_bin(&["gen", "--family", "tm:3"], b"")), "abbabaab");
    assert_eq!(stdout(&runs_bin(&["gen", "--family", "fib:10", "--len", "7"], b"")), "abaabab");
    assert_eq!(stdout(&runs_bin(&["gen", "--family", "periodic:3", "--len", "7"], b"")), "abcabca");

    let a = runs_bin(&["gen", "--family", "random", "--len", "1000", "--sigma", "4", "--seed", "9"], b"");
    let b = runs_bin(&["gen", "--family", "random", "--len", "1000", "--sigma", "4", "--seed", "9"], b"");
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout.len(), 1000);
    assert!(a.stdout.iter().all(|c| (b'a'..=b'd').contains(c)));

    let path = scratch("fib8.txt");
    let o = runs_bin(&["gen", "--family", "fib:8", "-o", path.to_str().unwrap()], b"");
    assert!(o.status.success());
    assert_eq!(std::fs::read(&path).unwrap(), gen_fibonacci(8).unwrap().as_bytes());

    assert!(!runs_bin(&["gen", "--family", "random"], b"").status.success());
    assert!(!runs_bin(&["gen", "--family", "zigzag"], b"").status.success());
}

#[test]
fn bench_table() {
    let fib = scratch("fib25.txt");
    std::fs::write(&fib, gen_fibonacci(25).unwrap().as_bytes()).unwrap();
    let o = runs_bin(&["bench", "--repeat", "1", fib.to_str().unwrap(), "/nonexistent/file"], b"");
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("name\tn\truns/100n\tMiB/s\tcomparisons/n"));
    let row: Vec<&str> = lines.next().unwrap().split('\t').collect();
    assert_eq!(&row[..3], ["fib25.txt", "75025", "76.3"]);
    assert!(row[3].parse::<f64>().unwrap() > 0.0);
    assert!(row[4].parse::<f64>().unwrap() <= 16.0);
    assert_eq!(lines.next(), None);
    assert!(String::from_utf8(o.stderr).unwrap().contains("/nonexistent/file"));
}

#[test]
fn output_is_deterministic() {
    let text = gen_fibonacci(15).unwrap();
    for args in [&["runs", "--direction"][..], &["nss"][..]] {
        assert_eq!(runs_bin(args, text.as_bytes()).stdout, runs_bin(args, text.as_bytes()).stdout);
    }
}
