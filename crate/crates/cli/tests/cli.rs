use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};
use tempfile::TempDir;

fn wtoll(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wtoll"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn generated(dir: &Path, name: &str, family: &[&str]) -> String {
    let mut args = vec!["generate"];
    args.extend_from_slice(family);
    let out = wtoll(&args);
    assert!(out.status.success(), "{}", stderr(&out));
    write(dir, name, &stdout(&out)).display().to_string()
}

/// Parsed report with the timing field removed.
fn report(args: &[&str]) -> Value {
    let out = wtoll(args);
    assert!(out.status.success(), "{}", stderr(&out));
    let mut v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let ms = v.as_object_mut().unwrap().remove("ms").expect("report has ms");
    assert!(ms.as_f64().unwrap() >= 0.0);
    v
}

fn plain(args: &[&str]) -> String {
    let mut all = args.to_vec();
    all.push("--plain");
    let out = wtoll(&all);
    assert!(out.status.success(), "{}", stderr(&out));
    stdout(&out).trim_end().to_string()
}

#[test]
fn interval_report_golden() {
    let dir = TempDir::new().unwrap();
    let p4 = generated(dir.path(), "p4.el", &["path", "4"]);
    let v = report(&["interval", &p4, "0", "3"]);
    assert_eq!(
        v,
        json!({
            "command": "interval",
            "input": {
                "n": 4,
                "m": 3,
                "sha256": "4e79e0ded6808ee2c255ac79e5c9cf93a61e5a86ab549a6e74911ef9ef114119"
            },
            "result": { "set": [0, 3], "value": [0, 1, 2, 3] }
        })
    );
    let raw = stdout(&wtoll(&["interval", &p4, "0", "3"]));
    assert!(raw.starts_with(r#"{"command":"interval","input":{"n":4,"m":3,"#));
}

#[test]
fn interval_and_hull_plain() {
    let dir = TempDir::new().unwrap();
    let p5 = generated(dir.path(), "p5.el", &["path", "5"]);
    let k4 = generated(dir.path(), "k4.el", &["complete", "4"]);
    assert_eq!(plain(&["interval", &p5, "0", "2"]), "{0,1,2}");
    assert_eq!(plain(&["hull", &k4, "0"]), "{0}");
    assert_eq!(plain(&["hull", &p5, "0", "4"]), "{0,1,2,3,4}");
}

#[test]
fn invariant_reports() {
    let dir = TempDir::new().unwrap();
    let c5 = generated(dir.path(), "c5.el", &["cycle", "5"]);
    let k5 = generated(dir.path(), "k5.el", &["complete", "5"]);
    let bowtie = generated(dir.path(), "bowtie.el", &["bowtie"]);

    assert_eq!(
        report(&["wth", &c5])["result"],
        json!({ "value": 2, "witness": [0, 2], "case_tag": "PRIME_PAIR" })
    );
    assert_eq!(report(&["wtn", &k5])["result"]["value"], 5);
    assert_eq!(
        report(&["wth", &bowtie])["result"],
        json!({ "value": 4, "witness": [0, 1, 3, 4], "case_tag": "TWO_EXTREMAL_BOTH_EXTREME" })
    );
    assert_eq!(
        report(&["wtn", &bowtie])["result"],
        json!({ "value": 4, "witness": [0, 1, 3, 4], "case_tag": "WTN_K2" })
    );
    assert_eq!(report(&["wtc", &c5])["result"]["value"], 2);
    assert_eq!(
        plain(&["wth", &c5]),
        "value 2\nwitness {0,2}\ncase PRIME_PAIR"
    );
}

#[test]
fn structure_reports() {
    let dir = TempDir::new().unwrap();
    let p4 = generated(dir.path(), "p4.el", &["path", "4"]);
    let d = report(&["decompose", &p4]);
    let atoms = d["result"]["atoms"].as_array().unwrap();
    assert_eq!(atoms.len(), 3);
    assert_eq!(atoms.iter().filter(|a| a["extremal"] == true).count(), 2);
    assert_eq!(d["result"]["prime"], false);
    assert_eq!(atoms[0]["vertices"], json!([0, 1]));
    assert_eq!(atoms[0]["partner"], 1);

    let k33 = write(
        dir.path(),
        "k33.el",
        "6 9\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n",
    );
    let t = report(&["twins", k33.to_str().unwrap()]);
    assert_eq!(
        t["result"]["classes"],
        json!([[0], [1], [2], [3], [4], [5]])
    );

    assert_eq!(plain(&["extreme", &p4]), "{0,3}");
    assert_eq!(report(&["extreme", &p4])["result"], json!({ "extreme": [0, 3] }));
}

#[test]
fn generate_families() {
    assert_eq!(stdout(&wtoll(&["generate", "path", "4"])), "4 3\n0 1\n1 2\n2 3\n");
    assert_eq!(stdout(&wtoll(&["generate", "complete", "3", "--format", "g6"])), "Bw\n");
    let a = stdout(&wtoll(&["generate", "random-gnp", "20", "0.3", "--seed", "7"]));
    let b = stdout(&wtoll(&["generate", "random-gnp", "20", "0.3", "--seed", "7"]));
    let c = stdout(&wtoll(&["generate", "random-gnp", "20", "0.3", "--seed", "8"]));
    assert_eq!(a, b);
    assert_ne!(a, c);
    assert!(a.starts_with("20 "));

    let dir = TempDir::new().unwrap();
    let p4 = generated(dir.path(), "p4.el", &["path", "4"]);
    let out_path = dir.path().join("reduced.el");
    let out = wtoll(&[
        "generate",
        "clique-reduction",
        &p4,
        "3",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert!(text.starts_with("# clique reduction, k' = 3\n# x 4 0 2\n# x 5 0 3\n# x 6 1 3\n7 9\n"));
    // the output is itself a valid graph file
    let d = report(&["decompose", out_path.to_str().unwrap()]);
    assert_eq!(d["result"]["prime"], true);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let disconnected = write(dir.path(), "dis.el", "3 1\n0 1\n");
    let bad = write(dir.path(), "bad.el", "3 2\n0 1\n");
    let p4 = generated(dir.path(), "p4.el", &["path", "4"]);
    let p17 = generated(dir.path(), "p17.el", &["path", "17"]);

    let out = wtoll(&["wth", disconnected.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("disconnected"));

    let out = wtoll(&["wtn", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"));

    assert_eq!(wtoll(&["interval", &p4, "9"]).status.code(), Some(2));
    assert_eq!(wtoll(&["interval", "/nonexistent/x.el", "0"]).status.code(), Some(2));
    assert_eq!(wtoll(&["wtc", &p17]).status.code(), Some(4));
    assert!(wtoll(&["wtc", &p17, "--cap", "17"]).status.success());
    assert_eq!(wtoll(&["generate", "nope", "3"]).status.code(), Some(2));
    assert_eq!(wtoll(&["generate", "clique-reduction", &p4, "2"]).status.code(), Some(2));
}

#[test]
fn formats_and_stdin() {
    let dir = TempDir::new().unwrap();
    let el = generated(dir.path(), "c5.el", &["cycle", "5"]);
    let g6 = generated(dir.path(), "c5.g6", &["cycle", "5", "--format", "g6"]);
    let txt = write(dir.path(), "c5.txt", &std::fs::read_to_string(&g6).unwrap());

    let from_el = report(&["wth", &el]);
    assert_eq!(report(&["wth", &g6]), from_el);
    assert_eq!(report(&["wth", txt.to_str().unwrap(), "--format", "g6"]), from_el);
    assert_eq!(wtoll(&["wth", txt.to_str().unwrap()]).status.code(), Some(2));

    let mut child = Command::new(env!("CARGO_BIN_EXE_wtoll"))
        .args(["extreme", "-", "--plain"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    {
        use std::io::Write;
        child.stdin.take().unwrap().write_all(b"4 3\n0 1\n1 2\n2 3\n").unwrap();
    }
    let out = child.wait_with_output().unwrap();
    assert_eq!(stdout(&out).trim(), "{0,3}");
}

#[test]
fn bench_csv() {
    let dir = TempDir::new().unwrap();
    let out = wtoll(&["bench", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "graph,n,m,op,value,ms\n");

    generated(dir.path(), "k100.el", &["complete", "100"]);
    generated(dir.path(), "p6.g6", &["path", "6", "--format", "g6"]);
    write(dir.path(), "broken.el", "2 5\n0 1\n");
    write(dir.path(), "readme.txt", "not a graph");
    let out = wtoll(&["bench", dir.path().to_str().unwrap(), "--ops", "wth,wtn"]);
    assert!(out.status.success());
    let csv = stdout(&out);
    let rows: Vec<Vec<&str>> = csv.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 4);
    assert_eq!(&rows[0][..5], &["k100.el", "100", "4950", "wth", "100"]);
    assert_eq!(&rows[2][..5], &["p6.g6", "6", "5", "wth", "2"]);
    let warnings = stderr(&out);
    assert!(warnings.contains("broken.el"));
    assert!(warnings.contains("readme.txt"));

    let csv_path = dir.path().join("out.csv");
    let out = wtoll(&[
        "bench",
        dir.path().to_str().unwrap(),
        "--ops",
        "interval",
        "--out",
        csv_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let summary: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(summary["rows"], 2);
    assert!(std::fs::read_to_string(&csv_path).unwrap().starts_with("graph,n,m,op,value,ms\n"));
}
