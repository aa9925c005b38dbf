//! The `flexia` binary end to end.

use std::net::TcpListener;
use std::path::PathBuf;
use std::process::{Child, Command, Output, Stdio};
use std::thread;
use std::time::{Duration, Instant};

use flexia::wire::{dispatch, Function, Query};
use flexia::Engine;

fn flexia(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flexia"))
        .args(args)
        .env_remove("FLEXIA_DATA_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixture() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/data/opcorpora_sample.tsv.gz")
        .display()
        .to_string()
}

#[test]
fn inflect_prints_the_form() {
    let out = flexia(&["inflect", "ru_noun", "машина", "cr", "nx"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "машин\n");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(flexia(&["inflect", "ru_noun"]).status.code(), Some(2));
    assert_eq!(flexia(&["paradigm"]).status.code(), Some(2));
    assert_eq!(flexia(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn engine_errors_exit_1() {
    let out = flexia(&["inflect", "ru_noun", "машина", "cr"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ERR:ARGS"));
}

#[test]
fn paradigm_prints_the_grid() {
    let out = flexia(&["paradigm", "noun", "машина"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 12);
    assert!(text.lines().any(|l| l == "nx;cr\tмашин"));
    assert_eq!(stdout(&flexia(&["paradigm", "verb", "читать"])).lines().count(), 24);
}

#[test]
fn synth_reads_formulas() {
    assert_eq!(stdout(&flexia(&["synth", "2+3=5"])), "два плюс три равно пяти\n");
}

#[test]
fn inflect_matches_wire_dispatch() {
    let engine = Engine::builtin();
    let queries: [(&str, &[&str]); 5] = [
        ("ru_noun", &["стол", "ct", "nx"]),
        ("ru_verb", &["изучить", "p3", "n1", "gm", "tc"]),
        ("ru_adjective", &["русский", "nx", "gf", "ti", "na"]),
        ("ru_numeral", &["11/12", "frac"]),
        ("ru_gerund", &["прочитать"]),
    ];
    for (function, args) in queries {
        let mut argv = vec!["inflect", function];
        argv.extend_from_slice(args);
        let cli = stdout(&flexia(&argv));
        let wire = dispatch(&engine, &Query::new(Function::from_name(function).unwrap(), args.iter().copied()));
        assert_eq!(cli.trim_end(), wire.text(), "{function} {args:?}");
    }
}

#[test]
fn verify_and_reproduce_on_the_fixture() {
    let out = flexia(&["verify", "--corpus", &fixture(), "--pos", "noun,gerund", "--mismatches", "/dev/stdout"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("noun: ") && text.contains("gerund: "));

    let rows = std::env::temp_dir().join(format!("flexia-cli-mismatches-{}.tsv", std::process::id()));
    let out = flexia(&["verify", "--corpus", &fixture(), "--pos", "verb", "--mismatches", rows.to_str().unwrap()]);
    assert!(out.status.success());
    let written = std::fs::read_to_string(&rows).unwrap().lines().count();
    assert!(written > 0);
    let out = flexia(&["reproduce", rows.to_str().unwrap()]);
    let _ = std::fs::remove_file(&rows);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim_end(), format!("{written}/{written} rows reproduce"));
}

struct Serving(Child);

impl Drop for Serving {
    fn drop(&mut self) {
        let _ = self.0.kill();
        let _ = self.0.wait();
    }
}

#[test]
fn serve_and_query() {
    let port = TcpListener::bind("127.0.0.1:0").unwrap().local_addr().unwrap().port().to_string();
    let _server = Serving(
        Command::new(env!("CARGO_BIN_EXE_flexia"))
            .args(["serve", "--port", &port])
            .stdout(Stdio::null())
            .stderr(Stdio::null())
            .spawn()
            .unwrap(),
    );
    let deadline = Instant::now() + Duration::from_secs(10);
    loop {
        let out = flexia(&["query", "--port", &port, "ru_noun;машина;cr;nx"]);
        if out.status.success() {
            assert_eq!(stdout(&out), "машин\n");
            break;
        }
        assert!(Instant::now() < deadline, "server did not come up");
        thread::sleep(Duration::from_millis(50));
    }
    let out = flexia(&["query", "--port", &port, "ru_noun;машина;zz;nx"]);
    assert_eq!(stdout(&out), "ERR:CODE\n");
}
