use std::path::PathBuf;
use std::process::Command as Process;

use bcres::input::parse_monomial;
use bcres::{load_input, parse_input, render_report, run_command, CliError, Command, Format, Options, Report, Subject};
use bcres_core::Matroid;

const U24: &str = r#"{"kind":"matroid","payload":{"type":"uniform","p":2,"n":4}}"#;
const PARALLEL: &str =
    r#"{"kind":"matroid","payload":{"type":"circuits","n":6,"circuits":[[4,5,6],[1,2,3,6],[1,2,3,4,5]]}}"#;

fn report(command: Command, doc: &str) -> Report {
    run_command(command, Some(&load_input(doc).unwrap()), &Options::default()).unwrap()
}

fn verdict<'a>(r: &'a Report, name: &str) -> &'a str {
    &r.verdicts.iter().find(|v| v.name == name).unwrap().value
}

fn input_field(text: &str) -> String {
    match parse_input(text) {
        Err(CliError::Input { field, .. }) => field,
        other => panic!("expected an input error, got {other:?}"),
    }
}

#[test]
fn documented_inputs_parse() {
    let doc = parse_input(U24).unwrap();
    match doc.subject().unwrap() {
        Subject::Matroid(m) => assert_eq!(m, Matroid::uniform(2, 4).unwrap()),
        other => panic!("{other:?}"),
    }
    let doc = parse_input(PARALLEL).unwrap();
    match doc.subject().unwrap() {
        Subject::Matroid(m) => {
            assert_eq!(m.full_rank(), 4);
            assert_eq!(m.circuits().len(), 3);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn parse_errors_name_the_field() {
    assert_eq!(
        input_field(r#"{"kind":"arrangement","payload":{"rows":[["1","0"],["0","1/x"]]}}"#),
        "payload.rows[1][1]"
    );
    assert_eq!(
        input_field(r#"{"kind":"matroid","payload":{"type":"linear","rows":[["1","1/0"]]}}"#),
        "payload.rows[0][1]"
    );
    assert_eq!(
        input_field(
            r#"{"kind":"matroid","payload":{"type":"direct-sum","parts":[{"type":"uniform","p":1,"n":2},{"type":"linear","rows":[["2/q"]]}]}}"#
        ),
        "payload.parts[1].rows[0][0]"
    );
    assert_eq!(input_field(r#"{"kind":"matroid","payload":{"type":"unif"}}"#), "payload.type");
    assert_eq!(input_field(r#"{"kind":"polytope","payload":{}}"#), "kind");
    assert_eq!(
        input_field(r#"{"kind":"ideal","payload":{"generators":["x1*x2","x3^a"]}}"#),
        "payload.generators[1]"
    );
    assert!(input_field("{\"kind\":\n").starts_with("line 2"));
}

#[test]
fn circuit_axiom_failures_report_the_pair() {
    let err = parse_input(r#"{"kind":"matroid","payload":{"type":"circuits","n":4,"circuits":[[1,2],[2,3,4]]}}"#)
        .unwrap_err();
    let text = err.to_string();
    assert!(text.contains("circuit elimination") && text.contains("[\"1\", \"2\"]"), "{text}");
    assert_eq!(err.exit_code(), 1);
}

#[test]
fn monomials_parse() {
    let m = parse_monomial("x1*x3^2", None).unwrap();
    assert_eq!(m.exponents(), &[(0, 1), (2, 2)]);
    assert!(parse_monomial("1", None).unwrap().is_one());
    let names = vec!["a".to_string(), "b".to_string()];
    assert_eq!(parse_monomial("b^3 * a", Some(&names)).unwrap().exponents(), &[(0, 1), (1, 3)]);
    assert!(parse_monomial("y1", None).is_err());
    assert!(parse_monomial("c", Some(&names)).is_err());
}

#[test]
fn documents_round_trip() {
    for text in [
        U24,
        PARALLEL,
        r#"{"kind":"arrangement","payload":{"rows":[["1","0","1"],["0","1","-1/2"]]},"order":["3","2","1"]}"#,
        r#"{"kind":"graph","payload":{"edges":[["a","b"],["b","c"],["c","a"]]}}"#,
        r#"{"kind":"ideal","payload":{"nvars":4,"generators":["x1*x2","x4"]}}"#,
    ] {
        let doc = parse_input(text).unwrap();
        let again = parse_input(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(doc, again);
    }
}

#[test]
fn betti_report_for_u24() {
    let r = report(Command::Betti, U24);
    assert_eq!(verdict(&r, "linearity"), "2-linear");
    let text = render_report(&r, Format::Human);
    assert!(text.contains("2: 3 2"), "{text}");
    assert_eq!(r.exit_code(), 0);
}

#[test]
fn empty_betti_table_renders_as_zero_ideal() {
    let r = report(Command::Betti, r#"{"kind":"ideal","payload":{"nvars":3,"generators":[]}}"#);
    assert_eq!(r.result["betti_grid"], "0 (zero ideal)");
    assert!(render_report(&r, Format::Human).contains("betti_grid: 0 (zero ideal)"));
}

#[test]
fn info_renders_tutte_in_descending_order() {
    let r = report(Command::Info, U24);
    assert_eq!(verdict(&r, "tutte polynomial"), "x^2 + 2x + y^2 + 2y");
    assert_eq!(r.result["bases"], 6);
}

#[test]
fn cross_validation_of_parallel_connection() {
    let r = report(Command::CrossValidate, PARALLEL);
    assert_eq!(verdict(&r, "summary"), "graded-linear, no two-term decomposition");
    assert!(r
        .verdicts
        .iter()
        .filter(|v| !v.name.contains("empirical") && v.name != "summary")
        .all(|v| v.value == "confirmed"));
}

#[test]
fn gnr_command() {
    let opts = Options {
        cycles: Some(vec![3, 3]),
        ..Options::default()
    };
    let r = run_command(Command::Gnr, None, &opts).unwrap();
    assert_eq!(verdict(&r, "complete intersection"), "true");
    assert_eq!(verdict(&r, "cohen-macaulay"), "true");
    assert!(run_command(Command::Gnr, None, &Options::default()).is_err());
}

#[test]
fn order_changes_the_broken_circuit_ideal() {
    let natural = report(Command::Bc, PARALLEL);
    let opts = Options {
        order: Some(["6", "5", "4", "3", "2", "1"].map(String::from).to_vec()),
        ..Options::default()
    };
    let reversed = run_command(Command::Bc, Some(&load_input(PARALLEL).unwrap()), &opts).unwrap();
    assert_eq!(natural.result["ideal"], "(x5x6, x2x3x6, x2x3x4x5)");
    assert_ne!(natural.result["ideal"], reversed.result["ideal"]);
    let partial = Options {
        order: Some(vec!["1".into()]),
        ..Options::default()
    };
    assert!(run_command(Command::Bc, Some(&load_input(PARALLEL).unwrap()), &partial).is_err());
}

#[test]
fn reports_round_trip_and_are_deterministic() {
    let docs = [
        U24,
        PARALLEL,
        r#"{"kind":"arrangement","payload":{"rows":[["1","0","1"],["0","1","1"]]}}"#,
        r#"{"kind":"graph","payload":{"edges":[[1,2],[2,3],[3,1],[3,4]]}}"#,
        r#"{"kind":"ideal","payload":{"generators":["x1*x2","x2*x3","x3*x4"]}}"#,
    ];
    let mut produced = 0;
    for doc in docs {
        let input = load_input(doc).unwrap();
        for command in Command::ALL {
            let Ok(r) = run_command(command, Some(&input), &Options::default()) else {
                continue;
            };
            produced += 1;
            let json = render_report(&r, Format::Json);
            let back: Report = serde_json::from_str(&json).unwrap();
            assert_eq!(back, r, "{} on {doc}", command.name());
            let again = run_command(command, Some(&input), &Options::default()).unwrap();
            assert_eq!(render_report(&again, Format::Json), json);
        }
    }
    assert!(produced >= 30, "{produced}");
}

#[test]
fn commands_reject_unsuitable_inputs() {
    let ideal = load_input(r#"{"kind":"ideal","payload":{"generators":["x1"]}}"#).unwrap();
    for c in [Command::Bc, Command::Decompose, Command::Stratify, Command::Arrangement, Command::Graph] {
        assert!(matches!(run_command(c, Some(&ideal), &Options::default()), Err(CliError::Usage(_))));
    }
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bcres-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn run_bin(args: &[&str]) -> (i32, String, String) {
    let out = Process::new(env!("CARGO_BIN_EXE_bcres")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn binary_exit_statuses() {
    let u = temp_file("u24.json", U24);
    let (code, out, _) = run_bin(&["betti", u.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("2-linear"));

    let (code, out, _) = run_bin(&["info", u.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 0);
    let r: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(r.command, "info");
    assert_eq!(r.provenance.input_sha256.as_deref().map(str::len), Some(64));

    let bad = temp_file("bad.json", r#"{"kind":"matroid","payload":{"type":"linear","rows":[["1/0"]]}}"#);
    let (code, _, err) = run_bin(&["info", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("payload.rows[0][0]"), "{err}");

    let big = temp_file("big.json", r#"{"kind":"matroid","payload":{"type":"uniform","p":2,"n":14}}"#);
    let (code, out, _) = run_bin(&["stratify", big.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.contains("inconclusive: bound"), "{out}");

    let (code, out, _) = run_bin(&["gnr", "--cycles", "3,4", "--bridge", "path:2"]);
    assert_eq!(code, 0);
    assert!(out.contains("complete intersection: true"));

    assert_eq!(run_bin(&["betti", u.to_str().unwrap(), "--char", "4"]).0, 1);
    assert_eq!(run_bin(&["frobnicate", u.to_str().unwrap()]).0, 1);
}
