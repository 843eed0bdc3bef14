use std::path::Path;
use std::process::{Command, Output};

use azumaya::algebra::Algebra;
use azumaya::coalgebra::{dual_algebra, dual_coalgebra, Coalgebra};
use azumaya::fixtures;
use azumaya::linalg::Field;
use azumaya_cli::corpus::CORPUS;
use azumaya_cli::document::{parse_str, Document, Object};
use azumaya_cli::report::{exit, Report, Witness};
use azumaya_cli::run::{run, RunOptions};
use azumaya_cli::{dualize, InputError};
use serde_json::Value;

const Q: Field = Field::Rational;

fn fixture(name: &str) -> Document {
    let (_, text) = CORPUS
        .iter()
        .find(|(n, _)| *n == name)
        .unwrap_or_else(|| panic!("no fixture {name}"));
    parse_str(text).unwrap()
}

fn algebra(doc: &Document, name: &str) -> Algebra {
    match &doc.objects[name] {
        Object::Algebra(a) => a.clone(),
        other => panic!("{name} is a {}", other.kind()),
    }
}

fn coalgebra(doc: &Document, name: &str) -> Coalgebra {
    match &doc.objects[name] {
        Object::Coalgebra(c) => c.clone(),
        other => panic!("{name} is a {}", other.kind()),
    }
}

fn report(name: &str) -> Report {
    run(&fixture(name), &RunOptions::default())
}

fn verdict(r: &Report, object: &str, check: &str, key: &str) -> bool {
    r.results[object][check].verdicts[key]
}

fn azk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_azk"))
        .args(args)
        .env_remove("AZK_SEED")
        .output()
        .unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn fixture_documents_match_builtin_fixtures() {
    assert_eq!(algebra(&fixture("m2.json"), "M2"), fixtures::m2(Q));
    assert_eq!(algebra(&fixture("qxq.json"), "QxQ"), fixtures::q_times_q(Q));
    assert_eq!(
        algebra(&fixture("dualnumbers.json"), "DualNumbers"),
        fixtures::dual_numbers(Q)
    );
    assert_eq!(
        algebra(&fixture("quaternions.json"), "H"),
        fixtures::quaternions(Q)
    );
    assert_eq!(
        algebra(&fixture("supercl1.json"), "Cl1"),
        fixtures::super_cl1(Q)
    );
    assert_eq!(
        algebra(&fixture("cl1_trivial.json"), "Cl1"),
        fixtures::cl1_trivial(Q)
    );
    assert_eq!(algebra(&fixture("ground.json"), "k"), fixtures::ground(Q));
    assert_eq!(
        coalgebra(&fixture("m2_comatrix.json"), "M2c"),
        fixtures::m2_comatrix(Q)
    );
    assert_eq!(
        coalgebra(&fixture("grouplike2.json"), "G2"),
        fixtures::grouplike(Q, 2)
    );
    let f7 = Field::prime(7).unwrap();
    assert_eq!(
        algebra(&fixture("cyclic_cubic.json"), "CyclicCubic"),
        fixtures::cyclic_cubic(f7, f7.from_i64(2))
    );
    assert!(algebra(&fixture("zero.json"), "Zero").is_zero());
}

#[test]
fn composite_fields_are_rejected() {
    let text = r#"{"schema": 1, "field": {"Fp": 4}, "objects": {}}"#;
    match parse_str(text) {
        Err(InputError::Invalid { field, message }) => {
            assert_eq!(field, "field.Fp");
            assert!(message.contains("not prime"), "{message}");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn bicharacter_must_respect_group_order() {
    let text =
        r#"{"schema": 1, "field": "Q", "group": [3], "bicharacter": [["-1"]], "objects": {}}"#;
    match parse_str(text) {
        Err(InputError::Invalid { field, .. }) => assert_eq!(field, "bicharacter"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn malformed_input_diagnostics_name_the_field() {
    let cases = [
        (r#"{"schema": 2, "field": "Q", "objects": {}}"#, "schema"),
        (
            r#"{"schema": 1, "field": "Q", "objects": {"A": {"kind": "algebra", "dim": 1, "structure": [[0,0,0,"x"]], "unit": ["1"]}}}"#,
            "objects.A.structure[0]",
        ),
        (
            r#"{"schema": 1, "field": "Q", "objects": {}, "checks": [{"check": "azumaya", "object": "B"}]}"#,
            "checks[0].object",
        ),
        (
            r#"{"schema": 1, "field": "Q", "objects": {"A": {"kind": "algebra", "dim": 2, "degrees": [0], "structure": [], "unit": ["1", "0"]}}}"#,
            "objects.A.degrees",
        ),
    ];
    for (text, expected) in cases {
        match parse_str(text) {
            Err(InputError::Invalid { field, .. }) => assert_eq!(field, expected, "{text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
    assert!(matches!(parse_str("{"), Err(InputError::Syntax(_))));
    // Nonassociative structure constants are rejected at construction.
    let bad = r#"{"schema": 1, "field": "Q", "objects": {"A": {"kind": "algebra", "dim": 1, "structure": [[0,0,0,"2"]], "unit": ["1"]}}}"#;
    assert!(matches!(parse_str(bad), Err(InputError::Invalid { .. })));
}

#[test]
fn m2_is_azumaya_with_invertible_chi0() {
    let r = report("m2.json");
    assert!(verdict(&r, "M2", "azumaya", "azumaya"));
    let checks = &r.results["M2"]["azumaya"];
    assert_eq!(checks.ranks["chi0"], 16);
    match &checks.witnesses["chi0_inverse"] {
        Witness::Full { rows, cols, .. } => assert_eq!((*rows, *cols), (16, 16)),
        w => panic!("{w:?}"),
    }
    assert!(verdict(&r, "M2", "separability", "separable"));
    assert!(verdict(&r, "M2", "center", "central"));
}

#[test]
fn dual_numbers_fail() {
    let r = report("dualnumbers.json");
    assert!(!verdict(&r, "DualNumbers", "separability", "separable"));
    assert!(!verdict(&r, "DualNumbers", "azumaya", "azumaya"));
    assert_eq!(r.results["DualNumbers"]["azumaya"].ranks["chi0"], 2);
    let sep = &r.results["DualNumbers"]["separability"];
    assert!(sep.ranks["system"] < sep.ranks["augmented_system"]);
}

#[test]
fn grading_changes_the_verdict() {
    let graded = report("supercl1.json");
    let plain = report("cl1_trivial.json");
    assert!(verdict(&graded, "Cl1", "azumaya", "azumaya"));
    assert!(!verdict(&plain, "Cl1", "azumaya", "azumaya"));
    assert!(verdict(
        &graded,
        "Cl1",
        "bd_laws",
        "tau.composite_equals_enveloping"
    ));
}

#[test]
fn relative_checks_are_keyed_by_base() {
    let r = report("m2_comatrix.json");
    assert!(!verdict(&r, "M2c", "relative", "factorized"));
    assert!(verdict(&r, "M2c", "relative@K", "factorized"));
    assert_eq!(r.results["M2c"]["relative@K"].ranks["cotensor"], 16);
    let g = report("grouplike2.json");
    assert_eq!(g.results["G2"]["relative"].ranks["cotensor"], 2);
}

#[test]
fn unknown_check_is_an_input_error() {
    let text = r#"{"schema": 1, "field": "Q", "objects": {"A": {"kind": "algebra", "dim": 1, "structure": [[0,0,0,"1"]], "unit": ["1"]}}, "checks": [{"check": "coseparability", "object": "A"}, {"check": "bogus", "object": "A"}]}"#;
    let r = run(&parse_str(text).unwrap(), &RunOptions::default());
    assert_eq!(r.input_errors.len(), 2);
    assert_eq!(r.exit_status(), exit::INPUT_ERROR);
}

#[test]
fn only_filter_and_witness_digests() {
    let doc = fixture("m2.json");
    let options = RunOptions {
        only: Some(vec!["center".into()]),
        ..RunOptions::default()
    };
    let r = run(&doc, &options);
    assert_eq!(r.results["M2"].keys().collect::<Vec<_>>(), ["center"]);
    let digest_rule = |full: bool| {
        let r = run(
            &doc,
            &RunOptions {
                full_witness: full,
                ..RunOptions::default()
            },
        );
        r.results["M2"]["progenerator"]
            .witnesses
            .values()
            .all(|w| match w {
                Witness::Full { rows, cols, .. } => full || (*rows <= 64 && *cols <= 64),
                Witness::Digest { rows, cols, .. } => !full && (*rows > 64 || *cols > 64),
            })
    };
    assert!(digest_rule(false));
    assert!(digest_rule(true));
}

#[test]
fn dualize_round_trip() {
    let doc = fixture("quaternions.json");
    let raw = dualize(&doc, "H").unwrap();
    let text = serde_json::to_string(&raw).unwrap();
    let back = parse_str(&text).unwrap();
    let c = coalgebra(&back, "H_dual");
    let h = fixtures::quaternions(Q);
    assert_eq!(c, dual_coalgebra(&h).unwrap());
    // Dualizing again returns to an algebra isomorphic on the nose.
    let again =
        parse_str(&serde_json::to_string(&dualize(&back, "H_dual").unwrap()).unwrap()).unwrap();
    assert_eq!(algebra(&again, "H_dual_dual"), dual_algebra(&c).unwrap());
    assert!(dualize(&doc, "missing").is_err());
}

#[test]
fn reports_are_deterministic() {
    for (name, text) in CORPUS {
        let doc = parse_str(text).unwrap();
        let a = run(&doc, &RunOptions::default()).to_json();
        let b = run(&doc, &RunOptions::default()).to_json();
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn binary_exit_statuses() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(
        dir.path(),
        "m2.json",
        CORPUS.iter().find(|c| c.0 == "m2.json").unwrap().1,
    );
    let out = azk(&["check", &good]);
    assert_eq!(out.status.code(), Some(exit::OK));
    let parsed: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        parsed["results"]["M2"]["azumaya"]["verdicts"]["azumaya"],
        true
    );

    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"schema": 1, "field": {"Fp": 4}, "objects": {}}"#,
    );
    let out = azk(&["check", &bad]);
    assert_eq!(out.status.code(), Some(exit::INPUT_ERROR));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not prime"));

    let out = azk(&[
        "check",
        &dir.path().join("absent.json").display().to_string(),
    ]);
    assert_eq!(out.status.code(), Some(exit::INPUT_ERROR));

    let report = dir.path().join("out.json");
    let out = azk(&[
        "check",
        &good,
        "--only",
        "center",
        "--report",
        &report.display().to_string(),
    ]);
    assert_eq!(out.status.code(), Some(exit::OK));
    assert!(out.stdout.is_empty());
    let parsed: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(parsed["results"]["M2"].as_object().unwrap().len(), 1);
}

#[test]
fn binary_property_suite_reads_seed() {
    let out = Command::new(env!("CARGO_BIN_EXE_azk"))
        .args(["check", "--property-suite", "--cases", "5"])
        .env("AZK_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(exit::OK));
    let parsed: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["property_suite"]["seed"], 11);
    assert_eq!(parsed["property_suite"]["passed"], true);

    let out = Command::new(env!("CARGO_BIN_EXE_azk"))
        .args(["check", "--property-suite"])
        .env("AZK_SEED", "minus one")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(exit::INPUT_ERROR));
}

#[test]
fn binary_laws_dualize_and_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    let out = azk(&["fixtures", &dir.path().display().to_string()]);
    assert_eq!(out.status.code(), Some(exit::OK));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), CORPUS.len());

    let cl1 = dir.path().join("supercl1.json").display().to_string();
    let out = azk(&["laws", &cl1]);
    assert_eq!(out.status.code(), Some(exit::OK));
    let parsed: Value = serde_json::from_slice(&out.stdout).unwrap();
    let laws = &parsed["results"]["Cl1"]["bd_laws"]["verdicts"];
    assert_eq!(laws["tau.yang_baxter"], true);
    assert_eq!(laws["tau.mult_left"], true);

    let dual = dir.path().join("dual.json");
    let out = azk(&[
        "dualize",
        &cl1,
        "--object",
        "Cl1",
        "--output",
        &dual.display().to_string(),
    ]);
    assert_eq!(out.status.code(), Some(exit::OK));
    let doc = parse_str(&std::fs::read_to_string(&dual).unwrap()).unwrap();
    assert_eq!(doc.objects["Cl1_dual"].kind(), "coalgebra");

    let out = azk(&["dualize", &cl1, "--object", "Nope"]);
    assert_eq!(out.status.code(), Some(exit::INPUT_ERROR));
}
