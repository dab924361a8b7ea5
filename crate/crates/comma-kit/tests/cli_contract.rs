//! The command-line contract: exit codes, the JSON report shape, byte-stable
//! fixture emission, document loading from files, stdin and builtins, and
//! the graph export. Everything here drives the compiled binary.

mod common;

use std::io::Write;
use std::process::{Command, Stdio};

use comma_kit::catalog::{fixture_names, int_coalg, Fixture};
use comma_kit::coalgebra::LEDGER_LABELS;
use comma_kit::doc::{fixture_document, parse, print};

const BIN: &str = env!("CARGO_BIN_EXE_comma-kit");

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str], stdin: Option<&str>, envs: &[(&str, &str)]) -> Outcome {
    let mut cmd = Command::new(BIN);
    cmd.args(args)
        .env_remove("COMMA_KIT_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary spawns");
    if let Some(text) = stdin {
        child
            .stdin
            .as_mut()
            .unwrap()
            .write_all(text.as_bytes())
            .expect("stdin accepts the document");
    }
    drop(child.stdin.take());
    let out = child.wait_with_output().expect("binary exits");
    Outcome {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("stdout is utf-8"),
        stderr: String::from_utf8(out.stderr).expect("stderr is utf-8"),
    }
}

fn mutated_interior_document() -> String {
    let mutated = common::retype_one_theta(&int_coalg(), 9).unwrap();
    print(&fixture_document(&Fixture::Coalgebra(mutated)).unwrap())
}

#[test]
fn every_builtin_fixture_validates_with_exit_zero() {
    for name in fixture_names() {
        let out = run(&["validate", &format!("builtin:{name}")], None, &[]);
        assert_eq!(out.code, 0, "{name}: {}\n{}", out.stdout, out.stderr);
        assert!(out.stdout.contains("pass"), "{name}: no pass lines");
        assert!(!out.stdout.contains("FAIL"), "{name}: unexpected failure");
    }
}

#[test]
fn fixture_emission_is_byte_stable_and_revalidates() {
    let dir = tempfile::tempdir().unwrap();
    for name in fixture_names() {
        let first = run(&["fixtures", "emit", name], None, &[]);
        assert_eq!(first.code, 0, "{name}: {}", first.stderr);
        let second = run(&["fixtures", "emit", name], None, &[]);
        assert_eq!(first.stdout, second.stdout, "{name}: emission not stable");

        let path = dir.path().join(format!("{name}.doc"));
        let out = run(
            &["fixtures", "emit", name, "--out", path.to_str().unwrap()],
            None,
            &[],
        );
        assert_eq!(out.code, 0);
        let written = std::fs::read_to_string(&path).unwrap();
        assert_eq!(written, first.stdout, "{name}: --out differs from stdout");

        let check = run(&["validate", path.to_str().unwrap()], None, &[]);
        assert_eq!(check.code, 0, "{name}: emitted document fails validation");

        // Parse/print round trip on the emitted bytes.
        let reparsed = parse(&written).unwrap();
        assert_eq!(print(&reparsed), written, "{name}: round trip changed bytes");
    }
}

#[test]
fn builtin_loading_accepts_both_spellings_and_stdin() {
    let colon = run(&["dot", "--category", "two", "builtin:two"], None, &[]);
    let paren = run(&["dot", "--category", "two", "builtin(two)"], None, &[]);
    assert_eq!(colon.code, 0);
    assert_eq!(paren.code, 0);
    assert_eq!(colon.stdout, paren.stdout);

    let doc = run(&["fixtures", "emit", "two"], None, &[]).stdout;
    let piped = run(&["dot", "--category", "two", "-"], Some(&doc), &[]);
    assert_eq!(piped.code, 0);
    assert_eq!(piped.stdout, colon.stdout);
}

#[test]
fn dot_export_is_frozen_for_the_walking_arrow() {
    let out = run(&["dot", "--category", "two", "builtin:two"], None, &[]);
    assert_eq!(out.code, 0);
    assert_eq!(
        out.stdout,
        "digraph \"two\" {\n  rankdir=LR;\n  \"0\";\n  \"1\";\n  \"0\" -> \"1\" [label=\"u\"];\n}\n"
    );
}

#[test]
fn coalgebra_check_reports_every_equation_label_exactly_once_as_json() {
    let out = run(
        &["--json", "coalgebra-check", "--name", "int", "builtin:int_coalg"],
        None,
        &[],
    );
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).expect("stdout is one JSON object");
    let records = v["records"].as_array().expect("records array");
    for label in LEDGER_LABELS {
        let hits = records.iter().filter(|r| r["label"] == label).count();
        assert_eq!(hits, 1, "label {label} appears {hits} times");
    }
    for r in records {
        let verdict = r["verdict"].as_str().unwrap();
        assert!(verdict == "pass" || verdict == "fail", "verdict {verdict}");
        assert_eq!(r["verdict"], "pass");
    }
}

#[test]
fn a_retyped_component_fails_with_its_equation_labels_and_exit_one() {
    let doc = mutated_interior_document();
    let out = run(
        &["coalgebra-check", "--name", "int_retyped", "-"],
        Some(&doc),
        &[],
    );
    assert_eq!(out.code, 1, "{}\n{}", out.stdout, out.stderr);
    assert!(out.stdout.contains("FAIL"), "no failure lines:\n{}", out.stdout);

    // The JSON view still carries the full ledger exactly once.
    let out = run(
        &["--json", "coalgebra-check", "--name", "int_retyped", "-"],
        Some(&doc),
        &[],
    );
    assert_eq!(out.code, 1);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let records = v["records"].as_array().unwrap();
    for label in LEDGER_LABELS {
        let hits = records.iter().filter(|r| r["label"] == label).count();
        assert_eq!(hits, 1, "label {label} appears {hits} times");
    }
    assert!(
        records.iter().any(|r| r["verdict"] == "fail"),
        "no failing record"
    );
}

#[test]
fn no_validate_skips_the_load_checks_but_commands_still_run() {
    let doc = mutated_interior_document();
    // dot touches only the categories, so the broken coalgebra is invisible
    // once load validation is off.
    let strict = run(&["dot", "--category", "chain2", "-"], Some(&doc), &[]);
    assert_eq!(strict.code, 1, "load validation should have failed");
    let lax = run(
        &["--no-validate", "dot", "--category", "chain2", "-"],
        Some(&doc),
        &[],
    );
    assert_eq!(lax.code, 0, "{}", lax.stderr);
    assert!(lax.stdout.starts_with("digraph"));
}

#[test]
fn parse_errors_exit_two_and_name_the_line() {
    let out = run(&["validate", "-"], Some("category c\nobject x\nnonsense y\nend\n"), &[]);
    assert_eq!(out.code, 2);
    assert!(
        out.stderr.contains("parse error at line 3"),
        "stderr: {}",
        out.stderr
    );
}

#[test]
fn unknown_names_exit_two() {
    let out = run(&["comma", "--functor", "nope", "builtin:gal_adjunction"], None, &[]);
    assert_eq!(out.code, 2, "{}\n{}", out.stdout, out.stderr);
    let out = run(&["validate", "builtin:not_a_fixture"], None, &[]);
    assert_eq!(out.code, 2);
}

#[test]
fn budget_failures_and_malformed_budgets_exit_two() {
    let out = run(
        &["arrow", "--category", "square", "builtin:square"],
        None,
        &[("COMMA_KIT_BUDGET", "2")],
    );
    assert_eq!(out.code, 2, "{}\n{}", out.stdout, out.stderr);
    assert!(out.stderr.contains("budget"), "stderr: {}", out.stderr);

    let out = run(
        &["validate", "builtin:two"],
        None,
        &[("COMMA_KIT_BUDGET", "banana")],
    );
    assert_eq!(out.code, 2);
}

#[test]
fn constructed_categories_can_be_written_out_and_revalidated() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 4] = [
        &["comma", "--functor", "galG", "builtin:gal_adjunction"],
        &["arrow", "--category", "two", "builtin:two"],
        &["kleisli", "--comonad", "int2", "builtin:int2_comonad"],
        &["em", "--comonad", "int2", "builtin:int2_comonad"],
    ];
    for (i, case) in cases.iter().enumerate() {
        let path = dir.path().join(format!("out{i}.doc"));
        let mut args: Vec<&str> = case.to_vec();
        args.push("--out");
        args.push(path.to_str().unwrap());
        let out = run(&args, None, &[]);
        assert_eq!(out.code, 0, "{case:?}: {}\n{}", out.stdout, out.stderr);
        let check = run(&["validate", path.to_str().unwrap()], None, &[]);
        assert_eq!(check.code, 0, "{case:?}: emitted document is invalid");
    }
}

#[test]
fn kleisli_and_em_sizes_surface_through_their_emitted_documents() {
    let dir = tempfile::tempdir().unwrap();
    let kl = dir.path().join("kl.doc");
    let em = dir.path().join("em.doc");
    run(
        &["kleisli", "--comonad", "int2", "builtin:int2_comonad", "--out", kl.to_str().unwrap()],
        None,
        &[],
    );
    run(
        &["em", "--comonad", "int2", "builtin:int2_comonad", "--out", em.to_str().unwrap()],
        None,
        &[],
    );
    let kl_doc = parse(&std::fs::read_to_string(&kl).unwrap()).unwrap();
    let em_doc = parse(&std::fs::read_to_string(&em).unwrap()).unwrap();
    let kl_cat = kl_doc.category("kl(int2)").unwrap();
    assert_eq!((kl_cat.object_count(), kl_cat.morphism_count()), (3, 7));
    let em_cat = em_doc.category("em(int2)").unwrap();
    assert_eq!((em_cat.object_count(), em_cat.morphism_count()), (2, 3));
}

#[test]
fn the_frobenius_verdict_drives_the_exit_code() {
    let out = run(
        &["frobenius", "--g", "galG", "--k", "galK", "builtin:gal_adjunction"],
        None,
        &[],
    );
    assert_eq!(out.code, 1, "a reflection is not a two-sided adjunction");
    assert!(out.stdout.contains("FAIL"));
}

#[test]
fn json_reports_share_one_shape_across_subcommands() {
    let cases: [&[&str]; 4] = [
        &["--json", "validate", "builtin:int_coalg"],
        &["--json", "comonad-laws", "--functor", "galG", "builtin:gal_adjunction"],
        &["--json", "normal-check", "--name", "normal(gal)", "builtin:gal_normal"],
        &["--json", "split", "--coalgebra", "int", "builtin:int_coalg"],
    ];
    for case in cases {
        let out = run(case, None, &[]);
        assert_eq!(out.code, 0, "{case:?}: {}\n{}", out.stdout, out.stderr);
        let v: serde_json::Value = serde_json::from_str(&out.stdout)
            .unwrap_or_else(|e| panic!("{case:?}: bad JSON ({e}):\n{}", out.stdout));
        assert!(v["subject"].is_string(), "{case:?}: missing subject");
        for r in v["records"].as_array().expect("records") {
            assert!(r["label"].is_string());
            assert!(r["subject"].is_string());
            let verdict = r["verdict"].as_str().unwrap();
            assert!(verdict == "pass" || verdict == "fail");
        }
    }
}

#[test]
fn random_coalgebra_emission_round_trips_through_its_own_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rand.doc");
    let out = run(
        &["random-coalgebra", "--seed", "17", "--size", "5", "--out", path.to_str().unwrap()],
        None,
        &[],
    );
    assert_eq!(out.code, 0, "{}\n{}", out.stdout, out.stderr);
    let text = std::fs::read_to_string(&path).unwrap();
    let doc = parse(&text).unwrap();
    let name = &doc.coalgebras[0].name;
    let check = run(
        &["coalgebra-check", "--name", name, "--derived-cubes", path.to_str().unwrap()],
        None,
        &[],
    );
    assert_eq!(check.code, 0, "{}\n{}", check.stdout, check.stderr);
}

#[test]
fn adjunction_round_trips_through_normal_form_on_disk() {
    let dir = tempfile::tempdir().unwrap();
    let normal = dir.path().join("normal.doc");
    let out = run(
        &[
            "from-adjunction",
            "--adjunction",
            "gal",
            "builtin:gal_adjunction",
            "--out",
            normal.to_str().unwrap(),
        ],
        None,
        &[],
    );
    assert_eq!(out.code, 0, "{}\n{}", out.stdout, out.stderr);

    let doc = parse(&std::fs::read_to_string(&normal).unwrap()).unwrap();
    let name = doc.normals[0].name.clone();
    let back = dir.path().join("adj.doc");
    let out = run(
        &[
            "to-adjunction",
            "--name",
            &name,
            normal.to_str().unwrap(),
            "--out",
            back.to_str().unwrap(),
        ],
        None,
        &[],
    );
    assert_eq!(out.code, 0, "{}\n{}", out.stdout, out.stderr);
    let returned = parse(&std::fs::read_to_string(&back).unwrap()).unwrap();
    let adj = &returned.adjunctions[0];
    let gal = comma_kit::catalog::gal_adjunction();
    assert!(adj.left.extensionally_equal(&gal.left));
    assert!(adj.right.extensionally_equal(&gal.right));
    assert!(adj.unit.extensionally_equal(&gal.unit));
    assert!(adj.counit.extensionally_equal(&gal.counit));
}

#[test]
fn fixtures_list_names_every_builtin() {
    let out = run(&["fixtures", "list"], None, &[]);
    assert_eq!(out.code, 0);
    for name in fixture_names() {
        assert!(out.stdout.contains(name), "missing {name}");
    }
}
