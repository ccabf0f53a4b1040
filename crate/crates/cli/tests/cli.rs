//! End-to-end tests against the compiled binary: exit codes, JSON schema,
//! determinism, and the documented values for the reference inputs.

use std::process::{Command, Output};

use serde_json::Value;

fn tforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tforge"))
        .args(args)
        .output()
        .expect("spawn tforge")
}

fn report(args: &[&str]) -> Value {
    let out = tforge(args);
    assert!(
        out.status.success(),
        "tforge {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let parsed: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    assert_eq!(parsed["schema"], "tforge-report/1");
    parsed
}

#[test]
fn genus_of_the_reference_actions() {
    let r = report(&["genus", "--order", "2520", "--signature", "2,6,7"]);
    assert_eq!(r["command"], "genus");
    assert_eq!(r["results"]["genus"], "241");
    let r = report(&["genus", "--order", "2520", "--signature", "5,5,5"]);
    assert_eq!(r["results"]["genus"], "505");
}

#[test]
fn classify_degree_seven_reports_two_real_classes() {
    let r = report(&[
        "dessins", "classify", "--n", "7", "--mu", "2,2,1,1,1", "--nu", "3,2,2",
    ]);
    assert_eq!(r["results"]["class_count"], 2);
    let classes = r["results"]["classes"].as_array().unwrap();
    for c in classes {
        assert_eq!(c["group_order"], "2520");
        assert_eq!(c["is_real"], true);
    }
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let out = tforge(&["nosuchcmd"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn missing_required_argument_is_a_usage_error() {
    let out = tforge(&["genus", "--order", "2520"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_one_with_diagnostics_on_stderr() {
    let out = tforge(&["genus", "--order", "2520", "--signature", "1,6,7"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());

    let out = tforge(&[
        "dessins", "classify", "--n", "3", "--mu", "3", "--nu", "2,1",
    ]);
    assert_eq!(out.status.code(), Some(1), "type count 2 != n+1 = 4");
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = [
        "twocrit", "solve", "--n", "3", "--mu", "2,1", "--nu", "2,1", "--attempts", "64",
        "--seed", "9",
    ];
    let a = tforge(&args);
    let b = tforge(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    // A different seed still converges to the same (unique) solution set,
    // but the byte-level guarantee is per seed, which is what we pin here.
    let r: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(r["results"]["class_count"], 1);
    assert_eq!(r["results"]["real_class_count"], 1);
}

#[test]
fn twocrit_quadratic_solution_round_trips() {
    let r = report(&[
        "twocrit", "solve", "--n", "2", "--mu", "2", "--nu", "1,1", "--attempts", "64",
    ]);
    assert_eq!(r["results"]["class_count"], 1);
    let class = &r["results"]["classes"][0];
    assert_eq!(class["is_real"], true);
    assert_eq!(class["orbit_size"], 1);
    let beta = class["beta"][0].as_array().unwrap();
    assert!(beta[0].as_f64().unwrap().abs() < 1e-9);
    assert!(class["residual"].as_f64().unwrap() < 1e-10);
}

#[test]
fn negative_rational_arguments_parse() {
    let r = report(&["belyi", "--genus", "3", "--minpoly", "-2,0,1"]);
    assert_eq!(r["results"]["is_belyi"], true);
    let r = report(&["curves", "iso", "--genus", "6", "--a", "-5/3", "--b", "13"]);
    assert_eq!(r["results"]["isomorphic"], false);
}

#[test]
fn perm_spherical_and_conj_agree_on_the_reference_triples() {
    let t1 = "(1,2)(3,4);(1,5,7)(2,3)(4,6);(1,7,5,2,4,6,3)";
    let t2 = "(1,2)(3,4);(1,7,4)(2,5)(3,6);(1,3,6,4,7,2,5)";
    let r = report(&[
        "perm", "conj", "--degree", "7", "--kind", "symmetric", "--t1", t1, "--t2", t2,
    ]);
    assert_eq!(r["results"]["exists"], false);
    assert_eq!(r["results"]["conjugator"], Value::Null);

    // Conjugating a triple by any permutation must be detected.
    let r = report(&[
        "perm", "conj", "--degree", "7", "--kind", "symmetric", "--t1", t1, "--t2", t1,
    ]);
    assert_eq!(r["results"]["exists"], true);
}

#[test]
fn beauville_check_reports_the_surface_invariants() {
    let r = report(&[
        "beauville",
        "check",
        "--degree",
        "7",
        "--t1",
        "(1,2)(3,4);(1,5,7)(2,3)(4,6);(1,7,5,2,4,6,3)",
        "--t2",
        "(1,7,6,5,4);(1,3,2,6,7);(2,3,4,5,6)",
    ]);
    assert_eq!(r["results"]["is_beauville"], true);
    let inv = &r["results"]["invariants"];
    assert_eq!(inv["e"], "192");
    assert_eq!(inv["chi"], "48");
    assert_eq!(inv["k2"], "384");
}

#[test]
fn pi1_pipeline_reports_the_surface_group_data() {
    let r = report(&[
        "pi1",
        "--degree",
        "7",
        "--t1",
        "(1,2)(3,4);(1,5,7)(2,3)(4,6);(1,7,5,2,4,6,3)",
        "--t2",
        "(1,7,6,5,4);(1,3,2,6,7);(2,3,4,5,6)",
    ]);
    assert_eq!(r["results"]["coset_count"], 2520);
    assert_eq!(r["results"]["product_presentation"]["relators"], 10);
    assert_eq!(r["results"]["surface_group"]["generators"], 7561);
    let ab = &r["results"]["abelianization"];
    assert_eq!(ab["free_rank"], 0);
    assert_eq!(ab["torsion"][0], "5");
    assert_eq!(ab["torsion"][1], "30");
}

#[test]
fn timings_flag_adds_the_block_and_keeps_results_stable() {
    let plain = report(&["genus", "--order", "2520", "--signature", "2,6,7"]);
    assert!(plain.get("timings_ms").is_none());
    let timed = report(&["genus", "--order", "2520", "--signature", "2,6,7", "--timings"]);
    let timings = timed["timings_ms"].as_object().expect("timings present");
    assert!(timings.contains_key("total"));
    assert_eq!(plain["results"], timed["results"]);
}

#[test]
fn reproduce_pipeline_passes_with_snf_skipped() {
    let r = report(&["reproduce-paper", "--skip-snf"]);
    assert_eq!(r["command"], "reproduce-paper");
    let items = r["results"]["items"].as_array().unwrap();
    assert_eq!(items.len(), 14);
    for item in items {
        let status = item["status"].as_str().unwrap();
        if item["item"] == "abelianization-match" {
            assert_eq!(status, "skipped");
        } else {
            assert_eq!(status, "pass", "item {} did not pass", item["item"]);
        }
    }
    assert_eq!(r["results"]["passed"], 13);
    assert_eq!(r["results"]["skipped"], 1);
    assert_eq!(r["results"]["failed"].as_array().unwrap().len(), 0);
}

#[test]
fn corrupted_triple_fails_the_verification_item_by_name() {
    // (1,2) alone is not part of a valid triple: product != identity.
    let out = tforge(&[
        "reproduce-paper",
        "--skip-snf",
        "--triple1",
        "(1,2); (1,5,7)(2,3)(4,6); (1,7,5,2,4,6,3)",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let r: Value = serde_json::from_slice(&out.stdout).expect("report still printed");
    let items = r["results"]["items"].as_array().unwrap();
    let item = items
        .iter()
        .find(|i| i["item"] == "verify-triple-1")
        .expect("verification item present");
    assert_eq!(item["status"], "fail");
    let failed: Vec<&str> = r["results"]["failed"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert!(failed.contains(&"verify-triple-1"));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("verify-triple-1"));
}
