//! End-to-end tests of the installed binary: exit codes, the JSON envelope,
//! and the documented worked examples.

use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_monotri"));
    cmd.env_remove("MONOTRI_EFFORT");
    cmd
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().expect("no exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut args = args.to_vec();
    args.push("--json");
    let (code, stdout, stderr) = run(&args);
    assert!(stderr.is_empty(), "unexpected stderr: {stderr}");
    (code, serde_json::from_str(stdout.trim()).unwrap())
}

#[test]
fn disc_reports_d_and_factored_disc() {
    let (code, v) = run_json(&["disc", "--m", "2", "--A", "11", "--B", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["result"]["d"], "-93");
    assert_eq!(v["result"]["disc"], "93");

    let (code, v) = run_json(&[
        "disc", "--m", "2", "--A", "11", "--B", "7", "--p", "3", "--n", "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["degree"], 6);
    assert_eq!(v["result"]["disc"], "28732436397");
    let factors = v["result"]["disc_factors"]["factors"].as_array().unwrap();
    let pairs: Vec<(String, u64)> = factors
        .iter()
        .map(|f| {
            (
                f["prime"].as_str().unwrap().to_string(),
                f["exponent"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(
        pairs,
        [
            ("3".to_string(), 9),
            ("7".to_string(), 2),
            ("31".to_string(), 3)
        ]
    );

    let (code, v) = run_json(&["disc", "--m", "2", "--A", "0", "--B", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["d"], "4");
    assert_eq!(v["result"]["disc"], "-4");
}

#[test]
fn check_exit_codes_follow_verdicts() {
    let (code, v) = run_json(&[
        "check", "--m", "2", "--A", "11", "--B", "7", "--p", "3", "--n", "1", "--strategy", "both",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["verdict"], "Monogenic");
    assert_eq!(v["result"]["checks"].as_array().unwrap().len(), 3);

    let (code, v) = run_json(&["check", "--poly", "x^2-5"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["verdict"]["NotMonogenic"]["q"], "2");

    let (code, v) = run_json(&["check", "--m", "2", "--A", "2", "--B", "1"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["verdict"]["Reducible"]["witness"], "x + 1");

    // The closed-form route does not apply to a dense quartic: undecided.
    let (code, v) = run_json(&["check", "--poly", "x^4+x^3+x^2+x+1", "--strategy", "jks"]);
    assert_eq!(code, 4);
    assert!(v["result"]["verdict"]["Unknown"]["reason"]
        .as_str()
        .unwrap()
        .contains("trinomial"));
}

#[test]
fn poly_and_trinomial_routes_agree_on_the_composition() {
    let (code_a, a) = run_json(&["check", "--poly", "x^6+11x^3+7"]);
    let (code_b, b) = run_json(&[
        "check", "--m", "2", "--A", "11", "--B", "7", "--p", "3", "--n", "1",
    ]);
    assert_eq!((code_a, code_b), (0, 0));
    assert_eq!(a["result"]["verdict"], b["result"]["verdict"]);
    assert_eq!(a["result"]["disc"]["value"], b["result"]["disc"]["value"]);
}

#[test]
fn search_finds_frozen_certificates() {
    let (code, v) = run_json(&["search", "--m", "2", "--p", "3", "--u", "0", "--count", "1"]);
    assert_eq!(code, 0);
    let cert = &v["result"]["certificates"][0];
    assert_eq!(cert["t"], "5");
    assert_eq!(cert["a"], "11");
    assert_eq!(cert["b"], "31");
    assert_eq!(cert["hypotheses"]["satisfied"], true);

    let (code, _, stderr) = run(&["search", "--m", "2", "--p", "2", "--u", "0"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("odd prime"));
}

#[test]
fn exhausted_search_reports_partial_certificates() {
    let (code, v) = run_json(&[
        "search", "--m", "2", "--p", "3", "--u", "0", "--count", "5", "--t-max", "10",
    ]);
    assert_eq!(code, 5);
    assert_eq!(v["status"], "error");
    assert_eq!(v["error"]["kind"], "exhausted");
    let found = v["result"]["certificates"].as_array().unwrap();
    assert_eq!(found.len(), 2);
    assert_eq!(found[0]["t"], "5");
    assert_eq!(found[1]["t"], "7");
}

#[test]
fn obstruction_scan_flags_only_the_constant_prime() {
    let (code, v) = run_json(&["obstruction", "--m", "2", "--p", "3", "--u", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["g_display"], "3 * (6t + 1) * (8t - 39)");
    assert!(v["result"]["report"]["obstruction"].is_null());

    let (code, v) = run_json(&["obstruction", "--m", "4", "--p", "3", "--u", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["report"]["obstruction"], 3);
}

#[test]
fn density_estimate_stays_in_range() {
    let (code, v) = run_json(&["density", "--m", "2", "--p", "3", "--u", "0", "--L", "1000"]);
    assert_eq!(code, 0);
    let c = v["result"]["estimate"]["c"].as_f64().unwrap();
    assert!(0.0 < c && c < 1.0, "C = {c}");
    assert!(v["result"]["empirical"].is_null());

    // The obstructed family has density exactly zero.
    let (code, v) = run_json(&["density", "--m", "4", "--p", "3", "--u", "0", "--L", "1000"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["estimate"]["c"].as_f64().unwrap(), 0.0);

    let (code, v) = run_json(&[
        "density",
        "--m",
        "2",
        "--p",
        "3",
        "--u",
        "0",
        "--L",
        "1000",
        "--empirical-X",
        "3000",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["empirical"]["primes_tested"], 430);
}

#[test]
fn verify_runs_clean_and_filters() {
    let (code, stdout, _) = run(&["verify"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("all sections passed"));

    let (code, v) = run_json(&["verify", "--filter", "binomial"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["passed"], true);
    let sections = v["result"]["sections"].as_array().unwrap();
    assert_eq!(sections.len(), 1);
    assert_eq!(sections[0]["section"], "binomial");
    assert_eq!(sections[0]["checked"], 42);
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let args = [
        "check", "--m", "2", "--A", "11", "--B", "7", "--p", "3", "--n", "1", "--json",
    ];
    let (c1, out1, _) = run(&args);
    let (c2, out2, _) = run(&args);
    assert_eq!(c1, c2);
    assert_eq!(out1, out2);
    assert_eq!(out1.lines().count(), 1, "one self-delimiting document");
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, _) = run(&["check"]);
    assert_eq!(code, 2);

    let (code, _, stderr) = run(&["check", "--poly", "x^2-5", "--m", "2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("conflicts"));

    let (code, _, _) = run(&["disc", "--m", "1", "--A", "1", "--B", "1"]);
    assert_eq!(code, 2);

    let (code, _, stderr) = run(&["disc", "--m", "2", "--A", "1", "--B", "1", "--n", "2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--n needs --p"));

    let (code, _, _) = run(&["disc", "--m", "2", "--A", "1"]);
    assert_eq!(code, 2); // clap: missing --B
}

#[test]
fn effort_env_is_validated_and_enforced() {
    let out = bin()
        .env("MONOTRI_EFFORT", "abc")
        .args(["disc", "--m", "2", "--A", "11", "--B", "7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("MONOTRI_EFFORT"));

    // 4B = 2^2 * 100003 * 100019: one rho iteration cannot split the
    // ten-digit cofactor, so the budget must be reported as exceeded.
    let out = bin()
        .env("MONOTRI_EFFORT", "1")
        .args(["disc", "--m", "2", "--A", "0", "--B", "-10002200057", "--json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "error");
    assert_eq!(v["error"]["kind"], "effort-exceeded");
}
