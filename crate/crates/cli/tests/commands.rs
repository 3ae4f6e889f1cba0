use std::process::Command;

use cremona_cli::{run_command, EXIT_CHECK_FAILED, EXIT_MATH, EXIT_OK, EXIT_PARSE};

#[test]
fn sigma_pullback_of_eta_is_linear() {
    let out = run_command([
        "pullback",
        "--map",
        "sigma",
        "--map-arg",
        "none",
        "--form",
        "[Y*Z*(Y+Z), -X*Z*(X+Z), X*Y*(X-Y)]",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(out.stdout, "form: [-y - z, x + z, x - y]\ndegree: 0\n");
}

#[test]
fn degree_of_named_families() {
    for (name, d) in [("Omega1", "2"), ("eta", "2"), ("eta_prime", "2")] {
        let out = run_command(["degree", "--form", name]);
        assert_eq!(out.stdout, format!("{d}\n"), "{name}: {}", out.stderr);
    }
}

#[test]
fn tau_and_psi_words_give_their_diagrams() {
    let out = run_command(["degseq", "--word", "tau_word", "--form", "omega6_sample"]);
    assert_eq!(out.stdout, "2 5 4 5 2\n");
    let out = run_command(["degseq", "--word", "psi_word", "--form", "omega9_sample"]);
    assert_eq!(out.stdout, "2 4 3 5 3 5 3 4 2\n");
}

#[test]
fn explicit_word_of_map_specs() {
    let out = run_command(["degseq", "--word", "sigma,(x : y : z)", "--form", "Omega1"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.starts_with("2 "));
}

#[test]
fn wedge_prints_zero_for_proportional_forms() {
    let out = run_command(["wedge", "--form", "omega7", "--form2", "omega7"]);
    assert_eq!(out.stdout, "ZERO\n");
    let out = run_command(["wedge", "--form", "[z, 0, -x]", "--form2", "[y, -x, 0]"]);
    assert_ne!(out.stdout, "ZERO\n");
}

#[test]
fn obstruct_lists_the_sigma_conditions() {
    let out = run_command(["obstruct", "--map", "sigma", "--monomial", "x^2*y*z"]);
    assert_eq!(out.stdout, "{a1, a2, b0, b2, b3 - c4, b4, c0, c1, c3}\n");
}

#[test]
fn obstruct_with_symbolic_phi_and_polynomial_divisor() {
    let out = run_command([
        "obstruct",
        "--map",
        "phi_ab",
        "--monomial",
        "x^2*y^2*(x^2 + y^2 + a*x*y + b*x*z + y*z)^2",
        "--form",
        "omega7",
    ]);
    assert_eq!(out.stdout, "{}\n", "{}", out.stderr);
}

#[test]
fn verify_exit_code_tracks_failures() {
    let out = run_command(["verify", "--filter", "thmA"]);
    assert_eq!(out.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["fail_count"], 0);
    assert_eq!(v["checks"].as_array().unwrap().len(), 5);

    let out = run_command(["verify", "--filter", "invrho.1"]);
    assert_eq!(out.code, EXIT_CHECK_FAILED);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["fail_count"], 1);
}

#[test]
fn structured_reports_are_byte_identical() {
    let args = ["verify", "--filter", "lem_sigma", "--seed", "99"];
    assert_eq!(run_command(args).stdout, run_command(args).stdout);
}

#[test]
fn text_format_ends_with_summary() {
    let out = run_command(["verify", "--filter", "inv.", "--format", "text"]);
    assert!(out.stdout.lines().last().unwrap().starts_with("seed "));
}

#[test]
fn error_classes_map_to_exit_codes() {
    assert_eq!(run_command(["degree", "--form", "[x*y, 0]"]).code, EXIT_PARSE);
    assert_eq!(run_command(["degree", "--form", "[x^-1, 0, 0]"]).code, EXIT_PARSE);
    assert_eq!(run_command(["pullback", "--map", "(x : y)", "--form", "Omega1"]).code, EXIT_PARSE);
    assert_eq!(run_command(["degree", "--form", "[0, 0, 0]"]).code, EXIT_MATH);
    assert_eq!(run_command(["pullback", "--map", "(x : y^2 : z)", "--form", "Omega1"]).code, EXIT_MATH);
}

#[test]
fn binary_writes_report_to_stdout() {
    let out = Command::new(env!("CARGO_BIN_EXE_cremona"))
        .args(["verify", "--filter", "inv.sigma"])
        .env("CREMONA_SEED", "5")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], 5);
}
