use std::process::{Command, Output};

use num_bigint::BigInt;
use num_rational::BigRational;

use starlike::salem::{Classification, ConvergenceRow, EqualRadiusReport, NonIntegralityReport, SalemCertificate};
use starlike::spectral::SpectralReport;
use starlike::verify::CheckOutcome;
use starlike::{IntPolynomial, RationalInterval, StarlikeTree};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_starlike"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn salem_json_for_q23() {
    let o = run(&["salem", "--n", "2", "--k", "3", "--tol", "1e-6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let cert: SalemCertificate = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(cert.minimal_candidate, IntPolynomial::from_i64s(&[1, -1, -1, -1, 1]));
    assert_eq!(cert.classification, Classification::Salem);
    let t = cert.t_enclosure.unwrap();
    assert!(t.width() <= BigRational::new(BigInt::from(1), BigInt::from(1_000_000)));
    let raw: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(raw["classification"], "Salem");
    assert_eq!(raw["minimal_candidate"], serde_json::json!(["1", "-1", "-1", "-1", "1"]));
}

#[test]
fn charpoly_plain_for_claw() {
    let o = run(&["charpoly", "--tree", "1,1,1", "--format", "plain"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim_end(), "λ^4 - 3λ^2");
}

#[test]
fn charpoly_json_round_trips() {
    let o = run(&["charpoly", "--tree", "n=2,k=3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    #[derive(serde::Deserialize)]
    struct Out {
        tree: StarlikeTree,
        charpoly: IntPolynomial,
    }
    let out: Out = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(out.tree, StarlikeTree::long_arm(2, 3).unwrap());
    assert_eq!(out.charpoly, starlike::trees::starlike_charpoly(&out.tree));
}

#[test]
fn verify_equal_at_boundary_passes() {
    let o = run(&["verify-equal", "--n", "1", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().last(), Some("PASS"));
}

#[test]
fn verify_equal_json_round_trips() {
    let o = run(&["verify-equal", "--n", "4", "--k", "5", "--format", "json", "--decimal", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let report: EqualRadiusReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(report.pass());
    let raw: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(raw["decimal"]["long_arm_radius"][0].as_str().unwrap().starts_with("2."));
}

#[test]
fn verify_all_grid_exits_zero() {
    let o = run(&["verify-all", "--n-max", "20", "--k-max", "8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let outcomes: Vec<CheckOutcome> = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!outcomes.is_empty());
    assert!(outcomes.iter().all(|c| c.pass));
    let keys: Vec<_> = outcomes.iter().map(|c| (c.k, c.check, c.n)).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn broken_hypotheses_exit_two() {
    for args in [
        &["verify-all", "--n-max", "20", "--k-max", "2"][..],
        &["verify-equal", "--n", "3", "--k", "2"],
        &["salem", "--n", "3", "--k", "2"],
        &["nonintegral", "--n", "1", "--k", "4"],
        &["sweep", "--k", "2"],
        &["radius", "--n", "3", "--k", "2"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(stderr(&o).starts_with("error:"), "{args:?}");
    }
}

#[test]
fn malformed_tree_names_the_token() {
    let o = run(&["radius", "--tree", "3,x,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("\"x\""), "{}", stderr(&o));
    let o = run(&["radius", "--tree", "n=3,q=4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("q=4"), "{}", stderr(&o));
}

#[test]
fn mixed_parameter_styles_are_rejected() {
    let o = run(&["radius", "--tree", "1,1,1", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["radius", "--k", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_tolerance_is_a_usage_error() {
    for tol in ["0", "-1e-3", "abc", "1/0"] {
        let o = run(&["radius", "--tree", "1,1,1", "--tol", tol]);
        assert_eq!(o.status.code(), Some(2), "{tol}");
        assert!(stderr(&o).contains(tol), "{tol}: {}", stderr(&o));
    }
}

#[test]
fn tolerance_forms_agree() {
    let outputs: Vec<String> = ["1e-6", "1/1000000", "0.000001"]
        .iter()
        .map(|tol| stdout(&run(&["radius", "--tree", "2,2,2", "--tol", tol, "--format", "json"])))
        .collect();
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0], outputs[2]);
}

#[test]
fn radius_json_round_trips() {
    let o = run(&["radius", "--k", "4", "--m", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    #[derive(serde::Deserialize)]
    struct Out {
        tree: StarlikeTree,
        lambda1: RationalInterval,
    }
    let out: Out = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(out.tree, StarlikeTree::uniform(4, 3).unwrap());
    let two = BigRational::from_integer(BigInt::from(2));
    assert!(out.lambda1.lo() > &two);
}

#[test]
fn bounds_json_round_trips() {
    let o = run(&["bounds", "--tree", "n=5,k=6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let report: SpectralReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(report.bounds_hold);
    assert_eq!(report.bounds.len(), 2);
}

#[test]
fn nonintegral_json_round_trips() {
    let o = run(&["nonintegral", "--n", "7", "--k", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let report: NonIntegralityReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(report.pass());
}

#[test]
fn hyperbolic_reports_both_ways() {
    let o = run(&["hyperbolic", "--tree", "1,1,1,1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let raw: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(raw["hyperbolic"], false);
    let o = run(&["hyperbolic", "--tree", "2,1,1,1", "--format", "json"]);
    let raw: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(raw["hyperbolic"], true);
    assert_eq!(raw["eigenvalues_above_two"], 1);
}

#[test]
fn sweep_csv_has_canonical_columns() {
    let o = run(&["sweep", "--k", "4", "--n-max", "12", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,k,rho_lo,rho_hi,gap"));
    let ns: Vec<u32> = lines.map(|l| l.split(',').next().unwrap().parse().unwrap()).collect();
    assert_eq!(ns, (2..=12).collect::<Vec<_>>());
}

#[test]
fn sweep_json_round_trips() {
    let o = run(&["sweep", "--k", "3", "--n-max", "8", "--format", "json", "--decimal", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<ConvergenceRow> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows.len(), 7);
    assert!(starlike::salem::sweep_is_monotone(&rows));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify-all", "--n-max", "6", "--k-max", "5", "--format", "csv"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let args = ["sweep", "--k", "5", "--n-max", "15"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
