use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use clap::Parser;
use surface_lines::catalog::{fermat_lines, schur_profile, IncidenceProfile};
use surface_lines_cli::input::{load_custom_lines, load_custom_profile, LinesFile};
use surface_lines_cli::{run, CliError, RunConfig};

fn exec(args: &[&str]) -> Result<String, CliError> {
    let cfg = RunConfig::try_parse_from(std::iter::once("surface-lines").chain(args.iter().copied()))
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let mut out = Vec::new();
    run(&cfg, &mut out)?;
    Ok(String::from_utf8(out).unwrap())
}

fn binary(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_surface-lines")).args(args).output().unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn analyze_fermat_cubic() {
    let out = exec(&["analyze", "--surface", "fermat", "--degree", "3"]).unwrap();
    assert!(out.contains("-27/11 (-2.454)"), "{out}");
    let out = exec(&["analyze", "--surface", "fermat", "--degree", "3", "--rounding", "nearest"]).unwrap();
    assert!(out.contains("-27/11 (-2.455)"), "{out}");
    assert!(out.contains("n/a (requires n >= 4)"));
}

#[test]
fn analyze_schur_renders_three_places() {
    let out = exec(&["analyze", "--surface", "schur"]).unwrap();
    assert!(out.contains("-128/51 (-2.509)"), "{out}");
    assert!(out.contains("-155/51"));
}

#[test]
fn json_carries_exact_values_next_to_decimals() {
    let out = exec(&["analyze", "--surface", "schur", "--format", "json"]).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["h_linear"], "-128/51");
    assert_eq!(v["h_linear_decimal"], "-2.509");
    assert_eq!(v["main_bound"], "-155/51");
    assert_eq!(v["miyaoka"]["lhs"], -144);
    assert_eq!(v["profile"]["t"]["3"], 64);
}

#[test]
fn sweep_csv_rows_decrease_towards_minus_three() {
    let out = exec(&["sweep", "--surface", "fermat", "--degrees", "3:12", "--format", "csv"]).unwrap();
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    assert_eq!(
        headers.iter().collect::<Vec<_>>(),
        ["n", "d", "s", "t_vector", "h_linear", "h_linear_decimal", "miyaoka_lhs", "miyaoka_rhs", "main_bound", "main_bound_decimal"]
    );
    let values: Vec<f64> = rdr
        .records()
        .map(|r| r.unwrap()[5].parse::<f64>().unwrap())
        .collect();
    assert_eq!(values.len(), 10);
    assert!(values.windows(2).all(|w| w[1] < w[0]));
    assert!(values.iter().all(|&v| v > -3.0));
}

#[test]
fn cubic_sweep_over_eckardt_counts() {
    let out = exec(&["sweep", "--surface", "cubic", "--eckardt", "0:18", "--format", "csv"]).unwrap();
    assert_eq!(out.lines().count(), 20);
    assert!(out.lines().nth(1).unwrap().contains("-11/5"));
    assert!(out.lines().last().unwrap().contains("-27/11"));
}

#[test]
fn bound_rejects_cubics() {
    let err = exec(&["bound", "--surface", "cubic"]).unwrap_err();
    assert_eq!(err.exit_code(), 2);
    assert!(err.to_string().contains("requires n >= 4"), "{err}");
    let out = binary(&["bound", "--surface", "fermat", "--degree", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_without_singular_points_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "p.json", r#"{"n": 4, "d": 2, "t": {}}"#);
    let out = binary(&["analyze", "--surface", "custom", "--profile", &p]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(binary(&["search-bauer", "--surface", "schur"]).status.code(), Some(1));
    assert_eq!(binary(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(binary(&["analyze", "--surface", "custom"]).status.code(), Some(1));
    assert_eq!(binary(&["--help"]).status.code(), Some(0));
}

#[test]
fn custom_profile_round_trip_and_valency() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "schur.json", r#"{"n": 4, "d": 64, "t": {"2": 336, "3": 64, "4": 8}}"#);
    assert_eq!(load_custom_profile(Path::new(&good)).unwrap(), schur_profile());
    exec(&["verify", "--surface", "custom", "--profile", &good, "--valency", "18"]).unwrap();

    let bad = write(dir.path(), "variant.json", r#"{"n": 4, "d": 64, "t": {"2": 192, "3": 64, "4": 8}}"#);
    let variant: IncidenceProfile = load_custom_profile(Path::new(&bad)).unwrap();
    assert_eq!(variant.t_k(2), 192);
    let err = exec(&["verify", "--surface", "custom", "--profile", &bad, "--valency", "18"]).unwrap_err();
    assert_eq!(err.exit_code(), 2);
    let out = binary(&["verify", "--surface", "custom", "--profile", &bad, "--valency", "18"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("false"));
}

#[test]
fn infeasible_profiles_name_the_violated_constraint() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "p.json", r#"{"n": 4, "d": 3, "t": {"2": 4}}"#);
    let err = load_custom_profile(Path::new(&p)).unwrap_err();
    assert!(err.to_string().contains("pair-count"), "{err}");
    let p = write(dir.path(), "q.json", r#"{"n": 4, "d": 65, "t": {}}"#);
    assert!(load_custom_profile(Path::new(&p)).is_err());
}

#[test]
fn custom_lines_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let arr = fermat_lines(3).unwrap();
    let body = serde_json::to_string(&LinesFile::from_arrangement(&arr)).unwrap();
    let path = write(dir.path(), "lines.json", &body);
    let loaded = load_custom_lines(Path::new(&path)).unwrap();
    assert_eq!(loaded.lines(), arr.lines());
    assert_eq!(loaded.labels(), arr.labels());

    let out = exec(&["profile", "--surface", "custom", "--lines", &path]).unwrap();
    assert!(out.contains("99"), "{out}");
    exec(&["verify", "--surface", "custom", "--lines", &path]).unwrap();
}

#[test]
fn repeated_line_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let arr = fermat_lines(4).unwrap();
    let mut file = LinesFile::from_arrangement(&arr);
    file.labels.clear();
    // same line through different base points
    let [p, q] = file.lines[0].clone();
    let mid = [0, 1, 2, 3].map(|i| &p[i] + &q[i]);
    file.lines.push([q, mid]);
    let path = write(dir.path(), "dup.json", &serde_json::to_string(&file).unwrap());
    let err = load_custom_lines(Path::new(&path)).unwrap_err();
    assert_eq!(err.exit_code(), 1);
    assert!(err.to_string().contains("0") && err.to_string().contains("48"), "{err}");
}

#[test]
fn bauer_search_from_the_command_line() {
    let out = exec(&["search-bauer", "--surface", "fermat", "--degree", "4", "--format", "json"]).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let sol = &v[0];
    assert_eq!(sol["line_indices"].as_array().unwrap().len(), 16);
    assert_eq!(sol["recomputed_profile"]["t"]["4"], 8);
    assert_eq!(sol["h_linear"], "-8/1");
    assert_eq!(sol["main_bound"], "-9/1");
}

#[test]
fn extremal_search_contains_the_bauer_profile() {
    let out = exec(&[
        "search-extremal", "--degree", "4", "--line-count", "16", "--k-max", "4", "--top", "0", "--format", "csv",
    ])
    .unwrap();
    let row = out.lines().find(|l| l.contains(",t4=8,")).expect("t4=8 present");
    assert!(row.contains("-8/1"), "{row}");
    let json = exec(&["search-extremal", "--degree", "4", "--line-count", "3", "--k-max", "3", "--format", "json"]).unwrap();
    assert!(json.contains("not necessarily realized"));
}

#[test]
fn profile_lists_singular_points() {
    let out = exec(&["profile", "--surface", "fermat", "--degree", "3", "--points", "--format", "json"]).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["s"], 99);
    assert_eq!(v["singular_points"].as_array().unwrap().len(), 99);
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("sweep.csv");
    let args = ["sweep", "--surface", "rams", "--degrees", "6:9", "--format", "csv"];
    let stdout = binary(&args).stdout;
    let mut with_output = args.to_vec();
    with_output.extend(["-o", target.to_str().unwrap()]);
    assert!(binary(&with_output).status.success());
    assert_eq!(fs::read(&target).unwrap(), stdout);
}

#[test]
fn geometric_and_closed_form_agree() {
    let a = exec(&["analyze", "--surface", "fermat", "--degree", "5", "--format", "json"]).unwrap();
    let b = exec(&["analyze", "--surface", "fermat", "--degree", "5", "--geometric", "--format", "json"]).unwrap();
    assert_eq!(a, b);
}
