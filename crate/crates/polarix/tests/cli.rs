//! Integration tests driving the `polarix` binary: exit codes, output
//! determinism, CSV/JSON number parity, and the spectrum file surface.

use std::path::PathBuf;
use std::process::{Command, Output};

fn polarix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polarix"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("polarix-cli-test-{}-{name}", std::process::id()));
    p
}

/// Parse the data rows of a CSV emission (skipping `#` comments and the
/// header row).
fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.is_empty())
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

// small grid keeps CLI invocations quick; accuracy is tested at the library level
const GRID: [&str; 4] = ["--grid-rmax", "120", "--grid-n", "1200"];

#[test]
fn alpha_hydrogen_static_value() {
    let out = polarix(&[
        "alpha", "--hydrogen", "--omega", "0", "--grid-rmax", "200", "--grid-n", "4000",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 1);
    let re: f64 = rows[0][1].parse().unwrap();
    assert!((re - 4.5).abs() < 1e-4 * 4.5, "re_alpha = {re}");
}

#[test]
fn alpha_empty_spectrum_gives_zero_rows() {
    let path = temp_path("empty.csv");
    std::fs::write(&path, "# polarix-spectrum v1\n").unwrap();
    let out = polarix(&["alpha", "--spectrum", path.to_str().unwrap(), "--omega", "0.1"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][1].parse::<f64>().unwrap(), 0.0);
    assert_eq!(rows[0][2].parse::<f64>().unwrap(), 0.0);
    std::fs::remove_file(&path).ok();
}

#[test]
fn alpha_csv_and_json_carry_identical_numbers() {
    let mut args = vec![
        "alpha", "--hydrogen", "--omega-min", "0.01", "--omega-max", "0.3",
        "--n-points", "7",
    ];
    args.extend_from_slice(&GRID);
    let csv_out = polarix(&args);
    let mut json_args = args.clone();
    json_args.extend_from_slice(&["--format", "json"]);
    let json_out = polarix(&json_args);
    assert_eq!(csv_out.status.code(), Some(0));
    assert_eq!(json_out.status.code(), Some(0));

    let rows = csv_rows(&stdout(&csv_out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&json_out)).unwrap();
    let json_rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 7);
    assert_eq!(json_rows.len(), 7);
    for (row, jrow) in rows.iter().zip(json_rows) {
        for (idx, key) in [
            "omega_hartree",
            "re_alpha_au",
            "im_oneloop_au",
            "im_broadened_au",
        ]
        .iter()
        .enumerate()
        {
            let from_csv: f64 = row[idx].parse().unwrap();
            let from_json = jrow[*key].as_f64().unwrap();
            assert_eq!(from_csv.to_bits(), from_json.to_bits(), "{key}");
        }
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    let mut args = vec![
        "alpha", "--hydrogen", "--omega-min", "0.02", "--omega-max", "0.2",
        "--n-points", "11", "--broadening-hartree", "1e-6",
    ];
    args.extend_from_slice(&GRID);
    let first = polarix(&args);
    let second = polarix(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn usage_errors_exit_two() {
    // no source
    let out = polarix(&["alpha", "--omega", "0.1"]);
    assert_eq!(out.status.code(), Some(2));
    // inverted sweep
    let out = polarix(&[
        "alpha", "--hydrogen", "--omega-min", "0.3", "--omega-max", "0.1", "--n-points", "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // unknown flag goes through clap
    let out = polarix(&["alpha", "--does-not-exist"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gauge_check_passes_on_default_lattice() {
    let mut args = vec!["gauge-check"];
    args.extend_from_slice(&GRID);
    let out = polarix(&args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 5);
    for row in &rows {
        let residual: f64 = row[3].parse().unwrap();
        assert!(residual < 1e-8, "residual column: {}", row[3]);
    }
}

#[test]
fn gauge_check_breached_tolerance_exits_one() {
    // demand an impossible residual so the verification gate trips
    let mut args = vec!["gauge-check", "--omega", "0.1", "--tol", "1e-18"];
    args.extend_from_slice(&GRID);
    let out = polarix(&args);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn gauge_check_at_a_grid_pole_exits_three() {
    // locate the first pseudospectrum pole of the same grid the CLI will build
    let sys = polarix::build_grid(120.0, 1200).unwrap();
    let pole = sys.hamiltonian(1).eigenvalue_bisect(0, 1e-14) - sys.ground_energy();
    let omega = format!("{pole:.16e}");
    let mut args = vec!["gauge-check", "--omega", omega.as_str()];
    args.extend_from_slice(&GRID);
    let out = polarix(&args);
    assert_eq!(out.status.code(), Some(3), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("resonance"), "diagnostic: {err}");
}

#[test]
fn friction_bb_hydrogen_smoke() {
    let mut args = vec!["friction", "bb", "--hydrogen", "--temp-k", "300"];
    args.extend_from_slice(&GRID);
    let out = polarix(&args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["units"], "SI kg/s");
    let eta = doc["eta_kg_per_s"].as_f64().unwrap();
    assert!(eta > 0.0 && eta.is_finite(), "eta = {eta}");
}

#[test]
fn friction_bb_empty_spectrum_is_zero() {
    let path = temp_path("empty-bb.csv");
    std::fs::write(&path, "# polarix-spectrum v1\n").unwrap();
    let out = polarix(&[
        "friction", "bb", "--spectrum", path.to_str().unwrap(), "--temp-k", "300",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["eta_kg_per_s"].as_f64().unwrap(), 0.0);
    std::fs::remove_file(&path).ok();
}

#[test]
fn friction_qf_distance_scaling() {
    let path = temp_path("toy-qf.csv");
    std::fs::write(&path, "# polarix-spectrum v1\n0.375,1.0,toy\n").unwrap();
    let base: Vec<String> = [
        "friction", "qf", "--spectrum", path.to_str().unwrap(), "--temp-k", "300",
        "--omega-p", "0.3", "--gamma-drude", "0.01",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let run = |dist: &str| -> f64 {
        let mut args = base.clone();
        args.extend_from_slice(&["--distance-m".into(), dist.into()]);
        let out = Command::new(env!("CARGO_BIN_EXE_polarix"))
            .args(&args)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        let doc: serde_json::Value =
            serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
        doc["eta_kg_per_s"].as_f64().unwrap()
    };
    let near = run("1e-8");
    let far = run("2e-8");
    assert!(((near / far) / 32.0 - 1.0).abs() < 1e-9, "ratio {}", near / far);
    std::fs::remove_file(&path).ok();
}

#[test]
fn spectrum_export_round_trips() {
    let out = polarix(&["spectrum", "export", "--hydrogen-nmax", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("# polarix-spectrum v1\n"), "{text}");
    let model = polarix::spectrum::read_spectrum(text.as_bytes()).unwrap();
    assert_eq!(model.lines().len(), 5);
    assert_eq!(model.lines()[0].delta_e, 0.375);

    // and to a file
    let path = temp_path("export.csv");
    let out = polarix(&[
        "spectrum", "export", "--hydrogen-nmax", "4", "--output", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let model = polarix::load_spectrum(&path).unwrap();
    assert_eq!(model.lines().len(), 3);
    std::fs::remove_file(&path).ok();
}

#[test]
fn spectrum_export_pseudospectrum_has_unit_trk() {
    let out = polarix(&[
        "spectrum", "export", "--grid-pseudospectrum", "--grid-rmax", "120", "--grid-n", "800",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let model = polarix::spectrum::read_spectrum(stdout(&out).as_bytes()).unwrap();
    assert_eq!(model.lines().len(), 800);
    let trk = polarix::trk_sum(&model);
    assert!((trk - 1.0).abs() < 1e-4, "trk = {trk}");
}

#[test]
fn bad_spectrum_file_is_a_usage_error() {
    let path = temp_path("bad.csv");
    std::fs::write(&path, "# polarix-spectrum v1\n0.375,-1.0,negative\n").unwrap();
    let out = polarix(&["alpha", "--spectrum", path.to_str().unwrap(), "--omega", "0.1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("nonnegative"), "{err}");
    std::fs::remove_file(&path).ok();
}
