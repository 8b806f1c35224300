use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use numrange::{PolyJson, SupportFunction, TriPolyF64};
use tempfile::TempDir;

const QUARTIC: &str = r#"{"a": [1, 3], "b": [0, 0], "c": [4, 8]}"#;
const SQUARE: &str = r#"{"a": [1, -1], "b": [0, 0], "c": [1, 1]}"#;

fn write_job(dir: &TempDir, text: &str) -> PathBuf {
    let path = dir.path().join("job.json");
    fs::write(&path, text).unwrap();
    path
}

fn numrange(args: &[&str], config: &Path, out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_numrange"))
        .args(args)
        .arg("--config")
        .arg(config)
        .arg("--out")
        .arg(out)
        .output()
        .unwrap()
}

fn run_ok(args: &[&str], job: &str) -> (TempDir, PathBuf) {
    let dir = TempDir::new().unwrap();
    let config = write_job(&dir, job);
    let out = dir.path().join("out");
    let result = numrange(args, &config, &out);
    assert!(result.status.success(), "{}", String::from_utf8_lossy(&result.stderr));
    (dir, out)
}

fn csv_rows(path: &Path) -> (String, Vec<Vec<f64>>) {
    let text = fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap().to_string();
    (header, lines.map(|l| l.split(',').map(|v| v.parse().unwrap()).collect()).collect())
}

#[test]
fn quartic_polynomial_has_six_terms() {
    let (_dir, out) = run_ok(&["poly"], QUARTIC);
    let doc: PolyJson = serde_json::from_str(&fs::read_to_string(out.join("polynomial.json")).unwrap()).unwrap();
    assert_eq!(doc.degree, 4);
    let mut got: Vec<_> = doc.terms.iter().map(|t| ((t.et, t.ex, t.ey), t.re, t.im)).collect();
    got.sort_by_key(|t| t.0);
    let want = [
        ((0, 0, 4), 144.0),
        ((0, 2, 2), 192.0),
        ((0, 4, 0), 64.0),
        ((2, 0, 2), -25.0),
        ((2, 2, 0), -65.0),
        ((4, 0, 0), 1.0),
    ];
    assert_eq!(got.len(), want.len(), "{got:?}");
    for ((e, re, im), (we, wv)) in got.iter().zip(want) {
        assert_eq!(*e, we);
        assert!((re - wv).abs() < 1e-9 && im.abs() < 1e-9, "{e:?}: {re} + {im}i");
    }
    // `poly` writes nothing else.
    assert_eq!(fs::read_dir(&out).unwrap().count(), 1);
}

#[test]
fn square_boundary_svg() {
    let (_dir, out) = run_ok(&["range"], SQUARE);
    let svg = fs::read_to_string(out.join("boundary.svg")).unwrap();
    assert!(svg.contains("<!-- numrange "));
    let points = svg.split("<polygon").nth(1).unwrap().split("points=\"").nth(1).unwrap().split('"').next().unwrap();
    let vertices: Vec<(f64, f64)> = points
        .split_whitespace()
        .map(|p| {
            let (x, y) = p.split_once(',').unwrap();
            (x.parse().unwrap(), y.parse().unwrap())
        })
        .collect();
    assert_eq!(vertices.len(), 4, "{vertices:?}");
    for corner in [(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)] {
        assert!(
            vertices.iter().any(|v| (v.0 - corner.0).abs() < 1e-6 && (v.1 - corner.1).abs() < 1e-6),
            "{corner:?} missing from {vertices:?}"
        );
    }
    for name in ["profile.csv", "polynomial.json", "oracles.csv"] {
        assert!(out.join(name).is_file(), "{name}");
    }
}

#[test]
fn mismatched_words_exit_2_without_files() {
    let dir = TempDir::new().unwrap();
    let config = write_job(&dir, "{\n  \"a\": [1, 3, 2],\n  \"b\": [0, 0],\n  \"c\": [4, 8]\n}\n");
    let out = dir.path().join("out");
    let result = numrange(&["range"], &config, &out);
    assert_eq!(result.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&result.stderr);
    assert!(stderr.contains("job.json:2:") && stderr.contains("differ in length"), "{stderr}");
    assert!(!out.exists());
}

#[test]
fn malformed_json_and_small_counts_exit_2() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("out");
    let config = write_job(&dir, "{\n  \"a\": [1, 3],\n  \"b\": [0, 0]\n  \"c\": [4, 8]\n}\n");
    let result = numrange(&["range"], &config, &out);
    assert_eq!(result.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&result.stderr).contains("job.json:4:"));

    let config = write_job(&dir, QUARTIC);
    let result = numrange(&["range", "--theta-samples", "4"], &config, &out);
    assert_eq!(result.status.code(), Some(2));
    assert!(!out.exists());
}

#[test]
fn unwritable_output_exits_3() {
    let dir = TempDir::new().unwrap();
    let config = write_job(&dir, QUARTIC);
    let blocker = dir.path().join("file");
    fs::write(&blocker, "").unwrap();
    let result = numrange(&["poly"], &config, &blocker.join("out"));
    assert_eq!(result.status.code(), Some(3));
}

#[test]
fn outputs_are_deterministic() {
    let job = r#"{"a": [[0.3, 0.2], -0.5, 1], "b": [0.1, "0.2i", 0], "c": [1, "1-0.5i", 0.25],
                  "theta_samples": 64, "phi_grid": 32}"#;
    let (_d1, first) = run_ok(&["range"], job);
    let (_d2, second) = run_ok(&["range"], job);
    for name in ["profile.csv", "polynomial.json", "boundary.svg", "oracles.csv"] {
        assert_eq!(fs::read(first.join(name)).unwrap(), fs::read(second.join(name)).unwrap(), "{name}");
    }
}

#[test]
fn polynomial_round_trip_reproduces_support() {
    let job = r#"{"a": [[0.3, 0.2], -0.5, 1], "b": [0.1, "0.2i", 0], "c": [1, "1-0.5i", 0.25],
                  "theta_samples": 90, "phi_grid": 64, "outputs": ["polynomial_json", "oracles_csv"]}"#;
    let (_dir, out) = run_ok(&["range"], job);
    let doc: PolyJson = serde_json::from_str(&fs::read_to_string(out.join("polynomial.json")).unwrap()).unwrap();
    let h = SupportFunction::from_polynomial(TriPolyF64::from_json(&doc).unwrap());
    let (header, rows) = csv_rows(&out.join("oracles.csv"));
    assert_eq!(header, "theta,support_P,oracle_symbol,oracle_truncation,abs_gap");
    assert_eq!(rows.len(), 90);
    for row in rows {
        assert!((h.value(row[0]).unwrap() - row[1]).abs() <= 1e-12);
        assert!(row[4] < 1e-7, "abs_gap {}", row[4]);
        assert!(row[3] <= row[1] + 1e-7);
    }
    assert!(!out.join("profile.csv").exists());
}

#[test]
fn overrides_apply() {
    let (_dir, out) = run_ok(&["oracle", "--theta-samples", "16", "--phi-grid", "8", "--truncation", "8"], QUARTIC);
    let (_, rows) = csv_rows(&out.join("oracles.csv"));
    assert_eq!(rows.len(), 16);
    assert_eq!(fs::read_dir(&out).unwrap().count(), 1);
}

#[test]
fn witness_matrix_and_profile() {
    let (_dir, out) = run_ok(&["witness", "--theta-samples", "72"], QUARTIC);
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(out.join("witness.json")).unwrap()).unwrap();
    assert_eq!(doc["size"], 4);
    assert_eq!(doc["rows"][0][0], serde_json::json!([8.0, 0.0]));
    let (header, rows) = csv_rows(&out.join("witness_profile.csv"));
    assert_eq!(header, "theta,support_P,support_S,abs_gap");
    assert!(rows.iter().all(|r| r[3] < 1e-9));

    let dir = TempDir::new().unwrap();
    let config = write_job(&dir, r#"{"a": [1, 3], "b": [0.5, 0], "c": [4, 8]}"#);
    let out = dir.path().join("out");
    let result = numrange(&["witness"], &config, &out);
    assert_eq!(result.status.code(), Some(2));
    assert!(!out.exists());
}
