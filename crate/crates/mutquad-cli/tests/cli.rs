//! Black-box tests of the `mutquad` binary: exit statuses, file outputs,
//! and output determinism.

use std::path::Path;
use std::process::{Command, Output};

fn mutquad(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mutquad"))
        .args(args)
        .current_dir(dir)
        .env_remove("MUTQUAD_THREADS")
        .output()
        .expect("binary runs")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn render_writes_pgm_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = mutquad(
        &[
            "render", "--c0", "0,0", "--c1", "-0.13,-0.77", "--R", "0.5", "--size", "64x64",
            "--max-iter", "48", "--out", "files", "--csv",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let pgm = std::fs::read(dir.path().join("files/render_00.pgm")).unwrap();
    assert!(pgm.starts_with(b"P5\n64 64\n255\n"));
    assert_eq!(pgm.len(), 13 + 64 * 64);
    let csv = std::fs::read_to_string(dir.path().join("files/render.csv")).unwrap();
    assert_eq!(csv.lines().count(), 2);
}

#[test]
fn render_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "render", "--c0", "-0.65,0", "--c1", "-0.13,-0.77", "--r", "0.05", "--R", "0.3",
        "--size", "48x48", "--max-iter", "32", "--out", "a",
    ];
    assert_eq!(code(&mutquad(&args, dir.path())), 0);
    let mut args_b = args;
    args_b[args.len() - 1] = "b";
    assert_eq!(code(&mutquad(&args_b, dir.path())), 0);
    assert_eq!(
        std::fs::read(dir.path().join("a/render_00.pgm")).unwrap(),
        std::fs::read(dir.path().join("b/render_00.pgm")).unwrap()
    );
}

#[test]
fn inconsistent_radii_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = mutquad(&["render", "--r", "0.5", "--R", "0.1"], dir.path());
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("r"));
}

#[test]
fn malformed_number_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = mutquad(&["render", "--c0", "zebra,1"], dir.path());
    assert_eq!(code(&out), 2);
}

#[test]
fn unknown_preset_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = mutquad(&["sweep", "--preset", "fig99"], dir.path());
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("fig99"));
}

#[test]
fn sweep_writes_panel_per_point() {
    let dir = tempfile::tempdir().unwrap();
    let out = mutquad(
        &[
            "sweep", "--preset", "fig11", "--size", "32x32", "--max-iter", "24", "--out",
            "sweep_out", "--csv",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    for index in 0..4 {
        assert!(dir
            .path()
            .join(format!("sweep_out/fig11_{index:02}.pgm"))
            .exists());
    }
    let csv = std::fs::read_to_string(dir.path().join("sweep_out/fig11.csv")).unwrap();
    assert_eq!(csv.lines().count(), 5);
}

#[test]
fn metrics_writes_only_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = mutquad(
        &[
            "metrics", "--preset", "fig11", "--size", "32x32", "--max-iter", "24", "--out",
            "metrics_out",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    assert!(dir.path().join("metrics_out/fig11.csv").exists());
    assert!(!dir.path().join("metrics_out/fig11_00.pgm").exists());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.starts_with("axis_value,"));
}

#[test]
fn preset_lists_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let out = mutquad(&["preset"], dir.path());
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.lines().count() >= 14);
    assert!(stdout.contains("fig2"));
    assert!(stdout.contains("fig15"));
}

#[test]
fn png_format_produces_png_signature() {
    let dir = tempfile::tempdir().unwrap();
    let out = mutquad(
        &[
            "render", "--c1", "-0.13,-0.77", "--size", "16x16", "--max-iter", "16", "--out",
            "png_out", "--format", "png",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    let png = std::fs::read(dir.path().join("png_out/render_00.png")).unwrap();
    assert_eq!(&png[..8], b"\x89PNG\r\n\x1a\n");
}

#[test]
fn thread_env_var_is_honored_and_validated() {
    let dir = tempfile::tempdir().unwrap();
    let ok = Command::new(env!("CARGO_BIN_EXE_mutquad"))
        .args(["render", "--size", "16x16", "--max-iter", "8", "--out", "thr"])
        .current_dir(dir.path())
        .env("MUTQUAD_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));

    let bad = Command::new(env!("CARGO_BIN_EXE_mutquad"))
        .args(["render", "--size", "16x16", "--max-iter", "8", "--out", "thr2"])
        .current_dir(dir.path())
        .env("MUTQUAD_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn preset_override_flags_apply() {
    let dir = tempfile::tempdir().unwrap();
    // fig11 with r forced above its R must be rejected up front
    let out = mutquad(
        &["sweep", "--preset", "fig11", "--R", "0.01", "--size", "16x16"],
        dir.path(),
    );
    assert_eq!(code(&out), 2);
}
