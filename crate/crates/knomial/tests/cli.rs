//! End-to-end tests of the command-line interface, driving the built binary
//! and checking outputs, exit codes, and determinism.

use std::path::Path;
use std::process::{Command, Output};

use knomial::heisenberg::build_x;
use knomial::io;
use knomial::linalg::Basis;
use knomial::numtheory::{Dim, Sl2};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_knomial"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn gen_change_of_basis_dim8() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t8.json");
    let out = run(&["gen", "--kind", "t", "--dim", "8", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let m = io::cmat_from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(m.dim(), 8);
    assert!(m.is_unitary(1e-12));
    for c in 0..8 {
        let nonzero = (0..8).filter(|&r| m[(r, c)].norm() > 1e-14).count();
        assert_eq!(nonzero, 2);
    }
}

#[test]
fn gen_displacement_is_shift_at_trivial_phase() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    let out = run(&[
        "gen", "--kind", "d", "--dim", "3", "--p", "1,0", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let m = io::cmat_from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(m.max_abs_diff(&build_x(3)) < 1e-15);
}

#[test]
fn gen_symplectic_unitary_is_hadamard_and_round_trips_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("uf.json");
    let out = run(&[
        "gen", "--kind", "uf", "--dim", "12", "--f", "0,-1,1,0", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let m = io::cmat_from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let want = 1.0 / 12f64.sqrt();
    for r in 0..12 {
        for c in 0..12 {
            assert!((m[(r, c)].norm() - want).abs() < 1e-12);
        }
    }
    // serialization round-trips the in-memory matrix bit for bit
    let d = Dim::new(12);
    let f = Sl2::new(24, [[0, -1], [1, 0]]).unwrap();
    let direct = knomial::cliffordrep::symplectic_unitary(&d, &f);
    assert!(m.max_abs_diff(&direct) == 0.0);
}

#[test]
fn gen_rejects_bad_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.json");
    // missing --f
    let out = run(&["gen", "--kind", "uf", "--dim", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    // determinant not 1
    let out = run(&[
        "gen", "--kind", "uf", "--dim", "4", "--f", "1,0,0,2", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
    // unknown kind is a clap usage error
    let out = run(&["gen", "--kind", "q", "--dim", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn gen_csv_format() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z.csv");
    let out = run(&[
        "gen", "--kind", "z", "--dim", "4", "--format", "csv", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert_eq!(text.lines().next().unwrap().split(',').count(), 8);
}

#[test]
fn verify_imprimitivity_passes_for_k_nomial_and_monomial_dims() {
    for (dim, samples) in [("12", "50"), ("9", "50"), ("28", "20")] {
        let out = run(&[
            "verify-imprimitivity", "--dim", dim, "--samples", samples, "--seed", "5",
        ]);
        assert_eq!(code(&out), 0, "dim {dim}: {}", String::from_utf8_lossy(&out.stdout));
        let stdout = String::from_utf8_lossy(&out.stdout);
        assert!(stdout.contains("0 failed"));
    }
}

#[test]
fn sic_verify_accepts_exact_fiducial_and_rejects_basis_vector() {
    let dir = tempfile::tempdir().unwrap();
    let fid = dir.path().join("fid.json");
    let out = run(&[
        "dim8", "--orbit", "s1", "--s", "1,1,-1", "--out", fid.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let content = std::fs::read_to_string(&fid).unwrap();
    assert!(content.contains("\"orbit\":\"8a\""));
    let out = run(&["sic-verify", "--input", fid.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));

    // e0 has defect 8/9 and must fail
    let e0 = knomial::linalg::CVec::basis_vector(8, Basis::Standard, 0);
    let e0_path = dir.path().join("e0.json");
    std::fs::write(&e0_path, io::cvec_to_json(&e0)).unwrap();
    let out = run(&["sic-verify", "--input", e0_path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stdout).contains("8.888889e-1"));

    // truncated JSON is a usage/input error
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, &content[..content.len() / 2]).unwrap();
    let out = run(&["sic-verify", "--input", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn dim8_selector_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.json");
    let out = run(&["dim8", "--orbit", "s0", "--r", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(std::fs::read_to_string(&path).unwrap().contains("\"orbit\":\"8b\""));

    let out = run(&["dim8", "--orbit", "s2", "--s", "1,-1,1", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(std::fs::read_to_string(&path).unwrap().contains("\"orbit\":\"8a\""));

    // selector mismatch
    let out = run(&["dim8", "--orbit", "s1", "--r", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let out = run(&["dim8", "--orbit", "s0", "--s", "1,1,1", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let out = run(&["dim8", "--orbit", "s0", "--r", "7", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn sic_search_converges_and_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let log_a = dir.path().join("a.log");
    let log_b = dir.path().join("b.log");
    for (out_path, log_path) in [(&a, &log_a), (&b, &log_b)] {
        let out = run(&[
            "sic-search", "--dim", "2", "--restarts", "10", "--seed", "1", "--out",
            out_path.to_str().unwrap(), "--log", log_path.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(std::fs::read(&log_a).unwrap(), std::fs::read(&log_b).unwrap());
    let log = std::fs::read_to_string(&log_a).unwrap();
    let first = log.lines().next().unwrap();
    assert!(first.contains("\"restart\":0") && first.contains("\"objective\":"));
}

#[test]
fn sic_search_zauner_restriction_at_dim5() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s5.json");
    let out = run(&[
        "sic-search", "--dim", "5", "--zauner", "--restarts", "20", "--seed", "7", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    // searched file verifies
    let out = run(&["sic-verify", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
}

#[test]
fn dim12_eval_reports_all_roots() {
    let out = run(&["dim12-eval"]);
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8_lossy(&out.stdout);
    for r in 0..3 {
        assert!(stdout.contains(&format!("root {r}")));
    }
}

#[test]
fn tolerance_env_var_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let e0 = knomial::linalg::CVec::basis_vector(8, Basis::Standard, 0);
    let e0_path = dir.path().join("e0.json");
    std::fs::write(&e0_path, io::cvec_to_json(&e0)).unwrap();
    // a huge env tolerance lets even e0 pass
    let out = bin()
        .args(["sic-verify", "--input", e0_path.to_str().unwrap()])
        .env("KNOM_TOL", "1.0")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    // ...but the flag wins over the environment
    let out = bin()
        .args([
            "sic-verify", "--tolerance", "1e-3", "--input", e0_path.to_str().unwrap(),
        ])
        .env("KNOM_TOL", "1.0")
        .output()
        .unwrap();
    assert_eq!(code(&out), 1);
    // malformed env value is a usage error
    let out = bin()
        .args(["sic-verify", "--input", e0_path.to_str().unwrap()])
        .env("KNOM_TOL", "banana")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn gen_outputs_are_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = run(&[
            "gen", "--kind", "uf", "--dim", "8", "--f", "1,3,2,7", "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn atomic_write_leaves_no_temp_files(){
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let out = run(&["gen", "--kind", "t", "--dim", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let names: Vec<String> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    assert_eq!(names, vec!["t.json".to_string()]);
    assert!(Path::new(&path).exists());
}
