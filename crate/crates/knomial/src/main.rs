//! Command-line front end: matrix generation, imprimitivity verification,
//! fiducial verification and search, and the bundled exact fiducial data,
//! with deterministic scriptable output.
//!
//! Exit codes: 0 success, 1 verification/convergence failure, 2 usage or
//! input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use knomial::cliffordrep::symplectic_unitary;
use knomial::heisenberg::{build_x, build_z, displacement, PVec};
use knomial::imprimitivity::{
    block_structure, change_of_basis, eigenspace_map, to_knomial_with, BLOCK_TOL,
};
use knomial::io;
use knomial::numtheory::{random_symplectic, Dim, Sl2};
use knomial::sic::{
    dim12_eval_all, dim8_fiducial, dim8_orbit_s2, sic_defect, zauner_search_subspaces,
    Dim8Selector, FidCand, SearchCfg, SearchRecord,
};
use knomial::{Basis, CVec, Error};

const DEFAULT_TOL: f64 = 1e-10;

#[derive(Parser)]
#[command(
    name = "knomial",
    version,
    about = "Weyl-Heisenberg/Clifford toolkit in the k-nomial basis with SIC fiducial search"
)]
struct Cli {
    /// Verification tolerance; overrides the KNOM_TOL environment variable.
    #[arg(long, global = true)]
    tolerance: Option<f64>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum GenKind {
    X,
    Z,
    D,
    Uf,
    T,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FileFormat {
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OrbitArg {
    S1,
    S0,
    S2,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate an operator matrix and write it to a file.
    Gen {
        #[arg(long)]
        kind: GenKind,
        #[arg(long)]
        dim: u64,
        /// Displacement index pair p1,p2 (for --kind d).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        p: Option<Vec<i64>>,
        /// Row-major symplectic entries a,b,c,d (for --kind uf).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        f: Option<Vec<i64>>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = FileFormat::Json)]
        format: FileFormat,
    },
    /// Sample random symplectic matrices and verify the k-nomial block
    /// structure of their unitaries against the eigenspace permutation.
    VerifyImprimitivity {
        #[arg(long)]
        dim: u64,
        #[arg(long, default_value_t = 50)]
        samples: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check the fiducial condition for a vector stored in a file.
    SicVerify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Numerically search for a fiducial vector.
    SicSearch {
        #[arg(long)]
        dim: u64,
        #[arg(long, default_value_t = 10)]
        restarts: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Restrict the search to the largest Zauner eigenspaces.
        #[arg(long)]
        zauner: bool,
        #[arg(long)]
        out: PathBuf,
        /// Optional line-delimited iteration log.
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Emit one of the bundled exact dimension-8 fiducials.
    Dim8 {
        #[arg(long, value_enum)]
        orbit: OrbitArg,
        /// Sign selector s1,s2,s3 (orbits s1 and s2).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        s: Option<Vec<i8>>,
        /// Quarter-turn selector r in 0..4 (orbit s0).
        #[arg(long)]
        r: Option<u8>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate the bundled dimension-12 coefficients over the real cubic
    /// roots and report the defects.
    Dim12Eval {
        /// Root index 0..3; all three when omitted.
        #[arg(long)]
        root: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn tolerance(cli: &Cli) -> Result<f64, String> {
    if let Some(t) = cli.tolerance {
        if t <= 0.0 {
            return Err("tolerance must be positive".into());
        }
        return Ok(t);
    }
    match std::env::var("KNOM_TOL") {
        Ok(s) => s
            .parse::<f64>()
            .ok()
            .filter(|t| *t > 0.0)
            .ok_or_else(|| format!("KNOM_TOL is not a positive number: '{s}'")),
        Err(_) => Ok(DEFAULT_TOL),
    }
}

/// Write via a temporary file in the same directory, then rename.
fn write_atomic(path: &Path, contents: &str) -> Result<(), String> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let tmp = match dir {
        Some(d) => d.join(format!(
            ".{}.tmp",
            path.file_name().map(|s| s.to_string_lossy()).unwrap_or_default()
        )),
        None => PathBuf::from(format!(".{}.tmp", path.display())),
    };
    fs::write(&tmp, contents).map_err(|e| format!("cannot write {}: {e}", tmp.display()))?;
    fs::rename(&tmp, path).map_err(|e| format!("cannot rename onto {}: {e}", path.display()))
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run_gen(
    kind: GenKind,
    dim: u64,
    p: Option<Vec<i64>>,
    f: Option<Vec<i64>>,
    out: &Path,
    format: FileFormat,
) -> ExitCode {
    if dim < 1 {
        return usage_error("--dim must be at least 1");
    }
    let d = Dim::new(dim);
    let mat = match kind {
        GenKind::X => build_x(dim),
        GenKind::Z => build_z(dim),
        GenKind::T => change_of_basis(&d),
        GenKind::D => {
            let Some(p) = p.filter(|p| p.len() == 2) else {
                return usage_error("--kind d requires --p p1,p2");
            };
            displacement(&d, PVec::reduced(d.modulus(), p[0], p[1]))
        }
        GenKind::Uf => {
            let Some(f) = f.filter(|f| f.len() == 4) else {
                return usage_error("--kind uf requires --f a,b,c,d");
            };
            let m = match Sl2::new(d.modulus(), [[f[0], f[1]], [f[2], f[3]]]) {
                Ok(m) => m,
                Err(e) => return usage_error(&format!("invalid symplectic matrix: {e}")),
            };
            if !m.is_symplectic() {
                return usage_error("--kind uf requires det = +1 mod nbar");
            }
            symplectic_unitary(&d, &m)
        }
    };
    let body = match format {
        FileFormat::Json => io::cmat_to_json(&mat),
        FileFormat::Csv => io::cmat_to_csv(&mat),
    };
    if let Err(e) = write_atomic(out, &body) {
        return usage_error(&e);
    }
    println!(
        "wrote {}x{} matrix (kind {:?}) to {}",
        mat.dim(),
        mat.dim(),
        kind,
        out.display()
    );
    ExitCode::SUCCESS
}

fn run_verify_imprimitivity(dim: u64, samples: u32, seed: u64, tol: f64) -> ExitCode {
    if dim < 1 {
        return usage_error("--dim must be at least 1");
    }
    let d = Dim::new(dim);
    let t = change_of_basis(&d);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0u32;
    for i in 0..samples {
        let f = random_symplectic(d.modulus(), &mut rng);
        let u = symplectic_unitary(&d, &f);
        let uk = to_knomial_with(&t, &u).expect("dimensions match");
        let block_tol = if tol < BLOCK_TOL { BLOCK_TOL } else { tol };
        match block_structure(&uk, &d, block_tol) {
            Err(Error::NotKNomial { block_row, block_col }) => {
                failures += 1;
                println!(
                    "sample {i}: FAIL structure violation at block ({block_row}, {block_col}) for F = {:?}",
                    f.entries()
                );
            }
            Err(e) => {
                failures += 1;
                println!("sample {i}: FAIL {e}");
            }
            Ok(bm) => {
                let mut bad = None;
                for r in 0..d.grid() {
                    for s in 0..d.grid() {
                        let want = eigenspace_map(&f, &d, r, s);
                        if bm.target(r, s) != want {
                            bad = Some((r, s, bm.target(r, s), want));
                        }
                    }
                }
                match bad {
                    None => println!("sample {i}: ok F = {:?}", f.entries()),
                    Some((r, s, got, want)) => {
                        failures += 1;
                        println!(
                            "sample {i}: FAIL permutation mismatch at ({r}, {s}): got {got:?}, want {want:?}"
                        );
                    }
                }
            }
        }
    }
    println!(
        "verified {} samples at dim {} (k = {}, n = {}): {} failed",
        samples,
        dim,
        d.block_size(),
        d.grid(),
        failures
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn load_vector(path: &Path) -> Result<CVec, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    // accept either a bare vector or a fiducial-candidate file
    match io::cvec_from_json(&text) {
        Ok(v) => Ok(v),
        Err(first) => {
            io::fidcand_psi_from_json(&text).map_err(|_| format!("{}: {first}", path.display()))
        }
    }
}

fn run_sic_verify(input: &Path, tol: f64) -> ExitCode {
    let v = match load_vector(input) {
        Ok(v) => v,
        Err(e) => return usage_error(&e),
    };
    let v = match v.basis() {
        Basis::Standard => v,
        Basis::Knomial => {
            let d = Dim::new(v.dim() as u64);
            change_of_basis(&d).apply(&v).with_basis(Basis::Standard)
        }
    };
    let norm = v.norm();
    if norm < 1e-6 {
        return usage_error("input vector is numerically zero");
    }
    let n = v.dim() as u64;
    let cand = sic_defect(&v.normalized(), n).expect("normalized above");
    if (norm - 1.0).abs() > 1e-9 {
        println!("note: input norm was {norm:.6}; verified the normalized vector");
    }
    let target = 1.0 / (n as f64 + 1.0);
    let overlaps = cand.overlaps.as_ref().expect("defect computed with table");
    let mut buckets = [0usize; 5];
    let mut min_ov = f64::INFINITY;
    let mut max_ov = f64::NEG_INFINITY;
    let mut sum = 0.0;
    for (idx, ov) in overlaps.iter().enumerate() {
        if idx == 0 {
            continue;
        }
        min_ov = min_ov.min(*ov);
        max_ov = max_ov.max(*ov);
        sum += ov;
        let dev = (ov - target).abs();
        let b = if dev < 1e-12 {
            0
        } else if dev < 1e-9 {
            1
        } else if dev < 1e-6 {
            2
        } else if dev < 1e-3 {
            3
        } else {
            4
        };
        buckets[b] += 1;
    }
    let count = (n * n - 1) as f64;
    println!(
        "dim {n}: defect {:.6e} at p = ({}, {})",
        cand.defect, cand.worst_p.p1, cand.worst_p.p2
    );
    println!(
        "overlaps |<psi|D_p psi>|^2 over {} nontrivial p: min {:.6e}, mean {:.6e}, max {:.6e} (target {:.6e})",
        count as u64,
        min_ov,
        sum / count,
        max_ov,
        target
    );
    println!(
        "deviation histogram: <1e-12: {}, <1e-9: {}, <1e-6: {}, <1e-3: {}, >=1e-3: {}",
        buckets[0], buckets[1], buckets[2], buckets[3], buckets[4]
    );
    if cand.defect < tol {
        println!("PASS (tolerance {tol:.1e})");
        ExitCode::SUCCESS
    } else {
        println!("FAIL (tolerance {tol:.1e})");
        ExitCode::FAILURE
    }
}

fn write_fidcand(path: &Path, cand: &FidCand, meta: serde_json::Value) -> Result<(), String> {
    write_atomic(path, &io::fidcand_to_json(cand, &meta))
}

fn run_sic_search(
    dim: u64,
    restarts: u32,
    seed: u64,
    zauner: bool,
    out: &Path,
    log_path: Option<&Path>,
    tol: f64,
) -> ExitCode {
    if dim < 2 {
        return usage_error("--dim must be at least 2");
    }
    if restarts < 1 {
        return usage_error("--restarts must be at least 1");
    }
    let d = Dim::new(dim);
    let subspaces: Vec<Option<Vec<CVec>>> = if zauner {
        zauner_search_subspaces(&d).into_iter().map(Some).collect()
    } else {
        vec![None]
    };
    let mut best: Option<FidCand> = None;
    let mut all_records: Vec<SearchRecord> = Vec::new();
    for (si, sub) in subspaces.into_iter().enumerate() {
        let mut cfg = SearchCfg { tol, ..SearchCfg::new(restarts, seed) };
        if let Some(sub) = sub {
            cfg = cfg.with_subspace(sub);
        }
        let (result, records) = knomial::sic::search_fiducial_logged(&d, &cfg);
        for mut r in records {
            r.restart += si as u32 * restarts;
            all_records.push(r);
        }
        let cand = match result {
            Ok(c) => c,
            Err(Error::NoConvergence { best }) => *best,
            Err(e) => return usage_error(&format!("search failed: {e}")),
        };
        let better = best.as_ref().map(|b| cand.defect < b.defect).unwrap_or(true);
        if better {
            best = Some(cand);
        }
    }
    let best = best.expect("at least one subspace searched");
    let meta = serde_json::json!({
        "seed": seed,
        "restarts": restarts,
        "zauner": zauner,
        "tolerance": tol,
    });
    if let Err(e) = write_fidcand(out, &best, meta) {
        return usage_error(&e);
    }
    if let Some(lp) = log_path {
        let mut body = String::new();
        for r in &all_records {
            body.push_str(&io::search_record_to_json(r));
            body.push('\n');
        }
        if let Err(e) = write_atomic(lp, &body) {
            return usage_error(&e);
        }
    }
    println!(
        "dim {dim}: best defect {:.6e} after {} restart(s){}; wrote {}",
        best.defect,
        restarts,
        if zauner { " per Zauner eigenspace" } else { "" },
        out.display()
    );
    if best.defect < tol {
        ExitCode::SUCCESS
    } else {
        eprintln!("no candidate reached tolerance {tol:.1e}; best written anyway");
        ExitCode::FAILURE
    }
}

fn run_dim8(orbit: OrbitArg, s: Option<Vec<i8>>, r: Option<u8>, out: &Path, tol: f64) -> ExitCode {
    let (cand, meta) = match orbit {
        OrbitArg::S1 | OrbitArg::S2 => {
            if r.is_some() {
                return usage_error("--r applies only to --orbit s0");
            }
            let Some(s) = s.filter(|s| s.len() == 3) else {
                return usage_error("--orbit s1/s2 requires --s s1,s2,s3");
            };
            let sel = Dim8Selector::S1 { s1: s[0], s2: s[1], s3: s[2] };
            if !sel.validate() {
                return usage_error("sign selector entries must be 1 or -1");
            }
            let result = if orbit == OrbitArg::S1 {
                dim8_fiducial(sel)
            } else {
                dim8_orbit_s2(sel)
            };
            let cand = match result {
                Ok(c) => c,
                Err(e) => return usage_error(&format!("{e}")),
            };
            let meta = serde_json::json!({
                "orbit": sel.orbit_label(),
                "eigenspace": format!("{orbit:?}"),
                "selector": {"s1": s[0], "s2": s[1], "s3": s[2]},
            });
            (cand, meta)
        }
        OrbitArg::S0 => {
            if s.is_some() {
                return usage_error("--s applies only to --orbit s1/s2");
            }
            let Some(r) = r else {
                return usage_error("--orbit s0 requires --r 0..4");
            };
            let sel = Dim8Selector::S0 { r };
            if !sel.validate() {
                return usage_error("--r must be 0, 1, 2, or 3");
            }
            let cand = match dim8_fiducial(sel) {
                Ok(c) => c,
                Err(e) => return usage_error(&format!("{e}")),
            };
            let meta = serde_json::json!({
                "orbit": sel.orbit_label(),
                "eigenspace": "S0",
                "selector": {"r": r},
            });
            (cand, meta)
        }
    };
    let label = meta["orbit"].as_str().unwrap_or("?").to_string();
    if let Err(e) = write_fidcand(out, &cand, meta) {
        return usage_error(&e);
    }
    println!("orbit {label}: defect {:.6e}; wrote {}", cand.defect, out.display());
    if cand.defect < tol.max(1e-9) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn run_dim12(root: Option<usize>, out: Option<&Path>, tol: f64) -> ExitCode {
    if let Some(r) = root {
        if r > 2 {
            return usage_error("--root must be 0, 1, or 2");
        }
    }
    let evals = dim12_eval_all();
    let chosen: Vec<_> = match root {
        Some(r) => evals.into_iter().filter(|e| e.root_choice == r).collect(),
        None => evals,
    };
    for e in &chosen {
        println!(
            "root {} (t1 = {:+.12}): defect {:.6e}",
            e.root_choice, e.root, e.cand.defect
        );
    }
    let best = chosen
        .iter()
        .min_by(|a, b| a.cand.defect.partial_cmp(&b.cand.defect).unwrap())
        .expect("at least one root evaluated");
    if let Some(out) = out {
        let meta = serde_json::json!({
            "root_choice": best.root_choice,
            "t1": best.root,
        });
        if let Err(e) = write_fidcand(out, &best.cand, meta) {
            return usage_error(&e);
        }
        println!("wrote best candidate (root {}) to {}", best.root_choice, out.display());
    }
    // the bundled data sits at machine precision; 1e-8 is the documented bar
    if best.cand.defect < tol.max(1e-8) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tol = match tolerance(&cli) {
        Ok(t) => t,
        Err(e) => return usage_error(&e),
    };
    match cli.cmd {
        Cmd::Gen { kind, dim, p, f, ref out, format } => {
            run_gen(kind, dim, p.clone(), f.clone(), out, format)
        }
        Cmd::VerifyImprimitivity { dim, samples, seed } => {
            run_verify_imprimitivity(dim, samples, seed, tol)
        }
        Cmd::SicVerify { ref input } => run_sic_verify(input, tol),
        Cmd::SicSearch { dim, restarts, seed, zauner, ref out, ref log } => {
            run_sic_search(dim, restarts, seed, zauner, out, log.as_deref(), tol)
        }
        Cmd::Dim8 { orbit, ref s, r, ref out } => run_dim8(orbit, s.clone(), r, out, tol),
        Cmd::Dim12Eval { root, ref out } => run_dim12(root, out.as_deref(), tol),
    }
}
