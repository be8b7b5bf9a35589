//! Seeded random-restart fiducial search: squared-residual objective over
//! the nontrivial squared overlaps, minimized on the unit sphere by L-BFGS
//! with projected gradients and normalization by retraction. Restarts own
//! independent RNG streams derived from (seed, restart index), so results
//! are reproducible bit for bit.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::heisenberg::{displacement_adjoint_apply, displacement_apply, PVec};
use crate::linalg::{Basis, CVec};
use crate::numtheory::Dim;
use crate::{Error, Result};

use super::{sic_defect, FidCand};

/// Search configuration. `subspace`, when given, must be an orthonormal
/// list of standard-basis vectors; the candidate is parametrized by its
/// complex coefficients in that list.
#[derive(Clone, Debug)]
pub struct SearchCfg {
    pub restarts: u32,
    pub max_iters: u32,
    pub tol: f64,
    pub rng_seed: u64,
    pub subspace: Option<Vec<CVec>>,
}

impl SearchCfg {
    pub fn new(restarts: u32, rng_seed: u64) -> SearchCfg {
        SearchCfg { restarts, max_iters: 2000, tol: 1e-10, rng_seed, subspace: None }
    }

    pub fn with_subspace(mut self, subspace: Vec<CVec>) -> SearchCfg {
        self.subspace = Some(subspace);
        self
    }
}

/// One line of the search log.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct SearchRecord {
    pub restart: u32,
    pub iter: u32,
    pub objective: f64,
}

const LBFGS_MEMORY: usize = 10;
const OBJECTIVE_FLOOR: f64 = 1e-26;
const GRAD_FLOOR: f64 = 1e-14;

struct Problem<'a> {
    d: Dim,
    subspace: Option<&'a [CVec]>,
    /// number of complex parameters
    m: usize,
}

impl<'a> Problem<'a> {
    fn new(d: Dim, subspace: Option<&'a [CVec]>) -> Problem<'a> {
        let m = match subspace {
            Some(v) => {
                assert!(!v.is_empty(), "subspace must be nonempty");
                for (i, a) in v.iter().enumerate() {
                    assert_eq!(a.dim() as u64, d.dim());
                    for (j, b) in v.iter().enumerate() {
                        let want = if i == j { 1.0 } else { 0.0 };
                        assert!(
                            (a.inner(b).norm() - want).abs() < 1e-8,
                            "subspace vectors must be orthonormal"
                        );
                    }
                }
                v.len()
            }
            None => d.dim() as usize,
        };
        Problem { d, subspace, m }
    }

    fn state(&self, params: &[f64]) -> CVec {
        let coeffs: Vec<Complex64> = (0..self.m)
            .map(|i| Complex64::new(params[i], params[self.m + i]))
            .collect();
        match self.subspace {
            None => CVec::from_slice(Basis::Standard, &coeffs),
            Some(v) => {
                let mut psi = CVec::zeros(self.d.dim() as usize, Basis::Standard);
                for (c, b) in coeffs.iter().zip(v) {
                    psi = psi.add(&b.scale(*c));
                }
                psi
            }
        }
    }

    /// Objective Σ_{p≠0} (∣⟨ψ∣D_pψ⟩∣² − 1/(N+1))² and its gradient with
    /// respect to the real parameters, both as smooth functions on the
    /// ambient parameter space.
    fn objective_gradient(&self, params: &[f64]) -> (f64, Vec<f64>) {
        let n = self.d.dim();
        let psi = self.state(params);
        let target = 1.0 / (n as f64 + 1.0);
        let mut f = 0.0f64;
        let mut gpsi = CVec::zeros(n as usize, Basis::Standard);
        for p1 in 0..n {
            for p2 in 0..n {
                if p1 == 0 && p2 == 0 {
                    continue;
                }
                let p = PVec { p1, p2 };
                let fwd = displacement_apply(&self.d, p, &psi);
                let overlap = psi.inner(&fwd);
                let r = overlap.norm_sqr() - target;
                f += r * r;
                let bwd = displacement_adjoint_apply(&self.d, p, &psi);
                let w_fwd = Complex64::new(2.0 * r, 0.0) * overlap.conj();
                let w_bwd = Complex64::new(2.0 * r, 0.0) * overlap;
                for u in 0..n as usize {
                    gpsi[u] += w_fwd * fwd[u] + w_bwd * bwd[u];
                }
            }
        }
        // chain rule through the (orthonormal) parametrization, then split
        // the conjugate-coordinate gradient into real and imaginary parts
        let gc: Vec<Complex64> = match self.subspace {
            None => gpsi.entries().to_vec(),
            Some(v) => v.iter().map(|b| b.inner(&gpsi)).collect(),
        };
        let mut grad = vec![0.0f64; 2 * self.m];
        for i in 0..self.m {
            grad[i] = 2.0 * gc[i].re;
            grad[self.m + i] = 2.0 * gc[i].im;
        }
        (f, grad)
    }
}

/// Objective value and analytic gradient at an arbitrary parameter point;
/// the layout is `m` real parts followed by `m` imaginary parts, where `m`
/// is the subspace dimension (or N without a subspace).
pub fn objective_and_gradient(
    d: &Dim,
    subspace: Option<&[CVec]>,
    params: &[f64],
) -> (f64, Vec<f64>) {
    let prob = Problem::new(*d, subspace);
    assert_eq!(params.len(), 2 * prob.m);
    prob.objective_gradient(params)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Remove the radial component: the tangent projection on the unit sphere.
fn project(y: &[f64], g: &[f64]) -> Vec<f64> {
    let r = dot(y, g);
    g.iter().zip(y).map(|(gi, yi)| gi - r * yi).collect()
}

fn retract(y: &[f64], d: &[f64], t: f64) -> Vec<f64> {
    let stepped: Vec<f64> = y.iter().zip(d).map(|(yi, di)| yi + t * di).collect();
    let n = norm(&stepped);
    stepped.into_iter().map(|v| v / n).collect()
}

/// Minimize the objective from one starting point; returns the final
/// parameters and objective.
fn descend(
    prob: &Problem,
    start: Vec<f64>,
    max_iters: u32,
    restart: u32,
    log: &mut Vec<SearchRecord>,
) -> (Vec<f64>, f64) {
    let mut y = start;
    let (mut f, g0) = prob.objective_gradient(&y);
    let mut g_r = project(&y, &g0);
    log.push(SearchRecord { restart, iter: 0, objective: f });
    let mut mem_s: Vec<Vec<f64>> = Vec::new();
    let mut mem_y: Vec<Vec<f64>> = Vec::new();
    let mut mem_rho: Vec<f64> = Vec::new();

    for iter in 1..=max_iters {
        if f < OBJECTIVE_FLOOR || norm(&g_r) < GRAD_FLOOR {
            break;
        }
        // two-loop recursion
        let mut q = g_r.clone();
        let mut alphas = Vec::with_capacity(mem_s.len());
        for k in (0..mem_s.len()).rev() {
            let a = mem_rho[k] * dot(&mem_s[k], &q);
            for (qi, yi) in q.iter_mut().zip(&mem_y[k]) {
                *qi -= a * yi;
            }
            alphas.push(a);
        }
        if let (Some(s), Some(yv)) = (mem_s.last(), mem_y.last()) {
            let gamma = dot(s, yv) / dot(yv, yv);
            for qi in q.iter_mut() {
                *qi *= gamma;
            }
        }
        for k in 0..mem_s.len() {
            let b = mem_rho[k] * dot(&mem_y[k], &q);
            let a = alphas[mem_s.len() - 1 - k];
            for (qi, si) in q.iter_mut().zip(&mem_s[k]) {
                *qi += (a - b) * si;
            }
        }
        let mut dir: Vec<f64> = q.into_iter().map(|v| -v).collect();
        let mut slope = dot(&dir, &g_r);
        if slope >= 0.0 || slope.is_nan() {
            dir = g_r.iter().map(|v| -v).collect();
            slope = -dot(&g_r, &g_r);
        }

        // backtracking Armijo search with retraction to the sphere
        let mut t = 1.0f64;
        let mut accepted = None;
        for _ in 0..60 {
            let y_new = retract(&y, &dir, t);
            let (f_new, g_new) = prob.objective_gradient(&y_new);
            if f_new <= f + 1e-4 * t * slope {
                accepted = Some((y_new, f_new, g_new));
                break;
            }
            t *= 0.5;
        }
        let Some((y_new, f_new, g_new)) = accepted else {
            break;
        };
        let g_r_new = project(&y_new, &g_new);
        let s: Vec<f64> = y_new.iter().zip(&y).map(|(a, b)| a - b).collect();
        let ydiff: Vec<f64> = g_r_new.iter().zip(&g_r).map(|(a, b)| a - b).collect();
        let sy = dot(&s, &ydiff);
        if sy > 1e-12 * norm(&s) * norm(&ydiff) {
            mem_s.push(s);
            mem_y.push(ydiff);
            mem_rho.push(1.0 / sy);
            if mem_s.len() > LBFGS_MEMORY {
                mem_s.remove(0);
                mem_y.remove(0);
                mem_rho.remove(0);
            }
        }
        y = y_new;
        f = f_new;
        g_r = g_r_new;
        log.push(SearchRecord { restart, iter, objective: f });
    }
    (y, f)
}

/// Run the search and collect the per-iteration log.
pub fn search_fiducial_logged(d: &Dim, cfg: &SearchCfg) -> (Result<FidCand>, Vec<SearchRecord>) {
    assert!(cfg.restarts >= 1 && cfg.tol > 0.0);
    let prob = Problem::new(*d, cfg.subspace.as_deref());
    let mut log = Vec::new();
    let mut best: Option<FidCand> = None;
    for restart in 0..cfg.restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
        rng.set_stream(restart as u64);
        let start = loop {
            let raw: Vec<f64> = (0..2 * prob.m).map(|_| rng.gen::<f64>() * 2.0 - 1.0).collect();
            let n = norm(&raw);
            if n > 1e-3 {
                break raw.into_iter().map(|v| v / n).collect::<Vec<f64>>();
            }
        };
        let (y, _f) = descend(&prob, start, cfg.max_iters, restart, &mut log);
        let psi = prob.state(&y).normalized();
        let cand = sic_defect(&psi, d.dim()).expect("search iterate is normalized");
        let better = match &best {
            None => true,
            Some(b) => cand.defect < b.defect,
        };
        if better {
            best = Some(cand);
        }
    }
    let best = best.expect("at least one restart ran");
    if best.defect < cfg.tol {
        (Ok(best), log)
    } else {
        (Err(Error::NoConvergence { best: Box::new(best) }), log)
    }
}

/// Minimize the SIC objective over unit vectors (optionally within a
/// subspace); deterministic given the seed. On failure to reach `cfg.tol`
/// the best candidate is returned inside [`Error::NoConvergence`].
pub fn search_fiducial(d: &Dim, cfg: &SearchCfg) -> Result<FidCand> {
    search_fiducial_logged(d, cfg).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sic::zauner_search_subspaces;

    #[test]
    fn dim2_search_finds_the_tetrahedron() {
        let d = Dim::new(2);
        let cfg = SearchCfg { tol: 1e-12, ..SearchCfg::new(10, 1) };
        let cand = search_fiducial(&d, &cfg).unwrap();
        assert!(cand.defect < 1e-12);
        // ...and the verifier agrees with the search on the same vector
        let again = sic_defect(&cand.psi, 2).unwrap();
        assert!(again.defect < 1e-12);
    }

    #[test]
    fn dim5_search_in_largest_zauner_eigenspace() {
        let d = Dim::new(5);
        let mut best: Option<crate::sic::FidCand> = None;
        for sub in zauner_search_subspaces(&d) {
            let cfg = SearchCfg::new(8, 7).with_subspace(sub);
            let cand = match search_fiducial(&d, &cfg) {
                Ok(c) => c,
                Err(Error::NoConvergence { best: b }) => *b,
                Err(e) => panic!("unexpected error {e}"),
            };
            if best.as_ref().map(|b| cand.defect < b.defect).unwrap_or(true) {
                best = Some(cand);
            }
        }
        let best = best.unwrap();
        assert!(best.defect < 1e-10, "best defect {}", best.defect);
        // overlap magnitudes are flat at 1/sqrt(N+1)
        let target = 1.0 / 6f64.sqrt();
        for ov in best.overlaps.as_ref().unwrap().iter().skip(1) {
            assert!((ov.sqrt() - target).abs() / target < 1e-6);
        }
    }

    #[test]
    #[should_panic(expected = "orthonormal")]
    fn subspace_must_be_orthonormal() {
        let d = Dim::new(4);
        let v = crate::linalg::CVec::from_slice(
            crate::linalg::Basis::Standard,
            &[
                num_complex::Complex64::new(1.0, 0.0),
                num_complex::Complex64::new(1.0, 0.0),
                num_complex::Complex64::new(0.0, 0.0),
                num_complex::Complex64::new(0.0, 0.0),
            ],
        );
        let cfg = SearchCfg::new(1, 0).with_subspace(vec![v]);
        let _ = search_fiducial(&d, &cfg);
    }

    #[test]
    fn search_is_bit_reproducible() {
        let d = Dim::new(7);
        let cfg = SearchCfg { max_iters: 400, ..SearchCfg::new(3, 42) };
        let (r1, log1) = search_fiducial_logged(&d, &cfg);
        let (r2, log2) = search_fiducial_logged(&d, &cfg);
        let c1 = match r1 {
            Ok(c) => c,
            Err(Error::NoConvergence { best }) => *best,
            Err(e) => panic!("{e}"),
        };
        let c2 = match r2 {
            Ok(c) => c,
            Err(Error::NoConvergence { best }) => *best,
            Err(e) => panic!("{e}"),
        };
        assert_eq!(c1.defect.to_bits(), c2.defect.to_bits());
        for (a, b) in c1.psi.entries().iter().zip(c2.psi.entries()) {
            assert_eq!(a.re.to_bits(), b.re.to_bits());
            assert_eq!(a.im.to_bits(), b.im.to_bits());
        }
        assert_eq!(log1, log2);
    }

    #[test]
    fn analytic_gradient_matches_central_differences() {
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for n in [3u64, 5] {
            let d = Dim::new(n);
            let m = n as usize;
            for _ in 0..10 {
                let params: Vec<f64> = (0..2 * m).map(|_| rng.gen::<f64>() * 2.0 - 1.0).collect();
                let (_, grad) = objective_and_gradient(&d, None, &params);
                let eps = 1e-6;
                for i in 0..2 * m {
                    let mut plus = params.clone();
                    plus[i] += eps;
                    let mut minus = params.clone();
                    minus[i] -= eps;
                    let (fp, _) = objective_and_gradient(&d, None, &plus);
                    let (fm, _) = objective_and_gradient(&d, None, &minus);
                    let fd = (fp - fm) / (2.0 * eps);
                    let denom = fd.abs().max(1.0);
                    assert!(
                        (fd - grad[i]).abs() / denom < 1e-6,
                        "N = {n}, coord {i}: fd {fd} vs grad {}",
                        grad[i]
                    );
                }
            }
        }
    }
}
