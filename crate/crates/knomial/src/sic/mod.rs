//! SIC-POVM machinery: fiducial diagnostics, the Zauner unitary and its
//! eigenspaces, exact dimension-8 fiducial data, a numeric dimension-12
//! fiducial, and seeded numerical fiducial search.
//!
//! A unit vector ψ is a fiducial when ∣⟨ψ∣D_p ψ⟩∣² = 1/(N+1) for every
//! p ≠ 0 mod N; the defect tracked here is the worst deviation from that
//! value over p ∈ Z_N² \ {0}.

mod dim8;
mod dim12;
#[cfg(feature = "dim28-data")]
mod dim28;
mod search;

pub use dim8::{dim8_all_selectors, dim8_fiducial, dim8_orbit_s2, Dim8Selector};
pub use dim12::{dim12_eval_all, dim12_fiducial_numeric, dim12_generators, dim12_root, Dim12Eval};
#[cfg(feature = "dim28-data")]
pub use dim28::{dim28_base_change, dim28_fiducial, DIM28_COEFFS};
pub use search::{objective_and_gradient, search_fiducial, search_fiducial_logged, SearchCfg, SearchRecord};

use num_complex::Complex64;

use crate::cliffordrep::symplectic_unitary;
use crate::heisenberg::{displacement_apply, PVec};
use crate::linalg::{Basis, CMat, CVec};
use crate::numtheory::{zauner_matrix, Dim};
use crate::{Error, Result};

/// A candidate fiducial vector with its SIC diagnostics.
#[derive(Clone, Debug)]
pub struct FidCand {
    /// Unit vector in the standard basis.
    pub psi: CVec,
    /// max over p ≠ 0 mod N of ∣ ∣⟨ψ∣D_pψ⟩∣² − 1/(N+1) ∣.
    pub defect: f64,
    /// Index pair attaining the defect.
    pub worst_p: PVec,
    /// Squared overlaps ∣⟨ψ∣D_pψ⟩∣², indexed by p₁·N + p₂, including p = 0.
    pub overlaps: Option<Vec<f64>>,
}

/// Evaluate the fiducial condition for a unit vector.
pub fn sic_defect(psi: &CVec, n: u64) -> Result<FidCand> {
    let norm = psi.norm();
    if (norm - 1.0).abs() >= 1e-12 {
        return Err(Error::NotNormalized { norm });
    }
    let d = Dim::new(n);
    let target = 1.0 / (n as f64 + 1.0);
    let mut overlaps = Vec::with_capacity((n * n) as usize);
    let mut defect = 0.0f64;
    let mut worst = PVec { p1: 0, p2: 0 };
    for p1 in 0..n {
        for p2 in 0..n {
            let p = PVec { p1, p2 };
            let ov = psi.inner(&displacement_apply(&d, p, psi)).norm_sqr();
            overlaps.push(ov);
            if p1 == 0 && p2 == 0 {
                continue;
            }
            let dev = (ov - target).abs();
            if dev > defect {
                defect = dev;
                worst = p;
            }
        }
    }
    Ok(FidCand { psi: psi.clone(), defect, worst_p: worst, overlaps: Some(overlaps) })
}

/// Same deviation measure against an arbitrary clock/shift pair instead of
/// the standard-basis generators; used for representations given directly as
/// matrices.
pub fn weyl_defect(psi: &CVec, x: &CMat, z: &CMat) -> FidCand {
    let n = x.dim();
    let target = 1.0 / (n as f64 + 1.0);
    let psi = psi.normalized();
    let mut xp = Vec::with_capacity(n);
    let mut acc = CMat::identity(n, x.basis());
    for _ in 0..n {
        xp.push(acc.clone());
        acc = acc.mul(x);
    }
    let mut defect = 0.0f64;
    let mut worst = PVec { p1: 0, p2: 0 };
    let mut overlaps = Vec::with_capacity(n * n);
    for (p1, xpow) in xp.iter().enumerate() {
        let mut v = psi.clone();
        // v = Z^{p2} ψ incrementally, then shift by X^{p1}
        for p2 in 0..n {
            if p2 > 0 {
                v = z.apply(&v);
            }
            let ov = psi.inner(&xpow.apply(&v)).norm_sqr();
            overlaps.push(ov);
            if p1 == 0 && p2 == 0 {
                continue;
            }
            let dev = (ov - target).abs();
            if dev > defect {
                defect = dev;
                worst = PVec { p1: p1 as u64, p2: p2 as u64 };
            }
        }
    }
    FidCand { psi, defect, worst_p: worst, overlaps: Some(overlaps) }
}

/// ‖(1/N) Σ_p D_p∣ψ⟩⟨ψ∣D_p† − I‖_max over p ∈ Z_N². The group average of
/// any rank-one projector resolves the identity, so this checks plumbing
/// rather than SIC-ness.
pub fn povm_resolution_check(psi: &CVec, n: u64) -> f64 {
    let d = Dim::new(n);
    let nn = n as usize;
    let mut sum = CMat::zeros(nn, Basis::Standard);
    for p1 in 0..n {
        for p2 in 0..n {
            let w = displacement_apply(&d, PVec { p1, p2 }, psi);
            for r in 0..nn {
                for c in 0..nn {
                    sum[(r, c)] += w[r] * w[c].conj();
                }
            }
        }
    }
    sum.scale(Complex64::new(1.0 / n as f64, 0.0))
        .max_abs_diff(&CMat::identity(nn, Basis::Standard))
}

/// The Zauner unitary U_{F_Z} with the crate's phase convention; always of
/// projective order 3.
pub fn zauner_unitary(d: &Dim) -> CMat {
    symplectic_unitary(d, &zauner_matrix(d.modulus()))
}

/// One eigenspace of the Zauner unitary.
#[derive(Clone, Debug)]
pub struct ZaunerEigenspace {
    pub eigenvalue: Complex64,
    pub basis: Vec<CVec>,
}

impl ZaunerEigenspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// The three eigenspaces of the Zauner unitary, obtained from the spectral
/// projectors of the order-3 rescaled operator rather than a general
/// eigensolver. U³ = c·I for a unit scalar c, so V = U/c^{1/3} satisfies
/// V³ = I and P_m = (1/3) Σ_l ξ^{−ml} V^l projects onto the eigenspace with
/// eigenvalue c^{1/3}·ξ^m, ξ = e^{2πi/3}.
///
/// Returned sorted by descending dimension, ties broken by ascending
/// eigenvalue phase in [0, 2π).
pub fn zauner_eigenspaces(d: &Dim) -> Vec<ZaunerEigenspace> {
    assert!(d.dim() <= 64, "dense eigenspace extraction is for N ≤ 64");
    let u = zauner_unitary(d);
    let n = d.dim() as usize;
    let u2 = u.mul(&u);
    let u3 = u2.mul(&u);
    let c = u3[(0, 0)];
    debug_assert!(
        u3.max_abs_diff(&CMat::identity(n, Basis::Standard).scale(c)) < 1e-9,
        "zauner unitary cubes to a scalar"
    );
    let croot = Complex64::from_polar(c.norm().powf(1.0 / 3.0), c.arg() / 3.0);
    let xi = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    let mut spaces = Vec::new();
    for m in 0..3u32 {
        let w1 = (croot * xi.powu(m)).conj();
        let w2 = (croot * xi.powu(m)).conj().powu(2);
        let mut proj = CMat::identity(n, Basis::Standard);
        for r in 0..n {
            for cc in 0..n {
                proj[(r, cc)] = (proj[(r, cc)] + w1 * u[(r, cc)] + w2 * u2[(r, cc)])
                    / Complex64::new(3.0, 0.0);
            }
        }
        let dim = proj.trace().re.round() as usize;
        // modified Gram-Schmidt over the projector columns
        let mut basis: Vec<CVec> = Vec::new();
        for col in 0..n {
            let mut v = proj.column(col);
            for b in &basis {
                let ov = b.inner(&v);
                v = v.sub(&b.scale(ov));
            }
            if v.norm() > 1e-6 {
                basis.push(v.normalized());
            }
        }
        assert_eq!(basis.len(), dim, "projector rank disagrees with its trace");
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                debug_assert!((a.inner(b).norm() - want).abs() < 1e-11);
            }
        }
        spaces.push(ZaunerEigenspace { eigenvalue: croot * xi.powu(m), basis });
    }
    spaces.sort_by(|a, b| {
        b.dim().cmp(&a.dim()).then(
            phase_in_tau(a.eigenvalue)
                .partial_cmp(&phase_in_tau(b.eigenvalue))
                .unwrap(),
        )
    });
    spaces
}

fn phase_in_tau(z: Complex64) -> f64 {
    let a = z.arg();
    if a < 0.0 {
        a + 2.0 * std::f64::consts::PI
    } else {
        a
    }
}

/// Orthonormal bases of all Zauner eigenspaces of maximal dimension, in the
/// deterministic order of [`zauner_eigenspaces`]; the natural places to
/// restrict a fiducial search to.
pub fn zauner_search_subspaces(d: &Dim) -> Vec<Vec<CVec>> {
    let spaces = zauner_eigenspaces(d);
    let top = spaces[0].dim();
    spaces
        .into_iter()
        .filter(|s| s.dim() == top)
        .map(|s| s.basis)
        .collect()
}
