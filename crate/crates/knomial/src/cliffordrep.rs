//! Synthesis of the symplectic unitaries U_F and the anti-symplectic
//! anti-unitaries, the closed-form k×k blocks of the k-nomial
//! representation, and assembly of whole representation matrices from those
//! blocks.
//!
//! For β coprime to N̄ the unitary is
//! U_F = (1/√N) Σ_{u,v} τ^{β⁻¹(δu² − 2uv + αv²)} ∣u⟩⟨v∣
//! with the arbitrary overall phase fixed to 1. Matrices with gcd(β, N̄) ≠ 1
//! go through the two-factor decomposition with unit β entries.

use crate::heisenberg::tau_pow;
use crate::imprimitivity::{eigenspace_map, KIndex};
use crate::linalg::{Basis, CMat, CVec};
use crate::numtheory::{gcd, mod_inverse, sl2_decompose_coprime_beta, Dim, Sl2};
use crate::{Error, Result};

/// Default cap for projective-order searches.
pub const PROJECTIVE_ORDER_CAP: u64 = 96;

/// U_F in the standard basis for symplectic F (det ≡ 1 mod N̄).
pub fn symplectic_unitary(d: &Dim, f: &Sl2) -> CMat {
    assert!(f.is_symplectic(), "symplectic_unitary requires det = +1");
    assert_eq!(f.nbar(), d.modulus(), "matrix modulus must match the dimension");
    let nb = d.modulus();
    if gcd(f.beta(), nb) == 1 || nb == 1 {
        symplectic_unitary_coprime(d, f)
    } else {
        let (f1, f2) = sl2_decompose_coprime_beta(f);
        symplectic_unitary_coprime(d, &f1).mul(&symplectic_unitary_coprime(d, &f2))
    }
}

fn symplectic_unitary_coprime(d: &Dim, f: &Sl2) -> CMat {
    let n = d.dim();
    let nb = d.modulus();
    let beta_inv = mod_inverse(f.beta() as i64, nb).expect("beta must be a unit") as i128;
    let alpha = f.alpha() as i128;
    let delta = f.delta() as i128;
    let amp = 1.0 / (n as f64).sqrt();
    let mut u = CMat::zeros(n as usize, Basis::Standard);
    for row in 0..n as i128 {
        for col in 0..n as i128 {
            let e = beta_inv * (delta * row * row - 2 * row * col + alpha * col * col);
            u[(row as usize, col as usize)] = tau_pow(n, e) * amp;
        }
    }
    u
}

/// An anti-unitary as a unitary matrix together with a flag marking whether
/// complex conjugation is applied first: v ↦ mat·v̄ when `conj` is set.
#[derive(Clone, Debug)]
pub struct AntiU {
    pub mat: CMat,
    pub conj: bool,
}

impl AntiU {
    pub fn unitary(mat: CMat) -> AntiU {
        AntiU { mat, conj: false }
    }

    pub fn apply(&self, v: &CVec) -> CVec {
        if self.conj {
            self.mat.apply(&v.conj())
        } else {
            self.mat.apply(v)
        }
    }

    /// `self ∘ rhs`: the flag is the xor, the matrix part is
    /// mat_self · conj^{self.conj}(mat_rhs).
    pub fn compose(&self, rhs: &AntiU) -> AntiU {
        let rhs_mat = if self.conj { rhs.mat.conj() } else { rhs.mat.clone() };
        AntiU { mat: self.mat.mul(&rhs_mat), conj: self.conj ^ rhs.conj }
    }

    pub fn inverse(&self) -> AntiU {
        if self.conj {
            // (M·conj)⁻¹ = Mᵀ·conj
            AntiU { mat: self.mat.dagger().conj(), conj: true }
        } else {
            AntiU { mat: self.mat.dagger(), conj: false }
        }
    }
}

/// The symplectic factor F̃ of the decomposition F = F̃·J of an
/// anti-symplectic matrix, with J = diag(1, −1).
pub fn antisymplectic_factor(f: &Sl2) -> Result<Sl2> {
    if f.det_sign() != -1 {
        return Err(Error::NotAntisymplectic);
    }
    let j = Sl2::with_sign(f.nbar(), [[1, 0], [0, -1]], -1)
        .expect("J has determinant -1");
    Ok(f.mul(&j))
}

/// The anti-unitary U_F = U_F̃ · U_J for anti-symplectic F, where U_J is
/// plain complex conjugation in the standard basis.
pub fn antisymplectic_antiunitary(d: &Dim, f: &Sl2) -> Result<AntiU> {
    let ft = antisymplectic_factor(f)?;
    Ok(AntiU { mat: symplectic_unitary(d, &ft), conj: true })
}

/// U_J acts on basis labels as (r, s, j) ↦ (−r, s, j).
pub fn antiunitary_on_knomial_index(d: &Dim, idx: KIndex) -> KIndex {
    let n = d.grid();
    KIndex { r: (n - idx.r % n) % n, s: idx.s, j: idx.j }
}

/// The k×k block of the k-nomial representation of U_F over the (r, s)
/// eigenspace, for β coprime to N̄:
/// entry (j′, j) = (1/√k) τ^{β⁻¹(δ(s′+j′n)² − 2(s′+j′n)(s+jn) + α(s+jn)²)}
/// with s′ reduced into [0, n). Rows are indexed by the target label j′,
/// columns by the source label j, matching the realized block of T†U_F T.
pub fn block_matrix_formula(d: &Dim, f: &Sl2, r: u64, s: u64) -> Result<CMat> {
    let nb = d.modulus();
    if gcd(f.beta(), nb) != 1 && nb != 1 {
        return Err(Error::BetaNotCoprime { beta: f.beta(), nbar: nb });
    }
    assert!(r < d.grid() && s < d.grid());
    let beta_inv = mod_inverse(f.beta() as i64, nb)? as i128;
    let alpha = f.alpha() as i128;
    let delta = f.delta() as i128;
    let (_, sp) = eigenspace_map(f, d, r, s);
    let k = d.block_size();
    let n = d.grid() as i128;
    let amp = 1.0 / (k as f64).sqrt();
    let mut m = CMat::zeros(k as usize, Basis::Knomial);
    for jp in 0..k as i128 {
        for j in 0..k as i128 {
            let tgt = sp as i128 + jp * n;
            let src = s as i128 + j * n;
            let e = beta_inv * (delta * tgt * tgt - 2 * tgt * src + alpha * src * src);
            m[(jp as usize, j as usize)] = tau_pow(d.dim(), e) * amp;
        }
    }
    Ok(m)
}

/// Assemble the full N×N k-nomial representation matrix of U_F from the
/// block formula, routing each source eigenspace to its image under the
/// eigenspace permutation. Non-coprime β goes through the decomposition.
pub fn assemble_knomial(d: &Dim, f: &Sl2) -> CMat {
    assert!(f.is_symplectic());
    let nb = d.modulus();
    if gcd(f.beta(), nb) != 1 && nb != 1 {
        let (f1, f2) = sl2_decompose_coprime_beta(f);
        return assemble_knomial(d, &f1).mul(&assemble_knomial(d, &f2));
    }
    let k = d.block_size() as usize;
    let n = d.grid();
    let mut out = CMat::zeros(d.dim() as usize, Basis::Knomial);
    for r in 0..n {
        for s in 0..n {
            let (rp, sp) = eigenspace_map(f, d, r, s);
            let blk = block_matrix_formula(d, f, r, s).expect("beta is a unit here");
            let row0 = (rp * n + sp) as usize * k;
            let col0 = (r * n + s) as usize * k;
            for i in 0..k {
                for j in 0..k {
                    out[(row0 + i, col0 + j)] = blk[(i, j)];
                }
            }
        }
    }
    out
}

/// Least m ≥ 1 with M^m = c·I for a unit scalar c, within `tol`.
pub fn projective_order(m: &CMat, tol: f64, cap: u64) -> Result<u64> {
    let n = m.dim();
    let mut acc = m.clone();
    for e in 1..=cap {
        let c = acc[(0, 0)];
        if (c.norm() - 1.0).abs() < tol {
            let target = CMat::identity(n, m.basis()).scale(c);
            if acc.max_abs_diff(&target) < tol {
                return Ok(e);
            }
        }
        acc = acc.mul(m);
    }
    Err(Error::CapExceeded { what: "projective order search", cap })
}

/// Projective order of an anti-unitary; only even powers can be scalar
/// multiples of the identity operator.
pub fn projective_order_anti(a: &AntiU, tol: f64, cap: u64) -> Result<u64> {
    let n = a.mat.dim();
    let mut acc = a.clone();
    for e in 1..=cap {
        if !acc.conj {
            let c = acc.mat[(0, 0)];
            if (c.norm() - 1.0).abs() < tol {
                let target = CMat::identity(n, a.mat.basis()).scale(c);
                if acc.mat.max_abs_diff(&target) < tol {
                    return Ok(e);
                }
            }
        }
        acc = a.compose(&acc);
    }
    Err(Error::CapExceeded { what: "projective order search", cap })
}

/// ‖U_F·D_p − D_{Fp}·U_F‖_max maximized over all p in Z_N²; zero exactly
/// when the covariance U_F D_p U_F† = D_{Fp} holds. Both products are
/// monomial-times-dense, so the scan is O(N⁴) overall. The conjugated form
/// obeys ‖U D_p U† − D_{Fp}‖_max ≤ √N · (this value).
pub fn covariance_defect(d: &Dim, f: &Sl2, u: &CMat) -> f64 {
    use crate::heisenberg::{omega_pow, PVec};
    let n = d.dim();
    let nn = n as usize;
    let omega: Vec<_> = (0..nn).map(|e| omega_pow(n, e as i64)).collect();
    let mut worst = 0.0f64;
    for p1 in 0..n {
        for p2 in 0..n {
            let p = PVec { p1, p2 };
            let fp = p.mapped(f);
            // D_p[u,v] = φ_v δ_{u, v+p1}, so (U·D_p)[r,v] = U[r, v+p1]·φ_v
            // and (D_{Fp}·U)[r,v] = ψ_{r−q1}·U[r−q1, v]
            let phase_p = tau_pow(n, p1 as i128 * p2 as i128);
            let phase_q = tau_pow(n, fp.p1 as i128 * fp.p2 as i128);
            let shift_p = (p1 % n) as usize;
            let shift_q = (fp.p1 % n) as usize;
            let p2r = (p2 % n) as usize;
            let q2r = (fp.p2 % n) as usize;
            for r in 0..nn {
                let src_row = (r + nn - shift_q) % nn;
                let zq = phase_q * omega[q2r * src_row % nn];
                for v in 0..nn {
                    let lhs = u[(r, (v + shift_p) % nn)] * phase_p * omega[p2r * v % nn];
                    let rhs = zq * u[(src_row, v)];
                    let diff = (lhs - rhs).norm();
                    if diff > worst {
                        worst = diff;
                    }
                }
            }
        }
    }
    worst
}
