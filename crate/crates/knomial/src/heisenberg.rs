//! Standard-basis Weyl-Heisenberg group: the shift X and clock Z, the
//! displacement operators D_p = τ^{p₁p₂} X^{p₁} Z^{p₂} with indices mod N̄,
//! the symplectic form, and the product law
//! D_p D_q = τ^{⟨p,q⟩} D_{p+q}.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::linalg::{Basis, CMat, CVec};
use crate::numtheory::{reduce, Dim, Sl2};

/// ω^e with ω = e^{2πi/N}; the exponent is reduced mod N before a single
/// complex exponential is evaluated.
pub fn omega_pow(n: u64, e: i64) -> Complex64 {
    let r = reduce(e, n);
    Complex64::from_polar(1.0, 2.0 * PI * r as f64 / n as f64)
}

/// τ^e with τ = −e^{iπ/N} = e^{iπ(N+1)/N}. τ has order N̄, and the reduced
/// exponent (N+1)·e mod 2N keeps the argument of the final exponential small.
pub fn tau_pow(n: u64, e: i128) -> Complex64 {
    let two_n = 2 * n as i128;
    let m = ((n as i128 + 1) * e).rem_euclid(two_n);
    Complex64::from_polar(1.0, PI * m as f64 / n as f64)
}

/// λ^e with λ = e^{2πi/n} (n the grid side of the dimension).
pub fn lambda_pow(grid: u64, e: i64) -> Complex64 {
    let r = reduce(e, grid);
    Complex64::from_polar(1.0, 2.0 * PI * r as f64 / grid as f64)
}

/// The unit phases attached to a dimension.
#[derive(Copy, Clone, Debug)]
pub struct Phases {
    /// e^{2πi/N}
    pub omega: Complex64,
    /// −e^{iπ/N}
    pub tau: Complex64,
    /// e^{2πi/n}
    pub lambda: Complex64,
}

impl Phases {
    pub fn of(d: &Dim) -> Phases {
        Phases {
            omega: omega_pow(d.dim(), 1),
            tau: tau_pow(d.dim(), 1),
            lambda: lambda_pow(d.grid(), 1),
        }
    }
}

/// An index pair (p₁, p₂) reduced mod N̄.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct PVec {
    pub p1: u64,
    pub p2: u64,
}

impl PVec {
    pub fn reduced(nbar: u64, p1: i64, p2: i64) -> PVec {
        PVec { p1: reduce(p1, nbar), p2: reduce(p2, nbar) }
    }

    pub fn is_zero_mod(&self, m: u64) -> bool {
        self.p1.is_multiple_of(m) && self.p2.is_multiple_of(m)
    }

    /// −p mod N̄.
    pub fn neg(&self, nbar: u64) -> PVec {
        PVec::reduced(nbar, -(self.p1 as i64), -(self.p2 as i64))
    }

    pub fn add(&self, rhs: &PVec, nbar: u64) -> PVec {
        PVec { p1: (self.p1 + rhs.p1) % nbar, p2: (self.p2 + rhs.p2) % nbar }
    }

    /// Image under a matrix in ESL(2, Z_N̄).
    pub fn mapped(&self, f: &Sl2) -> PVec {
        let (p1, p2) = f.apply(self.p1, self.p2);
        PVec { p1, p2 }
    }
}

/// Cyclic shift: X∣u⟩ = ∣u+1⟩ with ket labels mod N.
pub fn build_x(n: u64) -> CMat {
    let nn = n as usize;
    let mut m = CMat::zeros(nn, Basis::Standard);
    for u in 0..nn {
        m[((u + 1) % nn, u)] = Complex64::new(1.0, 0.0);
    }
    m
}

/// Clock: Z∣u⟩ = ω^u∣u⟩.
pub fn build_z(n: u64) -> CMat {
    let nn = n as usize;
    let mut m = CMat::zeros(nn, Basis::Standard);
    for u in 0..nn {
        m[(u, u)] = omega_pow(n, u as i64);
    }
    m
}

/// Dense displacement operator D_p = τ^{p₁p₂} X^{p₁} Z^{p₂}.
pub fn displacement(d: &Dim, p: PVec) -> CMat {
    let n = d.dim();
    let nn = n as usize;
    let phase = tau_pow(n, p.p1 as i128 * p.p2 as i128);
    let shift = (p.p1 % n) as usize;
    let mut m = CMat::zeros(nn, Basis::Standard);
    for v in 0..nn {
        let row = (v + shift) % nn;
        m[(row, v)] = phase * omega_pow(n, (p.p2 % n) as i64 * v as i64);
    }
    m
}

/// D_p applied to a vector in O(N): the displacement is monomial so no dense
/// product is needed.
pub fn displacement_apply(d: &Dim, p: PVec, v: &CVec) -> CVec {
    let n = d.dim();
    let nn = n as usize;
    debug_assert_eq!(v.dim(), nn);
    let phase = tau_pow(n, p.p1 as i128 * p.p2 as i128);
    let shift = (p.p1 % n) as usize;
    let p2 = (p.p2 % n) as i64;
    let mut out = CVec::zeros(nn, v.basis());
    for src in 0..nn {
        let dst = (src + shift) % nn;
        out[dst] = phase * omega_pow(n, p2 * src as i64) * v[src];
    }
    out
}

/// D_p† applied to a vector; D_p† = D_{−p} since ⟨p, −p⟩ = 0.
pub fn displacement_adjoint_apply(d: &Dim, p: PVec, v: &CVec) -> CVec {
    displacement_apply(d, p.neg(d.modulus()), v)
}

/// ⟨p, q⟩ = p₂q₁ − p₁q₂ reduced mod N̄.
pub fn symplectic_form(p: &PVec, q: &PVec, nbar: u64) -> u64 {
    let v = p.p2 as i128 * q.p1 as i128 - p.p1 as i128 * q.p2 as i128;
    (v.rem_euclid(nbar as i128)) as u64
}
