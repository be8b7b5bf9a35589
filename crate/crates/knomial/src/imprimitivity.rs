//! The joint eigenbasis ∣r,s,j⟩ of X^{kn} and Z^{kn}, the change-of-basis
//! matrix into it, verification of k-nomial block structure, and the
//! eigenspace permutation induced by symplectic matrices.
//!
//! Basis vectors are ordered lexicographically in (r, s, j) with j fastest,
//! so the linear index of ∣r,s,j⟩ is (r·n + s)·k + j.

use crate::heisenberg::lambda_pow;
use crate::linalg::{Basis, CMat, CVec};
use crate::numtheory::{Dim, Sl2};
use crate::{Error, Result};

/// Default tolerance for the block-structure verifier, relative to the
/// largest entry of the matrix under test.
pub const BLOCK_TOL: f64 = 1e-10;

/// Label (r, s, j) of a k-nomial basis vector: (r, s) names the joint
/// eigenspace, j the vector within it.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct KIndex {
    pub r: u64,
    pub s: u64,
    pub j: u64,
}

impl KIndex {
    pub fn new(d: &Dim, r: u64, s: u64, j: u64) -> KIndex {
        assert!(r < d.grid() && s < d.grid() && j < d.block_size());
        KIndex { r, s, j }
    }

    /// Lexicographic linear index (r·n + s)·k + j.
    pub fn lex(&self, d: &Dim) -> usize {
        ((self.r * d.grid() + self.s) * d.block_size() + self.j) as usize
    }

    pub fn from_lex(d: &Dim, idx: usize) -> KIndex {
        let k = d.block_size() as usize;
        let n = d.grid() as usize;
        let j = idx % k;
        let rs = idx / k;
        KIndex { r: (rs / n) as u64, s: (rs % n) as u64, j: j as u64 }
    }
}

/// ∣r,s,j⟩ = (1/√n) Σ_t λ^{−rt} ∣(s + jn) + tkn⟩ in standard coordinates.
pub fn knomial_vector(d: &Dim, idx: KIndex) -> CVec {
    let n = d.dim();
    let grid = d.grid();
    let kn = d.block_size() * grid;
    let mut v = CVec::zeros(n as usize, Basis::Standard);
    let amp = 1.0 / (grid as f64).sqrt();
    for t in 0..grid {
        let row = ((idx.s + idx.j * grid + t * kn) % n) as usize;
        let phase = lambda_pow(grid, -((idx.r * t) as i64));
        v[row] += phase * amp;
    }
    v
}

/// Unitary whose column at the lexicographic index of (r,s,j) is the
/// standard-basis expansion of ∣r,s,j⟩.
pub fn change_of_basis(d: &Dim) -> CMat {
    let n = d.dim() as usize;
    let mut t = CMat::zeros(n, Basis::Standard);
    for idx in 0..n {
        let col = knomial_vector(d, KIndex::from_lex(d, idx));
        for row in 0..n {
            t[(row, idx)] = col[row];
        }
    }
    t
}

/// T†MT with the basis tag flipped.
pub fn to_knomial(d: &Dim, m: &CMat) -> Result<CMat> {
    to_knomial_with(&change_of_basis(d), m)
}

/// Same as [`to_knomial`] with a precomputed change-of-basis matrix.
pub fn to_knomial_with(t: &CMat, m: &CMat) -> Result<CMat> {
    if m.dim() != t.dim() {
        return Err(Error::DimMismatch { expected: t.dim(), got: m.dim() });
    }
    Ok(t.dagger().mul(m).mul(t).with_basis(Basis::Knomial))
}

/// TMT†: inverse of [`to_knomial`].
pub fn from_knomial_with(t: &CMat, m: &CMat) -> Result<CMat> {
    if m.dim() != t.dim() {
        return Err(Error::DimMismatch { expected: t.dim(), got: m.dim() });
    }
    Ok(t.mul(m).mul(&t.dagger()).with_basis(Basis::Standard))
}

/// Map a coordinate vector in the k-nomial basis to standard coordinates.
pub fn knomial_vec_to_standard(d: &Dim, v: &CVec) -> CVec {
    change_of_basis(d).apply(v).with_basis(Basis::Standard)
}

/// The verified block structure of a k-nomial matrix: a bijection on the
/// (r, s) grid plus the realized k×k block over each source eigenspace.
#[derive(Clone, Debug)]
pub struct BlockMap {
    grid: u64,
    /// `perm[source lex (r·n + s)]` = target (r′, s′)
    perm: Vec<(u64, u64)>,
    /// `blocks[source lex]` = the k×k block sitting at (target, source)
    blocks: Vec<CMat>,
}

impl BlockMap {
    pub fn grid(&self) -> u64 {
        self.grid
    }

    pub fn target(&self, r: u64, s: u64) -> (u64, u64) {
        self.perm[(r * self.grid + s) as usize]
    }

    pub fn block(&self, r: u64, s: u64) -> &CMat {
        &self.blocks[(r * self.grid + s) as usize]
    }

    pub fn perm(&self) -> &[(u64, u64)] {
        &self.perm
    }
}

/// Partition an N×N matrix into an n²×n² grid of k×k blocks and verify that
/// exactly one block per block-row and block-column carries weight; `tol` is
/// relative to the matrix's largest entry.
pub fn block_structure(m: &CMat, d: &Dim, tol: f64) -> Result<BlockMap> {
    assert_eq!(m.dim() as u64, d.dim(), "matrix size must match the dimension");
    let k = d.block_size() as usize;
    let nblocks = (d.grid() * d.grid()) as usize;
    let cut = tol * m.max_abs();

    let block_max = |br: usize, bc: usize| -> f64 {
        let mut mx = 0.0f64;
        for i in 0..k {
            for j in 0..k {
                mx = mx.max(m[(br * k + i, bc * k + j)].norm());
            }
        }
        mx
    };

    let mut perm = Vec::with_capacity(nblocks);
    let mut blocks = Vec::with_capacity(nblocks);
    let mut row_used = vec![false; nblocks];
    for bc in 0..nblocks {
        let mut hit = None;
        for br in 0..nblocks {
            if block_max(br, bc) > cut {
                if hit.is_some() {
                    return Err(Error::NotKNomial { block_row: br, block_col: bc });
                }
                hit = Some(br);
            }
        }
        let br = hit.ok_or(Error::NotKNomial { block_row: 0, block_col: bc })?;
        if row_used[br] {
            return Err(Error::NotKNomial { block_row: br, block_col: bc });
        }
        row_used[br] = true;
        perm.push(((br / d.grid() as usize) as u64, (br % d.grid() as usize) as u64));
        let mut blk = CMat::zeros(k, m.basis());
        for i in 0..k {
            for j in 0..k {
                blk[(i, j)] = m[(br * k + i, bc * k + j)];
            }
        }
        blocks.push(blk);
    }
    Ok(BlockMap { grid: d.grid(), perm, blocks })
}

/// Where U_F sends the (r, s) eigenspace:
/// r′ = δr − γs + mγδ and s′ = −βr + αs + mαβ, both reduced mod n, with
/// m = n/2 when the block size is odd and the grid side even, else 0.
pub fn eigenspace_map(f: &Sl2, d: &Dim, r: u64, s: u64) -> (u64, u64) {
    let n = d.grid() as i128;
    let m = d.half_grid_correction() as i128;
    let (a, b, g, dd) = (
        f.alpha() as i128,
        f.beta() as i128,
        f.gamma() as i128,
        f.delta() as i128,
    );
    let (r, s) = (r as i128, s as i128);
    let rp = (dd * r - g * s + m * g * dd).rem_euclid(n);
    let sp = (-b * r + a * s + m * a * b).rem_euclid(n);
    (rp as u64, sp as u64)
}
