//! Integer and modular-matrix substrate: square-free decomposition, the
//! index modulus N̄, modular inverses, SL/ESL(2, Z_N̄) arithmetic, the Zauner
//! matrix, and brute-force normalizer computation.

use std::collections::HashSet;

use rand::Rng;

use crate::{Error, Result};

/// Default cap on the modulus for brute-force group enumeration.
pub const DEFAULT_ENUM_CAP: u64 = 48;

/// A validated dimension record: `dim = block · grid²` with `block`
/// square-free, and `modulus` = dim for odd dim, 2·dim for even dim.
///
/// `block` is the size of the nonzero blocks in the k-nomial representation;
/// `grid` is the side of the block grid (eigenspaces are labeled by pairs in
/// Z_grid × Z_grid).
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Dim {
    dim: u64,
    block: u64,
    grid: u64,
    modulus: u64,
}

impl Dim {
    pub fn new(dim: u64) -> Dim {
        assert!(dim >= 1, "dimension must be positive");
        let (block, grid) = squarefree_decompose(dim);
        Dim { dim, block, grid, modulus: nbar(dim) }
    }

    /// Hilbert-space dimension N.
    pub fn dim(&self) -> u64 {
        self.dim
    }

    /// Square-free part k of the dimension.
    pub fn block_size(&self) -> u64 {
        self.block
    }

    /// The n with N = k·n².
    pub fn grid(&self) -> u64 {
        self.grid
    }

    /// N̄: the modulus governing displacement indices and symplectic matrices.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// n/2 when the block size is odd and the grid side even, else 0; the
    /// correction term entering the eigenspace permutation.
    pub fn half_grid_correction(&self) -> u64 {
        if self.block % 2 == 1 && self.grid.is_multiple_of(2) {
            self.grid / 2
        } else {
            0
        }
    }
}

/// Unique decomposition N = k·n² with k square-free.
pub fn squarefree_decompose(n: u64) -> (u64, u64) {
    assert!(n >= 1);
    let mut rest = n;
    let mut k = 1u64;
    let mut root = 1u64;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0u32;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            root *= p.pow(e / 2);
            if e % 2 == 1 {
                k *= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        k *= rest;
    }
    (k, root)
}

/// N̄ = N for odd N, 2N for even N.
pub fn nbar(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        2 * n
    } else {
        n
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Canonical representative of `x` in [0, m).
pub fn reduce(x: i64, m: u64) -> u64 {
    let m = m as i64;
    (((x % m) + m) % m) as u64
}

/// Multiplicative inverse of `a` mod `m`, in [0, m).
pub fn mod_inverse(a: i64, m: u64) -> Result<u64> {
    let a_red = reduce(a, m);
    if m == 1 {
        return Ok(0);
    }
    // extended Euclid on (a_red, m)
    let (mut old_r, mut r) = (a_red as i64, m as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        let tr = old_r - q * r;
        old_r = r;
        r = tr;
        let ts = old_s - q * s;
        old_s = s;
        s = ts;
    }
    if old_r != 1 {
        return Err(Error::NotCoprime { a: a_red, modulus: m });
    }
    Ok(reduce(old_s, m))
}

/// A 2×2 integer matrix mod N̄ with determinant ±1, the determinant sign
/// stored explicitly (−1 marks the anti-symplectic branch).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sl2 {
    nbar: u64,
    m: [[u64; 2]; 2],
    det_sign: i8,
}

impl Sl2 {
    /// Build from raw entries, reducing mod `nbar` and deducing the sign.
    /// When 1 ≡ −1 (nbar ≤ 2) the sign defaults to +1.
    pub fn new(nbar: u64, entries: [[i64; 2]; 2]) -> Result<Sl2> {
        let m = [
            [reduce(entries[0][0], nbar), reduce(entries[0][1], nbar)],
            [reduce(entries[1][0], nbar), reduce(entries[1][1], nbar)],
        ];
        let det = det_mod(&m, nbar);
        if det == reduce(1, nbar) {
            Ok(Sl2 { nbar, m, det_sign: 1 })
        } else if det == reduce(-1, nbar) {
            Ok(Sl2 { nbar, m, det_sign: -1 })
        } else {
            Err(Error::Parse(format!(
                "determinant {det} is not ±1 mod {nbar}"
            )))
        }
    }

    /// Build with an explicit sign tag; the determinant must match it.
    pub fn with_sign(nbar: u64, entries: [[i64; 2]; 2], det_sign: i8) -> Result<Sl2> {
        assert!(det_sign == 1 || det_sign == -1);
        let mut f = Sl2::new(nbar, entries)?;
        if det_mod(&f.m, nbar) != reduce(det_sign as i64, nbar) {
            return Err(Error::Parse(format!(
                "determinant does not equal {det_sign} mod {nbar}"
            )));
        }
        f.det_sign = det_sign;
        Ok(f)
    }

    pub fn identity(nbar: u64) -> Sl2 {
        Sl2::new(nbar, [[1, 0], [0, 1]]).expect("identity is unimodular")
    }

    pub fn nbar(&self) -> u64 {
        self.nbar
    }

    pub fn alpha(&self) -> u64 {
        self.m[0][0]
    }

    pub fn beta(&self) -> u64 {
        self.m[0][1]
    }

    pub fn gamma(&self) -> u64 {
        self.m[1][0]
    }

    pub fn delta(&self) -> u64 {
        self.m[1][1]
    }

    pub fn entries(&self) -> [[u64; 2]; 2] {
        self.m
    }

    pub fn det_sign(&self) -> i8 {
        self.det_sign
    }

    pub fn is_symplectic(&self) -> bool {
        self.det_sign == 1
    }

    /// Entrywise product mod N̄; determinant signs multiply.
    pub fn mul(&self, rhs: &Sl2) -> Sl2 {
        assert_eq!(self.nbar, rhs.nbar, "modulus mismatch");
        let nb = self.nbar as u128;
        let mut out = [[0u64; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                let v = self.m[r][0] as u128 * rhs.m[0][c] as u128
                    + self.m[r][1] as u128 * rhs.m[1][c] as u128;
                *cell = (v % nb) as u64;
            }
        }
        Sl2 {
            nbar: self.nbar,
            m: out,
            det_sign: self.det_sign * rhs.det_sign,
        }
    }

    /// Inverse mod N̄: adjugate over the determinant (±1).
    pub fn inverse(&self) -> Sl2 {
        let nb = self.nbar;
        let s = self.det_sign as i64;
        let adj = [
            [s * self.m[1][1] as i64, -s * (self.m[0][1] as i64)],
            [-s * (self.m[1][0] as i64), s * self.m[0][0] as i64],
        ];
        let mut inv = Sl2::new(nb, adj).expect("adjugate of unimodular matrix");
        inv.det_sign = self.det_sign;
        inv
    }

    pub fn pow(&self, e: u64) -> Sl2 {
        let mut acc = Sl2::identity(self.nbar);
        let mut base = *self;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Matrix action on an index pair, mod N̄.
    pub fn apply(&self, p1: u64, p2: u64) -> (u64, u64) {
        let nb = self.nbar as u128;
        let q1 = (self.m[0][0] as u128 * p1 as u128 + self.m[0][1] as u128 * p2 as u128) % nb;
        let q2 = (self.m[1][0] as u128 * p1 as u128 + self.m[1][1] as u128 * p2 as u128) % nb;
        (q1 as u64, q2 as u64)
    }

}

fn det_mod(m: &[[u64; 2]; 2], nbar: u64) -> u64 {
    let nb = nbar as i128;
    let d = (m[0][0] as i128 * m[1][1] as i128 - m[0][1] as i128 * m[1][0] as i128) % nb;
    (((d % nb) + nb) % nb) as u64
}

/// The Zauner matrix [[0, −1], [1, −1]] reduced mod N̄; order 3, trace ≡ −1.
pub fn zauner_matrix(nbar: u64) -> Sl2 {
    assert!(nbar >= 2);
    Sl2::new(nbar, [[0, -1], [1, -1]]).expect("zauner matrix is unimodular")
}

/// Least m ≥ 1 with F^m = I mod N̄.
pub fn matrix_order(f: &Sl2) -> u64 {
    let id = Sl2::identity(f.nbar);
    let mut acc = *f;
    let mut m = 1;
    loop {
        if acc.entries() == id.entries() {
            return m;
        }
        acc = acc.mul(f);
        m += 1;
        // |ESL(2, Z_nbar)| bounds every element order
        assert!(
            m <= 2 * f.nbar.pow(3).max(8),
            "order search exceeded the group-order bound"
        );
    }
}

/// Decompose a symplectic F as F1·F2 with both β entries coprime to N̄.
///
/// F2(x) = [[x, −1], [1, 0]] always has unit β; F1 = F·F2(x)⁻¹ has
/// β₁ = α + βx, and since gcd(α, β, N̄) = 1 the scan over x terminates.
pub fn sl2_decompose_coprime_beta(f: &Sl2) -> (Sl2, Sl2) {
    assert!(f.is_symplectic(), "decomposition requires det = +1");
    let nb = f.nbar;
    let alpha = f.alpha();
    let beta = f.beta();
    let mut x = 0u64;
    loop {
        let beta1 = if nb == 1 {
            0
        } else {
            (alpha + (beta as u128 * x as u128 % nb as u128) as u64) % nb
        };
        if nb == 1 || gcd(beta1, nb) == 1 {
            let f2 = Sl2::new(nb, [[x as i64, -1], [1, 0]]).expect("det(F2) = 1");
            let f1 = f.mul(&f2.inverse());
            return (f1, f2);
        }
        x += 1;
        assert!(x <= nb, "no coprime shift found; gcd invariant violated");
    }
}

/// All matrices mod N̄ with det ≡ ±1. When 1 ≡ −1 (nbar ≤ 2) each matrix
/// appears once per valid sign tag.
pub fn enumerate_esl2(nbar: u64, cap: u64) -> Result<Vec<Sl2>> {
    if nbar > cap {
        return Err(Error::CapExceeded { what: "ESL(2) enumeration modulus", cap });
    }
    let one = reduce(1, nbar);
    let minus_one = reduce(-1, nbar);
    let mut out = Vec::new();
    for a in 0..nbar.max(1) {
        for b in 0..nbar.max(1) {
            for g in 0..nbar.max(1) {
                for d in 0..nbar.max(1) {
                    let m = [[a, b], [g, d]];
                    let det = det_mod(&m, nbar);
                    if det == one {
                        out.push(Sl2 { nbar, m, det_sign: 1 });
                    }
                    if det == minus_one {
                        out.push(Sl2 { nbar, m, det_sign: -1 });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// All G in ESL(2, Z_N̄) with G·F_Z = F_Z^r·G for r = 1 or 2.
pub fn normalizer_of_zauner(nbar: u64, cap: u64) -> Result<Vec<Sl2>> {
    let fz = zauner_matrix(nbar);
    let fz2 = fz.mul(&fz);
    let all = enumerate_esl2(nbar, cap)?;
    Ok(all
        .into_iter()
        .filter(|g| {
            let lhs = g.mul(&fz);
            lhs.entries() == fz.mul(g).entries() || lhs.entries() == fz2.mul(g).entries()
        })
        .collect())
}

/// Closure of a generating set under multiplication.
pub fn generated_subgroup(gens: &[Sl2]) -> Vec<Sl2> {
    let mut seen: HashSet<([[u64; 2]; 2], i8)> = HashSet::new();
    let mut out = Vec::new();
    let mut frontier = vec![Sl2::identity(gens[0].nbar)];
    seen.insert((frontier[0].entries(), frontier[0].det_sign()));
    out.push(frontier[0]);
    while let Some(g) = frontier.pop() {
        for h in gens {
            let gh = g.mul(h);
            if seen.insert((gh.entries(), gh.det_sign())) {
                out.push(gh);
                frontier.push(gh);
            }
        }
    }
    out
}

/// Uniform random symplectic matrix mod N̄ by rejection sampling.
pub fn random_symplectic<R: Rng + ?Sized>(nbar: u64, rng: &mut R) -> Sl2 {
    let one = reduce(1, nbar);
    loop {
        let m = [
            [rng.gen_range(0..nbar), rng.gen_range(0..nbar)],
            [rng.gen_range(0..nbar), rng.gen_range(0..nbar)],
        ];
        if det_mod(&m, nbar) == one {
            return Sl2 { nbar, m, det_sign: 1 };
        }
    }
}
