//! Dense complex matrices and vectors tagged with the basis they are
//! expressed in. Sizes here are small (N ≤ 64 in practice) so everything is
//! row-major `Vec<Complex64>` with straightforward O(N³) products.

use num_complex::Complex64;

/// Which basis the entries of a [`CMat`]/[`CVec`] refer to.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Basis {
    Standard,
    Knomial,
}

impl Basis {
    pub fn as_str(self) -> &'static str {
        match self {
            Basis::Standard => "standard",
            Basis::Knomial => "knomial",
        }
    }

    pub fn from_str_opt(s: &str) -> Option<Self> {
        match s {
            "standard" => Some(Basis::Standard),
            "knomial" => Some(Basis::Knomial),
            _ => None,
        }
    }
}

/// Dense complex square matrix with a basis tag.
#[derive(Clone, Debug, PartialEq)]
pub struct CMat {
    dim: usize,
    basis: Basis,
    data: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(dim: usize, basis: Basis) -> Self {
        CMat { dim, basis, data: vec![Complex64::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize, basis: Basis) -> Self {
        let mut m = Self::zeros(dim, basis);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(dim: usize, basis: Basis, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim, basis);
        for r in 0..dim {
            for c in 0..dim {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn with_basis(mut self, basis: Basis) -> Self {
        self.basis = basis;
        self
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    /// Matrix product `self · rhs`. Panics on dimension mismatch.
    pub fn mul(&self, rhs: &CMat) -> CMat {
        assert_eq!(self.dim, rhs.dim, "matrix product dimension mismatch");
        let n = self.dim;
        let mut out = CMat::zeros(n, self.basis);
        for r in 0..n {
            for k in 0..n {
                let a = self[(r, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..n {
                    out[(r, c)] += a * rhs[(k, c)];
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> CMat {
        let n = self.dim;
        CMat::from_fn(n, self.basis, |r, c| self[(c, r)].conj())
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> CMat {
        let n = self.dim;
        CMat::from_fn(n, self.basis, |r, c| self[(r, c)].conj())
    }

    pub fn scale(&self, z: Complex64) -> CMat {
        let mut out = self.clone();
        for e in &mut out.data {
            *e *= z;
        }
        out
    }

    /// Matrix-vector product. Panics on dimension mismatch.
    pub fn apply(&self, v: &CVec) -> CVec {
        assert_eq!(self.dim, v.dim(), "matrix-vector dimension mismatch");
        let n = self.dim;
        let mut out = CVec::zeros(n, v.basis());
        for r in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for c in 0..n {
                acc += self[(r, c)] * v[c];
            }
            out[r] = acc;
        }
        out
    }

    /// Largest entry modulus of `self − rhs`.
    pub fn max_abs_diff(&self, rhs: &CMat) -> f64 {
        assert_eq!(self.dim, rhs.dim);
        self.data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|a| a.norm()).fold(0.0, f64::max)
    }

    /// ‖M†M − I‖_max
    pub fn unitarity_defect(&self) -> f64 {
        self.dagger()
            .mul(self)
            .max_abs_diff(&CMat::identity(self.dim, self.basis))
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() < tol
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// Column `c` as a vector.
    pub fn column(&self, c: usize) -> CVec {
        let mut v = CVec::zeros(self.dim, self.basis);
        for r in 0..self.dim {
            v[r] = self[(r, c)];
        }
        v
    }

    pub fn pow(&self, mut e: u64) -> CMat {
        let mut base = self.clone();
        let mut acc = CMat::identity(self.dim, self.basis);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.dim + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.dim + c]
    }
}

/// Dense complex vector with a basis tag.
#[derive(Clone, Debug, PartialEq)]
pub struct CVec {
    dim: usize,
    basis: Basis,
    data: Vec<Complex64>,
}

impl CVec {
    pub fn zeros(dim: usize, basis: Basis) -> Self {
        CVec { dim, basis, data: vec![Complex64::new(0.0, 0.0); dim] }
    }

    pub fn from_slice(basis: Basis, data: &[Complex64]) -> Self {
        CVec { dim: data.len(), basis, data: data.to_vec() }
    }

    pub fn basis_vector(dim: usize, basis: Basis, i: usize) -> Self {
        let mut v = Self::zeros(dim, basis);
        v[i] = Complex64::new(1.0, 0.0);
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn with_basis(mut self, basis: Basis) -> Self {
        self.basis = basis;
        self
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalized(&self) -> CVec {
        let n = self.norm();
        let mut out = self.clone();
        for e in &mut out.data {
            *e /= n;
        }
        out
    }

    /// Hermitian inner product ⟨self∣rhs⟩ (conjugate-linear in `self`).
    pub fn inner(&self, rhs: &CVec) -> Complex64 {
        assert_eq!(self.dim, rhs.dim);
        self.data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn conj(&self) -> CVec {
        let mut out = self.clone();
        for e in &mut out.data {
            *e = e.conj();
        }
        out
    }

    pub fn scale(&self, z: Complex64) -> CVec {
        let mut out = self.clone();
        for e in &mut out.data {
            *e *= z;
        }
        out
    }

    pub fn add(&self, rhs: &CVec) -> CVec {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (e, r) in out.data.iter_mut().zip(&rhs.data) {
            *e += r;
        }
        out
    }

    pub fn sub(&self, rhs: &CVec) -> CVec {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (e, r) in out.data.iter_mut().zip(&rhs.data) {
            *e -= r;
        }
        out
    }

    pub fn max_abs_diff(&self, rhs: &CVec) -> f64 {
        assert_eq!(self.dim, rhs.dim);
        self.data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl std::ops::Index<usize> for CVec {
    type Output = Complex64;
    fn index(&self, i: usize) -> &Complex64 {
        &self.data[i]
    }
}

impl std::ops::IndexMut<usize> for CVec {
    fn index_mut(&mut self, i: usize) -> &mut Complex64 {
        &mut self.data[i]
    }
}
