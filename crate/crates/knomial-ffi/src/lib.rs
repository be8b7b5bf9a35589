//! C ABI for the knomial toolkit: opaque matrix handles, status codes, and
//! flat double buffers (complex values interleaved re, im; matrices
//! row-major) so other languages can bind without Rust types.
//!
//! Every constructor hands back an owned handle that must be released with
//! [`kn_matrix_free`]. All functions are null-safe and report problems
//! through [`KnStatus`] rather than panicking.

use std::os::raw::c_char;

use knomial::cliffordrep::symplectic_unitary;
use knomial::heisenberg::{build_x, build_z, displacement, PVec};
use knomial::imprimitivity::{change_of_basis, to_knomial_with};
use knomial::linalg::{Basis, CMat, CVec};
use knomial::numtheory::{Dim, Sl2};
use knomial::sic::{
    dim12_fiducial_numeric, dim8_fiducial, dim8_orbit_s2, search_fiducial, sic_defect,
    zauner_search_subspaces, Dim8Selector, FidCand, SearchCfg,
};
use knomial::Error;
use num_complex::Complex64;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum KnStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidArgument = 2,
    BufferTooSmall = 3,
    NotCoprime = 4,
    BetaNotCoprime = 5,
    NotAntisymplectic = 6,
    NotNormalized = 7,
    NotKNomial = 8,
    CapExceeded = 9,
    NoConvergence = 10,
    ParseError = 11,
}

fn status_of(err: &Error) -> KnStatus {
    match err {
        Error::NotCoprime { .. } => KnStatus::NotCoprime,
        Error::BetaNotCoprime { .. } => KnStatus::BetaNotCoprime,
        Error::NotAntisymplectic => KnStatus::NotAntisymplectic,
        Error::NotNormalized { .. } => KnStatus::NotNormalized,
        Error::NotKNomial { .. } => KnStatus::NotKNomial,
        Error::CapExceeded { .. } => KnStatus::CapExceeded,
        Error::NoConvergence { .. } => KnStatus::NoConvergence,
        Error::DimMismatch { .. } => KnStatus::InvalidArgument,
        Error::Parse(_) => KnStatus::ParseError,
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn kn_status_message(status: KnStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        KnStatus::Ok => b"ok\0",
        KnStatus::NullArgument => b"null pointer argument\0",
        KnStatus::InvalidArgument => b"invalid argument\0",
        KnStatus::BufferTooSmall => b"output buffer too small\0",
        KnStatus::NotCoprime => b"value not coprime to the modulus\0",
        KnStatus::BetaNotCoprime => b"matrix beta entry not coprime to the modulus\0",
        KnStatus::NotAntisymplectic => b"matrix is not anti-symplectic\0",
        KnStatus::NotNormalized => b"vector is not normalized\0",
        KnStatus::NotKNomial => b"matrix is not k-nomial\0",
        KnStatus::CapExceeded => b"search cap exceeded\0",
        KnStatus::NoConvergence => b"search did not reach the tolerance\0",
        KnStatus::ParseError => b"parse error\0",
    };
    msg.as_ptr() as *const c_char
}

/// Opaque dense complex matrix handle.
pub struct KnMatrix {
    inner: CMat,
}

fn boxed(mat: CMat, out: *mut *mut KnMatrix) -> KnStatus {
    if out.is_null() {
        return KnStatus::NullArgument;
    }
    unsafe { *out = Box::into_raw(Box::new(KnMatrix { inner: mat })) };
    KnStatus::Ok
}

/// Release a matrix handle.
///
/// # Safety
/// `m` must be null or a pointer previously returned by one of the
/// `kn_matrix_*` constructors, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kn_matrix_free(m: *mut KnMatrix) {
    if !m.is_null() {
        drop(unsafe { Box::from_raw(m) });
    }
}

/// The cyclic shift generator in dimension `dim`.
#[no_mangle]
pub extern "C" fn kn_matrix_x(dim: u64, out: *mut *mut KnMatrix) -> KnStatus {
    if dim < 1 {
        return KnStatus::InvalidArgument;
    }
    boxed(build_x(dim), out)
}

/// The clock generator in dimension `dim`.
#[no_mangle]
pub extern "C" fn kn_matrix_z(dim: u64, out: *mut *mut KnMatrix) -> KnStatus {
    if dim < 1 {
        return KnStatus::InvalidArgument;
    }
    boxed(build_z(dim), out)
}

/// Unitary change of basis from the k-nomial to the standard basis.
#[no_mangle]
pub extern "C" fn kn_matrix_change_of_basis(dim: u64, out: *mut *mut KnMatrix) -> KnStatus {
    if dim < 1 {
        return KnStatus::InvalidArgument;
    }
    boxed(change_of_basis(&Dim::new(dim)), out)
}

/// Displacement operator for the index pair (p1, p2), reduced mod N̄.
#[no_mangle]
pub extern "C" fn kn_matrix_displacement(
    dim: u64,
    p1: i64,
    p2: i64,
    out: *mut *mut KnMatrix,
) -> KnStatus {
    if dim < 1 {
        return KnStatus::InvalidArgument;
    }
    let d = Dim::new(dim);
    boxed(displacement(&d, PVec::reduced(d.modulus(), p1, p2)), out)
}

/// Symplectic unitary for the matrix [[a, b], [c, d]], which must have
/// determinant 1 mod N̄.
#[no_mangle]
pub extern "C" fn kn_matrix_symplectic_unitary(
    dim: u64,
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    out: *mut *mut KnMatrix,
) -> KnStatus {
    if dim < 1 {
        return KnStatus::InvalidArgument;
    }
    let dd = Dim::new(dim);
    let f = match Sl2::new(dd.modulus(), [[a, b], [c, d]]) {
        Ok(f) if f.is_symplectic() => f,
        _ => return KnStatus::InvalidArgument,
    };
    boxed(symplectic_unitary(&dd, &f), out)
}

/// Conjugate a standard-basis matrix into the k-nomial basis (T† M T).
///
/// # Safety
/// `m` must be a live matrix handle.
#[no_mangle]
pub unsafe extern "C" fn kn_matrix_to_knomial(
    m: *const KnMatrix,
    out: *mut *mut KnMatrix,
) -> KnStatus {
    let Some(m) = (unsafe { m.as_ref() }) else {
        return KnStatus::NullArgument;
    };
    let d = Dim::new(m.inner.dim() as u64);
    let t = change_of_basis(&d);
    match to_knomial_with(&t, &m.inner) {
        Ok(k) => boxed(k, out),
        Err(e) => status_of(&e),
    }
}

/// Side length of the matrix behind a handle; 0 for null.
///
/// # Safety
/// `m` must be null or a live matrix handle.
#[no_mangle]
pub unsafe extern "C" fn kn_matrix_dim(m: *const KnMatrix) -> u64 {
    unsafe { m.as_ref() }.map(|m| m.inner.dim() as u64).unwrap_or(0)
}

/// Single entry of the matrix.
///
/// # Safety
/// `m` must be a live matrix handle; `re` and `im` must point to writable
/// doubles.
#[no_mangle]
pub unsafe extern "C" fn kn_matrix_entry(
    m: *const KnMatrix,
    row: u64,
    col: u64,
    re: *mut f64,
    im: *mut f64,
) -> KnStatus {
    let Some(m) = (unsafe { m.as_ref() }) else {
        return KnStatus::NullArgument;
    };
    if re.is_null() || im.is_null() {
        return KnStatus::NullArgument;
    }
    let n = m.inner.dim() as u64;
    if row >= n || col >= n {
        return KnStatus::InvalidArgument;
    }
    let z = m.inner[(row as usize, col as usize)];
    unsafe {
        *re = z.re;
        *im = z.im;
    }
    KnStatus::Ok
}

/// Copy the whole matrix into `out` as row-major interleaved (re, im)
/// doubles; `len` is the capacity of `out` in doubles and must be at least
/// 2·dim².
///
/// # Safety
/// `m` must be a live matrix handle and `out` must point to at least `len`
/// writable doubles.
#[no_mangle]
pub unsafe extern "C" fn kn_matrix_copy_entries(
    m: *const KnMatrix,
    out: *mut f64,
    len: usize,
) -> KnStatus {
    let Some(m) = (unsafe { m.as_ref() }) else {
        return KnStatus::NullArgument;
    };
    if out.is_null() {
        return KnStatus::NullArgument;
    }
    let n = m.inner.dim();
    if len < 2 * n * n {
        return KnStatus::BufferTooSmall;
    }
    let slice = unsafe { std::slice::from_raw_parts_mut(out, 2 * n * n) };
    for r in 0..n {
        for c in 0..n {
            let z = m.inner[(r, c)];
            slice[2 * (r * n + c)] = z.re;
            slice[2 * (r * n + c) + 1] = z.im;
        }
    }
    KnStatus::Ok
}

fn vec_from_raw(psi: *const f64, len: usize, dim: usize) -> Option<CVec> {
    if psi.is_null() || len != 2 * dim {
        return None;
    }
    let slice = unsafe { std::slice::from_raw_parts(psi, len) };
    let data: Vec<Complex64> = (0..dim)
        .map(|i| Complex64::new(slice[2 * i], slice[2 * i + 1]))
        .collect();
    Some(CVec::from_slice(Basis::Standard, &data))
}

fn write_cand(cand: &FidCand, psi_out: *mut f64, psi_len: usize, defect: *mut f64) -> KnStatus {
    let n = cand.psi.dim();
    if psi_out.is_null() || defect.is_null() {
        return KnStatus::NullArgument;
    }
    if psi_len < 2 * n {
        return KnStatus::BufferTooSmall;
    }
    let slice = unsafe { std::slice::from_raw_parts_mut(psi_out, 2 * n) };
    for i in 0..n {
        slice[2 * i] = cand.psi[i].re;
        slice[2 * i + 1] = cand.psi[i].im;
    }
    unsafe { *defect = cand.defect };
    KnStatus::Ok
}

/// SIC defect of a unit vector given as `2·dim` interleaved doubles: the
/// worst deviation of the nontrivial squared overlaps from 1/(dim+1),
/// together with the index pair attaining it.
///
/// # Safety
/// `psi` must point to `len` readable doubles; the out-pointers must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn kn_sic_defect(
    dim: u64,
    psi: *const f64,
    len: usize,
    defect: *mut f64,
    worst_p1: *mut u64,
    worst_p2: *mut u64,
) -> KnStatus {
    if dim < 1 {
        return KnStatus::InvalidArgument;
    }
    let Some(v) = vec_from_raw(psi, len, dim as usize) else {
        return KnStatus::NullArgument;
    };
    if defect.is_null() || worst_p1.is_null() || worst_p2.is_null() {
        return KnStatus::NullArgument;
    }
    match sic_defect(&v, dim) {
        Ok(cand) => {
            unsafe {
                *defect = cand.defect;
                *worst_p1 = cand.worst_p.p1;
                *worst_p2 = cand.worst_p.p2;
            }
            KnStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Family tags for [`kn_dim8_fiducial`].
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum KnDim8Orbit {
    SignFamily = 0,
    QuarterTurnFamily = 1,
    AntiUnitaryImage = 2,
}

/// One of the bundled exact dimension-8 fiducials, written as 16
/// interleaved doubles. For the sign family and its anti-unitary image the
/// selector is (s1, s2, s3) with entries ±1 and `r` is ignored; for the
/// quarter-turn family `r` in 0..4 applies and the signs are ignored.
///
/// # Safety
/// `psi_out` must point to at least `psi_len` writable doubles and `defect`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn kn_dim8_fiducial(
    orbit: KnDim8Orbit,
    s1: i32,
    s2: i32,
    s3: i32,
    r: u32,
    psi_out: *mut f64,
    psi_len: usize,
    defect: *mut f64,
) -> KnStatus {
    let sel = match orbit {
        KnDim8Orbit::SignFamily | KnDim8Orbit::AntiUnitaryImage => {
            let ok = [s1, s2, s3].iter().all(|s| *s == 1 || *s == -1);
            if !ok {
                return KnStatus::InvalidArgument;
            }
            Dim8Selector::S1 { s1: s1 as i8, s2: s2 as i8, s3: s3 as i8 }
        }
        KnDim8Orbit::QuarterTurnFamily => {
            if r >= 4 {
                return KnStatus::InvalidArgument;
            }
            Dim8Selector::S0 { r: r as u8 }
        }
    };
    let result = match orbit {
        KnDim8Orbit::AntiUnitaryImage => dim8_orbit_s2(sel),
        _ => dim8_fiducial(sel),
    };
    match result {
        Ok(cand) => write_cand(&cand, psi_out, psi_len, defect),
        Err(e) => status_of(&e),
    }
}

/// The bundled dimension-12 coefficients at the chosen real cubic root
/// (0..3, ascending), written as 24 interleaved doubles in the adapted
/// basis of the bundled generators, together with their defect.
///
/// # Safety
/// `psi_out` must point to at least `psi_len` writable doubles and `defect`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn kn_dim12_fiducial(
    root_choice: u32,
    psi_out: *mut f64,
    psi_len: usize,
    defect: *mut f64,
) -> KnStatus {
    if root_choice >= 3 {
        return KnStatus::InvalidArgument;
    }
    let cand = dim12_fiducial_numeric(root_choice as usize);
    write_cand(&cand, psi_out, psi_len, defect)
}

/// Seeded fiducial search; `zauner` restricts to the largest Zauner
/// eigenspaces. The best candidate is always written; the status is
/// `NoConvergence` when it missed `tol`.
///
/// # Safety
/// `psi_out` must point to at least `psi_len` writable doubles and `defect`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn kn_search_fiducial(
    dim: u64,
    restarts: u32,
    seed: u64,
    zauner: bool,
    tol: f64,
    psi_out: *mut f64,
    psi_len: usize,
    defect: *mut f64,
) -> KnStatus {
    if dim < 2 || restarts < 1 || tol <= 0.0 || tol.is_nan() {
        return KnStatus::InvalidArgument;
    }
    let d = Dim::new(dim);
    let subspaces: Vec<Option<Vec<CVec>>> = if zauner {
        zauner_search_subspaces(&d).into_iter().map(Some).collect()
    } else {
        vec![None]
    };
    let mut best: Option<FidCand> = None;
    for sub in subspaces {
        let mut cfg = SearchCfg { tol, ..SearchCfg::new(restarts, seed) };
        if let Some(sub) = sub {
            cfg = cfg.with_subspace(sub);
        }
        let cand = match search_fiducial(&d, &cfg) {
            Ok(c) => c,
            Err(Error::NoConvergence { best }) => *best,
            Err(_) => return KnStatus::InvalidArgument,
        };
        let better = best.as_ref().map(|b| cand.defect < b.defect).unwrap_or(true);
        if better {
            best = Some(cand);
        }
    }
    let best = best.expect("at least one subspace");
    let status = write_cand(&best, psi_out, psi_len, defect);
    if status != KnStatus::Ok {
        return status;
    }
    if best.defect < tol {
        KnStatus::Ok
    } else {
        KnStatus::NoConvergence
    }
}
