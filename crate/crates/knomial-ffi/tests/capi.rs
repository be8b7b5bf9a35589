//! Exercises the C ABI through the exported symbols.

use knomial_ffi::*;

fn fetch(dim: usize, build: impl FnOnce(*mut *mut KnMatrix) -> KnStatus) -> Vec<f64> {
    let mut handle: *mut KnMatrix = std::ptr::null_mut();
    assert_eq!(build(&mut handle), KnStatus::Ok);
    assert!(!handle.is_null());
    unsafe {
        assert_eq!(kn_matrix_dim(handle), dim as u64);
        let mut buf = vec![0.0f64; 2 * dim * dim];
        assert_eq!(kn_matrix_copy_entries(handle, buf.as_mut_ptr(), buf.len()), KnStatus::Ok);
        kn_matrix_free(handle);
        buf
    }
}

#[test]
fn shift_matrix_through_the_abi() {
    let buf = fetch(3, |out| kn_matrix_x(3, out));
    // entry (row 1, col 0) == 1
    let (row, col) = (1usize, 0usize);
    let idx = 2 * (row * 3 + col);
    assert_eq!(buf[idx], 1.0);
    assert_eq!(buf[idx + 1], 0.0);
    // entry (0,0) == 0
    assert_eq!(buf[0], 0.0);
}

#[test]
fn entry_accessor_and_bounds() {
    let mut handle: *mut KnMatrix = std::ptr::null_mut();
    assert_eq!(kn_matrix_z(4, &mut handle), KnStatus::Ok);
    unsafe {
        let (mut re, mut im) = (0.0, 0.0);
        assert_eq!(kn_matrix_entry(handle, 1, 1, &mut re, &mut im), KnStatus::Ok);
        assert!((re - 0.0).abs() < 1e-15 && (im - 1.0).abs() < 1e-15);
        assert_eq!(
            kn_matrix_entry(handle, 4, 0, &mut re, &mut im),
            KnStatus::InvalidArgument
        );
        let mut tiny = [0.0f64; 3];
        assert_eq!(
            kn_matrix_copy_entries(handle, tiny.as_mut_ptr(), tiny.len()),
            KnStatus::BufferTooSmall
        );
        kn_matrix_free(handle);
    }
}

#[test]
fn null_handling() {
    unsafe {
        assert_eq!(kn_matrix_dim(std::ptr::null()), 0);
        let mut re = 0.0;
        assert_eq!(
            kn_matrix_entry(std::ptr::null(), 0, 0, &mut re, &mut re),
            KnStatus::NullArgument
        );
        kn_matrix_free(std::ptr::null_mut());
        assert_eq!(kn_matrix_x(0, std::ptr::null_mut()), KnStatus::InvalidArgument);
        let mut handle: *mut KnMatrix = std::ptr::null_mut();
        assert_eq!(kn_matrix_symplectic_unitary(4, 1, 0, 0, 2, &mut handle), KnStatus::InvalidArgument);
    }
}

#[test]
fn status_messages_are_c_strings() {
    for s in [KnStatus::Ok, KnStatus::NoConvergence, KnStatus::BufferTooSmall] {
        let ptr = kn_status_message(s);
        assert!(!ptr.is_null());
        let msg = unsafe { std::ffi::CStr::from_ptr(ptr) };
        assert!(!msg.to_str().unwrap().is_empty());
    }
}

#[test]
fn dim8_fiducial_defect_through_the_abi() {
    let mut psi = [0.0f64; 16];
    let mut defect = 1.0;
    let status = unsafe {
        kn_dim8_fiducial(
            KnDim8Orbit::SignFamily,
            1,
            -1,
            1,
            0,
            psi.as_mut_ptr(),
            psi.len(),
            &mut defect,
        )
    };
    assert_eq!(status, KnStatus::Ok);
    assert!(defect < 1e-9);
    // re-verify the emitted vector through kn_sic_defect
    let (mut d2, mut p1, mut p2) = (1.0, 0u64, 0u64);
    let status =
        unsafe { kn_sic_defect(8, psi.as_ptr(), psi.len(), &mut d2, &mut p1, &mut p2) };
    assert_eq!(status, KnStatus::Ok);
    assert!(d2 < 1e-9);

    // the anti-unitary image family verifies too
    let status = unsafe {
        kn_dim8_fiducial(
            KnDim8Orbit::AntiUnitaryImage,
            -1,
            1,
            1,
            0,
            psi.as_mut_ptr(),
            psi.len(),
            &mut defect,
        )
    };
    assert_eq!(status, KnStatus::Ok);
    assert!(defect < 1e-9);

    // bad selectors are rejected
    let status = unsafe {
        kn_dim8_fiducial(
            KnDim8Orbit::QuarterTurnFamily,
            1,
            1,
            1,
            9,
            psi.as_mut_ptr(),
            psi.len(),
            &mut defect,
        )
    };
    assert_eq!(status, KnStatus::InvalidArgument);
}

#[test]
fn dim12_fiducial_through_the_abi() {
    let mut psi = [0.0f64; 24];
    let mut defect = 1.0;
    let status = unsafe { kn_dim12_fiducial(1, psi.as_mut_ptr(), psi.len(), &mut defect) };
    assert_eq!(status, KnStatus::Ok);
    assert!(defect < 1e-8);
    let status = unsafe { kn_dim12_fiducial(3, psi.as_mut_ptr(), psi.len(), &mut defect) };
    assert_eq!(status, KnStatus::InvalidArgument);
}

#[test]
fn search_through_the_abi_is_deterministic() {
    let mut psi_a = [0.0f64; 4];
    let mut psi_b = [0.0f64; 4];
    let (mut da, mut db) = (1.0, 1.0);
    let sa = unsafe {
        kn_search_fiducial(2, 5, 11, false, 1e-10, psi_a.as_mut_ptr(), psi_a.len(), &mut da)
    };
    let sb = unsafe {
        kn_search_fiducial(2, 5, 11, false, 1e-10, psi_b.as_mut_ptr(), psi_b.len(), &mut db)
    };
    assert_eq!(sa, KnStatus::Ok);
    assert_eq!(sb, KnStatus::Ok);
    assert!(da < 1e-10);
    assert_eq!(da.to_bits(), db.to_bits());
    for (a, b) in psi_a.iter().zip(&psi_b) {
        assert_eq!(a.to_bits(), b.to_bits());
    }
}

#[test]
fn to_knomial_through_the_abi_is_monomial_for_the_shift() {
    let mut x: *mut KnMatrix = std::ptr::null_mut();
    assert_eq!(kn_matrix_x(8, &mut x), KnStatus::Ok);
    let mut xk: *mut KnMatrix = std::ptr::null_mut();
    unsafe {
        assert_eq!(kn_matrix_to_knomial(x, &mut xk), KnStatus::Ok);
        let mut buf = vec![0.0f64; 2 * 64];
        assert_eq!(kn_matrix_copy_entries(xk, buf.as_mut_ptr(), buf.len()), KnStatus::Ok);
        for r in 0..8 {
            let nonzero = (0..8)
                .filter(|c| {
                    let idx = 2 * (r * 8 + c);
                    (buf[idx].powi(2) + buf[idx + 1].powi(2)).sqrt() > 1e-12
                })
                .count();
            assert_eq!(nonzero, 1);
        }
        kn_matrix_free(x);
        kn_matrix_free(xk);
    }
}
