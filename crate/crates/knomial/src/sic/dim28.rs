//! Numeric dimension-28 fiducial dataset, available behind the
//! `dim28-data` feature. The 28 coefficients live in a basis adapted to the
//! 7-nomial structure (X¹⁴ and Z¹⁴ diagonal); the adapted-to-standard map
//! is a 2×2 Fourier transform tensored with the permutation that
//! de-interleaves odd and even standard indices. The values are the
//! canonical real-radical evaluation (all square roots positive, middle
//! real roots of the two auxiliary cubics), stored unnormalized.

use num_complex::Complex64;

use crate::linalg::{Basis, CMat, CVec};

use super::{sic_defect, FidCand};

/// Adapted-basis coordinates of the bundled fiducial, as (re, im) pairs.
pub const DIM28_COEFFS: [[f64; 2]; 28] = [
    [-14310.58737329982, -7651.887515770805],
    [-8398.264595113931, 12974.332858766982],
    [-9927.59326261365, -2552.623919269965],
    [1034.1418571289341, 3620.916428956065],
    [-3503.986654625005, 1577.6454580266054],
    [9512.10931954086, 23496.407028550868],
    [-9625.466200728313, 27759.94603933304],
    [25241.323169285075, -6415.63002367223],
    [21238.625016543894, -11683.280423804339],
    [11689.915108821808, -10567.78988741634],
    [-18989.660044745127, -9047.469945160916],
    [2673.2128380933636, -6430.968431547382],
    [3648.588017901983, 9577.66619781489],
    [-5468.492906086879, -1394.1079590598192],
    [3660.7764515192275, -10362.352489468902],
    [23225.09860130014, -18204.34685855838],
    [-14479.947736027614, 6289.590987662294],
    [-26421.53807049905, -11802.217874519903],
    [-542.3935436826118, 20227.145180007294],
    [24644.36238008531, -30800.661289009928],
    [1583.7543240964126, -7056.790709923045],
    [-20310.542579683715, -1088.2692630708189],
    [-8720.195396224819, 4847.001481521394],
    [16864.153805662292, 9924.522913501822],
    [13396.390054304062, 7623.90940487384],
    [-5495.890214023879, 3519.5610281858276],
    [8105.149519493433, 6438.991750201414],
    [24459.705339943634, 16134.13234714564],
];

/// Columns are the standard-basis coordinates of the adapted basis vectors.
pub fn dim28_base_change() -> CMat {
    let w = 1.0 / 2f64.sqrt();
    let mut b = CMat::zeros(28, Basis::Standard);
    // standard index u pairs with u+14; adapted labels interleave odd/even
    let tau = |c: usize| -> usize {
        if c < 7 {
            2 * c + 1
        } else {
            2 * (c - 7)
        }
    };
    for a in 0..2usize {
        for c in 0..14usize {
            let col = 14 * a + c;
            b[(tau(c), col)] = Complex64::new(w, 0.0);
            let sign = if a == 0 { w } else { -w };
            b[(tau(c) + 14, col)] = Complex64::new(sign, 0.0);
        }
    }
    b
}

/// The bundled dimension-28 fiducial mapped to the standard basis, with its
/// defect evaluated against the standard displacement operators.
pub fn dim28_fiducial() -> FidCand {
    let coeffs: Vec<Complex64> = DIM28_COEFFS
        .iter()
        .map(|[re, im]| Complex64::new(*re, *im))
        .collect();
    let adapted = CVec::from_slice(Basis::Knomial, &coeffs);
    let psi = dim28_base_change().apply(&adapted.with_basis(Basis::Standard)).normalized();
    sic_defect(&psi, 28).expect("normalized above")
}
