//! Numeric dimension-12 fiducial data. The Weyl-Heisenberg generators are
//! given directly as 3-nomial-adapted monomial matrices over ω₂₄ = e^{2πi/24}
//! (column-vector convention), and the twelve fiducial coefficients are
//! radical expressions in √3, √13, two nested square roots and one real root
//! of t³ = 12t + 10. Which of the three real roots embeds the coefficients
//! as an actual fiducial is not fixed a priori, so callers evaluate all
//! three and keep what verifies.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::linalg::{Basis, CMat, CVec};

use super::{weyl_defect, FidCand};

const X_ENTRIES: [(usize, usize, u32); 12] = [
    (1, 0, 9),
    (2, 1, 23),
    (3, 2, 1),
    (4, 3, 15),
    (5, 4, 17),
    (0, 5, 7),
    (7, 6, 9),
    (8, 7, 11),
    (9, 8, 17),
    (10, 9, 11),
    (11, 10, 1),
    (6, 11, 11),
];

const Z_ENTRIES: [(usize, usize, u32); 12] = [
    (6, 0, 15),
    (7, 1, 17),
    (8, 2, 7),
    (9, 3, 1),
    (10, 4, 23),
    (11, 5, 9),
    (0, 6, 9),
    (1, 7, 11),
    (2, 8, 1),
    (3, 9, 11),
    (4, 10, 17),
    (5, 11, 11),
];

fn omega24_pow(e: u32) -> Complex64 {
    Complex64::from_polar(1.0, PI * (e % 24) as f64 / 12.0)
}

/// The monomial shift/clock pair of the bundled dimension-12 representation.
pub fn dim12_generators() -> (CMat, CMat) {
    let mut x = CMat::zeros(12, Basis::Knomial);
    for &(r, c, e) in &X_ENTRIES {
        x[(r, c)] = omega24_pow(e);
    }
    let mut z = CMat::zeros(12, Basis::Knomial);
    for &(r, c, e) in &Z_ENTRIES {
        z[(r, c)] = omega24_pow(e);
    }
    (x, z)
}

/// The `choice`-th real root (ascending) of t³ = 12t + 10; all three roots
/// are real, via the trigonometric solution of the depressed cubic.
pub fn dim12_root(choice: usize) -> f64 {
    assert!(choice < 3);
    let p = -12.0f64;
    let q = -10.0f64;
    let amp = 2.0 * (-p / 3.0).sqrt();
    let phi = ((3.0 * q) / (2.0 * p) * (-3.0 / p).sqrt()).acos();
    let mut roots: Vec<f64> = (0..3)
        .map(|k| amp * ((phi - 2.0 * PI * k as f64) / 3.0).cos())
        .collect();
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots[choice]
}

fn coefficients(t1: f64) -> [Complex64; 12] {
    let s3 = 3f64.sqrt();
    let s13 = 13f64.sqrt();
    let s39 = 39f64.sqrt();
    let s1 = ((s13 - 1.0) / 2.0).sqrt();
    let s2 = ((3.0 * s13 + 9.0) / 2.0).sqrt();
    let t2 = t1 * t1;
    let c = |re: f64, im: f64| Complex64::new(re, im);
    [
        c(
            (26.0 * s39 - 364.0 * s3) * s1 + 28.0 * s39 * t2 - 58.0 * s39 * t1 - 147.0 * s39
                + 96.0 * s3 * t2
                - 42.0 * s3 * t1
                - 443.0 * s3,
            (-30.0 * s13 - 312.0) * s1 + 24.0 * s13 * t2 - 102.0 * s13 * t1 - 309.0 * s13
                - 92.0 * t2
                - 158.0 * t1
                - 5.0,
        ),
        c(
            28.0 * s39 * t2 - 58.0 * s39 * t1 - 264.0 * s39 + 96.0 * s3 * t2 - 42.0 * s3 * t1
                - 1184.0 * s3,
            24.0 * s13 * t2 - 102.0 * s13 * t1 - 540.0 * s13 - 92.0 * t2 - 158.0 * t1 - 980.0,
        ),
        c(
            (28.0 * s39 - 26.0 * s3) * s1 - 2.0 * s39 * t2 - 22.0 * s39 * t1 - 81.0 * s39
                - 94.0 * s3 * t2
                - 58.0 * s3 * t1
                + 219.0 * s3,
            (24.0 * s13 - 702.0) * s1 - 54.0 * s13 * t2 + 138.0 * s13 * t1 + 375.0 * s13
                - 98.0 * t2
                + 142.0 * t1
                + 667.0,
        ),
        c(
            (26.0 * s39 - 364.0 * s3) * s1 - 2.0 * s39 * t2 - 22.0 * s39 * t1 + 93.0 * s39
                - 94.0 * s3 * t2
                - 58.0 * s3 * t1
                + 1077.0 * s3,
            (-30.0 * s13 - 312.0) * s1 - 54.0 * s13 * t2 + 138.0 * s13 * t1 + 315.0 * s13
                - 98.0 * t2
                + 142.0 * t1
                + 43.0,
        ),
        c(
            -26.0 * s39 * t2 + 80.0 * s39 * t1 + 168.0 * s39 - 2.0 * s3 * t2 + 100.0 * s3 * t1
                - 400.0 * s3,
            30.0 * s13 * t2 - 36.0 * s13 * t1 - 588.0 * s13 + 190.0 * t2 + 16.0 * t1 - 3236.0,
        ),
        c(
            (28.0 * s39 - 26.0 * s3) * s1 - 26.0 * s39 * t2 + 80.0 * s39 * t1 + 111.0 * s39
                - 2.0 * s3 * t2
                + 100.0 * s3 * t1
                - 517.0 * s3,
            (24.0 * s13 - 702.0) * s1 + 30.0 * s13 * t2 - 36.0 * s13 * t1 - 297.0 * s13
                + 190.0 * t2
                + 16.0 * t1
                - 1637.0,
        ),
        c(
            (26.0 * s39 - 364.0 * s3) * s1 - 26.0 * s39 * t2 + 80.0 * s39 * t1 + 285.0 * s39
                - 2.0 * s3 * t2
                + 100.0 * s3 * t1
                + 341.0 * s3,
            (-30.0 * s13 - 312.0) * s1 + 30.0 * s13 * t2 - 36.0 * s13 * t1 - 357.0 * s13
                + 190.0 * t2
                + 16.0 * t1
                - 2261.0,
        ),
        c(488.0 * s13 * s2, 0.0),
        c(
            (28.0 * s39 - 26.0 * s3) * s1 + 28.0 * s39 * t2 - 58.0 * s39 * t1 - 321.0 * s39
                + 96.0 * s3 * t2
                - 42.0 * s3 * t1
                - 1301.0 * s3,
            (24.0 * s13 - 702.0) * s1 + 24.0 * s13 * t2 - 102.0 * s13 * t1 - 249.0 * s13
                - 92.0 * t2
                - 158.0 * t1
                + 619.0,
        ),
        c(
            (23.0 * s13 - 871.0) * s1 * s2 + 122.0 * s13 * s2,
            (85.0 * s39 + 91.0 * s3) * s1 * s2 - 122.0 * s39 * s2,
        ),
        c(
            -2.0 * s39 * t2 - 22.0 * s39 * t1 - 24.0 * s39 - 94.0 * s3 * t2 - 58.0 * s3 * t1
                + 336.0 * s3,
            -54.0 * s13 * t2 + 138.0 * s13 * t1 + 84.0 * s13 - 98.0 * t2 + 142.0 * t1 - 932.0,
        ),
        c(
            (139.0 * s13 - 299.0) * s1 * s2 + 122.0 * s13 * s2,
            (31.0 * s39 + 481.0 * s3) * s1 * s2 + 122.0 * s39 * s2,
        ),
    ]
}

/// Evaluate the coefficient expressions at the chosen cubic root, normalize,
/// and measure the defect against the bundled generators.
pub fn dim12_fiducial_numeric(root_choice: usize) -> FidCand {
    let t1 = dim12_root(root_choice);
    let coeffs = coefficients(t1);
    let psi = CVec::from_slice(Basis::Knomial, &coeffs).normalized();
    let (x, z) = dim12_generators();
    weyl_defect(&psi, &x, &z)
}

/// One row of the three-root evaluation report.
#[derive(Clone, Debug)]
pub struct Dim12Eval {
    pub root_choice: usize,
    pub root: f64,
    pub cand: FidCand,
}

/// Evaluate all three real roots of the cubic.
pub fn dim12_eval_all() -> Vec<Dim12Eval> {
    (0..3)
        .map(|root_choice| Dim12Eval {
            root_choice,
            root: dim12_root(root_choice),
            cand: dim12_fiducial_numeric(root_choice),
        })
        .collect()
}
