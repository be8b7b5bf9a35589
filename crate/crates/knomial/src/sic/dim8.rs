//! Closed-form dimension-8 fiducial vectors, stated in the k-nomial basis
//! (k = n = 2, lexicographic ordering) and mapped to the standard basis for
//! verification. Two exact families are bundled: eight vectors in one
//! three-dimensional Zauner eigenspace (selected by three independent signs)
//! and four in the two-dimensional eigenspace (selected by a quarter-turn
//! index); an order-24 anti-symplectic matrix carries the first family onto
//! a third one.

use num_complex::Complex64;

use crate::cliffordrep::antisymplectic_antiunitary;
use crate::imprimitivity::knomial_vec_to_standard;
use crate::linalg::{Basis, CVec};
use crate::numtheory::{Dim, Sl2};
use crate::Result;

use super::{sic_defect, FidCand};

/// Which dimension-8 family to draw from, and the member within it.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Dim8Selector {
    /// Three independent signs pick one of eight fiducials.
    S1 { s1: i8, s2: i8, s3: i8 },
    /// r ∈ {0, 1, 2, 3} picks one of four fiducials.
    S0 { r: u8 },
}

impl Dim8Selector {
    pub fn validate(&self) -> bool {
        match *self {
            Dim8Selector::S1 { s1, s2, s3 } => {
                (s1 == 1 || s1 == -1) && (s2 == 1 || s2 == -1) && (s3 == 1 || s3 == -1)
            }
            Dim8Selector::S0 { r } => r < 4,
        }
    }

    /// Catalogue label of the orbit the selected fiducial lies on.
    pub fn orbit_label(&self) -> &'static str {
        match self {
            Dim8Selector::S1 { .. } => "8a",
            Dim8Selector::S0 { .. } => "8b",
        }
    }
}

/// η = e^{iπ/24}; all phases in the closed forms are powers of it, reduced
/// mod 48 before evaluation.
fn eta_pow(e: i64) -> Complex64 {
    let r = e.rem_euclid(48);
    Complex64::from_polar(1.0, std::f64::consts::PI * r as f64 / 24.0)
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// The three orthogonal component vectors of the sign family, in k-nomial
/// coordinates. The first is already scaled by its amplitude 1/(2√3).
fn s1_components() -> [Vec<Complex64>; 3] {
    let sqrt3 = 3f64.sqrt();
    let sqrt2 = 2f64.sqrt();
    let a = 1.0 / (2.0 * sqrt3);
    let head = vec![
        eta_pow(7) * real(a * (3.0 - sqrt3).sqrt()),
        eta_pow(37) * real(a * (3.0 + sqrt3).sqrt()),
        real(0.0),
        real(0.0),
        real(0.0),
        real(0.0),
        real(0.0),
        real(0.0),
    ];
    let mid = vec![
        real(0.0),
        real(0.0),
        eta_pow(17),
        eta_pow(17),
        eta_pow(31) * real(sqrt2),
        real(0.0),
        real(-1.0),
        real(1.0),
    ];
    let tail = vec![
        real(0.0),
        real(0.0),
        eta_pow(11),
        eta_pow(35),
        real(0.0),
        eta_pow(1) * real(sqrt2),
        eta_pow(6),
        eta_pow(6),
    ];
    [head, mid, tail]
}

/// The two orthogonal component vectors of the quarter-turn family.
fn s0_components() -> [Vec<Complex64>; 2] {
    let sqrt2 = 2f64.sqrt();
    let a = vec![
        real(0.0),
        real(0.0),
        eta_pow(33),
        eta_pow(33),
        eta_pow(15) * real(sqrt2),
        real(0.0),
        real(-1.0),
        real(1.0),
    ];
    let b = vec![
        real(0.0),
        real(0.0),
        eta_pow(33),
        eta_pow(9),
        real(0.0),
        eta_pow(39) * real(sqrt2),
        eta_pow(12),
        eta_pow(12),
    ];
    [a, b]
}

/// e^{iχ} = (1/4)(√(8 + √6 − √30) + i √(8 − √6 + √30)).
fn chi_phase() -> Complex64 {
    let s6 = 6f64.sqrt();
    let s30 = 30f64.sqrt();
    Complex64::new((8.0 + s6 - s30).sqrt() / 4.0, (8.0 - s6 + s30).sqrt() / 4.0)
}

/// Build the selected closed-form fiducial, map it to the standard basis,
/// and evaluate its defect.
pub fn dim8_fiducial(sel: Dim8Selector) -> Result<FidCand> {
    assert!(sel.validate(), "invalid dimension-8 selector");
    let d = Dim::new(8);
    let sqrt5 = 5f64.sqrt();
    let knomial = match sel {
        Dim8Selector::S1 { s1, s2, s3 } => {
            let [head, mid, tail] = s1_components();
            let chi = if s1 == 1 { chi_phase() } else { chi_phase().conj() };
            let twist = Complex64::from_polar(1.0, -(s1 as f64) * std::f64::consts::PI / 12.0);
            let amp_mid = real(s2 as f64 / 2.0 * ((3.0 - sqrt5) / 6.0).sqrt()) * chi;
            let amp_tail = real(s3 as f64 / 2.0 * ((sqrt5 - 1.0) / 6.0).sqrt()) * chi * twist;
            let mut v = Vec::with_capacity(8);
            for i in 0..8 {
                v.push(head[i] + amp_mid * mid[i] + amp_tail * tail[i]);
            }
            v
        }
        Dim8Selector::S0 { r } => {
            let [a, b] = s0_components();
            let amp_a = real(0.5 * ((3.0 - sqrt5) / 6.0).sqrt());
            let amp_b = Complex64::i().powu(r as u32) * real(0.5 * ((1.0 + sqrt5) / 6.0).sqrt());
            let mut v = Vec::with_capacity(8);
            for i in 0..8 {
                v.push(amp_a * a[i] + amp_b * b[i]);
            }
            v
        }
    };
    let kvec = CVec::from_slice(Basis::Knomial, &knomial);
    let psi = knomial_vec_to_standard(&d, &kvec).normalized();
    sic_defect(&psi, 8)
}

/// Image of a sign-family fiducial under the anti-unitary of the order-24
/// anti-symplectic matrix [[1, 5], [−5, 6]]; lands in the third Zauner
/// eigenspace and is again a fiducial.
pub fn dim8_orbit_s2(sel: Dim8Selector) -> Result<FidCand> {
    assert!(
        matches!(sel, Dim8Selector::S1 { .. }),
        "the anti-unitary orbit starts from the sign family"
    );
    let d = Dim::new(8);
    let base = dim8_fiducial(sel)?;
    let a = Sl2::with_sign(16, [[1, 5], [-5, 6]], -1).expect("A is anti-symplectic");
    let anti = antisymplectic_antiunitary(&d, &a)?;
    let image = anti.apply(&base.psi).normalized();
    sic_defect(&image, 8)
}

/// All twenty bundled dimension-8 fiducials: eight from the sign family,
/// eight images under the anti-unitary, four from the quarter-turn family.
pub fn dim8_all_selectors() -> Vec<(Dim8Selector, bool)> {
    let mut out = Vec::new();
    for &s1 in &[1i8, -1] {
        for &s2 in &[1i8, -1] {
            for &s3 in &[1i8, -1] {
                out.push((Dim8Selector::S1 { s1, s2, s3 }, false));
            }
        }
    }
    for &s1 in &[1i8, -1] {
        for &s2 in &[1i8, -1] {
            for &s3 in &[1i8, -1] {
                out.push((Dim8Selector::S1 { s1, s2, s3 }, true));
            }
        }
    }
    for r in 0..4u8 {
        out.push((Dim8Selector::S0 { r }, false));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sic::{zauner_eigenspaces, zauner_unitary};

    #[test]
    fn all_twenty_fiducials_verify() {
        for (sel, via_anti) in dim8_all_selectors() {
            let cand = if via_anti {
                dim8_orbit_s2(sel).unwrap()
            } else {
                dim8_fiducial(sel).unwrap()
            };
            assert!(
                cand.defect < 1e-9,
                "defect {} for {sel:?} (anti = {via_anti})",
                cand.defect
            );
        }
    }

    #[test]
    fn sign_family_members_are_distinct_rays() {
        let mut psis = Vec::new();
        for &s1 in &[1i8, -1] {
            for &s2 in &[1i8, -1] {
                for &s3 in &[1i8, -1] {
                    psis.push(dim8_fiducial(Dim8Selector::S1 { s1, s2, s3 }).unwrap().psi);
                }
            }
        }
        for i in 0..psis.len() {
            for j in 0..i {
                let ov = psis[i].inner(&psis[j]).norm();
                assert!(ov < 1.0 - 1e-6, "rays {i} and {j} coincide (|overlap| = {ov})");
            }
        }
    }

    #[test]
    fn fiducials_are_zauner_eigenvectors() {
        let d = Dim::new(8);
        let u = zauner_unitary(&d);
        for (sel, via_anti) in dim8_all_selectors() {
            let cand = if via_anti {
                dim8_orbit_s2(sel).unwrap()
            } else {
                dim8_fiducial(sel).unwrap()
            };
            let img = u.apply(&cand.psi);
            let c = cand.psi.inner(&img);
            assert!((c.norm() - 1.0).abs() < 1e-9);
            assert!(img.sub(&cand.psi.scale(c)).norm() < 1e-9, "{sel:?}");
        }
    }

    #[test]
    fn quarter_turn_family_sits_in_an_eigenspace_of_dimension_two() {
        let d = Dim::new(8);
        let spaces = zauner_eigenspaces(&d);
        let cand = dim8_fiducial(Dim8Selector::S0 { r: 0 }).unwrap();
        let mut weights: Vec<(usize, f64)> = spaces
            .iter()
            .enumerate()
            .map(|(i, sp)| {
                let w: f64 = sp.basis.iter().map(|b| b.inner(&cand.psi).norm_sqr()).sum();
                (i, w)
            })
            .collect();
        weights.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());
        let (idx, w) = weights[0];
        assert!(w > 1.0 - 1e-9);
        assert_eq!(spaces[idx].dim(), 2);
    }

    #[test]
    fn anti_unitary_toggles_the_two_big_eigenspaces() {
        let d = Dim::new(8);
        let spaces = zauner_eigenspaces(&d);
        let membership = |psi: &CVec| -> usize {
            let mut best = (0usize, -1.0f64);
            for (i, sp) in spaces.iter().enumerate() {
                let w: f64 = sp.basis.iter().map(|b| b.inner(psi).norm_sqr()).sum();
                if w > best.1 {
                    best = (i, w);
                }
            }
            assert!(best.1 > 1.0 - 1e-9);
            best.0
        };
        let sel = Dim8Selector::S1 { s1: 1, s2: 1, s3: 1 };
        let base = dim8_fiducial(sel).unwrap();
        let image = dim8_orbit_s2(sel).unwrap();
        let i_base = membership(&base.psi);
        let i_image = membership(&image.psi);
        assert_ne!(i_base, i_image);
        assert_eq!(spaces[i_base].dim(), 3);
        assert_eq!(spaces[i_image].dim(), 3);
        // eigenvalues of the two big spaces differ by a primitive cube root
        let ratio = spaces[i_image].eigenvalue / spaces[i_base].eigenvalue;
        let xi = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        assert!((ratio - xi).norm().min((ratio - xi.powu(2)).norm()) < 1e-9);

        // applying the anti-unitary twice returns to the original eigenspace
        let a = Sl2::with_sign(16, [[1, 5], [-5, 6]], -1).unwrap();
        let anti = antisymplectic_antiunitary(&d, &a).unwrap();
        let twice = anti.apply(&anti.apply(&base.psi)).normalized();
        assert_eq!(membership(&twice), i_base);
        assert!(sic_defect(&twice, 8).unwrap().defect < 1e-9);
    }
}
