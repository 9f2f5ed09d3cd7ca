//! Dense 2×2 complex matrices.
//!
//! Connection coefficients, parallel transports and holonomies are all 2×2
//! complex; this module keeps them as a flat value type with the closed-form
//! exponential (Cayley–Hamilton) used by the exact segment transport.

use crate::C64;
use std::ops::{Add, Mul, Neg, Sub};

/// 2×2 complex matrix, row major: `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2(pub [[C64; 2]; 2]);

/// Unit-determinant holonomy value. Stored unnormalized entries plus the
/// determinant drift observed before renormalization.
#[derive(Debug, Clone, Copy)]
pub struct Sl2 {
    pub mat: Mat2,
    /// |det − 1| of the raw transport before the √det renormalization.
    pub det_drift: f64,
}

impl Mat2 {
    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Self {
        Mat2([[a, b], [c, d]])
    }

    pub fn zero() -> Self {
        Mat2([[C64::ZERO; 2]; 2])
    }

    pub fn identity() -> Self {
        let o = C64::new(1.0, 0.0);
        Mat2([[o, C64::ZERO], [C64::ZERO, o]])
    }

    pub fn trace(&self) -> C64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn det(&self) -> C64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conj(&self) -> Self {
        Mat2([
            [self.0[0][0].conj(), self.0[0][1].conj()],
            [self.0[1][0].conj(), self.0[1][1].conj()],
        ])
    }

    pub fn scale(&self, s: C64) -> Self {
        Mat2([
            [self.0[0][0] * s, self.0[0][1] * s],
            [self.0[1][0] * s, self.0[1][1] * s],
        ])
    }

    /// Inverse via the adjugate; errors are the caller's problem when det ≈ 0
    /// (transports keep det ≈ 1 so this stays well conditioned).
    pub fn inverse(&self) -> Self {
        let d = self.det();
        Mat2([
            [self.0[1][1] / d, -self.0[0][1] / d],
            [-self.0[1][0] / d, self.0[0][0] / d],
        ])
    }

    pub fn frobenius_norm(&self) -> f64 {
        let mut s = 0.0;
        for r in &self.0 {
            for e in r {
                s += e.norm_sqr();
            }
        }
        s.sqrt()
    }

    /// Frobenius distance to the identity.
    pub fn dist_to_identity(&self) -> f64 {
        (*self - Mat2::identity()).frobenius_norm()
    }

    pub fn commutator(&self, other: &Mat2) -> Mat2 {
        *self * *other - *other * *self
    }

    /// Matrix exponential by Cayley–Hamilton.
    ///
    /// With τ = tr X and X₀ = X − (τ/2)I, X₀² = −det(X₀)·I, so
    /// exp(X) = e^{τ/2} (cosh s · I + sinhc s · X₀) with s² = −det X₀.
    /// Both cosh and sinhc are even, so the branch of the square root is
    /// irrelevant.
    pub fn exp(&self) -> Mat2 {
        let half_tau = self.trace() * 0.5;
        let x0 = *self - Mat2::identity().scale(half_tau);
        let s2 = -x0.det();
        let (cosh_s, sinhc_s) = cosh_sinhc(s2);
        let mut out = Mat2::identity().scale(cosh_s) + x0.scale(sinhc_s);
        let f = half_tau.exp();
        out = out.scale(f);
        out
    }

    /// Normalize to unit determinant, dividing by the principal √det.
    /// Returns the renormalized matrix and the drift |det − 1|.
    pub fn renormalize_det(&self) -> (Mat2, f64) {
        let d = self.det();
        let drift = (d - C64::new(1.0, 0.0)).norm();
        let root = d.sqrt();
        (self.scale(C64::new(1.0, 0.0) / root), drift)
    }
}

/// cosh(s) and sinh(s)/s as functions of s² (valid for complex s²).
fn cosh_sinhc(s2: C64) -> (C64, C64) {
    if s2.norm() < 1e-8 {
        // series in s²; error O(|s²|³) < 1e-24
        let one = C64::new(1.0, 0.0);
        let cosh = one + s2 * 0.5 + s2 * s2 * (1.0 / 24.0);
        let sinhc = one + s2 * (1.0 / 6.0) + s2 * s2 * (1.0 / 120.0);
        (cosh, sinhc)
    } else {
        let s = s2.sqrt();
        (s.cosh(), s.sinh() / s)
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        let mut out = Mat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = self.0[i][j] + rhs.0[i][j];
            }
        }
        out
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        let mut out = Mat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = self.0[i][j] - rhs.0[i][j];
            }
        }
        out
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let mut out = Mat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = self.0[i][0] * rhs.0[0][j] + self.0[i][1] * rhs.0[1][j];
            }
        }
        out
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self.scale(C64::new(-1.0, 0.0))
    }
}

impl Sl2 {
    pub fn from_raw(mat: Mat2) -> Sl2 {
        let (m, drift) = mat.renormalize_det();
        Sl2 { mat: m, det_drift: drift }
    }

    pub fn identity() -> Sl2 {
        Sl2 { mat: Mat2::identity(), det_drift: 0.0 }
    }

    pub fn trace(&self) -> C64 {
        self.mat.trace()
    }

    pub fn inverse(&self) -> Sl2 {
        // unit determinant: adjugate is the inverse
        let m = self.mat.0;
        Sl2 {
            mat: Mat2([[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]]),
            det_drift: self.det_drift,
        }
    }

    pub fn mul(&self, rhs: &Sl2) -> Sl2 {
        Sl2 {
            mat: self.mat * rhs.mat,
            det_drift: self.det_drift.max(rhs.det_drift),
        }
    }

    pub fn commutator(&self, rhs: &Sl2) -> Sl2 {
        self.mul(rhs).mul(&self.inverse()).mul(&rhs.inverse())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn exp_of_diagonal() {
        let x = Mat2::new(c(0.3, 0.1), C64::ZERO, C64::ZERO, c(-0.7, 0.4));
        let e = x.exp();
        assert!((e.0[0][0] - c(0.3, 0.1).exp()).norm() < 1e-14);
        assert!((e.0[1][1] - c(-0.7, 0.4).exp()).norm() < 1e-14);
        assert!(e.0[0][1].norm() < 1e-15 && e.0[1][0].norm() < 1e-15);
    }

    #[test]
    fn exp_of_symmetric_offdiagonal_is_cosh_sinh() {
        // exp(v·[[0,1],[1,0]]) = [[cosh v, sinh v],[sinh v, cosh v]]
        let v = c(0.83, -0.29);
        let x = Mat2::new(C64::ZERO, v, v, C64::ZERO);
        let e = x.exp();
        assert!((e.0[0][0] - v.cosh()).norm() < 1e-13);
        assert!((e.0[0][1] - v.sinh()).norm() < 1e-13);
        assert!((e.trace() - v.cosh() * 2.0).norm() < 1e-13);
    }

    #[test]
    fn exp_small_argument_series_branch() {
        let v = c(1e-6, 2e-6);
        let x = Mat2::new(C64::ZERO, v, v.conj(), C64::ZERO);
        let e = x.exp();
        // compare against the direct sum of the series exp(X) ≈ I + X + X²/2
        let direct = Mat2::identity() + x + (x * x).scale(c(0.5, 0.0));
        assert!((e - direct).frobenius_norm() < 1e-18);
    }

    proptest! {
        #[test]
        fn exp_of_traceless_has_unit_det(
            ar in -1.5f64..1.5, ai in -1.5f64..1.5,
            br in -1.5f64..1.5, bi in -1.5f64..1.5,
            cr in -1.5f64..1.5, ci in -1.5f64..1.5,
        ) {
            let x = Mat2::new(c(ar, ai), c(br, bi), c(cr, ci), -c(ar, ai));
            let e = x.exp();
            prop_assert!((e.det() - c(1.0, 0.0)).norm() < 1e-11);
        }

        #[test]
        fn inverse_roundtrip(
            ar in -1.0f64..1.0, ai in -1.0f64..1.0,
            br in -1.0f64..1.0, bi in -1.0f64..1.0,
            cr in -1.0f64..1.0, ci in -1.0f64..1.0,
        ) {
            let x = Mat2::new(c(ar, ai) + c(2.0, 0.0), c(br, bi), c(cr, ci), c(2.0, 0.0));
            let p = x * x.inverse();
            prop_assert!(p.dist_to_identity() < 1e-12);
        }
    }
}
