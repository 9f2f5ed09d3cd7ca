//! Small numerical kernels shared by the solvers: a CSR matrix with a
//! Jacobi-preconditioned conjugate gradient, least-squares fits, and the C²
//! cutoff profile used for the singular metric background.
//!
//! Everything here iterates in fixed index order; repeated runs on the same
//! inputs are bitwise reproducible.

use crate::error::{Error, Result};
use crate::C64;

/// Compressed sparse row matrix (symmetric usage; both triangles stored).
#[derive(Debug, Clone)]
pub struct Csr {
    pub n: usize,
    pub row_ptr: Vec<usize>,
    pub cols: Vec<usize>,
    pub vals: Vec<f64>,
}

impl Csr {
    /// Build from (row, col, value) triplets; duplicates are accumulated.
    pub fn from_triplets(n: usize, mut trip: Vec<(usize, usize, f64)>) -> Csr {
        trip.sort_unstable_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        let mut merged: Vec<(usize, usize, f64)> = Vec::with_capacity(trip.len());
        for (r, c, v) in trip {
            match merged.last_mut() {
                Some(last) if last.0 == r && last.1 == c => last.2 += v,
                _ => merged.push((r, c, v)),
            }
        }
        let mut row_ptr = vec![0usize; n + 1];
        let mut cols = Vec::with_capacity(merged.len());
        let mut vals = Vec::with_capacity(merged.len());
        for (r, c, v) in merged {
            row_ptr[r + 1] += 1;
            cols.push(c);
            vals.push(v);
        }
        for i in 0..n {
            row_ptr[i + 1] += row_ptr[i];
        }
        Csr { n, row_ptr, cols, vals }
    }

    pub fn mul_vec(&self, x: &[f64], out: &mut [f64]) {
        for i in 0..self.n {
            let mut acc = 0.0;
            for k in self.row_ptr[i]..self.row_ptr[i + 1] {
                acc += self.vals[k] * x[self.cols[k]];
            }
            out[i] = acc;
        }
    }

    pub fn diagonal(&self) -> Vec<f64> {
        let mut d = vec![0.0; self.n];
        for i in 0..self.n {
            for k in self.row_ptr[i]..self.row_ptr[i + 1] {
                if self.cols[k] == i {
                    d[i] += self.vals[k];
                }
            }
        }
        d
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    let mut s = 0.0;
    for i in 0..a.len() {
        s += a[i] * b[i];
    }
    s
}

/// Jacobi-preconditioned conjugate gradient for SPD systems.
pub fn cg_solve(a: &Csr, b: &[f64], rel_tol: f64, max_iter: usize) -> Result<Vec<f64>> {
    let n = a.n;
    let b_norm = dot(b, b).sqrt();
    if b_norm == 0.0 {
        return Ok(vec![0.0; n]);
    }
    let diag = a.diagonal();
    let inv_diag: Vec<f64> = diag
        .iter()
        .map(|&d| if d > 0.0 { 1.0 / d } else { 1.0 })
        .collect();

    let mut x = vec![0.0; n];
    let mut r = b.to_vec();
    let mut z: Vec<f64> = r.iter().zip(&inv_diag).map(|(ri, di)| ri * di).collect();
    let mut p = z.clone();
    let mut rz = dot(&r, &z);
    let mut ap = vec![0.0; n];
    let target = rel_tol * b_norm;

    for _ in 0..max_iter {
        a.mul_vec(&p, &mut ap);
        let pap = dot(&p, &ap);
        if pap <= 0.0 {
            return Err(Error::LinearSolve(format!(
                "matrix not positive definite (pᵀAp = {pap:.3e})"
            )));
        }
        let alpha = rz / pap;
        for i in 0..n {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        if dot(&r, &r).sqrt() <= target {
            return Ok(x);
        }
        for i in 0..n {
            z[i] = r[i] * inv_diag[i];
        }
        let rz_new = dot(&r, &z);
        let beta = rz_new / rz;
        rz = rz_new;
        for i in 0..n {
            p[i] = z[i] + beta * p[i];
        }
    }
    Err(Error::LinearSolve(format!(
        "CG stalled: relative residual {:.3e} after {} iterations",
        dot(&r, &r).sqrt() / b_norm,
        max_iter
    )))
}

/// Least-squares slope of log(y) against log(x).
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let lx: Vec<f64> = xs.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|v| v.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..lx.len() {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    num / den
}

pub fn sup_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0f64, |m, &x| m.max(x.abs()))
}

/// C² cutoff profile: 1 on [0, r1], 0 on [r2, ∞), quintic smoothstep between.
/// Returns (χ, χ′, χ″) at radius r.
pub fn cutoff_profile(r: f64, r1: f64, r2: f64) -> (f64, f64, f64) {
    if r <= r1 {
        return (1.0, 0.0, 0.0);
    }
    if r >= r2 {
        return (0.0, 0.0, 0.0);
    }
    let w = r2 - r1;
    let s = (r - r1) / w;
    let rise = s * s * s * (10.0 - 15.0 * s + 6.0 * s * s);
    let d_rise = 30.0 * s * s * (1.0 - s) * (1.0 - s);
    let dd_rise = 60.0 * s * (1.0 - s) * (1.0 - 2.0 * s);
    (1.0 - rise, -d_rise / w, -dd_rise / (w * w))
}

/// Real 2D gradient of a scalar field from scattered differences:
/// fits df ≈ g·dz over the star by (weighted) least squares.
/// Returns the gradient as ∂_z f = (g_x − i g_y)/2.
pub fn star_gradient(samples: &[(C64, f64)]) -> C64 {
    let mut a11 = 0.0;
    let mut a12 = 0.0;
    let mut a22 = 0.0;
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    for &(dz, df) in samples {
        let (dx, dy) = (dz.re, dz.im);
        a11 += dx * dx;
        a12 += dx * dy;
        a22 += dy * dy;
        b1 += dx * df;
        b2 += dy * df;
    }
    let det = a11 * a22 - a12 * a12;
    if det.abs() < 1e-300 {
        return C64::ZERO;
    }
    let gx = (a22 * b1 - a12 * b2) / det;
    let gy = (a11 * b2 - a12 * b1) / det;
    C64::new(0.5 * gx, -0.5 * gy)
}

/// Weighted quadratic least-squares fit around the origin:
/// f ≈ c0 + c1 x + c2 y + c3 x² + c4 xy + c5 y².
/// Returns (value, ∂_z f) at the origin, or None if the stencil is
/// degenerate.
pub fn mls_quadratic(samples: &[(C64, f64, f64)]) -> Option<(f64, C64)> {
    if samples.len() < 6 {
        return None;
    }
    let mut ata = nalgebra::SMatrix::<f64, 6, 6>::zeros();
    let mut atb = nalgebra::SVector::<f64, 6>::zeros();
    for &(dz, f, w) in samples {
        let (x, y) = (dz.re, dz.im);
        let basis = [1.0, x, y, x * x, x * y, y * y];
        for i in 0..6 {
            for j in 0..6 {
                ata[(i, j)] += w * basis[i] * basis[j];
            }
            atb[i] += w * basis[i] * f;
        }
    }
    let chol = ata.cholesky()?;
    let c = chol.solve(&atb);
    Some((c[0], C64::new(0.5 * c[1], -0.5 * c[2])))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cg_solves_small_spd_system() {
        // 1D Dirichlet Laplacian, 5 unknowns
        let mut trip = Vec::new();
        let n = 5;
        for i in 0..n {
            trip.push((i, i, 2.0));
            if i > 0 {
                trip.push((i, i - 1, -1.0));
            }
            if i + 1 < n {
                trip.push((i, i + 1, -1.0));
            }
        }
        let a = Csr::from_triplets(n, trip);
        let b = vec![1.0; n];
        let x = cg_solve(&a, &b, 1e-14, 1000).unwrap();
        let mut ax = vec![0.0; n];
        a.mul_vec(&x, &mut ax);
        for i in 0..n {
            assert!((ax[i] - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn triplet_accumulation() {
        let a = Csr::from_triplets(2, vec![(0, 0, 1.0), (0, 0, 2.0), (1, 1, 1.0), (0, 1, 0.5)]);
        assert_eq!(a.diagonal(), vec![3.0, 1.0]);
    }

    #[test]
    fn slope_fit_recovers_power_law() {
        let xs = [1.0, 0.5, 0.25, 0.125];
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 * x * x).collect();
        assert!((loglog_slope(&xs, &ys) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn cutoff_is_c1_at_joints() {
        let (v, d, _) = cutoff_profile(0.5, 0.5, 1.0);
        assert_eq!(v, 1.0);
        assert_eq!(d, 0.0);
        let (v1, d1, _) = cutoff_profile(0.5 + 1e-9, 0.5, 1.0);
        assert!((v1 - 1.0).abs() < 1e-12 && d1.abs() < 1e-6);
        let (v2, _, _) = cutoff_profile(0.75, 0.5, 1.0);
        assert!((v2 - 0.5).abs() < 1e-12); // symmetric midpoint
    }

    #[test]
    fn star_gradient_exact_on_linear() {
        let g = C64::new(0.35, -0.2); // ∂_z of f = 0.7x + 0.4y is (0.7 - 0.4i)/2
        let f = |z: C64| 0.7 * z.re + 0.4 * z.im;
        let dirs = [
            C64::new(0.1, 0.0),
            C64::new(0.0, 0.12),
            C64::new(-0.07, 0.05),
            C64::new(0.03, -0.11),
        ];
        let samples: Vec<(C64, f64)> = dirs.iter().map(|&d| (d, f(d))).collect();
        let got = star_gradient(&samples);
        assert!((got - g).norm() < 1e-14);
    }

    #[test]
    fn mls_quadratic_exact_on_quadratics() {
        let f = |z: C64| 1.0 + 2.0 * z.re - z.im + 0.5 * z.re * z.re + z.re * z.im;
        let mut samples = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                let dz = C64::new(0.05 * (i as f64 - 1.5), 0.05 * (j as f64 - 1.5));
                samples.push((dz, f(dz), 1.0));
            }
        }
        let (v, gz) = mls_quadratic(&samples).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
        // ∂_z f(0) = (2 - (-1) i)/2 = 1 + 0.5 i
        assert!((gz - C64::new(1.0, 0.5)).norm() < 1e-12);
    }
}
