//! The flat genus-2 model: a regular octagon with opposite sides glued by
//! translation.
//!
//! All eight corners are identified to a single point where the total angle
//! is 8 · 3π/4 = 6π, i.e. a cone of angle 2π(m+1) with m = 2 — the order-2
//! zero of the abelian differential ω = dz.  Away from that point the chart
//! z is global: every transition map is a translation, so dz is well defined
//! on the whole surface and scalar coefficient fields never need transition
//! factors.

mod mesh;
mod triangulate;

pub use mesh::{Face, Mesh};
pub use triangulate::{triangulate, MeshOptions};

use crate::error::{Error, Result};
use crate::C64;

/// Polygon with side identifications by translation.
#[derive(Debug, Clone)]
pub struct TranslationSurface {
    /// Corners in counterclockwise order; side k runs from corner k to k+1.
    pub polygon_vertices: Vec<C64>,
    /// (side, partner side, translation mapping the first onto the second).
    pub edge_pairings: Vec<(usize, usize, C64)>,
    /// (corner class representative, total cone angle).
    pub cone_points: Vec<(usize, f64)>,
    pub genus: usize,
}

impl TranslationSurface {
    /// The regular octagon of the given circumradius, centered at the
    /// origin, with opposite sides identified.
    pub fn octagon(circumradius: f64) -> Result<TranslationSurface> {
        if !(circumradius > 0.0) || !circumradius.is_finite() {
            return Err(Error::InvalidInput(format!(
                "circumradius must be positive, got {circumradius}"
            )));
        }
        let verts: Vec<C64> = (0..8)
            .map(|j| {
                let th = std::f64::consts::PI / 4.0 * j as f64;
                C64::new(circumradius * th.cos(), circumradius * th.sin())
            })
            .collect();
        let pairings = (0..4)
            .map(|k| {
                let t = -(verts[k] + verts[(k + 1) % 8]);
                (k, k + 4, t)
            })
            .collect();
        let surface = TranslationSurface {
            polygon_vertices: verts,
            edge_pairings: pairings,
            cone_points: vec![(0, 6.0 * std::f64::consts::PI)],
            genus: 2,
        };
        surface.validate()?;
        Ok(surface)
    }

    pub fn num_sides(&self) -> usize {
        self.polygon_vertices.len()
    }

    /// Side k as (start corner, end corner).
    pub fn side(&self, k: usize) -> (C64, C64) {
        let n = self.num_sides();
        (self.polygon_vertices[k], self.polygon_vertices[(k + 1) % n])
    }

    pub fn side_midpoint(&self, k: usize) -> C64 {
        let (a, b) = self.side(k);
        (a + b) * 0.5
    }

    /// Translation applied to a point leaving the polygon through side k.
    pub fn pairing_translation(&self, k: usize) -> C64 {
        for &(a, b, t) in &self.edge_pairings {
            if a == k {
                return t;
            }
            if b == k {
                return -t;
            }
        }
        unreachable!("side {k} has no pairing")
    }

    /// Shoelace area of the polygon.
    pub fn polygon_area(&self) -> f64 {
        let v = &self.polygon_vertices;
        let n = v.len();
        let mut twice = 0.0;
        for i in 0..n {
            let j = (i + 1) % n;
            twice += v[i].re * v[j].im - v[j].re * v[i].im;
        }
        0.5 * twice
    }

    /// Σ over cone points of (2π − θ); equals 2π(2 − 2g) for a closed
    /// translation surface.
    pub fn gauss_bonnet_defect(&self) -> f64 {
        self.cone_points
            .iter()
            .map(|&(_, th)| 2.0 * std::f64::consts::PI - th)
            .sum()
    }

    /// Flat distance from z to the nearest polygon corner.  Inside the
    /// cutoff neighbourhood of the cone this is the intrinsic distance to
    /// the cone point.
    pub fn corner_distance(&self, z: C64) -> f64 {
        self.polygon_vertices
            .iter()
            .map(|&v| (z - v).norm())
            .fold(f64::INFINITY, f64::min)
    }

    /// Outward unit normal of side k.
    pub fn side_normal(&self, k: usize) -> C64 {
        let (a, b) = self.side(k);
        let d = (b - a) / (b - a).norm();
        // interior lies to the left of the CCW boundary
        C64::new(d.im, -d.re)
    }

    /// Signed distance from z to the line of side k (positive outside).
    pub fn side_offset(&self, k: usize, z: C64) -> f64 {
        let (a, _) = self.side(k);
        let n = self.side_normal(k);
        n.re * (z - a).re + n.im * (z - a).im
    }

    pub fn contains(&self, z: C64, tol: f64) -> bool {
        (0..self.num_sides()).all(|k| self.side_offset(k, z) <= tol)
    }

    /// First side crossed by the segment p → q starting inside; returns the
    /// side index and the parameter t ∈ (0, 1] of the crossing, or None if
    /// the whole segment stays inside.
    pub fn exit_side(&self, p: C64, q: C64) -> Option<(usize, f64)> {
        let mut best: Option<(usize, f64)> = None;
        for k in 0..self.num_sides() {
            let sp = self.side_offset(k, p);
            let sq = self.side_offset(k, q);
            if sq > 0.0 && sq > sp {
                let t = sp / (sp - sq);
                if t <= 1.0 && (t >= 0.0) && best.map_or(true, |(_, bt)| t < bt) {
                    best = Some((k, t));
                }
            }
        }
        best
    }

    /// Structural invariants: pairings form a fixed-point-free involution of
    /// parallel, equal-length, oppositely-oriented sides related by the
    /// stored translation.
    pub fn validate(&self) -> Result<()> {
        let n = self.num_sides();
        let mut seen = vec![false; n];
        let scale = self
            .polygon_vertices
            .iter()
            .map(|v| v.norm())
            .fold(0.0f64, f64::max);
        let tol = 1e-12 * scale.max(1.0);
        for &(a, b, t) in &self.edge_pairings {
            if a == b {
                return Err(Error::InvalidInput(format!("side {a} paired with itself")));
            }
            if seen[a] || seen[b] {
                return Err(Error::InvalidInput("side appears in two pairings".into()));
            }
            seen[a] = true;
            seen[b] = true;
            let (pa, pb) = self.side(a);
            let (qa, qb) = self.side(b);
            // translation maps side a onto side b with reversed orientation
            if (pa + t - qb).norm() > tol || (pb + t - qa).norm() > tol {
                return Err(Error::InvalidInput(format!(
                    "pairing ({a},{b}) translation does not match side geometry"
                )));
            }
            let da = pb - pa;
            let db = qb - qa;
            if (da + db).norm() > tol {
                return Err(Error::InvalidInput(format!(
                    "paired sides ({a},{b}) are not antiparallel translates"
                )));
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidInput("unpaired side".into()));
        }
        // Gauss–Bonnet for the closed surface
        let expect = 2.0 * std::f64::consts::PI * (2.0 - 2.0 * self.genus as f64);
        if (self.gauss_bonnet_defect() - expect).abs() > 1e-9 {
            return Err(Error::InvalidInput(format!(
                "cone angles violate Gauss–Bonnet: defect {} vs {}",
                self.gauss_bonnet_defect(),
                expect
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octagon_combinatorics() {
        let s = TranslationSurface::octagon(1.0).unwrap();
        assert_eq!(s.num_sides(), 8);
        assert_eq!(s.genus, 2);
        assert_eq!(s.cone_points.len(), 1);
        assert!((s.cone_points[0].1 - 6.0 * std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn gauss_bonnet_defect_is_minus_4pi() {
        for r in [0.5, 1.0, 3.7] {
            let s = TranslationSurface::octagon(r).unwrap();
            assert!((s.gauss_bonnet_defect() + 4.0 * std::f64::consts::PI).abs() < 1e-12);
        }
    }

    #[test]
    fn area_matches_closed_form() {
        // shoelace against the regular octagon formula 2√2 ρ²
        let s = TranslationSurface::octagon(2.0).unwrap();
        let expect = 2.0 * 2.0f64.sqrt() * 4.0;
        assert!((s.polygon_area() - expect).abs() < 1e-12);
    }

    #[test]
    fn pairing_translation_lands_on_partner_side() {
        let s = TranslationSurface::octagon(1.0).unwrap();
        for k in 0..8 {
            let m = s.side_midpoint(k);
            let img = m + s.pairing_translation(k);
            let partner = (k + 4) % 8;
            assert!(s.side_offset(partner, img).abs() < 1e-12);
            assert!((img - s.side_midpoint(partner)).norm() < 1e-12);
        }
    }

    #[test]
    fn exit_side_finds_first_crossing() {
        let s = TranslationSurface::octagon(1.0).unwrap();
        let m0 = s.side_midpoint(0);
        let (k, t) = s.exit_side(C64::ZERO, m0 * 2.0).unwrap();
        assert_eq!(k, 0);
        assert!((t - 0.5).abs() < 1e-12);
        assert!(s.exit_side(C64::ZERO, m0 * 0.5).is_none());
    }
}
