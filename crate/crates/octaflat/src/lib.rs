//! Numerical laboratory for rank-2 Higgs-bundle geometry on the genus-2
//! octagon translation surface.
//!
//! The regular octagon with opposite sides glued by translation carries a
//! global flat coordinate z (one cone point of angle 6π at the identified
//! corners).  In that chart every geometric object in play becomes a scalar
//! or 2×2-matrix field, and the pipeline is:
//!
//! 1. [`surface`] — the octagon, a cone-graded triangulation of its quotient,
//!    and the discrete flat Laplacian / integration operators.
//! 2. [`higgs`] — the two built-in Higgs data families (Hitchin section and
//!    degree-zero) with their coefficient fields and the admissible (ħ, R)
//!    parameter domain.
//! 3. [`vortex`] — Newton solver for the R-scaled vortex equation
//!    `∂̄∂ log h = R² (|α|² h² − |β|² h⁻²)` in log variables, with a
//!    prescribed logarithmic background at the cone.
//! 4. [`connection`] — assembly of the flat family ∇_{ħ,R}, flatness
//!    residuals, parallel transport / holonomy along surface-group
//!    generators, and the R → 0 conformal limit.
//! 5. [`quasiconformal`] — the Beltrami field μ, the sinh-Gordon identity,
//!    extension classes and the Teichmüller-ray form in degree zero.
//! 6. [`reality`] — the real structure τ, its preservation residual and
//!    reality checks on holonomy traces.

pub mod connection;
pub mod error;
pub mod higgs;
pub mod numerics;
pub mod quasiconformal;
pub mod reality;
pub mod report;
pub mod sl2;
pub mod surface;
pub mod vortex;

pub use error::Error;

/// Convenience alias used throughout: complex numbers in the flat chart.
pub type C64 = num_complex::Complex64;
