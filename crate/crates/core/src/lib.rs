//! Clamped plate spectral toolkit.
//!
//! Computes eigenvalues of the clamped plate problem (the biharmonic operator
//! with u = du/dnu = 0 on the boundary) on planar domains, and evaluates the
//! classical eigenvalue bounds against them:
//!
//! * [`specfun`] — self-contained special functions (Gamma, Bessel J and I,
//!   unit-ball volumes) and the characteristic roots of the clamped disk.
//! * [`geometry`] — planar domains (disk, rectangle, polygon) with the
//!   geometric functionals the bounds consume: area, moment of inertia,
//!   boundary-layer volume, curvature bound, distance cutoff.
//! * [`spectra`] — the analytic disk spectrum and a finite-difference
//!   biharmonic solver with a sparse smallest-eigenvalue engine and
//!   Richardson extrapolation.
//! * [`bounds`] — closed-form evaluators for the lower/upper eigenvalue
//!   bounds, universal inequalities, and a piecewise-linear weighted-moment
//!   inequality checker.

pub mod bounds;
pub mod geometry;
pub mod specfun;
pub mod spectra;

pub use bounds::{BoundInputs, BoundReport, PsiFunction};
pub use geometry::{Domain, GeomSummary, Point};
pub use spectra::{DiscreteOperator, Spectrum};
