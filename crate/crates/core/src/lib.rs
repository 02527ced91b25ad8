//! Exact-arithmetic kernel for the tropical side of degenerating Calabi-Yau
//! hypersurfaces in projective space.
//!
//! The crate is organized around six subsystems:
//!
//! - [`geom`]: rational polytopes, fans, exact linear algebra and LP;
//! - [`convex`]: piecewise-affine convex functions, Legendre transforms and
//!   monotone rational approximation (including the hybrid `(x, λ)` family);
//! - [`trop`]: tropicalization of the hypersurface family, its strata and the
//!   skeleton `∂P*` inside the compactified tropical toric variety;
//! - [`contract`]: branch cuts, the induced subdivision and discriminant
//!   locus, the tropical contraction `δ`, integral affine charts and the
//!   comparison-property checker;
//! - [`ma`]: real Monge-Ampère measures of piecewise-affine potentials and a
//!   semi-discrete solver on skeleton faces;
//! - [`valn`]: Gauss and quasi-monomial valuations over Laurent-series
//!   coefficients, hybrid logarithmic evaluation, and the Haar-vs-Gauss
//!   quadrature check.
//!
//! All combinatorial geometry is carried out over arbitrary-precision
//! rationals; floating point is confined to the Monge-Ampère solver and the
//! torus quadrature in [`valn`].

pub mod contract;
pub mod convex;
pub mod geom;
pub mod ma;
pub mod trop;
pub mod valn;

pub use geom::num::{Int, Rat};
