//! Exact-arithmetic workbench for the symmetric covering `(P^1)^n -> P^n`,
//! its discriminant hypersurfaces and power lifts, orbifold invariants on
//! `P^1`, orbifold braid-group presentations with Todd-Coxeter enumeration,
//! and the line-orbit node census of the curves `L^(r/s)`.

pub mod exact;
pub mod groups;
pub mod orbifold;
pub mod weight;
pub mod geometry;
pub mod curves;
pub mod report;

pub use exact::{BigRational, ProjectivePoint};
pub use groups::{GroupSpec, MixedConvention, Presentation};
pub use report::{Provenance, Report, Status};
pub use weight::Weight;
