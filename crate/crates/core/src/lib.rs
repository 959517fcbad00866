//! Finite patches of plane tilings by pairwise non-congruent convex polygons
//! of unit area, together with independent verification of the claimed
//! properties.
//!
//! The crate is split into four layers:
//!
//! * [`geom`] — a small planar polygon kernel: areas, perimeters, convexity,
//!   congruence signatures, area-constrained vertex solvers and convex
//!   intersection.
//! * [`registry`] — a tolerance-aware store of congruence signatures with
//!   seeded rejection sampling, used by the generators to avoid emitting a
//!   tile congruent to one emitted earlier.
//! * [`constructions`] — the tiling generators. Each produces a finite
//!   [`constructions::Patch`] that grows deterministically from a seed.
//! * [`verifier`] — recomputes every claimed property (unit area, pairwise
//!   noncongruence, perimeter bounds, convexity, packing/coverage,
//!   vertex-to-vertex structure, normality radii) from tile geometry alone.
//!
//! The crate is `no_std` compatible (with `alloc`); the default `std` feature
//! only toggles conveniences in the `rand` dependency. All floating-point
//! transcendentals go through [`libm`] so that results are bit-identical
//! across platforms.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod geom;
pub mod registry;
pub mod constructions;
pub mod verifier;

mod math;

/// Comparison tolerance for geometric predicates (collinearity, endpoint
/// coincidence, signature equality under isometry).
pub const EPS_GEOM: f64 = 1e-9;

/// Tolerance for unit-area targets on generated tiles.
pub const EPS_AREA: f64 = 1e-9;

/// Default minimum admissible signature distance between registered shapes.
pub const DEFAULT_DELTA: f64 = 1e-6;

pub use geom::{
    convex_intersection_area, intersection_kind, signature_distance, solve_third_vertex,
    AreaSolution, Carrier, CongruenceSignature, GeomError, HalfLine, IntersectionKind, Point,
    Polygon,
};
pub use registry::{
    derive_seed, sample_avoiding, AvoidanceConfig, RegisterOutcome, RegistryError, ShapeRegistry,
};
pub use constructions::{ConstructionError, Patch};
pub use verifier::{verify, Check, CheckResult, CheckSpec, VerificationReport, Witness};
