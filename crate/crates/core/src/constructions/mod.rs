//! The tiling generators.
//!
//! One generator per construction: half-strip fans, axis zigzags (single
//! quadrant and whole plane), bounded-perimeter triangle zigzags with fault
//! lines, square dissections into quadrangles (free and vertex-to-vertex),
//! hexagon dissections into pentagons, and 14-gon dissections into hexagons.
//! Every generator is deterministic in its parameters and seed.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::geom::{GeomError, Polygon};
use crate::registry::RegistryError;

mod halfstrip;
mod zigzag;
mod bounded;
mod squares;
mod hexpent;
mod fourteen;

pub use halfstrip::halfstrip_patch;
pub use zigzag::{zigzag_quadrant, zigzag_quadrant_with_area, zigzag_plane};
pub use bounded::{bounded_triangle_plane, bounded_triangle_quadrant};
pub use squares::{
    dissect_square, dissect_square_constrained, quad_patch_nonvtv, quad_patch_vtv,
    quad_patch_vtv_detailed, solve_square_dissection, EdgeId, PlacedSquare, SquareDissectionParams,
};
pub use hexpent::{dissect_hexagon, pentagon_patch, regular_hexagon_area3, HexDissectionParams};
pub use fourteen::{
    build_14gon, dissect_14gon, feasible_shift_interval, hexagon_patch_vtv, FourteenGonParams,
};

/// A finite collection of tiles plus the metadata needed to reproduce it.
#[derive(Debug, Clone)]
pub struct Patch {
    pub tiles: Vec<Polygon>,
    /// Construction name, e.g. `"bounded-triangles"`.
    pub construction: String,
    /// Numeric parameters of the construction.
    pub params: BTreeMap<String, f64>,
    /// Seed all randomized choices derive from.
    pub seed: u64,
    /// Region the tiles exactly cover, when the construction guarantees one.
    pub region: Option<Polygon>,
}

/// Errors shared by the generators.
#[derive(Debug, Clone)]
pub enum ConstructionError {
    /// Parameters violate the construction's admissibility box.
    InvalidParams(String),
    /// Two half-strip widths coincide.
    DuplicateWidth { a: usize, b: usize },
    /// Fixed boundary offsets admit no valid dissection.
    InfeasibleConstraint(String),
    /// The interior shift leaves the feasibility interval.
    InfeasibleShift { t: f64, lo: f64, hi: f64 },
    /// A deterministically forced tile collided with a registered shape.
    ForcedConflict { tile_index: usize, distance: f64 },
    /// Rejection sampling gave up.
    Registry(RegistryError),
    /// Invalid geometry produced or supplied.
    Geom(GeomError),
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::InvalidParams(msg) => write!(f, "invalid parameters: {msg}"),
            ConstructionError::DuplicateWidth { a, b } => {
                write!(f, "strip widths {a} and {b} coincide")
            }
            ConstructionError::InfeasibleConstraint(msg) => {
                write!(f, "infeasible boundary constraints: {msg}")
            }
            ConstructionError::InfeasibleShift { t, lo, hi } => {
                write!(f, "interior shift {t} outside feasible interval [{lo}, {hi}]")
            }
            ConstructionError::ForcedConflict {
                tile_index,
                distance,
            } => write!(
                f,
                "forced tile {tile_index} is congruent to a registered shape (distance {distance:.3e})"
            ),
            ConstructionError::Registry(e) => write!(f, "{e}"),
            ConstructionError::Geom(e) => write!(f, "{e}"),
        }
    }
}

impl From<RegistryError> for ConstructionError {
    fn from(e: RegistryError) -> Self {
        ConstructionError::Registry(e)
    }
}

impl From<GeomError> for ConstructionError {
    fn from(e: GeomError) -> Self {
        ConstructionError::Geom(e)
    }
}

impl core::error::Error for ConstructionError {}
