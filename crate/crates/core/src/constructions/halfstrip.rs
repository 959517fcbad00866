//! Half-strip fans: the right half-plane split into horizontal half-strips
//! of pairwise distinct widths, each strip tiled by the unit-area triangle
//! fan from its closed-end top corner.
//!
//! This construction intentionally has unbounded perimeters and is not
//! locally finite (every strip apex lies in all triangles of its fan); the
//! verifier is expected to report exactly that.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::geom::{Point, Polygon};
use crate::math;

use super::{ConstructionError, Patch};

/// Emits the first `triangles_per_strip` fan triangles of each stacked strip.
///
/// Strip `i` of width `w` spans `y` in `[H, H + w]` with `H` the sum of the
/// previous widths; its fan apex sits at `(0, H + w)` and its bases of length
/// `2 / w` march along `y = H`, so every triangle has area exactly 1.
pub fn halfstrip_patch(
    strip_widths: &[f64],
    triangles_per_strip: usize,
) -> Result<Patch, ConstructionError> {
    if strip_widths.len() < 2 {
        return Err(ConstructionError::InvalidParams(
            "need at least two strips".to_string(),
        ));
    }
    if triangles_per_strip == 0 {
        return Err(ConstructionError::InvalidParams(
            "need at least one triangle per strip".to_string(),
        ));
    }
    for (i, &w) in strip_widths.iter().enumerate() {
        if !(w.is_finite() && w > 0.0) {
            return Err(ConstructionError::InvalidParams(
                "strip widths must be positive".to_string(),
            ));
        }
        for (j, &v) in strip_widths.iter().enumerate().skip(i + 1) {
            if math::abs(w - v) < 1e-9 {
                return Err(ConstructionError::DuplicateWidth { a: i, b: j });
            }
            // Widths w and 2/w make congruent first fan triangles (right
            // triangles with legs w and 2/w), so reject those pairs too.
            if math::abs(w * v - 2.0) < 1e-9 {
                return Err(ConstructionError::DuplicateWidth { a: i, b: j });
            }
        }
    }

    let mut tiles = Vec::with_capacity(strip_widths.len() * triangles_per_strip);
    let mut base_height = 0.0;
    for &w in strip_widths {
        let apex = Point::new(0.0, base_height + w);
        let step = 2.0 / w;
        for k in 0..triangles_per_strip {
            let b0 = Point::new(k as f64 * step, base_height);
            let b1 = Point::new((k + 1) as f64 * step, base_height);
            tiles.push(Polygon::new(vec![apex, b0, b1])?);
        }
        base_height += w;
    }

    let mut params = BTreeMap::new();
    for (i, &w) in strip_widths.iter().enumerate() {
        params.insert(alloc::format!("width_{i}"), w);
    }
    params.insert("triangles_per_strip".to_string(), triangles_per_strip as f64);
    Ok(Patch {
        tiles,
        construction: "halfstrip".to_string(),
        params,
        seed: 0,
        region: None,
    })
}
