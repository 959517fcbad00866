//! Quadrant zigzags: triangles of fixed area zigzagging between the two
//! axes, and the four-quadrant assembly that maps the first quadrant into
//! the others by irrational area-preserving stretches.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::geom::{solve_third_vertex, Carrier, HalfLine, Point, Polygon};


use super::{ConstructionError, Patch};

/// Zigzag of `count` unit-area triangles in the upper right quadrant,
/// starting from base point `(x0, 0)`.
pub fn zigzag_quadrant(x0: f64, count: usize) -> Result<Patch, ConstructionError> {
    zigzag_quadrant_with_area(x0, count, 1.0)
}

/// Same zigzag with a configurable tile area (the classical picture uses
/// area 1/2).
pub fn zigzag_quadrant_with_area(
    x0: f64,
    count: usize,
    target_area: f64,
) -> Result<Patch, ConstructionError> {
    let tiles = zigzag_tiles(x0, count, target_area)?;
    let mut params = BTreeMap::new();
    params.insert("x0".to_string(), x0);
    params.insert("area".to_string(), target_area);
    params.insert("count".to_string(), count as f64);
    Ok(Patch {
        tiles,
        construction: "zigzag".to_string(),
        params,
        seed: 0,
        region: None,
    })
}

pub(super) fn zigzag_tiles(
    x0: f64,
    count: usize,
    target_area: f64,
) -> Result<Vec<Polygon>, ConstructionError> {
    if !(x0.is_finite() && x0 > 0.0) {
        return Err(ConstructionError::InvalidParams(
            "x0 must be positive".to_string(),
        ));
    }
    if count == 0 || !(target_area.is_finite() && target_area > 0.0) {
        return Err(ConstructionError::InvalidParams(
            "count and area must be positive".to_string(),
        ));
    }
    let horizontal = Carrier::Ray(HalfLine::new(Point::new(0.0, 0.0), Point::new(1.0, 0.0))?);
    let vertical = Carrier::Ray(HalfLine::new(Point::new(0.0, 0.0), Point::new(0.0, 1.0))?);

    let origin = Point::new(0.0, 0.0);
    let p_h = Point::new(x0, 0.0);
    // First triangle: origin, (x0, 0) and the unique third vertex up the
    // vertical axis.
    let first = outward(origin, p_h, &vertical, target_area, 0.0)?;
    let mut tiles = Vec::with_capacity(count);
    tiles.push(Polygon::new(vec![origin, p_h, first.point])?);

    // Front state: (older, newer) with the next vertex landing on the axis
    // of the older point.
    let mut older = p_h;
    let mut newer = first.point;
    let mut hi_h = x0;
    let mut hi_v = first.t;
    let mut next_horizontal = true;
    while tiles.len() < count {
        let (carrier, hi) = if next_horizontal {
            (&horizontal, &mut hi_h)
        } else {
            (&vertical, &mut hi_v)
        };
        let sol = outward(older, newer, carrier, target_area, *hi)?;
        tiles.push(Polygon::new(vec![older, newer, sol.point])?);
        *hi = sol.t;
        older = newer;
        newer = sol.point;
        next_horizontal = !next_horizontal;
    }
    Ok(tiles)
}

/// Picks the outward root: the carrier solution with the larger parameter.
fn outward(
    a: Point,
    b: Point,
    carrier: &Carrier,
    target_area: f64,
    min_t: f64,
) -> Result<crate::geom::AreaSolution, ConstructionError> {
    let sols = solve_third_vertex(a, b, carrier, target_area)?;
    sols.into_iter()
        .rev()
        .find(|s| s.t > min_t)
        .ok_or_else(|| ConstructionError::InvalidParams("no outward root on carrier".to_string()))
}

/// Four zigzag quadrants. Quadrant 1 is `zigzag_quadrant`; quadrant `k > 1`
/// is its image under the area-preserving map stretching by `q^(k-1)`
/// horizontally, shrinking by the same factor vertically, and reflecting
/// into place. An irrational `q` keeps tiles of different quadrants
/// non-congruent.
pub fn zigzag_plane(
    x0: f64,
    count_per_quadrant: usize,
    q: f64,
) -> Result<Patch, ConstructionError> {
    if !(q.is_finite() && q > 1.0) {
        return Err(ConstructionError::InvalidParams(
            "stretch factor q must exceed 1".to_string(),
        ));
    }
    let base = zigzag_tiles(x0, count_per_quadrant, 1.0)?;
    let mut tiles = Vec::with_capacity(4 * count_per_quadrant);
    tiles.extend(base.iter().cloned());
    for k in 1..4u32 {
        let f = powi(q, k);
        let (sx, sy) = match k {
            1 => (-f, 1.0 / f),         // upper left
            2 => (-f, -1.0 / f),        // lower left
            _ => (f, -1.0 / f),         // lower right
        };
        for t in &base {
            tiles.push(t.transform(|p| Point::new(sx * p.x, sy * p.y))?);
        }
    }
    let mut params = BTreeMap::new();
    params.insert("x0".to_string(), x0);
    params.insert("q".to_string(), q);
    params.insert("count_per_quadrant".to_string(), count_per_quadrant as f64);
    Ok(Patch {
        tiles,
        construction: "zigzag-plane".to_string(),
        params,
        seed: 0,
        region: None,
    })
}

fn powi(q: f64, k: u32) -> f64 {
    let mut f = 1.0;
    for _ in 0..k {
        f *= q;
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::signature_distance;
    use crate::math;

    fn has_vertex(t: &Polygon, x: f64, y: f64) -> bool {
        t.vertices()
            .iter()
            .any(|v| v.dist(Point::new(x, y)) < 1e-12)
    }

    #[test]
    fn first_three_triangles_match_hand_solutions() {
        let patch = zigzag_quadrant(2.0, 3).unwrap();
        let t = &patch.tiles;
        assert!(has_vertex(&t[0], 0.0, 0.0) && has_vertex(&t[0], 2.0, 0.0) && has_vertex(&t[0], 0.0, 1.0));
        assert!(has_vertex(&t[1], 2.0, 0.0) && has_vertex(&t[1], 0.0, 1.0) && has_vertex(&t[1], 4.0, 0.0));
        assert!(has_vertex(&t[2], 0.0, 1.0) && has_vertex(&t[2], 4.0, 0.0) && has_vertex(&t[2], 0.0, 1.5));
        for tri in t {
            assert!(math::abs(tri.signed_area() - 1.0) < 1e-12);
        }
    }

    #[test]
    fn half_area_variant() {
        let patch = zigzag_quadrant_with_area(1.0, 20, 0.5).unwrap();
        for t in &patch.tiles {
            assert!(math::abs(t.signed_area() - 0.5) < 1e-9);
        }
    }

    #[test]
    fn plane_quadrant_two_image() {
        let q = math::sqrt(2.0);
        let patch = zigzag_plane(2.0, 5, q).unwrap();
        assert_eq!(patch.tiles.len(), 20);
        let img = &patch.tiles[5]; // first tile of quadrant 2
        assert!(has_vertex(img, 0.0, 0.0));
        assert!(has_vertex(img, -2.0 * q, 0.0));
        assert!(has_vertex(img, 0.0, 1.0 / q));
        assert!(math::abs(img.signed_area() - 1.0) < 1e-12);
    }

    #[test]
    fn irrational_stretch_keeps_quadrants_noncongruent() {
        let patch = zigzag_plane(2.0, 50, math::sqrt(2.0)).unwrap();
        let q1: Vec<_> = patch.tiles[..50].iter().map(|t| t.signature()).collect();
        let q2: Vec<_> = patch.tiles[50..100].iter().map(|t| t.signature()).collect();
        for a in &q1 {
            for b in &q2 {
                assert!(signature_distance(a, b) > 1e-6);
            }
        }
    }
}
