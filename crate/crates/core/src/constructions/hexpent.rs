//! Regular hexagons of area 3 dissected into three convex pentagons of unit
//! area, and the honeycomb patch built from them.
//!
//! One interior point near the hexagon centre is joined to three points near
//! the midpoints of alternating edges. Each pentagon consists of one full
//! hexagon edge, two cut edges and the two interior segments; fixing the
//! interior point and one cut point, the two remaining cut points are forced
//! linearly by the unit-area conditions.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::geom::{boundary_union, Point, Polygon};
use crate::math;
use crate::registry::{derive_seed, sample_avoiding, AvoidanceConfig, ShapeRegistry};

use super::{ConstructionError, Patch};

/// Offsets admissible for the interior point (Euclidean, from the centre)
/// and the cut point (along its edge, from the midpoint).
const OFFSET_BOUND: f64 = 0.1;
const SAMPLE_BOUND: f64 = 0.095;

/// Side length of the regular hexagon of area 3.
pub fn hexagon_side() -> f64 {
    // area = (3*sqrt(3)/2) s^2 = 3
    math::sqrt(2.0 / math::sqrt(3.0))
}

/// Unit direction to vertex `k` (angles are multiples of 60 degrees,
/// expressed through exact square roots).
fn hex_dir(k: usize) -> Point {
    let h = math::sqrt(3.0) / 2.0;
    match k % 6 {
        0 => Point::new(1.0, 0.0),
        1 => Point::new(0.5, h),
        2 => Point::new(-0.5, h),
        3 => Point::new(-1.0, 0.0),
        4 => Point::new(-0.5, -h),
        _ => Point::new(0.5, -h),
    }
}

/// The regular area-3 hexagon centred at `center`.
pub fn regular_hexagon_area3(center: Point) -> Polygon {
    let s = hexagon_side();
    Polygon::new((0..6).map(|k| center + hex_dir(k).scale(s)).collect())
        .expect("regular hexagon is a valid polygon")
}

/// Free parameters of one hexagon dissection.
#[derive(Debug, Clone, Copy)]
pub struct HexDissectionParams {
    /// Interior point offset from the hexagon centre.
    pub interior_offset: (f64, f64),
    /// Cut point offset along edge 0 (between vertices 0 and 1) from its
    /// midpoint.
    pub edge_offset: f64,
}

impl HexDissectionParams {
    fn validate(&self) -> Result<(), ConstructionError> {
        let (dx, dy) = self.interior_offset;
        let d = math::hypot(dx, dy);
        if !(d > 0.0 && d < OFFSET_BOUND) {
            return Err(ConstructionError::InvalidParams(format!(
                "interior point must sit within {OFFSET_BOUND} of the centre, offset norm {d}"
            )));
        }
        // Mirror axes run through vertices (0, 60, 120 degrees) and edge
        // midpoints (30, 90, 150 degrees).
        for k in 0..6 {
            let axis = rot30(k);
            if math::abs(axis.cross(Point::new(dx, dy))) <= 1e-9 * d {
                return Err(ConstructionError::InvalidParams(
                    "interior point must avoid the hexagon's mirror axes".to_string(),
                ));
            }
        }
        if math::abs(self.edge_offset) >= OFFSET_BOUND {
            return Err(ConstructionError::InvalidParams(format!(
                "edge offset must stay within {OFFSET_BOUND} of the midpoint, got {}",
                self.edge_offset
            )));
        }
        Ok(())
    }
}

fn rot30(k: usize) -> Point {
    let h = math::sqrt(3.0) / 2.0;
    match k % 6 {
        0 => Point::new(1.0, 0.0),
        1 => Point::new(h, 0.5),
        2 => Point::new(0.5, h),
        3 => Point::new(0.0, 1.0),
        4 => Point::new(-0.5, h),
        _ => Point::new(-h, 0.5),
    }
}

fn area_of(points: &[Point]) -> f64 {
    let n = points.len();
    let mut acc = 0.0;
    for i in 0..n {
        acc += points[i].cross(points[(i + 1) % n]);
    }
    0.5 * acc
}

/// Pure solver: given the interior point and the cut offset on edge 0, the
/// cut offsets on edges 2 and 4 are forced by the unit-area conditions.
pub(super) fn solve_hexagon_dissection(
    center: Point,
    interior: Point,
    t0: f64,
) -> Result<[Polygon; 3], ConstructionError> {
    let s = hexagon_side();
    let v: Vec<Point> = (0..6).map(|k| center + hex_dir(k).scale(s)).collect();
    let edge_dir = |k: usize| (v[(k + 1) % 6] - v[k]).scale(1.0 / s);
    let mid = |k: usize| (v[k] + v[(k + 1) % 6]).scale(0.5);

    let half = 0.5 * s;
    for (name, t) in [("edge 0", t0)] {
        if math::abs(t) >= half {
            return Err(ConstructionError::InfeasibleConstraint(format!(
                "cut point on {name} falls off its edge"
            )));
        }
    }
    let m0 = mid(0) + edge_dir(0).scale(t0);

    // Pentagon 0 = [m0, v1, v2, m2(t2), interior]: affine in t2.
    let pent0 = |t2: f64| {
        let m2 = mid(2) + edge_dir(2).scale(t2);
        [m0, v[1], v[2], m2, interior]
    };
    let t2 = solve_affine(|t| area_of(&pent0(t)), 1.0)?;
    let m2 = mid(2) + edge_dir(2).scale(t2);

    let pent1 = |t4: f64| {
        let m4 = mid(4) + edge_dir(4).scale(t4);
        [m2, v[3], v[4], m4, interior]
    };
    let t4 = solve_affine(|t| area_of(&pent1(t)), 1.0)?;
    let m4 = mid(4) + edge_dir(4).scale(t4);

    for (name, t) in [("edge 2", t2), ("edge 4", t4)] {
        if math::abs(t) >= half {
            return Err(ConstructionError::InfeasibleConstraint(format!(
                "cut point on {name} falls off its edge"
            )));
        }
    }

    let p0 = Polygon::new(pent0(t2).to_vec())?;
    let p1 = Polygon::new(pent1(t4).to_vec())?;
    let p2 = Polygon::new(vec![m4, v[5], v[0], m0, interior])?;
    debug_assert!(math::abs(p2.signed_area() - 1.0) < 1e-9);
    Ok([p0, p1, p2])
}

/// Solves `f(t) = target` for an affine `f`.
fn solve_affine<F: Fn(f64) -> f64>(f: F, target: f64) -> Result<f64, ConstructionError> {
    let f0 = f(0.0);
    let slope = f(1.0) - f0;
    if math::abs(slope) < 1e-12 {
        return Err(ConstructionError::InfeasibleConstraint(
            "degenerate area equation".to_string(),
        ));
    }
    Ok((target - f0) / slope)
}

/// Dissects the regular area-3 hexagon at `center` into three convex
/// pentagons of unit area.
pub fn dissect_hexagon(
    center: Point,
    params: &HexDissectionParams,
) -> Result<[Polygon; 3], ConstructionError> {
    params.validate()?;
    let interior = center + Point::new(params.interior_offset.0, params.interior_offset.1);
    let pents = solve_hexagon_dissection(center, interior, params.edge_offset)?;
    for p in &pents {
        if !p.is_convex() {
            return Err(ConstructionError::InvalidParams(
                "dissection produced a non-convex pentagon".to_string(),
            ));
        }
    }
    Ok(pents)
}

const BASE_PARAMS: [f64; 3] = [0.05, 0.03, 0.04];

/// Honeycomb patch of dissected hexagons out to `rings` (1, 7, 19, ...
/// hexagons), every pentagon registered against one shared registry. Not
/// vertex-to-vertex: adjacent hexagons cut their shared edges independently.
pub fn pentagon_patch(rings: usize, seed: u64) -> Result<Patch, ConstructionError> {
    let s = hexagon_side();
    let lattice_a = rot30(1).scale(math::sqrt(3.0) * s);
    let lattice_b = Point::new(0.0, math::sqrt(3.0) * s);
    let rr = rings as i64;

    let mut registry = ShapeRegistry::default();
    let mut tiles = Vec::new();
    let mut hosts = Vec::new();
    let mut k = 0u64;
    for q in -rr..=rr {
        let r_lo = (-rr).max(-q - rr);
        let r_hi = rr.min(-q + rr);
        for r in r_lo..=r_hi {
            let center = lattice_a.scale(q as f64) + lattice_b.scale(r as f64);
            hosts.push(regular_hexagon_area3(center));
            let cfg = AvoidanceConfig::new(derive_seed(seed, k));
            let gen = |p: &[f64]| {
                let params = HexDissectionParams {
                    interior_offset: (p[0], p[1]),
                    edge_offset: p[2],
                };
                dissect_hexagon(center, &params).ok().map(|t| t.to_vec())
            };
            let bounds = [(-SAMPLE_BOUND, SAMPLE_BOUND); 3];
            let (_, pents) = sample_avoiding(&mut registry, &cfg, gen, &BASE_PARAMS, &bounds)?;
            tiles.extend(pents);
            k += 1;
        }
    }
    let region = boundary_union(&hosts, 1e-9).ok();
    let mut params = BTreeMap::new();
    params.insert("rings".to_string(), rings as f64);
    Ok(Patch {
        tiles,
        construction: "pentagon".to_string(),
        params,
        seed,
        region,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::signature_distance;

    #[test]
    fn symmetric_solver_sanity() {
        // Centre and midpoint: outside the admissible box, but yields three
        // congruent pentagons related by 120-degree rotation.
        let c = Point::new(0.0, 0.0);
        let pents = solve_hexagon_dissection(c, c, 0.0).unwrap();
        let sigs: Vec<_> = pents.iter().map(|p| p.signature()).collect();
        for p in &pents {
            assert!(math::abs(p.signed_area() - 1.0) < 1e-12);
        }
        assert!(signature_distance(&sigs[0], &sigs[1]) < 1e-9);
        assert!(signature_distance(&sigs[1], &sigs[2]) < 1e-9);
    }

    #[test]
    fn perturbed_dissection_fixture() {
        let params = HexDissectionParams {
            interior_offset: (0.05, 0.03),
            edge_offset: 0.04,
        };
        let pents = dissect_hexagon(Point::new(0.0, 0.0), &params).unwrap();
        let total: f64 = pents.iter().map(|p| p.signed_area()).sum();
        assert!(math::abs(total - 3.0) < 1e-12);
        let sigs: Vec<_> = pents.iter().map(|p| p.signature()).collect();
        for i in 0..3 {
            assert!(math::abs(pents[i].signed_area() - 1.0) < 1e-12);
            assert!(pents[i].is_convex());
            for j in (i + 1)..3 {
                assert!(signature_distance(&sigs[i], &sigs[j]) > 1e-4);
            }
        }
    }

    #[test]
    fn on_axis_interior_point_rejected() {
        let params = HexDissectionParams {
            interior_offset: (0.05, 0.0),
            edge_offset: 0.04,
        };
        assert!(matches!(
            dissect_hexagon(Point::new(0.0, 0.0), &params),
            Err(ConstructionError::InvalidParams(_))
        ));
    }

    #[test]
    fn ring_counts() {
        let p0 = pentagon_patch(0, 42).unwrap();
        assert_eq!(p0.tiles.len(), 3);
        let p1 = pentagon_patch(1, 42).unwrap();
        assert_eq!(p1.tiles.len(), 21);
        assert!(p1.region.is_some());
    }

    #[test]
    fn perimeters_bounded_by_host_geometry() {
        let patch = pentagon_patch(1, 42).unwrap();
        let s = hexagon_side();
        // Every pentagon boundary is covered by parts of its host hexagon
        // plus two interior segments of length < s each.
        let bound = 6.0 * s + 2.0 * s;
        for t in &patch.tiles {
            assert!(t.perimeter() < bound);
        }
    }
}
