//! Square dissections into four unit-area quadrangles.
//!
//! A side-2 square with an interior point near its centre and one boundary
//! point near an edge midpoint splits into four quadrangles whose areas pin
//! down the remaining three boundary points linearly. In square-local
//! coordinates (corner at (0,0)) with interior point `(px, py)` and boundary
//! coordinates `b, r, t, l` (bottom/right/top/left, each near 1), the four
//! corner area conditions read
//!
//! ```text
//! b*py + l*px = 2                      (corner 0,0)
//! (2-b)*py + r*(2-px) = 2              (corner 2,0)
//! (2-t)*(2-py) + (2-r)*(2-px) = 2      (corner 2,2)
//! t*(2-py) + (2-l)*px = 2              (corner 0,2)
//! ```
//!
//! and any three imply the fourth. With two fixed adjacent boundary
//! coordinates the centre is confined to a line, which is exactly the
//! degree-of-freedom bookkeeping the vertex-to-vertex patch exploits.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::geom::{Point, Polygon};
use crate::math;
use crate::registry::{derive_seed, sample_avoiding, AvoidanceConfig, ShapeRegistry};

use super::{ConstructionError, Patch};

/// Admissible box half-width for the interior point and boundary offsets.
const OFFSET_BOUND: f64 = 0.1;
/// Sampling stays slightly inside the open admissibility box.
const SAMPLE_BOUND: f64 = 0.095;
/// Sanity bound for inherited boundary offsets: dependent points of a valid
/// dissection can land up to ~0.15 off their edge midpoint, so neighbours
/// legitimately hand us offsets beyond the free-parameter box.
const FIXED_OFFSET_BOUND: f64 = 0.2;

/// Free parameters of a square dissection: interior point offset from the
/// centre and the bottom boundary point's offset from its edge midpoint.
#[derive(Debug, Clone, Copy)]
pub struct SquareDissectionParams {
    pub center_offset: (f64, f64),
    pub boundary_offset: f64,
}

impl SquareDissectionParams {
    fn validate(&self) -> Result<(), ConstructionError> {
        let (cx, cy) = self.center_offset;
        let d = math::hypot(cx, cy);
        if !(d > 0.0 && d < OFFSET_BOUND) {
            return Err(ConstructionError::InvalidParams(format!(
                "interior point must sit within {OFFSET_BOUND} of the centre, offset norm {d}"
            )));
        }
        if cx == 0.0 || cy == 0.0 || math::abs(math::abs(cx) - math::abs(cy)) < 1e-12 {
            return Err(ConstructionError::InvalidParams(
                "interior point must avoid the square's mirror axes".to_string(),
            ));
        }
        let b = self.boundary_offset;
        if !(b != 0.0 && math::abs(b) < OFFSET_BOUND) {
            return Err(ConstructionError::InvalidParams(format!(
                "boundary offset must lie in (0, {OFFSET_BOUND}), got {b}"
            )));
        }
        Ok(())
    }
}

/// Identifies an edge of the square; offsets of boundary points are measured
/// from the edge midpoint, along +x for horizontal and +y for vertical edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum EdgeId {
    Bottom,
    Right,
    Top,
    Left,
}

/// Boundary coordinates of one dissection, local to the side-2 square:
/// `b`/`t` are x-coordinates on the bottom/top edge, `r`/`l` y-coordinates
/// on the right/left edge.
#[derive(Debug, Clone, Copy)]
struct BoundaryCoords {
    b: f64,
    r: f64,
    t: f64,
    l: f64,
}

/// Pure linear solver: given the interior point and the bottom coordinate,
/// the other three boundary coordinates are forced by the area conditions.
/// No admissibility validation beyond solvability; used directly only by
/// tests of the solver itself.
pub fn solve_square_dissection(
    origin: Point,
    interior_local: Point,
    bottom_coord: f64,
) -> Result<[Polygon; 4], ConstructionError> {
    let (px, py) = (interior_local.x, interior_local.y);
    if !(0.0 < px && px < 2.0 && 0.0 < py && py < 2.0 && 0.0 < bottom_coord && bottom_coord < 2.0)
    {
        return Err(ConstructionError::InvalidParams(
            "interior point and bottom coordinate must lie inside the square".to_string(),
        ));
    }
    let b = bottom_coord;
    let l = (2.0 - b * py) / px;
    let r = (2.0 - py * (2.0 - b)) / (2.0 - px);
    let t = 2.0 - (2.0 - (2.0 - r) * (2.0 - px)) / (2.0 - py);
    let coords = BoundaryCoords { b, r, t, l };
    for (name, v) in [("left", l), ("right", r), ("top", t)] {
        if !(0.0 < v && v < 2.0) {
            return Err(ConstructionError::InfeasibleConstraint(format!(
                "{name} boundary point at coordinate {v} falls off its edge"
            )));
        }
    }
    let quads = build_quadrangles(origin, Point::new(px, py), coords)?;
    // The fourth area closes by construction; keep an exactness guard.
    debug_assert!(math::abs(quads[3].signed_area() - 1.0) < 1e-9);
    Ok(quads)
}

fn build_quadrangles(
    origin: Point,
    p_local: Point,
    c: BoundaryCoords,
) -> Result<[Polygon; 4], ConstructionError> {
    let at = |x: f64, y: f64| Point::new(origin.x + x, origin.y + y);
    let p = at(p_local.x, p_local.y);
    let pb = at(c.b, 0.0);
    let pr = at(2.0, c.r);
    let pt = at(c.t, 2.0);
    let pl = at(0.0, c.l);
    let qa = Polygon::new(vec![at(0.0, 0.0), pb, p, pl])?;
    let qb = Polygon::new(vec![at(2.0, 0.0), pr, p, pb])?;
    let qc = Polygon::new(vec![at(2.0, 2.0), pt, p, pr])?;
    let qd = Polygon::new(vec![at(0.0, 2.0), pl, p, pt])?;
    Ok([qa, qb, qc, qd])
}

/// Dissects the axis-aligned side-2 square at `origin` into four convex
/// quadrangles of unit area.
pub fn dissect_square(
    origin: Point,
    params: &SquareDissectionParams,
) -> Result<[Polygon; 4], ConstructionError> {
    params.validate()?;
    let p_local = Point::new(1.0 + params.center_offset.0, 1.0 + params.center_offset.1);
    let quads = solve_square_dissection(origin, p_local, 1.0 + params.boundary_offset)?;
    for q in &quads {
        if !q.is_convex() {
            return Err(ConstructionError::InvalidParams(
                "dissection produced a non-convex quadrangle".to_string(),
            ));
        }
    }
    Ok(quads)
}

/// Interior-point y as an affine function of x when two adjacent boundary
/// coordinates are fixed, from the corner area condition they share.
fn center_line(
    fixed: &BTreeMap<EdgeId, f64>,
) -> Result<(f64, f64), ConstructionError> {
    let coord = |e: EdgeId| fixed.get(&e).map(|o| 1.0 + o);
    // py = alpha + beta * px
    match (
        coord(EdgeId::Bottom),
        coord(EdgeId::Right),
        coord(EdgeId::Top),
        coord(EdgeId::Left),
    ) {
        (Some(b), None, None, Some(l)) => Ok((2.0 / b, -l / b)),
        (Some(b), Some(r), None, None) => Ok(((2.0 - 2.0 * r) / (2.0 - b), r / (2.0 - b))),
        (None, Some(r), Some(t), None) => {
            // (2-t)(2-py) + (2-r)(2-px) = 2
            let alpha = 2.0 - (2.0 - 2.0 * (2.0 - r)) / (2.0 - t);
            let beta = -(2.0 - r) / (2.0 - t);
            Ok((alpha, beta))
        }
        (None, None, Some(t), Some(l)) => {
            // t(2-py) + (2-l)px = 2
            Ok((2.0 - 2.0 / t, (2.0 - l) / t))
        }
        _ => Err(ConstructionError::InfeasibleConstraint(
            "fixed edges must form an adjacent pair".to_string(),
        )),
    }
}

/// Feasible interval of `px` keeping the constrained centre within `rho` of
/// the square centre.
fn center_interval(
    fixed: &BTreeMap<EdgeId, f64>,
    rho: f64,
) -> Result<(f64, f64), ConstructionError> {
    let (alpha, beta) = center_line(fixed)?;
    // |(px-1, alpha + beta*px - 1)|^2 <= rho^2
    let g = alpha - 1.0;
    let a = 1.0 + beta * beta;
    let b = 2.0 * (beta * g - 1.0);
    let c = 1.0 + g * g - rho * rho;
    let disc = b * b - 4.0 * a * c;
    if disc <= 0.0 {
        return Err(ConstructionError::InfeasibleConstraint(
            "constraint line misses the admissible centre ball".to_string(),
        ));
    }
    let sq = math::sqrt(disc);
    Ok(((-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)))
}

/// Solves the dissection with 0-2 boundary offsets fixed by already-placed
/// neighbours. Free parameters, in order:
///
/// * no fixed offsets: `[px_off, py_off, b_off]` (reduces to [`dissect_square`]'s
///   parameterization),
/// * one fixed offset: `[px_off, py_off]`,
/// * two fixed offsets (adjacent edges): `[px]` in absolute square-local
///   coordinates; the centre slides along its constraint line.
pub fn dissect_square_constrained(
    origin: Point,
    fixed: &BTreeMap<EdgeId, f64>,
    free: &[f64],
) -> Result<[Polygon; 4], ConstructionError> {
    if fixed.len() > 2 {
        return Err(ConstructionError::InfeasibleConstraint(format!(
            "at most two fixed boundary offsets supported, got {}",
            fixed.len()
        )));
    }
    for (&e, &o) in fixed {
        if math::abs(o) >= FIXED_OFFSET_BOUND {
            return Err(ConstructionError::InfeasibleConstraint(format!(
                "fixed offset {o} on {e:?} exceeds sanity bound {FIXED_OFFSET_BOUND}"
            )));
        }
    }
    let expected = 3 - fixed.len();
    if free.len() != expected {
        return Err(ConstructionError::InvalidParams(format!(
            "expected {expected} free parameters for {} fixed offsets, got {}",
            fixed.len(),
            free.len()
        )));
    }

    let (px, py) = match fixed.len() {
        2 => {
            let (alpha, beta) = center_line(fixed)?;
            let px = free[0];
            (px, alpha + beta * px)
        }
        _ => (1.0 + free[0], 1.0 + free[1]),
    };
    let p = Point::new(px, py);
    let dist = math::hypot(px - 1.0, py - 1.0);
    if dist > OFFSET_BOUND {
        return Err(ConstructionError::InfeasibleConstraint(format!(
            "centre at distance {dist} from the square centre exceeds {OFFSET_BOUND}"
        )));
    }

    // Recover the bottom coordinate from whatever is fixed.
    let coord = |e: EdgeId| fixed.get(&e).map(|o| 1.0 + o);
    let b = if fixed.is_empty() {
        1.0 + free[2]
    } else if let Some(b) = coord(EdgeId::Bottom) {
        b
    } else if let Some(l) = coord(EdgeId::Left) {
        (2.0 - l * px) / py
    } else if let Some(r) = coord(EdgeId::Right) {
        2.0 - (2.0 - r * (2.0 - px)) / py
    } else {
        let t = coord(EdgeId::Top).expect("nonempty fixed set");
        let l = 2.0 - (2.0 - t * (2.0 - py)) / px;
        (2.0 - l * px) / py
    };

    let quads = solve_square_dissection(origin, p, b)?;
    // Consistency: every fixed offset must be reproduced by the solve.
    let check = boundary_coords_of(&quads, origin);
    for (&e, &o) in fixed {
        let got = match e {
            EdgeId::Bottom => check.b,
            EdgeId::Right => check.r,
            EdgeId::Top => check.t,
            EdgeId::Left => check.l,
        };
        debug_assert!(
            math::abs(got - (1.0 + o)) < 1e-9,
            "fixed boundary not reproduced"
        );
    }
    for q in &quads {
        if !q.is_convex() {
            return Err(ConstructionError::InfeasibleConstraint(
                "constrained dissection produced a non-convex quadrangle".to_string(),
            ));
        }
    }
    Ok(quads)
}

/// Reads the four boundary coordinates back off the quadrangles.
fn boundary_coords_of(quads: &[Polygon; 4], origin: Point) -> BoundaryCoords {
    // Quadrangle layout: [corner, boundary point, centre, previous boundary point].
    let local = |p: Point| Point::new(p.x - origin.x, p.y - origin.y);
    let b = local(quads[0].vertices()[1]).x;
    let r = local(quads[1].vertices()[1]).y;
    let t = local(quads[2].vertices()[1]).x;
    let l = local(quads[3].vertices()[1]).y;
    BoundaryCoords { b, r, t, l }
}

const BASE_PARAMS: [f64; 3] = [0.05, 0.03, 0.04];

/// Lattice of independently dissected squares: normal but not
/// vertex-to-vertex, since adjacent squares subdivide their shared edge at
/// unrelated points.
pub fn quad_patch_nonvtv(grid_radius: usize, seed: u64) -> Result<Patch, ConstructionError> {
    let r = grid_radius as i64;
    let side_cells = 2 * r + 1;
    let mut registry = ShapeRegistry::default();
    let mut tiles = Vec::with_capacity((side_cells * side_cells) as usize * 4);
    let mut k = 0u64;
    for j in -r..=r {
        for i in -r..=r {
            let origin = Point::new(2.0 * (i + r) as f64, 2.0 * (j + r) as f64);
            let cfg = AvoidanceConfig::new(derive_seed(seed, k));
            let gen = |p: &[f64]| {
                let params = SquareDissectionParams {
                    center_offset: (p[0], p[1]),
                    boundary_offset: p[2],
                };
                dissect_square(origin, &params).ok().map(|q| q.to_vec())
            };
            let bounds = [(-SAMPLE_BOUND, SAMPLE_BOUND); 3];
            let (_, quads) = sample_avoiding(&mut registry, &cfg, gen, &BASE_PARAMS, &bounds)?;
            tiles.extend(quads);
            k += 1;
        }
    }
    let side = 2.0 * side_cells as f64;
    let region = Polygon::new(vec![
        Point::new(0.0, 0.0),
        Point::new(side, 0.0),
        Point::new(side, side),
        Point::new(0.0, side),
    ])?;
    let mut params = BTreeMap::new();
    params.insert("grid_radius".to_string(), grid_radius as f64);
    Ok(Patch {
        tiles,
        construction: "quad".to_string(),
        params,
        seed,
        region: Some(region),
    })
}

/// A square placed by the vertex-to-vertex growth order, with the number of
/// free parameters that survived its boundary constraints.
#[derive(Debug, Clone, Copy)]
pub struct PlacedSquare {
    pub pos: (i64, i64),
    pub dof: usize,
}

/// Fig-style spiral order: centre, then per ring the four axis squares first
/// and the ring filled towards its corners, so every square inherits at most
/// two (adjacent) fixed edges.
fn spiral_order(rings: usize) -> Vec<(i64, i64)> {
    let mut out = vec![(0i64, 0i64)];
    for r in 1..=rings as i64 {
        out.extend([(r, 0), (0, r), (-r, 0), (0, -r)]);
        for d in 1..r {
            out.extend([
                (r, d),
                (d, r),
                (-d, r),
                (-r, d),
                (-r, -d),
                (-d, -r),
                (d, -r),
                (r, -d),
            ]);
        }
        if r >= 1 {
            out.extend([(r, r), (-r, r), (-r, -r), (r, -r)]);
        }
    }
    out
}

/// Vertex-to-vertex quadrangle patch: squares added in spiral order, each
/// dissected so that shared edges are subdivided at the same point.
pub fn quad_patch_vtv(rings: usize, seed: u64) -> Result<Patch, ConstructionError> {
    Ok(quad_patch_vtv_detailed(rings, seed)?.0)
}

/// Like [`quad_patch_vtv`] but also reports the degree-of-freedom rank of
/// every placed square (3 for the centre, 2 with one inherited edge, 1 with
/// two).
pub fn quad_patch_vtv_detailed(
    rings: usize,
    seed: u64,
) -> Result<(Patch, Vec<PlacedSquare>), ConstructionError> {
    let r = rings as i64;
    let order = spiral_order(rings);
    let mut registry = ShapeRegistry::default();
    let mut tiles = Vec::with_capacity(order.len() * 4);
    let mut placed: BTreeMap<(i64, i64), [f64; 4]> = BTreeMap::new();
    let mut info = Vec::with_capacity(order.len());

    for (k, &(i, j)) in order.iter().enumerate() {
        let origin = Point::new(2.0 * (i + r) as f64, 2.0 * (j + r) as f64);
        // Inherit offsets from placed neighbours: my bottom is their top, etc.
        let mut fixed: BTreeMap<EdgeId, f64> = BTreeMap::new();
        if let Some(nb) = placed.get(&(i, j - 1)) {
            fixed.insert(EdgeId::Bottom, nb[2]);
        }
        if let Some(nb) = placed.get(&(i, j + 1)) {
            fixed.insert(EdgeId::Top, nb[0]);
        }
        if let Some(nb) = placed.get(&(i - 1, j)) {
            fixed.insert(EdgeId::Left, nb[1]);
        }
        if let Some(nb) = placed.get(&(i + 1, j)) {
            fixed.insert(EdgeId::Right, nb[3]);
        }
        debug_assert!(fixed.len() <= 2, "growth order admits at most two fixed edges");

        let dof = 3 - fixed.len();
        let (base, bounds): (Vec<f64>, Vec<(f64, f64)>) = match dof {
            3 => (
                BASE_PARAMS.to_vec(),
                vec![(-SAMPLE_BOUND, SAMPLE_BOUND); 3],
            ),
            2 => (
                BASE_PARAMS[..2].to_vec(),
                vec![(-SAMPLE_BOUND, SAMPLE_BOUND); 2],
            ),
            _ => {
                let (lo, hi) = center_interval(&fixed, SAMPLE_BOUND)?;
                let w = hi - lo;
                (
                    vec![lo + 0.5 * w],
                    vec![(lo + 0.05 * w, hi - 0.05 * w)],
                )
            }
        };
        let gen = |p: &[f64]| {
            let quads = dissect_square_constrained(origin, &fixed, p).ok()?;
            // Keep the centre off the mirror axes so congruent pairs cannot
            // arise within one square.
            let centre = quads[0].vertices()[2];
            let (cx, cy) = (centre.x - origin.x - 1.0, centre.y - origin.y - 1.0);
            if cx == 0.0 || cy == 0.0 || math::abs(math::abs(cx) - math::abs(cy)) < 1e-9 {
                return None;
            }
            Some(quads.to_vec())
        };
        let cfg = AvoidanceConfig::new(derive_seed(seed, k as u64));
        let (_, quads) = sample_avoiding(&mut registry, &cfg, gen, &base, &bounds)?;

        let quads4: [Polygon; 4] = [
            quads[0].clone(),
            quads[1].clone(),
            quads[2].clone(),
            quads[3].clone(),
        ];
        let coords = boundary_coords_of(&quads4, origin);
        placed.insert(
            (i, j),
            [coords.b - 1.0, coords.r - 1.0, coords.t - 1.0, coords.l - 1.0],
        );
        info.push(PlacedSquare { pos: (i, j), dof });
        tiles.extend(quads);
    }

    let side = 2.0 * (2 * r + 1) as f64;
    let region = Polygon::new(vec![
        Point::new(0.0, 0.0),
        Point::new(side, 0.0),
        Point::new(side, side),
        Point::new(0.0, side),
    ])?;
    let mut params = BTreeMap::new();
    params.insert("rings".to_string(), rings as f64);
    Ok((
        Patch {
            tiles,
            construction: "quad-vtv".to_string(),
            params,
            seed,
            region: Some(region),
        },
        info,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::signature_distance;

    #[test]
    fn hand_solved_dissection_fixture() {
        // x = (1.05, 1), y1 = (1.1, 0) on [0,2]^2.
        let quads =
            solve_square_dissection(Point::new(0.0, 0.0), Point::new(1.05, 1.0), 1.1).unwrap();
        let pl = quads[0].vertices()[3];
        let pr = quads[1].vertices()[1];
        let pt = quads[2].vertices()[1];
        assert!(pl.dist(Point::new(0.0, 6.0 / 7.0)) < 1e-12);
        assert!(pr.dist(Point::new(2.0, 22.0 / 19.0)) < 1e-12);
        assert!(pt.dist(Point::new(4.0 / 5.0, 2.0)) < 1e-12);
        for q in &quads {
            assert!(math::abs(q.signed_area() - 1.0) < 1e-12);
            assert!(q.is_convex());
        }
        // All four are pairwise distinct shapes.
        let sigs: Vec<_> = quads.iter().map(|q| q.signature()).collect();
        for i in 0..4 {
            for j in (i + 1)..4 {
                assert!(signature_distance(&sigs[i], &sigs[j]) > 1e-3);
            }
        }
    }

    #[test]
    fn symmetric_solver_check() {
        // Centre and edge midpoint: outside the admissible box but a clean
        // solver sanity case with four congruent quadrangles.
        let quads =
            solve_square_dissection(Point::new(0.0, 0.0), Point::new(1.0, 1.0), 1.0).unwrap();
        let sigs: Vec<_> = quads.iter().map(|q| q.signature()).collect();
        for q in &quads {
            assert!(math::abs(q.signed_area() - 1.0) < 1e-12);
        }
        for i in 1..4 {
            assert!(signature_distance(&sigs[0], &sigs[i]) < 1e-9);
        }
    }

    #[test]
    fn validated_path_rejects_mirror_axis_params() {
        let params = SquareDissectionParams {
            center_offset: (0.05, 0.0),
            boundary_offset: 0.04,
        };
        assert!(matches!(
            dissect_square(Point::new(0.0, 0.0), &params),
            Err(ConstructionError::InvalidParams(_))
        ));
    }

    #[test]
    fn constrained_path_recovers_free_dissection() {
        // Fix the bottom and left offsets of the hand fixture; px = 1.05
        // must recover py = 1 from b*py + l*px = 2.
        let mut fixed = BTreeMap::new();
        fixed.insert(EdgeId::Bottom, 0.1);
        fixed.insert(EdgeId::Left, 6.0 / 7.0 - 1.0);
        let quads =
            dissect_square_constrained(Point::new(0.0, 0.0), &fixed, &[1.05]).unwrap();
        let centre = quads[0].vertices()[2];
        assert!(math::abs(centre.y - 1.0) < 1e-12);
        let free = solve_square_dissection(Point::new(0.0, 0.0), Point::new(1.05, 1.0), 1.1)
            .unwrap();
        for (a, b) in quads.iter().zip(free.iter()) {
            for (va, vb) in a.vertices().iter().zip(b.vertices().iter()) {
                assert!(va.dist(*vb) < 1e-12);
            }
        }
    }

    #[test]
    fn no_fixed_offsets_reduces_to_dissect_square() {
        let params = SquareDissectionParams {
            center_offset: (0.05, 0.03),
            boundary_offset: 0.04,
        };
        let a = dissect_square(Point::new(0.0, 0.0), &params).unwrap();
        let b = dissect_square_constrained(
            Point::new(0.0, 0.0),
            &BTreeMap::new(),
            &[0.05, 0.03, 0.04],
        )
        .unwrap();
        for (qa, qb) in a.iter().zip(b.iter()) {
            for (va, vb) in qa.vertices().iter().zip(qb.vertices().iter()) {
                assert!(va.dist(*vb) < 1e-15);
            }
        }
    }

    #[test]
    fn extreme_fixed_offsets_are_infeasible() {
        let mut fixed = BTreeMap::new();
        fixed.insert(EdgeId::Bottom, 0.1);
        fixed.insert(EdgeId::Left, 0.1);
        // The constraint line 1.1*py + 1.1*px = 2 stays outside the centre
        // ball, so no admissible interval exists.
        assert!(matches!(
            center_interval(&fixed, SAMPLE_BOUND),
            Err(ConstructionError::InfeasibleConstraint(_))
        ));
        assert!(matches!(
            dissect_square_constrained(Point::new(0.0, 0.0), &fixed, &[0.95]),
            Err(ConstructionError::InfeasibleConstraint(_))
        ));
    }

    #[test]
    fn nonvtv_radius_zero_is_one_dissected_square() {
        let patch = quad_patch_nonvtv(0, 3).unwrap();
        assert_eq!(patch.tiles.len(), 4);
        for t in &patch.tiles {
            assert!(math::abs(t.signed_area() - 1.0) < 1e-9);
            assert!(t.is_convex());
        }
    }

    #[test]
    fn vtv_rings_zero_matches_base_dissection() {
        let (patch, info) = quad_patch_vtv_detailed(0, 42).unwrap();
        assert_eq!(patch.tiles.len(), 4);
        assert_eq!(info.len(), 1);
        assert_eq!(info[0].dof, 3);
        let params = SquareDissectionParams {
            center_offset: (BASE_PARAMS[0], BASE_PARAMS[1]),
            boundary_offset: BASE_PARAMS[2],
        };
        let base = dissect_square(Point::new(0.0, 0.0), &params).unwrap();
        for (a, b) in patch.tiles.iter().zip(base.iter()) {
            for (va, vb) in a.vertices().iter().zip(b.vertices().iter()) {
                assert!(va.dist(*vb) < 1e-15);
            }
        }
    }

    #[test]
    fn vtv_dof_ranks_follow_growth_order() {
        let (_, info) = quad_patch_vtv_detailed(1, 42).unwrap();
        let dofs: Vec<usize> = info.iter().map(|p| p.dof).collect();
        assert_eq!(dofs, vec![3, 2, 2, 2, 2, 1, 1, 1, 1]);
    }
}
