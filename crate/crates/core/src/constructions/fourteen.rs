//! Non-convex 14-gons dissected into four hexagons of unit area, and the
//! strip tiling built from them.
//!
//! The 14-gon outline is a parallelogram cluster of four hexagons: three
//! regular ones plus one elongated along an edge direction. Elongation here
//! means cutting the hexagon through the midpoints of two opposite edges and
//! pulling the halves apart along the edge direction, which lengthens
//! exactly those two edges (to `sigma` times the side) while keeping the
//! remaining four edges and all angles intact, so the elongated hexagon
//! still glues edge-to-edge with regular ones. The two long edges end up on
//! opposite sides of the 14-gon boundary, parallel, and carry the strip
//! gluing.
//!
//! The equal-area dissection keeps the 14-gon boundary and the cluster's
//! cell combinatorics but moves the two interior triple points: the first
//! slides along the line that keeps its cell at unit area (the one free
//! parameter), the second is then determined uniquely by the remaining area
//! conditions.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::geom::{boundary_union, Point, Polygon};
use crate::math;
use crate::registry::{derive_seed, sample_avoiding, AvoidanceConfig, ShapeRegistry};

use super::{ConstructionError, Patch};

/// Parameters of the 14-gon construction.
#[derive(Debug, Clone, Copy)]
pub struct FourteenGonParams {
    /// Elongation factor of the two long edges, in (1, 1.2].
    pub stretch: f64,
    /// Position of the free interior vertex along its admissible segment.
    pub interior_shift: f64,
}

impl Default for FourteenGonParams {
    fn default() -> Self {
        FourteenGonParams {
            stretch: 1.05,
            interior_shift: 0.0,
        }
    }
}

const STRETCH_MAX: f64 = 1.2;

/// Indices of the reflex corners in the canonical boundary order.
const REFLEX: [usize; 4] = [3, 6, 10, 13];

fn hexv(angle_index: usize) -> Point {
    // Unit-circumradius pointy-top hexagon vertex at 30 + 60k degrees.
    let h = math::sqrt(3.0) / 2.0;
    match angle_index % 6 {
        0 => Point::new(h, 0.5),    // 30
        1 => Point::new(0.0, 1.0),  // 90
        2 => Point::new(-h, 0.5),   // 150
        3 => Point::new(-h, -0.5),  // 210
        4 => Point::new(0.0, -1.0), // 270
        _ => Point::new(h, -0.5),   // 330
    }
}

/// The 14 boundary vertices (already rescaled to total area 4) in canonical
/// counterclockwise order. Long edges are (13 -> 0) and (2 -> 3).
fn boundary_vertices(sigma: f64) -> [Point; 14] {
    let rt3 = math::sqrt(3.0);
    let u = Point::new(rt3 / 2.0, 0.5);
    let shift = u.scale((sigma - 1.0) / 2.0);
    let (v30, v90, v150, v210, v270, v330) =
        (hexv(0), hexv(1), hexv(2), hexv(3), hexv(4), hexv(5));
    let bc = Point::new(rt3, 0.0) + shift;
    let cc = Point::new(rt3 / 2.0, 1.5) + shift;
    let dc = Point::new(1.5 * rt3, 1.5) + shift;
    let raw = [
        v150 - shift,
        v210 - shift,
        v270 - shift,
        v330 + shift,
        bc + v270,
        bc + v330,
        bc + v30,
        dc + v330,
        dc + v30,
        dc + v90,
        dc + v150,
        cc + v90,
        cc + v150,
        cc + v210,
    ];
    let total = rt3 * (5.0 + sigma);
    let lambda = math::sqrt(4.0 / total);
    raw.map(|p| p.scale(lambda))
}

/// Builds the 14-gon of total area 4.
pub fn build_14gon(params: &FourteenGonParams) -> Result<Polygon, ConstructionError> {
    let sigma = params.stretch;
    if !(sigma.is_finite() && sigma > 1.0 && sigma <= STRETCH_MAX) {
        return Err(ConstructionError::InvalidParams(format!(
            "stretch must lie in (1, {STRETCH_MAX}], got {sigma}"
        )));
    }
    let g = Polygon::new(boundary_vertices(sigma).to_vec())?;
    debug_assert!(math::abs(g.signed_area() - 4.0) < 1e-12);
    Ok(g)
}

/// Recovers the canonical vertex order from an arbitrary rotation of the
/// boundary: reflex corners must land on [`REFLEX`] and the (13 -> 0) edge
/// must be one of the long ones.
fn canonical_vertices(g: &Polygon) -> Result<[Point; 14], ConstructionError> {
    if g.vertex_count() != 14 {
        return Err(ConstructionError::InvalidParams(format!(
            "expected a 14-gon, got {} vertices",
            g.vertex_count()
        )));
    }
    let vs = g.vertices();
    let reflex_at = |i: usize| {
        let prev = vs[(i + 13) % 14];
        let here = vs[i];
        let next = vs[(i + 1) % 14];
        (here - prev).cross(next - here) < 0.0
    };
    for r in 0..14 {
        let ok = (0..14).all(|i| reflex_at((i + r) % 14) == REFLEX.contains(&i));
        if !ok {
            continue;
        }
        let long = vs[(13 + r) % 14].dist(vs[r % 14]);
        let short = vs[(6 + r) % 14].dist(vs[(7 + r) % 14]);
        if long > short {
            let mut out = [Point::default(); 14];
            for (i, slot) in out.iter_mut().enumerate() {
                *slot = vs[(i + r) % 14];
            }
            return Ok(out);
        }
    }
    Err(ConstructionError::InvalidParams(
        "boundary does not match the 14-gon cluster structure".to_string(),
    ))
}

fn area_of(points: &[Point]) -> f64 {
    let n = points.len();
    let mut acc = 0.0;
    for i in 0..n {
        acc += points[i].cross(points[(i + 1) % n]);
    }
    0.5 * acc
}

/// Interior vertices of the undeformed cluster, reconstructed from the
/// boundary: the first triple point sits one short-edge vector above the
/// bottom reflex corner.
fn assembly_interior(w: &[Point; 14]) -> (Point, Point) {
    let i1 = w[3] + (w[0] - w[1]);
    let i2 = i1 + (w[5] - w[4]);
    (i1, i2)
}

struct CellPoints {
    a: [Point; 6],
    b: [Point; 6],
    c: [Point; 6],
    d: [Point; 6],
}

fn cell_points(w: &[Point; 14], i1: Point, i2: Point) -> CellPoints {
    CellPoints {
        a: [w[13], w[0], w[1], w[2], w[3], i1],
        b: [w[3], w[4], w[5], w[6], i2, i1],
        c: [w[10], w[11], w[12], w[13], i1, i2],
        d: [w[6], w[7], w[8], w[9], w[10], i2],
    }
}

/// Positions both interior vertices for shift parameter `t`: the first moves
/// along the unit-area line of its cell, the second solves the two remaining
/// area conditions.
fn interior_at(
    w: &[Point; 14],
    target: f64,
    t: f64,
) -> Result<(Point, Point), ConstructionError> {
    let (i1_asm, _) = assembly_interior(w);
    let dir = (w[13] - w[3])
        .normalized()
        .expect("14-gon chord has positive length");
    let nrm = dir.perp();
    let area_a = |i1: Point| area_of(&[w[13], w[0], w[1], w[2], w[3], i1]);
    let f0 = area_a(i1_asm);
    let slope = area_a(i1_asm + nrm) - f0;
    if math::abs(slope) < 1e-12 {
        return Err(ConstructionError::InfeasibleShift { t, lo: 0.0, hi: 0.0 });
    }
    let foot = i1_asm + nrm.scale((target - f0) / slope);
    let i1 = foot + dir.scale(t);

    let area_d = |i2: Point| area_of(&[w[6], w[7], w[8], w[9], w[10], i2]);
    let area_b = |i2: Point| area_of(&[w[3], w[4], w[5], w[6], i2, i1]);
    let o = Point::default();
    let (ex, ey) = (Point::new(1.0, 0.0), Point::new(0.0, 1.0));
    let r0 = [area_d(o) - target, area_b(o) - target];
    let m = [
        [area_d(ex) - area_d(o), area_d(ey) - area_d(o)],
        [area_b(ex) - area_b(o), area_b(ey) - area_b(o)],
    ];
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if math::abs(det) < 1e-12 {
        return Err(ConstructionError::InfeasibleShift { t, lo: 0.0, hi: 0.0 });
    }
    let i2 = Point::new(
        (-r0[0] * m[1][1] + r0[1] * m[0][1]) / det,
        (-r0[1] * m[0][0] + r0[0] * m[1][0]) / det,
    );
    Ok((i1, i2))
}

fn cells_if_feasible(w: &[Point; 14], target: f64, t: f64) -> Option<[Polygon; 4]> {
    let (i1, i2) = interior_at(w, target, t).ok()?;
    let pts = cell_points(w, i1, i2);
    let mk = |p: &[Point; 6]| Polygon::new(p.to_vec()).ok();
    let cells = [mk(&pts.a)?, mk(&pts.b)?, mk(&pts.c)?, mk(&pts.d)?];
    cells.iter().all(Polygon::is_convex).then_some(cells)
}

/// Feasibility interval of the interior shift: the maximal `t` range (found
/// by bracketing and bisection on the convexity predicates) where all four
/// dissection hexagons stay convex.
pub fn feasible_shift_interval(g: &Polygon) -> Result<(f64, f64), ConstructionError> {
    let w = canonical_vertices(g)?;
    let target = g.signed_area() / 4.0;
    if cells_if_feasible(&w, target, 0.0).is_none() {
        return Err(ConstructionError::InfeasibleShift {
            t: 0.0,
            lo: 0.0,
            hi: 0.0,
        });
    }
    let limit = 100.0 * math::sqrt(g.signed_area());
    let edge = |sign: f64| {
        let mut good = 0.0;
        let mut step = 0.05;
        while step < limit && cells_if_feasible(&w, target, sign * (good + step)).is_some() {
            good += step;
            step *= 2.0;
        }
        let mut bad = good + step;
        for _ in 0..100 {
            let mid = 0.5 * (good + bad);
            if cells_if_feasible(&w, target, sign * mid).is_some() {
                good = mid;
            } else {
                bad = mid;
            }
        }
        sign * good
    };
    Ok((edge(-1.0), edge(1.0)))
}

/// Dissects the 14-gon into four convex hexagons of equal area (unit area
/// for the standard total of 4), the free interior vertex at shift `t`.
pub fn dissect_14gon(g: &Polygon, t: f64) -> Result<[Polygon; 4], ConstructionError> {
    let (lo, hi) = feasible_shift_interval(g)?;
    if !(t >= lo && t <= hi) {
        return Err(ConstructionError::InfeasibleShift { t, lo, hi });
    }
    let w = canonical_vertices(g)?;
    let target = g.signed_area() / 4.0;
    let cells = cells_if_feasible(&w, target, t).ok_or(ConstructionError::InfeasibleShift {
        t,
        lo,
        hi,
    })?;
    for c in &cells {
        debug_assert!(math::abs(c.signed_area() - target) < 1e-9);
    }
    Ok(cells)
}

/// Strip tiling of dissected 14-gons.
///
/// Within a strip, consecutive cells are point reflections of each other
/// about the midpoints of the long edges (long edges of neighbours coincide
/// as full edges); pairs of cells advance by a fixed translation, and strips
/// stack by the complementary lattice vector. Each cell receives a fresh
/// interior shift via the shared registry, which is what makes all hexagons
/// pairwise non-congruent.
pub fn hexagon_patch_vtv(
    strips: usize,
    cells_per_strip: usize,
    seed: u64,
) -> Result<Patch, ConstructionError> {
    hexagon_patch_vtv_with(strips, cells_per_strip, seed, 1.05)
}

/// [`hexagon_patch_vtv`] with an explicit elongation factor.
pub fn hexagon_patch_vtv_with(
    strips: usize,
    cells_per_strip: usize,
    seed: u64,
    stretch: f64,
) -> Result<Patch, ConstructionError> {
    if strips == 0 || cells_per_strip == 0 {
        return Err(ConstructionError::InvalidParams(
            "need at least one strip and one cell".to_string(),
        ));
    }
    let params = FourteenGonParams {
        stretch,
        interior_shift: 0.0,
    };
    let base = build_14gon(&params)?;
    let w = canonical_vertices(&base)?;
    let (lo, hi) = feasible_shift_interval(&base)?;
    let width = hi - lo;
    let bounds = [(lo + 0.05 * width, hi - 0.05 * width)];
    // Off-centre base: the interval midpoint is the mirror-symmetric shift
    // where the two middle cells coincide.
    let base_t = [lo + 0.35 * width];

    let rt3 = math::sqrt(3.0);
    let lambda = math::sqrt(4.0 / (rt3 * (5.0 + stretch)));
    let two_cell = Point::new(rt3, -3.0).scale(lambda);
    // Stacking carries the elongation correction: the neighbouring strip's
    // rotated D-cell glues onto our C-cell, which sits one full cluster
    // shift (sigma - 1 along the elongation axis) further out.
    let u = Point::new(rt3 / 2.0, 0.5);
    let stack = (Point::new(3.0 * rt3, 3.0) + u.scale(stretch - 1.0)).scale(lambda);
    let m2 = (w[2] + w[3]).scale(0.5);

    let mut registry = ShapeRegistry::default();
    let mut tiles = Vec::with_capacity(strips * cells_per_strip * 4);
    let mut hosts = Vec::with_capacity(strips * cells_per_strip);
    for i in 0..strips {
        for j in 0..cells_per_strip {
            let shift = stack.scale(i as f64) + two_cell.scale((j / 2) as f64);
            let flip = j % 2 == 1;
            let pose = |p: Point| {
                let q = if flip { m2.scale(2.0) - p } else { p };
                q + shift
            };
            hosts.push(base.transform(pose)?);
            let gen = |pr: &[f64]| {
                let cells = cells_if_feasible(&w, 1.0, pr[0])?;
                let mut out = Vec::with_capacity(4);
                for c in cells {
                    out.push(c.transform(pose).ok()?);
                }
                Some(out)
            };
            let cfg = AvoidanceConfig::new(derive_seed(seed, (i * cells_per_strip + j) as u64));
            let (_, cells) = sample_avoiding(&mut registry, &cfg, gen, &base_t, &bounds)?;
            tiles.extend(cells);
        }
    }
    let region = boundary_union(&hosts, 1e-9).ok();
    let mut params = BTreeMap::new();
    params.insert("stretch".to_string(), stretch);
    params.insert("strips".to_string(), strips as f64);
    params.insert("cells".to_string(), cells_per_strip as f64);
    Ok(Patch {
        tiles,
        construction: "hex14".to_string(),
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
    fn fourteen_vertices_nonconvex_area_four() {
        let g = build_14gon(&FourteenGonParams::default()).unwrap();
        assert_eq!(g.vertex_count(), 14);
        assert!(!g.is_convex());
        assert!(math::abs(g.signed_area() - 4.0) < 1e-12);
        // The two long edges are parallel and on opposite boundary sides.
        let w = canonical_vertices(&g).unwrap();
        let a1 = w[0] - w[13];
        let a2 = w[3] - w[2];
        assert!(math::abs(a1.cross(a2)) < 1e-12);
        assert!(math::abs(a1.norm() - a2.norm()) < 1e-12);
        assert!(a1.norm() > (w[1] - w[0]).norm());
    }

    #[test]
    fn stretch_limit_recovers_regular_cluster() {
        let g = build_14gon(&FourteenGonParams {
            stretch: 1.0 + 1e-9,
            interior_shift: 0.0,
        })
        .unwrap();
        let w = canonical_vertices(&g).unwrap();
        let long = w[0].dist(w[13]);
        let short = w[1].dist(w[0]);
        assert!(math::abs(long - short) < 1e-8);
        assert!(math::abs(g.signed_area() - 4.0) < 1e-12);
    }

    #[test]
    fn invalid_stretch_rejected() {
        for sigma in [0.9, 1.0, 1.3, f64::NAN] {
            assert!(build_14gon(&FourteenGonParams {
                stretch: sigma,
                interior_shift: 0.0,
            })
            .is_err());
        }
    }

    #[test]
    fn shift_zero_is_the_mirror_fixed_point() {
        // The 14-gon is mirror symmetric along its elongation axis; the
        // symmetry swaps the two middle cells and negates the shift, so at
        // t = 0 those two cells are exactly congruent and t, -t produce
        // congruent quadruples. Samplers must avoid the symmetric point.
        let g = build_14gon(&FourteenGonParams::default()).unwrap();
        let cells = dissect_14gon(&g, 0.0).unwrap();
        let d = signature_distance(&cells[1].signature(), &cells[2].signature());
        assert!(d < 1e-12, "middle cells should coincide at t = 0, got {d}");
    }

    #[test]
    fn dissection_yields_four_unit_hexagons() {
        let g = build_14gon(&FourteenGonParams::default()).unwrap();
        let (lo, hi) = feasible_shift_interval(&g).unwrap();
        assert!(lo < 0.0 && hi > 0.0, "interval [{lo}, {hi}] should straddle 0");
        let t = lo + 0.3 * (hi - lo);
        let cells = dissect_14gon(&g, t).unwrap();
        let mut total = 0.0;
        for c in &cells {
            assert_eq!(c.vertex_count(), 6);
            assert!(c.is_convex());
            assert!(math::abs(c.signed_area() - 1.0) < 1e-12);
            total += c.signed_area();
        }
        assert!(math::abs(total - g.signed_area()) < 1e-12);
        let sigs: Vec<_> = cells.iter().map(|c| c.signature()).collect();
        for i in 0..4 {
            for j in (i + 1)..4 {
                assert!(signature_distance(&sigs[i], &sigs[j]) > 1e-4);
            }
        }
    }

    #[test]
    fn distinct_shifts_give_no_cross_congruences() {
        // Shifts t and -t give congruent quadruples (mirror symmetry), so
        // pick two values that are neither equal nor opposite.
        let g = build_14gon(&FourteenGonParams::default()).unwrap();
        let (lo, hi) = feasible_shift_interval(&g).unwrap();
        let c1 = dissect_14gon(&g, lo + 0.3 * (hi - lo)).unwrap();
        let c2 = dissect_14gon(&g, lo + 0.6 * (hi - lo)).unwrap();
        let s1: Vec<_> = c1.iter().map(|c| c.signature()).collect();
        let s2: Vec<_> = c2.iter().map(|c| c.signature()).collect();
        for a in &s1 {
            for b in &s2 {
                assert!(signature_distance(a, b) > 1e-6);
            }
        }
    }

    #[test]
    fn out_of_interval_shift_rejected() {
        let g = build_14gon(&FourteenGonParams::default()).unwrap();
        let (_, hi) = feasible_shift_interval(&g).unwrap();
        assert!(matches!(
            dissect_14gon(&g, hi + 1.0),
            Err(ConstructionError::InfeasibleShift { .. })
        ));
    }

    #[test]
    fn single_cell_patch_matches_direct_dissection() {
        let patch = hexagon_patch_vtv(1, 1, 42).unwrap();
        assert_eq!(patch.tiles.len(), 4);
        for t in &patch.tiles {
            assert!(math::abs(t.signed_area() - 1.0) < 1e-9);
            assert!(t.is_convex());
        }
    }

    #[test]
    fn strip_joints_share_full_long_edges() {
        use crate::geom::{intersection_kind, IntersectionKind};
        let patch = hexagon_patch_vtv(1, 2, 42).unwrap();
        assert_eq!(patch.tiles.len(), 8);
        // Cell A of the first 14-gon and cell A of its reflected neighbour
        // share the long edge; every touching pair must be clean.
        let mut full_edge_pairs = 0;
        for i in 0..8 {
            for j in (i + 1)..8 {
                match intersection_kind(&patch.tiles[i], &patch.tiles[j]) {
                    IntersectionKind::AreaOverlap => panic!("tiles {i},{j} overlap"),
                    IntersectionKind::EdgeSegment { full_edge_of_both } => {
                        assert!(full_edge_of_both, "partial edge between {i} and {j}");
                        full_edge_pairs += 1;
                    }
                    _ => {}
                }
            }
        }
        assert!(full_edge_pairs >= 8);
    }
}
