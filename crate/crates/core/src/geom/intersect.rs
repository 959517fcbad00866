//! Segment intersection, convex clipping and tile-pair classification.

use alloc::vec::Vec;

use crate::math;
use crate::EPS_GEOM;

use super::{triangle_area, GeomError, Point, Polygon};

/// Classification of the intersection of two tiles, mirroring the
/// vertex-to-vertex vocabulary: empty, a point, a shared boundary segment
/// (possibly a full edge of both), or an overlap of positive area.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntersectionKind {
    Disjoint,
    SinglePoint,
    EdgeSegment { full_edge_of_both: bool },
    AreaOverlap,
}

/// Result of intersecting two closed segments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SegmentHit {
    Disjoint,
    Point(Point),
    Overlap(Point, Point),
}

/// Intersects closed segments [p1, p2] and [q1, q2] with absolute tolerance
/// `tol` for touching and collinearity decisions.
pub fn segment_intersection(p1: Point, p2: Point, q1: Point, q2: Point, tol: f64) -> SegmentHit {
    let dp = p2 - p1;
    let dq = q2 - q1;
    let lp = dp.norm();
    let lq = dq.norm();
    if lp == 0.0 || lq == 0.0 {
        return SegmentHit::Disjoint;
    }
    let d1 = dq.cross(p1 - q1);
    let d2 = dq.cross(p2 - q1);
    let d3 = dp.cross(q1 - p1);
    let d4 = dp.cross(q2 - p1);
    let eq = tol * lq;
    let ep = tol * lp;

    // Proper crossing.
    if ((d1 > eq && d2 < -eq) || (d1 < -eq && d2 > eq))
        && ((d3 > ep && d4 < -ep) || (d3 < -ep && d4 > ep))
    {
        let t = d1 / (d1 - d2);
        return SegmentHit::Point(p1 + dp.scale(t));
    }

    // Collinear: overlap interval along p's direction.
    if math::abs(d1) <= eq && math::abs(d2) <= eq {
        let dir = dp.scale(1.0 / lp);
        let (a0, a1) = (0.0_f64, lp);
        let b0 = (q1 - p1).dot(dir);
        let b1 = (q2 - p1).dot(dir);
        let (b_lo, b_hi) = (b0.min(b1), b0.max(b1));
        let lo = a0.max(b_lo);
        let hi = a1.min(b_hi);
        if hi - lo > tol {
            return SegmentHit::Overlap(p1 + dir.scale(lo), p1 + dir.scale(hi));
        } else if hi - lo > -tol {
            let m = 0.5 * (lo + hi);
            return SegmentHit::Point(p1 + dir.scale(m));
        }
        return SegmentHit::Disjoint;
    }

    // Endpoint touching the other segment.
    for (pt, a, b) in [(p1, q1, q2), (p2, q1, q2), (q1, p1, p2), (q2, p1, p2)] {
        if point_on_segment(pt, a, b, tol) {
            return SegmentHit::Point(pt);
        }
    }
    SegmentHit::Disjoint
}

fn point_on_segment(p: Point, a: Point, b: Point, tol: f64) -> bool {
    let d = b - a;
    let len = d.norm();
    if len == 0.0 {
        return p.dist(a) <= tol;
    }
    if math::abs(d.cross(p - a)) > tol * len {
        return false;
    }
    let t = (p - a).dot(d) / (len * len);
    (-tol / len..=1.0 + tol / len).contains(&t)
}

/// Clips a CCW subject polygon against the half-plane left of a -> b,
/// Sutherland-Hodgman style.
fn clip_halfplane(subject: &[Point], a: Point, b: Point) -> Vec<Point> {
    let mut out = Vec::with_capacity(subject.len() + 1);
    let dir = b - a;
    let n = subject.len();
    for i in 0..n {
        let s = subject[i];
        let e = subject[(i + 1) % n];
        let sc = dir.cross(s - a);
        let ec = dir.cross(e - a);
        let s_in = sc >= 0.0;
        let e_in = ec >= 0.0;
        match (s_in, e_in) {
            (true, true) => out.push(e),
            (true, false) | (false, true) => {
                let denom = sc - ec;
                if math::abs(denom) > 1e-300 {
                    let t = sc / denom;
                    out.push(s + (e - s).scale(t));
                }
                if e_in {
                    out.push(e);
                }
            }
            (false, false) => {}
        }
    }
    out
}

fn clip_area_convex(subject: &[Point], clip: &[Point]) -> f64 {
    let mut poly = subject.to_vec();
    let n = clip.len();
    for i in 0..n {
        if poly.len() < 3 {
            return 0.0;
        }
        poly = clip_halfplane(&poly, clip[i], clip[(i + 1) % n]);
    }
    if poly.len() < 3 {
        return 0.0;
    }
    let mut acc = 0.0;
    for i in 0..poly.len() {
        acc += poly[i].cross(poly[(i + 1) % poly.len()]);
    }
    (0.5 * acc).max(0.0)
}

/// Signed triangle fan of a simple polygon: (CCW triangle vertices, sign).
fn signed_fan(p: &Polygon) -> Vec<([Point; 3], f64)> {
    let vs = p.vertices();
    let mut out = Vec::with_capacity(vs.len() - 2);
    for i in 1..vs.len() - 1 {
        let (a, b, c) = (vs[0], vs[i], vs[i + 1]);
        let area = triangle_area(a, b, c);
        if area >= 0.0 {
            out.push(([a, b, c], 1.0));
        } else {
            out.push(([a, c, b], -1.0));
        }
    }
    out
}

/// Area of `p` intersected with `q`. Convex inputs use a direct
/// Sutherland-Hodgman clip; a non-convex input is decomposed into a signed
/// triangle fan whose clipped areas sum to the exact intersection area.
pub fn convex_intersection_area(p: &Polygon, q: &Polygon) -> f64 {
    let (plo, phi) = p.bbox();
    let (qlo, qhi) = q.bbox();
    if plo.x > qhi.x || qlo.x > phi.x || plo.y > qhi.y || qlo.y > phi.y {
        return 0.0;
    }
    match (p.is_convex(), q.is_convex()) {
        (true, true) => clip_area_convex(p.vertices(), q.vertices()),
        (false, true) => signed_fan(p)
            .iter()
            .map(|(tri, s)| s * clip_area_convex(tri, q.vertices()))
            .sum::<f64>()
            .max(0.0),
        (true, false) => convex_intersection_area(q, p),
        (false, false) => {
            let fp = signed_fan(p);
            let fq = signed_fan(q);
            let mut acc = 0.0;
            for (tp, sp) in &fp {
                for (tq, sq) in &fq {
                    acc += sp * sq * clip_area_convex(tp, tq);
                }
            }
            acc.max(0.0)
        }
    }
}

/// Classifies the intersection of two tiles.
///
/// `EdgeSegment::full_edge_of_both` is true exactly when the shared segment
/// coincides (within [`EPS_GEOM`] endpoint distance) with one complete edge
/// of `p` and one complete edge of `q`.
pub fn intersection_kind(p: &Polygon, q: &Polygon) -> IntersectionKind {
    let (plo, phi) = p.bbox();
    let (qlo, qhi) = q.bbox();
    let m = EPS_GEOM;
    if plo.x > qhi.x + m || qlo.x > phi.x + m || plo.y > qhi.y + m || qlo.y > phi.y + m {
        return IntersectionKind::Disjoint;
    }
    if convex_intersection_area(p, q) > 1e-12 {
        return IntersectionKind::AreaOverlap;
    }

    // Interiors are disjoint; collect the boundary contact set.
    let mut contacts: Vec<Point> = Vec::new();
    let pv = p.vertices();
    let qv = q.vertices();
    for i in 0..pv.len() {
        let (a1, a2) = (pv[i], pv[(i + 1) % pv.len()]);
        for j in 0..qv.len() {
            let (b1, b2) = (qv[j], qv[(j + 1) % qv.len()]);
            match segment_intersection(a1, a2, b1, b2, EPS_GEOM) {
                SegmentHit::Disjoint => {}
                SegmentHit::Point(x) => contacts.push(x),
                SegmentHit::Overlap(x, y) => {
                    contacts.push(x);
                    contacts.push(y);
                }
            }
        }
    }
    if contacts.is_empty() {
        return IntersectionKind::Disjoint;
    }
    // The contact set of two interior-disjoint convex tiles is a point or a
    // segment; its extent is realized by the farthest contact pair.
    let mut best = (0.0, contacts[0], contacts[0]);
    for i in 0..contacts.len() {
        for j in (i + 1)..contacts.len() {
            let d = contacts[i].dist(contacts[j]);
            if d > best.0 {
                best = (d, contacts[i], contacts[j]);
            }
        }
    }
    if best.0 <= EPS_GEOM {
        return IntersectionKind::SinglePoint;
    }
    let (_, s, e) = best;
    let full = has_edge(p, s, e) && has_edge(q, s, e);
    IntersectionKind::EdgeSegment {
        full_edge_of_both: full,
    }
}

fn has_edge(p: &Polygon, s: Point, e: Point) -> bool {
    let vs = p.vertices();
    let n = vs.len();
    (0..n).any(|i| {
        let (a, b) = (vs[i], vs[(i + 1) % n]);
        (a.dist(s) <= EPS_GEOM && b.dist(e) <= EPS_GEOM)
            || (a.dist(e) <= EPS_GEOM && b.dist(s) <= EPS_GEOM)
    })
}

/// Boundary of the union of polygons whose shared edges match exactly
/// (within `tol`) as full edges of both neighbours.
///
/// Interior edges cancel in directed pairs; the survivors are chained into a
/// single cycle and collinear joints are merged. Returns an error if the
/// boundary is not one simple cycle.
pub fn boundary_union(polys: &[Polygon], tol: f64) -> Result<Polygon, GeomError> {
    let mut edges: Vec<(Point, Point)> = Vec::new();
    for p in polys {
        let vs = p.vertices();
        for i in 0..vs.len() {
            edges.push((vs[i], vs[(i + 1) % vs.len()]));
        }
    }
    let mut alive = alloc::vec![true; edges.len()];
    for i in 0..edges.len() {
        if !alive[i] {
            continue;
        }
        for j in (i + 1)..edges.len() {
            if !alive[j] {
                continue;
            }
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a.dist(d) <= tol && b.dist(c) <= tol {
                alive[i] = false;
                alive[j] = false;
                break;
            }
        }
    }
    let boundary: Vec<(Point, Point)> = edges
        .into_iter()
        .zip(alive.iter())
        .filter_map(|(e, &keep)| keep.then_some(e))
        .collect();
    if boundary.is_empty() {
        return Err(GeomError::DegenerateArea);
    }

    let mut used = alloc::vec![false; boundary.len()];
    let mut chain = Vec::with_capacity(boundary.len());
    let mut cur = boundary[0];
    used[0] = true;
    chain.push(cur.0);
    for _ in 1..boundary.len() {
        let mut found = None;
        for (k, e) in boundary.iter().enumerate() {
            if !used[k] && e.0.dist(cur.1) <= tol {
                found = Some(k);
                break;
            }
        }
        let Some(k) = found else {
            return Err(GeomError::SelfIntersection { edge_a: 0, edge_b: 0 });
        };
        used[k] = true;
        cur = boundary[k];
        chain.push(cur.0);
    }
    if cur.1.dist(chain[0]) > tol {
        return Err(GeomError::SelfIntersection { edge_a: 0, edge_b: 0 });
    }

    // Merge straight joints left over from neighbouring collinear edges.
    let n = chain.len();
    let mut cleaned: Vec<Point> = Vec::with_capacity(n);
    for i in 0..n {
        let prev = chain[(i + n - 1) % n];
        let here = chain[i];
        let next = chain[(i + 1) % n];
        let e_in = here - prev;
        let e_out = next - here;
        if math::abs(e_in.cross(e_out)) > EPS_GEOM * e_in.norm() * e_out.norm() {
            cleaned.push(here);
        }
    }
    Polygon::new(cleaned)
}
