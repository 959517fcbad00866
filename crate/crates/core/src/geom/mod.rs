//! Planar polygon kernel.
//!
//! Everything operates on `f64` coordinates with two documented tolerances:
//! [`crate::EPS_GEOM`] for predicates and [`crate::EPS_AREA`] for area
//! targets. The constructions in this crate are numerically mild by design
//! (no near-degenerate intersections), so no exact arithmetic is used.

use alloc::vec::Vec;
use core::fmt;

use crate::math;

mod signature;
mod intersect;
mod radii;

pub use signature::{signature_distance, CongruenceSignature};
pub use intersect::{
    boundary_union, convex_intersection_area, intersection_kind, segment_intersection,
    IntersectionKind, SegmentHit,
};
pub use radii::{circumradius, inradius};

/// A point of the plane, also used for direction vectors.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn scale(self, f: f64) -> Point {
        Point::new(self.x * f, self.y * f)
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// 2-D cross product (z component of the 3-D cross product).
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        math::hypot(self.x, self.y)
    }

    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    /// Counterclockwise perpendicular.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn normalized(self) -> Option<Point> {
        let n = self.norm();
        if n > 0.0 && n.is_finite() {
            Some(self.scale(1.0 / n))
        } else {
            None
        }
    }
}

impl core::ops::Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl core::ops::Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

/// A half-line: origin plus unit direction. Also doubles as the description
/// of a full line when wrapped in [`Carrier::Line`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfLine {
    pub origin: Point,
    pub direction: Point,
}

impl HalfLine {
    /// Builds a half-line, normalizing `direction`. Fails on zero or
    /// non-finite directions.
    pub fn new(origin: Point, direction: Point) -> Result<Self, GeomError> {
        if !origin.is_finite() || !direction.is_finite() {
            return Err(GeomError::NonFiniteCoordinate);
        }
        let direction = direction.normalized().ok_or(GeomError::ZeroDirection)?;
        debug_assert!(math::abs(direction.norm() - 1.0) < 1e-12);
        Ok(HalfLine { origin, direction })
    }

    pub fn point_at(&self, t: f64) -> Point {
        self.origin + self.direction.scale(t)
    }

    /// Parameter of the orthogonal projection of `p` onto the carrier line.
    pub fn project(&self, p: Point) -> f64 {
        (p - self.origin).dot(self.direction)
    }
}

/// Carrier for [`solve_third_vertex`]: a full line or a half-line (t >= 0).
#[derive(Debug, Clone, Copy)]
pub enum Carrier {
    Line(HalfLine),
    Ray(HalfLine),
}

impl Carrier {
    fn half_line(&self) -> &HalfLine {
        match self {
            Carrier::Line(h) | Carrier::Ray(h) => h,
        }
    }

    fn admits(&self, t: f64) -> bool {
        match self {
            Carrier::Line(_) => true,
            Carrier::Ray(_) => t >= 0.0,
        }
    }
}

/// One solution of an area-constrained vertex placement, tagged with its
/// carrier parameter so callers can pick the outward root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AreaSolution {
    pub t: f64,
    pub point: Point,
}

/// Errors of the geometry kernel.
#[derive(Debug, Clone, PartialEq)]
pub enum GeomError {
    /// Polygons need at least three vertices.
    TooFewVertices { got: usize },
    /// A coordinate was NaN or infinite.
    NonFiniteCoordinate,
    /// Signed area is numerically zero.
    DegenerateArea,
    /// Two consecutive vertices coincide.
    DuplicateVertex { index: usize },
    /// Three consecutive vertices are collinear (the middle one is not a corner).
    CollinearVertices { index: usize },
    /// Two non-adjacent edges intersect.
    SelfIntersection { edge_a: usize, edge_b: usize },
    /// A direction vector was zero.
    ZeroDirection,
    /// The carrier is parallel to the base segment at a non-matching distance.
    NoSolution,
    /// The carrier is parallel to the base segment at exactly the matching
    /// distance: every carrier point solves the constraint.
    InfinitelyManySolutions,
}

impl fmt::Display for GeomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeomError::TooFewVertices { got } => {
                write!(f, "polygon needs at least 3 vertices, got {got}")
            }
            GeomError::NonFiniteCoordinate => write!(f, "coordinate is NaN or infinite"),
            GeomError::DegenerateArea => write!(f, "polygon has zero area"),
            GeomError::DuplicateVertex { index } => {
                write!(f, "vertices {index} and its successor coincide")
            }
            GeomError::CollinearVertices { index } => {
                write!(f, "vertex {index} lies on the segment of its neighbours")
            }
            GeomError::SelfIntersection { edge_a, edge_b } => {
                write!(f, "edges {edge_a} and {edge_b} intersect")
            }
            GeomError::ZeroDirection => write!(f, "direction vector is zero"),
            GeomError::NoSolution => write!(f, "carrier parallel to base at incompatible offset"),
            GeomError::InfinitelyManySolutions => {
                write!(f, "carrier parallel to base at exactly the target offset")
            }
        }
    }
}

impl core::error::Error for GeomError {}

/// A simple polygon with counterclockwise vertex order and no collinear
/// corners. The universal tile representation.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    /// Validates and normalizes a vertex list into a polygon.
    ///
    /// Clockwise input is reversed to counterclockwise; self-intersecting,
    /// degenerate or collinear-corner input is rejected rather than repaired.
    pub fn new(vertices: Vec<Point>) -> Result<Self, GeomError> {
        let n = vertices.len();
        if n < 3 {
            return Err(GeomError::TooFewVertices { got: n });
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(GeomError::NonFiniteCoordinate);
        }
        let mut vertices = vertices;
        let scale = coord_scale(&vertices);
        let area2 = shoelace2(&vertices);
        if math::abs(area2) <= 1e-12 * scale * scale {
            return Err(GeomError::DegenerateArea);
        }
        if area2 < 0.0 {
            vertices.reverse();
        }

        // Corner validity: distinct consecutive vertices, no straight corners.
        for i in 0..n {
            let prev = vertices[(i + n - 1) % n];
            let here = vertices[i];
            let next = vertices[(i + 1) % n];
            let e_in = here - prev;
            let e_out = next - here;
            let (lin, lout) = (e_in.norm(), e_out.norm());
            if lout <= 1e-12 * scale.max(1.0) {
                return Err(GeomError::DuplicateVertex { index: i });
            }
            if lin > 0.0 && math::abs(e_in.cross(e_out)) <= crate::EPS_GEOM * lin * lout {
                return Err(GeomError::CollinearVertices { index: i });
            }
        }

        // Simplicity: no two non-adjacent edges may share a point.
        let tol = 1e-12 * scale.max(1.0);
        for i in 0..n {
            for j in (i + 1)..n {
                if j == i + 1 || (i == 0 && j == n - 1) {
                    continue;
                }
                let (a1, a2) = (vertices[i], vertices[(i + 1) % n]);
                let (b1, b2) = (vertices[j], vertices[(j + 1) % n]);
                if !matches!(
                    segment_intersection(a1, a2, b1, b2, tol),
                    SegmentHit::Disjoint
                ) {
                    return Err(GeomError::SelfIntersection { edge_a: i, edge_b: j });
                }
            }
        }

        Ok(Polygon { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Shoelace signed area; positive because vertices are stored CCW.
    pub fn signed_area(&self) -> f64 {
        0.5 * shoelace2(&self.vertices)
    }

    /// Sum of Euclidean edge lengths.
    pub fn perimeter(&self) -> f64 {
        let n = self.vertices.len();
        (0..n)
            .map(|i| self.vertices[i].dist(self.vertices[(i + 1) % n]))
            .sum()
    }

    /// Strict convexity: every corner is a left turn. Collinear corners are
    /// already excluded by the constructor, so a plain sign test suffices.
    pub fn is_convex(&self) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            let prev = self.vertices[(i + n - 1) % n];
            let here = self.vertices[i];
            let next = self.vertices[(i + 1) % n];
            (here - prev).cross(next - here) > 0.0
        })
    }

    /// Congruence signature: canonical cyclic (edge length, interior angle)
    /// sequence, minimal over rotations and both traversal orientations.
    pub fn signature(&self) -> CongruenceSignature {
        signature::signature(self)
    }

    /// Axis-aligned bounding box as (min corner, max corner).
    pub fn bbox(&self) -> (Point, Point) {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for v in &self.vertices {
            lo.x = lo.x.min(v.x);
            lo.y = lo.y.min(v.y);
            hi.x = hi.x.max(v.x);
            hi.y = hi.y.max(v.y);
        }
        (lo, hi)
    }

    pub fn centroid(&self) -> Point {
        let n = self.vertices.len() as f64;
        let mut c = Point::default();
        for v in &self.vertices {
            c = c + *v;
        }
        c.scale(1.0 / n)
    }

    /// Applies a pointwise map and re-validates. Orientation-reversing maps
    /// (reflections) come back out counterclockwise.
    pub fn transform<F: FnMut(Point) -> Point>(&self, mut f: F) -> Result<Polygon, GeomError> {
        Polygon::new(self.vertices.iter().map(|&v| f(v)).collect())
    }

    /// True if `p` lies strictly inside (convex polygons only).
    pub fn contains_convex(&self, p: Point, tol: f64) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            (b - a).cross(p - a) > tol
        })
    }
}

fn coord_scale(vertices: &[Point]) -> f64 {
    let mut s: f64 = 0.0;
    for v in vertices {
        s = s.max(math::abs(v.x)).max(math::abs(v.y));
    }
    s
}

fn shoelace2(vertices: &[Point]) -> f64 {
    let n = vertices.len();
    let mut acc = 0.0;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        acc += a.cross(b);
    }
    acc
}

/// Signed area of triangle (a, b, c); positive when counterclockwise.
pub fn triangle_area(a: Point, b: Point, c: Point) -> f64 {
    0.5 * (b - a).cross(c - a)
}

/// Finds every point `v` on `carrier` with |area of triangle (a, b, v)| equal
/// to `target_area`.
///
/// The signed area is affine in the carrier parameter, so there are 0, 1 or 2
/// solutions, returned sorted by parameter. A carrier parallel to `ab` either
/// admits no solution ([`GeomError::NoSolution`]) or infinitely many
/// ([`GeomError::InfinitelyManySolutions`]); both are rejected as errors.
pub fn solve_third_vertex(
    a: Point,
    b: Point,
    carrier: &Carrier,
    target_area: f64,
) -> Result<Vec<AreaSolution>, GeomError> {
    let base = b - a;
    if base.norm() == 0.0 {
        return Err(GeomError::ZeroDirection);
    }
    let h = carrier.half_line();
    // 2 * signed_area(a, b, P(t)) = base x (origin - a) + t * (base x dir)
    let c0 = base.cross(h.origin - a);
    let c1 = base.cross(h.direction);
    let scale = base.norm().max(1.0);
    if math::abs(c1) <= 1e-14 * scale {
        return if math::abs(math::abs(c0) - 2.0 * target_area) <= 1e-12 * scale.max(target_area) {
            Err(GeomError::InfinitelyManySolutions)
        } else {
            Err(GeomError::NoSolution)
        };
    }
    let mut out = Vec::with_capacity(2);
    let mut push = |t: f64| {
        if carrier.admits(t) {
            out.push(AreaSolution {
                t,
                point: h.point_at(t),
            });
        }
    };
    let t_plus = (2.0 * target_area - c0) / c1;
    let t_minus = (-2.0 * target_area - c0) / c1;
    if target_area == 0.0 {
        push(t_plus);
    } else {
        push(t_plus.min(t_minus));
        push(t_plus.max(t_minus));
    }
    Ok(out)
}
