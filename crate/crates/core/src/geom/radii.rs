//! Inradius and circumradius of convex polygons, used by the normality
//! report.

use crate::math;

use super::{Point, Polygon};

/// Radius of the largest disc contained in a convex polygon.
///
/// Solves the maximin LP (maximize r subject to signed distance >= r for
/// every edge line) by enumerating edge triples: the optimum of the bounded
/// LP is attained where three constraints are tight.
pub fn inradius(p: &Polygon) -> f64 {
    let vs = p.vertices();
    let n = vs.len();
    let scale = p.perimeter().max(1.0);
    // Inward normal and offset per edge: dist(x, edge i) = n_i . x - b_i.
    let mut normals = alloc::vec::Vec::with_capacity(n);
    for i in 0..n {
        let a = vs[i];
        let b = vs[(i + 1) % n];
        let m = (b - a).perp().normalized().expect("valid polygon edge");
        normals.push((m, m.dot(a)));
    }
    let feasible = |x: Point, r: f64| {
        normals
            .iter()
            .all(|&(m, b)| m.dot(x) - b - r >= -1e-9 * scale)
    };
    let mut best: f64 = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                // Solve n_t . x - r = b_t for t in {i, j, k}.
                let rows = [normals[i], normals[j], normals[k]];
                let det = det3(
                    [rows[0].0.x, rows[0].0.y, -1.0],
                    [rows[1].0.x, rows[1].0.y, -1.0],
                    [rows[2].0.x, rows[2].0.y, -1.0],
                );
                if math::abs(det) < 1e-12 {
                    continue;
                }
                let dx = det3(
                    [rows[0].1, rows[0].0.y, -1.0],
                    [rows[1].1, rows[1].0.y, -1.0],
                    [rows[2].1, rows[2].0.y, -1.0],
                );
                let dy = det3(
                    [rows[0].0.x, rows[0].1, -1.0],
                    [rows[1].0.x, rows[1].1, -1.0],
                    [rows[2].0.x, rows[2].1, -1.0],
                );
                let dr = det3(
                    [rows[0].0.x, rows[0].0.y, rows[0].1],
                    [rows[1].0.x, rows[1].0.y, rows[1].1],
                    [rows[2].0.x, rows[2].0.y, rows[2].1],
                );
                let x = Point::new(dx / det, dy / det);
                let r = dr / det;
                if r > best && feasible(x, r) {
                    best = r;
                }
            }
        }
    }
    best
}

fn det3(r0: [f64; 3], r1: [f64; 3], r2: [f64; 3]) -> f64 {
    r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
        + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0])
}

/// Radius of the smallest disc containing the polygon (minimum enclosing
/// circle of its vertices; tiles are small, so pair/triple enumeration is
/// plenty fast and fully deterministic).
pub fn circumradius(p: &Polygon) -> f64 {
    let vs = p.vertices();
    let n = vs.len();
    let scale = p.perimeter().max(1.0);
    let contains_all = |c: Point, r: f64| vs.iter().all(|v| v.dist(c) <= r + 1e-9 * scale);
    let mut best = f64::INFINITY;
    for i in 0..n {
        for j in (i + 1)..n {
            let c = (vs[i] + vs[j]).scale(0.5);
            let r = 0.5 * vs[i].dist(vs[j]);
            if r < best && contains_all(c, r) {
                best = r;
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if let Some((c, r)) = circumcircle(vs[i], vs[j], vs[k]) {
                    if r < best && contains_all(c, r) {
                        best = r;
                    }
                }
            }
        }
    }
    best
}

fn circumcircle(a: Point, b: Point, c: Point) -> Option<(Point, f64)> {
    let d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    if math::abs(d) < 1e-14 {
        return None;
    }
    let a2 = a.dot(a);
    let b2 = b.dot(b);
    let c2 = c.dot(c);
    let ux = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d;
    let uy = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d;
    let center = Point::new(ux, uy);
    Some((center, center.dist(a)))
}
