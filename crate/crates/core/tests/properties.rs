//! Property-based tests for the geometric invariants.

use proptest::prelude::*;

use equitile_core::geom::{
    convex_intersection_area, signature_distance, solve_third_vertex, Carrier, HalfLine, Point,
    Polygon,
};
use equitile_core::registry::ShapeRegistry;

/// Star-shaped simple polygon from sorted angles and radii.
fn star_polygon(angles: &[f64], radii: &[f64]) -> Option<Polygon> {
    let mut pairs: Vec<(f64, f64)> = angles.iter().copied().zip(radii.iter().copied()).collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    // Angles too close produce near-duplicate vertices; skip those cases.
    for w in pairs.windows(2) {
        if w[1].0 - w[0].0 < 0.05 {
            return None;
        }
    }
    let verts = pairs
        .iter()
        .map(|&(a, r)| Point::new(r * a.cos(), r * a.sin()))
        .collect();
    Polygon::new(verts).ok()
}

fn angles_and_radii(n: usize) -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (
        prop::collection::vec(0.0..std::f64::consts::TAU, n),
        prop::collection::vec(0.5..2.0f64, n),
    )
}

proptest! {
    #[test]
    fn signature_invariant_under_isometry(
        (angles, radii) in angles_and_radii(5),
        theta in 0.0..std::f64::consts::TAU,
        tx in -10.0..10.0f64,
        ty in -10.0..10.0f64,
        reflect in any::<bool>(),
    ) {
        if let Some(p) = star_polygon(&angles, &radii) {
            let (s, c) = theta.sin_cos();
            let moved = p.transform(|v| {
                let v = if reflect { Point::new(-v.x, v.y) } else { v };
                Point::new(c * v.x - s * v.y + tx, s * v.x + c * v.y + ty)
            }).unwrap();
            let d = signature_distance(&p.signature(), &moved.signature());
            prop_assert!(d < 1e-9, "distance {d} after isometry");
        }
    }

    #[test]
    fn perturbation_separates_signatures(
        (angles, radii) in angles_and_radii(5),
        bump in 1e-3..1e-2f64,
        dir in 0.0..std::f64::consts::TAU,
    ) {
        if let Some(p) = star_polygon(&angles, &radii) {
            let mut verts: Vec<Point> = p.vertices().to_vec();
            verts[0] = Point::new(verts[0].x + bump * dir.cos(), verts[0].y + bump * dir.sin());
            if let Ok(q) = Polygon::new(verts) {
                let d = signature_distance(&p.signature(), &q.signature());
                prop_assert!(d > 1e-4, "bump {bump} gave distance {d}");
            }
        }
    }

    #[test]
    fn third_vertex_solutions_hit_target(
        ax in -5.0..5.0f64, ay in -5.0..5.0f64,
        bx in -5.0..5.0f64, by in -5.0..5.0f64,
        ox in -5.0..5.0f64, oy in -5.0..5.0f64,
        dx in -1.0..1.0f64, dy in -1.0..1.0f64,
        target in 0.1..10.0f64,
    ) {
        let a = Point::new(ax, ay);
        let b = Point::new(bx, by);
        prop_assume!(a.dist(b) > 1e-3);
        prop_assume!(Point::new(dx, dy).norm() > 1e-3);
        let carrier = Carrier::Line(HalfLine::new(Point::new(ox, oy), Point::new(dx, dy)).unwrap());
        if let Ok(sols) = solve_third_vertex(a, b, &carrier, target) {
            prop_assert_eq!(sols.len(), 2);
            for s in sols {
                let area = 0.5 * (b - a).cross(s.point - a);
                prop_assert!((area.abs() - target).abs() < 1e-12 * target.max(1.0));
            }
        }
    }

    #[test]
    fn intersection_area_symmetric_and_bounded(
        x1 in -3.0..3.0f64, y1 in -3.0..3.0f64, w1 in 0.3..3.0f64, h1 in 0.3..3.0f64,
        x2 in -3.0..3.0f64, y2 in -3.0..3.0f64, w2 in 0.3..3.0f64, h2 in 0.3..3.0f64,
    ) {
        let rect = |x: f64, y: f64, w: f64, h: f64| Polygon::new(vec![
            Point::new(x, y), Point::new(x + w, y), Point::new(x + w, y + h), Point::new(x, y + h),
        ]).unwrap();
        let p = rect(x1, y1, w1, h1);
        let q = rect(x2, y2, w2, h2);
        let pq = convex_intersection_area(&p, &q);
        let qp = convex_intersection_area(&q, &p);
        prop_assert!((pq - qp).abs() < 1e-12);
        prop_assert!(pq <= p.signed_area().min(q.signed_area()) + 1e-12);
        // Independent oracle for axis-aligned rectangles.
        let ox = (x1 + w1).min(x2 + w2) - x1.max(x2);
        let oy = (y1 + h1).min(y2 + h2) - y1.max(y2);
        let expect = ox.max(0.0) * oy.max(0.0);
        prop_assert!((pq - expect).abs() < 1e-9);
    }

    #[test]
    fn registry_audit_stays_separated(
        stretches in prop::collection::vec(0.0..1.0f64, 1..40),
    ) {
        let mut reg = ShapeRegistry::default();
        for s in stretches {
            let tri = Polygon::new(vec![
                Point::new(0.0, 0.0),
                Point::new(1.0 + s, 0.0),
                Point::new(0.0, 1.0),
            ]).unwrap();
            reg.register(&tri);
        }
        prop_assert!(reg.audit_min_pairwise() > reg.delta());
    }
}
