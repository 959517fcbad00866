//! Independent certification of patch properties.
//!
//! Every check recomputes its verdict from tile vertex lists alone; patch
//! metadata (construction name, parameters, seed, region) is never trusted.
//! Local finiteness is not directly observable on a finite patch: it is
//! reported indirectly through the normality radii, since bounded perimeter
//! plus convexity and unit area force positive inradii, normality, and hence
//! local finiteness.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::constructions::Patch;
use crate::geom::{
    circumradius, convex_intersection_area, inradius, intersection_kind, signature_distance,
    CongruenceSignature, IntersectionKind, Polygon,
};
use crate::math;

/// One requested property check.
#[derive(Debug, Clone)]
pub enum Check {
    UnitArea { target: f64, tol: f64 },
    Noncongruence { delta: f64 },
    PerimeterBound { c: f64 },
    Convexity,
    PackingCoverage { window: Polygon },
    VertexToVertex,
    NormalityRadii,
}

/// Non-empty set of checks to run.
#[derive(Debug, Clone)]
pub struct CheckSpec {
    pub checks: Vec<Check>,
}

/// What a failed (or worst-case) check points at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    Tile(usize),
    Pair(usize, usize),
}

/// Outcome of a single check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// Worst observed residual (meaning depends on the check).
    pub residual: f64,
    pub witness: Option<Witness>,
    pub details: String,
}

/// Aggregated outcome of a verification run.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub results: Vec<CheckResult>,
    /// (min inradius, max circumradius) when requested.
    pub normality: Option<(f64, f64)>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }
}

/// Pass iff every tile area is within `tol` of `target`.
pub fn check_unit_area(patch: &Patch, target: f64, tol: f64) -> CheckResult {
    let mut worst = 0.0;
    let mut witness = None;
    for (i, t) in patch.tiles.iter().enumerate() {
        let residual = math::abs(t.signed_area() - target);
        if residual > worst {
            worst = residual;
            witness = Some(Witness::Tile(i));
        }
    }
    CheckResult {
        name: "unit-area",
        passed: worst <= tol,
        residual: worst,
        witness,
        details: format!("max |area - {target}| = {worst:.3e} over {} tiles", patch.tiles.len()),
    }
}

/// Pass iff all same-vertex-count tile pairs have signature distance > delta.
pub fn check_noncongruence(patch: &Patch, delta: f64) -> CheckResult {
    let sigs: Vec<CongruenceSignature> = patch.tiles.iter().map(Polygon::signature).collect();
    let mut min_dist = f64::INFINITY;
    let mut witness = None;
    for i in 0..sigs.len() {
        for j in (i + 1)..sigs.len() {
            if sigs[i].n != sigs[j].n {
                continue;
            }
            let d = signature_distance(&sigs[i], &sigs[j]);
            if d < min_dist {
                min_dist = d;
                witness = Some(Witness::Pair(i, j));
            }
        }
    }
    CheckResult {
        name: "noncongruent",
        passed: min_dist > delta,
        residual: min_dist,
        witness,
        details: format!("min pairwise signature distance = {min_dist:.3e} (delta = {delta:.1e})"),
    }
}

/// Pass iff the maximum perimeter is at most `c` (inclusive).
pub fn check_perimeter_bound(patch: &Patch, c: f64) -> CheckResult {
    let mut worst = 0.0;
    let mut witness = None;
    for (i, t) in patch.tiles.iter().enumerate() {
        let p = t.perimeter();
        if p > worst {
            worst = p;
            witness = Some(Witness::Tile(i));
        }
    }
    CheckResult {
        name: "perimeter",
        passed: worst <= c,
        residual: worst,
        witness,
        details: format!("max perimeter = {worst:.6} (bound {c})"),
    }
}

/// Pass iff every tile is strictly convex.
pub fn check_convexity(patch: &Patch) -> CheckResult {
    let mut bad = 0usize;
    let mut witness = None;
    for (i, t) in patch.tiles.iter().enumerate() {
        if !t.is_convex() {
            bad += 1;
            if witness.is_none() {
                witness = Some(Witness::Tile(i));
            }
        }
    }
    CheckResult {
        name: "convex",
        passed: bad == 0,
        residual: bad as f64,
        witness,
        details: format!("{bad} non-convex tiles"),
    }
}

fn bboxes_apart(a: &Polygon, b: &Polygon, margin: f64) -> bool {
    let (alo, ahi) = a.bbox();
    let (blo, bhi) = b.bbox();
    alo.x > bhi.x + margin || blo.x > ahi.x + margin || alo.y > bhi.y + margin || blo.y > ahi.y + margin
}

/// Packing (pairwise overlap areas below 1e-12) and coverage (clipped tile
/// areas sum to the window area within 1e-6 relative).
pub fn check_packing_coverage(patch: &Patch, window: &Polygon) -> CheckResult {
    let mut max_overlap = 0.0;
    let mut witness = None;
    for i in 0..patch.tiles.len() {
        for j in (i + 1)..patch.tiles.len() {
            if bboxes_apart(&patch.tiles[i], &patch.tiles[j], 0.0) {
                continue;
            }
            let a = convex_intersection_area(&patch.tiles[i], &patch.tiles[j]);
            if a > max_overlap {
                max_overlap = a;
                witness = Some(Witness::Pair(i, j));
            }
        }
    }
    let covered: f64 = patch
        .tiles
        .iter()
        .map(|t| convex_intersection_area(t, window))
        .sum();
    let target = window.signed_area();
    let rel = math::abs(covered - target) / target;
    let packing_ok = max_overlap < 1e-12;
    let coverage_ok = rel <= 1e-6;
    CheckResult {
        name: "coverage",
        passed: packing_ok && coverage_ok,
        residual: if packing_ok { rel } else { max_overlap },
        witness,
        details: format!(
            "max pairwise overlap = {max_overlap:.3e}; covered {covered:.9} of {target:.9} (rel dev {rel:.3e})"
        ),
    }
}

/// Pass iff every tile pair meets in nothing, a single point, or a full edge
/// of both.
pub fn check_vtv(patch: &Patch) -> CheckResult {
    let mut violations = 0usize;
    let mut witness = None;
    for i in 0..patch.tiles.len() {
        for j in (i + 1)..patch.tiles.len() {
            if bboxes_apart(&patch.tiles[i], &patch.tiles[j], crate::EPS_GEOM) {
                continue;
            }
            let kind = intersection_kind(&patch.tiles[i], &patch.tiles[j]);
            let ok = matches!(
                kind,
                IntersectionKind::Disjoint
                    | IntersectionKind::SinglePoint
                    | IntersectionKind::EdgeSegment {
                        full_edge_of_both: true
                    }
            );
            if !ok {
                violations += 1;
                if witness.is_none() {
                    witness = Some(Witness::Pair(i, j));
                }
            }
        }
    }
    CheckResult {
        name: "vtv",
        passed: violations == 0,
        residual: violations as f64,
        witness,
        details: format!("{violations} tile pairs violate vertex-to-vertex"),
    }
}

/// Reports (min inradius, max circumradius) over the patch. Informational:
/// finite patches of convex tiles always have positive radii, so this check
/// never fails; it witnesses normality at finite scale.
pub fn check_normality_radii(patch: &Patch) -> (f64, f64) {
    let mut r = f64::INFINITY;
    let mut big_r: f64 = 0.0;
    for t in &patch.tiles {
        r = r.min(inradius(t));
        big_r = big_r.max(circumradius(t));
    }
    (r, big_r)
}

/// Runs every requested check and aggregates the results. Never
/// short-circuits: all checks run even after failures.
pub fn verify(patch: &Patch, spec: &CheckSpec) -> VerificationReport {
    assert!(!spec.checks.is_empty(), "check spec must be non-empty");
    let mut results = Vec::with_capacity(spec.checks.len());
    let mut normality = None;
    for check in &spec.checks {
        match check {
            Check::UnitArea { target, tol } => results.push(check_unit_area(patch, *target, *tol)),
            Check::Noncongruence { delta } => results.push(check_noncongruence(patch, *delta)),
            Check::PerimeterBound { c } => results.push(check_perimeter_bound(patch, *c)),
            Check::Convexity => results.push(check_convexity(patch)),
            Check::PackingCoverage { window } => {
                results.push(check_packing_coverage(patch, window))
            }
            Check::VertexToVertex => results.push(check_vtv(patch)),
            Check::NormalityRadii => {
                let (r, big_r) = check_normality_radii(patch);
                normality = Some((r, big_r));
                results.push(CheckResult {
                    name: "normality",
                    passed: true,
                    residual: r,
                    witness: None,
                    details: format!("min inradius r = {r:.6}, max circumradius R = {big_r:.6}"),
                });
            }
        }
    }
    VerificationReport { results, normality }
}
