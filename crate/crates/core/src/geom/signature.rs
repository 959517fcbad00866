//! Congruence signatures: canonical cyclic (edge length, interior angle)
//! sequences that are equal (up to tolerance) exactly for congruent polygons.
//! Congruence includes reflections, so canonicalization runs over both
//! traversal orientations.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::PI;

use crate::math;

use super::Polygon;

/// Canonical edge/angle sequence identifying a polygon up to isometry
/// (translations, rotations and reflections).
#[derive(Debug, Clone, PartialEq)]
pub struct CongruenceSignature {
    /// Vertex count.
    pub n: usize,
    /// (edge length, interior angle in radians) pairs, length `n`, in the
    /// lexicographically minimal cyclic rotation over both orientations.
    pub canonical_sequence: Vec<(f64, f64)>,
}

/// Raw forward sequence: entry `i` pairs the edge leaving vertex `i` with the
/// interior angle at vertex `i`.
fn forward_sequence(p: &Polygon) -> Vec<(f64, f64)> {
    let vs = p.vertices();
    let n = vs.len();
    let mut seq = Vec::with_capacity(n);
    for i in 0..n {
        let prev = vs[(i + n - 1) % n];
        let here = vs[i];
        let next = vs[(i + 1) % n];
        let e_in = here - prev;
        let e_out = next - here;
        let turn = math::atan2(e_in.cross(e_out), e_in.dot(e_out));
        // Interior angle in (0, 2*pi): pi minus the CCW turn; reflex corners
        // of non-convex polygons come out > pi.
        let interior = PI - turn;
        seq.push((e_out.norm(), interior));
    }
    seq
}

/// Sequence of the mirror image, expressed in terms of the forward sequence:
/// traversal reverses and each angle pairs with its other adjacent edge.
fn mirrored_sequence(seq: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let n = seq.len();
    (0..n)
        .map(|j| {
            let len = seq[(2 * n - 2 - j) % n].0;
            let ang = seq[(n - 1 - j) % n].1;
            (len, ang)
        })
        .collect()
}

fn cmp_pair(a: (f64, f64), b: (f64, f64)) -> Ordering {
    a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1))
}

fn cmp_rotation(seq: &[(f64, f64)], r1: usize, r2: usize) -> Ordering {
    let n = seq.len();
    for k in 0..n {
        let ord = cmp_pair(seq[(r1 + k) % n], seq[(r2 + k) % n]);
        if ord != Ordering::Equal {
            return ord;
        }
    }
    Ordering::Equal
}

fn min_rotation(seq: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let n = seq.len();
    let mut best = 0;
    for r in 1..n {
        if cmp_rotation(seq, r, best) == Ordering::Less {
            best = r;
        }
    }
    (0..n).map(|k| seq[(best + k) % n]).collect()
}

fn cmp_seq(a: &[(f64, f64)], b: &[(f64, f64)]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        let ord = cmp_pair(*x, *y);
        if ord != Ordering::Equal {
            return ord;
        }
    }
    Ordering::Equal
}

pub(super) fn signature(p: &Polygon) -> CongruenceSignature {
    let fwd = forward_sequence(p);
    let mir = mirrored_sequence(&fwd);
    let cf = min_rotation(&fwd);
    let cm = min_rotation(&mir);
    let canonical_sequence = if cmp_seq(&cm, &cf) == Ordering::Less { cm } else { cf };
    CongruenceSignature {
        n: p.vertex_count(),
        canonical_sequence,
    }
}

/// Distance between two signatures: the minimum over all cyclic alignments
/// and both orientations of the maximum componentwise deviation (lengths in
/// plane units, angles in radians, equally weighted). Signatures of different
/// vertex counts are infinitely far apart.
pub fn signature_distance(a: &CongruenceSignature, b: &CongruenceSignature) -> f64 {
    if a.n != b.n {
        return f64::INFINITY;
    }
    let n = a.n;
    let sa = &a.canonical_sequence;
    let mirrored = mirrored_sequence(&b.canonical_sequence);
    let mut best = f64::INFINITY;
    for cand in [&b.canonical_sequence, &mirrored] {
        for r in 0..n {
            let mut worst: f64 = 0.0;
            for k in 0..n {
                let (la, aa) = sa[k];
                let (lb, ab) = cand[(k + r) % n];
                worst = worst.max(math::abs(la - lb)).max(math::abs(aa - ab));
                if worst >= best {
                    break;
                }
            }
            best = best.min(worst);
        }
    }
    best
}
