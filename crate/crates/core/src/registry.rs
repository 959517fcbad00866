//! Registry of congruence signatures with seeded rejection sampling.
//!
//! Each generation run owns one registry. A shape is only admitted when its
//! signature is farther than `delta` from every signature already stored
//! (within the same vertex-count group), which turns "no tile is congruent
//! to an earlier one" into a checkable, quantitative statement.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geom::{signature_distance, CongruenceSignature, Polygon};
use crate::DEFAULT_DELTA;

/// Outcome of attempting to register a polygon.
#[derive(Debug, Clone)]
pub enum RegisterOutcome {
    Accepted,
    /// A previously registered shape is within `delta`: the nearest prior
    /// signature and its distance.
    Conflict {
        witness: CongruenceSignature,
        distance: f64,
    },
}

impl RegisterOutcome {
    pub fn is_accepted(&self) -> bool {
        matches!(self, RegisterOutcome::Accepted)
    }
}

/// Registry errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegistryError {
    /// Rejection sampling failed `max_retries` times; the parameter box is
    /// too small relative to `delta`.
    ExhaustedRetries { retries: u32 },
}

impl fmt::Display for RegistryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegistryError::ExhaustedRetries { retries } => {
                write!(f, "no admissible sample after {retries} retries")
            }
        }
    }
}

impl core::error::Error for RegistryError {}

/// Tolerance-aware store of all signatures generated so far.
#[derive(Debug, Clone)]
pub struct ShapeRegistry {
    delta: f64,
    groups: BTreeMap<usize, Vec<CongruenceSignature>>,
    count: usize,
}

impl Default for ShapeRegistry {
    fn default() -> Self {
        Self::new(DEFAULT_DELTA)
    }
}

impl ShapeRegistry {
    pub fn new(delta: f64) -> Self {
        ShapeRegistry {
            delta,
            groups: BTreeMap::new(),
            count: 0,
        }
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// Minimum signature distance from `p` to any registered shape with the
    /// same vertex count; infinity when there is none.
    pub fn nearest_distance(&self, p: &Polygon) -> f64 {
        self.nearest_signature_distance(&p.signature())
    }

    fn nearest_signature_distance(&self, sig: &CongruenceSignature) -> f64 {
        let Some(group) = self.groups.get(&sig.n) else {
            return f64::INFINITY;
        };
        group
            .iter()
            .map(|s| signature_distance(sig, s))
            .fold(f64::INFINITY, f64::min)
    }

    /// Registers `p` unless a prior shape is within `delta`.
    pub fn register(&mut self, p: &Polygon) -> RegisterOutcome {
        let sig = p.signature();
        if let Some(group) = self.groups.get(&sig.n) {
            let mut nearest: Option<(f64, &CongruenceSignature)> = None;
            for s in group {
                let d = signature_distance(&sig, s);
                if nearest.map_or(true, |(best, _)| d < best) {
                    nearest = Some((d, s));
                }
            }
            if let Some((d, witness)) = nearest {
                if d <= self.delta {
                    return RegisterOutcome::Conflict {
                        witness: witness.clone(),
                        distance: d,
                    };
                }
            }
        }
        self.groups.entry(sig.n).or_default().push(sig);
        self.count += 1;
        RegisterOutcome::Accepted
    }

    /// Exhaustive O(N^2) audit: smallest pairwise distance among same-count
    /// registered signatures (infinity if fewer than two anywhere).
    pub fn audit_min_pairwise(&self) -> f64 {
        let mut best = f64::INFINITY;
        for group in self.groups.values() {
            for i in 0..group.len() {
                for j in (i + 1)..group.len() {
                    best = best.min(signature_distance(&group[i], &group[j]));
                }
            }
        }
        best
    }

    fn group_lens(&self) -> Vec<(usize, usize)> {
        self.groups.iter().map(|(&n, g)| (n, g.len())).collect()
    }

    fn truncate_groups(&mut self, lens: &[(usize, usize)]) {
        let snapshot: BTreeMap<usize, usize> = lens.iter().copied().collect();
        self.groups.retain(|n, g| {
            let keep = snapshot.get(n).copied().unwrap_or(0);
            g.truncate(keep);
            keep > 0
        });
        self.count = self.groups.values().map(Vec::len).sum();
    }
}

/// Configuration of the seeded rejection sampler.
#[derive(Debug, Clone)]
pub struct AvoidanceConfig {
    /// Attempt budget including the base-parameter try.
    pub max_retries: u32,
    /// Seed of the per-call ChaCha8 stream.
    pub rng_seed: u64,
    /// Default half-width, in plane units, for parameter boxes that a
    /// construction does not pin down explicitly.
    pub perturbation_scale: f64,
}

impl AvoidanceConfig {
    pub fn new(rng_seed: u64) -> Self {
        AvoidanceConfig {
            max_retries: 100,
            rng_seed,
            perturbation_scale: 1e-3,
        }
    }
}

/// Deterministic sub-seed derivation (SplitMix64 over seed and salt), used to
/// give every cell / fault / quadrant of a construction its own RNG stream.
pub fn derive_seed(seed: u64, salt: u64) -> u64 {
    let mut z = seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Draws parameters from `bounds` until `candidates` yields polygons that
/// all register as accepted, then registers them atomically.
///
/// The first try is exactly `base`; subsequent tries are uniform in the box.
/// The generator may return `None` to reject a parameter (infeasible
/// geometry); that consumes a retry. On success the accepted parameter
/// vector and the registered polygons are returned; on failure the registry
/// is left untouched.
pub fn sample_avoiding<F>(
    registry: &mut ShapeRegistry,
    cfg: &AvoidanceConfig,
    candidates: F,
    base: &[f64],
    bounds: &[(f64, f64)],
) -> Result<(Vec<f64>, Vec<Polygon>), RegistryError>
where
    F: Fn(&[f64]) -> Option<Vec<Polygon>>,
{
    assert_eq!(base.len(), bounds.len(), "base/bounds dimension mismatch");
    assert!(cfg.max_retries >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    let mut params: Vec<f64> = base.to_vec();
    for attempt in 0..cfg.max_retries {
        if attempt > 0 {
            for (p, &(lo, hi)) in params.iter_mut().zip(bounds.iter()) {
                *p = if hi > lo { rng.gen_range(lo..hi) } else { lo };
            }
        }
        let Some(polys) = candidates(&params) else {
            continue;
        };
        let snapshot = registry.group_lens();
        let mut ok = true;
        for p in &polys {
            if !registry.register(p).is_accepted() {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok((params, polys));
        }
        registry.truncate_groups(&snapshot);
    }
    Err(RegistryError::ExhaustedRetries {
        retries: cfg.max_retries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;
    use alloc::vec;

    fn tri(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> Polygon {
        Polygon::new(vec![
            Point::new(a.0, a.1),
            Point::new(b.0, b.1),
            Point::new(c.0, c.1),
        ])
        .unwrap()
    }

    #[test]
    fn empty_registry_accepts_anything() {
        let mut reg = ShapeRegistry::default();
        assert!(reg.register(&tri((0.0, 0.0), (2.0, 0.0), (0.0, 1.0))).is_accepted());
        assert_eq!(reg.count(), 1);
    }

    #[test]
    fn rotated_copy_conflicts() {
        let mut reg = ShapeRegistry::default();
        let t = tri((0.0, 0.0), (2.0, 0.0), (0.0, 1.0));
        reg.register(&t);
        let (s, c) = (libm::sin(0.7), libm::cos(0.7));
        let rotated = t
            .transform(|p| Point::new(c * p.x - s * p.y + 3.0, s * p.x + c * p.y - 1.0))
            .unwrap();
        match reg.register(&rotated) {
            RegisterOutcome::Conflict { distance, .. } => assert!(distance < 1e-9),
            RegisterOutcome::Accepted => panic!("rotated copy must conflict"),
        }
        assert_eq!(reg.count(), 1);
    }

    #[test]
    fn distinct_triangle_accepted() {
        let mut reg = ShapeRegistry::default();
        reg.register(&tri((0.0, 0.0), (2.0, 0.0), (0.0, 1.0)));
        let other = tri((0.0, 0.0), (2.1, 0.0), (0.0, 1.0));
        assert!(reg.nearest_distance(&other) >= 0.05);
        assert!(reg.register(&other).is_accepted());
    }

    #[test]
    fn nearest_distance_cases() {
        let mut reg = ShapeRegistry::default();
        let square = Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        assert_eq!(reg.nearest_distance(&square), f64::INFINITY);
        reg.register(&square);
        assert!(reg.nearest_distance(&square) < 1e-9);
        let rect = Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(2.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        assert!(reg.nearest_distance(&rect) >= 0.5);
    }

    #[test]
    fn sample_avoiding_returns_base_on_empty_registry() {
        let mut reg = ShapeRegistry::default();
        let cfg = AvoidanceConfig::new(42);
        let gen = |p: &[f64]| Some(vec![tri((0.0, 0.0), (2.0 + p[0], 0.0), (0.0, 1.0))]);
        let (params, polys) =
            sample_avoiding(&mut reg, &cfg, gen, &[0.0], &[(-0.05, 0.05)]).unwrap();
        assert_eq!(params, vec![0.0]);
        assert_eq!(polys.len(), 1);
        assert_eq!(reg.count(), 1);
    }

    #[test]
    fn sample_avoiding_moves_off_conflicting_base() {
        let mut reg = ShapeRegistry::default();
        reg.register(&tri((0.0, 0.0), (2.0, 0.0), (0.0, 1.0)));
        let cfg = AvoidanceConfig::new(42);
        let gen = |p: &[f64]| Some(vec![tri((0.0, 0.0), (2.0 + p[0], 0.0), (0.0, 1.0))]);
        let (params, _) = sample_avoiding(&mut reg, &cfg, gen, &[0.0], &[(-0.05, 0.05)]).unwrap();
        assert_ne!(params[0], 0.0);
        assert_eq!(reg.count(), 2);
        assert!(reg.audit_min_pairwise() > reg.delta());
        // Deterministic: the same seed and call sequence reproduces the draw.
        let mut reg2 = ShapeRegistry::default();
        reg2.register(&tri((0.0, 0.0), (2.0, 0.0), (0.0, 1.0)));
        let (params2, _) =
            sample_avoiding(&mut reg2, &cfg, gen, &[0.0], &[(-0.05, 0.05)]).unwrap();
        assert_eq!(params[0].to_bits(), params2[0].to_bits());
    }

    #[test]
    fn zero_width_box_exhausts() {
        let mut reg = ShapeRegistry::default();
        reg.register(&tri((0.0, 0.0), (2.0, 0.0), (0.0, 1.0)));
        let before = reg.count();
        let cfg = AvoidanceConfig::new(7);
        let gen = |_: &[f64]| Some(vec![tri((0.0, 0.0), (2.0, 0.0), (0.0, 1.0))]);
        let err = sample_avoiding(&mut reg, &cfg, gen, &[0.0], &[(0.0, 0.0)]).unwrap_err();
        assert_eq!(err, RegistryError::ExhaustedRetries { retries: 100 });
        assert_eq!(reg.count(), before, "atomicity: no partial registration");
    }

    #[test]
    fn batch_registration_is_atomic() {
        let mut reg = ShapeRegistry::default();
        let cfg = AvoidanceConfig {
            max_retries: 3,
            ..AvoidanceConfig::new(1)
        };
        // Second polygon of the batch always collides with the first.
        let gen = |p: &[f64]| {
            Some(vec![
                tri((0.0, 0.0), (2.0 + p[0], 0.0), (0.0, 1.0)),
                tri((0.0, 0.0), (2.0 + p[0], 0.0), (0.0, 1.0)),
            ])
        };
        let err = sample_avoiding(&mut reg, &cfg, gen, &[0.0], &[(-0.05, 0.05)]).unwrap_err();
        assert_eq!(err, RegistryError::ExhaustedRetries { retries: 3 });
        assert_eq!(reg.count(), 0);
    }
}
