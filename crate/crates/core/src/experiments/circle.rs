//! The rotation-by-one-radian graph on the circle, colored by the
//! indicator of `(0, π/2) ∪ (4π/6, 5π/6)`.
//!
//! Every orbit is a bi-infinite line `θ + k`. A window check looks for an
//! index where two aligned lines disagree in color, which rules out that
//! particular alignment as a color-preserving automorphism. It is
//! evidence, not proof: only the window is inspected.

use std::f64::consts::{PI, TAU};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::ExperimentError;

pub const BOUNDARY_TOLERANCE: f64 = 1e-9;

const ENDPOINTS: [f64; 5] = [0.0, PI / 2.0, 4.0 * PI / 6.0, 5.0 * PI / 6.0, TAU];

/// The point `e^{i(base_angle + steps)}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CirclePoint {
    pub base_angle: f64,
    pub steps: i64,
}

impl CirclePoint {
    pub fn new(base_angle: f64, steps: i64) -> Self {
        CirclePoint { base_angle, steps }
    }

    /// Angle reduced into `[0, 2π)`.
    pub fn angle(&self) -> f64 {
        (self.base_angle + self.steps as f64).rem_euclid(TAU)
    }
}

pub fn circle_color(point: CirclePoint) -> Result<u8, ExperimentError> {
    let angle = point.angle();
    if let Some(&endpoint) = ENDPOINTS
        .iter()
        .find(|&&e| (angle - e).abs() < BOUNDARY_TOLERANCE)
    {
        return Err(ExperimentError::Boundary { angle, endpoint });
    }
    let inside = (0.0 < angle && angle < PI / 2.0)
        || (4.0 * PI / 6.0 < angle && angle < 5.0 * PI / 6.0);
    Ok(u8::from(inside))
}

/// How the line through `first` is laid over the line through `second`:
/// index `k` on the first meets `second + map(k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alignment {
    /// `k ↦ k`.
    Translate { first: usize, second: usize },
    /// `k ↦ −k`.
    Reflect { first: usize, second: usize },
    /// `k ↦ center − k` within one line, `center != 0`.
    SelfReflect { base: usize, center: i64 },
}

impl Alignment {
    fn points(self, bases: &[f64], k: i64) -> (CirclePoint, CirclePoint) {
        match self {
            Alignment::Translate { first, second } => (
                CirclePoint::new(bases[first], k),
                CirclePoint::new(bases[second], k),
            ),
            Alignment::Reflect { first, second } => (
                CirclePoint::new(bases[first], k),
                CirclePoint::new(bases[second], -k),
            ),
            Alignment::SelfReflect { base, center } => (
                CirclePoint::new(bases[base], k),
                CirclePoint::new(bases[base], center - k),
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationCheck {
    pub alignment: Alignment,
    /// First index (in the order 0, 1, −1, 2, −2, …) with differing colors.
    pub separating_index: Option<i64>,
    /// Indices skipped because an angle sat on an interval endpoint.
    pub boundary_skips: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleReport {
    pub radius: i64,
    pub checks: Vec<SeparationCheck>,
}

impl CircleReport {
    pub fn all_separated(&self) -> bool {
        self.checks.iter().all(|c| c.separating_index.is_some())
    }

    pub fn undecided(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.separating_index.is_none())
            .count()
    }
}

fn circular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

fn scan(alignment: Alignment, bases: &[f64], radius: i64) -> SeparationCheck {
    let mut boundary_skips = 0;
    let mut separating_index = None;
    for k in crate::shift::spiral_indices().take((2 * radius + 1) as usize) {
        let (x, y) = alignment.points(bases, k);
        match (circle_color(x), circle_color(y)) {
            (Ok(a), Ok(b)) if a != b => {
                separating_index = Some(k);
                break;
            }
            (Ok(_), Ok(_)) => {}
            _ => boundary_skips += 1,
        }
    }
    SeparationCheck {
        alignment,
        separating_index,
        boundary_skips,
    }
}

/// Checks every pair of lines under translation and reflection, and every
/// line against its reflection through a seeded random vertex or edge
/// midpoint other than the base point, scanning `k ∈ [−radius, radius]`.
pub fn circle_window_check(
    bases: &[f64],
    radius: i64,
    seed: u64,
) -> Result<CircleReport, ExperimentError> {
    for i in 0..bases.len() {
        for j in i + 1..bases.len() {
            if circular_distance(bases[i], bases[j]) < BOUNDARY_TOLERANCE {
                return Err(ExperimentError::SameBase(i, j));
            }
        }
    }
    let radius = radius.max(0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut alignments = Vec::new();
    for first in 0..bases.len() {
        for second in first + 1..bases.len() {
            alignments.push(Alignment::Translate { first, second });
            alignments.push(Alignment::Reflect { first, second });
        }
    }
    let span = radius.max(1);
    for base in 0..bases.len() {
        let magnitude = rng.gen_range(1..=span);
        let center = if rng.gen_bool(0.5) { magnitude } else { -magnitude };
        alignments.push(Alignment::SelfReflect { base, center });
    }
    Ok(CircleReport {
        radius,
        checks: alignments.into_iter().map(|a| scan(a, bases, radius)).collect(),
    })
}
