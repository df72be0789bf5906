//! Exhaustive enumeration of the cylinders `[w]` with `w` placed on
//! positions `[0, L)`, checking the spin coloring's trajectory map on
//! every free point and counting the color words it produces.

use std::collections::BTreeSet;

use super::{word_census, ExperimentError, WordCensus};
use crate::shift::{
    check_condition_c, gamma, phi_image, trajectory, BiSeq, ColoringFn, ConditionReport,
    ViolationKind, YSymbol,
};

pub const DEFAULT_CYLINDER_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct CylinderReport {
    pub n: u32,
    pub length: usize,
    /// Free points enumerated: every nonzero word on `[0, L)`.
    pub points: usize,
    pub condition: ConditionReport,
    /// Color ids occurring anywhere in the images.
    pub palette: BTreeSet<u32>,
    /// Color words `f(σ^i α)`, `0 <= i < L`, one per cylinder.
    pub census: WordCensus,
}

impl CylinderReport {
    pub fn collisions(&self) -> usize {
        self.condition.count(ViolationKind::Injectivity)
    }

    pub fn reflection_collisions(&self) -> usize {
        self.condition.count(ViolationKind::Reflection)
    }

    pub fn distinct_words(&self) -> usize {
        self.census.distinct()
    }

    pub fn entropy_estimate(&self) -> f64 {
        self.census.entropy_estimate()
    }

    /// `n^L` cylinders.
    pub fn cylinder_count(&self) -> u128 {
        (self.n as u128).pow(self.length as u32)
    }

    /// Every check that must hold at this size. A single-letter window
    /// only reaches `W`, whose images never use `(0, up)`, so the full
    /// palette is demanded from `L = 2` on.
    pub fn passes(&self) -> bool {
        let distinct = self.distinct_words() as u128;
        let upper = (YSymbol::alphabet_size(self.n) as u128).pow(self.length as u32);
        let palette_ok =
            self.length < 2 || self.palette.len() as u32 == YSymbol::alphabet_size(self.n);
        self.condition.violations.is_empty()
            && self.cylinder_count() <= distinct
            && distinct <= upper
            && palette_ok
    }
}

/// Color ids used by the middles and tails of `images`.
pub fn image_palette(images: &[BiSeq]) -> BTreeSet<u32> {
    images
        .iter()
        .flat_map(|b| b.left().iter().chain(b.middle()).chain(b.right()))
        .copied()
        .collect()
}

fn words(n: u32, length: usize) -> impl Iterator<Item = Vec<u32>> {
    let total = (n as u64).pow(length as u32);
    (0..total).map(move |mut code| {
        let mut word = vec![0; length];
        for slot in word.iter_mut() {
            *slot = (code % n as u64) as u32;
            code /= n as u64;
        }
        word
    })
}

pub fn cylinder_injectivity_experiment(
    n: u32,
    length: usize,
    budget: u64,
) -> Result<CylinderReport, ExperimentError> {
    if n < 3 {
        return Err(ExperimentError::AlphabetTooSmall(n));
    }
    if length == 0 {
        return Err(ExperimentError::ZeroLength);
    }
    let count = (n as u128).checked_pow(length as u32).unwrap_or(u128::MAX);
    if count > budget as u128 {
        return Err(ExperimentError::BudgetExceeded { count, budget });
    }

    let mut points = Vec::new();
    let mut color_words = Vec::new();
    // the zero cylinder holds no free point of its own support; any point
    // agreeing with zero on [0, L) stands in for it
    let zero_rep = gamma(1, n)?.shift(-(length as i64));
    for word in words(n, length) {
        let alpha = if word.iter().all(|&s| s == 0) {
            zero_rep.clone()
        } else {
            let alpha = BiSeq::finite(n, word, 0)?;
            points.push(alpha.clone());
            alpha
        };
        let window = trajectory(ColoringFn::FPhi, &alpha, 0, length as i64 - 1)?;
        color_words.push(window.word);
    }

    let condition = check_condition_c(ColoringFn::FPhi, &points, length as i64)?;
    let images = points
        .iter()
        .map(phi_image)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CylinderReport {
        n,
        length,
        points: points.len(),
        condition,
        palette: image_palette(&images),
        census: word_census(&color_words, length)?,
    })
}

/// Finite-support points with support inside `[-support_radius,
/// support_radius]`, together with the single-letter points whose letter
/// sits within `w_shift_radius` of the origin.
pub fn desk_sample(
    n: u32,
    support_radius: i64,
    w_shift_radius: i64,
) -> Result<Vec<BiSeq>, ExperimentError> {
    if n < 3 {
        return Err(ExperimentError::AlphabetTooSmall(n));
    }
    let width = (2 * support_radius.max(0) + 1) as usize;
    let mut sample = BTreeSet::new();
    for word in words(n, width) {
        if word.iter().any(|&s| s != 0) {
            sample.insert(BiSeq::finite(n, word, -support_radius.max(0))?);
        }
    }
    for m in 1..n {
        for s in -w_shift_radius.abs()..=w_shift_radius.abs() {
            sample.insert(gamma(m, n)?.shift(s));
        }
    }
    Ok(sample.into_iter().collect())
}
