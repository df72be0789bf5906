//! Sample-based check that a coloring's trajectory map is injective and
//! that no trajectory's reflection is also a trajectory.
//!
//! Images are shift-invariant sets, so comparisons are made up to shift:
//! `tr(α) = σ^s tr(β)` is a collision unless `α = σ^s β`, and a reflected
//! trajectory matching any shift of another trajectory is a collision.

use std::fmt;

use super::{BiSeq, ColoringFn, ShiftError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    Injectivity,
    Reflection,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::Injectivity => "injectivity",
            ViolationKind::Reflection => "reflection",
        })
    }
}

/// `first` and `second` index the sample. For injectivity,
/// `tr(first) = σ^offset tr(second)`; for reflection,
/// `reflect(tr(first)) = σ^offset tr(second)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub first: usize,
    pub second: usize,
    pub offset: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    Exact,
    Windowed { radius: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Undecided => "undecided",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub mode: CheckMode,
    pub pairs_checked: usize,
    pub violations: Vec<Violation>,
    /// Pairs whose windows agree, so the window cannot separate them.
    pub undecided: Vec<(ViolationKind, usize, usize)>,
}

impl ConditionReport {
    pub fn verdict(&self) -> Verdict {
        if !self.violations.is_empty() {
            Verdict::Fail
        } else if !self.undecided.is_empty() {
            Verdict::Undecided
        } else {
            Verdict::Pass
        }
    }

    pub fn count(&self, kind: ViolationKind) -> usize {
        self.violations.iter().filter(|v| v.kind == kind).count()
    }
}

fn validate(sample: &[BiSeq]) -> Result<(), ShiftError> {
    if let Some(first) = sample.first() {
        if let Some(other) = sample.iter().find(|s| s.alphabet() != first.alphabet()) {
            return Err(ShiftError::MixedAlphabets(first.alphabet(), other.alphabet()));
        }
    }
    if let Some(i) = sample.iter().position(|s| !s.is_free()) {
        return Err(ShiftError::SampleNotFree(i));
    }
    let mut sorted: Vec<(&BiSeq, usize)> = sample.iter().zip(0..).collect();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(ShiftError::DuplicateSample(w[0].1.min(w[1].1), w[0].1.max(w[1].1)));
    }
    Ok(())
}

/// Decides the condition exactly when every trajectory is representable;
/// otherwise compares trajectory windows on `[-window, window]`.
pub fn check_condition_c(
    coloring: ColoringFn,
    sample: &[BiSeq],
    window: i64,
) -> Result<ConditionReport, ShiftError> {
    validate(sample)?;
    let exact: Option<Vec<BiSeq>> = sample
        .iter()
        .map(|alpha| coloring.exact_trajectory(alpha))
        .collect();
    match exact {
        Some(images) => Ok(check_exact(sample, &images)),
        None => check_windowed(coloring, sample, window),
    }
}

fn check_exact(sample: &[BiSeq], images: &[BiSeq]) -> ConditionReport {
    let mut violations = Vec::new();
    let mut pairs_checked = 0;
    let reflected: Vec<BiSeq> = images.iter().map(BiSeq::reflect).collect();

    for (i, image) in images.iter().enumerate() {
        // a periodic trajectory already identifies a point with its own shift
        if image.is_periodic() {
            violations.push(Violation {
                kind: ViolationKind::Injectivity,
                first: i,
                second: i,
                offset: image.left().len() as i64,
            });
        }
    }
    for i in 0..images.len() {
        for j in i..images.len() {
            pairs_checked += 1;
            if i < j && !images[i].is_periodic() {
                if let Some(s) = images[i].shift_distance(&images[j]) {
                    if sample[i] != sample[j].shift(s) {
                        violations.push(Violation {
                            kind: ViolationKind::Injectivity,
                            first: i,
                            second: j,
                            offset: s,
                        });
                    }
                }
            }
            if let Some(s) = reflected[i].shift_distance(&images[j]) {
                violations.push(Violation {
                    kind: ViolationKind::Reflection,
                    first: i,
                    second: j,
                    offset: s,
                });
            }
        }
    }
    ConditionReport {
        mode: CheckMode::Exact,
        pairs_checked,
        violations,
        undecided: Vec::new(),
    }
}

fn check_windowed(
    coloring: ColoringFn,
    sample: &[BiSeq],
    radius: i64,
) -> Result<ConditionReport, ShiftError> {
    let windows = sample
        .iter()
        .map(|alpha| super::trajectory(coloring, alpha, -radius, radius).map(|t| t.word))
        .collect::<Result<Vec<_>, _>>()?;
    let mut undecided = Vec::new();
    let mut pairs_checked = 0;
    for i in 0..windows.len() {
        let reversed: Vec<u32> = windows[i].iter().rev().copied().collect();
        for j in i..windows.len() {
            pairs_checked += 1;
            if i < j && windows[i] == windows[j] {
                undecided.push((ViolationKind::Injectivity, i, j));
            }
            if reversed == windows[j] {
                undecided.push((ViolationKind::Reflection, i, j));
            }
        }
    }
    Ok(ConditionReport {
        mode: CheckMode::Windowed { radius },
        pairs_checked,
        violations: Vec::new(),
        undecided,
    })
}

#[cfg(test)]
mod tests {
    use super::super::gamma;
    use super::*;

    #[test]
    fn gammas_pass_under_fphi() {
        let sample = vec![gamma(1, 3).unwrap(), gamma(2, 3).unwrap()];
        let report = check_condition_c(ColoringFn::FPhi, &sample, 32).unwrap();
        assert_eq!(report.mode, CheckMode::Exact);
        assert_eq!(report.verdict(), Verdict::Pass);
        assert_eq!(report.pairs_checked, 3);
    }

    #[test]
    fn constant_coloring_is_not_injective() {
        let alpha = BiSeq::finite(3, vec![1, 2], 0).unwrap();
        let sample = vec![alpha.clone(), alpha.shift(1)];
        let report = check_condition_c(ColoringFn::Constant(0), &sample, 32).unwrap();
        assert_eq!(report.verdict(), Verdict::Fail);
        assert!(report.count(ViolationKind::Injectivity) > 0);
    }

    #[test]
    fn letter_coloring_collides_with_reflection() {
        let alpha = BiSeq::finite(3, vec![1, 2], 0).unwrap();
        let sample = vec![alpha.clone(), alpha.reflect()];
        let report = check_condition_c(ColoringFn::Letter, &sample, 32).unwrap();
        assert_eq!(report.verdict(), Verdict::Fail);
        assert_eq!(report.count(ViolationKind::Injectivity), 0);
        let v = report
            .violations
            .iter()
            .find(|v| v.kind == ViolationKind::Reflection && v.first == 0 && v.second == 1)
            .unwrap();
        assert_eq!(v.offset, 0);
    }

    #[test]
    fn shifted_copies_are_not_collisions() {
        let alpha = BiSeq::finite(3, vec![1, 2, 2], 0).unwrap();
        let sample = vec![alpha.clone(), alpha.shift(2), alpha.shift(-5)];
        let report = check_condition_c(ColoringFn::FPhi, &sample, 32).unwrap();
        assert_eq!(report.verdict(), Verdict::Pass);
    }

    #[test]
    fn general_tails_fall_back_to_windows() {
        let a = BiSeq::new(3, vec![1, 2], vec![], 0, vec![0]).unwrap();
        let b = BiSeq::new(3, vec![2, 1], vec![], 0, vec![0]).unwrap();
        let report = check_condition_c(ColoringFn::FPhi, &[a.clone(), b], 8).unwrap();
        assert_eq!(report.mode, CheckMode::Windowed { radius: 8 });
        assert_eq!(report.verdict(), Verdict::Pass);
        let far = a.shift(-100);
        let report = check_condition_c(ColoringFn::FPhi, &[far.clone(), far.shift(-2)], 8).unwrap();
        assert_eq!(report.verdict(), Verdict::Undecided);
    }

    #[test]
    fn sample_preconditions() {
        let g = gamma(1, 3).unwrap();
        assert_eq!(
            check_condition_c(ColoringFn::FPhi, &[g.clone(), g.clone()], 4),
            Err(ShiftError::DuplicateSample(0, 1))
        );
        assert_eq!(
            check_condition_c(ColoringFn::FPhi, &[g.clone(), gamma(1, 4).unwrap()], 4),
            Err(ShiftError::MixedAlphabets(3, 4))
        );
        assert_eq!(
            check_condition_c(ColoringFn::FPhi, &[BiSeq::constant(3, 1).unwrap()], 4),
            Err(ShiftError::SampleNotFree(0))
        );
    }
}
