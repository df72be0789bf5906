//! Desk-scale experiments: the irrational rotation coloring, word
//! complexity counts, and exhaustive cylinder enumeration for the spin
//! coloring.

mod census;
mod circle;
mod cylinder;

use thiserror::Error;

use crate::shift::ShiftError;

pub use census::{word_census, WordCensus};
pub use circle::{
    circle_color, circle_window_check, Alignment, CirclePoint, CircleReport, SeparationCheck,
    BOUNDARY_TOLERANCE,
};
pub use cylinder::{
    cylinder_injectivity_experiment, desk_sample, image_palette, CylinderReport,
    DEFAULT_CYLINDER_BUDGET,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExperimentError {
    #[error("angle {angle} lies within tolerance of endpoint {endpoint}")]
    Boundary { angle: f64, endpoint: f64 },
    #[error("bases {0} and {1} coincide modulo 2π")]
    SameBase(usize, usize),
    #[error("word {index} has length {len}, shorter than {length}")]
    WordTooShort { index: usize, len: usize, length: usize },
    #[error("factor length must be positive")]
    ZeroLength,
    #[error("alphabet size must be at least 3, got {0}")]
    AlphabetTooSmall(u32),
    #[error("{count} cylinders exceed the budget of {budget}")]
    BudgetExceeded { count: u128, budget: u64 },
    #[error(transparent)]
    Shift(#[from] ShiftError),
}
