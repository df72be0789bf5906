//! Eventually periodic bi-infinite sequences and the equivariant
//! distinguishing coloring of the shift graph on the free part of `n^Z`.
//!
//! A [`BiSeq`] is a left tail repeated towards −∞, a finite middle, and a
//! right tail repeated towards +∞. Representations are kept canonical, so
//! structural equality is equality of the represented sequences.

mod coloring;
mod condition;
mod parse;

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

pub use coloring::{
    f_phi, gamma, in_w, phi_image, spin, trajectory, ColoringFn, Spin, TrajectoryWindow,
    WMember, YSymbol,
};
pub use condition::{check_condition_c, CheckMode, ConditionReport, Verdict, Violation, ViolationKind};
pub use parse::{parse_sample, parse_sequence};

pub type Symbol = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShiftError {
    #[error("alphabet size must be at least 2, got {0}")]
    AlphabetTooSmall(u32),
    #[error("tail words must be nonempty")]
    EmptyTail,
    #[error("symbol {symbol} outside alphabet of size {alphabet}")]
    SymbolOutOfRange { symbol: Symbol, alphabet: u32 },
    #[error("alphabet sizes differ ({0} vs {1})")]
    MixedAlphabets(u32, u32),
    #[error("sequence is periodic, not a point of the free part")]
    NotFree,
    #[error("sequence has a single nonzero symbol; spin is undefined on W")]
    InW,
    #[error("letter {m} outside 1..{n} for gamma")]
    GammaOutOfRange { m: u32, n: u32 },
    #[error("exact image needs finite support or a W point; use a trajectory window")]
    UnsupportedRepresentation,
    #[error("invalid window: lo={lo} > hi={hi}")]
    EmptyWindow { lo: i64, hi: i64 },
    #[error("sample point {0} is not free")]
    SampleNotFree(usize),
    #[error("sample points {0} and {1} are equal")]
    DuplicateSample(usize, usize),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

/// Eventually periodic sequence `Z -> 0..alphabet` in canonical form:
/// tails of minimal period, the left tail running as far right as it
/// matches, the right tail as far left as it can without overlapping it.
/// Periodic sequences are stored with an empty middle at `start = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiSeq {
    alphabet: u32,
    left: Vec<Symbol>,
    middle: Vec<Symbol>,
    start: i64,
    right: Vec<Symbol>,
}

/// Length of the primitive root of `word`.
fn primitive_period(word: &[Symbol]) -> usize {
    let len = word.len();
    (1..=len)
        .find(|&d| len.is_multiple_of(d) && (d..len).all(|i| word[i] == word[i - d]))
        .unwrap_or(len)
}

impl BiSeq {
    /// Canonicalizes raw fields: `left` repeats on `(-∞, start)` with
    /// `left[last]` at `start - 1`, `middle` occupies `start..start+len`,
    /// `right` repeats from the end of the middle.
    pub fn new(
        alphabet: u32,
        left: Vec<Symbol>,
        middle: Vec<Symbol>,
        start: i64,
        right: Vec<Symbol>,
    ) -> Result<Self, ShiftError> {
        if alphabet < 2 {
            return Err(ShiftError::AlphabetTooSmall(alphabet));
        }
        if left.is_empty() || right.is_empty() {
            return Err(ShiftError::EmptyTail);
        }
        if let Some(&symbol) = left
            .iter()
            .chain(&middle)
            .chain(&right)
            .find(|&&s| s >= alphabet)
        {
            return Err(ShiftError::SymbolOutOfRange { symbol, alphabet });
        }
        Ok(BiSeq {
            alphabet,
            left,
            middle,
            start,
            right,
        }
        .canonical())
    }

    /// Finite-support sequence: `word` at `start..`, zeros elsewhere.
    pub fn finite(alphabet: u32, word: Vec<Symbol>, start: i64) -> Result<Self, ShiftError> {
        BiSeq::new(alphabet, vec![0], word, start, vec![0])
    }

    /// Constant sequence.
    pub fn constant(alphabet: u32, symbol: Symbol) -> Result<Self, ShiftError> {
        BiSeq::new(alphabet, vec![symbol], Vec::new(), 0, vec![symbol])
    }

    fn canonical(self) -> BiSeq {
        let p = primitive_period(&self.left);
        let q = primitive_period(&self.right);
        let end = self.end();
        let left_at = |j: i64| self.left[(j - self.start).rem_euclid(p as i64) as usize];
        let right_at = |j: i64| self.right[(j - end).rem_euclid(q as i64) as usize];
        let limit = end + (p + q) as i64;

        let mut a = self.start;
        while a < limit && self.get(a) == left_at(a) {
            a += 1;
        }
        if a == limit {
            let word: Vec<Symbol> = (0..p as i64).map(|j| self.get(j)).collect();
            return BiSeq {
                alphabet: self.alphabet,
                left: word.clone(),
                middle: Vec::new(),
                start: 0,
                right: word,
            };
        }
        let mut mid_end = end.max(a);
        while mid_end > a && self.get(mid_end - 1) == right_at(mid_end - 1) {
            mid_end -= 1;
        }
        BiSeq {
            alphabet: self.alphabet,
            left: (0..p as i64).map(|i| self.get(a - p as i64 + i)).collect(),
            middle: (a..mid_end).map(|j| self.get(j)).collect(),
            start: a,
            right: (0..q as i64).map(|i| self.get(mid_end + i)).collect(),
        }
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn left(&self) -> &[Symbol] {
        &self.left
    }

    pub fn middle(&self) -> &[Symbol] {
        &self.middle
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    /// One past the last middle index.
    pub fn end(&self) -> i64 {
        self.start + self.middle.len() as i64
    }

    pub fn right(&self) -> &[Symbol] {
        &self.right
    }

    pub fn get(&self, j: i64) -> Symbol {
        if j < self.start {
            self.left[(j - self.start).rem_euclid(self.left.len() as i64) as usize]
        } else if j < self.end() {
            self.middle[(j - self.start) as usize]
        } else {
            self.right[(j - self.end()).rem_euclid(self.right.len() as i64) as usize]
        }
    }

    pub fn window(&self, lo: i64, hi: i64) -> Vec<Symbol> {
        (lo..=hi).map(|j| self.get(j)).collect()
    }

    /// `j ↦ self(j + i)`, i.e. the `i`-th power of the left shift.
    pub fn shift(&self, i: i64) -> BiSeq {
        if self.is_periodic() {
            let word: Vec<Symbol> = (0..self.left.len() as i64).map(|j| self.get(j + i)).collect();
            return BiSeq {
                alphabet: self.alphabet,
                left: word.clone(),
                middle: Vec::new(),
                start: 0,
                right: word,
            };
        }
        BiSeq {
            start: self.start - i,
            ..self.clone()
        }
    }

    /// `j ↦ self(-j)`.
    pub fn reflect(&self) -> BiSeq {
        let rev = |w: &[Symbol]| w.iter().rev().copied().collect::<Vec<_>>();
        BiSeq {
            alphabet: self.alphabet,
            left: rev(&self.right),
            middle: rev(&self.middle),
            start: 1 - self.end(),
            right: rev(&self.left),
        }
        .canonical()
    }

    pub fn is_periodic(&self) -> bool {
        self.middle.is_empty() && self.start == 0 && self.left == self.right
    }

    /// Member of the free part: moved by every nonzero shift.
    pub fn is_free(&self) -> bool {
        !self.is_periodic()
    }

    /// Finite support: both tails are the zero word.
    pub fn is_finite_support(&self) -> bool {
        self.left == [0] && self.right == [0]
    }

    /// Indices of nonzero symbols, when finitely many.
    pub fn support(&self) -> Option<Vec<i64>> {
        self.is_finite_support()
            .then(|| (self.start..self.end()).filter(|&j| self.get(j) != 0).collect())
    }

    /// Some `s` with `self == other.shift(s)`; for periodic sequences the
    /// least nonnegative such `s`.
    pub fn shift_distance(&self, other: &BiSeq) -> Option<i64> {
        if self.alphabet != other.alphabet || self.is_periodic() != other.is_periodic() {
            return None;
        }
        if self.is_periodic() {
            let period = self.left.len() as i64;
            return (0..period).find(|&s| other.shift(s) == *self);
        }
        (self.left == other.left && self.middle == other.middle && self.right == other.right)
            .then_some(other.start - self.start)
    }

    /// Lexicographic comparison along indices 0, 1, −1, 2, −2, …
    pub fn spiral_compare(&self, other: &BiSeq) -> Result<Ordering, ShiftError> {
        if self.alphabet != other.alphabet {
            return Err(ShiftError::MixedAlphabets(self.alphabet, other.alphabet));
        }
        if self == other {
            return Ok(Ordering::Equal);
        }
        // distinct eventually periodic sequences differ somewhere, so this ends
        Ok(spiral_indices()
            .map(|j| self.get(j).cmp(&other.get(j)))
            .find(|o| o.is_ne())
            .expect("distinct sequences differ at some index"))
    }

    /// Renders in the `seq` grammar.
    pub fn to_spec(&self) -> String {
        let join = |w: &[Symbol]| {
            w.iter()
                .map(Symbol::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        format!(
            "seq n={} left=({}) middle=[{}] start={} right=({})",
            self.alphabet,
            join(&self.left),
            join(&self.middle),
            self.start,
            join(&self.right)
        )
    }
}

impl fmt::Display for BiSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_spec())
    }
}

/// 0, 1, −1, 2, −2, …
pub fn spiral_indices() -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..).flat_map(|k| [k, -k]))
}
