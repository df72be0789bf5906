//! The `2n − 1` color equivariant coloring of the shift graph.
//!
//! Points off `W` are colored by their letter at 0 together with a spin
//! that compares the point with its reflection; points of `W` (a single
//! nonzero letter) get a spin that flips from down to up where the
//! nonzero letter sits.

use std::cmp::Ordering;
use std::fmt;

use super::{BiSeq, ShiftError, Symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    pub fn as_str(self) -> &'static str {
        match self {
            Spin::Up => "up",
            Spin::Down => "down",
        }
    }
}

/// A letter of the image alphabet: `(0, up)` or `(m, up|down)` for
/// `1 <= m < n`. Color ids are `0` for `(0, up)`, `2m − 1` for `(m, up)`
/// and `2m` for `(m, down)`, so ids fill `0..2n − 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YSymbol {
    letter: Symbol,
    spin: Spin,
}

impl YSymbol {
    pub fn new(letter: Symbol, spin: Spin) -> Option<Self> {
        (letter != 0 || spin == Spin::Up).then_some(YSymbol { letter, spin })
    }

    pub fn letter(self) -> Symbol {
        self.letter
    }

    pub fn spin(self) -> Spin {
        self.spin
    }

    pub fn id(self) -> u32 {
        match (self.letter, self.spin) {
            (0, _) => 0,
            (m, Spin::Up) => 2 * m - 1,
            (m, Spin::Down) => 2 * m,
        }
    }

    pub fn from_id(id: u32) -> YSymbol {
        match id {
            0 => YSymbol {
                letter: 0,
                spin: Spin::Up,
            },
            odd if odd % 2 == 1 => YSymbol {
                letter: odd.div_ceil(2),
                spin: Spin::Up,
            },
            even => YSymbol {
                letter: even / 2,
                spin: Spin::Down,
            },
        }
    }

    /// Size of the image alphabet over `n` letters.
    pub fn alphabet_size(n: u32) -> u32 {
        2 * n - 1
    }
}

impl fmt::Display for YSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.letter, self.spin.as_str())
    }
}

/// `α = shift(gamma(letter), shift)`: the nonzero letter sits at `-shift`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WMember {
    pub shift: i64,
    pub letter: Symbol,
}

/// The sequence with `m` at index 0 and zeros elsewhere, `1 <= m <= n − 1`.
pub fn gamma(m: Symbol, n: u32) -> Result<BiSeq, ShiftError> {
    if m == 0 || m >= n {
        return Err(ShiftError::GammaOutOfRange { m, n });
    }
    BiSeq::finite(n, vec![m], 0)
}

/// Decomposes points with exactly one nonzero symbol.
pub fn in_w(alpha: &BiSeq) -> Option<WMember> {
    (alpha.is_finite_support() && alpha.middle().len() == 1).then(|| WMember {
        shift: -alpha.start(),
        letter: alpha.middle()[0],
    })
}

fn require_free(alpha: &BiSeq) -> Result<(), ShiftError> {
    if alpha.is_free() {
        Ok(())
    } else {
        Err(ShiftError::NotFree)
    }
}

/// Up when `α(0) = 0` or `α` is at least its reflection in spiral order.
pub fn spin(alpha: &BiSeq) -> Result<Spin, ShiftError> {
    require_free(alpha)?;
    if in_w(alpha).is_some() {
        return Err(ShiftError::InW);
    }
    spin_unchecked(alpha)
}

fn spin_unchecked(alpha: &BiSeq) -> Result<Spin, ShiftError> {
    if alpha.get(0) == 0 {
        return Ok(Spin::Up);
    }
    Ok(match alpha.spiral_compare(&alpha.reflect())? {
        Ordering::Less => Spin::Down,
        Ordering::Equal | Ordering::Greater => Spin::Up,
    })
}

fn w_symbol(member: WMember, j: i64) -> YSymbol {
    let spin = if member.shift + j >= 0 {
        Spin::Up
    } else {
        Spin::Down
    };
    YSymbol {
        letter: member.letter,
        spin,
    }
}

/// The whole image sequence over color ids. Exact for finite-support
/// points and for `W`; other representations are rejected.
pub fn phi_image(alpha: &BiSeq) -> Result<BiSeq, ShiftError> {
    require_free(alpha)?;
    let n = alpha.alphabet();
    let y_alphabet = YSymbol::alphabet_size(n);
    if let Some(member) = in_w(alpha) {
        let pos = -member.shift;
        return BiSeq::new(
            y_alphabet,
            vec![w_symbol(member, pos - 1).id()],
            Vec::new(),
            pos,
            vec![w_symbol(member, pos).id()],
        );
    }
    if !alpha.is_finite_support() {
        return Err(ShiftError::UnsupportedRepresentation);
    }
    let middle = (alpha.start()..alpha.end())
        .map(|j| {
            let spin = spin_unchecked(&alpha.shift(j))?;
            Ok(YSymbol {
                letter: alpha.get(j),
                spin,
            }
            .id())
        })
        .collect::<Result<Vec<_>, ShiftError>>()?;
    BiSeq::new(y_alphabet, vec![0], middle, alpha.start(), vec![0])
}

/// The color of `α`: its image at index 0.
pub fn f_phi(alpha: &BiSeq) -> Result<YSymbol, ShiftError> {
    require_free(alpha)?;
    if let Some(member) = in_w(alpha) {
        return Ok(w_symbol(member, 0));
    }
    Ok(YSymbol {
        letter: alpha.get(0),
        spin: spin_unchecked(alpha)?,
    })
}

/// Colorings of the free part that can be evaluated on representable points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColoringFn {
    /// Every point gets the same color.
    Constant(u32),
    /// `β ↦ β(0)`.
    Letter,
    /// The `2n − 1` color spin coloring.
    FPhi,
}

impl ColoringFn {
    pub fn name(self) -> &'static str {
        match self {
            ColoringFn::Constant(_) => "constant",
            ColoringFn::Letter => "letter",
            ColoringFn::FPhi => "fphi",
        }
    }

    pub fn color(self, alpha: &BiSeq) -> Result<u32, ShiftError> {
        match self {
            ColoringFn::Constant(c) => Ok(c),
            ColoringFn::Letter => Ok(alpha.get(0)),
            ColoringFn::FPhi => f_phi(alpha).map(YSymbol::id),
        }
    }

    /// Number of color ids for points over an `n`-letter alphabet.
    pub fn palette(self, n: u32) -> u32 {
        match self {
            ColoringFn::Constant(c) => c + 1,
            ColoringFn::Letter => n,
            ColoringFn::FPhi => YSymbol::alphabet_size(n),
        }
    }

    /// The full color trajectory, when it is exactly representable.
    pub fn exact_trajectory(self, alpha: &BiSeq) -> Option<BiSeq> {
        match self {
            ColoringFn::Constant(c) => BiSeq::constant(self.palette(alpha.alphabet()).max(2), c).ok(),
            ColoringFn::Letter => Some(alpha.clone()),
            ColoringFn::FPhi => phi_image(alpha).ok(),
        }
    }

    /// Text for a color id: the Y-symbol for `FPhi`, the bare id otherwise.
    pub fn render(self, id: u32) -> String {
        match self {
            ColoringFn::FPhi => YSymbol::from_id(id).to_string(),
            _ => id.to_string(),
        }
    }
}

/// Colors of `shift(α, i)` for `i` in `offset..offset + word.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrajectoryWindow {
    pub offset: i64,
    pub word: Vec<u32>,
}

impl TrajectoryWindow {
    pub fn indices(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        self.word
            .iter()
            .enumerate()
            .map(move |(k, &c)| (self.offset + k as i64, c))
    }
}

pub fn trajectory(
    coloring: ColoringFn,
    alpha: &BiSeq,
    lo: i64,
    hi: i64,
) -> Result<TrajectoryWindow, ShiftError> {
    if lo > hi {
        return Err(ShiftError::EmptyWindow { lo, hi });
    }
    require_free(alpha)?;
    let word = (lo..=hi)
        .map(|i| coloring.color(&alpha.shift(i)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TrajectoryWindow { offset: lo, word })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(m: u32) -> YSymbol {
        YSymbol::new(m, Spin::Up).unwrap()
    }

    fn down(m: u32) -> YSymbol {
        YSymbol::new(m, Spin::Down).unwrap()
    }

    #[test]
    fn y_symbol_ids() {
        assert!(YSymbol::new(0, Spin::Down).is_none());
        let all: Vec<YSymbol> = (0..5).map(YSymbol::from_id).collect();
        assert_eq!(all, vec![up(0), up(1), down(1), up(2), down(2)]);
        for s in all {
            assert_eq!(YSymbol::from_id(s.id()), s);
        }
        assert_eq!(down(1).to_string(), "(1,down)");
    }

    #[test]
    fn gamma_points() {
        let g = gamma(1, 3).unwrap();
        assert_eq!(g.get(0), 1);
        assert_eq!(g.get(5), 0);
        assert!(gamma(2, 3).unwrap().is_free());
        assert_eq!(gamma(3, 3), Err(ShiftError::GammaOutOfRange { m: 3, n: 3 }));
        assert_eq!(gamma(0, 3), Err(ShiftError::GammaOutOfRange { m: 0, n: 3 }));
        assert_eq!(g.shift(1).get(-1), 1);
    }

    #[test]
    fn w_membership() {
        let g2 = gamma(2, 3).unwrap();
        assert_eq!(in_w(&g2), Some(WMember { shift: 0, letter: 2 }));
        assert_eq!(
            in_w(&g2.shift(3)),
            Some(WMember { shift: 3, letter: 2 })
        );
        assert_eq!(in_w(&BiSeq::constant(3, 0).unwrap()), None);
        assert_eq!(in_w(&BiSeq::finite(3, vec![1, 1], 0).unwrap()), None);
        for m in 1..3 {
            assert!(in_w(&gamma(m, 3).unwrap()).is_some());
        }
    }

    #[test]
    fn spin_cases() {
        let zero_at_origin = BiSeq::finite(3, vec![1, 0, 2], -1).unwrap();
        assert_eq!(spin(&zero_at_origin).unwrap(), Spin::Up);
        let alpha = BiSeq::finite(3, vec![1, 2], 0).unwrap();
        assert_eq!(spin(&alpha).unwrap(), Spin::Up);
        assert_eq!(spin(&alpha.reflect()).unwrap(), Spin::Down);
        let palindrome = BiSeq::finite(3, vec![2, 1, 2], -1).unwrap();
        assert_eq!(spin(&palindrome).unwrap(), Spin::Up);
        assert_eq!(spin(&gamma(1, 3).unwrap()), Err(ShiftError::InW));
        assert_eq!(
            spin(&BiSeq::constant(3, 1).unwrap()),
            Err(ShiftError::NotFree)
        );
    }

    #[test]
    fn w_images_step_at_the_letter() {
        let g1 = gamma(1, 3).unwrap();
        let img = phi_image(&g1).unwrap();
        for j in -5..0 {
            assert_eq!(YSymbol::from_id(img.get(j)), down(1));
        }
        for j in 0..5 {
            assert_eq!(YSymbol::from_id(img.get(j)), up(1));
        }
        let shifted = phi_image(&g1.shift(-1)).unwrap();
        assert_eq!(YSymbol::from_id(shifted.get(0)), down(1));
        assert_eq!(f_phi(&g1).unwrap(), up(1));
        assert_eq!(f_phi(&g1.shift(-1)).unwrap(), down(1));
    }

    #[test]
    fn finite_support_images() {
        let alpha = BiSeq::finite(3, vec![2, 0, 1], -1).unwrap();
        let img = phi_image(&alpha).unwrap();
        assert_eq!(YSymbol::from_id(img.get(0)), up(0));
        assert_eq!(YSymbol::from_id(img.get(40)), up(0));
        // alpha(0)=2, alpha(1)=1 > alpha(-1)=0
        let beta = BiSeq::finite(3, vec![2, 1], 0).unwrap();
        assert_eq!(f_phi(&beta).unwrap(), up(2));
        assert_eq!(
            phi_image(&BiSeq::new(3, vec![1, 2], vec![], 0, vec![0]).unwrap()),
            Err(ShiftError::UnsupportedRepresentation)
        );
    }

    #[test]
    fn first_components_recover_the_point() {
        let alpha = BiSeq::finite(3, vec![1, 2, 0, 2, 1], -2).unwrap();
        let img = phi_image(&alpha).unwrap();
        for j in -8..8 {
            assert_eq!(YSymbol::from_id(img.get(j)).letter(), alpha.get(j));
        }
    }

    #[test]
    fn gamma_trajectory_window() {
        let t = trajectory(ColoringFn::FPhi, &gamma(1, 3).unwrap(), -2, 2).unwrap();
        let symbols: Vec<YSymbol> = t.word.iter().map(|&id| YSymbol::from_id(id)).collect();
        assert_eq!(symbols, vec![down(1), down(1), up(1), up(1), up(1)]);
        assert_eq!(t.offset, -2);
    }

    #[test]
    fn trajectory_edge_cases() {
        let alpha = BiSeq::finite(3, vec![1, 2], 0).unwrap();
        let constant = trajectory(ColoringFn::Constant(4), &alpha, -3, 3).unwrap();
        assert!(constant.word.iter().all(|&c| c == 4));
        assert_eq!(
            trajectory(ColoringFn::Letter, &alpha, 1, 0),
            Err(ShiftError::EmptyWindow { lo: 1, hi: 0 })
        );
        let shifted = trajectory(ColoringFn::FPhi, &alpha.shift(1), -4, 4).unwrap();
        let base = trajectory(ColoringFn::FPhi, &alpha, -3, 5).unwrap();
        assert_eq!(shifted.word, base.word);
    }
}
