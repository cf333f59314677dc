//! The level p, its color set C_p and the vertex admissibility rule.
//!
//! For odd p the colors are the even integers 0, 2, ..., p-3 and the
//! q-bound is 2p-4; for even p they are 0, 1, ..., (p-4)/2 and the q-bound
//! is p-4. A triple of colors is admissible at a trivalent vertex when it
//! satisfies the triangle inequalities, has even sum, and its sum does not
//! exceed the q-bound.

use alloc::vec::Vec;

use crate::error::Error;
use crate::Result;

/// Colors are plain small integers, validated against C_p at API
/// boundaries. Enumeration hot loops stay allocation-free this way.
pub type Color = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

/// A level p >= 3 together with its color set and q-bound.
///
/// Immutable after construction; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelSpec {
    p: u32,
    parity: Parity,
    colors: Vec<Color>,
    q_bound: u32,
}

impl LevelSpec {
    /// Builds the level data for p. Levels 3 and 4 are accepted as
    /// degenerate single-color theories; the closed-form lemma operations
    /// downstream require p >= 5 (odd) or p >= 6 (even).
    pub fn new(p: u32) -> Result<Self> {
        if p < 3 {
            return Err(Error::InvalidLevel(p));
        }
        let (parity, colors, q_bound) = if p % 2 == 1 {
            let colors = (0..=p - 3).step_by(2).collect();
            (Parity::Odd, colors, 2 * p - 4)
        } else {
            let colors = (0..=(p - 4) / 2).collect();
            (Parity::Even, colors, p - 4)
        };
        Ok(LevelSpec { p, parity, colors, q_bound })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_odd(&self) -> bool {
        self.parity == Parity::Odd
    }

    /// The color set C_p in ascending order.
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// The largest color in C_p.
    pub fn max_color(&self) -> Color {
        *self.colors.last().expect("color set is never empty")
    }

    pub fn q_bound(&self) -> u32 {
        self.q_bound
    }

    pub fn is_color(&self, c: Color) -> bool {
        c <= self.max_color() && (self.parity == Parity::Even || c % 2 == 0)
    }

    pub fn check_color(&self, c: Color) -> Result<()> {
        if self.is_color(c) {
            Ok(())
        } else {
            Err(Error::InvalidColor { color: c, p: self.p })
        }
    }

    pub fn check_colors(&self, colors: &[Color]) -> Result<()> {
        colors.iter().try_for_each(|&c| self.check_color(c))
    }

    /// Admissibility of the triple (a, b, c) at a trivalent vertex:
    /// triangle inequalities, even sum, sum at most the q-bound.
    /// Inputs are validated; see `admissible` for the unchecked hot path.
    pub fn admissible_triple(&self, a: Color, b: Color, c: Color) -> Result<bool> {
        self.check_color(a)?;
        self.check_color(b)?;
        self.check_color(c)?;
        Ok(self.admissible(a, b, c))
    }

    /// Unchecked admissibility test. Callers must have validated the colors.
    #[inline]
    pub(crate) fn admissible(&self, a: Color, b: Color, c: Color) -> bool {
        let sum = a + b + c;
        let max = a.max(b).max(c);
        // |b-c| <= a <= b+c and its cyclic permutations collapse to one
        // inequality on the largest color.
        2 * max <= sum && sum % 2 == 0 && sum <= self.q_bound
    }

    /// True when some c in C_p completes (a, b) to an admissible triple.
    /// Used to prune enumeration at half-assigned vertices.
    #[inline]
    pub(crate) fn pair_extends(&self, a: Color, b: Color) -> bool {
        // The smallest candidate is |a-b| (or |a-b|+1 for even p when the
        // parity forces it up); it is in C_p and minimizes the sum, so it
        // decides feasibility.
        let mut c = a.abs_diff(b);
        if (a + b + c) % 2 == 1 {
            c += 1;
        }
        self.is_color(c) && self.admissible(a, b, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn level_5_colors_and_q() {
        let l = LevelSpec::new(5).unwrap();
        assert_eq!(l.colors(), &[0, 2]);
        assert_eq!(l.q_bound(), 6);
        assert_eq!(l.parity(), Parity::Odd);
    }

    #[test]
    fn level_8_colors_and_q() {
        let l = LevelSpec::new(8).unwrap();
        assert_eq!(l.colors(), &[0, 1, 2]);
        assert_eq!(l.q_bound(), 4);
        assert_eq!(l.parity(), Parity::Even);
    }

    #[test]
    fn level_3_is_the_one_color_theory() {
        let l = LevelSpec::new(3).unwrap();
        assert_eq!(l.colors(), &[0]);
        assert_eq!(l.q_bound(), 2);
    }

    #[test]
    fn too_small_level_rejected() {
        assert_eq!(LevelSpec::new(2), Err(Error::InvalidLevel(2)));
    }

    #[test]
    fn admissibility_examples() {
        let l5 = LevelSpec::new(5).unwrap();
        assert!(l5.admissible_triple(2, 2, 2).unwrap()); // sum 6 <= 6
        let l8 = LevelSpec::new(8).unwrap();
        assert!(!l8.admissible_triple(1, 1, 1).unwrap()); // odd sum
        let l7 = LevelSpec::new(7).unwrap();
        assert!(!l7.admissible_triple(0, 2, 4).unwrap()); // triangle fails at 0
    }

    #[test]
    fn admissibility_is_symmetric() {
        for p in [5, 7, 8, 10, 12, 13] {
            let l = LevelSpec::new(p).unwrap();
            for &a in l.colors() {
                for &b in l.colors() {
                    for &c in l.colors() {
                        let base = l.admissible(a, b, c);
                        for (x, y, z) in
                            [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)]
                        {
                            assert_eq!(base, l.admissible(x, y, z));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn zero_pairs_only_with_equal_colors() {
        for p in [5, 7, 9, 8, 10, 16] {
            let l = LevelSpec::new(p).unwrap();
            for &a in l.colors() {
                for &b in l.colors() {
                    assert_eq!(l.admissible(0, a, b), a == b);
                }
                // (0, a, a) is admissible for every color a of either parity.
                assert!(l.admissible(0, a, a));
            }
        }
    }

    #[test]
    fn odd_levels_have_vacuous_parity_condition() {
        for p in [5, 7, 9, 11, 13, 15] {
            let l = LevelSpec::new(p).unwrap();
            for &a in l.colors() {
                for &b in l.colors() {
                    for &c in l.colors() {
                        assert_eq!((a + b + c) % 2, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_color_reported() {
        let l = LevelSpec::new(5).unwrap();
        assert_eq!(
            l.admissible_triple(1, 2, 2),
            Err(Error::InvalidColor { color: 1, p: 5 })
        );
        let colors = vec![0u32, 2, 4];
        assert!(LevelSpec::new(5).unwrap().check_colors(&colors).is_err());
    }
}
