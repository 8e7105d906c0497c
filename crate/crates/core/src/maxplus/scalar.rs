use std::fmt;

use num_traits::Zero;

use crate::rational::{format_rational, parse_rational, ParseRationalError, Rational};

/// An element of the completed max-plus semifield.
///
/// Variant order gives the canonical order: `Bottom < Finite(_) < Top`, and
/// finite values compare as rationals.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtScalar {
    /// ε = −∞, neutral for ⊕ and absorbing for ⊗.
    Bottom,
    Finite(Rational),
    /// ⊤ = +∞, absorbing for ⊙.
    Top,
}

impl ExtScalar {
    pub fn zero() -> Self {
        ExtScalar::Finite(Rational::zero())
    }

    pub fn int(v: i64) -> Self {
        ExtScalar::Finite(crate::rational::int(v))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        ExtScalar::Finite(crate::rational::ratio(num, den))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtScalar::Finite(_))
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, ExtScalar::Bottom)
    }

    pub fn is_top(&self) -> bool {
        matches!(self, ExtScalar::Top)
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            ExtScalar::Finite(r) => Some(r),
            _ => None,
        }
    }

    /// `a ⊕ b = max(a, b)`.
    pub fn oplus(&self, other: &Self) -> Self {
        self.max(other).clone()
    }

    /// `a ∧ b = min(a, b)`.
    pub fn wedge(&self, other: &Self) -> Self {
        self.min(other).clone()
    }

    /// `a ⊗ b`: addition on finite values, ε absorbing (also against ⊤).
    pub fn otimes(&self, other: &Self) -> Self {
        use ExtScalar::*;
        match (self, other) {
            (Bottom, _) | (_, Bottom) => Bottom,
            (Top, _) | (_, Top) => Top,
            (Finite(a), Finite(b)) => Finite(a + b),
        }
    }

    /// Dual product `a ⊙ b`: equals `a ⊗ b` unless an argument is ⊤.
    pub fn odot(&self, other: &Self) -> Self {
        use ExtScalar::*;
        match (self, other) {
            (Top, _) | (_, Top) => Top,
            (Bottom, _) | (_, Bottom) => Bottom,
            (Finite(a), Finite(b)) => Finite(a + b),
        }
    }

    /// Multiplicative inverse with ε⁻¹ = ⊤ and ⊤⁻¹ = ε.
    pub fn inverse(&self) -> Self {
        match self {
            ExtScalar::Bottom => ExtScalar::Top,
            ExtScalar::Top => ExtScalar::Bottom,
            ExtScalar::Finite(r) => ExtScalar::Finite(-r),
        }
    }

    /// Parses a rational, `-inf` (ε) or `inf` / `+inf` (⊤).
    pub fn parse(s: &str) -> Result<Self, ParseRationalError> {
        match s.trim() {
            "-inf" => Ok(ExtScalar::Bottom),
            "inf" | "+inf" => Ok(ExtScalar::Top),
            other => parse_rational(other).map(ExtScalar::Finite),
        }
    }
}

impl From<Rational> for ExtScalar {
    fn from(r: Rational) -> Self {
        ExtScalar::Finite(r)
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtScalar::Bottom => f.write_str("-inf"),
            ExtScalar::Top => f.write_str("inf"),
            ExtScalar::Finite(r) => f.write_str(&format_rational(r)),
        }
    }
}
