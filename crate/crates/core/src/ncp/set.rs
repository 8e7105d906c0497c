use std::fmt;

use num_bigint::BigInt;

use crate::rational::{format_rational, Rational};

/// Solution set of an NCP instance: empty, or a closed interval whose
/// missing bounds are infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FeasibleSet {
    Empty,
    Interval {
        lo: Option<Rational>,
        hi: Option<Rational>,
    },
}

impl FeasibleSet {
    /// `[lo, hi]`, or `Empty` when both bounds are finite and crossed.
    pub fn interval(lo: Option<Rational>, hi: Option<Rational>) -> Self {
        match (&lo, &hi) {
            (Some(l), Some(h)) if l > h => FeasibleSet::Empty,
            _ => FeasibleSet::Interval { lo, hi },
        }
    }

    pub fn closed(lo: Rational, hi: Rational) -> Self {
        Self::interval(Some(lo), Some(hi))
    }

    pub fn everything() -> Self {
        FeasibleSet::Interval { lo: None, hi: None }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, FeasibleSet::Empty)
    }

    pub fn lo(&self) -> Option<&Rational> {
        match self {
            FeasibleSet::Interval { lo, .. } => lo.as_ref(),
            FeasibleSet::Empty => None,
        }
    }

    pub fn hi(&self) -> Option<&Rational> {
        match self {
            FeasibleSet::Interval { hi, .. } => hi.as_ref(),
            FeasibleSet::Empty => None,
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        match self {
            FeasibleSet::Empty => false,
            FeasibleSet::Interval { lo, hi } => {
                lo.as_ref().is_none_or(|l| l <= x) && hi.as_ref().is_none_or(|h| x <= h)
            }
        }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        match (self, other) {
            (FeasibleSet::Interval { lo: l1, hi: h1 }, FeasibleSet::Interval { lo: l2, hi: h2 }) => {
                let lo = match (l1, l2) {
                    (Some(a), Some(b)) => Some(a.max(b).clone()),
                    (a, b) => a.clone().or_else(|| b.clone()),
                };
                let hi = match (h1, h2) {
                    (Some(a), Some(b)) => Some(a.min(b).clone()),
                    (a, b) => a.clone().or_else(|| b.clone()),
                };
                Self::interval(lo, hi)
            }
            _ => FeasibleSet::Empty,
        }
    }

    /// Smallest interval containing both sets.
    pub fn hull(&self, other: &Self) -> Self {
        match (self, other) {
            (FeasibleSet::Empty, x) | (x, FeasibleSet::Empty) => x.clone(),
            (FeasibleSet::Interval { lo: l1, hi: h1 }, FeasibleSet::Interval { lo: l2, hi: h2 }) => {
                let lo = match (l1, l2) {
                    (Some(a), Some(b)) => Some(a.min(b).clone()),
                    _ => None,
                };
                let hi = match (h1, h2) {
                    (Some(a), Some(b)) => Some(a.max(b).clone()),
                    _ => None,
                };
                FeasibleSet::Interval { lo, hi }
            }
        }
    }

    /// Image under `x ↦ x / d`.
    pub fn divide(&self, d: u32) -> Self {
        let d = Rational::from_integer(BigInt::from(d));
        match self {
            FeasibleSet::Empty => FeasibleSet::Empty,
            FeasibleSet::Interval { lo, hi } => FeasibleSet::Interval {
                lo: lo.as_ref().map(|l| l / &d),
                hi: hi.as_ref().map(|h| h / &d),
            },
        }
    }
}

impl fmt::Display for FeasibleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FeasibleSet::Empty => f.write_str("empty"),
            FeasibleSet::Interval { lo, hi } => {
                match lo {
                    Some(l) => write!(f, "[{}", format_rational(l))?,
                    None => f.write_str("(-inf")?,
                }
                f.write_str(", ")?;
                match hi {
                    Some(h) => write!(f, "{}]", format_rational(h)),
                    None => f.write_str("inf)"),
                }
            }
        }
    }
}
