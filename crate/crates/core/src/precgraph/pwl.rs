use num_traits::{Signed, Zero};

use crate::ncp::FeasibleSet;
use crate::rational::Rational;

/// The affine function `slope·λ + intercept`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    pub slope: i64,
    pub intercept: Rational,
}

impl Line {
    pub fn new(slope: i64, intercept: Rational) -> Self {
        Line { slope, intercept }
    }

    pub fn eval(&self, lambda: &Rational) -> Rational {
        lambda * Rational::from_integer(self.slope.into()) + &self.intercept
    }

    fn add(&self, other: &Line) -> Line {
        Line::new(self.slope + other.slope, &self.intercept + &other.intercept)
    }

    // λ where self and other meet; slopes must differ
    fn meet(&self, other: &Line) -> Rational {
        (&self.intercept - &other.intercept) / Rational::from_integer((other.slope - self.slope).into())
    }

    /// Closed sublevel set `{λ ∈ [lo, hi] : line(λ) ≤ 0}` where `None`
    /// bounds are infinite.
    fn nonpositive_on(&self, lo: Option<&Rational>, hi: Option<&Rational>) -> FeasibleSet {
        let domain = FeasibleSet::interval(lo.cloned(), hi.cloned());
        let half = match self.slope.signum() {
            0 if self.intercept.is_positive() => FeasibleSet::Empty,
            0 => FeasibleSet::everything(),
            s => {
                let root = -&self.intercept / Rational::from_integer(self.slope.into());
                if s > 0 {
                    FeasibleSet::interval(None, Some(root))
                } else {
                    FeasibleSet::interval(Some(root), None)
                }
            }
        };
        domain.intersect(&half)
    }
}

/// Convex piecewise-linear function of `λ` with integer slopes.
///
/// `lines[k]` is active on `[breakpoints[k-1], breakpoints[k]]`; slopes
/// strictly increase from left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pwl {
    breakpoints: Vec<Rational>,
    lines: Vec<Line>,
}

impl Pwl {
    pub fn constant(value: Rational) -> Self {
        Pwl {
            breakpoints: Vec::new(),
            lines: vec![Line::new(0, value)],
        }
    }

    pub fn zero() -> Self {
        Self::constant(Rational::zero())
    }

    /// Upper envelope `max(lines)`. Panics on an empty slice.
    pub fn upper_envelope(lines: &[Line]) -> Self {
        assert!(!lines.is_empty(), "envelope of no lines");
        let mut sorted = lines.to_vec();
        sorted.sort_by(|a, b| a.slope.cmp(&b.slope).then_with(|| b.intercept.cmp(&a.intercept)));
        sorted.dedup_by(|later, earlier| later.slope == earlier.slope);
        let mut hull: Vec<Line> = Vec::new();
        for line in sorted {
            while hull.len() >= 2 {
                let (a, b) = (&hull[hull.len() - 2], &hull[hull.len() - 1]);
                if a.meet(&line) <= a.meet(b) {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(line);
        }
        let breakpoints = hull.windows(2).map(|w| w[0].meet(&w[1])).collect();
        Pwl { breakpoints, lines: hull }
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn slopes(&self) -> Vec<i64> {
        self.lines.iter().map(|l| l.slope).collect()
    }

    fn piece_index(&self, lambda: &Rational) -> usize {
        self.breakpoints.partition_point(|b| b < lambda)
    }

    pub fn eval(&self, lambda: &Rational) -> Rational {
        self.lines[self.piece_index(lambda)].eval(lambda)
    }

    /// Pointwise sum; the result is again convex.
    pub fn add(&self, other: &Pwl) -> Pwl {
        let mut merged: Vec<Rational> = self.breakpoints.iter().chain(&other.breakpoints).cloned().collect();
        merged.sort();
        merged.dedup();
        let mut lines = Vec::with_capacity(merged.len() + 1);
        for seg in 0..=merged.len() {
            let (ia, ib) = match seg {
                0 => (0, 0),
                _ => {
                    let left = &merged[seg - 1];
                    (
                        self.breakpoints.partition_point(|b| b <= left),
                        other.breakpoints.partition_point(|b| b <= left),
                    )
                }
            };
            lines.push(self.lines[ia].add(&other.lines[ib]));
        }
        let mut out = Pwl {
            breakpoints: merged,
            lines,
        };
        out.simplify();
        out
    }

    fn simplify(&mut self) {
        let mut k = 0;
        while k < self.breakpoints.len() {
            if self.lines[k] == self.lines[k + 1] {
                self.breakpoints.remove(k);
                self.lines.remove(k + 1);
            } else {
                k += 1;
            }
        }
    }

    pub fn is_convex(&self) -> bool {
        self.lines.windows(2).all(|w| w[0].slope < w[1].slope)
            && self.breakpoints.windows(2).all(|w| w[0] < w[1])
    }

    /// `{λ : f(λ) ≤ 0}`, a closed interval or empty by convexity.
    pub fn nonpositive_set(&self) -> FeasibleSet {
        let mut acc = FeasibleSet::Empty;
        for (k, line) in self.lines.iter().enumerate() {
            let lo = if k == 0 { None } else { Some(&self.breakpoints[k - 1]) };
            let hi = self.breakpoints.get(k);
            acc = acc.hull(&line.nonpositive_on(lo, hi));
        }
        acc
    }
}
