use std::collections::{HashMap, HashSet};
use std::fmt;

use num_traits::Signed;

use crate::rational::{format_rational, Rational};

/// A place `from → to` holding `marking` initial tokens whose sojourn time
/// must lie in `[lower, upper]` (`upper = None` is `+∞`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Place {
    pub from: usize,
    pub to: usize,
    pub marking: u32,
    pub lower: Rational,
    pub upper: Option<Rational>,
}

impl Place {
    pub fn new(from: usize, to: usize, marking: u32, lower: Rational, upper: Option<Rational>) -> Self {
        Place {
            from,
            to,
            marking,
            lower,
            upper,
        }
    }
}

/// User-facing P-time event graph with arbitrary markings. Each place has
/// exactly one upstream and one downstream transition by construction.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EventGraphSpec {
    pub transitions: Vec<String>,
    pub places: Vec<Place>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateTransition(String),
    UnknownTransition(usize),
    NegativeLower,
    NegativeUpper,
    InvalidInterval,
    /// Same transitions and marking as an earlier place, disjoint interval.
    ConflictingDuplicate(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    /// Offending place, if the problem is tied to one.
    pub place: Option<usize>,
    pub violation: Violation,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.place {
            write!(f, "place #{}: ", p + 1)?;
        }
        match &self.violation {
            Violation::DuplicateTransition(name) => write!(f, "duplicate transition name `{name}`"),
            Violation::UnknownTransition(t) => write!(f, "unknown transition index {t}"),
            Violation::NegativeLower => f.write_str("lower bound is negative"),
            Violation::NegativeUpper => f.write_str("upper bound is negative"),
            Violation::InvalidInterval => f.write_str("lower bound exceeds upper bound"),
            Violation::ConflictingDuplicate(other) => {
                write!(f, "interval is disjoint from duplicate place #{}", other + 1)
            }
        }
    }
}

impl EventGraphSpec {
    pub fn new(transitions: Vec<String>, places: Vec<Place>) -> Self {
        EventGraphSpec { transitions, places }
    }

    pub fn transition_count(&self) -> usize {
        self.transitions.len()
    }

    /// Transition count after normalizing markings to 0/1:
    /// `n + Σ max(0, m(p) − 1)`.
    pub fn normalized_transition_count(&self) -> usize {
        self.transitions.len()
            + self
                .places
                .iter()
                .map(|p| p.marking.saturating_sub(1) as usize)
                .sum::<usize>()
    }
}

/// Checks interval and structural constraints, reporting every violation.
pub fn validate_spec(spec: &EventGraphSpec) -> Result<(), Vec<Diagnostic>> {
    let mut out = Vec::new();
    let mut names = HashSet::new();
    for name in &spec.transitions {
        if !names.insert(name.as_str()) {
            out.push(Diagnostic {
                place: None,
                violation: Violation::DuplicateTransition(name.clone()),
            });
        }
    }
    let n = spec.transitions.len();
    // (from, to, marking) -> (first place index, running intersection)
    let mut merged: HashMap<(usize, usize, u32), (usize, Rational, Option<Rational>)> = HashMap::new();
    for (idx, p) in spec.places.iter().enumerate() {
        let mut push = |v| {
            out.push(Diagnostic {
                place: Some(idx),
                violation: v,
            })
        };
        for t in [p.from, p.to] {
            if t >= n {
                push(Violation::UnknownTransition(t));
            }
        }
        if p.lower.is_negative() {
            push(Violation::NegativeLower);
        }
        if let Some(u) = &p.upper {
            if u.is_negative() {
                push(Violation::NegativeUpper);
            }
            if &p.lower > u {
                push(Violation::InvalidInterval);
                continue;
            }
        }
        let key = (p.from, p.to, p.marking);
        match merged.get_mut(&key) {
            None => {
                merged.insert(key, (idx, p.lower.clone(), p.upper.clone()));
            }
            Some((first, lo, hi)) => {
                if p.lower > *lo {
                    *lo = p.lower.clone();
                }
                if let Some(u) = &p.upper {
                    if hi.as_ref().is_none_or(|h| u < h) {
                        *hi = Some(u.clone());
                    }
                }
                if hi.as_ref().is_some_and(|h| &*lo > h) {
                    push(Violation::ConflictingDuplicate(*first));
                }
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let upper = self.upper.as_ref().map_or_else(|| "inf".to_owned(), format_rational);
        write!(
            f,
            "{} -> {} (m={}) [{}, {}]",
            self.from + 1,
            self.to + 1,
            self.marking,
            format_rational(&self.lower),
            upper
        )
    }
}
