//! P-time event graphs: validation, marking normalization, dynamics
//! matrices, the reduction to PIC-NCP and periodic trajectories.

mod normalize;
mod oracle;
mod periods;
mod spec;
mod tensor;
mod trajectory;

pub use normalize::{normalize, Normalized};
pub use oracle::oracle_1periodic;
pub use periods::{bounded_consistency, pic_reduction, period_set, Mode};
pub use spec::{validate_spec, Diagnostic, EventGraphSpec, Place, Violation};
pub use tensor::{tensor_blocks, tensor_pic, tensor_system};
pub use trajectory::{
    synthesize, validate_trajectory, Constraint, ConstraintViolation, Trajectory, ValidationReport,
};

use num_traits::Signed;

use crate::maxplus::{ExtScalar, MpMatrix};
use crate::precgraph::Circuit;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PtegError {
    #[error("invalid event graph: {}", join_diagnostics(.0))]
    Invalid(Vec<Diagnostic>),
    #[error("place #{} has marking {marking}; normalize first", .place + 1)]
    MarkingAboveOne { place: usize, marking: u32 },
    #[error("periodicity must be at least 1")]
    ZeroPeriodicity,
    #[error("{0}")]
    BadMatrices(String),
    #[error("period is infeasible: positive circuit {0}")]
    PositiveCircuit(Circuit),
    #[error("expected {expected} seed entries, got {got}")]
    SeedLength { expected: usize, got: usize },
    #[error("trajectory has a non-finite entry")]
    NonFinite,
}

fn join_diagnostics(d: &[Diagnostic]) -> String {
    d.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

/// A P-TEG with every marking in {0, 1}, stored as the interval dynamics
/// `A⁰ ⊗ x(k) ⪯ x(k) ⪯ B⁰ ⊙ x(k)`, `A¹ ⊗ x(k) ⪯ x(k+1) ⪯ B¹ ⊙ x(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pteg {
    names: Vec<String>,
    a0: MpMatrix,
    a1: MpMatrix,
    b0: MpMatrix,
    b1: MpMatrix,
}

fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("t{k}")).collect()
}

impl Pteg {
    /// Builds the dynamics matrices of a 0/1-marked spec. Places sharing
    /// transitions and marking are merged by interval intersection.
    pub fn from_spec(spec: &EventGraphSpec) -> Result<Self, PtegError> {
        validate_spec(spec).map_err(PtegError::Invalid)?;
        if let Some((place, p)) = spec.places.iter().enumerate().find(|(_, p)| p.marking > 1) {
            return Err(PtegError::MarkingAboveOne {
                place,
                marking: p.marking,
            });
        }
        let n = spec.transition_count();
        let mut a = [MpMatrix::bottoms(n, n), MpMatrix::bottoms(n, n)];
        let mut b = [MpMatrix::filled(n, n, ExtScalar::Top), MpMatrix::filled(n, n, ExtScalar::Top)];
        for p in &spec.places {
            let m = p.marking as usize;
            let lower = ExtScalar::Finite(p.lower.clone());
            let upper = p.upper.clone().map_or(ExtScalar::Top, ExtScalar::Finite);
            let (i, j) = (p.to, p.from);
            let merged_lower = a[m].get(i, j).oplus(&lower);
            a[m].set(i, j, merged_lower);
            let merged_upper = b[m].get(i, j).wedge(&upper);
            b[m].set(i, j, merged_upper);
        }
        let [a0, a1] = a;
        let [b0, b1] = b;
        Ok(Pteg {
            names: spec.transitions.clone(),
            a0,
            a1,
            b0,
            b1,
        })
    }

    /// Builds a P-TEG directly from its four matrices, checking that they
    /// describe places: `A` over `R≥0 ∪ {−∞}`, `B` over `R≥0 ∪ {+∞}`, and a
    /// finite `B` entry only where `A` is finite and not smaller.
    pub fn from_matrices(a0: MpMatrix, a1: MpMatrix, b0: MpMatrix, b1: MpMatrix) -> Result<Self, PtegError> {
        let n = a0.rows();
        for m in [&a0, &a1, &b0, &b1] {
            if m.rows() != n || m.cols() != n {
                return Err(PtegError::BadMatrices(format!("all matrices must be {n}x{n}")));
            }
        }
        for (a, b) in [(&a0, &b0), (&a1, &b1)] {
            for i in 0..n {
                for j in 0..n {
                    let (lo, hi) = (a.get(i, j), b.get(i, j));
                    let bad = match (lo, hi) {
                        (ExtScalar::Top, _) | (_, ExtScalar::Bottom) => true,
                        (ExtScalar::Finite(l), _) if l.is_negative() => true,
                        (ExtScalar::Bottom, ExtScalar::Finite(_)) => true,
                        (ExtScalar::Finite(l), ExtScalar::Finite(h)) => l > h,
                        _ => false,
                    };
                    if bad {
                        return Err(PtegError::BadMatrices(format!(
                            "entry ({}, {}) is not a valid interval [{lo}, {hi}]",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        Ok(Pteg {
            names: default_names(n),
            a0,
            a1,
            b0,
            b1,
        })
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn a0(&self) -> &MpMatrix {
        &self.a0
    }

    pub fn a1(&self) -> &MpMatrix {
        &self.a1
    }

    pub fn b0(&self) -> &MpMatrix {
        &self.b0
    }

    pub fn b1(&self) -> &MpMatrix {
        &self.b1
    }

    /// `(A⁰, A¹, B⁰, B¹)`.
    pub fn dynamics_matrices(&self) -> (&MpMatrix, &MpMatrix, &MpMatrix, &MpMatrix) {
        (&self.a0, &self.a1, &self.b0, &self.b1)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::rational::{int, ratio, Rational};

    fn place(from: usize, to: usize, marking: u32, lower: Rational, upper: Option<Rational>) -> Place {
        Place::new(from, to, marking, lower, upper)
    }

    /// Three transitions, two of them sharing a self-looping buffer.
    pub(crate) fn example_spec() -> EventGraphSpec {
        EventGraphSpec::new(
            vec!["t1".into(), "t2".into(), "t3".into()],
            vec![
                place(0, 1, 0, int(2), Some(int(3))),
                place(1, 0, 1, int(0), None),
                place(1, 2, 0, ratio(1, 2), None),
                place(2, 1, 1, ratio(1, 2), None),
                place(2, 2, 1, int(0), Some(int(4))),
                place(0, 2, 0, int(6), None),
            ],
        )
    }

    pub(crate) fn example() -> Pteg {
        Pteg::from_spec(&example_spec()).unwrap()
    }
}
