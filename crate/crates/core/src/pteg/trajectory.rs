use std::fmt;

use num_bigint::BigInt;

use super::{tensor_system, Pteg, PtegError};
use crate::maxplus::{ExtScalar, MaxPlusError, MpMatrix};
use crate::ncp::solution_vectors;
use crate::rational::Rational;

/// A `d`-periodic dater sequence: `x(k + d) = d·λ + x(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    d: usize,
    lambda: Rational,
    seed: Vec<Vec<Rational>>,
}

impl Trajectory {
    /// `seed` holds `x(0) … x(d−1)`, all of the same length.
    pub fn new(lambda: Rational, seed: Vec<Vec<Rational>>) -> Result<Self, PtegError> {
        let d = seed.len();
        if d == 0 {
            return Err(PtegError::ZeroPeriodicity);
        }
        let n = seed[0].len();
        if let Some(bad) = seed.iter().find(|x| x.len() != n) {
            return Err(PtegError::SeedLength {
                expected: n,
                got: bad.len(),
            });
        }
        Ok(Trajectory { d, lambda, seed })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn seed(&self) -> &[Vec<Rational>] {
        &self.seed
    }

    /// Number of transitions.
    pub fn n(&self) -> usize {
        self.seed[0].len()
    }

    /// Horizon used when none is given: three full periods.
    pub fn default_horizon(&self) -> usize {
        3 * self.d
    }

    /// The dater vector `x(k)`.
    pub fn state(&self, k: usize) -> Vec<Rational> {
        let shift = Rational::from_integer(BigInt::from(k / self.d * self.d)) * &self.lambda;
        self.seed[k % self.d].iter().map(|v| v + &shift).collect()
    }
}

/// Builds the trajectory `x̃ = S* ⊗ u` of the `dn×dn` tensor system `S` at
/// `λ`, split into `x(0) … x(d−1)`.
pub fn synthesize(p: &Pteg, d: usize, lambda: &Rational, u: &[Rational]) -> Result<Trajectory, PtegError> {
    let system = tensor_system(p, d, lambda)?;
    let n = p.n();
    if u.len() != d * n {
        return Err(PtegError::SeedLength {
            expected: d * n,
            got: u.len(),
        });
    }
    let sols = solution_vectors(&system).map_err(|e| match e {
        MaxPlusError::PositiveCircuit(c) => PtegError::PositiveCircuit(c),
        other => PtegError::BadMatrices(other.to_string()),
    })?;
    let x = sols.solve(u).map_err(|_| PtegError::NonFinite)?;
    let seed = if n == 0 {
        vec![Vec::new(); d]
    } else {
        x.chunks(n).map(<[Rational]>::to_vec).collect()
    };
    Ok(Trajectory {
        d,
        lambda: lambda.clone(),
        seed,
    })
}

/// Which inequality of the dynamics a violation breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constraint {
    /// `x_i(k) ≥ A⁰_ij + x_j(k)`
    LowerSameStep,
    /// `x_i(k) ≤ B⁰_ij + x_j(k)`
    UpperSameStep,
    /// `x_i(k+1) ≥ A¹_ij + x_j(k)`
    LowerNextStep,
    /// `x_i(k+1) ≤ B¹_ij + x_j(k)`
    UpperNextStep,
    /// `x_i(k+1) ≥ x_i(k)`
    NonDecreasing,
}

impl Constraint {
    pub fn name(self) -> &'static str {
        match self {
            Constraint::LowerSameStep => "A0",
            Constraint::UpperSameStep => "B0",
            Constraint::LowerNextStep => "A1",
            Constraint::UpperNextStep => "B1",
            Constraint::NonDecreasing => "non-decreasing",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintViolation {
    pub k: usize,
    pub constraint: Constraint,
    /// Downstream transition.
    pub i: usize,
    /// Upstream transition (equal to `i` for monotonicity).
    pub j: usize,
}

impl fmt::Display for ConstraintViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k={}: {} violated for transitions ({}, {})",
            self.k,
            self.constraint.name(),
            self.i + 1,
            self.j + 1
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub horizon: usize,
    pub violations: Vec<ConstraintViolation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check(
    out: &mut Vec<ConstraintViolation>,
    k: usize,
    a: &MpMatrix,
    b: &MpMatrix,
    earlier: &[Rational],
    later: &[Rational],
    kinds: (Constraint, Constraint),
) {
    let n = earlier.len();
    for i in 0..n {
        for j in 0..n {
            let gap = &later[i] - &earlier[j];
            let below = matches!(a.get(i, j), ExtScalar::Finite(l) if &gap < l);
            let above = matches!(b.get(i, j), ExtScalar::Finite(h) if &gap > h);
            if below {
                out.push(ConstraintViolation { k, constraint: kinds.0, i, j });
            }
            if above {
                out.push(ConstraintViolation { k, constraint: kinds.1, i, j });
            }
        }
    }
}

/// Checks the interval dynamics and monotonicity of `x(0) … x(K+1)`.
pub fn validate_trajectory(p: &Pteg, t: &Trajectory, horizon: usize) -> Result<ValidationReport, PtegError> {
    if t.n() != p.n() {
        return Err(PtegError::SeedLength {
            expected: p.n(),
            got: t.n(),
        });
    }
    let (a0, a1, b0, b1) = p.dynamics_matrices();
    let mut violations = Vec::new();
    let mut x = t.state(0);
    for k in 0..=horizon {
        let next = t.state(k + 1);
        check(&mut violations, k, a0, b0, &x, &x, (Constraint::LowerSameStep, Constraint::UpperSameStep));
        check(&mut violations, k, a1, b1, &x, &next, (Constraint::LowerNextStep, Constraint::UpperNextStep));
        for i in 0..x.len() {
            if next[i] < x[i] {
                violations.push(ConstraintViolation {
                    k,
                    constraint: Constraint::NonDecreasing,
                    i,
                    j: i,
                });
            }
        }
        x = next;
    }
    Ok(ValidationReport { horizon, violations })
}
