use std::fmt;
use std::str::FromStr;

use super::{tensor_pic, Pteg, PtegError};
use crate::maxplus::MpMatrix;
use crate::ncp::{solve_fast, FeasibleSet, PicTriple};
use crate::rational::int;

/// `P = B¹♯`, `I = A¹ ⊕ E⊗`, `C = A⁰ ⊕ B⁰♯`.
pub fn pic_reduction(p: &Pteg) -> PicTriple {
    let n = p.n();
    let pp = p.b1().conjugate();
    let i = p.a1().oplus(&MpMatrix::identity(n)).expect("square");
    let c = p.a0().oplus(&p.b0().conjugate()).expect("square");
    PicTriple::new(pp, i, c).expect("conjugates of B have no +inf")
}

/// How [`period_set`] computes `Λ_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Solve the `n×n` instance once; `Λ_d` does not depend on `d`.
    #[default]
    Theorem2,
    /// Solve the `dn×dn` tensor instance and rescale.
    Tensor,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Theorem2 => "theorem2",
            Mode::Tensor => "tensor",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "theorem2" => Ok(Mode::Theorem2),
            "tensor" => Ok(Mode::Tensor),
            other => Err(format!("unknown mode `{other}` (expected theorem2 or tensor)")),
        }
    }
}

/// The set `Λ_d` of periods `λ` admitting a consistent `d`-periodic
/// trajectory.
pub fn period_set(p: &Pteg, d: usize, mode: Mode) -> Result<FeasibleSet, PtegError> {
    if d == 0 {
        return Err(PtegError::ZeroPeriodicity);
    }
    let set = match mode {
        Mode::Theorem2 => solve_fast(&pic_reduction(p)),
        Mode::Tensor => {
            let d32 = u32::try_from(d).map_err(|_| PtegError::BadMatrices(format!("d = {d} is too large")))?;
            solve_fast(&tensor_pic(p, d)?).divide(d32)
        }
    };
    // implied by the diagonal of I unless there are no transitions at all
    Ok(set.intersect(&FeasibleSet::interval(Some(int(0)), None)))
}

/// True iff some 1-periodic (equivalently, some bounded) consistent
/// trajectory exists.
pub fn bounded_consistency(p: &Pteg) -> bool {
    !solve_fast(&pic_reduction(p)).is_empty()
}
