use crate::maxplus::{ExtScalar, MaxPlusError, MpMatrix};
use crate::rational::Rational;

/// Parametrisation `u ↦ A* ⊗ u` of the solutions of `A ⊗ x ⪯ x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarSolutions {
    star: MpMatrix,
}

/// Computes `A*` once; fails with a witness when `G(A)` has a positive
/// circuit.
pub fn solution_vectors(a: &MpMatrix) -> Result<StarSolutions, MaxPlusError> {
    Ok(StarSolutions { star: a.kleene_star()? })
}

impl StarSolutions {
    pub fn star(&self) -> &MpMatrix {
        &self.star
    }

    /// `A* ⊗ u`. Entries are finite because `A*` has a zero diagonal.
    pub fn solve(&self, u: &[Rational]) -> Result<Vec<Rational>, MaxPlusError> {
        let col = MpMatrix::column(u.iter().cloned().map(ExtScalar::Finite).collect());
        let x = self.star.otimes(&col)?;
        Ok(x.entries()
            .map(|v| v.as_finite().cloned().expect("A* has a zero diagonal"))
            .collect())
    }
}
