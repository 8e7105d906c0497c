//! The Proportional-Inverse-Constant non-positive circuit weight problem:
//! find every `λ` for which `G(λP ⊕ λ⁻¹I ⊕ C)` has no positive circuit.
//!
//! Two solvers are provided. [`solve_exact`] enumerates elementary circuits
//! and intersects their exact sublevel sets; it is the oracle. [`solve_fast`]
//! runs in polynomial time by bisection on [`feasible_at`], then snaps each
//! endpoint to the unique small-denominator rational in its bracket.

mod exact;
mod fast;
mod feasible;
mod set;
mod solutions;

pub use exact::{solve_exact, solve_exact_capped, DEFAULT_EXACT_CAP};
pub use fast::{endpoint_bound, solve_fast};
pub use feasible::{feasible_at, positive_circuit_at};
pub use set::FeasibleSet;
pub use solutions::{solution_vectors, StarSolutions};

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::maxplus::MpMatrix;
use crate::precgraph::{GraphError, ParamGraph};
use crate::rational::{lcm_denominators, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NcpError {
    #[error("invalid triple: {0}")]
    Shape(#[from] GraphError),
    #[error("{n} nodes exceeds the circuit-enumeration cap of {cap}")]
    InstanceTooLarge { n: usize, cap: usize },
}

/// Three `n×n` matrices over `R ∪ {−∞}` defining `λP ⊕ λ⁻¹I ⊕ C`.
#[derive(Debug, Clone)]
pub struct PicTriple {
    graph: ParamGraph,
    p: MpMatrix,
    i: MpMatrix,
    c: MpMatrix,
    scaled: OnceLock<Option<feasible::ScaledTriple>>,
}

impl PartialEq for PicTriple {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.i == other.i && self.c == other.c
    }
}

impl Eq for PicTriple {}

impl PicTriple {
    pub fn new(p: MpMatrix, i: MpMatrix, c: MpMatrix) -> Result<Self, NcpError> {
        let graph = ParamGraph::new(p.clone(), i.clone(), c.clone())?;
        Ok(PicTriple {
            graph,
            p,
            i,
            c,
            scaled: OnceLock::new(),
        })
    }

    /// The all-ε triple on `n` nodes.
    pub fn empty(n: usize) -> Self {
        let e = MpMatrix::bottoms(n, n);
        Self::new(e.clone(), e.clone(), e).expect("square and finite")
    }

    pub fn n(&self) -> usize {
        self.graph.node_count()
    }

    pub fn p(&self) -> &MpMatrix {
        &self.p
    }

    pub fn i(&self) -> &MpMatrix {
        &self.i
    }

    pub fn c(&self) -> &MpMatrix {
        &self.c
    }

    pub fn graph(&self) -> &ParamGraph {
        &self.graph
    }

    /// `λP ⊕ λ⁻¹I ⊕ C`.
    pub fn eval(&self, lambda: &Rational) -> MpMatrix {
        self.graph.eval(lambda)
    }

    fn finite_entries(&self) -> impl Iterator<Item = &Rational> {
        self.p
            .finite_entries()
            .chain(self.i.finite_entries())
            .chain(self.c.finite_entries())
    }

    /// Largest absolute value among finite entries (zero if none).
    pub fn max_abs_entry(&self) -> Rational {
        self.finite_entries()
            .map(|r| r.abs())
            .max()
            .unwrap_or_else(|| Rational::from_integer(0.into()))
    }

    /// Least common multiple of the denominators of all finite entries.
    pub fn denominator_lcm(&self) -> BigInt {
        lcm_denominators(self.finite_entries())
    }

    fn scaled(&self) -> Option<&feasible::ScaledTriple> {
        self.scaled
            .get_or_init(|| feasible::ScaledTriple::new(self))
            .as_ref()
    }
}
