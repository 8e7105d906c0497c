//! Precedence graphs of max-plus matrices and of PIC-parametric matrices,
//! together with the circuit machinery used by the solvers.
//!
//! An entry `A[i][j] ≠ −∞` is an arc `j → i` of weight `A[i][j]`.

mod bellman_ford;
mod dot;
mod johnson;
mod param;
mod pwl;

use std::fmt;

pub use bellman_ford::PathWeight;
pub(crate) use bellman_ford::find_positive_circuit;
pub use johnson::{enumerate_simple_circuits, for_each_simple_circuit};
pub use param::{circuit_pwl, eval_pic, ParamArcWeight, ParamGraph};
pub use pwl::{Line, Pwl};

use crate::maxplus::{ExtScalar, MpMatrix};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("matrix has a +inf entry at ({0}, {1})")]
    TopEntry(usize, usize),
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
    #[error("not a circuit: {0}")]
    NotACircuit(String),
    #[error("no arc {from} -> {to}")]
    MissingArc { from: usize, to: usize },
    #[error("parametric matrices have different shapes")]
    DimensionMismatch,
}

/// A circuit given by its node sequence `ρ₁ … ρ_r` (the closing `ρ₁` is
/// implicit). Stored rotated so that the smallest node comes first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Circuit {
    nodes: Vec<usize>,
}

impl Circuit {
    pub fn new(mut nodes: Vec<usize>) -> Self {
        if let Some(pos) = nodes.iter().enumerate().min_by_key(|(_, v)| **v).map(|(i, _)| i) {
            nodes.rotate_left(pos);
        }
        Circuit { nodes }
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    /// Number of arcs, `|ρ|_L`.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Consecutive `(from, to)` pairs, including the closing arc.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let r = self.nodes.len();
        (0..r).map(move |k| (self.nodes[k], self.nodes[(k + 1) % r]))
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = self.nodes.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.nodes.iter().map(|v| (v + 1).to_string()).collect();
        if let Some(first) = self.nodes.first() {
            parts.push((first + 1).to_string());
        }
        f.write_str(&parts.join(" -> "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub weight: Rational,
}

/// Weighted digraph `G(A)` of a square matrix without `+∞` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrecGraph {
    n: usize,
    // weights[to * n + from]
    weights: Vec<Option<Rational>>,
}

impl PrecGraph {
    pub fn from_matrix(a: &MpMatrix) -> Result<Self, GraphError> {
        if !a.is_square() {
            return Err(GraphError::NotSquare(a.rows(), a.cols()));
        }
        let n = a.rows();
        let mut weights = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                weights.push(match a.get(i, j) {
                    ExtScalar::Bottom => None,
                    ExtScalar::Finite(r) => Some(r.clone()),
                    ExtScalar::Top => return Err(GraphError::TopEntry(i, j)),
                });
            }
        }
        Ok(PrecGraph { n, weights })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn weight(&self, from: usize, to: usize) -> Option<&Rational> {
        self.weights[to * self.n + from].as_ref()
    }

    /// Arcs in lexicographic `(from, to)` order.
    pub fn arcs(&self) -> Vec<Arc> {
        let mut out = Vec::new();
        for from in 0..self.n {
            for to in 0..self.n {
                if let Some(w) = self.weight(from, to) {
                    out.push(Arc {
                        from,
                        to,
                        weight: w.clone(),
                    });
                }
            }
        }
        out
    }

    /// Number of arcs `q`.
    pub fn arc_count(&self) -> usize {
        self.weights.iter().filter(|w| w.is_some()).count()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|from| (0..self.n).filter(|&to| self.weight(from, to).is_some()).collect())
            .collect()
    }

    /// `|ρ|_W`, the sum of arc weights along `rho`.
    pub fn circuit_weight(&self, rho: &Circuit) -> Result<Rational, GraphError> {
        if rho.is_empty() {
            return Err(GraphError::NotACircuit("empty node sequence".into()));
        }
        let mut total = Rational::from_integer(0.into());
        for (from, to) in rho.arcs() {
            if from >= self.n || to >= self.n {
                return Err(GraphError::NotACircuit(format!("node out of range in {rho}")));
            }
            match self.weight(from, to) {
                Some(w) => total += w,
                None => return Err(GraphError::NotACircuit(format!("missing arc {} -> {}", from + 1, to + 1))),
            }
        }
        Ok(total)
    }

    pub fn simple_circuits(&self) -> Vec<Circuit> {
        enumerate_simple_circuits(&self.adjacency())
    }

    pub fn to_dot(&self) -> String {
        dot::render(
            self.n,
            self.arcs()
                .into_iter()
                .map(|a| (a.from, a.to, crate::rational::format_decimal(&a.weight))),
        )
    }
}

/// Returns a circuit of strictly positive weight in `G(A)`, if any.
///
/// Bellman–Ford longest-path relaxation from a virtual source; the witness
/// is recovered from the predecessor graph.
pub fn detect_positive_circuit(a: &MpMatrix) -> Result<Option<Circuit>, GraphError> {
    let g = PrecGraph::from_matrix(a)?;
    let arcs: Vec<(usize, usize, Rational)> = g.arcs().into_iter().map(|a| (a.from, a.to, a.weight)).collect();
    Ok(find_positive_circuit(g.node_count(), &arcs)
        .expect("rational arithmetic cannot overflow")
        .map(Circuit::new))
}

/// Γ membership: true iff `G(A)` has no positive circuit.
pub fn in_gamma(a: &MpMatrix) -> Result<bool, GraphError> {
    Ok(detect_positive_circuit(a)?.is_none())
}

/// Splits a closed walk into simple circuits and returns the first one
/// with positive weight in `G(A)`.
pub(crate) fn positive_subcircuit(a: &MpMatrix, walk: &[usize]) -> Option<Circuit> {
    let g = PrecGraph::from_matrix(a).ok()?;
    let mut stack: Vec<usize> = Vec::new();
    let closed = walk.iter().copied().chain(walk.first().copied());
    for v in closed {
        if let Some(pos) = stack.iter().position(|&u| u == v) {
            let c = Circuit::new(stack[pos..].to_vec());
            stack.truncate(pos);
            if g.circuit_weight(&c).ok()? > Rational::from_integer(0.into()) {
                return Some(c);
            }
        }
        stack.push(v);
    }
    None
}
